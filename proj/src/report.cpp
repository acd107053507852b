#include "nambu3/report.hpp"

#include <cmath>
#include <cstdio>
#include <iomanip>

namespace nambu3 {

Json to_json(const ResidualReport& r) {
  Json out{{"name", r.name},
           {"max_abs", r.max_abs},
           {"trials", r.trials},
           {"pass", r.pass},
           {"asserted", r.asserted}};
  if (r.witness) out["witness"] = *r.witness;
  if (!r.note.empty()) out["note"] = r.note;
  return out;
}

Json to_json(const VerificationReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back(to_json(c));
  return Json{{"config", r.config}, {"checks", checks}, {"pass", r.pass()}};
}

namespace {

void emit(const Json& j, std::string& out) {
  switch (j.type()) {
    case Json::value_t::object: {
      out += '{';
      bool first = true;
      for (const auto& [key, value] : j.items()) {  // std::map order: sorted keys
        if (!first) out += ',';
        first = false;
        out += Json(key).dump();
        out += ':';
        emit(value, out);
      }
      out += '}';
      break;
    }
    case Json::value_t::array: {
      out += '[';
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) out += ',';
        emit(j[i], out);
      }
      out += ']';
      break;
    }
    case Json::value_t::number_float: {
      const double v = j.get<double>();
      if (!std::isfinite(v)) {
        out += std::isnan(v) ? "\"nan\"" : (v > 0 ? "\"inf\"" : "\"-inf\"");
        break;
      }
      char buf[40];
      std::snprintf(buf, sizeof buf, "%.17g", v);
      out += buf;
      break;
    }
    default:
      out += j.dump();
  }
}

}  // namespace

std::string canonical_dump(const Json& j) {
  std::string out;
  emit(j, out);
  return out;
}

void write_text(std::ostream& os, const VerificationReport& r) {
  if (r.config.contains("suite")) os << "suite: " << r.config["suite"].get<std::string>() << '\n';
  for (const auto& c : r.checks) {
    os << (!c.asserted ? "INFO" : c.pass ? "PASS" : "FAIL") << "  " << std::left
       << std::setw(34) << c.name << " max_abs=" << std::setprecision(6) << c.max_abs << " trials=" << c.trials;
    if (!c.note.empty()) os << "  [" << c.note << ']';
    os << '\n';
  }
  os << "overall: " << (r.pass() ? "PASS" : "FAIL") << '\n';
}

}  // namespace nambu3
