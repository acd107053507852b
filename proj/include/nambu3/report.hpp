#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

namespace nambu3 {

using Json = nlohmann::json;

/// Outcome of one named identity check.
///
/// `pass` means max_abs <= tolerance. Checks with `asserted == false` are
/// measurements: they are reported but do not enter the overall verdict.
struct ResidualReport {
  std::string name;
  double max_abs = 0.0;
  std::int64_t trials = 0;
  std::optional<Json> witness;
  bool pass = true;
  bool asserted = true;
  std::string note;
};

/// Folds per-trial residuals into a ResidualReport. The witness kept is the
/// input attaining the largest residual among those exceeding the tolerance.
class ResidualAccumulator {
public:
  ResidualAccumulator(std::string name, double tol) : tol_(tol) { report_.name = std::move(name); }

  template <class WitnessFn>
  void add(double residual, WitnessFn&& make_witness) {
    ++report_.trials;
    if (residual > report_.max_abs) report_.max_abs = residual;
    if (residual > tol_ && residual > worst_violation_) {
      worst_violation_ = residual;
      report_.witness = make_witness();
    }
  }

  void add(double residual) {
    ++report_.trials;
    if (residual > report_.max_abs) report_.max_abs = residual;
  }

  ResidualReport finish() const {
    ResidualReport out = report_;
    out.pass = out.max_abs <= tol_;
    return out;
  }

private:
  ResidualReport report_;
  double tol_;
  double worst_violation_ = -1.0;
};

struct VerificationReport {
  Json config = Json::object();
  std::vector<ResidualReport> checks;

  /// Conjunction over asserted checks; vacuously true for an empty list.
  bool pass() const {
    for (const auto& c : checks)
      if (c.asserted && !c.pass) return false;
    return true;
  }
};

Json to_json(const ResidualReport& r);
Json to_json(const VerificationReport& r);

/// Canonical serialization: sorted keys, no insignificant whitespace, floats
/// printed with 17 significant digits.
std::string canonical_dump(const Json& j);

/// Human-readable summary, one line per check.
void write_text(std::ostream& os, const VerificationReport& r);

}  // namespace nambu3
