#pragma once

#include <filesystem>
#include <set>
#include <string>
#include <utility>

#include "nambu3/cochain.hpp"
#include "nambu3/cubic_super.hpp"
#include "nambu3/report.hpp"

namespace nambu3 {

/// Reads and parses a JSON file; any failure becomes an InputError.
Json load_json_file(const std::filesystem::path& path);

/// Writes text to a file, or to standard output when the path is empty or "-".
void write_output(const std::string& path, const std::string& text);

template <ScalarType S>
Json scalar_to_json(const S& z) {
  return Json::array({z.real(), z.imag()});
}

/// `[re, im]`; exact mode accepts integer components only.
template <ScalarType S>
S scalar_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw InputError("scalar must be a [re, im] pair of numbers");
  if constexpr (scalar_traits<S>::exact) {
    if (!j[0].is_number_integer() || !j[1].is_number_integer())
      throw InputError("exact mode requires integer scalar components");
    return S(j[0].get<std::int64_t>(), j[1].get<std::int64_t>());
  } else {
    return S(j[0].get<double>(), j[1].get<double>());
  }
}

template <ScalarType S>
Json element_to_json(const Element<S>& x) {
  Json out = Json::array();
  for (const S& v : x) out.push_back(scalar_to_json(v));
  return out;
}

namespace detail {

inline int positive_int(const Json& j, const char* what) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < 1 || j.get<std::int64_t>() > 1'000'000)
    throw InputError(std::string(what) + " must be a positive integer");
  return j.get<int>();
}

inline const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

}  // namespace detail

/// {"kind":"cubic","shape":[m,n,p],"entries":[i][j][k] -> [re,im]}
template <ScalarType S>
Json matrix3_to_json(const Matrix3<S>& a) {
  Json entries = Json::array();
  for (int i = 1; i <= a.rows_i(); ++i) {
    Json plane = Json::array();
    for (int j = 1; j <= a.rows_j(); ++j) {
      Json line = Json::array();
      for (int k = 1; k <= a.rows_k(); ++k) line.push_back(scalar_to_json(a(i, j, k)));
      plane.push_back(std::move(line));
    }
    entries.push_back(std::move(plane));
  }
  return Json{{"kind", "cubic"}, {"shape", {a.rows_i(), a.rows_j(), a.rows_k()}}, {"entries", std::move(entries)}};
}

template <ScalarType S>
Matrix3<S> matrix3_from_json(const Json& j) {
  if (detail::field(j, "kind") != "cubic") throw InputError("expected kind \"cubic\"");
  const Json& shape = detail::field(j, "shape");
  if (!shape.is_array() || shape.size() != 3) throw InputError("shape must be [m, n, p]");
  const int m = detail::positive_int(shape[0], "shape[0]");
  const int n = detail::positive_int(shape[1], "shape[1]");
  const int p = detail::positive_int(shape[2], "shape[2]");
  const Json& e = detail::field(j, "entries");
  auto ragged = [] { return InputError("entries array is ragged or does not match shape"); };
  if (!e.is_array() || e.size() != static_cast<std::size_t>(m)) throw ragged();
  for (const auto& plane : e) {
    if (!plane.is_array() || plane.size() != static_cast<std::size_t>(n)) throw ragged();
    for (const auto& line : plane)
      if (!line.is_array() || line.size() != static_cast<std::size_t>(p)) throw ragged();
  }
  return Matrix3<S>::from_function(m, n, p,
                                   [&](int i, int jj, int k) { return scalar_from_json<S>(e[i - 1][jj - 1][k - 1]); });
}

template <ScalarType S>
Json super_to_json(const SuperCubic<S>& x) {
  Json out = matrix3_to_json(x.mat);
  out["super"] = {{"r", x.ss.r}, {"s", x.ss.s}};
  return out;
}

template <ScalarType S>
SuperCubic<S> super_from_json(const Json& j) {
  auto mat = matrix3_from_json<S>(j);
  const Json& sup = detail::field(j, "super");
  const int r = detail::positive_int(detail::field(sup, "r"), "super.r");
  const int s = detail::positive_int(detail::field(sup, "s"), "super.s");
  try {
    return attach_super(std::move(mat), r, s);
  } catch (const ShapeError& err) {
    throw InputError(err.what());
  }
}

/// {"kind":"lie_superalgebra","dim":d,"parity":[...],"brackets":[{"x":a,"y":b,"result":[{"idx":e,"c":[re,im]}]}]}
/// Only pairs with a <= b are written; the loader restores the rest by graded skew-symmetry.
template <ScalarType S>
Json algebra_to_json(const StructureAlgebra<S>& g) {
  Json brackets = Json::array();
  for (int a = 0; a < g.dim(); ++a)
    for (int b = a; b < g.dim(); ++b) {
      Json result = Json::array();
      for (int e = 0; e < g.dim(); ++e)
        if (!scalar_traits<S>::is_zero(g.constant(a, b, e)))
          result.push_back({{"idx", e + 1}, {"c", scalar_to_json(g.constant(a, b, e))}});
      if (!result.empty()) brackets.push_back({{"x", a + 1}, {"y", b + 1}, {"result", std::move(result)}});
    }
  return Json{{"kind", "lie_superalgebra"}, {"dim", g.dim()}, {"parity", g.parity()}, {"brackets", brackets}};
}

template <ScalarType S>
StructureAlgebra<S> algebra_from_json(const Json& j) {
  if (detail::field(j, "kind") != "lie_superalgebra") throw InputError("expected kind \"lie_superalgebra\"");
  const int d = detail::positive_int(detail::field(j, "dim"), "dim");
  const Json& par = detail::field(j, "parity");
  if (!par.is_array() || par.size() != static_cast<std::size_t>(d)) throw InputError("parity must list dim values");
  std::vector<int> parity;
  for (const auto& p : par) {
    if (!p.is_number_integer() || (p.get<int>() != 0 && p.get<int>() != 1))
      throw InputError("parity values must be 0 or 1");
    parity.push_back(p.get<int>());
  }
  const auto du = static_cast<std::size_t>(d);
  std::vector<S> c(du * du * du, S{});
  auto at = [&](int a, int b, int e) -> S& { return c[(static_cast<std::size_t>(a) * du + b) * du + e]; };
  auto index = [d](const Json& v, const char* what) {
    const int i = detail::positive_int(v, what);
    if (i > d) throw InputError(std::string(what) + " exceeds dim");
    return i - 1;
  };

  const Json& brackets = detail::field(j, "brackets");
  if (!brackets.is_array()) throw InputError("brackets must be an array");
  std::set<std::pair<int, int>> listed;
  for (const auto& br : brackets) {
    const int a = index(detail::field(br, "x"), "x");
    const int b = index(detail::field(br, "y"), "y");
    if (!listed.emplace(a, b).second) throw InputError("bracket pair listed twice");
    const Json& result = detail::field(br, "result");
    if (!result.is_array()) throw InputError("result must be an array");
    std::set<int> targets;
    for (const auto& term : result) {
      const int e = index(detail::field(term, "idx"), "idx");
      if (!targets.insert(e).second) throw InputError("result index listed twice");
      at(a, b, e) = scalar_from_json<S>(detail::field(term, "c"));
    }
  }
  for (const auto& [a, b] : listed) {
    if (listed.count({b, a})) continue;
    const int sign = -sign_pow(parity[a] * parity[b]);
    for (int e = 0; e < d; ++e) at(b, a, e) = signed_scalar(sign, at(a, b, e));
  }
  return StructureAlgebra<S>(std::move(parity), std::move(c));
}

/// {"degree":m,"values":[{"args":[i1<...<im],"c":[re,im]}]}, 1-based arguments.
template <ScalarType S>
Json cochain_to_json(const Cochain<S>& w) {
  Json values = Json::array();
  for (const auto& e : w.canonical_entries()) {
    Json args = Json::array();
    for (int a : e.args) args.push_back(a + 1);
    values.push_back({{"args", args}, {"c", scalar_to_json(e.value)}});
  }
  return Json{{"degree", w.degree()}, {"values", values}};
}

template <ScalarType S>
Cochain<S> cochain_from_json(const Json& j, const std::vector<int>& parity) {
  const int m = detail::positive_int(detail::field(j, "degree"), "degree");
  const Json& values = detail::field(j, "values");
  if (!values.is_array()) throw InputError("values must be an array");
  std::vector<typename Cochain<S>::Entry> entries;
  for (const auto& v : values) {
    const Json& args = detail::field(v, "args");
    if (!args.is_array()) throw InputError("args must be an array");
    IndexTuple idx;
    for (const auto& a : args) {
      const int i = detail::positive_int(a, "args");
      if (i > static_cast<int>(parity.size())) throw InputError("cochain argument exceeds algebra dimension");
      idx.push_back(i - 1);
    }
    entries.push_back({std::move(idx), scalar_from_json<S>(detail::field(v, "c"))});
  }
  try {
    return Cochain<S>::from_canonical(parity, m, entries);
  } catch (const InputError&) {
    throw;
  } catch (const Error& err) {
    throw InputError(err.what());
  }
}

}  // namespace nambu3
