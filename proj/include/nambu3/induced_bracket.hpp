#pragma once

#include <array>
#include <cmath>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "nambu3/cochain.hpp"
#include "nambu3/filippov.hpp"
#include "nambu3/io.hpp"
#include "nambu3/random.hpp"

namespace nambu3 {

/// Basis tuples are enumerated exhaustively up to this count; beyond it,
/// identity checks fall back to seeded random tuples.
inline constexpr double kExhaustiveLimit = 1e6;

template <ScalarType S>
using ElementBracket = std::function<Element<S>(std::span<const Element<S>>)>;

/// n-ary bracket induced by an (n-2)-cochain w on an ungraded Lie algebra:
///   [x_1..x_n] = sum_{i<j} (-1)^{i+j+1} w(x_1..^x_i..^x_j..x_n) [x_i,x_j], indices 1-based.
template <ScalarType S>
Element<S> nary_bracket_from_cochain(const StructureAlgebra<S>& g, const Cochain<S>& w,
                                     std::span<const Element<S>> xs) {
  const int n = static_cast<int>(xs.size());
  if (n < 3) throw ArityError("nary_bracket_from_cochain: arity must be at least 3");
  if (w.degree() != n - 2) throw ArityError("nary_bracket_from_cochain: cochain degree must equal arity - 2");
  if (w.dim() != g.dim()) throw ShapeError("nary_bracket_from_cochain: cochain and algebra dimensions differ");
  if (g.is_graded()) throw UnsupportedError("nary_bracket_from_cochain: algebra must be ungraded");
  Element<S> out = Element<S>::Constant(g.dim(), S{});
  std::vector<Element<S>> rest(n - 2);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      int pos = 0;
      for (int t = 0; t < n; ++t)
        if (t != i && t != j) rest[pos++] = xs[t];
      const S coef = w.evaluate(rest);
      if (scalar_traits<S>::is_zero(coef)) continue;
      // (-1)^{(i+1)+(j+1)+1} with 1-based positions
      out += signed_scalar(sign_pow(i + j + 3), coef) * bracket2(g, xs[i], xs[j]);
    }
  return out;
}

/// Graded ternary bracket induced by a 1-cochain w:
///   [x,y,z] = w(x)[y,z] + (-1)^{x(y+z)} w(y)[z,x] + (-1)^{z(x+y)} w(z)[x,y].
template <ScalarType S>
Element<S> graded_ternary_bracket_from_cochain(const StructureAlgebra<S>& g, const Cochain<S>& w,
                                               const Element<S>& x, const Element<S>& y, const Element<S>& z) {
  if (w.degree() != 1) throw ArityError("graded_ternary_bracket_from_cochain: cochain degree must be 1");
  if (w.dim() != g.dim()) throw ShapeError("graded_ternary_bracket_from_cochain: dimension mismatch");
  const int px = require_homogeneous(g, x), py = require_homogeneous(g, y), pz = require_homogeneous(g, z);
  const auto w1 = [&](const Element<S>& e) { return w.evaluate(std::span<const Element<S>>(&e, 1)); };
  return w1(x) * bracket2(g, y, z) + signed_scalar(sign_pow(px * (py + pz)), w1(y)) * bracket2(g, z, x) +
         signed_scalar(sign_pow(pz * (px + py)), w1(z)) * bracket2(g, x, y);
}

template <ScalarType S>
ElementBracket<S> induced_bracket(const StructureAlgebra<S>& g, const Cochain<S>& w) {
  return [&g, &w](std::span<const Element<S>> xs) { return nary_bracket_from_cochain(g, w, xs); };
}

template <ScalarType S>
ElementBracket<S> induced_graded_bracket(const StructureAlgebra<S>& g, const Cochain<S>& w) {
  return [&g, &w](std::span<const Element<S>> xs) {
    if (xs.size() != 3) throw ArityError("graded induced bracket is ternary");
    return graded_ternary_bracket_from_cochain(g, w, xs[0], xs[1], xs[2]);
  };
}

/// Filippov-Jacobi residual of `bracket` on one argument tuple.
template <ScalarType S>
ResidualReport fi_residual(const StructureAlgebra<S>& g, const ElementBracket<S>& bracket,
                           std::span<const Element<S>> xs, std::span<const Element<S>> ys, double tol = 0.0) {
  for (const auto& v : xs)
    if (v.size() != g.dim()) throw ShapeError("fi_residual: element dimension mismatch");
  for (const auto& v : ys)
    if (v.size() != g.dim()) throw ShapeError("fi_residual: element dimension mismatch");
  ResidualAccumulator acc("filippov_jacobi", tol);
  acc.add(max_abs(filippov_residual<Element<S>>(bracket, xs, ys)));
  return acc.finish();
}

template <ScalarType S>
ResidualReport gfi_residual(const StructureAlgebra<S>& g, const ElementBracket<S>& bracket,
                            std::span<const Element<S>> xs, std::span<const Element<S>> ys, double tol = 0.0) {
  std::vector<int> xp, yp;
  for (const auto& v : xs) xp.push_back(require_homogeneous(g, v));
  for (const auto& v : ys) yp.push_back(require_homogeneous(g, v));
  ResidualAccumulator acc("graded_filippov_jacobi", tol);
  acc.add(max_abs(graded_filippov_residual<Element<S>>(bracket, xs, ys, xp, yp)));
  return acc.finish();
}

/// Settings shared by the theorem reports.
struct TrialPolicy {
  std::int64_t trials = 1000;
  std::uint64_t seed = 42;
  std::int64_t range = 3;  ///< exact-mode coefficient range [-R, R]
  double tol = 0.0;
};

namespace detail {

template <ScalarType S>
Json tuple_witness(std::span<const Element<S>> xs, std::span<const Element<S>> ys) {
  Json w;
  Json jx = Json::array(), jy = Json::array();
  for (const auto& v : xs) jx.push_back(element_to_json(v));
  for (const auto& v : ys) jy.push_back(element_to_json(v));
  w["x"] = jx;
  w["y"] = jy;
  return w;
}

inline Json basis_witness(const std::vector<int>& idx, std::size_t nx) {
  Json w;
  Json jx = Json::array(), jy = Json::array();
  for (std::size_t t = 0; t < idx.size(); ++t) (t < nx ? jx : jy).push_back(idx[t] + 1);
  w["x_basis"] = jx;
  w["y_basis"] = jy;
  return w;
}

/// Calls f(tuple) for every basis index tuple of the given length.
template <class F>
void for_each_basis_tuple(int dim, int length, F&& f) {
  std::vector<int> idx(length, 0);
  while (true) {
    f(idx);
    int pos = length - 1;
    while (pos >= 0 && ++idx[pos] == dim) idx[pos--] = 0;
    if (pos < 0) return;
  }
}

template <ScalarType S>
Element<S> random_element(Xoshiro256ss& rng, const StructureAlgebra<S>& g, std::int64_t range,
                          std::optional<int> parity = std::nullopt) {
  Element<S> x(g.dim());
  for (int a = 0; a < g.dim(); ++a) {
    const S v = draw_scalar<S>(rng, range);
    x[a] = (!parity || g.parity(a) == *parity) ? v : S{};
  }
  return x;
}

inline bool exhaustive_feasible(int dim, int length) {
  return std::pow(static_cast<double>(dim), length) <= kExhaustiveLimit;
}

}  // namespace detail

/// Checks for the cochain-induced n-ary bracket:
///   - algebra axioms;
///   - wedge_norm: max |w ^ dw| over increasing basis tuples (measurement);
///   - fi_exhaustive / fi_random: Filippov-Jacobi residuals (measurements);
///   - sufficiency (asserted): wedge_norm == 0 implies both residuals vanish.
template <ScalarType S>
std::vector<ResidualReport> theorem1_report(const StructureAlgebra<S>& g, const Cochain<S>& w, int n,
                                            const TrialPolicy& policy) {
  if (n < 3 || w.degree() != n - 2) throw ArityError("theorem1_report: cochain degree must equal n - 2");
  if (g.is_graded()) throw UnsupportedError("theorem1_report: algebra must be ungraded");
  const double tol = policy.tol;
  std::vector<ResidualReport> out;
  out.push_back(validate_algebra(g, tol));

  ResidualReport wedge_check;
  wedge_check.name = "wedge_norm";
  wedge_check.asserted = false;
  wedge_check.max_abs = canonical_max_abs(wedge(w, coboundary(g, w)));
  wedge_check.trials = 1;
  wedge_check.pass = wedge_check.max_abs <= tol;
  wedge_check.note = "max |w ^ dw| over increasing basis tuples; pass means the inducing condition holds";
  out.push_back(wedge_check);

  const auto bracket = induced_bracket(g, w);
  const int len = 2 * n - 1;

  ResidualAccumulator exhaustive("fi_exhaustive", tol);
  std::string exhaustive_note;
  if (detail::exhaustive_feasible(g.dim(), len)) {
    std::vector<Element<S>> basis;
    for (int a = 0; a < g.dim(); ++a) basis.push_back(g.basis(a));
    std::vector<Element<S>> xs(n - 1), ys(n);
    detail::for_each_basis_tuple(g.dim(), len, [&](const std::vector<int>& idx) {
      for (int t = 0; t < n - 1; ++t) xs[t] = basis[idx[t]];
      for (int t = 0; t < n; ++t) ys[t] = basis[idx[n - 1 + t]];
      const double r = max_abs(filippov_residual<Element<S>>(bracket, xs, ys));
      exhaustive.add(r, [&] { return detail::basis_witness(idx, n - 1); });
    });
    exhaustive_note = "all basis tuples";
  } else {
    exhaustive_note = "skipped: basis tuple count exceeds 1e6";
  }
  auto ex = exhaustive.finish();
  ex.asserted = false;
  ex.note = exhaustive_note;

  Xoshiro256ss rng(policy.seed);
  ResidualAccumulator random("fi_random", tol);
  for (std::int64_t t = 0; t < policy.trials; ++t) {
    std::vector<Element<S>> xs, ys;
    for (int i = 0; i < n - 1; ++i) xs.push_back(detail::random_element(rng, g, policy.range));
    for (int i = 0; i < n; ++i) ys.push_back(detail::random_element(rng, g, policy.range));
    const double r = max_abs(filippov_residual<Element<S>>(bracket, xs, ys));
    random.add(r, [&] { return detail::tuple_witness<S>(xs, ys); });
  }
  auto rnd = random.finish();
  rnd.asserted = false;
  rnd.note = "seeded random element tuples";

  ResidualReport suff;
  suff.name = "sufficiency";
  suff.trials = ex.trials + rnd.trials;
  suff.max_abs = std::max(ex.max_abs, rnd.max_abs);
  suff.pass = !wedge_check.pass || (ex.pass && rnd.pass);
  suff.witness = ex.witness ? ex.witness : rnd.witness;
  suff.note = wedge_check.pass ? "condition holds; residuals must vanish" : "condition fails; contract vacuous";
  out.push_back(ex);
  out.push_back(rnd);
  out.push_back(suff);
  return out;
}

/// Checks for the graded ternary bracket induced by a 1-cochain:
///   - condition_i: w vanishes on odd basis elements (measurement);
///   - condition_ii: the trilinear form w(x)w([y,z]) + signed cyclic terms on basis triples (measurement);
///   - mixed_coboundary: w([x,y]) for x, y of opposite parity, a derived diagnostic;
///   - gfi_exhaustive / gfi_random over all degree patterns (measurements);
///   - sufficiency (asserted): (i) and (ii) imply vanishing residuals.
template <ScalarType S>
std::vector<ResidualReport> theorem2_report(const StructureAlgebra<S>& g, const Cochain<S>& w,
                                            const TrialPolicy& policy) {
  if (w.degree() != 1) throw ArityError("theorem2_report: cochain degree must be 1");
  if (w.dim() != g.dim()) throw ShapeError("theorem2_report: dimension mismatch");
  const double tol = policy.tol;
  const int d = g.dim();
  std::vector<ResidualReport> out;
  out.push_back(validate_algebra(g, tol));

  std::vector<Element<S>> basis;
  for (int a = 0; a < d; ++a) basis.push_back(g.basis(a));
  const auto w1 = [&](const Element<S>& e) { return w.evaluate(std::span<const Element<S>>(&e, 1)); };

  ResidualAccumulator cond_i("condition_i", tol);
  for (int a = 0; a < d; ++a)
    if (g.parity(a) == 1)
      cond_i.add(scalar_traits<S>::abs(w1(basis[a])), [&] { return Json{{"basis", a + 1}}; });
  auto ci = cond_i.finish();
  ci.asserted = false;
  ci.note = "w restricted to odd basis elements";

  ResidualAccumulator cond_ii("condition_ii", tol);
  ResidualAccumulator mixed("mixed_coboundary", tol);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      if (g.parity(a) != g.parity(b))
        mixed.add(scalar_traits<S>::abs(w1(bracket2(g, basis[a], basis[b]))),
                  [&] { return Json{{"basis", {a + 1, b + 1}}}; });
      for (int c = 0; c < d; ++c) {
        const int px = g.parity(a), py = g.parity(b), pz = g.parity(c);
        const S value = w1(basis[a]) * w1(bracket2(g, basis[b], basis[c])) +
                        signed_scalar(sign_pow(px * (py + pz)), w1(basis[b]) * w1(bracket2(g, basis[c], basis[a]))) +
                        signed_scalar(sign_pow(pz * (px + py)), w1(basis[c]) * w1(bracket2(g, basis[a], basis[b])));
        cond_ii.add(scalar_traits<S>::abs(value), [&] { return Json{{"basis", {a + 1, b + 1, c + 1}}}; });
      }
    }
  auto cii = cond_ii.finish();
  cii.asserted = false;
  cii.note = "w(x)w([y,z]) + signed cyclic terms on basis triples";
  auto mx = mixed.finish();
  mx.asserted = false;
  mx.note = "derived diagnostic: w([x,y]) for x, y of opposite parity";

  const auto bracket = induced_graded_bracket(g, w);
  ResidualAccumulator exhaustive("gfi_exhaustive", tol);
  std::string exhaustive_note;
  if (detail::exhaustive_feasible(d, 5)) {
    std::vector<Element<S>> xs(2), ys(3);
    std::array<int, 2> xp{};
    std::array<int, 3> yp{};
    detail::for_each_basis_tuple(d, 5, [&](const std::vector<int>& idx) {
      for (int t = 0; t < 2; ++t) xs[t] = basis[idx[t]], xp[t] = g.parity(idx[t]);
      for (int t = 0; t < 3; ++t) ys[t] = basis[idx[2 + t]], yp[t] = g.parity(idx[2 + t]);
      const double r = max_abs(graded_filippov_residual<Element<S>>(bracket, xs, ys, xp, yp));
      exhaustive.add(r, [&] { return detail::basis_witness(idx, 2); });
    });
    exhaustive_note = "all basis tuples";
  } else {
    exhaustive_note = "skipped: basis tuple count exceeds 1e6";
  }
  auto ex = exhaustive.finish();
  ex.asserted = false;
  ex.note = exhaustive_note;

  Xoshiro256ss rng(policy.seed);
  ResidualAccumulator random("gfi_random", tol);
  for (std::int64_t t = 0; t < policy.trials; ++t) {
    const int pattern = static_cast<int>(t % 32);
    std::vector<Element<S>> xs, ys;
    std::vector<int> xp, yp;
    for (int i = 0; i < 5; ++i) {
      const int p = (pattern >> (4 - i)) & 1;
      (i < 2 ? xs : ys).push_back(detail::random_element(rng, g, policy.range, p));
      (i < 2 ? xp : yp).push_back(p);
    }
    const double r = max_abs(graded_filippov_residual<Element<S>>(bracket, xs, ys, xp, yp));
    random.add(r, [&] { return detail::tuple_witness<S>(xs, ys); });
  }
  auto rnd = random.finish();
  rnd.asserted = false;
  rnd.note = "seeded random homogeneous tuples, degree patterns round-robin";

  ResidualReport suff;
  suff.name = "sufficiency";
  suff.trials = ex.trials + rnd.trials;
  suff.max_abs = std::max(ex.max_abs, rnd.max_abs);
  const bool conditions = ci.pass && cii.pass;
  suff.pass = !conditions || (ex.pass && rnd.pass);
  suff.witness = ex.witness ? ex.witness : rnd.witness;
  suff.note = conditions ? "conditions (i) and (ii) hold; residuals must vanish" : "conditions fail; contract vacuous";
  for (auto* r : {&ci, &cii, &mx, &ex, &rnd, &suff}) out.push_back(*r);
  return out;
}

/// A matrix Lie (super)algebra in the basis of matrix units together with its
/// trace (or supertrace) as a 1-cochain.
template <ScalarType S>
struct AlgebraWithCochain {
  StructureAlgebra<S> algebra;
  Cochain<S> cochain;
  int size = 0;  ///< matrix size N; E_ab has basis index (a-1)*N + (b-1)
};

/// gl(m|n) with (m,n)-supermatrix grading; n = 0 gives the ungraded gl(m).
/// [E_ab, E_cd] = d_bc E_ad - (-1)^{|E_ab||E_cd|} d_da E_cb, w = Str = tr_00 - tr_11.
template <ScalarType S>
AlgebraWithCochain<S> build_matrix_units(int m, int n) {
  const int big = m + n, d = big * big;
  const auto row_parity = [m](int a) { return a >= m ? 1 : 0; };  // 0-based row index
  const auto unit = [big](int a, int b) { return a * big + b; };
  std::vector<int> parity(d);
  for (int a = 0; a < big; ++a)
    for (int b = 0; b < big; ++b) parity[unit(a, b)] = (row_parity(a) + row_parity(b)) & 1;
  const auto du = static_cast<std::size_t>(d);
  std::vector<S> c(du * du * du, S{});
  auto at = [&](int x, int y, int e) -> S& { return c[(static_cast<std::size_t>(x) * du + y) * du + e]; };
  for (int a = 0; a < big; ++a)
    for (int b = 0; b < big; ++b)
      for (int cc = 0; cc < big; ++cc)
        for (int dd = 0; dd < big; ++dd) {
          const int x = unit(a, b), y = unit(cc, dd);
          if (b == cc) at(x, y, unit(a, dd)) += S(1);
          if (dd == a) at(x, y, unit(cc, b)) -= signed_scalar(sign_pow(parity[x] * parity[y]), S(1));
        }
  std::vector<typename Cochain<S>::Entry> trace;
  for (int a = 0; a < big; ++a) trace.push_back({{unit(a, a)}, signed_scalar(sign_pow(row_parity(a)), S(1))});
  auto w = Cochain<S>::from_canonical(parity, 1, trace);
  return {StructureAlgebra<S>(std::move(parity), std::move(c)), std::move(w), big};
}

template <ScalarType S>
AlgebraWithCochain<S> build_gl(int n) {
  if (n < 1) throw ShapeError("build_gl: size must be positive");
  return build_matrix_units<S>(n, 0);
}

template <ScalarType S>
AlgebraWithCochain<S> build_gl_super(int m, int n) {
  if (m < 1 || n < 1) throw ShapeError("build_gl_super: block sizes must be positive");
  return build_matrix_units<S>(m, n);
}

}  // namespace nambu3
