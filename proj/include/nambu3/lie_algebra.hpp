#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "nambu3/report.hpp"
#include "nambu3/scalar.hpp"

namespace nambu3 {

/// Coefficient vector of an algebra element in the structure basis.
template <ScalarType S>
using Element = Eigen::Matrix<S, Eigen::Dynamic, 1>;

/// Finite-dimensional Lie (super)algebra given by basis parities and
/// structure constants [e_a, e_b] = sum_e c(a,b,e) e_e. Basis indices are
/// 0-based here; file formats use 1-based indices.
template <ScalarType S>
class StructureAlgebra {
public:
  struct Term {
    int a, b, e;
    S c;
  };

  StructureAlgebra() = default;

  /// `constants` is dense with layout (a*d + b)*d + e.
  StructureAlgebra(std::vector<int> parity, std::vector<S> constants)
      : parity_(std::move(parity)), c_(std::move(constants)) {
    const auto d = static_cast<std::size_t>(dim());
    if (d == 0) throw ShapeError("StructureAlgebra: dimension must be positive");
    for (int p : parity_)
      if (p != 0 && p != 1) throw InputError("StructureAlgebra: parities must be 0 or 1");
    if (c_.size() != d * d * d) throw ShapeError("StructureAlgebra: expected d^3 structure constants");
    for (int a = 0; a < dim(); ++a)
      for (int b = 0; b < dim(); ++b)
        for (int e = 0; e < dim(); ++e)
          if (!scalar_traits<S>::is_zero(constant(a, b, e))) terms_.push_back({a, b, e, constant(a, b, e)});
  }

  int dim() const { return static_cast<int>(parity_.size()); }
  const std::vector<int>& parity() const { return parity_; }
  int parity(int a) const { return parity_[a]; }
  bool is_graded() const {
    for (int p : parity_)
      if (p) return true;
    return false;
  }
  const S& constant(int a, int b, int e) const {
    const auto d = static_cast<std::size_t>(dim());
    return c_[(static_cast<std::size_t>(a) * d + b) * d + e];
  }
  /// Nonzero structure constants.
  const std::vector<Term>& terms() const { return terms_; }

  Element<S> basis(int a) const {
    Element<S> x = Element<S>::Constant(dim(), S{});
    x[a] = S(1);
    return x;
  }

private:
  std::vector<int> parity_;
  std::vector<S> c_;
  std::vector<Term> terms_;
};

/// ([x,y])^e = sum_{a,b} x^a y^b c(a,b,e).
template <ScalarType S>
Element<S> bracket2(const StructureAlgebra<S>& g, const Element<S>& x, const Element<S>& y) {
  if (x.size() != g.dim() || y.size() != g.dim()) throw ShapeError("bracket2: element dimension mismatch");
  Element<S> out = Element<S>::Constant(g.dim(), S{});
  for (const auto& t : g.terms()) {
    if (scalar_traits<S>::is_zero(x[t.a]) || scalar_traits<S>::is_zero(y[t.b])) continue;
    out[t.e] += x[t.a] * y[t.b] * t.c;
  }
  return out;
}

/// Parity of a homogeneous element (the zero element counts as even);
/// nullopt when the support mixes parities.
template <ScalarType S>
std::optional<int> element_parity(const StructureAlgebra<S>& g, const Element<S>& x) {
  bool even = false, odd = false;
  for (int a = 0; a < g.dim(); ++a) {
    if (scalar_traits<S>::is_zero(x[a])) continue;
    (g.parity(a) ? odd : even) = true;
  }
  if (even && odd) return std::nullopt;
  return odd ? 1 : 0;
}

template <ScalarType S>
int require_homogeneous(const StructureAlgebra<S>& g, const Element<S>& x) {
  const auto p = element_parity(g, x);
  if (!p) throw HomogeneityError("element is not homogeneous");
  return *p;
}

template <ScalarType S>
double max_abs(const Element<S>& x) {
  double best = 0.0;
  for (const S& v : x) best = std::max(best, scalar_traits<S>::abs(v));
  return best;
}

/// Checks graded skew-symmetry, parity closure and the graded Jacobi identity
/// on all basis pairs/triples. Failures are reported, never thrown.
template <ScalarType S>
ResidualReport validate_algebra(const StructureAlgebra<S>& g, double tol = 0.0) {
  const int d = g.dim();
  double skew = 0.0, closure = 0.0, jacobi = 0.0;
  std::optional<Json> witness;
  double worst = tol;
  auto note_witness = [&](double r, const char* axiom, std::initializer_list<int> idx) {
    if (r > worst) {
      worst = r;
      Json w;
      w["axiom"] = axiom;
      Json basis = Json::array();
      for (int i : idx) basis.push_back(i + 1);
      w["basis"] = basis;
      witness = w;
    }
  };

  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b)
      for (int e = 0; e < d; ++e) {
        const int sign = -sign_pow(g.parity(a) * g.parity(b));
        const double rs = scalar_traits<S>::abs(g.constant(a, b, e) - signed_scalar(sign, g.constant(b, a, e)));
        skew = std::max(skew, rs);
        note_witness(rs, "graded_skew_symmetry", {a, b, e});
        if (g.parity(e) != ((g.parity(a) + g.parity(b)) & 1)) {
          const double rc = scalar_traits<S>::abs(g.constant(a, b, e));
          closure = std::max(closure, rc);
          note_witness(rc, "parity_closure", {a, b, e});
        }
      }

  // [x,[y,z]] = [[x,y],z] + (-1)^{xy} [y,[x,z]]
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b)
      for (int c = 0; c < d; ++c) {
        const auto x = g.basis(a), y = g.basis(b), z = g.basis(c);
        const Element<S> res = bracket2(g, x, bracket2(g, y, z)) - bracket2(g, bracket2(g, x, y), z) -
                               signed_scalar(sign_pow(g.parity(a) * g.parity(b)), S(1)) *
                                   bracket2(g, y, bracket2(g, x, z));
        const double rj = max_abs(res);
        jacobi = std::max(jacobi, rj);
        note_witness(rj, "graded_jacobi", {a, b, c});
      }

  ResidualReport out;
  out.name = "algebra_axioms";
  out.trials = static_cast<std::int64_t>(d) * d * d;
  out.max_abs = std::max({skew, closure, jacobi});
  out.pass = out.max_abs <= tol;
  out.witness = witness;
  std::ostringstream note;
  note << "skew=" << skew << " closure=" << closure << " jacobi=" << jacobi;
  out.note = note.str();
  return out;
}

}  // namespace nambu3
