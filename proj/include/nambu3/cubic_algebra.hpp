#pragma once

#include <array>
#include <span>

#include "nambu3/matrix3.hpp"
#include "nambu3/report.hpp"

namespace nambu3 {

/// Product relative to direction d: sections of orientation d multiply as
/// rectangular matrices, label by label.
///
///   J: (m x n x p) * (p x n x q) -> m x n x q,  C(i,j,k) = sum_t A(i,j,t) B(t,j,k)
///   I: (m x n x p) * (m x p x q) -> m x n x q,  C(i,j,k) = sum_t A(i,j,t) B(i,t,k)
///   K: (m x n x p) * (n x q x p) -> m x q x p,  C(i,j,k) = sum_t A(i,t,k) B(t,j,k)
template <ScalarType S>
Matrix3<S> mul_dir(const Matrix3<S>& a, const Matrix3<S>& b, Direction d = Direction::J) {
  const auto [am, an, ap] = a.shape();
  const auto [bm, bn, bp] = b.shape();
  std::array<int, 3> out{};
  switch (d) {
    case Direction::J:
      if (bm != ap || bn != an) throw ShapeError("mul_dir(j): expects m x n x p times p x n x q");
      out = {am, an, bp};
      break;
    case Direction::I:
      if (bm != am || bn != ap) throw ShapeError("mul_dir(i): expects m x n x p times m x p x q");
      out = {am, an, bp};
      break;
    case Direction::K:
      if (bm != an || bp != ap) throw ShapeError("mul_dir(k): expects m x n x p times n x q x p");
      out = {am, bn, ap};
      break;
  }
  const auto c_shape = Matrix3<S>::zero(out[0], out[1], out[2]);
  typename Matrix3<S>::Storage data = c_shape.raw();
  for (int label = 1; label <= a.extent(d); ++label) {
    const auto lay = c_shape.section_layout(d, label - 1);
    typename Matrix3<S>::MutableSectionView c_sec(data.data() + lay.start, lay.rows, lay.cols,
                                                  typename Matrix3<S>::Strides(lay.outer, lay.inner));
    c_sec.noalias() = a.section_view(d, label) * b.section_view(d, label);
  }
  return Matrix3<S>(out[0], out[1], out[2], std::move(data));
}

namespace detail {

template <ScalarType S>
void require_equal_cubic(const char* what, std::initializer_list<const Matrix3<S>*> ms) {
  const Matrix3<S>& first = **ms.begin();
  if (!first.is_cubic()) throw ShapeError(std::string(what) + ": arguments must be cubic");
  for (const auto* m : ms)
    if (m->shape() != first.shape()) throw ShapeError(std::string(what) + ": arguments must share one order");
}

}  // namespace detail

/// [A,B] = A *_j B - B *_j A.
template <ScalarType S>
Matrix3<S> commutator(const Matrix3<S>& a, const Matrix3<S>& b) {
  detail::require_equal_cubic<S>("commutator", {&a, &b});
  return mul_dir(a, b) - mul_dir(b, a);
}

/// Binary generated triple product (ABC) = Tr^(j) B (A *_j C).
template <ScalarType S>
Matrix3<S> triple_product(const Matrix3<S>& a, const Matrix3<S>& b, const Matrix3<S>& c) {
  detail::require_equal_cubic<S>("triple_product", {&a, &b, &c});
  return trace_dir(b) * mul_dir(a, c);
}

/// Six-term alternating sum over S_3 of triple products.
template <ScalarType S>
Matrix3<S> ternary_commutator(const Matrix3<S>& a, const Matrix3<S>& b, const Matrix3<S>& c) {
  return triple_product(a, b, c) + triple_product(b, c, a) + triple_product(c, a, b) -
         triple_product(c, b, a) - triple_product(b, a, c) - triple_product(a, c, b);
}

/// Quantum Nambu bracket of cubic matrices,
/// [A,B,C] = Tr B [A,C] + Tr A [C,B] + Tr C [B,A], all traces relative to (j).
template <ScalarType S>
Matrix3<S> quantum_nambu(const Matrix3<S>& a, const Matrix3<S>& b, const Matrix3<S>& c) {
  detail::require_equal_cubic<S>("quantum_nambu", {&a, &b, &c});
  return trace_dir(b) * commutator(a, c) + trace_dir(a) * commutator(c, b) + trace_dir(c) * commutator(b, a);
}

// Residual matrices of the triple-product laws. Each vanishes identically
// except first_kind and second_kind, which are generically nonzero.

template <ScalarType S>
Matrix3<S> lr_assoc_residual(const Matrix3<S>& a, const Matrix3<S>& b, const Matrix3<S>& c,
                             const Matrix3<S>& d, const Matrix3<S>& f) {
  return triple_product(triple_product(a, b, c), d, f) - triple_product(a, b, triple_product(c, d, f));
}

template <ScalarType S>
Matrix3<S> first_kind_residual(const Matrix3<S>& a, const Matrix3<S>& b, const Matrix3<S>& c,
                               const Matrix3<S>& d, const Matrix3<S>& f) {
  return triple_product(triple_product(a, b, c), d, f) - triple_product(a, triple_product(b, c, d), f);
}

template <ScalarType S>
Matrix3<S> second_kind_residual(const Matrix3<S>& a, const Matrix3<S>& b, const Matrix3<S>& c,
                                const Matrix3<S>& d, const Matrix3<S>& f) {
  return triple_product(triple_product(a, b, c), d, f) - triple_product(a, triple_product(d, c, b), f);
}

/// Residual reports (lr, first-kind, second-kind) for one quintuple.
template <ScalarType S>
std::array<ResidualReport, 3> associativity_residuals(const Matrix3<S>& a, const Matrix3<S>& b,
                                                      const Matrix3<S>& c, const Matrix3<S>& d,
                                                      const Matrix3<S>& f, double tol = 0.0) {
  auto one = [tol](const char* name, const Matrix3<S>& r) {
    ResidualAccumulator acc(name, tol);
    acc.add(max_abs(r));
    return acc.finish();
  };
  return {one("lr_associativity", lr_assoc_residual(a, b, c, d, f)),
          one("first_kind_associativity", first_kind_residual(a, b, c, d, f)),
          one("second_kind_associativity", second_kind_residual(a, b, c, d, f))};
}

/// Residual matrices of the four triple-product identities:
/// lr-associativity; (ABC)^+ = (C^+ B^+ A^+); (A(BCD)F) = (A(DCB)F); ((ABC)DF) = ((ADC)BF).
template <ScalarType S>
std::array<Matrix3<S>, 4> prop1_residual_matrices(const Matrix3<S>& a, const Matrix3<S>& b,
                                                  const Matrix3<S>& c, const Matrix3<S>& d,
                                                  const Matrix3<S>& f) {
  const auto adj = [](const Matrix3<S>& x) { return hermitian_adjoint(x, Direction::J); };
  return {lr_assoc_residual(a, b, c, d, f),
          adj(triple_product(a, b, c)) - triple_product(adj(c), adj(b), adj(a)),
          triple_product(a, triple_product(b, c, d), f) - triple_product(a, triple_product(d, c, b), f),
          triple_product(triple_product(a, b, c), d, f) - triple_product(triple_product(a, d, c), b, f)};
}

inline constexpr std::array<const char*, 4> kProp1Names = {"lr_associativity", "adjoint_reversal",
                                                           "middle_reversal", "outer_exchange"};

template <ScalarType S>
std::array<ResidualReport, 4> prop1_residuals(const Matrix3<S>& a, const Matrix3<S>& b, const Matrix3<S>& c,
                                              const Matrix3<S>& d, const Matrix3<S>& f, double tol = 0.0) {
  const auto mats = prop1_residual_matrices(a, b, c, d, f);
  std::array<ResidualReport, 4> out;
  for (std::size_t i = 0; i < 4; ++i) {
    ResidualAccumulator acc(kProp1Names[i], tol);
    acc.add(max_abs(mats[i]));
    out[i] = acc.finish();
  }
  return out;
}

/// [A,B,[C,D,E]] - [[A,B,C],D,E] - [C,[A,B,D],E] - [C,D,[A,B,E]] under quantum_nambu.
template <ScalarType S>
Matrix3<S> fi_residual_matrix(const Matrix3<S>& a, const Matrix3<S>& b, const Matrix3<S>& c,
                              const Matrix3<S>& d, const Matrix3<S>& e) {
  return quantum_nambu(a, b, quantum_nambu(c, d, e)) - quantum_nambu(quantum_nambu(a, b, c), d, e) -
         quantum_nambu(c, quantum_nambu(a, b, d), e) - quantum_nambu(c, d, quantum_nambu(a, b, e));
}

template <ScalarType S>
ResidualReport fi_residual_cubic(const Matrix3<S>& a, const Matrix3<S>& b, const Matrix3<S>& c,
                                 const Matrix3<S>& d, const Matrix3<S>& e, double tol = 0.0) {
  ResidualAccumulator acc("filippov_jacobi", tol);
  acc.add(max_abs(fi_residual_matrix(a, b, c, d, e)));
  return acc.finish();
}

}  // namespace nambu3
