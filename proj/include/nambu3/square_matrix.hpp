#pragma once

#include "nambu3/lie_algebra.hpp"
#include "nambu3/matrix3.hpp"

namespace nambu3 {

// Direct matrix-side evaluation of the square-matrix quantum Nambu brackets.
// Used as an independent route against the structure-constant machinery.

/// Coefficients in the matrix-unit basis (index (a-1)*N + (b-1)) -> N x N matrix.
template <ScalarType S>
Matrix2<S> element_to_square(int size, const Element<S>& x) {
  if (x.size() != static_cast<Eigen::Index>(size) * size) throw ShapeError("element_to_square: size mismatch");
  Matrix2<S> out(size, size);
  for (int a = 0; a < size; ++a)
    for (int b = 0; b < size; ++b) out(a, b) = x[a * size + b];
  return out;
}

template <ScalarType S>
Element<S> square_to_element(const Matrix2<S>& m) {
  Element<S> out(m.rows() * m.cols());
  for (Eigen::Index a = 0; a < m.rows(); ++a)
    for (Eigen::Index b = 0; b < m.cols(); ++b) out[a * m.cols() + b] = m(a, b);
  return out;
}

/// [A,B,C] = Tr A [B,C] + Tr B [C,A] + Tr C [A,B].
template <ScalarType S>
Matrix2<S> square_quantum_nambu(const Matrix2<S>& a, const Matrix2<S>& b, const Matrix2<S>& c) {
  const auto comm = [](const Matrix2<S>& x, const Matrix2<S>& y) -> Matrix2<S> { return x * y - y * x; };
  return a.trace() * comm(b, c) + b.trace() * comm(c, a) + c.trace() * comm(a, b);
}

/// Supertrace of a square (m, N-m) supermatrix: tr of the even-even block minus tr of the odd-odd block.
template <ScalarType S>
S square_supertrace(const Matrix2<S>& x, int m) {
  S acc{};
  for (Eigen::Index a = 0; a < x.rows(); ++a) acc += signed_scalar(a < m ? 1 : -1, x(a, a));
  return acc;
}

/// Degree of a homogeneous square supermatrix with even block size m; the zero matrix counts as even.
template <ScalarType S>
int square_degree(const Matrix2<S>& x, int m) {
  bool even = false, odd = false;
  for (Eigen::Index a = 0; a < x.rows(); ++a)
    for (Eigen::Index b = 0; b < x.cols(); ++b) {
      if (scalar_traits<S>::is_zero(x(a, b))) continue;
      (((a >= m) != (b >= m)) ? odd : even) = true;
    }
  if (even && odd) throw HomogeneityError("square supermatrix is not homogeneous");
  return odd ? 1 : 0;
}

/// [X,Y,Z] = Str X [Y,Z] + (-1)^{x(y+z)} Str Y [Z,X] + (-1)^{z(x+y)} Str Z [X,Y]
/// with graded commutators [X,Y] = XY - (-1)^{xy} YX.
template <ScalarType S>
Matrix2<S> square_quantum_super_nambu(const Matrix2<S>& x, const Matrix2<S>& y, const Matrix2<S>& z, int m) {
  const int px = square_degree(x, m), py = square_degree(y, m), pz = square_degree(z, m);
  const auto comm = [](const Matrix2<S>& u, const Matrix2<S>& v, int pu, int pv) -> Matrix2<S> {
    return u * v - signed_scalar(sign_pow(pu * pv), S(1)) * (v * u);
  };
  return square_supertrace(x, m) * comm(y, z, py, pz) +
         signed_scalar(sign_pow(px * (py + pz)), square_supertrace(y, m)) * comm(z, x, pz, px) +
         signed_scalar(sign_pow(pz * (px + py)), square_supertrace(z, m)) * comm(x, y, px, py);
}

}  // namespace nambu3
