#pragma once

#include <string>

#include "nambu3/cubic_algebra.hpp"

namespace nambu3 {

/// Canonical (r,s) super structure relative to direction (j): sections of
/// orientation (i) and (k) with labels 1..r are even, r+1..r+s odd.
struct SuperStructure {
  int r = 1;
  int s = 1;

  int order() const { return r + s; }
  /// Parity of a section label, 0 or 1.
  int parity(int label) const { return label > r ? 1 : 0; }
  /// Parity of cell (i,j,k); independent of j.
  int cell_parity(int i, int k) const { return (parity(i) + parity(k)) & 1; }

  bool operator==(const SuperStructure&) const = default;
};

enum class Degree { Even, Odd, Inhomogeneous, Zero };

inline const char* to_string(Degree d) {
  switch (d) {
    case Degree::Even: return "even";
    case Degree::Odd: return "odd";
    case Degree::Inhomogeneous: return "inhomogeneous";
    case Degree::Zero: return "zero";
  }
  return "?";
}

template <ScalarType S>
struct SuperCubic {
  Matrix3<S> mat;
  SuperStructure ss;

  bool operator==(const SuperCubic&) const = default;
};

template <ScalarType S>
SuperCubic<S> attach_super(Matrix3<S> a, int r, int s) {
  if (r < 1 || s < 1) throw ShapeError("attach_super: r and s must both be positive");
  if (!a.is_cubic() || a.order() != r + s)
    throw ShapeError("attach_super: matrix must be cubic of order r+s = " + std::to_string(r + s));
  return {std::move(a), SuperStructure{r, s}};
}

template <ScalarType S>
struct SuperBlocks {
  Matrix3<S> b00;  ///< r x n x r
  Matrix3<S> b01;  ///< r x n x s
  Matrix3<S> b10;  ///< s x n x r
  Matrix3<S> b11;  ///< s x n x s
};

template <ScalarType S>
SuperBlocks<S> blocks(const SuperCubic<S>& x) {
  const int r = x.ss.r, s = x.ss.s, n = x.ss.order();
  const auto& a = x.mat;
  return {Matrix3<S>::from_function(r, n, r, [&](int i, int j, int k) { return a(i, j, k); }),
          Matrix3<S>::from_function(r, n, s, [&](int i, int j, int k) { return a(i, j, r + k); }),
          Matrix3<S>::from_function(s, n, r, [&](int i, int j, int k) { return a(r + i, j, k); }),
          Matrix3<S>::from_function(s, n, s, [&](int i, int j, int k) { return a(r + i, j, r + k); })};
}

/// Inverse of blocks(): places the four blocks back into an order r+s matrix.
template <ScalarType S>
Matrix3<S> assemble_blocks(const SuperBlocks<S>& b, const SuperStructure& ss) {
  const int r = ss.r, n = ss.order();
  return Matrix3<S>::from_function(n, n, n, [&](int i, int j, int k) {
    if (i <= r) return k <= r ? b.b00(i, j, k) : b.b01(i, j, k - r);
    return k <= r ? b.b10(i - r, j, k) : b.b11(i - r, j, k - r);
  });
}

template <ScalarType S>
Degree degree(const SuperCubic<S>& x) {
  const int n = x.ss.order();
  bool even_nonzero = false, odd_nonzero = false;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k) {
        if (scalar_traits<S>::is_zero(x.mat(i, j, k))) continue;
        (x.ss.cell_parity(i, k) == 0 ? even_nonzero : odd_nonzero) = true;
      }
  if (even_nonzero && odd_nonzero) return Degree::Inhomogeneous;
  if (even_nonzero) return Degree::Even;
  if (odd_nonzero) return Degree::Odd;
  return Degree::Zero;
}

/// Degree as a Z_2 representative; the zero matrix counts as even.
template <ScalarType S>
int degree_bit(const SuperCubic<S>& x) {
  switch (degree(x)) {
    case Degree::Odd: return 1;
    case Degree::Inhomogeneous: throw HomogeneityError("graded operation on an inhomogeneous supermatrix");
    default: return 0;
  }
}

/// Keeps the cells of the given parity and zeroes the rest.
template <ScalarType S>
SuperCubic<S> parity_part(const SuperCubic<S>& x, int parity) {
  const int n = x.ss.order();
  return {Matrix3<S>::from_function(n, n, n,
                                    [&](int i, int j, int k) {
                                      return x.ss.cell_parity(i, k) == parity ? x.mat(i, j, k) : S{};
                                    }),
          x.ss};
}

template <ScalarType S>
SuperCubic<S> even_part(const SuperCubic<S>& x) { return parity_part(x, 0); }

template <ScalarType S>
SuperCubic<S> odd_part(const SuperCubic<S>& x) { return parity_part(x, 1); }

/// Str^(j) X = sum over sections of orientation (j) of the section supertrace
///           = sum_l sum_i sign(i) X(i,l,i), sign(i) = +1 for i <= r, -1 otherwise.
template <ScalarType S>
S supertrace(const SuperCubic<S>& x) {
  const int n = x.ss.order();
  S acc{};
  for (int l = 1; l <= n; ++l)
    for (int i = 1; i <= n; ++i) acc += signed_scalar(sign_pow(x.ss.parity(i)), x.mat(i, l, i));
  return acc;
}

namespace detail {

template <ScalarType S>
void require_same_structure(const char* what, std::initializer_list<const SuperCubic<S>*> xs) {
  const SuperCubic<S>& first = **xs.begin();
  for (const auto* x : xs) {
    if (!(x->ss == first.ss)) throw ShapeError(std::string(what) + ": super structures differ");
    if (!x->mat.is_cubic() || x->mat.order() != x->ss.order())
      throw ShapeError(std::string(what) + ": matrix order does not match its super structure");
  }
}

}  // namespace detail

/// Product relative to (j) of two supermatrices sharing one structure.
template <ScalarType S>
SuperCubic<S> super_mul(const SuperCubic<S>& x, const SuperCubic<S>& y) {
  detail::require_same_structure<S>("super_mul", {&x, &y});
  return {mul_dir(x.mat, y.mat), x.ss};
}

/// [X,Y] = X *_j Y - (-1)^{xy} Y *_j X for homogeneous X, Y.
template <ScalarType S>
SuperCubic<S> graded_commutator(const SuperCubic<S>& x, const SuperCubic<S>& y) {
  detail::require_same_structure<S>("graded_commutator", {&x, &y});
  const int sign = sign_pow(degree_bit(x) * degree_bit(y));
  return {mul_dir(x.mat, y.mat) - signed_scalar(sign, S(1)) * mul_dir(y.mat, x.mat), x.ss};
}

/// (XYZ) = Str^(j) X (Y *_j Z).
template <ScalarType S>
SuperCubic<S> super_triple_product(const SuperCubic<S>& x, const SuperCubic<S>& y, const SuperCubic<S>& z) {
  detail::require_same_structure<S>("super_triple_product", {&x, &y, &z});
  static_cast<void>(degree_bit(x) + degree_bit(y) + degree_bit(z));  // homogeneity
  return {supertrace(x) * mul_dir(y.mat, z.mat), x.ss};
}

template <ScalarType S>
SuperCubic<S> operator+(const SuperCubic<S>& x, const SuperCubic<S>& y) {
  detail::require_same_structure<S>("operator+", {&x, &y});
  return {x.mat + y.mat, x.ss};
}

template <ScalarType S>
SuperCubic<S> operator-(const SuperCubic<S>& x, const SuperCubic<S>& y) {
  detail::require_same_structure<S>("operator-", {&x, &y});
  return {x.mat - y.mat, x.ss};
}

template <ScalarType S>
SuperCubic<S> operator*(const S& alpha, const SuperCubic<S>& x) {
  return {alpha * x.mat, x.ss};
}

template <ScalarType S>
SuperCubic<S> signed_super(int sign, const SuperCubic<S>& x) {
  return sign < 0 ? SuperCubic<S>{-x.mat, x.ss} : x;
}

/// Residual matrices of the three super triple-product identities:
/// (AB(CDF)) = (A(CBD)F); ((ABC)DF) = (-1)^{bc} ((ACB)DF); (AB(CDF)) = (CB(ADF)).
template <ScalarType S>
std::array<Matrix3<S>, 3> prop2_residual_matrices(const SuperCubic<S>& a, const SuperCubic<S>& b,
                                                  const SuperCubic<S>& c, const SuperCubic<S>& d,
                                                  const SuperCubic<S>& f) {
  const auto tp = [](const SuperCubic<S>& x, const SuperCubic<S>& y, const SuperCubic<S>& z) {
    return super_triple_product(x, y, z);
  };
  const int bc = sign_pow(degree_bit(b) * degree_bit(c));
  return {(tp(a, b, tp(c, d, f)) - tp(a, tp(c, b, d), f)).mat,
          (tp(tp(a, b, c), d, f) - signed_super(bc, tp(tp(a, c, b), d, f))).mat,
          (tp(a, b, tp(c, d, f)) - tp(c, b, tp(a, d, f))).mat};
}

inline constexpr std::array<const char*, 3> kProp2Names = {"middle_exchange", "graded_swap",
                                                           "outer_exchange"};

template <ScalarType S>
std::array<ResidualReport, 3> prop2_residuals(const SuperCubic<S>& a, const SuperCubic<S>& b,
                                              const SuperCubic<S>& c, const SuperCubic<S>& d,
                                              const SuperCubic<S>& f, double tol = 0.0) {
  const auto mats = prop2_residual_matrices(a, b, c, d, f);
  std::array<ResidualReport, 3> out;
  for (std::size_t i = 0; i < 3; ++i) {
    ResidualAccumulator acc(kProp2Names[i], tol);
    acc.add(max_abs(mats[i]));
    out[i] = acc.finish();
  }
  return out;
}

/// Six-term graded sum of super triple products:
/// (ABC) + (-1)^{a(b+c)}(BCA) + (-1)^{c(a+b)}(CAB)
///   - (-1)^{ab}(BAC) - (-1)^{bc}(ACB) - (-1)^{ab+bc+ac}(CBA).
template <ScalarType S>
SuperCubic<S> graded_triple_commutator(const SuperCubic<S>& x, const SuperCubic<S>& y, const SuperCubic<S>& z) {
  detail::require_same_structure<S>("graded_triple_commutator", {&x, &y, &z});
  const int a = degree_bit(x), b = degree_bit(y), c = degree_bit(z);
  return super_triple_product(x, y, z) + signed_super(sign_pow(a * (b + c)), super_triple_product(y, z, x)) +
         signed_super(sign_pow(c * (a + b)), super_triple_product(z, x, y)) -
         signed_super(sign_pow(a * b), super_triple_product(y, x, z)) -
         signed_super(sign_pow(b * c), super_triple_product(x, z, y)) -
         signed_super(sign_pow(a * b + b * c + a * c), super_triple_product(z, y, x));
}

/// Quantum super Nambu bracket
/// [A,B,C] = Str A [B,C] + (-1)^{a(b+c)} Str B [C,A] + (-1)^{c(a+b)} Str C [A,B].
template <ScalarType S>
SuperCubic<S> quantum_super_nambu(const SuperCubic<S>& x, const SuperCubic<S>& y, const SuperCubic<S>& z) {
  detail::require_same_structure<S>("quantum_super_nambu", {&x, &y, &z});
  const int a = degree_bit(x), b = degree_bit(y), c = degree_bit(z);
  return supertrace(x) * graded_commutator(y, z) +
         signed_super(sign_pow(a * (b + c)), supertrace(y) * graded_commutator(z, x)) +
         signed_super(sign_pow(c * (a + b)), supertrace(z) * graded_commutator(x, y));
}

/// Residual of the ternary graded Filippov-Jacobi identity under quantum_super_nambu:
/// [x,y,[z,v,w]] - [[x,y,z],v,w] - (-1)^{(x+y)z}[z,[x,y,v],w] - (-1)^{(x+y)(z+v)}[z,v,[x,y,w]].
template <ScalarType S>
Matrix3<S> gfi_residual_matrix(const SuperCubic<S>& x, const SuperCubic<S>& y, const SuperCubic<S>& z,
                               const SuperCubic<S>& v, const SuperCubic<S>& w) {
  const auto br = [](const SuperCubic<S>& p, const SuperCubic<S>& q, const SuperCubic<S>& r) {
    return quantum_super_nambu(p, q, r);
  };
  const int xy = degree_bit(x) + degree_bit(y);
  const int zb = degree_bit(z), vb = degree_bit(v);
  return (br(x, y, br(z, v, w)) - br(br(x, y, z), v, w) - signed_super(sign_pow(xy * zb), br(z, br(x, y, v), w)) -
          signed_super(sign_pow(xy * (zb + vb)), br(z, v, br(x, y, w))))
      .mat;
}

template <ScalarType S>
ResidualReport gfi_residual_cubic(const SuperCubic<S>& x, const SuperCubic<S>& y, const SuperCubic<S>& z,
                                  const SuperCubic<S>& v, const SuperCubic<S>& w, double tol = 0.0) {
  ResidualAccumulator acc("graded_filippov_jacobi", tol);
  acc.add(max_abs(gfi_residual_matrix(x, y, z, v, w)));
  return acc.finish();
}

}  // namespace nambu3
