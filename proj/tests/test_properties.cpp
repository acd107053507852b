#include <doctest.h>

#include "nambu3/cubic_algebra.hpp"
#include "nambu3/induced_bracket.hpp"
#include "nambu3/verifier.hpp"

using namespace nambu3;
using G = GaussInt;
using M = Matrix3<G>;

TEST_CASE("product relative to (j) is associative and bilinear") {
  Xoshiro256ss rng(101);
  for (int t = 0; t < 50; ++t) {
    const int n = 1 + t % 4;
    const auto a = random_cubic<G>(rng, n, 3), b = random_cubic<G>(rng, n, 3), c = random_cubic<G>(rng, n, 3);
    const G s = draw_scalar<G>(rng, 3);
    CHECK(mul_dir(mul_dir(a, b), c) == mul_dir(a, mul_dir(b, c)));
    CHECK(mul_dir(a, b + s * c) == mul_dir(a, b) + s * mul_dir(a, c));
  }
}

TEST_CASE("adjoint reverses products and trace is cyclic, in every direction") {
  Xoshiro256ss rng(102);
  for (int t = 0; t < 50; ++t) {
    const int n = 1 + t % 4;
    const auto a = random_cubic<G>(rng, n, 3), b = random_cubic<G>(rng, n, 3);
    for (Direction d : {Direction::I, Direction::J, Direction::K}) {
      CHECK(hermitian_adjoint(mul_dir(a, b, d), d) == mul_dir(hermitian_adjoint(b, d), hermitian_adjoint(a, d), d));
      CHECK(trace_dir(mul_dir(a, b, d), d) == trace_dir(mul_dir(b, a, d), d));
      CHECK(trace_dir(hermitian_adjoint(a, d), d) == conj(trace_dir(a, d)));
    }
  }
}

TEST_CASE("quantum Nambu bracket is trilinear and totally skew") {
  Xoshiro256ss rng(103);
  for (int t = 0; t < 30; ++t) {
    const int n = 2 + t % 3;
    const auto a = random_cubic<G>(rng, n, 2), b = random_cubic<G>(rng, n, 2), c = random_cubic<G>(rng, n, 2),
               d = random_cubic<G>(rng, n, 2);
    const G s = draw_scalar<G>(rng, 3);
    CHECK(quantum_nambu(a + s * d, b, c) == quantum_nambu(a, b, c) + s * quantum_nambu(d, b, c));
    CHECK(quantum_nambu(a, b, c) == -quantum_nambu(b, a, c));
    CHECK(quantum_nambu(a, b, c) == -quantum_nambu(a, c, b));
    CHECK(quantum_nambu(a, b, c) == quantum_nambu(c, a, b));
  }
}

TEST_CASE("Filippov-Jacobi at order 4 and with zero arguments") {
  Xoshiro256ss rng(104);
  std::array<M, 5> x;
  for (int t = 0; t < 5; ++t) {
    for (auto& m : x) m = random_cubic<G>(rng, 4, 3);
    CHECK(fi_residual_cubic(x[0], x[1], x[2], x[3], x[4]).max_abs == 0.0);
  }
  const auto z = M::zero(3, 3, 3);
  for (auto& m : x) m = random_cubic<G>(rng, 3, 3);
  CHECK(fi_residual_cubic(z, x[1], x[2], x[3], x[4]).max_abs == 0.0);
  CHECK(fi_residual_cubic(x[0], x[0], x[2], x[3], x[4]).max_abs == 0.0);
}

TEST_CASE("homogeneous parts split every supermatrix") {
  Xoshiro256ss rng(105);
  for (int t = 0; t < 30; ++t) {
    const SuperStructure ss{1 + t % 3, 1 + t % 2};
    const SuperCubic<G> x{random_cubic<G>(rng, ss.order(), 3), ss};
    CHECK(even_part(x) + odd_part(x) == x);
    CHECK(supertrace(x) == supertrace(even_part(x)));
    CHECK(assemble_blocks(blocks(x), ss) == x.mat);
    const auto y = random_homogeneous<G>(rng, ss, t % 2, 3), z = random_homogeneous<G>(rng, ss, (t / 2) % 2, 3);
    const int sign = sign_pow((t % 2) * ((t / 2) % 2));
    CHECK(supertrace(super_mul(y, z)) == signed_scalar(sign, supertrace(super_mul(z, y))));
  }
}

TEST_CASE("coboundary squares to zero on gl(3)") {
  const auto gl = build_gl<G>(3);
  Xoshiro256ss rng(106);
  std::vector<typename Cochain<G>::Entry> entries;
  for (int a = 0; a < 9; ++a) entries.push_back({{a}, draw_scalar<G>(rng, 3)});
  const auto w = Cochain<G>::from_canonical(gl.algebra.parity(), 1, entries);
  const auto dw = coboundary(gl.algebra, w);
  CHECK(coboundary(gl.algebra, dw).max_abs() == 0.0);
}

TEST_CASE("graded antisymmetry of stored cochains") {
  const std::vector<int> par{0, 1, 0, 1};
  Xoshiro256ss rng(107);
  std::vector<typename Cochain<G>::Entry> entries;
  detail::for_each_basis_tuple(4, 2, [&](const std::vector<int>& idx) {
    if (is_canonical(idx, par)) entries.push_back({idx, draw_scalar<G>(rng, 3)});
  });
  const auto w = Cochain<G>::from_canonical(par, 2, entries);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      const int ab[2] = {a, b}, ba[2] = {b, a};
      CHECK(w.value(ab) == signed_scalar(-sign_pow(par[a] * par[b]), w.value(ba)));
    }
}

TEST_CASE("gl(m|n) satisfies the super Jacobi identity and Str is a cocycle") {
  for (auto [m, n] : {std::pair{1, 1}, std::pair{2, 1}, std::pair{1, 2}}) {
    const auto gl = build_gl_super<G>(m, n);
    CHECK(validate_algebra(gl.algebra).pass);
    CHECK(coboundary(gl.algebra, gl.cochain).max_abs() == 0.0);
  }
}
