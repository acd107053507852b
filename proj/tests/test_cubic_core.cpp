#include <doctest.h>

#include "nambu3/io.hpp"
#include "nambu3/matrix3.hpp"
#include "nambu3/verifier.hpp"
#include "oracles.hpp"

using namespace nambu3;
using M = Matrix3<GaussInt>;

namespace {

M tens_ijk(int n) {
  return M::from_function(n, n, n, [](int i, int j, int k) { return GaussInt(10 * i + j + k, 0); });
}

Matrix2<GaussInt> square(std::initializer_list<std::initializer_list<int>> rows) {
  Matrix2<GaussInt> out(rows.size(), rows.begin()->size());
  int r = 0;
  for (const auto& row : rows) {
    int c = 0;
    for (int v : row) out(r, c++) = GaussInt(v, 0);
    ++r;
  }
  return out;
}

}  // namespace

TEST_CASE("construction and 1-based indexing") {
  const std::vector<GaussInt> e{{1, 0}, {2, 0}, {3, 0}, {4, 0}, {5, 0}, {6, 0}};
  const auto a = make_matrix3<GaussInt>(1, 2, 3, e);
  CHECK(a.shape() == std::array<int, 3>{1, 2, 3});
  CHECK(a(1, 1, 1) == GaussInt(1, 0));
  CHECK(a(1, 2, 3) == GaussInt(6, 0));
  CHECK(a(1, 2, 1) == GaussInt(4, 0));
  CHECK_FALSE(a.is_cubic());
  CHECK_THROWS_AS(make_matrix3<GaussInt>(2, 2, 2, e), ShapeError);
  CHECK_THROWS_AS(M::zero(0, 1, 1), ShapeError);
}

TEST_CASE("sections against direct reads") {
  const auto a = tens_ijk(2);
  CHECK(section(a, Direction::J, 1) == square({{12, 13}, {22, 23}}));
  for (int n : {2, 3}) {
    const auto b = gen_random_cubic<GaussInt>(n, 11 + n, 5);
    for (int l = 1; l <= n; ++l) {
      const auto si = section(b, Direction::I, l), sj = section(b, Direction::J, l), sk = section(b, Direction::K, l);
      for (int x = 1; x <= n; ++x)
        for (int y = 1; y <= n; ++y) {
          CHECK(si(x - 1, y - 1) == b(l, x, y));
          CHECK(sj(x - 1, y - 1) == b(x, l, y));
          CHECK(sk(x - 1, y - 1) == b(x, y, l));
        }
    }
  }
  CHECK_THROWS_AS(section(a, Direction::K, 3), IndexError);
  CHECK_THROWS_AS(section(a, Direction::K, 0), IndexError);
}

TEST_CASE("rectangular sections") {
  const auto a = M::from_function(2, 3, 4, [](int i, int j, int k) { return GaussInt(100 * i + 10 * j + k, 0); });
  CHECK(section(a, Direction::I, 2).rows() == 3);
  CHECK(section(a, Direction::I, 2).cols() == 4);
  CHECK(section(a, Direction::J, 3)(1, 3) == GaussInt(234, 0));
  CHECK(section(a, Direction::K, 4)(1, 2) == GaussInt(234, 0));
}

TEST_CASE("rows") {
  const auto a = M::from_function(2, 2, 2, [](int i, int, int) { return GaussInt(i, 0); });
  const auto r = row(a, Direction::I, 2, 2);
  CHECK(r.size() == 2);
  CHECK(r[0] == GaussInt(1, 0));
  CHECK(r[1] == GaussInt(2, 0));
  const auto b = tens_ijk(3);
  const auto rk = row(b, Direction::K, 2, 3);
  for (int t = 1; t <= 3; ++t) CHECK(rk[t - 1] == b(2, 3, t));
}

TEST_CASE("transversals") {
  const auto a = M::zero(3, 3, 3);
  const CellSet latin_cells{{1, 1, 3}, {2, 3, 2}, {3, 2, 1}};
  CHECK(is_transversal(a, latin_cells));
  for (int n = 1; n <= 5; ++n) CHECK(is_transversal(M::zero(n, n, n), main_diagonal_cells(n)));
  for (Direction d : {Direction::I, Direction::J, Direction::K})
    CHECK(is_transversal(M::zero(4, 4, 4), secondary_diagonal_cells(4, d)));
  const CellSet shared_section{{1, 1, 3}, {1, 3, 2}, {3, 2, 1}};
  CHECK_FALSE(is_transversal(a, shared_section));
  const CellSet dup{{1, 1, 1}, {1, 1, 1}, {2, 2, 2}};
  CHECK_THROWS_AS(is_transversal(a, dup), DomainError);
  const CellSet bad{{1, 1, 1}, {2, 2, 2}, {4, 3, 3}};
  CHECK_THROWS_AS(is_transversal(a, bad), IndexError);
  CHECK_THROWS_AS(is_transversal(a, main_diagonal_cells(2)), ArityError);
  CHECK_THROWS_AS(is_transversal(M::zero(2, 2, 3), main_diagonal_cells(2)), DomainError);
}

TEST_CASE("transversal sections") {
  const auto a = M::zero(3, 3, 3);
  std::vector<std::array<int, 2>> diag{{1, 1}, {2, 2}, {3, 3}};
  CHECK(is_transversal_section(a, Direction::J, diag));
  std::vector<std::array<int, 2>> i_rows{{1, 3}, {3, 2}, {2, 1}};
  CHECK(is_transversal_section(a, Direction::I, i_rows));
  std::vector<std::array<int, 2>> clash{{1, 3}, {1, 2}, {2, 1}};
  CHECK_FALSE(is_transversal_section(a, Direction::K, clash));
}

TEST_CASE("main diagonal sections") {
  const auto a = tens_ijk(2);
  CHECK(main_diagonal_section(a, Direction::J) == square({{12, 13}, {23, 24}}));
  const auto b = gen_random_cubic<GaussInt>(3, 3, 4);
  const auto mi = main_diagonal_section(b, Direction::I), mk = main_diagonal_section(b, Direction::K);
  for (int t = 1; t <= 3; ++t)
    for (int l = 1; l <= 3; ++l) {
      CHECK(mi(t - 1, l - 1) == b(t, l, l));
      CHECK(mk(t - 1, l - 1) == b(l, l, t));
    }
}

TEST_CASE("direction traces") {
  const auto a = M::from_function(2, 2, 2, [](int i, int j, int k) { return GaussInt(i + j + k, 0); });
  CHECK(trace_dir(a) == GaussInt(18, 0));
  const auto b = gen_random_cubic<GaussInt>(4, 8, 3);
  CHECK(trace_dir(b, Direction::J) == oracle::trace_j(oracle::from(b)));
  for (Direction d : {Direction::I, Direction::J, Direction::K})
    CHECK(trace_dir(b, d) == main_diagonal_section(b, d).sum());
  GaussInt ti{}, tk{};
  for (int t = 1; t <= 4; ++t)
    for (int l = 1; l <= 4; ++l) {
      ti += b(t, l, l);
      tk += b(l, l, t);
    }
  CHECK(trace_dir(b, Direction::I) == ti);
  CHECK(trace_dir(b, Direction::K) == tk);
  CHECK_THROWS_AS(trace_dir(M::zero(2, 2, 3)), DomainError);
}

TEST_CASE("identity cubic matrix") {
  const auto e = identity_cubic<GaussInt>(2);
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j)
      for (int k = 1; k <= 2; ++k) CHECK(e(i, j, k) == GaussInt(i == k ? 1 : 0, 0));
  CHECK(e(1, 1, 1) == GaussInt(1, 0));
  CHECK(e(1, 2, 1) == GaussInt(1, 0));
  CHECK(e(2, 1, 2) == GaussInt(1, 0));
  CHECK(e(2, 2, 2) == GaussInt(1, 0));
}

TEST_CASE("hermitian adjoint") {
  const auto a = gen_random_cubic<GaussInt>(3, 21, 3);
  const auto h = hermitian_adjoint(a);
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      for (int k = 1; k <= 3; ++k) {
        CHECK(h(i, j, k) == conj(a(k, j, i)));
        CHECK(hermitian_adjoint(a, Direction::I)(i, j, k) == conj(a(i, k, j)));
        CHECK(hermitian_adjoint(a, Direction::K)(i, j, k) == conj(a(j, i, k)));
      }
  for (Direction d : {Direction::I, Direction::J, Direction::K}) CHECK(hermitian_adjoint(hermitian_adjoint(a, d), d) == a);
}

TEST_CASE("matrix file round trip and validation") {
  const auto a = gen_random_cubic<GaussInt>(2, 4, 3);
  CHECK(matrix3_from_json<GaussInt>(matrix3_to_json(a)) == a);
  const Json ragged = Json::parse(R"({"kind":"cubic","shape":[1,1,2],"entries":[[[[1,0]]]]})");
  CHECK_THROWS_AS(matrix3_from_json<GaussInt>(ragged), InputError);
  const Json non_int = Json::parse(R"({"kind":"cubic","shape":[1,1,1],"entries":[[[[1.5,0]]]]})");
  CHECK_THROWS_AS(matrix3_from_json<GaussInt>(non_int), InputError);
  CHECK(matrix3_from_json<Complex>(non_int)(1, 1, 1) == Complex(1.5, 0));
  const Json wrong_kind = Json::parse(R"({"kind":"square","shape":[1,1,1],"entries":[[[[1,0]]]]})");
  CHECK_THROWS_AS(matrix3_from_json<GaussInt>(wrong_kind), InputError);
}
