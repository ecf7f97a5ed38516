#include <doctest.h>

#include "generators.hpp"
#include "instanton/errors.hpp"
#include "instanton/linalg.hpp"
#include "oracles.hpp"

using namespace instanton;
using instanton::testing::for_cases;

namespace {

// random matrix of prescribed rank: product of random rows×k and k×cols
Matrix<Fp> low_rank(std::size_t rows, std::size_t cols, std::size_t k, Rng& rng) {
  return rng.matrix(rows, k) * rng.matrix(k, cols);
}

}  // namespace

TEST_CASE("rank agrees with kernel counting over F_5") {
  ScopedModulus scope(5);
  for_cases(31, 60, [](Rng& rng, std::size_t k) {
    const std::size_t rows = 1 + k % 5, cols = 1 + (k / 5) % 5;
    const Matrix<Fp> m = low_rank(rows, cols, 1 + k % 3, rng);
    CHECK(rank(m) == oracle::rank_by_counting(m));
    CHECK(row_reduce(m).pivots.size() == rank(m));
  });
}

TEST_CASE("invertibility agrees with the cofactor determinant") {
  for (std::uint32_t p : {3u, 7u, kDefaultPrime}) {
    ScopedModulus scope(p);
    for_cases(32 + p, 80, [](Rng& rng, std::size_t k) {
      const Matrix<Fp> m = rng.matrix(1 + k % 5, 1 + k % 5);
      CHECK(is_invertible(m) == !oracle::det(m).is_zero());
    });
  }
}

TEST_CASE("kernel basis spans the kernel") {
  for_cases(33, 40, [](Rng& rng, std::size_t k) {
    const std::size_t rows = 3 + k % 6, cols = 4 + k % 7;
    const Matrix<Fp> m = low_rank(rows, cols, 1 + k % 4, rng);
    const auto rk = rank_kernel(m);
    CHECK(rk.rank == rank(m));
    CHECK(rk.kernel.cols() == cols - rk.rank);
    CHECK((m * rk.kernel).is_zero());
    CHECK(rank(rk.kernel) == rk.kernel.cols());
  });
}

TEST_CASE("inverse and solve") {
  for_cases(34, 40, [](Rng& rng, std::size_t k) {
    const std::size_t n = 1 + k % 8;
    const Matrix<Fp> g = rng.invertible_matrix(n);
    CHECK(g * invert(g) == Matrix<Fp>::identity(n));
    CHECK(invert(g) * g == Matrix<Fp>::identity(n));
    const Matrix<Fp> x = rng.matrix(n, 2);
    const auto solved = solve(g, g * x);
    REQUIRE(solved);
    CHECK(*solved == x);
  });
}

TEST_CASE("solve reports inconsistent systems") {
  Matrix<Fp> m(2, 2);
  m(0, 0) = Fp::one();
  m(1, 0) = Fp::one();
  Matrix<Fp> b(2, 1);
  b(0, 0) = Fp::one();
  CHECK_FALSE(solve(m, b).has_value());
  CHECK_THROWS_AS(invert(m), SingularMatrix);
}

TEST_CASE("reduced echelon form is deterministic and row-equivalent") {
  for_cases(35, 20, [](Rng& rng, std::size_t) {
    const Matrix<Fp> m = low_rank(6, 8, 3, rng);
    const auto e1 = row_reduce(m), e2 = row_reduce(m);
    CHECK(e1.reduced == e2.reduced);
    CHECK(e1.pivots == e2.pivots);
    // rows of the echelon form span the same space as the rows of m
    CHECK(rank(vstack(m, e1.reduced)) == rank(m));
    for (std::size_t i = 0; i < e1.pivots.size(); ++i) CHECK(e1.reduced(i, e1.pivots[i]) == Fp::one());
  });
}

TEST_CASE("matrix algebra identities") {
  for_cases(36, 30, [](Rng& rng, std::size_t) {
    const Matrix<Fp> a = rng.matrix(3, 4), b = rng.matrix(4, 2), c = rng.matrix(2, 5);
    CHECK((a * b).transpose() == b.transpose() * a.transpose());
    CHECK((a * b) * c == a * (b * c));
    const Matrix<Fp> g = rng.matrix(2, 3), h = rng.matrix(3, 2);
    CHECK(kron_identity(g, 4) * kron_identity(h, 4) == kron_identity(g * h, 4));
  });
  CHECK_THROWS_AS(Matrix<Fp>(2, 3) * Matrix<Fp>(2, 3), ShapeMismatch);
}

TEST_CASE("rank is unchanged by lifting to an extension") {
  for_cases(37, 20, [](Rng& rng, std::size_t k) {
    const Matrix<Fp> m = low_rank(5, 6, 1 + k % 5, rng);
    CHECK(rank(m.lift<FpExt<2>>()) == rank(m));
  });
}
