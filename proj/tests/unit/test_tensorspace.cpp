#include <doctest.h>

#include "generators.hpp"
#include "instanton/errors.hpp"
#include "instanton/linalg.hpp"
#include "instanton/tensorspace.hpp"

using namespace instanton;
using instanton::testing::for_cases;
using instanton::testing::random_skew;

TEST_CASE("wedge pairs and signs") {
  for (std::size_t k = 0; k < kWedgeDim; ++k) {
    const auto [a, b] = kWedgePairs[k];
    const auto w = wedge_index(a, b);
    REQUIRE(w);
    CHECK(w->index == k);
    CHECK(w->sign == 1);
    const auto swapped = wedge_index(b, a);
    REQUIRE(swapped);
    CHECK(swapped->index == k);
    CHECK(swapped->sign == -1);
  }
  for (std::size_t a = 0; a < kVDim; ++a) CHECK_FALSE(wedge_index(a, a).has_value());
}

TEST_CASE("dimension bookkeeping") {
  for (std::size_t n = 1; n <= 8; ++n) {
    const SpaceDims d{n};
    // Λ²(H⊗V) = S²H⊗Λ²V ⊕ Λ²H⊗S²V
    const std::size_t total = d.tensor_dim() * (d.tensor_dim() - 1) / 2;
    CHECK(d.hyperweb_dim() + d.alternating_dim() == total);
    CHECK(d.coefficient_count() == d.hyperweb_dim());
  }
  CHECK(SpaceDims{1}.coefficient_count() == 6);
}

TEST_CASE("coefficient offsets enumerate the canonical order") {
  for (std::size_t n = 1; n <= 5; ++n) {
    HyperwebCoeffs c(n);
    std::size_t expected = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j)
        for (std::size_t p = 0; p < kWedgeDim; ++p) CHECK(c.offset(i, j, p) == expected++);
    CHECK(expected == c.size());
  }
}

TEST_CASE("coefficient symmetries") {
  for_cases(41, 20, [](Rng& rng, std::size_t k) {
    const std::size_t n = 1 + k % 4;
    HyperwebCoeffs c(n);
    for (std::size_t s = 0; s < c.size(); ++s) c[s] = rng.field();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t a = 0; a < kVDim; ++a)
          for (std::size_t b = 0; b < kVDim; ++b) {
            CHECK(c.value(i, j, a, b) == c.value(j, i, a, b));
            CHECK(c.value(i, j, a, b) == -c.value(i, j, b, a));
          }
  });
}

TEST_CASE("SkewTensor validation") {
  CHECK_THROWS_AS(SkewTensor::from_matrix(Matrix<Fp>(4, 8)), ShapeMismatch);
  CHECK_THROWS_AS(SkewTensor::from_matrix(Matrix<Fp>(6, 6)), ShapeMismatch);
  Matrix<Fp> m(4, 4);
  m(0, 1) = Fp::one();
  CHECK_THROWS_AS(SkewTensor::from_matrix(m), ParameterError);
  m(1, 0) = -Fp::one();
  CHECK(SkewTensor::from_matrix(m).charge() == 1);
}

TEST_CASE("canonical projection splits Λ²(H⊗V)") {
  for_cases(42, 30, [](Rng& rng, std::size_t k) {
    const std::size_t n = 1 + k % 4;
    const auto t = SkewTensor::from_matrix(random_skew(4 * n, rng));
    const auto split = project_canonical(t);
    CHECK(split.symmetric_part.matrix() + split.alternating_part.matrix() == t.matrix());
    // the symmetric part is a hyperweb, the alternating part is killed by deflation's test
    const auto coeffs = deflate(split.symmetric_part);
    CHECK(inflate(coeffs) == split.symmetric_part);
    CHECK(project_canonical(split.symmetric_part).alternating_part.matrix().is_zero());
    CHECK(project_canonical(split.alternating_part).symmetric_part.matrix().is_zero());
    if (n >= 2 && !split.alternating_part.matrix().is_zero())
      CHECK_THROWS_AS(deflate(t), NotInSummand);
  });
}

TEST_CASE("charge one has no alternating part") {
  for_cases(43, 20, [](Rng& rng, std::size_t) {
    const auto t = SkewTensor::from_matrix(random_skew(4, rng));
    CHECK(project_canonical(t).alternating_part.matrix().is_zero());
  });
}

TEST_CASE("inflate then deflate is the identity") {
  for_cases(44, 20, [](Rng& rng, std::size_t k) {
    HyperwebCoeffs c(1 + k % 5);
    for (std::size_t s = 0; s < c.size(); ++s) c[s] = rng.field();
    CHECK(deflate(inflate(c)) == c);
    CHECK(has_skew_blocks(inflate(c).matrix()));
  });
}

TEST_CASE("skew block grids") {
  for_cases(45, 20, [](Rng& rng, std::size_t k) {
    SkewBlockGrid g(1 + k % 3, 1 + k % 4);
    for (auto& v : g.values()) v = rng.field();
    const Matrix<Fp> m = g.realize();
    CHECK(has_skew_blocks(m));
    CHECK(SkewBlockGrid::from_matrix(m) == g);
    CHECK(g.transpose().realize() == m.transpose());
    CHECK(g.transpose().transpose() == g);
  });
  Matrix<Fp> bad(4, 4);
  bad(0, 0) = Fp::one();
  CHECK_THROWS_AS(SkewBlockGrid::from_matrix(bad), NotInSummand);
}
