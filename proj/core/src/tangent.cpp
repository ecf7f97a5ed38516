#include "instanton/tangent.hpp"

#include "instanton/errors.hpp"
#include "instanton/linalg.hpp"

namespace instanton {

DimensionReport expected_dims(std::size_t charge, std::size_t half_rank) {
  if (half_rank < 1 || half_rank > charge)
    throw ParameterError("dimension formulas need 1 <= r <= N");
  const auto n = static_cast<std::int64_t>(charge);
  const auto r = static_cast<std::int64_t>(half_rank);
  const std::int64_t corank = 2 * n - 2 * r;
  DimensionReport d;
  d.charge = charge;
  d.half_rank = half_rank;
  d.dim_s = 3 * n * (n + 1);
  d.eq_count = corank * (corank - 1) / 2;
  d.expected_mi = n * n + 4 * n * (r + 1) - r * (2 * r + 1);
  d.expected_i = d.expected_mi - n * n;
  return d;
}

DimensionReport tangent_dimension(const Hyperweb& a, std::size_t half_rank) {
  const std::size_t n = a.charge();
  const auto rk = rank_and_kernel(a);
  if (rk.rank != 2 * n + 2 * half_rank)
    throw RankMismatch("rank(A) = " + std::to_string(rk.rank) + ", expected 2N+2r = " +
                       std::to_string(2 * n + 2 * half_rank));
  DimensionReport d = expected_dims(n, half_rank);
  const Matrix<Fp>& kappa = rk.kernel;
  const Matrix<Fp> kappa_t = kappa.transpose();
  const std::size_t k = kappa.cols();
  const std::size_t coeffs = HyperwebCoeffs(n).size();
  // one column per coefficient of Ȧ, one row per entry above the diagonal of κᵀȦκ
  Matrix<Fp> map(k * (k - (k > 0 ? 1 : 0)) / 2, coeffs);
  for (std::size_t c = 0; c < coeffs; ++c) {
    HyperwebCoeffs unit(n);
    unit[c] = Fp::one();
    const Matrix<Fp> pulled = kappa_t * Hyperweb(std::move(unit)).matrix() * kappa;
    std::size_t row = 0;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j) map(row++, c) = pulled(i, j);
  }
  d.measured_tangent = static_cast<std::int64_t>(coeffs - rank(map));
  return d;
}

}  // namespace instanton
