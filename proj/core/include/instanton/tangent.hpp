#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "instanton/hyperweb.hpp"

namespace instanton {

/// Dimension counts at charge N and half rank r.
struct DimensionReport {
  std::size_t charge = 0;
  std::size_t half_rank = 0;
  std::int64_t dim_s = 0;        // 3N(N+1)
  std::int64_t eq_count = 0;     // C(2N−2r, 2), the rank equations
  std::int64_t expected_mi = 0;  // N² + 4N(r+1) − r(2r+1)
  std::int64_t expected_i = 0;   // 4N(r+1) − r(2r+1)
  std::optional<std::int64_t> measured_tangent;

  friend bool operator==(const DimensionReport&, const DimensionReport&) = default;
};

/// Formulas only. Throws ParameterError unless 1 ≤ r ≤ N.
DimensionReport expected_dims(std::size_t charge, std::size_t half_rank);

/// Adds the dimension of {Ȧ ∈ S_N : κᵀ·Ȧ·κ = 0}, κ a kernel basis of A: the
/// tangent space to the locus rank ≤ 2N+2r at A. Throws RankMismatch.
DimensionReport tangent_dimension(const Hyperweb& a, std::size_t half_rank);

}  // namespace instanton
