#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "instanton/hyperweb.hpp"
#include "instanton/monad.hpp"

namespace instanton {

struct MembershipOptions {
  std::size_t trials = 300;
  std::size_t ext_degree = 2;
  std::uint64_t seed = 0;
};

/// Verdict on A ∈ MI_{N,r}: (i) rank A = 2N+2r, (ii) b_A(x) surjective on P³,
/// (iii) h⁰(E) = 0. Clauses after a failed (i) are not evaluated.
struct MembershipReport {
  std::size_t charge = 0;
  std::size_t half_rank = 0;

  struct RankClause {
    std::size_t found = 0;
    std::size_t required = 0;
    bool passed = false;
  } condition_i;

  std::optional<FiberCheckVerdict> condition_ii;

  struct SectionClause {
    std::optional<std::size_t> h0;
    bool passed = false;
  } condition_iii;

  bool overall() const {
    return condition_i.passed && condition_ii && condition_ii->passed && condition_iii.passed;
  }
};

MembershipReport check_membership(const Hyperweb& a, std::size_t half_rank,
                                  const MembershipOptions& options = {});

/// Witness search for property (*): an injection i: H_n → H_N with
/// restrict(A, i) invertible. Not finding one is inconclusive.
struct StarCertificate {
  bool found = false;
  std::optional<Matrix<Fp>> witness;  // N × n, re-verified
  std::size_t trials_used = 0;
};

/// Requires 1 ≤ n ≤ N (ParameterError otherwise). The first trial tries the
/// coordinate inclusion, the rest uniform random injections.
StarCertificate property_star(const Hyperweb& a, std::size_t n, std::size_t trials,
                              std::uint64_t seed);

}  // namespace instanton
