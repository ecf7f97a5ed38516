#include "instanton/membership.hpp"

#include "instanton/errors.hpp"
#include "instanton/linalg.hpp"
#include "instanton/random.hpp"

namespace instanton {

MembershipReport check_membership(const Hyperweb& a, std::size_t half_rank,
                                  const MembershipOptions& options) {
  MembershipReport report;
  report.charge = a.charge();
  report.half_rank = half_rank;
  report.condition_i.required = 2 * a.charge() + 2 * half_rank;
  report.condition_i.found = rank(a.matrix());
  report.condition_i.passed = report.condition_i.found == report.condition_i.required;
  if (!report.condition_i.passed) return report;

  const Monad m = build_monad(a, half_rank);
  report.condition_ii =
      fiberwise_rank_check(m, FiberCondition::BSurjective, options.trials, options.ext_degree, options.seed);
  const std::size_t h0 = h0_global(m);
  report.condition_iii.h0 = h0;
  report.condition_iii.passed = h0 == 0;
  return report;
}

StarCertificate property_star(const Hyperweb& a, std::size_t n, std::size_t trials,
                              std::uint64_t seed) {
  const std::size_t big = a.charge();
  if (n < 1 || n > big)
    throw ParameterError("property (*) needs 1 <= n <= N, got n = " + std::to_string(n) +
                         ", N = " + std::to_string(big));
  StarCertificate cert;
  for (std::size_t t = 0; t < trials; ++t) {
    Matrix<Fp> inc;
    if (t == 0) {
      inc = Splitting::coordinate(big, n).inclusion();
    } else {
      Rng rng(derive_seed(seed, t));
      inc = rng.injective_matrix(big, n);
    }
    ++cert.trials_used;
    if (!restrict_along(a, inc).is_invertible()) continue;
    cert.found = true;
    cert.witness = std::move(inc);
    return cert;
  }
  return cert;
}

}  // namespace instanton
