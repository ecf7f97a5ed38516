#include "instanton/construct.hpp"

#include <functional>

#include "instanton/errors.hpp"
#include "instanton/linalg.hpp"
#include "instanton/random.hpp"

namespace instanton {

namespace {

constexpr std::size_t kRetryBudget = 64;

bool is_skew(const Matrix<Fp>& m) {
  if (!m.is_square()) return false;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i; j < m.cols(); ++j)
      if (m(i, j) != -m(j, i)) return false;
  return true;
}

SkewBlockGrid random_grid(std::size_t rows, std::size_t cols, Rng& rng) {
  SkewBlockGrid g(rows, cols);
  for (auto& v : g.values()) v = rng.field();
  return g;
}

// Symmetric parts of the off-diagonal 4×4 blocks of a skew matrix: these
// vanish exactly when every block is skew.
std::vector<Fp> block_symmetric_parts(const Matrix<Fp>& s) {
  const std::size_t blocks = s.rows() / kVDim;
  std::vector<Fp> out;
  for (std::size_t i = 0; i < blocks; ++i)
    for (std::size_t j = i + 1; j < blocks; ++j)
      for (std::size_t a = 0; a < kVDim; ++a)
        for (std::size_t b = a; b < kVDim; ++b)
          out.push_back(s(kVDim * i + a, kVDim * j + b) + s(kVDim * i + b, kVDim * j + a));
  return out;
}

using AffineMap = std::function<std::vector<Fp>(const std::vector<Fp>&)>;

// Uniform random zero of an affine map F^dim → F^m, or nullopt if it has none.
std::optional<std::vector<Fp>> random_affine_zero(const AffineMap& f, std::size_t dim, Rng& rng) {
  std::vector<Fp> u(dim);
  const std::vector<Fp> f0 = f(u);
  Matrix<Fp> linear(f0.size(), dim);
  for (std::size_t k = 0; k < dim; ++k) {
    u[k] = Fp::one();
    const auto fk = f(u);
    u[k] = Fp{};
    for (std::size_t e = 0; e < f0.size(); ++e) linear(e, k) = fk[e] - f0[e];
  }
  Matrix<Fp> rhs(f0.size(), 1);
  for (std::size_t e = 0; e < f0.size(); ++e) rhs(e, 0) = -f0[e];
  const auto particular = solve(linear, rhs);
  if (!particular) return std::nullopt;
  const auto rk = rank_kernel(linear);
  const Matrix<Fp> mix = rng.matrix(rk.kernel.cols(), 1);
  const Matrix<Fp> x = *particular + rk.kernel * mix;
  for (std::size_t k = 0; k < dim; ++k) u[k] = x(k, 0);
  return u;
}

Matrix<Fp> hyperweb_matrix_from(std::size_t charge, const std::vector<Fp>& values, std::size_t start) {
  HyperwebCoeffs coeffs(charge);
  for (std::size_t k = 0; k < coeffs.size(); ++k) coeffs[k] = values[start + k];
  return Hyperweb(std::move(coeffs)).matrix();
}

Matrix<Fp> grid_matrix_from(std::size_t rows, std::size_t cols, const std::vector<Fp>& values,
                            std::size_t start) {
  SkewBlockGrid g(rows, cols);
  for (std::size_t k = 0; k < g.values().size(); ++k) g.values()[k] = values[start + k];
  return g.realize();
}

Hyperweb random_invertible(std::size_t n, Rng& rng) {
  for (std::size_t attempt = 0; attempt < kRetryBudget; ++attempt) {
    Hyperweb h = Hyperweb::random(n, rng);
    if (h.is_invertible()) return h;
  }
  throw NotFound("no invertible hyperweb of charge " + std::to_string(n) + " within budget");
}

// C built one column block at a time: column k solves the (ir) equations
// against the columns already chosen, so Cᵀ·B⁻¹·C ends up with skew blocks.
SkewBlockGrid solve_columns(const Matrix<Fp>& b_inverse, std::size_t n, std::size_t cols, Rng& rng) {
  std::vector<Matrix<Fp>> done;  // realized 4n × 4 columns
  SkewBlockGrid c(n, cols);
  for (std::size_t k = 0; k < cols; ++k) {
    const AffineMap equations = [&](const std::vector<Fp>& u) {
      const Matrix<Fp> col = grid_matrix_from(n, 1, u, 0);
      std::vector<Fp> out;
      for (const auto& prev : done) {
        const Matrix<Fp> m = prev.transpose() * b_inverse * col;
        for (std::size_t a = 0; a < kVDim; ++a)
          for (std::size_t b = a; b < kVDim; ++b) out.push_back(m(a, b) + m(b, a));
      }
      return out;
    };
    const auto u = random_affine_zero(equations, n * kWedgeDim, rng);  // homogeneous, never empty
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t p = 0; p < kWedgeDim; ++p) c.at(i, k, p) = (*u)[i * kWedgeDim + p];
    done.push_back(grid_matrix_from(n, 1, *u, 0));
  }
  return c;
}

}  // namespace

Hyperweb sample_invertible(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw ParameterError("sample_invertible needs n >= 1");
  Rng rng(seed);
  return random_invertible(n, rng);
}

Matrix<Fp> schur_product(const BCPair& bc) {
  if (bc.r > bc.n || bc.b.charge() != bc.n || bc.c.rows() != bc.n || bc.c.cols() != bc.n - bc.r)
    throw ShapeMismatch("BC pair shapes do not match (n, r)");
  const Matrix<Fp> c = bc.c.realize();
  return c.transpose() * invert(bc.b.matrix()) * c;
}

bool satisfies_condition_ir(const BCPair& bc) {
  const Matrix<Fp> s = schur_product(bc);
  return project_canonical(SkewTensor::from_matrix(s)).alternating_part.matrix().is_zero();
}

Hyperweb assemble_from_bc(const BCPair& bc, const Splitting& xi) {
  if (xi.first != bc.n || xi.charge() != 2 * bc.n - bc.r)
    throw ShapeMismatch("splitting does not match (n, r)");
  const Matrix<Fp> s = schur_product(bc);
  if (!has_skew_blocks(s)) throw ConditionIrViolated("Cᵀ·B⁻¹·C has a Λ²H^∨⊗S²V^∨ component");
  return reassemble(BlockData{bc.b, bc.c, Hyperweb::from_matrix(-s)}, xi);
}

bool BlockQuintuple::well_formed() const {
  if (r > n) return false;
  const std::size_t k = kVDim * (n - r), m = kVDim * r;
  auto sized = [](const Matrix<Fp>& x, std::size_t rows, std::size_t cols) {
    return x.rows() == rows && x.cols() == cols;
  };
  if (!sized(d1, k, k) || !sized(phi, k, k) || !sized(psi, m, k) || !sized(lambda, k, m) ||
      !sized(mu, m, m))
    return false;
  return is_skew(d1) && is_skew(mu) && has_skew_blocks(d1) && has_skew_blocks(mu) &&
         has_skew_blocks(phi) && has_skew_blocks(psi) && has_skew_blocks(lambda);
}

Matrix<Fp> cdc_block(const BlockQuintuple& q) {
  const Matrix<Fp> pt = q.phi.transpose(), st = q.psi.transpose();
  return pt * q.d1 * q.phi + pt * q.lambda * q.psi - st * q.lambda.transpose() * q.phi +
         st * q.mu * q.psi;
}

Matrix<Fp> cdc_direct(const BlockQuintuple& q) {
  const std::size_t k = q.d1.rows(), m = q.mu.rows();
  Matrix<Fp> d(k + m, k + m);
  d.set_block(0, 0, q.d1);
  d.set_block(0, k, q.lambda);
  d.set_block(k, 0, -q.lambda.transpose());
  d.set_block(k, k, q.mu);
  const Matrix<Fp> c = vstack(q.phi, q.psi);
  return c.transpose() * d * c;
}

bool satisfies_cdc_constraint(const BlockQuintuple& q) { return has_skew_blocks(cdc_block(q)); }

BlockQuintuple scaling_curve(const BlockQuintuple& q, Fp t) {
  const Fp t2 = t * t;
  BlockQuintuple out = q;
  out.phi = t2 * q.phi;
  out.psi = t * q.psi;
  out.lambda = t * q.lambda;
  out.mu = t2 * q.mu;
  return out;
}

BlockQuintuple random_quintuple(std::size_t n, std::size_t r, Rng& rng) {
  if (r > n) throw ParameterError("quintuple needs r <= n");
  BlockQuintuple q;
  q.n = n;
  q.r = r;
  q.d1 = Hyperweb::random(n - r, rng).matrix();
  q.phi = random_grid(n - r, n - r, rng).realize();
  q.psi = random_grid(r, n - r, rng).realize();
  q.lambda = random_grid(n - r, r, rng).realize();
  q.mu = Hyperweb::random(r, rng).matrix();
  return q;
}

BlockQuintuple satisfying_quintuple(std::size_t n, std::size_t r, Rng& rng) {
  for (std::size_t attempt = 0; attempt < kRetryBudget; ++attempt) {
    BlockQuintuple q = random_quintuple(n, r, rng);
    const std::size_t lambda_dim = (n - r) * r * kWedgeDim;
    const std::size_t mu_dim = HyperwebCoeffs(r).size();
    const AffineMap constraint = [&](const std::vector<Fp>& u) {
      BlockQuintuple trial = q;
      trial.lambda = grid_matrix_from(n - r, r, u, 0);
      trial.mu = hyperweb_matrix_from(r, u, lambda_dim);
      return block_symmetric_parts(cdc_block(trial));
    };
    const auto u = random_affine_zero(constraint, lambda_dim + mu_dim, rng);
    if (!u) continue;
    q.lambda = grid_matrix_from(n - r, r, *u, 0);
    q.mu = hyperweb_matrix_from(r, *u, lambda_dim);
    return q;
  }
  throw NotFound("no quintuple satisfying the block constraint within budget");
}

BCSample sample_bc(std::size_t n, std::size_t r, BCStrategy strategy, std::uint64_t seed,
                   const BCSampleOptions& options) {
  if (r < 1 || r > n) throw ParameterError("sample_bc needs 1 <= r <= n");
  if (strategy == BCStrategy::Vacuous && n - r > 1)
    throw ParameterError("vacuous strategy needs n - r <= 1");
  const std::size_t big = 2 * n - r;
  BCSample out;
  for (std::size_t attempt = 0; attempt < options.max_attempts; ++attempt) {
    ++out.attempts;
    Rng rng(derive_seed(seed, attempt));
    BCPair bc;
    bc.n = n;
    bc.r = r;
    bc.b = random_invertible(n, rng);
    bc.c = strategy == BCStrategy::Vacuous ? random_grid(n, n - r, rng)
                                           : solve_columns(invert(bc.b.matrix()), n, n - r, rng);
    const std::string tag = "attempt " + std::to_string(attempt) + ": ";
    if (!satisfies_condition_ir(bc)) {
      out.log.push_back(tag + "condition (ir) failed");
      continue;
    }
    const Hyperweb a = assemble_from_bc(bc, Splitting::coordinate(big, n));
    const LinearFormMatrix bx = contract_with_point(bc.b.matrix());
    const LinearFormMatrix cx = contract_with_point(bc.c.realize());
    const std::uint64_t check_seed = derive_seed(seed ^ 0x5bd1e995u, attempt);
    out.rho = quotient_rank_check("rho_BC", hstack(bx, cx), bx, n - r, options.fiber_trials,
                                  options.ext_degree, check_seed);
    out.tau = constant_rank_check("tau_BC", contract_with_point(a.matrix()), big,
                                  options.fiber_trials, options.ext_degree, check_seed);
    if (out.rho->passed && out.tau->passed) {
      out.log.push_back(tag + "accepted");
      out.pair = std::move(bc);
      return out;
    }
    out.log.push_back(tag + (out.rho->passed ? "" : "rho_BC failed; ") +
                      (out.tau->passed ? "" : "tau_BC failed; ") + "resampling");
  }
  out.log.push_back("no candidate within " + std::to_string(options.max_attempts) + " attempts");
  return out;
}

Hyperweb tau_restrict_construct(const Hyperweb& a, const Splitting& xi, std::size_t r_target,
                                std::uint64_t seed) {
  const std::size_t n = xi.first;
  const std::size_t big = a.charge();
  if (xi.charge() != big || big + 1 != 2 * n)
    throw ParameterError("tau restriction needs charge 2n-1 with xi.first = n");
  if (r_target > n || (r_target < 2 && r_target != n))
    throw ParameterError("r_target must be n or lie in [2, n-1]");
  const Matrix<Fp> inc = xi.inclusion();
  if (!restrict_along(a, inc).is_invertible()) throw SingularMatrix("leading block B is singular");
  const std::size_t target = 2 * n - r_target;
  Rng rng(seed);
  for (std::size_t attempt = 0; attempt < kRetryBudget; ++attempt) {
    const Matrix<Fp> tau = hstack(inc, rng.matrix(big, n - r_target));
    if (rank(tau) == target) return restrict_along(a, tau);
  }
  throw NotFound("no injective tau within budget");
}

bool leading_block_nondegenerate(const Hyperweb& d, const Splitting& xi) {
  return restrict_along(d, xi.inclusion()).is_invertible();
}

NondegenerateStats nondegenerate_block_trial(const Hyperweb& d, std::size_t r, std::size_t trials,
                                             std::uint64_t seed) {
  const std::size_t n = d.charge();
  if (r < 1 || r >= n) throw ParameterError("nondegenerate_block_trial needs 1 <= r < n");
  if (!d.is_invertible()) throw SingularMatrix("D must be invertible");
  NondegenerateStats stats;
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng(derive_seed(seed, t));
    ++stats.trials;
    if (!leading_block_nondegenerate(d, Splitting::random(n, n - r, rng))) ++stats.degenerate;
  }
  return stats;
}

}  // namespace instanton
