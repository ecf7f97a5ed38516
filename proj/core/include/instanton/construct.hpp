#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "instanton/hyperweb.hpp"
#include "instanton/monad.hpp"

namespace instanton {

/// Rejection-samples an invertible hyperweb of charge n ≥ 1. Throws NotFound
/// after the retry budget, ParameterError for n = 0.
Hyperweb sample_invertible(std::size_t n, std::uint64_t seed);

/// Block data (B, C) over H_n ⊕ H_{n−r}: B invertible of charge n, C an
/// n × (n−r) grid.
struct BCPair {
  std::size_t n = 0;
  std::size_t r = 0;
  Hyperweb b;
  SkewBlockGrid c;
};

/// Cᵀ·B⁻¹·C as a 4(n−r) square skew matrix. Throws SingularMatrix.
Matrix<Fp> schur_product(const BCPair& bc);

/// Every 4×4 block of Cᵀ·B⁻¹·C is skew, i.e. its Λ²H^∨⊗S²V^∨ part vanishes.
bool satisfies_condition_ir(const BCPair& bc);

/// The hyperweb with blocks (B, C, −Cᵀ·B⁻¹·C) in the splitting ξ (ξ.first = n,
/// charge 2n−r). Throws SingularMatrix, ConditionIrViolated, ShapeMismatch.
Hyperweb assemble_from_bc(const BCPair& bc, const Splitting& xi);

/// D = [[D1, λ], [−λᵀ, μ]] on H_{n−r} ⊕ H_r and C = [φ; ψ], stored as
/// realized matrices. D1 and μ are hyperweb matrices, φ, ψ, λ skew-block grids.
struct BlockQuintuple {
  std::size_t n = 0;
  std::size_t r = 0;
  Matrix<Fp> d1;      // 4(n−r) × 4(n−r)
  Matrix<Fp> phi;     // 4(n−r) × 4(n−r)
  Matrix<Fp> psi;     // 4r × 4(n−r)
  Matrix<Fp> lambda;  // 4(n−r) × 4r
  Matrix<Fp> mu;      // 4r × 4r

  /// Shapes match and every block lies in its summand.
  bool well_formed() const;
  friend bool operator==(const BlockQuintuple&, const BlockQuintuple&) = default;
};

/// φᵀD1φ + φᵀλψ − ψᵀλᵀφ + ψᵀμψ. Throws ShapeMismatch.
Matrix<Fp> cdc_block(const BlockQuintuple& q);
/// Cᵀ·D·C with C and D assembled from the blocks.
Matrix<Fp> cdc_direct(const BlockQuintuple& q);
/// Cᵀ·D·C has skew 4×4 blocks.
bool satisfies_cdc_constraint(const BlockQuintuple& q);
/// (D1, t²φ, tψ, tλ, t²μ). All four terms of Cᵀ·D·C scale by t⁴.
BlockQuintuple scaling_curve(const BlockQuintuple& q, Fp t);

BlockQuintuple random_quintuple(std::size_t n, std::size_t r, Rng& rng);
/// Random D1, φ, ψ, then (λ, μ) uniform on the affine solution space of the
/// constraint. Throws NotFound if the retry budget runs out.
BlockQuintuple satisfying_quintuple(std::size_t n, std::size_t r, Rng& rng);

enum class BCStrategy {
  Vacuous,  // n − r ≤ 1, any C satisfies (ir)
  Ansatz,   // columns of C solved one at a time against the (ir) equations
};

struct BCSampleOptions {
  std::size_t max_attempts = 20;
  std::size_t fiber_trials = 300;
  std::size_t ext_degree = 2;
};

/// Outcome of sample_bc. `pair` is empty when no candidate passed within the
/// budget; the verdicts belong to the last candidate examined.
struct BCSample {
  std::optional<BCPair> pair;
  std::optional<FiberCheckVerdict> rho;  // [B(x) | C(x)] mod B(x) has rank n−r
  std::optional<FiberCheckVerdict> tau;  // assembled A(x) has rank 2n−r
  std::size_t attempts = 0;
  std::vector<std::string> log;
};

/// Requires 1 ≤ r ≤ n, and n − r ≤ 1 for Vacuous (ParameterError).
BCSample sample_bc(std::size_t n, std::size_t r, BCStrategy strategy, std::uint64_t seed,
                   const BCSampleOptions& options = {});

/// Restriction of A (charge 2n−1, ξ.first = n) along τ = [i_ξ | R] with R a
/// random N × (n − r_target) block, giving charge 2n − r_target. Needs
/// restrict(A, i_ξ) invertible and r_target = n or 2 ≤ r_target < n.
Hyperweb tau_restrict_construct(const Hyperweb& a, const Splitting& xi, std::size_t r_target,
                                std::uint64_t seed);

/// Is the leading (first) block of D in the splitting invertible?
bool leading_block_nondegenerate(const Hyperweb& d, const Splitting& xi);

struct NondegenerateStats {
  std::size_t trials = 0;
  std::size_t degenerate = 0;
  double nondegenerate_fraction() const {
    return trials == 0 ? 1.0 : 1.0 - static_cast<double>(degenerate) / static_cast<double>(trials);
  }
};

/// Random splittings H_n ≅ H_{n−r} ⊕ H_r; counts singular leading blocks.
/// Throws SingularMatrix unless D is invertible, ParameterError unless 1 ≤ r < n.
NondegenerateStats nondegenerate_block_trial(const Hyperweb& d, std::size_t r, std::size_t trials,
                                             std::uint64_t seed);

}  // namespace instanton
