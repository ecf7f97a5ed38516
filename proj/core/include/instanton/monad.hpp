#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "instanton/graded.hpp"
#include "instanton/hyperweb.hpp"

namespace instanton {

/// The anti-self-dual monad
///   0 → H_N⊗O(-1) --a--> W⊗O --b = aᵀq--> H_N^∨⊗O(1) → 0
/// with a and b stored as matrices of linear forms.
class Monad {
 public:
  /// Validates shapes, skewness and invertibility of q and b∘a = 0; the half
  /// rank is (dim W − 2N)/2. Throws ParameterError / ShapeMismatch.
  static Monad from_parts(LinearFormMatrix a, Matrix<Fp> q);

  std::size_t charge() const { return a_.cols(); }
  std::size_t half_rank() const { return (w_dim() - 2 * charge()) / 2; }
  std::size_t w_dim() const { return q_.rows(); }
  const LinearFormMatrix& a() const { return a_; }
  const LinearFormMatrix& b() const { return b_; }
  const Matrix<Fp>& q() const { return q_; }

 private:
  LinearFormMatrix a_;  // W × N, a(x)·h = c_A(h⊗x)
  LinearFormMatrix b_;  // N × W, b(x) = a(x)ᵀ·q
  Matrix<Fp> q_;
};

/// Throws RankMismatch unless rank(A) = 2N+2r.
Monad build_monad(const Hyperweb& a, std::size_t half_rank);

/// b∘a = 0 coefficientwise as a matrix of quadratic forms.
bool composition_vanishes(const Monad& m);

/// A point of P³ over F_{p^e}; each coordinate is its list of e coefficients.
struct ProjectivePoint {
  std::size_t ext_degree = 1;
  std::array<std::vector<std::uint32_t>, kVDim> coords;
};

struct FiberCheckVerdict {
  std::string condition;
  bool passed = false;
  std::size_t trials = 0;  // points evaluated
  std::size_t required_rank = 0;
  std::optional<ProjectivePoint> witness;  // re-verified exactly when present
  std::size_t witness_rank = 0;
  std::uint32_t prime = 0;
  std::size_t ext_degree = 1;
  std::string note;
};

enum class FiberCondition { AInjective, BSurjective };

/// One-sided check that a(x) is injective (or b(x) surjective) on P³. A
/// failure carries an exact witness point; a pass after `trials` uniformly
/// random points of P³(F_{p^e}) is statistical evidence only.
FiberCheckVerdict fiberwise_rank_check(const Monad& m, FiberCondition which, std::size_t trials,
                                       std::size_t ext_degree, std::uint64_t seed);

/// Same sampling for an arbitrary matrix of linear forms: fails where
/// rank M(x) < required_rank.
FiberCheckVerdict constant_rank_check(std::string name, const LinearFormMatrix& m,
                                      std::size_t required_rank, std::size_t trials,
                                      std::size_t ext_degree, std::uint64_t seed);

/// Fails where rank M(x) − rank S(x) < required_gain, i.e. where the columns
/// of M beyond those of S stop being independent modulo S(x).
FiberCheckVerdict quotient_rank_check(std::string name, const LinearFormMatrix& whole,
                                      const LinearFormMatrix& sub, std::size_t required_gain,
                                      std::size_t trials, std::size_t ext_degree,
                                      std::uint64_t seed);

/// dim H⁰(E) = dim ker(W → H^∨⊗V^∨).
std::size_t h0_global(const Monad& m);

/// h^i(E(t)) for t in [tmin, tmax]; tmin ≥ −4. Twists t ≥ −2 are computed from
/// the graded maps W⊗S^t → H^∨⊗S^{t+1}; lower twists use h^i(E(t)) = h^{3−i}(E(−4−t)).
struct CohomologyTable {
  int tmin = 0;
  int tmax = 0;
  std::vector<std::array<std::size_t, 4>> values;  // values[t - tmin][i]

  std::size_t at(int i, int t) const { return values.at(static_cast<std::size_t>(t - tmin))[i]; }
  friend bool operator==(const CohomologyTable&, const CohomologyTable&) = default;
};

CohomologyTable cohomology_table(const Monad& m, int tmin, int tmax);

/// χ(E(t)) = dim W·χ(O(t)) − N·χ(O(t−1)) − N·χ(O(t+1)).
std::int64_t euler_characteristic(const Monad& m, int t);

/// h¹(E⊗Ω¹) = 4·h¹(E(−1)) − rank(δ), δ: V^∨⊗H¹(E(−1)) → H¹(E) the multiplication
/// map on cokernel coordinates. Requires h⁰(E) = 0 (ParameterError otherwise).
std::size_t h1_tensor_omega(const Monad& m);

struct ChernClasses {
  std::int64_t c1 = 0;
  std::int64_t c2 = 0;
  std::int64_t c3 = 0;
};

/// Chern classes of the monad cohomology, 1/((1−h)^N (1+h)^N) mod h⁴.
ChernClasses chern_check(std::size_t charge);

/// Sections of E_{2n}(B) = coker(H⊗O(−1) → H^∨⊗Ω(1)) for invertible B, from
/// h⁰(E(t)) = N·h⁰(Ω(t+1)) − rank(H⊗S^{t−1} → H^∨⊗V^∨⊗S^t). Throws SingularMatrix.
std::size_t coker_h0(const Hyperweb& b, int t);

struct CokerCohomology {
  std::size_t h0 = 0;          // h⁰(E)
  std::size_t h0_twisted = 0;  // h⁰(E(1))
};
CokerCohomology coker_presentation_cohomology(const Hyperweb& b);

/// Verdict of the commuting-diagram identities between M_B and M_A, with
/// B = A₁(ξ) and w = c_A∘(i_ξ⊗1).
struct DiagramVerdict {
  bool passed = false;
  std::string failure;  // empty when passed
};

/// r is 2·ξ.first − N. Throws SingularMatrix when B is singular.
DiagramVerdict quotient_diagram_check(const Hyperweb& a, const Splitting& xi);

}  // namespace instanton
