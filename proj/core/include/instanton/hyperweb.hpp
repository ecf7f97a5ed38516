#pragma once

#include <cstddef>

#include "instanton/field.hpp"
#include "instanton/linalg.hpp"
#include "instanton/matrix.hpp"
#include "instanton/random.hpp"
#include "instanton/tensorspace.hpp"

namespace instanton {

/// A hyperweb of quadrics A ∈ S_N = S²H_N^∨⊗Λ²V^∨, kept both as its
/// coefficient table and as the skew 4N×4N matrix H_N⊗V → H_N^∨⊗V^∨.
///
/// The same type also stores elements of the dual space S²H_N⊗Λ²V; the
/// storage and index symmetries are identical.
class Hyperweb {
 public:
  Hyperweb() = default;
  explicit Hyperweb(HyperwebCoeffs coeffs);

  /// Throws NotInSummand when m has a Λ²H^∨⊗S²V^∨ component.
  static Hyperweb from_matrix(Matrix<Fp> m);
  static Hyperweb from_grid(const SkewBlockGrid& grid);
  static Hyperweb zero(std::size_t charge);
  /// N = 1 and T_{00} = e0∧e2 + e1∧e3, whose matrix is [[0, I], [-I, 0]].
  static Hyperweb standard_form();
  static Hyperweb random(std::size_t charge, Rng& rng);

  std::size_t charge() const { return coeffs_.charge(); }
  const HyperwebCoeffs& coeffs() const { return coeffs_; }
  const Matrix<Fp>& matrix() const { return matrix_; }
  SkewBlockGrid grid() const { return SkewBlockGrid::from_matrix(matrix_); }
  bool is_invertible() const { return instanton::is_invertible(matrix_); }

  friend bool operator==(const Hyperweb& a, const Hyperweb& b) { return a.coeffs_ == b.coeffs_; }

 private:
  HyperwebCoeffs coeffs_;
  Matrix<Fp> matrix_;
};

Hyperweb direct_sum(const Hyperweb& a, const Hyperweb& b);

RankKernel<Fp> rank_and_kernel(const Hyperweb& a);

/// (W_A, c_A, q_A): W_A = (H⊗V)/ker A with the induced nondegenerate skew form.
///
/// With R the nonzero rows of the reduced echelon form of A and P its pivot
/// columns, c_A = R and q_A = A[P, P]; then c_Aᵀ·q_A·c_A = A.
struct SymplecticQuotient {
  std::size_t w_dim = 0;
  Matrix<Fp> projection;    // c_A, w_dim × 4N, surjective
  Matrix<Fp> form;          // q_A, w_dim × w_dim, skew and invertible
  Matrix<Fp> kernel_basis;  // 4N × dim ker A
};

/// Throws RankMismatch unless rank(A) = 2N + 2·half_rank.
SymplecticQuotient symplectic_quotient(const Hyperweb& a, std::size_t half_rank);

/// Pullback (τ⊗1)ᵀ·A·(τ⊗1) along τ: H_{M'} → H_M, given as an M × M' matrix
/// whose columns are the images of the basis of H_{M'}. Throws NonInjective.
Hyperweb restrict_along(const Hyperweb& a, const Matrix<Fp>& tau);

/// Right action of GL(H_N): A ↦ (g⊗1)ᵀ·A·(g⊗1). Throws SingularMatrix.
Hyperweb gl_act(const Hyperweb& a, const Matrix<Fp>& g);

/// A splitting H_N ≅ H_first ⊕ H_{N-first}: the first `first` columns of the
/// invertible `basis` span the first summand, the remaining ones the second.
struct Splitting {
  std::size_t first = 0;
  Matrix<Fp> basis;

  static Splitting coordinate(std::size_t charge, std::size_t first);
  static Splitting random(std::size_t charge, std::size_t first, Rng& rng);

  std::size_t charge() const { return basis.rows(); }
  /// i_ξ: the N × first inclusion of the first summand.
  Matrix<Fp> inclusion() const { return basis.block(0, 0, basis.rows(), first); }
};

/// Blocks of A in a splitting H_N ≅ H_n ⊕ H_{N-n}:
/// A = [[B, C], [-Cᵀ, A3]] in the adapted basis.
struct BlockData {
  Hyperweb b;
  SkewBlockGrid c;  // n × (N-n) grid, the Σ part
  Hyperweb a3;
};

BlockData block_decompose(const Hyperweb& a, const Splitting& xi);
Hyperweb reassemble(const BlockData& blocks, const Splitting& xi);

}  // namespace instanton
