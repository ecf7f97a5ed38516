#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "instanton/field.hpp"
#include "instanton/matrix.hpp"

// Index conventions shared by the whole library.
//
// H_N ⊗ V is coordinatized by (i, a) with 0 ≤ i < N, 0 ≤ a < 4, flattened to
// 4i + a. Λ²V^∨ uses the pairs a < b in lexicographic order; the k-th pair is
// kWedgePairs[k]. A hyperweb coefficient table lists T_{ij,ab} for i ≤ j and
// a < b in (i, j, a, b) lexicographic order.

namespace instanton {

inline constexpr std::size_t kVDim = 4;
inline constexpr std::size_t kWedgeDim = 6;
inline constexpr std::size_t kSymDim = 10;

inline constexpr std::array<std::pair<std::uint8_t, std::uint8_t>, kWedgeDim> kWedgePairs{
    {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

/// Index of the pair {a, b} (a ≠ b) in kWedgePairs and the sign of (a, b)
/// relative to the ordered pair.
struct WedgeIndex {
  std::size_t index;
  int sign;
};
std::optional<WedgeIndex> wedge_index(std::size_t a, std::size_t b);

struct SpaceDims {
  std::size_t charge;

  std::size_t tensor_dim() const { return kVDim * charge; }                 // dim H⊗V
  std::size_t hyperweb_dim() const { return 3 * charge * (charge + 1); }    // dim S_N
  std::size_t coefficient_count() const { return charge * (charge + 1) / 2 * kWedgeDim; }
  std::size_t alternating_dim() const { return charge * (charge - 1) / 2 * kSymDim; }
};

/// Element of Λ²(H_N^∨⊗V^∨), stored as its skew 4N×4N matrix.
class SkewTensor {
 public:
  SkewTensor() = default;
  /// Throws ShapeMismatch unless square of size 4N, ParameterError unless skew.
  static SkewTensor from_matrix(Matrix<Fp> m);
  static SkewTensor zero(std::size_t charge);

  std::size_t charge() const { return charge_; }
  const Matrix<Fp>& matrix() const { return m_; }
  Fp at(std::size_t i, std::size_t a, std::size_t j, std::size_t b) const {
    return m_(kVDim * i + a, kVDim * j + b);
  }

  friend bool operator==(const SkewTensor&, const SkewTensor&) = default;

 private:
  std::size_t charge_ = 0;
  Matrix<Fp> m_;
};

/// Coefficients of a hyperweb of quadrics, an element of S²H_N^∨⊗Λ²V^∨.
class HyperwebCoeffs {
 public:
  HyperwebCoeffs() = default;
  explicit HyperwebCoeffs(std::size_t charge)
      : charge_(charge), values_(SpaceDims{charge}.coefficient_count()) {}

  std::size_t charge() const { return charge_; }
  std::size_t size() const { return values_.size(); }

  /// Position of (i, j, pair) with i ≤ j in the canonical order.
  std::size_t offset(std::size_t i, std::size_t j, std::size_t pair) const;

  Fp& at(std::size_t i, std::size_t j, std::size_t pair) { return values_[offset(i, j, pair)]; }
  Fp at(std::size_t i, std::size_t j, std::size_t pair) const { return values_[offset(i, j, pair)]; }
  /// T_{ij,ab} for any indices, applying symmetry in (i, j) and skewness in (a, b).
  Fp value(std::size_t i, std::size_t j, std::size_t a, std::size_t b) const;

  Fp& operator[](std::size_t k) { return values_[k]; }
  Fp operator[](std::size_t k) const { return values_[k]; }
  const std::vector<Fp>& values() const { return values_; }

  friend bool operator==(const HyperwebCoeffs&, const HyperwebCoeffs&) = default;

 private:
  std::size_t charge_ = 0;
  std::vector<Fp> values_;
};

struct CanonicalSplit {
  SkewTensor symmetric_part;    // in S²H^∨⊗Λ²V^∨
  SkewTensor alternating_part;  // in Λ²H^∨⊗S²V^∨
};

/// Splits a skew tensor into its two canonical summands by averaging over the
/// swap of the H-indices.
CanonicalSplit project_canonical(const SkewTensor& t);

SkewTensor inflate(const HyperwebCoeffs& h);

/// Throws NotInSummand when the Λ²H^∨⊗S²V^∨ component is nonzero.
HyperwebCoeffs deflate(const SkewTensor& t);

/// True when every 4×4 block of m is skew, i.e. m is a grid of Λ²V elements.
bool has_skew_blocks(const Matrix<Fp>& m);

/// Rectangular grid of Λ²V^∨ coefficients, realized as a 4·rows × 4·cols
/// matrix whose (i, k) block is the skew 4×4 matrix of coefficient (i, k).
/// Holds Σ_{n,r} elements and the blocks of their decompositions.
class SkewBlockGrid {
 public:
  SkewBlockGrid() = default;
  SkewBlockGrid(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), values_(rows * cols * kWedgeDim) {}

  /// Throws NotInSummand when some 4×4 block is not skew.
  static SkewBlockGrid from_matrix(const Matrix<Fp>& m);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Fp& at(std::size_t i, std::size_t k, std::size_t pair) {
    return values_[(i * cols_ + k) * kWedgeDim + pair];
  }
  Fp at(std::size_t i, std::size_t k, std::size_t pair) const {
    return values_[(i * cols_ + k) * kWedgeDim + pair];
  }
  const std::vector<Fp>& values() const { return values_; }
  std::vector<Fp>& values() { return values_; }

  Matrix<Fp> realize() const;
  /// Grid of the matrix transpose (blocks move and change sign).
  SkewBlockGrid transpose() const;
  bool is_symmetric() const;
  bool is_zero() const;

  friend bool operator==(const SkewBlockGrid&, const SkewBlockGrid&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Fp> values_;
};

}  // namespace instanton
