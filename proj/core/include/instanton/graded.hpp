#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <vector>

#include "instanton/field.hpp"
#include "instanton/matrix.hpp"
#include "instanton/tensorspace.hpp"

namespace instanton {

/// dim S^d of the polynomial ring in four variables; zero for d < 0.
std::size_t graded_dim(int d);

/// Monomials of degree d in x0..x3, ordered lexicographically by exponent
/// vector with larger powers of x0 first.
class MonomialBasis {
 public:
  using Exponents = std::array<int, kVDim>;

  explicit MonomialBasis(int degree);

  int degree() const { return degree_; }
  std::size_t size() const { return monomials_.size(); }
  const Exponents& exponents(std::size_t k) const { return monomials_[k]; }
  std::size_t index_of(const Exponents& e) const { return index_.at(e); }

 private:
  int degree_;
  std::vector<Exponents> monomials_;
  std::map<Exponents, std::size_t> index_;
};

/// A matrix M(x) = Σ_v x_v · slices[v] whose entries are linear forms on V.
struct LinearFormMatrix {
  std::array<Matrix<Fp>, kVDim> slices;

  std::size_t rows() const { return slices[0].rows(); }
  std::size_t cols() const { return slices[0].cols(); }

  static LinearFormMatrix zero(std::size_t rows, std::size_t cols);

  template <class F>
  Matrix<F> evaluate(const std::array<F, kVDim>& x) const {
    Matrix<F> out(rows(), cols());
    for (std::size_t v = 0; v < kVDim; ++v)
      for (std::size_t r = 0; r < rows(); ++r)
        for (std::size_t c = 0; c < cols(); ++c) {
          const Fp s = slices[v](r, c);
          if (!s.is_zero()) out(r, c) += x[v] * F(s);
        }
    return out;
  }

  LinearFormMatrix transpose() const;
  friend LinearFormMatrix operator*(const Matrix<Fp>& left, const LinearFormMatrix& m);
  friend LinearFormMatrix operator*(const LinearFormMatrix& m, const Matrix<Fp>& right);
  friend bool operator==(const LinearFormMatrix&, const LinearFormMatrix&) = default;
};

/// Horizontal concatenation [a | b].
LinearFormMatrix hstack(const LinearFormMatrix& a, const LinearFormMatrix& b);

/// The linear forms x ↦ M·(I_n ⊗ x): column i is M applied to e_i ⊗ x.
/// M must have 4n columns.
LinearFormMatrix contract_with_point(const Matrix<Fp>& m);

/// Matrix of U⊗S^t → R⊗S^{t+1}, u⊗f ↦ Σ_v slices[v]·u ⊗ x_v f, for a matrix of
/// linear forms R×U. Row index r·dim S^{t+1} + m', column index u·dim S^t + m.
Matrix<Fp> graded_multiplication(const LinearFormMatrix& forms, int t);

}  // namespace instanton
