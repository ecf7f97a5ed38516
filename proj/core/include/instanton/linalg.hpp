#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "instanton/matrix.hpp"

namespace instanton {

template <class F>
struct Echelon {
  Matrix<F> reduced;                // reduced row echelon form, same shape as input
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

/// Gauss-Jordan elimination. The pivot of each step is the first row (from the
/// current one down) with a nonzero entry in the leftmost remaining column, so
/// results are reproducible bit for bit.
template <class F>
Echelon<F> row_reduce(Matrix<F> m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t sel = row;
    while (sel < m.rows() && m(sel, col).is_zero()) ++sel;
    if (sel == m.rows()) continue;
    if (sel != row)
      for (std::size_t c = col; c < m.cols(); ++c) std::swap(m(sel, c), m(row, c));
    const F inv = m(row, col).inverse();
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row) continue;
      const F factor = m(r, col);
      if (factor.is_zero()) continue;
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= factor * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

/// Rank by forward elimination only.
template <class F>
std::size_t rank(Matrix<F> m) {
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t sel = row;
    while (sel < m.rows() && m(sel, col).is_zero()) ++sel;
    if (sel == m.rows()) continue;
    if (sel != row)
      for (std::size_t c = col; c < m.cols(); ++c) std::swap(m(sel, c), m(row, c));
    const F inv = m(row, col).inverse();
    for (std::size_t r = row + 1; r < m.rows(); ++r) {
      const F factor = m(r, col) * inv;
      if (factor.is_zero()) continue;
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= factor * m(row, c);
    }
    ++row;
  }
  return row;
}

template <class F>
struct RankKernel {
  std::size_t rank = 0;
  Matrix<F> kernel;  // cols x (cols - rank); columns form a basis of ker M
};

/// Kernel basis read off the reduced echelon form: one column per free
/// variable, with a 1 in that variable's slot.
template <class F>
RankKernel<F> rank_kernel(const Matrix<F>& m) {
  const auto ech = row_reduce(m);
  const std::size_t n = m.cols();
  const std::size_t r = ech.pivots.size();
  std::vector<bool> is_pivot(n, false);
  for (auto p : ech.pivots) is_pivot[p] = true;
  Matrix<F> kernel(n, n - r);
  std::size_t k = 0;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    kernel(free, k) = F::one();
    for (std::size_t i = 0; i < r; ++i) kernel(ech.pivots[i], k) = -ech.reduced(i, free);
    ++k;
  }
  return {r, std::move(kernel)};
}

template <class F>
bool is_invertible(const Matrix<F>& m) {
  return m.is_square() && rank(m) == m.rows();
}

/// Throws SingularMatrix when rank < size.
template <class F>
Matrix<F> invert(const Matrix<F>& m) {
  if (!m.is_square()) throw ShapeMismatch("invert of non-square " + m.shape());
  const std::size_t n = m.rows();
  auto ech = row_reduce(hstack(m, Matrix<F>::identity(n)));
  if (ech.pivots.size() < n || (n > 0 && ech.pivots[n - 1] != n - 1))
    throw SingularMatrix("matrix of size " + std::to_string(n) + " is singular");
  return ech.reduced.block(0, n, n, n);
}

/// One solution x of M·x = b (b may have several columns), or nullopt.
/// Free variables are set to zero.
template <class F>
std::optional<Matrix<F>> solve(const Matrix<F>& m, const Matrix<F>& b) {
  if (m.rows() != b.rows()) throw ShapeMismatch("solve with " + m.shape() + " and rhs " + b.shape());
  const std::size_t n = m.cols();
  const auto ech = row_reduce(hstack(m, b));
  Matrix<F> x(n, b.cols());
  for (std::size_t i = 0; i < ech.pivots.size(); ++i) {
    const std::size_t p = ech.pivots[i];
    if (p >= n) return std::nullopt;  // pivot in the augmented part
    for (std::size_t j = 0; j < b.cols(); ++j) x(p, j) = ech.reduced(i, n + j);
  }
  return x;
}

}  // namespace instanton
