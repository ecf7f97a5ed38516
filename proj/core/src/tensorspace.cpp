#include "instanton/tensorspace.hpp"

#include <string>

#include "instanton/errors.hpp"

namespace instanton {

std::optional<WedgeIndex> wedge_index(std::size_t a, std::size_t b) {
  if (a == b || a >= kVDim || b >= kVDim) return std::nullopt;
  const int sign = a < b ? 1 : -1;
  if (a > b) std::swap(a, b);
  for (std::size_t k = 0; k < kWedgeDim; ++k)
    if (kWedgePairs[k].first == a && kWedgePairs[k].second == b) return WedgeIndex{k, sign};
  return std::nullopt;
}

SkewTensor SkewTensor::from_matrix(Matrix<Fp> m) {
  if (!m.is_square() || m.rows() % kVDim != 0)
    throw ShapeMismatch("skew tensor needs a square 4N matrix, got " + m.shape());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = r; c < m.cols(); ++c)
      if (m(r, c) != -m(c, r)) throw ParameterError("matrix is not skew-symmetric");
  SkewTensor t;
  t.charge_ = m.rows() / kVDim;
  t.m_ = std::move(m);
  return t;
}

SkewTensor SkewTensor::zero(std::size_t charge) {
  SkewTensor t;
  t.charge_ = charge;
  t.m_ = Matrix<Fp>(kVDim * charge, kVDim * charge);
  return t;
}

std::size_t HyperwebCoeffs::offset(std::size_t i, std::size_t j, std::size_t pair) const {
  if (i > j) std::swap(i, j);
  // number of pairs (i', j') with i' < i and i' ≤ j'
  const std::size_t before = i * charge_ - i * (i - 1) / 2;
  return (before + (j - i)) * kWedgeDim + pair;
}

Fp HyperwebCoeffs::value(std::size_t i, std::size_t j, std::size_t a, std::size_t b) const {
  const auto w = wedge_index(a, b);
  if (!w) return Fp{};
  const Fp v = at(i, j, w->index);
  return w->sign > 0 ? v : -v;
}

CanonicalSplit project_canonical(const SkewTensor& t) {
  const std::size_t n = t.charge();
  const Fp half = Fp::from_uint(2).inverse();
  Matrix<Fp> s(kVDim * n, kVDim * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t a = 0; a < kVDim; ++a)
        for (std::size_t b = 0; b < kVDim; ++b)
          s(kVDim * i + a, kVDim * j + b) = half * (t.at(i, a, j, b) + t.at(j, a, i, b));
  Matrix<Fp> l = t.matrix() - s;
  return {SkewTensor::from_matrix(std::move(s)), SkewTensor::from_matrix(std::move(l))};
}

SkewTensor inflate(const HyperwebCoeffs& h) {
  const std::size_t n = h.charge();
  Matrix<Fp> m(kVDim * n, kVDim * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < kWedgeDim; ++k) {
        const Fp v = h.at(i, j, k);
        const auto [a, b] = kWedgePairs[k];
        m(kVDim * i + a, kVDim * j + b) = v;
        m(kVDim * i + b, kVDim * j + a) = -v;
      }
  return SkewTensor::from_matrix(std::move(m));
}

bool has_skew_blocks(const Matrix<Fp>& m) {
  if (m.rows() % kVDim != 0 || m.cols() % kVDim != 0) return false;
  for (std::size_t bi = 0; bi < m.rows(); bi += kVDim)
    for (std::size_t bk = 0; bk < m.cols(); bk += kVDim)
      for (std::size_t a = 0; a < kVDim; ++a)
        for (std::size_t b = a; b < kVDim; ++b)
          if (m(bi + a, bk + b) != -m(bi + b, bk + a)) return false;
  return true;
}

HyperwebCoeffs deflate(const SkewTensor& t) {
  if (!has_skew_blocks(t.matrix()))
    throw NotInSummand("tensor has a nonzero Λ²H^∨⊗S²V^∨ component");
  HyperwebCoeffs h(t.charge());
  for (std::size_t i = 0; i < t.charge(); ++i)
    for (std::size_t j = i; j < t.charge(); ++j)
      for (std::size_t k = 0; k < kWedgeDim; ++k) {
        const auto [a, b] = kWedgePairs[k];
        h.at(i, j, k) = t.at(i, a, j, b);
      }
  return h;
}

SkewBlockGrid SkewBlockGrid::from_matrix(const Matrix<Fp>& m) {
  if (m.rows() % kVDim != 0 || m.cols() % kVDim != 0)
    throw ShapeMismatch("block grid needs dimensions divisible by 4, got " + m.shape());
  if (!has_skew_blocks(m)) throw NotInSummand("matrix has a non-skew 4x4 block");
  SkewBlockGrid g(m.rows() / kVDim, m.cols() / kVDim);
  for (std::size_t i = 0; i < g.rows_; ++i)
    for (std::size_t k = 0; k < g.cols_; ++k)
      for (std::size_t p = 0; p < kWedgeDim; ++p) {
        const auto [a, b] = kWedgePairs[p];
        g.at(i, k, p) = m(kVDim * i + a, kVDim * k + b);
      }
  return g;
}

Matrix<Fp> SkewBlockGrid::realize() const {
  Matrix<Fp> m(kVDim * rows_, kVDim * cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k)
      for (std::size_t p = 0; p < kWedgeDim; ++p) {
        const auto [a, b] = kWedgePairs[p];
        const Fp v = at(i, k, p);
        m(kVDim * i + a, kVDim * k + b) = v;
        m(kVDim * i + b, kVDim * k + a) = -v;
      }
  return m;
}

SkewBlockGrid SkewBlockGrid::transpose() const {
  SkewBlockGrid t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k)
      for (std::size_t p = 0; p < kWedgeDim; ++p) t.at(k, i, p) = -at(i, k, p);
  return t;
}

bool SkewBlockGrid::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = i + 1; k < cols_; ++k)
      for (std::size_t p = 0; p < kWedgeDim; ++p)
        if (at(i, k, p) != at(k, i, p)) return false;
  return true;
}

bool SkewBlockGrid::is_zero() const {
  for (const auto& v : values_)
    if (!v.is_zero()) return false;
  return true;
}

}  // namespace instanton
