#include "instanton/graded.hpp"

#include "instanton/errors.hpp"

namespace instanton {

std::size_t graded_dim(int d) {
  if (d < 0) return 0;
  const auto n = static_cast<std::size_t>(d);
  return (n + 1) * (n + 2) * (n + 3) / 6;
}

MonomialBasis::MonomialBasis(int degree) : degree_(degree) {
  if (degree < 0) return;
  for (int e0 = degree; e0 >= 0; --e0)
    for (int e1 = degree - e0; e1 >= 0; --e1)
      for (int e2 = degree - e0 - e1; e2 >= 0; --e2) {
        const Exponents e{e0, e1, e2, degree - e0 - e1 - e2};
        index_.emplace(e, monomials_.size());
        monomials_.push_back(e);
      }
}

LinearFormMatrix LinearFormMatrix::zero(std::size_t rows, std::size_t cols) {
  LinearFormMatrix m;
  for (auto& s : m.slices) s = Matrix<Fp>(rows, cols);
  return m;
}

LinearFormMatrix LinearFormMatrix::transpose() const {
  LinearFormMatrix t;
  for (std::size_t v = 0; v < kVDim; ++v) t.slices[v] = slices[v].transpose();
  return t;
}

LinearFormMatrix operator*(const Matrix<Fp>& left, const LinearFormMatrix& m) {
  LinearFormMatrix out;
  for (std::size_t v = 0; v < kVDim; ++v) out.slices[v] = left * m.slices[v];
  return out;
}

LinearFormMatrix operator*(const LinearFormMatrix& m, const Matrix<Fp>& right) {
  LinearFormMatrix out;
  for (std::size_t v = 0; v < kVDim; ++v) out.slices[v] = m.slices[v] * right;
  return out;
}

LinearFormMatrix hstack(const LinearFormMatrix& a, const LinearFormMatrix& b) {
  LinearFormMatrix out;
  for (std::size_t v = 0; v < kVDim; ++v) out.slices[v] = hstack(a.slices[v], b.slices[v]);
  return out;
}

LinearFormMatrix contract_with_point(const Matrix<Fp>& m) {
  if (m.cols() % kVDim != 0) throw ShapeMismatch("contract_with_point needs 4n columns");
  const std::size_t n = m.cols() / kVDim;
  LinearFormMatrix out = LinearFormMatrix::zero(m.rows(), n);
  for (std::size_t v = 0; v < kVDim; ++v)
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t i = 0; i < n; ++i) out.slices[v](r, i) = m(r, kVDim * i + v);
  return out;
}

Matrix<Fp> graded_multiplication(const LinearFormMatrix& forms, int t) {
  const MonomialBasis src(t), dst(t + 1);
  Matrix<Fp> out(forms.rows() * dst.size(), forms.cols() * src.size());
  for (std::size_t m = 0; m < src.size(); ++m)
    for (std::size_t v = 0; v < kVDim; ++v) {
      auto e = src.exponents(m);
      ++e[v];
      const std::size_t target = dst.index_of(e);
      const auto& slice = forms.slices[v];
      for (std::size_t r = 0; r < forms.rows(); ++r)
        for (std::size_t u = 0; u < forms.cols(); ++u) {
          const Fp s = slice(r, u);
          if (!s.is_zero()) out(r * dst.size() + target, u * src.size() + m) += s;
        }
    }
  return out;
}

}  // namespace instanton
