#include "instanton/hyperweb.hpp"

#include <string>
#include <utility>

#include "instanton/errors.hpp"

namespace instanton {

Hyperweb::Hyperweb(HyperwebCoeffs coeffs)
    : coeffs_(std::move(coeffs)), matrix_(inflate(coeffs_).matrix()) {}

Hyperweb Hyperweb::from_matrix(Matrix<Fp> m) {
  Hyperweb h;
  h.coeffs_ = deflate(SkewTensor::from_matrix(m));
  h.matrix_ = std::move(m);
  return h;
}

Hyperweb Hyperweb::from_grid(const SkewBlockGrid& grid) {
  if (!grid.is_symmetric()) throw NotInSummand("block grid is not symmetric in the H-indices");
  return from_matrix(grid.realize());
}

Hyperweb Hyperweb::zero(std::size_t charge) { return Hyperweb(HyperwebCoeffs(charge)); }

Hyperweb Hyperweb::standard_form() {
  HyperwebCoeffs c(1);
  c.at(0, 0, wedge_index(0, 2)->index) = Fp::one();
  c.at(0, 0, wedge_index(1, 3)->index) = Fp::one();
  return Hyperweb(std::move(c));
}

Hyperweb Hyperweb::random(std::size_t charge, Rng& rng) {
  HyperwebCoeffs c(charge);
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = rng.field();
  return Hyperweb(std::move(c));
}

Hyperweb direct_sum(const Hyperweb& a, const Hyperweb& b) {
  const std::size_t na = a.charge(), nb = b.charge();
  HyperwebCoeffs c(na + nb);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = i; j < na; ++j)
      for (std::size_t p = 0; p < kWedgeDim; ++p) c.at(i, j, p) = a.coeffs().at(i, j, p);
  for (std::size_t i = 0; i < nb; ++i)
    for (std::size_t j = i; j < nb; ++j)
      for (std::size_t p = 0; p < kWedgeDim; ++p) c.at(na + i, na + j, p) = b.coeffs().at(i, j, p);
  return Hyperweb(std::move(c));
}

RankKernel<Fp> rank_and_kernel(const Hyperweb& a) { return rank_kernel(a.matrix()); }

SymplecticQuotient symplectic_quotient(const Hyperweb& a, std::size_t half_rank) {
  const std::size_t n = a.charge();
  const std::size_t expected = 2 * n + 2 * half_rank;
  auto ech = row_reduce(a.matrix());
  const std::size_t r = ech.pivots.size();
  if (r != expected)
    throw RankMismatch("rank(A) = " + std::to_string(r) + ", expected 2N+2r = " +
                       std::to_string(expected));
  SymplecticQuotient q;
  q.w_dim = r;
  q.projection = ech.reduced.block(0, 0, r, a.matrix().cols());
  q.form = Matrix<Fp>(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) q.form(i, j) = a.matrix()(ech.pivots[i], ech.pivots[j]);
  q.kernel_basis = rank_kernel(a.matrix()).kernel;
  return q;
}

Hyperweb restrict_along(const Hyperweb& a, const Matrix<Fp>& tau) {
  if (tau.rows() != a.charge())
    throw ShapeMismatch("tau has " + std::to_string(tau.rows()) + " rows, charge is " +
                        std::to_string(a.charge()));
  if (rank(tau) != tau.cols()) throw NonInjective("tau is not injective");
  const auto lifted = kron_identity(tau, kVDim);
  return Hyperweb::from_matrix(lifted.transpose() * a.matrix() * lifted);
}

Hyperweb gl_act(const Hyperweb& a, const Matrix<Fp>& g) {
  if (!g.is_square() || g.rows() != a.charge())
    throw ShapeMismatch("g must be " + std::to_string(a.charge()) + "x" +
                        std::to_string(a.charge()) + ", got " + g.shape());
  if (!is_invertible(g)) throw SingularMatrix("g is not invertible");
  const auto lifted = kron_identity(g, kVDim);
  return Hyperweb::from_matrix(lifted.transpose() * a.matrix() * lifted);
}

Splitting Splitting::coordinate(std::size_t charge, std::size_t first) {
  if (first > charge) throw ParameterError("splitting: first summand larger than H");
  return {first, Matrix<Fp>::identity(charge)};
}

Splitting Splitting::random(std::size_t charge, std::size_t first, Rng& rng) {
  if (first > charge) throw ParameterError("splitting: first summand larger than H");
  return {first, rng.invertible_matrix(charge)};
}

BlockData block_decompose(const Hyperweb& a, const Splitting& xi) {
  const std::size_t big = a.charge();
  if (xi.charge() != big) throw ShapeMismatch("splitting does not match the charge");
  const std::size_t n = xi.first;
  const Matrix<Fp> adapted = gl_act(a, xi.basis).matrix();
  const std::size_t k = kVDim * n, rest = kVDim * (big - n);
  return {Hyperweb::from_matrix(adapted.block(0, 0, k, k)),
          SkewBlockGrid::from_matrix(adapted.block(0, k, k, rest)),
          Hyperweb::from_matrix(adapted.block(k, k, rest, rest))};
}

Hyperweb reassemble(const BlockData& blocks, const Splitting& xi) {
  const std::size_t n = blocks.b.charge(), m = blocks.a3.charge();
  if (blocks.c.rows() != n || blocks.c.cols() != m || xi.first != n || xi.charge() != n + m)
    throw ShapeMismatch("block shapes do not match the splitting");
  const Matrix<Fp> c = blocks.c.realize();
  Matrix<Fp> adapted(kVDim * (n + m), kVDim * (n + m));
  adapted.set_block(0, 0, blocks.b.matrix());
  adapted.set_block(0, kVDim * n, c);
  adapted.set_block(kVDim * n, 0, -c.transpose());
  adapted.set_block(kVDim * n, kVDim * n, blocks.a3.matrix());
  return gl_act(Hyperweb::from_matrix(std::move(adapted)), invert(xi.basis));
}

}  // namespace instanton
