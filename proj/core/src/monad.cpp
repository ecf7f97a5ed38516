#include "instanton/monad.hpp"

#include <map>
#include <sstream>

#include "instanton/errors.hpp"
#include "instanton/extension_field.hpp"
#include "instanton/linalg.hpp"
#include "instanton/random.hpp"

namespace instanton {

namespace {

bool is_skew(const Matrix<Fp>& m) {
  if (!m.is_square()) return false;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i; j < m.cols(); ++j)
      if (m(i, j) != -m(j, i)) return false;
  return true;
}

bool quadratic_product_vanishes(const LinearFormMatrix& left, const LinearFormMatrix& right) {
  // coefficient of x_u x_v in left(x)·right(x)
  for (std::size_t u = 0; u < kVDim; ++u)
    for (std::size_t v = u; v < kVDim; ++v) {
      Matrix<Fp> c = left.slices[u] * right.slices[v];
      if (u != v) c += left.slices[v] * right.slices[u];
      if (!c.is_zero()) return false;
    }
  return true;
}

template <std::size_t E>
std::array<FpExt<E>, kVDim> sample_point(Rng& rng) {
  for (;;) {
    std::array<FpExt<E>, kVDim> x;
    bool nonzero = false;
    for (auto& c : x) {
      c = rng.ext_field<E>();
      nonzero = nonzero || !c.is_zero();
    }
    if (nonzero) return x;
  }
}

template <std::size_t E>
ProjectivePoint encode(const std::array<FpExt<E>, kVDim>& x) {
  ProjectivePoint p;
  p.ext_degree = E;
  for (std::size_t v = 0; v < kVDim; ++v)
    for (const Fp& c : x[v].coefficients()) p.coords[v].push_back(c.value());
  return p;
}

template <std::size_t E>
std::array<FpExt<E>, kVDim> decode(const ProjectivePoint& p) {
  std::array<FpExt<E>, kVDim> x;
  for (std::size_t v = 0; v < kVDim; ++v) {
    std::array<Fp, E> c;
    for (std::size_t k = 0; k < E; ++k) c[k] = Fp::from_uint(p.coords[v].at(k));
    x[v] = FpExt<E>(c);
  }
  return x;
}

template <std::size_t E, class Probe>
void run_trials(FiberCheckVerdict& verdict, std::size_t trials, std::uint64_t seed, Probe& probe) {
  // trials are independent streams; the first failing index wins
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng(derive_seed(seed, t));
    const auto x = sample_point<E>(rng);
    ++verdict.trials;
    if (probe(x) >= verdict.required_rank) continue;
    const auto witness = encode<E>(x);
    const std::size_t again = probe(decode<E>(witness));
    if (again >= verdict.required_rank)
      throw Error("fiber check witness did not re-verify");  // would be an internal bug
    verdict.witness = witness;
    verdict.witness_rank = again;
    verdict.passed = false;
    return;
  }
  verdict.passed = true;
}

template <class Probe>
FiberCheckVerdict run_check(std::string name, std::size_t required, std::size_t trials,
                            std::size_t ext_degree, std::uint64_t seed, Probe probe) {
  FiberCheckVerdict verdict;
  verdict.condition = std::move(name);
  verdict.required_rank = required;
  verdict.prime = Fp::modulus();
  verdict.ext_degree = ext_degree;
  switch (ext_degree) {
    case 1: run_trials<1>(verdict, trials, seed, probe); break;
    case 2: run_trials<2>(verdict, trials, seed, probe); break;
    case 3: run_trials<3>(verdict, trials, seed, probe); break;
    case 4: run_trials<4>(verdict, trials, seed, probe); break;
    default:
      throw ParameterError("extension degree must be in [1, 4], got " + std::to_string(ext_degree));
  }
  std::ostringstream note;
  if (verdict.passed)
    note << "no rank drop at " << verdict.trials << " uniform points of P^3(F_{p^" << ext_degree
         << "}), p = " << verdict.prime << "; statistical evidence, not a proof";
  else
    note << "rank " << verdict.witness_rank << " < " << required << " at an exact witness point (trial "
         << verdict.trials - 1 << ")";
  verdict.note = note.str();
  return verdict;
}

// Indices of standard basis vectors completing the column space of m; greedy
// in index order via the pivots of [m | I].
std::vector<std::size_t> cokernel_basis_indices(const Matrix<Fp>& m) {
  const std::size_t rows = m.rows();
  const auto ech = row_reduce(hstack(m, Matrix<Fp>::identity(rows)));
  std::vector<std::size_t> out;
  for (auto p : ech.pivots)
    if (p >= m.cols()) out.push_back(p - m.cols());
  return out;
}

std::array<std::size_t, 4> direct_row(const Monad& m, int t) {
  const std::size_t n = m.charge();
  const std::size_t w = m.w_dim();
  const std::size_t rank_b = rank(graded_multiplication(m.b(), t));
  const std::size_t rank_a = rank(graded_multiplication(m.a(), t - 1));
  const std::size_t kernel_b = w * graded_dim(t) - rank_b;
  // im(a_t) ⊂ ker(b_t) since b∘a = 0
  return {kernel_b - rank_a, n * graded_dim(t + 1) - rank_b, 0, 0};
}

std::int64_t chi_line(int d) {
  const std::int64_t x = d;
  return (x + 1) * (x + 2) * (x + 3) / 6;
}

LinearFormMatrix euler_forms() {
  LinearFormMatrix e = LinearFormMatrix::zero(1, kVDim);
  for (std::size_t v = 0; v < kVDim; ++v) e.slices[v](0, v) = Fp::one();
  return e;
}

}  // namespace

Monad Monad::from_parts(LinearFormMatrix a, Matrix<Fp> q) {
  if (!q.is_square() || a.rows() != q.rows())
    throw ShapeMismatch("monad parts: a is " + std::to_string(a.rows()) + "x" +
                        std::to_string(a.cols()) + ", q is " + q.shape());
  if (!is_skew(q)) throw ParameterError("monad form q is not skew");
  if (!is_invertible(q)) throw ParameterError("monad form q is degenerate");
  if (q.rows() < 2 * a.cols())
    throw ParameterError("monad middle term smaller than 2N");
  Monad m;
  m.b_ = a.transpose() * q;
  m.a_ = std::move(a);
  m.q_ = std::move(q);
  if (!composition_vanishes(m)) throw ParameterError("monad composition b∘a is nonzero");
  return m;
}

Monad build_monad(const Hyperweb& a, std::size_t half_rank) {
  const auto sq = symplectic_quotient(a, half_rank);
  return Monad::from_parts(contract_with_point(sq.projection), sq.form);
}

bool composition_vanishes(const Monad& m) { return quadratic_product_vanishes(m.b(), m.a()); }

FiberCheckVerdict constant_rank_check(std::string name, const LinearFormMatrix& m,
                                      std::size_t required_rank, std::size_t trials,
                                      std::size_t ext_degree, std::uint64_t seed) {
  return run_check(std::move(name), required_rank, trials, ext_degree, seed,
                   [&m](const auto& x) { return rank(m.evaluate(x)); });
}

FiberCheckVerdict quotient_rank_check(std::string name, const LinearFormMatrix& whole,
                                      const LinearFormMatrix& sub, std::size_t required_gain,
                                      std::size_t trials, std::size_t ext_degree,
                                      std::uint64_t seed) {
  if (whole.rows() != sub.rows()) throw ShapeMismatch("quotient_rank_check row counts differ");
  return run_check(std::move(name), required_gain, trials, ext_degree, seed, [&](const auto& x) {
    return rank(whole.evaluate(x)) - rank(sub.evaluate(x));
  });
}

FiberCheckVerdict fiberwise_rank_check(const Monad& m, FiberCondition which, std::size_t trials,
                                       std::size_t ext_degree, std::uint64_t seed) {
  if (which == FiberCondition::AInjective)
    return constant_rank_check("a injective", m.a(), m.charge(), trials, ext_degree, seed);
  return constant_rank_check("b surjective", m.b(), m.charge(), trials, ext_degree, seed);
}

std::size_t h0_global(const Monad& m) {
  return m.w_dim() - rank(graded_multiplication(m.b(), 0));
}

CohomologyTable cohomology_table(const Monad& m, int tmin, int tmax) {
  if (tmin < -4) throw ParameterError("tmin must be at least -4");
  if (tmin > tmax) throw ParameterError("tmin > tmax");
  std::map<int, std::array<std::size_t, 4>> direct;
  auto row = [&](int t) -> const std::array<std::size_t, 4>& {
    auto it = direct.find(t);
    if (it == direct.end()) it = direct.emplace(t, direct_row(m, t)).first;
    return it->second;
  };
  CohomologyTable table;
  table.tmin = tmin;
  table.tmax = tmax;
  for (int t = tmin; t <= tmax; ++t) {
    if (t >= -2) {
      table.values.push_back(row(t));
    } else {
      const auto& dual = row(-4 - t);
      table.values.push_back({dual[3], dual[2], dual[1], dual[0]});
    }
  }
  return table;
}

std::int64_t euler_characteristic(const Monad& m, int t) {
  const auto n = static_cast<std::int64_t>(m.charge());
  const auto w = static_cast<std::int64_t>(m.w_dim());
  return w * chi_line(t) - n * chi_line(t - 1) - n * chi_line(t + 1);
}

std::size_t h1_tensor_omega(const Monad& m) {
  if (h0_global(m) != 0) throw ParameterError("h1_tensor_omega needs h0(E) = 0");
  const std::size_t n = m.charge();
  // H¹(E(t)) = coker(W⊗S^t → H^∨⊗S^{t+1}), represented by standard basis vectors
  const auto reps = cokernel_basis_indices(graded_multiplication(m.b(), -1));
  const Matrix<Fp> target = graded_multiplication(m.b(), 0);
  const MonomialBasis src(0), dst(1);
  Matrix<Fp> images(n * dst.size(), kVDim * reps.size());
  for (std::size_t k = 0; k < reps.size(); ++k) {
    const std::size_t i = reps[k] / src.size();
    const auto& e = src.exponents(reps[k] % src.size());
    for (std::size_t v = 0; v < kVDim; ++v) {
      auto shifted = e;
      ++shifted[v];
      images(i * dst.size() + dst.index_of(shifted), kVDim * k + v) = Fp::one();
    }
  }
  const std::size_t rank_delta = rank(hstack(target, images)) - rank(target);
  return kVDim * reps.size() - rank_delta;
}

ChernClasses chern_check(std::size_t charge) {
  // c(E) = c(W⊗O) / (c(H⊗O(-1)) · c(H^∨⊗O(1))), truncated after h³
  constexpr std::size_t kLen = 4;
  using Series = std::array<std::int64_t, kLen>;
  auto mul = [](const Series& a, const Series& b) {
    Series c{};
    for (std::size_t i = 0; i < kLen; ++i)
      for (std::size_t j = 0; i + j < kLen; ++j) c[i + j] += a[i] * b[j];
    return c;
  };
  Series denom{1, 0, 0, 0};
  for (std::size_t k = 0; k < charge; ++k) {
    denom = mul(denom, Series{1, -1, 0, 0});
    denom = mul(denom, Series{1, 1, 0, 0});
  }
  Series inv{1, 0, 0, 0};
  for (std::size_t k = 1; k < kLen; ++k) {
    std::int64_t s = 0;
    for (std::size_t j = 1; j <= k; ++j) s += denom[j] * inv[k - j];
    inv[k] = -s;
  }
  return {inv[1], inv[2], inv[3]};
}

std::size_t coker_h0(const Hyperweb& b, int t) {
  if (!b.is_invertible()) throw SingularMatrix("coker presentation needs an invertible hyperweb");
  const std::size_t n = b.charge();
  const std::size_t omega = kVDim * graded_dim(t) - rank(graded_multiplication(euler_forms(), t));
  const std::size_t rank_a = rank(graded_multiplication(contract_with_point(b.matrix()), t - 1));
  return n * omega - rank_a;
}

CokerCohomology coker_presentation_cohomology(const Hyperweb& b) {
  return {coker_h0(b, 0), coker_h0(b, 1)};
}

DiagramVerdict quotient_diagram_check(const Hyperweb& a, const Splitting& xi) {
  const std::size_t big = a.charge();
  const std::size_t n = xi.first;
  if (xi.charge() != big) throw ShapeMismatch("splitting charge differs from hyperweb charge");
  if (2 * n < big || n > big) throw ParameterError("splitting must satisfy N ≤ 2n and n ≤ N");
  const std::size_t r = 2 * n - big;
  const Hyperweb b = restrict_along(a, xi.inclusion());
  if (!b.is_invertible()) throw SingularMatrix("leading block B is singular");

  DiagramVerdict verdict;
  Monad ma, mb;
  SymplecticQuotient qa;
  try {
    qa = symplectic_quotient(a, r);
    ma = build_monad(a, r);
  } catch (const RankMismatch& e) {
    verdict.failure = std::string("no monad for A: ") + e.what();
    return verdict;
  }
  mb = build_monad(b, n);
  const Matrix<Fp> inc = xi.inclusion();
  const Matrix<Fp> w = qa.projection * kron_identity(inc, kVDim);
  if (!is_invertible(w)) {
    verdict.failure = "w = c_A(i⊗1) is not invertible";
    return verdict;
  }
  if (w.transpose() * ma.q() * w != mb.q()) {
    verdict.failure = "wᵀ q_A w differs from q_B";
    return verdict;
  }
  if (ma.a() * inc != w * mb.a()) {
    verdict.failure = "a_A∘i differs from w∘a_B";
    return verdict;
  }
  if (inc.transpose() * ma.b() * w != mb.b()) {
    verdict.failure = "iᵀ∘b_A∘w differs from b_B";
    return verdict;
  }
  verdict.passed = true;
  return verdict;
}

}  // namespace instanton
