#include "instanton/extension_field.hpp"

#include <array>
#include <string>
#include <utility>

#include "instanton/errors.hpp"

namespace instanton {

namespace {

using Poly = std::vector<Fp>;  // low-first, trimmed

void trim(Poly& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

Poly sub(Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

// Returns (quotient, remainder).
std::pair<Poly, Poly> divmod(Poly a, const Poly& b) {
  trim(a);
  if (b.empty()) throw SingularMatrix("polynomial division by zero");
  if (a.size() < b.size()) return {{}, a};
  Poly q(a.size() - b.size() + 1);
  const Fp lead_inv = b.back().inverse();
  for (std::size_t k = a.size() - 1;; --k) {
    const Fp coef = a[k] * lead_inv;
    q[k - b.size() + 1] = coef;
    if (!coef.is_zero())
      for (std::size_t i = 0; i < b.size(); ++i) a[k - b.size() + 1 + i] -= coef * b[i];
    if (k == b.size() - 1) break;
  }
  trim(a);
  trim(q);
  return {q, a};
}

Poly gcd(Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

Poly monic_from_low(const Poly& low) {
  Poly f = low;
  f.push_back(Fp::one());
  return f;
}

Poly mulmod(const Poly& a, const Poly& b, const Poly& f) { return divmod(mul(a, b), f).second; }

Poly powmod(Poly base, std::uint64_t e, const Poly& f) {
  Poly r{Fp::one()};
  base = divmod(base, f).second;
  while (e) {
    if (e & 1) r = mulmod(r, base, f);
    base = mulmod(base, base, f);
    e >>= 1;
  }
  return r;
}

struct CacheEntry {
  std::uint32_t modulus = 0;
  Poly low;
};

}  // namespace

bool is_irreducible(const std::vector<Fp>& low_coefficients) {
  const std::size_t e = low_coefficients.size();
  if (e == 0) return false;
  if (e == 1) return true;
  const Poly f = monic_from_low(low_coefficients);
  const Poly x{Fp{}, Fp::one()};
  Poly h = x;
  for (std::size_t i = 1; i <= e / 2; ++i) {
    h = powmod(h, Fp::modulus(), f);
    const Poly g = gcd(sub(h, x), f);
    if (g.size() != 1) return false;
  }
  return true;
}

const std::vector<Fp>& irreducible_polynomial(std::size_t e) {
  if (e == 0 || e > kMaxExtensionDegree)
    throw ParameterError("extension degree must lie in [1, 4], got " + std::to_string(e));
  thread_local std::array<CacheEntry, kMaxExtensionDegree + 1> cache;
  CacheEntry& entry = cache[e];
  if (entry.modulus == Fp::modulus()) return entry.low;
  Poly low(e);
  if (e == 1) {
    entry = {Fp::modulus(), low};  // f = x
    return entry.low;
  }
  const std::uint64_t p = Fp::modulus();
  // x^e + a x + b with a in {0, 1} covers every prime seen in practice
  for (std::uint64_t b = 1; b < p; ++b) {
    for (std::uint64_t a = 0; a < 2; ++a) {
      std::fill(low.begin(), low.end(), Fp{});
      low[0] = Fp::from_uint(b);
      low[1] = Fp::from_uint(a);
      if (is_irreducible(low)) {
        entry = {Fp::modulus(), low};
        return entry.low;
      }
    }
  }
  // small primes can miss that shape; walk all monic polynomials instead
  for (std::uint64_t count = 1;; ++count) {
    std::uint64_t rest = count;
    for (auto& c : low) {
      c = Fp::from_uint(rest % p);
      rest /= p;
    }
    if (rest != 0) throw NotFound("no irreducible polynomial of degree " + std::to_string(e));
    if (!low[0].is_zero() && is_irreducible(low)) {
      entry = {Fp::modulus(), low};
      return entry.low;
    }
  }
}

namespace detail {

std::vector<Fp> poly_inverse_mod(const std::vector<Fp>& a_in, const std::vector<Fp>& f_low) {
  const Poly f = monic_from_low(f_low);
  Poly a = a_in;
  trim(a);
  if (a.empty()) throw SingularMatrix("inverse of zero in F_{p^e}");
  // Extended Euclid: track s with s*a ≡ r (mod f).
  Poly r0 = f, r1 = a;
  Poly s0{}, s1{Fp::one()};
  while (!r1.empty()) {
    auto [q, rem] = divmod(r0, r1);
    Poly s2 = sub(s0, mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r0.size() != 1) throw SingularMatrix("element not invertible modulo reducible polynomial");
  const Fp c = r0[0].inverse();
  for (auto& x : s0) x *= c;
  return divmod(s0, f).second;
}

}  // namespace detail

}  // namespace instanton
