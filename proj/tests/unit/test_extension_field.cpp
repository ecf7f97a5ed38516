#include <doctest.h>

#include "generators.hpp"
#include "instanton/errors.hpp"
#include "instanton/extension_field.hpp"

using namespace instanton;
using instanton::testing::for_cases;

namespace {

template <std::size_t E>
FpExt<E> power(FpExt<E> x, std::uint64_t e) {
  FpExt<E> r = FpExt<E>::one();
  while (e) {
    if (e & 1) r *= x;
    x *= x;
    e >>= 1;
  }
  return r;
}

// degree-e polynomial with the given low coefficients evaluated at x
Fp evaluate_monic(const std::vector<Fp>& low, Fp x) {
  Fp v = Fp::one();
  for (std::size_t k = low.size(); k-- > 0;) v = v * x + low[k];
  return v;
}

bool has_root(const std::vector<Fp>& low) {
  for (std::uint32_t x = 0; x < Fp::modulus(); ++x)
    if (evaluate_monic(low, Fp::from_uint(x)).is_zero()) return true;
  return false;
}

// does the monic quartic x^4 + low have a monic quadratic factor x^2 + s x + t?
bool has_quadratic_factor(const std::vector<Fp>& low) {
  const std::uint32_t p = Fp::modulus();
  for (std::uint32_t s = 0; s < p; ++s)
    for (std::uint32_t t = 0; t < p; ++t) {
      // long division of x^4 + ... by x^2 + s x + t
      std::vector<Fp> rem{low[0], low[1], low[2], low[3], Fp::one()};
      for (int k = 4; k >= 2; --k) {
        const Fp lead = rem[k];
        rem[k] = Fp{};
        rem[k - 1] -= lead * Fp::from_uint(s);
        rem[k - 2] -= lead * Fp::from_uint(t);
      }
      if (rem[0].is_zero() && rem[1].is_zero()) return true;
    }
  return false;
}

template <std::size_t E>
void axioms(std::uint64_t suite) {
  for_cases(suite, 100, [](Rng& rng, std::size_t) {
    const auto a = rng.ext_field<E>(), b = rng.ext_field<E>(), c = rng.ext_field<E>();
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    if (!a.is_zero()) CHECK(a * a.inverse() == FpExt<E>::one());
  });
}

}  // namespace

TEST_CASE("extension arithmetic satisfies the field axioms") {
  axioms<1>(21);
  axioms<2>(22);
  axioms<3>(23);
  axioms<4>(24);
}

TEST_CASE("chosen moduli are irreducible by brute force at small primes") {
  for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u}) {
    ScopedModulus scope(p);
    CAPTURE(p);
    for (std::size_t e = 2; e <= 3; ++e) CHECK_FALSE(has_root(irreducible_polynomial(e)));
    const auto& quartic = irreducible_polynomial(4);
    CHECK_FALSE(has_root(quartic));
    CHECK_FALSE(has_quadratic_factor(quartic));
  }
}

TEST_CASE("Ben-Or agrees with brute force on all monic cubics over F_5") {
  ScopedModulus scope(5);
  for (std::uint32_t a = 0; a < 5; ++a)
    for (std::uint32_t b = 0; b < 5; ++b)
      for (std::uint32_t c = 0; c < 5; ++c) {
        const std::vector<Fp> low{Fp::from_uint(c), Fp::from_uint(b), Fp::from_uint(a)};
        CHECK(is_irreducible(low) == !has_root(low));
      }
}

TEST_CASE("Frobenius fixes every element: x^(p^e) = x") {
  ScopedModulus scope(101);
  for_cases(25, 20, [](Rng& rng, std::size_t) {
    const auto x2 = rng.ext_field<2>();
    CHECK(power(x2, 101ull * 101) == x2);
    const auto x3 = rng.ext_field<3>();
    CHECK(power(x3, 101ull * 101 * 101) == x3);
  });
}

TEST_CASE("the base field embeds as constants") {
  for_cases(26, 50, [](Rng& rng, std::size_t) {
    const Fp a = rng.field(), b = rng.field();
    CHECK(FpExt<3>(a) * FpExt<3>(b) == FpExt<3>(a * b));
    CHECK(FpExt<3>(a) + FpExt<3>(b) == FpExt<3>(a + b));
  });
}

TEST_CASE("zero has no inverse") { CHECK_THROWS_AS(FpExt<2>().inverse(), SingularMatrix); }
