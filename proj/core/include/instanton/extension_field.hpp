#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "instanton/field.hpp"

namespace instanton {

inline constexpr std::size_t kMaxExtensionDegree = 4;

/// Monic irreducible polynomial of degree e over the session F_p, returned as
/// its low coefficients m_0..m_{e-1} (the leading 1 is implicit). The choice is
/// deterministic: the first x^e + a·x + b in (b, a) order passing Ben-Or's test.
const std::vector<Fp>& irreducible_polynomial(std::size_t e);

/// Ben-Or irreducibility test for a monic polynomial given by its low coefficients.
bool is_irreducible(const std::vector<Fp>& low_coefficients);

/// Element of F_{p^E} = F_p[x]/(f) with f = irreducible_polynomial(E).
template <std::size_t E>
class FpExt {
  static_assert(E >= 1 && E <= kMaxExtensionDegree);

 public:
  constexpr FpExt() = default;
  explicit FpExt(Fp base) { c_[0] = base; }
  explicit FpExt(const std::array<Fp, E>& coefficients) : c_(coefficients) {}

  static FpExt one() { return FpExt(Fp::one()); }
  static constexpr std::size_t degree() { return E; }

  const std::array<Fp, E>& coefficients() const { return c_; }
  bool is_zero() const {
    for (const auto& x : c_)
      if (!x.is_zero()) return false;
    return true;
  }

  FpExt operator+(const FpExt& o) const {
    FpExt r;
    for (std::size_t i = 0; i < E; ++i) r.c_[i] = c_[i] + o.c_[i];
    return r;
  }
  FpExt operator-(const FpExt& o) const {
    FpExt r;
    for (std::size_t i = 0; i < E; ++i) r.c_[i] = c_[i] - o.c_[i];
    return r;
  }
  FpExt operator-() const {
    FpExt r;
    for (std::size_t i = 0; i < E; ++i) r.c_[i] = -c_[i];
    return r;
  }
  FpExt operator*(const FpExt& o) const {
    if constexpr (E == 1) {
      return FpExt(c_[0] * o.c_[0]);
    } else {
      std::array<Fp, 2 * E - 1> prod{};
      for (std::size_t i = 0; i < E; ++i)
        for (std::size_t j = 0; j < E; ++j) prod[i + j] += c_[i] * o.c_[j];
      const auto& m = irreducible_polynomial(E);
      for (std::size_t k = 2 * E - 2; k >= E; --k) {
        const Fp top = prod[k];
        if (top.is_zero()) continue;
        // x^k = x^{k-E} * x^E and x^E = -sum m_i x^i
        for (std::size_t i = 0; i < E; ++i) prod[k - E + i] -= top * m[i];
      }
      FpExt r;
      for (std::size_t i = 0; i < E; ++i) r.c_[i] = prod[i];
      return r;
    }
  }
  FpExt& operator+=(const FpExt& o) { return *this = *this + o; }
  FpExt& operator-=(const FpExt& o) { return *this = *this - o; }
  FpExt& operator*=(const FpExt& o) { return *this = *this * o; }

  /// Throws SingularMatrix on zero.
  FpExt inverse() const;

  friend bool operator==(const FpExt&, const FpExt&) = default;

 private:
  std::array<Fp, E> c_{};
};

namespace detail {
/// Inverse of a nonzero polynomial a modulo the monic irreducible f (both low-first).
std::vector<Fp> poly_inverse_mod(const std::vector<Fp>& a, const std::vector<Fp>& f_low);
}  // namespace detail

template <std::size_t E>
FpExt<E> FpExt<E>::inverse() const {
  if constexpr (E == 1) {
    return FpExt(c_[0].inverse());
  } else {
    std::vector<Fp> a(c_.begin(), c_.end());
    const auto inv = detail::poly_inverse_mod(a, irreducible_polynomial(E));
    FpExt r;
    for (std::size_t i = 0; i < E && i < inv.size(); ++i) r.c_[i] = inv[i];
    return r;
  }
}

}  // namespace instanton
