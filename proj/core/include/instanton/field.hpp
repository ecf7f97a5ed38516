#pragma once

#include <cstdint>
#include <iosfwd>

namespace instanton {

inline constexpr std::uint32_t kDefaultPrime = 2147483629u;  // 2^31 - 19

namespace detail {
inline std::uint32_t g_modulus = kDefaultPrime;
}

/// Deterministic primality test, exact for all 32-bit inputs.
bool is_prime(std::uint64_t n);

/// Sets the session prime. Must be an odd prime below 2^32. Existing Fp values
/// are not reduced again, so call this before constructing any data.
void set_modulus(std::uint32_t p);

/// Element of F_p for the session prime p. Values are always reduced.
class Fp {
 public:
  constexpr Fp() = default;

  static std::uint32_t modulus() noexcept { return detail::g_modulus; }

  static Fp from_uint(std::uint64_t v) noexcept {
    return Fp(static_cast<std::uint32_t>(v % modulus()), Raw{});
  }
  static Fp from_int(std::int64_t v) noexcept {
    const auto p = static_cast<std::int64_t>(modulus());
    std::int64_t r = v % p;
    if (r < 0) r += p;
    return Fp(static_cast<std::uint32_t>(r), Raw{});
  }
  static Fp one() noexcept { return Fp(1u, Raw{}); }

  std::uint32_t value() const noexcept { return v_; }
  bool is_zero() const noexcept { return v_ == 0; }

  Fp operator+(Fp o) const noexcept {
    std::uint64_t s = std::uint64_t{v_} + o.v_;
    if (s >= modulus()) s -= modulus();
    return Fp(static_cast<std::uint32_t>(s), Raw{});
  }
  Fp operator-(Fp o) const noexcept {
    return v_ >= o.v_ ? Fp(v_ - o.v_, Raw{})
                      : Fp(static_cast<std::uint32_t>(std::uint64_t{v_} + modulus() - o.v_), Raw{});
  }
  Fp operator-() const noexcept { return v_ == 0 ? *this : Fp(modulus() - v_, Raw{}); }
  Fp operator*(Fp o) const noexcept {
    return Fp(static_cast<std::uint32_t>(std::uint64_t{v_} * o.v_ % modulus()), Raw{});
  }
  Fp& operator+=(Fp o) noexcept { return *this = *this + o; }
  Fp& operator-=(Fp o) noexcept { return *this = *this - o; }
  Fp& operator*=(Fp o) noexcept { return *this = *this * o; }

  Fp pow(std::uint64_t e) const noexcept;
  /// Throws SingularMatrix on zero.
  Fp inverse() const;

  friend bool operator==(Fp, Fp) = default;

 private:
  struct Raw {};
  constexpr Fp(std::uint32_t v, Raw) : v_(v) {}
  std::uint32_t v_ = 0;
};

std::ostream& operator<<(std::ostream& os, Fp x);

/// Restores the previous session prime on destruction. Intended for tests.
class ScopedModulus {
 public:
  explicit ScopedModulus(std::uint32_t p) : saved_(Fp::modulus()) { set_modulus(p); }
  ~ScopedModulus() { detail::g_modulus = saved_; }
  ScopedModulus(const ScopedModulus&) = delete;
  ScopedModulus& operator=(const ScopedModulus&) = delete;

 private:
  std::uint32_t saved_;
};

}  // namespace instanton
