#pragma once

#include <cstdint>
#include <random>

#include "instanton/extension_field.hpp"
#include "instanton/field.hpp"
#include "instanton/matrix.hpp"

namespace instanton {

/// splitmix64 mix of (seed, stream); used to give each trial its own stream.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) noexcept;

/// Seeded pseudorandom source. Uses only the raw mt19937_64 output (whose
/// sequence the standard pins down) with explicit rejection sampling, so equal
/// seeds give bit-identical results on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound);

  Fp field() { return Fp::from_uint(below(Fp::modulus())); }
  Fp nonzero_field() { return Fp::from_uint(1 + below(Fp::modulus() - 1)); }

  template <std::size_t E>
  FpExt<E> ext_field() {
    std::array<Fp, E> c;
    for (auto& x : c) x = field();
    return FpExt<E>(c);
  }

  Matrix<Fp> matrix(std::size_t rows, std::size_t cols);
  /// Uniform over invertible n×n matrices (rejection).
  Matrix<Fp> invertible_matrix(std::size_t n);
  /// Uniform over injective rows×cols matrices, rows ≥ cols (rejection).
  Matrix<Fp> injective_matrix(std::size_t rows, std::size_t cols);

 private:
  std::mt19937_64 engine_;
};

}  // namespace instanton
