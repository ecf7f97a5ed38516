#include "instanton/random.hpp"

#include <limits>

#include "instanton/linalg.hpp"

namespace instanton {

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) noexcept {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw ParameterError("Rng::below with zero bound");
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % bound;
}

Matrix<Fp> Rng::matrix(std::size_t rows, std::size_t cols) {
  Matrix<Fp> m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = field();
  return m;
}

Matrix<Fp> Rng::invertible_matrix(std::size_t n) {
  for (;;) {
    auto m = matrix(n, n);
    if (rank(m) == n) return m;
  }
}

Matrix<Fp> Rng::injective_matrix(std::size_t rows, std::size_t cols) {
  if (rows < cols) throw ParameterError("no injective " + std::to_string(rows) + "x" +
                                        std::to_string(cols) + " matrix exists");
  for (;;) {
    auto m = matrix(rows, cols);
    if (rank(m) == cols) return m;
  }
}

}  // namespace instanton
