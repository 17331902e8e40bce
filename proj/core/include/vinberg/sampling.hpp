#pragma once

#include <cstdint>
#include <random>

#include "vinberg/matrix.hpp"
#include "vinberg/scalar.hpp"

namespace vinberg {

/// Seeded source of small random rationals. Every randomized routine in
/// the library takes an explicit seed and draws through this type.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);
  /// Integer in [-bound, bound].
  Scalar small_integer(std::int64_t bound);
  /// p/q with |p| <= num_bound and 1 <= q <= den_bound.
  Scalar small_rational(std::int64_t num_bound, std::int64_t den_bound);
  Scalar nonzero_rational(std::int64_t num_bound, std::int64_t den_bound);
  Matrix integer_matrix(std::size_t rows, std::size_t cols, std::int64_t bound);
  Matrix rational_matrix(std::size_t rows, std::size_t cols, std::int64_t num_bound,
                         std::int64_t den_bound);
  /// Invertible square matrix with small integer entries; singular draws
  /// are rejected and redrawn.
  Matrix invertible_matrix(std::size_t n, std::int64_t bound);

 private:
  std::mt19937_64 engine_;
};

}  // namespace vinberg
