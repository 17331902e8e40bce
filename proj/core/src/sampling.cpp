#include "vinberg/sampling.hpp"

#include "vinberg/error.hpp"

namespace vinberg {

std::int64_t Sampler::uniform_int(std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(engine_);
}

Scalar Sampler::small_integer(std::int64_t bound) { return Scalar(uniform_int(-bound, bound)); }

Scalar Sampler::small_rational(std::int64_t num_bound, std::int64_t den_bound) {
  const auto num = uniform_int(-num_bound, num_bound);
  const auto den = uniform_int(1, den_bound);
  return Scalar(num, den);
}

Scalar Sampler::nonzero_rational(std::int64_t num_bound, std::int64_t den_bound) {
  for (;;) {
    Scalar s = small_rational(num_bound, den_bound);
    if (!s.is_zero()) return s;
  }
}

Matrix Sampler::integer_matrix(std::size_t rows, std::size_t cols, std::int64_t bound) {
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = small_integer(bound);
  return m;
}

Matrix Sampler::rational_matrix(std::size_t rows, std::size_t cols, std::int64_t num_bound,
                                std::int64_t den_bound) {
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = small_rational(num_bound, den_bound);
  return m;
}

Matrix Sampler::invertible_matrix(std::size_t n, std::int64_t bound) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    Matrix m = integer_matrix(n, n, bound);
    if (rank(m) == n) return m;
  }
  throw CertificationError("could not sample an invertible matrix");
}

}  // namespace vinberg
