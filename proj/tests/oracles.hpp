#pragma once

// Independent reference computations used only by the tests. None of them
// share code paths with the library routines they check.

#include <cstddef>
#include <vector>

#include "vinberg/graded_lie.hpp"
#include "vinberg/matrix.hpp"
#include "vinberg/poly.hpp"
#include "vinberg/scalar.hpp"

namespace oracle {

using vinberg::Matrix;
using vinberg::Poly;
using vinberg::Scalar;

// Product by the defining sum, no sparsity shortcuts.
inline Matrix matmul(const Matrix& a, const Matrix& b) {
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Scalar s;
      for (std::size_t k = 0; k < a.cols(); ++k) s += a(i, k) * b(k, j);
      c(i, j) = s;
    }
  return c;
}

// Laplace expansion along the first row.
inline Scalar det(const Matrix& a) {
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  if (n == 1) return a(0, 0);
  Scalar out;
  for (std::size_t j = 0; j < n; ++j) {
    if (a(0, j).is_zero()) continue;
    Matrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t c = 0, cc = 0; c < n; ++c)
        if (c != j) minor(r - 1, cc++) = a(r, c);
    const Scalar term = a(0, j) * det(minor);
    if (j % 2 == 0) out += term; else out -= term;
  }
  return out;
}

// det(x I - a) at x = 0..n, then Newton interpolation.
inline Poly charpoly(const Matrix& a) {
  const std::size_t n = a.rows();
  std::vector<Scalar> xs, ys;
  for (std::size_t t = 0; t <= n; ++t) {
    Matrix m = Matrix::identity(n) * Scalar(static_cast<long>(t)) - a;
    xs.emplace_back(static_cast<long>(t));
    ys.push_back(det(m));
  }
  std::vector<Scalar> coef = ys;
  for (std::size_t j = 1; j <= n; ++j)
    for (std::size_t i = n; i >= j; --i) {
      coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j]);
      if (i == j) break;
    }
  Poly p = Poly::constant(coef[n]);
  for (std::size_t i = n; i-- > 0;) p = p * (Poly::monomial(Scalar(1), 1) - Poly::constant(xs[i])) + Poly::constant(coef[i]);
  return p;
}

// Cyclic-quiver component dimension: sum_j n_j n_{j+i} - [i = 0].
inline std::size_t quiver_dim(const std::vector<int>& dims, int i) {
  const int m = static_cast<int>(dims.size());
  std::size_t s = 0;
  for (int j = 0; j < m; ++j) s += static_cast<std::size_t>(dims[j] * dims[(j + i) % m]);
  return i == 0 ? s - 1 : s;
}

// Brute-force enumeration: elementary E_ab sorted by (block(a) - block(b)) mod m,
// plus the diagonal Cartan elements E_aa - E_{a+1,a+1} in g_0.
inline std::vector<std::vector<Matrix>> enumerate_quiver(const std::vector<int>& dims) {
  const int m = static_cast<int>(dims.size());
  std::vector<int> block;
  for (int b = 0; b < m; ++b)
    for (int t = 0; t < dims[b]; ++t) block.push_back(b);
  const std::size_t n = block.size();
  std::vector<std::vector<Matrix>> out(static_cast<std::size_t>(m));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (a != b) out[static_cast<std::size_t>(((block[a] - block[b]) % m + m) % m)].push_back(Matrix::unit(n, n, a, b));
  for (std::size_t a = 0; a + 1 < n; ++a) {
    Matrix h(n, n);
    h(a, a) = 1;
    h(a + 1, a + 1) = -1;
    out[0].push_back(h);
  }
  return out;
}

// All dims profiles with m blocks, entries >= lo, total n in [2, max_n].
inline std::vector<std::vector<int>> profiles(int m, int max_n, int lo = 0) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(static_cast<std::size_t>(m), lo);
  while (true) {
    int n = 0;
    for (int v : cur) n += v;
    if (n >= 2 && n <= max_n) out.push_back(cur);
    std::size_t pos = 0;
    while (pos < cur.size()) {
      if (++cur[pos] <= max_n) break;
      cur[pos++] = lo;
    }
    if (pos == cur.size()) break;
  }
  return out;
}

}  // namespace oracle
