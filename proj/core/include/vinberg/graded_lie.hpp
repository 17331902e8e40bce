#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "vinberg/matrix.hpp"
#include "vinberg/sampling.hpp"
#include "vinberg/scalar.hpp"

namespace vinberg {

/// Dimensions of a Z/m-graded vector space V = V_0 + ... + V_{m-1}.
struct GradedDims {
  int m = 1;
  std::vector<int> dims;

  GradedDims() = default;
  GradedDims(int modulus, std::vector<int> block_dims) : m(modulus), dims(std::move(block_dims)) {}
  /// Profile with m = dims.size().
  explicit GradedDims(std::vector<int> block_dims);

  std::size_t n() const;
  /// Throws ValidationError unless m >= 1, dims has m nonnegative entries
  /// and n >= 2.
  void validate() const;
  bool full_support() const;
  int min_dim() const;
  /// First coordinate of each block.
  std::vector<std::size_t> offsets() const;
  /// Block containing each coordinate 0..n-1.
  std::vector<int> block_of_coordinate() const;
  std::string str() const;

  friend bool operator==(const GradedDims&, const GradedDims&) = default;
};

/// Basis of sl(n): elementary E_ab in lexicographic (a, b) order, with the
/// slot (k, k) holding H_k = E_kk - E_{k+1,k+1} for k < n - 1.
std::vector<Matrix> sl_basis(std::size_t n);

/// A Higgs-field value in g_1 of a cyclic quiver grading: f_i : V_i -> V_{i+1},
/// stored as an n_{i+1} x n_i matrix.
struct QuiverPoint {
  std::vector<Matrix> maps;
  friend bool operator==(const QuiverPoint&, const QuiverPoint&) = default;
};

/// Throws DimensionError when the map shapes do not match the profile.
void check_shape(const GradedDims& d, const QuiverPoint& phi);
/// The n x n block-cyclic matrix with f_i in block (i+1, i).
Matrix assemble(const GradedDims& d, const QuiverPoint& phi);
/// Reads the (i+1, i) blocks of an n x n matrix.
QuiverPoint extract_quiver_point(const GradedDims& d, const Matrix& x);
QuiverPoint zero_quiver_point(const GradedDims& d);
QuiverPoint random_quiver_point(const GradedDims& d, Sampler& rng, std::int64_t bound = 3);

/// A Z/m-grading sl(n) = g_0 + ... + g_{m-1} with an explicit basis of each
/// component. Immutable once built.
class CyclicGrading {
 public:
  /// block_table[A * m + B] is the grading index of Hom(V_B, V_A), i.e. of
  /// the matrix block in row-block A and column-block B.
  CyclicGrading(GradedDims source, std::vector<std::vector<Matrix>> components,
                std::vector<int> block_table);

  const GradedDims& source() const { return source_; }
  int m() const { return source_.m; }
  std::size_t n() const { return source_.n(); }
  const std::vector<Matrix>& component(int i) const;
  const std::vector<std::vector<Matrix>>& components() const { return components_; }
  std::vector<std::size_t> component_dims() const;
  int block_index(std::size_t row_block, std::size_t col_block) const;
  /// Component of x in g_i, read off from the block structure. Diagonal
  /// entries belong to the component of the diagonal blocks.
  Matrix project(const Matrix& x, int i) const;

 private:
  GradedDims source_;
  std::vector<std::vector<Matrix>> components_;
  std::vector<int> block_table_;
};

/// g_i = traceless matrices sending each V_j into V_{j+i}.
/// Throws ValidationError when n < 2.
CyclicGrading build_cyclic_quiver_grading(const GradedDims& d);

struct BracketFailure {
  int i = 0;
  int j = 0;
  std::size_t first = 0;   // index into component i
  std::size_t second = 0;  // index into component j
};

struct GradingReport {
  bool passed = false;
  bool dimension_ok = false;
  bool traceless_ok = false;
  bool direct_sum_ok = false;
  std::size_t total_dim = 0;
  std::size_t expected_dim = 0;
  /// checked[i][j] / failed[i][j]: bracket pairs between g_i and g_j.
  std::vector<std::vector<std::size_t>> checked;
  std::vector<std::vector<std::size_t>> failed;
  std::vector<BracketFailure> failures;
};

/// Brackets every pair of basis elements and tests [g_i, g_j] in g_{i+j}
/// by span membership, independent of how the grading was built.
GradingReport verify_grading(const CyclicGrading& gr);

/// Z-grading of sl(n) by a diagonal grading element zeta.
struct ZGrading {
  GradedDims source;
  Matrix zeta;
  std::map<int, std::vector<Matrix>> pieces;

  const std::vector<Matrix>& piece(int j) const;
  /// zeta -> -zeta; piece j becomes piece -j.
  ZGrading opposite() const;
  /// Value of zeta on block b.
  Scalar zeta_on_block(std::size_t b) const;
};

/// zeta = blockdiag((j - mu) I_{n_j}), mu = sum(j n_j)/n, so Hom(V_a, V_b)
/// lies in g_{b-a}. Throws ValidationError unless every block is nonempty.
ZGrading build_chain_zgrading(const GradedDims& d);

/// Collapse to Z/m with m = number of blocks: component i = g_i + g_{i-m}.
CyclicGrading zgrading_to_cyclic(const ZGrading& z);

/// Eigenvalue lambda with [s, x] = lambda x; throws CertificationError if
/// x is not an eigenvector of ad s.
Scalar ad_eigenvalue(const Matrix& s, const Matrix& x);

struct SSubspaceData {
  Matrix s;
  std::vector<Matrix> v_zero;      // ad s eigenvalue 0 on the representation space
  std::vector<Matrix> v_bounded;   // eigenvalue <= 0
  std::vector<Matrix> parabolic;   // p_s in sl(n)
  std::vector<Matrix> levi;        // l_s in sl(n)
  std::vector<Matrix> opposite_nilradical;  // eigenvalue > 0 in sl(n)
};

/// Adjoint representation of sl(n): V_s^0 = l_s and V_s = p_s.
/// Bounded as t -> infinity is taken to mean ad-eigenvalue <= 0.
/// Throws ValidationError if s is not diagonal and traceless.
SSubspaceData s_subspaces(const Matrix& s);
/// Isotropy representation on g_1 of a cyclic grading (g_0 itself when m = 1).
SSubspaceData s_subspaces(const CyclicGrading& gr, const Matrix& s);

/// <s, x> = tr(s x).
Scalar character_chi_s(const Matrix& s, const Matrix& x);

}  // namespace vinberg
