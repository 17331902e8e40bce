#include "vinberg/graded_lie.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "vinberg/echelon.hpp"
#include "vinberg/error.hpp"

namespace vinberg {

namespace {

int mod(int a, int m) { return ((a % m) + m) % m; }

}  // namespace

// ---------------------------------------------------------------- GradedDims

GradedDims::GradedDims(std::vector<int> block_dims)
    : m(static_cast<int>(block_dims.size())), dims(std::move(block_dims)) {}

std::size_t GradedDims::n() const {
  long total = 0;
  for (int d : dims) total += d;
  return total < 0 ? 0 : static_cast<std::size_t>(total);
}

void GradedDims::validate() const {
  if (m < 1) throw ValidationError("m must be at least 1");
  if (dims.size() != static_cast<std::size_t>(m))
    throw ValidationError("dims must have exactly m = " + std::to_string(m) + " entries");
  for (int d : dims)
    if (d < 0) throw ValidationError("block dimensions must be nonnegative");
  if (n() < 2) throw ValidationError("total dimension n must be at least 2");
}

bool GradedDims::full_support() const {
  for (int d : dims)
    if (d == 0) return false;
  return true;
}

int GradedDims::min_dim() const {
  int k = dims.empty() ? 0 : dims.front();
  for (int d : dims) k = std::min(k, d);
  return k;
}

std::vector<std::size_t> GradedDims::offsets() const {
  std::vector<std::size_t> off(dims.size() + 1, 0);
  for (std::size_t i = 0; i < dims.size(); ++i) off[i + 1] = off[i] + static_cast<std::size_t>(dims[i]);
  off.pop_back();
  return off;
}

std::vector<int> GradedDims::block_of_coordinate() const {
  std::vector<int> blocks;
  for (std::size_t i = 0; i < dims.size(); ++i)
    for (int t = 0; t < dims[i]; ++t) blocks.push_back(static_cast<int>(i));
  return blocks;
}

std::string GradedDims::str() const {
  std::ostringstream os;
  os << "m=" << m << " (";
  for (std::size_t i = 0; i < dims.size(); ++i) os << (i ? "," : "") << dims[i];
  os << ')';
  return os.str();
}

std::vector<Matrix> sl_basis(std::size_t n) {
  std::vector<Matrix> basis;
  basis.reserve(n * n - 1);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (a != b) {
        basis.push_back(Matrix::unit(n, n, a, b));
      } else if (a + 1 < n) {
        Matrix h(n, n);
        h(a, a) = 1;
        h(a + 1, a + 1) = -1;
        basis.push_back(std::move(h));
      }
    }
  return basis;
}

// --------------------------------------------------------------- QuiverPoint

void check_shape(const GradedDims& d, const QuiverPoint& phi) {
  if (phi.maps.size() != static_cast<std::size_t>(d.m))
    throw DimensionError("quiver point needs " + std::to_string(d.m) + " maps");
  for (int i = 0; i < d.m; ++i) {
    const auto rows = static_cast<std::size_t>(d.dims[static_cast<std::size_t>(mod(i + 1, d.m))]);
    const auto cols = static_cast<std::size_t>(d.dims[static_cast<std::size_t>(i)]);
    const Matrix& f = phi.maps[static_cast<std::size_t>(i)];
    if (f.rows() != rows || f.cols() != cols)
      throw DimensionError("map f_" + std::to_string(i) + " must be " + std::to_string(rows) + "x" +
                           std::to_string(cols));
  }
}

Matrix assemble(const GradedDims& d, const QuiverPoint& phi) {
  check_shape(d, phi);
  const auto off = d.offsets();
  Matrix x(d.n(), d.n());
  for (int i = 0; i < d.m; ++i) {
    const auto& f = phi.maps[static_cast<std::size_t>(i)];
    const auto r0 = off[static_cast<std::size_t>(mod(i + 1, d.m))];
    const auto c0 = off[static_cast<std::size_t>(i)];
    for (std::size_t r = 0; r < f.rows(); ++r)
      for (std::size_t c = 0; c < f.cols(); ++c) x(r0 + r, c0 + c) += f(r, c);
  }
  return x;
}

QuiverPoint extract_quiver_point(const GradedDims& d, const Matrix& x) {
  if (x.rows() != d.n() || x.cols() != d.n()) throw DimensionError("matrix size does not match profile");
  const auto off = d.offsets();
  QuiverPoint phi;
  for (int i = 0; i < d.m; ++i) {
    const auto to = static_cast<std::size_t>(mod(i + 1, d.m));
    const auto from = static_cast<std::size_t>(i);
    Matrix f(static_cast<std::size_t>(d.dims[to]), static_cast<std::size_t>(d.dims[from]));
    for (std::size_t r = 0; r < f.rows(); ++r)
      for (std::size_t c = 0; c < f.cols(); ++c) f(r, c) = x(off[to] + r, off[from] + c);
    phi.maps.push_back(std::move(f));
  }
  return phi;
}

QuiverPoint zero_quiver_point(const GradedDims& d) {
  QuiverPoint phi;
  for (int i = 0; i < d.m; ++i)
    phi.maps.emplace_back(static_cast<std::size_t>(d.dims[static_cast<std::size_t>(mod(i + 1, d.m))]),
                          static_cast<std::size_t>(d.dims[static_cast<std::size_t>(i)]));
  return phi;
}

QuiverPoint random_quiver_point(const GradedDims& d, Sampler& rng, std::int64_t bound) {
  QuiverPoint phi = zero_quiver_point(d);
  for (auto& f : phi.maps) f = rng.integer_matrix(f.rows(), f.cols(), bound);
  if (d.m == 1 && !phi.maps[0].empty()) {
    // g_1 = g_0 = sl(n) when m = 1.
    const std::size_t n = phi.maps[0].rows();
    phi.maps[0](n - 1, n - 1) -= phi.maps[0].trace();
  }
  return phi;
}

// ------------------------------------------------------------- CyclicGrading

CyclicGrading::CyclicGrading(GradedDims source, std::vector<std::vector<Matrix>> components,
                             std::vector<int> block_table)
    : source_(std::move(source)), components_(std::move(components)), block_table_(std::move(block_table)) {
  source_.validate();
  if (components_.size() != static_cast<std::size_t>(source_.m))
    throw DimensionError("grading needs one component per residue");
  const auto mm = static_cast<std::size_t>(source_.m);
  if (block_table_.size() != mm * mm) throw DimensionError("block table must be m x m");
}

const std::vector<Matrix>& CyclicGrading::component(int i) const {
  return components_[static_cast<std::size_t>(mod(i, m()))];
}

std::vector<std::size_t> CyclicGrading::component_dims() const {
  std::vector<std::size_t> out;
  for (const auto& c : components_) out.push_back(c.size());
  return out;
}

int CyclicGrading::block_index(std::size_t row_block, std::size_t col_block) const {
  return block_table_[row_block * static_cast<std::size_t>(m()) + col_block];
}

Matrix CyclicGrading::project(const Matrix& x, int i) const {
  const auto blocks = source_.block_of_coordinate();
  const int target = mod(i, m());
  Matrix out(x.rows(), x.cols());
  for (std::size_t r = 0; r < x.rows(); ++r)
    for (std::size_t c = 0; c < x.cols(); ++c)
      if (block_index(static_cast<std::size_t>(blocks[r]), static_cast<std::size_t>(blocks[c])) == target)
        out(r, c) = x(r, c);
  return out;
}

CyclicGrading build_cyclic_quiver_grading(const GradedDims& d) {
  d.validate();
  const std::size_t n = d.n();
  const auto blocks = d.block_of_coordinate();
  const auto mm = static_cast<std::size_t>(d.m);
  std::vector<int> table(mm * mm);
  for (std::size_t a = 0; a < mm; ++a)
    for (std::size_t b = 0; b < mm; ++b)
      table[a * mm + b] = mod(static_cast<int>(a) - static_cast<int>(b), d.m);

  std::vector<std::vector<Matrix>> components(mm);
  for (auto& x : sl_basis(n)) {
    // Each basis element is supported in a single block or on the diagonal.
    std::size_t r = 0, c = 0;
    for (std::size_t i = 0; i < n * n; ++i)
      if (!x.entries()[i].is_zero()) {
        r = i / n;
        c = i % n;
        break;
      }
    const int idx = table[static_cast<std::size_t>(blocks[r]) * mm + static_cast<std::size_t>(blocks[c])];
    components[static_cast<std::size_t>(idx)].push_back(std::move(x));
  }
  return CyclicGrading(d, std::move(components), std::move(table));
}

GradingReport verify_grading(const CyclicGrading& gr) {
  const int m = gr.m();
  const std::size_t n = gr.n();
  const auto mm = static_cast<std::size_t>(m);
  GradingReport report;
  report.expected_dim = n * n - 1;
  report.checked.assign(mm, std::vector<std::size_t>(mm, 0));
  report.failed.assign(mm, std::vector<std::size_t>(mm, 0));

  std::vector<std::vector<SparseVector>> sparse(mm);
  std::vector<SubspaceEchelon> spans(mm, SubspaceEchelon(n * n));
  SubspaceEchelon total(n * n);
  report.traceless_ok = true;
  report.direct_sum_ok = true;
  for (std::size_t i = 0; i < mm; ++i) {
    for (const auto& x : gr.components()[i]) {
      if (x.rows() != n || x.cols() != n) throw DimensionError("grading basis element of wrong size");
      if (!x.trace().is_zero()) report.traceless_ok = false;
      sparse[i].push_back(sparse_of(x));
      spans[i].insert(sparse[i].back());
      if (!total.insert(sparse[i].back())) report.direct_sum_ok = false;
    }
    report.total_dim += gr.components()[i].size();
  }
  report.dimension_ok = report.total_dim == report.expected_dim;

  for (std::size_t i = 0; i < mm; ++i)
    for (std::size_t j = i; j < mm; ++j) {
      const std::size_t target = (i + j) % mm;
      for (std::size_t p = 0; p < sparse[i].size(); ++p)
        for (std::size_t q = (i == j ? p + 1 : 0); q < sparse[j].size(); ++q) {
          ++report.checked[i][j];
          const SparseVector z = sparse_bracket(sparse[i][p], sparse[j][q], n);
          if (!z.empty() && !spans[target].contains(z)) {
            ++report.failed[i][j];
            report.failures.push_back({static_cast<int>(i), static_cast<int>(j), p, q});
          }
        }
      if (i != j) {
        report.checked[j][i] = report.checked[i][j];
        report.failed[j][i] = report.failed[i][j];
      }
    }
  report.passed = report.failures.empty() && report.dimension_ok && report.traceless_ok &&
                  report.direct_sum_ok;
  return report;
}

// ----------------------------------------------------------------- ZGrading

const std::vector<Matrix>& ZGrading::piece(int j) const {
  static const std::vector<Matrix> empty;
  auto it = pieces.find(j);
  return it == pieces.end() ? empty : it->second;
}

ZGrading ZGrading::opposite() const {
  ZGrading out;
  out.source = source;
  out.zeta = -zeta;
  for (const auto& [j, basis] : pieces) out.pieces[-j] = basis;
  return out;
}

Scalar ZGrading::zeta_on_block(std::size_t b) const {
  return zeta(source.offsets()[b], source.offsets()[b]);
}

Scalar ad_eigenvalue(const Matrix& s, const Matrix& x) {
  const Matrix image = bracket(s, x);
  const auto xe = x.entries();
  const auto ie = image.entries();
  std::size_t pos = 0;
  while (pos < xe.size() && xe[pos].is_zero()) ++pos;
  if (pos == xe.size()) throw CertificationError("zero vector has no ad eigenvalue");
  const Scalar lambda = ie[pos] / xe[pos];
  if (image != x * lambda) throw CertificationError("matrix is not an eigenvector of ad s");
  return lambda;
}

ZGrading build_chain_zgrading(const GradedDims& d) {
  d.validate();
  if (!d.full_support()) throw ValidationError("a chain Z-grading needs every block dimension >= 1");
  const std::size_t n = d.n();
  Scalar weighted;
  for (std::size_t j = 0; j < d.dims.size(); ++j) weighted += Scalar(static_cast<long>(j * static_cast<std::size_t>(d.dims[j])));
  const Scalar mu = weighted / Scalar(static_cast<long>(n));

  std::vector<Scalar> diag;
  for (int b : d.block_of_coordinate()) diag.push_back(Scalar(b) - mu);
  ZGrading z;
  z.source = d;
  z.zeta = Matrix::diagonal(diag);
  for (auto& x : sl_basis(n)) {
    const Scalar lambda = ad_eigenvalue(z.zeta, x);
    if (!lambda.is_integer()) throw CertificationError("grading element has a non-integral eigenvalue");
    z.pieces[static_cast<int>(lambda.to_int64())].push_back(std::move(x));
  }
  return z;
}

CyclicGrading zgrading_to_cyclic(const ZGrading& z) {
  const int m = z.source.m;
  if (m < 2) throw ValidationError("collapsing to Z/m needs m >= 2 blocks");
  for (const auto& [j, basis] : z.pieces)
    if (!basis.empty() && (j >= m || j <= -m))
      throw ValidationError("Z-grading has a nonzero piece outside (-m, m)");
  const auto mm = static_cast<std::size_t>(m);
  std::vector<std::vector<Matrix>> components(mm);
  for (int i = 0; i < m; ++i) {
    auto& comp = components[static_cast<std::size_t>(i)];
    for (const auto& x : z.piece(i)) comp.push_back(x);
    if (i != 0)
      for (const auto& x : z.piece(i - m)) comp.push_back(x);
  }
  std::vector<int> table(mm * mm);
  for (std::size_t a = 0; a < mm; ++a)
    for (std::size_t b = 0; b < mm; ++b) {
      const Scalar diff = z.zeta_on_block(a) - z.zeta_on_block(b);
      table[a * mm + b] = mod(static_cast<int>(diff.to_int64()), m);
    }
  return CyclicGrading(z.source, std::move(components), std::move(table));
}

// ------------------------------------------------------------ s-subspaces

namespace {

void check_s(const Matrix& s) {
  if (!s.is_diagonal()) throw ValidationError("s must be a diagonal matrix");
  if (!s.trace().is_zero()) throw ValidationError("s must be traceless");
}

void fill_sl_parts(SSubspaceData& out) {
  for (auto& x : sl_basis(out.s.rows())) {
    const int sign = ad_eigenvalue(out.s, x).sign();
    if (sign == 0) out.levi.push_back(x);
    if (sign <= 0) out.parabolic.push_back(x);
    else out.opposite_nilradical.push_back(std::move(x));
  }
}

}  // namespace

SSubspaceData s_subspaces(const Matrix& s) {
  check_s(s);
  if (s.rows() < 2) throw ValidationError("s must be at least 2 x 2");
  SSubspaceData out;
  out.s = s;
  fill_sl_parts(out);
  out.v_zero = out.levi;
  out.v_bounded = out.parabolic;
  return out;
}

SSubspaceData s_subspaces(const CyclicGrading& gr, const Matrix& s) {
  check_s(s);
  if (s.rows() != gr.n()) throw DimensionError("s does not match the grading size");
  SSubspaceData out;
  out.s = s;
  fill_sl_parts(out);
  for (const auto& x : gr.component(1)) {
    const int sign = ad_eigenvalue(s, x).sign();
    if (sign == 0) out.v_zero.push_back(x);
    if (sign <= 0) out.v_bounded.push_back(x);
  }
  return out;
}

Scalar character_chi_s(const Matrix& s, const Matrix& x) { return trace_of_product(s, x); }

}  // namespace vinberg
