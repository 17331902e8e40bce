#include "vinberg/echelon.hpp"

#include "vinberg/error.hpp"

namespace vinberg {

SparseVector sparse_of(const Matrix& m) {
  SparseVector out;
  const auto e = m.entries();
  for (std::size_t i = 0; i < e.size(); ++i)
    if (!e[i].is_zero()) out.emplace_back(static_cast<std::uint32_t>(i), e[i]);
  return out;
}

SparseVector sparse_of(const Vector& v) {
  SparseVector out;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) out.emplace_back(static_cast<std::uint32_t>(i), v[i]);
  return out;
}

namespace {

SparseVector from_map(std::map<std::uint32_t, Scalar>& acc) {
  SparseVector out;
  out.reserve(acc.size());
  for (auto& [idx, val] : acc)
    if (!val.is_zero()) out.emplace_back(idx, std::move(val));
  return out;
}

}  // namespace

SparseVector sparse_bracket(const SparseVector& x, const SparseVector& y, std::size_t n) {
  std::map<std::uint32_t, Scalar> acc;
  const auto nn = static_cast<std::uint32_t>(n);
  for (const auto& [ix, vx] : x) {
    const std::uint32_t a = ix / nn, b = ix % nn;
    for (const auto& [iy, vy] : y) {
      const std::uint32_t c = iy / nn, d = iy % nn;
      if (b == c) acc[a * nn + d] += vx * vy;
      if (d == a) acc[c * nn + b] -= vy * vx;
    }
  }
  return from_map(acc);
}

SparseVector SubspaceEchelon::reduce(const SparseVector& v) const {
  std::map<std::uint32_t, Scalar> acc;
  for (const auto& [idx, val] : v) acc[idx] += val;
  for (const auto& [idx, val] : v) {
    auto row = rows_.find(idx);
    if (row == rows_.end()) continue;
    for (const auto& [ridx, rval] : row->second) acc[ridx] -= val * rval;
  }
  return from_map(acc);
}

bool SubspaceEchelon::insert(const SparseVector& v) {
  for (const auto& [idx, val] : v) {
    (void)val;
    if (idx >= ambient_) throw DimensionError("vector index outside the ambient space");
  }
  SparseVector r = reduce(v);
  if (r.empty()) return false;
  const std::uint32_t pivot = r.front().first;
  const Scalar inv = Scalar(1) / r.front().second;
  for (auto& [idx, val] : r) val *= inv;
  // Clear the new pivot column from the existing rows.
  for (auto& [p, row] : rows_) {
    Scalar coeff;
    for (const auto& [idx, val] : row)
      if (idx == pivot) coeff = val;
    if (coeff.is_zero()) continue;
    std::map<std::uint32_t, Scalar> acc;
    for (const auto& [idx, val] : row) acc[idx] += val;
    for (const auto& [idx, val] : r) acc[idx] -= coeff * val;
    row = from_map(acc);
  }
  rows_.emplace(pivot, std::move(r));
  return true;
}

bool same_span(const std::vector<SparseVector>& a, const std::vector<SparseVector>& b,
               std::size_t ambient) {
  SubspaceEchelon ea(ambient), eb(ambient);
  for (const auto& v : a) ea.insert(v);
  for (const auto& v : b) eb.insert(v);
  if (ea.dimension() != eb.dimension()) return false;
  for (const auto& v : b)
    if (!ea.contains(v)) return false;
  return true;
}

}  // namespace vinberg
