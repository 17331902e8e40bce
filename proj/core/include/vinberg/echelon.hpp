#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "vinberg/matrix.hpp"
#include "vinberg/scalar.hpp"

namespace vinberg {

/// Sparse vector: (index, value) pairs with strictly increasing index and
/// nonzero values.
using SparseVector = std::vector<std::pair<std::uint32_t, Scalar>>;

SparseVector sparse_of(const Matrix& m);
SparseVector sparse_of(const Vector& v);

/// Sparse commutator of two n x n matrices given in row-major sparse form.
SparseVector sparse_bracket(const SparseVector& x, const SparseVector& y, std::size_t n);

/// Incrementally maintained reduced row echelon basis of a subspace of
/// Q^ambient. Used for span membership and span comparison of sparse
/// Lie-algebra elements.
class SubspaceEchelon {
 public:
  explicit SubspaceEchelon(std::size_t ambient) : ambient_(ambient) {}

  /// Adds v to the span. Returns false when v was already in it.
  bool insert(const SparseVector& v);
  bool contains(const SparseVector& v) const { return reduce(v).empty(); }
  /// v minus its projection along pivot coordinates; empty iff v is in the span.
  SparseVector reduce(const SparseVector& v) const;

  std::size_t dimension() const { return rows_.size(); }
  std::size_t ambient() const { return ambient_; }

 private:
  std::size_t ambient_;
  std::map<std::uint32_t, SparseVector> rows_;  // pivot -> row with 1 at pivot
};

/// True when the two families span the same subspace of Q^ambient.
bool same_span(const std::vector<SparseVector>& a, const std::vector<SparseVector>& b,
               std::size_t ambient);

}  // namespace vinberg
