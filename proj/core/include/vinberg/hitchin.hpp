#pragma once

#include <cstddef>
#include <vector>

#include "vinberg/graded_lie.hpp"
#include "vinberg/invariants.hpp"
#include "vinberg/scalar.hpp"

namespace vinberg {

/// Degrees 2..n of the basic invariants of sl(n) (m = 1).
std::vector<int> invariant_degrees(std::size_t n);
/// Degrees m, 2m, ..., km of a cyclic quiver grading, taken from its
/// certified invariant system.
std::vector<int> invariant_degrees(const CyclicGrading& gr, std::uint64_t seed = 0);

/// dim H^0(X, K^d) on a curve of genus g >= 2.
long h0_kpower(int genus, int d);

struct HitchinBase {
  std::vector<int> degrees;
  int genus = 2;
  std::vector<long> summand_dims;
  long total_dim = 0;
  /// m = 1 only: total_dim == (n^2 - 1)(g - 1).
  bool identity_checked = false;
  bool identity_ok = false;
  /// False for unbalanced quiver profiles, whose degree lists are computed
  /// here rather than taken from a published table.
  bool literature_confirmed = true;
};

/// Base of sl(n) (m = 1). Throws CertificationError if the dimension
/// identity fails.
HitchinBase base_dimension(std::size_t n, int genus);
HitchinBase base_dimension(const CyclicGrading& gr, int genus, std::uint64_t seed = 0);
/// Summand dimensions for an explicit degree list.
HitchinBase base_from_degrees(std::vector<int> degrees, int genus);

/// (f_1(phi), ..., f_k(phi)).
std::vector<Scalar> pointwise_hitchin(const InvariantSystem& sys, const QuiverPoint& phi);

}  // namespace vinberg
