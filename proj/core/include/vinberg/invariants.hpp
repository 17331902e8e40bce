#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vinberg/graded_lie.hpp"
#include "vinberg/matrix.hpp"
#include "vinberg/scalar.hpp"

namespace vinberg {

/// f_{m-1} o ... o f_0 : V_0 -> V_0.
Matrix cycle_composite(const GradedDims& d, const QuiverPoint& phi);

/// Generators of C[g_1]^{G_0} for a cyclic quiver: f_j(phi) is (-1)^j times
/// the coefficient of x^{n_0 - j} in charpoly(cycle_composite(phi)), i.e.
/// the j-th elementary symmetric function of the composite's eigenvalues.
/// f_j is homogeneous of degree j*m.
struct InvariantSystem {
  GradedDims dims;
  std::size_t k = 0;
  std::vector<int> degrees;
  /// Rank of the Jacobian of (f_1..f_k) at the certification point.
  std::size_t jacobian_rank = 0;

  std::vector<Scalar> evaluate(const QuiverPoint& phi) const;
  /// 1-based: evaluate(1, phi) is the degree-m invariant.
  Scalar evaluate(std::size_t j, const QuiverPoint& phi) const;
};

/// Requires m >= 2 (ValidationError otherwise). A profile with an empty
/// block yields the empty system. Algebraic independence is certified by a
/// full-rank Jacobian at a seeded random rational point, with derivatives
/// taken exactly by interpolation along coordinate lines; CertificationError
/// if no full-rank point is found.
InvariantSystem build_invariant_system(const CyclicGrading& gr, std::uint64_t seed = 0);

/// Acts on phi by random invertible block-diagonal g (phi -> g phi g^-1
/// blockwise) and checks that every invariant is exactly unchanged.
bool check_g0_invariance(const InvariantSystem& sys, const QuiverPoint& phi, std::size_t trials,
                         std::uint64_t seed);

/// Coordinate-cycle Cartan candidate: basis element t routes coordinate t of
/// each V_i to coordinate t of V_{i+1}.
struct CartanCandidate {
  std::size_t k = 0;
  std::vector<QuiverPoint> basis;
  std::vector<Matrix> matrices;  // assembled n x n forms of basis
};

/// Builds the candidate and verifies that it is abelian and made of
/// semisimple elements (squarefree minimal polynomials). Throws
/// CertificationError when a check fails.
CartanCandidate cartan_candidate(const CyclicGrading& gr);

/// Basis of the centralizer of `elements` inside span(`subspace`).
std::vector<Matrix> centralizer(const std::vector<Matrix>& subspace, const std::vector<Matrix>& elements);

struct RankReport {
  std::size_t rank = 0;
  std::size_t centralizer_dim_cartan = 0;  // dim C_{g_0}(a)
  std::size_t centralizer_dim_point = 0;   // dim C_{g_0}(x)
  std::size_t g1_centralizer_dim = 0;      // dim C_{g_1}(x), may exceed rank
  std::size_t orbit_codimension = 0;       // dim g_1 - dim [g_0, x]
  std::size_t invariant_jacobian_rank = 0; // dimension of g_1 // G_0
};

/// Cross-checks the candidate at a seeded point x with distinct positive
/// coordinates: dim C_{g_0}(x) = dim C_{g_0}(a), and dim a equals the
/// Jacobian rank of the invariant system. C_{g_1}(x) and the orbit
/// codimension are reported only: when some block is larger than the rank,
/// C_{g_1}(x) contains nilpotents beyond a. Throws CertificationError
/// carrying the dimensions on mismatch.
RankReport certify_rank(const CyclicGrading& gr, std::uint64_t seed);
std::size_t rank_of_theta(const CyclicGrading& gr, std::uint64_t seed);

struct RestrictionReport {
  bool passed = false;
  bool degrees_ok = false;
  std::vector<int> degrees;
  std::uint64_t weyl_order_predicted = 0;  // product of degrees
  std::uint64_t weyl_order_closed_form = 0;  // m^k k!
  std::size_t grid_points = 0;
  /// Grid point where the identity failed, if any.
  std::optional<std::vector<Scalar>> witness;
};

/// Checks that f_j restricted to a equals e_j(c_1^m, ..., c_k^m) as a
/// polynomial identity, on a grid of (km + 1)^k points.
RestrictionReport restriction_certificate(const InvariantSystem& sys, const CartanCandidate& a);

enum class Classification { split, quasi_split, neither };

std::string to_string(Classification c);

struct QuasiSplitReport {
  std::size_t centralizer_dim = 0;
  bool abelian = false;
  Classification classification = Classification::neither;
  /// Prediction from block dimensions: all in {k, k+1} / all equal to 1.
  Classification dimension_rule = Classification::neither;
};

Classification dimension_rule(const GradedDims& d);

/// Computes C_{g_0}(a) as a joint kernel and classifies. Requires m >= 2.
QuasiSplitReport quasi_split_classify(const CyclicGrading& gr);

}  // namespace vinberg
