#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "vinberg/graded_lie.hpp"
#include "vinberg/matrix.hpp"
#include "vinberg/scalar.hpp"

namespace vinberg {

/// Invariant form B_s(x, y) = s tr(xy) on sl(n), s > 0. Every quantity in
/// this module is independent of s.
struct BilinearFormSpec {
  Scalar scale = Scalar(1);
  void validate() const;
};

Scalar bilinear_form(const BilinearFormSpec& spec, const Matrix& x, const Matrix& y);

/// B*(alpha, alpha) for the root alpha = e_a - e_b of sl(n), computed by
/// inverting the Gram matrix of B_s on the diagonal Cartan subalgebra.
Scalar dual_root_norm(std::size_t n, std::size_t a, std::size_t b, const BilinearFormSpec& spec);

struct RootData {
  std::size_t row = 0;  // root space E_{row,col}
  std::size_t col = 0;
  Scalar gamma_norm;
};

/// Among the root spaces E_ab in the degree-1 piece, the one maximizing
/// b - a (ties: lexicographically smallest (a, b)). Throws ValidationError
/// when the degree-1 piece is zero.
RootData longest_root_gamma(const ZGrading& z, const BilinearFormSpec& spec = {});

/// chi_T(x) = B(zeta, x) B*(gamma, gamma), stored as per-block trace
/// coefficients: chi_T(x) = sum_i c_i tr(x_i), normalized so that the last
/// coefficient is zero.
struct ToledoCharacter {
  GradedDims dims;
  Matrix zeta;
  Scalar gamma_norm;
  std::vector<Scalar> coefficients;

  /// For x block-diagonal (in g_0).
  Scalar operator()(const Matrix& x) const;
  /// Smallest q > 0 with q c_i integral for all i.
  Scalar exponent_multiple() const;
};

ToledoCharacter toledo_character(const ZGrading& z, const BilinearFormSpec& spec = {});

struct Sl2Triple {
  Matrix e;
  Matrix h;
  Matrix f;
  /// [h,e] = 2e, [h,f] = -2f, [e,f] = h.
  bool satisfies_relations() const;
};

/// Completes e in g_1 to a triple with h in g_0 and f in g_{-1} by two
/// exact linear solves. Throws ValidationError for e = 0 or e outside g_1,
/// CertificationError if a solve is inconsistent.
Sl2Triple jacobson_morozov(const Matrix& e, const ZGrading& z);

/// (1/2) chi_T(h) for the triple through e; zero for e = 0.
Scalar toledo_rank(const Matrix& e, const ToledoCharacter& chi, const ZGrading& z);

/// Toledo rank at random points of g_1, redrawn until three consecutive
/// draws agree. Throws CertificationError if that does not happen.
Scalar toledo_rank_of_pair(const ZGrading& z, std::uint64_t seed);

/// The chain grading with the opposite orientation: zeta positive on V_0,
/// g_1 = sum Hom(V_{j+1}, V_j). With it the Toledo invariant of a two-block
/// type is 2 deg E_0.
ZGrading hodge_zgrading(const GradedDims& d);

/// Sum over the blocks Hom(V_B, V_A) in piece `degree` of the partial
/// identity of rank min(rank, n_A, n_B).
Matrix canonical_nilpotent(const ZGrading& z, int degree, std::size_t rank);

/// Largest rank accepted by canonical_nilpotent for this piece.
std::size_t admissible_rank(const ZGrading& z, int degree);

/// Discrete data of a Higgs pair for the chain grading of `ranks`.
struct HiggsType {
  int m = 2;
  std::vector<int> ranks;
  std::vector<long> degrees;
  int genus = 2;
  int phi_plus_rank = 0;
  int phi_minus_rank = 0;

  /// Throws ValidationError naming the offending field.
  void validate() const;
};

/// deg_{chi_T}(E) = sum_i c_i e_i. Throws DimensionError on profile mismatch.
Scalar toledo_invariant(const HiggsType& t, const ToledoCharacter& chi);

struct AmReport {
  Scalar tau_plus;
  Scalar tau_minus;
  Scalar rank_plus;
  Scalar rank_minus;
  Scalar tau_plus_bound;   // -rk_T(phi+)(2g-2)
  Scalar tau_minus_bound;  // -rk_T(phi-)(2g-2)
  bool plus_satisfied = false;
  bool minus_satisfied = false;
  /// The tau- inequality only follows from semistability when m = 2.
  bool minus_guaranteed = false;
  bool satisfied = false;
  bool at_plus_boundary = false;
  /// tau+ at either end of the window (m = 2) or at the tau+ bound.
  bool at_boundary = false;
  /// Two-sided window and classical bound 2r(g-1), m = 2 only.
  std::optional<std::pair<Scalar, Scalar>> window;
  std::optional<Scalar> classical_bound;
  bool classical_satisfied = false;
  bool maximal = false;
  bool cayley = false;
};

/// Evaluates the Arakelov-Milnor inequality for tau+ and the opposite
/// inequality for tau-. Violations are reported, not thrown.
AmReport am_check(const HiggsType& t, const ToledoCharacter& chi, const ZGrading& z);

struct WindowEntry {
  long d = 0;
  bool maximal = false;
  bool cayley = false;
  friend bool operator==(const WindowEntry&, const WindowEntry&) = default;
};

/// All d with |d| <= min(n_0, n_1)(g - 1). Two blocks only.
std::vector<WindowEntry> enumerate_toledo_window(const std::vector<int>& ranks, int genus);

}  // namespace vinberg
