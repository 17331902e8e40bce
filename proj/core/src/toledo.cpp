#include "vinberg/toledo.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "vinberg/echelon.hpp"
#include "vinberg/error.hpp"
#include "vinberg/sampling.hpp"

namespace vinberg {

void BilinearFormSpec::validate() const {
  if (scale.sign() <= 0) throw ValidationError("bilinear form scale must be positive");
}

Scalar bilinear_form(const BilinearFormSpec& spec, const Matrix& x, const Matrix& y) {
  return spec.scale * trace_of_product(x, y);
}

Scalar dual_root_norm(std::size_t n, std::size_t a, std::size_t b, const BilinearFormSpec& spec) {
  spec.validate();
  if (n < 2 || a >= n || b >= n || a == b) throw ValidationError("not a root of sl(n)");
  const std::size_t r = n - 1;
  // H_k = E_kk - E_{k+1,k+1}; diagonal entries only.
  auto h_entry = [](std::size_t k, std::size_t i) -> Scalar {
    if (i == k) return 1;
    if (i == k + 1) return -1;
    return 0;
  };
  Matrix gram(r, r);
  for (std::size_t k = 0; k < r; ++k)
    for (std::size_t l = 0; l < r; ++l) {
      Scalar t;
      for (std::size_t i = 0; i < n; ++i) t += h_entry(k, i) * h_entry(l, i);
      gram(k, l) = spec.scale * t;
    }
  const auto inv = inverse(gram);
  if (!inv) throw CertificationError("Gram matrix of the Cartan subalgebra is singular");
  Vector alpha(r);
  for (std::size_t k = 0; k < r; ++k) alpha[k] = h_entry(k, a) - h_entry(k, b);
  Scalar out;
  for (std::size_t k = 0; k < r; ++k)
    for (std::size_t l = 0; l < r; ++l) out += alpha[k] * (*inv)(k, l) * alpha[l];
  return out;
}

namespace {

std::pair<std::size_t, std::size_t> root_position(const Matrix& x) {
  std::optional<std::pair<std::size_t, std::size_t>> pos;
  for (std::size_t r = 0; r < x.rows(); ++r)
    for (std::size_t c = 0; c < x.cols(); ++c)
      if (!x(r, c).is_zero()) {
        if (pos || r == c) throw ValidationError("graded piece is not spanned by root vectors");
        pos = {r, c};
      }
  if (!pos) throw ValidationError("zero basis vector in graded piece");
  return *pos;
}

RootData longest_root(const std::vector<Matrix>& plus, std::size_t n,
                      const BilinearFormSpec& spec) {
  if (plus.empty()) throw ValidationError("degree-one piece is zero; no Toledo character");
  std::optional<std::pair<std::size_t, std::size_t>> best;
  auto key = [](const std::pair<std::size_t, std::size_t>& p) {
    return static_cast<long>(p.second) - static_cast<long>(p.first);
  };
  for (const auto& x : plus) {
    const auto p = root_position(x);
    if (!best || key(p) > key(*best) || (key(p) == key(*best) && p < *best)) best = p;
  }
  return {best->first, best->second, dual_root_norm(n, best->first, best->second, spec)};
}

ToledoCharacter character_of(const GradedDims& dims, const Matrix& zeta,
                             const std::vector<Matrix>& plus, const BilinearFormSpec& spec) {
  spec.validate();
  ToledoCharacter chi;
  chi.dims = dims;
  chi.zeta = zeta;
  chi.gamma_norm = longest_root(plus, dims.n(), spec).gamma_norm;
  const auto off = dims.offsets();
  const std::size_t m = dims.dims.size();
  const std::size_t last = off[m - 1];
  chi.coefficients.assign(m, Scalar(0));
  // Evaluate on the trace generators E_{o_i o_i} - E_{o_last o_last}.
  for (std::size_t i = 0; i + 1 < m; ++i) {
    Matrix d(dims.n(), dims.n());
    d(off[i], off[i]) = 1;
    d(last, last) = -1;
    chi.coefficients[i] = bilinear_form(spec, zeta, d) * chi.gamma_norm;
  }
  return chi;
}

Matrix combine(const std::vector<Matrix>& basis, const Vector& coeffs, std::size_t n) {
  Matrix out(n, n);
  for (std::size_t k = 0; k < basis.size(); ++k)
    if (!coeffs[k].is_zero()) out += basis[k] * coeffs[k];
  return out;
}

bool in_span(const std::vector<Matrix>& basis, const Matrix& x) {
  SubspaceEchelon ech(x.rows() * x.cols());
  for (const auto& b : basis) ech.insert(sparse_of(b));
  return ech.contains(sparse_of(x));
}

// Graded Jacobson-Morozov: h in the zero piece, f in the minus piece.
Sl2Triple triple_in(const Matrix& e, const std::vector<Matrix>& plus,
                    const std::vector<Matrix>& minus) {
  if (e.is_zero()) throw ValidationError("Jacobson-Morozov needs a nonzero nilpotent");
  if (!in_span(plus, e)) throw ValidationError("element is not in the degree-one piece");
  const std::size_t n = e.rows();
  const std::size_t nn = n * n;
  const std::size_t k = minus.size();

  // Step 1: f0 with [[e, f0], e] = 2e.
  Matrix a1(nn, k);
  for (std::size_t j = 0; j < k; ++j) {
    const Matrix col = bracket(bracket(e, minus[j]), e);
    for (std::size_t r = 0; r < nn; ++r) a1(r, j) = col.entries()[r];
  }
  Vector rhs1 = flatten(e * Scalar(2));
  const auto c1 = solve(a1, rhs1);
  if (!c1) throw CertificationError("Jacobson-Morozov: no h in [e, g_-1] with [h, e] = 2e");
  const Matrix h = bracket(e, combine(minus, *c1, n));

  // Step 2: f with [e, f] = h and [h, f] = -2f.
  Matrix a2(2 * nn, k);
  for (std::size_t j = 0; j < k; ++j) {
    const Matrix top = bracket(e, minus[j]);
    const Matrix bottom = bracket(h, minus[j]) + minus[j] * Scalar(2);
    for (std::size_t r = 0; r < nn; ++r) {
      a2(r, j) = top.entries()[r];
      a2(nn + r, j) = bottom.entries()[r];
    }
  }
  Vector rhs2 = flatten(h);
  rhs2.resize(2 * nn);
  const auto c2 = solve(a2, rhs2);
  if (!c2) throw CertificationError("Jacobson-Morozov: no f with [e, f] = h and [h, f] = -2f");
  Sl2Triple t{e, h, combine(minus, *c2, n)};
  if (!t.satisfies_relations()) throw CertificationError("Jacobson-Morozov: relations fail");
  return t;
}

Scalar rank_in(const Matrix& e, const ToledoCharacter& chi, const std::vector<Matrix>& plus,
               const std::vector<Matrix>& minus) {
  if (e.is_zero()) return 0;
  const Sl2Triple t = triple_in(e, plus, minus);
  return chi(t.h) / Scalar(2);
}

int max_plus_rank(const std::vector<int>& ranks) {
  int best = 0;
  for (std::size_t j = 0; j + 1 < ranks.size(); ++j)
    best = std::max(best, std::min(ranks[j], ranks[j + 1]));
  return best;
}

}  // namespace

RootData longest_root_gamma(const ZGrading& z, const BilinearFormSpec& spec) {
  return longest_root(z.piece(1), z.source.n(), spec);
}

Scalar ToledoCharacter::operator()(const Matrix& x) const {
  if (x.rows() != dims.n() || x.cols() != dims.n())
    throw DimensionError("character argument has the wrong size");
  const auto block = dims.block_of_coordinate();
  Scalar out;
  for (std::size_t i = 0; i < x.rows(); ++i)
    if (!x(i, i).is_zero()) out += coefficients[static_cast<std::size_t>(block[i])] * x(i, i);
  return out;
}

Scalar ToledoCharacter::exponent_multiple() const {
  mpz_class q = 1;
  for (const auto& c : coefficients) mpz_lcm(q.get_mpz_t(), q.get_mpz_t(), c.denominator().get_mpz_t());
  return Scalar(mpq_class(q));
}

ToledoCharacter toledo_character(const ZGrading& z, const BilinearFormSpec& spec) {
  return character_of(z.source, z.zeta, z.piece(1), spec);
}

bool Sl2Triple::satisfies_relations() const {
  return bracket(h, e) == e * Scalar(2) && bracket(h, f) == f * Scalar(-2) && bracket(e, f) == h;
}

Sl2Triple jacobson_morozov(const Matrix& e, const ZGrading& z) {
  return triple_in(e, z.piece(1), z.piece(-1));
}

Scalar toledo_rank(const Matrix& e, const ToledoCharacter& chi, const ZGrading& z) {
  return rank_in(e, chi, z.piece(1), z.piece(-1));
}

Scalar toledo_rank_of_pair(const ZGrading& z, std::uint64_t seed) {
  const auto& plus = z.piece(1);
  if (plus.empty()) return 0;
  const ToledoCharacter chi = toledo_character(z);
  Sampler rng(seed);
  const std::size_t n = z.source.n();
  std::vector<Scalar> draws;
  for (int attempt = 0; attempt < 12; ++attempt) {
    Vector c(plus.size());
    for (auto& v : c) v = rng.nonzero_rational(3, 1);
    draws.push_back(toledo_rank(combine(plus, c, n), chi, z));
    const std::size_t s = draws.size();
    if (s >= 3 && draws[s - 1] == draws[s - 2] && draws[s - 2] == draws[s - 3]) return draws.back();
  }
  throw CertificationError("Toledo rank did not stabilize over random draws");
}

ZGrading hodge_zgrading(const GradedDims& d) { return build_chain_zgrading(d).opposite(); }

Matrix canonical_nilpotent(const ZGrading& z, int degree, std::size_t rank) {
  const std::size_t n = z.source.n();
  const auto off = z.source.offsets();
  const std::size_t m = z.source.dims.size();
  Matrix out(n, n);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      if (a == b || z.zeta_on_block(a) - z.zeta_on_block(b) != Scalar(degree)) continue;
      const std::size_t r = std::min({rank, static_cast<std::size_t>(z.source.dims[a]),
                                      static_cast<std::size_t>(z.source.dims[b])});
      for (std::size_t t = 0; t < r; ++t) out(off[a] + t, off[b] + t) = 1;
    }
  return out;
}

std::size_t admissible_rank(const ZGrading& z, int degree) {
  const std::size_t m = z.source.dims.size();
  std::size_t best = 0;
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      if (a != b && z.zeta_on_block(a) - z.zeta_on_block(b) == Scalar(degree))
        best = std::max(best, static_cast<std::size_t>(
                                  std::min(z.source.dims[a], z.source.dims[b])));
  return best;
}

void HiggsType::validate() const {
  if (m < 2) throw ValidationError("m: a Higgs type needs at least 2 blocks");
  const auto mm = static_cast<std::size_t>(m);
  if (ranks.size() != mm) throw ValidationError("ranks: expected " + std::to_string(m) + " entries");
  if (degrees.size() != mm)
    throw ValidationError("degrees: expected " + std::to_string(m) + " entries");
  for (int r : ranks)
    if (r < 1) throw ValidationError("ranks: every rank must be at least 1");
  if (std::accumulate(degrees.begin(), degrees.end(), 0L) != 0)
    throw ValidationError("degrees: must sum to zero");
  if (genus < 2) throw ValidationError("genus: must be at least 2");
  if (phi_plus_rank < 0 || phi_plus_rank > max_plus_rank(ranks))
    throw ValidationError("phi-plus-rank: out of range for the rank profile");
  if (phi_minus_rank < 0 || phi_minus_rank > std::min(ranks.front(), ranks.back()))
    throw ValidationError("phi-minus-rank: out of range for the rank profile");
}

Scalar toledo_invariant(const HiggsType& t, const ToledoCharacter& chi) {
  if (t.ranks != chi.dims.dims) throw DimensionError("Higgs type does not match the character's block profile");
  Scalar out;
  for (std::size_t i = 0; i < t.degrees.size(); ++i)
    out += chi.coefficients[i] * Scalar(static_cast<long>(t.degrees[i]));
  return out;
}

AmReport am_check(const HiggsType& t, const ToledoCharacter& chi, const ZGrading& z) {
  t.validate();
  if (t.ranks != z.source.dims) throw DimensionError("Higgs type does not match the grading");
  const int m = t.m;
  const Scalar two_g_minus_two(2L * t.genus - 2);
  AmReport rep;

  rep.tau_plus = toledo_invariant(t, chi);
  const Matrix e_plus = canonical_nilpotent(z, 1, static_cast<std::size_t>(t.phi_plus_rank));
  rep.rank_plus = rank_in(e_plus, chi, z.piece(1), z.piece(-1));

  const Matrix zeta_minus = z.zeta * (Scalar(1) / Scalar(1 - m));
  const ToledoCharacter chi_minus = character_of(z.source, zeta_minus, z.piece(1 - m), {});
  rep.tau_minus = toledo_invariant(t, chi_minus);
  const Matrix e_minus = canonical_nilpotent(z, 1 - m, static_cast<std::size_t>(t.phi_minus_rank));
  rep.rank_minus = rank_in(e_minus, chi_minus, z.piece(1 - m), z.piece(m - 1));

  rep.tau_plus_bound = -rep.rank_plus * two_g_minus_two;
  rep.tau_minus_bound = -rep.rank_minus * two_g_minus_two;
  rep.plus_satisfied = rep.tau_plus >= rep.tau_plus_bound;
  rep.minus_satisfied = rep.tau_minus >= rep.tau_minus_bound;
  rep.minus_guaranteed = (m == 2);
  rep.satisfied = rep.plus_satisfied && (m != 2 || rep.minus_satisfied);
  rep.at_plus_boundary = rep.tau_plus == rep.tau_plus_bound;

  if (m == 2) {
    rep.window = std::pair{rep.tau_plus_bound, -rep.tau_minus_bound};
    const int r = std::min(t.ranks[0], t.ranks[1]);
    rep.classical_bound = Scalar(2L * r * (t.genus - 1));
    rep.classical_satisfied = abs(rep.tau_plus) <= *rep.classical_bound;
    rep.maximal = abs(rep.tau_plus) == *rep.classical_bound;
    rep.cayley = rep.maximal && t.ranks[0] == t.ranks[1];
    rep.at_boundary = rep.at_plus_boundary || rep.tau_plus == rep.window->second;
  } else {
    rep.maximal = rep.at_plus_boundary && !rep.rank_plus.is_zero();
    rep.at_boundary = rep.at_plus_boundary;
  }
  return rep;
}

std::vector<WindowEntry> enumerate_toledo_window(const std::vector<int>& ranks, int genus) {
  if (ranks.size() != 2) throw ValidationError("ranks: the window is enumerated for two blocks only");
  for (int r : ranks)
    if (r < 1) throw ValidationError("ranks: every rank must be at least 1");
  if (genus < 2) throw ValidationError("genus: must be at least 2");
  const long bound = static_cast<long>(std::min(ranks[0], ranks[1])) * (genus - 1);
  std::vector<WindowEntry> out;
  for (long d = -bound; d <= bound; ++d) {
    const bool maximal = (d == bound || d == -bound);
    out.push_back({d, maximal, maximal && ranks[0] == ranks[1]});
  }
  return out;
}

}  // namespace vinberg
