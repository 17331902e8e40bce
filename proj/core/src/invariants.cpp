#include "vinberg/invariants.hpp"

#include "vinberg/error.hpp"
#include "vinberg/poly.hpp"
#include "vinberg/sampling.hpp"

namespace vinberg {

namespace {

std::vector<Scalar> composite_invariants(const Matrix& composite, std::size_t k) {
  const Poly p = charpoly(composite);
  const std::size_t n0 = composite.rows();
  std::vector<Scalar> out(k);
  for (std::size_t j = 1; j <= k; ++j) {
    const Scalar c = p.coefficient(n0 - j);
    out[j - 1] = (j % 2 == 0) ? c : -c;
  }
  return out;
}

/// d/dt at t = 0 of the Lagrange basis on nodes 0..k.
std::vector<Scalar> derivative_weights(std::size_t k) {
  std::vector<Scalar> w(k + 1);
  for (std::size_t t = 0; t <= k; ++t) {
    Poly basis = Poly::constant(1);
    for (std::size_t s = 0; s <= k; ++s) {
      if (s == t) continue;
      const Scalar denom = Scalar(static_cast<long>(t)) - Scalar(static_cast<long>(s));
      basis = basis * Poly({-Scalar(static_cast<long>(s)) / denom, Scalar(1) / denom});
    }
    w[t] = basis.coefficient(1);
  }
  return w;
}

std::size_t jacobian_rank_at(const InvariantSystem& sys, const QuiverPoint& base) {
  const auto weights = derivative_weights(sys.k);
  std::vector<Vector> columns;
  for (std::size_t i = 0; i < base.maps.size(); ++i) {
    const Matrix& f = base.maps[i];
    for (std::size_t r = 0; r < f.rows(); ++r)
      for (std::size_t c = 0; c < f.cols(); ++c) {
        Vector grad(sys.k);
        QuiverPoint moved = base;
        for (std::size_t t = 0; t <= sys.k; ++t) {
          moved.maps[i](r, c) = f(r, c) + Scalar(static_cast<long>(t));
          const auto values = sys.evaluate(moved);
          for (std::size_t j = 0; j < sys.k; ++j) grad[j] += weights[t] * values[j];
        }
        columns.push_back(std::move(grad));
      }
  }
  return rank(from_columns(columns, sys.k));
}

}  // namespace

Matrix cycle_composite(const GradedDims& d, const QuiverPoint& phi) {
  check_shape(d, phi);
  Matrix acc = phi.maps.front();
  for (std::size_t i = 1; i < phi.maps.size(); ++i) acc = mat_mul(phi.maps[i], acc);
  return acc;
}

std::vector<Scalar> InvariantSystem::evaluate(const QuiverPoint& phi) const {
  if (k == 0) {
    check_shape(dims, phi);
    return {};
  }
  return composite_invariants(cycle_composite(dims, phi), k);
}

Scalar InvariantSystem::evaluate(std::size_t j, const QuiverPoint& phi) const {
  if (j == 0 || j > k) throw DimensionError("invariant index out of range");
  return evaluate(phi)[j - 1];
}

InvariantSystem build_invariant_system(const CyclicGrading& gr, std::uint64_t seed) {
  const GradedDims& d = gr.source();
  if (d.m < 2) throw ValidationError("invariant system needs m >= 2");
  InvariantSystem sys;
  sys.dims = d;
  sys.k = static_cast<std::size_t>(d.min_dim());
  for (std::size_t j = 1; j <= sys.k; ++j) sys.degrees.push_back(static_cast<int>(j) * d.m);
  if (sys.k == 0) return sys;

  Sampler rng(seed);
  for (int attempt = 0; attempt < 8; ++attempt) {
    const QuiverPoint base = random_quiver_point(d, rng, 4);
    sys.jacobian_rank = jacobian_rank_at(sys, base);
    if (sys.jacobian_rank == sys.k) return sys;
  }
  throw CertificationError("invariant system: Jacobian rank " + std::to_string(sys.jacobian_rank) +
                           " < " + std::to_string(sys.k) + " at every sampled point");
}

bool check_g0_invariance(const InvariantSystem& sys, const QuiverPoint& phi, std::size_t trials,
                         std::uint64_t seed) {
  const GradedDims& d = sys.dims;
  check_shape(d, phi);
  const auto reference = sys.evaluate(phi);
  Sampler rng(seed);
  const auto mm = static_cast<std::size_t>(d.m);
  for (std::size_t trial = 0; trial < trials; ++trial) {
    std::vector<Matrix> g(mm), g_inv(mm);
    for (std::size_t i = 0; i < mm; ++i) {
      const auto ni = static_cast<std::size_t>(d.dims[i]);
      g[i] = rng.invertible_matrix(ni, 2);
      g_inv[i] = *inverse(g[i]);
    }
    QuiverPoint moved;
    for (std::size_t i = 0; i < mm; ++i)
      moved.maps.push_back(mat_mul(mat_mul(g[(i + 1) % mm], phi.maps[i]), g_inv[i]));
    if (sys.evaluate(moved) != reference) return false;
  }
  return true;
}

CartanCandidate cartan_candidate(const CyclicGrading& gr) {
  const GradedDims& d = gr.source();
  if (d.m < 2) throw ValidationError("Cartan candidate needs m >= 2");
  CartanCandidate a;
  a.k = static_cast<std::size_t>(d.min_dim());
  for (std::size_t t = 0; t < a.k; ++t) {
    QuiverPoint phi = zero_quiver_point(d);
    for (auto& f : phi.maps) f(t, t) = 1;
    a.matrices.push_back(assemble(d, phi));
    a.basis.push_back(std::move(phi));
  }
  for (std::size_t s = 0; s < a.k; ++s) {
    if (!is_squarefree(minimal_polynomial(a.matrices[s])))
      throw CertificationError("Cartan candidate element " + std::to_string(s) + " is not semisimple");
    for (std::size_t t = s + 1; t < a.k; ++t)
      if (!bracket(a.matrices[s], a.matrices[t]).is_zero())
        throw CertificationError("Cartan candidate is not abelian");
  }
  return a;
}

std::vector<Matrix> centralizer(const std::vector<Matrix>& subspace, const std::vector<Matrix>& elements) {
  if (subspace.empty()) return {};
  const std::size_t n = subspace.front().rows();
  if (elements.empty()) return subspace;
  std::vector<Vector> columns;
  for (const auto& y : subspace) {
    Vector col;
    col.reserve(elements.size() * n * n);
    for (const auto& s : elements) {
      const Matrix b = bracket(y, s);
      col.insert(col.end(), b.entries().begin(), b.entries().end());
    }
    columns.push_back(std::move(col));
  }
  std::vector<Matrix> out;
  for (const auto& coeffs : kernel_basis(from_columns(columns, elements.size() * n * n))) {
    Matrix z(n, n);
    for (std::size_t q = 0; q < subspace.size(); ++q)
      if (!coeffs[q].is_zero()) z += subspace[q] * coeffs[q];
    out.push_back(std::move(z));
  }
  return out;
}

RankReport certify_rank(const CyclicGrading& gr, std::uint64_t seed) {
  const CartanCandidate a = cartan_candidate(gr);
  const GradedDims& d = gr.source();
  RankReport report;
  report.rank = a.k;

  Sampler rng(seed);
  std::vector<Scalar> coords;
  while (coords.size() < a.k) {
    Scalar c = abs(rng.nonzero_rational(9, 4));
    bool fresh = true;
    for (const auto& prev : coords) fresh = fresh && prev != c;
    if (fresh) coords.push_back(c);
  }
  Matrix x(d.n(), d.n());
  for (std::size_t t = 0; t < a.k; ++t) x += a.matrices[t] * coords[t];

  const auto& g0 = gr.component(0);
  const auto& g1 = gr.component(1);
  report.centralizer_dim_cartan = centralizer(g0, a.matrices).size();
  report.centralizer_dim_point = centralizer(g0, {x}).size();
  report.g1_centralizer_dim = centralizer(g1, {x}).size();
  report.orbit_codimension = g1.size() + report.centralizer_dim_point - g0.size();

  report.invariant_jacobian_rank = a.k == 0 ? 0 : build_invariant_system(gr, seed).jacobian_rank;

  const bool ok = report.centralizer_dim_point == report.centralizer_dim_cartan &&
                  report.invariant_jacobian_rank == a.k;
  if (!ok)
    throw CertificationError("rank certification failed: candidate dim " + std::to_string(a.k) +
                             ", dim C_g0(x) = " + std::to_string(report.centralizer_dim_point) +
                             ", dim C_g0(a) = " + std::to_string(report.centralizer_dim_cartan) +
                             ", invariant Jacobian rank = " +
                             std::to_string(report.invariant_jacobian_rank));
  return report;
}

std::size_t rank_of_theta(const CyclicGrading& gr, std::uint64_t seed) { return certify_rank(gr, seed).rank; }

RestrictionReport restriction_certificate(const InvariantSystem& sys, const CartanCandidate& a) {
  RestrictionReport report;
  report.degrees = sys.degrees;
  const int m = sys.dims.m;
  const std::size_t k = a.k;
  if (k != sys.k) throw DimensionError("Cartan candidate and invariant system disagree on k");

  report.degrees_ok = sys.degrees.size() == k;
  for (std::size_t j = 0; j < sys.degrees.size(); ++j)
    report.degrees_ok = report.degrees_ok && sys.degrees[j] == static_cast<int>(j + 1) * m;
  report.weyl_order_predicted = 1;
  for (int deg : sys.degrees) report.weyl_order_predicted *= static_cast<std::uint64_t>(deg);
  report.weyl_order_closed_form = 1;
  for (std::size_t t = 1; t <= k; ++t)
    report.weyl_order_closed_form *= static_cast<std::uint64_t>(m) * static_cast<std::uint64_t>(t);

  // Per-variable degree of a restricted invariant is at most k m.
  const std::size_t side = k * static_cast<std::size_t>(m) + 1;
  std::vector<std::size_t> idx(k, 0);
  bool identity_ok = true;
  for (;;) {
    std::vector<Scalar> c(k);
    QuiverPoint phi = zero_quiver_point(sys.dims);
    for (std::size_t t = 0; t < k; ++t) {
      c[t] = Scalar(static_cast<long>(idx[t]));
      for (auto& f : phi.maps) f(t, t) = c[t];
    }
    const auto lhs = sys.evaluate(phi);
    // Elementary symmetric polynomials of c_t^m by the product expansion.
    std::vector<Scalar> elem(k + 1);
    elem[0] = 1;
    for (std::size_t t = 0; t < k; ++t) {
      const Scalar p = pow(c[t], static_cast<unsigned>(m));
      for (std::size_t j = t + 1; j >= 1; --j) elem[j] += elem[j - 1] * p;
    }
    ++report.grid_points;
    for (std::size_t j = 1; j <= k; ++j)
      if (lhs[j - 1] != elem[j]) identity_ok = false;
    if (!identity_ok) {
      report.witness = c;
      break;
    }
    std::size_t pos = 0;
    while (pos < k && ++idx[pos] == side) idx[pos++] = 0;
    if (pos == k) break;
  }
  report.passed = identity_ok && report.degrees_ok &&
                  report.weyl_order_predicted == report.weyl_order_closed_form;
  return report;
}

std::string to_string(Classification c) {
  switch (c) {
    case Classification::split: return "split";
    case Classification::quasi_split: return "quasi-split";
    case Classification::neither: return "neither";
  }
  return "neither";
}

Classification dimension_rule(const GradedDims& d) {
  const int k = d.min_dim();
  bool all_one = true, in_window = true;
  for (int v : d.dims) {
    all_one = all_one && v == 1;
    in_window = in_window && (v == k || v == k + 1);
  }
  if (all_one) return Classification::split;
  return in_window ? Classification::quasi_split : Classification::neither;
}

QuasiSplitReport quasi_split_classify(const CyclicGrading& gr) {
  if (gr.m() < 2) throw ValidationError("quasi-split classification needs m >= 2");
  const CartanCandidate a = cartan_candidate(gr);
  const auto cent = centralizer(gr.component(0), a.matrices);
  QuasiSplitReport report;
  report.centralizer_dim = cent.size();
  report.abelian = true;
  for (std::size_t s = 0; s < cent.size() && report.abelian; ++s)
    for (std::size_t t = s + 1; t < cent.size(); ++t)
      if (!bracket(cent[s], cent[t]).is_zero()) {
        report.abelian = false;
        break;
      }
  if (report.centralizer_dim == 0) report.classification = Classification::split;
  else if (report.abelian) report.classification = Classification::quasi_split;
  else report.classification = Classification::neither;
  report.dimension_rule = dimension_rule(gr.source());
  return report;
}

}  // namespace vinberg
