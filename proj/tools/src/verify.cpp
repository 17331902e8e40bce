#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "vinberg/echelon.hpp"
#include "vinberg/error.hpp"
#include "vinberg/hitchin.hpp"
#include "vinberg/invariants.hpp"
#include "vinberg/poly.hpp"
#include "vinberg/toledo.hpp"
#include "vinberg_cli/cli.hpp"

namespace vinberg::cli {

namespace {

constexpr std::size_t max_reported = 5;

std::vector<std::vector<int>> profiles(int m, int max_n, int lo) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(static_cast<std::size_t>(m), lo);
  while (true) {
    int n = 0;
    for (int v : cur) n += v;
    if (n >= 2 && n <= max_n) out.push_back(cur);
    std::size_t pos = 0;
    while (pos < cur.size() && ++cur[pos] > max_n) cur[pos++] = lo;
    if (pos == cur.size()) break;
  }
  return out;
}

std::string show(const std::vector<int>& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

class Recorder {
 public:
  explicit Recorder(std::string name) { r_.name = std::move(name); }
  void check(bool ok, const std::string& what) {
    ++r_.cases;
    if (ok) return;
    r_.passed = false;
    if (r_.failures.size() < max_reported) r_.failures.push_back(what);
  }
  template <class F>
  void guarded(const std::string& what, F&& f) {
    try {
      f();
    } catch (const std::exception& e) {
      check(false, what + ": " + e.what());
    }
  }
  PropertyResult take() { return std::move(r_); }

 private:
  PropertyResult r_;
};

std::vector<SparseVector> sparse_all(const std::vector<Matrix>& xs) {
  std::vector<SparseVector> out;
  for (const auto& x : xs) out.push_back(sparse_of(x));
  return out;
}

PropertyResult grading_property(const VerifyOptions& o) {
  Recorder rec("grading");
  bool injected = false;
  for (int m = 1; m <= 4; ++m)
    for (const auto& dims : profiles(m, o.max_n, m == 1 ? 2 : 0)) {
      rec.guarded(show(dims), [&] {
        const GradedDims d(dims);
        auto gr = build_cyclic_quiver_grading(d);
        if (o.fault == "move-basis" && !injected && m >= 2 && !gr.component(1).empty()) {
          auto comps = gr.components();
          comps[0].push_back(comps[1].back());
          comps[1].pop_back();
          std::vector<int> table;
          for (std::size_t a = 0; a < dims.size(); ++a)
            for (std::size_t b = 0; b < dims.size(); ++b) table.push_back(gr.block_index(a, b));
          gr = CyclicGrading(d, comps, table);
          injected = true;
        }
        const auto rep = verify_grading(gr);
        bool dims_ok = rep.total_dim == d.n() * d.n() - 1;
        for (int i = 0; i < m; ++i) {
          std::size_t s = 0;
          for (int j = 0; j < m; ++j) s += static_cast<std::size_t>(dims[j] * dims[(j + i) % m]);
          if (i == 0) s -= 1;
          dims_ok = dims_ok && gr.component(i).size() == s;
        }
        rec.check(rep.passed && dims_ok, show(dims));
      });
    }
  return rec.take();
}

PropertyResult collapse_property(const VerifyOptions& o) {
  Recorder rec("z-collapse");
  for (int m = 2; m <= 4; ++m)
    for (const auto& dims : profiles(m, o.max_n, 1)) {
      rec.guarded(show(dims), [&] {
        const GradedDims d(dims);
        const auto a = zgrading_to_cyclic(build_chain_zgrading(d));
        const auto b = build_cyclic_quiver_grading(d);
        bool ok = true;
        for (int i = 0; i < m; ++i)
          ok = ok && same_span(sparse_all(a.component(i)), sparse_all(b.component(i)), d.n() * d.n());
        rec.check(ok, show(dims));
      });
    }
  return rec.take();
}

PropertyResult restriction_property(const VerifyOptions& o) {
  Recorder rec("restriction");
  for (int m = 2; m <= 4; ++m)
    for (const auto& dims : profiles(m, o.max_n, 1)) {
      const int k = *std::min_element(dims.begin(), dims.end());
      if (k > 3) continue;
      rec.guarded(show(dims), [&] {
        const auto gr = build_cyclic_quiver_grading(GradedDims(dims));
        const auto sys = build_invariant_system(gr, o.seed);
        const auto rep = restriction_certificate(sys, cartan_candidate(gr));
        std::vector<int> expected;
        std::uint64_t order = 1;
        for (int j = 1; j <= k; ++j) {
          expected.push_back(j * m);
          order *= static_cast<std::uint64_t>(m * j);
        }
        const bool rank_ok = certify_rank(gr, o.seed).rank == static_cast<std::size_t>(k);
        rec.check(rep.passed && sys.degrees == expected && rep.weyl_order_predicted == order &&
                      rep.weyl_order_closed_form == order && rank_ok,
                  show(dims));
      });
    }
  return rec.take();
}

// Conjugation by random block-diagonal g, written out independently of
// check_g0_invariance so that a corrupted evaluation can be injected.
PropertyResult invariance_property(const VerifyOptions& o) {
  Recorder rec("g0-invariance");
  constexpr int trials = 100;
  for (int m = 2; m <= 4; ++m)
    for (const auto& dims : profiles(m, o.max_n, 1)) {
      rec.guarded(show(dims), [&] {
        const GradedDims d(dims);
        const auto sys = build_invariant_system(build_cyclic_quiver_grading(d), o.seed);
        Sampler rng(o.seed + 7);
        const QuiverPoint phi = random_quiver_point(d, rng);
        const auto base = sys.evaluate(phi);
        bool ok = true;
        for (int t = 0; t < trials && ok; ++t) {
          std::vector<Matrix> g, ginv;
          for (int b = 0; b < m; ++b) {
            g.push_back(rng.invertible_matrix(static_cast<std::size_t>(dims[b]), 2));
            ginv.push_back(*inverse(g.back()));
          }
          QuiverPoint moved = phi;
          for (int i = 0; i < m; ++i)
            moved.maps[i] = mat_mul(mat_mul(g[(i + 1) % m], phi.maps[i]), ginv[i]);
          auto values = sys.evaluate(moved);
          if (o.fault == "perturb-invariant" && !values.empty()) values[0] += Scalar(1);
          ok = values == base;
        }
        rec.check(ok, show(dims));
      });
    }
  return rec.take();
}

PropertyResult quasisplit_property(const VerifyOptions& o) {
  Recorder rec("quasi-split");
  for (int m = 2; m <= 4; ++m)
    for (const auto& dims : profiles(m, o.max_n, 0)) {
      rec.guarded(show(dims), [&] {
        const auto rep = quasi_split_classify(build_cyclic_quiver_grading(GradedDims(dims)));
        rec.check(rep.classification == rep.dimension_rule, show(dims));
      });
    }
  const std::vector<std::pair<std::vector<int>, Classification>> witnesses = {
      {{1, 1, 1}, Classification::split},
      {{2, 2, 3}, Classification::quasi_split},
      {{1, 3}, Classification::neither}};
  for (const auto& [dims, expected] : witnesses)
    if (std::accumulate(dims.begin(), dims.end(), 0) <= o.max_n)
      rec.guarded(show(dims), [&] {
        rec.check(quasi_split_classify(build_cyclic_quiver_grading(GradedDims(dims))).classification ==
                      expected,
                  "witness " + show(dims));
      });
  return rec.take();
}

PropertyResult toledo_property(const VerifyOptions& o) {
  Recorder rec("toledo");
  const int top = std::min(4, o.max_n - 1);
  for (int n0 = 1; n0 <= top; ++n0)
    for (int n1 = 1; n1 <= top; ++n1) {
      const std::vector<int> dims{n0, n1};
      rec.guarded(show(dims), [&] {
        const ZGrading z = hodge_zgrading(GradedDims(dims));
        const ToledoCharacter chi = toledo_character(z);
        rec.check(toledo_character(z, {Scalar(7)}).coefficients == chi.coefficients,
                  show(dims) + " scale");
        for (long e0 = -6; e0 <= 6; ++e0) {
          Scalar tau = toledo_invariant({2, dims, {e0, -e0}, 2, 0, 0}, chi);
          if (o.fault == "flip-toledo-sign") tau = -tau;
          rec.check(tau == Scalar(2 * e0), show(dims) + " e0=" + std::to_string(e0));
        }
        for (int r = 1; r <= std::min(n0, n1); ++r) {
          const Matrix e = canonical_nilpotent(z, 1, static_cast<std::size_t>(r));
          const Sl2Triple t = jacobson_morozov(e, z);
          rec.check(t.satisfies_relations() && rank(e) == static_cast<std::size_t>(r) &&
                        toledo_rank(e, chi, z) == Scalar(r),
                    show(dims) + " r=" + std::to_string(r));
        }
      });
    }
  return rec.take();
}

PropertyResult window_property(const VerifyOptions& o) {
  Recorder rec("window");
  for (const auto& dims : profiles(2, std::min(6, o.max_n), 1))
    for (int g = 2; g <= 3; ++g) {
      rec.guarded(show(dims), [&] {
        auto window = enumerate_toledo_window(dims, g);
        if (o.fault == "shift-window")
          for (auto& e : window) e.d += 1;
        const ZGrading z = hodge_zgrading(GradedDims(dims));
        const ToledoCharacter chi = toledo_character(z);
        const int r = std::min(dims[0], dims[1]);
        std::vector<WindowEntry> brute;
        const long reach = static_cast<long>(dims[0] + dims[1]) * g;
        for (long d = -reach; d <= reach; ++d) {
          const auto rep = am_check({2, dims, {d, -d}, g, r, r}, chi, z);
          if (rep.plus_satisfied && rep.minus_satisfied) brute.push_back({d, rep.maximal, rep.cayley});
        }
        rec.check(window == brute, show(dims) + " g=" + std::to_string(g));
      });
    }
  return rec.take();
}

PropertyResult cyclic_am_property(const VerifyOptions& o) {
  Recorder rec("cyclic-am");
  for (int m = 3; m <= 4; ++m)
    for (const auto& dims : profiles(m, o.max_n, 1)) {
      rec.guarded(show(dims), [&] {
        const ZGrading z = hodge_zgrading(GradedDims(dims));
        const ToledoCharacter chi = toledo_character(z);
        const int plus = static_cast<int>(admissible_rank(z, 1));
        const int minus = std::min(dims.front(), dims.back());
        const int g = 2;
        // Independent rank: triple through the generic canonical nilpotent.
        const Matrix e = canonical_nilpotent(z, 1, static_cast<std::size_t>(plus));
        const Scalar rk = chi(jacobson_morozov(e, z).h) / Scalar(2);
        std::vector<long> deg(static_cast<std::size_t>(m), 0);
        bool ok = true;
        for (long a = -2; a <= 2 && ok; ++a)
          for (long b = -2; b <= 2 && ok; ++b) {
            deg[0] = a;
            deg[1] = b;
            deg[static_cast<std::size_t>(m - 1)] = -a - b - (m == 4 ? deg[2] : 0);
            const auto rep = am_check({m, dims, deg, g, plus, minus}, chi, z);
            const Scalar bound = -rk * Scalar(2 * g - 2);
            ok = !rep.minus_guaranteed && !rep.window && rep.rank_plus == rk &&
                 rep.tau_plus_bound == bound && rep.plus_satisfied == (rep.tau_plus >= bound) &&
                 (!(rep.satisfied && rep.at_plus_boundary) || rep.tau_plus == bound);
          }
        rec.check(ok, show(dims));
      });
    }
  return rec.take();
}

PropertyResult hitchin_property(const VerifyOptions& o) {
  Recorder rec("hitchin");
  for (int n = 2; n <= o.max_n; ++n)
    for (int g = 2; g <= 5; ++g) {
      rec.guarded("sl(" + std::to_string(n) + ")", [&] {
        std::vector<int> degrees = invariant_degrees(static_cast<std::size_t>(n));
        if (o.fault == "wrong-hitchin-degree") degrees.back() += 1;
        const long total = base_from_degrees(degrees, g).total_dim;
        rec.check(total == static_cast<long>(n * n - 1) * (g - 1),
                  "sl(" + std::to_string(n) + ") g=" + std::to_string(g));
      });
    }
  for (int m = 2; m <= 4; ++m)
    for (const auto& dims : profiles(m, o.max_n, 1)) {
      rec.guarded(show(dims), [&] {
        const GradedDims d(dims);
        const auto sys = build_invariant_system(build_cyclic_quiver_grading(d), o.seed);
        Sampler rng(o.seed + 13);
        bool ok = true;
        for (int t = 0; t < 50 && ok; ++t) {
          const QuiverPoint phi = random_quiver_point(d, rng);
          auto values = pointwise_hitchin(sys, phi);
          if (o.fault == "perturb-invariant" && !values.empty()) values[0] += Scalar(1);
          // charpoly(phi) = x^{n - mk} p(x^m) with p(y) = sum_j (-1)^j f_j y^{k-j}
          std::vector<Scalar> asc(sys.k + 1);
          asc[sys.k] = 1;
          for (std::size_t j = 1; j <= sys.k; ++j) asc[sys.k - j] = j % 2 ? -values[j - 1] : values[j - 1];
          const Poly expected = Poly(asc).substitute_power(static_cast<unsigned>(m)) *
                                Poly::monomial(Scalar(1), d.n() - static_cast<std::size_t>(m) * sys.k);
          ok = charpoly(assemble(d, phi)) == expected;
        }
        rec.check(ok, show(dims));
      });
    }
  return rec.take();
}

}  // namespace

std::vector<std::string> known_faults() {
  return {"move-basis", "perturb-invariant", "shift-window", "wrong-hitchin-degree", "flip-toledo-sign"};
}

std::vector<PropertyResult> run_verify(const VerifyOptions& o) {
  if (o.max_n < 2) throw ValidationError("field 'max_n': must be at least 2");
  return {grading_property(o),     collapse_property(o),  restriction_property(o),
          invariance_property(o),  quasisplit_property(o), toledo_property(o),
          window_property(o),      cyclic_am_property(o),  hitchin_property(o)};
}

}  // namespace vinberg::cli
