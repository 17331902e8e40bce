#include "doctest.h"
#include "oracles.hpp"

#include "vinberg/echelon.hpp"
#include "vinberg/error.hpp"
#include "vinberg/graded_lie.hpp"

using namespace vinberg;

namespace {

std::vector<SparseVector> sparse_all(const std::vector<Matrix>& xs) {
  std::vector<SparseVector> out;
  for (const auto& x : xs) out.push_back(sparse_of(x));
  return out;
}

}  // namespace

TEST_CASE("GradedDims validation") {
  CHECK_THROWS_AS(GradedDims(std::vector<int>{1}).validate(), ValidationError);
  CHECK_THROWS_AS(GradedDims(2, {1, -1, 2}).validate(), ValidationError);
  CHECK_THROWS_AS(GradedDims(0, {}).validate(), ValidationError);
  CHECK_NOTHROW(GradedDims(std::vector<int>{0, 2}).validate());
  const GradedDims d(std::vector<int>{2, 0, 3});
  CHECK(d.n() == 5);
  CHECK_FALSE(d.full_support());
  CHECK(d.offsets() == std::vector<std::size_t>{0, 2, 2});
}

TEST_CASE("sl basis has n^2 - 1 traceless independent elements") {
  for (std::size_t n = 2; n <= 5; ++n) {
    const auto basis = sl_basis(n);
    CHECK(basis.size() == n * n - 1);
    SubspaceEchelon e(n * n);
    for (const auto& b : basis) {
      CHECK(b.trace().is_zero());
      CHECK(e.insert(sparse_of(b)));
    }
  }
}

TEST_CASE("cyclic quiver grading examples") {
  auto dims_of = [](std::vector<int> d) {
    return build_cyclic_quiver_grading(GradedDims(std::move(d))).component_dims();
  };
  CHECK(dims_of({1, 1}) == std::vector<std::size_t>{1, 2});
  CHECK(dims_of({1, 1, 1}) == std::vector<std::size_t>{2, 3, 3});
  CHECK(dims_of({2, 3}) == std::vector<std::size_t>{12, 12});
  CHECK(dims_of({4}) == std::vector<std::size_t>{15});
  CHECK_THROWS_AS(build_cyclic_quiver_grading(GradedDims(std::vector<int>{1, 0})), ValidationError);
}

TEST_CASE("cyclic quiver grading equals brute-force enumeration") {
  for (int m = 1; m <= 3; ++m)
    for (const auto& dims : oracle::profiles(m, 5)) {
      const auto gr = build_cyclic_quiver_grading(GradedDims(dims));
      const auto ref = oracle::enumerate_quiver(dims);
      for (int i = 0; i < m; ++i) {
        CHECK(gr.component(i).size() == oracle::quiver_dim(dims, i));
        CHECK(same_span(sparse_all(gr.component(i)), sparse_all(ref[static_cast<std::size_t>(i)]),
                        gr.n() * gr.n()));
      }
    }
}

TEST_CASE("verify_grading passes on built gradings") {
  for (int m = 1; m <= 4; ++m)
    for (const auto& dims : oracle::profiles(m, 5)) {
      const auto rep = verify_grading(build_cyclic_quiver_grading(GradedDims(dims)));
      CHECK(rep.passed);
      CHECK(rep.total_dim == rep.expected_dim);
    }
}

TEST_CASE("verify_grading catches a basis vector moved between components") {
  const auto gr = build_cyclic_quiver_grading(GradedDims(std::vector<int>{1, 2}));
  auto comps = gr.components();
  comps[0].push_back(comps[1].back());
  comps[1].pop_back();
  const CyclicGrading bad(gr.source(), comps, {0, 1, 1, 0});
  const auto rep = verify_grading(bad);
  CHECK_FALSE(rep.passed);
  REQUIRE_FALSE(rep.failures.empty());
  const auto& f = rep.failures.front();
  const Matrix br = bracket(bad.component(f.i)[f.first], bad.component(f.j)[f.second]);
  CHECK_FALSE(br.is_zero());
}

TEST_CASE("verify_grading on a single component is sl(n)") {
  const auto rep = verify_grading(build_cyclic_quiver_grading(GradedDims(std::vector<int>{3})));
  CHECK(rep.passed);
  CHECK(rep.total_dim == 8);
}

TEST_CASE("quiver points assemble into g_1") {
  const GradedDims d(std::vector<int>{2, 1, 3});
  const auto gr = build_cyclic_quiver_grading(d);
  Sampler rng(4);
  const QuiverPoint phi = random_quiver_point(d, rng);
  const Matrix x = assemble(d, phi);
  CHECK(gr.project(x, 1) == x);
  CHECK(extract_quiver_point(d, x) == phi);
  QuiverPoint bad = phi;
  bad.maps[0] = Matrix(2, 2);
  CHECK_THROWS_AS(check_shape(d, bad), DimensionError);
}

TEST_CASE("chain Z-grading pieces") {
  const auto z = build_chain_zgrading(GradedDims(std::vector<int>{1, 1, 1}));
  CHECK(z.piece(0).size() == 2);
  CHECK(z.piece(1).size() == 2);
  CHECK(z.piece(2).size() == 1);
  CHECK(z.piece(-1).size() == 2);
  CHECK(z.piece(-2).size() == 1);
  CHECK(z.zeta.trace().is_zero());
  for (const auto& [j, basis] : z.pieces)
    for (const auto& x : basis) CHECK(ad_eigenvalue(z.zeta, x) == Scalar(j));
  CHECK_THROWS_AS(build_chain_zgrading(GradedDims(std::vector<int>{1, 0, 1})), ValidationError);
  const auto op = z.opposite();
  CHECK(op.zeta == -z.zeta);
  CHECK(op.piece(2).size() == z.piece(-2).size());
}

TEST_CASE("Z to Z/m collapse matches the cyclic quiver") {
  for (int m = 2; m <= 4; ++m)
    for (const auto& dims : oracle::profiles(m, 6, 1)) {
      const GradedDims d(dims);
      const auto a = zgrading_to_cyclic(build_chain_zgrading(d));
      const auto b = build_cyclic_quiver_grading(d);
      for (int i = 0; i < m; ++i)
        CHECK(same_span(sparse_all(a.component(i)), sparse_all(b.component(i)), d.n() * d.n()));
    }
  const auto one = build_chain_zgrading(GradedDims(std::vector<int>{2}));
  CHECK_THROWS_AS(zgrading_to_cyclic(one), ValidationError);
}

TEST_CASE("s-subspaces of sl(n)") {
  const auto zero = s_subspaces(Matrix(3, 3));
  CHECK(zero.parabolic.size() == 8);
  CHECK(zero.v_zero.size() == 8);
  const auto s2 = s_subspaces(Matrix{{1, 0}, {0, -1}});
  CHECK(s2.levi.size() == 1);
  CHECK(s2.parabolic.size() == 2);
  const auto s3 = s_subspaces(Matrix{{1, 0, 0}, {0, 0, 0}, {0, 0, -1}});
  CHECK(s3.parabolic.size() == 5);
  CHECK(s3.levi.size() == 2);
  CHECK_THROWS_AS(s_subspaces(Matrix{{1, 1}, {0, -1}}), ValidationError);
  CHECK_THROWS_AS(s_subspaces(Matrix{{1, 0}, {0, 1}}), ValidationError);
  // the parabolic is closed under brackets
  SubspaceEchelon p(9);
  for (const auto& x : s3.parabolic) p.insert(sparse_of(x));
  for (const auto& x : s3.parabolic)
    for (const auto& y : s3.parabolic) CHECK(p.contains(sparse_of(bracket(x, y))));
}

TEST_CASE("character chi_s") {
  CHECK(character_chi_s(Matrix(2, 2), Matrix{{1, 0}, {0, -1}}).is_zero());
  CHECK(character_chi_s(Matrix{{1, 0}, {0, -1}}, Matrix{{1, 0}, {0, -1}}) == Scalar(2));
}
