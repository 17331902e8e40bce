#include "doctest.h"
#include "oracles.hpp"

#include "vinberg/error.hpp"
#include "vinberg/hitchin.hpp"

using namespace vinberg;

namespace {

// Riemann-Roch on a genus g curve: h0(K^d) - h0(K^{1-d}) = (2d - 1)(g - 1).
long rr_oracle(int g, int d) {
  if (d == 0) return 1;
  if (d == 1) return g;
  return (2L * d - 1) * (g - 1);  // h0(K^{1-d}) = 0 for d >= 2
}

}  // namespace

TEST_CASE("invariant degrees") {
  CHECK(invariant_degrees(2) == std::vector<int>{2});
  CHECK(invariant_degrees(4) == std::vector<int>{2, 3, 4});
  CHECK(invariant_degrees(build_cyclic_quiver_grading(GradedDims(std::vector<int>{1, 1}))) ==
        std::vector<int>{2});
  CHECK(invariant_degrees(build_cyclic_quiver_grading(GradedDims(std::vector<int>{2, 3, 2}))) ==
        std::vector<int>{3, 6});
}

TEST_CASE("h0 of powers of the canonical bundle") {
  CHECK(h0_kpower(2, 2) == 3);
  CHECK(h0_kpower(3, 1) == 3);
  CHECK(h0_kpower(2, 0) == 1);
  CHECK_THROWS_AS(h0_kpower(1, 2), ValidationError);
  CHECK_THROWS_AS(h0_kpower(2, -1), ValidationError);
  for (int g = 2; g <= 6; ++g)
    for (int d = 0; d <= 8; ++d) CHECK(h0_kpower(g, d) == rr_oracle(g, d));
}

TEST_CASE("base dimensions") {
  const auto b2 = base_dimension(2, 2);
  CHECK(b2.degrees == std::vector<int>{2});
  CHECK(b2.total_dim == 3);
  const auto b3 = base_dimension(3, 2);
  CHECK(b3.summand_dims == std::vector<long>{3, 5});
  CHECK(b3.total_dim == 8);
  CHECK(b3.identity_ok);
  for (std::size_t n = 2; n <= 8; ++n)
    for (int g = 2; g <= 5; ++g)
      CHECK(base_dimension(n, g).total_dim == static_cast<long>(n * n - 1) * (g - 1));
  const auto q = base_dimension(build_cyclic_quiver_grading(GradedDims(std::vector<int>{1, 1})), 2);
  CHECK(q.degrees == std::vector<int>{2});
  CHECK(q.total_dim == 3);
  CHECK(q.literature_confirmed);
  const auto u = base_dimension(build_cyclic_quiver_grading(GradedDims(std::vector<int>{1, 3})), 2);
  CHECK_FALSE(u.literature_confirmed);
}

TEST_CASE("pointwise Hitchin map") {
  const GradedDims d(std::vector<int>{1, 1});
  const auto sys = build_invariant_system(build_cyclic_quiver_grading(d));
  CHECK(pointwise_hitchin(sys, zero_quiver_point(d)) == std::vector<Scalar>{Scalar(0)});
  CHECK(pointwise_hitchin(sys, QuiverPoint{{Matrix{{2}}, Matrix{{3}}}}) == std::vector<Scalar>{Scalar(6)});
  CHECK_THROWS_AS(pointwise_hitchin(sys, QuiverPoint{{Matrix{{2, 1}}, Matrix{{3}}}}), DimensionError);
}
