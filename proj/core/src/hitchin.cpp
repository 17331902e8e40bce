#include "vinberg/hitchin.hpp"

#include <algorithm>

#include "vinberg/error.hpp"

namespace vinberg {

std::vector<int> invariant_degrees(std::size_t n) {
  if (n < 2) throw ValidationError("n: must be at least 2");
  std::vector<int> out;
  for (std::size_t d = 2; d <= n; ++d) out.push_back(static_cast<int>(d));
  return out;
}

std::vector<int> invariant_degrees(const CyclicGrading& gr, std::uint64_t seed) {
  if (gr.m() == 1) return invariant_degrees(gr.n());
  return build_invariant_system(gr, seed).degrees;
}

long h0_kpower(int genus, int d) {
  if (genus < 2) throw ValidationError("genus: must be at least 2");
  if (d < 0) throw ValidationError("degree: must be nonnegative");
  if (d == 0) return 1;
  if (d == 1) return genus;
  return static_cast<long>(2 * d - 1) * (genus - 1);
}

HitchinBase base_from_degrees(std::vector<int> degrees, int genus) {
  HitchinBase b;
  b.genus = genus;
  for (int d : degrees) {
    b.summand_dims.push_back(h0_kpower(genus, d));
    b.total_dim += b.summand_dims.back();
  }
  b.degrees = std::move(degrees);
  return b;
}

HitchinBase base_dimension(std::size_t n, int genus) {
  HitchinBase b = base_from_degrees(invariant_degrees(n), genus);
  b.identity_checked = true;
  b.identity_ok = b.total_dim == static_cast<long>(n * n - 1) * (genus - 1);
  if (!b.identity_ok) throw CertificationError("Hitchin base dimension differs from (n^2-1)(g-1)");
  return b;
}

HitchinBase base_dimension(const CyclicGrading& gr, int genus, std::uint64_t seed) {
  if (gr.m() == 1) return base_dimension(gr.n(), genus);
  if (genus < 2) throw ValidationError("genus: must be at least 2");
  HitchinBase b = base_from_degrees(invariant_degrees(gr, seed), genus);
  const auto& dims = gr.source().dims;
  const auto [lo, hi] = std::minmax_element(dims.begin(), dims.end());
  b.literature_confirmed = *hi - *lo <= 1;
  return b;
}

std::vector<Scalar> pointwise_hitchin(const InvariantSystem& sys, const QuiverPoint& phi) {
  return sys.evaluate(phi);
}

}  // namespace vinberg
