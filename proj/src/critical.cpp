#include "soweyl/critical.hpp"

#include "soweyl/parabolic.hpp"
#include "soweyl/rootdata.hpp"

#include <algorithm>
#include <string>

namespace soweyl {

SOWeightData::SOWeightData(Int n_, Weight mu_) : n(n_), mu(std::move(mu_)) {
  if (n < 2 || n % 2 != 0)
    throw Error("n-not-even", "SO(n,n) weight data needs even n >= 2, got " + std::to_string(n));
  if (static_cast<Int>(mu.size()) != n)
    throw Error("dimension-mismatch",
                "mu has rank " + std::to_string(mu.size()) + ", expected " + std::to_string(n));
  if (!is_dominant_chain(mu))
    throw Error("mu-not-dominant", "need mu_1 >= mu_2 >= ... >= mu_{n-1} >= |mu_n|");
}

std::vector<Int> critical_set_so(const Weight& mu) {
  if (mu.size() < 1) throw Error("dimension-mismatch", "mu must be nonempty");
  if (!is_dominant_chain(mu))
    throw Error("mu-not-dominant", "need mu_1 >= mu_2 >= ... >= mu_{n-1} >= |mu_n|");
  const Int a = std::abs(mu[mu.size() - 1]);
  std::vector<Int> set;
  for (Int s = 1 - a; s <= a; ++s) set.push_back(s);
  return set;
}

std::vector<Int> critical_set_so(const SOWeightData& w) { return critical_set_so(w.mu); }

std::vector<Int> critical_set_rankin_selberg(Int k, Int l) {
  if (k < 1 || l < 1) throw Error("weights-not-positive", "modular weights must be >= 1");
  if (k < l) throw Error("weights-out-of-order", "need k >= l");
  std::vector<Int> set;
  for (Int m = l; m < k; ++m) set.push_back(m);
  return set;
}

bool is_critical_twisted(Int s, const TwistData& t, const Weight& mu) {
  const std::vector<Int> set = critical_set_so(mu);
  return std::binary_search(set.begin(), set.end(), s - t.d);
}

bool is_critical_twisted(Int s, const TwistData& t, const SOWeightData& w) {
  return is_critical_twisted(s, t, w.mu);
}

std::optional<std::pair<Int, Int>> ratio_argument_map(const TwistData& t, Int n,
                                                      const Weight& mu) {
  // The ratio at the twisted points -n, 1-n compares the untwisted values
  // -n - d and 1 - n - d; the pair exists when both twisted points are
  // critical, and its entries then lie in the untwisted critical set.
  if (is_critical_twisted(-n, t, mu) && is_critical_twisted(1 - n, t, mu))
    return std::pair<Int, Int>{-n - t.d, 1 - n - t.d};
  return std::nullopt;
}

std::optional<std::pair<Int, Int>> ratio_argument_map(const TwistData& t, const SOWeightData& w) {
  return ratio_argument_map(t, w.n, w.mu);
}

Int cohomological_degree(Int n) {
  if (n < 2 || n % 2 != 0)
    throw Error("n-not-even", "cohomological degree needs even n >= 2, got " + std::to_string(n));

  const RootSystem rs = build_root_system(n);
  const Int dim_group = static_cast<Int>(rs.roots.size()) + n;
  const Int dim_compact = n * (n - 1);  // SO(n) x SO(n)
  const Int dim_symmetric_space = dim_group - dim_compact;

  const Parabolic p = build_parabolic(n + 1, {1});
  const Int dim_nilradical = static_cast<Int>(p.nilradical_roots.size());

  return dim_symmetric_space / 2 + dim_nilradical / 2;
}

}  // namespace soweyl
