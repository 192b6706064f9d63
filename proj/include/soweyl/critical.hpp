#pragma once

#include "soweyl/types.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace soweyl {

// Highest weight datum for the split even orthogonal group SO(n,n):
// n even, n >= 2, mu integral and dominant
// (mu_1 >= mu_2 >= ... >= mu_{n-1} >= |mu_n|).
struct SOWeightData {
  Int n = 0;
  Weight mu;

  SOWeightData(Int n_, Weight mu_);
};

// Twisting character |.|^{-d} tensor a finite-order character. The finite
// part carries no combinatorial data and stays an opaque label.
struct TwistData {
  Int d = 0;
  std::string character_label{};
};

// The critical set {1 - |mu_n|, ..., |mu_n|}, in increasing order. Empty
// exactly when mu_n = 0. Weight-level overload for callers that manage
// validation themselves (requires a dominant mu of any positive rank).
std::vector<Int> critical_set_so(const Weight& mu);
std::vector<Int> critical_set_so(const SOWeightData& w);

// Rankin-Selberg critical set {l, ..., k-1} for modular weights k >= l >= 1;
// empty when k = l. Throws Error("weights-out-of-order") for k < l.
std::vector<Int> critical_set_rankin_selberg(Int k, Int l);

// s is critical for the twisted function exactly when s - d lies in the
// untwisted critical set.
bool is_critical_twisted(Int s, const TwistData& t, const Weight& mu);
bool is_critical_twisted(Int s, const TwistData& t, const SOWeightData& w);

// The successive pair (-n - d, 1 - n - d) when both entries are critical for
// the twist, nothing otherwise.
std::optional<std::pair<Int, Int>> ratio_argument_map(const TwistData& t, Int n,
                                                      const Weight& mu);
std::optional<std::pair<Int, Int>> ratio_argument_map(const TwistData& t, const SOWeightData& w);

// Bottom degree q0 = n^2/2 + n carrying the relevant cohomology, derived
// from root data: half the dimension of the symmetric space of SO(n,n) plus
// half the dimension of the nilradical for the first-simple-root parabolic
// of SO(n+1,n+1). Throws Error("n-not-even") for odd or undersized n.
Int cohomological_degree(Int n);

}  // namespace soweyl
