#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "soweyl/critical.hpp"
#include "soweyl/parabolic.hpp"

#include <algorithm>
#include <random>

using namespace soweyl;

TEST_CASE("critical sets match the closed form on worked examples") {
  CHECK(critical_set_so(SOWeightData(2, make_vec({3, 2}))) == std::vector<Int>{-1, 0, 1, 2});
  CHECK(critical_set_so(SOWeightData(4, make_vec({5, 5, 2, 1}))) == std::vector<Int>{0, 1});
  CHECK(critical_set_so(SOWeightData(2, make_vec({3, 0}))).empty());
  CHECK(critical_set_so(SOWeightData(4, make_vec({0, 0, 0, 0}))).empty());
  // Only |mu_n| matters.
  CHECK(critical_set_so(SOWeightData(2, make_vec({3, -2}))) ==
        critical_set_so(SOWeightData(2, make_vec({3, 2}))));
}

TEST_CASE("weight data validation rejects the malformed") {
  CHECK(oracles::error_code_of([] { SOWeightData(3, make_vec({2, 1, 0})); }) == "n-not-even");
  CHECK(oracles::error_code_of([] { SOWeightData(0, Vec{}); }) == "n-not-even");
  CHECK(oracles::error_code_of([] { SOWeightData(4, make_vec({2, 1, 0})); }) ==
        "dimension-mismatch");
  CHECK(oracles::error_code_of([] { SOWeightData(2, make_vec({1, 2})); }) == "mu-not-dominant");
  CHECK(oracles::error_code_of([] { SOWeightData(4, make_vec({3, 1, 1, -2})); }) ==
        "mu-not-dominant");
  CHECK(oracles::error_code_of([] { critical_set_so(make_vec({1, 2})); }) == "mu-not-dominant");
}

TEST_CASE("critical set shape holds across random dominant weights") {
  std::mt19937_64 rng(424242);
  for (int trial = 0; trial < 200; ++trial) {
    const Int n = 2 * (1 + static_cast<Int>(rng() % 4));
    const Weight mu = oracles::random_dominant_weight(rng, n, 9);
    const SOWeightData w(n, mu);
    const std::vector<Int> set = critical_set_so(w);
    const Int a = std::abs(mu[mu.size() - 1]);

    CHECK(static_cast<Int>(set.size()) == 2 * a);
    CHECK(set.empty() == (a == 0));
    for (std::size_t i = 0; i + 1 < set.size(); ++i) CHECK(set[i + 1] == set[i] + 1);
    // Symmetry under s -> 1 - s.
    for (Int s : set) CHECK(std::binary_search(set.begin(), set.end(), 1 - s));
    if (a >= 1) CHECK(set.size() >= 2);
  }
}

TEST_CASE("two-weight critical sets stay between the weights") {
  CHECK(critical_set_rankin_selberg(12, 8) == std::vector<Int>{8, 9, 10, 11});
  CHECK(critical_set_rankin_selberg(5, 5).empty());
  CHECK(critical_set_rankin_selberg(6, 5) == std::vector<Int>{5});
  CHECK(oracles::error_code_of([] { critical_set_rankin_selberg(5, 8); }) ==
        "weights-out-of-order");
  CHECK(oracles::error_code_of([] { critical_set_rankin_selberg(0, 0); }) ==
        "weights-not-positive");
  CHECK(oracles::error_code_of([] { critical_set_rankin_selberg(4, -1); }) ==
        "weights-not-positive");
}

TEST_CASE("twisting slides the critical window by the exponent") {
  const SOWeightData w(2, make_vec({3, 2}));
  CHECK(is_critical_twisted(-2, TwistData{-2, {}}, w));   // -2 - (-2) = 0
  CHECK(is_critical_twisted(-1, TwistData{-2, {}}, w));   // 1
  CHECK_FALSE(is_critical_twisted(-2, TwistData{0, {}}, w));
  const std::vector<Int> plain = critical_set_so(w);
  for (Int s = -4; s <= 4; ++s) {
    const bool untwisted = is_critical_twisted(s, TwistData{0, {}}, w);
    CHECK(untwisted == std::binary_search(plain.begin(), plain.end(), s));
  }

  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const Weight mu = oracles::random_dominant_weight(rng, 4, 6);
    const Int s = static_cast<Int>(rng() % 21) - 10;
    const Int d = static_cast<Int>(rng() % 11) - 5;
    const Int c = static_cast<Int>(rng() % 7) - 3;
    CHECK(is_critical_twisted(s, TwistData{d, {}}, mu) ==
          is_critical_twisted(s + c, TwistData{d + c, {}}, mu));
  }
}

TEST_CASE("ratio pairs appear exactly when both twisted points are critical") {
  const SOWeightData w(2, make_vec({3, 2}));
  CHECK(ratio_argument_map(TwistData{-3, {}}, w) == std::pair<Int, Int>{1, 2});
  CHECK(ratio_argument_map(TwistData{-1, {}}, w) == std::pair<Int, Int>{-1, 0});
  CHECK_FALSE(ratio_argument_map(TwistData{0, {}}, w).has_value());
  CHECK_FALSE(ratio_argument_map(TwistData{-6, {}}, w).has_value());

  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const Int n = 2 * (1 + static_cast<Int>(rng() % 3));
    const Weight mu = oracles::random_dominant_weight(rng, n, 7);
    const std::vector<Int> set = critical_set_so(mu);
    const Int d = -n - 8 + static_cast<Int>(rng() % 17);
    const TwistData t{d, {}};
    const auto pair = ratio_argument_map(t, n, mu);

    CHECK(pair.has_value() ==
          (is_critical_twisted(-n, t, mu) && is_critical_twisted(1 - n, t, mu)));
    if (pair) {
      CHECK(pair->second == pair->first + 1);
      CHECK(std::binary_search(set.begin(), set.end(), pair->first));
      CHECK(std::binary_search(set.begin(), set.end(), pair->second));
    }
  }
}

TEST_CASE("first components of the pairs sweep the set but its top point") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 50; ++trial) {
    const Int n = 2 * (1 + static_cast<Int>(rng() % 3));
    const Weight mu = oracles::random_dominant_weight(rng, n, 6);
    const Int a = std::abs(mu[mu.size() - 1]);

    std::vector<Int> firsts;
    for (Int d = -n - a - 4; d <= -n + a + 4; ++d)
      if (const auto pair = ratio_argument_map(TwistData{d, {}}, n, mu))
        firsts.push_back(pair->first);
    std::sort(firsts.begin(), firsts.end());

    std::vector<Int> expected;
    for (Int s = 1 - a; s <= a - 1; ++s) expected.push_back(s);
    CHECK(firsts == expected);
  }
}

TEST_CASE("bottom degree follows the quadratic formula out of the root data") {
  CHECK(cohomological_degree(2) == 4);
  CHECK(cohomological_degree(4) == 12);
  CHECK(cohomological_degree(6) == 24);
  CHECK(cohomological_degree(8) == 40);
  for (Int n = 2; n <= 10; n += 2) {
    CHECK(cohomological_degree(n) == n * n / 2 + n);
    // Half the nilradical dimension accounts for the linear term.
    const Parabolic p = build_parabolic(n + 1, {1});
    CHECK(static_cast<Int>(p.nilradical_roots.size()) / 2 == n);
  }
  CHECK(oracles::error_code_of([] { cohomological_degree(3); }) == "n-not-even");
  CHECK(oracles::error_code_of([] { cohomological_degree(0); }) == "n-not-even");
}
