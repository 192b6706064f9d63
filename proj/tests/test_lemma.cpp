#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "soweyl/json_io.hpp"
#include "soweyl/lemma.hpp"

#include <algorithm>
#include <set>

using namespace soweyl;

namespace {

WeylElement element(std::vector<Int> perm_one_based, std::vector<Int> sign) {
  WeylElement w;
  for (Int p : perm_one_based) w.perm.push_back(p - 1);
  w.sign = std::move(sign);
  return w;
}

}  // namespace

TEST_CASE("worked instances come out right") {
  const LemmaInstance good = make_lemma_instance(2, make_vec({3, 2}), -2);
  CHECK(check_condition_1(good));
  CHECK(check_condition_2(good));
  const auto [c3, witnesses] = check_condition_3(good);
  CHECK(c3);
  REQUIRE(witnesses.size() == 1);
  CHECK(witnesses[0] == element({2, 3, 1}, {1, 1, 1}));

  const LemmaReport report = evaluate_instance(good);
  CHECK(report.equivalent);
  CHECK(report.cond1);
  CHECK(report.cond2);
  CHECK(report.cond3);

  const LemmaReport far = evaluate_instance(make_lemma_instance(2, make_vec({3, 2}), 5));
  CHECK_FALSE(far.cond1);
  CHECK_FALSE(far.cond2);
  CHECK_FALSE(far.cond3);
  CHECK(far.equivalent);
  CHECK(far.witnesses.empty());
}

TEST_CASE("a negative last entry flips the witness sign pattern") {
  const LemmaReport report = evaluate_instance(make_lemma_instance(2, make_vec({2, -2}), -2));
  CHECK(report.equivalent);
  CHECK(report.cond3);
  REQUIRE(report.witnesses.size() == 1);
  CHECK(report.witnesses[0] == element({2, 3, 1}, {1, -1, -1}));
}

TEST_CASE("a vanishing last entry kills all three conditions") {
  for (Int d = -7; d <= 1; ++d) {
    const LemmaReport report = evaluate_instance(make_lemma_instance(2, make_vec({1, 0}), d));
    CHECK_FALSE(report.cond1);
    CHECK_FALSE(report.cond2);
    CHECK_FALSE(report.cond3);
    CHECK(report.equivalent);
  }
}

TEST_CASE("condition 3 agrees with a raw search through the whole group") {
  const Parabolic p = build_parabolic(3, {1});
  const RootSystem& rs = p.ambient;
  const std::vector<WeylElement> group = enumerate_group(3);
  const LemmaContext ctx(2);

  for (const Weight& mu : dominant_weights(2, 3)) {
    const auto [lo, hi] = default_d_window(2, mu);
    for (Int d = lo; d <= hi; ++d) {
      std::vector<WeylElement> expected;
      for (const WeylElement& w : group) {
        if (!is_kostant_rep(w, p) || length(w, rs) != 2) continue;
        Weight lambda(3);
        lambda[0] = d;
        lambda[1] = mu[0];
        lambda[2] = mu[1];
        if (is_dominant(dot_action(inverse(w), lambda, rs), rs)) expected.push_back(w);
      }
      std::sort(expected.begin(), expected.end());

      auto [flag, witnesses] = ctx.condition_3(mu, d);
      std::sort(witnesses.begin(), witnesses.end());
      CHECK(witnesses == expected);
      CHECK(flag == (expected.size() == 1));
    }
  }
}

TEST_CASE("contexts cache exactly the half-length representatives") {
  for (Int n = 2; n <= 6; ++n) {
    const LemmaContext ctx(n);
    CHECK(ctx.n() == n);
    CHECK(ctx.half_length_reps().size() == 2);
    for (const WeylElement& w : ctx.half_length_reps())
      CHECK(length(w, ctx.ambient()) == n);
  }
}

TEST_CASE("instance validation") {
  CHECK(oracles::error_code_of([] { make_lemma_instance(3, make_vec({1, 1, 0}), 0); }) ==
        "n-not-even");
  CHECK(make_lemma_instance(3, make_vec({1, 1, 0}), 0, true).n == 3);
  CHECK(oracles::error_code_of([] { make_lemma_instance(1, make_vec({0}), 0); }) ==
        "rank-too-small");
  CHECK(oracles::error_code_of([] { make_lemma_instance(2, make_vec({1, 2}), 0); }) ==
        "mu-not-dominant");
  CHECK(oracles::error_code_of([] { make_lemma_instance(4, make_vec({1, 0}), 0); }) ==
        "dimension-mismatch");
}

TEST_CASE("the default window brackets the inner range with slack") {
  CHECK(default_d_window(2, make_vec({3, 2})) == std::pair<Int, Int>{-7, 3});
  CHECK(default_d_window(4, make_vec({1, 0, 0, 0})) == std::pair<Int, Int>{-7, -1});
}

TEST_CASE("dominant weight enumeration is exhaustive, ordered, and exact") {
  CHECK(dominant_weights(2, 4).size() == 25);
  CHECK(dominant_weights(2, 5).size() == 36);

  const std::vector<Weight> listed = dominant_weights(3, 2);
  CHECK(listed.size() == 14);

  // Independent filter over the full cube.
  std::size_t direct = 0;
  for (Int a = -2; a <= 2; ++a)
    for (Int b = -2; b <= 2; ++b)
      for (Int c = -2; c <= 2; ++c)
        if (is_dominant_chain(make_vec({a, b, c}))) ++direct;
  CHECK(direct == listed.size());

  std::set<std::vector<Int>> seen;
  for (std::size_t i = 0; i < listed.size(); ++i) {
    CHECK(is_dominant_chain(listed[i]));
    CHECK(listed[i][0] <= 2);
    seen.insert(to_std(listed[i]));
    if (i > 0) CHECK(lex_less(listed[i - 1], listed[i]));
  }
  CHECK(seen.size() == listed.size());
}

TEST_CASE("sweeps agree everywhere and the tallies add up") {
  SweepOptions options;
  options.n_values = {2};
  options.mu_max = 4;
  const SweepReport report = verify_equivalence(options);

  Int expected_instances = 0;
  for (const Weight& mu : dominant_weights(2, 4)) {
    const auto [lo, hi] = default_d_window(2, mu);
    expected_instances += hi - lo + 1;
  }
  CHECK(report.instances == expected_instances);
  CHECK(report.agreements == report.instances);
  CHECK(report.counterexamples.empty());
  CHECK(report.ratio_coverage_ok);
  CHECK(report.uniqueness_ok);
  CHECK(report.max_witness_count == 1);
  CHECK(report.runtime_ms == 0);
  CHECK_FALSE(report.budget_exceeded);
  CHECK(report.odd_instances == 0);
}

TEST_CASE("worker count never changes the report") {
  SweepOptions serial;
  serial.n_values = {2, 4};
  serial.mu_max = 3;
  SweepOptions parallel = serial;
  parallel.jobs = 4;
  CHECK(to_json(verify_equivalence(serial)).dump() ==
        to_json(verify_equivalence(parallel)).dump());
}

TEST_CASE("explicit windows are honored and narrow ones are refused") {
  SweepOptions options;
  options.n_values = {2};
  options.mu_max = 2;
  options.d_window = std::pair<Int, Int>{-10, 5};
  const SweepReport report = verify_equivalence(options);
  CHECK(report.instances == static_cast<Int>(dominant_weights(2, 2).size()) * 16);
  CHECK(report.agreements == report.instances);

  options.d_window = std::pair<Int, Int>{-4, -1};
  CHECK(oracles::error_code_of([&] { verify_equivalence(options); }) == "d-window-too-narrow");
}

TEST_CASE("the budget cuts at a weight boundary and flags the report") {
  SweepOptions options;
  options.n_values = {2};
  options.mu_max = 4;
  options.max_instances = 10;
  const SweepReport report = verify_equivalence(options);
  CHECK(report.budget_exceeded);
  // Only the first weight's window (7 instances) fits under the budget.
  CHECK(report.instances == 7);
  CHECK(report.agreements == 7);
}

TEST_CASE("odd ranks are explored but never asserted") {
  SweepOptions options;
  options.n_values = {3};
  options.mu_max = 2;
  CHECK(oracles::error_code_of([&] { verify_equivalence(options); }) == "n-not-even");

  options.allow_odd_n = true;
  const SweepReport report = verify_equivalence(options);
  CHECK(report.instances == 0);
  CHECK(report.counterexamples.empty());
  CHECK(report.odd_instances > 0);
  CHECK(report.odd_agreements + static_cast<Int>(report.odd_disagreements.size()) ==
        report.odd_instances);
}

TEST_CASE("option validation") {
  SweepOptions options;
  options.n_values = {2};
  options.mu_max = -1;
  CHECK(oracles::error_code_of([&] { verify_equivalence(options); }) == "invalid-mu-max");
  options.mu_max = 2;
  options.jobs = 0;
  CHECK(oracles::error_code_of([&] { verify_equivalence(options); }) == "invalid-jobs");
  options.jobs = 1;
  options.n_values = {1};
  CHECK(oracles::error_code_of([&] { verify_equivalence(options); }) == "rank-too-small");
}

TEST_CASE("reports serialize with the pinned schema") {
  const LemmaReport single = evaluate_instance(make_lemma_instance(2, make_vec({3, 2}), -2));
  const Json j = to_json(single);
  CHECK(j["instance"]["n"] == 2);
  CHECK(j["instance"]["mu"] == Json::array({3, 2}));
  CHECK(j["instance"]["d"] == -2);
  CHECK(j["cond1"] == true);
  CHECK(j["cond2"] == true);
  CHECK(j["cond3"] == true);
  CHECK(j["equivalent"] == true);
  REQUIRE(j["witnesses"].size() == 1);
  CHECK(j["witnesses"][0]["perm"] == Json::array({2, 3, 1}));
  CHECK(j["witnesses"][0]["signs"] == Json::array({1, 1, 1}));

  SweepOptions options;
  options.n_values = {2};
  options.mu_max = 1;
  const Json sweep = to_json(verify_equivalence(options));
  for (const char* key : {"instances", "agreements", "counterexamples", "ratio_coverage_ok",
                          "uniqueness_ok", "max_witness_count", "runtime_ms", "budget_exceeded"})
    CHECK(sweep.contains(key));
  CHECK_FALSE(sweep.contains("odd_n_exploration"));
}
