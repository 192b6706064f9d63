#pragma once

#include "soweyl/parabolic.hpp"
#include "soweyl/rootdata.hpp"
#include "soweyl/types.hpp"
#include "soweyl/weyl.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace soweyl {

// One instance of the three-way equivalence: a rank n, a dominant integral
// weight mu for SO(n,n), and a twisting exponent d.
struct LemmaInstance {
  Int n = 0;
  Weight mu;
  Int d = 0;
};

// Validates n >= 2 (even unless allow_odd_n), mu dominant of rank n.
LemmaInstance make_lemma_instance(Int n, Weight mu, Int d, bool allow_odd_n = false);

// (1) Both -n and 1-n are critical for the twist by |.|^{-d}.
bool check_condition_1(const LemmaInstance& inst);

// (2) 1 - |mu_n| <= n + d <= |mu_n| - 1.
bool check_condition_2(const LemmaInstance& inst);

// (3) Exactly one Kostant representative w for the first-simple-root
// parabolic of D_{n+1} has length n and makes
// dot_action(inverse(w), (d, mu_1, ..., mu_n)) dominant. Returns the flag
// together with every witness found.
std::pair<bool, std::vector<WeylElement>> check_condition_3(const LemmaInstance& inst);

struct LemmaReport {
  LemmaInstance instance;
  bool cond1 = false;
  bool cond2 = false;
  bool cond3 = false;
  std::vector<WeylElement> witnesses;
  bool equivalent = false;  // cond1 == cond2 == cond3
};

LemmaReport evaluate_instance(const LemmaInstance& inst);

// Per-n cache for sweeps: ambient D_{n+1}, its first-simple-root parabolic,
// and the length-n representatives with precomputed inverses.
class LemmaContext {
 public:
  explicit LemmaContext(Int n);

  Int n() const { return n_; }
  const RootSystem& ambient() const { return ambient_; }
  const Parabolic& parabolic() const { return parabolic_; }
  const std::vector<WeylElement>& half_length_reps() const { return reps_; }

  std::pair<bool, std::vector<WeylElement>> condition_3(const Weight& mu, Int d) const;

 private:
  Int n_;
  RootSystem ambient_;
  Parabolic parabolic_;
  std::vector<WeylElement> reps_;
  std::vector<WeylElement> rep_inverses_;
};

// [-n - |mu_n| - 3, -n + |mu_n| + 3]; strictly contains every d for which
// condition (2) can hold, with slack on both sides.
std::pair<Int, Int> default_d_window(Int n, const Weight& mu);

// All dominant integral mu of rank n with mu_1 <= mu_max, lexicographic.
std::vector<Weight> dominant_weights(Int n, Int mu_max);

struct SweepOptions {
  std::vector<Int> n_values;
  Int mu_max = 4;
  std::optional<std::pair<Int, Int>> d_window;  // per-instance default when empty
  Int max_instances = 10'000'000;
  Int jobs = 1;
  bool allow_odd_n = false;
  bool measure_runtime = false;
};

struct SweepReport {
  Int instances = 0;
  Int agreements = 0;
  std::vector<LemmaReport> counterexamples;
  bool ratio_coverage_ok = true;
  bool uniqueness_ok = true;
  Int max_witness_count = 0;
  Int runtime_ms = 0;
  bool budget_exceeded = false;

  // Exploratory odd-n tallies; reported, never asserted.
  Int odd_instances = 0;
  Int odd_agreements = 0;
  std::vector<LemmaReport> odd_disagreements;
};

// Exhaustive check of (1) <=> (2) <=> (3) over the requested n values, all
// dominant mu with mu_1 <= mu_max, and every d in the window. Also checks
// witness uniqueness and that the successive-ratio pairs cover the critical
// set. Deterministic for fixed options regardless of jobs.
SweepReport verify_equivalence(const SweepOptions& options);

}  // namespace soweyl
