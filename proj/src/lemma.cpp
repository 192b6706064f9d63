#include "soweyl/lemma.hpp"

#include "soweyl/critical.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <memory>
#include <string>
#include <thread>

namespace soweyl {

namespace {

Int abs_last(const Weight& mu) { return std::abs(mu[mu.size() - 1]); }

}  // namespace

LemmaInstance make_lemma_instance(Int n, Weight mu, Int d, bool allow_odd_n) {
  if (n < 2) throw Error("rank-too-small", "instance needs n >= 2, got " + std::to_string(n));
  if (n % 2 != 0 && !allow_odd_n)
    throw Error("n-not-even", "odd n is exploratory, pass allow_odd_n");
  if (static_cast<Int>(mu.size()) != n)
    throw Error("dimension-mismatch",
                "mu has rank " + std::to_string(mu.size()) + ", expected " + std::to_string(n));
  if (!is_dominant_chain(mu))
    throw Error("mu-not-dominant", "need mu_1 >= mu_2 >= ... >= mu_{n-1} >= |mu_n|");
  return LemmaInstance{n, std::move(mu), d};
}

bool check_condition_1(const LemmaInstance& inst) {
  const TwistData twist{inst.d, {}};
  if (inst.n % 2 == 0) {
    const SOWeightData w(inst.n, inst.mu);
    return is_critical_twisted(-inst.n, twist, w) && is_critical_twisted(1 - inst.n, twist, w);
  }
  return is_critical_twisted(-inst.n, twist, inst.mu) &&
         is_critical_twisted(1 - inst.n, twist, inst.mu);
}

bool check_condition_2(const LemmaInstance& inst) {
  const Int a = abs_last(inst.mu);
  return 1 - a <= inst.n + inst.d && inst.n + inst.d <= a - 1;
}

std::pair<bool, std::vector<WeylElement>> check_condition_3(const LemmaInstance& inst) {
  return LemmaContext(inst.n).condition_3(inst.mu, inst.d);
}

LemmaReport evaluate_instance(const LemmaInstance& inst) {
  LemmaReport report;
  report.instance = inst;
  report.cond1 = check_condition_1(inst);
  report.cond2 = check_condition_2(inst);
  auto [c3, witnesses] = check_condition_3(inst);
  report.cond3 = c3;
  report.witnesses = std::move(witnesses);
  report.equivalent = report.cond1 == report.cond2 && report.cond2 == report.cond3;
  return report;
}

LemmaContext::LemmaContext(Int n)
    : n_(n), ambient_(build_root_system(n + 1)), parabolic_(build_parabolic(n + 1, {1})) {
  if (n < 2) throw Error("rank-too-small", "context needs n >= 2");
  for (WeylElement& w : kostant_reps(parabolic_).reps) {
    if (length(w, ambient_) != n) continue;
    rep_inverses_.push_back(inverse(w));
    reps_.push_back(std::move(w));
  }
}

std::pair<bool, std::vector<WeylElement>> LemmaContext::condition_3(const Weight& mu,
                                                                    Int d) const {
  if (static_cast<Int>(mu.size()) != n_)
    throw Error("dimension-mismatch",
                "mu has rank " + std::to_string(mu.size()) + ", expected " + std::to_string(n_));
  Weight lambda(n_ + 1);
  lambda[0] = d;
  lambda.tail(n_) = mu;

  std::vector<WeylElement> witnesses;
  for (std::size_t i = 0; i < reps_.size(); ++i)
    if (is_dominant(dot_action(rep_inverses_[i], lambda, ambient_), ambient_))
      witnesses.push_back(reps_[i]);
  return {witnesses.size() == 1, std::move(witnesses)};
}

std::pair<Int, Int> default_d_window(Int n, const Weight& mu) {
  const Int a = abs_last(mu);
  return {-n - a - 3, -n + a + 3};
}

std::vector<Weight> dominant_weights(Int n, Int mu_max) {
  if (n < 2) throw Error("rank-too-small", "weights need rank >= 2");
  if (mu_max < 0) throw Error("invalid-mu-max", "mu_max must be >= 0");

  std::vector<Weight> out;
  std::vector<Int> cur(static_cast<std::size_t>(n));
  const std::function<void(Int, Int)> fill = [&](Int pos, Int bound) {
    if (pos == n - 1) {
      for (Int last = -bound; last <= bound; ++last) {
        cur[static_cast<std::size_t>(pos)] = last;
        out.push_back(to_vec(cur));
      }
      return;
    }
    for (Int v = 0; v <= bound; ++v) {
      cur[static_cast<std::size_t>(pos)] = v;
      fill(pos + 1, v);
    }
  };
  fill(0, mu_max);

  std::sort(out.begin(), out.end(), VecLess{});
  return out;
}

namespace {

struct Task {
  Int n = 0;
  Weight mu;
  Int d_lo = 0;
  Int d_hi = 0;
  bool odd = false;
};

struct TaskOutcome {
  Int instances = 0;
  Int agreements = 0;
  std::vector<LemmaReport> disagreements;
  bool coverage_ok = true;
  Int max_witnesses = 0;
};

TaskOutcome run_task(const Task& task, const LemmaContext& ctx) {
  TaskOutcome outcome;
  const Int a = std::abs(task.mu[task.mu.size() - 1]);

  std::vector<Int> first_components;
  for (Int d = task.d_lo; d <= task.d_hi; ++d) {
    const LemmaInstance inst{task.n, task.mu, d};
    LemmaReport report;
    report.instance = inst;
    report.cond1 = check_condition_1(inst);
    report.cond2 = check_condition_2(inst);
    auto [c3, witnesses] = ctx.condition_3(task.mu, d);
    report.cond3 = c3;
    report.witnesses = std::move(witnesses);
    report.equivalent = report.cond1 == report.cond2 && report.cond2 == report.cond3;

    outcome.instances += 1;
    outcome.max_witnesses =
        std::max(outcome.max_witnesses, static_cast<Int>(report.witnesses.size()));
    if (report.equivalent)
      outcome.agreements += 1;
    else
      outcome.disagreements.push_back(std::move(report));

    if (const auto pair = ratio_argument_map(TwistData{d, {}}, task.n, task.mu))
      first_components.push_back(pair->first);
  }

  // The successive pairs must tile the critical set: first components hit
  // 1-a, ..., a-1 exactly once each.
  std::sort(first_components.begin(), first_components.end());
  std::vector<Int> expected;
  for (Int s = 1 - a; s <= a - 1; ++s) expected.push_back(s);
  outcome.coverage_ok = first_components == expected;

  return outcome;
}

}  // namespace

SweepReport verify_equivalence(const SweepOptions& options) {
  if (options.mu_max < 0) throw Error("invalid-mu-max", "mu_max must be >= 0");
  if (options.jobs < 1) throw Error("invalid-jobs", "jobs must be >= 1");
  for (Int n : options.n_values) {
    if (n < 2) throw Error("rank-too-small", "sweep needs n >= 2, got " + std::to_string(n));
    if (n % 2 != 0 && !options.allow_odd_n)
      throw Error("n-not-even", "odd n is exploratory, pass allow_odd_n");
  }

  const auto started = std::chrono::steady_clock::now();

  std::vector<Int> distinct_n = options.n_values;
  std::sort(distinct_n.begin(), distinct_n.end());
  distinct_n.erase(std::unique(distinct_n.begin(), distinct_n.end()), distinct_n.end());
  std::vector<std::unique_ptr<LemmaContext>> contexts;
  const auto context_for = [&](Int n) -> const LemmaContext& {
    for (const auto& ctx : contexts)
      if (ctx->n() == n) return *ctx;
    throw std::logic_error("missing context");
  };
  for (Int n : distinct_n) contexts.push_back(std::make_unique<LemmaContext>(n));

  std::vector<Task> tasks;
  for (Int n : options.n_values) {
    for (Weight& mu : dominant_weights(n, options.mu_max)) {
      const Int a = std::abs(mu[mu.size() - 1]);
      Task task;
      task.n = n;
      task.d_lo = options.d_window ? options.d_window->first : default_d_window(n, mu).first;
      task.d_hi = options.d_window ? options.d_window->second : default_d_window(n, mu).second;
      if (task.d_lo >= -n - a || task.d_hi <= -n + a)
        throw Error("d-window-too-narrow",
                    "window must strictly contain [-n-|mu_n|, -n+|mu_n|]");
      task.mu = std::move(mu);
      task.odd = n % 2 != 0;
      tasks.push_back(std::move(task));
    }
  }

  SweepReport report;

  // Budget cut happens at task boundaries so every processed weight carries a
  // complete d window; everything before the cut is still reported.
  std::size_t cutoff = 0;
  Int planned = 0;
  for (; cutoff < tasks.size(); ++cutoff) {
    const Int size = tasks[cutoff].d_hi - tasks[cutoff].d_lo + 1;
    if (planned + size > options.max_instances) break;
    planned += size;
  }
  report.budget_exceeded = cutoff < tasks.size();

  std::vector<TaskOutcome> outcomes(cutoff);
  const std::size_t jobs =
      std::min<std::size_t>(static_cast<std::size_t>(options.jobs), std::max<std::size_t>(cutoff, 1));
  if (jobs <= 1) {
    for (std::size_t i = 0; i < cutoff; ++i) outcomes[i] = run_task(tasks[i], context_for(tasks[i].n));
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> workers;
    workers.reserve(jobs);
    for (std::size_t t = 0; t < jobs; ++t)
      workers.emplace_back([&] {
        for (std::size_t i = next.fetch_add(1); i < cutoff; i = next.fetch_add(1))
          outcomes[i] = run_task(tasks[i], context_for(tasks[i].n));
      });
    for (std::thread& worker : workers) worker.join();
  }

  for (std::size_t i = 0; i < cutoff; ++i) {
    TaskOutcome& outcome = outcomes[i];
    if (tasks[i].odd) {
      report.odd_instances += outcome.instances;
      report.odd_agreements += outcome.agreements;
      for (LemmaReport& r : outcome.disagreements)
        report.odd_disagreements.push_back(std::move(r));
      continue;
    }
    report.instances += outcome.instances;
    report.agreements += outcome.agreements;
    for (LemmaReport& r : outcome.disagreements) report.counterexamples.push_back(std::move(r));
    report.ratio_coverage_ok = report.ratio_coverage_ok && outcome.coverage_ok;
    report.uniqueness_ok = report.uniqueness_ok && outcome.max_witnesses <= 1;
    report.max_witness_count = std::max(report.max_witness_count, outcome.max_witnesses);
  }

  if (options.measure_runtime) {
    const auto elapsed = std::chrono::steady_clock::now() - started;
    report.runtime_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
  }
  return report;
}

}  // namespace soweyl
