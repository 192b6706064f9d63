#include "soweyl/cli.hpp"

#include "soweyl/critical.hpp"
#include "soweyl/json_io.hpp"
#include "soweyl/lemma.hpp"
#include "soweyl/parabolic.hpp"
#include "soweyl/rootdata.hpp"
#include "soweyl/weyl.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace soweyl::cli {

namespace {

struct CommonOpts {
  std::string format = "text";
  std::string output;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--format", opts.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--output", opts.output,
                  "write the JSON report here; relative paths resolve under "
                  "SOWEYL_OUTPUT_DIR when that is set");
}

std::filesystem::path resolve_output(const std::string& path) {
  std::filesystem::path p(path);
  if (p.is_relative())
    if (const char* dir = std::getenv("SOWEYL_OUTPUT_DIR")) p = std::filesystem::path(dir) / p;
  return p;
}

void atomic_write(const std::filesystem::path& path, const std::string& content) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw Error("output-unwritable", "cannot open " + tmp.string());
    f << content;
  }
  std::filesystem::rename(tmp, path);
}

void emit(const Json& report, const std::string& text, const CommonOpts& opts,
          std::ostream& out) {
  if (opts.format == "json")
    out << report.dump(2) << "\n";
  else
    out << text;
  if (!opts.output.empty()) atomic_write(resolve_output(opts.output), report.dump(2) + "\n");
}

std::string bracketed(const Vec& v) {
  std::ostringstream os;
  os << "[";
  for (Eigen::Index i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  os << "]";
  return os.str();
}

std::string braced(const std::vector<Int>& xs) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? ", " : "") << xs[i];
  os << "}";
  return os.str();
}

std::string element_line(const WeylElement& w) {
  std::ostringstream os;
  os << "perm [";
  for (std::size_t i = 0; i < w.perm.size(); ++i) os << (i ? ", " : "") << w.perm[i] + 1;
  os << "]  signs [";
  for (std::size_t i = 0; i < w.sign.size(); ++i) os << (i ? ", " : "") << w.sign[i];
  os << "]";
  return os.str();
}

struct RootsOpts {
  Int rank = 0;
  CommonOpts common;
};

int run_roots(const RootsOpts& opts, std::ostream& out) {
  const RootSystem rs = build_root_system(opts.rank);

  Json j;
  j["rank"] = rs.rank;
  j["num_roots"] = rs.roots.size();
  j["num_positive_roots"] = rs.positive_roots.size();
  Json simple = Json::array();
  for (const Vec& alpha : rs.simple_roots) simple.push_back(weight_to_json(alpha));
  j["simple_roots"] = std::move(simple);
  Json positive = Json::array();
  for (const Vec& beta : rs.positive_roots) positive.push_back(weight_to_json(beta));
  j["positive_roots"] = std::move(positive);
  j["rho"] = weight_to_json(rs.rho);

  std::ostringstream text;
  text << "type D_" << rs.rank << ": " << rs.roots.size() << " roots, "
       << rs.positive_roots.size() << " positive\n";
  text << "rho: " << bracketed(rs.rho) << "\n";
  text << "simple roots:\n";
  for (const Vec& alpha : rs.simple_roots) text << "  " << bracketed(alpha) << "\n";
  text << "positive roots:\n";
  for (const Vec& beta : rs.positive_roots) text << "  " << bracketed(beta) << "\n";

  emit(j, text.str(), opts.common, out);
  return kExitOk;
}

struct WeylOpts {
  Int rank = 0;
  Int max_elements = 20;
  Int ceiling = kDefaultEnumerationCeiling;
  CommonOpts common;
};

int run_weyl(const WeylOpts& opts, std::ostream& out) {
  Int order = 0;
  std::vector<WeylElement> listed;
  for_each_weyl_element(
      opts.rank,
      [&](const WeylElement& w) {
        if (opts.max_elements < 0 || order < opts.max_elements) listed.push_back(w);
        ++order;
      },
      opts.ceiling);

  Json j;
  j["rank"] = opts.rank;
  j["order"] = order;
  j["elements_listed"] = listed.size();
  Json elements = Json::array();
  for (const WeylElement& w : listed) elements.push_back(to_json(w));
  j["elements"] = std::move(elements);

  std::ostringstream text;
  text << "W(D_" << opts.rank << "): order " << order << "\n";
  for (const WeylElement& w : listed) text << "  " << element_line(w) << "\n";

  emit(j, text.str(), opts.common, out);
  return kExitOk;
}

struct KostantOpts {
  Int ambient_rank = 0;
  std::vector<Int> deleted{1};
  std::string method = "auto";
  Int ceiling = kDefaultEnumerationCeiling;
  CommonOpts common;
};

int run_kostant(const KostantOpts& opts, std::ostream& out) {
  const Parabolic p = build_parabolic(opts.ambient_rank, opts.deleted);
  KostantRepSet set = opts.method == "brute"    ? kostant_reps_brute_force(p, opts.ceiling)
                      : opts.method == "direct" ? kostant_reps_direct(p)
                                                : kostant_reps(p, opts.ceiling);

  const Json j = to_json(set);

  std::ostringstream text;
  text << "D_" << p.ambient.rank << ", deleted simple roots " << braced(p.deleted) << ": "
       << set.reps.size() << " coset representatives, nilradical size "
       << p.nilradical_roots.size() << "\n";
  for (const WeylElement& w : set.reps)
    text << "  length " << length(w, p.ambient) << ": " << element_line(w) << "\n";

  emit(j, text.str(), opts.common, out);
  return kExitOk;
}

struct CriticalOpts {
  Int n = 0;
  std::vector<Int> mu;
  Int k = 0;
  Int l = 0;
  bool has_n = false, has_mu = false, has_k = false, has_l = false;
  CommonOpts common;
};

int run_critical(const CriticalOpts& opts, std::ostream& out) {
  const bool so_mode = opts.has_n || opts.has_mu;
  const bool rs_mode = opts.has_k || opts.has_l;
  if (so_mode == rs_mode)
    throw Error("bad-arguments", "pass either --n with --mu, or --k with --l");

  Json j;
  std::vector<Int> set;
  if (so_mode) {
    if (!opts.has_n || !opts.has_mu) throw Error("bad-arguments", "--n and --mu go together");
    const SOWeightData w(opts.n, to_vec(opts.mu));
    set = critical_set_so(w);
    j = critical_report_json(w);
  } else {
    if (!opts.has_k || !opts.has_l) throw Error("bad-arguments", "--k and --l go together");
    set = critical_set_rankin_selberg(opts.k, opts.l);
    j = rankin_selberg_report_json(opts.k, opts.l);
  }

  std::ostringstream text;
  text << "critical set: " << braced(set) << "\n";
  emit(j, text.str(), opts.common, out);
  return kExitOk;
}

struct RatiosOpts {
  Int n = 0;
  std::vector<Int> mu;
  std::optional<Int> d;
  CommonOpts common;
};

int run_ratios(const RatiosOpts& opts, std::ostream& out) {
  const SOWeightData w(opts.n, to_vec(opts.mu));
  Int lo, hi;
  if (opts.d) {
    lo = hi = *opts.d;
  } else {
    std::tie(lo, hi) = default_d_window(w.n, w.mu);
  }

  Json j;
  j["n"] = w.n;
  j["mu"] = weight_to_json(w.mu);
  Json pairs = Json::array();
  std::ostringstream text;
  for (Int d = lo; d <= hi; ++d) {
    const auto pair = ratio_argument_map(TwistData{d, {}}, w);
    Json entry;
    entry["d"] = d;
    if (pair) {
      entry["pair"] = {pair->first, pair->second};
      text << "d=" << d << ": (" << pair->first << ", " << pair->second << ")\n";
    } else {
      entry["pair"] = nullptr;
      text << "d=" << d << ": none\n";
    }
    pairs.push_back(std::move(entry));
  }
  j["pairs"] = std::move(pairs);

  emit(j, text.str(), opts.common, out);
  return kExitOk;
}

struct VerifyOpts {
  std::vector<Int> n_values;
  Int mu_max = 4;
  std::string d_window = "auto";
  Int jobs = 1;
  Int budget = 10'000'000;
  bool allow_odd_n = false;
  bool timing = false;
  CommonOpts common;
};

std::optional<std::pair<Int, Int>> parse_window(const std::string& spec) {
  if (spec == "auto") return std::nullopt;
  const std::size_t colon = spec.find(':');
  if (colon == std::string::npos || colon == 0 || colon + 1 == spec.size())
    throw Error("bad-arguments", "--d-window takes auto or LO:HI");
  try {
    return std::pair<Int, Int>{std::stoll(spec.substr(0, colon)),
                               std::stoll(spec.substr(colon + 1))};
  } catch (const std::exception&) {
    throw Error("bad-arguments", "--d-window takes auto or LO:HI");
  }
}

int run_verify(const VerifyOpts& opts, std::ostream& out, std::ostream& err) {
  SweepOptions sweep;
  sweep.n_values = opts.n_values;
  sweep.mu_max = opts.mu_max;
  sweep.d_window = parse_window(opts.d_window);
  sweep.max_instances = opts.budget;
  sweep.jobs = opts.jobs;
  sweep.allow_odd_n = opts.allow_odd_n;
  sweep.measure_runtime = opts.timing;

  const SweepReport report = verify_equivalence(sweep);
  const Json j = to_json(report);

  std::ostringstream text;
  text << "instances: " << report.instances << "; agreements: " << report.agreements << "\n";
  text << "uniqueness ok: " << (report.uniqueness_ok ? "yes" : "no")
       << "; ratio coverage ok: " << (report.ratio_coverage_ok ? "yes" : "no") << "\n";
  if (report.odd_instances > 0)
    text << "odd n exploration: " << report.odd_agreements << " agreements / "
         << report.odd_instances << " instances, " << report.odd_disagreements.size()
         << " disagreements\n";
  if (opts.timing) text << "runtime_ms: " << report.runtime_ms << "\n";
  if (report.budget_exceeded)
    text << "budget exceeded after " << report.instances + report.odd_instances
         << " instances\n";
  text << report.counterexamples.size() << " counterexamples / " << report.instances
       << " instances\n";

  const int code = sweep_exit_code(report);
  CommonOpts common = opts.common;
  if (common.output.empty() && code != kExitOk)
    common.output =
        code == kExitBudget ? "sweep-checkpoint.json" : "sweep-counterexamples.json";
  emit(j, text.str(), common, out);

  if (code == kExitCounterexample)
    err << "error: equivalence check failed (" << report.counterexamples.size()
        << " counterexamples, uniqueness " << (report.uniqueness_ok ? "ok" : "violated")
        << ", ratio coverage " << (report.ratio_coverage_ok ? "ok" : "violated")
        << "); report written to " << resolve_output(common.output).string() << "\n";
  else if (code == kExitBudget)
    err << "error: instance budget " << opts.budget
        << " exceeded; partial checkpoint written to "
        << resolve_output(common.output).string() << "\n";
  return code;
}

}  // namespace

int sweep_exit_code(const SweepReport& report) {
  if (!report.counterexamples.empty() || !report.uniqueness_ok || !report.ratio_coverage_ok)
    return kExitCounterexample;
  if (report.budget_exceeded) return kExitBudget;
  return kExitOk;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{
      "exact root system, Weyl group, and critical set combinatorics for split even "
      "orthogonal groups"};
  app.name("soweyl");
  app.require_subcommand(1);

  RootsOpts roots_opts;
  CLI::App* roots = app.add_subcommand("roots", "type D root system data");
  roots->add_option("--rank", roots_opts.rank, "rank r >= 2")->required();
  add_common(roots, roots_opts.common);

  WeylOpts weyl_opts;
  CLI::App* weyl = app.add_subcommand("weyl", "enumerate the Weyl group W(D_r)");
  weyl->add_option("--rank", weyl_opts.rank, "rank r >= 2")->required();
  weyl->add_option("--max-elements", weyl_opts.max_elements,
                   "list at most this many elements, -1 for all");
  weyl->add_option("--ceiling", weyl_opts.ceiling, "enumeration rank ceiling");
  add_common(weyl, weyl_opts.common);

  KostantOpts kostant_opts;
  CLI::App* kostant = app.add_subcommand("kostant", "minimal-length coset representatives");
  kostant->add_option("--ambient-rank", kostant_opts.ambient_rank, "ambient rank >= 3")
      ->required();
  kostant->add_option("--delete", kostant_opts.deleted,
                      "1-based simple root indices to delete (default 1)")
      ->delimiter(',');
  kostant->add_option("--method", kostant_opts.method, "auto, brute, or direct")
      ->check(CLI::IsMember({"auto", "brute", "direct"}));
  kostant->add_option("--ceiling", kostant_opts.ceiling, "enumeration rank ceiling");
  add_common(kostant, kostant_opts.common);

  CriticalOpts critical_opts;
  CLI::App* critical = app.add_subcommand("critical-set", "critical set of an L-function");
  CLI::Option* n_opt = critical->add_option("--n", critical_opts.n, "even rank of SO(n,n)");
  CLI::Option* mu_opt =
      critical->add_option("--mu", critical_opts.mu, "dominant weight entries")->delimiter(',');
  CLI::Option* k_opt = critical->add_option("--k", critical_opts.k, "first modular weight");
  CLI::Option* l_opt = critical->add_option("--l", critical_opts.l, "second modular weight");
  add_common(critical, critical_opts.common);

  RatiosOpts ratios_opts;
  CLI::App* ratios = app.add_subcommand("ratios", "successive critical pairs per twist");
  ratios->add_option("--n", ratios_opts.n, "even rank of SO(n,n)")->required();
  ratios->add_option("--mu", ratios_opts.mu, "dominant weight entries")
      ->delimiter(',')
      ->required();
  Int ratios_d = 0;
  CLI::Option* d_opt = ratios->add_option("--d", ratios_d, "single twist exponent");
  add_common(ratios, ratios_opts.common);

  VerifyOpts verify_opts;
  CLI::App* verify =
      app.add_subcommand("verify-lemma", "exhaustively check the three-way equivalence");
  verify->add_option("--n", verify_opts.n_values, "ranks to sweep")->delimiter(',')->required();
  verify->add_option("--mu-max", verify_opts.mu_max, "bound on mu_1");
  verify->add_option("--d-window", verify_opts.d_window, "auto or LO:HI");
  verify->add_option("--jobs", verify_opts.jobs, "worker threads");
  verify->add_option("--budget", verify_opts.budget, "maximum instances");
  verify->add_flag("--allow-odd-n", verify_opts.allow_odd_n, "explore odd n, report only");
  verify->add_flag("--timing", verify_opts.timing,
                   "measure runtime_ms (off by default so outputs are reproducible)");
  add_common(verify, verify_opts.common);

  std::vector<std::string> argv_storage;
  argv_storage.reserve(args.size() + 1);
  argv_storage.push_back("soweyl");
  for (const std::string& a : args) argv_storage.push_back(a);
  std::vector<const char*> argv;
  for (const std::string& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (roots->parsed()) return run_roots(roots_opts, out);
    if (weyl->parsed()) return run_weyl(weyl_opts, out);
    if (kostant->parsed()) return run_kostant(kostant_opts, out);
    if (critical->parsed()) {
      critical_opts.has_n = n_opt->count() > 0;
      critical_opts.has_mu = mu_opt->count() > 0;
      critical_opts.has_k = k_opt->count() > 0;
      critical_opts.has_l = l_opt->count() > 0;
      return run_critical(critical_opts, out);
    }
    if (ratios->parsed()) {
      if (d_opt->count() > 0) ratios_opts.d = ratios_d;
      return run_ratios(ratios_opts, out);
    }
    if (verify->parsed()) return run_verify(verify_opts, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.code() == "enumeration-too-large" ? kExitBudget : kExitUsage;
  }
  return kExitUsage;
}

}  // namespace soweyl::cli
