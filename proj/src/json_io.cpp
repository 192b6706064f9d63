#include "soweyl/json_io.hpp"

namespace soweyl {

Json weight_to_json(const Vec& v) {
  Json j = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) j.push_back(v[i]);
  return j;
}

Vec weight_from_json(const Json& j) {
  if (!j.is_array()) throw Error("bad-json", "weight must be a JSON array of integers");
  Vec v(static_cast<Eigen::Index>(j.size()));
  Eigen::Index i = 0;
  for (const Json& x : j) {
    if (!x.is_number_integer()) throw Error("bad-json", "weight entries must be integers");
    v[i++] = x.get<Int>();
  }
  return v;
}

Json to_json(const WeylElement& w) {
  Json j;
  Json perm = Json::array();
  for (Int p : w.perm) perm.push_back(p + 1);
  j["perm"] = std::move(perm);
  j["signs"] = w.sign;
  return j;
}

WeylElement weyl_element_from_json(const Json& j) {
  WeylElement w;
  for (const Json& p : j.at("perm")) w.perm.push_back(p.get<Int>() - 1);
  for (const Json& s : j.at("signs")) w.sign.push_back(s.get<Int>());
  if (!is_valid_element(w))
    throw Error("bad-json", "not a signed permutation with evenly many flips");
  return w;
}

Json to_json(const KostantRepSet& set) {
  Json j;
  j["ambient_rank"] = set.parabolic.ambient.rank;
  j["deleted"] = set.parabolic.deleted;
  j["count"] = set.reps.size();
  Json reps = Json::array();
  for (const WeylElement& w : set.reps) {
    Json entry = to_json(w);
    entry["length"] = length(w, set.parabolic.ambient);
    reps.push_back(std::move(entry));
  }
  j["reps"] = std::move(reps);
  return j;
}

Json critical_report_json(const SOWeightData& w) {
  Json j;
  j["n"] = w.n;
  j["mu"] = weight_to_json(w.mu);
  j["critical_set"] = critical_set_so(w);
  return j;
}

Json rankin_selberg_report_json(Int k, Int l) {
  Json j;
  j["k"] = k;
  j["l"] = l;
  j["critical_set"] = critical_set_rankin_selberg(k, l);
  return j;
}

Json to_json(const LemmaReport& report) {
  Json j;
  j["instance"] = {{"n", report.instance.n},
                   {"mu", weight_to_json(report.instance.mu)},
                   {"d", report.instance.d}};
  j["cond1"] = report.cond1;
  j["cond2"] = report.cond2;
  j["cond3"] = report.cond3;
  Json witnesses = Json::array();
  for (const WeylElement& w : report.witnesses) witnesses.push_back(to_json(w));
  j["witnesses"] = std::move(witnesses);
  j["equivalent"] = report.equivalent;
  return j;
}

Json to_json(const SweepReport& report) {
  Json j;
  j["instances"] = report.instances;
  j["agreements"] = report.agreements;
  Json counterexamples = Json::array();
  for (const LemmaReport& r : report.counterexamples) counterexamples.push_back(to_json(r));
  j["counterexamples"] = std::move(counterexamples);
  j["ratio_coverage_ok"] = report.ratio_coverage_ok;
  j["uniqueness_ok"] = report.uniqueness_ok;
  j["max_witness_count"] = report.max_witness_count;
  j["runtime_ms"] = report.runtime_ms;
  j["budget_exceeded"] = report.budget_exceeded;
  if (report.odd_instances > 0 || !report.odd_disagreements.empty()) {
    Json odd;
    odd["instances"] = report.odd_instances;
    odd["agreements"] = report.odd_agreements;
    Json disagreements = Json::array();
    for (const LemmaReport& r : report.odd_disagreements) disagreements.push_back(to_json(r));
    odd["disagreements"] = std::move(disagreements);
    j["odd_n_exploration"] = std::move(odd);
  }
  return j;
}

}  // namespace soweyl
