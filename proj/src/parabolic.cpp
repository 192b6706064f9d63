#include "soweyl/parabolic.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <tuple>

namespace soweyl {

namespace {

void sort_reps(std::vector<WeylElement>& reps, const RootSystem& rs) {
  std::vector<std::pair<Int, WeylElement>> keyed;
  keyed.reserve(reps.size());
  for (WeylElement& w : reps) keyed.emplace_back(length(w, rs), std::move(w));
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    return std::tie(a.first, a.second) < std::tie(b.first, b.second);
  });
  reps.clear();
  for (auto& [len, w] : keyed) reps.push_back(std::move(w));
}

}  // namespace

Parabolic build_parabolic(Int ambient_rank, std::vector<Int> deleted) {
  if (ambient_rank < 3)
    throw Error("rank-too-small",
                "parabolic needs ambient rank >= 3, got " + std::to_string(ambient_rank));
  std::sort(deleted.begin(), deleted.end());
  deleted.erase(std::unique(deleted.begin(), deleted.end()), deleted.end());
  for (Int idx : deleted)
    if (idx < 1 || idx > ambient_rank)
      throw Error("invalid-simple-root-index",
                  "simple root indices run from 1 to " + std::to_string(ambient_rank));

  Parabolic p;
  p.ambient = build_root_system(ambient_rank);
  p.deleted = std::move(deleted);

  std::vector<bool> is_deleted(static_cast<std::size_t>(ambient_rank) + 1, false);
  for (Int idx : p.deleted) is_deleted[static_cast<std::size_t>(idx)] = true;

  for (Int k = 1; k <= ambient_rank; ++k)
    if (!is_deleted[static_cast<std::size_t>(k)])
      p.retained_simple_roots.push_back(p.ambient.simple_roots[static_cast<std::size_t>(k - 1)]);

  for (const Vec& beta : p.ambient.positive_roots) {
    const Vec coords = simple_root_coordinates(beta, p.ambient);
    bool touches_deleted = false;
    for (Int idx : p.deleted)
      if (coords[idx - 1] != 0) {
        touches_deleted = true;
        break;
      }
    (touches_deleted ? p.nilradical_roots : p.levi_positive_roots).push_back(beta);
  }
  return p;
}

bool is_kostant_rep(const WeylElement& w, const Parabolic& p) {
  if (w.rank() != p.ambient.rank) throw Error("rank-mismatch", "element vs ambient rank");
  const WeylElement winv = inverse(w);
  for (const Vec& alpha : p.retained_simple_roots)
    if (!p.ambient.is_positive_root(act(winv, alpha))) return false;
  return true;
}

KostantRepSet kostant_reps_brute_force(const Parabolic& p, Int rank_ceiling) {
  KostantRepSet set{p, {}};
  for_each_weyl_element(
      p.ambient.rank, [&](const WeylElement& w) {
        if (is_kostant_rep(w, p)) set.reps.push_back(w);
      },
      rank_ceiling);
  sort_reps(set.reps, p.ambient);
  return set;
}

KostantRepSet kostant_reps_direct(const Parabolic& p) {
  if (p.deleted != std::vector<Int>{1})
    throw Error("direct-construction-unsupported",
                "closed form exists only for deleted = {1}");
  if (!nilradical_is_abelian(p)) throw Error("nilradical-not-abelian", "construction invalid");

  const Int r = p.ambient.rank;
  KostantRepSet set{p, {}};
  for (Int k = 0; k < r; ++k) {
    for (Int eps : {Int{1}, Int{-1}}) {
      WeylElement u;
      u.perm.assign(static_cast<std::size_t>(r), Int{0});
      u.sign.assign(static_cast<std::size_t>(r), Int{1});
      u.perm[0] = k;
      Int next = 0;
      for (std::size_t i = 1; i < static_cast<std::size_t>(r); ++i) {
        if (next == k) ++next;
        u.perm[i] = next++;
      }
      u.sign[0] = eps;
      u.sign[static_cast<std::size_t>(r - 1)] = eps;

      const WeylElement w = inverse(u);
      if (!is_kostant_rep(w, p))
        throw std::logic_error("direct candidate failed the representative test");
      set.reps.push_back(w);
    }
  }
  sort_reps(set.reps, p.ambient);
  return set;
}

KostantRepSet kostant_reps(const Parabolic& p, Int rank_ceiling) {
  if (p.deleted == std::vector<Int>{1}) return kostant_reps_direct(p);
  return kostant_reps_brute_force(p, rank_ceiling);
}

std::vector<WeylElement> reps_of_length(const Parabolic& p, Int len, Int rank_ceiling) {
  std::vector<WeylElement> out;
  for (const WeylElement& w : kostant_reps(p, rank_ceiling).reps)
    if (length(w, p.ambient) == len) out.push_back(w);
  return out;
}

bool nilradical_is_abelian(const Parabolic& p) {
  for (std::size_t a = 0; a < p.nilradical_roots.size(); ++a)
    for (std::size_t b = a; b < p.nilradical_roots.size(); ++b)
      if (p.ambient.contains_root(p.nilradical_roots[a] + p.nilradical_roots[b])) return false;
  return true;
}

}  // namespace soweyl
