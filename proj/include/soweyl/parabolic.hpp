#pragma once

#include "soweyl/rootdata.hpp"
#include "soweyl/types.hpp"
#include "soweyl/weyl.hpp"

#include <vector>

namespace soweyl {

// Standard parabolic given by deleting simple roots (1-based indices into
// simple_roots). A positive root lies in the Levi when its simple-root
// support avoids every deleted index, in the nilradical otherwise.
struct Parabolic {
  RootSystem ambient;
  std::vector<Int> deleted;  // sorted, deduplicated
  std::vector<Vec> levi_positive_roots;
  std::vector<Vec> nilradical_roots;
  std::vector<Vec> retained_simple_roots;
};

// deleted may be empty (Levi = whole group, empty nilradical).
Parabolic build_parabolic(Int ambient_rank, std::vector<Int> deleted);

// Minimal-length right-coset representative test: act(inverse(w), alpha) is a
// positive root for every retained simple root alpha (equivalently for every
// Levi positive root).
bool is_kostant_rep(const WeylElement& w, const Parabolic& p);

// Representatives sorted by (length, perm, sign).
struct KostantRepSet {
  Parabolic parabolic;
  std::vector<WeylElement> reps;
};

// Enumerate-and-filter over the full ambient group.
KostantRepSet kostant_reps_brute_force(const Parabolic& p,
                                       Int rank_ceiling = kDefaultEnumerationCeiling);

// Closed-form builder for deleted = {1}: the inverse of a representative has
// a strictly increasing permutation away from the first coordinate and sign
// flips at most at the first and last inputs, tied by the even-flip parity.
// Gives 2 * ambient_rank candidates; each is still validated with
// is_kostant_rep before being returned.
KostantRepSet kostant_reps_direct(const Parabolic& p);

// Direct construction when deleted = {1}, brute force otherwise.
KostantRepSet kostant_reps(const Parabolic& p, Int rank_ceiling = kDefaultEnumerationCeiling);

std::vector<WeylElement> reps_of_length(const Parabolic& p, Int len,
                                        Int rank_ceiling = kDefaultEnumerationCeiling);

// No sum of two nilradical roots is a root.
bool nilradical_is_abelian(const Parabolic& p);

}  // namespace soweyl
