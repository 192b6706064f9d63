#pragma once

#include "soweyl/rootdata.hpp"
#include "soweyl/types.hpp"

#include <compare>
#include <cstdint>
#include <vector>

namespace soweyl {

// Signed permutation with an even number of sign flips, acting by
//   w(e_i) = sign[i] * e_{perm[i]}        (indices 0-based internally),
// so act(w, v)[perm[i]] = sign[i] * v[i].
struct WeylElement {
  std::vector<Int> perm;
  std::vector<Int> sign;  // entries +-1

  Int rank() const { return static_cast<Int>(perm.size()); }

  friend bool operator==(const WeylElement&, const WeylElement&) = default;
  friend auto operator<=>(const WeylElement&, const WeylElement&) = default;
};

WeylElement weyl_identity(Int rank);

// perm is a bijection, signs are +-1, number of flips is even.
bool is_valid_element(const WeylElement& w);

Vec act(const WeylElement& w, const Vec& v);

// act(compose(a, b), v) == act(a, act(b, v)).
WeylElement compose(const WeylElement& a, const WeylElement& b);

WeylElement inverse(const WeylElement& w);

// s_root; the argument must be a type-D root vector.
WeylElement reflection(const Vec& root);

// Number of positive roots sent to negative roots.
Int length(const WeylElement& w, const RootSystem& rs);

// 2^{r-1} * r!, overflow-checked.
Int weyl_order(Int rank);

inline constexpr Int kDefaultEnumerationCeiling = 8;

// Streams the full group in lexicographic (perm, sign) order with +1 < -1,
// starting at the identity. Throws Error("enumeration-too-large") when the
// rank exceeds the ceiling.
class WeylGroupEnumerator {
 public:
  explicit WeylGroupEnumerator(Int rank, Int rank_ceiling = kDefaultEnumerationCeiling);

  bool next(WeylElement& out);

 private:
  Int rank_;
  std::vector<Int> perm_;
  std::vector<std::uint64_t> masks_;  // even-popcount masks, sign-lex order
  std::size_t mask_index_ = 0;
  bool done_ = false;
};

std::vector<WeylElement> enumerate_group(Int rank, Int rank_ceiling = kDefaultEnumerationCeiling);

template <typename F>
void for_each_weyl_element(Int rank, F&& f, Int rank_ceiling = kDefaultEnumerationCeiling) {
  WeylGroupEnumerator en(rank, rank_ceiling);
  WeylElement w;
  while (en.next(w)) f(w);
}

}  // namespace soweyl
