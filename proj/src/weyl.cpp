#include "soweyl/weyl.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>
#include <string>

namespace soweyl {

namespace {

void require_same_rank(Int a, Int b, const char* what) {
  if (a != b)
    throw Error("rank-mismatch",
                std::string(what) + ": " + std::to_string(a) + " vs " + std::to_string(b));
}

}  // namespace

WeylElement weyl_identity(Int rank) {
  if (rank < 2) throw Error("rank-too-small", "rank >= 2 required");
  WeylElement w;
  w.perm.resize(static_cast<std::size_t>(rank));
  std::iota(w.perm.begin(), w.perm.end(), Int{0});
  w.sign.assign(static_cast<std::size_t>(rank), Int{1});
  return w;
}

bool is_valid_element(const WeylElement& w) {
  const std::size_t r = w.perm.size();
  if (r < 2 || w.sign.size() != r) return false;
  std::vector<bool> seen(r, false);
  for (Int p : w.perm) {
    if (p < 0 || p >= static_cast<Int>(r) || seen[static_cast<std::size_t>(p)]) return false;
    seen[static_cast<std::size_t>(p)] = true;
  }
  Int flips = 0;
  for (Int s : w.sign) {
    if (s != 1 && s != -1) return false;
    if (s == -1) ++flips;
  }
  return flips % 2 == 0;
}

Vec act(const WeylElement& w, const Vec& v) {
  require_same_rank(w.rank(), static_cast<Int>(v.size()), "act");
  Vec out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i)
    out[w.perm[static_cast<std::size_t>(i)]] = w.sign[static_cast<std::size_t>(i)] * v[i];
  return out;
}

WeylElement compose(const WeylElement& a, const WeylElement& b) {
  require_same_rank(a.rank(), b.rank(), "compose");
  const std::size_t r = a.perm.size();
  WeylElement c;
  c.perm.resize(r);
  c.sign.resize(r);
  for (std::size_t i = 0; i < r; ++i) {
    const std::size_t mid = static_cast<std::size_t>(b.perm[i]);
    c.perm[i] = a.perm[mid];
    c.sign[i] = a.sign[mid] * b.sign[i];
  }
  return c;
}

WeylElement inverse(const WeylElement& w) {
  const std::size_t r = w.perm.size();
  WeylElement inv;
  inv.perm.resize(r);
  inv.sign.resize(r);
  for (std::size_t i = 0; i < r; ++i) {
    const std::size_t image = static_cast<std::size_t>(w.perm[i]);
    inv.perm[image] = static_cast<Int>(i);
    inv.sign[image] = w.sign[i];
  }
  return inv;
}

WeylElement reflection(const Vec& root) {
  std::vector<Eigen::Index> support;
  for (Eigen::Index k = 0; k < root.size(); ++k) {
    if (root[k] == 0) continue;
    if (root[k] != 1 && root[k] != -1) throw Error("not-a-root", "reflection needs +-e_i +- e_j");
    support.push_back(k);
  }
  if (support.size() != 2) throw Error("not-a-root", "reflection needs +-e_i +- e_j");
  const Eigen::Index i = support[0];
  const Eigen::Index j = support[1];

  // s_root = s_{-root}; only the relative sign of the two entries matters.
  const Int b = root[i] * root[j];

  WeylElement s = weyl_identity(static_cast<Int>(root.size()));
  std::swap(s.perm[static_cast<std::size_t>(i)], s.perm[static_cast<std::size_t>(j)]);
  if (b == 1) {
    s.sign[static_cast<std::size_t>(i)] = -1;
    s.sign[static_cast<std::size_t>(j)] = -1;
  }
  return s;
}

Int length(const WeylElement& w, const RootSystem& rs) {
  require_same_rank(w.rank(), rs.rank, "length");
  Int count = 0;
  for (const Vec& beta : rs.positive_roots) {
    const Vec image = act(w, beta);
    for (Eigen::Index k = 0; k < image.size(); ++k) {
      if (image[k] == 0) continue;
      if (image[k] < 0) ++count;
      break;
    }
  }
  return count;
}

Int weyl_order(Int rank) {
  if (rank < 2) throw Error("rank-too-small", "rank >= 2 required");
  unsigned __int128 order = 1;
  for (Int k = 2; k <= rank; ++k) order *= static_cast<unsigned __int128>(k);
  for (Int k = 1; k < rank; ++k) order *= 2u;
  if (order > static_cast<unsigned __int128>(std::numeric_limits<Int>::max()))
    throw Error("order-overflow", "group order exceeds 64-bit range");
  return static_cast<Int>(order);
}

WeylGroupEnumerator::WeylGroupEnumerator(Int rank, Int rank_ceiling) : rank_(rank) {
  if (rank < 2) throw Error("rank-too-small", "rank >= 2 required");
  if (rank > rank_ceiling)
    throw Error("enumeration-too-large", "rank " + std::to_string(rank) +
                                             " exceeds enumeration ceiling " +
                                             std::to_string(rank_ceiling));
  perm_.resize(static_cast<std::size_t>(rank));
  std::iota(perm_.begin(), perm_.end(), Int{0});

  // Bit (rank-1-k) of a mask flips coordinate k, so ascending masks list the
  // sign vectors lexicographically with +1 before -1.
  const std::uint64_t limit = std::uint64_t{1} << rank;
  for (std::uint64_t m = 0; m < limit; ++m)
    if (std::popcount(m) % 2 == 0) masks_.push_back(m);
}

bool WeylGroupEnumerator::next(WeylElement& out) {
  if (done_) return false;
  out.perm = perm_;
  out.sign.assign(static_cast<std::size_t>(rank_), Int{1});
  const std::uint64_t m = masks_[mask_index_];
  for (Int k = 0; k < rank_; ++k)
    if ((m >> (rank_ - 1 - k)) & 1u) out.sign[static_cast<std::size_t>(k)] = -1;

  ++mask_index_;
  if (mask_index_ == masks_.size()) {
    mask_index_ = 0;
    if (!std::next_permutation(perm_.begin(), perm_.end())) done_ = true;
  }
  return true;
}

std::vector<WeylElement> enumerate_group(Int rank, Int rank_ceiling) {
  std::vector<WeylElement> group;
  group.reserve(static_cast<std::size_t>(weyl_order(rank)));
  for_each_weyl_element(rank, [&](const WeylElement& w) { group.push_back(w); }, rank_ceiling);
  return group;
}

}  // namespace soweyl
