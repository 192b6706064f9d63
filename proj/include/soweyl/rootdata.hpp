#pragma once

#include "soweyl/types.hpp"

#include <vector>

namespace soweyl {

struct WeylElement;

// Root datum of type D_r in coordinates, upper-triangular Borel convention:
// the roots are +-e_i +- e_j (i < j), a root is positive exactly when its
// first nonzero coordinate is +1, and the simple roots are
//   e_1 - e_2, ..., e_{r-1} - e_r, e_{r-1} + e_r.
// Half the sum of the positive roots is rho = (r-1, r-2, ..., 1, 0).
// Rank 2 is the reducible case D_2 = A_1 x A_1 and is supported.
struct RootSystem {
  Int rank = 0;
  std::vector<Vec> simple_roots;
  std::vector<Vec> positive_roots;
  std::vector<Vec> roots;  // positive roots followed by their negatives
  Vec rho;

  // A type-D root vector has exactly two nonzero coordinates, both +-1.
  bool contains_root(const Vec& v) const;
  bool is_positive_root(const Vec& v) const;
};

// Throws Error("rank-too-small") for rank < 2.
RootSystem build_root_system(Int rank);

// Dominance as the closed-form chain lambda_1 >= ... >= lambda_{r-1} >= |lambda_r|.
template <typename Derived>
bool is_dominant_chain(const Eigen::MatrixBase<Derived>& lambda) {
  const Eigen::Index r = lambda.size();
  if (r == 0) return false;
  for (Eigen::Index i = 0; i + 2 < r; ++i)
    if (lambda[i] < lambda[i + 1]) return false;
  if (r >= 2) {
    const auto last = lambda[r - 1];
    if (lambda[r - 2] < (last < 0 ? -last : last)) return false;
  }
  return true;
}

// Dominance as pairing >= 0 against every simple root. All type-D roots have
// squared length 2, so the coroot pairing is the plain dot product.
bool is_dominant(const Weight& lambda, const RootSystem& rs);

// w . lambda = w(lambda + rho) - rho, exact in integers.
Weight dot_action(const WeylElement& w, const Weight& lambda, const RootSystem& rs);

// Coordinates of a positive root in the simple-root basis; all entries are
// nonnegative integers.
Vec simple_root_coordinates(const Vec& beta, const RootSystem& rs);

}  // namespace soweyl
