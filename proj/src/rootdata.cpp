#include "soweyl/rootdata.hpp"

#include "soweyl/weyl.hpp"

#include <string>

namespace soweyl {

bool RootSystem::contains_root(const Vec& v) const {
  if (v.size() != rank) return false;
  int nonzero = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    if (v[i] != 1 && v[i] != -1) return false;
    ++nonzero;
  }
  return nonzero == 2;
}

bool RootSystem::is_positive_root(const Vec& v) const {
  if (!contains_root(v)) return false;
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (v[i] != 0) return v[i] > 0;
  return false;
}

RootSystem build_root_system(Int rank) {
  if (rank < 2)
    throw Error("rank-too-small", "type D needs rank >= 2, got " + std::to_string(rank));

  RootSystem rs;
  rs.rank = rank;

  const auto unit = [rank](Int i) {
    Vec e = Vec::Zero(rank);
    e[i] = 1;
    return e;
  };

  for (Int i = 0; i < rank; ++i) {
    for (Int j = i + 1; j < rank; ++j) {
      rs.positive_roots.push_back(unit(i) - unit(j));
      rs.positive_roots.push_back(unit(i) + unit(j));
    }
  }
  rs.roots = rs.positive_roots;
  for (const Vec& beta : rs.positive_roots) rs.roots.push_back(-beta);

  for (Int i = 0; i + 1 < rank; ++i) rs.simple_roots.push_back(unit(i) - unit(i + 1));
  rs.simple_roots.push_back(unit(rank - 2) + unit(rank - 1));

  Vec two_rho = Vec::Zero(rank);
  for (const Vec& beta : rs.positive_roots) two_rho += beta;
  rs.rho = two_rho / 2;

  return rs;
}

bool is_dominant(const Weight& lambda, const RootSystem& rs) {
  if (lambda.size() != rs.rank)
    throw Error("dimension-mismatch", "weight rank " + std::to_string(lambda.size()) +
                                          " vs root system rank " + std::to_string(rs.rank));
  for (const Vec& alpha : rs.simple_roots)
    if (lambda.dot(alpha) < 0) return false;
  return true;
}

Weight dot_action(const WeylElement& w, const Weight& lambda, const RootSystem& rs) {
  if (lambda.size() != rs.rank || w.rank() != rs.rank)
    throw Error("dimension-mismatch", "dot action needs matching ranks");
  return act(w, lambda + rs.rho) - rs.rho;
}

Vec simple_root_coordinates(const Vec& beta, const RootSystem& rs) {
  if (!rs.is_positive_root(beta))
    throw Error("not-a-positive-root", "simple root coordinates need a positive root");

  Vec coeffs = Vec::Zero(rs.rank);
  Vec x = beta;
  while (!(x.array() == 0).all()) {
    bool advanced = false;
    for (Int k = 0; k < rs.rank; ++k) {
      const Vec& alpha = rs.simple_roots[static_cast<std::size_t>(k)];
      if (vec_equal(x, alpha)) {
        coeffs[k] += 1;
        x.setZero();
        advanced = true;
        break;
      }
      if (x.dot(alpha) > 0 && rs.is_positive_root(x - alpha)) {
        coeffs[k] += 1;
        x -= alpha;
        advanced = true;
        break;
      }
    }
    if (!advanced) throw std::logic_error("simple root descent stalled");
  }
  return coeffs;
}

}  // namespace soweyl
