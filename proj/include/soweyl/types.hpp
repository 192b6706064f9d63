#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace soweyl {

using Int = std::int64_t;

// Integer coordinate vector on the standard torus; used for both weights and
// roots. All arithmetic in this library is exact.
using Vec = Eigen::Matrix<Int, Eigen::Dynamic, 1>;
using Weight = Vec;

// Error with a stable machine-readable code such as "rank-too-small".
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(code + ": " + what), code_(std::move(code)) {}
  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

inline bool vec_equal(const Vec& a, const Vec& b) {
  return a.size() == b.size() && (a.array() == b.array()).all();
}

inline bool lex_less(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (Eigen::Index i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

struct VecLess {
  bool operator()(const Vec& a, const Vec& b) const { return lex_less(a, b); }
};

inline Vec make_vec(std::initializer_list<Int> xs) {
  Vec v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (Int x : xs) v[i++] = x;
  return v;
}

inline Vec to_vec(const std::vector<Int>& xs) {
  Vec v(static_cast<Eigen::Index>(xs.size()));
  for (std::size_t i = 0; i < xs.size(); ++i) v[static_cast<Eigen::Index>(i)] = xs[i];
  return v;
}

inline std::vector<Int> to_std(const Vec& v) {
  return std::vector<Int>(v.data(), v.data() + v.size());
}

}  // namespace soweyl
