// Slow reference implementations used to cross-check the library.
#pragma once

#include <map>
#include <vector>

#include "e6kkr/crystal.hpp"
#include "e6kkr/polynomial.hpp"
#include "e6kkr/tensor.hpp"

namespace e6kkr::oracle {

// Signature rule: each factor contributes eps minus signs then phi plus
// signs; adjacent (+,-) pairs cancel. Returns the unmatched counts.
struct Signature {
  int minus = 0;
  int plus = 0;
};

inline Signature signature(const Path& path, Node i) {
  Signature s;
  for (Vertex b : path) {
    const int m = eps(b, i);
    const int cancelled = std::min(m, s.plus);
    s.plus -= cancelled;
    s.minus += m - cancelled;
    s.plus += phi(b, i);
  }
  return s;
}

// e_i acts on the factor holding the rightmost unmatched minus sign.
inline std::optional<Path> e_signature(const Path& path, Node i) {
  std::vector<int> owner;  // unmatched minus signs, by factor
  std::vector<int> pluses;
  for (std::size_t k = 0; k < path.size(); ++k) {
    for (int n = 0; n < eps(path[k], i); ++n) {
      if (!pluses.empty()) {
        pluses.pop_back();
      } else {
        owner.push_back(static_cast<int>(k));
      }
    }
    for (int n = 0; n < phi(path[k], i); ++n) pluses.push_back(static_cast<int>(k));
  }
  if (owner.empty()) return std::nullopt;
  Path out = path;
  const auto k = static_cast<std::size_t>(owner.back());
  out[k] = *e(path[k], i);
  return out;
}

inline bool highest_weight_by_signature(const Path& path) {
  for (Node i = 1; i <= kRank; ++i) {
    if (signature(path, i).minus != 0) return false;
  }
  return true;
}

// All 27^L tensors, filtered.
inline std::map<Weight, std::vector<Path>> brute_force_hw(int length) {
  std::map<Weight, std::vector<Path>> out;
  Path path(static_cast<std::size_t>(length), Vertex(1));
  std::vector<int> digits(static_cast<std::size_t>(length), 1);
  while (true) {
    for (std::size_t k = 0; k < digits.size(); ++k) path[k] = Vertex(digits[k]);
    if (highest_weight_by_signature(path)) out[wt_path(path)].push_back(path);
    std::size_t k = digits.size();
    while (k > 0 && digits[k - 1] == kCrystalSize) digits[--k] = 1;
    if (k == 0) break;
    ++digits[k - 1];
  }
  return out;
}

// [n choose k]_q as prod_{j=1..k} (1 - q^{n-k+j}) / (1 - q^j), by exact
// polynomial long division.
inline LaurentPolynomial qbinom_by_product(int n, int k) {
  if (k < 0 || k > n) return {};
  std::vector<long long> num{1};
  auto times_one_minus = [](std::vector<long long> p, int d) {
    std::vector<long long> r(p.size() + static_cast<std::size_t>(d), 0);
    for (std::size_t t = 0; t < p.size(); ++t) {
      r[t] += p[t];
      r[t + static_cast<std::size_t>(d)] -= p[t];
    }
    return r;
  };
  auto divide_one_minus = [](std::vector<long long> p, int d) {
    // p = (1 - q^d) * r  =>  r_t = p_t + r_{t-d}
    std::vector<long long> r(p.size() - static_cast<std::size_t>(d), 0);
    for (std::size_t t = 0; t < r.size(); ++t) {
      r[t] = p[t] + (t >= static_cast<std::size_t>(d) ? r[t - static_cast<std::size_t>(d)] : 0);
    }
    return r;
  };
  for (int j = 1; j <= k; ++j) num = times_one_minus(num, n - k + j);
  for (int j = 1; j <= k; ++j) num = divide_one_minus(num, j);
  LaurentPolynomial out;
  for (std::size_t t = 0; t < num.size(); ++t) out.add_term(static_cast<int>(t), num[t]);
  return out;
}

}  // namespace e6kkr::oracle
