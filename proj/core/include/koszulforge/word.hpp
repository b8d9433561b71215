#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "koszulforge/errors.hpp"

namespace kf {

/// A monomial in the free algebra: the sequence of generator indices
/// (1-based). The empty word is the unit, degree = length.
using Word = std::vector<std::uint32_t>;

inline Word concat(const Word& a, const Word& b) {
  Word w;
  w.reserve(a.size() + b.size());
  w.insert(w.end(), a.begin(), a.end());
  w.insert(w.end(), b.begin(), b.end());
  return w;
}

/// True if `sub` occurs in `w` as a contiguous factor; `pos` gets the
/// leftmost start offset.
inline bool find_subword(const Word& w, const Word& sub, std::size_t& pos) {
  if (sub.empty() || sub.size() > w.size()) return false;
  for (std::size_t i = 0; i + sub.size() <= w.size(); ++i) {
    bool hit = true;
    for (std::size_t k = 0; k < sub.size(); ++k)
      if (w[i + k] != sub[k]) {
        hit = false;
        break;
      }
    if (hit) {
      pos = i;
      return true;
    }
  }
  return false;
}

/// Degree-lexicographic order on words, refined by a total order on the
/// generators. The default ranks generators by index: X1 < X2 < ... < Xd.
/// Leading monomials (and Anick's criterion) depend on this choice, so the
/// CLI lets callers permute it.
class MonomialOrder {
public:
  explicit MonomialOrder(std::uint32_t ngens) : rank_(ngens) {
    std::iota(rank_.begin(), rank_.end(), 0u);
  }

  /// `smallest_to_largest` lists generator indices from ≺-smallest up,
  /// e.g. {2,1,3} means X2 ≺ X1 ≺ X3.
  static MonomialOrder from_permutation(
      const std::vector<std::uint32_t>& smallest_to_largest) {
    MonomialOrder ord(static_cast<std::uint32_t>(smallest_to_largest.size()));
    std::vector<bool> seen(smallest_to_largest.size(), false);
    for (std::size_t pos = 0; pos < smallest_to_largest.size(); ++pos) {
      const std::uint32_t g = smallest_to_largest[pos];
      if (g < 1 || g > smallest_to_largest.size() || seen[g - 1])
        throw ValidationError("order is not a permutation of 1..d");
      seen[g - 1] = true;
      ord.rank_[g - 1] = static_cast<std::uint32_t>(pos);
    }
    return ord;
  }

  std::uint32_t ngens() const { return static_cast<std::uint32_t>(rank_.size()); }

  bool less(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] != b[i]) return rank_[a[i] - 1] < rank_[b[i] - 1];
    return false;
  }

  bool equal_order(const MonomialOrder& o) const { return rank_ == o.rank_; }

  /// Generators from smallest to largest (inverse of the rank map).
  std::vector<std::uint32_t> permutation() const {
    std::vector<std::uint32_t> perm(rank_.size());
    for (std::uint32_t g = 1; g <= rank_.size(); ++g) perm[rank_[g - 1]] = g;
    return perm;
  }

private:
  std::vector<std::uint32_t> rank_; // rank_[i] = position of X_{i+1}
};

} // namespace kf
