#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

namespace plumb {

// Canonical form of a linear word up to reversal: the lexicographically
// smaller of the word and its reverse.
template <typename T>
std::vector<T> canonical_linear(std::vector<T> w) {
  std::vector<T> r(w.rbegin(), w.rend());
  return std::min(w, r);
}

// Canonical form of a cyclic word up to rotation and reflection: the
// lexicographic minimum over the full dihedral orbit.
template <typename T>
std::vector<T> canonical_cyclic(const std::vector<T>& w) {
  if (w.empty()) return w;
  const std::size_t k = w.size();
  std::vector<T> best;
  for (int refl = 0; refl < 2; ++refl) {
    std::vector<T> base = w;
    if (refl) std::reverse(base.begin(), base.end());
    for (std::size_t s = 0; s < k; ++s) {
      std::vector<T> cand(k);
      for (std::size_t i = 0; i < k; ++i) cand[i] = base[(s + i) % k];
      if (best.empty() || cand < best) best = std::move(cand);
    }
  }
  return best;
}

template <typename T>
bool cyclic_equal(const std::vector<T>& a, const std::vector<T>& b) {
  if (a.size() != b.size()) return false;
  return canonical_cyclic(a) == canonical_cyclic(b);
}

}  // namespace plumb
