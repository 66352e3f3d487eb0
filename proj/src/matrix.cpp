#include <cstddef>
#include <utility>
#include <vector>

#include "plumb/graph.hpp"

namespace plumb {

namespace {

// Fraction-free (Bareiss) elimination. Rows are rescaled lazily: a row whose
// column entries were zero at every step since it was last touched holds its
// old stage values, and catching it up is a single exact multiply/divide per
// entry (the entries are bordered minors, so the division is exact). This
// keeps elimination of banded matrices linear in big-integer work.
class Elimination {
 public:
  explicit Elimination(std::vector<std::vector<Int>> m)
      : m_(std::move(m)), n_(m_.size()), stage_(n_, 0), pivots_(n_ + 1, Int(1)) {}

  // Sylvester scan without row swaps; false as soon as a leading principal
  // minor fails to be positive (a zero pivot means a zero minor).
  bool all_pivots_positive() {
    for (std::size_t k = 0; k < n_; ++k) {
      materialize(k, k);
      if (m_[k][k] <= 0) return false;
      eliminate_step(k);
    }
    return true;
  }

  Int determinant() {
    int sign = 1;
    for (std::size_t k = 0; k < n_; ++k) {
      std::size_t p = k;
      while (p < n_ && m_[p][k] == 0) ++p;  // zero test is stage-invariant
      if (p == n_) return 0;
      if (p != k) {
        std::swap(m_[p], m_[k]);
        std::swap(stage_[p], stage_[k]);
        sign = -sign;
      }
      materialize(k, k);
      eliminate_step(k);
    }
    return sign * pivots_[n_];
  }

 private:
  void materialize(std::size_t i, std::size_t t) {
    const std::size_t s = stage_[i];
    if (s == t) return;
    for (auto& v : m_[i]) {
      if (v != 0) {
        v *= pivots_[t];
        v /= pivots_[s];
      }
    }
    stage_[i] = t;
  }

  void eliminate_step(std::size_t k) {
    const Int piv = m_[k][k];
    const Int& prev = pivots_[k];
    for (std::size_t i = k + 1; i < n_; ++i) {
      if (m_[i][k] == 0) continue;
      materialize(i, k);
      const Int f = m_[i][k];
      for (std::size_t j = k; j < n_; ++j) {
        m_[i][j] = (piv * m_[i][j] - f * m_[k][j]) / prev;
      }
      stage_[i] = k + 1;
    }
    pivots_[k + 1] = piv;
  }

  std::vector<std::vector<Int>> m_;
  std::size_t n_;
  std::vector<std::size_t> stage_;
  std::vector<Int> pivots_;  // pivots_[k] is the pivot of step k-1; [0] is 1
};

}  // namespace

bool is_negative_definite(const IntersectionMatrix& m) {
  std::vector<std::vector<Int>> neg = m.m;
  for (auto& row : neg)
    for (auto& v : row) v = -v;
  return Elimination(std::move(neg)).all_pivots_positive();
}

Int abs_determinant(const IntersectionMatrix& m) {
  Int d = Elimination(m.m).determinant();
  return d < 0 ? -d : d;
}

}  // namespace plumb
