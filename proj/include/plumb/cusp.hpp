#pragma once

// Cusp cycles: recognition, torus-bundle monodromy, and the orientation
// reversal duality on cyclic weight words.

#include <cstdint>
#include <span>
#include <vector>

#include "plumb/graph.hpp"

namespace plumb {

/// Cyclic word (b_1,...,b_k), k >= 2, all entries >= 2, at least one >= 3.
/// Entries are stored as given; equality is up to rotation and reflection.
struct CuspWord {
  std::vector<std::int64_t> entries;

  std::vector<std::int64_t> canonical() const;
  friend bool operator==(const CuspWord& a, const CuspWord& b) {
    return a.canonical() == b.canonical();
  }
};

CuspWord make_cusp_word(std::vector<std::int64_t> entries);

/// True iff the graph is a genus-zero cycle with all euler numbers <= -2 and
/// at least one <= -3; cross-checked against negative definiteness.
bool is_cusp_graph(const PlumbingGraph& g);

/// Weight word of a cusp graph in stored cycle order.
CuspWord cusp_word(const PlumbingGraph& g);

/// Cycle with euler numbers -b_1,...,-b_k and ids 0..k-1 in cyclic order.
PlumbingGraph cusp_graph(const CuspWord& w);

struct MonodromyMatrix {
  Int a, b, c, d;

  Int trace() const { return a + d; }
  Int det() const { return a * d - b * c; }
  friend bool operator==(const MonodromyMatrix&, const MonodromyMatrix&) = default;
};

/// Product of ((b_i,-1),(1,0)) over the word as given. Accepts any word,
/// including all-2 words and single entries, for testing.
MonodromyMatrix monodromy(std::span<const std::int64_t> word);

/// trace >= 3; fails exactly on the parabolic all-2 words in valid input.
bool trace_condition(std::span<const std::int64_t> word);

/// Run-swap duality: each entry m+3 becomes a run of m 2's and each maximal
/// run of r consecutive 2's (r = 0 between adjacent entries >= 3) becomes an
/// entry r+3, preserving cyclic order. Result is canonicalized.
/// Words (3,2,...,2) dualize to a single-vertex cycle, which the loop-free
/// graph model cannot carry; those raise Unrepresentable.
CuspWord cusp_reverse_orientation(const CuspWord& w);

bool cusp_oriented_homeo(const CuspWord& a, const CuspWord& b);
bool cusp_unoriented_homeo(const CuspWord& a, const CuspWord& b);

}  // namespace plumb
