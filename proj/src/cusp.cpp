#include "plumb/cusp.hpp"

#include <algorithm>
#include <string>

#include "plumb/cyclic.hpp"
#include "plumb/cycles.hpp"

namespace plumb {

namespace {

std::string word_str(const std::vector<std::int64_t>& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.size(); ++i)
    s += (i ? "," : "") + std::to_string(w[i]);
  return s + ")";
}

}  // namespace

std::vector<std::int64_t> CuspWord::canonical() const {
  return canonical_cyclic(entries);
}

CuspWord make_cusp_word(std::vector<std::int64_t> entries) {
  if (entries.size() < 2)
    fail(Errc::invalid_params, "cusp word needs at least two entries, got " +
                                   word_str(entries));
  bool some_ge3 = false;
  for (std::int64_t b : entries) {
    if (b < 2)
      fail(Errc::invalid_params, "cusp word entries must be >= 2, got " + word_str(entries));
    some_ge3 = some_ge3 || b >= 3;
  }
  if (!some_ge3)
    fail(Errc::all_twos, "cusp word " + word_str(entries) + " has no entry >= 3");
  return {std::move(entries)};
}

bool is_cusp_graph(const PlumbingGraph& g) {
  TautShape t = taut_classify(g);
  bool combinatorial = t.cls == TautClass::cusp_cycle;

  // The combinatorial description matches negative definiteness on minimal
  // genus-zero cycles; check whenever all weights are <= -2 (a -1-vertex
  // cycle can be negative definite without being a cusp graph, but is never
  // minimal, and positive genus makes definiteness insufficient).
  if (t.shape.kind == Shape::Kind::cycle) {
    bool plain = true;
    for (const auto& v : g.vertices)
      plain = plain && v.genus == 0 && v.euler <= -2;
    if (plain && combinatorial != is_negative_definite(intersection_matrix(g)))
      fail(Errc::internal_check,
           "cusp recognition disagrees with negative definiteness");
  }
  return combinatorial;
}

CuspWord cusp_word(const PlumbingGraph& g) {
  if (!is_cusp_graph(g)) fail(Errc::not_taut_class, "graph is not a cusp cycle");
  Shape s = shape_classify(g);
  std::vector<std::int64_t> w;
  for (VertexId id : s.order) w.push_back(-g.vertex(id).euler);
  return make_cusp_word(std::move(w));
}

PlumbingGraph cusp_graph(const CuspWord& w) {
  make_cusp_word(w.entries);
  const std::size_t k = w.entries.size();
  PlumbingGraph g;
  for (std::size_t i = 0; i < k; ++i)
    g.vertices.push_back({static_cast<VertexId>(i), 0, -w.entries[i], 0});
  for (std::size_t i = 0; i < k; ++i)
    g.edges.emplace_back(static_cast<VertexId>(i), static_cast<VertexId>((i + 1) % k));
  return g;
}

MonodromyMatrix monodromy(std::span<const std::int64_t> word) {
  if (word.empty()) fail(Errc::invalid_params, "empty monodromy word");
  MonodromyMatrix m{1, 0, 0, 1};
  for (std::int64_t b : word) {
    // right-multiply by ((b,-1),(1,0))
    Int a2 = m.a * b + m.b;
    Int c2 = m.c * b + m.d;
    m.b = -m.a;
    m.d = -m.c;
    m.a = a2;
    m.c = c2;
  }
  return m;
}

bool trace_condition(std::span<const std::int64_t> word) {
  return monodromy(word).trace() >= 3;
}

CuspWord cusp_reverse_orientation(const CuspWord& w) {
  make_cusp_word(w.entries);
  const std::size_t k = w.entries.size();

  // Rotate so the word starts on an entry >= 3, then read off the
  // (entry, following run of 2's) pairs.
  std::size_t start = 0;
  while (w.entries[start] < 3) ++start;
  std::vector<std::int64_t> dual;
  std::size_t i = 0;
  while (i < k) {
    std::int64_t entry = w.entries[(start + i) % k];
    ++i;
    std::int64_t run = 0;
    while (i < k && w.entries[(start + i) % k] == 2) {
      ++run;
      ++i;
    }
    for (std::int64_t t = 0; t < entry - 3; ++t) dual.push_back(2);
    dual.push_back(run + 3);
  }

  if (dual.size() < 2)
    fail(Errc::unrepresentable,
         "orientation reversal of " + word_str(w.entries) +
             " is a one-vertex cycle, which needs a loop edge");
  CuspWord out = make_cusp_word(std::move(dual));
  out.entries = out.canonical();
  return out;
}

bool cusp_oriented_homeo(const CuspWord& a, const CuspWord& b) {
  make_cusp_word(a.entries);
  make_cusp_word(b.entries);
  return a.canonical() == b.canonical();
}

bool cusp_unoriented_homeo(const CuspWord& a, const CuspWord& b) {
  if (cusp_oriented_homeo(a, b)) return true;
  try {
    return cusp_oriented_homeo(a, cusp_reverse_orientation(b));
  } catch (const Error& e) {
    if (e.code() == Errc::unrepresentable) return false;
    throw;
  }
}

}  // namespace plumb
