#include "plumb/bnp.hpp"

#include <algorithm>
#include <set>

#include "plumb/cusp.hpp"
#include "plumb/cycles.hpp"
#include "plumb/lens.hpp"

namespace plumb {

namespace {

// Flattened (curvettes, n) word of a decomposition-ordered descriptor.
// Chains: c_0 n_1 c_1 ... n_s c_s; cycles: c_1 n_1 ... c_s n_s.
std::vector<Int> flatten(const BnpDescriptor& d) {
  std::vector<Int> f;
  if (d.shape == Shape::Kind::chain) {
    for (std::size_t i = 0; i < d.l_nodes.size(); ++i) {
      if (i) f.push_back(d.strings[i - 1].n);
      f.push_back(d.l_nodes[i].curvettes);
    }
  } else {
    for (std::size_t i = 0; i < d.l_nodes.size(); ++i) {
      f.push_back(d.l_nodes[i].curvettes);
      f.push_back(d.strings[i].n);
    }
  }
  return f;
}

// Canonical representative of a flattened word under the symmetries of its
// shape. Cycle reflection reverses the word and re-aligns it so L entries
// stay on even positions.
std::vector<Int> canonical_flat(Shape::Kind shape, const std::vector<Int>& f) {
  if (shape == Shape::Kind::chain) {
    std::vector<Int> r(f.rbegin(), f.rend());
    return std::min(f, r);
  }
  const std::size_t n = f.size();
  std::vector<Int> best;
  std::vector<Int> refl(f.rbegin(), f.rend());
  std::rotate(refl.rbegin(), refl.rbegin() + 1, refl.rend());
  for (const auto& base : {f, refl}) {
    for (std::size_t s = 0; s < n; s += 2) {
      std::vector<Int> cand(n);
      for (std::size_t i = 0; i < n; ++i) cand[i] = base[(s + i) % n];
      if (best.empty() || cand < best) best = std::move(cand);
    }
  }
  return best;
}

struct TautData {
  TautShape taut;
  CycleReport cycle;
};

TautData taut_data(const PlumbingGraph& g) {
  TautData d{taut_classify(g), {}};
  if (d.taut.cls == TautClass::none)
    fail(Errc::not_taut_class,
         "graph is neither a minimal lens chain nor a cusp cycle");
  d.cycle = maximal_cycle_taut(g);
  return d;
}

StringDecomposition decompose(const PlumbingGraph& g, const TautData& d) {
  const auto& order = d.taut.shape.order;
  const std::size_t n = order.size();

  std::vector<std::size_t> lpos;
  for (std::size_t i = 0; i < n; ++i)
    if (d.cycle.k.at(order[i]) > 0) lpos.push_back(i);
  if (lpos.empty()) fail(Errc::no_l_nodes, "graph has no vertex of positive anti-degree");

  // cross-check against the weight/valency description
  for (std::size_t i = 0; i < n; ++i) {
    bool is_l = d.cycle.k.at(order[i]) > 0;
    bool expect = g.vertex(order[i]).euler <= -3 ||
                  (d.taut.shape.kind == Shape::Kind::chain && (i == 0 || i + 1 == n));
    if (is_l != expect)
      fail(Errc::internal_check, "anti-degree disagrees with the L-node "
                                 "characterization at vertex " +
                                     std::to_string(order[i]));
  }

  StringDecomposition out;
  out.shape = d.taut.shape.kind;

  if (out.shape == Shape::Kind::chain) {
    for (std::size_t li = 0; li < lpos.size(); ++li) {
      out.l_nodes.push_back(order[lpos[li]]);
      if (li) {
        TautString s{order[lpos[li - 1]], order[lpos[li]], {}};
        for (std::size_t i = lpos[li - 1] + 1; i < lpos[li]; ++i)
          s.interior.push_back(order[i]);
        out.strings.push_back(std::move(s));
      }
    }
    return out;
  }

  // Cycle: choose starting L-node and direction minimizing the flattened
  // (curvettes, n) word.
  const std::size_t s_count = lpos.size();
  StringDecomposition best;
  std::vector<Int> best_word;
  for (std::size_t start = 0; start < s_count; ++start) {
    for (int dir : {+1, -1}) {
      StringDecomposition cand;
      cand.shape = out.shape;
      std::vector<Int> word;
      std::size_t pos = lpos[start];
      for (std::size_t step = 0; step < s_count; ++step) {
        cand.l_nodes.push_back(order[pos]);
        word.push_back(d.cycle.k.at(order[pos]));
        TautString st{order[pos], 0, {}};
        std::size_t q = pos;
        for (;;) {
          q = (q + n + dir) % n;
          if (d.cycle.k.at(order[q]) > 0) break;
          st.interior.push_back(order[q]);
        }
        st.to = order[q];
        word.push_back(Int(st.interior.size()));
        cand.strings.push_back(std::move(st));
        pos = q;
      }
      if (best_word.empty() || word < best_word) {
        best_word = std::move(word);
        best = std::move(cand);
      }
    }
  }
  return best;
}

BnpDescriptor build_descriptor(const PlumbingGraph& g, const TautData& d,
                               const StringDecomposition& sd) {
  BnpDescriptor out;
  out.shape = sd.shape;
  for (VertexId id : sd.l_nodes) {
    const Vertex& v = g.vertex(id);
    out.l_nodes.push_back({id, v.euler, g.valency(id), d.cycle.k.at(id)});
  }
  for (const auto& s : sd.strings) {
    std::int64_t n = static_cast<std::int64_t>(s.interior.size());
    out.strings.push_back({n, Rat(n + 3, 2)});
  }
  return out;
}

}  // namespace

std::vector<VertexId> l_nodes(const PlumbingGraph& g) {
  TautData d = taut_data(g);
  return decompose(g, d).l_nodes;
}

StringDecomposition string_decomposition(const PlumbingGraph& g) {
  TautData d = taut_data(g);
  return decompose(g, d);
}

std::vector<Rat> inner_rates(const PlumbingGraph& g) {
  TautData d = taut_data(g);
  std::vector<Rat> rates;
  for (const auto& s : decompose(g, d).strings)
    rates.emplace_back(static_cast<std::int64_t>(s.interior.size()) + 3, 2);
  return rates;
}

BnpDescriptor bnp_descriptor(const PlumbingGraph& g) {
  TautData d = taut_data(g);
  return build_descriptor(g, d, decompose(g, d));
}

bool bnp_equal(const BnpDescriptor& a, const BnpDescriptor& b) {
  if (a.shape != b.shape) return false;
  if (a.l_nodes.size() != b.l_nodes.size()) return false;
  return canonical_flat(a.shape, flatten(a)) == canonical_flat(b.shape, flatten(b));
}

const char* topo_verdict_name(TopoVerdict v) {
  switch (v) {
    case TopoVerdict::oriented_homeo: return "OrientedHomeo";
    case TopoVerdict::unoriented_homeo_only: return "UnorientedHomeoOnly";
    case TopoVerdict::distinct: return "Distinct";
    case TopoVerdict::unsupported: return "Unsupported";
  }
  return "UnknownVerdict";
}

CompareReport compare(const PlumbingGraph& g1, const PlumbingGraph& g2) {
  TautShape t1 = taut_classify(g1);
  TautShape t2 = taut_classify(g2);
  CompareReport rep;
  if (t1.cls == TautClass::none || t2.cls == TautClass::none) return rep;

  rep.bilipschitz_equal = bnp_equal(bnp_descriptor(g1), bnp_descriptor(g2));

  bool oriented = false, unoriented = false;
  if (t1.cls == t2.cls) {
    auto w1 = canonical_shape_word(g1);
    oriented = w1 == canonical_shape_word(g2);
    if (oriented) {
      unoriented = true;
    } else if (t1.cls == TautClass::hj_chain) {
      LensParams dual = lens_reverse_orientation(graph_to_lens(g2));
      unoriented = w1 == canonical_shape_word(lens_graph(dual));
    } else {
      try {
        CuspWord dual = cusp_reverse_orientation(cusp_word(g2));
        unoriented = w1 == canonical_shape_word(cusp_graph(dual));
      } catch (const Error& e) {
        if (e.code() != Errc::unrepresentable) throw;
      }
    }
  }

  if (oriented) {
    rep.topo = TopoVerdict::oriented_homeo;
    bool same_as_stored = euler_sequence(g1, shape_classify(g1).order) ==
                          euler_sequence(g2, shape_classify(g2).order);
    rep.witness = t1.cls == TautClass::hj_chain
                      ? (same_as_stored ? "identity on the stored chain order"
                                        : "chain reversal")
                      : (same_as_stored ? "rotation of the stored cycle order"
                                        : "rotation/reflection of the stored cycle order");
    if (!rep.bilipschitz_equal)
      fail(Errc::internal_check,
           "equal graphs produced different inner metric descriptors");
  } else if (unoriented) {
    rep.topo = TopoVerdict::unoriented_homeo_only;
    rep.witness = "match after orientation reversal";
  } else {
    rep.topo = TopoVerdict::distinct;
  }
  return rep;
}

}  // namespace plumb
