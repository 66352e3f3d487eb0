#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "plumb/bnp.hpp"
#include "plumb/cusp.hpp"
#include "plumb/cyclic.hpp"
#include "plumb/lens.hpp"

using namespace plumb;
using helpers::code_of;
using helpers::relabel;

namespace {

PlumbingGraph lens27() { return lens_graph(make_lens_params(27, 8)); }
PlumbingGraph lens27r() { return lens_graph(make_lens_params(27, 19)); }
PlumbingGraph cusp6() { return cusp_graph(make_cusp_word({4, 2, 5, 2, 2, 3})); }
PlumbingGraph cusp6r() { return cusp_graph(make_cusp_word({3, 2, 4, 2, 2, 5})); }

std::vector<Rat> sorted_rates(const PlumbingGraph& g) {
  auto r = inner_rates(g);
  std::sort(r.begin(), r.end());
  return r;
}

std::vector<Int> curvettes_of(const BnpDescriptor& d) {
  std::vector<Int> c;
  for (const auto& l : d.l_nodes) c.push_back(l.curvettes);
  return c;
}

}  // namespace

TEST_SUITE("bnp") {

TEST_CASE("chain L-nodes and strings") {
  // (-4,-2,-3,-2): both ends plus the -3 vertex carry curvettes
  CHECK(l_nodes(lens27()) == std::vector<VertexId>{0, 2, 3});

  StringDecomposition sd = string_decomposition(lens27());
  CHECK(sd.shape == Shape::Kind::chain);
  CHECK(sd.l_nodes == std::vector<VertexId>{0, 2, 3});
  REQUIRE(sd.strings.size() == 2);
  CHECK(sd.strings[0].from == 0);
  CHECK(sd.strings[0].to == 2);
  CHECK(sd.strings[0].interior == std::vector<VertexId>{1});
  CHECK(sd.strings[1].from == 2);
  CHECK(sd.strings[1].to == 3);
  CHECK(sd.strings[1].interior.empty());

  CHECK(l_nodes(lens27r()) == std::vector<VertexId>{0, 2, 3});

  // single vertex chain: one L-node, no strings
  PlumbingGraph two = lens_graph(make_lens_params(2, 1));
  CHECK(l_nodes(two) == std::vector<VertexId>{0});
  CHECK(string_decomposition(two).strings.empty());
  CHECK(inner_rates(two).empty());
}

TEST_CASE("cycle decomposition is rotation canonical") {
  // canonical start is the -3 vertex: flattened word (1,0,2,1,3,2)
  StringDecomposition sd = string_decomposition(cusp6());
  CHECK(sd.shape == Shape::Kind::cycle);
  CHECK(sd.l_nodes == std::vector<VertexId>{5, 0, 2});
  REQUIRE(sd.strings.size() == 3);
  CHECK(sd.strings[0].from == 5);
  CHECK(sd.strings[0].to == 0);
  CHECK(sd.strings[0].interior.empty());
  CHECK(sd.strings[1].from == 0);
  CHECK(sd.strings[1].to == 2);
  CHECK(sd.strings[1].interior == std::vector<VertexId>{1});
  CHECK(sd.strings[2].from == 2);
  CHECK(sd.strings[2].to == 5);
  CHECK(sd.strings[2].interior == std::vector<VertexId>{3, 4});
}

TEST_CASE("inner rate pins") {
  CHECK(inner_rates(lens27()) == std::vector<Rat>{2, Rat(3, 2)});
  CHECK(inner_rates(lens27r()) == std::vector<Rat>{2, Rat(3, 2)});
  CHECK(sorted_rates(lens27()) == sorted_rates(lens27r()));

  CHECK(inner_rates(cusp6()) == std::vector<Rat>{Rat(3, 2), 2, Rat(5, 2)});
  CHECK(sorted_rates(cusp6()) == sorted_rates(cusp6r()));
}

TEST_CASE("descriptor pins") {
  BnpDescriptor d = bnp_descriptor(lens27());
  CHECK(d.shape == Shape::Kind::chain);
  REQUIRE(d.l_nodes.size() == 3);
  CHECK(d.l_nodes[0] == LNodeRecord{0, -4, 1, 3});
  CHECK(d.l_nodes[1] == LNodeRecord{2, -3, 2, 1});
  CHECK(d.l_nodes[2] == LNodeRecord{3, -2, 1, 1});
  REQUIRE(d.strings.size() == 2);
  CHECK(d.strings[0] == StringRecord{1, 2});
  CHECK(d.strings[1] == StringRecord{0, Rat(3, 2)});
  CHECK(curvettes_of(d) == std::vector<Int>{3, 1, 1});

  BnpDescriptor r = bnp_descriptor(lens27r());
  CHECK(curvettes_of(r) == std::vector<Int>{1, 2, 2});

  BnpDescriptor c = bnp_descriptor(cusp6());
  CHECK(c.shape == Shape::Kind::cycle);
  CHECK(curvettes_of(c) == std::vector<Int>{1, 2, 3});
  REQUIRE(c.strings.size() == 3);
  CHECK(c.strings[0].n == 0);
  CHECK(c.strings[1].n == 1);
  CHECK(c.strings[2].n == 2);
}

TEST_CASE("descriptor equality is symmetry invariant") {
  CHECK(bnp_equal(bnp_descriptor(lens27()), bnp_descriptor(lens27())));

  // same chain stored backwards
  PlumbingGraph flipped =
      relabel(lens27(), {{0, 9}, {1, 6}, {2, 4}, {3, 0}});
  CHECK(bnp_equal(bnp_descriptor(lens27()), bnp_descriptor(flipped)));

  // rotations and reflections of the cusp cycle
  for (const auto& map : std::vector<std::map<VertexId, VertexId>>{
           {{0, 2}, {1, 3}, {2, 4}, {3, 5}, {4, 0}, {5, 1}},
           {{0, 0}, {1, 5}, {2, 4}, {3, 3}, {4, 2}, {5, 1}},
           {{0, 11}, {1, 7}, {2, 5}, {3, 3}, {4, 2}, {5, 0}}}) {
    CHECK(bnp_equal(bnp_descriptor(cusp6()), bnp_descriptor(relabel(cusp6(), map))));
    CHECK(bnp_descriptor(relabel(cusp6(), map)).l_nodes.size() == 3);
  }

  // the two orientations have equal rate multisets but unequal descriptors
  CHECK(!bnp_equal(bnp_descriptor(lens27()), bnp_descriptor(lens27r())));
  CHECK(!bnp_equal(bnp_descriptor(cusp6()), bnp_descriptor(cusp6r())));
  CHECK(!bnp_equal(bnp_descriptor(lens27()), bnp_descriptor(cusp6())));
}

TEST_CASE("descriptor equality across relabelings of whole families") {
  for (std::int64_t p = 2; p <= 40; ++p)
    for (std::int64_t q = 1; q < p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      PlumbingGraph g = lens_graph(make_lens_params(p, q));
      std::map<VertexId, VertexId> shift, flip;
      const auto n = static_cast<VertexId>(g.vertices.size());
      for (VertexId i = 0; i < n; ++i) {
        shift[i] = i + 5;
        flip[i] = n - 1 - i;
      }
      CHECK(bnp_equal(bnp_descriptor(g), bnp_descriptor(relabel(g, shift))));
      CHECK(bnp_equal(bnp_descriptor(g), bnp_descriptor(relabel(g, flip))));
    }
}

TEST_CASE("descriptor rejects non taut graphs") {
  CHECK(code_of([] { bnp_descriptor(helpers::e8()); }) == Errc::not_taut_class);
  CHECK(code_of([] { inner_rates(helpers::cycle_of({-2, -2, -2})); }) ==
        Errc::not_taut_class);
  CHECK(code_of([] { l_nodes(helpers::chain_of({-2, -1, -2})); }) ==
        Errc::not_taut_class);
}

TEST_CASE("comparison verdicts") {
  CompareReport same = compare(lens27(), lens27());
  CHECK(same.topo == TopoVerdict::oriented_homeo);
  CHECK(same.bilipschitz_equal);
  REQUIRE(same.witness.has_value());
  CHECK(*same.witness == "identity on the stored chain order");

  // inverse parameter pair: same oriented space, chain read backwards
  CompareReport inv = compare(lens27(), lens_graph(make_lens_params(27, 17)));
  CHECK(inv.topo == TopoVerdict::oriented_homeo);
  CHECK(inv.bilipschitz_equal);
  REQUIRE(inv.witness.has_value());
  CHECK(*inv.witness == "chain reversal");

  CompareReport rev = compare(lens27(), lens27r());
  CHECK(rev.topo == TopoVerdict::unoriented_homeo_only);
  CHECK(!rev.bilipschitz_equal);
  REQUIRE(rev.witness.has_value());
  CHECK(*rev.witness == "match after orientation reversal");

  CompareReport cusp_rev = compare(cusp6(), cusp6r());
  CHECK(cusp_rev.topo == TopoVerdict::unoriented_homeo_only);
  CHECK(!cusp_rev.bilipschitz_equal);

  CompareReport rot = compare(
      cusp6(), relabel(cusp6(), {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}}));
  CHECK(rot.topo == TopoVerdict::oriented_homeo);
  CHECK(rot.bilipschitz_equal);

  // q^2 = -1 mod p: reversal realizes an oriented homeomorphism
  CompareReport self = compare(lens_graph(make_lens_params(5, 2)),
                               lens_graph(make_lens_params(5, 3)));
  CHECK(self.topo == TopoVerdict::oriented_homeo);
  CHECK(self.bilipschitz_equal);

  CompareReport distinct = compare(lens27(), lens_graph(make_lens_params(27, 11)));
  CHECK(distinct.topo == TopoVerdict::distinct);

  // chain versus cycle: never homeomorphic, descriptors differ in shape
  CompareReport mixed = compare(lens27(), cusp6());
  CHECK(mixed.topo == TopoVerdict::distinct);
  CHECK(!mixed.bilipschitz_equal);
  CHECK(!mixed.witness.has_value());

  CompareReport unsupported = compare(helpers::e8(), lens27());
  CHECK(unsupported.topo == TopoVerdict::unsupported);
  CHECK(!unsupported.bilipschitz_equal);
  CHECK(!unsupported.witness.has_value());
}

TEST_CASE("verdict names") {
  CHECK(std::string(topo_verdict_name(TopoVerdict::oriented_homeo)) ==
        "OrientedHomeo");
  CHECK(std::string(topo_verdict_name(TopoVerdict::unoriented_homeo_only)) ==
        "UnorientedHomeoOnly");
  CHECK(std::string(topo_verdict_name(TopoVerdict::distinct)) == "Distinct");
  CHECK(std::string(topo_verdict_name(TopoVerdict::unsupported)) ==
        "Unsupported");
}

}  // TEST_SUITE
