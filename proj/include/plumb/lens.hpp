#pragma once

// Negative continued fractions and minimal plumbing chains of lens spaces.

#include <vector>

#include "plumb/graph.hpp"
#include "plumb/numeric.hpp"

namespace plumb {

/// Coprime pair with p >= 2 and 1 <= q < p; names the lens space L(p,q).
struct LensParams {
  Int p;
  Int q;

  friend bool operator==(const LensParams&, const LensParams&) = default;
};

LensParams make_lens_params(Int p, Int q);

/// Expansion p/q = b1 - 1/(b2 - 1/(... - 1/bk)) with every term >= 2.
struct NegContFrac {
  std::vector<Int> terms;

  friend bool operator==(const NegContFrac&, const NegContFrac&) = default;
};

NegContFrac neg_cont_frac(const LensParams& pq);
LensParams eval_cont_frac(const NegContFrac& cf);

/// Chain with euler numbers -b1,...,-bk and vertex ids 0..k-1 in chain order.
PlumbingGraph lens_graph(const LensParams& pq);

struct LensReadings {
  LensParams stored;    // chain read in stored order (smaller endpoint first)
  LensParams reversed;  // the opposite reading; q * q' = 1 (mod p)
};

LensReadings graph_to_lens_readings(const PlumbingGraph& g);

/// Reading of the chain in stored order. The reversed reading names the same
/// oriented lens space; both are exposed via graph_to_lens_readings.
LensParams graph_to_lens(const PlumbingGraph& g);

/// L(p,q) with reversed orientation is L(p, p-q).
LensParams lens_reverse_orientation(const LensParams& pq);

bool lens_oriented_homeo(const LensParams& a, const LensParams& b);
bool lens_unoriented_homeo(const LensParams& a, const LensParams& b);

}  // namespace plumb
