#include "plumb/survey.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "plumb/bnp.hpp"
#include "plumb/cusp.hpp"
#include "plumb/cyclic.hpp"
#include "plumb/error.hpp"
#include "plumb/lens.hpp"

namespace plumb {

namespace {

std::string word_str(const std::vector<std::int64_t>& w) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out << ',';
    out << w[i];
  }
  out << ')';
  return out.str();
}

}  // namespace

SurveyReport survey_lens(std::int64_t pmax) {
  if (pmax < 2) fail(Errc::invalid_params, "pmax must be at least 2");
  SurveyReport r;
  r.parameters = "lens pairs (p,q) vs (p,p-q), 2 <= p <= " + std::to_string(pmax);
  for (std::int64_t p = 2; p <= pmax; ++p) {
    for (std::int64_t q = 1; 2 * q <= p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      ++r.pairs_scanned;
      const PlumbingGraph a = lens_graph(make_lens_params(p, q));
      const PlumbingGraph b = lens_graph(make_lens_params(p, p - q));
      const bool desc_eq = bnp_equal(bnp_descriptor(a), bnp_descriptor(b));
      const bool graph_eq = canonical_shape_word(a) == canonical_shape_word(b);
      const bool arith = (Int(q) * q + 1) % p == 0;
      if (graph_eq)
        ++r.oriented_homeo;
      else
        ++r.unoriented_only;
      if (!desc_eq) ++r.bilipschitz_distinct;
      if (desc_eq != graph_eq || graph_eq != arith) {
        std::ostringstream c;
        c << std::boolalpha << "(p,q)=(" << p << "," << q
          << "): bnp_equal=" << desc_eq << " graphs_equal=" << graph_eq
          << " q^2=-1(mod p)=" << arith;
        r.counterexamples.push_back(c.str());
      }
    }
  }
  return r;
}

SurveyReport survey_cusp(std::int64_t kmax, std::int64_t bmax) {
  if (kmax < 2) fail(Errc::invalid_params, "kmax must be at least 2");
  if (bmax < 3) fail(Errc::invalid_params, "bmax must be at least 3");
  SurveyReport r;
  r.parameters = "cusp words vs duals, 2 <= k <= " + std::to_string(kmax) +
                 ", 2 <= b_i <= " + std::to_string(bmax);
  for (std::int64_t k = 2; k <= kmax; ++k) {
    std::vector<std::int64_t> w(static_cast<std::size_t>(k), 2);
    while (true) {
      const bool has_big = std::any_of(w.begin(), w.end(),
                                       [](std::int64_t b) { return b >= 3; });
      // one representative per rotation/reflection class
      if (has_big && canonical_cyclic(w) == w) {
        ++r.pairs_scanned;
        const CuspWord word = make_cusp_word(w);
        bool representable = true;
        CuspWord dual;
        try {
          dual = cusp_reverse_orientation(word);
        } catch (const Error& e) {
          if (e.code() != Errc::unrepresentable) throw;
          representable = false;
        }
        if (!representable) {
          ++r.skipped_unrepresentable;
        } else {
          const PlumbingGraph ga = cusp_graph(word);
          const PlumbingGraph gb = cusp_graph(dual);
          const bool desc_eq = bnp_equal(bnp_descriptor(ga), bnp_descriptor(gb));
          const bool oriented = cusp_oriented_homeo(word, dual);
          if (oriented)
            ++r.oriented_homeo;
          else
            ++r.unoriented_only;
          if (!desc_eq) ++r.bilipschitz_distinct;
          if (desc_eq != oriented) {
            std::ostringstream c;
            c << std::boolalpha << word_str(w) << " vs dual "
              << word_str(dual.entries) << ": bnp_equal=" << desc_eq
              << " oriented_homeo=" << oriented;
            r.counterexamples.push_back(c.str());
          }
          if (!desc_eq) {
            auto ra = inner_rates(ga);
            auto rb = inner_rates(gb);
            std::sort(ra.begin(), ra.end());
            std::sort(rb.begin(), rb.end());
            if (ra == rb)
              r.same_rates_distinct.push_back(word_str(w) + " vs dual " +
                                              word_str(dual.entries));
          }
        }
      }
      std::size_t i = 0;
      while (i < w.size() && w[i] == bmax) {
        w[i] = 2;
        ++i;
      }
      if (i == w.size()) break;
      ++w[i];
    }
  }
  return r;
}

}  // namespace plumb
