#pragma once

// Random rigid identities x^{e0} t1 x^{e1} ... tm x^{em} = x^{f0} t1 ... tm x^{fm}
// that are efficient and (n+1)-free.

#include "monoidvar/rigid.hpp"
#include "oracles.hpp"

namespace oracle {

inline monoidvar::RigidShape random_rigid(Rng& rng, unsigned n, std::size_t max_m,
                                          bool allow_zero = true) {
  using namespace monoidvar;
  std::uniform_int_distribution<std::size_t> mdist(1, max_m);
  std::uniform_int_distribution<std::size_t> edist(allow_zero ? 0 : 1, n);
  while (true) {
    RigidShape s;
    s.x = named('x');
    std::size_t m = mdist(rng);
    for (std::size_t i = 1; i <= m; ++i) s.ts.push_back(band(i));
    std::size_t se = 0, sf = 0;
    bool efficient = true;
    for (std::size_t i = 0; i <= m; ++i) {
      s.e.push_back(edist(rng));
      s.f.push_back(edist(rng));
      se += s.e.back();
      sf += s.f.back();
      if (s.e.back() == 0 && s.f.back() == 0) efficient = false;
    }
    // x must be a multiple letter on both sides
    if (efficient && se >= 2 && sf >= 2) return s;
  }
}

}  // namespace oracle
