#pragma once

// JSON views of the library's results. Keys are sorted and lists keep the
// library's own (deterministic) order, so equal inputs give equal bytes.

#include <json.hpp>

#include "monoidvar/catalog.hpp"
#include "monoidvar/congruence.hpp"
#include "monoidvar/derivation.hpp"
#include "monoidvar/lattice.hpp"
#include "monoidvar/rees.hpp"
#include "monoidvar/replay.hpp"
#include "monoidvar/rigid.hpp"

namespace monoidvar::report {

using json = nlohmann::json;

json decomposition(const Word& w);
json step(const RewriteStep& s);
json trace(const DerivationTrace& t);
json criterion(const Identity& id, const std::string& which,
               const CriterionResult& r);
json derive(const Identity& id, const DeriveResult& r);
json saturation(const BoundedCongruence& bc, bool with_classes);
json satisfaction(const FiniteMonoid& m, const std::string& name,
                  const Identity& id, const SatResult& r);
json monoid(const FiniteMonoid& m, bool with_table);
json rees(const ReesMonoid& r, bool with_table);
json isoterm(const Word& w, const IsotermResult& r);
json verdict(const Verdict& v);
json inclusion(const std::string& v, const std::string& w,
               const InclusionResult& r);
json exclusion(const ExclusionReport& r);
json lattice(const std::vector<LatticeCheck>& checks);
json replay(const std::vector<ReplayOutcome>& outcomes);
json certified(const CertifiedTrace& c);
json rigid(const RigidNormalization& r);
json limit(const Word& w, const LimitResult& r);

/// Pretty JSON with a trailing newline.
std::string dump(const json& j);

}  // namespace monoidvar::report
