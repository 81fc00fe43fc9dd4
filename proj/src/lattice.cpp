#include "monoidvar/lattice.hpp"

namespace monoidvar {

bool recheck_refutation(const Verdict& v, const Identity& id) {
  if (v.value != Truth::False) return false;
  if (v.witness_monoid && v.counterexample)
    return evaluate(*v.witness_monoid, id.lhs, *v.counterexample) !=
           evaluate(*v.witness_monoid, id.rhs, *v.counterexample);
  if (v.criterion.empty()) return false;
  const Identity target = v.dualized ? dual_identity(id) : id;
  if (v.criterion == "F") return !criterion_F(target).holds;
  if (v.criterion == "Q") return !criterion_Q(target).holds;
  if (v.criterion == "SL") return !criterion_SL(target).holds;
  if (v.criterion.starts_with("comm:"))
    return !criterion_commutative_aperiodic(target,
                                            std::stoul(v.criterion.substr(5)))
                .holds;
  return false;
}

std::vector<LatticeCheck> verify_lattice(Checker& checker) {
  struct Claim {
    const char* v;
    const char* w;
    bool holds;
    bool core;
  };
  static const Claim claims[] = {
      {"T", "SL", true, true},       {"SL", "T", false, true},
      {"SL", "C", true, true},       {"C", "SL", false, true},
      {"C", "D", true, true},        {"D", "C", false, true},
      {"D", "E", true, true},        {"E", "D", false, true},
      {"E", "F", true, true},        {"F", "E", false, true},
      {"D", "dual-E", true, true},   {"dual-E", "D", false, true},
      {"F", "P1", true, true},       {"Q", "P1", true, true},
      {"Q", "F", false, true},       {"F", "Q", false, true},
      {"E", "Q", true, false},       {"dual-E", "Q", true, false},
      {"F", "H", true, false},       {"dual-E", "H", true, false},
      {"Q", "H", false, false},      {"P1", "P2", true, false},
      {"H", "P2", true, false},      {"E", "dual-E", false, false},
  };
  std::vector<LatticeCheck> out;
  for (const auto& c : claims) {
    LatticeCheck lc;
    lc.v = c.v;
    lc.w = c.w;
    lc.expected = c.holds ? Truth::True : Truth::False;
    lc.core = c.core;
    lc.result = checker.includes(c.v, c.w);
    if (lc.result.value == Truth::True) {
      lc.evidence_ok = true;
      lc.evidence = lc.result.detail;
    } else if (lc.result.value == Truth::False && lc.result.witness_identity) {
      const auto& wv = lc.result.witness;
      lc.evidence_ok = recheck_refutation(wv, *lc.result.witness_identity);
      lc.evidence = lc.result.witness_identity->str() + " fails: " +
                    (wv.monoid.empty() ? wv.detail
                                       : wv.monoid + " at " + wv.counterexample_text);
    } else {
      lc.evidence = lc.result.detail;
    }
    out.push_back(std::move(lc));
  }
  return out;
}

}  // namespace monoidvar
