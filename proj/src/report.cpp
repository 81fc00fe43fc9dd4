#include "monoidvar/report.hpp"

namespace monoidvar::report {

namespace {

std::string letter(Letter a) { return std::string(1, a.display()); }

json words(const std::vector<Word>& ws) {
  json a = json::array();
  for (const auto& w : ws) a.push_back(w.str());
  return a;
}

std::string outcome(SearchOutcome o) {
  switch (o) {
    case SearchOutcome::Found: return "found";
    case SearchOutcome::Exhausted: return "exhausted";
    case SearchOutcome::BudgetHit: return "budget";
  }
  return "budget";
}

std::string status(SatStatus s) {
  switch (s) {
    case SatStatus::Holds: return "holds";
    case SatStatus::Fails: return "fails";
    case SatStatus::BudgetExceeded: return "budget";
  }
  return "budget";
}

json assignment(const FiniteMonoid& m, const Assignment& a) {
  json j = json::object();
  for (const auto& [l, e] : a) j[letter(l)] = m.label(e);
  return j;
}

}  // namespace

json decomposition(const Word& w) {
  auto d = decompose(w);
  auto cls = letter_classes(w);
  json j;
  j["word"] = w.str();
  j["length"] = w.size();
  json dividers = json::array();
  for (Letter t : d.simple) dividers.push_back(letter(t));
  j["dividers"] = dividers;
  j["blocks"] = words(d.blocks);
  j["simple"] = cls.simple.str();
  j["multiple"] = cls.multiple.str();
  json h = json::object();
  for (Letter x : content(w).letters()) {
    json e;
    e["h1"] = h_divider(w, x, 1);
    if (cls.multiple.contains(x)) e["h2"] = h_divider(w, x, 2);
    e["occurrences"] = occurrences(w, x);
    h[letter(x)] = e;
  }
  j["h"] = h;
  j["one_dividers"] = one_dividers(w).str();
  return j;
}

json step(const RewriteStep& s) {
  json j;
  j["identity"] = s.identity.str();
  if (!s.identity.name.empty()) j["name"] = s.identity.name;
  j["direction"] = to_string(s.direction);
  j["left"] = s.left.str();
  j["right"] = s.right.str();
  json xi = json::object();
  for (const auto& [l, w] : s.xi.images()) xi[letter(l)] = w.str();
  j["xi"] = xi;
  j["result"] = s.target().str();
  return j;
}

json trace(const DerivationTrace& t) {
  json j;
  j["start"] = t.start.str();
  json steps = json::array();
  for (const auto& s : t.steps) steps.push_back(step(s));
  j["steps"] = steps;
  j["end"] = t.end().str();
  return j;
}

json criterion(const Identity& id, const std::string& which,
               const CriterionResult& r) {
  json j;
  j["identity"] = id.str();
  j["criterion"] = which;
  j["holds"] = r.holds;
  j["reason"] = r.reason;
  return j;
}

json derive(const Identity& id, const DeriveResult& r) {
  json j;
  j["identity"] = id.str();
  j["outcome"] = outcome(r.outcome);
  j["states"] = r.states;
  j["len_cap"] = r.len_cap;
  if (r.trace) j["trace"] = trace(*r.trace);
  return j;
}

json saturation(const BoundedCongruence& bc, bool with_classes) {
  json j;
  j["system"] = bc.system().str();
  j["letters"] = bc.letters();
  j["length_bound"] = bc.length_bound();
  j["words"] = bc.word_count();
  j["classes"] = bc.class_count();
  j["passes"] = bc.passes();
  if (with_classes) {
    json cl = json::array();
    for (const auto& c : bc.classes()) cl.push_back(words(c));
    j["class_list"] = cl;
  }
  return j;
}

json satisfaction(const FiniteMonoid& m, const std::string& name,
                  const Identity& id, const SatResult& r) {
  json j;
  j["identity"] = id.str();
  j["monoid"] = name;
  j["size"] = m.size();
  j["status"] = status(r.status);
  j["leaves"] = r.leaves;
  if (r.counterexample) {
    j["counterexample"] = assignment(m, *r.counterexample);
    j["lhs_value"] = m.label(evaluate(m, id.lhs, *r.counterexample));
    j["rhs_value"] = m.label(evaluate(m, id.rhs, *r.counterexample));
  }
  return j;
}

json monoid(const FiniteMonoid& m, bool with_table) {
  json j;
  j["size"] = m.size();
  j["identity"] = m.label(m.identity());
  j["labels"] = m.labels();
  if (m.zero()) j["zero"] = m.label(*m.zero());
  auto v = validate(m);
  j["valid"] = v.ok;
  if (!v.ok) j["validation"] = v.message;
  j["aperiodic"] = is_aperiodic(m);
  j["idempotents_commute"] = idempotents_commute(m);
  json idem = json::array();
  for (Elem e : idempotents(m)) idem.push_back(m.label(e));
  j["idempotents"] = idem;
  if (with_table) {
    json rows = json::array();
    for (Elem a = 0; a < m.size(); ++a) {
      json row = json::array();
      for (Elem b = 0; b < m.size(); ++b) row.push_back(m.mul(a, b));
      rows.push_back(row);
    }
    j["table"] = rows;
  }
  return j;
}

json rees(const ReesMonoid& r, bool with_table) {
  json j = monoid(r.base, with_table);
  j["words"] = words(r.source);
  return j;
}

json isoterm(const Word& w, const IsotermResult& r) {
  json j;
  j["word"] = w.str();
  j["isoterm"] = std::string(to_string(r.verdict));
  j["exact"] = r.exact;
  j["candidates"] = r.candidates;
  if (r.witness) j["witness"] = r.witness->str();
  return j;
}

json verdict(const Verdict& v) {
  json j;
  j["value"] = std::string(to_string(v.value));
  j["route"] = v.route;
  j["detail"] = v.detail;
  if (!v.criterion.empty()) j["criterion"] = v.criterion;
  if (v.trace) j["trace"] = trace(*v.trace);
  if (!v.monoid.empty()) j["monoid"] = v.monoid;
  if (v.witness_monoid && v.counterexample)
    j["counterexample"] = assignment(*v.witness_monoid, *v.counterexample);
  return j;
}

json inclusion(const std::string& v, const std::string& w,
               const InclusionResult& r) {
  json j;
  j["sub"] = v;
  j["super"] = w;
  j["value"] = std::string(to_string(r.value));
  j["detail"] = r.detail;
  j["checked"] = r.checked;
  if (r.witness_identity) {
    j["identity"] = r.witness_identity->str();
    j["evidence"] = verdict(r.witness);
  }
  return j;
}

json exclusion(const ExclusionReport& r) {
  json j;
  j["variety"] = r.target;
  j["n"] = r.n;
  json es = json::array();
  for (const auto& e : r.entries) {
    json x;
    x["variety"] = e.variety;
    x["contained"] = std::string(to_string(e.contained));
    x["excluded"] = std::string(to_string(!e.contained));
    x["route"] = e.route;
    x["detail"] = e.detail;
    es.push_back(x);
  }
  j["entries"] = es;
  j["cross_prediction"] = std::string(to_string(r.cross_prediction));
  return j;
}

json lattice(const std::vector<LatticeCheck>& checks) {
  json j = json::array();
  for (const auto& c : checks) {
    json x;
    x["claim"] = c.claim();
    x["core"] = c.core;
    x["value"] = std::string(to_string(c.result.value));
    x["passed"] = c.passed();
    x["evidence"] = c.evidence;
    j.push_back(x);
  }
  return j;
}

json replay(const std::vector<ReplayOutcome>& outcomes) {
  json j = json::array();
  for (const auto& o : outcomes) {
    json x;
    x["name"] = o.name;
    x["group"] = o.group;
    x["ok"] = o.ok;
    x["steps"] = o.steps;
    x["reason"] = o.reason;
    j.push_back(x);
  }
  return j;
}

json certified(const CertifiedTrace& c) {
  json j;
  j["claim"] = c.claim;
  j["sigma"] = c.sigma.str();
  j["trace"] = trace(c.trace);
  auto chk = c.check();
  j["verified"] = chk.ok;
  if (!chk.ok) j["failure"] = chk.reason;
  return j;
}

json rigid(const RigidNormalization& r) {
  json j;
  j["input"] = r.input.str();
  j["output"] = r.output.str();
  j["branch"] = r.branch;
  j["lhs_length"] = r.output.lhs.size();
  j["rhs_length"] = r.output.rhs.size();
  j["lhs_trace"] = certified(r.lhs);
  j["rhs_trace"] = certified(r.rhs);
  json eq = json::array();
  for (const auto& c : r.equivalence) eq.push_back(certified(c));
  j["equivalence"] = eq;
  if (r.lhs_parts) j["lhs_parts"] = *r.lhs_parts;
  if (r.rhs_parts) j["rhs_parts"] = *r.rhs_parts;
  return j;
}

json limit(const Word& w, const LimitResult& r) {
  json j;
  j["word"] = w.str();
  j["limited"] = r.word.str();
  j["deletions"] = r.deletions;
  j["sigma"] = r.sigma.str();
  j["trace"] = trace(r.trace);
  j["verified"] = verify_trace(r.trace, r.sigma).ok;
  return j;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace monoidvar::report
