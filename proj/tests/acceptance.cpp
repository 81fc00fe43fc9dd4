// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "monoidvar/lattice.hpp"
#include "monoidvar/report.hpp"
#include "oracles.hpp"
#include "rigid_gen.hpp"

using namespace monoidvar;
using oracle::Id;
using oracle::W;

namespace {

struct Outcome {
  bool ok = false;
  std::string detail;
};

std::vector<Identity> xy_candidates(std::size_t max_len) {
  std::set<std::pair<std::string, std::string>> seen;
  std::vector<Identity> out;
  auto words = oracle::all_words("xy", max_len);
  for (const auto& u : words)
    for (const auto& v : words) {
      auto c = canonical_renaming(Id(u, v));
      if (seen.emplace(c.lhs.raw(), c.rhs.raw()).second) out.push_back(Id(u, v));
    }
  return out;
}

/// Criterion true => derivation under the basis and a shared oracle class;
/// oracle merge => criterion true.
Outcome criterion_agreement(const std::string& name,
                            bool (*crit)(const Identity&)) {
  const auto basis = *Checker(Catalog::builtin()).basis_of(name);
  auto bc = saturate(basis, 2, 8);
  Deriver d(basis);
  SearchBudget b;
  b.len_cap = 10;
  b.max_states = 1'000'000;
  std::size_t checked = 0, holding = 0, bad = 0;
  std::string first_bad;
  for (const auto& id : xy_candidates(5)) {
    ++checked;
    bool holds = crit(id);
    bool merged = bc.same_class(id.lhs, id.rhs);
    bool ok = true;
    if (holds) {
      ++holding;
      auto r = d.derive(id.lhs, id.rhs, b);
      ok = r.found() && verify_trace(*r.trace, basis).ok && merged;
    } else {
      ok = !merged;
    }
    if (!ok && bad++ == 0) first_bad = id.str();
  }
  std::ostringstream s;
  s << checked << " identities, " << holding << " hold, " << bad << " disagreements";
  if (bad) s << " (first: " << first_bad << ")";
  return {bad == 0, s.str()};
}

Outcome paper_facts() {
  std::vector<std::string> failed;
  std::size_t total = 0;
  auto expect = [&](bool cond, const std::string& what) {
    ++total;
    if (!cond) failed.push_back(what);
  };
  expect(criterion_F(Id("xyzxy", "yxzxy")).holds, "F satisfies xyzxy = yxzxy");
  expect(!criterion_F(family("xyxn", 2)).holds, "F violates xyx^2 = x^2yx^2");
  expect(criterion_Q(Id("xyx^2", "x^2yx^2")).holds, "Q satisfies xyx^2 = x^2yx^2");
  expect(!criterion_Q(Id("xyxztx", "xyxzxtx")).holds, "Q violates xyxztx = xyxzxtx");
  expect(!criterion_Q(family("insert", 1)).holds, "Q violates xyzx = xyxzx");
  expect(!criterion_Q(family("insert", 2)).holds, "Q violates x^2yzx^2 = x^2yxzx^2");
  auto s = build_S({W("xyx")});
  expect(s.base.size() == 7, "S(xyx) has 7 elements");
  expect(satisfies(s.base, Id("x^2", "x^3")).holds(), "S(xyx) satisfies x^2 = x^3");
  expect(satisfies(s.base, Id("xy", "yx")).fails(), "S(xyx) violates xy = yx");
  auto f_sat = [](const Identity& id) { return truth_of(criterion_F(id).holds); };
  expect(is_isoterm(W("xyx"), f_sat, 6).verdict == Truth::False, "xyx is no isoterm for F");
  expect(isoterm_linear_rule(W("xyx")).verdict == Truth::False, "linear rule on xyx");
  std::string d = std::to_string(total) + " facts";
  for (const auto& f : failed) d += "; failed: " + f;
  return {failed.empty(), d};
}

Outcome replay_library_passes() {
  auto outcomes = replay_all();
  std::set<std::string> groups;
  std::size_t bad = 0;
  std::string first;
  for (const auto& o : outcomes) {
    groups.insert(o.group);
    if (!o.ok && bad++ == 0) first = o.name + ": " + o.reason;
  }
  bool all_groups = true;
  for (const char* g : {"observation", "f-lemma", "q-lemma", "deletion", "kappa", "alpha",
                        "delta", "variety"})
    all_groups = all_groups && groups.contains(g);
  std::ostringstream s;
  s << outcomes.size() << " chains in " << groups.size() << " groups, " << bad << " failed";
  if (bad) s << " (first: " << first << ")";
  if (!all_groups) s << "; a group is missing";
  return {bad == 0 && all_groups && !outcomes.empty(), s.str()};
}

Outcome lattice_bottom() {
  Checker c(Catalog::builtin());
  std::size_t core = 0, bad = 0;
  std::string first;
  for (const auto& lc : verify_lattice(c)) {
    if (!lc.core) continue;
    ++core;
    if (!lc.passed() && bad++ == 0) first = lc.claim() + ": " + lc.evidence;
  }
  std::ostringstream s;
  s << core << " claims, " << bad << " failed";
  if (bad) s << " (first: " << first << ")";
  return {bad == 0 && core > 0, s.str()};
}

Outcome rees_structure() {
  oracle::Rng rng(2024);
  std::size_t bad = 0;
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<std::string> ws;
    std::size_t n = 1 + rng() % 3;
    for (std::size_t i = 0; i < n; ++i) ws.push_back(oracle::random_word(rng, "xyzt", 6, 1));
    std::vector<Word> input;
    for (const auto& w : ws) input.push_back(W(w));
    auto s = build_S(input);
    auto f = oracle::factor_set(ws);
    bool ok = validate(s.base).ok && is_aperiodic(s.base) && idempotents_commute(s.base) &&
              s.base.size() == f.size() + 1;
    for (Elem a = 0; ok && a < s.base.size(); ++a)
      for (Elem b = 0; ok && b < s.base.size(); ++b) {
        Elem p = s.base.mul(a, b);
        if (a == s.zero || b == s.zero) {
          ok = p == s.zero;
          continue;
        }
        std::string uv = s.elem_words[a].plain() + s.elem_words[b].plain();
        ok = f.contains(uv) ? p != s.zero && s.elem_words[p].plain() == uv : p == s.zero;
      }
    if (!ok) ++bad;
  }
  return {bad == 0, "50 random W, " + std::to_string(bad) + " failed"};
}

Outcome nine_exclusions() {
  Checker c(Catalog::builtin());
  auto q = c.excludes_nine("Q", 2);
  std::size_t excluded = 0;
  for (const auto& e : q.entries)
    if (e.contained == Truth::False) ++excluded;
  auto p = c.excludes_nine("P", 2);
  bool p_in = false;
  for (const auto& e : p.entries)
    if (e.variety == "P") p_in = e.contained == Truth::True;
  std::ostringstream s;
  s << "Q excludes " << excluded << "/9; P contains itself: " << (p_in ? "yes" : "no");
  return {excluded == 9 && q.cross_prediction == Truth::True && p_in, s.str()};
}

Outcome rigid_normalization() {
  oracle::Rng rng(4242);
  std::size_t failures = 0, over = 0;
  std::map<std::string, std::size_t> branches;
  auto verified = [](const RigidNormalization& r) {
    bool ok = r.lhs.check().ok && r.rhs.check().ok;
    for (const auto& c : r.equivalence) ok = ok && c.check().ok;
    return ok;
  };
  auto parts_ok = [](const RigidNormalization& r, std::size_t n) {
    if (!r.lhs_parts) return true;
    for (const auto& p : {*r.lhs_parts, *r.rhs_parts})
      if (p[0] > n || p[1] > n * n - 1 || p[2] > n + 1 || p[3] > n * (n + 1)) return false;
    return true;
  };
  for (int trial = 0; trial < 100; ++trial) {
    unsigned n = 1 + trial % 2;
    unsigned j = rng() % (n + 1);
    auto s = oracle::random_rigid(rng, n, 12);
    try {
      auto r = normalize_rigid(s.identity(), n, j);
      ++branches[r.branch];
      if (!verified(r)) ++failures;
      if (r.output.lhs.size() > 50 * n * n || r.output.rhs.size() > 50 * n * n ||
          !parts_ok(r, n))
        ++over;
    } catch (const std::exception&) {
      ++failures;
    }
  }
  // At n = 1 a (n+1)-free input with positive exponents is trivial, so the
  // collapse and its per-part accounting are exercised directly.
  for (std::size_t m = 3; m <= 12; ++m) {
    RigidShape s;
    s.x = named('x');
    for (std::size_t i = 1; i <= m; ++i) s.ts.push_back(band(i));
    s.e.assign(m + 1, 1);
    s.f.assign(m + 1, 1);
    auto r = kappa_collapse(s.identity(), 1, m % 2);
    ++branches["collapse@n=1"];
    if (!verified(r)) ++failures;
    if (!parts_ok(r, 1) || r.output.lhs.size() > 6) ++over;
  }
  std::ostringstream s;
  s << failures << " trace failures, " << over << " bound violations;";
  for (const auto& [b, k] : branches) s << " " << b << "=" << k;
  return {failures == 0 && over == 0, s.str()};
}

Outcome determinism() {
  auto run = [] {
    std::string out;
    Checker c(Catalog::builtin());
    const auto f = *c.basis_of("F");
    const auto q = *c.basis_of("Q");
    SearchBudget b;
    b.len_cap = 10;
    for (const auto& id : {Id("x^2yzx^2", "x^2yxzx^2"), Id("xyx", "xyx^3"),
                           Id("xyzxy", "yxzxy"), Id("xyxztx", "xyxzxtx")}) {
      out += report::dump(report::criterion(id, "F", criterion_F(id)));
      out += report::dump(report::criterion(id, "Q", criterion_Q(id)));
      out += report::dump(report::derive(id, derive(id.lhs, id.rhs, q, b)));
      out += report::dump(report::derive(id, derive(id.lhs, id.rhs, f, b)));
    }
    out += report::dump(report::saturation(saturate(q, 2, 6), true));
    out += report::dump(report::saturation(saturate(f, 2, 6), true));
    return out;
  };
  std::string a = run(), b = run();
  return {a == b, std::to_string(a.size()) + " bytes per run"};
}

}  // namespace

int main() {
  struct Criterion {
    int number;
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "criterion/oracle agreement (F)",
       [] { return criterion_agreement("F", word_problem_F); }},
      {2, "criterion/oracle agreement (Q)",
       [] { return criterion_agreement("Q", word_problem_Q); }},
      {3, "regression facts", paper_facts},
      {4, "derivation replay library", replay_library_passes},
      {5, "bottom of the lattice", lattice_bottom},
      {6, "S(W) structure", rees_structure},
      {7, "exclusion of the nine varieties", nine_exclusions},
      {8, "rigid normalization", rigid_normalization},
      {9, "determinism", determinism},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!o.ok) ++failed;
    std::cout << (o.ok ? "PASS " : "FAIL ") << c.number << " " << c.name << ": " << o.detail
              << " [" << std::fixed << std::setprecision(1) << secs << "s]" << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
