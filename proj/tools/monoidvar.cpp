// Command-line front end. Exit codes: 0 definite result, 2 unknown under the
// budget, 1 error or usage.

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "monoidvar/report.hpp"

using namespace monoidvar;
using report::json;

namespace {

struct Options {
  bool json = false;
  std::size_t len_cap = 0;
  std::size_t max_states = 200000;
  std::size_t oracle_len = 0;
  std::string catalog;
  std::size_t n = 2;
};

int exit_for(Truth t) { return t == Truth::Unknown ? 2 : 0; }

void emit(const Options& o, const json& j, const std::string& text) {
  if (o.json)
    std::cout << report::dump(j);
  else
    std::cout << text;
}

CheckBudget budget_of(const Options& o) {
  CheckBudget b;
  b.len_cap = o.len_cap;
  b.max_states = o.max_states;
  b.oracle_len = o.oracle_len;
  return b;
}

const Catalog& catalog_of(const Options& o) {
  static Catalog loaded;
  if (o.catalog.empty()) return Catalog::builtin();
  loaded = Catalog::load_file(o.catalog);
  return loaded;
}

/// `u = v; s = t` on one line.
IdentitySystem rules_system(std::string text) {
  std::replace(text.begin(), text.end(), ';', '\n');
  return parse_system(text);
}

std::vector<Word> parse_words(const std::vector<std::string>& items) {
  std::vector<Word> ws;
  for (const auto& s : items) ws.push_back(Word::parse(s));
  return ws;
}

std::string verdict_text(const Verdict& v) {
  std::string s = std::string(to_string(v.value)) + " [" + v.route + "] " + v.detail;
  if (!v.monoid.empty()) s += " in " + v.monoid;
  if (!v.counterexample_text.empty()) s += " at " + v.counterexample_text;
  s += "\n";
  if (v.trace) s += v.trace->str();
  return s;
}

// --- subcommands ----------------------------------------------------------

int cmd_decompose(const Options& o, const std::string& text) {
  Word w = Word::parse(text);
  json j = report::decomposition(w);
  std::ostringstream t;
  t << "word     " << w.str() << "\n";
  t << "decomp   " << decompose(w).str() << "\n";
  t << "simple   " << j["simple"].get<std::string>() << "\n";
  t << "multiple " << j["multiple"].get<std::string>() << "\n";
  for (auto& [x, h] : j["h"].items()) {
    t << "h(" << x << ")   h1=" << h["h1"];
    if (h.contains("h2")) t << " h2=" << h["h2"];
    t << "\n";
  }
  t << "1-dividers " << j["one_dividers"].get<std::string>() << "\n";
  emit(o, j, t.str());
  return 0;
}

struct CheckArgs {
  std::string identity;
  std::string criterion;
  std::string monoid_file;
  std::vector<std::string> rees;
  std::string builtin;
  std::string variety;
};

int check_in_monoid(const Options& o, const FiniteMonoid& m,
                    const std::string& name, const Identity& id) {
  auto r = satisfies(m, id);
  json j = report::satisfaction(m, name, id, r);
  std::string t = id.str() + " in " + name + ": " +
                  j["status"].get<std::string>();
  if (r.counterexample) t += " at " + format_assignment(m, *r.counterexample);
  emit(o, j, t + "\n");
  return r.status == SatStatus::BudgetExceeded ? 2 : 0;
}

int cmd_check(const Options& o, const CheckArgs& a) {
  Identity id = Identity::parse(a.identity);
  if (!a.criterion.empty()) {
    CriterionResult r;
    if (a.criterion == "F")
      r = criterion_F(id);
    else if (a.criterion == "Q")
      r = criterion_Q(id);
    else if (a.criterion == "SL")
      r = criterion_SL(id);
    else if (a.criterion == "trivial")
      r = criterion_trivial(id);
    else if (a.criterion == "comm")
      r = criterion_commutative_aperiodic(id, o.n);
    else
      throw CLI::ValidationError("--criterion", "expected F, Q, SL, trivial or comm");
    emit(o, report::criterion(id, a.criterion, r),
         std::string(r.holds ? "true" : "false") + " (" + r.reason + ")\n");
    return 0;
  }
  if (!a.monoid_file.empty())
    return check_in_monoid(o, read_table_file(a.monoid_file), a.monoid_file, id);
  if (!a.rees.empty()) {
    auto ws = parse_words(a.rees);
    auto s = build_S(ws);
    std::string name = "S(";
    for (std::size_t i = 0; i < ws.size(); ++i)
      name += (i ? "," : "") + ws[i].str();
    return check_in_monoid(o, s.base, name + ")", id);
  }
  if (!a.builtin.empty()) {
    auto nm = builtin_monoid(a.builtin);
    return check_in_monoid(o, nm.monoid, nm.name, id);
  }
  if (!a.variety.empty()) {
    Checker checker(catalog_of(o), budget_of(o));
    auto v = checker.satisfies(a.variety, id);
    json j = report::verdict(v);
    j["identity"] = id.str();
    j["variety"] = a.variety;
    emit(o, j, verdict_text(v));
    return exit_for(v.value);
  }
  throw CLI::ValidationError("check", "one of --criterion, --monoid, --rees, --builtin, --variety is required");
}

struct DeriveArgs {
  std::string identity, from, to;
  std::string system_file, variety, rules;
  std::string limit, rigid;
  unsigned j = 0;
};

int cmd_derive(const Options& o, const DeriveArgs& a) {
  if (!a.limit.empty()) {
    Word w = Word::parse(a.limit);
    auto r = limit_word(w, static_cast<unsigned>(o.n), a.j);
    json j = report::limit(w, r);
    emit(o, j,
         w.str() + " -> " + r.word.str() + " (" + std::to_string(r.deletions) +
             " deletions, trace " +
             (j["verified"].get<bool>() ? "verified" : "FAILED") + ")\n" +
             r.trace.str());
    return j["verified"].get<bool>() ? 0 : 1;
  }
  if (!a.rigid.empty()) {
    Identity id = Identity::parse(a.rigid);
    auto r = normalize_rigid(id, static_cast<unsigned>(o.n), a.j);
    json j = report::rigid(r);
    bool ok = j["lhs_trace"]["verified"].get<bool>() &&
              j["rhs_trace"]["verified"].get<bool>();
    for (const auto& e : j["equivalence"]) ok = ok && e["verified"].get<bool>();
    emit(o, j,
         r.input.str() + "\n  -> " + r.output.str() + " [" + r.branch +
             "], traces " + (ok ? "verified" : "FAILED") + "\n");
    return ok ? 0 : 1;
  }

  Identity id;
  if (!a.identity.empty())
    id = Identity::parse(a.identity);
  else if (!a.from.empty() || !a.to.empty())
    id = Identity(Word::parse(a.from), Word::parse(a.to));
  else
    throw CLI::ValidationError("derive", "give an identity or --from/--to");

  IdentitySystem sigma;
  if (!a.system_file.empty()) {
    sigma = read_system_file(a.system_file);
  } else if (!a.rules.empty()) {
    sigma = rules_system(a.rules);
  } else if (!a.variety.empty()) {
    Checker checker(catalog_of(o), budget_of(o));
    auto b = checker.basis_of(a.variety);
    if (!b) throw std::runtime_error(a.variety + " has no basis");
    sigma = *b;
  } else {
    throw CLI::ValidationError("derive", "one of --system, --rules, --variety is required");
  }
  SearchBudget b;
  b.len_cap = o.len_cap;
  b.max_states = o.max_states;
  auto r = derive(id.lhs, id.rhs, sigma, b);
  json j = report::derive(id, r);
  std::string t = id.str() + ": " + j["outcome"].get<std::string>() + " (" +
                  std::to_string(r.states) + " states, len cap " +
                  std::to_string(r.len_cap) + ")\n";
  if (r.trace) t += r.trace->str();
  emit(o, j, t);
  return r.found() ? 0 : 2;
}

struct ReesArgs {
  std::vector<std::string> words;
  bool table = false;
  std::string variety;
  std::string write;
};

int cmd_rees(const Options& o, const ReesArgs& a) {
  auto ws = parse_words(a.words);
  auto s = build_S(ws);
  json j = report::rees(s, a.table);
  std::ostringstream t;
  t << "S(";
  for (std::size_t i = 0; i < ws.size(); ++i) t << (i ? "," : "") << ws[i].str();
  t << "): " << s.base.size() << " elements\n";
  t << "labels";
  for (const auto& l : s.base.labels()) t << " " << l;
  t << "\n";
  if (a.table) write_table(t, s.base);
  if (!a.write.empty()) {
    std::ofstream out(a.write);
    if (!out) throw std::runtime_error("cannot write " + a.write);
    write_table(out, s.base);
  }
  int code = 0;
  if (!a.variety.empty()) {
    Checker checker(catalog_of(o), budget_of(o));
    std::size_t longest = 0;
    for (const auto& w : ws) longest = std::max(longest, w.size());
    auto sat = [&](const Identity& id) { return checker.satisfies(a.variety, id).value; };
    auto m = member_check_S(ws, sat, longest + checker.budget().isoterm_extra);
    json per = json::array();
    for (std::size_t i = 0; i < ws.size(); ++i)
      per.push_back(report::isoterm(ws[i], m.per_word[i]));
    j["member"] = {{"variety", a.variety},
                   {"value", std::string(to_string(m.verdict))},
                   {"isoterms", per},
                   {"note", m.note}};
    t << "member of " << a.variety << ": " << to_string(m.verdict) << "\n";
    for (const auto& p : per) {
      t << "  " << p["word"].get<std::string>()
        << " isoterm=" << p["isoterm"].get<std::string>();
      if (p.contains("witness")) t << " (" << p["witness"].get<std::string>() << ")";
      t << "\n";
    }
    code = exit_for(m.verdict);
  }
  emit(o, j, t.str());
  return code;
}

struct FreeArgs {
  std::string system_file, variety, rules, query;
  std::size_t letters = 2, len = 4;
  bool classes = false;
};

int cmd_free(const Options& o, const FreeArgs& a) {
  IdentitySystem sigma;
  if (!a.system_file.empty()) {
    sigma = read_system_file(a.system_file);
  } else if (!a.rules.empty()) {
    sigma = rules_system(a.rules);
  } else if (!a.variety.empty()) {
    Checker checker(catalog_of(o), budget_of(o));
    auto b = checker.basis_of(a.variety);
    if (!b) throw std::runtime_error(a.variety + " has no basis");
    sigma = *b;
  } else {
    throw CLI::ValidationError("free", "one of --system, --rules, --variety is required");
  }
  auto bc = saturate(sigma, a.letters, a.len);
  json j = report::saturation(bc, a.classes);
  std::ostringstream t;
  t << bc.word_count() << " words, " << bc.class_count() << " classes ("
    << bc.passes() << " passes)\n";
  if (a.classes)
    for (const auto& c : bc.classes()) {
      t << " ";
      for (const auto& w : c) t << " " << w.str();
      t << "\n";
    }
  int code = 0;
  if (!a.query.empty()) {
    Identity id = Identity::parse(a.query);
    Truth h = oracle_holds(bc, id);
    j["query"] = {{"identity", id.str()}, {"value", std::string(to_string(h))}};
    t << id.str() << ": " << (h == Truth::True ? "holds" : "unknown") << "\n";
    code = exit_for(h);
  }
  emit(o, j, t.str());
  return code;
}

int cmd_catalog_list(const Options& o) {
  const auto& cat = catalog_of(o);
  json j = json::array();
  std::ostringstream t;
  for (const auto& name : cat.names()) {
    const auto& s = cat.get(name);
    j.push_back({{"name", name}, {"note", s.note}, {"exact", to_string(s.exact)}});
    t << name;
    if (!s.note.empty()) t << "  " << s.note;
    t << "\n";
  }
  emit(o, j, t.str());
  return 0;
}

int cmd_catalog_show(const Options& o, const std::string& v) {
  const auto& cat = catalog_of(o);
  const auto& s = cat.get(v);
  Checker checker(cat, budget_of(o));
  auto b = checker.basis_of(v);
  json j;
  j["name"] = s.name;
  j["note"] = s.note;
  j["exact"] = to_string(s.exact);
  if (b) j["basis"] = b->str();
  json gens = json::array(), mems = json::array();
  for (const auto& g : s.generators) gens.push_back(g.name);
  for (const auto& m : s.members) mems.push_back(m.name);
  j["generators"] = gens;
  j["members"] = mems;
  j["contains"] = s.contains;
  if (!s.dual_of.empty()) j["dual_of"] = s.dual_of;
  std::ostringstream t;
  t << s.name;
  if (!s.note.empty()) t << ": " << s.note;
  t << "\n";
  if (b) t << "basis\n" << b->str();
  if (!s.generators.empty()) t << "generators " << gens.dump() << "\n";
  if (!s.members.empty()) t << "members " << mems.dump() << "\n";
  if (!s.contains.empty()) t << "contains " << j["contains"].dump() << "\n";
  if (!s.dual_of.empty()) t << "dual of " << s.dual_of << "\n";
  emit(o, j, t.str());
  return 0;
}

int cmd_catalog_check(const Options& o, const std::string& v, const std::string& text) {
  CheckArgs a;
  a.identity = text;
  a.variety = v;
  return cmd_check(o, a);
}

int cmd_catalog_includes(const Options& o, const std::string& v, const std::string& w) {
  Checker checker(catalog_of(o), budget_of(o));
  auto r = checker.includes(v, w);
  std::string t = v + " <= " + w + ": " + std::string(to_string(r.value)) +
                  " (" + r.detail + ")\n";
  if (r.witness_identity)
    t += "  " + r.witness_identity->str() + ": " + verdict_text(r.witness);
  emit(o, report::inclusion(v, w, r), t);
  return exit_for(r.value);
}

int cmd_catalog_excludes(const Options& o, const std::string& v) {
  Checker checker(catalog_of(o), budget_of(o));
  auto r = checker.excludes_nine(v, o.n);
  std::ostringstream t;
  for (const auto& e : r.entries)
    t << e.variety << " <= " << v << ": " << to_string(e.contained) << " ["
      << e.route << "] " << e.detail << "\n";
  t << "all nine excluded: " << to_string(r.cross_prediction) << "\n";
  emit(o, report::exclusion(r), t.str());
  return exit_for(r.cross_prediction);
}

int cmd_catalog_contains(const Options& o, const std::string& which,
                         const std::string& v, std::size_t k) {
  Checker checker(catalog_of(o), budget_of(o));
  Verdict r;
  if (which == "F")
    r = checker.contains_F(v, o.n);
  else if (which == "Q")
    r = checker.contains_Q(v, o.n);
  else if (which == "P")
    r = checker.contains_P(v, k, o.n);
  else
    throw CLI::ValidationError("contains", "expected F, Q or P");
  json j = report::verdict(r);
  j["variety"] = v;
  j["contains"] = which == "P" ? "P" + std::to_string(k + 1) : which;
  emit(o, j, verdict_text(r));
  return exit_for(r.value);
}

int cmd_lattice(const Options& o) {
  Checker checker(catalog_of(o), budget_of(o));
  auto checks = verify_lattice(checker);
  std::ostringstream t;
  int code = 0;
  for (const auto& c : checks) {
    t << (c.passed() ? "PASS " : "FAIL ") << c.claim() << "  ["
      << to_string(c.result.value) << "] " << c.evidence << "\n";
    if (!c.passed()) code = c.result.value == Truth::Unknown ? std::max(code, 2) : 1;
  }
  emit(o, report::lattice(checks), t.str());
  return code;
}

int cmd_replay(const Options& o, const std::string& group) {
  auto outcomes = replay_all(group == "all" ? std::string{} : group);
  std::ostringstream t;
  int code = outcomes.empty() ? 1 : 0;
  for (const auto& r : outcomes) {
    t << (r.ok ? "PASS " : "FAIL ") << r.group << "/" << r.name << " ("
      << r.steps << " steps)";
    if (!r.ok) t << ": " << r.reason;
    t << "\n";
    if (!r.ok) code = 1;
  }
  emit(o, report::replay(outcomes), t.str());
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Equational reasoning workbench for monoid varieties"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_flag("--json", o.json, "JSON report on stdout");
  app.add_option("--len-cap", o.len_cap, "word length cap for derivations (0: longer side + 2)");
  app.add_option("--max-states", o.max_states, "state budget for derivations");
  app.add_option("--oracle-len", o.oracle_len, "length bound for the congruence oracle (0: off)");
  app.add_option("--catalog", o.catalog, "catalog file (default: builtin)");
  app.add_option("--n", o.n, "exponent n of x^n = x^(n+1)")->check(CLI::PositiveNumber);

  std::function<int()> run;

  std::string word;
  auto* dec = app.add_subcommand("decompose", "dividers, blocks and h-table of a word");
  dec->add_option("word", word)->required();
  dec->callback([&] { run = [&] { return cmd_decompose(o, word); }; });

  CheckArgs ca;
  auto* chk = app.add_subcommand("check", "satisfaction of an identity");
  chk->add_option("identity", ca.identity, "\"u = v\"")->required();
  chk->add_option("--criterion", ca.criterion, "F, Q, SL, trivial or comm (uses --n)");
  chk->add_option("--monoid", ca.monoid_file, "monoid table file");
  chk->add_option("--rees", ca.rees, "words W of S(W)");
  chk->add_option("--builtin", ca.builtin, "builtin monoid name");
  chk->add_option("--variety", ca.variety, "catalog variety");
  chk->callback([&] { run = [&] { return cmd_check(o, ca); }; });

  DeriveArgs da;
  auto* der = app.add_subcommand("derive", "bounded derivation search");
  der->add_option("identity", da.identity, "\"u = v\"");
  der->add_option("--from", da.from);
  der->add_option("--to", da.to);
  der->add_option("--system", da.system_file, "identity system file");
  der->add_option("--variety", da.variety, "use a catalog variety's basis");
  der->add_option("--rules", da.rules, "identities separated by ';'");
  der->add_option("--limit", da.limit, "limit a word with the deletion schema (uses --n)");
  der->add_option("--rigid", da.rigid, "normalize a rigid identity (uses --n)");
  der->add_option("--j", da.j, "index j of the kappa identity");
  der->callback([&] { run = [&] { return cmd_derive(o, da); }; });

  ReesArgs ra;
  auto* rs = app.add_subcommand("rees", "build the Rees quotient S(W)");
  rs->add_option("words", ra.words)->required();
  rs->add_flag("--table", ra.table, "include the multiplication table");
  rs->add_option("--variety", ra.variety, "check S(W) membership via isoterms");
  rs->add_option("--write", ra.write, "write the table file");
  rs->callback([&] { run = [&] { return cmd_rees(o, ra); }; });

  FreeArgs fa;
  auto* fr = app.add_subcommand("free", "bounded congruence closure");
  fr->add_option("--system", fa.system_file);
  fr->add_option("--variety", fa.variety);
  fr->add_option("--rules", fa.rules);
  fr->add_option("--letters", fa.letters)->check(CLI::PositiveNumber);
  fr->add_option("--len", fa.len);
  fr->add_option("--query", fa.query, "\"u = v\"");
  fr->add_flag("--classes", fa.classes);
  fr->callback([&] { run = [&] { return cmd_free(o, fa); }; });

  auto* cat = app.add_subcommand("catalog", "varieties of the catalog");
  cat->require_subcommand(1);
  auto* cl = cat->add_subcommand("list");
  cl->callback([&] { run = [&] { return cmd_catalog_list(o); }; });
  std::string cv, cw, cid;
  auto* cs = cat->add_subcommand("show");
  cs->add_option("variety", cv)->required();
  cs->callback([&] { run = [&] { return cmd_catalog_show(o, cv); }; });
  auto* cc = cat->add_subcommand("check");
  cc->add_option("variety", cv)->required();
  cc->add_option("identity", cid)->required();
  cc->callback([&] { run = [&] { return cmd_catalog_check(o, cv, cid); }; });
  auto* ci = cat->add_subcommand("includes", "V <= W");
  ci->add_option("V", cv)->required();
  ci->add_option("W", cw)->required();
  ci->callback([&] { run = [&] { return cmd_catalog_includes(o, cv, cw); }; });
  auto* ce = cat->add_subcommand("excludes-nine");
  ce->add_option("variety", cv)->required();
  ce->callback([&] { run = [&] { return cmd_catalog_excludes(o, cv); }; });
  std::string which;
  std::size_t k = 1;
  auto* cn = cat->add_subcommand("contains", "F <= V, Q <= V or P_(k+1) <= V");
  cn->add_option("which", which)->required()->check(CLI::IsMember({"F", "Q", "P"}));
  cn->add_option("variety", cv)->required();
  cn->add_option("--k", k)->check(CLI::PositiveNumber);
  cn->callback([&] { run = [&] { return cmd_catalog_contains(o, which, cv, k); }; });

  auto* lat = app.add_subcommand("lattice", "lattice checks");
  std::string lat_what = "fig1";
  auto* lv = lat->add_subcommand("verify");
  lv->add_option("which", lat_what);
  lat->require_subcommand(1);
  lv->callback([&] { run = [&] { return cmd_lattice(o); }; });

  std::string group = "all";
  auto* rp = app.add_subcommand("replay", "replay the stored derivations");
  rp->add_option("group", group, "group name or all");
  rp->callback([&] { run = [&] { return cmd_replay(o, group); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }
  try {
    return run ? run() : 1;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage: " << e.what() << "\n" << app.help();
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
