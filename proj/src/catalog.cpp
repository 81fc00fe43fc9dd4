#include "monoidvar/catalog.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace monoidvar {

std::string to_string(ExactProcedure p) {
  switch (p) {
    case ExactProcedure::None: return "none";
    case ExactProcedure::F: return "F";
    case ExactProcedure::Q: return "Q";
    case ExactProcedure::CommutativeAperiodic: return "comm";
    case ExactProcedure::Trivial: return "trivial";
    case ExactProcedure::SL: return "SL";
  }
  return "none";
}

const std::string& builtin_catalog_text() {
  static const std::string text = R"(# Builtin varieties of aperiodic monoids with central idempotents.
# Keys: basis, exact, generators, members, contains, dual-of, alpha-shape, note.
# Items in basis/generators/members are separated by ';'.

variety T
  note: trivial monoids
  basis: x = 1
  exact: trivial
  generators: builtin trivial

variety SL
  note: semilattice monoids
  basis: x = x^2; xy = yx
  exact: SL
  generators: builtin semilattice
  contains: T

variety C
  basis: x^2 = x^3; xy = yx
  exact: comm 2
  members: builtin mono2
  contains: SL

variety D
  basis: x^2 = x^3; x^2y = xyx; xyx = yx^2
  members: rees xy
  contains: C

variety E
  basis: x^2 = x^3; x^2y = xyx; x^2y^2 = y^2x^2
  members: builtin e-witness; rees xy
  contains: D

variety dual-E
  dual-of: E

variety F
  basis: xyx = xyx^2; x^2y = x^2yx; x^2y^2 = y^2x^2; xyzxy = yxzxy
  exact: F
  contains: E

variety dual-F
  dual-of: F

variety Q
  basis: xyx = xyx^2; x^2y^2 = y^2x^2; xyx^2 = x^2yx^2
  exact: Q
  contains: E; dual-E

variety P
  basis: xyx = xyx^2; x^2y^2 = y^2x^2; xyzxy = yxzxy; family beta[1..1]; family gammap[1..1]
  contains: F; Q; H
  alpha-shape: any

variety dual-P
  dual-of: P

variety P1
  basis: xyx = xyx^2; x^2y^2 = y^2x^2; xyzxy = yxzxy; family beta[1..1]; family gammap[1..1]; family alpha[1..1]
  contains: F; Q
  alpha-shape: 1

variety P2
  basis: xyx = xyx^2; x^2y^2 = y^2x^2; xyzxy = yxzxy; family beta[1..1]; family gammap[1..1]; family alpha[2..2]
  contains: F; Q; H
  alpha-shape: 2

variety P3
  basis: xyx = xyx^2; x^2y^2 = y^2x^2; xyzxy = yxzxy; family beta[1..1]; family gammap[1..1]; family alpha[3..3]
  contains: F; Q; H
  alpha-shape: 3

variety P4
  basis: xyx = xyx^2; x^2y^2 = y^2x^2; xyzxy = yxzxy; family beta[1..1]; family gammap[1..1]; family alpha[4..4]
  contains: F; Q; H
  alpha-shape: 4

variety H
  basis: xyx = xyx^2; x^2y^2 = y^2x^2; xyzxy = yxzxy; family beta[1..1]; family gammap[1..1]; xyxztx = xyxzxtx
  contains: F; dual-E

variety K
  basis: xyx = xyx^2; x^2y = x^2yx; x^2y^2 = y^2x^2
  contains: F

variety dual-K
  dual-of: K

variety J
  note: permutation family instantiated for n <= 3
  basis: xyx = xyx^2; x^2y^2 = y^2x^2; xyzxy = yxzxy; xyxztx = xyxzxtx; family jperm[1..3]
  contains: F

variety dual-J
  dual-of: J

variety O
  basis: xtyzxy = xtyzyx; xtxyzy = xtyxzy

variety L
  basis: xtyzxy = xtyzyx; xtxyzy = xtyxzy; x^2 = x^3; x^2y = yx^2; family alpha[1..1]
  members: rees xyx

variety M
  generators: rees xzxyty

variety N
  generators: rees xyzxty, xtyzxy

variety R
  basis: x^2y^2 = y^2x^2; xzxyxty = xzyxty

variety A2
  basis: family power[2..2]; family powcomm[2..2]
  exact: none
  members: builtin mono2; rees xy
  contains: P; dual-P

variety A3
  basis: family power[3..3]; family powcomm[3..3]
  members: builtin mono3; rees xy
  contains: A2

variety A4
  basis: family power[4..4]; family powcomm[4..4]
  members: builtin mono4; rees xy
  contains: A3
)";
  return text;
}

namespace {

std::string trim(std::string s) {
  auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return {};
  auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) {
    cur = trim(cur);
    if (!cur.empty()) out.push_back(cur);
  }
  return out;
}

std::string words_name(const std::vector<Word>& ws) {
  std::string s = "S(";
  for (std::size_t i = 0; i < ws.size(); ++i) {
    if (i) s += ", ";
    s += ws[i].str();
  }
  return s + ")";
}

NamedMonoid parse_monoid_ref(const std::string& item, const std::string& base_dir) {
  auto sp = item.find(' ');
  std::string kind = item.substr(0, sp);
  std::string arg = sp == std::string::npos ? "" : trim(item.substr(sp + 1));
  if (kind == "rees") {
    std::vector<Word> ws;
    for (const auto& w : split(arg, ',')) ws.push_back(Word::parse(w));
    if (ws.empty()) throw PreconditionError("rees: no words given");
    return {words_name(ws), build_S(ws).base, ws};
  }
  if (kind == "builtin") return builtin_monoid(arg);
  if (kind == "file") {
    std::filesystem::path p(arg);
    if (p.is_relative()) p = std::filesystem::path(base_dir) / p;
    return {p.filename().string(), read_table_file(p.string()), {}};
  }
  throw PreconditionError("unknown monoid reference '" + item + "'");
}

}  // namespace

Catalog Catalog::parse(const std::string& text, const std::string& base_dir) {
  Catalog cat;
  std::optional<VarietySpec> cur;
  std::string basis_text;
  auto flush = [&] {
    if (!cur) return;
    if (!basis_text.empty()) {
      cur->basis = parse_system(basis_text);
      cur->has_basis = true;
    }
    cat.add(std::move(*cur));
    cur.reset();
    basis_text.clear();
  };
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    auto where = [&] { return "catalog line " + std::to_string(lineno) + ": "; };
    if (line.rfind("variety ", 0) == 0) {
      flush();
      cur = VarietySpec{};
      cur->name = trim(line.substr(8));
      if (cur->name.empty()) throw PreconditionError(where() + "missing name");
      continue;
    }
    if (!cur) throw PreconditionError(where() + "expected 'variety <name>'");
    auto colon = line.find(':');
    if (colon == std::string::npos)
      throw PreconditionError(where() + "expected 'key: value'");
    std::string key = trim(line.substr(0, colon));
    std::string val = trim(line.substr(colon + 1));
    try {
      if (key == "basis" || key == "families") {
        for (const auto& item : split(val, ';'))
          basis_text += (key == "families" ? "family " : "") + item + "\n";
      } else if (key == "note") {
        cur->note = val;
      } else if (key == "exact") {
        auto parts = split(val, ' ');
        const std::string kind = parts.empty() ? "" : parts[0];
        if (kind == "F") cur->exact = ExactProcedure::F;
        else if (kind == "Q") cur->exact = ExactProcedure::Q;
        else if (kind == "SL") cur->exact = ExactProcedure::SL;
        else if (kind == "trivial") cur->exact = ExactProcedure::Trivial;
        else if (kind == "none") cur->exact = ExactProcedure::None;
        else if (kind == "comm" && parts.size() == 2) {
          cur->exact = ExactProcedure::CommutativeAperiodic;
          cur->exact_n = std::stoul(parts[1]);
          if (cur->exact_n == 0) throw PreconditionError("comm needs n >= 1");
        } else {
          throw PreconditionError("unknown exact procedure '" + val + "'");
        }
      } else if (key == "generators") {
        for (const auto& item : split(val, ';'))
          cur->generators.push_back(parse_monoid_ref(item, base_dir));
      } else if (key == "members") {
        for (const auto& item : split(val, ';'))
          cur->members.push_back(parse_monoid_ref(item, base_dir));
      } else if (key == "contains") {
        for (const auto& item : split(val, ';')) cur->contains.push_back(item);
      } else if (key == "dual-of") {
        cur->dual_of = val;
      } else if (key == "alpha-shape") {
        cur->alpha_shape = val == "any" ? 0u : static_cast<unsigned>(std::stoul(val));
      } else {
        throw PreconditionError("unknown key '" + key + "'");
      }
    } catch (const PreconditionError& e) {
      throw PreconditionError(where() + e.what());
    } catch (const ParseError& e) {
      throw PreconditionError(where() + e.what());
    } catch (const std::logic_error& e) {
      throw PreconditionError(where() + "bad value '" + val + "'");
    }
  }
  flush();
  for (const auto& name : cat.order_) {
    const auto& s = cat.get(name);
    if (!s.dual_of.empty() && !cat.has(s.dual_of))
      throw PreconditionError("variety " + name + ": dual-of unknown variety " +
                              s.dual_of);
    if (!s.dual_of.empty() && (s.has_basis || !s.generators.empty()))
      throw PreconditionError("variety " + name +
                              ": dual-of entries take everything from the base");
    for (const auto& c : s.contains)
      if (!cat.has(c))
        throw PreconditionError("variety " + name + ": contains unknown " + c);
  }
  return cat;
}

Catalog Catalog::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open catalog " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  auto dir = std::filesystem::path(path).parent_path().string();
  return parse(ss.str(), dir.empty() ? "." : dir);
}

const Catalog& Catalog::builtin() {
  static const Catalog cat = parse(builtin_catalog_text());
  return cat;
}

const VarietySpec& Catalog::get(const std::string& name) const {
  auto it = specs_.find(name);
  if (it == specs_.end()) throw PreconditionError("unknown variety '" + name + "'");
  return it->second;
}

std::vector<std::string> Catalog::names() const { return order_; }

void Catalog::add(VarietySpec spec) {
  if (specs_.contains(spec.name))
    throw PreconditionError("duplicate variety " + spec.name);
  order_.push_back(spec.name);
  specs_.emplace(spec.name, std::move(spec));
}

const std::vector<std::string>& nine_varieties() {
  static const std::vector<std::string> v = {"J", "dual-J", "K", "dual-K", "L",
                                             "M", "N",      "P", "dual-P"};
  return v;
}

// --- alpha shape ------------------------------------------------------------

namespace {

struct AlphaShape {
  Letter a, b;
  std::vector<Letter> ts;
};

std::optional<AlphaShape> alpha_shape(const Word& u) {
  if (u.size() < 4 || u[0] == u[1]) return std::nullopt;
  AlphaShape s{u[0], u[1], {}};
  LetterSet seen{s.a, s.b};
  std::size_t i = 2;
  while (i < u.size()) {
    Letter t = u[i];
    if (seen.contains(t)) return std::nullopt;
    seen.insert(t);
    s.ts.push_back(t);
    Letter e = s.ts.size() % 2 == 1 ? s.a : s.b;
    std::size_t k = 0;
    for (++i; i < u.size() && u[i] == e; ++i) ++k;
    if (k == 0) return std::nullopt;
  }
  if (s.ts.size() < 2) return std::nullopt;
  return s;
}

}  // namespace

std::optional<std::size_t> alpha_shape_length(const Word& u) {
  auto s = alpha_shape(u);
  if (!s) return std::nullopt;
  return s->ts.size();
}

bool same_alpha_shape(const Word& u, const Word& v) {
  auto su = alpha_shape(u), sv = alpha_shape(v);
  return su && sv && su->a == sv->a && su->b == sv->b && su->ts == sv->ts;
}

// --- checker ----------------------------------------------------------------

Checker::Checker(const Catalog& catalog, CheckBudget budget)
    : catalog_(catalog), budget_(budget) {}

std::optional<IdentitySystem> Checker::basis_of(const std::string& v) const {
  const auto& spec = catalog_.get(v);
  if (!spec.dual_of.empty()) {
    auto b = basis_of(spec.dual_of);
    if (!b) return std::nullopt;
    return dual_system(*b);
  }
  if (!spec.has_basis) return std::nullopt;
  return spec.basis;
}

Deriver& Checker::deriver_for(const std::string& v) {
  auto it = derivers_.find(v);
  if (it != derivers_.end()) return *it->second;
  auto b = basis_of(v);
  if (!b) throw PreconditionError("variety " + v + " has no basis");
  SearchBudget sb;
  sb.len_cap = budget_.len_cap;
  sb.max_states = budget_.max_states;
  auto d = std::make_unique<Deriver>(*b, sb);
  return *derivers_.emplace(v, std::move(d)).first->second;
}

Truth Checker::member_verified(const std::string& v, const NamedMonoid& m) {
  auto key = std::make_pair(v, m.name);
  if (auto it = member_memo_.find(key); it != member_memo_.end()) return it->second;
  auto b = basis_of(v);
  Truth t = Truth::Unknown;
  if (b) {
    t = Truth::True;
    for (const auto& id : b->expand()) {
      auto r = monoidvar::satisfies(m.monoid, id, budget_.assignment_cap);
      if (r.fails()) {
        t = Truth::False;
        break;
      }
      if (r.status == SatStatus::BudgetExceeded) t = Truth::Unknown;
    }
  }
  member_memo_[key] = t;
  return t;
}

namespace {

std::string id_key(const Identity& id) { return id.lhs.str() + " = " + id.rhs.str(); }

Verdict from_criterion(const CriterionResult& c, const std::string& which,
                       const std::string& tag) {
  Verdict v;
  v.criterion = tag;
  v.value = truth_of(c.holds);
  v.route = "criterion";
  v.detail = c.reason.starts_with(which) ? c.reason : which + ": " + c.reason;
  return v;
}

Verdict dualize(Verdict v) {
  if (v.trace) v.trace = dual_trace(*v.trace);
  if (!v.monoid.empty()) v.monoid = "dual of " + v.monoid;
  if (v.witness_monoid) v.witness_monoid = dual_monoid(*v.witness_monoid);
  if (!v.criterion.empty()) v.dualized = !v.dualized;
  if (!v.detail.empty()) v.detail = "dual: " + v.detail;
  return v;
}

Identity rename_for_oracle(const Identity& id) {
  std::vector<Letter> order;
  LetterSet seen;
  for (const Word* w : {&id.lhs, &id.rhs})
    for (Letter a : w->letters())
      if (!seen.contains(a)) {
        seen.insert(a);
        order.push_back(a);
      }
  auto alpha = oracle_alphabet(order.size());
  Substitution xi;
  for (std::size_t i = 0; i < order.size(); ++i) xi.set(order[i], Word{alpha[i]});
  return Identity(xi.apply(id.lhs), xi.apply(id.rhs), id.name);
}

}  // namespace

Verdict Checker::satisfies(const std::string& variety, const Identity& id) {
  return satisfies_impl(variety, id, 0);
}

Verdict Checker::satisfies_impl(const std::string& v, const Identity& id,
                                int depth) {
  const auto key = std::make_pair(v, id_key(id));
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  if (std::find(in_progress_.begin(), in_progress_.end(), key) !=
      in_progress_.end()) {
    Verdict cut;
    cut.route = "cycle";
    cut.detail = "recursive query cut";
    return cut;
  }
  const auto& spec = catalog_.get(v);
  Verdict out;

  if (id.trivial()) {
    out.value = Truth::True;
    out.route = "trivial";
    out.detail = "both sides coincide";
    out.trace = DerivationTrace{id.lhs, {}};
    memo_[key] = out;
    return out;
  }

  in_progress_.push_back(key);
  auto finish = [&](Verdict r) {
    in_progress_.pop_back();
    memo_[key] = r;
    return r;
  };

  if (!spec.dual_of.empty())
    return finish(dualize(satisfies_impl(spec.dual_of, dual_identity(id), depth + 1)));

  switch (spec.exact) {
    case ExactProcedure::F: return finish(from_criterion(criterion_F(id), "F", "F"));
    case ExactProcedure::Q: return finish(from_criterion(criterion_Q(id), "Q", "Q"));
    case ExactProcedure::SL:
      return finish(from_criterion(criterion_SL(id), "SL", "SL"));
    case ExactProcedure::Trivial:
      return finish(from_criterion(criterion_trivial(id), "trivial", "trivial"));
    case ExactProcedure::CommutativeAperiodic:
      return finish(from_criterion(
          criterion_commutative_aperiodic(id, spec.exact_n),
          "commutative n=" + std::to_string(spec.exact_n),
          "comm:" + std::to_string(spec.exact_n)));
    case ExactProcedure::None: break;
  }

  if (!spec.generators.empty()) {
    bool budget_hit = false;
    std::size_t leaves = 0;
    for (const auto& g : spec.generators) {
      auto r = monoidvar::satisfies(g.monoid, id, budget_.assignment_cap);
      leaves += r.leaves;
      if (r.fails()) {
        out.value = Truth::False;
        out.route = "generators";
        out.monoid = g.name;
        out.witness_monoid = g.monoid;
        out.counterexample = r.counterexample;
        out.counterexample_text = format_assignment(g.monoid, *r.counterexample);
        out.detail = g.name + " violates the identity";
        return finish(out);
      }
      if (r.status == SatStatus::BudgetExceeded) budget_hit = true;
    }
    if (!budget_hit) {
      out.value = Truth::True;
      out.route = "generators";
      out.detail = "holds in every generator (" + std::to_string(leaves) +
                   " assignments evaluated)";
      return finish(out);
    }
    out.detail = "generator check exceeds the assignment cap";
  }

  for (const auto& m : spec.members) {
    auto r = monoidvar::satisfies(m.monoid, id, budget_.assignment_cap);
    if (!r.fails()) continue;
    if (member_verified(v, m) != Truth::True) continue;
    out.value = Truth::False;
    out.route = "member";
    out.monoid = m.name;
    out.witness_monoid = m.monoid;
    out.counterexample = r.counterexample;
    out.counterexample_text = format_assignment(m.monoid, *r.counterexample);
    out.detail = m.name + " lies in " + v + " and violates the identity";
    return finish(out);
  }

  if (spec.alpha_shape) {
    unsigned s = *spec.alpha_shape;
    for (int side = 0; side < 2; ++side) {
      const Word& u = side == 0 ? id.lhs : id.rhs;
      const Word& w = side == 0 ? id.rhs : id.lhs;
      auto r = alpha_shape_length(u);
      if (r && (s == 0 || *r <= s) && !same_alpha_shape(u, w)) {
        out.value = Truth::False;
        out.route = "alpha-shape";
        out.detail = u.str() + " has the xy-prefixed shape with " +
                     std::to_string(*r) + " t-letters; " + w.str() +
                     " does not keep it";
        return finish(out);
      }
    }
  }

  for (const auto& sub : spec.contains) {
    auto sv = satisfies_impl(sub, id, depth + 1);
    if (sv.value != Truth::False) continue;
    auto inc = includes(sub, v);
    if (inc.value != Truth::True) continue;
    out = sv;
    out.route = "subvariety";
    out.detail = sub + " <= " + v + " and " + sub + " violates it (" +
                 sv.route + ": " + sv.detail + ")";
    return finish(out);
  }

  if (auto b = basis_of(v)) {
    auto& d = deriver_for(v);
    auto r = d.derive(id.lhs, id.rhs);
    if (r.found()) {
      out.value = Truth::True;
      out.route = "derive";
      out.trace = r.trace;
      out.detail = "derived in " + std::to_string(r.trace->steps.size()) +
                   " steps (" + std::to_string(r.states) + " states, len_cap " +
                   std::to_string(r.len_cap) + ")";
      return finish(out);
    }
    out.detail = std::string("derive: ") +
                 (r.outcome == SearchOutcome::BudgetHit ? "state budget hit"
                                                        : "component exhausted") +
                 " at len_cap " + std::to_string(r.len_cap);

    if (budget_.oracle_len > 0) {
      auto renamed = rename_for_oracle(id);
      std::size_t k = (content(renamed.lhs) | content(renamed.rhs)).size();
      std::size_t L = std::max({budget_.oracle_len, id.lhs.size(), id.rhs.size()});
      auto okey = std::make_pair(v, k * 1000 + L);
      try {
        auto it = oracles_.find(okey);
        if (it == oracles_.end())
          it = oracles_
                   .emplace(okey, std::make_unique<BoundedCongruence>(
                                      saturate(*b, k, L)))
                   .first;
        if (oracle_holds(*it->second, renamed) == Truth::True) {
          out.value = Truth::True;
          out.route = "oracle";
          out.detail = "same class in the bounded congruence (k=" +
                       std::to_string(k) + ", L=" + std::to_string(L) + ")";
          return finish(out);
        }
        out.detail += "; oracle: different classes at L=" + std::to_string(L);
      } catch (const PreconditionError& e) {
        out.detail += std::string("; oracle skipped: ") + e.what();
      }
    }
  }

  out.value = Truth::Unknown;
  out.route = "budget";
  if (out.detail.empty()) out.detail = "no route applies";
  return finish(out);
}

InclusionResult Checker::includes(const std::string& v, const std::string& w) {
  auto key = std::make_pair(v, w);
  if (auto it = incl_memo_.find(key); it != incl_memo_.end()) return it->second;
  auto marker = std::make_pair("<=" + v, w);
  InclusionResult res;
  if (std::find(in_progress_.begin(), in_progress_.end(), marker) !=
      in_progress_.end()) {
    res.detail = "recursive inclusion query cut";
    return res;
  }
  catalog_.get(v);
  catalog_.get(w);
  if (v == w) {
    res.value = Truth::True;
    res.detail = "same variety";
    incl_memo_[key] = res;
    return res;
  }
  auto b = basis_of(w);
  if (!b) {
    res.detail = w + " has no basis in the catalog";
    incl_memo_[key] = res;
    return res;
  }
  in_progress_.push_back(marker);
  res.value = Truth::True;
  for (const auto& id : b->expand()) {
    ++res.checked;
    auto r = satisfies_impl(v, id, 1);
    if (r.value == Truth::False) {
      res.value = Truth::False;
      res.witness_identity = id;
      res.witness = r;
      res.detail = v + " violates " + id.label() + " (" + r.route + ")";
      break;
    }
    if (r.value == Truth::Unknown && res.value == Truth::True) {
      res.value = Truth::Unknown;
      res.witness_identity = id;
      res.witness = r;
      res.detail = "undecided: " + id.label() + " (" + r.detail + ")";
    }
  }
  if (res.value == Truth::True)
    res.detail = v + " satisfies all " + std::to_string(res.checked) +
                 " basis identities of " + w;
  in_progress_.pop_back();
  incl_memo_[key] = res;
  return res;
}

Verdict Checker::hypotheses(const std::string& v, std::size_t n) {
  if (n < 2) throw PreconditionError("the containment lemmas need n >= 2");
  Verdict pw = satisfies(v, family("power", static_cast<unsigned>(n)));
  if (pw.value != Truth::True)
    throw PreconditionError("hypothesis not established: " + v +
                            " satisfies x^" + std::to_string(n) + " = x^" +
                            std::to_string(n + 1) + " (" +
                            std::string(to_string(pw.value)) + ")");
  Verdict cr = satisfies(v, Identity::parse("x = x^2"));
  if (cr.value != Truth::False)
    throw PreconditionError("hypothesis not established: " + v +
                            " is not completely regular (x = x^2 should fail, got " +
                            std::string(to_string(cr.value)) + ")");
  return pw;
}

Verdict Checker::contains_F(const std::string& v, std::size_t n) {
  hypotheses(v, n);
  auto id = family("xyxn", static_cast<unsigned>(n));
  auto r = satisfies(v, id);
  Verdict out = r;
  out.value = !r.value;
  out.detail = "F <= " + v + " iff " + v + " violates " + id.str() + "; " +
               std::string(to_string(r.value)) + " via " + r.route + ": " + r.detail;
  return out;
}

Verdict Checker::contains_Q(const std::string& v, std::size_t n) {
  hypotheses(v, n);
  auto id = family("insert", static_cast<unsigned>(n));
  auto r = satisfies(v, id);
  Verdict out = r;
  out.value = !r.value;
  out.detail = "Q <= " + v + " iff " + v + " violates " + id.str() + "; " +
               std::string(to_string(r.value)) + " via " + r.route + ": " + r.detail;
  return out;
}

Verdict Checker::contains_P(const std::string& v, std::size_t k, std::size_t n) {
  if (k == 0) throw PreconditionError("k must be at least 1");
  auto f = contains_F(v, n);
  if (f.value != Truth::True)
    throw PreconditionError("hypothesis not established: F <= " + v + " (" +
                            std::string(to_string(f.value)) + ")");
  auto q = contains_Q(v, n);
  if (q.value != Truth::True)
    throw PreconditionError("hypothesis not established: Q <= " + v + " (" +
                            std::string(to_string(q.value)) + ")");
  auto id = family("delta", static_cast<unsigned>(k), static_cast<unsigned>(n));
  auto r = satisfies(v, id);
  Verdict out = r;
  out.value = !r.value;
  out.detail = "P" + std::to_string(k + 1) + " <= " + v + " iff " + v +
               " violates " + id.str() + "; " + std::string(to_string(r.value)) +
               " via " + r.route + ": " + r.detail;
  return out;
}

ExclusionReport Checker::excludes_nine(const std::string& v, std::size_t n) {
  ExclusionReport rep;
  rep.target = v;
  rep.n = n;
  catalog_.get(v);
  bool any_in = false, any_unknown = false;
  for (const auto& x : nine_varieties()) {
    ExclusionEntry e;
    e.variety = x;
    if (!catalog_.has(x)) {
      e.route = "missing";
      e.detail = x + " is not in the catalog";
      any_unknown = true;
      rep.entries.push_back(e);
      continue;
    }
    auto inc = includes(x, v);
    e.contained = inc.value;
    e.route = inc.value == Truth::False ? "basis:" + inc.witness.route : "basis";
    e.detail = inc.detail;
    if (inc.value == Truth::Unknown) {
      // X contains F (or its dual): if V excludes it, X is not inside V.
      for (const std::string base : {"F", "dual-F"}) {
        if (!catalog_.has(base) || includes(base, x).value != Truth::True) continue;
        try {
          hypotheses(v, n);
          auto id = family("xyxn", static_cast<unsigned>(n));
          if (base == "dual-F") id = dual_identity(id);
          if (satisfies(v, id).value == Truth::True) {
            e.contained = Truth::False;
            e.route = "lemma:" + base;
            e.detail = base + " <= " + x + " but " + base + " is not in " + v;
            break;
          }
        } catch (const PreconditionError&) {
        }
      }
    }
    if (e.contained == Truth::True) any_in = true;
    if (e.contained == Truth::Unknown) any_unknown = true;
    rep.entries.push_back(e);
  }
  rep.cross_prediction = any_in ? Truth::False
                         : any_unknown ? Truth::Unknown
                                       : Truth::True;
  return rep;
}

}  // namespace monoidvar
