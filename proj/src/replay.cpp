#include "monoidvar/replay.hpp"

#include <functional>

#include "monoidvar/rigid.hpp"

namespace monoidvar {

namespace {

const Letter X = named('x');
const Letter Y = named('y');

Identity id(const char* text, const char* name = "") {
  return Identity::parse(text, name);
}

using Builder = std::function<void(TraceBuilder&)>;

ReplayChain make(std::string name, std::string group, Identity claim,
                 IdentitySystem sigma, const Builder& build) {
  ReplayChain c;
  c.name = std::move(name);
  c.group = std::move(group);
  c.claim = std::move(claim);
  c.sigma = std::move(sigma);
  TraceBuilder tb(c.claim.lhs);
  try {
    build(tb);
  } catch (const std::exception& e) {
    c.build_error = e.what();
  }
  c.trace = tb.trace();
  return c;
}

// p t1 e1^{k1} t2 e2^{k2} ... with t_i = band(i)
Word shaped(const Word& prefix, const std::vector<std::size_t>& ks) {
  Word w = prefix;
  for (std::size_t i = 1; i <= ks.size(); ++i) {
    w.push_back(band(i));
    w.append(e_letter(i), ks[i - 1]);
  }
  return w;
}

// Moves the exponents of a shaped word one unit at a time with xyx = xyx^2.
void walk_exponents(TraceBuilder& tb, const Identity& rule, const Word& prefix,
                    std::vector<std::size_t> from,
                    const std::vector<std::size_t>& to) {
  for (std::size_t i = 0; i < from.size(); ++i)
    while (from[i] != to[i]) {
      from[i] += from[i] < to[i] ? 1 : -1;
      tb.apply_to(rule, shaped(prefix, from));
    }
}

std::vector<ReplayChain> observation_chains() {
  std::vector<ReplayChain> out;
  const Identity sigma = id("xyBx^2y = yxBx^2y", "sigma");
  const Identity tau = id("xyBx^2Cx^2y = yxBx^2Cx^2y", "tau");
  const Identity pw = family("power", 2);
  out.push_back(make("observation: sigma implies tau (k=2, n=2)", "observation",
                     tau, IdentitySystem({sigma}), [&](TraceBuilder& tb) {
                       tb.apply(sigma, Direction::Forward,
                                Substitution{{band(1), Word::parse("Bx^2C")}});
                     }));
  out.push_back(make("observation: tau implies sigma (k=2, n=2)", "observation",
                     sigma, IdentitySystem({tau, pw}), [&](TraceBuilder& tb) {
                       tb.apply_to(pw, Word::parse("xyBx^3y"));
                       tb.apply_to(pw, Word::parse("xyBx^4y"));
                       tb.apply(tau, Direction::Forward,
                                Substitution{{band(2), Word{}}});
                       tb.apply_to(pw, Word::parse("yxBx^3y"));
                       tb.apply_to(pw, Word::parse("yxBx^2y"));
                     }));
  return out;
}

// xyx^n = x^q y x^n, applied n times with a growing left context, then
// x^{1+n(q-1)} is lowered to x^n.
ReplayChain f_lemma_chain(unsigned n, unsigned q) {
  Identity rule(Word{X, Y} + power(X, n), power(X, q) + Word{Y} + power(X, n),
                "xyx^n = x^q y x^n");
  const Identity pw = family("power", n);
  return make("F lemma: xyx^n = x^n y x^n (n=" + std::to_string(n) +
                  ", q=" + std::to_string(q) + ")",
              "f-lemma", family("xyxn", n), IdentitySystem({rule, pw}),
              [=](TraceBuilder& tb) {
                for (unsigned k = 0; k < n; ++k)
                  tb.apply(rule, Direction::Forward, Substitution{});
                for (std::size_t e = 1 + n * (q - 1); e > n; --e)
                  tb.apply_to(pw, power(X, e - 1) + Word{Y} + power(X, n));
              });
}

std::vector<ReplayChain> lemma_chains() {
  std::vector<ReplayChain> out;
  out.push_back(f_lemma_chain(2, 2));
  out.push_back(f_lemma_chain(2, 3));
  {
    const Identity comm = id("xy = yx", "comm");
    const Identity pw = family("power", 2);
    out.push_back(make("F lemma, commutative case (n=2)", "f-lemma",
                       Identity(family("xyxn", 2).rhs, family("xyxn", 2).lhs),
                       IdentitySystem({comm, pw}), [&](TraceBuilder& tb) {
                         tb.apply_to(comm, Word::parse("xyx^3"));
                         tb.apply_to(pw, Word::parse("xyx^2"));
                       }));
    out.push_back(make("Q lemma, commutative case (n=2)", "q-lemma",
                       Identity(family("insert", 2).rhs, family("insert", 2).lhs),
                       IdentitySystem({comm, pw}), [&](TraceBuilder& tb) {
                         tb.apply_to(comm, Word::parse("x^3yzx^2"));
                         tb.apply_to(pw, Word::parse("x^2yzx^2"));
                       }));
  }
  {
    // p = 2, q = 1, r = 1, s = 1, t = 2
    const Identity pqr = id("x^2BxCx = xBCx^2", "x^p t x^q t' x^r = x^s t t' x^t");
    const Identity pw = family("power", 2);
    out.push_back(make("Q lemma: x^n y x^n z x^n = x^n yz x^n (n=2)", "q-lemma",
                       family("collapse", 2), IdentitySystem({pqr, pw}),
                       [&](TraceBuilder& tb) {
                         tb.apply(pw, Direction::Forward, Substitution{});
                         tb.apply(pw, Direction::Forward, Substitution{});
                         tb.apply(pqr, Direction::Forward,
                                  Substitution{{X, Word::parse("x^2")},
                                               {band(1), Word{Y}},
                                               {band(2), Word{named('z')}}});
                         tb.apply_to(pw, Word::parse("x^2yzx^3"));
                         tb.apply_to(pw, Word::parse("x^2yzx^2"));
                       }));
  }
  {
    const Identity col = family("collapse", 2);
    const Identity pw = family("power", 2);
    out.push_back(make("Q lemma: x^n yz x^n = x^n yxz x^n (n=2)", "q-lemma",
                       family("insert", 2), IdentitySystem({col, pw}),
                       [&](TraceBuilder& tb) {
                         tb.apply(col, Direction::Backward, Substitution{});
                         tb.apply_to(pw, Word::parse("x^2yx^3zx^2"));
                         tb.apply(col, Direction::Forward,
                                  Substitution{{Y, Word::parse("yx")}});
                       }));
  }
  return out;
}

std::vector<ReplayChain> deletion_chains() {
  std::vector<ReplayChain> out;
  for (unsigned n = 1; n <= 2; ++n)
    for (unsigned j = 0; j <= n; ++j) {
      auto sys = IdentitySystem({family("kappa", n, j), family("insert", n)});
      out.push_back(make("deletion identity (n=" + std::to_string(n) +
                             ", j=" + std::to_string(j) + ")",
                         "deletion", family("delete", n), sys,
                         [=](TraceBuilder& tb) {
                           tb.append(deletion_derivation(n, j));
                         }));
    }
  // (t0 x)(t1 x)(t2 x)(t3 x)(t4 x) at n = 1 keeps four x's
  const Word w = Word::parse("AxBxCxDxEx");
  auto lim = limit_word(w, 1, 0);
  out.push_back(make("limit word: AxBxCxDxEx at n=1", "deletion",
                     Identity(w, lim.word), lim.sigma,
                     [&](TraceBuilder& tb) { tb.append(lim.trace); }));
  return out;
}

std::vector<ReplayChain> lifting_chains() {
  std::vector<ReplayChain> out;
  for (unsigned n = 1; n <= 3; ++n)
    for (unsigned j = 0; j <= n; ++j) {
      const Identity k = family("kappa", n, j);
      out.push_back(make(k.name + " implies kappa_" + std::to_string(n + 1) +
                             "_" + std::to_string(j) + " (right factor)",
                         "kappa", family("kappa", n + 1, j), IdentitySystem({k}),
                         [&](TraceBuilder& tb) {
                           tb.apply(k, Direction::Forward, Substitution{});
                         }));
      Substitution shift;
      for (unsigned i = 0; i <= n; ++i) shift.set(band(i), Word{band(i + 1)});
      out.push_back(make(k.name + " implies kappa_" + std::to_string(n + 1) +
                             "_" + std::to_string(j + 1) + " (left factor)",
                         "kappa", family("kappa", n + 1, j + 1),
                         IdentitySystem({k}), [&](TraceBuilder& tb) {
                           tb.apply(k, Direction::Forward, shift);
                         }));
    }
  for (unsigned n = 1; n <= 3; ++n) {
    const Identity a = family("alpha", n);
    out.push_back(make(a.name + " implies alpha_" + std::to_string(n + 1),
                       "alpha", family("alpha", n + 1), IdentitySystem({a}),
                       [&](TraceBuilder& tb) {
                         tb.apply(a, Direction::Forward, Substitution{});
                       }));
  }
  return out;
}

std::vector<ReplayChain> delta_chains() {
  std::vector<ReplayChain> out;
  const Identity r3 = id("xyx = xyx^2", "xyx = xyx^2");
  const Word xy{X, Y}, yx{Y, X};
  for (unsigned k = 1; k <= 2; ++k) {
    const Identity a = family("alpha", k);
    const Identity d = family("delta", k, 2);
    const std::vector<std::size_t> ones(k + 1, 1), twos(k + 1, 2);
    out.push_back(make(d.name + " from " + a.name, "delta", d,
                       IdentitySystem({r3, a}), [&](TraceBuilder& tb) {
                         walk_exponents(tb, r3, xy, twos, ones);
                         tb.apply(a, Direction::Forward, Substitution{});
                         walk_exponents(tb, r3, yx, ones, twos);
                       }));
    out.push_back(make(a.name + " from " + d.name, "delta", a,
                       IdentitySystem({r3, d}), [&](TraceBuilder& tb) {
                         walk_exponents(tb, r3, xy, ones, twos);
                         tb.apply(d, Direction::Forward, Substitution{});
                         walk_exponents(tb, r3, yx, twos, ones);
                       }));
  }
  const Identity d12 = family("delta", 1, 2);
  out.push_back(make("delta_1_2 implies delta_2_2", "delta", family("delta", 2, 2),
                     IdentitySystem({d12}), [&](TraceBuilder& tb) {
                       tb.apply(d12, Direction::Forward, Substitution{});
                     }));
  out.push_back(make("delta_1_2 implies delta_1_3", "delta", family("delta", 1, 3),
                     IdentitySystem({d12}), [&](TraceBuilder& tb) {
                       tb.apply(d12, Direction::Forward,
                                Substitution{{band(1), Word::parse("Bx")},
                                             {band(2), Word::parse("Cy")}});
                     }));
  return out;
}

std::vector<ReplayChain> variety_chains() {
  std::vector<ReplayChain> out;
  const Identity r3 = id("xyx = xyx^2", "xyx = xyx^2");
  const Identity r8 = id("xyzxy = yxzxy", "xyzxy = yxzxy");
  const Identity r14 = id("xyxztx = xyxzxtx", "xyxztx = xyxzxtx");
  {
    out.push_back(make("xyhxsytx = yxhxsytx from xyzxy = yxzxy and xyxztx = xyxzxtx",
                       "variety", id("xyhxsytx = yxhxsytx"),
                       IdentitySystem({r8, r14}), [&](TraceBuilder& tb) {
                         tb.apply(r14, Direction::Forward,
                                  Substitution{{Y, Word::parse("yh")},
                                               {named('z'), Word::parse("s")},
                                               {named('t'), Word::parse("yt")}});
                         tb.apply(r8, Direction::Forward,
                                  Substitution{{named('z'), Word::parse("hxs")}});
                         tb.apply(r14, Direction::Backward,
                                  Substitution{{Y, Word::parse("h")},
                                               {named('z'), Word::parse("s")},
                                               {named('t'), Word::parse("yt")}});
                       }));
  }
  {
    const Identity ins = family("insert", 2);
    out.push_back(make("xyxztx = xyxzxtx from xyx = xyx^2 and x^2yzx^2 = x^2yxzx^2",
                       "variety", r14, IdentitySystem({r3, ins}),
                       [&](TraceBuilder& tb) {
                         tb.apply_to(r3, Word::parse("xyx^2ztx"));
                         tb.apply_to(r3, Word::parse("xyx^2ztx^2"));
                         tb.apply(ins, Direction::Forward,
                                  Substitution{{Y, Word::parse("z")},
                                               {named('z'), Word::parse("t")}});
                         tb.apply_to(r3, Word::parse("xyxzxtx^2"));
                         tb.apply_to(r3, Word::parse("xyxzxtx"));
                       }));
  }
  {
    const Identity b1 = family("beta", 1);
    out.push_back(make("xzxyxty = xzyxty from beta_1 and xyx = xyx^2", "variety",
                       id("xzxyxty = xzyxty"), IdentitySystem({b1, r3}),
                       [&](TraceBuilder& tb) {
                         tb.apply(b1, Direction::Backward,
                                  Substitution{{band(2), Word::parse("t")}});
                         tb.apply_to(r3, Word::parse("xzyxty"));
                       }));
  }
  return out;
}

}  // namespace

std::vector<ReplayChain> replay_library() {
  std::vector<ReplayChain> all;
  for (auto part : {observation_chains(), lemma_chains(), deletion_chains(),
                    lifting_chains(), delta_chains(), variety_chains()})
    for (auto& c : part) all.push_back(std::move(c));
  return all;
}

ReplayOutcome replay(const ReplayChain& c) {
  ReplayOutcome o;
  o.name = c.name;
  o.group = c.group;
  o.steps = c.trace.steps.size();
  if (!c.build_error.empty()) {
    o.reason = "construction failed: " + c.build_error;
    return o;
  }
  if (c.trace.start != c.claim.lhs) {
    o.reason = "trace starts at " + c.trace.start.str();
    return o;
  }
  auto chk = verify_trace(c.trace, c.sigma);
  if (!chk.ok) {
    o.reason = chk.reason;
    return o;
  }
  if (chk.end != c.claim.rhs) {
    o.reason = "trace ends at " + chk.end.str() + ", claimed " + c.claim.rhs.str();
    return o;
  }
  o.ok = true;
  o.reason = "verified";
  return o;
}

std::vector<ReplayOutcome> replay_all(const std::string& group_filter) {
  std::vector<ReplayOutcome> out;
  for (const auto& c : replay_library())
    if (group_filter.empty() || group_filter == "all" || c.group == group_filter)
      out.push_back(replay(c));
  return out;
}

}  // namespace monoidvar
