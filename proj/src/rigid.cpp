#include "monoidvar/rigid.hpp"

#include <algorithm>

namespace monoidvar {

namespace {

const Letter X = named('x');
const Letter Y = named('y');
const Letter Z = named('z');

// Rewrites the factor of the builder's current word starting at pos.
void apply_at(TraceBuilder& tb, const Identity& id, Direction dir,
              const Substitution& xi, std::size_t pos) {
  RewriteStep s;
  s.identity = id;
  s.direction = dir;
  for (Letter a : (content(id.lhs) | content(id.rhs)).letters())
    s.xi.set(a, xi.image(a));
  Word img = s.xi.apply(s.from_side());
  s.left = tb.current().prefix(pos);
  s.right = tb.current().suffix_from(pos + img.size());
  tb.step(std::move(s));
}

// Image of a kappa group sequence: band(k) -> prefix(k) x^{extra} when k == j.
Substitution kappa_xi(const std::vector<Word>& heads, unsigned j, std::size_t extra) {
  Substitution xi{{X, Word{X}}};
  for (std::size_t k = 0; k < heads.size(); ++k) {
    Word img = heads[k];
    if (k == j) img.append(X, extra);
    xi.set(band(k), img);
  }
  return xi;
}

Word rigid_word(Letter x, const std::vector<Letter>& ts,
                const std::vector<std::size_t>& e) {
  Word w = power(x, e[0]);
  for (std::size_t i = 0; i < ts.size(); ++i) {
    w.push_back(ts[i]);
    w.append(x, e[i + 1]);
  }
  return w;
}

}  // namespace

DerivationTrace deletion_derivation(unsigned n, unsigned j) {
  if (n == 0 || j > n) throw PreconditionError("deletion: need 0 <= j <= n, n >= 1");
  const Identity del = family("delete", n);
  const Identity kap = family("kappa", n, j);
  const Identity ins = family("insert", n);
  std::vector<Word> lheads{Word{}}, rheads{Word{}};
  for (unsigned i = 1; i <= n; ++i) {
    lheads.push_back(Word{band(i)});
    rheads.push_back(Word{band(n + i)});
  }
  TraceBuilder tb(del.lhs);
  for (std::size_t e = 1; e < n; ++e)
    tb.apply(kap, Direction::Forward, kappa_xi(lheads, j, e - 1));
  for (std::size_t e = 1; e < n; ++e)
    tb.apply(kap, Direction::Forward, kappa_xi(rheads, j, e - 1));
  Word ybig, zbig{Z};
  for (unsigned i = j + 1; i <= n; ++i) {
    ybig.push_back(band(i));
    ybig.push_back(X);
  }
  ybig.push_back(Y);
  if (j >= 1) {
    zbig.push_back(X);
    for (unsigned i = 1; i < j; ++i) {
      zbig.push_back(band(n + i));
      zbig.push_back(X);
    }
    zbig.push_back(band(n + j));
  }
  tb.apply(ins, Direction::Forward, Substitution{{X, Word{X}}, {Y, ybig}, {Z, zbig}});
  for (std::size_t e = n; e > 1; --e)
    tb.apply(kap, Direction::Backward, kappa_xi(rheads, j, e - 2));
  for (std::size_t e = n; e > 1; --e)
    tb.apply(kap, Direction::Backward, kappa_xi(lheads, j, e - 2));
  return tb.trace();
}

LimitResult limit_word(const Word& w, unsigned n, unsigned j) {
  if (n == 0 || j > n) throw PreconditionError("limit: need 0 <= j <= n, n >= 1");
  LimitResult res;
  res.sigma = IdentitySystem({family("kappa", n, j), family("insert", n),
                              family("power", n)});
  const DerivationTrace back = reverse_trace(deletion_derivation(n, j));
  TraceBuilder tb(w);
  while (true) {
    const Word& cur = tb.current();
    std::optional<Letter> c;
    for (Letter a : content(cur).letters())
      if (occurrences(cur, a) > 2 * n + 2) {
        c = a;
        break;
      }
    if (!c) break;
    std::vector<std::size_t> p;
    for (std::size_t i = 0; i < cur.size(); ++i)
      if (cur[i] == *c) p.push_back(i);
    auto seg = [&](std::size_t k) {  // between occurrences k and k+1 (0-based)
      return cur.slice(p[k] + 1, p[k + 1] - p[k] - 1);
    };
    Substitution xi{{X, Word{*c}}};
    for (unsigned i = 1; i <= n; ++i) xi.set(band(i), seg(i - 1));
    xi.set(Y, seg(n));
    xi.set(Z, seg(n + 1));
    for (unsigned i = 1; i <= n; ++i) xi.set(band(n + i), seg(n + 1 + i));
    Word a = cur.prefix(p[0]);
    Word b = cur.suffix_from(p[2 * n + 2] + 1);
    tb.append(lift_trace(back, xi, a, b));
    ++res.deletions;
  }
  res.word = tb.current();
  res.trace = tb.trace();
  return res;
}

Identity RigidShape::identity() const {
  return Identity(rigid_word(x, ts, e), rigid_word(x, ts, f));
}

std::optional<RigidShape> rigid_shape(const Identity& id) {
  const LetterSet all = content(id.lhs) | content(id.rhs);
  std::optional<RigidShape> best;
  std::size_t best_occ = 0;
  for (Letter x : all.letters()) {
    LetterSet drop{x};
    Word lu = remove_letters(id.lhs, drop), lv = remove_letters(id.rhs, drop);
    if (lu != lv) continue;
    if (content(lu).size() != lu.size()) continue;
    RigidShape s;
    s.x = x;
    s.ts = lu.letters();
    for (const Word* w : {&id.lhs, &id.rhs}) {
      std::vector<std::size_t> ex(1, 0);
      for (Letter a : w->letters()) {
        if (a == x)
          ++ex.back();
        else
          ex.push_back(0);
      }
      (w == &id.lhs ? s.e : s.f) = std::move(ex);
    }
    std::size_t occ = occurrences(id.lhs, x) + occurrences(id.rhs, x);
    if (!best || occ > best_occ) {
      best = std::move(s);
      best_occ = occ;
    }
  }
  return best;
}

namespace {

void check_rigid_input(const Identity& id, const RigidShape& s, unsigned n,
                       unsigned j) {
  if (n == 0 || j > n) throw PreconditionError("need 0 <= j <= n, n >= 1");
  if (!is_efficient(id)) throw PreconditionError("identity is not efficient");
  if (!is_i_free(id.lhs, n + 1) || !is_i_free(id.rhs, n + 1))
    throw PreconditionError("sides are not " + std::to_string(n + 1) + "-free");
  for (std::size_t k = 0; k <= s.m(); ++k)
    if (s.e[k] > n || s.f[k] > n)
      throw PreconditionError("exponent above " + std::to_string(n));
}

RigidShape require_shape(const Identity& id) {
  auto s = rigid_shape(id);
  if (!s) throw ShapeError("identity " + id.str() + " is not of the rigid shape");
  return *s;
}

// Raises blocks lo..hi of one side to x^n with kappa(n, j).
CertifiedTrace raise_middle(const RigidShape& s, std::vector<std::size_t> ex,
                            unsigned n, unsigned j, std::size_t lo,
                            std::size_t hi, const std::string& claim) {
  const Identity kap = family("kappa", n, j);
  CertifiedTrace ct;
  ct.claim = claim;
  ct.sigma = IdentitySystem({kap});
  TraceBuilder tb(rigid_word(s.x, s.ts, ex));
  for (std::size_t i = lo; i <= hi; ++i) {
    while (ex[i] < n) {
      const std::size_t first = i - j;  // block index of kappa's t_0
      Substitution xi{{X, Word{s.x}}};
      for (std::size_t k = 0; k <= n; ++k) {
        const std::size_t blk = first + k;
        Word img;
        if (blk > 0) img.push_back(s.ts[blk - 1]);
        img.append(s.x, ex[blk] - 1);
        xi.set(band(k), img);
      }
      std::size_t pos = 0;
      if (first > 0) pos = tb.current().raw().find(static_cast<char>(s.ts[first - 1].id()));
      apply_at(tb, kap, Direction::Forward, xi, pos);
      ++ex[i];
    }
  }
  ct.trace = tb.trace();
  return ct;
}

std::array<std::size_t, 4> parts(const RigidShape& s,
                                 const std::vector<std::size_t>& ex, unsigned n) {
  std::array<std::size_t, 4> p{ex[0], 0, 0, 0};
  for (std::size_t i = 1; i < n; ++i) p[1] += 1 + ex[i];
  p[2] = 1 + ex[n];
  for (std::size_t i = n + 1; i <= s.m(); ++i) p[3] += 1 + ex[i];
  return p;
}

}  // namespace

RigidNormalization kappa_collapse(const Identity& id, unsigned n, unsigned j) {
  const RigidShape s = require_shape(id);
  check_rigid_input(id, s, n, j);
  const std::size_t m = s.m();
  if (m <= 2 * n) throw PreconditionError("collapse needs m > 2n");
  for (std::size_t k = 0; k <= m; ++k)
    if (s.e[k] == 0 || s.f[k] == 0)
      throw PreconditionError("collapse needs positive exponents");

  RigidNormalization r;
  r.input = id;
  r.branch = "collapse";
  r.lhs = raise_middle(s, s.e, n, j, n, m - n, "u = u1");
  r.rhs = raise_middle(s, s.f, n, j, n, m - n, "v = v1");
  const Word u1 = r.lhs.trace.end(), v1 = r.rhs.trace.end();
  const Identity mid(u1, v1, "u1 = v1");

  // keep blocks 0..n and m-n+1..m; t_{n+1}..t_{m-n} disappear
  RigidShape out;
  out.x = s.x;
  std::vector<std::size_t> eo, fo;
  for (std::size_t k = 0; k <= m; ++k) {
    if (k > n && k <= m - n) continue;
    if (k > 0) out.ts.push_back(s.ts[k - 1]);
    eo.push_back(k >= n && k <= m - n ? n : s.e[k]);
    fo.push_back(k >= n && k <= m - n ? n : s.f[k]);
  }
  out.e = eo;
  out.f = fo;
  r.output = out.identity();
  r.output.name = "u' = v'";
  r.lhs_parts = parts(out, eo, n);
  r.rhs_parts = parts(out, fo, n);

  {  // output implies u1 = v1: stretch t_n over the collapsed middle
    CertifiedTrace ct;
    ct.claim = "u' = v' implies u1 = v1";
    ct.sigma = IdentitySystem({r.output});
    Word stretched{s.ts[n - 1]};
    for (std::size_t k = n + 1; k <= m - n; ++k) {
      stretched.append(s.x, n);
      stretched.push_back(s.ts[k - 1]);
    }
    TraceBuilder tb(u1);
    tb.apply(r.output, Direction::Forward,
             Substitution{{s.ts[n - 1], stretched}});
    ct.trace = tb.trace();
    r.equivalence.push_back(std::move(ct));
  }
  {  // u1 = v1 implies the output: erase the middle t's, then fix x-powers
    CertifiedTrace ct;
    ct.claim = "u1 = v1 implies u' = v'";
    const Identity pw = family("power", n);
    ct.sigma = IdentitySystem({mid, pw});
    const std::size_t big = n * (m - 2 * n + 1);
    Substitution erase;
    for (std::size_t k = n + 1; k <= m - n; ++k) erase.set(s.ts[k - 1], Word{});
    const Word& u2 = r.output.lhs;
    TraceBuilder tb(u2);
    // position of the x-block after t_n is the same on both sides of the
    // output only up to t_n, so it is recomputed from the current word
    auto block_pos = [&](const Word& w) {
      for (std::size_t i = 0; i < w.size(); ++i)
        if (w[i] == s.ts[n - 1]) return i + 1;
      return w.size();
    };
    for (std::size_t e = n; e < big; ++e)
      apply_at(tb, pw, Direction::Forward, Substitution{{X, Word{s.x}}},
               block_pos(tb.current()));
    tb.apply(mid, Direction::Forward, erase);
    for (std::size_t e = big; e > n; --e)
      apply_at(tb, pw, Direction::Backward, Substitution{{X, Word{s.x}}},
               block_pos(tb.current()));
    ct.trace = tb.trace();
    r.equivalence.push_back(std::move(ct));
  }
  return r;
}

RigidNormalization normalize_rigid(const Identity& id, unsigned n, unsigned j) {
  const RigidShape s = require_shape(id);
  check_rigid_input(id, s, n, j);
  const std::size_t m = s.m();
  RigidNormalization r;
  r.input = id;
  r.output = id;
  r.lhs = {"u = u", IdentitySystem{}, DerivationTrace{id.lhs, {}}};
  r.rhs = {"v = v", IdentitySystem{}, DerivationTrace{id.rhs, {}}};
  if (id.trivial()) {
    r.branch = "trivial";
    return r;
  }
  if (m <= 2 * n) {
    r.branch = "short";
    return r;
  }
  bool zero = false;
  for (std::size_t k = 0; k <= m; ++k)
    if (s.e[k] == 0 || s.f[k] == 0) zero = true;
  if (!zero) return kappa_collapse(id, n, j);

  r.branch = "limit";
  auto lu = limit_word(id.lhs, n, j), lv = limit_word(id.rhs, n, j);
  r.lhs = {"u = u1", lu.sigma, lu.trace};
  r.rhs = {"v = v1", lv.sigma, lv.trace};
  const Identity mid(lu.word, lv.word, "u1 = v1");
  std::vector<std::size_t> e1(m + 1, 0), f1(m + 1, 0);
  {
    std::size_t bi = 0;
    for (Letter a : lu.word.letters()) a == s.x ? ++e1[bi] : ++bi;
    bi = 0;
    for (Letter a : lv.word.letters()) a == s.x ? ++f1[bi] : ++bi;
  }
  LetterSet dropped;
  for (std::size_t k = 1; k <= m; ++k)
    if (e1[k] == 0 && f1[k] == 0) dropped.insert(s.ts[k - 1]);
  if (dropped.empty()) {
    r.output = mid;
    r.output.name = "u' = v'";
    return r;
  }
  r.output = Identity(remove_letters(lu.word, dropped),
                      remove_letters(lv.word, dropped), "u' = v'");
  {  // output implies u1 = v1: each kept t absorbs the dropped run before it
    CertifiedTrace ct;
    ct.claim = "u' = v' implies u1 = v1";
    ct.sigma = IdentitySystem({r.output});
    Substitution xi;
    Word run;
    for (std::size_t k = 1; k <= m; ++k) {
      run.push_back(s.ts[k - 1]);
      if (!dropped.contains(s.ts[k - 1])) {
        xi.set(s.ts[k - 1], run);
        run = Word{};
      }
    }
    RewriteStep st;
    st.identity = r.output;
    st.direction = Direction::Forward;
    for (Letter a : (content(r.output.lhs) | content(r.output.rhs)).letters())
      st.xi.set(a, xi.image(a));
    st.right = run;
    TraceBuilder tb(lu.word);
    tb.step(st);
    ct.trace = tb.trace();
    r.equivalence.push_back(std::move(ct));
  }
  {  // u1 = v1 implies the output: erase the dropped letters
    CertifiedTrace ct;
    ct.claim = "u1 = v1 implies u' = v'";
    ct.sigma = IdentitySystem({mid});
    Substitution erase;
    for (Letter t : dropped.letters()) erase.set(t, Word{});
    TraceBuilder tb(r.output.lhs);
    tb.apply(mid, Direction::Forward, erase);
    ct.trace = tb.trace();
    r.equivalence.push_back(std::move(ct));
  }
  return r;
}

}  // namespace monoidvar
