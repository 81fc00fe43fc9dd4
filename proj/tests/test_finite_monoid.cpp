#include <doctest.h>

#include <sstream>

#include "monoidvar/catalog.hpp"
#include "monoidvar/finite_monoid.hpp"
#include "monoidvar/rees.hpp"
#include "oracles.hpp"

using namespace monoidvar;
using oracle::Id;
using oracle::W;

namespace {

/// Monoids the property tests sweep over.
std::vector<std::pair<std::string, FiniteMonoid>> corpus() {
  std::vector<std::pair<std::string, FiniteMonoid>> c;
  c.emplace_back("trivial", trivial_monoid());
  c.emplace_back("semilattice", semilattice2());
  c.emplace_back("mono2", monogenic(2, 1));
  c.emplace_back("mono3", monogenic(3, 1));
  c.emplace_back("Z2", monogenic(1, 2));
  c.emplace_back("lzb", left_zero_band_with_identity());
  c.emplace_back("e-witness", e_witness());
  c.emplace_back("S(xyx)", build_S({W("xyx")}).base);
  c.emplace_back("S(xy)", build_S({W("xy")}).base);
  c.emplace_back("S(x^2y)", build_S({W("x^2y")}).base);
  return c;
}

Elem element(const FiniteMonoid& m, const std::string& label) {
  for (Elem e = 0; e < m.size(); ++e)
    if (m.label(e) == label) return e;
  FAIL("no element " << label);
  return 0;
}

}  // namespace

TEST_CASE("validate") {
  CHECK(validate(trivial_monoid()).ok);
  // {e, a} with e*e = a: e is not an identity and no other element is either
  FiniteMonoid bad(2, {1, 1, 1, 1}, 0);
  CHECK_FALSE(validate(bad).ok);
  CHECK(validate(build_S({W("xyx")}).base).ok);
  FiniteMonoid nonassoc(3, {0, 1, 2, 1, 2, 0, 2, 0, 0}, 0);
  CHECK_FALSE(validate(nonassoc).ok);
  CHECK_THROWS(FiniteMonoid(2, {0, 1, 1}, 0));
}

TEST_CASE("evaluate") {
  auto s = build_S({W("xyx")}).base;
  Assignment a{{named('x'), element(s, "x")}, {named('y'), element(s, "y")}};
  CHECK(evaluate(s, Word{}, a) == s.identity());
  CHECK(s.label(evaluate(s, W("xyx"), a)) == "xyx");
  CHECK(s.label(evaluate(s, W("x^2"), a)) == "0");
  CHECK_THROWS_AS(evaluate(s, W("z"), a), PreconditionError);
}

TEST_CASE("satisfies with counterexamples") {
  auto s = build_S({W("xyx")}).base;
  CHECK(satisfies(s, Id("x^2", "x^3")).holds());
  auto r = satisfies(s, Id("xy", "yx"));
  REQUIRE(r.fails());
  REQUIRE(r.counterexample);
  CHECK(evaluate(s, W("xy"), *r.counterexample) != evaluate(s, W("yx"), *r.counterexample));
  CHECK(satisfies(s, Id("xyx", "xyx")).holds());
  auto big = satisfies(s, Id("abcdefghijklm", "mlkjihgfedcba"), 1e3);
  CHECK(big.status == SatStatus::BudgetExceeded);
}

TEST_CASE("aperiodicity and idempotents") {
  auto s = build_S({W("xyx")}).base;
  CHECK(is_aperiodic(s));
  CHECK_FALSE(is_aperiodic(monogenic(1, 2)));
  CHECK(is_aperiodic(trivial_monoid()));
  CHECK(idempotents_commute(s));
  CHECK(idempotents(s).size() == 2);
  CHECK(idempotents_commute(semilattice2()));
  CHECK_FALSE(idempotents_commute(left_zero_band_with_identity()));
}

TEST_CASE("dual monoid") {
  auto c = semilattice2();
  CHECK(dual_monoid(c) == c);
  auto s = build_S({W("xyx")}).base;
  auto id = Id("x^2y", "x^2yx");
  CHECK(satisfies(dual_monoid(s), dual_identity(id)).holds() == satisfies(s, id).holds());
  CHECK(dual_monoid(dual_monoid(s)) == s);
}

TEST_CASE("direct product") {
  auto s = build_S({W("xyx")}).base;
  auto p = direct_product(s, trivial_monoid());
  CHECK(p.size() == s.size());
  CHECK(direct_product(s, s).size() == 49);
  auto t = build_S({W("xy")}).base;
  auto st = direct_product(s, t);
  CHECK(validate(st).ok);
  for (auto id : {Id("x^2", "x^3"), Id("xy", "yx"), Id("xyx", "x^2y"), Id("x^2y", "yx^2")})
    CHECK(satisfies(st, id).holds() == (satisfies(s, id).holds() && satisfies(t, id).holds()));
  CHECK_THROWS(direct_product(direct_product(st, st), st, 100));
}

TEST_CASE("table files round trip") {
  auto s = build_S({W("xyx")}).base;
  std::stringstream io;
  write_table(io, s);
  auto back = read_table(io);
  CHECK(back == s);
  CHECK(back.labels() == s.labels());
  std::stringstream bad("n 2 0\n0 1\n");
  CHECK_THROWS(read_table(bad));
}

TEST_CASE("satisfies agrees with unpruned brute force") {
  oracle::Rng rng(3);
  auto c = corpus();
  for (int trial = 0; trial < 400; ++trial) {
    std::string u = oracle::random_word(rng, "xyz", 5);
    std::string v = oracle::random_word(rng, "xyz", 5);
    for (const auto& [name, m] : c) {
      CAPTURE(name);
      CAPTURE(u);
      CAPTURE(v);
      auto r = satisfies(m, Id(u, v));
      CHECK(r.holds() == oracle::monoid_holds(m, u, v));
      if (r.fails()) {
        REQUIRE(r.counterexample);
        CHECK(evaluate(m, W(u), *r.counterexample) != evaluate(m, W(v), *r.counterexample));
      }
    }
  }
}

TEST_CASE("satisfaction is invariant under renaming and duality") {
  oracle::Rng rng(17);
  auto c = corpus();
  const std::string from = "xyz", to = "cab";
  for (int trial = 0; trial < 300; ++trial) {
    std::string u = oracle::random_word(rng, from, 8);
    std::string v = oracle::random_word(rng, from, 8);
    std::string ru = u, rv = v;
    for (char& ch : ru) ch = to[from.find(ch)];
    for (char& ch : rv) ch = to[from.find(ch)];
    for (const auto& [name, m] : c) {
      CAPTURE(name);
      bool h = satisfies(m, Id(u, v)).holds();
      CHECK(h == satisfies(m, Id(ru, rv)).holds());
      CHECK(h == satisfies(dual_monoid(m), dual_identity(Id(u, v))).holds());
    }
  }
  for (const auto& [name, m] : c) {
    CHECK(is_aperiodic(m) == is_aperiodic(dual_monoid(m)));
    CHECK(idempotents_commute(m) == idempotents_commute(dual_monoid(m)));
  }
}
