#include <doctest.h>

#include "monoidvar/congruence.hpp"
#include "monoidvar/rees.hpp"
#include "oracles.hpp"

using namespace monoidvar;
using oracle::Id;
using oracle::W;

namespace {

SatPredicate monoid_sat(const FiniteMonoid& m) {
  return [&m](const Identity& id) { return truth_of(satisfies(m, id).holds()); };
}

Truth sl_sat(const Identity& id) { return truth_of(criterion_SL(id).holds); }
Truth f_sat(const Identity& id) { return truth_of(criterion_F(id).holds); }

}  // namespace

TEST_CASE("build_S sizes and labels") {
  auto s = build_S({W("xyx")});
  CHECK(s.base.size() == 7);
  CHECK(s.base.labels() == std::vector<std::string>{"1", "x", "y", "xy", "yx", "xyx", "0"});
  CHECK(build_S({W("xzxyty")}).base.size() ==
        oracle::factor_set({"xzxyty"}).size() + 1);
  CHECK(build_S({W("xzxyty")}).base.size() == 21);
  auto x = build_S({W("x")});
  CHECK(x.base.size() == 3);
  Elem ex = *x.element_of(W("x"));
  CHECK(x.base.mul(ex, ex) == x.zero);
  CHECK(build_S({W("xy"), Word{}}).base.size() == build_S({W("xy")}).base.size());
  CHECK_THROWS(build_S({W("abcdefghijklmnopqrstuvwxyz"), W("zyxwvutsrqponmlkjihgfedcba")}, 100));
}

TEST_CASE("isoterms") {
  auto r = is_isoterm(W("xyx"), f_sat, 6);
  CHECK(r.verdict == Truth::False);
  REQUIRE(r.witness);
  CHECK(criterion_F(Identity(W("xyx"), *r.witness)).holds);

  auto s = build_S({W("xyx")}).base;
  CHECK(is_isoterm(W("xyx"), monoid_sat(s), 5).verdict == Truth::True);
  CHECK(is_isoterm(W("x"), sl_sat, 3).verdict == Truth::False);

  auto lin = isoterm_linear_rule(W("xyx"));
  CHECK(lin.exact);
  CHECK(lin.verdict == Truth::False);
  CHECK(isoterm_linear_rule(W("xyz")).verdict == Truth::True);
}

TEST_CASE("membership of S(W) through isoterms") {
  auto s = build_S({W("xyx")}).base;
  CHECK(member_check_S({W("xyx")}, monoid_sat(s), 5).verdict == Truth::True);
  CHECK(member_check_S({W("xyx")}, f_sat, 5).verdict == Truth::False);
  CHECK(member_check_S({W("x")}, sl_sat, 3).verdict == Truth::False);
  CHECK_FALSE(member_check_S({W("xyx")}, f_sat, 5).note.empty());
}

TEST_CASE("isoterm agrees with the linear rule for F and Q") {
  oracle::Rng rng(23);
  auto q_sat = [](const Identity& id) { return truth_of(criterion_Q(id).holds); };
  for (int trial = 0; trial < 60; ++trial) {
    Word w = W(oracle::random_word(rng, "xyz", 4, 1));
    CAPTURE(w.str());
    auto exact = isoterm_linear_rule(w).verdict;
    CHECK(is_isoterm(w, f_sat, w.size() + 1).verdict == exact);
    CHECK(is_isoterm(w, q_sat, w.size() + 1).verdict == exact);
  }
}

TEST_CASE("random S(W) structure against factor enumeration") {
  oracle::Rng rng(29);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<std::string> ws;
    std::size_t n = 1 + rng() % 3;
    for (std::size_t i = 0; i < n; ++i) ws.push_back(oracle::random_word(rng, "xyzt", 6, 1));
    std::vector<Word> W_;
    for (const auto& s : ws) W_.push_back(W(s));
    auto s = build_S(W_);
    auto f = oracle::factor_set(ws);
    CHECK(s.base.size() == f.size() + 1);
    CHECK(validate(s.base).ok);
    CHECK(is_aperiodic(s.base));
    CHECK(idempotents_commute(s.base));
    for (Elem a = 0; a < s.base.size(); ++a)
      for (Elem b = 0; b < s.base.size(); ++b) {
        if (a == s.zero || b == s.zero) {
          CHECK(s.base.mul(a, b) == s.zero);
          continue;
        }
        std::string uv = s.elem_words[a].plain() + s.elem_words[b].plain();
        if (f.contains(uv))
          CHECK(s.elem_words[s.base.mul(a, b)].plain() == uv);
        else
          CHECK(s.base.mul(a, b) == s.zero);
      }
    // embedding into a larger W
    auto bigger = W_;
    bigger.push_back(W(oracle::random_word(rng, "xyzt", 6, 1)));
    auto s2 = build_S(bigger);
    for (Elem a = 0; a < s.base.size(); ++a)
      if (a != s.zero) CHECK(s2.element_of(s.elem_words[a]).has_value());
  }
}
