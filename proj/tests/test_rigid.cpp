#include <doctest.h>

#include "monoidvar/rigid.hpp"
#include "rigid_gen.hpp"

using namespace monoidvar;
using oracle::Id;
using oracle::W;

namespace {

bool all_verified(const RigidNormalization& r) {
  bool ok = r.lhs.check().ok && r.rhs.check().ok;
  for (const auto& c : r.equivalence) ok = ok && c.check().ok;
  return ok;
}

}  // namespace

TEST_CASE("deletion derivations verify") {
  for (unsigned n = 1; n <= 3; ++n)
    for (unsigned j = 0; j <= n; ++j) {
      CAPTURE(n);
      CAPTURE(j);
      auto t = deletion_derivation(n, j);
      auto d = family("delete", n);
      CHECK(t.start == d.lhs);
      CHECK(t.end() == d.rhs);
      IdentitySystem sigma({family("kappa", n, j), family("insert", n), family("power", n)});
      CHECK(verify_trace(t, sigma).ok);
    }
}

TEST_CASE("limit_word") {
  auto r = limit_word(W("AxBxCxDxEx"), 1, 0);
  CHECK(occurrences(r.word, named('x')) == 4);
  CHECK(r.deletions == 1);
  CHECK(r.trace.start == W("AxBxCxDxEx"));
  CHECK(r.trace.end() == r.word);
  CHECK(verify_trace(r.trace, r.sigma).ok);

  auto same = limit_word(W("xyx"), 1, 0);
  CHECK(same.word == W("xyx"));
  CHECK(same.trace.steps.empty());
  CHECK(same.deletions == 0);
}

TEST_CASE("limit_word on random words") {
  oracle::Rng rng(61);
  for (int trial = 0; trial < 60; ++trial) {
    unsigned n = 1 + rng() % 2;
    unsigned j = rng() % (n + 1);
    std::string s;
    std::size_t m = 4 + rng() % 8;
    for (std::size_t i = 0; i < m; ++i) {
      s += static_cast<char>('A' + i);
      s += oracle::random_word(rng, "xy", 2, 1);
    }
    CAPTURE(s);
    auto r = limit_word(W(s), n, j);
    CHECK(is_n_limited(r.word, 2 * n + 2));
    CHECK(r.trace.end() == r.word);
    CHECK(verify_trace(r.trace, r.sigma).ok);
  }
}

TEST_CASE("rigid shape recognition") {
  auto s = rigid_shape(Id("xAx", "x^2Ax"));
  REQUIRE(s);
  CHECK(s->x == named('x'));
  CHECK(s->m() == 1);
  CHECK(s->e == std::vector<std::size_t>{1, 1});
  CHECK(s->f == std::vector<std::size_t>{2, 1});
  CHECK(s->identity().same_sides(Id("xAx", "x^2Ax")));
  CHECK_FALSE(rigid_shape(Id("xyx", "yxy")));
  CHECK_FALSE(rigid_shape(Id("xAyB", "yAxB")));
}

TEST_CASE("normalize_rigid branches") {
  auto t = normalize_rigid(Id("xAxBx", "xAxBx"), 1, 0);
  CHECK(t.branch == "trivial");
  CHECK(t.output.same_sides(t.input));

  auto s = normalize_rigid(Id("xAxBx", "x^2AxBx"), 2, 0);
  CHECK(s.branch == "short");
  CHECK(s.output.same_sides(s.input));

  auto l = normalize_rigid(Id("xAxBCxDxEx", "xAxBxCxDxEx"), 1, 0);
  CHECK(l.branch == "limit");
  CHECK(all_verified(l));

  auto c = normalize_rigid(Id("xAxBxCxDxExFxGx", "xAx^2BxCxDx^2ExFxGx"), 2, 0);
  CHECK(c.branch == "collapse");
  CHECK(all_verified(c));
  REQUIRE(c.lhs_parts);
  CHECK(c.output.lhs.size() <= 200);

  CHECK_THROWS(normalize_rigid(Id("xAx^2Bx", "xAxBx"), 1, 0));  // not 2-free
  CHECK_THROWS(normalize_rigid(Id("xyx", "yxy"), 1, 0));
  CHECK_THROWS(normalize_rigid(Id("xABx", "xABx^2"), 2, 0));  // not efficient
}

TEST_CASE("collapse at n = 1 on its own") {
  for (std::size_t m = 3; m <= 12; ++m) {
    oracle::Rng rng(static_cast<unsigned>(m));
    auto s = oracle::random_rigid(rng, 1, m, false);
    CAPTURE(s.identity().str());
    if (s.m() <= 2) continue;
    auto r = kappa_collapse(s.identity(), 1, 0);
    CHECK(all_verified(r));
    REQUIRE(r.lhs_parts);
    for (const auto& p : {*r.lhs_parts, *r.rhs_parts}) {
      CHECK(p[0] <= 1);
      CHECK(p[1] == 0);
      CHECK(p[2] <= 2);
      CHECK(p[3] <= 2);
    }
  }
}

TEST_CASE("normalize_rigid on random inputs") {
  oracle::Rng rng(67);
  for (int trial = 0; trial < 100; ++trial) {
    unsigned n = 1 + trial % 2;
    unsigned j = rng() % (n + 1);
    auto s = oracle::random_rigid(rng, n, 12);
    auto id = s.identity();
    CAPTURE(id.str());
    CAPTURE(n);
    auto r = normalize_rigid(id, n, j);
    CHECK(all_verified(r));
    std::size_t cap = 50 * n * n;
    CHECK(r.output.lhs.size() <= cap);
    CHECK(r.output.rhs.size() <= cap);
    if (r.branch == "limit") {
      CHECK(r.output.lhs.size() <= 6 * n + 5);
      CHECK(r.output.rhs.size() <= 6 * n + 5);
    }
    if (r.branch == "short") CHECK(r.output.lhs.size() <= n + 2 * n * (n + 1));
    if (r.lhs_parts)
      for (const auto& p : {*r.lhs_parts, *r.rhs_parts}) {
        CHECK(p[0] <= n);
        CHECK(p[1] <= n * n - 1);
        CHECK(p[2] <= n + 1);
        CHECK(p[3] <= n * (n + 1));
      }
  }
}
