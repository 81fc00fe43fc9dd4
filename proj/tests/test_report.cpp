#include <doctest.h>

#include "monoidvar/report.hpp"
#include "oracles.hpp"

using namespace monoidvar;
using oracle::Id;
using oracle::W;

TEST_CASE("decomposition report") {
  auto j = report::decomposition(W("xtyzxy"));
  CHECK(j["dividers"] == report::json::array({"t", "z"}));
  CHECK(j["blocks"] == report::json::array({"x", "y", "xy"}));
  CHECK(j["h"]["x"]["h2"] == 2);
  CHECK(j["one_dividers"] == "{x,y}");
}

TEST_CASE("reports are byte-identical across runs") {
  auto once = [] {
    std::string out;
    auto id = Id("x^2yzx^2", "x^2yxzx^2");
    out += report::dump(report::criterion(id, "Q", criterion_Q(id)));
    out += report::dump(report::criterion(id, "F", criterion_F(id)));
    IdentitySystem q({Identity::parse("xyx = xyx^2"), Identity::parse("x^2y^2 = y^2x^2"),
                      Identity::parse("xyx^2 = x^2yx^2")});
    SearchBudget b;
    b.len_cap = 10;
    out += report::dump(report::derive(id, derive(id.lhs, id.rhs, q, b)));
    out += report::dump(report::saturation(saturate(q, 2, 5), true));
    Checker c(Catalog::builtin());
    out += report::dump(report::exclusion(c.excludes_nine("Q", 2)));
    return out;
  };
  CHECK(once() == once());
}

TEST_CASE("rigid report records verification") {
  auto r = normalize_rigid(Id("xAxBxCxDxExFxGx", "xAx^2BxCxDx^2ExFxGx"), 2, 0);
  auto j = report::rigid(r);
  CHECK(j["branch"] == "collapse");
  CHECK(j["lhs_trace"]["verified"] == true);
  for (const auto& e : j["equivalence"]) CHECK(e["verified"] == true);
}
