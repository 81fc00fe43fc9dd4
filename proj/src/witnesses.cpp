#include <array>
#include <string>

#include "monoidvar/catalog.hpp"

namespace monoidvar {

namespace {

// Canonical forms over {a, b}: two or more b's is zero, no b keeps at most
// a^2, and a^i b a^j is kept exactly when i + j <= 1, otherwise it becomes A
// (i >= 1) or B (i = 0).
const std::array<std::string, 9> kReps = {"", "a", "aa", "b", "ab",
                                          "ba", "aab", "baa", "bb"};
const std::array<std::string, 9> kLabels = {"1", "a", "a^2", "b", "ab",
                                            "ba", "A", "B", "0"};

Elem classify(const std::string& w) {
  std::size_t bs = 0, i = 0, j = 0;
  for (char c : w) {
    if (c == 'b')
      ++bs;
    else if (bs == 0)
      ++i;
    else
      ++j;
  }
  if (bs >= 2) return 8;
  if (bs == 0) return static_cast<Elem>(std::min<std::size_t>(i, 2));
  if (i + j == 0) return 3;
  if (i + j == 1) return i == 1 ? 4 : 5;
  return i >= 1 ? 6 : 7;
}

}  // namespace

FiniteMonoid e_witness() {
  std::vector<Elem> table(81);
  for (Elem p = 0; p < 9; ++p)
    for (Elem q = 0; q < 9; ++q) table[p * 9 + q] = classify(kReps[p] + kReps[q]);
  return FiniteMonoid(9, std::move(table), 0,
                      std::vector<std::string>(kLabels.begin(), kLabels.end()));
}

NamedMonoid builtin_monoid(const std::string& name) {
  if (name == "trivial") return {name, trivial_monoid(), {}};
  if (name == "semilattice") return {name, semilattice2(), {}};
  if (name == "e-witness") return {name, e_witness(), {}};
  if (name.size() == 5 && name.starts_with("mono") && name[4] >= '1' &&
      name[4] <= '9')
    return {name, monogenic(static_cast<std::size_t>(name[4] - '0'), 1), {}};
  throw PreconditionError("unknown builtin monoid '" + name + "'");
}

}  // namespace monoidvar
