#include "monoidvar/congruence.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "monoidvar/derivation.hpp"

namespace monoidvar {

namespace {

std::string letter_str(Letter a) { return std::string(1, a.display()); }

}  // namespace

CriterionResult criterion_F(const Identity& id) {
  if (id.trivial()) return {true, "trivial identity"};
  auto cu = letter_classes(id.lhs), cv = letter_classes(id.rhs);
  if (cu.simple != cv.simple)
    return {false, "simple letters differ: " + cu.simple.str() + " vs " +
                       cv.simple.str()};
  if (cu.multiple != cv.multiple)
    return {false, "multiple letters differ: " + cu.multiple.str() + " vs " +
                       cv.multiple.str()};
  if (decompose(id.lhs).simple != decompose(id.rhs).simple)
    return {false, "simple letters occur in different orders"};
  for (Letter x : content(id.lhs).letters()) {
    std::size_t hu = h_divider(id.lhs, x, 1), hv = h_divider(id.rhs, x, 1);
    if (hu != hv)
      return {false, "h1 of " + letter_str(x) + " differs: divider " +
                         std::to_string(hu) + " vs " + std::to_string(hv)};
    if (cu.multiple.contains(x)) {
      hu = h_divider(id.lhs, x, 2);
      hv = h_divider(id.rhs, x, 2);
      if (hu != hv)
        return {false, "h2 of " + letter_str(x) + " differs: divider " +
                           std::to_string(hu) + " vs " + std::to_string(hv)};
    }
  }
  return {true, "F-criterion: letters, dividers and h1/h2 agree"};
}

CriterionResult criterion_Q(const Identity& id) {
  if (id.trivial()) return {true, "trivial identity"};
  auto a = try_align_blocks(id);
  if (!a) return {false, "Q-criterion: divider sequences differ"};
  for (std::size_t i = 0; i < a->lhs_blocks.size(); ++i) {
    auto cu = content(a->lhs_blocks[i]), cv = content(a->rhs_blocks[i]);
    if (cu != cv)
      return {false, "Q-criterion: block content mismatch after divider " +
                         std::to_string(i) + ": " + cu.str() + " vs " +
                         cv.str()};
  }
  return {true, "Q-criterion: block contents agree"};
}

CriterionResult criterion_commutative_aperiodic(const Identity& id,
                                                std::size_t n) {
  if (n == 0) throw PreconditionError("n must be at least 1");
  for (Letter x : (content(id.lhs) | content(id.rhs)).letters()) {
    std::size_t a = occurrences(id.lhs, x), b = occurrences(id.rhs, x);
    if (a != b && (a < n || b < n))
      return {false, "occurrences of " + letter_str(x) + ": " +
                         std::to_string(a) + " vs " + std::to_string(b) +
                         " (threshold " + std::to_string(n) + ")"};
  }
  return {true, "occurrence counts agree up to threshold " + std::to_string(n)};
}

CriterionResult criterion_SL(const Identity& id) {
  auto cu = content(id.lhs), cv = content(id.rhs);
  if (cu == cv) return {true, "contents agree"};
  return {false, "contents differ: " + cu.str() + " vs " + cv.str()};
}

CriterionResult criterion_trivial(const Identity&) {
  return {true, "every identity holds in the trivial variety"};
}

std::vector<Letter> oracle_alphabet(std::size_t k) {
  static const std::string order = "xyzabcdefghijklmnopqrstuvw";
  if (k > order.size()) throw PreconditionError("too many oracle letters");
  std::vector<Letter> out;
  for (std::size_t i = 0; i < k; ++i) out.push_back(named(order[i]));
  return out;
}

std::size_t BoundedCongruence::index_of(const Word& w) const {
  if (w.size() > L_)
    throw PreconditionError("word " + w.str() + " longer than bound " +
                            std::to_string(L_));
  // shortlex rank: all shorter words first, then base-k digits
  std::size_t offset = 0, pow = 1;
  for (std::size_t len = 0; len < w.size(); ++len) {
    offset += pow;
    pow *= k_;
  }
  std::size_t rank = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    auto it = std::find(alphabet_.begin(), alphabet_.end(), w[i]);
    if (it == alphabet_.end())
      throw PreconditionError(std::string("letter ") + w[i].display() +
                              " outside the oracle alphabet");
    rank = rank * k_ + static_cast<std::size_t>(it - alphabet_.begin());
  }
  return offset + rank;
}

Word BoundedCongruence::representative(const Word& w) const {
  return words_[rep_[index_of(w)]];
}

bool BoundedCongruence::same_class(const Word& u, const Word& v) const {
  return rep_[index_of(u)] == rep_[index_of(v)];
}

std::size_t BoundedCongruence::class_count() const {
  std::size_t c = 0;
  for (std::size_t i = 0; i < rep_.size(); ++i)
    if (rep_[i] == i) ++c;
  return c;
}

std::vector<std::vector<Word>> BoundedCongruence::classes() const {
  std::map<std::size_t, std::vector<Word>> by_rep;
  for (std::size_t i = 0; i < words_.size(); ++i)
    by_rep[rep_[i]].push_back(words_[i]);
  std::vector<std::vector<Word>> out;
  for (auto& [r, ws] : by_rep) out.push_back(std::move(ws));
  return out;
}

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  std::size_t find(std::size_t a) {
    while (parent[a] != a) {
      parent[a] = parent[parent[a]];
      a = parent[a];
    }
    return a;
  }
  // keeps the smaller index as root, which is the shortlex-least word
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent[b] = a;
    return true;
  }
};

}  // namespace

BoundedCongruence saturate(const IdentitySystem& sigma, std::size_t k,
                           std::size_t L, bool allow_empty) {
  if (k == 0) throw PreconditionError("need at least one letter");
  double total = 0;
  for (std::size_t len = 0; len <= L; ++len)
    total += std::pow(static_cast<double>(k), static_cast<double>(len));
  if (total > static_cast<double>(kSaturateWordCap))
    throw PreconditionError("saturation would enumerate " +
                            std::to_string(static_cast<long long>(total)) +
                            " words, cap is " +
                            std::to_string(kSaturateWordCap));
  BoundedCongruence bc;
  bc.sigma_ = sigma;
  bc.k_ = k;
  bc.L_ = L;
  bc.alphabet_ = oracle_alphabet(k);
  bc.words_.push_back(Word{});
  for (std::size_t len = 1; len <= L; ++len) {
    std::vector<std::size_t> digits(len, 0);
    while (true) {
      Word w;
      for (auto d : digits) w.push_back(bc.alphabet_[d]);
      bc.words_.push_back(std::move(w));
      std::size_t i = len;
      while (i > 0 && ++digits[i - 1] == k) digits[--i] = 0;
      if (i == 0) break;
    }
  }
  const auto rules = sigma.expand();
  UnionFind uf(bc.words_.size());
  bool changed = true;
  while (changed) {
    changed = false;
    ++bc.passes_;
    for (std::size_t i = 0; i < bc.words_.size(); ++i)
      for (const auto& n : neighbors(bc.words_[i], rules, L, allow_empty))
        if (uf.unite(i, bc.index_of(n.target))) changed = true;
  }
  bc.rep_.resize(bc.words_.size());
  for (std::size_t i = 0; i < bc.words_.size(); ++i) bc.rep_[i] = uf.find(i);
  return bc;
}

Truth oracle_holds(const BoundedCongruence& bc, const Identity& id) {
  return bc.same_class(id.lhs, id.rhs) ? Truth::True : Truth::Unknown;
}

}  // namespace monoidvar
