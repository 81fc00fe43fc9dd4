#include "monoidvar/rees.hpp"

#include <algorithm>
#include <set>

namespace monoidvar {

std::vector<Word> factors(const std::vector<Word>& W) {
  std::set<Word> fs;
  fs.insert(Word{});
  for (const Word& w : W)
    for (std::size_t i = 0; i < w.size(); ++i)
      for (std::size_t len = 1; i + len <= w.size(); ++len)
        fs.insert(w.slice(i, len));
  return {fs.begin(), fs.end()};
}

ReesMonoid build_S(const std::vector<Word>& W, std::size_t cap) {
  ReesMonoid r;
  r.source = W;
  r.elem_words = factors(W);
  const std::size_t n = r.elem_words.size() + 1;
  if (n > cap)
    throw PreconditionError("S(W) would have " + std::to_string(n) +
                            " elements, cap is " + std::to_string(cap));
  r.zero = static_cast<Elem>(n - 1);
  for (Elem i = 0; i < r.elem_words.size(); ++i) r.index[r.elem_words[i]] = i;
  std::vector<Elem> table(n * n, r.zero);
  for (Elem a = 0; a + 1 < n; ++a)
    for (Elem b = 0; b + 1 < n; ++b) {
      auto it = r.index.find(r.elem_words[a] + r.elem_words[b]);
      if (it != r.index.end()) table[a * n + b] = it->second;
    }
  std::vector<std::string> labels;
  for (const Word& w : r.elem_words) labels.push_back(w.empty() ? "1" : w.plain());
  labels.push_back("0");
  r.base = FiniteMonoid(n, std::move(table), 0, std::move(labels));
  return r;
}

IsotermResult is_isoterm(const Word& w, const SatPredicate& sat,
                         std::size_t max_len) {
  if (max_len < w.size())
    throw PreconditionError("max_len must be at least |w|");
  IsotermResult res;
  const std::vector<Letter> alpha = content(w).letters();
  if (alpha.empty()) {
    res.exact = true;
    return res;
  }
  bool unknown = false;
  std::vector<std::size_t> digits;
  for (std::size_t len = 0; len <= max_len; ++len) {
    digits.assign(len, 0);
    while (true) {
      Word cand;
      for (std::size_t d : digits) cand.push_back(alpha[d]);
      if (cand != w) {
        ++res.candidates;
        Truth t = sat(Identity(w, cand));
        if (t == Truth::True) {
          res.verdict = Truth::False;
          res.witness = cand;
          return res;
        }
        if (t == Truth::Unknown) unknown = true;
      }
      std::size_t k = len;
      while (k > 0 && ++digits[k - 1] == alpha.size()) digits[--k] = 0;
      if (k == 0) break;
    }
  }
  res.verdict = unknown ? Truth::Unknown : Truth::True;
  return res;
}

IsotermResult isoterm_linear_rule(const Word& w) {
  IsotermResult res;
  res.exact = true;
  auto multiple = letter_classes(w).multiple;
  if (multiple.empty()) return res;
  for (std::size_t i = 0; i < w.size(); ++i)
    if (multiple.contains(w[i])) {
      Word cand = w.prefix(i + 1);
      cand.push_back(w[i]);
      cand.append(w.suffix_from(i + 1));
      res.verdict = Truth::False;
      res.witness = cand;
      break;
    }
  return res;
}

MembershipResult member_check_S(const std::vector<Word>& W,
                                const SatPredicate& sat, std::size_t max_len) {
  MembershipResult m;
  m.note = "S(W) in V iff every word of W is an isoterm for V";
  for (const Word& w : W) {
    m.per_word.push_back(is_isoterm(w, sat, std::max(max_len, w.size())));
    m.verdict = conj(m.verdict, m.per_word.back().verdict);
  }
  return m;
}

}  // namespace monoidvar
