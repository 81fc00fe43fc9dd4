#pragma once

// Independent reference implementations for the tests. They work on plain
// strings (one character per letter) and share no code with the library.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "monoidvar/finite_monoid.hpp"
#include "monoidvar/word.hpp"

namespace oracle {

inline std::map<char, int> counts(const std::string& w) {
  std::map<char, int> c;
  for (char ch : w) ++c[ch];
  return c;
}

inline std::string sorted_letters(const std::string& w, bool simple) {
  std::string out;
  for (auto [ch, k] : counts(w))
    if ((k == 1) == simple) out += ch;
  return out;
}

/// Dividers and blocks by direct scan.
struct Split {
  std::string dividers;
  std::vector<std::string> blocks;
};

inline Split split(const std::string& w) {
  auto c = counts(w);
  Split s;
  s.blocks.emplace_back();
  for (char ch : w) {
    if (c[ch] == 1) {
      s.dividers += ch;
      s.blocks.emplace_back();
    } else {
      s.blocks.back() += ch;
    }
  }
  return s;
}

/// Number of simple letters strictly before the i-th occurrence of x.
inline std::size_t h(const std::string& w, char x, std::size_t i) {
  auto c = counts(w);
  std::size_t seen = 0, simple_before = 0;
  for (char ch : w) {
    if (ch == x && ++seen == i) return simple_before;
    if (c[ch] == 1) ++simple_before;
  }
  return SIZE_MAX;
}

inline bool i_free(const std::string& w, std::size_t i) {
  for (std::size_t p = 0; p < w.size(); ++p)
    for (std::size_t len = 1; p + len * i <= w.size(); ++len) {
      bool rep = true;
      for (std::size_t r = 1; r < i && rep; ++r)
        rep = w.compare(p + r * len, len, w, p, len) == 0;
      if (rep) return false;
    }
  return true;
}

inline std::set<std::string> factor_set(const std::vector<std::string>& W) {
  std::set<std::string> f{""};
  for (const auto& w : W)
    for (std::size_t p = 0; p < w.size(); ++p)
      for (std::size_t len = 1; p + len <= w.size(); ++len) f.insert(w.substr(p, len));
  return f;
}

/// Set of positions of a letter's first two occurrences relative to the
/// simple letters; the F-criterion from its definition.
inline bool F_holds(const std::string& u, const std::string& v) {
  if (u == v) return true;
  if (sorted_letters(u, true) != sorted_letters(v, true)) return false;
  if (sorted_letters(u, false) != sorted_letters(v, false)) return false;
  if (split(u).dividers != split(v).dividers) return false;
  for (auto [x, k] : counts(u)) {
    if (h(u, x, 1) != h(v, x, 1)) return false;
    if (k > 1 && h(u, x, 2) != h(v, x, 2)) return false;
  }
  return true;
}

/// Same dividers and equal block contents.
inline bool Q_holds(const std::string& u, const std::string& v) {
  if (u == v) return true;
  auto su = split(u), sv = split(v);
  if (su.dividers != sv.dividers) return false;
  for (std::size_t i = 0; i < su.blocks.size(); ++i) {
    std::set<char> a(su.blocks[i].begin(), su.blocks[i].end());
    std::set<char> b(sv.blocks[i].begin(), sv.blocks[i].end());
    if (a != b) return false;
  }
  return true;
}

/// Brute force over every assignment, without pruning.
inline bool monoid_holds(const monoidvar::FiniteMonoid& m, const std::string& u,
                         const std::string& v) {
  std::string letters;
  for (char ch : u + v)
    if (letters.find(ch) == std::string::npos) letters += ch;
  std::vector<monoidvar::Elem> val(letters.size(), 0);
  auto eval = [&](const std::string& w) {
    monoidvar::Elem e = m.identity();
    for (char ch : w) e = m.mul(e, val[letters.find(ch)]);
    return e;
  };
  while (true) {
    if (eval(u) != eval(v)) return false;
    std::size_t i = 0;
    while (i < val.size() && ++val[i] == m.size()) val[i++] = 0;
    if (i == val.size()) return true;
  }
}

// --- generators -----------------------------------------------------------

using Rng = std::mt19937;

inline std::string random_word(Rng& rng, const std::string& alphabet,
                               std::size_t max_len, std::size_t min_len = 0) {
  std::uniform_int_distribution<std::size_t> len(min_len, max_len);
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  std::string w;
  for (std::size_t n = len(rng); n > 0; --n) w += alphabet[pick(rng)];
  return w;
}

inline monoidvar::Word W(const std::string& s) {
  return s.empty() ? monoidvar::Word{} : monoidvar::Word::parse(s);
}

inline monoidvar::Identity Id(const std::string& u, const std::string& v) {
  return {W(u), W(v)};
}

/// All words over alphabet with length <= n, shortlex.
inline std::vector<std::string> all_words(const std::string& alphabet, std::size_t n) {
  std::vector<std::string> out{""};
  std::vector<std::string> layer{""};
  for (std::size_t l = 1; l <= n; ++l) {
    std::vector<std::string> next;
    for (const auto& w : layer)
      for (char ch : alphabet) next.push_back(w + ch);
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

}  // namespace oracle
