#pragma once

#include <functional>
#include <optional>
#include <unordered_map>
#include <vector>

#include "monoidvar/finite_monoid.hpp"
#include "monoidvar/truth.hpp"
#include "monoidvar/word.hpp"

namespace monoidvar {

/// S(W): factors of the words in W (including the empty word) plus an
/// adjoined zero; uv is the product when it is again a factor, else zero.
struct ReesMonoid {
  FiniteMonoid base;
  std::vector<Word> elem_words;  // index -> factor; unused at the zero index
  Elem zero = 0;
  std::vector<Word> source;
  std::unordered_map<Word, Elem> index;

  std::optional<Elem> element_of(const Word& w) const {
    auto it = index.find(w);
    if (it == index.end()) return std::nullopt;
    return it->second;
  }
};

inline constexpr std::size_t kReesCap = 4096;

/// Elements are ordered shortlex with the empty word first and zero last.
ReesMonoid build_S(const std::vector<Word>& W, std::size_t cap = kReesCap);

/// All distinct factors of the words in W, empty word included.
std::vector<Word> factors(const std::vector<Word>& W);

using SatPredicate = std::function<Truth(const Identity&)>;

struct IsotermResult {
  Truth verdict = Truth::True;       // True means "no w' found up to max_len"
  std::optional<Word> witness;       // w' with w = w' holding
  std::size_t candidates = 0;
  bool exact = false;                // verdict is not bounded by max_len
};

/// Bounded search over w' != w with |w'| <= max_len and content inside
/// content(w). Any True from sat refutes; an Unknown without a refutation
/// makes the result Unknown.
IsotermResult is_isoterm(const Word& w, const SatPredicate& sat,
                         std::size_t max_len);

/// Exact answer for the varieties whose word problem depends only on letter
/// positions relative to simple letters (the F and Q criteria): a word is an
/// isoterm iff it is linear. The witness doubles an occurrence of a multiple
/// letter.
IsotermResult isoterm_linear_rule(const Word& w);

struct MembershipResult {
  Truth verdict = Truth::True;
  std::vector<IsotermResult> per_word;
  std::string note;
};

/// S(W) lies in V iff every word of W is an isoterm for V.
MembershipResult member_check_S(const std::vector<Word>& W,
                                const SatPredicate& sat, std::size_t max_len);

}  // namespace monoidvar
