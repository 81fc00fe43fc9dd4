#pragma once

#include <string>
#include <vector>

#include "monoidvar/families.hpp"
#include "monoidvar/truth.hpp"
#include "monoidvar/word.hpp"

namespace monoidvar {

/// Outcome of an exact word-problem criterion with a one-line reason.
struct CriterionResult {
  bool holds = false;
  std::string reason;
};

/// F: same simple and multiple letters, same dividers, and equal first and
/// second occurrence dividers h1, h2 for every letter.
CriterionResult criterion_F(const Identity& id);
/// Q: same dividers and equal block contents.
CriterionResult criterion_Q(const Identity& id);
/// var{x^n = x^(n+1), xy = yx}: per-letter counts equal or both >= n.
CriterionResult criterion_commutative_aperiodic(const Identity& id, std::size_t n);
CriterionResult criterion_SL(const Identity& id);
CriterionResult criterion_trivial(const Identity& id);

inline bool word_problem_F(const Identity& id) { return criterion_F(id).holds; }
inline bool word_problem_Q(const Identity& id) { return criterion_Q(id).holds; }
inline bool word_problem_commutative_aperiodic(const Identity& id, std::size_t n) {
  return criterion_commutative_aperiodic(id, n).holds;
}

/// Union-find closure of one-step rewriting on all words of length <= L over
/// the first k letters of "xyzabc...".
class BoundedCongruence {
 public:
  const IdentitySystem& system() const { return sigma_; }
  std::size_t letters() const { return k_; }
  std::size_t length_bound() const { return L_; }
  const std::vector<Letter>& alphabet() const { return alphabet_; }
  std::size_t word_count() const { return words_.size(); }
  std::size_t class_count() const;
  std::size_t passes() const { return passes_; }

  /// Index of w in the enumeration; throws PreconditionError when w is
  /// outside the alphabet or too long.
  std::size_t index_of(const Word& w) const;
  /// Shortest, then shortlex-least, word of the class of w.
  Word representative(const Word& w) const;
  bool same_class(const Word& u, const Word& v) const;
  /// Classes as lists of words, each sorted, ordered by representative.
  std::vector<std::vector<Word>> classes() const;

  friend BoundedCongruence saturate(const IdentitySystem& sigma, std::size_t k,
                                    std::size_t L, bool allow_empty);

 private:
  IdentitySystem sigma_;
  std::size_t k_ = 0, L_ = 0, passes_ = 0;
  std::vector<Letter> alphabet_;
  std::vector<Word> words_;
  std::vector<std::size_t> rep_;  // canonical representative index per word
};

inline constexpr std::size_t kSaturateWordCap = 10'000'000;

/// Throws PreconditionError when more than kSaturateWordCap words would be
/// enumerated.
BoundedCongruence saturate(const IdentitySystem& sigma, std::size_t k,
                           std::size_t L, bool allow_empty = true);

/// Holds when both sides fall in one class, Unknown otherwise.
Truth oracle_holds(const BoundedCongruence& bc, const Identity& id);

/// The letters x, y, z, a, b, c, ... used by the oracle.
std::vector<Letter> oracle_alphabet(std::size_t k);

}  // namespace monoidvar
