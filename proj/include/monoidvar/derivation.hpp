#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "monoidvar/families.hpp"
#include "monoidvar/word.hpp"

namespace monoidvar {

enum class Direction { Forward, Backward };

/// One elementary deduction: source = a xi(from) b, target = a xi(to) b,
/// where (from, to) is (lhs, rhs) for Forward and (rhs, lhs) for Backward.
struct RewriteStep {
  Identity identity;
  Direction direction = Direction::Forward;
  Word left;
  Word right;
  Substitution xi;

  const Word& from_side() const {
    return direction == Direction::Forward ? identity.lhs : identity.rhs;
  }
  const Word& to_side() const {
    return direction == Direction::Forward ? identity.rhs : identity.lhs;
  }
  Word source() const { return left + xi.apply(from_side()) + right; }
  Word target() const { return left + xi.apply(to_side()) + right; }
  RewriteStep reversed() const;
  RewriteStep dual() const;
  /// `<dir> <identity> a=<word> b=<word> xi={x:word,...}`
  std::string str() const;
};

class StepError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Throws StepError when source is not a xi(from) b.
Word apply_step(const Word& source, const RewriteStep& step);

struct DerivationTrace {
  Word start;
  std::vector<RewriteStep> steps;

  /// Final word; throws StepError when the chain is broken.
  Word end() const;
  std::string str() const;
};

DerivationTrace reverse_trace(const DerivationTrace& t);
DerivationTrace dual_trace(const DerivationTrace& t);
/// a followed by b; b must start where a ends.
DerivationTrace concat(const DerivationTrace& a, const DerivationTrace& b);
/// Image of a derivation of s = t under xi, inside the context a . b: a
/// derivation of a xi(s) b = a xi(t) b using the same identities.
DerivationTrace lift_trace(const DerivationTrace& t, const Substitution& xi,
                           const Word& a = {}, const Word& b = {});

struct TraceCheck {
  bool ok = true;
  std::optional<std::size_t> failing_step;
  std::string reason;
  Word end;
};

/// Replays every step, checks chaining and that each identity is admitted by
/// the system (as written or with sides swapped).
TraceCheck verify_trace(const DerivationTrace& t, const IdentitySystem& sigma);

struct Neighbor {
  Word target;
  RewriteStep step;
};

/// All one-step rewrites of w under rules, both directions, with result
/// length at most len_cap. Letters of the identity bind factors of w
/// (possibly empty when allow_empty); letters only on the target side map to
/// the empty word. Sorted shortlex by target, one entry per target (the first
/// one generated).
std::vector<Neighbor> neighbors(const Word& w, const std::vector<Identity>& rules,
                                std::size_t len_cap, bool allow_empty = true);

struct SearchBudget {
  std::size_t len_cap = 0;  // 0: max(|u|,|v|) + 2
  std::size_t max_states = 200000;
  bool allow_empty = true;
};

enum class SearchOutcome { Found, Exhausted, BudgetHit };

struct DeriveResult {
  std::optional<DerivationTrace> trace;
  SearchOutcome outcome = SearchOutcome::Exhausted;
  std::size_t states = 0;
  std::size_t len_cap = 0;
  bool found() const { return trace.has_value(); }
};

/// Breadth-first proof search with a neighbor cache. Each level is expanded
/// in shortlex order, so traces are reproducible.
class Deriver {
 public:
  Deriver(IdentitySystem sigma, SearchBudget budget = {});

  const IdentitySystem& system() const { return sigma_; }
  const std::vector<Identity>& rules() const { return rules_; }
  const SearchBudget& budget() const { return budget_; }

  const std::vector<Neighbor>& neighbors_of(const Word& w, std::size_t len_cap);
  DeriveResult derive(const Word& u, const Word& v);
  DeriveResult derive(const Word& u, const Word& v, const SearchBudget& b);

  /// Every word reachable from u within the budget.
  std::vector<Word> component(const Word& u, std::size_t len_cap,
                              std::size_t max_states);

 private:
  IdentitySystem sigma_;
  std::vector<Identity> rules_;
  SearchBudget budget_;
  std::map<std::size_t, std::unordered_map<Word, std::vector<Neighbor>>> cache_;
};

DeriveResult derive(const Word& u, const Word& v, const IdentitySystem& sigma,
                    const SearchBudget& budget = {});

/// Incremental construction of hand-written chains. Every call verifies the
/// new step against the current word.
class TraceBuilder {
 public:
  explicit TraceBuilder(Word start) : current_(start) {
    trace_.start = std::move(start);
  }

  const Word& current() const { return current_; }
  const DerivationTrace& trace() const { return trace_; }

  TraceBuilder& step(RewriteStep s);
  /// Applies id in direction dir with substitution xi at the occurrence-th
  /// place where xi(from) occurs in the current word.
  TraceBuilder& apply(const Identity& id, Direction dir, const Substitution& xi,
                      std::size_t occurrence = 0);
  /// Applies id so that the current word becomes target, searching over
  /// single steps of that identity.
  TraceBuilder& apply_to(const Identity& id, const Word& target);
  TraceBuilder& append(const DerivationTrace& t);
  /// Bounded search for a sub-chain to target under the deriver's system.
  TraceBuilder& search_to(const Word& target, Deriver& d,
                          const SearchBudget& b = {});

 private:
  DerivationTrace trace_;
  Word current_;
};

std::string to_string(Direction d);

}  // namespace monoidvar
