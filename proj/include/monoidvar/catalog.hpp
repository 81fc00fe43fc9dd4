#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "monoidvar/congruence.hpp"
#include "monoidvar/derivation.hpp"
#include "monoidvar/finite_monoid.hpp"
#include "monoidvar/rees.hpp"
#include "monoidvar/truth.hpp"

namespace monoidvar {

enum class ExactProcedure { None, F, Q, CommutativeAperiodic, Trivial, SL };

std::string to_string(ExactProcedure p);

struct NamedMonoid {
  std::string name;  // e.g. "S(xyx)" or "e-witness"
  FiniteMonoid monoid;
  std::vector<Word> rees_words;  // non-empty when the monoid is some S(W)
};

struct VarietySpec {
  std::string name;
  std::string note;
  bool has_basis = false;
  IdentitySystem basis;
  ExactProcedure exact = ExactProcedure::None;
  std::size_t exact_n = 0;  // threshold for the commutative procedure
  /// var(generators) is the variety; satisfaction through them is exact.
  std::vector<NamedMonoid> generators;
  /// Finite monoids believed to lie in the variety; used only after their
  /// membership has been checked against the basis.
  std::vector<NamedMonoid> members;
  /// Varieties believed to be subvarieties; used only after inclusion has
  /// been verified.
  std::vector<std::string> contains;
  std::string dual_of;
  /// Refuter for identities xy prod t_i e_i^{k_i} = v whose right side leaves
  /// that shape: applies when the identity has at least 2 and at most this
  /// many t-letters (0 means any number).
  std::optional<unsigned> alpha_shape;
};

class Catalog {
 public:
  Catalog() = default;
  /// Parses the catalog text format (see builtin_catalog_text()).
  static Catalog parse(const std::string& text, const std::string& base_dir = ".");
  static Catalog load_file(const std::string& path);
  static const Catalog& builtin();

  bool has(const std::string& name) const { return specs_.contains(name); }
  const VarietySpec& get(const std::string& name) const;
  std::vector<std::string> names() const;
  void add(VarietySpec spec);

 private:
  std::map<std::string, VarietySpec> specs_;
  std::vector<std::string> order_;
};

const std::string& builtin_catalog_text();

/// Builtin finite monoids addressable by name from catalog files:
/// trivial, semilattice, mono2..mono4, e-witness.
NamedMonoid builtin_monoid(const std::string& name);
/// 9-element monoid in E that violates xyx = yx^2.
FiniteMonoid e_witness();

struct Verdict {
  Truth value = Truth::Unknown;
  std::string route;   // criterion, generators, member, subvariety, alpha-shape, derive, oracle, ...
  std::string detail;
  std::optional<DerivationTrace> trace;
  std::string monoid;  // name of the refuting monoid, if any
  std::optional<FiniteMonoid> witness_monoid;
  /// Deciding criterion (F, Q, SL, trivial, comm:<n>) when one was used;
  /// it applies to the dual identity when dualized is set.
  std::string criterion;
  bool dualized = false;
  std::optional<Assignment> counterexample;
  std::string counterexample_text;
};

struct CheckBudget {
  std::size_t len_cap = 0;        // 0: longer side + 2
  std::size_t max_states = 200000;
  std::size_t oracle_len = 0;     // 0 disables the oracle route
  double assignment_cap = kDefaultAssignmentCap;
  std::size_t isoterm_extra = 2;  // isoterm search up to |w| + this
};

struct InclusionResult {
  Truth value = Truth::Unknown;
  std::string detail;
  std::optional<Identity> witness_identity;  // basis identity that failed
  Verdict witness;                            // evidence for it
  std::size_t checked = 0;
};

struct ExclusionEntry {
  std::string variety;
  Truth contained = Truth::Unknown;  // variety <= V
  std::string route;
  std::string detail;
};

struct ExclusionReport {
  std::string target;
  std::size_t n = 0;
  std::vector<ExclusionEntry> entries;
  Truth cross_prediction = Truth::Unknown;  // True: all nine excluded
};

/// Evaluates satisfaction, inclusion and the containment lemmas against a
/// catalog. Results are memoized; the object is not thread-safe.
class Checker {
 public:
  explicit Checker(const Catalog& catalog, CheckBudget budget = {});

  const Catalog& catalog() const { return catalog_; }
  const CheckBudget& budget() const { return budget_; }

  Verdict satisfies(const std::string& variety, const Identity& id);
  /// V <= W: V satisfies every identity of W's basis (family instances in
  /// their declared ranges).
  InclusionResult includes(const std::string& v, const std::string& w);

  Verdict contains_F(const std::string& v, std::size_t n);
  Verdict contains_Q(const std::string& v, std::size_t n);
  /// P_{k+1} <= V
  Verdict contains_P(const std::string& v, std::size_t k, std::size_t n);

  ExclusionReport excludes_nine(const std::string& v, std::size_t n);

  /// Basis of a variety, dualized for dual-of entries.
  std::optional<IdentitySystem> basis_of(const std::string& v) const;
  /// Membership of a finite monoid in a variety with a basis.
  Truth member_verified(const std::string& v, const NamedMonoid& m);

  Deriver& deriver_for(const std::string& v);

 private:
  Verdict satisfies_impl(const std::string& v, const Identity& id, int depth);
  Verdict hypotheses(const std::string& v, std::size_t n);

  const Catalog& catalog_;
  CheckBudget budget_;
  std::map<std::pair<std::string, std::string>, Verdict> memo_;
  std::map<std::pair<std::string, std::string>, InclusionResult> incl_memo_;
  std::map<std::pair<std::string, std::string>, Truth> member_memo_;
  std::map<std::string, std::unique_ptr<Deriver>> derivers_;
  std::map<std::pair<std::string, std::size_t>,
           std::unique_ptr<BoundedCongruence>> oracles_;
  std::vector<std::pair<std::string, std::string>> in_progress_;
};

/// The nine varieties of the exclusion test, in report order.
const std::vector<std::string>& nine_varieties();

/// u = xy prod_{i=1}^r t_i e_i^{k_i} (up to renaming, r >= 2); returns r.
std::optional<std::size_t> alpha_shape_length(const Word& u);
/// v has the same shape as u with the same letters (exponents may differ).
bool same_alpha_shape(const Word& u, const Word& v);

}  // namespace monoidvar
