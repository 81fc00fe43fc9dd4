#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "monoidvar/word.hpp"

namespace monoidvar {

using Elem = std::uint32_t;
using Assignment = std::map<Letter, Elem>;

/// Monoid given by its Cayley table. Row a, column b holds a*b.
class FiniteMonoid {
 public:
  FiniteMonoid() = default;
  FiniteMonoid(std::size_t size, std::vector<Elem> table, Elem identity,
               std::vector<std::string> labels = {});

  std::size_t size() const { return size_; }
  Elem identity() const { return identity_; }
  Elem mul(Elem a, Elem b) const { return table_[a * size_ + b]; }
  const std::vector<Elem>& table() const { return table_; }
  const std::string& label(Elem a) const { return labels_[a]; }
  const std::vector<std::string>& labels() const { return labels_; }
  /// Two-sided zero if one exists.
  std::optional<Elem> zero() const { return zero_; }

  friend bool operator==(const FiniteMonoid& a, const FiniteMonoid& b) {
    return a.size_ == b.size_ && a.table_ == b.table_ &&
           a.identity_ == b.identity_;
  }

 private:
  std::size_t size_ = 0;
  std::vector<Elem> table_;
  Elem identity_ = 0;
  std::vector<std::string> labels_;
  std::optional<Elem> zero_;
};

struct Validation {
  bool ok = true;
  std::string message;
  std::vector<Elem> witness;  // offending element(s)
};

Validation validate(const FiniteMonoid& m);

/// Throws PreconditionError on an unassigned letter.
Elem evaluate(const FiniteMonoid& m, const Word& w, const Assignment& a);

enum class SatStatus { Holds, Fails, BudgetExceeded };

struct SatResult {
  SatStatus status = SatStatus::Holds;
  std::optional<Assignment> counterexample;
  std::size_t leaves = 0;  // complete assignments actually evaluated

  bool holds() const { return status == SatStatus::Holds; }
  bool fails() const { return status == SatStatus::Fails; }
};

inline constexpr double kDefaultAssignmentCap = 1e9;

/// Exhaustive check over all assignments of content(lhs rhs). Refuses when
/// size^|alphabet| exceeds cap. Subtrees where both sides already contain a
/// zero product are skipped.
SatResult satisfies(const FiniteMonoid& m, const Identity& id,
                    double cap = kDefaultAssignmentCap);

bool is_aperiodic(const FiniteMonoid& m);
bool idempotents_commute(const FiniteMonoid& m);
std::vector<Elem> idempotents(const FiniteMonoid& m);

FiniteMonoid dual_monoid(const FiniteMonoid& m);

inline constexpr std::size_t kProductCap = 4096;
FiniteMonoid direct_product(const FiniteMonoid& a, const FiniteMonoid& b,
                            std::size_t cap = kProductCap);

// --- small named monoids -------------------------------------------------

FiniteMonoid trivial_monoid();
/// {1, e} with e*e = e.
FiniteMonoid semilattice2();
/// {1, a, ..., a^(index+period-1)} with a^(index+period) = a^index.
FiniteMonoid monogenic(std::size_t index, std::size_t period);
/// Left-zero band {e, f} with an identity adjoined.
FiniteMonoid left_zero_band_with_identity();

// --- table files ---------------------------------------------------------

/// Format: `n <size> <identity>` then size rows of size indices; lines
/// `# label <i> <name>` attach labels, other `#` lines are comments.
FiniteMonoid read_table(std::istream& in);
FiniteMonoid read_table_file(const std::string& path);
void write_table(std::ostream& out, const FiniteMonoid& m);

std::string format_assignment(const FiniteMonoid& m, const Assignment& a);

}  // namespace monoidvar
