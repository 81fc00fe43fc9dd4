#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "monoidvar/derivation.hpp"
#include "monoidvar/families.hpp"

namespace monoidvar {

/// A trace together with the system it is claimed to be derivable from.
struct CertifiedTrace {
  std::string claim;
  IdentitySystem sigma;
  DerivationTrace trace;

  TraceCheck check() const { return verify_trace(trace, sigma); }
};

/// Derivation of delete(n) (left side to right side) from kappa(n, j) and
/// insert(n).
DerivationTrace deletion_derivation(unsigned n, unsigned j);

struct LimitResult {
  Word word;
  DerivationTrace trace;
  IdentitySystem sigma;  // kappa(n, j), insert(n), power(n)
  std::size_t deletions = 0;
};

/// Deletes the (n+2)-th occurrence of a letter occurring more than 2n+2
/// times, one occurrence per pass, until w is (2n+2)-limited. Each deletion
/// is a lifted copy of the reversed deletion derivation.
LimitResult limit_word(const Word& w, unsigned n, unsigned j);

/// x^{e0} t1 x^{e1} ... tm x^{em} = x^{f0} t1 x^{f1} ... tm x^{fm}
struct RigidShape {
  Letter x;
  std::vector<Letter> ts;
  std::vector<std::size_t> e, f;  // m + 1 exponents per side

  std::size_t m() const { return ts.size(); }
  Identity identity() const;
};

/// Recognizes the rigid shape. The repeated letter is the one whose removal
/// leaves the same linear word on both sides; ties go to the letter with
/// more occurrences, then the smaller id.
std::optional<RigidShape> rigid_shape(const Identity& id);

struct RigidNormalization {
  Identity input;
  Identity output;
  std::string branch;  // trivial, short, limit, collapse
  CertifiedTrace lhs;  // u = u1
  CertifiedTrace rhs;  // v = v1
  /// Both directions of the equivalence between u1 = v1 and the output.
  std::vector<CertifiedTrace> equivalence;
  /// collapse branch: x-prefix, head, collapsed middle, tail lengths.
  std::optional<std::array<std::size_t, 4>> lhs_parts, rhs_parts;
};

/// Shortens a rigid, efficient, (n+1)-free identity. Identities with m <= 2n
/// come back unchanged; a zero exponent selects the limit branch; otherwise
/// the middle blocks are raised to x^n with kappa(n, j) and collapsed.
/// Throws ShapeError or PreconditionError when the input does not qualify.
RigidNormalization normalize_rigid(const Identity& id, unsigned n, unsigned j);

/// The collapse branch on its own. Needs positive exponents, all <= n, and
/// m > 2n.
RigidNormalization kappa_collapse(const Identity& id, unsigned n, unsigned j);

}  // namespace monoidvar
