#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "monoidvar/word.hpp"

namespace monoidvar {

/// Parametric identity families. Letter conventions: x, y are ordinary; the
/// i-th t-letter is band(i) (printed 'A' + i); e_i is x for odd i and y for
/// even i.
///
///   alpha(n)     xy prod_{i=1}^{n+1} t_i e_i = yx prod_{i=1}^{n+1} t_i e_i
///   beta(n)      yx^2 prod_{i=2}^{n+1} t_i e_i = xyx prod_{i=2}^{n+1} t_i e_i
///   gamma(n)     x^2y prod_{i=1}^{n+1} t_i e_i = xyx prod_{i=1}^{n+1} t_i e_i
///   gammap(n)    x^2y prod_{i=2}^{n+1} t_i e_i = xyx prod_{i=2}^{n+1} t_i e_i
///   delta(k,n)   xy prod_{i=1}^{k+1} t_i e_i^n = yx prod_{i=1}^{k+1} t_i e_i^n
///   kappa(n,j)   prod_{i=0}^{n} t_i x = same with t_j x^2 in place of t_j x
///   power(n)     x^n = x^{n+1}
///   powcomm(n)   x^n y^n = y^n x^n
///   xyxn(n)      xyx^n = x^n y x^n
///   insert(n)    x^n yz x^n = x^n yxz x^n
///   collapse(n)  x^n y x^n z x^n = x^n yz x^n
///   delete(n)    x prod(t_i x) yz x prod(h_i x) = x prod(t_i x) yxz x prod(h_i x)
///                with t_i = band(i), h_i = band(n+i), i = 1..n
///   jperm(n,r)   x z_{p1}..z_{pn} x prod t_i z_i = x^2 z_{p1}..z_{pn} prod t_i z_i
///                with z_i = 'a'+i-1 and p the r-th permutation of 1..n in
///                lexicographic order
struct FamilyInfo {
  std::string_view name;
  unsigned arity;     // 1 or 2
  unsigned min_first;
};

const std::vector<FamilyInfo>& family_catalog();
const FamilyInfo* find_family(std::string_view name);

/// Legal range of the second parameter given the first (kappa: 0..n,
/// jperm: 0..n!-1, delta: 1..).
std::pair<unsigned, unsigned> second_param_range(std::string_view name,
                                                 unsigned first,
                                                 unsigned declared_hi);

/// Throws PreconditionError when the parameters are out of range.
Identity family(std::string_view name, unsigned p, unsigned q = 0);

/// e_i
Letter e_letter(std::size_t i);

/// Parameter range of one family in a system. The second range applies to
/// two-parameter families; for kappa and jperm it defaults to everything
/// legal for the first parameter.
struct FamilyRange {
  std::string name;
  unsigned lo = 1;
  unsigned hi = 1;
  std::optional<std::pair<unsigned, unsigned>> second;
  bool dual = false;

  std::string str() const;
  /// `name[lo..hi]` or `name[lo..hi;lo2..hi2]`, optional `dual-` prefix.
  static FamilyRange parse(std::string_view text);
};

std::vector<Identity> family_instances(const FamilyRange& r);

struct IdentitySystem {
  std::vector<Identity> fixed;
  std::vector<FamilyRange> families;

  IdentitySystem() = default;
  IdentitySystem(std::vector<Identity> f, std::vector<FamilyRange> fam = {})
      : fixed(std::move(f)), families(std::move(fam)) {}

  /// Fixed identities followed by every family instance in range.
  std::vector<Identity> expand() const;
  bool admits(const Identity& id) const;
  IdentitySystem dual() const;
  std::string str() const;
};

IdentitySystem dual_system(const IdentitySystem& s);

/// System file: one identity per line as `[name:] u = v`, or
/// `family name[lo..hi]`; `#` starts a comment.
IdentitySystem parse_system(std::string_view text);
IdentitySystem read_system_file(const std::string& path);

}  // namespace monoidvar
