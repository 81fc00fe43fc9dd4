#pragma once

#include <string>
#include <vector>

#include "monoidvar/derivation.hpp"
#include "monoidvar/families.hpp"

namespace monoidvar {

/// A stored derivation: claim.lhs rewrites to claim.rhs under sigma.
struct ReplayChain {
  std::string name;
  std::string group;
  Identity claim;
  IdentitySystem sigma;
  DerivationTrace trace;
  std::string build_error;  // set when the chain could not be constructed
};

struct ReplayOutcome {
  std::string name;
  std::string group;
  bool ok = false;
  std::string reason;
  std::size_t steps = 0;
};

/// Every chain, in a fixed order.
std::vector<ReplayChain> replay_library();
ReplayOutcome replay(const ReplayChain& c);
std::vector<ReplayOutcome> replay_all(const std::string& group_filter = {});

}  // namespace monoidvar
