// Reachability, stability and k-cycle checks over fuzzy derivations.
// Every checker returns the least witness.
#pragma once

#include "gforge/fuzzy.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gforge {

struct Target {
  std::string var;
  Membership value;
};

// Least kappa <= eta with e_kappa(X_i) = A_i for all targets. Throws
// std::invalid_argument on an unknown or repeated variable.
std::optional<std::size_t> check_reachability(const RuleBase& b, const Derivation& d, const std::vector<Target>& targets);

// Least kappa < eta with e_kappa = e_{kappa+1}.
std::optional<std::size_t> check_stability(const Derivation& d);

// Least kappa with kappa + k <= eta and e_kappa = e_{kappa+k}. Throws
// std::invalid_argument for k = 0.
std::optional<std::size_t> find_k_cycle(const Derivation& d, std::size_t k);

struct EventualCycle {
  std::size_t prefix = 0;  // least mu
  std::size_t period = 0;  // least lambda >= 1 with e_mu = e_{mu+lambda}
};

// Iterates step until a state repeats. Throws std::runtime_error when more
// than max_states states are generated.
EventualCycle detect_eventual_cycle(const RuleBase& b, const FuzzyAssignment& e0, std::size_t max_states = 1000000);

}  // namespace gforge
