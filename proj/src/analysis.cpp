#include "gforge/analysis.hpp"

#include <boost/container_hash/hash.hpp>

#include <set>
#include <stdexcept>
#include <unordered_map>

namespace gforge {

std::optional<std::size_t> check_reachability(const RuleBase& b, const Derivation& d, const std::vector<Target>& targets) {
  std::vector<std::pair<std::size_t, const Membership*>> idx;
  std::set<std::string> seen;
  for (const auto& t : targets) {
    if (!b.has_var(t.var)) throw std::invalid_argument("unknown variable " + t.var);
    if (!seen.insert(t.var).second) throw std::invalid_argument("variable " + t.var + " targeted twice");
    idx.emplace_back(b.var_index(t.var), &t.value);
  }
  for (std::size_t k = 0; k < d.states.size(); ++k) {
    bool all = true;
    for (const auto& [i, m] : idx)
      if (d.states[k][i] != *m) {
        all = false;
        break;
      }
    if (all) return k;
  }
  return std::nullopt;
}

std::optional<std::size_t> check_stability(const Derivation& d) { return find_k_cycle(d, 1); }

std::optional<std::size_t> find_k_cycle(const Derivation& d, std::size_t k) {
  if (k == 0) throw std::invalid_argument("cycle length must be at least 1");
  for (std::size_t i = 0; i + k < d.states.size(); ++i)
    if (d.states[i] == d.states[i + k]) return i;
  return std::nullopt;
}

namespace {

std::size_t fingerprint(const FuzzyAssignment& e) {
  std::size_t h = 0;
  for (const auto& m : e)
    for (const auto& v : m) {
      boost::hash_combine(h, v.num());
      boost::hash_combine(h, v.den());
    }
  return h;
}

}  // namespace

EventualCycle detect_eventual_cycle(const RuleBase& b, const FuzzyAssignment& e0, std::size_t max_states) {
  std::vector<FuzzyAssignment> states{e0};
  std::unordered_multimap<std::size_t, std::size_t> first_seen{{fingerprint(e0), 0}};
  for (;;) {
    if (states.size() >= max_states) throw std::runtime_error("no repeated state within the iteration bound");
    FuzzyAssignment next = step(b, states.back());
    const std::size_t h = fingerprint(next);
    auto [lo, hi] = first_seen.equal_range(h);
    for (auto it = lo; it != hi; ++it)
      if (states[it->second] == next) return {it->second, states.size() - it->second};
    first_seen.emplace(h, states.size());
    states.push_back(std::move(next));
  }
}

}  // namespace gforge
