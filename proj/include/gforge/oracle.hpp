// Satisfiability of ground order clausal theories and of small ground
// formulas over [0,1].
//
// The truth of every literal depends only on the order type of the atom
// values relative to the constants C*. The search therefore enumerates order
// types: each new atom either joins an existing value class or opens a fresh
// class inside one gap. Witnesses are reported on the grid made of C* plus
// n evenly spaced interior points per gap, n being the number of atoms.
#pragma once

#include "gforge/ground.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace gforge {

struct SatReport {
  bool sat = false;
  std::map<std::string, TruthValue> witness;  // grid value of every atom when sat
  std::uint64_t nodes = 0;                    // search nodes visited
};

// Order-type search with unit propagation over `a ~ known` literals.
SatReport solve(const GroundTheory& t);

// Grounds `s` (which must be ground already) and solves it.
SatReport ground_sat_oracle(const ClausalTheory& s);

// C* plus `interior` evenly spaced points in each open gap of C*.
std::vector<TruthValue> sat_grid(const std::vector<TruthValue>& constants, std::size_t interior);

// Exhaustive reference: tries every valuation of the atoms over
// sat_grid(t.constants, interior) and reports the first satisfying one in
// lexicographic order. The parallel variant returns the same witness.
SatReport enumerate_grid_serial(const GroundTheory& t, std::size_t interior);
SatReport enumerate_grid_parallel(const GroundTheory& t, std::size_t interior);

// Formula-level checks by exhaustive grid enumeration. Quantifiers and free
// variables range over `domain`; a formula holds when it has value 1 under
// every assignment of its free variables.
bool grid_satisfiable(const std::vector<FormulaPtr>& fs, const std::vector<TermPtr>& domain = {},
                      bool parallel = true);
bool grid_entails(const std::vector<FormulaPtr>& premises, const FormulaPtr& goal,
                  const std::vector<TermPtr>& domain = {}, bool parallel = true);

}  // namespace gforge
