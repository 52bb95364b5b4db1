// Normal form for the clausifier: no negation or Delta, constants folded.
#pragma once

#include "gforge/formula.hpp"

#include <optional>
#include <string>

namespace gforge {

// One postorder pass. The result is Goedel-equivalent to f, at most twice
// its size, free of ! and D, and either a constant or a formula whose
// subformulas satisfy the side conditions checked by normal_form_violation.
FormulaPtr simplify(const FormulaPtr& f);

// Describes the first subformula breaking the normal-form side conditions,
// or nullopt when f is a constant or in normal form.
std::optional<std::string> normal_form_violation(const FormulaPtr& f);

}  // namespace gforge
