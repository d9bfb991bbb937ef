#pragma once

// Input language:
//
//   ring x y z;
//   variety x*z - y^2;        (optional, may be empty)
//   gens x^2, x^2 + x;
//   target x*y^3;             (optional, defaults to 0)
//
// Coefficients are integers or a/b; multiplication must be written with '*'.
// Identifiers starting with '_' are reserved. '#' starts a comment.

#include <string_view>

#include "divcert/hypotheses.hpp"

namespace divcert {

ProblemInstance parse_instance(std::string_view text, MonomialOrder order = MonomialOrder{},
                               InstanceOptions options = {});

/// A single polynomial over `ring`; the same grammar as above.
Polynomial parse_polynomial(std::string_view text, const RingPtr& ring);

}  // namespace divcert
