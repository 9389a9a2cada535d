#pragma once

#include "fareybary/rational.hpp"

namespace fareybary {

// Classical ?(x) on [0,1] by mediant bisection: exact when x is hit as a
// mediant within `depth` steps, otherwise the midpoint of the final
// dyadic image interval (within 2^-depth of the limit).
Rat minkowski_q(const Rat& x, long depth);

}  // namespace fareybary
