#pragma once

#include <optional>

#include "laurent.hpp"

namespace ffmzv {

// Rational reconstruction from a truncated Laurent series via extended
// Euclid on the reversed coefficient stream (the convergents are those of
// the continued-fraction expansion in F_q((1/x))).  Returns the canonical
// f/g iff some convergent with deg f + deg g <= precision - guard matches
// the series to its full precision; absence of one is a legitimate
// negative answer.
std::optional<RatFun> rational_reconstruct(const Laurent& s, int guard);

}  // namespace ffmzv
