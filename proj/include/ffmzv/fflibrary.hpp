#pragma once

#include <map>
#include <string>

#include "ffunction.hpp"

namespace ffmzv {

// The named interpolation functions of one positive-genus ring: the small
// ones built from their defining formulas, the large numerators loaded
// from the data files under data/ffunctions/<case>/.
struct FFLibrary {
    const CurveSpec* s = nullptr;
    std::map<std::string, FF> fns;

    bool has(const std::string& name) const { return fns.count(name) != 0; }
    const FF& get(const std::string& name) const;
    std::vector<std::string> names() const;
};

// Loaded once per case and shared read-only afterwards.  Throws for the
// genus-zero specs.
const FFLibrary& builtin_ffunctions(const CurveSpec& spec);

// l_d, the reciprocal logarithm coefficients, as the product of the
// specializations of the twist quotient: l_d = l_1 * prod_{i=2..d} g(i)
// with l_0 = 1.  For the genus-1 rings l_1 = g(1) (equal to 1 in the
// characteristic-2 case); for the genus-2 ring g(1) sits below the data's
// floor and the base is pinned by the weight-one interpolation instead.
KElem ell_coefficient(const CurveSpec& spec, int d);

}  // namespace ffmzv
