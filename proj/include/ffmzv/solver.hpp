#pragma once

#include "ffunction.hpp"
#include "linalg.hpp"

namespace ffmzv {

// Frobenius-difference equation for a polynomial ansatz
//   Z = sum_{k<=deg_x_plain} a_k X^k + Y sum_{m<=deg_x_y} b_m X^m
// over K, in one of the two shapes
//   Standard: Z^(1) - c Z = R
//   SumBelow: Z^(1) = c (Z + R)
struct DifferenceEquation {
    const CurveSpec* s = nullptr;
    FF c, r;
    enum Form { Standard, SumBelow } form = Standard;
    int deg_x_plain = 0;
    int deg_x_y = -1;  // -1 drops the Y block
};

struct SolveStats {
    int rows = 0;      // coefficient equations examined (even + odd rows)
    int unknowns = 0;
    int rank = 0;
};

struct SolveOutcome {
    enum Kind { Unique, Underdetermined, Inconsistent } kind = Inconsistent;
    FF z;  // only valid for Unique; satisfies the equation by construction
    std::vector<std::vector<KElem>> kernel;
    SolveStats stats;
};

// Clears denominators, eliminates Y^2 via the capital relation, equates
// the coefficients of X^n and Y X^m, and solves the exact linear system
// over K.  A unique solution is substituted back into the equation before
// it is returned.
SolveOutcome solve_difference(const DifferenceEquation& eq);

// The solver run an accumulation identity generates: the equation for
// Z = root^w * F, assembled from the twist quotient g (whose denominator
// is root) and the known side F in the F-frame.
DifferenceEquation accumulation_equation(const CurveSpec& s, const FF& g, const XPoly& root,
                                         int w, const FF& f_frame,
                                         DifferenceEquation::Form form, int deg_plain,
                                         int deg_y);

// Named replay of every reported difference system, checking
// unknown counts, row counts, uniqueness and agreement with the shipped
// expected solutions.  Returns human-readable failure lines (empty = pass).
struct ReplayResult {
    std::string system;
    SolveStats stats;
    bool unique = false;
    bool matches_expected = false;
    std::string note;
};
std::vector<ReplayResult> replay_difference_systems();

}  // namespace ffmzv
