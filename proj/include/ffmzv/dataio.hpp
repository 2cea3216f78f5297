#pragma once

#include <array>
#include <map>
#include <string>

#include "ffunction.hpp"

namespace ffmzv {

// Resolution order for the data directory: FFMZV_DATA environment
// variable, then the compiled-in source-tree default.
std::string data_dir();

// Bivariate polynomial as a term map keyed by (x, y, X, Y) exponents.
using TermMap = std::map<std::array<int, 4>, uint8_t>;

// Parse the plain-text polynomial syntax: terms like c*x^i*y^j*X^k*Y^l
// joined by + or -, with parenthesized groups and powers, coefficients in
// 0,1,2,w per q (w only for q = 4).
TermMap parse_bivar(Gf f, const std::string& expr);

FF parse_ff(const CurveSpec& s, const std::string& num_expr, const std::string& den_expr,
            int off = 0);

// One named function per file, header lines case:, name:, num:, den:.
struct FFData {
    std::string curve, name;
    FF fun;
};
FFData load_ffunction_file(const std::string& path);

// CurveSpec from a JSON config; the argument may be a file path or a JSON
// literal.  Loaded specs are interned so the returned reference is stable.
const CurveSpec& load_curve_spec(const std::string& path_or_json);

}  // namespace ffmzv
