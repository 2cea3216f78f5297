#pragma once

#include <optional>

#include "curve.hpp"

namespace ffmzv {

// Dense polynomial in the capital variable X with coefficients in K.
struct XPoly {
    const CurveSpec* s = nullptr;
    std::vector<KElem> c;

    XPoly() = default;
    explicit XPoly(const CurveSpec& spec) : s(&spec) {}
    XPoly(const CurveSpec& spec, std::vector<KElem> coeffs) : s(&spec), c(std::move(coeffs)) {
        trim();
    }

    static XPoly zero(const CurveSpec& spec) { return XPoly(spec); }
    static XPoly one(const CurveSpec& spec) { return constant(KElem::one_of(spec)); }
    static XPoly constant(KElem k);
    static XPoly monomial(KElem k, int e);

    void trim() {
        while (!c.empty() && c.back().is_zero()) c.pop_back();
    }
    bool is_zero() const { return c.empty(); }
    int deg() const { return int(c.size()) - 1; }
    const KElem& lc() const { return c.back(); }
    KElem coeff(int i) const {
        return (i >= 0 && i < int(c.size())) ? c[size_t(i)] : KElem::zero(*s);
    }

    bool operator==(const XPoly& o) const { return c == o.c; }

    XPoly operator-() const;
    friend XPoly operator+(const XPoly& a, const XPoly& b);
    friend XPoly operator-(const XPoly& a, const XPoly& b);
    friend XPoly operator*(const XPoly& a, const XPoly& b);
    XPoly scaled(const KElem& k) const;
    XPoly shifted(int e) const;
    XPoly monic() const;
    // substitute X -> X^m (exponent scale)
    XPoly exponent_scaled(int m) const;
    KElem eval(const KElem& v) const;

    std::string str() const;
};

std::pair<XPoly, XPoly> divmod(const XPoly& a, const XPoly& b);
XPoly gcd(XPoly a, XPoly b);  // monic over K

// Cleared, integral presentation of an F-function: numerator coefficients
// in A, denominator coefficients in F_q[x] (y-free), matching the shapes
// the explicit data files use.
struct FFDisplay {
    std::vector<RingElem> n0, n1;  // numerator = n0(X) + Y n1(X)
    std::vector<Poly> den;
};

// Weighted leading data of an F-function: the specialization at level d
// has degree alpha * q^(d') + beta asymptotically.
struct LeadingTerm {
    int alpha = kNegInf;
    int beta = 0;
    KElem coeff;
};

// Rational function in (x, y, X, Y) modulo both curve relations, carried
// in the canonical form (n0(X) + Y n1(X)) / den(X) with den monic in K[X],
// gcd(n0, n1, den) = 1, and Y eliminated via the capital relation.  The
// offset records the twist level of the capital variables: the data is a
// polynomial in (X^(q^off), Y^(q^off)), which for negative offsets keeps
// expressions like inverse twists polynomial.
struct FF {
    const CurveSpec* s = nullptr;
    int off = 0;
    XPoly n0, n1, den;

    FF() = default;

    static FF make(const CurveSpec& spec, int off, XPoly num0, XPoly num1, XPoly d);
    // force full gcd reduction (make() skips it above a size threshold)
    FF reduced() const;
    static FF zero(const CurveSpec& spec);
    static FF one(const CurveSpec& spec);
    static FF scalar(KElem k);
    static FF gen_X(const CurveSpec& spec);
    static FF gen_Y(const CurveSpec& spec);
    static FF little_x(const CurveSpec& spec);
    static FF little_y(const CurveSpec& spec);

    bool is_zero() const { return n0.is_zero() && n1.is_zero(); }
    const CurveSpec& spec() const { return *s; }

    // structural equality after aligning offsets
    bool operator==(const FF& o) const;

    FF operator-() const;
    friend FF operator+(const FF& a, const FF& b);
    friend FF operator-(const FF& a, const FF& b);
    friend FF operator*(const FF& a, const FF& b);
    friend FF operator/(const FF& a, const FF& b) { return a * b.inv(); }
    FF inv() const;
    FF pow(long e) const;

    // Frobenius twist: substitute the q^n-th powers of the capital
    // variables (offset bookkeeping only; negative n re-expresses the data
    // on lower-offset variables)
    FF twist(int n) const {
        FF r = *this;
        r.off += n;
        return r;
    }
    // rewrite the data on variables of offset (off - levels)
    FF expanded(int levels) const;
    // inverse of one expansion step, when the data lies in its image
    std::optional<FF> compressed() const;

    // substitute x^(q^d'), y^(q^d') for the capital variables,
    // d' = d + spec offset + off; throws std::domain_error below the floor
    KElem specialize(int d) const;
    bool specializable(int d) const;

    FFDisplay display() const;
    LeadingTerm leading_term() const;

    std::string str() const;
};

// leading-term comparison: degree differences and the coefficient ratio
struct LeadingRatio {
    int dalpha = 0;
    int dbeta = 0;
    KElem coeff;
};
LeadingRatio leading_ratio(const FF& f, const FF& g);

// raw bivariate term for the data-file reader and formula builders;
// arbitrary y/Y exponents are reduced via the curve relations
struct BivarTerm {
    uint8_t coef = 1;
    int xe = 0, ye = 0, Xe = 0, Ye = 0;
};
FF ff_from_terms(const CurveSpec& spec, const std::vector<BivarTerm>& num,
                 const std::vector<BivarTerm>& den, int off = 0);

// W^q at one offset level down, as a Y-linear pair (t0(X), t1(X)) with
// constant coefficients
std::pair<Poly, Poly> capital_frobenius_pair(const CurveSpec& spec);

}  // namespace ffmzv
