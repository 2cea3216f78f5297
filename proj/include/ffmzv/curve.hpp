#pragma once

#include <optional>
#include <string>
#include <vector>

#include "laurent.hpp"
#include "ratfun.hpp"

namespace ffmzv {

// One of the rings A = F_q[x, y]/(y^2 + a y - f(x)) with a single rational
// place at infinity, or a genus-zero F_q[x].  weight_x / weight_y are the
// pole orders of the generators at infinity; the sign normalization makes
// sign(x) = sign(y) = 1.
struct CurveSpec {
    std::string id;
    Gf field;
    int a = 0;          // coefficient of y in the relation
    Poly rel;           // y^2 + a y = rel(x)
    int weight_x = 1;
    int weight_y = -1;  // -1 when y is absent (genus zero)
    int spec_offset = 0;

    bool has_y() const { return weight_y > 0; }
    int genus() const { return has_y() ? (weight_y - 1) / 2 : 0; }
    bool operator==(const CurveSpec& o) const {
        return id == o.id && field == o.field && a == o.a && rel == o.rel &&
               weight_x == o.weight_x && weight_y == o.weight_y && spec_offset == o.spec_offset;
    }
};

// The six built-in specs: genus0-q2, genus0-q3, case-i, case-ii, case-iii,
// case-iv.  Returned references are stable for the process lifetime.
const CurveSpec& curve_spec(const std::string& id);
std::vector<std::string> curve_spec_ids();

// Element of A, in the form part0(x) + y * part1(x).
struct RingElem {
    const CurveSpec* s = nullptr;
    Poly p0, p1;

    RingElem() = default;
    explicit RingElem(const CurveSpec& spec)
        : s(&spec), p0(spec.field), p1(spec.field) {}
    RingElem(const CurveSpec& spec, Poly part0, Poly part1)
        : s(&spec), p0(std::move(part0)), p1(std::move(part1)) {}

    static RingElem zero(const CurveSpec& spec) { return RingElem(spec); }
    static RingElem one(const CurveSpec& spec) {
        return RingElem(spec, Poly::one(spec.field), Poly(spec.field));
    }
    static RingElem from_poly(const CurveSpec& spec, Poly p) {
        return RingElem(spec, std::move(p), Poly(spec.field));
    }
    static RingElem gen_x(const CurveSpec& spec) {
        return RingElem(spec, Poly::x(spec.field), Poly(spec.field));
    }
    static RingElem gen_y(const CurveSpec& spec) {
        return RingElem(spec, Poly(spec.field), Poly::one(spec.field));
    }

    bool is_zero() const { return p0.is_zero() && p1.is_zero(); }
    bool is_one() const { return p0.is_one() && p1.is_zero(); }
    bool operator==(const RingElem& o) const { return p0 == o.p0 && p1 == o.p1; }

    // degree at infinity; the maximum is attained by a unique term because
    // weight_x is even and weight_y odd
    int deg() const;
    uint8_t sign() const;

    RingElem operator-() const { return RingElem(*s, -p0, -p1); }
    friend RingElem operator+(const RingElem& u, const RingElem& v) {
        return RingElem(*u.s, u.p0 + v.p0, u.p1 + v.p1);
    }
    friend RingElem operator-(const RingElem& u, const RingElem& v) { return u + (-v); }
    friend RingElem operator*(const RingElem& u, const RingElem& v);
    RingElem scaled(const Poly& c) const { return RingElem(*s, p0 * c, p1 * c); }
    RingElem pow(long e) const;

    // y -> -y - a, the nontrivial automorphism over F_q(x)
    RingElem conj() const {
        return RingElem(*s, s->a ? p0 - p1 : p0, -p1);
    }

    std::string str() const;
};

// u * conj(u) as a polynomial in x, not normalized
Poly raw_norm_to_x(const RingElem& u);
// relative norm down to F_q[x], monic
Poly norm_to_x(const RingElem& u);
// relative norm down to F_q[y] via the resultant with the minimal
// polynomial of x over F_q(y); only for the positive-genus specs
Poly norm_to_y(const RingElem& u);
// dispatcher used by the relative-zeta machinery; base is "x" or "y";
// result is monic
Poly norm_to_base(const RingElem& u, const std::string& base);

// Element of the fraction field K, canonical form num / den with den a
// monic polynomial in x coprime to the content of num.
struct KElem {
    RingElem num;
    Poly den;

    KElem() = default;
    explicit KElem(RingElem n) : num(std::move(n)), den(Poly::one(num.s->field)) {}
    KElem(RingElem n, Poly d) : num(std::move(n)), den(std::move(d)) { reduce(); }

    static KElem zero(const CurveSpec& s) { return KElem(RingElem::zero(s)); }
    static KElem one_of(const CurveSpec& s) { return KElem(RingElem::one(s)); }
    static KElem from_ratfun(const CurveSpec& s, const RatFun& r) {
        return KElem(RingElem::from_poly(s, r.num), r.den);
    }

    const CurveSpec& spec() const { return *num.s; }
    bool is_zero() const { return num.is_zero(); }
    bool is_one() const { return num.is_one() && den.is_one(); }
    bool is_y_free() const { return num.p1.is_zero(); }
    int deg() const { return is_zero() ? kNegInf : num.deg() - spec().weight_x * den.deg(); }
    bool operator==(const KElem& o) const { return num == o.num && den == o.den; }

    // field-value interface used by the generic linear algebra
    KElem one() const { return one_of(spec()); }
    KElem zero_like() const { return zero(spec()); }

    void reduce();

    KElem operator-() const;
    friend KElem operator+(const KElem& u, const KElem& v);
    friend KElem operator-(const KElem& u, const KElem& v) { return u + (-v); }
    friend KElem operator*(const KElem& u, const KElem& v);
    friend KElem operator/(const KElem& u, const KElem& v) { return u * v.inv(); }
    KElem inv() const;
    KElem pow(long e) const;
    KElem conj() const { return KElem(num.conj(), den); }

    // (coefficient of 1, coefficient of y) as rational functions in x
    std::pair<RatFun, RatFun> components() const {
        return {RatFun(num.p0, den), RatFun(num.p1, den)};
    }

    std::string str() const;
};

// Monic elements of degree d in the deterministic enumeration order: the
// unique basis monomial of degree d gets coefficient 1 and the lower-degree
// basis monomials range over F_q, lowest degree varying fastest.
struct MonicRange {
    const CurveSpec* s;
    int d;
    std::vector<std::pair<int, int>> lower;  // (x-exp, y-exp) below degree d
    std::pair<int, int> top;
    size_t count = 0;

    MonicRange(const CurveSpec& spec, int d);
    RingElem element(size_t idx) const;
};

std::vector<RingElem> enumerate_monic(const CurveSpec& spec, int d);
size_t count_monic(const CurveSpec& spec, int d);

// Element of the completion K_infinity written as a + y b with a, b in
// F_q((1/x)).
struct InfSeries {
    const CurveSpec* s = nullptr;
    Laurent even, odd;

    InfSeries() = default;
    InfSeries(const CurveSpec& spec, Laurent e, Laurent o)
        : s(&spec), even(std::move(e)), odd(std::move(o)) {}
    static InfSeries zero(const CurveSpec& spec, int precision) {
        return InfSeries(spec, Laurent::zero(spec.field, -precision),
                         Laurent::zero(spec.field, -precision));
    }

    InfSeries operator-() const { return InfSeries(*s, -even, -odd); }
    friend InfSeries operator+(const InfSeries& u, const InfSeries& v) {
        return InfSeries(*u.s, u.even + v.even, u.odd + v.odd);
    }
    friend InfSeries operator-(const InfSeries& u, const InfSeries& v) { return u + (-v); }
    friend InfSeries operator*(const InfSeries& u, const InfSeries& v);
    friend InfSeries operator/(const InfSeries& u, const InfSeries& v) { return u * v.inv(); }
    InfSeries inv() const;

    std::string str() const;
};

InfSeries expand_at_infinity(const KElem& v, int precision);
bool agree_to_common_precision(const InfSeries& a, const InfSeries& b, int min_span = 0);

}  // namespace ffmzv
