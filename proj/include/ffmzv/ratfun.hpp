#pragma once

#include "poly.hpp"

namespace ffmzv {

// Rational function over F_q in canonical form: gcd(num, den) = 1 and den
// monic.  Equality is structural equality of the canonical form.
struct RatFun {
    Poly num, den;

    RatFun() = default;
    explicit RatFun(Poly n) : num(std::move(n)), den(Poly::one(num.f)) {}
    RatFun(Poly n, Poly d) : num(std::move(n)), den(std::move(d)) { reduce(); }

    static RatFun zero(Gf f) { return RatFun(Poly::zero(f)); }
    static RatFun one(Gf f) { return RatFun(Poly::one(f)); }
    // field-value interface used by the generic linear algebra
    RatFun one() const { return one(field()); }

    Gf field() const { return den.f; }
    bool is_zero() const { return num.is_zero(); }
    bool is_one() const { return num.is_one() && den.is_one(); }
    bool is_poly() const { return den.is_one(); }
    // degree as a rational function (kNegInf for zero)
    int deg() const { return is_zero() ? kNegInf : num.deg() - den.deg(); }

    void reduce() {
        assert(!den.is_zero() && "division by zero");
        if (num.is_zero()) { den = Poly::one(den.f); return; }
        Poly g = gcd(num, den);
        if (!g.is_one()) { num = num / g; den = den / g; }
        if (!den.is_monic()) {
            uint8_t s = den.f.inv(den.lc());
            num = num.scaled(s);
            den = den.scaled(s);
        }
    }

    bool operator==(const RatFun& o) const { return num == o.num && den == o.den; }

    RatFun operator-() const { return from_reduced(-num, den); }
    friend RatFun operator+(const RatFun& a, const RatFun& b) {
        Poly g = gcd(a.den, b.den);
        Poly da = a.den / g, db = b.den / g;
        return RatFun(a.num * db + b.num * da, a.den * db);
    }
    friend RatFun operator-(const RatFun& a, const RatFun& b) { return a + (-b); }
    friend RatFun operator*(const RatFun& a, const RatFun& b) {
        Poly g1 = gcd(a.num, b.den), g2 = gcd(b.num, a.den);
        return from_reduced_monic((a.num / g1) * (b.num / g2), (a.den / g2) * (b.den / g1));
    }
    friend RatFun operator/(const RatFun& a, const RatFun& b) { return a * b.inv(); }
    RatFun inv() const {
        assert(!is_zero());
        return from_reduced_monic(den, num);
    }
    RatFun pow(long e) const {
        if (e < 0) return inv().pow(-e);
        RatFun acc = one(field()), base = *this;
        while (e) {
            if (e & 1) acc = acc * base;
            e >>= 1;
            if (e) base = base * base;
        }
        return acc;
    }

    std::string str(const char* var = "x") const {
        if (is_poly()) return num.str(var);
        return "(" + num.str(var) + ")/(" + den.str(var) + ")";
    }

  private:
    static RatFun from_reduced(Poly n, Poly d) {
        RatFun r;
        r.num = std::move(n);
        r.den = std::move(d);
        return r;
    }
    static RatFun from_reduced_monic(Poly n, Poly d) {
        RatFun r = from_reduced(std::move(n), std::move(d));
        if (r.num.is_zero()) { r.den = Poly::one(r.den.f); return r; }
        if (!r.den.is_monic()) {
            uint8_t s = r.den.f.inv(r.den.lc());
            r.num = r.num.scaled(s);
            r.den = r.den.scaled(s);
        }
        return r;
    }
};

}  // namespace ffmzv
