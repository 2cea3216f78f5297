#pragma once

#include "ratfun.hpp"

namespace ffmzv {

// Truncated Laurent series in F_q((1/x)): finitely many terms of positive
// degree, then an infinite tail of decreasing degrees.  Stored as a window
// of coefficients [lead downto lead-|c|+1] plus a knowledge floor:
// coefficients are known for every exponent >= floor_ (those below the
// window are known to be zero), and unknown below it.  floor_ = kNegInf
// means the value is exact (a Laurent polynomial).
struct Laurent {
    Gf f;
    int lead = 0;
    std::vector<uint8_t> c;  // c[i] is the coefficient of x^(lead - i)
    int floor_ = 0;

    Laurent() = default;
    Laurent(Gf field, int floor) : f(field), floor_(floor) {}

    static Laurent zero(Gf f, int floor) { return Laurent(f, floor); }
    static Laurent exact_zero(Gf f) { return Laurent(f, kNegInf); }
    static Laurent from_poly(const Poly& p) {
        Laurent s(p.f, kNegInf);
        if (!p.is_zero()) {
            s.lead = p.deg();
            s.c.assign(p.c.rbegin(), p.c.rend());
        }
        return s;
    }
    static Laurent from_ratfun(const RatFun& r, int precision);

    // saturating sum for floor bookkeeping
    static int addf(int a, int b) { return (a <= kNegInf || b <= kNegInf) ? kNegInf : a + b; }

    bool window_empty() const { return c.empty(); }
    // true when every known coefficient is zero
    bool is_zero_to_precision() const { return c.empty(); }
    bool is_exact() const { return floor_ <= kNegInf; }
    // number of known 1/x-adic coefficients below the leading exponent;
    // the spec's "precision N": known modulo terms of degree < -N
    int precision() const { return -floor_; }
    int valuation_or(int dflt) const { return c.empty() ? dflt : lead; }

    uint8_t coeff(int e) const {
        if (c.empty()) return 0;
        if (e > lead) return 0;
        long i = long(lead) - e;
        return i < long(c.size()) ? c[size_t(i)] : 0;
    }

    void normalize() {
        // trim leading zeros
        size_t k = 0;
        while (k < c.size() && c[k] == 0) ++k;
        if (k) { c.erase(c.begin(), c.begin() + long(k)); lead -= int(k); }
        // drop anything below the floor
        if (!is_exact() && !c.empty() && lead - int(c.size()) + 1 < floor_) {
            long keep = long(lead) - floor_ + 1;
            if (keep <= 0) c.clear();
            else c.resize(size_t(keep));
        }
        // trim trailing zeros (they are represented implicitly)
        while (!c.empty() && c.back() == 0) c.pop_back();
        if (c.empty()) lead = 0;
    }

    Laurent truncated(int new_floor) const {
        Laurent r = *this;
        if (new_floor > r.floor_) { r.floor_ = new_floor; r.normalize(); }
        return r;
    }

    Laurent operator-() const {
        Laurent r = *this;
        for (auto& a : r.c) a = f.neg(a);
        return r;
    }

    friend Laurent operator+(const Laurent& a, const Laurent& b);
    friend Laurent operator-(const Laurent& a, const Laurent& b) { return a + (-b); }
    friend Laurent operator*(const Laurent& a, const Laurent& b);
    Laurent scaled(uint8_t s) const {
        Laurent r = *this;
        if (s == 0) { r.c.clear(); r.lead = 0; return r; }
        if (s != 1)
            for (auto& a : r.c) a = f.mul(a, s);
        return r;
    }
    // multiply by x^k
    Laurent shifted(int k) const {
        Laurent r = *this;
        r.lead += k;
        r.floor_ = addf(r.floor_, k);
        return r;
    }

    // multiplicative inverse; the window must be nonempty.  Relative
    // precision is preserved: the result is known on a window of the same
    // length starting at -lead.
    Laurent inv() const;

    std::string str(int max_terms = 12) const;
};

// Equality of all coefficients down to the coarser of the two floors.
// Callers needing a minimum overlap pass min_span (number of coefficients
// below the larger lead that must be comparable).
bool agree_to_common_precision(const Laurent& a, const Laurent& b, int min_span = 0);

// Expansion of 1/p at infinity: valuation -deg p, known down to exponent
// -(precision + deg p).
Laurent series_invert(const Poly& p, int precision);

}  // namespace ffmzv
