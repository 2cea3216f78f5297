#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "gf.hpp"

namespace ffmzv {

// Sentinel used for the degree of zero wherever a genuine "minus infinity"
// is needed (ring-element degrees, series valuations).  Safe to add twice
// without overflow.
inline constexpr int kNegInf = -(1 << 28);

// Dense univariate polynomial over F_q, lowest-degree coefficient first.
// Canonical form: no trailing zero coefficients; zero is the empty vector.
struct Poly {
    Gf f;
    std::vector<uint8_t> c;

    Poly() = default;
    explicit Poly(Gf field) : f(field) {}
    Poly(Gf field, std::initializer_list<int> coeffs) : f(field) {
        for (int v : coeffs) c.push_back(norm_coeff(field, v));
        trim();
    }
    Poly(Gf field, std::vector<uint8_t> coeffs) : f(field), c(std::move(coeffs)) { trim(); }

    // reduce an integer label to a field element (for q = 4 the labels
    // 0..3 are taken verbatim: 2 = w, 3 = w+1)
    static uint8_t norm_coeff(Gf f, int v) {
        if (f.q == 3) { int r = v % 3; if (r < 0) r += 3; return uint8_t(r); }
        if (f.q == 4) return uint8_t(v & 3);
        return uint8_t(v & 1);
    }

    static Poly zero(Gf f) { return Poly(f); }
    static Poly one(Gf f) { return constant(f, 1); }
    static Poly constant(Gf f, uint8_t a) {
        Poly r(f);
        if (a) r.c = {a};
        return r;
    }
    // c * x^e
    static Poly monomial(Gf f, uint8_t a, int e) {
        Poly r(f);
        if (a) { r.c.assign(size_t(e) + 1, 0); r.c.back() = a; }
        return r;
    }
    static Poly x(Gf f) { return monomial(f, 1, 1); }

    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
    bool is_zero() const { return c.empty(); }
    bool is_one() const { return c.size() == 1 && c[0] == 1; }
    int deg() const { return int(c.size()) - 1; }  // -1 for zero
    uint8_t lc() const { return c.empty() ? 0 : c.back(); }
    uint8_t coeff(int i) const { return (i >= 0 && i < int(c.size())) ? c[size_t(i)] : 0; }
    bool is_monic() const { return lc() == 1; }

    bool operator==(const Poly& o) const { return f == o.f && c == o.c; }

    Poly operator-() const {
        Poly r = *this;
        for (auto& a : r.c) a = f.neg(a);
        return r;
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        Poly r(a.f);
        r.c.resize(std::max(a.c.size(), b.c.size()), 0);
        for (size_t i = 0; i < r.c.size(); ++i)
            r.c[i] = a.f.add(i < a.c.size() ? a.c[i] : 0, i < b.c.size() ? b.c[i] : 0);
        r.trim();
        return r;
    }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly(a.f);
        Poly r(a.f);
        r.c.assign(a.c.size() + b.c.size() - 1, 0);
        // schoolbook kernel; isolated so it can be swapped if profiles demand
        if (a.f.q == 2) {
            for (size_t i = 0; i < a.c.size(); ++i) {
                if (!a.c[i]) continue;
                for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] ^= b.c[j];
            }
        } else {
            for (size_t i = 0; i < a.c.size(); ++i) {
                if (!a.c[i]) continue;
                for (size_t j = 0; j < b.c.size(); ++j)
                    if (b.c[j]) r.c[i + j] = a.f.add(r.c[i + j], a.f.mul(a.c[i], b.c[j]));
            }
        }
        r.trim();
        return r;
    }

    Poly scaled(uint8_t s) const {
        if (s == 0) return Poly(f);
        Poly r = *this;
        if (s != 1)
            for (auto& a : r.c) a = f.mul(a, s);
        return r;
    }
    // multiply by x^k
    Poly shifted(int k) const {
        if (is_zero()) return *this;
        Poly r(f);
        r.c.assign(c.size() + size_t(k), 0);
        for (size_t i = 0; i < c.size(); ++i) r.c[i + size_t(k)] = c[i];
        return r;
    }
    Poly monic() const {
        if (is_zero() || lc() == 1) return *this;
        return scaled(f.inv(lc()));
    }

    uint8_t eval(uint8_t v) const {
        uint8_t acc = 0;
        for (size_t i = c.size(); i-- > 0;) acc = f.add(f.mul(acc, v), c[i]);
        return acc;
    }

    std::string str(const char* var = "x") const;
};

// quotient and remainder; b must be nonzero
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
inline Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }
inline Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

// monic gcd
Poly gcd(const Poly& a, const Poly& b);
Poly lcm(const Poly& a, const Poly& b);
Poly pow(const Poly& a, long e);

}  // namespace ffmzv
