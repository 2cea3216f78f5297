#include "ffmzv/poly.hpp"

#include <cassert>
#include <sstream>

namespace ffmzv {

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    assert(!b.is_zero() && "division by zero");
    Poly q(a.f), r = a;
    if (a.deg() < b.deg()) return {q, r};
    q.c.assign(size_t(a.deg() - b.deg()) + 1, 0);
    uint8_t ilc = a.f.inv(b.lc());
    for (int k = a.deg() - b.deg(); k >= 0; --k) {
        uint8_t t = a.f.mul(r.coeff(k + b.deg()), ilc);
        if (!t) continue;
        q.c[size_t(k)] = t;
        for (int i = 0; i <= b.deg(); ++i)
            r.c[size_t(k + i)] = a.f.sub(r.c[size_t(k + i)], a.f.mul(t, b.c[size_t(i)]));
    }
    q.trim();
    r.trim();
    return {q, r};
}

Poly gcd(const Poly& a, const Poly& b) {
    Poly u = a, v = b;
    while (!v.is_zero()) {
        Poly r = u % v;
        u = std::move(v);
        v = std::move(r);
    }
    return u.monic();
}

Poly lcm(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly(a.f);
    return ((a * b) / gcd(a, b)).monic();
}

Poly pow(const Poly& a, long e) {
    assert(e >= 0);
    Poly acc = Poly::one(a.f), base = a;
    while (e) {
        if (e & 1) acc = acc * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return acc;
}

std::string Poly::str(const char* var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = c.size(); i-- > 0;) {
        if (!c[i]) continue;
        if (!first) os << "+";
        first = false;
        if (i == 0 || c[i] != 1) {
            if (f.q == 4 && c[i] >= 2)
                os << (c[i] == 2 ? "w" : "(w+1)") << (i ? "*" : "");
            else
                os << int(c[i]) << (i ? "*" : "");
        }
        if (i >= 1) os << var;
        if (i >= 2) os << "^" << i;
    }
    return os.str();
}

}  // namespace ffmzv
