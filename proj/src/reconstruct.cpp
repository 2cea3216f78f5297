#include "ffmzv/reconstruct.hpp"

#include <cassert>

namespace ffmzv {

namespace {

Poly reversed(const Poly& p) {
    Poly r(p.f);
    r.c.assign(p.c.rbegin(), p.c.rend());
    r.trim();
    return r;
}

}  // namespace

std::optional<RatFun> rational_reconstruct(const Laurent& s, int guard) {
    Gf f = s.f;
    if (s.is_zero_to_precision()) return RatFun::zero(f);
    assert(!s.is_exact() && "reconstruction expects a finite-precision series");
    int precision = -s.floor_;
    assert(precision >= guard);

    // Known coefficients as a polynomial in u = 1/x: T(u), n of them.
    int n = s.lead - s.floor_ + 1;
    Poly t(f);
    t.c.assign(size_t(n), 0);
    for (int i = 0; i < n; ++i) t.c[size_t(i)] = s.coeff(s.lead - i);
    t.trim();

    Poly un = Poly::monomial(f, 1, n);
    // extended Euclid: r_k = u_k * u^n + v_k * T
    Poly r_prev = un, r_cur = t;
    Poly v_prev = Poly::zero(f), v_cur = Poly::one(f);

    while (true) {
        // candidate convergent T ~ r_cur / v_cur  (mod u^n)
        if (v_cur.coeff(0) != 0) {
            Poly fn = reversed(r_cur), gd = reversed(v_cur);
            int shift = s.lead + v_cur.deg() - r_cur.deg();
            if (r_cur.is_zero()) { fn = Poly::zero(f); shift = 0; }
            RatFun cand = shift >= 0 ? RatFun(fn.shifted(shift), gd)
                                     : RatFun(fn, gd.shifted(-shift));
            if (cand.num.deg() + cand.den.deg() <= precision - guard) {
                // soundness gate: the convergent must reproduce every known
                // coefficient when re-expanded
                Laurent back = Laurent::from_ratfun(cand, precision);
                if (agree_to_common_precision(back, s)) return cand;
            }
        }
        if (r_cur.is_zero()) break;
        auto [q, rem] = divmod(r_prev, r_cur);
        Poly v_next = v_prev - q * v_cur;
        r_prev = std::move(r_cur);
        r_cur = std::move(rem);
        v_prev = std::move(v_cur);
        v_cur = std::move(v_next);
        if (v_cur.deg() > n) break;  // no admissible convergent remains
    }
    return std::nullopt;
}

}  // namespace ffmzv
