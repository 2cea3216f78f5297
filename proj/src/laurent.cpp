#include "ffmzv/laurent.hpp"

#include <cassert>
#include <sstream>

namespace ffmzv {

Laurent operator+(const Laurent& a, const Laurent& b) {
    Laurent r(a.f, std::max(a.floor_, b.floor_));
    if (a.c.empty() && b.c.empty()) return r;
    int hi = std::max(a.valuation_or(kNegInf), b.valuation_or(kNegInf));
    int lo = r.floor_;
    if (r.is_exact())
        lo = std::min(a.c.empty() ? 0 : a.lead - int(a.c.size()) + 1,
                      b.c.empty() ? 0 : b.lead - int(b.c.size()) + 1);
    if (hi < lo) return r;
    r.lead = hi;
    r.c.assign(size_t(hi - lo) + 1, 0);
    for (int e = hi; e >= lo; --e) r.c[size_t(hi - e)] = a.f.add(a.coeff(e), b.coeff(e));
    r.normalize();
    return r;
}

Laurent operator*(const Laurent& a, const Laurent& b) {
    int la = a.c.empty() ? a.floor_ - 1 : a.lead;
    int lb = b.c.empty() ? b.floor_ - 1 : b.lead;
    int fl = std::max(std::max(Laurent::addf(la, b.floor_), Laurent::addf(a.floor_, lb)),
                      Laurent::addf(Laurent::addf(a.floor_, b.floor_), -1));
    Laurent r(a.f, fl);
    if (a.c.empty() || b.c.empty()) return r;
    int hi = a.lead + b.lead;
    int lo = fl;
    if (r.is_exact()) lo = (a.lead - int(a.c.size()) + 1) + (b.lead - int(b.c.size()) + 1);
    if (hi < lo) return r;
    r.lead = hi;
    r.c.assign(size_t(hi - lo) + 1, 0);
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (!a.c[i]) continue;
        int ea = a.lead - int(i);
        for (size_t j = 0; j < b.c.size(); ++j) {
            if (!b.c[j]) continue;
            int e = ea + b.lead - int(j);
            if (e < lo) break;
            size_t k = size_t(hi - e);
            r.c[k] = a.f.add(r.c[k], a.f.mul(a.c[i], b.c[j]));
        }
    }
    r.normalize();
    return r;
}

Laurent Laurent::inv() const {
    assert(!c.empty() && "inverting a series that is zero to precision");
    assert(c[0] != 0);
    assert(!is_exact() && "truncate exact values before inverting");
    // 1/s with s = c0 x^lead (1 + t), |t| < 1: long division.
    int n = lead - floor_;  // relative coefficients available after the lead
    Laurent r(f, floor_ - 2 * lead);
    r.lead = -lead;
    r.c.assign(size_t(n) + 1, 0);
    uint8_t ic0 = f.inv(c[0]);
    for (size_t k = 0; k < r.c.size(); ++k) {
        // coefficient of x^(-lead-k) in r from the identity r*s = 1
        uint8_t acc = (k == 0) ? uint8_t(1) : uint8_t(0);
        for (size_t j = 1; j <= k && j < c.size(); ++j)
            acc = f.sub(acc, f.mul(c[j], r.c[k - j]));
        r.c[k] = f.mul(acc, ic0);
    }
    r.normalize();
    return r;
}

Laurent series_invert(const Poly& p, int precision) {
    assert(!p.is_zero() && "division by zero");
    Laurent s = Laurent::from_poly(p);
    s.floor_ = std::min(-precision + p.deg(), 0);
    Laurent r = s.inv();
    return r.truncated(-(precision + p.deg()));
}

Laurent Laurent::from_ratfun(const RatFun& r, int precision) {
    if (r.is_zero()) return Laurent::zero(r.field(), -precision);
    Laurent den_inv = series_invert(r.den, precision + std::abs(r.num.deg()) + 1);
    return (Laurent::from_poly(r.num) * den_inv).truncated(-precision);
}

bool agree_to_common_precision(const Laurent& a, const Laurent& b, int min_span) {
    int lo = std::max(a.floor_, b.floor_);
    if (a.window_empty() && b.window_empty()) return true;  // zero == zero
    int hi = std::max(a.valuation_or(lo), b.valuation_or(lo));
    if (min_span > 0 && hi - lo + 1 < min_span) return false;
    for (int e = hi; e >= lo; --e)
        if (a.coeff(e) != b.coeff(e)) return false;
    return true;
}

std::string Laurent::str(int max_terms) const {
    if (c.empty()) return is_exact() ? "0" : "O(x^" + std::to_string(floor_ - 1) + ")";
    std::ostringstream os;
    int printed = 0;
    for (size_t i = 0; i < c.size() && printed < max_terms; ++i) {
        if (!c[i]) continue;
        if (printed) os << " + ";
        int e = lead - int(i);
        if (c[i] != 1 || e == 0) os << int(c[i]);
        if (e != 0) {
            if (c[i] != 1) os << "*";
            os << "x^" << e;
        }
        ++printed;
    }
    if (!is_exact()) os << " + O(x^" << floor_ - 1 << ")";
    return os.str();
}

}  // namespace ffmzv
