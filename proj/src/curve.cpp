#include "ffmzv/curve.hpp"

#include <cassert>
#include <map>
#include <sstream>
#include <stdexcept>

#include "ffmzv/linalg.hpp"

namespace ffmzv {

namespace {

CurveSpec make_spec(std::string id, uint8_t q, int a, std::initializer_list<int> rel,
                    int wx, int wy, int off) {
    CurveSpec s;
    s.id = std::move(id);
    s.field = Gf{q};
    s.a = a;
    s.rel = Poly(s.field, rel);
    s.weight_x = wx;
    s.weight_y = wy;
    s.spec_offset = off;
    return s;
}

const std::map<std::string, CurveSpec>& spec_registry() {
    static const std::map<std::string, CurveSpec> reg = [] {
        std::map<std::string, CurveSpec> m;
        auto put = [&m](CurveSpec s) { m.emplace(s.id, std::move(s)); };
        put(make_spec("genus0-q2", 2, 0, {}, 1, -1, 0));
        put(make_spec("genus0-q3", 3, 0, {}, 1, -1, 0));
        // y^2 + y = x^3 + x + 1 over F_2
        put(make_spec("case-i", 2, 1, {1, 1, 0, 1}, 2, 3, 0));
        // y^2 = x^3 - x - 1 over F_3
        put(make_spec("case-ii", 3, 0, {-1, -1, 0, 1}, 2, 3, 0));
        // y^2 + y = x^3 + w over F_4
        put(make_spec("case-iii", 4, 1, {2, 0, 0, 1}, 2, 3, 0));
        // y^2 + y = x^5 + x^3 + 1 over F_2
        put(make_spec("case-iv", 2, 1, {1, 0, 0, 1, 0, 1}, 2, 5, -2));
        return m;
    }();
    return reg;
}

}  // namespace

const CurveSpec& curve_spec(const std::string& id) {
    auto it = spec_registry().find(id);
    if (it == spec_registry().end()) throw std::invalid_argument("unknown curve spec: " + id);
    return it->second;
}

std::vector<std::string> curve_spec_ids() {
    std::vector<std::string> ids;
    for (auto& [id, s] : spec_registry()) ids.push_back(id);
    return ids;
}

int RingElem::deg() const {
    int d0 = p0.is_zero() ? kNegInf : s->weight_x * p0.deg();
    int d1 = (p1.is_zero() || !s->has_y()) ? kNegInf : s->weight_y + s->weight_x * p1.deg();
    return std::max(d0, d1);
}

uint8_t RingElem::sign() const {
    int d0 = p0.is_zero() ? kNegInf : s->weight_x * p0.deg();
    int d1 = (p1.is_zero() || !s->has_y()) ? kNegInf : s->weight_y + s->weight_x * p1.deg();
    if (d0 == kNegInf && d1 == kNegInf) return 0;
    return d0 > d1 ? p0.lc() : p1.lc();
}

RingElem operator*(const RingElem& u, const RingElem& v) {
    const CurveSpec& s = *u.s;
    Poly e = u.p0 * v.p0;
    Poly o = u.p0 * v.p1 + u.p1 * v.p0;
    if (!u.p1.is_zero() && !v.p1.is_zero()) {
        Poly t = u.p1 * v.p1;           // y^2 = rel - a y
        e = e + t * s.rel;
        if (s.a) o = o - t;
    }
    return RingElem(s, std::move(e), std::move(o));
}

RingElem RingElem::pow(long e) const {
    assert(e >= 0);
    RingElem acc = one(*s), base = *this;
    while (e) {
        if (e & 1) acc = acc * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return acc;
}

std::string RingElem::str() const {
    if (is_zero()) return "0";
    std::string r;
    if (!p0.is_zero()) r = p0.str();
    if (!p1.is_zero()) {
        if (!r.empty()) r += "+";
        r += "y*(" + p1.str() + ")";
    }
    return r;
}

Poly raw_norm_to_x(const RingElem& u) {
    const CurveSpec& s = *u.s;
    if (!s.has_y()) return u.p0;
    Poly n = u.p0 * u.p0 - s.rel * (u.p1 * u.p1);
    if (s.a) n = n - u.p0 * u.p1;
    return n;
}

Poly norm_to_x(const RingElem& u) { return raw_norm_to_x(u).monic(); }

Poly norm_to_y(const RingElem& u) {
    const CurveSpec& s = *u.s;
    if (!s.has_y()) throw std::invalid_argument("norm_to_y: unsupported base for " + s.id);
    Gf f = s.field;
    // minimal polynomial of x over F_q(y): rel(T) - y^2 - a y, monic of
    // degree weight_y in T, with coefficients in F_q[y]
    int n = s.rel.deg();
    std::vector<Poly> mc(size_t(n) + 1, Poly(f));  // coefficients in y
    for (int i = 0; i <= n; ++i) mc[size_t(i)] = Poly::constant(f, s.rel.coeff(i));
    mc[0] = mc[0] - Poly::monomial(f, 1, 2) - Poly::monomial(f, 1, 1).scaled(uint8_t(s.a));
    // u as a polynomial in T with F_q[y] coefficients
    int m = std::max(u.p0.deg(), u.p1.deg());
    if (m < 0) return Poly(f);
    std::vector<Poly> uc(size_t(m) + 1, Poly(f));
    for (int i = 0; i <= m; ++i) {
        uc[size_t(i)] = Poly::constant(f, u.p0.coeff(i)) +
                        Poly::monomial(f, 1, 1).scaled(u.p1.coeff(i));
    }
    while (!uc.empty() && uc.back().is_zero()) uc.pop_back();
    if (uc.empty()) return Poly(f);
    int du = int(uc.size()) - 1;
    if (du == 0) return pow(uc[0], n).monic();  // constant in T: norm is u^[K:F_q(y)]
    // Sylvester resultant over F_q(y)
    size_t dim = size_t(n + du);
    RatFun z = RatFun::zero(f);
    Mat<RatFun> syl(dim, std::vector<RatFun>(dim, z));
    for (int r = 0; r < du; ++r)
        for (int i = 0; i <= n; ++i) syl[size_t(r)][size_t(r + i)] = RatFun(mc[size_t(n - i)]);
    for (int r = 0; r < n; ++r)
        for (int i = 0; i <= du; ++i)
            syl[size_t(du + r)][size_t(r + i)] = RatFun(uc[size_t(du - i)]);
    // determinant by elimination
    RatFun det = RatFun::one(f);
    for (size_t c = 0; c < dim; ++c) {
        size_t sel = c;
        while (sel < dim && syl[sel][c].is_zero()) ++sel;
        if (sel == dim) return Poly(f);
        if (sel != c) { std::swap(syl[sel], syl[c]); det = -det; }
        det = det * syl[c][c];
        RatFun ip = syl[c][c].inv();
        for (size_t r = c + 1; r < dim; ++r) {
            if (syl[r][c].is_zero()) continue;
            RatFun factor = syl[r][c] * ip;
            for (size_t j = c; j < dim; ++j) syl[r][j] = syl[r][j] - factor * syl[c][j];
        }
    }
    assert(det.is_poly());
    return det.num.monic();
}

Poly norm_to_base(const RingElem& u, const std::string& base) {
    if (base == "x") return norm_to_x(u);
    if (base == "y") return norm_to_y(u);
    throw std::invalid_argument("norm_to_base: base must be \"x\" or \"y\"");
}

void KElem::reduce() {
    assert(!den.is_zero() && "division by zero");
    if (num.is_zero()) { den = Poly::one(den.f); return; }
    Poly content = gcd(num.p0, num.p1);
    Poly g = gcd(den, content);
    if (!g.is_one()) {
        num.p0 = num.p0 / g;
        num.p1 = num.p1 / g;
        den = den / g;
    }
    if (!den.is_monic()) {
        uint8_t inv_lc = den.f.inv(den.lc());
        num.p0 = num.p0.scaled(inv_lc);
        num.p1 = num.p1.scaled(inv_lc);
        den = den.scaled(inv_lc);
    }
}

KElem KElem::operator-() const {
    KElem r = *this;
    r.num = -r.num;
    return r;
}

namespace {

RingElem divided(const RingElem& u, const Poly& g) {
    return RingElem(*u.s, u.p0 / g, u.p1 / g);
}

// Inputs canonical, so after cancelling g = gcd of the denominators the
// only common factors left between numerator and denominator divide g.
KElem add_canonical(const KElem& u, const KElem& v) {
    Poly g = gcd(u.den, v.den);
    KElem r;
    if (g.is_one()) {
        r.num = u.num.scaled(v.den) + v.num.scaled(u.den);
        r.den = u.den * v.den;
        if (r.num.is_zero()) r.den = Poly::one(r.den.f);
        return r;
    }
    Poly du = u.den / g, dv = v.den / g;
    r.num = u.num.scaled(dv) + v.num.scaled(du);
    r.den = u.den * dv;
    if (r.num.is_zero()) { r.den = Poly::one(r.den.f); return r; }
    Poly cancellable = g;  // invariant: divides r.den
    for (;;) {
        Poly h = gcd(gcd(r.num.p0, r.num.p1), cancellable);
        if (h.is_one()) break;
        r.num = divided(r.num, h);
        r.den = r.den / h;
        cancellable = gcd(h, r.den);
    }
    return r;
}

}  // namespace

KElem operator+(const KElem& u, const KElem& v) { return add_canonical(u, v); }

KElem operator*(const KElem& u, const KElem& v) {
    // cross-cancel first; with y-free numerators the product of canonical
    // inputs is then canonical (contents multiply), otherwise the product
    // of the y-parts can create fresh common factors and a full reduction
    // is required
    Poly g1 = gcd(gcd(u.num.p0, u.num.p1), v.den);
    Poly g2 = gcd(gcd(v.num.p0, v.num.p1), u.den);
    RingElem num = (g1.is_one() ? u.num : divided(u.num, g1)) *
                   (g2.is_one() ? v.num : divided(v.num, g2));
    Poly den = (g2.is_one() ? u.den : u.den / g2) * (g1.is_one() ? v.den : v.den / g1);
    if (!u.num.p1.is_zero() && !v.num.p1.is_zero())
        return KElem(std::move(num), std::move(den));
    KElem r;
    r.num = std::move(num);
    r.den = std::move(den);
    if (r.num.is_zero()) r.den = Poly::one(r.den.f);
    return r;
}

KElem KElem::inv() const {
    assert(!is_zero());
    if (num.p1.is_zero())
        return KElem(RingElem::from_poly(spec(), den), num.p0);
    return KElem(num.conj().scaled(den), raw_norm_to_x(num));
}

KElem KElem::pow(long e) const {
    if (e < 0) return inv().pow(-e);
    KElem acc = one_of(spec()), base = *this;
    while (e) {
        if (e & 1) acc = acc * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return acc;
}

std::string KElem::str() const {
    if (den.is_one()) return num.str();
    return "(" + num.str() + ")/(" + den.str() + ")";
}

MonicRange::MonicRange(const CurveSpec& spec, int d) : s(&spec), d(d) {
    assert(d >= 0);
    auto add_monomials = [&](int ylevel) {
        int base = ylevel ? spec.weight_y : 0;
        if (ylevel && !spec.has_y()) return;
        for (int i = 0; base + spec.weight_x * i < d; ++i) lower.push_back({i, ylevel});
        // degree-d monomial on this level?
        if ((d - base) >= 0 && (d - base) % spec.weight_x == 0 && (ylevel == 0 || d >= base))
            top = {(d - base) / spec.weight_x, ylevel}, count = 1;
    };
    count = 0;
    add_monomials(0);
    add_monomials(1);
    if (!count) { lower.clear(); return; }  // Weierstrass gap
    // sort lower basis monomials by degree (ascending): lowest varies fastest
    std::sort(lower.begin(), lower.end(), [&](auto a, auto b) {
        int da = spec.weight_x * a.first + (a.second ? spec.weight_y : 0);
        int db = spec.weight_x * b.first + (b.second ? spec.weight_y : 0);
        return da < db;
    });
    count = 1;
    for (size_t i = 0; i < lower.size(); ++i) count *= spec.field.q;
}

RingElem MonicRange::element(size_t idx) const {
    assert(count && idx < count);
    RingElem e(*s);
    auto set = [&](std::pair<int, int> m, uint8_t cf) {
        Poly& part = m.second ? e.p1 : e.p0;
        if (part.deg() < m.first) part.c.resize(size_t(m.first) + 1, 0);
        part.c[size_t(m.first)] = cf;
    };
    set(top, 1);
    size_t rest = idx;
    for (auto& m : lower) {
        uint8_t digit = uint8_t(rest % s->field.q);
        rest /= s->field.q;
        if (digit) set(m, digit);
    }
    e.p0.trim();
    e.p1.trim();
    return e;
}

std::vector<RingElem> enumerate_monic(const CurveSpec& spec, int d) {
    MonicRange r(spec, d);
    std::vector<RingElem> out;
    out.reserve(r.count);
    for (size_t i = 0; i < r.count; ++i) out.push_back(r.element(i));
    return out;
}

size_t count_monic(const CurveSpec& spec, int d) { return MonicRange(spec, d).count; }

InfSeries operator*(const InfSeries& u, const InfSeries& v) {
    const CurveSpec& s = *u.s;
    Laurent e = u.even * v.even;
    Laurent o = u.even * v.odd + u.odd * v.even;
    if (s.has_y()) {
        Laurent t = u.odd * v.odd;
        e = e + t * Laurent::from_poly(s.rel);
        if (s.a) o = o - t;
    }
    return InfSeries(s, std::move(e), std::move(o));
}

InfSeries InfSeries::inv() const {
    const CurveSpec& spec = *s;
    if (odd.is_zero_to_precision()) {
        Laurent e = even.inv();
        return InfSeries(spec, std::move(e), Laurent::zero(spec.field, e.floor_));
    }
    // 1/(e + y o) = conj / norm with conj = (e - a o) - y o
    Laurent ce = spec.a ? even - odd : even;
    Laurent norm = even * ce - odd * odd * Laurent::from_poly(spec.rel);
    Laurent ninv = norm.inv();
    return InfSeries(spec, ce * ninv, (-odd) * ninv);
}

std::string InfSeries::str() const {
    std::string r = even.str();
    if (!odd.is_zero_to_precision()) r += " + y*(" + odd.str() + ")";
    return r;
}

InfSeries expand_at_infinity(const KElem& v, int precision) {
    const CurveSpec& s = v.spec();
    int extra = std::max(0, v.num.p0.deg()) + std::max(0, v.num.p1.deg()) + 1;
    Laurent dinv = v.den.is_one() ? Laurent::from_poly(Poly::one(s.field)).truncated(-precision - extra)
                                  : series_invert(v.den, precision + extra);
    Laurent e = (Laurent::from_poly(v.num.p0) * dinv).truncated(-precision);
    Laurent o = (Laurent::from_poly(v.num.p1) * dinv).truncated(-precision);
    return InfSeries(s, std::move(e), std::move(o));
}

bool agree_to_common_precision(const InfSeries& a, const InfSeries& b, int min_span) {
    if (!agree_to_common_precision(a.even, b.even, 0) ||
        !agree_to_common_precision(a.odd, b.odd, 0))
        return false;
    if (min_span <= 0) return true;
    // the span requirement is met if some component offers that much overlap
    auto span = [](const Laurent& u, const Laurent& v) {
        if (u.window_empty() && v.window_empty()) return 1 << 20;  // zero, trivially deep
        int lo = std::max(u.floor_, v.floor_);
        return std::max(u.valuation_or(lo), v.valuation_or(lo)) - lo + 1;
    };
    return span(a.even, b.even) >= min_span || span(a.odd, b.odd) >= min_span;
}

}  // namespace ffmzv
