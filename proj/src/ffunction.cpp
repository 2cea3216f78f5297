#include "ffmzv/ffunction.hpp"

#include <cassert>
#include <functional>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace ffmzv {

XPoly XPoly::constant(KElem k) {
    XPoly r(k.spec());
    if (!k.is_zero()) r.c.push_back(std::move(k));
    return r;
}

XPoly XPoly::monomial(KElem k, int e) {
    XPoly r(k.spec());
    if (!k.is_zero()) {
        r.c.assign(size_t(e) + 1, KElem::zero(k.spec()));
        r.c.back() = std::move(k);
    }
    return r;
}

XPoly XPoly::operator-() const {
    XPoly r = *this;
    for (auto& k : r.c) k = -k;
    return r;
}

XPoly operator+(const XPoly& a, const XPoly& b) {
    XPoly r(*a.s);
    size_t n = std::max(a.c.size(), b.c.size());
    r.c.reserve(n);
    for (size_t i = 0; i < n; ++i) {
        if (i >= a.c.size()) r.c.push_back(b.c[i]);
        else if (i >= b.c.size()) r.c.push_back(a.c[i]);
        else r.c.push_back(a.c[i] + b.c[i]);
    }
    r.trim();
    return r;
}

XPoly operator-(const XPoly& a, const XPoly& b) { return a + (-b); }

XPoly operator*(const XPoly& a, const XPoly& b) {
    XPoly r(*a.s);
    if (a.is_zero() || b.is_zero()) return r;
    r.c.assign(a.c.size() + b.c.size() - 1, KElem::zero(*a.s));
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i].is_zero()) continue;
        for (size_t j = 0; j < b.c.size(); ++j) {
            if (b.c[j].is_zero()) continue;
            r.c[i + j] = r.c[i + j] + a.c[i] * b.c[j];
        }
    }
    r.trim();
    return r;
}

XPoly XPoly::scaled(const KElem& k) const {
    XPoly r(*s);
    if (k.is_zero()) return r;
    r.c.reserve(c.size());
    for (auto& e : c) r.c.push_back(e * k);
    r.trim();
    return r;
}

XPoly XPoly::shifted(int e) const {
    if (is_zero()) return *this;
    XPoly r(*s);
    r.c.assign(c.size() + size_t(e), KElem::zero(*s));
    for (size_t i = 0; i < c.size(); ++i) r.c[i + size_t(e)] = c[i];
    return r;
}

XPoly XPoly::monic() const {
    if (is_zero() || lc().is_one()) return *this;
    return scaled(lc().inv());
}

XPoly XPoly::exponent_scaled(int m) const {
    if (is_zero()) return *this;
    XPoly r(*s);
    r.c.assign(size_t(deg()) * size_t(m) + 1, KElem::zero(*s));
    for (size_t i = 0; i < c.size(); ++i)
        if (!c[i].is_zero()) r.c[i * size_t(m)] = c[i];
    return r;
}

KElem XPoly::eval(const KElem& v) const {
    KElem acc = KElem::zero(*s);
    for (size_t i = c.size(); i-- > 0;) acc = acc * v + c[i];
    return acc;
}

std::pair<XPoly, XPoly> divmod(const XPoly& a, const XPoly& b) {
    assert(!b.is_zero());
    XPoly q(*a.s), r = a;
    if (a.deg() < b.deg()) return {q, r};
    q.c.assign(size_t(a.deg() - b.deg()) + 1, KElem::zero(*a.s));
    KElem ilc = b.lc().inv();
    for (int k = a.deg() - b.deg(); k >= 0; --k) {
        if (int(r.c.size()) <= k + b.deg()) continue;
        KElem t = r.c[size_t(k + b.deg())] * ilc;
        if (t.is_zero()) continue;
        q.c[size_t(k)] = t;
        for (int i = 0; i <= b.deg(); ++i)
            r.c[size_t(k + i)] = r.c[size_t(k + i)] - t * b.c[size_t(i)];
        r.trim();
    }
    q.trim();
    r.trim();
    return {q, r};
}

XPoly gcd(XPoly a, XPoly b) {
    while (!b.is_zero()) {
        b = b.monic();
        XPoly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

std::pair<Poly, Poly> capital_frobenius_pair(const CurveSpec& spec) {
    assert(spec.has_y());
    Gf f = spec.field;
    // W^q in the Y-linear basis over F_q[X]: multiply (0, 1) by W q times
    // with the rule (e, o) * W = (rel o, e - a o)
    Poly e(f), o = Poly::one(f);
    for (int i = 1; i < spec.field.q; ++i) {
        Poly e2 = spec.rel * o;
        Poly o2 = spec.a ? e - o : e;
        e = std::move(e2);
        o = std::move(o2);
    }
    return {e, o};
}

FF FF::make(const CurveSpec& spec, int off, XPoly num0, XPoly num1, XPoly d) {
    if (d.is_zero()) throw std::invalid_argument("ff: zero denominator");
    FF r;
    r.s = &spec;
    r.off = off;
    if (num0.is_zero() && num1.is_zero()) {
        r.n0 = XPoly(spec);
        r.n1 = XPoly(spec);
        r.den = XPoly::one(spec);
        return r;
    }
    // full reduction is quadratic in the X-degree with coefficient growth
    // on top; beyond this size only the cheap exact-division probe runs
    // (equality uses cross-multiplication, specialization and leading
    // terms are representation-independent)
    constexpr int kReduceLimit = 64;
    int sz = std::max(std::max(num0.deg(), num1.deg()), d.deg());
    if (sz <= kReduceLimit) {
        XPoly g = gcd(gcd(num0, num1), d);
        if (g.deg() > 0) {
            num0 = divmod(num0, g).first;
            num1 = divmod(num1, g).first;
            d = divmod(d, g).first;
        }
    } else if (d.deg() > 0) {
        auto [q0, r0] = divmod(num0, d);
        if (r0.is_zero()) {
            auto [q1, r1] = divmod(num1, d);
            if (r1.is_zero()) {
                num0 = std::move(q0);
                num1 = std::move(q1);
                d = XPoly::one(spec);
            }
        }
    }
    if (!d.lc().is_one()) {
        KElem il = d.lc().inv();
        num0 = num0.scaled(il);
        num1 = num1.scaled(il);
        d = d.scaled(il);
    }
    r.n0 = std::move(num0);
    r.n1 = std::move(num1);
    r.den = std::move(d);
    return r;
}

FF FF::reduced() const {
    if (is_zero()) return *this;
    XPoly num0 = n0, num1 = n1, d = den;
    XPoly g = gcd(gcd(num0, num1), d);
    if (g.deg() > 0) {
        num0 = divmod(num0, g).first;
        num1 = divmod(num1, g).first;
        d = divmod(d, g).first;
    }
    if (!d.lc().is_one()) {
        KElem il = d.lc().inv();
        num0 = num0.scaled(il);
        num1 = num1.scaled(il);
        d = d.scaled(il);
    }
    FF r;
    r.s = s;
    r.off = off;
    r.n0 = std::move(num0);
    r.n1 = std::move(num1);
    r.den = std::move(d);
    return r;
}

FF FF::zero(const CurveSpec& spec) {
    return make(spec, 0, XPoly(spec), XPoly(spec), XPoly::one(spec));
}
FF FF::one(const CurveSpec& spec) {
    return make(spec, 0, XPoly::one(spec), XPoly(spec), XPoly::one(spec));
}
FF FF::scalar(KElem k) {
    const CurveSpec& spec = k.spec();
    return make(spec, 0, XPoly::constant(std::move(k)), XPoly(spec), XPoly::one(spec));
}
FF FF::gen_X(const CurveSpec& spec) {
    return make(spec, 0, XPoly::monomial(KElem::one_of(spec), 1), XPoly(spec), XPoly::one(spec));
}
FF FF::gen_Y(const CurveSpec& spec) {
    assert(spec.has_y());
    return make(spec, 0, XPoly(spec), XPoly::one(spec), XPoly::one(spec));
}
FF FF::little_x(const CurveSpec& spec) { return scalar(KElem(RingElem::gen_x(spec))); }
FF FF::little_y(const CurveSpec& spec) { return scalar(KElem(RingElem::gen_y(spec))); }

namespace {

XPoly rel_as_xpoly(const CurveSpec& s) {
    XPoly xp(s);
    for (uint8_t cf : s.rel.c)
        xp.c.push_back(KElem(RingElem::from_poly(s, Poly::constant(s.field, cf))));
    xp.trim();
    return xp;
}

XPoly lift_const_poly(const CurveSpec& s, const Poly& p) {
    XPoly xp(s);
    for (uint8_t cf : p.c)
        xp.c.push_back(KElem(RingElem::from_poly(s, Poly::constant(s.field, cf))));
    xp.trim();
    return xp;
}

}  // namespace

FF FF::expanded(int levels) const {
    assert(levels >= 0);
    FF r = *this;
    for (int step = 0; step < levels; ++step) {
        auto [t0p, t1p] = capital_frobenius_pair(*s);
        int q = s->field.q;
        XPoly m0 = r.n0.exponent_scaled(q), m1 = r.n1.exponent_scaled(q);
        XPoly num0 = m0 + lift_const_poly(*s, t0p) * m1;
        XPoly num1 = lift_const_poly(*s, t1p) * m1;
        r = make(*s, r.off - 1, std::move(num0), std::move(num1), r.den.exponent_scaled(q));
    }
    return r;
}

std::optional<FF> FF::compressed() const {
    int q = s->field.q;
    auto unscale = [&](const XPoly& p) -> std::optional<XPoly> {
        XPoly r(*s);
        if (p.is_zero()) return r;
        r.c.assign(size_t(p.deg() / q) + 1, KElem::zero(*s));
        for (int i = 0; i <= p.deg(); ++i) {
            if (p.c[size_t(i)].is_zero()) continue;
            if (i % q) return std::nullopt;
            r.c[size_t(i / q)] = p.c[size_t(i)];
        }
        r.trim();
        return r;
    };
    auto [t0p, t1p] = capital_frobenius_pair(*s);
    XPoly t0 = lift_const_poly(*s, t0p), t1 = lift_const_poly(*s, t1p);
    // n1 = t1 * m1(X^q), n0 = m0(X^q) + t0 * m1(X^q)
    XPoly m1s(*s);
    if (!n1.is_zero()) {
        auto [quo, rem] = divmod(n1, t1);
        if (!rem.is_zero()) return std::nullopt;
        m1s = std::move(quo);
    }
    auto m1 = unscale(m1s);
    if (!m1) return std::nullopt;
    auto m0 = unscale(n0 - t0 * m1s);
    if (!m0) return std::nullopt;
    auto d = unscale(den);
    if (!d) return std::nullopt;
    return make(*s, off + 1, std::move(*m0), std::move(*m1), std::move(*d));
}

namespace {

// align two functions on a common offset
std::pair<FF, FF> aligned(const FF& a, const FF& b) {
    if (a.off == b.off) return {a, b};
    if (a.off > b.off) return {a.expanded(a.off - b.off), b};
    return {a, b.expanded(b.off - a.off)};
}

}  // namespace

bool FF::operator==(const FF& o) const {
    auto [a, b] = aligned(*this, o);
    // cross-multiplication compares the functions regardless of whether
    // either side is in lowest terms
    return a.n0 * b.den == b.n0 * a.den && a.n1 * b.den == b.n1 * a.den;
}

FF FF::operator-() const {
    FF r = *this;
    r.n0 = -r.n0;
    r.n1 = -r.n1;
    return r;
}

FF operator+(const FF& x, const FF& y) {
    auto [a, b] = aligned(x, y);
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    XPoly g = gcd(a.den, b.den);
    XPoly da = divmod(a.den, g).first, db = divmod(b.den, g).first;
    return FF::make(*a.s, a.off, a.n0 * db + b.n0 * da, a.n1 * db + b.n1 * da, a.den * db);
}

FF operator-(const FF& a, const FF& b) { return a + (-b); }

FF operator*(const FF& x, const FF& y) {
    auto [a, b] = aligned(x, y);
    if (a.is_zero() || b.is_zero()) return FF::zero(*a.s);
    XPoly even = a.n0 * b.n0;
    XPoly odd = a.n0 * b.n1 + a.n1 * b.n0;
    if (!a.n1.is_zero() && !b.n1.is_zero()) {
        XPoly t = a.n1 * b.n1;
        even = even + rel_as_xpoly(*a.s) * t;
        if (a.s->a) odd = odd - t;
    }
    return FF::make(*a.s, a.off, std::move(even), std::move(odd), a.den * b.den);
}

FF FF::inv() const {
    if (is_zero()) throw std::domain_error("ff: inverting zero");
    if (n1.is_zero())
        return make(*s, off, den, XPoly(*s), n0);
    // 1/(n0 + W n1) = (n0 - a n1 - W n1) / (n0^2 - a n0 n1 - rel n1^2)
    XPoly cn0 = s->a ? n0 - n1 : n0;
    XPoly norm = n0 * cn0 - rel_as_xpoly(*s) * (n1 * n1);
    return make(*s, off, den * cn0, -(den * n1), std::move(norm));
}

FF FF::pow(long e) const {
    if (e < 0) return inv().pow(-e);
    FF acc = one(*s), base = *this;
    acc.off = off;
    while (e) {
        if (e & 1) acc = acc * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return acc;
}

FFDisplay FF::display() const {
    FFDisplay d;
    XPoly N0 = n0, N1 = n1, D = den;
    // clear y from the denominator coefficients
    bool den_has_y = false;
    for (auto& k : D.c)
        if (!k.is_y_free()) den_has_y = true;
    if (den_has_y) {
        XPoly Dc(*s);
        Dc.c.reserve(D.c.size());
        for (auto& k : D.c) Dc.c.push_back(k.conj());
        Dc.trim();
        N0 = N0 * Dc;
        N1 = N1 * Dc;
        D = D * Dc;
    }
    // clear the rational-function denominators by their lcm
    Poly lam = Poly::one(s->field);
    auto fold = [&](const XPoly& p) {
        for (auto& k : p.c)
            if (!k.is_zero()) lam = lcm(lam, k.den);
    };
    fold(N0);
    fold(N1);
    fold(D);
    KElem lamk(RingElem::from_poly(*s, lam));
    N0 = N0.scaled(lamk);
    N1 = N1.scaled(lamk);
    D = D.scaled(lamk);
    // collect integral coefficients and cancel the common content
    Poly content(s->field);
    auto take = [&](const XPoly& p) {
        std::vector<RingElem> out;
        out.reserve(p.c.size());
        for (auto& k : p.c) {
            assert(k.den.is_one());
            out.push_back(k.num);
            content = gcd(content, gcd(k.num.p0, k.num.p1));
        }
        return out;
    };
    d.n0 = take(N0);
    d.n1 = take(N1);
    std::vector<RingElem> dr = take(D);
    if (!content.is_one() && !content.is_zero()) {
        auto divall = [&](std::vector<RingElem>& v) {
            for (auto& e : v) e = RingElem(*s, e.p0 / content, e.p1 / content);
        };
        divall(d.n0);
        divall(d.n1);
        divall(dr);
    }
    d.den.reserve(dr.size());
    for (auto& e : dr) {
        assert(e.p1.is_zero());
        d.den.push_back(e.p0);
    }
    return d;
}

namespace {

// leading (alpha, beta, coeff): per alpha there is at most one monomial
// (weight_x even, weight_y odd)
LeadingTerm lead_of(const CurveSpec& s, const std::vector<RingElem>& even,
                    const std::vector<RingElem>& odd) {
    LeadingTerm best;
    best.coeff = KElem::zero(s);
    auto scan = [&](const std::vector<RingElem>& v, int wy_part) {
        for (size_t i = 0; i < v.size(); ++i) {
            if (v[i].is_zero()) continue;
            int alpha = s.weight_x * int(i) + wy_part;
            int beta = v[i].deg();
            if (alpha > best.alpha || (alpha == best.alpha && beta > best.beta)) {
                best.alpha = alpha;
                best.beta = beta;
                best.coeff = KElem(v[i]);
            }
        }
    };
    scan(even, 0);
    scan(odd, s.weight_y);
    return best;
}

}  // namespace

LeadingTerm FF::leading_term() const {
    if (is_zero()) throw std::domain_error("ff: leading term of zero");
    FFDisplay d = display();
    std::vector<RingElem> dre;
    dre.reserve(d.den.size());
    for (auto& p : d.den) dre.push_back(RingElem::from_poly(*s, p));
    LeadingTerm num = lead_of(*s, d.n0, d.n1);
    LeadingTerm den_l = lead_of(*s, dre, {});
    LeadingTerm r;
    r.alpha = num.alpha - den_l.alpha;
    r.beta = num.beta - den_l.beta;
    r.coeff = num.coeff / den_l.coeff;
    return r;
}

LeadingRatio leading_ratio(const FF& f, const FF& g) {
    LeadingTerm lf = f.leading_term(), lg = g.leading_term();
    return {lf.alpha - lg.alpha, lf.beta - lg.beta, lf.coeff / lg.coeff};
}

bool FF::specializable(int d) const {
    return d + s->spec_offset + off >= 0;
}

namespace {

// cached q^j-th powers of y per spec
const RingElem& y_frobenius_power(const CurveSpec& s, int j) {
    static std::mutex mu;
    static std::map<std::pair<const CurveSpec*, int>, RingElem> cache;
    std::scoped_lock lk(mu);
    std::function<const RingElem&(int)> get = [&](int jj) -> const RingElem& {
        auto key = std::make_pair(&s, jj);
        if (auto it = cache.find(key); it != cache.end()) return it->second;
        RingElem v = jj == 0 ? RingElem::gen_y(s) : RingElem(get(jj - 1)).pow(s.field.q);
        return cache.emplace(key, std::move(v)).first->second;
    };
    return get(j);
}

// Horner evaluation at X = x^E; multiplication by the monomial is a shift
RingElem eval_ring_at_power(const CurveSpec& s, const std::vector<RingElem>& v, long E) {
    RingElem acc(s);
    for (size_t i = v.size(); i-- > 0;) {
        if (!acc.is_zero()) acc = RingElem(s, acc.p0.shifted(int(E)), acc.p1.shifted(int(E)));
        acc = acc + v[i];
    }
    return acc;
}

Poly eval_poly_at_power(Gf f, const std::vector<Poly>& v, long E) {
    Poly acc(f);
    for (size_t i = v.size(); i-- > 0;) {
        if (!acc.is_zero()) acc = acc.shifted(int(E));
        acc = acc + v[i];
    }
    return acc;
}

}  // namespace

KElem FF::specialize(int d) const {
    int dp = d + s->spec_offset + off;
    if (dp < 0)
        throw std::domain_error("ff: specialization level below the offset floor");
    if (is_zero()) return KElem::zero(*s);
    FFDisplay disp = display();
    long E = 1;
    for (int i = 0; i < dp; ++i) {
        E *= s->field.q;
        if (E > (1 << 26)) throw std::overflow_error("ff: specialization degree too large");
    }
    RingElem numv = eval_ring_at_power(*s, disp.n0, E);
    if (!disp.n1.empty()) {
        RingElem odd = eval_ring_at_power(*s, disp.n1, E);
        numv = numv + y_frobenius_power(*s, dp) * odd;
    }
    Poly denv = eval_poly_at_power(s->field, disp.den, E);
    return KElem(std::move(numv), std::move(denv));
}

FF ff_from_terms(const CurveSpec& spec, const std::vector<BivarTerm>& num,
                 const std::vector<BivarTerm>& den, int off) {
    auto build = [&](const std::vector<BivarTerm>& terms) {
        // accumulate into Y-linear (even, odd) X-polynomials, reducing the
        // capital relation for Y powers and the little one for y powers
        XPoly even(spec), odd(spec);
        std::vector<std::pair<XPoly, XPoly>> wpow = {{XPoly::one(spec), XPoly(spec)}};
        auto wpower = [&](int e) -> const std::pair<XPoly, XPoly>& {
            while (int(wpow.size()) <= e) {
                const auto& prev = wpow.back();
                XPoly pe = rel_as_xpoly(spec) * prev.second;
                XPoly po = spec.a ? prev.first - prev.second : prev.first;
                wpow.push_back({std::move(pe), std::move(po)});
            }
            return wpow[size_t(e)];
        };
        for (const auto& t : terms) {
            RingElem little =
                RingElem::from_poly(spec, Poly::monomial(spec.field, t.coef, t.xe));
            if (t.ye) little = little * RingElem::gen_y(spec).pow(t.ye);
            KElem kl{std::move(little)};
            const auto& wp = wpower(t.Ye);
            if (!wp.first.is_zero()) even = even + wp.first.shifted(t.Xe).scaled(kl);
            if (!wp.second.is_zero()) odd = odd + wp.second.shifted(t.Xe).scaled(kl);
        }
        return std::make_pair(std::move(even), std::move(odd));
    };
    auto [ne, no] = build(num);
    auto [de, dw] = build(den);
    if (de.is_zero() && dw.is_zero()) throw std::invalid_argument("ff: zero denominator");
    if (!dw.is_zero()) {
        // clear Y from the denominator by the capital conjugate
        XPoly ce = spec.a ? de - dw : de;
        XPoly cw = -dw;
        XPoly nde = de * ce + rel_as_xpoly(spec) * (dw * cw);
        XPoly n2e = ne * ce + rel_as_xpoly(spec) * (no * cw);
        XPoly n2o = ne * cw + no * ce;
        if (spec.a) n2o = n2o - no * cw;
        return FF::make(spec, off, std::move(n2e), std::move(n2o), std::move(nde));
    }
    return FF::make(spec, off, std::move(ne), std::move(no), std::move(de));
}

std::string XPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = c.size(); i-- > 0;) {
        if (c[i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << c[i].str() << ")";
        if (i >= 1) {
            os << "*X";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

std::string FF::str() const {
    std::ostringstream os;
    os << "[off " << off << "] (" << n0.str();
    if (!n1.is_zero()) os << " + Y*{" << n1.str() << "}";
    os << ") / (" << den.str() << ")";
    return os.str();
}

}  // namespace ffmzv
