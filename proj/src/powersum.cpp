#include "ffmzv/powersum.hpp"

#include <algorithm>
#include <cassert>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ffmzv {

namespace {

// 1/a^k as an element of K: conj(a)^k over the raw norm^k
KElem inverse_power_term(const RingElem& a, int k) {
    const CurveSpec& s = *a.s;
    if (!s.has_y()) {
        // A = F_q[x]: plain rational function
        return KElem(RingElem::one(s), pow(a.p0, k));
    }
    RingElem num = a.conj().pow(k);
    Poly n = raw_norm_to_x(a);
    return KElem(std::move(num), pow(n, k));
}

KElem sum_tree(const MonicRange& r, int k, size_t lo, size_t hi) {
    if (hi - lo == 1) return inverse_power_term(r.element(lo), k);
    size_t mid = lo + (hi - lo) / 2;
    return sum_tree(r, k, lo, mid) + sum_tree(r, k, mid, hi);
}

}  // namespace

KElem power_sum_serial(const CurveSpec& spec, int d, int k) {
    assert(d >= 0 && k >= 1);
    MonicRange r(spec, d);
    if (r.count == 0) return KElem::zero(spec);
    // reference path: plain left fold over the enumeration
    KElem acc = inverse_power_term(r.element(0), k);
    for (size_t i = 1; i < r.count; ++i) acc = acc + inverse_power_term(r.element(i), k);
    return acc;
}

KElem power_sum_parallel(const CurveSpec& spec, int d, int k, int jobs) {
    assert(d >= 0 && k >= 1);
    MonicRange r(spec, d);
    if (r.count == 0) return KElem::zero(spec);
    size_t chunks = std::min<size_t>(std::max(jobs * 4, 1), r.count);
    std::vector<KElem> partial(chunks);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(std::max(jobs, 1))
#endif
    for (long c = 0; c < long(chunks); ++c) {
        size_t lo = r.count * size_t(c) / chunks;
        size_t hi = r.count * size_t(c + 1) / chunks;
        partial[size_t(c)] = sum_tree(r, k, lo, hi);
    }
    // fold in index order; exactness makes the result order-independent
    KElem acc = partial[0];
    for (size_t c = 1; c < chunks; ++c) acc = acc + partial[c];
    return acc;
}

KElem PowerSumEngine::power_sum(int d, int k) {
    return at(d, std::span<const int>(&k, 1));
}

KElem PowerSumEngine::at(int d, std::span<const int> tuple) {
    std::vector<int> t(tuple.begin(), tuple.end());
    std::scoped_lock lk(mu_);
    return at_locked(d, t);
}

KElem PowerSumEngine::below(int d, std::span<const int> tuple) {
    std::vector<int> t(tuple.begin(), tuple.end());
    std::scoped_lock lk(mu_);
    return below_locked(d, t);
}

KElem PowerSumEngine::upto(int d, std::span<const int> tuple) {
    std::vector<int> t(tuple.begin(), tuple.end());
    std::scoped_lock lk(mu_);
    KElem b = below_locked(d, t);
    return b + at_locked(d, t);
}

KElem PowerSumEngine::sum(const SumKey& key) {
    assert(key.spec == s_);
    switch (key.mode) {
        case SumMode::AtD: return at(key.d, key.tuple);
        case SumMode::BelowD: return below(key.d, key.tuple);
        default: return upto(key.d, key.tuple);
    }
}

KElem PowerSumEngine::at_locked(int d, const std::vector<int>& tuple) {
    assert(!tuple.empty());
    if (d < 0) return KElem::zero(*s_);
    auto key = std::make_pair(d, tuple);
    if (auto it = cache_at_.find(key); it != cache_at_.end()) return it->second;
    KElem v = KElem::zero(*s_);
    if (count_monic(*s_, d) != 0) {
        KElem head = [&] {
            auto k1 = std::make_pair(d, std::vector<int>{tuple[0]});
            if (auto it = cache_at_.find(k1); it != cache_at_.end()) return it->second;
            KElem ps = power_sum_parallel(*s_, d, tuple[0], jobs_);
            // Galois invariance: the power sums descend to F_q(x) whenever
            // y -> -y-a fixes the monic sets (cases i, iii, iv and the
            // rational rings)
            if (s_->a != 0 || !s_->has_y())
                assert(ps.is_y_free());
            cache_at_.emplace(k1, ps);
            return ps;
        }();
        if (tuple.size() == 1) {
            v = head;
        } else if (!head.is_zero()) {
            std::vector<int> tail(tuple.begin() + 1, tuple.end());
            v = head * below_locked(d, tail);
        }
    }
    cache_at_.emplace(key, v);
    return v;
}

KElem PowerSumEngine::below_locked(int d, const std::vector<int>& tuple) {
    if (d <= 0) return KElem::zero(*s_);
    auto key = std::make_pair(d, tuple);
    if (auto it = cache_below_.find(key); it != cache_below_.end()) return it->second;
    // extend the largest cached prefix
    int d0 = d;
    KElem acc = KElem::zero(*s_);
    while (d0 > 0) {
        auto it = cache_below_.find(std::make_pair(d0, tuple));
        if (it != cache_below_.end()) { acc = it->second; break; }
        --d0;
    }
    for (int i = d0; i < d; ++i) {
        acc = acc + at_locked(i, tuple);
        cache_below_.emplace(std::make_pair(i + 1, tuple), acc);
    }
    return acc;
}

ZetaValue PowerSumEngine::zeta(std::vector<int> tuple, int precision) {
    assert(precision >= 16);
    const int guard = 8;
    int depth_floor = int(tuple.size()) - 1;  // S_d vanishes below the depth
    int stop_deg = -s_->weight_x * (precision + guard) - std::max(s_->weight_y, 0);
    KElem total = KElem::zero(*s_);
    int consecutive_small = 0;
    int used = -1;
    bool seen_nonzero = false;
    for (int d = 0; d <= d_max; ++d) {
        KElem term = at(d, tuple);
        if (!term.is_zero()) {
            total = total + term;
            used = d;
            seen_nonzero = true;
        }
        // a zero term only counts as "below the floor" once the structural
        // zeros at the start (depth shortfall, Weierstrass gaps) are past
        bool small = term.is_zero() ? (seen_nonzero && d >= depth_floor + 3)
                                    : (term.deg() < stop_deg);
        consecutive_small = small ? consecutive_small + 1 : 0;
        if (consecutive_small >= 2) {
            return ZetaValue{s_, std::move(tuple), expand_at_infinity(total, precision),
                             precision, used};
        }
    }
    ZetaValue partial{s_, std::move(tuple), expand_at_infinity(total, precision), precision, used};
    throw PrecisionNotReached(std::move(partial));
}

ZetalikeResult PowerSumEngine::zetalike(const std::vector<int>& tuple, int precision, int guard) {
    assert(tuple.size() >= 2);
    int weight = 0;
    for (int k : tuple) weight += k;
    ZetaValue zt = zeta(tuple, precision);
    ZetaValue zw = zeta({weight}, precision);
    InfSeries ratio = zt.value / zw.value;
    auto re = rational_reconstruct(ratio.even, guard);
    if (!re) return {};
    auto ro = rational_reconstruct(ratio.odd, guard);
    if (!ro) return {};
    return {true, *re, *ro};
}

bool frobenius_power_identity_check(PowerSumEngine& eng, int d, std::span<const int> tuple) {
    int p = eng.spec().field.p();
    std::vector<int> scaled(tuple.begin(), tuple.end());
    for (int& k : scaled) k *= p;
    return eng.at(d, scaled) == eng.at(d, tuple).pow(p);
}

std::vector<int> family_tuple(uint8_t q, int n, int k) {
    std::vector<int> t;
    long qn = 1;
    for (int i = 0; i < n; ++i) qn *= q;
    t.push_back(int(qn - 1));
    for (int j = 0; j <= k; ++j) {
        t.push_back(int((q - 1) * qn));
        qn *= q;
    }
    return t;
}

RatFun genus_zero_family_oracle(uint8_t q, int n, int k) {
    assert((q == 2 || q == 3) && n >= 1 && k >= 0);
    Gf f{q};
    long top = 1;
    for (int i = 0; i < n + k + 1; ++i) {
        top *= q;
        if (top > (1 << 20)) throw std::overflow_error("genus_zero_family_oracle: exponent too large");
    }
    auto bracket = [&](int m) {
        long e = 1;
        for (int i = 0; i < m; ++i) e *= q;
        return Poly::monomial(f, 1, int(e)) - Poly::x(f);
    };
    Poly num = Poly::one(f);
    for (int j = 0; j <= k; ++j) num = num * bracket(n + j);
    Poly den = Poly::one(f);
    long e = top / q;  // q^{n+k}
    for (int j = 1; j <= k + 1; ++j) {
        den = den * pow(bracket(j), e);
        e /= q;
    }
    return RatFun(num, den);
}

namespace {

RatFun relative_term(const CurveSpec& spec, const std::string& base, const RingElem& a, int k) {
    Poly n = norm_to_base(a, base);
    return RatFun(Poly::one(n.f), pow(n, k));
}

RatFun relative_at(const CurveSpec& spec, const std::string& base, int d,
                   std::span<const int> tuple);

RatFun relative_below(const CurveSpec& spec, const std::string& base, int d,
                      std::span<const int> tuple) {
    RatFun acc = RatFun::zero(spec.field);
    for (int i = 0; i < d; ++i) acc = acc + relative_at(spec, base, i, tuple);
    return acc;
}

RatFun relative_at(const CurveSpec& spec, const std::string& base, int d,
                   std::span<const int> tuple) {
    MonicRange r(spec, d);
    RatFun head = RatFun::zero(spec.field);
    for (size_t i = 0; i < r.count; ++i)
        head = head + relative_term(spec, base, r.element(i), tuple[0]);
    if (tuple.size() == 1 || head.is_zero()) return head;
    return head * relative_below(spec, base, d, tuple.subspan(1));
}

}  // namespace

RatFun relative_power_sum(const CurveSpec& spec, const std::string& base, int d,
                          std::span<const int> tuple) {
    assert(!tuple.empty() && d >= 0);
    return relative_at(spec, base, d, tuple);
}

Laurent relative_zeta(const CurveSpec& spec, const std::string& base,
                      std::span<const int> tuple, int precision) {
    const int guard = 8;
    RatFun total = RatFun::zero(spec.field);
    int consecutive_small = 0;
    for (int d = 0; d <= 40; ++d) {
        RatFun term = relative_power_sum(spec, base, d, tuple);
        if (!term.is_zero()) total = total + term;
        if (d >= int(tuple.size()) - 1) {
            if (!term.is_zero() && term.deg() < -(precision + guard)) ++consecutive_small;
            else if (term.is_zero() && d > int(tuple.size()) - 1) ++consecutive_small;
            else consecutive_small = 0;
            if (consecutive_small >= 3) break;
        }
    }
    return Laurent::from_ratfun(total, precision);
}

}  // namespace ffmzv
