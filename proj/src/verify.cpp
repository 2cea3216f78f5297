#include "ffmzv/verify.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <sstream>

#include "ffmzv/dataio.hpp"

namespace ffmzv {

using nlohmann::json;

namespace {

json coeffs_json(const Poly& p) {
    json a = json::array();
    for (uint8_t c : p.c) a.push_back(int(c));
    return a;
}

Poly coeffs_from_json(Gf f, const json& a) {
    Poly p(f);
    for (const auto& v : a) p.c.push_back(uint8_t(v.get<int>()));
    p.trim();
    return p;
}

KElem kpoly(const CurveSpec& s, std::initializer_list<int> coeffs) {
    return KElem(RingElem::from_poly(s, Poly(s.field, coeffs)));
}

long ipow(long b, int e) {
    long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    long long ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - t0)
            .count();
    }
};

// numeric layer: lam * zeta(tuple) == mu * zeta({weight}) to >= span
// 1/x-adic coefficients
void numeric_zeta_identity(Report& rep, PowerSumEngine& eng, const std::string& name,
                           const Poly& lam, std::vector<int> tuple, const Poly& mu,
                           int precision) {
    if (precision < 16) {
        rep.inconclusive(name + " (precision below the verification floor)");
        return;
    }
    try {
        int weight = 0;
        for (int k : tuple) weight += k;
        ZetaValue zt = eng.zeta(tuple, precision + 24);
        ZetaValue zw = eng.zeta({weight}, precision + 24);
        Laurent lams = Laurent::from_poly(lam), mus = Laurent::from_poly(mu);
        InfSeries lhs(eng.spec(), zt.value.even * lams, zt.value.odd * lams);
        InfSeries rhs(eng.spec(), zw.value.even * mus, zw.value.odd * mus);
        rep.check(name, agree_to_common_precision(lhs, rhs, precision));
        rep.params["terms_used"] = std::max(zt.terms_used, zw.terms_used);
    } catch (const PrecisionNotReached&) {
        rep.inconclusive(name + " (degree cap before target precision)");
    }
}

// layer (b): l_d^w * sum == F(d) over the range
void weighted_sum_layer(Report& rep, PowerSumEngine& eng, const FFLibrary& lib,
                        const std::string& label, int w, SumMode mode, std::vector<int> tuple,
                        const std::string& fname, int d_lo, int d_hi) {
    const CurveSpec& s = eng.spec();
    bool ok = true;
    for (int d = d_lo; d <= d_hi && ok; ++d) {
        KElem lw = ell_coefficient(s, d).pow(w);
        KElem sum = mode == SumMode::AtD ? eng.at(d, tuple)
                    : mode == SumMode::BelowD ? eng.below(d, tuple)
                                              : eng.upto(d, tuple);
        ok = lw * sum == lib.get(fname).specialize(d);
    }
    std::ostringstream os;
    os << label << " for d = " << d_lo << ".." << d_hi;
    rep.check(os.str(), ok);
}

void degree_formula(Report& rep, const std::string& label, const FF& f, int w_ell,
                    int d_lo, int d_hi, const std::function<long(int)>& expect) {
    const CurveSpec& s = f.spec();
    bool ok = true;
    std::string detail;
    for (int d = d_lo; d <= d_hi; ++d) {
        KElem v = f.specialize(d);
        long deg = v.deg();
        if (w_ell) deg -= long(w_ell) * ell_coefficient(s, d).deg();
        if (deg != expect(d)) {
            ok = false;
            detail = " (d=" + std::to_string(d) + ": " + std::to_string(deg) +
                     " != " + std::to_string(expect(d)) + ")";
            break;
        }
    }
    rep.check(label + detail, ok);
}

void ell_degree_formula(Report& rep, const std::string& label, const CurveSpec& s, int d_lo,
                        int d_hi, const std::function<long(int)>& expect) {
    bool ok = true;
    std::string detail;
    for (int d = d_lo; d <= d_hi; ++d) {
        long deg = ell_coefficient(s, d).deg();
        if (deg != expect(d)) {
            ok = false;
            detail += " (d=" + std::to_string(d) + ": " + std::to_string(deg) +
                      " != " + std::to_string(expect(d)) + ")";
        }
    }
    rep.check(label + detail, ok);
}

void replay_check(Report& rep, const std::string& system) {
    for (const auto& r : replay_difference_systems()) {
        if (r.system != system) continue;
        rep.check("difference system " + system + " unique and equal to the shipped data" +
                      (r.note.empty() ? "" : " [" + r.note + "]"),
                  r.unique && r.matches_expected);
        rep.params["system_" + system] =
            json{{"rows", r.stats.rows}, {"unknowns", r.stats.unknowns}, {"rank", r.stats.rank}};
        return;
    }
    rep.check("difference system " + system + " present", false);
}

Report theorem_33(const VerifyOptions& opt) {
    Report rep;
    rep.target = "thm-3.3";
    const CurveSpec& s = curve_spec("case-i");
    const FFLibrary& lib = builtin_ffunctions(s);
    PowerSumEngine eng(s, opt.jobs);

    // (a) brute-force layer
    numeric_zeta_identity(rep, eng, "(x^2+x+1) zeta(1,2) = zeta(3) numerically",
                          Poly(s.field, {1, 1, 1}), {1, 2}, Poly::one(s.field), opt.precision);
    {
        // error-degree decay of the partial identity
        bool ok1 = true, ok2 = true;
        KElem c = kpoly(s, {1, 1, 1}), cx = kpoly(s, {0, 1, 1});
        std::vector<int> t12 = {1, 2}, t3 = {3};
        for (int d = 3; d <= std::min(opt.d_hi, 8); ++d) {
            KElem m = eng.at(d, t12) + eng.at(d - 1, t3) + cx * eng.at(d + 1, t12);
            ok1 = ok1 && m.deg() == -(1 << (d + 1));
            KElem e = c * eng.upto(d, t12) + eng.below(d, t3) + cx * eng.at(d + 1, t12);
            ok2 = ok2 && e.deg() == -(1 << (d + 2));
        }
        rep.check("deg[S_d(1,2)+S_{d-1}(3)+(x^2+x)S_{d+1}(1,2)] = -2^(d+1)", ok1);
        rep.check("deg[(x^2+x+1)S_{<=d}(1,2)+S_{<d}(3)+(x^2+x)S_{d+1}(1,2)] = -2^(d+2)", ok2);
    }

    // (b) interpolation layer
    weighted_sum_layer(rep, eng, lib, "l_d S_d(1) = F1(d)", 1, SumMode::AtD, {1}, "F1",
                       opt.d_lo, opt.d_hi);
    weighted_sum_layer(rep, eng, lib, "l_d^3 S_<=d(1,2) = F<=12(d)", 3, SumMode::UpToD, {1, 2},
                       "F<=12", opt.d_lo, opt.d_hi);
    weighted_sum_layer(rep, eng, lib, "l_d^3 S_<d(3) = F<3(d)", 3, SumMode::BelowD, {3}, "F<3",
                       opt.d_lo, opt.d_hi);

    // (c) proof layer: the recursion and the negative-degree argument
    FF g1 = lib.get("g").twist(1);
    rep.check("F<=12^(1) - F12^(1) = (g^(1))^3 F<=12",
              lib.get("F<=12").twist(1) - lib.get("F12").twist(1) ==
                  g1.pow(3) * lib.get("F<=12"));
    FF err = FF::scalar(kpoly(s, {1, 1, 1})) * lib.get("F<=12") - lib.get("F<3");
    rep.check("(x^2+x+1) F<=12 - F<3 has negative weighted degree",
              err.leading_term().alpha < 0);
    if (rep.all_passed()) rep.witness("ratio", RatFun(Poly::one(s.field), Poly(s.field, {1, 1, 1})));
    return rep;
}

Report theorem_35(const VerifyOptions& opt) {
    Report rep;
    rep.target = "thm-3.5";
    const CurveSpec& s = curve_spec("case-i");
    const FFLibrary& lib = builtin_ffunctions(s);
    PowerSumEngine eng(s, opt.jobs);
    int lo = std::max(opt.d_lo, 2), hi = opt.d_hi;
    weighted_sum_layer(rep, eng, lib, "(i) l_d S_d(1) = F1(d)", 1, SumMode::AtD, {1}, "F1", lo, hi);
    weighted_sum_layer(rep, eng, lib, "(ii) l_d S_<d(1) = F<1(d)", 1, SumMode::BelowD, {1},
                       "F<1", lo, hi);
    weighted_sum_layer(rep, eng, lib, "(iii) l_d^3 S_d(1,2) = F12(d)", 3, SumMode::AtD, {1, 2},
                       "F12", lo, hi);
    weighted_sum_layer(rep, eng, lib, "(iv) l_d^3 S_d(3) = F3(d)", 3, SumMode::AtD, {3}, "F3",
                       lo, hi);
    weighted_sum_layer(rep, eng, lib, "(v) l_d^3 S_<d(3) = F<3(d)", 3, SumMode::BelowD, {3},
                       "F<3", lo, hi);
    weighted_sum_layer(rep, eng, lib, "(vi) l_d^3 S_<=d(1,2) = F<=12(d)", 3, SumMode::UpToD,
                       {1, 2}, "F<=12", lo, hi);
    rep.check("g_m(d) = g(d-1)^4 for d in range", [&] {
        for (int d = lo; d <= hi; ++d)
            if (!(lib.get("g_m").specialize(d) == lib.get("g").specialize(d - 1).pow(4)))
                return false;
        return true;
    }());
    rep.check("C_m(d) = C(d-1)^2 for d in range", [&] {
        for (int d = lo; d <= hi; ++d)
            if (!(lib.get("C_m").specialize(d) == lib.get("C").specialize(d - 1).pow(2)))
                return false;
        return true;
    }());
    // the d = 0, 1 boundary is reported without being asserted
    for (int d = 0; d <= 1; ++d) {
        bool holds = true;
        try {
            std::vector<int> t1 = {1};
            holds = ell_coefficient(s, d) * eng.at(d, t1) == lib.get("F1").specialize(d);
        } catch (const std::exception&) {
            holds = false;
        }
        rep.params["boundary_d" + std::to_string(d)] = holds;
    }
    return rep;
}

Report theorem_51(const VerifyOptions& opt) {
    Report rep;
    rep.target = "thm-5.1";
    const CurveSpec& s = curve_spec("case-i");
    const FFLibrary& lib = builtin_ffunctions(s);
    PowerSumEngine eng(s, opt.jobs);

    numeric_zeta_identity(rep, eng, "(x^8+x^6+x^5+x^3+1) zeta(3,4) = (x^4+x^2) zeta(7)",
                          Poly(s.field, {1, 0, 0, 1, 0, 1, 1, 0, 1}), {3, 4},
                          Poly(s.field, {0, 0, 1, 0, 1}), opt.precision);

    weighted_sum_layer(rep, eng, lib, "l_d^7 S_d(3,4) = F34(d)", 7, SumMode::AtD, {3, 4}, "F34",
                       opt.d_lo, std::min(opt.d_hi, 7));
    weighted_sum_layer(rep, eng, lib, "l_d^7 S_<d(7) = F<7(d)", 7, SumMode::BelowD, {7}, "F<7",
                       opt.d_lo, std::min(opt.d_hi, 7));
    weighted_sum_layer(rep, eng, lib, "l_d^7 S_<=d(3,4) = F<=34(d)", 7, SumMode::UpToD, {3, 4},
                       "F<=34", opt.d_lo, std::min(opt.d_hi, 7));

    FF g1 = lib.get("g").twist(1);
    rep.check("F<=34^(1) - (g^(1))^7 F<=34 = F34^(1)",
              lib.get("F<=34").twist(1) - g1.pow(7) * lib.get("F<=34") ==
                  lib.get("F34").twist(1));
    LeadingRatio lr = leading_ratio(lib.get("F<7"), lib.get("F<=34"));
    RatFun want(Poly(s.field, {1, 0, 0, 1, 0, 1, 1, 0, 1}), Poly(s.field, {0, 0, 1, 0, 1}));
    rep.check("leading ratio F<7 : F<=34 = (x^8+x^6+x^5+x^3+1)/(x^4+x^2)",
              lr.dalpha == 0 && lr.coeff == KElem::from_ratfun(s, want));
    replay_check(rep, "case-i-w7");
    if (rep.all_passed()) rep.witness("ratio", RatFun(Poly(s.field, {0, 0, 1, 0, 1}),
                                                      Poly(s.field, {1, 0, 0, 1, 0, 1, 1, 0, 1})));
    return rep;
}

Report theorem_A(const VerifyOptions& opt) {
    Report rep;
    rep.target = "thm-A";
    const CurveSpec& s = curve_spec("case-ii");
    const FFLibrary& lib = builtin_ffunctions(s);
    PowerSumEngine eng(s, opt.jobs);

    Poly lam(s.field, {-1, 0, 1, -1, 1, 0, 1, 0, 0, 1});  // x^9+x^6+x^4-x^3+x^2-1
    Poly mu(s.field, {1, -1, 0, 1});                       // x^3-x+1
    numeric_zeta_identity(rep, eng, "(x^9+x^6+x^4-x^3+x^2-1) zeta(2,6) = (x^3-x+1) zeta(8)",
                          lam, {2, 6}, mu, opt.precision);

    int lo = 1, hi = std::min(opt.d_hi, 5);
    weighted_sum_layer(rep, eng, lib, "l_d S_d(1) = F1(d)", 1, SumMode::AtD, {1}, "F1", lo, hi);
    weighted_sum_layer(rep, eng, lib, "l_d^2 S_<d(2) = F<2(d)", 2, SumMode::BelowD, {2}, "F<2",
                       lo, hi);
    weighted_sum_layer(rep, eng, lib, "l_d^8 S_d(2,6) = F26(d)", 8, SumMode::AtD, {2, 6}, "F26",
                       lo, hi);
    weighted_sum_layer(rep, eng, lib, "l_d^8 S_<d(8) = F<8(d)", 8, SumMode::BelowD, {8}, "F<8",
                       lo, hi);
    weighted_sum_layer(rep, eng, lib, "l_d^8 S_<=d(2,6) = F<=26(d)", 8, SumMode::UpToD, {2, 6},
                       "F<=26", lo, hi);

    FF g1 = lib.get("g").twist(1);
    rep.check("F<=26^(1) - (g^(1))^8 F<=26 = F26^(1)",
              lib.get("F<=26").twist(1) - g1.pow(8) * lib.get("F<=26") ==
                  lib.get("F26").twist(1));
    replay_check(rep, "case-ii-w8");

    FF err = FF::scalar(KElem(RingElem::from_poly(s, lam))) * lib.get("F<=26") -
             FF::scalar(KElem(RingElem::from_poly(s, mu))) * lib.get("F<8");
    rep.check("E = lam F<=26 - mu F<8 has negative weighted degree",
              err.leading_term().alpha < 0);
    degree_formula(rep, "deg E(d) = -(-27+15*3^d)", err, 0, 2, 5,
                   [](int d) { return 27 - 15 * ipow(3, d); });
    ell_degree_formula(rep, "deg l_d = -(3^(d+1)-3)/2 for d = 1..6", s, 1, 6,
                       [](int d) { return -(ipow(3, d + 1) - 3) / 2; });
    degree_formula(rep, "deg E(d)/l_d^8 = -(-15+3^(d+1))", err, 8, 2, 5,
                   [](int d) { return 15 - ipow(3, d + 1); });
    if (rep.all_passed()) rep.witness("ratio", RatFun(mu, lam));
    return rep;
}

Report theorem_B(const VerifyOptions& opt) {
    Report rep;
    rep.target = "thm-B";
    const CurveSpec& s = curve_spec("case-iii");
    const FFLibrary& lib = builtin_ffunctions(s);
    PowerSumEngine eng(s, opt.jobs);

    Poly lam(s.field, {1, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1});
    Poly mu(s.field, {1, 0, 0, 1, 0, 0, 1, 0, 0, 1, 0, 0, 1});
    numeric_zeta_identity(rep, eng,
                          "(x^24+x^18+x^9+x^3+1) zeta(3,12) = (x^12+x^9+x^6+x^3+1) zeta(15)",
                          lam, {3, 12}, mu, opt.precision);

    int lo = 1, hi = 3;
    weighted_sum_layer(rep, eng, lib, "l_d S_d(1) = F1(d)", 1, SumMode::AtD, {1}, "F1", lo, hi);
    weighted_sum_layer(rep, eng, lib, "l_d^3 S_<d(3) = F<3(d)", 3, SumMode::BelowD, {3}, "F<3",
                       lo, hi);
    weighted_sum_layer(rep, eng, lib, "l_d^15 S_d(3,12) = F3,12(d)", 15, SumMode::AtD, {3, 12},
                       "F3,12", lo, hi);
    weighted_sum_layer(rep, eng, lib, "l_d^15 S_<d(15) = F<15(d)", 15, SumMode::BelowD, {15},
                       "F<15", lo, hi);
    weighted_sum_layer(rep, eng, lib, "l_d^15 S_<=d(3,12) = F<=3,12(d)", 15, SumMode::UpToD,
                       {3, 12}, "F<=3,12", lo, hi);

    FF g1 = lib.get("g").twist(1);
    rep.check("F<=3,12^(1) - (g^(1))^15 F<=3,12 = F3,12^(1)",
              lib.get("F<=3,12").twist(1) - g1.pow(15) * lib.get("F<=3,12") ==
                  lib.get("F3,12").twist(1));
    replay_check(rep, "case-iii-w15");

    FF err = FF::scalar(KElem(RingElem::from_poly(s, lam))) * lib.get("F<=3,12") -
             FF::scalar(KElem(RingElem::from_poly(s, mu))) * lib.get("F<15");
    LeadingTerm lt = err.leading_term();
    // numerator leading term (x^44+x^41+x^38+x^35+x^32+x^20+x^17+x^14+x^11+x^2) X^38
    // over the common denominator (x^4+x)(X^4+x)^15
    Poly num_lead(s.field, {0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 1,
                            0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1,
                            0, 0, 1, 0, 0, 1, 0, 0, 1});
    rep.check("leading term of E matches the stated X^38 coefficient",
              lt.alpha == 2 * 38 - 2 * 60 &&
                  lt.coeff == KElem::from_ratfun(s, RatFun(num_lead, Poly(s.field, {0, 1, 0, 0, 1}))));
    degree_formula(rep, "deg E(d) = -(-80+44*4^d)", err, 0, 2, 4,
                   [](int d) { return 80 - 44 * ipow(4, d); });
    ell_degree_formula(rep, "deg l_d = -8(4^d-1)/3 for d = 1..6", s, 1, 6,
                       [](int d) { return -8 * (ipow(4, d) - 1) / 3; });
    degree_formula(rep, "deg E(d)/l_d^15 = -(-40+4^(d+1))", err, 15, 2, 4,
                   [](int d) { return 40 - ipow(4, d + 1); });
    if (rep.all_passed()) rep.witness("ratio", RatFun(mu, lam));
    return rep;
}

Report theorem_C(const VerifyOptions& opt) {
    Report rep;
    rep.target = "thm-C";
    const CurveSpec& s = curve_spec("case-iv");
    const FFLibrary& lib = builtin_ffunctions(s);
    PowerSumEngine eng(s, opt.jobs);

    Poly lam(s.field, {1, 1, 0, 1, 1, 1, 1, 0, 1});  // x^8+x^6+x^5+x^4+x^3+x+1
    Poly mu(s.field, {1, 1, 0, 1, 0, 1, 1});         // x^6+x^5+x^3+x+1
    numeric_zeta_identity(rep, eng,
                          "(x^8+x^6+x^5+x^4+x^3+x+1) zeta(1,2) = (x^6+x^5+x^3+x+1) zeta(3)",
                          lam, {1, 2}, mu, opt.precision);

    int lo = 2, hi = opt.d_hi;
    weighted_sum_layer(rep, eng, lib, "l_d S_d(1) = F1(d)", 1, SumMode::AtD, {1}, "F1", lo, hi);
    weighted_sum_layer(rep, eng, lib, "l_d S_<d(1) = F<1(d)", 1, SumMode::BelowD, {1}, "F<1",
                       lo, hi);
    weighted_sum_layer(rep, eng, lib, "l_d^3 S_d(1,2) = F12(d)", 3, SumMode::AtD, {1, 2}, "F12",
                       lo, hi);
    weighted_sum_layer(rep, eng, lib, "l_d^3 S_<d(3) = F<3(d)", 3, SumMode::BelowD, {3}, "F<3",
                       lo, hi);
    weighted_sum_layer(rep, eng, lib, "l_d^3 S_<=d(1,2) = F<=12(d)", 3, SumMode::UpToD, {1, 2},
                       "F<=12", lo, hi);

    FF g1 = lib.get("g").twist(1);
    rep.check("F<=12^(1) - (g^(1))^3 F<=12 = F12^(1)",
              lib.get("F<=12").twist(1) - g1.pow(3) * lib.get("F<=12") ==
                  lib.get("F12").twist(1));
    replay_check(rep, "case-iv-lt1");
    replay_check(rep, "case-iv-le12");
    replay_check(rep, "case-iv-lt3");

    FF err = FF::scalar(KElem(RingElem::from_poly(s, lam))) * lib.get("F<=12") -
             FF::scalar(KElem(RingElem::from_poly(s, mu))) * lib.get("F<3");
    LeadingTerm lt = err.leading_term();
    Poly num_lead(s.field, {0, 0, 1, 0, 1, 0, 1, 1, 0, 1, 0, 1, 0, 1, 1});
    rep.check("leading term of E matches the stated X^46 coefficient",
              lt.alpha == 2 * 46 - 2 * 72 &&
                  lt.coeff == KElem::from_ratfun(s, RatFun(num_lead, Poly(s.field, {0, 1, 1}))));
    degree_formula(rep, "deg E(d) = -(-24+52*2^(d-2)) for d >= 3", err, 0, 3, 8,
                   [](int d) { return 24 - 52 * ipow(2, d - 2); });
    // the source's own degree formula for l_d; inconsistent with its E(d)
    // and E/l^3 displays, which pin deg l_d = -(2^(d+2)-4) instead
    ell_degree_formula(rep, "deg l_d = -(2^(d+2)-2) for d = 2..6 (as printed)", s, 2, 6,
                       [](int d) { return -(ipow(2, d + 2) - 2); });
    ell_degree_formula(rep, "deg l_d = -(2^(d+2)-4) for d = 1..6 (consistent value)", s, 1, 6,
                       [](int d) { return -(ipow(2, d + 2) - 4); });
    degree_formula(rep, "deg E(d)/l_d^3 = -(-12+2^d) for d >= 3", err, 3, 3, 8,
                   [](int d) { return 12 - ipow(2, d); });
    rep.params["E_over_ell3_at_d2"] = err.specialize(2).deg() - 3 * ell_coefficient(s, 2).deg();
    if (rep.all_passed()) rep.witness("ratio", RatFun(mu, lam));
    return rep;
}

}  // namespace

void Report::witness(const std::string& name, const RatFun& r) {
    witnesses.push_back(json{{"name", name},
                             {"num_coeffs", coeffs_json(r.num)},
                             {"den_coeffs", coeffs_json(r.den)}});
}

void Report::witness_pair(const std::string& name, const RatFun& even, const RatFun& odd) {
    witness(name, even);
    if (!odd.is_zero()) witness(name + "_y", odd);
}

json report_to_json(const Report& r) {
    json j;
    j["target"] = r.target;
    j["verdict"] = r.verdict == Report::PASS          ? "PASS"
                   : r.verdict == Report::INCONCLUSIVE ? "INCONCLUSIVE"
                                                       : "FAIL";
    j["witnesses"] = r.witnesses;
    j["params"] = r.params;
    j["ms"] = r.ms;
    j["checks"] = r.checks;
    return j;
}

Report report_from_json(const json& j) {
    Report r;
    r.target = j.at("target").get<std::string>();
    std::string v = j.at("verdict").get<std::string>();
    r.verdict = v == "PASS" ? Report::PASS : v == "INCONCLUSIVE" ? Report::INCONCLUSIVE : Report::FAIL;
    r.witnesses = j.at("witnesses");
    r.params = j.at("params");
    r.ms = j.at("ms").get<long long>();
    for (const auto& c : j.value("checks", json::array())) r.checks.push_back(c.get<std::string>());
    return r;
}

bool operator==(const Report& a, const Report& b) {
    return report_to_json(a) == report_to_json(b);
}

Report verify_theorem(const std::string& id, const VerifyOptions& opt) {
    Timer t;
    Report rep;
    if (id == "thm-3.3") rep = theorem_33(opt);
    else if (id == "thm-3.5") rep = theorem_35(opt);
    else if (id == "thm-5.1") rep = theorem_51(opt);
    else if (id == "thm-A") rep = theorem_A(opt);
    else if (id == "thm-B") rep = theorem_B(opt);
    else if (id == "thm-C") rep = theorem_C(opt);
    else throw std::invalid_argument("unknown verification target: " + id);
    rep.params["precision"] = opt.precision;
    rep.params["d_range"] = std::to_string(opt.d_lo) + ".." + std::to_string(opt.d_hi);
    rep.ms = t.ms();
    return rep;
}

std::vector<std::string> verify_target_ids() {
    return {"thm-3.3", "thm-3.5", "thm-5.1", "thm-A", "thm-B", "thm-C"};
}

namespace {

// the displayed unreduced ratio for conjecture-3.2, as an exact K element
KElem conjecture32_display(const CurveSpec& s, int n) {
    RingElem x = RingElem::gen_x(s), y = RingElem::gen_y(s), one = RingElem::one(s);
    auto xp = [&](long e) { return RingElem::from_poly(s, Poly::monomial(s.field, 1, int(e))); };
    if (s.id == "case-i") {
        long e = ipow(2, n + 1);
        RingElem num = xp(e) + x * x;
        RingElem den = y.pow(e) + y + xp(e + 1) + x;
        return KElem(num) / KElem(den);
    }
    (void)one;
    if (s.id == "case-ii") {
        long e = ipow(3, n);
        RingElem a = xp(e) - x, b = y.pow(e) - y;
        RingElem num = a * b * b + a * (-xp(e) - x * x * x - x + one);
        RingElem den = xp(2 * 3 * e) + xp(1 + 3 * e) + xp(3 * e) + y.pow(3 * e + 1) +
                       x * x - x + one;
        return KElem(num) / KElem(den);
    }
    if (s.id == "case-iii") {
        long e = ipow(4, n), e1 = 4 * e;
        RingElem y4 = y.pow(4);
        RingElem num = (xp(e) + x) * (y.pow(e1) + y4) +
                       (xp(e1) + xp(4)) * (xp(e + 2) + x * x * x + one) + (xp(e) + x);
        RingElem den = xp(2 * e1 + 2) + xp(e1) * y.pow(e1) + xp(e1) * y + xp(e1) +
                       x * y.pow(e1) + x * y;
        return KElem(num) / KElem(den);
    }
    if (s.id == "case-iv") {
        long e = ipow(2, n - 1);
        RingElem X = xp(e), Y = y.pow(e);
        auto Xp = [&](int k) { return X.pow(k); };
        RingElem c1 = one + x, c2 = one + x + x * x;
        RingElem num = Xp(22) + c1 * (Xp(20) + Xp(18) + Xp(16)) + c2 * (Xp(12) + Xp(10)) +
                       Xp(9) + x * Xp(8) + Xp(5) + (Y + y) * (Xp(2) + Xp(4)) + x * x + x;
        RingElem den = Xp(24) + x * Xp(16) + c1 * Xp(8) + x * x + x;
        return KElem(num) / KElem(den);
    }
    throw std::invalid_argument("conjecture 3.2 has no displayed ratio for " + s.id);
}

}  // namespace

Report verify_conjecture32(const std::string& curve_id, int n, int precision) {
    Timer t;
    Report rep;
    rep.target = "conj-3.2";
    rep.params["curve"] = curve_id;
    rep.params["n"] = n;
    rep.params["precision"] = precision;
    const CurveSpec& s = curve_spec(curve_id);
    PowerSumEngine eng(s);
    int q = s.field.q;
    std::vector<int> tuple = {int(ipow(q, n)) - 1, int(ipow(q, n)) * (q - 1)};

    KElem display = conjecture32_display(s, n);
    auto [de, dodd] = display.components();
    // two distinct rationals of total degree <= D can agree on 2D leading
    // coefficients, so the working precision scales with the target
    int dsum = std::max(de.num.deg(), 0) + de.den.deg() +
               std::max(dodd.num.deg(), 0) + std::max(dodd.den.deg(), 0);
    int working = std::max(precision, 2 * dsum + 50);
    rep.params["precision_used"] = working;
    try {
        ZetalikeResult z = eng.zetalike(tuple, working);
        rep.check("ratio is rational at the working precision", z.detected);
        if (z.detected) {
            rep.check("reconstructed ratio equals the displayed R_n reduced via the relation",
                      z.even == de && z.odd == dodd);
            rep.witness_pair("R_n", z.even, z.odd);
        }
    } catch (const PrecisionNotReached&) {
        rep.inconclusive("zeta did not stabilize below the degree cap");
    }

    if (s.id == "case-i") {
        // the structural form [n]^2 / C(n+1)
        const FFLibrary& lib = builtin_ffunctions(s);
        Poly bx = Poly::monomial(s.field, 1, int(ipow(2, n))) + Poly::x(s.field);
        KElem bform = kpoly(s, {0}) + KElem(RingElem::from_poly(s, bx * bx));
        KElem structural = bform / lib.get("C").specialize(n + 1);
        rep.check("R_n = B_x(n)^2 / C(n+1)", structural == display);
        if (n == 1)
            rep.check("R_1 reduces to 1/(x^2+x+1)",
                      display == KElem::one_of(s) / kpoly(s, {1, 1, 1}));
        if (n == 2) {
            rep.check("R_2 reduces to (x^4+x^2)/(x^8+x^6+x^5+x^3+1)",
                      display == kpoly(s, {0, 0, 1, 0, 1}) /
                                     kpoly(s, {1, 0, 0, 1, 0, 1, 1, 0, 1}));
            Poly lhs = Poly(s.field, {1, 1, 1});
            rep.check("(x^2+x+1)^2 (x^8+x^6+x^5+x^3+1) = x^12+x^9+x^6+x^4+x^3+x^2+1",
                      lhs * lhs * Poly(s.field, {1, 0, 0, 1, 0, 1, 1, 0, 1}) ==
                          Poly(s.field, {1, 0, 1, 1, 1, 0, 1, 0, 0, 1, 0, 0, 1}));
        }
    }
    rep.ms = t.ms();
    return rep;
}

Report verify_family31(const CurveSpec& spec, int n, int k, int precision) {
    Timer t;
    Report rep;
    rep.target = "conj-3.1";
    rep.params["curve"] = spec.id;
    rep.params["n"] = n;
    rep.params["k"] = k;
    rep.params["precision"] = precision;
    PowerSumEngine eng(spec);
    std::vector<int> tuple = family_tuple(spec.field.q, n, k);
    json jt = json::array();
    for (int v : tuple) jt.push_back(v);
    rep.params["tuple"] = jt;
    int working = precision;
    if (!spec.has_y()) {
        RatFun oracle = genus_zero_family_oracle(spec.field.q, n, k);
        working = std::max(precision, 2 * (std::max(oracle.num.deg(), 0) + oracle.den.deg()) + 50);
    }
    rep.params["precision_used"] = working;
    try {
        ZetalikeResult z = eng.zetalike(tuple, working);
        if (z.detected && spec.has_y()) {
            // without a closed form, demand a stable margin below the
            // reconstruction bound before trusting the detection
            int got = std::max(z.even.num.deg(), 0) + z.even.den.deg() +
                      std::max(z.odd.num.deg(), 0) + std::max(z.odd.den.deg(), 0);
            if (2 * got + 40 > working) {
                rep.inconclusive("ratio too close to the reconstruction bound");
                rep.ms = t.ms();
                return rep;
            }
        }
        rep.check("family tuple is zetalike", z.detected);
        if (z.detected) {
            rep.witness_pair("ratio", z.even, z.odd);
            if (!spec.has_y()) {
                RatFun oracle = genus_zero_family_oracle(spec.field.q, n, k);
                rep.check("ratio equals the bracket-product formula", z.even == oracle && z.odd.is_zero());
            } else if (k == 0) {
                KElem display = conjecture32_display(spec, n);
                auto [de, dodd] = display.components();
                rep.check("ratio equals the displayed R_n", z.even == de && z.odd == dodd);
            }
        }
    } catch (const PrecisionNotReached&) {
        rep.inconclusive("zeta did not stabilize below the degree cap");
    }
    rep.ms = t.ms();
    return rep;
}

Report rank_experiment(const CurveSpec& spec, const std::string& quantity_set, int d_lo,
                       int d_hi) {
    Timer t;
    Report rep;
    rep.target = "rank-weight3";
    rep.params["curve"] = spec.id;
    rep.params["set"] = quantity_set;
    rep.params["d_range"] = std::to_string(d_lo) + ".." + std::to_string(d_hi);
    PowerSumEngine eng(spec);
    KElem z = KElem::zero(spec);

    auto run = [&](const std::vector<std::function<KElem(int)>>& quantities,
                   bool expect_full) {
        Mat<KElem> m;
        for (int d = d_lo; d <= d_hi; ++d) {
            std::vector<KElem> row;
            row.reserve(quantities.size());
            for (const auto& qf : quantities) row.push_back(qf(d));
            m.push_back(std::move(row));
        }
        auto sol = linear_solve(m, std::vector<KElem>(m.size(), z), z);
        int rk = sol.rank;
        rep.params["rank"] = rk;
        rep.params["quantities"] = int(quantities.size());
        if (expect_full) {
            rep.check("no non-trivial linear relation (rank " + std::to_string(rk) + " of " +
                          std::to_string(quantities.size()) + ")",
                      rk == int(quantities.size()));
        } else {
            rep.check("planted dependency detected", rk < int(quantities.size()));
            if (!sol.kernel.empty()) {
                json kv = json::array();
                for (const auto& e : sol.kernel[0]) kv.push_back(e.str());
                rep.params["relation"] = kv;
            }
        }
    };

    auto at = [&](std::vector<int> tup, int shift) {
        return [&eng, tup, shift](int d) { return eng.at(d + shift, tup); };
    };
    if (quantity_set == "8") {
        std::vector<std::function<KElem(int)>> qs;
        for (int shift = 0; shift <= 1; ++shift)
            for (auto tup : std::vector<std::vector<int>>{{3}, {1, 2}, {2, 1}, {1, 1, 1}})
                qs.push_back(at(tup, shift));
        run(qs, true);
    } else if (quantity_set == "10") {
        std::vector<std::function<KElem(int)>> qs;
        for (int shift = 1; shift <= 5; ++shift) qs.push_back(at({1, 2}, shift));
        for (int shift = 0; shift <= 4; ++shift) qs.push_back(at({3}, shift));
        run(qs, true);
    } else if (quantity_set == "control") {
        // S_d(2) and S_d(1)^2 are dependent through the Frobenius
        std::vector<std::function<KElem(int)>> qs;
        qs.push_back(at({2}, 0));
        qs.push_back([&eng](int d) {
            std::vector<int> t1 = {1};
            return eng.at(d, t1).pow(2);
        });
        qs.push_back(at({3}, 0));
        run(qs, false);
    } else {
        throw std::invalid_argument("rank_experiment: set must be 8, 10 or control");
    }
    rep.ms = t.ms();
    return rep;
}

Report scan_zetalike(const CurveSpec& spec, int max_weight, int max_depth, int precision,
                     int jobs) {
    Timer t;
    Report rep;
    rep.target = "scan";
    rep.params["curve"] = spec.id;
    rep.params["max_weight"] = max_weight;
    rep.params["max_depth"] = max_depth;
    rep.params["precision"] = precision;
    PowerSumEngine eng(spec, jobs);
    int p = spec.field.p();

    // depth >= 2 tuples in increasing weight, then lexicographic order;
    // the zetalике pass restricts to primitive ones, the ratio-pair pass
    // does not (the rational ring has hits like zeta(1,3)/zeta(2,2))
    std::vector<std::vector<int>> tuples;
    std::vector<bool> primitive_flag;
    for (int w = 2; w <= max_weight; ++w) {
        std::vector<int> cur;
        std::function<void(int, int)> gw = [&](int remaining, int depth) {
            if (remaining == 0 && depth >= 2) {
                bool primitive = false;
                for (int v : cur)
                    if (v % p) primitive = true;
                tuples.push_back(cur);
                primitive_flag.push_back(primitive);
                return;
            }
            if (depth == max_depth || remaining == 0) return;
            for (int k = 1; k <= remaining; ++k) {
                cur.push_back(k);
                gw(remaining - k, depth + 1);
                cur.pop_back();
            }
        };
        gw(w, 0);
    }

    auto tuple_str = [](const std::vector<int>& tu) {
        std::string r = "(";
        for (size_t i = 0; i < tu.size(); ++i) r += (i ? "," : "") + std::to_string(tu[i]);
        return r + ")";
    };

    json rows = json::array();
    std::vector<std::vector<int>> hits;
    int inconclusive = 0;
    for (size_t ti = 0; ti < tuples.size(); ++ti) {
        if (!primitive_flag[ti]) continue;
        const auto& tu = tuples[ti];
        int weight = 0;
        for (int v : tu) weight += v;
        json row;
        row["tuple"] = tuple_str(tu);
        row["weight"] = weight;
        row["depth"] = int(tu.size());
        try {
            // a large guard rejects boundary convergents that merely fit
            // the window; genuine zetalike ratios are far smaller
            ZetalikeResult z = eng.zetalike(tu, precision, std::max(10, precision / 2));
            row["verdict"] = z.detected ? "zetalike" : "not-detected";
            if (z.detected) {
                row["ratio"] = z.even.str() + (z.odd.is_zero() ? "" : " + y*" + z.odd.str());
                hits.push_back(tu);
            } else {
                row["ratio"] = "";
            }
        } catch (const PrecisionNotReached&) {
            row["verdict"] = "inconclusive";
            row["ratio"] = "";
            ++inconclusive;
        }
        rows.push_back(std::move(row));
    }
    rep.params["tuples_scanned"] = int(rows.size());
    rep.params["inconclusive"] = inconclusive;
    json jh = json::array();
    for (const auto& h : hits) jh.push_back(tuple_str(h));
    rep.params["zetalike_hits"] = jh;

    // same-weight ratio pairs among the primitive tuples
    json pair_rows = json::array();
    std::map<std::vector<int>, ZetaValue> zcache;
    auto zeta_of = [&](const std::vector<int>& tu) -> const ZetaValue& {
        auto it = zcache.find(tu);
        if (it == zcache.end()) it = zcache.emplace(tu, eng.zeta(tu, precision)).first;
        return it->second;
    };
    for (size_t i = 0; i < tuples.size(); ++i) {
        int wi = 0;
        for (int v : tuples[i]) wi += v;
        for (size_t j = i + 1; j < tuples.size(); ++j) {
            int wj = 0;
            for (int v : tuples[j]) wj += v;
            if (wi != wj) continue;
            try {
                InfSeries ratio = zeta_of(tuples[i]).value / zeta_of(tuples[j]).value;
                int pg = std::max(10, precision / 2);
                auto re = rational_reconstruct(ratio.even, pg);
                if (!re) continue;
                auto ro = rational_reconstruct(ratio.odd, pg);
                if (!ro) continue;
                json row;
                row["pair"] = tuple_str(tuples[i]) + "/" + tuple_str(tuples[j]);
                row["weight"] = wi;
                row["ratio"] = re->str() + (ro->is_zero() ? "" : " + y*" + ro->str());
                pair_rows.push_back(std::move(row));
            } catch (const PrecisionNotReached&) {
                ++inconclusive;
            }
        }
    }
    rep.params["pair_hits"] = pair_rows;
    rep.params["scan_rows"] = rows;
    rep.check("scan completed", true);
    rep.ms = t.ms();
    return rep;
}

std::string scan_csv(const Report& r) {
    std::ostringstream os;
    os << "tuple,weight,depth,verdict,ratio\n";
    if (r.params.contains("scan_rows"))
        for (const auto& row : r.params["scan_rows"]) {
            os << row["tuple"].get<std::string>() << "," << row["weight"].get<int>() << ","
               << row["depth"].get<int>() << "," << row["verdict"].get<std::string>() << ",\""
               << row["ratio"].get<std::string>() << "\"\n";
        }
    return os.str();
}

Report relative_report(const CurveSpec& spec, const std::string& base, int precision) {
    Timer t;
    Report rep;
    rep.target = "relative";
    rep.params["curve"] = spec.id;
    rep.params["base"] = base;
    rep.params["precision"] = precision;

    if (base == "y") {
        // the degree-1 and degree-2 relative power sums vanish exactly
        for (int d = 1; d <= 2; ++d) {
            bool ok = true;
            for (int k = 1; k <= 3; ++k) {
                std::vector<int> tu = {k};
                ok = ok && relative_power_sum(spec, "y", d, tu).is_zero();
            }
            rep.check("relative power sums over F_q[y] vanish at degree " + std::to_string(d),
                      ok);
        }
        rep.ms = t.ms();
        return rep;
    }

    // descent to the rational subring: zeta_{A/F_q[x]}(s) = zeta_{F_q[t]}(p s)
    const CurveSpec& rational = curve_spec(spec.field.q == 3 ? "genus0-q3" : "genus0-q2");
    PowerSumEngine reng(rational);
    int p = spec.field.p();
    auto check_tuple = [&](const std::vector<int>& tu) {
        std::vector<int> scaled = tu;
        for (int& v : scaled) v *= p;
        Laurent lhs = relative_zeta(spec, "x", tu, precision);
        ZetaValue rhs = reng.zeta(scaled, precision);
        std::string nm = "relative zeta";
        nm += "(";
        for (size_t i = 0; i < tu.size(); ++i) nm += (i ? "," : "") + std::to_string(tu[i]);
        nm += ") matches the rational ring at weight p*s";
        rep.check(nm, agree_to_common_precision(lhs, rhs.value.even, precision - 30));
    };
    for (int k = 1; k <= 3; ++k) check_tuple({k});
    for (int s1 = 1; s1 <= 5; ++s1)
        for (int s2 = 1; s1 + s2 <= 6; ++s2) check_tuple({s1, s2});
    rep.ms = t.ms();
    return rep;
}

Report solver_replay_report() {
    Timer t;
    Report rep;
    rep.target = "solver-replay";
    for (const auto& r : replay_difference_systems()) {
        rep.check(r.system + " unique and equal to the shipped data" +
                      (r.note.empty() ? "" : " [" + r.note + "]"),
                  r.unique && r.matches_expected);
        rep.params[r.system] = json{{"rows", r.stats.rows},
                                    {"unknowns", r.stats.unknowns},
                                    {"rank", r.stats.rank}};
    }
    rep.ms = t.ms();
    return rep;
}

}  // namespace ffmzv
