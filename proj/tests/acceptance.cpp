// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <random>
#include <vector>

#include "ffmzv/dataio.hpp"
#include "ffmzv/reconstruct.hpp"
#include "ffmzv/verify.hpp"

using namespace ffmzv;
using Clock = std::chrono::steady_clock;

namespace {

struct Criterion {
    int id;
    std::string title;
    bool pass = true;
    std::vector<std::string> lines;
    double seconds = 0;

    void check(const std::string& name, bool ok) {
        lines.push_back(std::string(ok ? "ok   " : "FAIL ") + name);
        pass = pass && ok;
    }
    void absorb(const Report& r, const std::string& prefix) {
        for (const auto& c : r.checks) lines.push_back("  " + c);
        check(prefix, r.verdict == Report::PASS);
    }
};

std::vector<Criterion> results;

template <class F>
void run(int id, const std::string& title, F body) {
    Criterion c;
    c.id = id;
    c.title = title;
    auto t0 = Clock::now();
    try {
        body(c);
    } catch (const std::exception& e) {
        c.check(std::string("unexpected exception: ") + e.what(), false);
    }
    c.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    results.push_back(std::move(c));
}

KElem kpoly(const CurveSpec& s, std::initializer_list<int> coeffs) {
    return KElem(RingElem::from_poly(s, Poly(s.field, coeffs)));
}

// independent oracle used by criterion 9 (mirrors the unit-test one)
KElem brute_iterated(const CurveSpec& s, int d, std::span<const int> tuple) {
    MonicRange range(s, d);
    KElem acc = KElem::zero(s);
    KElem tail = KElem::one_of(s);
    if (tuple.size() > 1) {
        tail = KElem::zero(s);
        for (int d2 = 0; d2 < d; ++d2) tail = tail + brute_iterated(s, d2, tuple.subspan(1));
    }
    if (tail.is_zero()) return acc;
    for (size_t i = 0; i < range.count; ++i)
        acc = acc + KElem(range.element(i)).pow(-long(tuple[0])) * tail;
    return acc;
}

}  // namespace

int main() {
    run(1, "theorem 3.3 at precision 200 with the exact recursion", [](Criterion& c) {
        VerifyOptions opt;
        opt.precision = 200;
        opt.d_lo = 2;
        opt.d_hi = 8;
        c.absorb(verify_theorem("thm-3.3", opt), "thm-3.3 all layers");
    });
    if (!results.empty()) results.back().check("runtime < 60 s", results.back().seconds < 60);

    run(2, "theorem 3.5 (i)-(vi) exactly for d = 2..8", [](Criterion& c) {
        VerifyOptions opt;
        opt.d_lo = 2;
        opt.d_hi = 8;
        opt.precision = 64;
        c.absorb(verify_theorem("thm-3.5", opt), "thm-3.5 suite");
    });
    if (!results.empty()) results.back().check("runtime < 120 s", results.back().seconds < 120);

    run(3, "theorem 5.1: numeric identity, solver replay, leading ratio", [](Criterion& c) {
        VerifyOptions opt;
        opt.precision = 200;
        opt.d_lo = 2;
        opt.d_hi = 7;
        c.absorb(verify_theorem("thm-5.1", opt), "thm-5.1 all layers");
    });

    run(4, "the remaining three ring verifications at all three layers", [](Criterion& c) {
        VerifyOptions opt;
        opt.precision = 200;
        c.absorb(verify_theorem("thm-A", opt), "thm-A");
        c.absorb(verify_theorem("thm-B", opt), "thm-B");
        opt.d_hi = 8;
        c.absorb(verify_theorem("thm-C", opt), "thm-C");
        // unknown counts of the difference systems
        Report replays = solver_replay_report();
        auto unknowns = [&](const char* sys) {
            return replays.params.contains(sys) ? replays.params[sys]["unknowns"].get<int>()
                                                : -1;
        };
        c.check("case-i system has 28 unknowns (the source says 26; discrepancy logged)",
                unknowns("case-i-w7") == 28);
        c.check("case-iii system has 78 unknowns", unknowns("case-iii-w15") == 78);
        c.check("case-iv systems have 28 / 90 / 95 unknowns",
                unknowns("case-iv-lt1") == 28 && unknowns("case-iv-le12") == 90 &&
                    unknowns("case-iv-lt3") == 95);
    });

    run(5, "conjecture 3.2 replication: cases i-iv", [](Criterion& c) {
        for (int n = 1; n <= 4; ++n)
            c.absorb(verify_conjecture32("case-i", n, 220), "case-i n=" + std::to_string(n));
        for (int n = 1; n <= 4; ++n)
            c.absorb(verify_conjecture32("case-ii", n, 220), "case-ii n=" + std::to_string(n));
        for (int n = 1; n <= 3; ++n)
            c.absorb(verify_conjecture32("case-iii", n, 220), "case-iii n=" + std::to_string(n));
        for (int n = 1; n <= 4; ++n)
            c.absorb(verify_conjecture32("case-iv", n, 220), "case-iv n=" + std::to_string(n));
    });

    run(6, "genus-zero oracle and closed-form identity", [](Criterion& c) {
        for (uint8_t q : {uint8_t(2), uint8_t(3)}) {
            const CurveSpec& s = curve_spec(q == 2 ? "genus0-q2" : "genus0-q3");
            for (int n = 1; n <= 2; ++n)
                for (int k = 0; k <= 1; ++k) {
                    Report r = verify_family31(s, n, k, 150);
                    c.absorb(r, s.id + " family n=" + std::to_string(n) +
                                    " k=" + std::to_string(k));
                }
            PowerSumEngine eng(s);
            KElem bracket = KElem::from_ratfun(
                s, RatFun(Poly::x(s.field) - Poly::monomial(s.field, 1, q)));
            bool ok = true;
            for (int d = 1; d <= 8 && ok; ++d) {
                std::vector<int> lhs_t = {q - 1, q * (q - 1)}, rhs_t = {q * q - 1};
                ok = eng.at(d, lhs_t) == eng.at(d - 1, rhs_t) * bracket.pow(q - 1).inv();
            }
            c.check(s.id + ": S_d(q-1, q(q-1)) = S_{d-1}(q^2-1)/(t-t^q)^(q-1), d = 1..8", ok);
        }
    });

    run(7, "relative zeta descent and the vanishing norms", [](Criterion& c) {
        c.absorb(relative_report(curve_spec("case-i"), "x", 150), "case-i over F_2[x]");
        c.absorb(relative_report(curve_spec("case-i"), "y", 150), "case-i over F_2[y]");
    });

    run(8, "rank experiments: 8- and 10-quantity systems, planted control", [](Criterion& c) {
        c.absorb(rank_experiment(curve_spec("case-i"), "8", 3, 10), "8 quantities, d = 3..10");
        c.absorb(rank_experiment(curve_spec("case-i"), "10", 1, 10), "10 quantities, d = 1..10");
        c.absorb(rank_experiment(curve_spec("case-i"), "control", 2, 6), "planted control");
    });

    run(9, "property suites: brute force, coherence, round trips", [](Criterion& c) {
        // iterated power sums against direct summation
        std::vector<std::vector<int>> tuples = {{1},   {2},      {3},       {5},     {1, 1},
                                                {1, 2}, {2, 1},   {3, 4},    {2, 6},  {1, 1, 1},
                                                {1, 2, 4}, {2, 3, 3}, {1, 1, 2}};
        bool brute_ok = true;
        for (const auto& id : curve_spec_ids()) {
            const CurveSpec& s = curve_spec(id);
            PowerSumEngine eng(s);
            int dmax = s.field.q == 2 ? 6 : (s.field.q == 3 ? 5 : 4);
            for (const auto& t : tuples) {
                int weight = 0;
                for (int k : t) weight += k;
                if (weight > 8) continue;
                for (int d = 0; d <= dmax && brute_ok; ++d)
                    brute_ok = eng.at(d, t) == brute_iterated(s, d, t);
            }
        }
        c.check("iterated sums equal direct summation (weight <= 8, desk-scale d)", brute_ok);

        // twist/specialize coherence on the case-i library
        const CurveSpec& ci = curve_spec("case-i");
        const FFLibrary& lib = builtin_ffunctions(ci);
        bool coherent = true;
        for (const auto& name : {"F1", "g", "F12", "F<3"}) {
            const FF& f = lib.get(name);
            for (int n = -2; n <= 2 && coherent; ++n) {
                FF t = f.twist(n);
                for (int d = 3; d <= 8 && coherent; ++d) {
                    if (!t.specializable(d)) continue;
                    coherent = t.specialize(d) == f.specialize(d + n);
                }
                coherent = coherent && t.twist(-n) == f;
            }
        }
        c.check("twist/specialize coherence and twist invertibility", coherent);

        // rational reconstruction on 100 planted rationals
        std::mt19937 rng(20240808);
        bool recon_ok = true;
        for (int iter = 0; iter < 100 && recon_ok; ++iter) {
            Gf f{uint8_t(iter % 3 == 0 ? 2 : (iter % 3 == 1 ? 3 : 4))};
            std::uniform_int_distribution<int> dc(0, f.q - 1), dd(0, 8);
            Poly num(f), den(f);
            num.c.assign(size_t(dd(rng)) + 1, 0);
            for (auto& cf : num.c) cf = uint8_t(dc(rng));
            num.trim();
            do {
                den.c.assign(size_t(dd(rng)) + 1, 0);
                for (auto& cf : den.c) cf = uint8_t(dc(rng));
                den.trim();
            } while (den.is_zero());
            RatFun target(num, den);
            auto got = rational_reconstruct(Laurent::from_ratfun(target, 40), 10);
            recon_ok = got.has_value() && *got == target;
        }
        c.check("rational reconstruction round trips on 100 planted rationals", recon_ok);

        // solver round trips, 50 per case
        std::mt19937 rng2(600613);
        for (const auto& id : {"case-i", "case-ii", "case-iii", "case-iv"}) {
            const CurveSpec& s = curve_spec(id);
            FF mult = builtin_ffunctions(s).get("g").twist(1);
            std::uniform_int_distribution<int> dc(0, s.field.q - 1);
            bool ok = true;
            for (int iter = 0; iter < 50 && ok; ++iter) {
                XPoly e(s), o(s);
                e.c.assign(4, KElem::zero(s));
                o.c.assign(3, KElem::zero(s));
                for (auto& kk : e.c) {
                    Poly p(s.field);
                    p.c = {uint8_t(dc(rng2)), uint8_t(dc(rng2))};
                    p.trim();
                    Poly py(s.field);
                    py.c = {uint8_t(dc(rng2))};
                    py.trim();
                    kk = KElem(RingElem(s, p, py));
                }
                for (auto& kk : o.c) {
                    Poly p(s.field);
                    p.c = {uint8_t(dc(rng2))};
                    p.trim();
                    kk = KElem(RingElem::from_poly(s, p));
                }
                e.trim();
                o.trim();
                FF z0 = FF::make(s, 0, std::move(e), std::move(o), XPoly::one(s));
                if (z0.is_zero()) continue;
                FF r = z0.twist(1) - mult * z0;
                DifferenceEquation eq{&s, mult, r, DifferenceEquation::Standard, 3, 2};
                SolveOutcome out = solve_difference(eq);
                ok = out.kind == SolveOutcome::Unique && out.z == z0;
            }
            c.check(std::string("solver round trips for ") + id + " (50 planted)", ok);
        }
    });

    run(10, "scan replication at desk scale", [](Criterion& c) {
        Report g0 = scan_zetalike(curve_spec("genus0-q2"), 11, 2, 256);
        auto pair_has = [&](const Report& r, const std::string& p, const std::string& q) {
            for (const auto& row : r.params["pair_hits"]) {
                auto v = row["pair"].get<std::string>();
                if (v == p || v == q) return true;
            }
            return false;
        };
        c.check("genus0-q2: zeta(1,3)/zeta(2,2) rational",
                pair_has(g0, "(1,3)/(2,2)", "(2,2)/(1,3)"));
        c.check("genus0-q2: zeta(2,3)/zeta(3,2) rational",
                pair_has(g0, "(2,3)/(3,2)", "(3,2)/(2,3)"));
        c.check("genus0-q2: zeta(7,4)/zeta(4,7) rational",
                pair_has(g0, "(7,4)/(4,7)", "(4,7)/(7,4)"));

        Report ci = scan_zetalike(curve_spec("case-i"), 12, 2, 256);
        std::vector<std::string> hits;
        for (const auto& h : ci.params["zetalike_hits"]) hits.push_back(h.get<std::string>());
        c.check("case-i: primitive zetalike hits are exactly the family members (1,2), (3,4)",
                hits == std::vector<std::string>{"(1,2)", "(3,4)"});
        bool unexplained = false;
        for (const auto& row : ci.params["pair_hits"]) {
            (void)row;
            unexplained = true;  // any same-weight primitive pair hit is unexplained here
        }
        c.check("case-i: no unexplained same-weight rational ratios", !unexplained);
        c.check("scan completed without inconclusive tuples",
                g0.params["inconclusive"].get<int>() == 0 &&
                    ci.params["inconclusive"].get<int>() == 0);
    });

    double total = 0;
    for (const auto& c : results) total += c.seconds;
    bool scan_budget = true;
    for (const auto& c : results)
        if (c.id == 10) scan_budget = c.seconds < 1800;

    bool all = scan_budget;
    std::printf("\n");
    for (auto& c : results) {
        if (c.id == 10) c.check("runtime < 30 min", scan_budget);
        std::printf("[%s] criterion %d: %s (%.1f s)\n", c.pass ? "PASS" : "FAIL", c.id,
                    c.title.c_str(), c.seconds);
        for (const auto& l : c.lines) std::printf("    %s\n", l.c_str());
        all = all && c.pass;
    }
    std::printf("\n%s: %d/%zu criteria passed, %.1f s total\n", all ? "PASS" : "FAIL",
                int(std::count_if(results.begin(), results.end(),
                                  [](const Criterion& c) { return c.pass; })),
                results.size(), total);
    return all ? 0 : 1;
}
