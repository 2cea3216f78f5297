#pragma once

#include <json.hpp>

#include "fflibrary.hpp"
#include "powersum.hpp"
#include "solver.hpp"

namespace ffmzv {

// Machine-readable outcome of one named verification target.  FAIL always
// carries the offending check lines; INCONCLUSIVE only arises from
// precision caps.
struct Report {
    std::string target;
    enum Verdict { PASS, FAIL, INCONCLUSIVE } verdict = PASS;
    nlohmann::json witnesses = nlohmann::json::array();
    nlohmann::json params = nlohmann::json::object();
    long long ms = 0;
    std::vector<std::string> checks;  // one line per sub-check, "ok"/"FAIL" prefixed

    void check(const std::string& name, bool ok) {
        checks.push_back((ok ? "ok   " : "FAIL ") + name);
        if (!ok) verdict = FAIL;
    }
    void inconclusive(const std::string& name) {
        checks.push_back("???  " + name);
        if (verdict == PASS) verdict = INCONCLUSIVE;
    }
    void witness(const std::string& name, const RatFun& r);
    void witness_pair(const std::string& name, const RatFun& even, const RatFun& odd);
    bool all_passed() const { return verdict == PASS; }
};

nlohmann::json report_to_json(const Report& r);
Report report_from_json(const nlohmann::json& j);
bool operator==(const Report& a, const Report& b);

struct VerifyOptions {
    int precision = 128;
    int guard = 10;
    int d_lo = 2, d_hi = 8;
    int jobs = 1;
};

// Named theorem reproductions: thm-3.3, thm-3.5, thm-5.1, thm-A, thm-B,
// thm-C.  Three independent layers: (a) the zeta identity numerically,
// (b) the specialization identities over the d-range, (c) the exact
// recursion plus the leading-term/degree argument.
Report verify_theorem(const std::string& id, const VerifyOptions& opt);

// ratio family R_n = zeta(q^n-1, q^n(q-1)) / zeta(q^(n+1)-1) against the
// displayed closed forms, reduced through the curve relation
Report verify_conjecture32(const std::string& curve_id, int n, int precision);

// the universal family zeta(q^n-1, (q-1)q^n, ..., (q-1)q^(n+k))
Report verify_family31(const CurveSpec& spec, int n, int k, int precision);

// linear-independence experiments over F_q(x): "8", "10" or "control"
Report rank_experiment(const CurveSpec& spec, const std::string& quantity_set, int d_lo,
                       int d_hi);

// zetalike scan over primitive tuples plus same-weight ratio pairs
Report scan_zetalike(const CurveSpec& spec, int max_weight, int max_depth, int precision,
                     int jobs = 1);
std::string scan_csv(const Report& r);

// Dedekind-type relative checks over F_q[x] resp. F_q[y]
Report relative_report(const CurveSpec& spec, const std::string& base, int precision);

// all six difference systems
Report solver_replay_report();

std::vector<std::string> verify_target_ids();

}  // namespace ffmzv
