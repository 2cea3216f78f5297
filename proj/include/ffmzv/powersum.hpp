#pragma once

#include <map>
#include <mutex>
#include <span>
#include <stdexcept>
#include <vector>

#include "curve.hpp"
#include "reconstruct.hpp"

namespace ffmzv {

enum class SumMode { AtD, BelowD, UpToD };

struct SumKey {
    const CurveSpec* spec;
    int d;
    std::vector<int> tuple;  // nonempty, entries >= 1
    SumMode mode = SumMode::AtD;
};

struct ZetaValue {
    const CurveSpec* spec;
    std::vector<int> tuple;
    InfSeries value;
    int precision = 0;
    int terms_used = 0;  // largest degree d summed
};

struct PrecisionNotReached : std::runtime_error {
    ZetaValue partial;
    explicit PrecisionNotReached(ZetaValue p)
        : std::runtime_error("precision not reached before the degree cap"), partial(std::move(p)) {}
};

struct ZetalikeResult {
    bool detected = false;
    RatFun even, odd;  // the ratio as a + y b, components in F_q(x)
};

// Degree-d power-sum kernels: sum of a^-k over the monic elements of
// degree d.  The serial version is the reference implementation; the
// parallel one chunks the enumeration across OpenMP threads and folds the
// partial sums in index order (exact arithmetic makes the two paths
// bit-identical).
KElem power_sum_serial(const CurveSpec& spec, int d, int k);
KElem power_sum_parallel(const CurveSpec& spec, int d, int k, int jobs);

// Power sums, iterated power sums and multizeta approximations for one
// ring, with a synchronized memo table shared by all callers.
class PowerSumEngine {
  public:
    explicit PowerSumEngine(const CurveSpec& spec, int jobs = 1)
        : s_(&spec), jobs_(jobs) {}

    const CurveSpec& spec() const { return *s_; }
    void set_jobs(int jobs) { jobs_ = jobs; }
    int jobs() const { return jobs_; }

    // S_d(k)
    KElem power_sum(int d, int k);
    // S_d(k_1, ..., k_r) and the range accumulations S_<d, S_<=d
    KElem sum(const SumKey& key);
    KElem at(int d, std::span<const int> tuple);
    KElem below(int d, std::span<const int> tuple);
    KElem upto(int d, std::span<const int> tuple);

    // partial sums over d with the two-in-a-row stopping rule
    ZetaValue zeta(std::vector<int> tuple, int precision);
    ZetalikeResult zetalike(const std::vector<int>& tuple, int precision, int guard = 10);

    int d_max = 24;  // degree cap for the stopping rule

  private:
    const CurveSpec* s_;
    int jobs_;
    std::mutex mu_;
    std::map<std::pair<int, std::vector<int>>, KElem> cache_at_;
    std::map<std::pair<int, std::vector<int>>, KElem> cache_below_;

    KElem at_locked(int d, const std::vector<int>& tuple);
    KElem below_locked(int d, const std::vector<int>& tuple);
};

// S_d(p k_1, ..., p k_r) = S_d(k_1, ..., k_r)^p
bool frobenius_power_identity_check(PowerSumEngine& eng, int d, std::span<const int> tuple);

// Remark 3.2(i) bracket-product ratio for the genus-zero family
// zeta(q^n-1, (q-1)q^n, ..., (q-1)q^{n+k}) = ratio * zeta(q^{n+k+1}-1),
// with [m] = x^{q^m} - x.
RatFun genus_zero_family_oracle(uint8_t q, int n, int k);
// the family tuple itself
std::vector<int> family_tuple(uint8_t q, int n, int k);

// Dedekind-type relative power sums: monic-norm inverse powers summed over
// the monic elements of A of degree d, iterated by the same recursion.
// The result lives in F_q(x) resp. F_q(y) of the base.
RatFun relative_power_sum(const CurveSpec& spec, const std::string& base, int d,
                          std::span<const int> tuple);
// sum over d until terms vanish at the precision floor
Laurent relative_zeta(const CurveSpec& spec, const std::string& base,
                      std::span<const int> tuple, int precision);

}  // namespace ffmzv
