#pragma once

#include <cstdint>
#include <vector>

#include "hamming/growth.hpp"
#include "hamming/rate.hpp"
#include "hamming/young.hpp"

namespace hamming {

// Counter-seeded xoshiro256++ stream; every (seed, k1, k2) triple yields an
// independent deterministic stream, so parallel replicates never share
// state.
struct RngStream {
    uint64_t s[4];
    uint64_t next();
    // uniform in [0,1)
    double unit();
    // uniform in [0,n), unbiased by rejection
    uint64_t below(uint64_t n);
};
RngStream make_stream(uint64_t seed, uint64_t k1, uint64_t k2);

struct McConfig {
    YoungDiagram z;
    Rat alpha, beta;
    std::vector<double> p_list;  // decreasing densities in (0,1)
    int replicates = 1000;
    uint64_t seed = 0;
    long long cell_cap = 100'000'000;  // resource cap on N*M
    int threads = 1;
};

struct McRow {
    double p = 0;
    long long n = 0, m = 0;
    long long successes = 0;
    int replicates = 0;
    double phat = 0, wilson_lo = 0, wilson_hi = 0;
};

struct McEstimate {
    std::vector<McRow> rows;
    bool slope_ok = false;
    double slope = 0, slope_stderr = 0;
};

// Spanning probability of a density-p product configuration in the
// rectangle N = ceil(p^-alpha), M = ceil(p^-beta), per density, plus the
// fitted power-law slope. Fully reproducible from the seed.
McEstimate span_probability(const McConfig& cfg);

// Weighted least-squares slope of log phat against log p over rows with
// 0 < phat < 1 (inverse delta-method variance weights).
std::pair<double, double> slope_fit(const std::vector<McRow>& rows);

// n-step corner growth, uniform over addable corners at each step.
YoungDiagram rost_sample(long long n, uint64_t seed);

// Uniform random partition of n via independent geometric multiplicities
// conditioned on total n (rejection). trial_budget 0 means automatic.
YoungDiagram vershik_sample(long long n, uint64_t seed, long long trial_budget = 0);

enum class LimitCurve { rost, vershik };

// Sup distance between the n^{-1/2}-scaled boundary height of y and the
// curve, over the pitch-n^{-1/2} grid on [0, r_max]. The exponential curve
// diverges at 0, so its grid starts one pitch in.
double shape_distance(const YoungDiagram& y, LimitCurve curve, double r_max);

// Curve height h(x); used by shape_distance and the boundary CSV writer.
double limit_curve_height(LimitCurve curve, double x);

}  // namespace hamming
