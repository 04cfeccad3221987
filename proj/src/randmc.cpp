#include "hamming/randmc.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

namespace hamming {

namespace {
constexpr double kPi = 3.14159265358979323846;

uint64_t splitmix64(uint64_t& x) {
    uint64_t z = (x += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
}  // namespace

uint64_t RngStream::next() {
    uint64_t result = rotl(s[0] + s[3], 23) + s[0];
    uint64_t t = s[1] << 17;
    s[2] ^= s[0];
    s[3] ^= s[1];
    s[1] ^= s[2];
    s[0] ^= s[3];
    s[2] ^= t;
    s[3] = rotl(s[3], 45);
    return result;
}

double RngStream::unit() { return (next() >> 11) * 0x1.0p-53; }

uint64_t RngStream::below(uint64_t n) {
    uint64_t threshold = -n % n;
    for (;;) {
        uint64_t r = next();
        if (r >= threshold) return r % n;
    }
}

RngStream make_stream(uint64_t seed, uint64_t k1, uint64_t k2) {
    // Mix through splitmix outputs between key injections; anything weaker
    // lets nearby (seed, key) pairs collide as shifted streams.
    uint64_t x = seed;
    x = splitmix64(x) ^ (0x6a09e667f3bcc909ULL + k1);
    x = splitmix64(x) ^ (0xbb67ae8584caa73bULL + k2);
    RngStream r;
    for (auto& w : r.s) w = splitmix64(x);
    return r;
}

namespace {

// Fill one row of width n with density p; geometric skips when p is small,
// per-cell draws otherwise. Both are exact inversions of the same product
// law.
template <class Add>
void sample_row(RngStream& rng, int n, double p, Add&& add) {
    if (p < 0.2) {
        double denom = std::log1p(-p);
        long long u = -1;
        for (;;) {
            double x = 1.0 - rng.unit();  // in (0,1]
            long long skip = (long long)std::floor(std::log(x) / denom);
            u += 1 + skip;
            if (u >= n) break;
            add((int)u);
        }
    } else {
        for (int u = 0; u < n; ++u)
            if (rng.unit() < p) add(u);
    }
}

}  // namespace

McEstimate span_probability(const McConfig& cfg) {
    if (cfg.replicates < 1) throw invalid_input("replicates must be at least 1");
    for (size_t i = 0; i < cfg.p_list.size(); ++i) {
        double p = cfg.p_list[i];
        if (!(p > 0 && p < 1)) throw invalid_input("densities must lie in (0,1)");
        if (i > 0 && p >= cfg.p_list[i - 1])
            throw invalid_input("densities must be decreasing");
    }
    McEstimate est;
    double da = cfg.alpha.to_double(), db = cfg.beta.to_double();
    for (size_t pi = 0; pi < cfg.p_list.size(); ++pi) {
        double p = cfg.p_list[pi];
        long long n = (long long)std::ceil(std::pow(p, -da) - 1e-9);
        long long m = (long long)std::ceil(std::pow(p, -db) - 1e-9);
        n = std::max(n, 1LL);
        m = std::max(m, 1LL);
        if (n * m > cfg.cell_cap)
            throw resource_limit("simulation box exceeds the configured cell cap");
        int box_n = (int)std::max<long long>(n, cfg.z.width());
        int box_m = (int)std::max<long long>(m, cfg.z.height());

        int reps = cfg.replicates;
        std::vector<uint8_t> success((size_t)reps, 0);
        auto worker = [&](int lo, int hi) {
            std::vector<Cell> pts;
            for (int r = lo; r < hi; ++r) {
                RngStream rng = make_stream(cfg.seed, pi, (uint64_t)r);
                pts.clear();
                for (int v = 0; v < (int)m; ++v)
                    sample_row(rng, (int)n, p, [&](int u) { pts.push_back({u, v}); });
                PointSet a{box_n, box_m, pts};
                success[r] = spans(cfg.z, a) ? 1 : 0;
            }
        };
        int nthreads = std::max(1, cfg.threads);
        if (nthreads == 1) {
            worker(0, reps);
        } else {
            std::vector<std::thread> pool;
            int chunk = (reps + nthreads - 1) / nthreads;
            for (int t = 0; t < nthreads; ++t) {
                int lo = t * chunk, hi = std::min(reps, lo + chunk);
                if (lo >= hi) break;
                pool.emplace_back(worker, lo, hi);
            }
            for (auto& th : pool) th.join();
        }
        McRow row;
        row.p = p;
        row.n = n;
        row.m = m;
        row.replicates = reps;
        for (uint8_t s : success) row.successes += s;
        row.phat = (double)row.successes / reps;
        // Wilson interval at z = 1.96.
        double z = 1.96, nn = reps, ph = row.phat;
        double denom = 1 + z * z / nn;
        double center = (ph + z * z / (2 * nn)) / denom;
        double half = z * std::sqrt(ph * (1 - ph) / nn + z * z / (4 * nn * nn)) / denom;
        row.wilson_lo = std::max(0.0, center - half);
        row.wilson_hi = std::min(1.0, center + half);
        est.rows.push_back(row);
    }
    try {
        auto [slope, stderr_] = slope_fit(est.rows);
        est.slope = slope;
        est.slope_stderr = stderr_;
        est.slope_ok = true;
    } catch (const invalid_input&) {
        est.slope_ok = false;
    }
    return est;
}

std::pair<double, double> slope_fit(const std::vector<McRow>& rows) {
    std::vector<double> x, y, w;
    for (const McRow& r : rows) {
        if (r.phat <= 0 || r.phat >= 1) continue;
        x.push_back(std::log(r.p));
        y.push_back(std::log(r.phat));
        // delta method: Var(log phat) ~ (1-p)/(n p)
        w.push_back(r.replicates * r.phat / (1 - r.phat));
    }
    if (x.size() < 3) throw invalid_input("slope fit needs at least 3 usable rows");
    double sw = 0, sx = 0, sy = 0;
    for (size_t i = 0; i < x.size(); ++i) {
        sw += w[i];
        sx += w[i] * x[i];
        sy += w[i] * y[i];
    }
    double xbar = sx / sw, ybar = sy / sw;
    double sxx = 0, sxy = 0;
    for (size_t i = 0; i < x.size(); ++i) {
        sxx += w[i] * (x[i] - xbar) * (x[i] - xbar);
        sxy += w[i] * (x[i] - xbar) * (y[i] - ybar);
    }
    if (sxx <= 0) throw invalid_input("slope fit needs distinct densities");
    return {sxy / sxx, std::sqrt(1.0 / sxx)};
}

YoungDiagram rost_sample(long long n, uint64_t seed) {
    if (n < 0) throw invalid_input("sample size must be nonnegative");
    RngStream rng = make_stream(seed, 0x726f7374ULL, 0);
    std::vector<int> rows;
    std::vector<int> corners;  // addable row indices, sorted
    corners.push_back(0);
    for (long long step = 0; step < n; ++step) {
        int idx = (int)rng.below(corners.size());
        int v = corners[idx];
        if (v == (int)rows.size())
            rows.push_back(1);
        else
            ++rows[v];
        // Recompute corner status around v: v itself and v+1 can change,
        // and a fresh top row appears when v was the previous top.
        auto addable = [&](int r) {
            if (r > (int)rows.size()) return false;
            if (r == (int)rows.size()) return true;  // new row
            return r == 0 || rows[r] < rows[r - 1];
        };
        std::vector<int> next;
        for (int c : corners)
            if (c != v && c != v + 1 && addable(c)) next.push_back(c);
        if (addable(v)) next.push_back(v);
        if (addable(v + 1)) next.push_back(v + 1);
        std::sort(next.begin(), next.end());
        corners = std::move(next);
    }
    return rows.empty() ? YoungDiagram() : YoungDiagram::from_rows(std::move(rows));
}

YoungDiagram vershik_sample(long long n, uint64_t seed, long long trial_budget) {
    if (n < 1) throw invalid_input("sample size must be at least 1");
    if (trial_budget <= 0)
        trial_budget = 1000 + 200 * (long long)std::pow((double)n, 0.75);
    double lambda = kPi / std::sqrt(6.0 * (double)n);
    double lnx = -lambda;
    for (long long trial = 0; trial < trial_budget; ++trial) {
        RngStream rng = make_stream(seed, 0x76657273ULL, (uint64_t)trial);
        std::vector<std::pair<long long, long long>> mult;  // (part size, multiplicity)
        long long total = 0;
        double xi = 1.0;
        for (long long i = 1; i <= n; ++i) {
            xi *= std::exp(lnx);
            if (xi < 1e-19) break;  // no further part can appear
            double u = rng.unit();
            if (u >= xi) continue;
            // geometric multiplicity, inverted from the same uniform
            double v = u / xi;
            long long extra =
                v <= 0 ? n : (long long)std::floor(std::log(v) / (lnx * (double)i));
            long long m = 1 + extra;
            total += i * m;
            if (total > n) break;
            mult.push_back({i, m});
        }
        if (total != n) continue;
        std::vector<int> rows;
        for (auto it = mult.rbegin(); it != mult.rend(); ++it)
            for (long long k = 0; k < it->second; ++k) rows.push_back((int)it->first);
        return YoungDiagram::from_rows(std::move(rows));
    }
    throw resource_limit("partition sampler exhausted its retry budget");
}

double limit_curve_height(LimitCurve curve, double x) {
    if (curve == LimitCurve::rost) {
        double c = std::pow(6.0, 0.25);
        if (x >= c * c) return 0.0;
        double t = c - std::sqrt(x);
        return t * t;
    }
    double lam = kPi / std::sqrt(6.0);
    if (x <= 0) return HUGE_VAL;
    double e = std::exp(-lam * x);
    if (e >= 1) return HUGE_VAL;
    return -std::log1p(-e) / lam;
}

namespace {

// Distance from a point to the curve graph, coarse scan plus local
// refinement. Both curves are convex and decreasing, so this is robust.
double point_to_curve(LimitCurve curve, double px, double py) {
    double lo = 1e-9, hi = px + py + 1.0;
    auto d2 = [&](double x) {
        double dy = py - limit_curve_height(curve, x);
        double dx = px - x;
        return dx * dx + dy * dy;
    };
    int steps = 512;
    double best_x = lo, best = d2(lo);
    for (int i = 1; i <= steps; ++i) {
        double x = lo + (hi - lo) * i / steps;
        double v = d2(x);
        if (v < best) {
            best = v;
            best_x = x;
        }
    }
    double a = std::max(lo, best_x - (hi - lo) / steps);
    double b = std::min(hi, best_x + (hi - lo) / steps);
    for (int i = 0; i < 80; ++i) {
        double m1 = a + (b - a) / 3, m2 = b - (b - a) / 3;
        if (d2(m1) < d2(m2))
            b = m2;
        else
            a = m1;
    }
    return std::sqrt(std::min(best, d2((a + b) / 2)));
}

}  // namespace

double shape_distance(const YoungDiagram& y, LimitCurve curve, double r_max) {
    if (y.empty()) throw invalid_input("shape distance needs a nonempty diagram");
    long long n = y.cardinality();
    double scale = std::sqrt((double)n);
    long long jmax = (long long)std::floor(r_max * scale);
    const auto& rows = y.rows();
    double worst = 0;
    // Boundary corner at gridline j: height = number of rows of length >= j.
    // The grid starts one pitch in; at x = 0 the exponential curve diverges
    // and a vertical-only comparison is meaningless for either curve.
    for (long long j = 1; j <= jmax; ++j) {
        long long h = std::lower_bound(rows.begin(), rows.end(), j,
                                       [](int len, long long jj) { return len >= jj; }) -
                      rows.begin();
        double hx = (double)h / scale;
        double x = (double)j / scale;
        worst = std::max(worst, point_to_curve(curve, x, hx));
    }
    return worst;
}

}  // namespace hamming
