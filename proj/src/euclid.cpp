#include "hamming/euclid.hpp"

#include <algorithm>
#include <cmath>

namespace hamming {

namespace {
constexpr double kPi = 3.14159265358979323846;
// decay constant of the exponential limit curve
double curve_lambda() { return kPi / std::sqrt(6.0); }

// Li2(z) for z in [0,1], series with the reflection identity near 1.
double dilog(double z) {
    if (z < 0.5) {
        double sum = 0, zk = z;
        for (int k = 1; k < 400; ++k) {
            sum += zk / ((double)k * k);
            zk *= z;
            if (zk < 1e-19) break;
        }
        return sum;
    }
    if (z >= 1.0) return kPi * kPi / 6.0;
    return kPi * kPi / 6.0 - std::log(z) * std::log1p(-z) - dilog(1.0 - z);
}
}  // namespace

EuclideanZeroSet EuclideanZeroSet::rectangle(Rat a, Rat b) {
    if (a <= Rat(0) || b <= Rat(0)) throw invalid_input("rectangle sides must be positive");
    EuclideanZeroSet e;
    e.kind_ = Kind::rectangle;
    e.steps_ = {{a, b}};
    return e;
}

EuclideanZeroSet EuclideanZeroSet::lshape(Rat a) {
    if (a < Rat(1)) throw invalid_input("lshape arm must be at least 1");
    EuclideanZeroSet e;
    e.kind_ = Kind::lshape;
    e.la_ = a;
    e.steps_ = {{Rat(1), a}, {a, Rat(1)}};
    return e;
}

EuclideanZeroSet EuclideanZeroSet::staircase(std::vector<std::pair<Rat, Rat>> steps) {
    for (size_t i = 0; i < steps.size(); ++i) {
        if (steps[i].first <= Rat(0) || steps[i].second <= Rat(0))
            throw invalid_input("staircase corners must be positive");
        if (i > 0 && (steps[i].first <= steps[i - 1].first ||
                      steps[i].second >= steps[i - 1].second))
            throw invalid_input("staircase corners must have increasing x, decreasing y");
    }
    EuclideanZeroSet e;
    e.kind_ = Kind::staircase;
    e.steps_ = std::move(steps);
    return e;
}

EuclideanZeroSet EuclideanZeroSet::rost() {
    EuclideanZeroSet e;
    e.kind_ = Kind::rost;
    return e;
}

EuclideanZeroSet EuclideanZeroSet::vershik(Rat truncate_r) {
    // R >= 1 keeps the curve height below R at the cut, so the truncated
    // area is 1 minus two disjoint tails.
    if (truncate_r < Rat(1)) throw invalid_input("truncation radius must be at least 1");
    EuclideanZeroSet e;
    e.kind_ = Kind::vershik;
    e.trunc_ = truncate_r;
    return e;
}

std::optional<Rat> EuclideanZeroSet::exact_area() const {
    if (kind_ == Kind::rost) return std::nullopt;
    if (kind_ == Kind::vershik) return std::nullopt;
    Rat area(0);
    Rat prev_x(0);
    for (const auto& [x, y] : steps_) {
        area += (x - prev_x) * y;
        prev_x = x;
    }
    return area;
}

double EuclideanZeroSet::area() const {
    if (auto e = exact_area()) return e->to_double();
    if (kind_ == Kind::rost) return 1.0;  // integral of (c - sqrt(x))^2 over [0, c^2]
    return 1.0 - area_tail();             // exponential curve has unit area
}

double EuclideanZeroSet::area_tail() const {
    if (kind_ != Kind::vershik) return 0.0;
    double lam = curve_lambda();
    return 2.0 * dilog(std::exp(-lam * trunc_.to_double())) / (lam * lam);
}

bool EuclideanZeroSet::square_fits(long long p, long long q, long long n) const {
    if (p <= 0 || q <= 0 || n <= 0) throw invalid_input("bad square corner");
    switch (kind_) {
        case Kind::rectangle:
        case Kind::lshape:
        case Kind::staircase: {
            Rat x(p, n), y(q, n);
            for (const auto& [sx, sy] : steps_)
                if (x <= sx && y <= sy) return true;
            return false;
        }
        case Kind::rost: {
            // sqrt(p/n) + sqrt(q/n) <= 6^{1/4} rearranged to integer
            // comparisons. With S = p+q: first, sqrt(6) n >= S must hold;
            // then squaring twice gives 24 n^2 S^2 <= (6 n^2 + (p-q)^2)^2.
            __int128 s = p + q, d = p - q;
            __int128 six_n2 = (__int128)6 * n * n;
            if (six_n2 < s * s) return false;
            __int128 rhs = six_n2 + d * d;
            return (__int128)24 * n * n * s * s <= rhs * rhs;
        }
        case Kind::vershik: {
            Rat x(p, n), y(q, n);
            if (x > trunc_ || y > trunc_) return false;
            double lam = curve_lambda();
            return std::exp(-lam * x.to_double()) + std::exp(-lam * y.to_double()) >= 1.0;
        }
    }
    return false;
}

std::string EuclideanZeroSet::str() const {
    switch (kind_) {
        case Kind::rectangle:
            return "rect:" + steps_[0].first.str() + "x" + steps_[0].second.str();
        case Kind::lshape:
            return "lshape:" + la_.str();
        case Kind::staircase: {
            std::string s = "staircase:";
            for (size_t i = 0; i < steps_.size(); ++i) {
                if (i) s += ";";
                s += steps_[i].first.str() + "," + steps_[i].second.str();
            }
            return s;
        }
        case Kind::rost:
            return "rost";
        case Kind::vershik:
            return "vershik(R=" + trunc_.str() + ")";
    }
    return "?";
}

YoungDiagram discretize(const EuclideanZeroSet& e, int n) {
    if (n < 1) throw invalid_input("scale must be at least 1");
    std::vector<int> rows;
    for (long long v = 0;; ++v) {
        long long len = 0;
        while (e.square_fits(len + 1, v + 1, n)) ++len;
        if (len == 0) break;
        rows.push_back((int)len);
        if (v > (long long)n * 1000) throw invalid_input("region too tall to discretize");
    }
    return rows.empty() ? YoungDiagram() : YoungDiagram::from_rows(std::move(rows));
}

GammaSeries scaled_gamma_series(const EuclideanZeroSet& e, const std::vector<int>& ns,
                                const SearchBudget& budget) {
    GammaSeries out;
    for (int n : ns) {
        YoungDiagram z = discretize(e, n);
        GammaResult g = gamma(z, budget);
        out.entries.push_back({n, g.value, Rat(g.value, (long long)n * n)});
    }
    if (e.kind() == EuclideanZeroSet::Kind::rectangle) {
        out.reference = *e.exact_area();
    } else if (e.kind() == EuclideanZeroSet::Kind::lshape) {
        out.reference = e.lshape_arm();
    }
    return out;
}

std::vector<RefValue> reference_values(const EuclideanZeroSet& e, const RateQuery& q) {
    std::vector<RefValue> out;
    auto push_exact = [&](const std::string& name, const Rat& v) {
        out.push_back({name, v.to_double(), v});
    };
    auto push = [&](const std::string& name, double v) { out.push_back({name, v, {}}); };

    Rat one(1);
    Rat mx = rat_max(q.alpha, q.beta);
    Rat mn = rat_min(q.alpha, q.beta);
    std::optional<Rat> area = e.exact_area();
    std::optional<Rat> gamma_lim;
    std::optional<Rat> gamma_thin_lim;
    switch (e.kind()) {
        case EuclideanZeroSet::Kind::rectangle:
            gamma_lim = *area;
            gamma_thin_lim = *area;
            push_exact("rate_limit", (one - mx) * *area);
            break;
        case EuclideanZeroSet::Kind::lshape: {
            Rat a = e.lshape_arm();
            gamma_lim = a;
            gamma_thin_lim = Rat(2) * (a - one);
            if (q.alpha == q.beta) {
                double al = q.alpha.to_double();
                double ad = a.to_double();
                push_exact("diag_upper", a - Rat(2) * q.alpha);
                push("diag_lower", ad - 2 * al - 9 * ad * std::pow(al, 1.5));
                push_exact("thin_corner_upper", *gamma_thin_lim * (one - q.alpha));
                push_exact("thin_corner_lower",
                           *gamma_thin_lim *
                               ((one - q.alpha) - Rat(2) * (one - q.alpha) * (one - q.alpha)));
            }
            break;
        }
        default:
            break;
    }
    if (area) push_exact("area", *area);
    else push("area", e.area());
    if (gamma_lim) push_exact("gamma_limit", *gamma_lim);
    if (gamma_thin_lim) push_exact("gamma_thin_limit", *gamma_thin_lim);
    // General bracket: gamma-based lower, three-term upper. Without a known
    // limit gamma, fall back to the area bracket [area/4, area].
    if (gamma_lim && area) {
        push_exact("bound_lower", (one - mx) * *gamma_lim);
        push_exact("bound_upper",
                   rat_min((one - mx) * *area,
                           rat_min(Rat(2) * (one - mn) * *gamma_lim, *gamma_lim)));
    } else {
        double ad = area ? area->to_double() : e.area();
        double g_lo = ad / 4, g_hi = ad;
        push("bound_lower", (1 - mx.to_double()) * g_lo);
        push("bound_upper", std::min({(1 - mx.to_double()) * ad,
                                      2 * (1 - mn.to_double()) * g_hi, g_hi}));
    }
    return out;
}

}  // namespace hamming
