#include "hamming/growth.hpp"

#include <algorithm>
#include <numeric>

namespace hamming {

Enhancement::Enhancement(std::vector<int> values) : values_(std::move(values)) {
    for (size_t i = 0; i < values_.size(); ++i) {
        if (values_[i] < 0) throw invalid_input("enhancement values must be nonnegative");
        if (i > 0 && values_[i] > values_[i - 1])
            throw invalid_input("enhancement values must be nonincreasing");
    }
    while (!values_.empty() && values_.back() == 0) values_.pop_back();
}

long long Enhancement::sum() const {
    return std::accumulate(values_.begin(), values_.end(), 0LL);
}

PointSet PointSet::in_box(int n, int m, std::vector<Cell> pts) {
    if (n < 0 || m < 0) throw invalid_input("box sides must be nonnegative");
    std::sort(pts.begin(), pts.end(), [](const Cell& a, const Cell& b) {
        return a.v != b.v ? a.v < b.v : a.u < b.u;
    });
    for (size_t i = 0; i < pts.size(); ++i) {
        const Cell& c = pts[i];
        if (c.u < 0 || c.v < 0 || c.u >= n || c.v >= m)
            throw invalid_input("point outside its box");
        if (i > 0 && pts[i] == pts[i - 1]) throw invalid_input("duplicate point");
    }
    return PointSet{n, m, std::move(pts)};
}

namespace {

// Flat occupancy grid with per-line counters; the only state the rule reads.
struct Grid {
    int n, m;
    std::vector<uint8_t> occ;
    std::vector<int> rowcnt;  // per row v
    std::vector<int> colcnt;  // per column u
    long long occupied = 0;

    Grid(const PointSet& a) : n(a.box_n), m(a.box_m) {
        occ.assign((size_t)n * m, 0);
        rowcnt.assign(m, 0);
        colcnt.assign(n, 0);
        for (const Cell& c : a.points) {
            occ[(size_t)c.v * n + c.u] = 1;
            ++rowcnt[c.v];
            ++colcnt[c.u];
            ++occupied;
        }
    }

    bool full() const { return occupied == (long long)n * m; }

    PointSet to_pointset() const {
        std::vector<Cell> pts;
        pts.reserve(occupied);
        for (int v = 0; v < m; ++v)
            for (int u = 0; u < n; ++u)
                if (occ[(size_t)v * n + u]) pts.push_back({u, v});
        return PointSet{n, m, std::move(pts)};
    }
};

// One synchronous sweep; returns the number of added cells.
int sweep(const YoungDiagram& z, const Enhancement& f, const Enhancement& g, Grid& gr,
          std::vector<Cell>& buf) {
    buf.clear();
    for (int v = 0; v < gr.m; ++v) {
        int base = gr.rowcnt[v] + f.at(v);
        const uint8_t* row = gr.occ.data() + (size_t)v * gr.n;
        for (int u = 0; u < gr.n; ++u) {
            if (row[u]) continue;
            if (!z.contains_pair(base, gr.colcnt[u] + g.at(u))) buf.push_back({u, v});
        }
    }
    for (const Cell& c : buf) {
        gr.occ[(size_t)c.v * gr.n + c.u] = 1;
        ++gr.rowcnt[c.v];
        ++gr.colcnt[c.u];
    }
    gr.occupied += (long long)buf.size();
    return (int)buf.size();
}

}  // namespace

PointSet step(const YoungDiagram& z, const Enhancement& f, const Enhancement& g,
              const PointSet& a) {
    Grid gr(a);
    std::vector<Cell> buf;
    sweep(z, f, g, gr, buf);
    return gr.to_pointset();
}

EvolveResult evolve(const YoungDiagram& z, const Enhancement& f, const Enhancement& g,
                    const PointSet& a) {
    Grid gr(a);
    std::vector<Cell> buf;
    int effective = 0;
    while (!gr.full()) {
        if (sweep(z, f, g, gr, buf) == 0) break;
        ++effective;
    }
    EvolveResult r;
    r.steps = std::max(1, effective);
    r.filled_box = gr.full();
    r.final = gr.to_pointset();
    return r;
}

bool spans(const YoungDiagram& z, const PointSet& a) {
    if (a.box_n < z.width() || a.box_m < z.height())
        throw invalid_input("box does not contain the zero-set's bounding rectangle");
    if ((long long)a.box_n * a.box_m == 0) return true;  // empty box, nothing to fill
    Grid gr(a);
    std::vector<Cell> buf;
    while (!gr.full()) {
        if (sweep(z, Enhancement(), Enhancement(), gr, buf) == 0) return false;
    }
    return true;
}

bool spans_enhanced(const YoungDiagram& z, const Enhancement& f, const Enhancement& g,
                    const std::vector<Cell>& a) {
    int n = std::max(z.width(), g.support());
    int m = std::max(z.height(), f.support());
    for (const Cell& c : a) {
        n = std::max(n, c.u + 1);
        m = std::max(m, c.v + 1);
    }
    n = std::max(n, 1);
    m = std::max(m, 1);
    PointSet ps = PointSet::in_box(n, m, a);
    Grid gr(ps);
    std::vector<Cell> buf;
    while (!gr.full()) {
        if (sweep(z, f, g, gr, buf) == 0) return false;
    }
    return true;
}

long long tmax_bound(const YoungDiagram& z) {
    if (z.empty()) return 1;
    long long prod = (long long)z.rows().size() + 1;  // k+2 with k = height-1
    for (int len : z.rows()) {
        if (prod > (1LL << 62) / (len + 1)) return 1LL << 62;  // saturate
        prod *= (len + 1);
    }
    return prod;
}

}  // namespace hamming
