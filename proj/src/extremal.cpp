#include "hamming/extremal.hpp"

#include <algorithm>
#include <numeric>

namespace hamming {

namespace {

struct CanonEnum {
    int n, m, size;
    long long* nodes;
    long long budget;
    const std::function<void(const std::vector<Cell>&)>* cb;
    std::vector<int> colcnt;
    std::vector<int> row_mask;
    std::vector<std::vector<int>> masks_by_count;  // per popcount, ascending
    bool exhausted = false;

    void prepare() {
        colcnt.assign(n, 0);
        masks_by_count.assign(n + 1, {});
        for (int mask = 0; mask < (1 << n); ++mask)
            masks_by_count[__builtin_popcount((unsigned)mask)].push_back(mask);
    }

    bool col_feasible(int rows_left) const {
        for (int u = 0; u + 1 < n; ++u)
            if (colcnt[u + 1] - colcnt[u] > rows_left) return false;
        return true;
    }

    void emit() {
        for (int u = 0; u + 1 < n; ++u)
            if (colcnt[u + 1] > colcnt[u]) return;
        std::vector<Cell> cells;
        cells.reserve(size);
        for (int v = 0; v < (int)row_mask.size(); ++v)
            for (int u = 0; u < n; ++u)
                if (row_mask[v] >> u & 1) cells.push_back({u, v});
        (*cb)(cells);
    }

    void rec(int v, int remaining, int prev_count) {
        if (exhausted) return;
        if (remaining == 0) {
            emit();
            return;
        }
        if (v == m) return;
        int rows_left = m - v;
        int hi = std::min({prev_count, n, remaining});
        int lo = (remaining + rows_left - 1) / rows_left;
        for (int r = hi; r >= std::max(lo, 1); --r) {
            for (int mask : masks_by_count[r]) {
                if (++*nodes > budget) {
                    exhausted = true;
                    return;
                }
                for (int u = 0; u < n; ++u) colcnt[u] += mask >> u & 1;
                row_mask.push_back(mask);
                if (col_feasible(rows_left - 1)) rec(v + 1, remaining - r, r);
                row_mask.pop_back();
                for (int u = 0; u < n; ++u) colcnt[u] -= mask >> u & 1;
                if (exhausted) return;
            }
        }
    }
};

}  // namespace

bool enumerate_canonical_sets(int n, int m, int size, long long& nodes,
                              long long node_budget,
                              const std::function<void(const std::vector<Cell>&)>& cb) {
    if (size == 0) {
        cb({});
        return true;
    }
    if (n <= 0 || m <= 0 || size > (long long)n * m) return true;
    if (n > 20) throw invalid_input("search box too wide for exact enumeration");
    CanonEnum e;
    e.n = n;
    e.m = m;
    e.size = size;
    e.nodes = &nodes;
    e.budget = node_budget;
    e.cb = &cb;
    e.prepare();
    e.rec(0, size, n);
    return !e.exhausted;
}

std::map<std::string, long long> gamma_cheap_bounds(const YoungDiagram& z) {
    std::map<std::string, long long> b;
    b["quarter_area"] = (z.cardinality() + 3) / 4;
    b["line_growth"] = z.max_rectangle().area;
    return b;
}

namespace {
long long cheap_lower(const YoungDiagram& z) {
    return std::max((z.cardinality() + 3) / 4, z.max_rectangle().area);
}
}  // namespace

GammaResult gamma(const YoungDiagram& z, const SearchBudget& budget) {
    GammaResult res;
    res.lower_bounds = gamma_cheap_bounds(z);
    res.upper_bound = z.cardinality();
    if (z.empty()) {
        res.witness = PointSet{0, 0, {}};
        return res;
    }
    int a0 = z.width(), b0 = z.height();
    long long smin = std::max(res.lower_bounds["quarter_area"], res.lower_bounds["line_growth"]);
    for (long long s = std::max(1LL, smin); s <= res.upper_bound; ++s) {
        std::optional<std::vector<Cell>> best;
        bool done = enumerate_canonical_sets(
            a0, b0, (int)s, res.nodes, budget.nodes, [&](const std::vector<Cell>& cells) {
                PointSet a = PointSet{a0, b0, cells};
                if (spans(z, a) && (!best || cells < *best)) best = cells;
            });
        if (best) {
            res.value = s;
            res.witness = PointSet{a0, b0, *best};
            return res;
        }
        if (!done)
            throw budget_exceeded("gamma search budget exhausted", s, res.upper_bound);
    }
    // The full diagram always spans, so the loop cannot fall through; keep a
    // defensive error for the impossible path.
    throw std::logic_error("gamma search found no spanning set");
}

namespace {

struct GammaMemo {
    std::map<std::vector<int>, long long> exact;
    long long nodes = 0;
    long long budget;
    bool over = false;

    // Lower bound on gamma(d): exact when the budget allows, cheap otherwise.
    long long lower(const YoungDiagram& d) {
        if (d.empty()) return 0;
        auto it = exact.find(d.rows());
        if (it != exact.end()) return it->second;
        if (over) return cheap_lower(d);
        SearchBudget sb{budget - nodes};
        try {
            GammaResult r = gamma(d, sb);
            nodes += r.nodes;
            exact[d.rows()] = r.value;
            return r.value;
        } catch (const budget_exceeded&) {
            over = true;
            return cheap_lower(d);
        }
    }
};

}  // namespace

Rat line_sequence_bound(const YoungDiagram& z, int a, int b, const YoungDiagram& y,
                        const SearchBudget& budget) {
    if (a < 1 || b < 1 || !z.contains(a - 1, b - 1))
        throw invalid_input("comparison rectangle not inside the zero-set");
    if (!y.empty() && (y.width() > a - 1 || y.height() > b - 1))
        throw invalid_input("inner diagram must fit in R_{a-1,b-1}");
    if (y.empty()) throw invalid_input("inner diagram must be nonempty");
    GammaMemo memo;
    memo.budget = budget.nodes;
    std::optional<Rat> best;
    for (const Cell& c : y.outer_boundary()) {
        long long k = c.u, l = c.v;
        long long glow_down = l == 0 ? cheap_lower(z) : memo.lower(z.shrink((int)l, YoungDiagram::Shrink::down));
        long long glow_left = k == 0 ? cheap_lower(z) : memo.lower(z.shrink((int)k, YoungDiagram::Shrink::left));
        Rat term = Rat(k * b + l * a - k * l + glow_down + glow_left, 2);
        if (!best || term < *best) best = term;
    }
    return *best;
}

std::map<std::string, long long> gamma_bounds(const YoungDiagram& z,
                                              const SearchBudget& budget) {
    auto b = gamma_cheap_bounds(z);
    b["upper"] = z.cardinality();
    long long best = 0;
    auto mr = z.max_rectangle();
    for (int i = 1; i <= std::min(mr.a, mr.b) - 1; ++i) {
        Rat v = line_sequence_bound(z, mr.a, mr.b, YoungDiagram::triangle(i), budget);
        best = std::max(best, v.ceil());
    }
    if (best > 0) b["line_sequence"] = best;
    return b;
}

namespace {

// Canonical placement of a thin set with row-group sizes f and column-group
// sizes g: group lines are disjoint and every point is alone on its private
// line.
PointSet thin_placement(const std::vector<int>& f, const std::vector<int>& g,
                        int min_n, int min_m) {
    std::vector<Cell> cells;
    int col = 0;
    for (int i = 0; i < (int)f.size(); ++i)
        for (int t = 0; t < f[i]; ++t) cells.push_back({col++, i});
    int row = (int)f.size();
    int gcol = col;
    for (int j = 0; j < (int)g.size(); ++j) {
        for (int t = 0; t < g[j]; ++t) cells.push_back({gcol, row++});
        ++gcol;
    }
    int n = std::max(min_n, gcol);
    int m = std::max(min_m, row);
    return PointSet::in_box(std::max(n, 1), std::max(m, 1), std::move(cells));
}

}  // namespace

GammaResult gamma_thin(const YoungDiagram& z, const SearchBudget& budget) {
    GammaResult base = gamma(z, budget);
    GammaResult res;
    res.lower_bounds = base.lower_bounds;
    res.lower_bounds["gamma"] = base.value;
    res.upper_bound = 2 * base.value;
    res.nodes = base.nodes;
    if (z.empty()) {
        res.witness = PointSet{0, 0, {}};
        return res;
    }
    for (long long w = base.value; w <= 2 * base.value; ++w) {
        for (long long fs = w; fs >= 0; --fs) {
            for (const auto& f : partitions_capped(fs, (int)std::max<long long>(fs, 1))) {
                for (const auto& g : partitions_capped(w - fs, (int)std::max<long long>(w - fs, 1))) {
                    if (++res.nodes > budget.nodes)
                        throw budget_exceeded("thin search budget exhausted", base.value,
                                              2 * base.value);
                    PointSet a = thin_placement(f, g, z.width(), z.height());
                    if (spans(z, a)) {
                        res.value = w;
                        res.witness = a;
                        return res;
                    }
                }
            }
        }
    }
    throw std::logic_error("thin search exceeded its provable upper bound");
}

GammaBarThinResult gamma_bar_thin(const YoungDiagram& z, const SearchBudget& budget) {
    GammaBarThinResult res;
    if (z.empty()) return res;
    int a0 = z.width(), b0 = z.height();
    long long nodes = 0;
    // sum(f)+sum(g) = |Z| is always feasible (f = the row lengths of Z), so
    // the scan terminates.
    for (long long w = 0; w <= z.cardinality(); ++w) {
        for (long long fs = w; fs >= 0; --fs) {
            for (const auto& f : partitions_capped(fs, a0)) {
                for (const auto& g : partitions_capped(w - fs, b0)) {
                    if (++nodes > budget.nodes)
                        throw budget_exceeded("enhancement search budget exhausted");
                    Enhancement ef(f), eg(g);
                    if (spans_enhanced(z, ef, eg, {})) {
                        res.value = w;
                        res.f = ef;
                        res.g = eg;
                        return res;
                    }
                }
            }
        }
    }
    throw std::logic_error("enhancement search exceeded its feasible bound");
}

PointSet two_y_double(const PointSet& a) {
    if (a.points.empty()) return PointSet{0, 0, {}};
    int aw = 0, bh = 0;
    for (const Cell& c : a.points) {
        aw = std::max(aw, c.u + 1);
        bh = std::max(bh, c.v + 1);
    }
    std::vector<int> colcnt(aw, 0), rowcnt(bh, 0);
    for (const Cell& c : a.points) {
        ++colcnt[c.u];
        ++rowcnt[c.v];
    }
    std::sort(colcnt.rbegin(), colcnt.rend());
    std::sort(rowcnt.rbegin(), rowcnt.rend());
    std::vector<Cell> cells;
    for (int u = 0; u < aw; ++u)
        for (int t = 0; t < colcnt[u]; ++t) cells.push_back({u, bh + t});
    for (int v = 0; v < bh; ++v)
        for (int t = 0; t < rowcnt[v]; ++t) cells.push_back({2 * aw + t, v});
    int n = 2 * aw + (bh ? rowcnt[0] : 0);
    int m = bh + (aw ? colcnt[0] : 0);
    return PointSet::in_box(n, m, std::move(cells));
}

std::vector<Cell> filter_crowded(const std::vector<Cell>& a, int k) {
    std::map<int, int> rowcnt, colcnt;
    for (const Cell& c : a) {
        ++rowcnt[c.v];
        ++colcnt[c.u];
    }
    std::vector<Cell> out;
    for (const Cell& c : a)
        if (rowcnt[c.v] > k || colcnt[c.u] > k) out.push_back(c);
    return out;
}

PointSet sort_canonical(const PointSet& a) {
    std::vector<int> colcnt(a.box_n, 0), rowcnt(a.box_m, 0);
    for (const Cell& c : a.points) {
        ++colcnt[c.u];
        ++rowcnt[c.v];
    }
    std::vector<int> cols(a.box_n), rows(a.box_m);
    std::iota(cols.begin(), cols.end(), 0);
    std::iota(rows.begin(), rows.end(), 0);
    std::stable_sort(cols.begin(), cols.end(),
                     [&](int x, int y) { return colcnt[x] > colcnt[y]; });
    std::stable_sort(rows.begin(), rows.end(),
                     [&](int x, int y) { return rowcnt[x] > rowcnt[y]; });
    std::vector<int> colpos(a.box_n), rowpos(a.box_m);
    for (int i = 0; i < a.box_n; ++i) colpos[cols[i]] = i;
    for (int i = 0; i < a.box_m; ++i) rowpos[rows[i]] = i;
    std::vector<Cell> cells;
    cells.reserve(a.points.size());
    for (const Cell& c : a.points) cells.push_back({colpos[c.u], rowpos[c.v]});
    return PointSet::in_box(a.box_n, a.box_m, std::move(cells));
}

}  // namespace hamming
