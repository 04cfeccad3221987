#include "hamming/rate.hpp"

#include <algorithm>
#include <numeric>

#include "hamming/maxflow.hpp"

namespace hamming {

namespace {

int count_distinct_u(const std::vector<Cell>& cells) {
    std::vector<int> us;
    for (const Cell& c : cells) us.push_back(c.u);
    std::sort(us.begin(), us.end());
    return (int)(std::unique(us.begin(), us.end()) - us.begin());
}

int count_distinct_v(const std::vector<Cell>& cells) {
    std::vector<int> vs;
    for (const Cell& c : cells) vs.push_back(c.v);
    std::sort(vs.begin(), vs.end());
    return (int)(std::unique(vs.begin(), vs.end()) - vs.begin());
}

Rat rho_linear(const RateQuery& q, int size, int px, int py) {
    return Rat(size) - q.alpha * Rat(px) - q.beta * Rat(py);
}

}  // namespace

RateResult rho(const RateQuery& q, const PointSet& a) {
    RateResult res;
    res.witness_a = a;
    if (a.points.empty()) {
        res.value = Rat(0);
        return res;
    }
    // Distinct columns and rows actually used.
    std::vector<int> us, vs;
    for (const Cell& c : a.points) {
        us.push_back(c.u);
        vs.push_back(c.v);
    }
    std::sort(us.begin(), us.end());
    us.erase(std::unique(us.begin(), us.end()), us.end());
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());

    long long ad = q.alpha.den(), bd = q.beta.den();
    long long scale = ad / std::gcd(ad, bd) * bd;
    long long cap_col = q.alpha.num() * (scale / ad);
    long long cap_row = q.beta.num() * (scale / bd);
    int npts = (int)a.points.size();
    int ncol = (int)us.size(), nrow = (int)vs.size();
    int source = 0, sink = 1;
    auto pt_node = [&](int i) { return 2 + i; };
    auto col_node = [&](int j) { return 2 + npts + j; };
    auto row_node = [&](int j) { return 2 + npts + ncol + j; };
    MaxFlow mf(2 + npts + ncol + nrow);
    long long inf = (long long)npts * scale + 1;
    for (int i = 0; i < npts; ++i) {
        mf.add_edge(source, pt_node(i), scale);
        int cu = (int)(std::lower_bound(us.begin(), us.end(), a.points[i].u) - us.begin());
        int rv = (int)(std::lower_bound(vs.begin(), vs.end(), a.points[i].v) - vs.begin());
        mf.add_edge(pt_node(i), col_node(cu), inf);
        mf.add_edge(pt_node(i), row_node(rv), inf);
    }
    for (int j = 0; j < ncol; ++j) mf.add_edge(col_node(j), sink, cap_col);
    for (int j = 0; j < nrow; ++j) mf.add_edge(row_node(j), sink, cap_row);
    long long flow = mf.run(source, sink);
    res.value = Rat((long long)npts * scale - flow, scale);
    auto side = mf.min_cut_source_side(source);
    for (int i = 0; i < npts; ++i)
        if (side[pt_node(i)]) res.witness_b.push_back(a.points[i]);
    return res;
}

RateResult rho_bruteforce(const RateQuery& q, const PointSet& a) {
    if (a.points.size() > 20) throw invalid_input("brute-force energy limited to 20 points");
    RateResult res;
    res.witness_a = a;
    res.value = Rat(0);
    int n = (int)a.points.size();
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        std::vector<Cell> b;
        for (int i = 0; i < n; ++i)
            if (mask >> i & 1) b.push_back(a.points[i]);
        Rat v = rho_linear(q, (int)b.size(), count_distinct_u(b), count_distinct_v(b));
        if (v > res.value) {
            res.value = v;
            res.witness_b = b;
        }
    }
    return res;
}

RateSearch::RateSearch(const YoungDiagram& z, int box_pad, int size_cap,
                       const SearchBudget& budget)
    : z_(z), pad_(box_pad), budget_(budget.nodes) {
    if (box_pad < 0) throw invalid_input("box pad must be nonnegative");
    GammaResult g = gamma(z, budget);
    gamma_ = g.value;
    size_cap_ = std::max<long long>(gamma_, size_cap);
}

const std::vector<RateSearch::Candidate>& RateSearch::pool_for_size(int s) const {
    auto it = pools_.find(s);
    if (it != pools_.end()) return it->second;
    int bn = std::max(std::max(1, z_.width() + pad_), s);
    int bm = std::max(std::max(1, z_.height() + pad_), s);
    auto& pool = pools_[s];
    bool done = enumerate_canonical_sets(
        bn, bm, s, nodes_, budget_, [&](const std::vector<Cell>& cells) {
            PointSet ps{bn, bm, cells};
            if (spans(z_, ps))
                pool.push_back({cells, (int)cells.size(), count_distinct_u(cells),
                                count_distinct_v(cells)});
        });
    if (!done) complete_ = false;
    return pool;
}

RateResult RateSearch::query(const RateQuery& q) const {
    bool linear_regime = q.alpha + q.beta < Rat(1);
    Rat margin = Rat(1) - q.alpha - q.beta;
    const Candidate* best_c = nullptr;
    Rat best;
    RateResult best_rho;
    for (long long s = gamma_;; ++s) {
        if (best_c) {
            if (linear_regime && Rat(s) * margin >= best) break;
            if (best == Rat(0)) break;
        }
        if (!linear_regime && s > size_cap_) break;
        const auto& pool = pool_for_size((int)s);
        for (const Candidate& c : pool) {
            Rat lb = rat_max(Rat(0), rho_linear(q, c.size, c.px, c.py));
            if (best_c && lb > best) continue;
            Rat v;
            RateResult r;
            if (linear_regime) {
                v = lb;
            } else {
                int box = std::max({c.size, z_.width() + pad_, z_.height() + pad_, 1});
                r = rho(q, PointSet{box, box, c.cells});
                v = r.value;
            }
            if (!best_c || v < best || (v == best && c.cells < best_c->cells)) {
                best_c = &c;
                best = v;
                best_rho = r;
            }
        }
        if (!complete_) break;
    }
    if (!best_c) throw budget_exceeded("rate search found no spanning candidates in budget");
    RateResult res;
    res.value = best;
    int box = std::max({best_c->size, z_.width() + pad_, z_.height() + pad_, 1});
    res.witness_a = PointSet{box, box, best_c->cells};
    if (linear_regime) {
        res.witness_b = best_c->cells;  // the full set attains the maximum
    } else {
        res.witness_b = best_rho.witness_b;
    }
    res.complete = complete_;
    res.exact = complete_ && (linear_regime || best == Rat(0));
    return res;
}

RateResult rate_search(const YoungDiagram& z, const RateQuery& q, int box_pad,
                       const SearchBudget& budget) {
    RateSearch rs(z, box_pad, 0, budget);
    return rs.query(q);
}

Rat rate_rect_recursion(int a, int b, const RateQuery& q) {
    if (a < 0 || b < 0) throw invalid_input("rectangle sides must be nonnegative");
    if (q.alpha >= Rat(1) || q.beta >= Rat(1))
        throw invalid_input("rectangle rate requires alpha, beta in [0,1)");
    std::vector<std::vector<Rat>> tab((size_t)a + 1, std::vector<Rat>((size_t)b + 1, Rat(0)));
    for (int i = 1; i <= a; ++i) {
        for (int j = 1; j <= b; ++j) {
            Rat gain_h = rat_max(Rat(0), -q.alpha + Rat(j) * (Rat(1) - q.beta));
            Rat gain_v = rat_max(Rat(0), -q.beta + Rat(i) * (Rat(1) - q.alpha));
            tab[i][j] = rat_min(gain_h + tab[i - 1][j], gain_v + tab[i][j - 1]);
        }
    }
    return tab[a][b];
}

Rat rate_rect_closed(int a, int b, const RateQuery& q) {
    if (a < 0 || b < 0) throw invalid_input("rectangle sides must be nonnegative");
    if (q.alpha >= Rat(1) || q.beta >= Rat(1))
        throw invalid_input("rectangle rate requires alpha, beta in [0,1)");
    const Rat &al = q.alpha, &be = q.beta;
    if (be > al) return rate_rect_closed(b, a, RateQuery(be, al));
    Rat da_r = be / (Rat(1) - al);
    Rat db_r = al / (Rat(1) - be);
    Rat da = Rat(da_r.floor());
    Rat db = Rat(db_r.floor());
    if (Rat(b) <= db || Rat(a) <= da) return Rat(0);
    Rat A(a), B(b);
    if (db * (Rat(1) - be) <= be) {
        Rat v = (Rat(1) - al) * A * B + ((al - be) * db - be) * A - be * B -
                (Rat(1) - be) * da * db + be * da + be * db + be -
                rat_max((Rat(1) - be) * db, (Rat(1) - al) * da);
        return v;
    }
    Rat tail1 = -be * (db + Rat(1)) * A - (Rat(1) - be) * da * db + be * da + be -
                (Rat(1) - al) * da;
    Rat tail2 = -db * A;
    return (Rat(1) - al) * A * B + al * db * A - be * B + be * db + rat_min(tail1, tail2);
}

Rat rate_bootstrap_diag(int theta, const Rat& alpha) {
    if (theta < 1) throw invalid_input("threshold must be at least 1");
    if (alpha < Rat(0) || alpha >= Rat(1))
        throw invalid_input("diagonal rate requires alpha in [0,1)");
    long long k = (theta + 1) / 2;
    if (alpha >= Rat(k, k + 1)) return Rat(0);
    long long m = (Rat(1) / (Rat(1) - alpha)).floor();
    if (theta % 2 == 0) {
        return Rat((k + m) * (k - m + 1)) - alpha * Rat((k + m + 2) * (k - m + 1));
    }
    return Rat((k + m - 1) * (k - m) + k) - alpha * Rat((k + m + 1) * (k - m) + k + 1);
}

SupportRegion::SupportRegion(const YoungDiagram& z) {
    whole_square_ = z.empty();
    if (!whole_square_) boundary_ = z.outer_boundary();
}

bool SupportRegion::contains(const RateQuery& q) const {
    return classify(q) != Position::outside;
}

SupportRegion::Position SupportRegion::classify(const RateQuery& q) const {
    if (whole_square_) return Position::interior;
    bool on_edge = false;
    for (const Cell& c : boundary_) {
        Rat c1 = Rat(c.u) * (Rat(1) - q.alpha) - q.beta;
        Rat c2 = Rat(c.v) * (Rat(1) - q.beta) - q.alpha;
        Rat mx = rat_max(c1, c2);
        if (mx < Rat(0)) return Position::outside;
        if (mx == Rat(0)) on_edge = true;
    }
    return on_edge ? Position::boundary : Position::interior;
}

Rat SupportRegion::beta_limit(const Rat& alpha) const {
    // For fixed alpha each cell allows beta up to max of its two lines.
    Rat best(2);
    bool unconstrained = true;
    for (const Cell& c : boundary_) {
        Rat t1 = Rat(c.u) * (Rat(1) - alpha);
        Rat t;
        if (c.v == 0) {
            if (alpha == Rat(0)) continue;  // cell imposes nothing at alpha = 0
            t = t1;
        } else {
            t = rat_max(t1, Rat(1) - alpha / Rat(c.v));
        }
        unconstrained = false;
        if (t < best) best = t;
    }
    if (unconstrained) return Rat(1);
    return rat_min(Rat(1), rat_max(Rat(0), best));
}

std::vector<std::pair<Rat, Rat>> SupportRegion::boundary_polyline() const {
    if (whole_square_) return {{Rat(0), Rat(1)}, {Rat(1), Rat(1)}};
    // All constraint lines beta = s*alpha + i, plus the clamps beta = 0, 1.
    std::vector<std::pair<Rat, Rat>> lines;  // (slope, intercept)
    for (const Cell& c : boundary_) {
        lines.push_back({Rat(-c.u), Rat(c.u)});
        if (c.v > 0) lines.push_back({Rat(-1, c.v), Rat(1)});
    }
    lines.push_back({Rat(0), Rat(0)});
    lines.push_back({Rat(0), Rat(1)});
    std::vector<Rat> knots{Rat(0), Rat(1)};
    for (size_t i = 0; i < lines.size(); ++i) {
        for (size_t j = i + 1; j < lines.size(); ++j) {
            if (lines[i].first == lines[j].first) continue;
            Rat x = (lines[j].second - lines[i].second) / (lines[i].first - lines[j].first);
            if (x >= Rat(0) && x <= Rat(1)) knots.push_back(x);
        }
    }
    std::sort(knots.begin(), knots.end());
    knots.erase(std::unique(knots.begin(), knots.end()), knots.end());
    std::vector<std::pair<Rat, Rat>> pts;
    for (const Rat& x : knots) pts.push_back({x, beta_limit(x)});
    // Drop collinear interior vertices.
    std::vector<std::pair<Rat, Rat>> out;
    for (size_t i = 0; i < pts.size(); ++i) {
        while (out.size() >= 2) {
            auto& p0 = out[out.size() - 2];
            auto& p1 = out[out.size() - 1];
            Rat lhs = (pts[i].first - p0.first) * (p1.second - p0.second);
            Rat rhs = (p1.first - p0.first) * (pts[i].second - p0.second);
            if (lhs == rhs)
                out.pop_back();
            else
                break;
        }
        out.push_back(pts[i]);
    }
    return out;
}

std::map<std::string, Rat> rate_bounds(const YoungDiagram& z, const RateQuery& q, int k,
                                       const SearchBudget& budget) {
    if (k < 0) throw invalid_input("shrink parameter must be nonnegative");
    Rat mx = rat_max(q.alpha, q.beta);
    Rat mn = rat_min(q.alpha, q.beta);
    long long gz = gamma(z, budget).value;
    long long gk = gamma(z.shrink(k, YoungDiagram::Shrink::diag), budget).value;
    std::map<std::string, Rat> b;
    b["lower_shrink"] = Rat(gk) * (Rat(1) - mx * Rat(k + 2, k + 1));
    b["upper_area"] = (Rat(1) - mx) * Rat(z.cardinality());
    b["upper_two_gamma"] = Rat(2) * (Rat(1) - mn) * Rat(gz);
    b["upper_gamma"] = Rat(gz);
    return b;
}

namespace {

// All size-k subsets of the box cells, cells listed by (v,u).
void subsets_rec(const std::vector<Cell>& cells, int start, int k, std::vector<Cell>& cur,
                 const std::function<void(const std::vector<Cell>&)>& cb) {
    if (k == 0) {
        cb(cur);
        return;
    }
    for (int i = start; i + k <= (int)cells.size(); ++i) {
        cur.push_back(cells[i]);
        subsets_rec(cells, i + 1, k - 1, cur, cb);
        cur.pop_back();
    }
}

}  // namespace

EnhancementRateResult enhancement_rate(const YoungDiagram& z, const RateQuery& q,
                                       const SearchBudget& budget) {
    EnhancementRateResult res;
    if (z.empty()) {
        res.value = Rat(0);
        return res;
    }
    if (q.alpha == Rat(1)) {
        res.value = Rat(0);
        res.f = Enhancement(z.rows());
        return res;
    }
    if (q.beta == Rat(1)) {
        res.value = Rat(0);
        res.g = Enhancement(z.transpose().rows());
        return res;
    }
    int a0 = z.width(), b0 = z.height();
    GammaResult g = gamma(z, budget);
    Rat best(g.value);
    res.value = best;
    res.witness_a = g.witness.points;
    std::vector<Cell> boxcells;
    for (int v = 0; v < b0; ++v)
        for (int u = 0; u < a0; ++u) boxcells.push_back({u, v});
    Rat unit_cost = Rat(1) - rat_max(q.alpha, q.beta);
    long long nodes = 0;
    for (long long w = 0; Rat(w) * unit_cost < best; ++w) {
        for (long long wa = 0; wa <= std::min<long long>(w, (long long)a0 * b0); ++wa) {
            for (long long wf = 0; wf + wa <= w; ++wf) {
                long long wg = w - wa - wf;
                Rat cost = Rat(wa) + (Rat(1) - q.alpha) * Rat(wf) + (Rat(1) - q.beta) * Rat(wg);
                if (cost >= best) continue;
                for (const auto& f : partitions_capped(wf, a0)) {
                    for (const auto& gpart : partitions_capped(wg, b0)) {
                        Enhancement ef(f), eg(gpart);
                        std::vector<Cell> cur;
                        bool found = false;
                        subsets_rec(boxcells, 0, (int)wa, cur,
                                    [&](const std::vector<Cell>& cells) {
                                        if (found) return;
                                        if (++nodes > budget.nodes)
                                            throw budget_exceeded(
                                                "enhancement rate budget exhausted");
                                        if (spans_enhanced(z, ef, eg, cells)) {
                                            found = true;
                                            best = cost;
                                            res.value = cost;
                                            res.witness_a = cells;
                                            res.f = ef;
                                            res.g = eg;
                                        }
                                    });
                        if (found) break;
                    }
                    if (cost >= best) break;
                }
            }
        }
    }
    return res;
}

}  // namespace hamming
