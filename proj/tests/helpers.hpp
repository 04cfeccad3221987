#pragma once

#include <algorithm>
#include <set>
#include <vector>

#include "hamming/growth.hpp"
#include "hamming/randmc.hpp"
#include "hamming/young.hpp"

namespace hamming::testing {

inline PointSet ps(int n, int m, std::vector<Cell> cells) {
    return PointSet::in_box(n, m, std::move(cells));
}

inline std::set<Cell> cellset(const std::vector<Cell>& cells) {
    return std::set<Cell>(cells.begin(), cells.end());
}

inline std::set<Cell> diagram_cells(const YoungDiagram& z) {
    std::set<Cell> out;
    for (int v = 0; v < z.height(); ++v)
        for (int u = 0; u < z.rows()[v]; ++u) out.insert({u, v});
    return out;
}

// Reference one-step update: counts recomputed from scratch per cell.
inline PointSet naive_step(const YoungDiagram& z, const Enhancement& f,
                           const Enhancement& g, const PointSet& a) {
    auto in = cellset(a.points);
    std::vector<Cell> out(a.points);
    for (int v = 0; v < a.box_m; ++v) {
        for (int u = 0; u < a.box_n; ++u) {
            if (in.count({u, v})) continue;
            int row = 0, col = 0;
            for (const Cell& c : a.points) {
                if (c.v == v) ++row;
                if (c.u == u) ++col;
            }
            if (!z.contains_pair(row + f.at(v), col + g.at(u))) out.push_back({u, v});
        }
    }
    return PointSet::in_box(a.box_n, a.box_m, std::move(out));
}

inline YoungDiagram random_diagram(RngStream& rng, int max_cells) {
    long long n = 1 + (long long)rng.below((uint64_t)max_cells);
    auto all = all_diagrams_of_size(n);
    return all[rng.below(all.size())];
}

inline PointSet random_pointset(RngStream& rng, int n, int m, int count) {
    std::set<Cell> cells;
    while ((int)cells.size() < count && (int)cells.size() < n * m)
        cells.insert({(int)rng.below((uint64_t)n), (int)rng.below((uint64_t)m)});
    return PointSet::in_box(n, m, {cells.begin(), cells.end()});
}

}  // namespace hamming::testing
