#include "hamming/young.hpp"

#include <algorithm>
#include <numeric>

namespace hamming {

YoungDiagram YoungDiagram::from_rows(std::vector<int> rows) {
    for (size_t i = 0; i < rows.size(); ++i) {
        if (rows[i] <= 0) throw invalid_input("row lengths must be positive");
        if (i > 0 && rows[i] > rows[i - 1])
            throw invalid_input("row lengths must be nonincreasing");
    }
    YoungDiagram z;
    z.rows_ = std::move(rows);
    return z;
}

YoungDiagram YoungDiagram::rectangle(int a, int b) {
    if (a < 0 || b < 0) throw invalid_input("rectangle sides must be nonnegative");
    YoungDiagram z;
    if (a > 0 && b > 0) z.rows_.assign((size_t)b, a);
    return z;
}

YoungDiagram YoungDiagram::triangle(int theta) {
    if (theta < 0) throw invalid_input("triangle parameter must be nonnegative");
    YoungDiagram z;
    for (int v = 0; v < theta; ++v) z.rows_.push_back(theta - v);
    return z;
}

YoungDiagram YoungDiagram::lshape(int a, int b, int c, int d) {
    if (a < 0 || b < 0 || c < 0 || d < 0)
        throw invalid_input("lshape parameters must be nonnegative");
    std::vector<int> rows;
    for (int v = 0; v < c; ++v) rows.push_back(a + b);
    for (int v = 0; v < d; ++v) rows.push_back(a);
    while (!rows.empty() && rows.back() == 0) rows.pop_back();
    return from_rows(std::move(rows));
}

long long YoungDiagram::cardinality() const {
    return std::accumulate(rows_.begin(), rows_.end(), 0LL);
}

YoungDiagram YoungDiagram::transpose() const {
    YoungDiagram t;
    if (rows_.empty()) return t;
    for (int u = 0; u < rows_[0]; ++u) {
        int h = 0;
        while (h < (int)rows_.size() && rows_[h] > u) ++h;
        t.rows_.push_back(h);
    }
    return t;
}

std::vector<Cell> YoungDiagram::outer_boundary() const {
    std::vector<Cell> cells;
    int b0 = height();
    if (b0 == 0) return cells;
    // Row v < b0: (rows[v], v) has an occupied left neighbor; cells strictly
    // between rows[v] and rows[v-1] have an occupied lower neighbor.
    cells.push_back({rows_[0], 0});
    for (int v = 1; v < b0; ++v)
        for (int u = rows_[v]; u < std::max(rows_[v] + 1, rows_[v - 1]); ++u)
            cells.push_back({u, v});
    // Row b0: everything above the topmost row.
    for (int u = 0; u < rows_[b0 - 1]; ++u) cells.push_back({u, b0});
    std::sort(cells.begin(), cells.end(), [](const Cell& a, const Cell& b) {
        return a.v != b.v ? a.v < b.v : a.u < b.u;
    });
    return cells;
}

std::vector<Cell> YoungDiagram::addable_corners() const {
    std::vector<Cell> cells;
    int b0 = height();
    for (int v = 0; v < b0; ++v)
        if (v == 0 || rows_[v] < rows_[v - 1]) cells.push_back({rows_[v], v});
    cells.push_back({0, b0});
    return cells;
}

YoungDiagram YoungDiagram::shrink(int k, Shrink mode) const {
    if (k < 0) throw invalid_input("shrink amount must be nonnegative");
    std::vector<int> rows;
    switch (mode) {
        case Shrink::down:
            if (k < (int)rows_.size()) rows.assign(rows_.begin() + k, rows_.end());
            break;
        case Shrink::left:
            for (int len : rows_)
                if (len > k) rows.push_back(len - k);
            break;
        case Shrink::diag:
            for (size_t v = k; v < rows_.size(); ++v)
                if (rows_[v] > k) rows.push_back(rows_[v] - k);
            break;
    }
    YoungDiagram z;
    z.rows_ = std::move(rows);
    return z;
}

CornerStrip YoungDiagram::corner_strip(int k) const {
    CornerStrip cs;
    cs.residual = shrink(k, Shrink::diag);
    cs.strip_cells = cardinality() - cs.residual.cardinality();
    return cs;
}

YoungDiagram::MaxRect YoungDiagram::max_rectangle() const {
    MaxRect best;
    for (int b = 1; b <= height(); ++b) {
        int a = rows_[b - 1];  // widest rectangle of height b
        long long area = (long long)a * b;
        if (area > best.area || (area == best.area && a < best.a)) best = {a, b, area};
    }
    return best;
}

Truncation YoungDiagram::truncate(int a, int b) const {
    Truncation t;
    std::vector<int> rows;
    for (size_t v = 0; v < rows_.size(); ++v) {
        if (b >= 0 && (int)v >= b) break;
        int len = rows_[v];
        if (a >= 0) len = std::min(len, a);
        if (len > 0) rows.push_back(len);
    }
    t.diagram.rows_ = std::move(rows);
    t.removed = cardinality() - t.diagram.cardinality();
    return t;
}

std::string YoungDiagram::str() const {
    if (rows_.empty()) return "empty";
    std::string s;
    for (size_t i = 0; i < rows_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(rows_[i]);
    }
    return s;
}

namespace {
void partitions_rec(long long n, int max_part, std::vector<int>& cur,
                    std::vector<YoungDiagram>& out) {
    if (n == 0) {
        out.push_back(YoungDiagram::from_rows(cur));
        return;
    }
    for (int p = (int)std::min<long long>(max_part, n); p >= 1; --p) {
        cur.push_back(p);
        partitions_rec(n - p, p, cur, out);
        cur.pop_back();
    }
}
}  // namespace

std::vector<YoungDiagram> all_diagrams_of_size(long long n) {
    std::vector<YoungDiagram> out;
    if (n == 0) {
        out.push_back(YoungDiagram());
        return out;
    }
    std::vector<int> cur;
    partitions_rec(n, (int)n, cur, out);
    return out;
}

namespace {
void parts_rec(long long total, int max_part, std::vector<int>& cur,
               std::vector<std::vector<int>>& out) {
    if (total == 0) {
        out.push_back(cur);
        return;
    }
    for (int p = (int)std::min<long long>(max_part, total); p >= 1; --p) {
        cur.push_back(p);
        parts_rec(total - p, p, cur, out);
        cur.pop_back();
    }
}
}  // namespace

std::vector<std::vector<int>> partitions_capped(long long total, int max_part) {
    std::vector<std::vector<int>> out;
    if (total == 0) {
        out.push_back({});
        return out;
    }
    if (max_part <= 0) return out;  // no partition of a positive total
    std::vector<int> cur;
    parts_rec(total, max_part, cur, out);
    return out;
}

}  // namespace hamming
