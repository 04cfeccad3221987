#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "hamming/errors.hpp"

namespace hamming {

struct Cell {
    int u = 0;  // column
    int v = 0;  // row
    auto operator<=>(const Cell&) const = default;
};

class YoungDiagram;

// Residual of removing the k longest rows and columns, plus the cardinality
// of the removed strip.
struct CornerStrip;
// Intersection with a rectangle, plus the number of removed cells.
struct Truncation;

// A finite zero-set stored as its row lengths, bottom row first. Row v
// occupies cells (0..rows[v]-1, v); the vector is nonincreasing.
class YoungDiagram {
  public:
    YoungDiagram() = default;
    static YoungDiagram from_rows(std::vector<int> rows);
    static YoungDiagram rectangle(int a, int b);
    // T_theta = {(u,v) : u+v <= theta-1}.
    static YoungDiagram triangle(int theta);
    // R_{a+b,c} union R_{a,c+d}.
    static YoungDiagram lshape(int a, int b, int c, int d);

    const std::vector<int>& rows() const { return rows_; }
    bool empty() const { return rows_.empty(); }
    int height() const { return (int)rows_.size(); }              // b0
    int width() const { return rows_.empty() ? 0 : rows_[0]; }    // a0
    long long cardinality() const;
    bool contains(int u, int v) const {
        return v >= 0 && u >= 0 && v < (int)rows_.size() && u < rows_[v];
    }
    // Membership test for a count pair: the growth rule fires exactly when
    // this is false.
    bool contains_pair(long long h, long long w) const {
        return w >= 0 && h >= 0 && w < (long long)rows_.size() && h < rows_[(size_t)w];
    }

    YoungDiagram transpose() const;

    // Cells just outside the diagram with an occupied left or lower
    // neighbor, sorted by (v,u).
    std::vector<Cell> outer_boundary() const;
    // Cells whose addition keeps the diagram a Young diagram. A subset of
    // outer_boundary, pairwise incomparable in the coordinatewise order.
    std::vector<Cell> addable_corners() const;

    enum class Shrink { down, left, diag };
    YoungDiagram shrink(int k, Shrink mode) const;
    CornerStrip corner_strip(int k) const;

    // Largest rectangle R_{a,b} inside the diagram, ties by smallest a.
    struct MaxRect {
        int a = 0, b = 0;
        long long area = 0;
    };
    MaxRect max_rectangle() const;

    // Z intersect R_{a,b}; a,b < 0 mean unbounded.
    Truncation truncate(int a, int b) const;

    bool operator==(const YoungDiagram& o) const { return rows_ == o.rows_; }
    bool operator<(const YoungDiagram& o) const { return rows_ < o.rows_; }

    std::string str() const;  // "3,2,1"; "empty" for the empty diagram

  private:
    std::vector<int> rows_;
};

struct CornerStrip {
    YoungDiagram residual;
    long long strip_cells = 0;
};

struct Truncation {
    YoungDiagram diagram;
    long long removed = 0;
};

// All Young diagrams with exactly n cells (partitions of n), descending
// lexicographic order. n = 0 yields the empty diagram.
std::vector<YoungDiagram> all_diagrams_of_size(long long n);

// All partitions of total with parts at most max_part, descending
// lexicographic order; total = 0 yields one empty partition.
std::vector<std::vector<int>> partitions_capped(long long total, int max_part);

}  // namespace hamming
