#pragma once

#include <vector>

#include "hamming/young.hpp"

namespace hamming {

// A finitely supported nonincreasing sequence of nonnegative integers used
// to boost row or column counts.
class Enhancement {
  public:
    Enhancement() = default;
    explicit Enhancement(std::vector<int> values);
    const std::vector<int>& values() const { return values_; }
    int at(int i) const { return i >= 0 && i < (int)values_.size() ? values_[i] : 0; }
    int support() const { return (int)values_.size(); }
    long long sum() const;
    bool empty() const { return values_.empty(); }
    bool operator==(const Enhancement&) const = default;

  private:
    std::vector<int> values_;
};

// A finite occupied configuration inside the box R_{box_n, box_m}.
struct PointSet {
    int box_n = 0;
    int box_m = 0;
    std::vector<Cell> points;  // kept sorted by (v,u), no duplicates

    static PointSet in_box(int n, int m, std::vector<Cell> pts);
    bool operator==(const PointSet&) const = default;
};

struct EvolveResult {
    PointSet final;
    int steps = 0;  // sweeps that added points, at least 1
    bool filled_box = false;
};

// One synchronous update: adds every empty cell of the box whose boosted
// count pair lies outside Z.
PointSet step(const YoungDiagram& z, const Enhancement& f, const Enhancement& g,
              const PointSet& a);

// Iterate step to the least fixpoint (stopping early once the box fills).
EvolveResult evolve(const YoungDiagram& z, const Enhancement& f, const Enhancement& g,
                    const PointSet& a);

inline PointSet step(const YoungDiagram& z, const PointSet& a) {
    return step(z, Enhancement(), Enhancement(), a);
}
inline EvolveResult evolve(const YoungDiagram& z, const PointSet& a) {
    return evolve(z, Enhancement(), Enhancement(), a);
}

// Whether a fills its box (equivalently spans the quadrant). The box must
// contain the bounding rectangle of Z.
bool spans(const YoungDiagram& z, const PointSet& a);

// Whether the enhanced dynamics (z,f,g) started from a spans the quadrant.
// Points of a live in an implicit box that is grown to cover Z and the
// enhancement supports before simulating.
bool spans_enhanced(const YoungDiagram& z, const Enhancement& f, const Enhancement& g,
                    const std::vector<Cell>& a);

// Completion-time bound (k+2)(a_0+1)...(a_k+1) over the row lengths of Z.
long long tmax_bound(const YoungDiagram& z);

}  // namespace hamming
