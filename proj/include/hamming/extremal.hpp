#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hamming/growth.hpp"
#include "hamming/rational.hpp"
#include "hamming/young.hpp"

namespace hamming {

struct SearchBudget {
    long long nodes = 20'000'000;
};

struct GammaResult {
    long long value = 0;
    PointSet witness;
    std::map<std::string, long long> lower_bounds;
    long long upper_bound = 0;
    long long nodes = 0;
};

// Cheap lower bounds: ceil(|Z|/4) and the largest rectangle inside Z.
std::map<std::string, long long> gamma_cheap_bounds(const YoungDiagram& z);

// Exact smallest spanning-set size, by exhaustive search over canonical
// representatives (both count vectors nonincreasing) inside the bounding
// rectangle of Z. Witness is the lexicographically smallest optimum.
GammaResult gamma(const YoungDiagram& z, const SearchBudget& budget = {});

// Lower bound from spanning-line sequences against a comparison rectangle
// R_{a,b} inside Z and an inner diagram Y inside R_{a-1,b-1}:
//   (1/2) min over (k,l) in the outer boundary of Y of
//   k*b + l*a - k*l + gamma(Z down l) + gamma(Z left k).
// Exact rational; shrunken gammas are computed recursively (memoized) and
// replaced by cheap bounds once the budget runs out.
Rat line_sequence_bound(const YoungDiagram& z, int a, int b, const YoungDiagram& y,
                        const SearchBudget& budget = {});

// All bounds in one map: quarter_area, line_growth, line_sequence (best over
// the staircase family for the max rectangle), and the upper bound |Z|.
std::map<std::string, long long> gamma_bounds(const YoungDiagram& z,
                                              const SearchBudget& budget = {});

// Exact smallest thin spanning set. A thin set has every point alone on its
// row or alone on its column, so up to permutations it is a pair of sorted
// group-size vectors; the witness is the canonical placement.
GammaResult gamma_thin(const YoungDiagram& z, const SearchBudget& budget = {});

// Exact minimum of sum(f)+sum(g) over enhancement pairs for which the empty
// set spans the enhanced dynamics (Z,f,g).
struct GammaBarThinResult {
    long long value = 0;
    Enhancement f, g;
};
GammaBarThinResult gamma_bar_thin(const YoungDiagram& z, const SearchBudget& budget = {});

// Doubles a configuration into two translated Young diagrams sharing no
// lines (sort columns by count, sort rows by count, stack the counts above
// and to the right of the doubled bounding rectangle).
PointSet two_y_double(const PointSet& a);

// Points of a that share a line with at least k other points of a.
std::vector<Cell> filter_crowded(const std::vector<Cell>& a, int k);

// Permute rows and columns so both count vectors are nonincreasing.
PointSet sort_canonical(const PointSet& a);

// Enumerates subsets of R_{n,m} of the given size whose row-count and
// column-count vectors are both nonincreasing. Returns false if the node
// budget was exhausted before completing. The callback receives cells
// sorted by (v,u).
bool enumerate_canonical_sets(int n, int m, int size, long long& nodes,
                              long long node_budget,
                              const std::function<void(const std::vector<Cell>&)>& cb);

}  // namespace hamming
