#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hamming/extremal.hpp"
#include "hamming/rate.hpp"
#include "hamming/rational.hpp"
#include "hamming/young.hpp"

namespace hamming {

// A continuous Young diagram: a staircase with rational breakpoints, a
// rectangle, the symmetric L-shape R_{a,1} u R_{1,a}, or one of the two
// analytic limit curves.
class EuclideanZeroSet {
  public:
    enum class Kind { staircase, rectangle, lshape, rost, vershik };

    static EuclideanZeroSet rectangle(Rat a, Rat b);
    static EuclideanZeroSet lshape(Rat a);
    // steps are (x_i, y_i) corner points with x increasing and y decreasing;
    // the region is the union of the rectangles [0,x_i] x [0,y_i].
    static EuclideanZeroSet staircase(std::vector<std::pair<Rat, Rat>> steps);
    static EuclideanZeroSet rost();
    // The exponential curve has infinite extent; it must carry a truncation
    // radius to be discretized.
    static EuclideanZeroSet vershik(Rat truncate_r);

    Kind kind() const { return kind_; }
    Rat lshape_arm() const { return la_; }
    // Exact for staircase-like kinds.
    std::optional<Rat> exact_area() const;
    double area() const;
    // For the truncated exponential curve: the area outside [0,R]^2.
    double area_tail() const;

    // Whether the closed square with top-right corner (p/n, q/n) lies inside
    // the region. Exact for staircase kinds and the algebraic curve.
    bool square_fits(long long p, long long q, long long n) const;

    std::string str() const;

  private:
    Kind kind_ = Kind::rectangle;
    std::vector<std::pair<Rat, Rat>> steps_;  // staircase corners
    Rat la_;                                  // lshape arm
    Rat trunc_;                               // vershik truncation radius
};

// Inclusion-maximal Z with (1/n) square(Z) inside E.
YoungDiagram discretize(const EuclideanZeroSet& e, int n);

struct SeriesEntry {
    int n = 0;
    long long gamma_value = 0;
    Rat scaled;  // gamma / n^2
};

// The scaled sequence gamma(Z_n)/n^2 together with the reference limit when
// one is known for this shape.
struct GammaSeries {
    std::vector<SeriesEntry> entries;
    std::optional<Rat> reference;
};
GammaSeries scaled_gamma_series(const EuclideanZeroSet& e, const std::vector<int>& ns,
                                const SearchBudget& budget = {});

// Closed-form reference quantities for the shape at a rate query: limit
// gamma, area, thin gamma, the general bracket, and the shape-specific
// two-sided bounds where they exist.
struct RefValue {
    std::string name;
    double value = 0;
    std::optional<Rat> exact;
};
std::vector<RefValue> reference_values(const EuclideanZeroSet& e, const RateQuery& q);

}  // namespace hamming
