#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hamming/extremal.hpp"
#include "hamming/growth.hpp"
#include "hamming/rational.hpp"
#include "hamming/young.hpp"

namespace hamming {

struct RateQuery {
    Rat alpha;
    Rat beta;
    RateQuery(Rat a, Rat b) : alpha(a), beta(b) {
        if (alpha < Rat(0) || alpha > Rat(1) || beta < Rat(0) || beta > Rat(1))
            throw invalid_input("alpha and beta must lie in [0,1]");
    }
};

struct RateResult {
    Rat value;
    PointSet witness_a;           // spanning set attaining the minimum, when applicable
    std::vector<Cell> witness_b;  // subset of witness_a attaining the energy maximum
    bool exact = true;            // complete search or closed form
    bool complete = true;         // enumeration finished within budget
};

// Energy maximum max over B of |B| - alpha|pi_x(B)| - beta|pi_y(B)|, solved
// exactly as a maximum-weight closure: each point is a unit-profit item that
// requires its column (cost alpha) and its row (cost beta); one min s-t cut
// on integer capacities after common-denominator scaling.
RateResult rho(const RateQuery& q, const PointSet& a);

// Independent oracle: exhaustive maximum over all subsets. |A| <= 20.
RateResult rho_bruteforce(const RateQuery& q, const PointSet& a);

// Minimizes rho over spanning sets of one zero-set. Candidates are the
// canonical representatives (both count vectors nonincreasing); since
// sorting maps any size-s set into R_{s,s} and preserves spanning and rho,
// enumerating inside R_{max(a0+pad,s), max(b0+pad,s)} is complete for each
// size. When alpha+beta < 1 the energy is |A|-alpha|pi_x|-beta|pi_y| and
// every extra point costs at least 1-alpha-beta, so the size scan stops
// once s(1-alpha-beta) reaches the best value found: the result is exact.
// Otherwise sizes are capped at max(gamma, size_cap) and the value is an
// upper bound, certified exact only when it hits zero. Per-size candidate
// pools are cached and shared across queries.
class RateSearch {
  public:
    RateSearch(const YoungDiagram& z, int box_pad = 1, int size_cap = 0,
               const SearchBudget& budget = {});

    RateResult query(const RateQuery& q) const;

    long long gamma_value() const { return gamma_; }
    bool complete() const { return complete_; }

  private:
    struct Candidate {
        std::vector<Cell> cells;
        int size, px, py;
    };
    const std::vector<Candidate>& pool_for_size(int s) const;

    YoungDiagram z_;
    int pad_;
    long long size_cap_;
    long long budget_;
    long long gamma_ = 0;
    mutable long long nodes_ = 0;
    mutable bool complete_ = true;
    mutable std::map<int, std::vector<Candidate>> pools_;
};

// One-shot convenience wrapper.
RateResult rate_search(const YoungDiagram& z, const RateQuery& q, int box_pad = 1,
                       const SearchBudget& budget = {});

// Dynamic program for the rectangle rate:
//   I(a,b) = min( [0 v (-alpha + b(1-beta))] + I(a-1,b),
//                 [0 v (-beta + a(1-alpha))] + I(a,b-1) ),  I(a,0)=I(0,b)=0.
// Requires alpha, beta in [0,1).
Rat rate_rect_recursion(int a, int b, const RateQuery& q);

// Closed form for the rectangle rate, branch chosen by whether
// floor(alpha/(1-beta))*(1-beta) <= beta; symmetric in (alpha,a)<->(beta,b).
Rat rate_rect_closed(int a, int b, const RateQuery& q);

// Diagonal rate for the triangular zero-set T_theta at alpha = beta.
Rat rate_bootstrap_diag(int theta, const Rat& alpha);

// The region where the rate is positive:
//   intersection over boundary cells (u,v) of
//   { [u(1-alpha)-beta] v [v(1-beta)-alpha] >= 0 }.
class SupportRegion {
  public:
    explicit SupportRegion(const YoungDiagram& z);

    enum class Position { outside, boundary, interior };
    // Closed membership (>= 0 for every boundary cell).
    bool contains(const RateQuery& q) const;
    // interior = every cell strictly positive; the rate vanishes on the
    // boundary and outside.
    Position classify(const RateQuery& q) const;

    // Exact vertices of the upper boundary curve beta*(alpha), alpha in [0,1].
    std::vector<std::pair<Rat, Rat>> boundary_polyline() const;

  private:
    Rat beta_limit(const Rat& alpha) const;  // sup feasible beta at fixed alpha
    std::vector<Cell> boundary_;
    bool whole_square_ = false;
};

// Named rate bounds: lower_shrink (k-shrunken gamma times the projection
// factor), upper_area, upper_two_gamma, upper_gamma.
std::map<std::string, Rat> rate_bounds(const YoungDiagram& z, const RateQuery& q, int k,
                                       const SearchBudget& budget = {});

// Exact enhancement rate: min |A| + (1-alpha) sum f + (1-beta) sum g over
// triples where A spans the enhanced dynamics (Z,f,g).
struct EnhancementRateResult {
    Rat value;
    std::vector<Cell> witness_a;
    Enhancement f, g;
};
EnhancementRateResult enhancement_rate(const YoungDiagram& z, const RateQuery& q,
                                       const SearchBudget& budget = {});

}  // namespace hamming
