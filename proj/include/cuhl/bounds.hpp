#ifndef CUHL_BOUNDS_HPP
#define CUHL_BOUNDS_HPP

#include <cstdint>

#include "cuhl/graph.hpp"
#include "cuhl/labels.hpp"

namespace cuhl {

// Separator-based lower-bound checks against a labeling with the
// customizable cover property. Exact arithmetic throughout: L_avg >= c*b is
// tested as cross-multiplied integers.
struct BoundsReport {
    Vertex n = 0;
    Vertex b_two_thirds = 0;
    LabelStats stats;
    bool hierarchical = false;
    bool avg_quarter_ok = false;     // 4*total >= b*n
    bool avg_two_thirds_ok = true;   // 3*total >= 2*b*n (hierarchical only)
    Vertex count_at_least_b = 0;
    bool count_ok = true;            // 3*count >= 2*n   (hierarchical only)
    // informational, not part of pass(): the 1/12 * b_{1/2} figure
    Vertex b_half = 0;
    bool avg_twelfth_ok = false;

    bool pass() const { return avg_quarter_ok && avg_two_thirds_ok && count_ok; }
};

// n <= 18 (exact separator search underneath).
BoundsReport check_lower_bounds(const Graph& g, const LabelSet& l, bool hierarchical);

// Nested dissection (exact separators, alpha = 2/3) against the optimum over
// all orders; n <= 8. Checks nd_total <= (1 + 1.5*log_1.5(n)) * opt_total.
struct NdApproximationReport {
    Vertex n = 0;
    std::uint64_t nd_total = 0;
    std::uint64_t opt_total = 0;
    double bound_factor = 0.0;
    bool ok = false;
};

NdApproximationReport check_nd_approximation(const Graph& g);

// p x p grid with grid-aware nested dissection: label sizes against the
// 3*sqrt(n) construction bound and the 14.7 approximation constant.
struct GridReport {
    Vertex p = 0;
    Vertex n = 0;
    std::uint32_t l_max = 0;
    LabelStats stats;
    double ratio = 0.0;       // L_avg / ((1/4) * sqrt(2n/3))
    double hier_ratio = 0.0;  // informational: L_avg / ((2/3) * sqrt(2n/3))
    bool l_max_ok = false;    // L_max <= 3p
    bool ratio_ok = false;    // ratio <= 14.7

    bool pass() const { return l_max_ok && ratio_ok; }
};

GridReport grid_report(Vertex p, bool grid_aware);

}  // namespace cuhl

#endif
