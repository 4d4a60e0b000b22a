#include "cuhl/bounds.hpp"

#include <cmath>
#include <stdexcept>

#include "cuhl/separator.hpp"

namespace cuhl {

BoundsReport check_lower_bounds(const Graph& g, const LabelSet& l, bool hierarchical) {
    if (g.num_vertices() > 18)
        throw std::invalid_argument("lower-bound checks limited to n <= 18");
    if (l.n() != g.num_vertices()) throw std::invalid_argument("labels do not match graph");
    BoundsReport r;
    r.n = g.num_vertices();
    r.b_two_thirds = exact_b_alpha(g, Alpha::two_thirds());
    r.b_half = exact_b_alpha(g, Alpha{1, 2});
    r.stats = label_stats(l);
    r.hierarchical = hierarchical;

    std::uint64_t b = r.b_two_thirds;
    std::uint64_t n = r.n;
    r.avg_quarter_ok = 4 * r.stats.total >= b * n;
    r.avg_twelfth_ok = 12 * r.stats.total >= std::uint64_t(r.b_half) * n;
    if (hierarchical) {
        r.avg_two_thirds_ok = 3 * r.stats.total >= 2 * b * n;
        for (Vertex v = 0; v < r.n; ++v)
            if (l.hubs[v].size() >= b) ++r.count_at_least_b;
        r.count_ok = 3 * std::uint64_t(r.count_at_least_b) >= 2 * n;
    }
    return r;
}

NdApproximationReport check_nd_approximation(const Graph& g) {
    if (g.num_vertices() > 8)
        throw std::invalid_argument("order enumeration limited to n <= 8");
    NdApproximationReport r;
    r.n = g.num_vertices();
    SeparatorTree t = build_separator_decomposition(g, Alpha::two_thirds(), SeparatorMode::exact);
    Order nd = nested_dissection_order(t, g);
    r.nd_total = canonical_total_label_size(g, nd);
    r.opt_total = optimal_hcuhl_bruteforce(g).total;
    r.bound_factor = 1.0 + 1.5 * std::log(static_cast<double>(r.n)) / std::log(1.5);
    r.ok = static_cast<long double>(r.nd_total) <=
           static_cast<long double>(r.bound_factor) * static_cast<long double>(r.opt_total);
    return r;
}

GridReport grid_report(Vertex p, bool grid_aware) {
    if (p == 0 || p > 64) throw std::invalid_argument("grid report supports 1 <= p <= 64");
    GridReport r;
    r.p = p;
    r.n = p * p;
    Graph g = gen_grid(p, p);
    SeparatorMode mode = grid_aware ? SeparatorMode::grid_aware : SeparatorMode::heuristic;
    SeparatorTree t = build_separator_decomposition(g, Alpha::two_thirds(), mode);
    Order nd = nested_dissection_order(t, g);
    LabelSet labels = build_canonical_hcuhl(build_cch(g, nd));
    r.stats = label_stats(labels);
    r.l_max = r.stats.l_max;
    double denom = std::sqrt(2.0 * r.n / 3.0);
    r.ratio = r.stats.avg() / (0.25 * denom);
    r.hier_ratio = r.stats.avg() / ((2.0 / 3.0) * denom);
    r.l_max_ok = r.l_max <= 3 * p;
    r.ratio_ok = r.ratio <= 14.7;
    return r;
}

}  // namespace cuhl
