#ifndef CUHL_ORACLES_HPP
#define CUHL_ORACLES_HPP

#include <cstdint>
#include <vector>

#include "cuhl/graph.hpp"
#include "cuhl/labels.hpp"

namespace cuhl {

// Ground-truth single-source distances; unreachable vertices get kInfinity.
std::vector<Weight> dijkstra(const Graph& g, const Metric& m, Vertex s);

// Weighted contraction hierarchy: shortcuts survive an exact local witness
// search (a tie counts as a witness, so no shortcut is added).
struct CHGraph {
    Graph base;
    Order order;
    // upward arcs (to, weight), sorted by target id
    std::vector<std::vector<std::pair<Vertex, Weight>>> up;
    std::uint32_t shortcut_count = 0;

    Vertex num_vertices() const { return base.num_vertices(); }
};

// Requires strictly positive weights.
CHGraph build_weighted_ch(const Graph& g, const Metric& m, const Order& ord);

struct SearchSpaces {
    std::vector<std::vector<Vertex>> sets;  // sorted by id
    std::uint64_t total = 0;
    std::uint32_t s_max = 0;

    double avg() const { return sets.empty() ? 0.0 : static_cast<double>(total) / sets.size(); }
};

// Upward reachability per vertex in the CH graph.
SearchSpaces ch_search_spaces(const CHGraph& ch);

// Metric-dependent canonical hierarchical labels: u in L(v) iff the distance
// from u restricted to ranks <= rank(u) matches the true distance (finite).
// One rank-restricted Dijkstra per hub candidate. Strictly positive weights.
LabelSet canonical_hhl(const Graph& g, const Metric& m, const Order& ord);

// Greedy elimination order by minimum fill-degree, ids breaking ties.
Order min_degree_order(const Graph& g);

struct MetricCoverReport {
    bool pass = true;
    Vertex s = 0, t = 0;
};

// For every reachable pair some common hub must lie on a shortest path at
// the true distance. All-pairs check, desk scale only.
MetricCoverReport verify_metric_cover(const Graph& g, const Metric& m, const LabelSet& l);

struct GapRow {
    std::uint32_t k = 0;
    Vertex n = 0;
    double l_avg = 0.0;  // explicit hierarchical labeling of the family
    double s_avg = 0.0;  // CH search spaces under the min-degree order
    double ratio = 0.0;  // s_avg / sqrt(n)
    bool cover_ok = false;
};

// Star-clique family measurement: label sizes of the shipped labeling vs CH
// search space sizes. Contraction defaults to the min-degree order; pass an
// explicit order to override. k <= 24.
GapRow gap_row(std::uint32_t k, const Order* contraction_order = nullptr);
std::vector<GapRow> gap_experiment(const std::vector<std::uint32_t>& k_values);

}  // namespace cuhl

#endif
