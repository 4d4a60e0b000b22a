#ifndef CUHL_LABELS_HPP
#define CUHL_LABELS_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "cuhl/cch.hpp"
#include "cuhl/graph.hpp"

namespace cuhl {

// Per-vertex hub sets, sorted ascending by vertex id. up_flag marks hubs
// that are also upward supergraph neighbors; it may be empty when unknown
// (oracle-built or hand-written labelings).
struct LabelSet {
    std::vector<std::vector<Vertex>> hubs;
    std::vector<std::vector<std::uint8_t>> up_flag;
    std::optional<Order> order;  // present for hierarchical labelings

    Vertex n() const { return static_cast<Vertex>(hubs.size()); }
    bool contains(Vertex v, Vertex hub) const;
    // position of hub within hubs[v], if present
    std::optional<std::uint32_t> position(Vertex v, Vertex hub) const;
};

struct InverseLabels {
    std::vector<std::vector<Vertex>> lists;  // lists[u] = { z | u in L(z) }, ascending
};

struct LabelStats {
    std::uint64_t total = 0;
    std::uint32_t l_max = 0;
    Vertex n = 0;
    double avg() const { return n == 0 ? 0.0 : static_cast<double>(total) / n; }
};

struct CoverReport {
    bool pass = true;
    Vertex s = 0, t = 0;  // first failing pair (s < t) when !pass
};

// Canonical hierarchical labels from a CCH: L(v) is the set of vertices
// reachable from v along rank-increasing supergraph paths, computed by a
// memoized rank-descending sweep.
LabelSet build_canonical_hcuhl(const ChordalSupergraph& h);

// Independent oracle for the same labels: u in L(v) iff rank(u) >= rank(v)
// and u, v share a component of the subgraph induced by ranks <= rank(u).
LabelSet brute_force_canonical_labels(const Graph& g, const Order& ord);

InverseLabels build_inverse_labels(const LabelSet& l);

LabelStats label_stats(const LabelSet& l);

// Every s-t path must meet L(s) ∩ L(t). Equivalent check per pair: one of
// the endpoints is in the intersection, or removing it disconnects s from t.
CoverReport verify_customizable_cover(const Graph& g, const LabelSet& l);

struct OptimalHcuhl {
    Order order;
    std::uint64_t total = 0;
    double l_avg = 0.0;
};

// Minimum total canonical label size over all n! orders (n <= 8).
OptimalHcuhl optimal_hcuhl_bruteforce(const Graph& g);

// Total canonical label size for one order without materializing labels:
// sum over ranks of the component size of the newly added vertex within the
// rank prefix (incremental union-find).
std::uint64_t canonical_total_label_size(const Graph& g, const Order& ord);

// The star-clique family: k stars of k leaves (edge length 1), centers
// forming a clique (length 5), and an apex joined to every leaf (length 2)
// and every center (length 3). Ships the explicit hierarchical labeling
// L(apex) = {apex}, L(c_i) = {apex} ∪ {c_j | j >= i}, L(leaf of star i) =
// {apex, c_i}, which covers shortest paths for this metric but is not
// metric-independent.
struct StarCliqueInstance {
    Graph graph;
    Metric metric;
    LabelSet labels;
    std::uint32_t k = 0;

    Vertex center(std::uint32_t i) const { return i; }
    Vertex leaf(std::uint32_t star, std::uint32_t j) const { return k + star * k + j; }
    Vertex apex() const { return k + k * k; }
};

StarCliqueInstance gen_star_clique(std::uint32_t k);

// Complete graph on n vertices with all edges of length 2 plus an apex tied
// to every vertex with length 1. Shortest paths tie through the apex, CH
// search spaces stay linear in n, yet the shipped labeling
// L(v) = {v, apex}, L(apex) = {apex} covers all shortest paths.
struct ApexCliqueInstance {
    Graph graph;
    Metric metric;
    LabelSet labels;

    Vertex apex() const { return graph.num_vertices() - 1; }
};

ApexCliqueInstance gen_apex_clique(Vertex n_clique);

}  // namespace cuhl

#endif
