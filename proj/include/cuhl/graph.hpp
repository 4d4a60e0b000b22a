#ifndef CUHL_GRAPH_HPP
#define CUHL_GRAPH_HPP

#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <utility>
#include <vector>

namespace cuhl {

using Vertex = std::uint32_t;
using Weight = std::uint64_t;

// Reserved sentinel for "no path"; never a legal edge weight.
inline constexpr Weight kInfinity = std::numeric_limits<Weight>::max();

inline Weight saturating_add(Weight a, Weight b) {
    if (a == kInfinity || b == kInfinity) return kInfinity;
    return a > kInfinity - b ? kInfinity : a + b;
}

// Undirected simple graph. Vertices are 0-based internally (files are
// 1-based), edges stored once as (u,v) with u < v in lexicographic order,
// neighbor lists sorted ascending.
class Graph {
public:
    Graph() = default;
    // Normalizes: orders endpoints, sorts, drops duplicate edges.
    // Throws std::invalid_argument on self-loops or out-of-range endpoints.
    Graph(Vertex n, std::vector<std::pair<Vertex, Vertex>> edge_list);

    Vertex num_vertices() const { return n_; }
    std::uint32_t num_edges() const { return static_cast<std::uint32_t>(edges_.size()); }
    const std::vector<std::pair<Vertex, Vertex>>& edges() const { return edges_; }
    const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
    // Edge ids parallel to neighbors(v).
    const std::vector<std::uint32_t>& incident_edge_ids(Vertex v) const { return adj_edge_[v]; }
    Vertex degree(Vertex v) const { return static_cast<Vertex>(adj_[v].size()); }

    std::optional<std::uint32_t> edge_index(Vertex u, Vertex v) const;
    bool has_edge(Vertex u, Vertex v) const { return edge_index(u, v).has_value(); }
    bool connected() const;

    // Connected components as sorted vertex lists, ordered by smallest member.
    std::vector<std::vector<Vertex>> components() const;

private:
    Vertex n_ = 0;
    std::vector<std::pair<Vertex, Vertex>> edges_;
    std::vector<std::vector<Vertex>> adj_;
    std::vector<std::vector<std::uint32_t>> adj_edge_;
};

// Non-negative integer weight per edge, aligned with Graph::edges().
class Metric {
public:
    Metric() = default;
    Metric(const Graph& g, std::vector<Weight> per_edge);
    static Metric uniform(const Graph& g, Weight w);

    Weight weight(std::uint32_t edge_id) const { return values_[edge_id]; }
    const std::vector<Weight>& values() const { return values_; }
    std::uint32_t size() const { return static_cast<std::uint32_t>(values_.size()); }

private:
    std::vector<Weight> values_;
};

inline Weight edge_weight(const Graph& g, const Metric& m, Vertex u, Vertex v) {
    return m.weight(*g.edge_index(u, v));
}

// Bijection between vertices and ranks 0..n-1 (files print ranks 1-based).
class Order {
public:
    Order() = default;
    // by_rank[r] = vertex holding rank r. Throws if not a permutation.
    explicit Order(std::vector<Vertex> by_rank);
    static Order identity(Vertex n);

    Vertex n() const { return static_cast<Vertex>(by_rank_.size()); }
    std::uint32_t rank(Vertex v) const { return rank_[v]; }
    Vertex vertex_at(std::uint32_t r) const { return by_rank_[r]; }
    const std::vector<Vertex>& by_rank() const { return by_rank_; }

private:
    std::vector<Vertex> by_rank_;
    std::vector<std::uint32_t> rank_;
};

// Deterministic RNG for generators and tests; avoids the
// implementation-defined std::uniform_int_distribution.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}
    std::uint64_t next() { return gen_(); }
    std::uint64_t bounded(std::uint64_t k) { return gen_() % k; }  // k > 0

private:
    std::mt19937_64 gen_;
};

// p x q grid, 4-neighbor adjacency, row-major vertex ids.
Graph gen_grid(Vertex p, Vertex q);

// Weight 3^(rank+1) on each edge, taken at the higher-ranked endpoint
// (ranks 1-based in the exponent). Requires n <= 39 so any simple-path sum
// stays below 2^64; otherwise throws "rank-exponential weights overflow".
Metric gen_weights_exponential(const Graph& g, const Order& ord);

// Seeded connected random graph: random attachment tree plus uniformly
// sampled extra edges. Requires n-1 <= m <= n(n-1)/2.
Graph gen_random(Vertex n, std::uint32_t m, std::uint64_t seed);

// Seeded uniform integer weights in [lo, hi].
Metric gen_random_weights(const Graph& g, Weight lo, Weight hi, std::uint64_t seed);

}  // namespace cuhl

#endif
