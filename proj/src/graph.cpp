#include "cuhl/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace cuhl {

Graph::Graph(Vertex n, std::vector<std::pair<Vertex, Vertex>> edge_list) : n_(n) {
    for (auto& [u, v] : edge_list) {
        if (u >= n || v >= n)
            throw std::invalid_argument("edge endpoint out of range: " + std::to_string(u) +
                                        "-" + std::to_string(v));
        if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
    }
    std::sort(edge_list.begin(), edge_list.end());
    edge_list.erase(std::unique(edge_list.begin(), edge_list.end()), edge_list.end());
    edges_ = std::move(edge_list);

    adj_.assign(n_, {});
    adj_edge_.assign(n_, {});
    for (std::uint32_t e = 0; e < edges_.size(); ++e) {
        auto [u, v] = edges_[e];
        adj_[u].push_back(v);
        adj_edge_[u].push_back(e);
        adj_[v].push_back(u);
        adj_edge_[v].push_back(e);
    }
    for (Vertex v = 0; v < n_; ++v) {
        // neighbors arrive ascending for the lower endpoint only; sort both lists together
        std::vector<std::uint32_t> idx(adj_[v].size());
        for (std::uint32_t i = 0; i < idx.size(); ++i) idx[i] = i;
        std::sort(idx.begin(), idx.end(),
                  [&](std::uint32_t a, std::uint32_t b) { return adj_[v][a] < adj_[v][b]; });
        std::vector<Vertex> nb(adj_[v].size());
        std::vector<std::uint32_t> ne(adj_[v].size());
        for (std::uint32_t i = 0; i < idx.size(); ++i) {
            nb[i] = adj_[v][idx[i]];
            ne[i] = adj_edge_[v][idx[i]];
        }
        adj_[v] = std::move(nb);
        adj_edge_[v] = std::move(ne);
    }
}

std::optional<std::uint32_t> Graph::edge_index(Vertex u, Vertex v) const {
    if (u > v) std::swap(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), std::make_pair(u, v));
    if (it == edges_.end() || *it != std::make_pair(u, v)) return std::nullopt;
    return static_cast<std::uint32_t>(it - edges_.begin());
}

bool Graph::connected() const {
    if (n_ <= 1) return true;
    return components().size() == 1;
}

std::vector<std::vector<Vertex>> Graph::components() const {
    std::vector<std::vector<Vertex>> result;
    std::vector<bool> seen(n_, false);
    std::vector<Vertex> stack;
    for (Vertex s = 0; s < n_; ++s) {
        if (seen[s]) continue;
        std::vector<Vertex> comp;
        stack.push_back(s);
        seen[s] = true;
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (Vertex w : adj_[v]) {
                if (!seen[w]) {
                    seen[w] = true;
                    stack.push_back(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        result.push_back(std::move(comp));
    }
    return result;
}

Metric::Metric(const Graph& g, std::vector<Weight> per_edge) : values_(std::move(per_edge)) {
    if (values_.size() != g.num_edges())
        throw std::invalid_argument("metric size does not match edge count");
    for (Weight w : values_)
        if (w == kInfinity) throw std::invalid_argument("infinity is not a legal edge weight");
}

Metric Metric::uniform(const Graph& g, Weight w) {
    return Metric(g, std::vector<Weight>(g.num_edges(), w));
}

Order::Order(std::vector<Vertex> by_rank) : by_rank_(std::move(by_rank)) {
    rank_.assign(by_rank_.size(), 0);
    std::vector<bool> seen(by_rank_.size(), false);
    for (std::uint32_t r = 0; r < by_rank_.size(); ++r) {
        Vertex v = by_rank_[r];
        if (v >= by_rank_.size() || seen[v])
            throw std::invalid_argument("order is not a permutation");
        seen[v] = true;
        rank_[v] = r;
    }
}

Order Order::identity(Vertex n) {
    std::vector<Vertex> by_rank(n);
    for (Vertex v = 0; v < n; ++v) by_rank[v] = v;
    return Order(std::move(by_rank));
}

Graph gen_grid(Vertex p, Vertex q) {
    if (p == 0 || q == 0) throw std::invalid_argument("grid dimensions must be positive");
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex r = 0; r < p; ++r) {
        for (Vertex c = 0; c < q; ++c) {
            Vertex v = r * q + c;
            if (c + 1 < q) edges.emplace_back(v, v + 1);
            if (r + 1 < p) edges.emplace_back(v, v + q);
        }
    }
    return Graph(p * q, std::move(edges));
}

Metric gen_weights_exponential(const Graph& g, const Order& ord) {
    if (g.num_vertices() > 39)
        throw std::invalid_argument("rank-exponential weights overflow");
    std::vector<Weight> pow3(g.num_vertices() + 1, 1);
    for (std::uint32_t i = 1; i < pow3.size(); ++i) pow3[i] = pow3[i - 1] * 3;
    std::vector<Weight> w(g.num_edges());
    for (std::uint32_t e = 0; e < g.num_edges(); ++e) {
        auto [u, v] = g.edges()[e];
        w[e] = pow3[std::max(ord.rank(u), ord.rank(v)) + 1];
    }
    return Metric(g, std::move(w));
}

Graph gen_random(Vertex n, std::uint32_t m, std::uint64_t seed) {
    if (n == 0) throw std::invalid_argument("random graph needs n >= 1");
    std::uint64_t max_edges = static_cast<std::uint64_t>(n) * (n - 1) / 2;
    if (m + 1 < n || m > max_edges)
        throw std::invalid_argument("random graph needs n-1 <= m <= n(n-1)/2");
    Rng rng(seed);
    std::vector<std::pair<Vertex, Vertex>> edges;
    std::vector<std::vector<bool>> present(n, std::vector<bool>(n, false));
    auto add = [&](Vertex u, Vertex v) {
        if (u > v) std::swap(u, v);
        if (present[u][v]) return false;
        present[u][v] = true;
        edges.emplace_back(u, v);
        return true;
    };
    for (Vertex v = 1; v < n; ++v) add(static_cast<Vertex>(rng.bounded(v)), v);
    while (edges.size() < m) {
        Vertex u = static_cast<Vertex>(rng.bounded(n));
        Vertex v = static_cast<Vertex>(rng.bounded(n));
        if (u != v) add(u, v);
    }
    return Graph(n, std::move(edges));
}

Metric gen_random_weights(const Graph& g, Weight lo, Weight hi, std::uint64_t seed) {
    if (lo > hi || hi == kInfinity) throw std::invalid_argument("bad weight range");
    Rng rng(seed);
    std::vector<Weight> w(g.num_edges());
    for (auto& x : w) x = lo + rng.bounded(hi - lo + 1);
    return Metric(g, std::move(w));
}

}  // namespace cuhl
