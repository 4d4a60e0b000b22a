#include "cuhl/cch.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace cuhl {

std::uint32_t ChordalSupergraph::sup_edge_index(Vertex u, Vertex v) const {
    if (u > v) std::swap(u, v);
    auto it = std::lower_bound(sup_edges.begin(), sup_edges.end(), std::make_pair(u, v));
    if (it == sup_edges.end() || *it != std::make_pair(u, v))
        throw std::invalid_argument("not a supergraph edge");
    return static_cast<std::uint32_t>(it - sup_edges.begin());
}

bool ChordalSupergraph::has_sup_edge(Vertex u, Vertex v) const {
    if (u > v) std::swap(u, v);
    auto it = std::lower_bound(sup_edges.begin(), sup_edges.end(), std::make_pair(u, v));
    return it != sup_edges.end() && *it == std::make_pair(u, v);
}

ChordalSupergraph build_cch(const Graph& g, const Order& ord) {
    if (ord.n() != g.num_vertices()) throw std::invalid_argument("order does not match graph");
    Vertex n = g.num_vertices();

    // elimination game: process by ascending rank, clique-connect the
    // not-yet-eliminated neighbors of each vertex
    std::vector<std::set<Vertex>> work(n);
    for (auto [u, v] : g.edges()) {
        work[u].insert(v);
        work[v].insert(u);
    }
    std::vector<std::pair<Vertex, Vertex>> sup_edges(g.edges());
    for (std::uint32_t r = 0; r < n; ++r) {
        Vertex v = ord.vertex_at(r);
        std::vector<Vertex> higher;
        for (Vertex w : work[v])
            if (ord.rank(w) > r) higher.push_back(w);
        for (std::size_t i = 0; i < higher.size(); ++i) {
            for (std::size_t j = i + 1; j < higher.size(); ++j) {
                Vertex a = higher[i], b = higher[j];
                if (work[a].insert(b).second) {
                    work[b].insert(a);
                    sup_edges.emplace_back(std::min(a, b), std::max(a, b));
                }
            }
        }
    }
    std::sort(sup_edges.begin(), sup_edges.end());

    ChordalSupergraph h;
    h.base = g;
    h.order = ord;
    h.shortcut_count = static_cast<std::uint32_t>(sup_edges.size() - g.num_edges());
    h.up.assign(n, {});
    h.down.assign(n, {});
    for (std::uint32_t e = 0; e < sup_edges.size(); ++e) {
        auto [u, v] = sup_edges[e];
        bool original = g.has_edge(u, v);
        Vertex lo = ord.rank(u) < ord.rank(v) ? u : v;  // lower-ranked endpoint
        Vertex hi = lo == u ? v : u;
        h.up[lo].push_back({hi, e, original});
        h.down[hi].push_back({lo, e, original});
    }
    h.sup_edges = std::move(sup_edges);
    auto by_id = [](const ChordalSupergraph::Arc& a, const ChordalSupergraph::Arc& b) {
        return a.to < b.to;
    };
    for (Vertex v = 0; v < n; ++v) {
        std::sort(h.up[v].begin(), h.up[v].end(), by_id);
        std::sort(h.down[v].begin(), h.down[v].end(), by_id);
    }
    return h;
}

std::vector<Vertex> lower_triangles(const ChordalSupergraph& h, Vertex v, Vertex u) {
    if (!h.has_sup_edge(v, u)) throw std::invalid_argument("not a supergraph edge");
    if (h.order.rank(v) >= h.order.rank(u))
        throw std::invalid_argument("lower_triangles expects rank(v) < rank(u)");
    std::vector<Vertex> out;
    const auto& dv = h.down[v];
    const auto& du = h.down[u];
    std::size_t i = 0, j = 0;
    while (i < dv.size() && j < du.size()) {
        if (dv[i].to < du[j].to)
            ++i;
        else if (dv[i].to > du[j].to)
            ++j;
        else {
            out.push_back(dv[i].to);
            ++i;
            ++j;
        }
    }
    return out;
}

}  // namespace cuhl
