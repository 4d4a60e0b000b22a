#ifndef CUHL_CCH_HPP
#define CUHL_CCH_HPP

#include <cstdint>
#include <vector>

#include "cuhl/graph.hpp"

namespace cuhl {

// Metric-independent supergraph: the input edges plus every shortcut {v,w}
// for which some simple v-w-path runs entirely through vertices ranked below
// both endpoints. Built by the elimination game.
struct ChordalSupergraph {
    struct Arc {
        Vertex to;
        std::uint32_t edge;  // supergraph edge id
        bool original;
    };

    Graph base;
    Order order;
    std::vector<std::pair<Vertex, Vertex>> sup_edges;  // u < v, sorted; ids index this
    std::vector<std::vector<Arc>> up;    // higher-ranked neighbors, sorted by vertex id
    std::vector<std::vector<Arc>> down;  // lower-ranked neighbors, sorted by vertex id
    std::uint32_t shortcut_count = 0;

    Vertex num_vertices() const { return base.num_vertices(); }
    std::uint32_t num_sup_edges() const { return static_cast<std::uint32_t>(sup_edges.size()); }
    // id of supergraph edge {u,v}, or throws if absent
    std::uint32_t sup_edge_index(Vertex u, Vertex v) const;
    bool has_sup_edge(Vertex u, Vertex v) const;
};

ChordalSupergraph build_cch(const Graph& g, const Order& ord);

// All w adjacent (in the supergraph) to both endpoints of the upward edge
// {v,u} with rank below both, i.e. the lower triangles (v,w,u). Sorted by id.
// Requires {v,u} in the supergraph with rank(v) < rank(u).
std::vector<Vertex> lower_triangles(const ChordalSupergraph& h, Vertex v, Vertex u);

}  // namespace cuhl

#endif
