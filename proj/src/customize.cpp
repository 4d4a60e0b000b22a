#include "cuhl/customize.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

#include "cuhl/parallel.hpp"
#include "cuhl/query.hpp"

namespace cuhl {

EdgeDistances customize_edges(const ChordalSupergraph& h, const Metric& m) {
    if (m.size() != h.base.num_edges())
        throw std::invalid_argument("metric does not match the base graph");
    EdgeDistances ed;
    ed.value.assign(h.num_sup_edges(), kInfinity);
    for (std::uint32_t e = 0; e < h.num_sup_edges(); ++e) {
        auto [u, v] = h.sup_edges[e];
        if (auto idx = h.base.edge_index(u, v)) ed.value[e] = m.weight(*idx);
    }
    // ascending by rank; both triangle legs lie below v and carry final values
    for (std::uint32_t r = 0; r < h.num_vertices(); ++r) {
        Vertex v = h.order.vertex_at(r);
        for (const auto& arc : h.up[v]) {
            const auto& dv = h.down[v];
            const auto& du = h.down[arc.to];
            std::size_t i = 0, j = 0;
            while (i < dv.size() && j < du.size()) {
                if (dv[i].to < du[j].to) {
                    ++i;
                } else if (dv[i].to > du[j].to) {
                    ++j;
                } else {
                    Weight cand = saturating_add(ed.value[dv[i].edge], ed.value[du[j].edge]);
                    ed.value[arc.edge] = std::min(ed.value[arc.edge], cand);
                    ++i;
                    ++j;
                }
            }
        }
    }
    return ed;
}

namespace {

CustomizedLabels init_entries(const ChordalSupergraph& h, const LabelSet& l,
                              const EdgeDistances& ed) {
    CustomizedLabels c;
    c.labels = l;
    c.dist.assign(l.n(), {});
    for (Vertex v = 0; v < l.n(); ++v) {
        c.dist[v].assign(l.hubs[v].size(), kInfinity);
        if (auto pos = l.position(v, v)) c.dist[v][*pos] = 0;
        for (const auto& arc : h.up[v]) {
            auto pos = l.position(v, arc.to);
            if (!pos) throw std::invalid_argument("labels are missing an upward neighbor");
            c.dist[v][*pos] = ed.value[arc.edge];
        }
    }
    return c;
}

void upward_dijkstra_fill(const ChordalSupergraph& h, const EdgeDistances& ed, Vertex source,
                          std::vector<Weight>& scratch, CustomizedLabels& c) {
    using Item = std::pair<Weight, Vertex>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    std::vector<Vertex> touched;
    scratch[source] = 0;
    touched.push_back(source);
    pq.emplace(0, source);
    while (!pq.empty()) {
        auto [d, v] = pq.top();
        pq.pop();
        if (d > scratch[v]) continue;
        for (const auto& arc : h.up[v]) {
            Weight nd = saturating_add(d, ed.value[arc.edge]);
            if (nd < scratch[arc.to]) {
                if (scratch[arc.to] == kInfinity) touched.push_back(arc.to);
                scratch[arc.to] = nd;
                pq.emplace(nd, arc.to);
            }
        }
    }
    for (std::uint32_t i = 0; i < c.labels.hubs[source].size(); ++i) {
        Weight d = scratch[c.labels.hubs[source][i]];
        c.dist[source][i] = d;
    }
    for (Vertex v : touched) scratch[v] = kInfinity;
}

// Shared core: vertices with rank >= cutoff_rank get upward Dijkstra, the
// rest are filled by the descending-rank hub sweep. Within one hub the
// sweep must visit vertices by descending rank so d_w[u] is final before
// any lower v reads it.
CustomizedLabels run_hierarchical(const ChordalSupergraph& h, const LabelSet& l,
                                  const EdgeDistances& ed, std::uint32_t cutoff_rank,
                                  unsigned threads) {
    Vertex n = h.num_vertices();
    CustomizedLabels c = init_entries(h, l, ed);

    std::vector<Vertex> dijkstra_sources;
    for (std::uint32_t r = cutoff_rank; r < n; ++r) dijkstra_sources.push_back(h.order.vertex_at(r));
    if (!dijkstra_sources.empty()) {
        unsigned workers = std::max(1u, threads);
        std::vector<std::vector<Weight>> scratch(workers,
                                                 std::vector<Weight>(n, kInfinity));
        if (workers == 1) {
            for (Vertex s : dijkstra_sources) upward_dijkstra_fill(h, ed, s, scratch[0], c);
        } else {
            // one scratch buffer per worker thread; sources write disjoint rows
            std::vector<std::thread> pool;
            std::atomic<std::uint32_t> next{0};
            for (unsigned t = 0; t < workers; ++t) {
                pool.emplace_back([&, t] {
                    for (;;) {
                        std::uint32_t i = next.fetch_add(1);
                        if (i >= dijkstra_sources.size()) return;
                        upward_dijkstra_fill(h, ed, dijkstra_sources[i], scratch[t], c);
                    }
                });
            }
            for (auto& th : pool) th.join();
        }
    }

    if (cutoff_rank == 0) return c;

    InverseLabels inv = build_inverse_labels(l);
    auto rank_desc = [&](Vertex a, Vertex b) { return h.order.rank(a) > h.order.rank(b); };
    for (auto& list : inv.lists) std::sort(list.begin(), list.end(), rank_desc);

    for (std::uint32_t r = n; r-- > 0;) {
        Vertex u = h.order.vertex_at(r);
        for (Vertex v : inv.lists[u]) {
            if (v == u || h.order.rank(v) >= cutoff_rank) continue;
            std::uint32_t pos_u = *c.labels.position(v, u);
            Weight best = c.dist[v][pos_u];
            for (const auto& arc : h.up[v]) {
                auto pos_wu = c.labels.position(arc.to, u);
                if (!pos_wu) continue;
                auto pos_w = *c.labels.position(v, arc.to);
                Weight cand = saturating_add(c.dist[v][pos_w], c.dist[arc.to][*pos_wu]);
                best = std::min(best, cand);
            }
            c.dist[v][pos_u] = best;
        }
    }
    return c;
}

}  // namespace

CustomizedLabels customize_upward_dijkstra(const ChordalSupergraph& h, const LabelSet& l,
                                           const EdgeDistances& ed, unsigned threads) {
    return run_hierarchical(h, l, ed, 0, threads);
}

CustomizedLabels customize_top_down(const ChordalSupergraph& h, const LabelSet& l,
                                    const EdgeDistances& ed) {
    return run_hierarchical(h, l, ed, h.num_vertices(), 1);
}

CustomizedLabels customize_hybrid(const ChordalSupergraph& h, const LabelSet& l,
                                  const EdgeDistances& ed, Vertex cutoff, unsigned threads) {
    if (cutoff > h.num_vertices()) cutoff = h.num_vertices();
    return run_hierarchical(h, l, ed, cutoff, threads);
}

EngineComparison compare_customizations(const ChordalSupergraph& h, const LabelSet& l,
                                        const Metric& m) {
    EdgeDistances ed = customize_edges(h, m);
    CustomizedLabels a = customize_upward_dijkstra(h, l, ed);
    CustomizedLabels b = customize_top_down(h, l, ed);
    for (Vertex s = 0; s < h.num_vertices(); ++s) {
        for (Vertex t = s; t < h.num_vertices(); ++t) {
            Weight da = hl_query(a, s, t).distance;
            Weight db = hl_query(b, s, t).distance;
            if (da != db) return {false, s, t, da, db};
        }
    }
    return {};
}

}  // namespace cuhl
