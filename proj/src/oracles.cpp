#include "cuhl/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>

namespace cuhl {

std::vector<Weight> dijkstra(const Graph& g, const Metric& m, Vertex s) {
    Vertex n = g.num_vertices();
    std::vector<Weight> dist(n, kInfinity);
    using Item = std::pair<Weight, Vertex>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    dist[s] = 0;
    pq.emplace(0, s);
    while (!pq.empty()) {
        auto [d, v] = pq.top();
        pq.pop();
        if (d > dist[v]) continue;
        const auto& nb = g.neighbors(v);
        const auto& eb = g.incident_edge_ids(v);
        for (std::size_t i = 0; i < nb.size(); ++i) {
            Weight nd = saturating_add(d, m.weight(eb[i]));
            if (nd < dist[nb[i]]) {
                dist[nb[i]] = nd;
                pq.emplace(nd, nb[i]);
            }
        }
    }
    return dist;
}

namespace {

void require_positive(const Metric& m) {
    for (Weight w : m.values())
        if (w == 0) throw std::invalid_argument("weighted CH needs strictly positive weights");
}

// shortest v-w distance among "remaining" vertices, never through x,
// aborting once the bound is beaten
Weight witness_distance(const std::vector<std::map<Vertex, Weight>>& adj,
                        const std::vector<bool>& contracted, Vertex v, Vertex w, Vertex x,
                        Weight bound) {
    std::map<Vertex, Weight> dist;
    using Item = std::pair<Weight, Vertex>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    dist[v] = 0;
    pq.emplace(0, v);
    while (!pq.empty()) {
        auto [d, a] = pq.top();
        pq.pop();
        if (d > bound) break;
        auto it = dist.find(a);
        if (it != dist.end() && d > it->second) continue;
        if (a == w) return d;
        for (auto [b, len] : adj[a]) {
            if (b == x || contracted[b]) continue;
            Weight nd = saturating_add(d, len);
            auto jt = dist.find(b);
            if (jt == dist.end() || nd < jt->second) {
                dist[b] = nd;
                pq.emplace(nd, b);
            }
        }
    }
    auto it = dist.find(w);
    return it == dist.end() ? kInfinity : it->second;
}

}  // namespace

CHGraph build_weighted_ch(const Graph& g, const Metric& m, const Order& ord) {
    if (ord.n() != g.num_vertices()) throw std::invalid_argument("order does not match graph");
    require_positive(m);
    Vertex n = g.num_vertices();

    // evolving overlay among not-yet-contracted vertices
    std::vector<std::map<Vertex, Weight>> adj(n);
    for (std::uint32_t e = 0; e < g.num_edges(); ++e) {
        auto [u, v] = g.edges()[e];
        adj[u][v] = m.weight(e);
        adj[v][u] = m.weight(e);
    }
    std::map<std::pair<Vertex, Vertex>, Weight> final_edges;
    for (std::uint32_t e = 0; e < g.num_edges(); ++e)
        final_edges[g.edges()[e]] = m.weight(e);

    std::vector<bool> contracted(n, false);
    std::uint32_t shortcut_count = 0;
    for (std::uint32_t r = 0; r < n; ++r) {
        Vertex x = ord.vertex_at(r);
        contracted[x] = true;
        std::vector<std::pair<Vertex, Weight>> nbrs(adj[x].begin(), adj[x].end());
        for (std::size_t i = 0; i < nbrs.size(); ++i) {
            for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
                auto [v, wv] = nbrs[i];
                auto [w, ww] = nbrs[j];
                if (contracted[v] || contracted[w]) continue;
                Weight via_x = saturating_add(wv, ww);
                if (witness_distance(adj, contracted, v, w, x, via_x) <= via_x) continue;
                adj[v][w] = via_x;  // no better witness: keep the shortcut
                adj[w][v] = via_x;
                auto key = std::make_pair(std::min(v, w), std::max(v, w));
                auto it = final_edges.find(key);
                if (it == final_edges.end()) {
                    final_edges[key] = via_x;
                    ++shortcut_count;
                } else {
                    it->second = std::min(it->second, via_x);
                }
            }
        }
        for (auto [v, wv] : nbrs) adj[v].erase(x);
    }

    CHGraph ch;
    ch.base = g;
    ch.order = ord;
    ch.shortcut_count = shortcut_count;
    ch.up.assign(n, {});
    for (auto& [key, w] : final_edges) {
        auto [u, v] = key;
        Vertex lo = ord.rank(u) < ord.rank(v) ? u : v;
        Vertex hi = lo == u ? v : u;
        ch.up[lo].emplace_back(hi, w);
    }
    for (auto& arcs : ch.up) std::sort(arcs.begin(), arcs.end());
    return ch;
}

SearchSpaces ch_search_spaces(const CHGraph& ch) {
    Vertex n = ch.num_vertices();
    SearchSpaces out;
    out.sets.assign(n, {});
    // rank-descending sweep, same memoized union as the label construction
    for (std::uint32_t r = n; r-- > 0;) {
        Vertex v = ch.order.vertex_at(r);
        std::vector<Vertex> acc{v};
        for (auto [to, w] : ch.up[v]) {
            std::vector<Vertex> merged;
            std::set_union(acc.begin(), acc.end(), out.sets[to].begin(), out.sets[to].end(),
                           std::back_inserter(merged));
            acc = std::move(merged);
        }
        out.sets[v] = std::move(acc);
    }
    for (const auto& s : out.sets) {
        out.total += s.size();
        out.s_max = std::max<std::uint32_t>(out.s_max, static_cast<std::uint32_t>(s.size()));
    }
    return out;
}

LabelSet canonical_hhl(const Graph& g, const Metric& m, const Order& ord) {
    if (ord.n() != g.num_vertices()) throw std::invalid_argument("order does not match graph");
    require_positive(m);
    Vertex n = g.num_vertices();
    std::vector<std::vector<Weight>> true_dist(n);
    for (Vertex v = 0; v < n; ++v) true_dist[v] = dijkstra(g, m, v);

    LabelSet l;
    l.hubs.assign(n, {});
    l.order = ord;
    std::vector<Weight> dist(n);
    for (Vertex u = 0; u < n; ++u) {
        // Dijkstra from u inside the subgraph of ranks <= rank(u)
        std::uint32_t limit = ord.rank(u);
        std::fill(dist.begin(), dist.end(), kInfinity);
        using Item = std::pair<Weight, Vertex>;
        std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
        dist[u] = 0;
        pq.emplace(0, u);
        while (!pq.empty()) {
            auto [d, v] = pq.top();
            pq.pop();
            if (d > dist[v]) continue;
            const auto& nb = g.neighbors(v);
            const auto& eb = g.incident_edge_ids(v);
            for (std::size_t i = 0; i < nb.size(); ++i) {
                if (ord.rank(nb[i]) > limit) continue;
                Weight nd = saturating_add(d, m.weight(eb[i]));
                if (nd < dist[nb[i]]) {
                    dist[nb[i]] = nd;
                    pq.emplace(nd, nb[i]);
                }
            }
        }
        for (Vertex v = 0; v < n; ++v)
            if (dist[v] != kInfinity && dist[v] == true_dist[u][v]) l.hubs[v].push_back(u);
    }
    return l;
}

Order min_degree_order(const Graph& g) {
    Vertex n = g.num_vertices();
    std::vector<std::set<Vertex>> work(n);
    for (auto [u, v] : g.edges()) {
        work[u].insert(v);
        work[v].insert(u);
    }
    std::vector<bool> done(n, false);
    std::vector<Vertex> by_rank;
    by_rank.reserve(n);
    for (Vertex step = 0; step < n; ++step) {
        Vertex best = n;
        for (Vertex v = 0; v < n; ++v) {
            if (done[v]) continue;
            if (best == n || work[v].size() < work[best].size()) best = v;
        }
        done[best] = true;
        by_rank.push_back(best);
        std::vector<Vertex> nbrs(work[best].begin(), work[best].end());
        for (Vertex w : nbrs) work[w].erase(best);
        for (std::size_t i = 0; i < nbrs.size(); ++i)
            for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
                work[nbrs[i]].insert(nbrs[j]);
                work[nbrs[j]].insert(nbrs[i]);
            }
    }
    return Order(std::move(by_rank));
}

MetricCoverReport verify_metric_cover(const Graph& g, const Metric& m, const LabelSet& l) {
    if (l.n() != g.num_vertices()) throw std::invalid_argument("labels do not match graph");
    Vertex n = g.num_vertices();
    std::vector<std::vector<Weight>> dist(n);
    for (Vertex v = 0; v < n; ++v) dist[v] = dijkstra(g, m, v);
    for (Vertex s = 0; s < n; ++s) {
        for (Vertex t = s + 1; t < n; ++t) {
            if (dist[s][t] == kInfinity) continue;
            bool covered = false;
            const auto& hs = l.hubs[s];
            const auto& ht = l.hubs[t];
            std::size_t i = 0, j = 0;
            while (i < hs.size() && j < ht.size() && !covered) {
                if (hs[i] < ht[j])
                    ++i;
                else if (hs[i] > ht[j])
                    ++j;
                else {
                    Vertex h = hs[i];
                    covered = saturating_add(dist[s][h], dist[t][h]) == dist[s][t];
                    ++i;
                    ++j;
                }
            }
            if (!covered) return {false, s, t};
        }
    }
    return {};
}

GapRow gap_row(std::uint32_t k, const Order* contraction_order) {
    if (k < 1 || k > 24) throw std::invalid_argument("gap experiment supports 1 <= k <= 24");
    StarCliqueInstance inst = gen_star_clique(k);
    GapRow row;
    row.k = k;
    row.n = inst.graph.num_vertices();
    row.l_avg = label_stats(inst.labels).avg();
    row.cover_ok = verify_metric_cover(inst.graph, inst.metric, inst.labels).pass;
    Order order = contraction_order ? *contraction_order : min_degree_order(inst.graph);
    CHGraph ch = build_weighted_ch(inst.graph, inst.metric, order);
    row.s_avg = ch_search_spaces(ch).avg();
    row.ratio = row.s_avg / std::sqrt(static_cast<double>(row.n));
    return row;
}

std::vector<GapRow> gap_experiment(const std::vector<std::uint32_t>& k_values) {
    std::vector<GapRow> rows;
    for (std::uint32_t k : k_values) rows.push_back(gap_row(k));
    return rows;
}

}  // namespace cuhl
