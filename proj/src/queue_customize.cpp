#include "cuhl/queue_customize.hpp"

#include <algorithm>
#include <deque>
#include <queue>
#include <stdexcept>

namespace cuhl {

QueueCustomization customize_queue(const Graph& g, const LabelSet& l, const InverseLabels& inv,
                                   const Metric& m, const DequeueObserver& observer) {
    if (l.n() != g.num_vertices()) throw std::invalid_argument("labels do not match graph");
    Vertex n = g.num_vertices();

    QueueCustomization out;
    out.customized.labels = l;
    auto& dist = out.customized.dist;
    dist.assign(n, {});

    // pair (v, hub position); bookkeeping is per entry
    struct PairRef {
        Vertex v;
        std::uint32_t pos;
    };
    std::vector<std::vector<std::uint8_t>> in_queue(n);
    std::vector<std::vector<std::uint32_t>> dequeue_count(n);
    std::vector<std::vector<std::uint32_t>> enqueue_round(n);
    std::deque<PairRef> fifo;

    for (Vertex v = 0; v < n; ++v) {
        dist[v].assign(l.hubs[v].size(), kInfinity);
        in_queue[v].assign(l.hubs[v].size(), 0);
        dequeue_count[v].assign(l.hubs[v].size(), 0);
        enqueue_round[v].assign(l.hubs[v].size(), 0);
        for (std::uint32_t i = 0; i < l.hubs[v].size(); ++i) {
            Vertex hub = l.hubs[v][i];
            if (hub == v)
                dist[v][i] = 0;
            else if (auto e = g.edge_index(v, hub))
                dist[v][i] = m.weight(*e);
        }
    }
    // seed: adjacent labeled pairs, by vertex then hub id
    for (Vertex x = 0; x < n; ++x) {
        for (std::uint32_t i = 0; i < l.hubs[x].size(); ++i) {
            Vertex y = l.hubs[x][i];
            if (y != x && g.has_edge(x, y)) {
                fifo.push_back({x, i});
                in_queue[x][i] = 1;
            }
        }
    }

    std::uint32_t current_round = 0;
    auto relax = [&](Vertex v, std::uint32_t pos, Weight cand) {
        if (cand >= dist[v][pos]) return;  // self-pairs sit at 0 and never pass
        dist[v][pos] = cand;
        if (!in_queue[v][pos]) {
            in_queue[v][pos] = 1;
            enqueue_round[v][pos] = current_round;
            fifo.push_back({v, pos});
        }
    };

    while (!fifo.empty()) {
        auto [x, pos_y] = fifo.front();
        fifo.pop_front();
        in_queue[x][pos_y] = 0;
        Vertex y = l.hubs[x][pos_y];
        Weight val = dist[x][pos_y];
        current_round = enqueue_round[x][pos_y] + 1;
        std::uint32_t k = ++dequeue_count[x][pos_y];
        out.stats.dequeues++;
        out.stats.max_per_pair = std::max(out.stats.max_per_pair, k);
        out.stats.rounds = std::max(out.stats.rounds, current_round);
        if (observer) observer(x, y, val, current_round, k);

        const auto& nx = g.neighbors(x);
        const auto& ex = g.incident_edge_ids(x);
        // (a) y entered L(v) range via the edge v-x
        for (std::size_t i = 0; i < nx.size(); ++i) {
            if (auto pos = l.position(nx[i], y))
                relax(nx[i], *pos, saturating_add(m.weight(ex[i]), val));
        }
        // (b) x reached through the edge v-y
        const auto& ny = g.neighbors(y);
        const auto& ey = g.incident_edge_ids(y);
        for (std::size_t i = 0; i < ny.size(); ++i) {
            if (auto pos = l.position(ny[i], x))
                relax(ny[i], *pos, saturating_add(m.weight(ey[i]), val));
        }
        // (c) y is an interior hub: x plays the near side ...
        for (std::size_t i = 0; i < nx.size(); ++i) {
            Vertex v = nx[i];
            Weight base = saturating_add(m.weight(ex[i]), val);
            for (Vertex u : inv.lists[y]) {
                auto pos_vu = l.position(v, u);
                if (!pos_vu) continue;
                Weight d_uy = dist[u][*l.position(u, y)];
                relax(v, *pos_vu, saturating_add(base, d_uy));
            }
        }
        // ... or the far side, with some w in the inverse label of y near v
        for (Vertex w : inv.lists[y]) {
            Weight d_wy = dist[w][*l.position(w, y)];
            Weight base = saturating_add(val, d_wy);
            const auto& nw = g.neighbors(w);
            const auto& ew = g.incident_edge_ids(w);
            for (std::size_t i = 0; i < nw.size(); ++i) {
                if (auto pos = l.position(nw[i], x))
                    relax(nw[i], *pos, saturating_add(base, m.weight(ew[i])));
            }
        }
    }
    return out;
}

std::uint32_t hop_diameter(const Graph& g, const Metric& m) {
    Vertex n = g.num_vertices();
    std::uint32_t result = 0;
    std::vector<Weight> dist(n);
    std::vector<std::uint32_t> hops(n);
    for (Vertex s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), kInfinity);
        std::fill(hops.begin(), hops.end(), ~0u);
        using Item = std::tuple<Weight, std::uint32_t, Vertex>;
        std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
        dist[s] = 0;
        hops[s] = 0;
        pq.emplace(0, 0, s);
        while (!pq.empty()) {
            auto [d, h, v] = pq.top();
            pq.pop();
            if (d > dist[v] || (d == dist[v] && h > hops[v])) continue;
            const auto& nb = g.neighbors(v);
            const auto& eb = g.incident_edge_ids(v);
            for (std::size_t i = 0; i < nb.size(); ++i) {
                Weight nd = saturating_add(d, m.weight(eb[i]));
                std::uint32_t nh = h + 1;
                if (nd < dist[nb[i]] || (nd == dist[nb[i]] && nh < hops[nb[i]])) {
                    dist[nb[i]] = nd;
                    hops[nb[i]] = nh;
                    pq.emplace(nd, nh, nb[i]);
                }
            }
        }
        for (Vertex v = 0; v < n; ++v)
            if (v != s && dist[v] != kInfinity) result = std::max(result, hops[v]);
    }
    return result;
}

}  // namespace cuhl
