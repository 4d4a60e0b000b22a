#include "cuhl/labels.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace cuhl {

bool LabelSet::contains(Vertex v, Vertex hub) const {
    return std::binary_search(hubs[v].begin(), hubs[v].end(), hub);
}

std::optional<std::uint32_t> LabelSet::position(Vertex v, Vertex hub) const {
    auto it = std::lower_bound(hubs[v].begin(), hubs[v].end(), hub);
    if (it == hubs[v].end() || *it != hub) return std::nullopt;
    return static_cast<std::uint32_t>(it - hubs[v].begin());
}

LabelSet build_canonical_hcuhl(const ChordalSupergraph& h) {
    Vertex n = h.num_vertices();
    LabelSet l;
    l.hubs.assign(n, {});
    l.up_flag.assign(n, {});
    l.order = h.order;
    // SS(v) = {v} ∪ union of SS(w) over upward neighbors w; sweep ranks
    // descending so every SS(w) is final before use
    for (std::uint32_t r = n; r-- > 0;) {
        Vertex v = h.order.vertex_at(r);
        std::vector<Vertex> acc{v};
        for (const auto& arc : h.up[v]) {
            std::vector<Vertex> merged;
            merged.reserve(acc.size() + l.hubs[arc.to].size());
            std::set_union(acc.begin(), acc.end(), l.hubs[arc.to].begin(),
                           l.hubs[arc.to].end(), std::back_inserter(merged));
            acc = std::move(merged);
        }
        l.hubs[v] = std::move(acc);
    }
    for (Vertex v = 0; v < n; ++v) {
        l.up_flag[v].assign(l.hubs[v].size(), 0);
        for (const auto& arc : h.up[v]) {
            auto pos = l.position(v, arc.to);
            l.up_flag[v][*pos] = 1;
        }
    }
    return l;
}

LabelSet brute_force_canonical_labels(const Graph& g, const Order& ord) {
    if (ord.n() != g.num_vertices()) throw std::invalid_argument("order does not match graph");
    Vertex n = g.num_vertices();
    LabelSet l;
    l.hubs.assign(n, {});
    l.order = ord;

    // grow the rank prefix one vertex at a time; the component of the new
    // vertex u within the prefix is exactly { v | u in L(v) }
    std::vector<Vertex> parent(n);
    std::iota(parent.begin(), parent.end(), Vertex(0));
    auto find = [&](Vertex x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    std::vector<std::vector<Vertex>> members(n);
    std::vector<bool> added(n, false);
    for (Vertex v = 0; v < n; ++v) members[v] = {v};
    for (std::uint32_t r = 0; r < n; ++r) {
        Vertex u = ord.vertex_at(r);
        added[u] = true;
        for (Vertex w : g.neighbors(u)) {
            if (!added[w]) continue;
            Vertex a = find(u), b = find(w);
            if (a == b) continue;
            if (members[a].size() < members[b].size()) std::swap(a, b);
            parent[b] = a;
            members[a].insert(members[a].end(), members[b].begin(), members[b].end());
            members[b].clear();
        }
        for (Vertex v : members[find(u)]) l.hubs[v].push_back(u);
    }
    for (Vertex v = 0; v < n; ++v) std::sort(l.hubs[v].begin(), l.hubs[v].end());
    return l;
}

std::uint64_t canonical_total_label_size(const Graph& g, const Order& ord) {
    Vertex n = g.num_vertices();
    std::vector<Vertex> parent(n);
    std::iota(parent.begin(), parent.end(), Vertex(0));
    std::vector<Vertex> size(n, 1);
    std::vector<bool> added(n, false);
    auto find = [&](Vertex x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    std::uint64_t total = 0;
    for (std::uint32_t r = 0; r < n; ++r) {
        Vertex u = ord.vertex_at(r);
        added[u] = true;
        for (Vertex w : g.neighbors(u)) {
            if (!added[w]) continue;
            Vertex a = find(u), b = find(w);
            if (a == b) continue;
            if (size[a] < size[b]) std::swap(a, b);
            parent[b] = a;
            size[a] += size[b];
        }
        total += size[find(u)];
    }
    return total;
}

InverseLabels build_inverse_labels(const LabelSet& l) {
    InverseLabels inv;
    inv.lists.assign(l.n(), {});
    for (Vertex v = 0; v < l.n(); ++v)
        for (Vertex hub : l.hubs[v]) inv.lists[hub].push_back(v);
    for (auto& list : inv.lists) std::sort(list.begin(), list.end());
    return inv;
}

LabelStats label_stats(const LabelSet& l) {
    LabelStats s;
    s.n = l.n();
    for (const auto& hubs : l.hubs) {
        s.total += hubs.size();
        s.l_max = std::max<std::uint32_t>(s.l_max, static_cast<std::uint32_t>(hubs.size()));
    }
    return s;
}

namespace {

std::vector<Vertex> hub_intersection(const LabelSet& l, Vertex s, Vertex t) {
    std::vector<Vertex> out;
    std::set_intersection(l.hubs[s].begin(), l.hubs[s].end(), l.hubs[t].begin(),
                          l.hubs[t].end(), std::back_inserter(out));
    return out;
}

bool connected_avoiding(const Graph& g, Vertex s, Vertex t, const std::vector<Vertex>& blocked) {
    std::vector<bool> block(g.num_vertices(), false);
    for (Vertex v : blocked) block[v] = true;
    if (block[s] || block[t]) return false;  // callers handle endpoint hits separately
    std::vector<bool> seen(g.num_vertices(), false);
    std::vector<Vertex> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        if (v == t) return true;
        for (Vertex w : g.neighbors(v))
            if (!seen[w] && !block[w]) {
                seen[w] = true;
                stack.push_back(w);
            }
    }
    return false;
}

}  // namespace

CoverReport verify_customizable_cover(const Graph& g, const LabelSet& l) {
    if (l.n() != g.num_vertices()) throw std::invalid_argument("labels do not match graph");
    for (Vertex s = 0; s < g.num_vertices(); ++s) {
        for (Vertex t = s + 1; t < g.num_vertices(); ++t) {
            std::vector<Vertex> common = hub_intersection(l, s, t);
            if (std::binary_search(common.begin(), common.end(), s) ||
                std::binary_search(common.begin(), common.end(), t))
                continue;
            if (connected_avoiding(g, s, t, common)) return {false, s, t};
        }
    }
    return {};
}

OptimalHcuhl optimal_hcuhl_bruteforce(const Graph& g) {
    Vertex n = g.num_vertices();
    if (n > 8) throw std::invalid_argument("order enumeration limited to n <= 8");
    if (n == 0) throw std::invalid_argument("empty graph");
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), Vertex(0));
    std::vector<Vertex> best_perm = perm;
    std::uint64_t best_total = canonical_total_label_size(g, Order(perm));
    while (std::next_permutation(perm.begin(), perm.end())) {
        std::uint64_t total = canonical_total_label_size(g, Order(perm));
        if (total < best_total) {
            best_total = total;
            best_perm = perm;
        }
    }
    return {Order(best_perm), best_total, static_cast<double>(best_total) / n};
}

StarCliqueInstance gen_star_clique(std::uint32_t k) {
    if (k < 1) throw std::invalid_argument("star-clique needs k >= 1");
    StarCliqueInstance inst;
    inst.k = k;
    Vertex n = 1 + k + k * k;
    std::vector<std::pair<Vertex, Vertex>> edges;
    std::vector<Weight> weights;
    auto add = [&](Vertex u, Vertex v, Weight w) {
        if (u > v) std::swap(u, v);
        edges.emplace_back(u, v);
        weights.push_back(w);
    };
    for (std::uint32_t i = 0; i < k; ++i)
        for (std::uint32_t j = 0; j < k; ++j) add(inst.center(i), inst.leaf(i, j), 1);
    for (std::uint32_t i = 0; i < k; ++i)
        for (std::uint32_t j = i + 1; j < k; ++j) add(inst.center(i), inst.center(j), 5);
    for (std::uint32_t i = 0; i < k; ++i)
        for (std::uint32_t j = 0; j < k; ++j) add(inst.apex(), inst.leaf(i, j), 2);
    for (std::uint32_t i = 0; i < k; ++i) add(inst.apex(), inst.center(i), 3);

    // edge list construction keeps (u,v) pairs unique, so sorting pairs and
    // weights together matches Graph's normalized edge order
    std::vector<std::uint32_t> idx(edges.size());
    std::iota(idx.begin(), idx.end(), 0u);
    std::sort(idx.begin(), idx.end(),
              [&](std::uint32_t a, std::uint32_t b) { return edges[a] < edges[b]; });
    std::vector<std::pair<Vertex, Vertex>> sorted_edges(edges.size());
    std::vector<Weight> sorted_weights(edges.size());
    for (std::uint32_t i = 0; i < idx.size(); ++i) {
        sorted_edges[i] = edges[idx[i]];
        sorted_weights[i] = weights[idx[i]];
    }
    inst.graph = Graph(n, std::move(sorted_edges));
    inst.metric = Metric(inst.graph, std::move(sorted_weights));

    inst.labels.hubs.assign(n, {});
    inst.labels.hubs[inst.apex()] = {inst.apex()};
    for (std::uint32_t i = 0; i < k; ++i) {
        std::vector<Vertex>& hubs = inst.labels.hubs[inst.center(i)];
        for (std::uint32_t j = i; j < k; ++j) hubs.push_back(inst.center(j));
        hubs.push_back(inst.apex());
        for (std::uint32_t j = 0; j < k; ++j)
            inst.labels.hubs[inst.leaf(i, j)] = {inst.center(i), inst.apex()};
    }
    // ranks: leaves by id, then centers c_0..c_{k-1}, then the apex
    std::vector<Vertex> by_rank;
    for (std::uint32_t i = 0; i < k; ++i)
        for (std::uint32_t j = 0; j < k; ++j) by_rank.push_back(inst.leaf(i, j));
    for (std::uint32_t i = 0; i < k; ++i) by_rank.push_back(inst.center(i));
    by_rank.push_back(inst.apex());
    inst.labels.order = Order(std::move(by_rank));
    return inst;
}

ApexCliqueInstance gen_apex_clique(Vertex n_clique) {
    if (n_clique < 1) throw std::invalid_argument("apex-clique needs n >= 1");
    ApexCliqueInstance inst;
    Vertex n = n_clique + 1;
    Vertex apex = n - 1;
    std::vector<std::pair<Vertex, Vertex>> edges;
    std::vector<Weight> weights;
    for (Vertex u = 0; u < n_clique; ++u) {
        for (Vertex v = u + 1; v < n_clique; ++v) {
            edges.emplace_back(u, v);
            weights.push_back(2);
        }
        edges.emplace_back(u, apex);
        weights.push_back(1);
    }
    inst.graph = Graph(n, std::move(edges));
    inst.metric = Metric(inst.graph, std::move(weights));
    inst.labels.hubs.assign(n, {});
    for (Vertex v = 0; v < n_clique; ++v) inst.labels.hubs[v] = {v, apex};
    inst.labels.hubs[apex] = {apex};
    inst.labels.order = Order::identity(n);  // apex already has the top id
    return inst;
}

}  // namespace cuhl
