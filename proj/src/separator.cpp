#include "cuhl/separator.hpp"

#include <algorithm>
#include <bit>
#include <queue>
#include <stdexcept>

namespace cuhl {

Alpha Alpha::parse(const std::string& text) {
    auto fail = [&] { throw std::invalid_argument("cannot parse balance ratio '" + text + "'"); };
    Alpha a;
    auto slash = text.find('/');
    if (slash != std::string::npos) {
        try {
            a.num = std::stoul(text.substr(0, slash));
            a.den = std::stoul(text.substr(slash + 1));
        } catch (...) {
            fail();
        }
    } else {
        auto dot = text.find('.');
        try {
            if (dot == std::string::npos) {
                a.num = std::stoul(text);
                a.den = 1;
            } else {
                std::string digits = text.substr(0, dot) + text.substr(dot + 1);
                std::size_t frac = text.size() - dot - 1;
                if (frac > 9) fail();
                a.num = std::stoul(digits);
                a.den = 1;
                for (std::size_t i = 0; i < frac; ++i) a.den *= 10;
            }
        } catch (...) {
            fail();
        }
    }
    if (!a.valid()) throw std::invalid_argument("balance ratio must lie in [1/2, 1)");
    return a;
}

namespace {

void require_alpha(Alpha alpha) {
    if (!alpha.valid()) throw std::invalid_argument("balance ratio must lie in [1/2, 1)");
}

// Size of the largest component of g minus the given vertex set.
Vertex largest_remaining_component(const Graph& g, const std::vector<bool>& removed) {
    Vertex n = g.num_vertices();
    std::vector<bool> seen(n, false);
    std::vector<Vertex> stack;
    Vertex largest = 0;
    for (Vertex s = 0; s < n; ++s) {
        if (removed[s] || seen[s]) continue;
        Vertex size = 0;
        stack.push_back(s);
        seen[s] = true;
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            ++size;
            for (Vertex w : g.neighbors(v))
                if (!removed[w] && !seen[w]) {
                    seen[w] = true;
                    stack.push_back(w);
                }
        }
        largest = std::max(largest, size);
    }
    return largest;
}

Vertex largest_remaining_component(const Graph& g, const std::vector<Vertex>& separator) {
    std::vector<bool> removed(g.num_vertices(), false);
    for (Vertex v : separator) removed[v] = true;
    return largest_remaining_component(g, removed);
}

// --- exact search over vertex subsets (n <= 20, bitmask graph) ---

struct MaskGraph {
    Vertex n;
    std::vector<std::uint32_t> adj;

    explicit MaskGraph(const Graph& g) : n(g.num_vertices()), adj(n, 0) {
        for (auto [u, v] : g.edges()) {
            adj[u] |= 1u << v;
            adj[v] |= 1u << u;
        }
    }

    Vertex largest_component(std::uint32_t remaining) const {
        Vertex largest = 0;
        while (remaining) {
            std::uint32_t comp = remaining & -remaining;
            for (;;) {
                std::uint32_t grown = comp;
                std::uint32_t scan = comp;
                while (scan) {
                    Vertex v = static_cast<Vertex>(std::countr_zero(scan));
                    scan &= scan - 1;
                    grown |= adj[v] & remaining;
                }
                if (grown == comp) break;
                comp = grown;
            }
            largest = std::max(largest, static_cast<Vertex>(std::popcount(comp)));
            remaining &= ~comp;
        }
        return largest;
    }
};

// next mask with the same popcount, ascending numeric order
std::uint32_t gosper_next(std::uint32_t v) {
    std::uint32_t t = v | (v - 1);
    return (t + 1) | (((~t & (t + 1)) - 1) >> (std::countr_zero(v) + 1));
}

struct ExactResult {
    std::uint32_t mask = 0;
    Vertex largest = 0;
    bool found = false;
};

// Smallest balanced subset; within that size the one leaving the smallest
// largest component, earliest in numeric mask order on ties.
ExactResult exact_search(const Graph& g, Alpha alpha) {
    MaskGraph mg(g);
    Vertex n = g.num_vertices();
    std::uint32_t full = n == 32 ? ~0u : (1u << n) - 1;
    for (Vertex size = 0; size <= n; ++size) {
        ExactResult best;
        std::uint32_t mask = size == 0 ? 0 : (1u << size) - 1;
        for (;;) {
            Vertex largest = mg.largest_component(full & ~mask);
            if (alpha.allows(largest, n) && (!best.found || largest < best.largest)) {
                best = {mask, largest, true};
            }
            if (size == 0) break;
            std::uint32_t next = gosper_next(mask);
            if (next > full) break;
            mask = next;
        }
        if (best.found) return best;
    }
    return {};  // unreachable: removing all vertices is always balanced
}

std::vector<Vertex> mask_to_vertices(std::uint32_t mask) {
    std::vector<Vertex> out;
    while (mask) {
        out.push_back(static_cast<Vertex>(std::countr_zero(mask)));
        mask &= mask - 1;
    }
    return out;
}

// --- heuristic: BFS level sets from a pseudo-peripheral vertex ---

std::vector<std::uint32_t> bfs_levels(const Graph& g, Vertex root) {
    std::vector<std::uint32_t> level(g.num_vertices(), ~0u);
    std::queue<Vertex> q;
    level[root] = 0;
    q.push(root);
    while (!q.empty()) {
        Vertex v = q.front();
        q.pop();
        for (Vertex w : g.neighbors(v))
            if (level[w] == ~0u) {
                level[w] = level[v] + 1;
                q.push(w);
            }
    }
    return level;
}

Vertex farthest_vertex(const std::vector<std::uint32_t>& level) {
    Vertex best = 0;
    for (Vertex v = 0; v < level.size(); ++v)
        if (level[v] != ~0u && level[v] > level[best]) best = v;
    return best;
}

SeparatorReport heuristic_separator(const Graph& g, Alpha alpha) {
    Vertex n = g.num_vertices();
    Vertex root = farthest_vertex(bfs_levels(g, 0));
    std::vector<std::uint32_t> level = bfs_levels(g, root);
    std::uint32_t depth = 0;
    for (Vertex v = 0; v < n; ++v) depth = std::max(depth, level[v]);

    std::vector<Vertex> best;
    Vertex best_largest = 0;
    bool found = false;
    for (std::uint32_t l = 0; l <= depth; ++l) {
        std::vector<Vertex> cand;
        for (Vertex v = 0; v < n; ++v)
            if (level[v] == l) cand.push_back(v);
        Vertex largest = largest_remaining_component(g, cand);
        if (!alpha.allows(largest, n)) continue;
        if (!found || cand.size() < best.size() ||
            (cand.size() == best.size() && largest < best_largest)) {
            best = std::move(cand);
            best_largest = largest;
            found = true;
        }
    }
    if (!found) {
        // greedy fallback: peel highest-degree vertices until balanced
        std::vector<Vertex> by_degree(n);
        for (Vertex v = 0; v < n; ++v) by_degree[v] = v;
        std::sort(by_degree.begin(), by_degree.end(), [&](Vertex a, Vertex b) {
            if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
            return a < b;
        });
        std::vector<bool> removed(n, false);
        for (Vertex v : by_degree) {
            removed[v] = true;
            best.push_back(v);
            best_largest = largest_remaining_component(g, removed);
            if (alpha.allows(best_largest, n)) break;
        }
    }

    // local shrinking: drop separator vertices whose removal keeps balance
    std::vector<bool> in_sep(n, false);
    for (Vertex v : best) in_sep[v] = true;
    bool improved = true;
    while (improved) {
        improved = false;
        for (Vertex v = 0; v < n && !improved; ++v) {
            if (!in_sep[v]) continue;
            std::vector<Vertex> trial;
            for (Vertex w = 0; w < n; ++w)
                if (in_sep[w] && w != v) trial.push_back(w);
            if (trial.empty()) continue;
            Vertex largest = largest_remaining_component(g, trial);
            if (alpha.allows(largest, n)) {
                in_sep[v] = false;
                best = std::move(trial);
                best_largest = largest;
                improved = true;
            }
        }
    }
    std::sort(best.begin(), best.end());
    return {std::move(best), alpha, best_largest};
}

}  // namespace

std::optional<std::pair<Vertex, Vertex>> recognize_grid(const Graph& g) {
    Vertex n = g.num_vertices();
    if (n == 0) return std::nullopt;
    for (Vertex p = 1; p <= n; ++p) {
        if (n % p != 0) continue;
        Vertex q = n / p;
        bool ok = true;
        std::vector<Vertex> expect;
        for (Vertex v = 0; v < n && ok; ++v) {
            Vertex r = v / q, c = v % q;
            expect.clear();
            if (r > 0) expect.push_back(v - q);
            if (c > 0) expect.push_back(v - 1);
            if (c + 1 < q) expect.push_back(v + 1);
            if (r + 1 < p) expect.push_back(v + q);
            std::sort(expect.begin(), expect.end());
            ok = expect == g.neighbors(v);
        }
        if (ok) return std::make_pair(p, q);
    }
    return std::nullopt;
}

SeparatorReport find_balanced_separator(const Graph& g, Alpha alpha, SeparatorMode mode) {
    require_alpha(alpha);
    Vertex n = g.num_vertices();
    if (n < 2) throw std::invalid_argument("separator needs at least two vertices");
    if (!g.connected()) throw std::invalid_argument("separator needs a connected graph");

    switch (mode) {
        case SeparatorMode::exact: {
            if (n > 20) throw std::invalid_argument("exact separator limited to n <= 20");
            ExactResult r = exact_search(g, alpha);
            return {mask_to_vertices(r.mask), alpha, r.largest};
        }
        case SeparatorMode::grid_aware: {
            auto dims = recognize_grid(g);
            if (!dims) return heuristic_separator(g, alpha);
            auto [p, q] = *dims;
            std::vector<Vertex> sep;
            if (q >= p) {
                Vertex col = q / 2;
                for (Vertex r = 0; r < p; ++r) sep.push_back(r * q + col);
            } else {
                Vertex row = p / 2;
                for (Vertex c = 0; c < q; ++c) sep.push_back(row * q + c);
            }
            Vertex largest = largest_remaining_component(g, sep);
            return {std::move(sep), alpha, largest};
        }
        case SeparatorMode::heuristic:
            return heuristic_separator(g, alpha);
    }
    throw std::logic_error("unknown separator mode");
}

Vertex exact_b_alpha(const Graph& g, Alpha alpha) {
    require_alpha(alpha);
    if (g.num_vertices() > 20) throw std::invalid_argument("exact separator limited to n <= 20");
    if (g.num_vertices() <= 1) return 0;
    ExactResult r = exact_search(g, alpha);
    return static_cast<Vertex>(std::popcount(r.mask));
}

std::uint32_t SeparatorTree::height() const {
    if (nodes.empty()) return 0;
    std::uint32_t h = 0;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> stack{{root, 1}};
    while (!stack.empty()) {
        auto [id, depth] = stack.back();
        stack.pop_back();
        h = std::max(h, depth);
        for (std::uint32_t c : nodes[id].children) stack.emplace_back(c, depth + 1);
    }
    return h;
}

namespace {

struct Induced {
    Graph graph;
    std::vector<Vertex> to_original;  // local id -> original id, ascending
};

Induced induce(const Graph& g, const std::vector<Vertex>& vertices) {
    std::vector<Vertex> sorted = vertices;
    std::sort(sorted.begin(), sorted.end());
    std::vector<Vertex> local(g.num_vertices(), ~Vertex(0));
    for (Vertex i = 0; i < sorted.size(); ++i) local[sorted[i]] = i;
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex u : sorted)
        for (Vertex w : g.neighbors(u))
            if (u < w && local[w] != ~Vertex(0)) edges.emplace_back(local[u], local[w]);
    return {Graph(static_cast<Vertex>(sorted.size()), std::move(edges)), std::move(sorted)};
}

std::uint32_t decompose(const Graph& g, const std::vector<Vertex>& vertices, Alpha alpha,
                        SeparatorMode mode, SeparatorTree& tree) {
    if (vertices.size() == 1) {
        tree.nodes.push_back({{vertices[0]}, 1, {}});
        return static_cast<std::uint32_t>(tree.nodes.size() - 1);
    }
    Induced sub = induce(g, vertices);
    Vertex n = sub.graph.num_vertices();

    std::vector<std::vector<Vertex>> parts;  // local vertex sets to recurse on
    std::vector<Vertex> separator;           // original ids
    if (!sub.graph.connected()) {
        parts = sub.graph.components();
    } else {
        SeparatorReport rep = find_balanced_separator(sub.graph, alpha, mode);
        if (!alpha.allows(rep.largest_component, n))
            throw std::logic_error("separator routine returned an unbalanced separator");
        for (Vertex v : rep.separator) separator.push_back(sub.to_original[v]);
        std::vector<bool> removed(n, false);
        for (Vertex v : rep.separator) removed[v] = true;
        std::vector<std::pair<Vertex, Vertex>> residual_edges;
        for (auto [u, v] : sub.graph.edges())
            if (!removed[u] && !removed[v]) residual_edges.emplace_back(u, v);
        Graph residual(n, std::move(residual_edges));
        for (auto& comp : residual.components()) {
            comp.erase(std::remove_if(comp.begin(), comp.end(),
                                      [&](Vertex v) { return removed[v]; }),
                       comp.end());
            if (!comp.empty()) parts.push_back(std::move(comp));
        }
    }

    std::uint32_t id = static_cast<std::uint32_t>(tree.nodes.size());
    tree.nodes.push_back({std::move(separator), n, {}});
    for (const auto& part : parts) {
        std::vector<Vertex> originals;
        originals.reserve(part.size());
        for (Vertex v : part) originals.push_back(sub.to_original[v]);
        std::uint32_t child = decompose(g, originals, alpha, mode, tree);
        tree.nodes[id].children.push_back(child);
    }
    return id;
}

}  // namespace

SeparatorTree build_separator_decomposition(const Graph& g, Alpha alpha, SeparatorMode mode) {
    require_alpha(alpha);
    if (g.num_vertices() == 0) throw std::invalid_argument("cannot decompose an empty graph");
    SeparatorTree tree;
    tree.n = g.num_vertices();
    std::vector<Vertex> all(g.num_vertices());
    for (Vertex v = 0; v < g.num_vertices(); ++v) all[v] = v;
    tree.root = decompose(g, all, alpha, mode, tree);
    return tree;
}

Order nested_dissection_order(const SeparatorTree& t, const Graph& g) {
    if (t.n != g.num_vertices())
        throw std::invalid_argument("separator tree does not match graph");
    std::vector<Vertex> by_rank;
    by_rank.reserve(g.num_vertices());
    // explicit post-order walk; children first, then the node's own vertices
    struct Frame {
        std::uint32_t id;
        bool expanded;
    };
    std::vector<Frame> stack{{t.root, false}};
    while (!stack.empty()) {
        Frame f = stack.back();
        stack.pop_back();
        if (f.expanded) {
            std::vector<Vertex> vs = t.nodes[f.id].vertices;
            std::sort(vs.begin(), vs.end(), [&](Vertex a, Vertex b) {
                if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
                return a < b;
            });
            for (Vertex v : vs) by_rank.push_back(v);
        } else {
            stack.push_back({f.id, true});
            const auto& children = t.nodes[f.id].children;
            for (auto it = children.rbegin(); it != children.rend(); ++it)
                stack.push_back({*it, false});
        }
    }
    return Order(std::move(by_rank));
}

}  // namespace cuhl
