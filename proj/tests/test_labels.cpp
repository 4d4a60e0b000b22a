#include "cuhl/labels.hpp"
#include "doctest.h"
#include "oracle_utils.hpp"

using namespace cuhl;

namespace {

Graph p3() { return Graph(3, {{0, 1}, {1, 2}}); }
Order p3_order() { return Order({0, 2, 1}); }  // a=1, c=2, b=3
Graph four_cycle() { return Graph(4, {{0, 1}, {1, 3}, {2, 3}, {0, 2}}); }

}  // namespace

TEST_CASE("canonical labels of the worked examples") {
    LabelSet p = build_canonical_hcuhl(build_cch(p3(), p3_order()));
    CHECK(p.hubs[0] == std::vector<Vertex>{0, 1});
    CHECK(p.hubs[2] == std::vector<Vertex>{1, 2});
    CHECK(p.hubs[1] == std::vector<Vertex>{1});
    LabelStats ps = label_stats(p);
    CHECK(ps.total == 5);
    CHECK(ps.l_max == 2);

    Graph k3(3, {{0, 1}, {1, 2}, {0, 2}});
    LabelSet k = build_canonical_hcuhl(build_cch(k3, Order::identity(3)));
    CHECK(k.hubs[0] == std::vector<Vertex>{0, 1, 2});
    CHECK(k.hubs[1] == std::vector<Vertex>{1, 2});
    CHECK(k.hubs[2] == std::vector<Vertex>{2});
    CHECK(label_stats(k).total == 6);
    CHECK(label_stats(k).l_max == 3);

    LabelSet c = build_canonical_hcuhl(build_cch(four_cycle(), Order::identity(4)));
    CHECK(c.hubs[0] == std::vector<Vertex>{0, 1, 2, 3});
    CHECK(c.hubs[1] == std::vector<Vertex>{1, 2, 3});
    CHECK(c.hubs[2] == std::vector<Vertex>{2, 3});
    CHECK(c.hubs[3] == std::vector<Vertex>{3});
}

TEST_CASE("brute-force oracle agrees with the CCH construction") {
    LabelSet a = build_canonical_hcuhl(build_cch(p3(), p3_order()));
    LabelSet b = brute_force_canonical_labels(p3(), p3_order());
    CHECK(a.hubs == b.hubs);

    Rng seeds(41);
    for (int i = 0; i < 40; ++i) {
        Vertex n = 2 + static_cast<Vertex>(seeds.bounded(31));
        Graph g = testing::random_connected_graph(seeds, n,
                                                   static_cast<std::uint32_t>(seeds.bounded(2 * n)));
        Order ord = testing::random_order(n, seeds.next());
        CHECK(build_canonical_hcuhl(build_cch(g, ord)).hubs ==
              brute_force_canonical_labels(g, ord).hubs);
    }
}

TEST_CASE("canonical labels match the simple-path definition on tiny graphs") {
    Rng seeds(42);
    for (int i = 0; i < 12; ++i) {
        Vertex n = 2 + static_cast<Vertex>(seeds.bounded(6));
        Graph g = testing::random_connected_graph(seeds, n,
                                                   static_cast<std::uint32_t>(seeds.bounded(n)));
        Order ord = testing::random_order(n, seeds.next());
        CHECK(brute_force_canonical_labels(g, ord).hubs ==
              testing::canonical_labels_by_paths(g, ord).hubs);
    }
}

TEST_CASE("single vertex and star labels") {
    Graph one(1, {});
    CHECK(brute_force_canonical_labels(one, Order::identity(1)).hubs[0] ==
          std::vector<Vertex>{0});
    LabelStats s = label_stats(brute_force_canonical_labels(one, Order::identity(1)));
    CHECK(s.total == 1);
    CHECK(s.l_max == 1);

    // K_{1,3}: center 0 ranked last; each leaf label is {leaf, center}
    Graph star(4, {{0, 1}, {0, 2}, {0, 3}});
    Order ord({1, 2, 3, 0});
    LabelSet l = brute_force_canonical_labels(star, ord);
    for (Vertex leaf = 1; leaf <= 3; ++leaf)
        CHECK(l.hubs[leaf] == std::vector<Vertex>{0, leaf});
}

TEST_CASE("inverse labels transpose the labeling") {
    LabelSet p = build_canonical_hcuhl(build_cch(p3(), p3_order()));
    InverseLabels inv = build_inverse_labels(p);
    CHECK(inv.lists[1] == std::vector<Vertex>{0, 1, 2});
    CHECK(inv.lists[0] == std::vector<Vertex>{0});
    CHECK(inv.lists[2] == std::vector<Vertex>{2});

    Graph k3(3, {{0, 1}, {1, 2}, {0, 2}});
    LabelSet k = build_canonical_hcuhl(build_cch(k3, Order::identity(3)));
    CHECK(build_inverse_labels(k).lists[2] == std::vector<Vertex>{0, 1, 2});

    Rng seeds(43);
    for (int i = 0; i < 10; ++i) {
        Vertex n = 2 + static_cast<Vertex>(seeds.bounded(20));
        Graph g = testing::random_connected_graph(seeds, n,
                                                   static_cast<std::uint32_t>(seeds.bounded(n)));
        LabelSet l = brute_force_canonical_labels(g, testing::random_order(n, seeds.next()));
        InverseLabels iv = build_inverse_labels(l);
        std::uint64_t total_inv = 0;
        for (Vertex v = 0; v < n; ++v) {
            total_inv += iv.lists[v].size();
            CHECK(std::binary_search(iv.lists[v].begin(), iv.lists[v].end(), v));
            for (Vertex z : iv.lists[v]) CHECK(l.contains(z, v));
        }
        CHECK(total_inv == label_stats(l).total);
    }
}

TEST_CASE("customizable cover verification") {
    LabelSet canonical = build_canonical_hcuhl(build_cch(p3(), p3_order()));
    CHECK(verify_customizable_cover(p3(), canonical).pass);

    LabelSet singletons;
    singletons.hubs = {{0}, {1}, {2}};
    CoverReport r = verify_customizable_cover(p3(), singletons);
    CHECK(!r.pass);
    CHECK(r.s == 0);
    CHECK(r.t == 1);

    LabelSet full;
    full.hubs.assign(3, {0, 1, 2});
    CHECK(verify_customizable_cover(p3(), full).pass);
}

TEST_CASE("cover verifier agrees with path enumeration on tiny labelings") {
    Rng seeds(44);
    for (int i = 0; i < 15; ++i) {
        Vertex n = 2 + static_cast<Vertex>(seeds.bounded(5));
        Graph g = testing::random_connected_graph(seeds, n,
                                                   static_cast<std::uint32_t>(seeds.bounded(n)));
        // random sub-labeling of the canonical one, frequently invalid
        LabelSet l = brute_force_canonical_labels(g, testing::random_order(n, seeds.next()));
        for (Vertex v = 0; v < n; ++v) {
            std::vector<Vertex> kept;
            for (Vertex h : l.hubs[v])
                if (h == v || seeds.bounded(3) != 0) kept.push_back(h);
            l.hubs[v] = kept;
        }
        CHECK(verify_customizable_cover(g, l).pass == testing::cover_by_path_enumeration(g, l));
    }
}

TEST_CASE("canonical labels are hierarchical, covering, and minimal") {
    Rng seeds(45);
    for (int i = 0; i < 10; ++i) {
        Vertex n = 3 + static_cast<Vertex>(seeds.bounded(14));
        Graph g = testing::random_connected_graph(seeds, n,
                                                   static_cast<std::uint32_t>(seeds.bounded(n)));
        Order ord = testing::random_order(n, seeds.next());
        LabelSet l = build_canonical_hcuhl(build_cch(g, ord));

        for (Vertex v = 0; v < n; ++v) {
            CHECK(l.contains(v, v));
            for (Vertex h : l.hubs[v]) CHECK(ord.rank(h) >= ord.rank(v));
        }
        CHECK(verify_customizable_cover(g, l).pass);

        // dropping any single non-self hub must break the cover
        for (Vertex v = 0; v < n; ++v) {
            for (Vertex h : l.hubs[v]) {
                if (h == v) continue;
                LabelSet pruned = l;
                auto& hubs = pruned.hubs[v];
                hubs.erase(std::find(hubs.begin(), hubs.end(), h));
                CHECK(!verify_customizable_cover(g, pruned).pass);
            }
        }
    }
}

TEST_CASE("optimal order search on the worked examples") {
    OptimalHcuhl p = optimal_hcuhl_bruteforce(p3());
    CHECK(p.total == 5);
    CHECK(p.order.rank(1) == 2);  // middle vertex on top

    Graph k3(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(optimal_hcuhl_bruteforce(k3).total == 6);
    CHECK(optimal_hcuhl_bruteforce(Graph(1, {})).total == 1);
    CHECK_THROWS_AS(optimal_hcuhl_bruteforce(gen_random(9, 12, 7)), std::invalid_argument);
}

TEST_CASE("total label size shortcut equals materialized stats") {
    Rng seeds(46);
    for (int i = 0; i < 20; ++i) {
        Vertex n = 2 + static_cast<Vertex>(seeds.bounded(24));
        Graph g = testing::random_connected_graph(seeds, n,
                                                   static_cast<std::uint32_t>(seeds.bounded(2 * n)));
        Order ord = testing::random_order(n, seeds.next());
        CHECK(canonical_total_label_size(g, ord) ==
              label_stats(brute_force_canonical_labels(g, ord)).total);
    }
}

TEST_CASE("apex-clique instance: tied shortest paths, covering two-entry labels") {
    ApexCliqueInstance inst = gen_apex_clique(5);
    CHECK(inst.graph.num_vertices() == 6);
    CHECK(inst.graph.num_edges() == 10 + 5);
    CHECK(inst.labels.hubs[0] == std::vector<Vertex>{0, inst.apex()});
    CHECK(inst.labels.hubs[inst.apex()] == std::vector<Vertex>{inst.apex()});
    CHECK(label_stats(inst.labels).avg() < 2.0);
    // direct clique edges tie with the apex detour; not metric-independent
    CHECK(!verify_customizable_cover(inst.graph, inst.labels).pass);
    CHECK_THROWS_AS(gen_apex_clique(0), std::invalid_argument);
}

TEST_CASE("up flags mark exactly the upward supergraph neighbors") {
    Graph g = four_cycle();
    ChordalSupergraph h = build_cch(g, Order::identity(4));
    LabelSet l = build_canonical_hcuhl(h);
    for (Vertex v = 0; v < 4; ++v) {
        for (std::uint32_t i = 0; i < l.hubs[v].size(); ++i) {
            bool is_up = false;
            for (const auto& arc : h.up[v]) is_up |= arc.to == l.hubs[v][i];
            CHECK(static_cast<bool>(l.up_flag[v][i]) == is_up);
        }
    }
}
