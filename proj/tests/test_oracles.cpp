#include <cmath>

#include "cuhl/oracles.hpp"
#include "doctest.h"
#include "oracle_utils.hpp"

using namespace cuhl;

namespace {

struct FourCycle {
    Graph g{4, {{0, 1}, {1, 3}, {2, 3}, {0, 2}}};
    Metric m;
    FourCycle() {
        std::vector<Weight> w(4);
        w[*g.edge_index(0, 1)] = 1;
        w[*g.edge_index(0, 2)] = 10;
        w[*g.edge_index(1, 3)] = 1;
        w[*g.edge_index(2, 3)] = 1;
        m = Metric(g, std::move(w));
    }
};

}  // namespace

TEST_CASE("dijkstra reference values") {
    FourCycle fc;
    CHECK(dijkstra(fc.g, fc.m, 0) == std::vector<Weight>{0, 1, 3, 2});

    Graph one(1, {});
    CHECK(dijkstra(one, Metric::uniform(one, 1), 0) == std::vector<Weight>{0});

    Graph p3(3, {{0, 1}, {1, 2}});
    CHECK(dijkstra(p3, Metric::uniform(p3, 1), 0) == std::vector<Weight>{0, 1, 2});
}

TEST_CASE("dijkstra agrees with Floyd-Warshall") {
    Rng seeds(81);
    for (int i = 0; i < 15; ++i) {
        Vertex n = 2 + static_cast<Vertex>(seeds.bounded(40));
        Graph g = testing::random_connected_graph(seeds, n,
                                                  static_cast<std::uint32_t>(seeds.bounded(n)));
        Metric m = gen_random_weights(g, 1, 100, seeds.next());
        auto fw = testing::floyd_warshall(g, m);
        for (Vertex s = 0; s < n; ++s) CHECK(dijkstra(g, m, s) == fw[s]);
    }
}

TEST_CASE("weighted CH on the 4-cycle adds no shortcut (witness wins)") {
    FourCycle fc;
    CHGraph ch = build_weighted_ch(fc.g, fc.m, Order::identity(4));
    CHECK(ch.shortcut_count == 0);
}

TEST_CASE("weighted CH rejects non-positive weights") {
    Graph p3(3, {{0, 1}, {1, 2}});
    CHECK_THROWS_AS(build_weighted_ch(p3, Metric(p3, {0, 1}), Order::identity(3)),
                    std::invalid_argument);
}

TEST_CASE("P3 with the middle on top has no CH shortcuts") {
    Graph p3(3, {{0, 1}, {1, 2}});
    Metric m(p3, {4, 11});
    CHGraph ch = build_weighted_ch(p3, m, Order({0, 2, 1}));
    CHECK(ch.shortcut_count == 0);
}

TEST_CASE("contracting a star center first shortcuts its co-star leaves") {
    StarCliqueInstance inst = gen_star_clique(2);
    // apex and centers below the leaves: leaf-leaf paths through a center
    // lose their witness once the center is contracted
    std::vector<Vertex> by_rank{inst.apex(), inst.center(0), inst.center(1)};
    for (std::uint32_t i = 0; i < 2; ++i)
        for (std::uint32_t j = 0; j < 2; ++j) by_rank.push_back(inst.leaf(i, j));
    CHGraph ch = build_weighted_ch(inst.graph, inst.metric, Order(by_rank));
    bool found = false;
    for (auto [to, w] : ch.up[std::min(inst.leaf(0, 0), inst.leaf(0, 1))])
        if (to == std::max(inst.leaf(0, 0), inst.leaf(0, 1))) {
            found = true;
            CHECK(w == 2);
        }
    CHECK(found);
    CHECK(ch.shortcut_count > 0);

    // with the construction order (leaves lowest) the direct apex edges are
    // equal-weight witnesses, so nothing is added
    CHGraph none = build_weighted_ch(inst.graph, inst.metric, *inst.labels.order);
    CHECK(none.shortcut_count == 0);
}

TEST_CASE("CH search spaces of P3") {
    Graph p3(3, {{0, 1}, {1, 2}});
    Metric m(p3, {1, 1});
    CHGraph ch = build_weighted_ch(p3, m, Order({0, 2, 1}));
    SearchSpaces ss = ch_search_spaces(ch);
    CHECK(ss.sets[0].size() == 2);
    CHECK(ss.sets[1].size() == 1);  // top vertex: itself only
    CHECK(ss.sets[2].size() == 2);
    CHECK(ss.total == 5);
    CHECK(ss.s_max == 2);
}

TEST_CASE("star-clique search spaces grow linearly in k under any order") {
    StarCliqueInstance inst = gen_star_clique(4);
    Order md = min_degree_order(inst.graph);
    SearchSpaces ss = ch_search_spaces(build_weighted_ch(inst.graph, inst.metric, md));
    CHECK(ss.avg() >= 0.5 * 4);
}

TEST_CASE("canonical metric labels of the 4-cycle exclude the detour hub") {
    FourCycle fc;
    LabelSet l = canonical_hhl(fc.g, fc.m, Order::identity(4));
    CHECK(l.hubs[0] == std::vector<Vertex>{0, 1, 3});  // c's shortest path tops at d
    CHECK(l.hubs[3] == std::vector<Vertex>{3});
    CHECK(verify_metric_cover(fc.g, fc.m, l).pass);
}

TEST_CASE("rank-exponential weights collapse metric labels onto customizable ones") {
    Graph p3(3, {{0, 1}, {1, 2}});
    Order ord({0, 2, 1});
    CHECK(canonical_hhl(p3, gen_weights_exponential(p3, ord), ord).hubs ==
          brute_force_canonical_labels(p3, ord).hubs);

    Rng seeds(82);
    for (int i = 0; i < 20; ++i) {
        Vertex n = 2 + static_cast<Vertex>(seeds.bounded(11));
        Graph g = testing::random_connected_graph(seeds, n,
                                                  static_cast<std::uint32_t>(seeds.bounded(n)));
        Order ord2 = testing::random_order(n, seeds.next());
        CHECK(canonical_hhl(g, gen_weights_exponential(g, ord2), ord2).hubs ==
              brute_force_canonical_labels(g, ord2).hubs);
    }
}

TEST_CASE("metric labels embed into customizable labels and CH search spaces") {
    Rng seeds(83);
    for (int i = 0; i < 12; ++i) {
        Vertex n = 3 + static_cast<Vertex>(seeds.bounded(20));
        Graph g = testing::random_connected_graph(seeds, n,
                                                  static_cast<std::uint32_t>(seeds.bounded(n)));
        Metric m = gen_random_weights(g, 1, 50, seeds.next());
        Order ord = testing::random_order(n, seeds.next());
        LabelSet metric_labels = canonical_hhl(g, m, ord);
        LabelSet cuhl_labels = brute_force_canonical_labels(g, ord);
        SearchSpaces ss = ch_search_spaces(build_weighted_ch(g, m, ord));
        CHECK(verify_metric_cover(g, m, metric_labels).pass);
        for (Vertex v = 0; v < n; ++v) {
            CHECK(std::includes(cuhl_labels.hubs[v].begin(), cuhl_labels.hubs[v].end(),
                                metric_labels.hubs[v].begin(), metric_labels.hubs[v].end()));
            CHECK(std::includes(ss.sets[v].begin(), ss.sets[v].end(),
                                metric_labels.hubs[v].begin(), metric_labels.hubs[v].end()));
        }
    }
}

TEST_CASE("top-ranked vertex keeps a singleton metric label") {
    Rng seeds(84);
    Graph g = testing::random_connected_graph(seeds, 10, 6);
    Metric m = gen_random_weights(g, 1, 30, seeds.next());
    Order ord = testing::random_order(10, seeds.next());
    LabelSet l = canonical_hhl(g, m, ord);
    CHECK(l.hubs[ord.vertex_at(9)] == std::vector<Vertex>{ord.vertex_at(9)});
}

TEST_CASE("min-degree order is a deterministic permutation") {
    Graph g = gen_grid(3, 4);
    Order a = min_degree_order(g);
    Order b = min_degree_order(g);
    CHECK(a.by_rank() == b.by_rank());
    CHECK(a.n() == 12);
}

TEST_CASE("apex-clique: flat labels cover ties while CH search spaces stay linear") {
    ApexCliqueInstance inst = gen_apex_clique(8);
    CHECK(verify_metric_cover(inst.graph, inst.metric, inst.labels).pass);
    Order md = min_degree_order(inst.graph);
    SearchSpaces ss = ch_search_spaces(build_weighted_ch(inst.graph, inst.metric, md));
    CHECK(ss.avg() >= inst.graph.num_vertices() / 2.0 - 1.0);
}

TEST_CASE("gap row accepts an explicit contraction order") {
    std::uint32_t k = 3;
    Vertex n = 1 + k + k * k;
    Order reversed = [&] {
        std::vector<Vertex> by_rank(n);
        for (Vertex v = 0; v < n; ++v) by_rank[v] = n - 1 - v;
        return Order(by_rank);
    }();
    GapRow row = gap_row(k, &reversed);
    CHECK(row.cover_ok);
    CHECK(row.s_avg > 0.0);
    // min-degree is the default
    CHECK(gap_row(k).s_avg == gap_experiment({k})[0].s_avg);
}

TEST_CASE("gap experiment rows behave as the construction predicts") {
    auto rows = gap_experiment({2, 3});
    REQUIRE(rows.size() == 2);
    for (const auto& row : rows) {
        CHECK(row.l_avg <= 3.0);
        CHECK(row.cover_ok);
        CHECK(row.n == 1 + row.k + row.k * row.k);
        CHECK(row.s_avg > 0.0);
        CHECK(row.ratio == doctest::Approx(row.s_avg / std::sqrt(row.n)));
    }
    CHECK(rows[0].s_avg < rows[1].s_avg);
    CHECK_THROWS_AS(gap_experiment({25}), std::invalid_argument);
}
