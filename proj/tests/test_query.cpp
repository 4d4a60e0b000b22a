#include "cuhl/oracles.hpp"
#include "cuhl/query.hpp"
#include "cuhl/queue_customize.hpp"
#include "doctest.h"
#include "oracle_utils.hpp"

using namespace cuhl;

TEST_CASE("documented 4-cycle query meets at the top vertex") {
    Graph g(4, {{0, 1}, {1, 3}, {2, 3}, {0, 2}});
    std::vector<Weight> w(4);
    w[*g.edge_index(0, 1)] = 1;
    w[*g.edge_index(0, 2)] = 10;
    w[*g.edge_index(1, 3)] = 1;
    w[*g.edge_index(2, 3)] = 1;
    Metric m(g, std::move(w));
    ChordalSupergraph h = build_cch(g, Order::identity(4));
    LabelSet l = build_canonical_hcuhl(h);
    CustomizedLabels c = customize_upward_dijkstra(h, l, customize_edges(h, m));

    QueryResult r = hl_query(c, 0, 2);
    CHECK(r.distance == 3);
    CHECK(r.hub == Vertex(3));

    QueryResult self = hl_query(c, 1, 1);
    CHECK(self.distance == 0);
    CHECK(self.hub == Vertex(1));

    CHECK_THROWS_AS(hl_query(c, 0, 9), std::invalid_argument);
}

TEST_CASE("cross-component queries are unreachable") {
    Graph g(5, {{0, 1}, {1, 2}, {3, 4}});
    Metric m = Metric::uniform(g, 2);
    Order ord = Order::identity(5);
    ChordalSupergraph h = build_cch(g, ord);
    LabelSet l = build_canonical_hcuhl(h);
    CustomizedLabels c = customize_top_down(h, l, customize_edges(h, m));
    QueryResult r = hl_query(c, 0, 4);
    CHECK(r.unreachable());
    CHECK(!r.hub.has_value());
    CHECK(hl_query(c, 3, 4).distance == 2);
}

TEST_CASE("query cost stays within the merge bound and is symmetric") {
    Rng seeds(71);
    for (int i = 0; i < 8; ++i) {
        Vertex n = 3 + static_cast<Vertex>(seeds.bounded(40));
        Graph g = testing::random_connected_graph(seeds, n,
                                                  static_cast<std::uint32_t>(seeds.bounded(n)));
        Order ord = testing::random_order(n, seeds.next());
        Metric m = gen_random_weights(g, 1, 100, seeds.next());
        ChordalSupergraph h = build_cch(g, ord);
        LabelSet l = build_canonical_hcuhl(h);
        CustomizedLabels c = customize_upward_dijkstra(h, l, customize_edges(h, m));
        for (Vertex s = 0; s < n; ++s)
            for (Vertex t = s; t < n; ++t) {
                QueryResult st = hl_query(c, s, t);
                QueryResult ts = hl_query(c, t, s);
                CHECK(st.distance == ts.distance);
                CHECK(st.hub == ts.hub);
                CHECK(st.comparisons <= l.hubs[s].size() + l.hubs[t].size());
            }
    }
}

TEST_CASE("all three engines answer every query exactly") {
    Rng seeds(72);
    for (int i = 0; i < 6; ++i) {
        Vertex n = 4 + static_cast<Vertex>(seeds.bounded(28));
        Graph g = testing::random_connected_graph(seeds, n,
                                                  static_cast<std::uint32_t>(seeds.bounded(2 * n)));
        Order ord = testing::random_order(n, seeds.next());
        Metric m = gen_random_weights(g, 1, 100, seeds.next());
        ChordalSupergraph h = build_cch(g, ord);
        LabelSet l = build_canonical_hcuhl(h);
        EdgeDistances ed = customize_edges(h, m);
        CustomizedLabels up = customize_upward_dijkstra(h, l, ed);
        CustomizedLabels td = customize_top_down(h, l, ed);
        QueueCustomization qc = customize_queue(g, l, build_inverse_labels(l), m);
        for (Vertex s = 0; s < n; ++s) {
            std::vector<Weight> oracle = dijkstra(g, m, s);
            for (Vertex t = 0; t < n; ++t) {
                CHECK(hl_query(up, s, t).distance == oracle[t]);
                CHECK(hl_query(td, s, t).distance == oracle[t]);
                CHECK(hl_query(qc.customized, s, t).distance == oracle[t]);
            }
        }
    }
}
