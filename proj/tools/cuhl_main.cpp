#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cuhl/bounds.hpp"
#include "cuhl/cch.hpp"
#include "cuhl/customize.hpp"
#include "cuhl/graph.hpp"
#include "cuhl/io.hpp"
#include "cuhl/labels.hpp"
#include "cuhl/oracles.hpp"
#include "cuhl/parallel.hpp"
#include "cuhl/query.hpp"
#include "cuhl/queue_customize.hpp"
#include "cuhl/separator.hpp"

using namespace cuhl;

namespace {

int log_level() {
    const char* env = std::getenv("CUHL_LOG");
    if (!env) return 0;
    std::string v(env);
    if (v == "info") return 1;
    if (v == "trace") return 2;
    return 0;
}

void log_info(const std::string& msg) {
    if (log_level() >= 1) std::fprintf(stderr, "[cuhl] %s\n", msg.c_str());
}

void log_trace(const std::string& msg) {
    if (log_level() >= 2) std::fprintf(stderr, "[cuhl] %s\n", msg.c_str());
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    return out;
}

SeparatorMode parse_mode(const std::string& mode) {
    if (mode == "heuristic") return SeparatorMode::heuristic;
    if (mode == "grid-aware") return SeparatorMode::grid_aware;
    if (mode == "exact") return SeparatorMode::exact;
    throw CLI::ValidationError("--mode", "unknown separator mode '" + mode + "'");
}

std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", x);
    return buf;
}

int cmd_gen(const std::string& family, Vertex p, Vertex q, std::uint32_t k, Vertex n,
            std::uint32_t m, std::uint64_t seed, Weight wmin, Weight wmax,
            const std::string& out_path, const std::string& metric_out,
            const std::string& labels_out) {
    Graph g;
    Metric metric;
    bool have_metric = false;
    LabelSet labels;
    bool have_labels = false;

    if (family == "grid") {
        if (q == 0) q = p;
        g = gen_grid(p, q);
    } else if (family == "star-clique") {
        StarCliqueInstance inst = gen_star_clique(k);
        g = inst.graph;
        metric = inst.metric;
        have_metric = true;
        labels = inst.labels;
        have_labels = true;
    } else if (family == "apex-clique") {
        ApexCliqueInstance inst = gen_apex_clique(n);
        g = inst.graph;
        metric = inst.metric;
        have_metric = true;
        labels = inst.labels;
        have_labels = true;
    } else if (family == "random") {
        g = gen_random(n, m, seed);
    } else {
        throw CLI::ValidationError("--family", "unknown family '" + family + "'");
    }
    if (!have_metric && !metric_out.empty()) {
        metric = gen_random_weights(g, wmin, wmax, seed + 1);
        have_metric = true;
    }

    auto out = open_out(out_path);
    write_graph(out, g);
    log_info("wrote " + out_path + " (n=" + std::to_string(g.num_vertices()) +
             ", m=" + std::to_string(g.num_edges()) + ")");
    if (!metric_out.empty()) {
        auto mo = open_out(metric_out);
        write_metric(mo, g, metric);
        log_info("wrote " + metric_out);
    }
    if (!labels_out.empty()) {
        if (!have_labels)
            throw CLI::ValidationError("--labels-out",
                                       "only star-clique and apex-clique ship labels");
        auto lo = open_out(labels_out);
        write_labels(lo, labels);
        log_info("wrote " + labels_out);
    }
    return 0;
}

int cmd_order(const std::string& graph_path, const std::string& alpha_text,
              const std::string& mode_text, const std::string& out_path,
              const std::string& tree_out) {
    Graph g = load_graph(graph_path);
    Alpha alpha = Alpha::parse(alpha_text);
    SeparatorMode mode = parse_mode(mode_text);
    log_trace("decomposing n=" + std::to_string(g.num_vertices()));
    SeparatorTree t = build_separator_decomposition(g, alpha, mode);
    Order ord = nested_dissection_order(t, g);
    auto out = open_out(out_path);
    write_order(out, ord);
    log_info("wrote " + out_path + " (tree height " + std::to_string(t.height()) + ")");
    if (!tree_out.empty()) {
        auto to = open_out(tree_out);
        write_separator_tree(to, t);
    }
    return 0;
}

int cmd_cch(const std::string& graph_path, const std::string& order_path,
            const std::string& out_path) {
    Graph g = load_graph(graph_path);
    Order ord = load_order(order_path, g.num_vertices());
    ChordalSupergraph h = build_cch(g, ord);
    auto out = open_out(out_path);
    write_cch(out, h);
    log_info("wrote " + out_path + " (shortcuts " + std::to_string(h.shortcut_count) + ")");
    return 0;
}

int cmd_label(const std::string& graph_path, const std::string& order_path,
              const std::string& out_path) {
    Graph g = load_graph(graph_path);
    Order ord = load_order(order_path, g.num_vertices());
    LabelSet l = build_canonical_hcuhl(build_cch(g, ord));
    auto out = open_out(out_path);
    write_labels(out, l);
    LabelStats s = label_stats(l);
    log_info("wrote " + out_path + " (total " + std::to_string(s.total) + ", l_max " +
             std::to_string(s.l_max) + ")");
    return 0;
}

int cmd_customize(const std::string& graph_path, const std::string& labels_path,
                  const std::string& metric_path, const std::string& engine,
                  const std::string& order_path, unsigned threads,
                  const std::string& out_path) {
    Graph g = load_graph(graph_path);
    LabelSet l = load_labels(labels_path);
    Metric m = load_metric(metric_path, g);

    if (engine == "queue") {
        InverseLabels inv = build_inverse_labels(l);
        QueueCustomization qc = customize_queue(g, l, inv, m);
        std::uint32_t d_hop = hop_diameter(g, m);
        auto out = open_out(out_path);
        write_customized_labels(out, qc.customized, &qc.stats, d_hop);
        log_info("queue customization: dequeues " + std::to_string(qc.stats.dequeues) +
                 ", rounds " + std::to_string(qc.stats.rounds));
        return 0;
    }

    if (order_path.empty())
        throw CLI::ValidationError("--order", "hierarchical engines need the vertex order");
    Order ord = load_order(order_path, g.num_vertices());
    ChordalSupergraph h = build_cch(g, ord);
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        if (!l.contains(v, v))
            throw std::runtime_error("hierarchical labels must contain the vertex itself");
        for (const auto& arc : h.up[v])
            if (!l.contains(v, arc.to))
                throw std::runtime_error("labels do not match the order's canonical labeling");
    }
    EdgeDistances ed = customize_edges(h, m);

    CustomizedLabels c;
    if (engine == "upward") {
        c = customize_upward_dijkstra(h, l, ed, threads);
    } else if (engine == "topdown") {
        c = customize_top_down(h, l, ed);
    } else if (engine.rfind("hybrid:", 0) == 0) {
        Vertex cutoff = static_cast<Vertex>(std::stoul(engine.substr(7)));
        c = customize_hybrid(h, l, ed, cutoff, threads);
    } else {
        throw CLI::ValidationError("--engine", "unknown engine '" + engine + "'");
    }
    auto out = open_out(out_path);
    write_customized_labels(out, c);
    log_info("wrote " + out_path);
    return 0;
}

int cmd_query(const std::string& customized_path, const std::string& pairs_path,
              const std::string& out_path) {
    CustomizedLabels c = load_customized_labels(customized_path);
    std::ifstream pin(pairs_path);
    if (!pin) throw std::runtime_error("cannot open " + pairs_path);
    auto pairs = parse_query_pairs(pin, c.n());
    std::ostringstream lines;
    for (auto [s, t] : pairs) {
        QueryResult r = hl_query(c, s, t);
        if (r.unreachable())
            lines << s + 1 << ' ' << t + 1 << " inf -\n";
        else
            lines << s + 1 << ' ' << t + 1 << ' ' << r.distance << ' ' << *r.hub + 1 << '\n';
    }
    if (out_path.empty()) {
        std::cout << lines.str();
    } else {
        auto out = open_out(out_path);
        out << lines.str();
    }
    return 0;
}

int cmd_verify(const std::string& graph_path, const std::string& labels_path,
               const std::string& order_path, const std::string& metric_path,
               const std::string& customized_path, bool check_cover, bool check_canonical,
               bool check_oracle, unsigned threads) {
    Graph g = load_graph(graph_path);
    bool any = false;
    bool ok = true;

    if (check_cover || (!labels_path.empty() && !check_canonical && !check_oracle)) {
        LabelSet l = load_labels(labels_path);
        CoverReport r = verify_customizable_cover(g, l);
        any = true;
        if (r.pass) {
            std::printf("cover: pass\n");
        } else {
            std::printf("cover: FAIL at pair (%u, %u)\n", r.s + 1, r.t + 1);
            ok = false;
        }
    }
    if (check_canonical) {
        LabelSet l = load_labels(labels_path);
        Order ord = load_order(order_path, g.num_vertices());
        LabelSet oracle = brute_force_canonical_labels(g, ord);
        any = true;
        if (l.hubs == oracle.hubs) {
            std::printf("canonical: pass\n");
        } else {
            std::printf("canonical: FAIL (labels differ from the canonical labeling)\n");
            ok = false;
        }
    }
    if (check_oracle) {
        Metric m = load_metric(metric_path, g);
        CustomizedLabels c = load_customized_labels(customized_path);
        any = true;
        Vertex n = g.num_vertices();
        std::vector<std::uint8_t> bad(n, 0);
        parallel_for(0, n, threads, [&](std::uint32_t s) {
            std::vector<Weight> dist = dijkstra(g, m, s);
            for (Vertex t = 0; t < n; ++t)
                if (hl_query(c, s, t).distance != dist[t]) bad[s] = 1;
        });
        bool exact = std::find(bad.begin(), bad.end(), 1) == bad.end();
        if (exact) {
            std::printf("oracle: pass\n");
        } else {
            std::printf("oracle: FAIL (some query differs from Dijkstra)\n");
            ok = false;
        }
    }
    if (!any) throw CLI::ValidationError("verify", "nothing to verify; pass --cover/--canonical/--oracle");
    return ok ? 0 : 1;
}

int cmd_stats(const std::string& labels_path, const std::string& customized_path) {
    LabelStats s;
    if (!labels_path.empty()) {
        s = label_stats(load_labels(labels_path));
    } else if (!customized_path.empty()) {
        s = label_stats(load_customized_labels(customized_path).labels);
    } else {
        throw CLI::ValidationError("stats", "pass --labels or --customized");
    }
    std::printf("n=%u total=%llu l_avg=%s l_max=%u\n", s.n,
                static_cast<unsigned long long>(s.total), format_double(s.avg()).c_str(), s.l_max);
    return 0;
}

int cmd_bounds(const std::string& graph_path, const std::string& labels_path, bool hierarchical,
               bool nd_approx, Vertex grid_p, bool heuristic_separators) {
    bool ok = true;
    if (grid_p > 0) {
        GridReport r = grid_report(grid_p, !heuristic_separators);
        std::printf("grid\tp=%u\tn=%u\tl_max=%u\tl_avg=%s\tratio=%s\thcuhl_ratio=%s\n", r.p, r.n,
                    r.l_max, format_double(r.stats.avg()).c_str(), format_double(r.ratio).c_str(),
                    format_double(r.hier_ratio).c_str());
        std::printf("l_max <= %u: %s\n", 3 * r.p, r.l_max_ok ? "pass" : "FAIL");
        std::printf("ratio <= 14.7: %s\n", r.ratio_ok ? "pass" : "FAIL");
        ok = r.pass();
    } else if (nd_approx) {
        Graph g = load_graph(graph_path);
        NdApproximationReport r = check_nd_approximation(g);
        std::printf("nd\tn=%u\tnd_total=%llu\topt_total=%llu\tbound_factor=%s\n", r.n,
                    static_cast<unsigned long long>(r.nd_total),
                    static_cast<unsigned long long>(r.opt_total),
                    format_double(r.bound_factor).c_str());
        std::printf("nd within factor: %s\n", r.ok ? "pass" : "FAIL");
        ok = r.ok;
    } else {
        Graph g = load_graph(graph_path);
        LabelSet l = load_labels(labels_path);
        BoundsReport r = check_lower_bounds(g, l, hierarchical);
        std::printf("bounds\tn=%u\tb_2/3=%u\tb_1/2=%u\ttotal=%llu\tl_avg=%s\n", r.n,
                    r.b_two_thirds, r.b_half, static_cast<unsigned long long>(r.stats.total),
                    format_double(r.stats.avg()).c_str());
        std::printf("l_avg >= 1/4 b_2/3: %s\n", r.avg_quarter_ok ? "pass" : "FAIL");
        std::printf("l_avg >= 1/12 b_1/2: %s (informational)\n",
                    r.avg_twelfth_ok ? "pass" : "fail");
        if (hierarchical) {
            std::printf("l_avg >= 2/3 b_2/3: %s\n", r.avg_two_thirds_ok ? "pass" : "FAIL");
            std::printf("2n/3 vertices with |L| >= b: %s (%u of %u)\n",
                        r.count_ok ? "pass" : "FAIL", r.count_at_least_b, r.n);
        }
        ok = r.pass();
    }
    return ok ? 0 : 1;
}

int cmd_gap(const std::string& k_list, const std::string& order_path,
            const std::string& out_path) {
    std::vector<std::uint32_t> ks;
    std::stringstream ss(k_list);
    std::string item;
    while (std::getline(ss, item, ',')) ks.push_back(std::stoul(item));
    std::vector<GapRow> rows;
    if (!order_path.empty()) {
        if (ks.size() != 1)
            throw CLI::ValidationError("--order", "an explicit order applies to a single k");
        Vertex n = 1 + ks[0] + ks[0] * ks[0];
        Order ord = load_order(order_path, n);
        rows.push_back(gap_row(ks[0], &ord));
    } else {
        rows = gap_experiment(ks);
    }
    std::ostringstream table;
    bool cover_ok = true;
    for (const auto& r : rows) {
        table << r.k << '\t' << r.n << '\t' << format_double(r.l_avg) << '\t'
              << format_double(r.s_avg) << '\t' << format_double(r.ratio) << '\n';
        cover_ok = cover_ok && r.cover_ok;
    }
    if (out_path.empty()) {
        std::cout << table.str();
    } else {
        auto out = open_out(out_path);
        out << table.str();
    }
    if (!cover_ok) {
        std::fprintf(stderr, "gap-exp: explicit labeling failed the metric cover check\n");
        return 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"customizable hub labeling toolkit"};
    app.require_subcommand(1);

    // gen
    std::string family, out_path, metric_out, labels_out;
    Vertex p = 0, q = 0, n = 0;
    std::uint32_t k = 0, m = 0;
    std::uint64_t seed = 1;
    Weight wmin = 1, wmax = 100;
    auto* gen = app.add_subcommand("gen", "generate a named graph family");
    gen->add_option("--family", family)->required();
    gen->add_option("--p", p);
    gen->add_option("--q", q);
    gen->add_option("--k", k);
    gen->add_option("--n", n);
    gen->add_option("--m", m);
    gen->add_option("--seed", seed);
    gen->add_option("--wmin", wmin);
    gen->add_option("--wmax", wmax);
    gen->add_option("--out", out_path)->required();
    gen->add_option("--metric-out", metric_out);
    gen->add_option("--labels-out", labels_out);

    // order
    std::string graph_path, alpha_text = "2/3", mode_text = "heuristic", tree_out;
    auto* order = app.add_subcommand("order", "nested dissection vertex order");
    order->add_option("graph", graph_path)->required();
    order->add_option("--alpha", alpha_text);
    order->add_option("--mode", mode_text);
    order->add_option("--out", out_path)->required();
    order->add_option("--tree-out", tree_out);

    // cch
    std::string order_path;
    auto* cch = app.add_subcommand("cch", "build the metric-independent supergraph");
    cch->add_option("graph", graph_path)->required();
    cch->add_option("--order", order_path)->required();
    cch->add_option("--out", out_path)->required();

    // label
    auto* label = app.add_subcommand("label", "canonical hierarchical labels");
    label->add_option("graph", graph_path)->required();
    label->add_option("--order", order_path)->required();
    label->add_option("--out", out_path)->required();

    // customize
    std::string labels_path, metric_path, engine = "topdown";
    unsigned threads = 1;
    auto* customize = app.add_subcommand("customize", "fill distance entries for a metric");
    customize->add_option("graph", graph_path)->required();
    customize->add_option("--labels", labels_path)->required();
    customize->add_option("--metric", metric_path)->required();
    customize->add_option("--engine", engine);
    customize->add_option("--order", order_path);
    customize->add_option("--threads", threads);
    customize->add_option("--out", out_path)->required();

    // query
    std::string customized_path, pairs_path;
    auto* query = app.add_subcommand("query", "answer distance queries from customized labels");
    query->add_option("customized", customized_path)->required();
    query->add_option("--pairs", pairs_path)->required();
    query->add_option("--out", out_path);

    // verify
    bool check_cover = false, check_canonical = false, check_oracle = false;
    auto* verify = app.add_subcommand("verify", "cover / canonical / oracle checks");
    verify->add_option("graph", graph_path)->required();
    verify->add_option("--labels", labels_path);
    verify->add_option("--order", order_path);
    verify->add_option("--metric", metric_path);
    verify->add_option("--customized", customized_path);
    verify->add_flag("--cover", check_cover);
    verify->add_flag("--canonical", check_canonical);
    verify->add_flag("--oracle", check_oracle);
    verify->add_option("--threads", threads);

    // stats
    auto* stats = app.add_subcommand("stats", "label size statistics");
    stats->add_option("--labels", labels_path);
    stats->add_option("--customized", customized_path);

    // bounds
    bool hierarchical = false, nd_approx = false, heuristic_separators = false;
    Vertex grid_p = 0;
    auto* bounds = app.add_subcommand("bounds", "separator lower bounds and grid constants");
    bounds->add_option("graph", graph_path);
    bounds->add_option("--labels", labels_path);
    bounds->add_flag("--hierarchical", hierarchical);
    bounds->add_flag("--nd-approx", nd_approx);
    bounds->add_option("--grid", grid_p);
    bounds->add_flag("--heuristic-separators", heuristic_separators);

    // gap-exp
    std::string k_list = "4,8,12,16";
    auto* gap = app.add_subcommand("gap-exp", "label size vs CH search space on the star-clique family");
    gap->add_option("--k", k_list);
    gap->add_option("--order", order_path);
    gap->add_option("--out", out_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (gen->parsed())
            return cmd_gen(family, p, q, k, n, m, seed, wmin, wmax, out_path, metric_out,
                           labels_out);
        if (order->parsed()) return cmd_order(graph_path, alpha_text, mode_text, out_path, tree_out);
        if (cch->parsed()) return cmd_cch(graph_path, order_path, out_path);
        if (label->parsed()) return cmd_label(graph_path, order_path, out_path);
        if (customize->parsed())
            return cmd_customize(graph_path, labels_path, metric_path, engine, order_path,
                                 threads, out_path);
        if (query->parsed()) return cmd_query(customized_path, pairs_path, out_path);
        if (verify->parsed())
            return cmd_verify(graph_path, labels_path, order_path, metric_path, customized_path,
                              check_cover, check_canonical, check_oracle, threads);
        if (stats->parsed()) return cmd_stats(labels_path, customized_path);
        if (bounds->parsed())
            return cmd_bounds(graph_path, labels_path, hierarchical, nd_approx, grid_p,
                              heuristic_separators);
        if (gap->parsed()) return cmd_gap(k_list, order_path, out_path);
    } catch (const CLI::ValidationError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const ParseError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 2;
}
