#ifndef CUHL_CUSTOMIZE_HPP
#define CUHL_CUSTOMIZE_HPP

#include <cstdint>
#include <vector>

#include "cuhl/cch.hpp"
#include "cuhl/graph.hpp"
#include "cuhl/labels.hpp"

namespace cuhl {

// One value per supergraph edge, indexed like ChordalSupergraph::sup_edges.
struct EdgeDistances {
    std::vector<Weight> value;
};

// Labels plus a distance entry per hub. Entries are lengths of real walks,
// so they upper-bound true distances; queries are exact anyway because the
// top vertex of a shortest path carries the right sums.
struct CustomizedLabels {
    LabelSet labels;
    std::vector<std::vector<Weight>> dist;  // parallel to labels.hubs

    Vertex n() const { return labels.n(); }
};

// Triangle pass: seed supergraph edges with the metric (infinity on
// shortcuts), then sweep by ascending rank relaxing every lower triangle.
EdgeDistances customize_edges(const ChordalSupergraph& h, const Metric& m);

// One rank-restricted Dijkstra per vertex over the customized upward edges.
CustomizedLabels customize_upward_dijkstra(const ChordalSupergraph& h, const LabelSet& l,
                                           const EdgeDistances& ed, unsigned threads = 1);

// Hub sweep by descending rank: d_v[u] <- min over upward neighbors w with
// u in L(w) of d_v[w] + d_w[u].
CustomizedLabels customize_top_down(const ChordalSupergraph& h, const LabelSet& l,
                                    const EdgeDistances& ed);

// Vertices with rank above the cutoff run upward Dijkstra, the rest join the
// top-down sweep. cutoff = n is pure top-down, cutoff = 0 pure Dijkstra.
// Ranks here are 1-based to match order files.
CustomizedLabels customize_hybrid(const ChordalSupergraph& h, const LabelSet& l,
                                  const EdgeDistances& ed, Vertex cutoff, unsigned threads = 1);

struct EngineComparison {
    bool equal = true;
    Vertex s = 0, t = 0;
    Weight upward_value = 0, top_down_value = 0;
};

// Runs both hierarchical engines and compares every query answer.
EngineComparison compare_customizations(const ChordalSupergraph& h, const LabelSet& l,
                                        const Metric& m);

}  // namespace cuhl

#endif
