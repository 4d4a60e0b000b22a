#ifndef CUHL_QUEUE_CUSTOMIZE_HPP
#define CUHL_QUEUE_CUSTOMIZE_HPP

#include <cstdint>
#include <functional>

#include "cuhl/customize.hpp"
#include "cuhl/graph.hpp"
#include "cuhl/labels.hpp"

namespace cuhl {

struct QueueStats {
    std::uint64_t dequeues = 0;
    std::uint32_t max_per_pair = 0;
    std::uint32_t rounds = 0;  // seed pass is round 1
};

struct QueueCustomization {
    CustomizedLabels customized;
    QueueStats stats;
};

// Notified on every dequeue: pair (x, y), its current value, the round the
// pair was enqueued for (seeds are round 1) and how often it was dequeued.
using DequeueObserver =
    std::function<void(Vertex x, Vertex y, Weight value, std::uint32_t round,
                       std::uint32_t dequeue_count)>;

// Label-correcting customization for arbitrary labelings with the
// customizable cover property. Seeds the FIFO queue with all adjacent
// (x, y in L(x)) pairs and propagates decreases through neighborhoods and
// inverse labels until the queue drains; at the fixpoint every entry equals
// the true distance.
QueueCustomization customize_queue(const Graph& g, const LabelSet& l, const InverseLabels& inv,
                                   const Metric& m, const DequeueObserver& observer = {});

// Maximum, over all connected pairs, of the minimum edge count among
// minimum-weight paths (Dijkstra with lexicographic (distance, hops) keys).
std::uint32_t hop_diameter(const Graph& g, const Metric& m);

}  // namespace cuhl

#endif
