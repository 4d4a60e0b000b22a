#ifndef CUHL_QUERY_HPP
#define CUHL_QUERY_HPP

#include <cstdint>
#include <optional>

#include "cuhl/customize.hpp"

namespace cuhl {

struct QueryResult {
    Weight distance = kInfinity;
    std::optional<Vertex> hub;      // smallest minimizing hub; empty if unreachable
    std::uint32_t comparisons = 0;  // merge steps, at most |L(s)| + |L(t)|

    bool unreachable() const { return distance == kInfinity; }
};

// Single merge pass over the two sorted hub arrays. Throws on unknown ids.
QueryResult hl_query(const CustomizedLabels& c, Vertex s, Vertex t);

}  // namespace cuhl

#endif
