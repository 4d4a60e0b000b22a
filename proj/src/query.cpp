#include "cuhl/query.hpp"

#include <stdexcept>

namespace cuhl {

QueryResult hl_query(const CustomizedLabels& c, Vertex s, Vertex t) {
    if (s >= c.n() || t >= c.n()) throw std::invalid_argument("unknown vertex id");
    const auto& hs = c.labels.hubs[s];
    const auto& ht = c.labels.hubs[t];
    QueryResult r;
    std::size_t i = 0, j = 0;
    while (i < hs.size() && j < ht.size()) {
        ++r.comparisons;
        if (hs[i] < ht[j]) {
            ++i;
        } else if (hs[i] > ht[j]) {
            ++j;
        } else {
            Weight sum = saturating_add(c.dist[s][i], c.dist[t][j]);
            if (sum < r.distance) {
                r.distance = sum;
                r.hub = hs[i];
            }
            ++i;
            ++j;
        }
    }
    return r;
}

}  // namespace cuhl
