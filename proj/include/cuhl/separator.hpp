#ifndef CUHL_SEPARATOR_HPP
#define CUHL_SEPARATOR_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cuhl/graph.hpp"

namespace cuhl {

// Balance parameter as an exact fraction; 2/3 boundaries must not depend
// on floating-point rounding.
struct Alpha {
    std::uint32_t num = 2;
    std::uint32_t den = 3;

    double value() const { return static_cast<double>(num) / den; }
    // component of size c is allowed within a subgraph of size n
    bool allows(std::uint64_t c, std::uint64_t n) const { return c * den <= n * num; }
    bool valid() const { return den > 0 && 2 * std::uint64_t(num) >= den && num < den; }

    static Alpha two_thirds() { return {2, 3}; }
    // Accepts "2/3" or a decimal like "0.667".
    static Alpha parse(const std::string& text);
};

enum class SeparatorMode { heuristic, grid_aware, exact };

struct SeparatorReport {
    std::vector<Vertex> separator;  // sorted
    Alpha alpha;                    // requested balance guarantee
    Vertex largest_component = 0;   // after removing the separator
};

// An alpha-balanced separator of a connected graph (n >= 2).
//   exact      minimum cardinality, ties by smaller largest component
//              (exhaustive, n <= 20)
//   grid-aware median row/column when the graph is a row-major grid,
//              heuristic fallback otherwise
//   heuristic  BFS level-set bisection from a pseudo-peripheral vertex
//              plus local shrinking
SeparatorReport find_balanced_separator(const Graph& g, Alpha alpha, SeparatorMode mode);

// Minimum size of an alpha-balanced separator, by exhaustive subset search
// in increasing size. n <= 20. A single vertex needs no separator (0).
Vertex exact_b_alpha(const Graph& g, Alpha alpha);

// Recognizes row-major p x q grids (including paths as 1 x q); returns
// (rows, cols) with rows <= cols when both orientations match.
std::optional<std::pair<Vertex, Vertex>> recognize_grid(const Graph& g);

// Recursive alpha-balanced separator decomposition. Leaves hold exactly one
// vertex. A disconnected input gets a synthetic empty-separator root over the
// per-component decompositions.
struct SeparatorTree {
    struct Node {
        std::vector<Vertex> vertices;  // separator set (or the single leaf vertex)
        Vertex subgraph_size = 0;      // vertices in this node plus all descendants
        std::vector<std::uint32_t> children;
    };
    std::vector<Node> nodes;
    std::uint32_t root = 0;
    Vertex n = 0;

    bool is_leaf(std::uint32_t id) const { return nodes[id].children.empty(); }
    std::uint32_t height() const;
};

SeparatorTree build_separator_decomposition(const Graph& g, Alpha alpha, SeparatorMode mode);

// Post-order traversal of the tree: separator vertices outrank all
// descendants; inside a node ranks follow descending degree in g, then
// ascending id. Sibling subtrees are visited by smallest contained vertex.
Order nested_dissection_order(const SeparatorTree& t, const Graph& g);

}  // namespace cuhl

#endif
