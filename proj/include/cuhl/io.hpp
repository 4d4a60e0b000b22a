#ifndef CUHL_IO_HPP
#define CUHL_IO_HPP

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "cuhl/cch.hpp"
#include "cuhl/customize.hpp"
#include "cuhl/graph.hpp"
#include "cuhl/labels.hpp"
#include "cuhl/queue_customize.hpp"
#include "cuhl/separator.hpp"

namespace cuhl {

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// Text formats; vertex ids are 1-based in files. Lines starting with 'c'
// are comments everywhere, blank lines are skipped.
//
//   graph      "n m" header, then m lines "u v"; DIMACS "p sp n m" headers
//              with "a u v w" arc lines are also accepted (symmetric arcs
//              collapsed, weights ignored)
//   metric     one line "u v w" per edge, any order, every edge exactly once
//   order      n lines; line r holds the vertex with rank r
//   labels     "v k h1 h2 ... hk", hubs ascending, upward entries suffixed ^
//   customized "v k h1:d1 ... hk:dk", infinity written as inf

Graph parse_graph(std::istream& in);
void write_graph(std::ostream& out, const Graph& g);

Metric parse_metric(std::istream& in, const Graph& g);
void write_metric(std::ostream& out, const Graph& g, const Metric& m);

Order parse_order(std::istream& in, Vertex n);
void write_order(std::ostream& out, const Order& ord);

LabelSet parse_labels(std::istream& in);
void write_labels(std::ostream& out, const LabelSet& l);

CustomizedLabels parse_customized_labels(std::istream& in);
// stats, when given, is appended as a comment line
void write_customized_labels(std::ostream& out, const CustomizedLabels& c,
                             const QueueStats* stats = nullptr, std::uint32_t d_hop = 0);

std::vector<std::pair<Vertex, Vertex>> parse_query_pairs(std::istream& in, Vertex n);

void write_separator_tree(std::ostream& out, const SeparatorTree& t);
void write_cch(std::ostream& out, const ChordalSupergraph& h);

// file helpers; throw std::runtime_error when the file cannot be opened
Graph load_graph(const std::string& path);
Metric load_metric(const std::string& path, const Graph& g);
Order load_order(const std::string& path, Vertex n);
LabelSet load_labels(const std::string& path);
CustomizedLabels load_customized_labels(const std::string& path);

}  // namespace cuhl

#endif
