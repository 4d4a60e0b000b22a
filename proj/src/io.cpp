#include "cuhl/io.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace cuhl {

namespace {

// Sequential reader that skips comments/blank lines and remembers line
// numbers for error messages.
class LineReader {
public:
    explicit LineReader(std::istream& in) : in_(in) {}

    bool next(std::string& out) {
        std::string line;
        while (std::getline(in_, line)) {
            ++line_no_;
            std::size_t start = line.find_first_not_of(" \t\r");
            if (start == std::string::npos) continue;
            if (line[start] == 'c') continue;
            out = line;
            return true;
        }
        return false;
    }

    std::size_t line_no() const { return line_no_; }

private:
    std::istream& in_;
    std::size_t line_no_ = 0;
};

std::vector<std::string> tokens_of(const std::string& line) {
    std::istringstream ss(line);
    std::vector<std::string> toks;
    std::string t;
    while (ss >> t) toks.push_back(t);
    return toks;
}

std::uint64_t parse_uint(const std::string& tok, std::size_t line) {
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
        throw ParseError(line, "expected a non-negative integer, got '" + tok + "'");
    try {
        return std::stoull(tok);
    } catch (...) {
        throw ParseError(line, "integer out of range: '" + tok + "'");
    }
}

Vertex parse_vertex(const std::string& tok, Vertex n, std::size_t line) {
    std::uint64_t v = parse_uint(tok, line);
    if (v < 1 || v > n) throw ParseError(line, "vertex id out of range: " + tok);
    return static_cast<Vertex>(v - 1);
}

}  // namespace

Graph parse_graph(std::istream& in) {
    LineReader reader(in);
    std::string line;
    if (!reader.next(line)) throw ParseError(reader.line_no() + 1, "missing header");
    auto head = tokens_of(line);

    bool dimacs = false;
    Vertex n;
    std::uint64_t m;
    if (head.size() == 2) {
        n = static_cast<Vertex>(parse_uint(head[0], reader.line_no()));
        m = parse_uint(head[1], reader.line_no());
    } else if (head.size() == 4 && head[0] == "p" && head[1] == "sp") {
        dimacs = true;
        n = static_cast<Vertex>(parse_uint(head[2], reader.line_no()));
        m = parse_uint(head[3], reader.line_no());
    } else {
        throw ParseError(reader.line_no(), "malformed header, expected 'n m' or 'p sp n m'");
    }

    std::vector<std::pair<Vertex, Vertex>> edges;
    for (std::uint64_t i = 0; i < m; ++i) {
        if (!reader.next(line))
            throw ParseError(reader.line_no() + 1, "unexpected end of input, expected " +
                                                       std::to_string(m) + " edge lines");
        auto toks = tokens_of(line);
        std::size_t at = 0;
        if (dimacs) {
            if (toks.size() != 4 || toks[0] != "a")
                throw ParseError(reader.line_no(), "malformed arc line, expected 'a u v w'");
            at = 1;
        } else if (toks.size() != 2) {
            throw ParseError(reader.line_no(), "malformed edge line, expected 'u v'");
        }
        Vertex u = parse_vertex(toks[at], n, reader.line_no());
        Vertex v = parse_vertex(toks[at + 1], n, reader.line_no());
        if (u == v) throw ParseError(reader.line_no(), "self-loop at vertex " + toks[at]);
        edges.emplace_back(u, v);
    }
    return Graph(n, std::move(edges));  // symmetric arcs collapse via dedup
}

void write_graph(std::ostream& out, const Graph& g) {
    out << g.num_vertices() << ' ' << g.num_edges() << '\n';
    for (auto [u, v] : g.edges()) out << u + 1 << ' ' << v + 1 << '\n';
}

Metric parse_metric(std::istream& in, const Graph& g) {
    LineReader reader(in);
    std::string line;
    std::vector<Weight> values(g.num_edges(), kInfinity);
    std::vector<bool> seen(g.num_edges(), false);
    while (reader.next(line)) {
        auto toks = tokens_of(line);
        std::size_t at = 0;
        if (toks.size() == 4 && toks[0] == "p") continue;  // DIMACS header
        if (toks.size() == 4 && toks[0] == "a")
            at = 1;
        else if (toks.size() != 3)
            throw ParseError(reader.line_no(), "malformed weight line, expected 'u v w'");
        Vertex u = parse_vertex(toks[at], g.num_vertices(), reader.line_no());
        Vertex v = parse_vertex(toks[at + 1], g.num_vertices(), reader.line_no());
        auto e = g.edge_index(u, v);
        if (!e)
            throw ParseError(reader.line_no(),
                             "weight for non-edge " + toks[at] + "-" + toks[at + 1]);
        Weight w = parse_uint(toks[at + 2], reader.line_no());
        if (seen[*e] && values[*e] != w)
            throw ParseError(reader.line_no(), "conflicting duplicate weight for edge " +
                                                   toks[at] + "-" + toks[at + 1]);
        seen[*e] = true;
        values[*e] = w;
    }
    for (std::uint32_t e = 0; e < g.num_edges(); ++e)
        if (!seen[e])
            throw ParseError(reader.line_no(),
                             "missing weight for edge " + std::to_string(g.edges()[e].first + 1) +
                                 "-" + std::to_string(g.edges()[e].second + 1));
    return Metric(g, std::move(values));
}

void write_metric(std::ostream& out, const Graph& g, const Metric& m) {
    for (std::uint32_t e = 0; e < g.num_edges(); ++e)
        out << g.edges()[e].first + 1 << ' ' << g.edges()[e].second + 1 << ' ' << m.weight(e)
            << '\n';
}

Order parse_order(std::istream& in, Vertex n) {
    LineReader reader(in);
    std::string line;
    std::vector<Vertex> by_rank;
    by_rank.reserve(n);
    while (by_rank.size() < n) {
        if (!reader.next(line))
            throw ParseError(reader.line_no() + 1,
                             "unexpected end of input, expected " + std::to_string(n) + " ranks");
        auto toks = tokens_of(line);
        if (toks.size() != 1) throw ParseError(reader.line_no(), "expected one vertex per line");
        by_rank.push_back(parse_vertex(toks[0], n, reader.line_no()));
    }
    try {
        return Order(std::move(by_rank));
    } catch (const std::invalid_argument& e) {
        throw ParseError(reader.line_no(), e.what());
    }
}

void write_order(std::ostream& out, const Order& ord) {
    for (std::uint32_t r = 0; r < ord.n(); ++r) out << ord.vertex_at(r) + 1 << '\n';
}

namespace {

struct LabelLine {
    Vertex v;
    std::vector<Vertex> hubs;
    std::vector<std::uint8_t> flags;
    std::vector<Weight> dists;
};

LabelLine parse_label_line(const std::string& line, std::size_t line_no, bool customized) {
    auto toks = tokens_of(line);
    if (toks.size() < 2) throw ParseError(line_no, "malformed label line");
    LabelLine out;
    std::uint64_t v1 = parse_uint(toks[0], line_no);
    if (v1 == 0) throw ParseError(line_no, "vertex id out of range: 0");
    out.v = static_cast<Vertex>(v1 - 1);
    std::uint64_t k = parse_uint(toks[1], line_no);
    if (toks.size() != 2 + k)
        throw ParseError(line_no, "label line announces " + std::to_string(k) + " hubs but has " +
                                      std::to_string(toks.size() - 2));
    for (std::uint64_t i = 0; i < k; ++i) {
        std::string tok = toks[2 + i];
        Weight d = kInfinity;
        if (customized) {
            auto colon = tok.find(':');
            if (colon == std::string::npos)
                throw ParseError(line_no, "expected 'hub:dist', got '" + tok + "'");
            std::string ds = tok.substr(colon + 1);
            d = ds == "inf" ? kInfinity : parse_uint(ds, line_no);
            tok = tok.substr(0, colon);
        }
        std::uint8_t flag = 0;
        if (!tok.empty() && tok.back() == '^') {
            flag = 1;
            tok.pop_back();
        }
        std::uint64_t hub = parse_uint(tok, line_no);
        if (hub == 0) throw ParseError(line_no, "hub id out of range: 0");
        out.hubs.push_back(static_cast<Vertex>(hub - 1));
        out.flags.push_back(flag);
        out.dists.push_back(d);
    }
    if (!std::is_sorted(out.hubs.begin(), out.hubs.end()) ||
        std::adjacent_find(out.hubs.begin(), out.hubs.end()) != out.hubs.end())
        throw ParseError(line_no, "hubs must be strictly ascending");
    return out;
}

template <typename Store>
void parse_label_file(std::istream& in, bool customized, Vertex& n_out, Store&& store) {
    LineReader reader(in);
    std::string line;
    std::vector<LabelLine> lines;
    Vertex max_v = 0;
    while (reader.next(line)) {
        lines.push_back(parse_label_line(line, reader.line_no(), customized));
        max_v = std::max(max_v, lines.back().v);
    }
    if (lines.empty()) throw ParseError(reader.line_no() + 1, "empty label file");
    Vertex n = max_v + 1;
    std::vector<bool> seen(n, false);
    for (auto& ll : lines) {
        if (seen[ll.v])
            throw ParseError(reader.line_no(), "duplicate labels for vertex " +
                                                   std::to_string(ll.v + 1));
        seen[ll.v] = true;
        for (Vertex h : ll.hubs)
            if (h >= n)
                throw ParseError(reader.line_no(), "hub id out of range: " + std::to_string(h + 1));
    }
    for (Vertex v = 0; v < n; ++v)
        if (!seen[v])
            throw ParseError(reader.line_no(), "missing labels for vertex " + std::to_string(v + 1));
    n_out = n;
    for (auto& ll : lines) store(std::move(ll));
}

}  // namespace

LabelSet parse_labels(std::istream& in) {
    LabelSet l;
    Vertex n = 0;
    std::vector<LabelLine> lines;
    parse_label_file(in, false, n, [&](LabelLine&& ll) { lines.push_back(std::move(ll)); });
    l.hubs.assign(n, {});
    l.up_flag.assign(n, {});
    for (auto& ll : lines) {
        l.hubs[ll.v] = std::move(ll.hubs);
        l.up_flag[ll.v] = std::move(ll.flags);
    }
    return l;
}

void write_labels(std::ostream& out, const LabelSet& l) {
    bool flagged = l.up_flag.size() == l.hubs.size();
    for (Vertex v = 0; v < l.n(); ++v) {
        out << v + 1 << ' ' << l.hubs[v].size();
        for (std::uint32_t i = 0; i < l.hubs[v].size(); ++i) {
            out << ' ' << l.hubs[v][i] + 1;
            if (flagged && !l.up_flag[v].empty() && l.up_flag[v][i]) out << '^';
        }
        out << '\n';
    }
}

CustomizedLabels parse_customized_labels(std::istream& in) {
    CustomizedLabels c;
    Vertex n = 0;
    std::vector<LabelLine> lines;
    parse_label_file(in, true, n, [&](LabelLine&& ll) { lines.push_back(std::move(ll)); });
    c.labels.hubs.assign(n, {});
    c.labels.up_flag.assign(n, {});
    c.dist.assign(n, {});
    for (auto& ll : lines) {
        c.labels.hubs[ll.v] = std::move(ll.hubs);
        c.dist[ll.v] = std::move(ll.dists);
    }
    return c;
}

void write_customized_labels(std::ostream& out, const CustomizedLabels& c,
                             const QueueStats* stats, std::uint32_t d_hop) {
    for (Vertex v = 0; v < c.n(); ++v) {
        out << v + 1 << ' ' << c.labels.hubs[v].size();
        for (std::uint32_t i = 0; i < c.labels.hubs[v].size(); ++i) {
            out << ' ' << c.labels.hubs[v][i] + 1 << ':';
            if (c.dist[v][i] == kInfinity)
                out << "inf";
            else
                out << c.dist[v][i];
        }
        out << '\n';
    }
    if (stats)
        out << "c dequeues=" << stats->dequeues << " max_per_pair=" << stats->max_per_pair
            << " d_hop=" << d_hop << '\n';
}

std::vector<std::pair<Vertex, Vertex>> parse_query_pairs(std::istream& in, Vertex n) {
    LineReader reader(in);
    std::string line;
    std::vector<std::pair<Vertex, Vertex>> pairs;
    while (reader.next(line)) {
        auto toks = tokens_of(line);
        if (toks.size() != 2) throw ParseError(reader.line_no(), "expected 's t'");
        pairs.emplace_back(parse_vertex(toks[0], n, reader.line_no()),
                           parse_vertex(toks[1], n, reader.line_no()));
    }
    return pairs;
}

namespace {

void dump_tree_node(std::ostream& out, const SeparatorTree& t, std::uint32_t id,
                    std::uint32_t depth) {
    const auto& node = t.nodes[id];
    for (std::uint32_t i = 0; i < depth; ++i) out << "  ";
    out << "S = {";
    for (std::size_t i = 0; i < node.vertices.size(); ++i)
        out << (i ? " " : "") << node.vertices[i] + 1;
    out << "} (n'=" << node.subgraph_size << ")\n";
    for (std::uint32_t c : node.children) dump_tree_node(out, t, c, depth + 1);
}

}  // namespace

void write_separator_tree(std::ostream& out, const SeparatorTree& t) {
    if (!t.nodes.empty()) dump_tree_node(out, t, t.root, 0);
}

void write_cch(std::ostream& out, const ChordalSupergraph& h) {
    for (Vertex v = 0; v < h.num_vertices(); ++v) {
        out << v + 1 << " : up = [";
        for (std::size_t i = 0; i < h.up[v].size(); ++i)
            out << (i ? " " : "") << h.up[v][i].to + 1;
        out << "] down = [";
        for (std::size_t i = 0; i < h.down[v].size(); ++i)
            out << (i ? " " : "") << h.down[v][i].to + 1;
        out << "]\n";
    }
    out << "m_plus = " << h.shortcut_count << '\n';
}

namespace {

std::ifstream open_or_throw(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return in;
}

}  // namespace

Graph load_graph(const std::string& path) {
    auto in = open_or_throw(path);
    return parse_graph(in);
}

Metric load_metric(const std::string& path, const Graph& g) {
    auto in = open_or_throw(path);
    return parse_metric(in, g);
}

Order load_order(const std::string& path, Vertex n) {
    auto in = open_or_throw(path);
    return parse_order(in, n);
}

LabelSet load_labels(const std::string& path) {
    auto in = open_or_throw(path);
    return parse_labels(in);
}

CustomizedLabels load_customized_labels(const std::string& path) {
    auto in = open_or_throw(path);
    return parse_customized_labels(in);
}

}  // namespace cuhl
