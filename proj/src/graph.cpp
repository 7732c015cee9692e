#include "nullcert/graph.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

#include "nullcert/errors.hpp"

namespace nullcert {

Graph::Graph(int n, std::vector<std::pair<int, int>> edges) : n_(n) {
    if (n < 0) throw structural_error("negative vertex count");
    std::set<std::pair<int, int>> seen;
    for (auto& [u, v] : edges) {
        if (u > v) std::swap(u, v);
        if (u == v) throw structural_error("loop at vertex " + std::to_string(u));
        if (u < 1 || v > n)
            throw structural_error("edge endpoint out of range [1," + std::to_string(n) + "]");
        if (!seen.insert({u, v}).second)
            throw structural_error("duplicate edge {" + std::to_string(u) + "," +
                                   std::to_string(v) + "}");
    }
    edges_.assign(seen.begin(), seen.end());
    adj_.assign(static_cast<std::size_t>(n) + 1, {});
    for (const auto& [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& a : adj_) std::sort(a.begin(), a.end());
}

namespace {

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::string cur;
    for (char ch : text) {
        if (ch == '\n') {
            lines.push_back(cur);
            cur.clear();
        } else if (ch != '\r') {
            cur.push_back(ch);
        }
    }
    lines.push_back(cur);
    return lines;
}

bool blank(const std::string& s) {
    return s.find_first_not_of(" \t") == std::string::npos;
}

std::pair<int, int> parse_edge_pair(const std::string& line, std::size_t lineno) {
    std::istringstream is(line);
    long u, v;
    std::string extra;
    if (!(is >> u >> v) || (is >> extra))
        throw parse_error("expected 'u v'", lineno);
    return {static_cast<int>(u), static_cast<int>(v)};
}

Graph build_graph(int n, const std::vector<std::pair<std::pair<int, int>, std::size_t>>& raw) {
    std::set<std::pair<int, int>> seen;
    std::vector<std::pair<int, int>> edges;
    for (auto [e, lineno] : raw) {
        auto [u, v] = e;
        if (u > v) std::swap(u, v);
        if (u == v) throw parse_error("loop at vertex " + std::to_string(u), lineno);
        if (u < 1 || v > n) throw parse_error("vertex out of range", lineno);
        if (!seen.insert({u, v}).second) throw parse_error("duplicate edge", lineno);
        edges.push_back({u, v});
    }
    return Graph(n, std::move(edges));
}

} // namespace

Graph Graph::parse_edge_list(const std::string& text) {
    auto lines = split_lines(text);
    std::size_t i = 0;
    while (i < lines.size() && blank(lines[i])) ++i;
    if (i == lines.size()) throw parse_error("missing 'n m' header");
    long n, m;
    {
        std::istringstream is(lines[i]);
        std::string extra;
        if (!(is >> n >> m) || (is >> extra) || n < 0 || m < 0)
            throw parse_error("expected 'n m' header", i + 1);
    }
    std::vector<std::pair<std::pair<int, int>, std::size_t>> raw;
    for (++i; i < lines.size(); ++i) {
        if (blank(lines[i])) continue;
        raw.push_back({parse_edge_pair(lines[i], i + 1), i + 1});
    }
    if (static_cast<long>(raw.size()) != m)
        throw parse_error("header promises " + std::to_string(m) + " edges, found " +
                          std::to_string(raw.size()));
    return build_graph(static_cast<int>(n), raw);
}

Graph Graph::parse_dimacs(const std::string& text) {
    auto lines = split_lines(text);
    long n = -1, m = -1;
    std::vector<std::pair<std::pair<int, int>, std::size_t>> raw;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const std::string& line = lines[i];
        if (blank(line)) continue;
        std::istringstream is(line);
        std::string tag;
        is >> tag;
        if (tag == "c") continue;
        if (tag == "p") {
            if (n >= 0) throw parse_error("duplicate problem line", i + 1);
            std::string fmt;
            std::string extra;
            if (!(is >> fmt >> n >> m) || (is >> extra) || fmt != "edge" || n < 0 || m < 0)
                throw parse_error("expected 'p edge n m'", i + 1);
        } else if (tag == "e") {
            if (n < 0) throw parse_error("edge before problem line", i + 1);
            long u, v;
            std::string extra;
            if (!(is >> u >> v) || (is >> extra))
                throw parse_error("expected 'e u v'", i + 1);
            raw.push_back({{static_cast<int>(u), static_cast<int>(v)}, i + 1});
        } else {
            throw parse_error("unknown line tag '" + tag + "'", i + 1);
        }
    }
    if (n < 0) throw parse_error("missing problem line");
    if (static_cast<long>(raw.size()) != m)
        throw parse_error("problem line promises " + std::to_string(m) + " edges, found " +
                          std::to_string(raw.size()));
    return build_graph(static_cast<int>(n), raw);
}

std::string Graph::to_edge_list() const {
    std::ostringstream os;
    os << n_ << " " << edges_.size() << "\n";
    for (const auto& [u, v] : edges_) os << u << " " << v << "\n";
    return os.str();
}

void Graph::check_vertex(int v) const {
    if (v < 1 || v > n_)
        throw structural_error("vertex " + std::to_string(v) + " out of range [1," +
                               std::to_string(n_) + "]");
}

const std::vector<int>& Graph::neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
}

bool Graph::has_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    return std::binary_search(edges_.begin(), edges_.end(), std::make_pair(u, v));
}

std::optional<int> Graph::edge_index(int u, int v) const {
    if (u > v) std::swap(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), std::make_pair(u, v));
    if (it == edges_.end() || *it != std::make_pair(u, v)) return std::nullopt;
    return static_cast<int>(it - edges_.begin());
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 1; v <= n_; ++v) d = std::max(d, degree(v));
    return d;
}

std::optional<Bipartition> bipartition(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> color(static_cast<std::size_t>(n) + 1, -1);
    for (int root = 1; root <= n; ++root) {
        if (color[root] != -1) continue;
        color[root] = 0;
        std::deque<int> queue{root};
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (int w : g.neighbors(u)) {
                if (color[w] == -1) {
                    color[w] = 1 - color[u];
                    queue.push_back(w);
                } else if (color[w] == color[u]) {
                    return std::nullopt;
                }
            }
        }
    }
    Bipartition bp;
    for (int v = 1; v <= n; ++v)
        (color[v] == 0 ? bp.class_a : bp.class_b).push_back(v);
    return bp;
}

LineGraphResult line_graph(const Graph& g) {
    const auto& edges = g.edges();
    const int k = static_cast<int>(edges.size());
    std::vector<std::pair<int, int>> ledges;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            const auto& [a, b] = edges[i];
            const auto& [c, d] = edges[j];
            if (a == c || a == d || b == c || b == d) ledges.push_back({i + 1, j + 1});
        }
    return {Graph(k, std::move(ledges)), edges};
}

} // namespace nullcert
