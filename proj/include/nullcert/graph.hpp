#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace nullcert {

// Finite simple graph, vertices 1..n, edges stored as sorted pairs (u < v)
// in lexicographic order. Immutable after construction.
class Graph {
public:
    Graph() = default;
    Graph(int n, std::vector<std::pair<int, int>> edges);

    // "n m" header then m lines "u v".
    static Graph parse_edge_list(const std::string& text);
    // DIMACS: "c" comments, one "p edge n m" line, edge lines "e u v".
    static Graph parse_dimacs(const std::string& text);

    // Inverse of parse_edge_list; edges sorted lexicographically.
    std::string to_edge_list() const;

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    const std::vector<int>& neighbors(int v) const;
    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
    bool has_edge(int u, int v) const;

    // Position of {u,v} in the canonical edge order, if present.
    std::optional<int> edge_index(int u, int v) const;

    int max_degree() const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    void check_vertex(int v) const;

    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
};

struct Bipartition {
    std::vector<int> class_a;
    std::vector<int> class_b;
};

// Two-coloring by BFS, component roots (smallest unvisited vertex) colored
// A; nullopt when an odd cycle exists. Deterministic in the vertex numbering.
std::optional<Bipartition> bipartition(const Graph& g);

struct LineGraphResult {
    Graph graph;                                // vertex i+1 <-> edges()[i]
    std::vector<std::pair<int, int>> vertex_edges;
};

// L(G): vertices are edges of G, adjacent iff they share an endpoint.
LineGraphResult line_graph(const Graph& g);

} // namespace nullcert
