#include "nullcert/oracles.hpp"

#include <algorithm>
#include <functional>

#include "nullcert/errors.hpp"

namespace nullcert {

std::string kind_name(StructureKind kind) {
    switch (kind) {
        case StructureKind::IndependentSet: return "independent_set";
        case StructureKind::Matching: return "matching";
        case StructureKind::KColorableSubgraph: return "k_colorable_subgraph";
        case StructureKind::HomomorphicSubgraph: return "homomorphic_subgraph";
        case StructureKind::RegularSpanningSubgraph: return "regular_spanning_subgraph";
        case StructureKind::KRegularSubgraph: return "k_regular_subgraph";
        case StructureKind::VertexCover: return "vertex_cover";
        case StructureKind::EdgeCover: return "edge_cover";
        case StructureKind::CageFreeSubgraph: return "cage_free_subgraph";
        case StructureKind::EdgeChromaticSubgraph: return "edge_chromatic_subgraph";
    }
    throw structural_error("unknown structure kind");
}

std::optional<StructureKind> kind_from_name(const std::string& name) {
    static const std::pair<const char*, StructureKind> table[] = {
        {"independent_set", StructureKind::IndependentSet},
        {"matching", StructureKind::Matching},
        {"k_colorable_subgraph", StructureKind::KColorableSubgraph},
        {"homomorphic_subgraph", StructureKind::HomomorphicSubgraph},
        {"regular_spanning_subgraph", StructureKind::RegularSpanningSubgraph},
        {"k_regular_subgraph", StructureKind::KRegularSubgraph},
        {"vertex_cover", StructureKind::VertexCover},
        {"edge_cover", StructureKind::EdgeCover},
        {"cage_free_subgraph", StructureKind::CageFreeSubgraph},
        {"edge_chromatic_subgraph", StructureKind::EdgeChromaticSubgraph},
    };
    for (const auto& [n, k] : table)
        if (name == n) return k;
    return std::nullopt;
}

namespace {

void guard_vertices(const Graph& g, const OracleGuards& guards, const char* what) {
    // 62 is the bitmask-enumeration ceiling whatever the configured guard says.
    int limit = std::min(guards.max_vertices, 62);
    if (g.vertex_count() > limit)
        throw guard_refusal(std::string(what) + ": refusing |V| = " +
                            std::to_string(g.vertex_count()) + " > guard " +
                            std::to_string(limit));
}

void guard_edges(const Graph& g, const OracleGuards& guards, const char* what) {
    int limit = std::min(guards.max_edges, 62);
    if (g.edge_count() > limit)
        throw guard_refusal(std::string(what) + ": refusing |E| = " +
                            std::to_string(g.edge_count()) + " > guard " +
                            std::to_string(limit));
}

std::vector<std::string> vertex_labels(const Graph& g, const std::string& prefix) {
    std::vector<std::string> out;
    for (int v = 1; v <= g.vertex_count(); ++v) out.push_back(prefix + std::to_string(v));
    return out;
}

std::vector<std::string> edge_labels(const Graph& g, const std::string& prefix) {
    std::vector<std::string> out;
    for (const auto& [u, v] : g.edges())
        out.push_back(prefix + std::to_string(u) + "_" + std::to_string(v));
    return out;
}

std::vector<int> mask_to_member(unsigned long mask, int width) {
    std::vector<int> out;
    for (int i = 0; i < width; ++i)
        if (mask & (1ul << i)) out.push_back(i);
    return out;
}

// Applies `accept` to every subset of g's edges (as a bitmask).
template <typename Accept>
StructureFamily edge_subset_family(const Graph& g, const std::string& prefix,
                                   Accept accept) {
    const int e = g.edge_count();
    StructureFamily f;
    f.ground_size = static_cast<std::size_t>(e);
    f.labels = edge_labels(g, prefix);
    for (unsigned long mask = 0; mask < (1ul << e); ++mask)
        if (accept(mask)) f.members.insert(mask_to_member(mask, e));
    return f;
}

std::vector<int> subset_degrees(const Graph& g, unsigned long mask) {
    std::vector<int> deg(static_cast<std::size_t>(g.vertex_count()) + 1, 0);
    const auto& edges = g.edges();
    for (int i = 0; i < g.edge_count(); ++i)
        if (mask & (1ul << i)) {
            ++deg[edges[i].first];
            ++deg[edges[i].second];
        }
    return deg;
}

// Proper k-colorability of the subgraph formed by the masked edges,
// by backtracking over its touched vertices.
bool edge_subset_colorable(const Graph& g, unsigned long mask, int k) {
    std::vector<int> touched;
    const auto& edges = g.edges();
    for (int i = 0; i < g.edge_count(); ++i)
        if (mask & (1ul << i)) {
            touched.push_back(edges[i].first);
            touched.push_back(edges[i].second);
        }
    std::sort(touched.begin(), touched.end());
    touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
    std::vector<int> pos(static_cast<std::size_t>(g.vertex_count()) + 1, -1);
    for (std::size_t i = 0; i < touched.size(); ++i) pos[touched[i]] = static_cast<int>(i);

    std::vector<std::vector<int>> adj(touched.size());
    for (int i = 0; i < g.edge_count(); ++i)
        if (mask & (1ul << i)) {
            int a = pos[edges[i].first], b = pos[edges[i].second];
            adj[a].push_back(b);
            adj[b].push_back(a);
        }

    std::vector<int> color(touched.size(), 0);
    std::function<bool(std::size_t)> go = [&](std::size_t v) {
        if (v == touched.size()) return true;
        for (int c = 1; c <= k; ++c) {
            bool ok = true;
            for (int w : adj[v])
                if (color[w] == c) { ok = false; break; }
            if (!ok) continue;
            color[v] = c;
            if (go(v + 1)) return true;
            color[v] = 0;
        }
        return false;
    };
    return go(0);
}

// Existence of a map from the touched vertices of the masked subgraph into
// V(H) sending each masked edge to an edge of H.
bool edge_subset_homomorphic(const Graph& g, unsigned long mask, const Graph& h) {
    std::vector<int> touched;
    const auto& edges = g.edges();
    for (int i = 0; i < g.edge_count(); ++i)
        if (mask & (1ul << i)) {
            touched.push_back(edges[i].first);
            touched.push_back(edges[i].second);
        }
    std::sort(touched.begin(), touched.end());
    touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
    if (touched.empty()) return true;
    if (h.vertex_count() == 0) return false;
    std::vector<int> pos(static_cast<std::size_t>(g.vertex_count()) + 1, -1);
    for (std::size_t i = 0; i < touched.size(); ++i) pos[touched[i]] = static_cast<int>(i);

    std::vector<std::vector<int>> adj(touched.size());
    for (int i = 0; i < g.edge_count(); ++i)
        if (mask & (1ul << i)) {
            int a = pos[edges[i].first], b = pos[edges[i].second];
            adj[a].push_back(b);
            adj[b].push_back(a);
        }

    std::vector<int> image(touched.size(), 0);
    std::function<bool(std::size_t)> go = [&](std::size_t v) {
        if (v == touched.size()) return true;
        for (int hv = 1; hv <= h.vertex_count(); ++hv) {
            bool ok = true;
            for (int w : adj[v])
                if (image[w] != 0 && !h.has_edge(hv, image[w])) { ok = false; break; }
            if (!ok) continue;
            image[v] = hv;
            if (go(v + 1)) return true;
            image[v] = 0;
        }
        return false;
    };
    return go(0);
}

} // namespace

StructureFamily enum_independent_sets(const Graph& g, const OracleGuards& guards) {
    guard_vertices(g, guards, "enum_independent_sets");
    const int n = g.vertex_count();
    std::vector<unsigned long> adj(static_cast<std::size_t>(n) + 1, 0);
    for (const auto& [u, v] : g.edges()) {
        adj[u] |= 1ul << (v - 1);
        adj[v] |= 1ul << (u - 1);
    }
    StructureFamily f;
    f.ground_size = static_cast<std::size_t>(n);
    f.labels = vertex_labels(g, "x");
    for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
        bool ok = true;
        for (int v = 1; v <= n && ok; ++v)
            if ((mask & (1ul << (v - 1))) && (adj[v] & mask)) ok = false;
        if (ok) f.members.insert(mask_to_member(mask, n));
    }
    return f;
}

StructureFamily enum_matchings(const Graph& g, const OracleGuards& guards) {
    guard_edges(g, guards, "enum_matchings");
    return edge_subset_family(g, "x", [&](unsigned long mask) {
        auto deg = subset_degrees(g, mask);
        return std::all_of(deg.begin(), deg.end(), [](int d) { return d <= 1; });
    });
}

StructureFamily enum_k_colorable_subgraphs(const Graph& g, int k,
                                           const OracleGuards& guards) {
    if (k < 1) throw structural_error("k must be at least 1");
    guard_edges(g, guards, "enum_k_colorable_subgraphs");
    return edge_subset_family(
        g, "y", [&](unsigned long mask) { return edge_subset_colorable(g, mask, k); });
}

StructureFamily enum_homomorphic_subgraphs(const Graph& g, const Graph& h,
                                           const OracleGuards& guards) {
    guard_edges(g, guards, "enum_homomorphic_subgraphs");
    guard_vertices(h, guards, "enum_homomorphic_subgraphs (target)");
    return edge_subset_family(
        g, "y", [&](unsigned long mask) { return edge_subset_homomorphic(g, mask, h); });
}

StructureFamily enum_regular_subgraphs(const Graph& g, const OracleGuards& guards) {
    guard_edges(g, guards, "enum_regular_subgraphs");
    return edge_subset_family(g, "y", [&](unsigned long mask) {
        auto deg = subset_degrees(g, mask);
        for (int v = 2; v <= g.vertex_count(); ++v)
            if (deg[v] != deg[1]) return false;
        return true;
    });
}

StructureFamily enum_k_regular_subgraphs(const Graph& g, int k,
                                         const OracleGuards& guards) {
    if (k < 1) throw structural_error("k must be at least 1");
    guard_edges(g, guards, "enum_k_regular_subgraphs");
    return edge_subset_family(g, "y", [&](unsigned long mask) {
        auto deg = subset_degrees(g, mask);
        for (int v = 1; v <= g.vertex_count(); ++v)
            if (deg[v] != 0 && deg[v] != k) return false;
        return true;
    });
}

StructureFamily enum_vertex_covers(const Graph& g, const OracleGuards& guards) {
    guard_vertices(g, guards, "enum_vertex_covers");
    const int n = g.vertex_count();
    StructureFamily f;
    f.ground_size = static_cast<std::size_t>(n);
    f.labels = vertex_labels(g, "x");
    for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
        bool ok = true;
        for (const auto& [u, v] : g.edges())
            if (!(mask & (1ul << (u - 1))) && !(mask & (1ul << (v - 1)))) {
                ok = false;
                break;
            }
        if (ok) f.members.insert(mask_to_member(mask, n));
    }
    return f;
}

StructureFamily enum_edge_covers(const Graph& g, const OracleGuards& guards) {
    guard_edges(g, guards, "enum_edge_covers");
    return edge_subset_family(g, "x", [&](unsigned long mask) {
        auto deg = subset_degrees(g, mask);
        for (int v = 1; v <= g.vertex_count(); ++v)
            if (deg[v] == 0) return false;
        return true;
    });
}

StructureFamily enum_cagefree_subgraphs(const Graph& g, const OracleGuards& guards) {
    guard_edges(g, guards, "enum_cagefree_subgraphs");
    const int e = g.edge_count();
    // Edge mask incident to each vertex; a subgraph cages v when it
    // contains the whole mask (vacuously for isolated v).
    std::vector<unsigned long> at(static_cast<std::size_t>(g.vertex_count()) + 1, 0);
    for (int i = 0; i < e; ++i) {
        at[g.edges()[i].first] |= 1ul << i;
        at[g.edges()[i].second] |= 1ul << i;
    }
    return edge_subset_family(g, "y", [&](unsigned long mask) {
        for (int v = 1; v <= g.vertex_count(); ++v)
            if ((mask & at[v]) == at[v]) return false;
        return true;
    });
}

SubsetClosedResult is_subset_closed(const StructureFamily& f) {
    if (!f.contains({})) {
        SubsetClosedResult r;
        r.closed = false;
        if (!f.members.empty())
            r.witness = SubsetClosedWitness{*f.members.begin(), {}};
        return r;
    }
    for (const auto& member : f.members) {
        for (std::size_t i = 0; i < member.size(); ++i) {
            std::vector<int> sub = member;
            sub.erase(sub.begin() + static_cast<long>(i));
            if (!f.contains(sub))
                return {false, SubsetClosedWitness{member, sub}};
        }
    }
    return {true, std::nullopt};
}

std::size_t max_structure_size(const StructureFamily& f) {
    if (f.members.empty()) throw structural_error("max_structure_size of empty family");
    std::size_t best = 0;
    for (const auto& m : f.members) best = std::max(best, m.size());
    return best;
}

} // namespace nullcert
