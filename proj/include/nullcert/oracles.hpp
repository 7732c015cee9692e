#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "nullcert/graph.hpp"

namespace nullcert {

enum class StructureKind {
    IndependentSet,
    Matching,
    KColorableSubgraph,
    HomomorphicSubgraph,
    RegularSpanningSubgraph,
    KRegularSubgraph,
    VertexCover,
    EdgeCover,
    CageFreeSubgraph,
    EdgeChromaticSubgraph,
};

std::string kind_name(StructureKind kind);
std::optional<StructureKind> kind_from_name(const std::string& name);

// Hard limits for brute-force enumeration; exceeding one raises
// guard_refusal naming the limit.
struct OracleGuards {
    int max_vertices = 20;
    int max_edges = 20;
};

// Explicit family of subsets of a ground set of indicator objects
// (vertices or edges of a graph, in canonical order). Members are sorted
// 0-based index vectors.
struct StructureFamily {
    std::size_t ground_size = 0;
    std::vector<std::string> labels;       // display name per ground element
    std::set<std::vector<int>> members;

    bool contains(const std::vector<int>& member) const {
        return members.count(member) != 0;
    }
};

StructureFamily enum_independent_sets(const Graph& g, const OracleGuards& guards = {});
StructureFamily enum_matchings(const Graph& g, const OracleGuards& guards = {});
StructureFamily enum_k_colorable_subgraphs(const Graph& g, int k,
                                           const OracleGuards& guards = {});
StructureFamily enum_homomorphic_subgraphs(const Graph& g, const Graph& h,
                                           const OracleGuards& guards = {});
StructureFamily enum_regular_subgraphs(const Graph& g, const OracleGuards& guards = {});
StructureFamily enum_k_regular_subgraphs(const Graph& g, int k,
                                         const OracleGuards& guards = {});
StructureFamily enum_vertex_covers(const Graph& g, const OracleGuards& guards = {});
StructureFamily enum_edge_covers(const Graph& g, const OracleGuards& guards = {});
StructureFamily enum_cagefree_subgraphs(const Graph& g, const OracleGuards& guards = {});

struct SubsetClosedWitness {
    std::vector<int> member;     // in the family
    std::vector<int> subset;     // of member, missing from the family
};

struct SubsetClosedResult {
    bool closed = false;
    std::optional<SubsetClosedWitness> witness;  // set when not closed and a pair exists
};

// True iff the empty set belongs to the family and the family is downward
// closed.
SubsetClosedResult is_subset_closed(const StructureFamily& f);

std::size_t max_structure_size(const StructureFamily& f);

} // namespace nullcert
