#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nullcert/graph.hpp"
#include "nullcert/oracles.hpp"
#include "nullcert/polynomial.hpp"

namespace nullcert {

// Structural role of one equation in an encoded system, with the graph
// objects it came from. Positions are pinned per encoder, so roles can be
// rebuilt from the encoding inputs.
enum class EquationRole {
    Cardinality,        // -m + sum of indicator variables
    BooleanSquare,      // v^2 - v                          a = indicator var id
    EdgeMonomial,       // y_u y_v                          a,b = endpoints
    CoverPairProduct,   // (x_u - 1)(x_v - 1)               a,b = endpoints
    VertexProduct,      // prod_{j in N(i)} y_ij            a = vertex
    CoverVertexProduct, // prod_{j in N(i)} (x_ij - 1)      a = vertex
    IncidentPair,       // x_ij x_ik                        a = shared vertex, b,c = others
    ColorPower,         // x_i^k - 1                        a = vertex
    EdgePower,          // y_ij (x_ij^D - 1)                a,b = endpoints
    MixedColor,         // y_ij (x_i^{k-1} + ... + x_j^{k-1})  a,b = endpoints
    InverseConstraint,  // s_i prod_{j<k in N(i)} (x_ij - x_ik) - 1   a = vertex
    VertexAssignment,   // (sum_{j in N(i)} y_ij) prod_v (z_i - x_v)  a = vertex
    EdgeAssignment,     // y_ij prod_{vw in E(H)} (z_i + z_j - x_v - x_w)  a,b = endpoints
    Anchor,             // x_v - 2^v                        a = H-vertex
    DegreeEquality,     // sum_{N(i)} y - sum_{N(l)} y      a = i, b = l
    DegreeQuadratic,    // (sum_{N(i)} y)(sum_{N(i)} y - k) a = vertex
    VertexLinear,       // sum_{j in N(i)} x_ij - 1         a = vertex
};

struct EquationInfo {
    EquationRole role;
    int a = 0;
    int b = 0;
    int c = 0;
};

enum class CoverForm { Subset, Original };

// Inputs that produced a system; enough to re-encode it.
struct EncodingParams {
    std::string variant;          // "", "v1", "v2", "subset", "original"
    std::optional<long> m;        // user-facing size parameter
    std::optional<int> k;
    std::optional<Graph> graph;
    std::optional<Graph> target;  // H for homomorphism systems
    bool full_pairwise = false;
};

struct PolySystem {
    TablePtr table;
    std::vector<Polynomial> polys;
    std::vector<EquationInfo> eq_info;       // aligned with polys; may be empty
    std::optional<std::size_t> cardinality_index;
    std::optional<long> m;                   // constant of the -m + sum(y) equation
    StructureKind kind = StructureKind::IndependentSet;
    EncodingParams params;
    std::vector<VarId> indicator_ids;

    std::size_t size() const { return polys.size(); }
    const Polynomial& cardinality_poly() const;

    // Enforces the structural invariants (cardinality form, roles).
    void validate() const;
};

PolySystem encode_independent_set(const Graph& g, long m);
PolySystem encode_k_colorable_subgraph(const Graph& g, int k, long m);
PolySystem encode_edge_chromatic(const Graph& g, long m);
PolySystem encode_graph_homomorphism(const Graph& g, const Graph& h, long m);
PolySystem encode_regular_spanning_subgraph(const Graph& g, long m,
                                            bool full_pairwise = false);
PolySystem encode_k_regular_subgraph(const Graph& g, int k, long m);
PolySystem encode_vertex_cover(const Graph& g, long m, CoverForm form);
PolySystem encode_edge_cover(const Graph& g, long m, CoverForm form);
PolySystem encode_perfect_matching_v1(const Graph& g);
PolySystem encode_perfect_matching_v2(const Graph& g);

// Re-runs the encoder recorded in params. Used to restore equation roles
// after deserialization.
PolySystem reencode(const StructureKind& kind, const EncodingParams& params);

} // namespace nullcert
