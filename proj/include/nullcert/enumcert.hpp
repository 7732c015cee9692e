#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nullcert/nulla.hpp"

namespace nullcert {

// Family members of the oracle for a system, paired with their square-free
// indicator monomials, both in canonical monomial order. The empty member
// maps to the constant monomial 1.
struct StructureBasis {
    StructureFamily family;
    std::vector<std::vector<int>> members;   // indicator positions, sorted
    std::vector<Monomial> monomials;         // aligned with members
};

// Oracle family matching the system's indicator semantics: independent
// sets for vertex-cover subset form, cage-free subgraphs for edge-cover
// subset form, matchings for both matching encodings, and so on.
StructureBasis structure_monomial_basis(const PolySystem& s,
                                        const OracleGuards& guards = {});

// Inverse of the cardinality form over the structure basis: the unique
// beta_1 in the span of the basis monomials with f_1 * beta_1 = 1 under
// the reduction y_i * y_b -> y_{b+i} (or y_b, or 0). Solved triangularly
// by member size; every coefficient comes out nonzero. Refuses families
// that are not subset closed and cardinalities within reach (feasible
// systems).
Polynomial invert_cardinality_form(const PolySystem& s, const StructureBasis& basis);

// Extends beta_1 to a full certificate by expressing f_1*beta_1 - 1 over
// the remaining equations: exact rewrite passes (Boolean squares, monomial
// obstructions, odd-cycle reductions for 2-coloring and K_2-homomorphism
// systems) plus a linear solve at ascending multiplier degree for anything
// left. The result is verified exactly before it is returned.
Certificate complete_certificate(const PolySystem& s, const Polynomial& beta1,
                                 unsigned degree_bound, const NullaOptions& opts = {});

// Rewrites a certificate of the cardinality-style matching system into one
// for the vertex-equation system of the same graph, via the per-edge
// expansion of x_e^2 - x_e at the smaller endpoint. Verified exactly.
Certificate matching_transform(const Graph& g, const PolySystem& v2_system,
                               const Certificate& v2_cert);

// Constant certificate for the vertex-equation matching system: exists iff
// the graph is bipartite with color classes of unequal sizes; coefficients
// are -1/(|A|-|B|) on the larger class and +1/(|A|-|B|) on the smaller.
std::optional<Certificate> bipartite_degree_zero(const Graph& g);

struct AnalyzeRow {
    std::string structure;
    std::string monomial;
    Rational coefficient;
};

struct AnalyzeReport {
    StructureKind kind = StructureKind::IndependentSet;
    bool has_cardinality = false;
    std::optional<long> m;
    bool oracle_available = false;
    std::optional<std::string> refusal;
    bool feasible = false;
    bool subset_closed = false;
    std::optional<SubsetClosedWitness> witness;
    bool downgraded = false;             // enumerative construction not applicable
    std::size_t family_size = 0;
    std::size_t max_structure = 0;
    std::size_t support_size = 0;
    bool support_match = false;
    bool common_sign = false;
    int observed_sign = 0;
    std::vector<AnalyzeRow> rows;
    std::optional<unsigned> enum_degree;
    bool complete_verified = false;
    std::optional<unsigned> nulla_degree;
    bool degree_match = false;
    bool bipartite_fast_path = false;
    std::optional<bool> kreg_edge_condition;  // k-regular diagnostic
    SolveReport nulla_report;
};

// Full pipeline behind the analyze command: oracle, inversion, completion,
// degree-ascent solve, and the comparison verdicts.
AnalyzeReport run_analysis(const PolySystem& s,
                           std::optional<unsigned> degree_bound = std::nullopt,
                           const OracleGuards& guards = {},
                           const NullaOptions& opts = {});

} // namespace nullcert
