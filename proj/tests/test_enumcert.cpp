#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nullcert/enumcert.hpp"
#include "support/graph_gen.hpp"

using namespace nullcert;
using namespace nullcert::testsupport;

TEST_CASE("structure basis: independent sets of K3") {
    PolySystem s = encode_independent_set(complete(3), 2);
    StructureBasis b = structure_monomial_basis(s);
    REQUIRE(b.monomials.size() == 4);
    CHECK(b.monomials[0] == Monomial());
    CHECK(b.monomials[1] == Monomial::variable(s.table->find("x1").value()));
    CHECK(b.monomials[2] == Monomial::variable(s.table->find("x2").value()));
    CHECK(b.monomials[3] == Monomial::variable(s.table->find("x3").value()));
}

TEST_CASE("structure basis: edge-cover subset form uses cage-free subgraphs") {
    PolySystem s = encode_edge_cover(complete(3), 1, CoverForm::Subset);
    StructureBasis b = structure_monomial_basis(s);
    CHECK(b.monomials.size() == 4);   // {} and the three single edges
    CHECK(b.members == std::vector<std::vector<int>>{{}, {0}, {1}, {2}});
}

TEST_CASE("inversion on K2 at m=2") {
    PolySystem s = encode_independent_set(complete(2), 2);
    Polynomial beta1 = invert_cardinality_form(s, structure_monomial_basis(s));
    CHECK(beta1.str() == "-1/2 + -1/2*x1 + -1/2*x2");
}

TEST_CASE("inversion on a single vertex at m=2") {
    PolySystem s = encode_independent_set(edgeless(1), 2);
    Polynomial beta1 = invert_cardinality_form(s, structure_monomial_basis(s));
    CHECK(beta1.str() == "-1/2 + -1/2*x1");
}

TEST_CASE("inversion support on K3 at m=2") {
    PolySystem s = encode_independent_set(complete(3), 2);
    StructureBasis b = structure_monomial_basis(s);
    Polynomial beta1 = invert_cardinality_form(s, b);
    CHECK(beta1.term_count() == 4);
    for (const auto& mono : b.monomials) CHECK(!beta1.coefficient(mono).is_zero());
    int sign = 0;
    for (const auto& [m, c] : beta1.terms()) {
        if (!sign) sign = c.sign();
        CHECK(c.sign() == sign);
    }
    CHECK(sign < 0);
}

TEST_CASE("inversion refuses families that are not subset closed") {
    PolySystem s = encode_regular_spanning_subgraph(complete(3), 4);
    StructureBasis b = structure_monomial_basis(s);
    CHECK_THROWS_WITH_AS(invert_cardinality_form(s, b),
                         doctest::Contains("not subset closed"), structural_error);
}

TEST_CASE("inversion refuses reachable cardinalities") {
    PolySystem s = encode_independent_set(complete(3), 1);
    StructureBasis b = structure_monomial_basis(s);
    CHECK_THROWS_WITH_AS(invert_cardinality_form(s, b),
                         doctest::Contains("feasible"), structural_error);
}

TEST_CASE("completion on K2 independent sets at m=2") {
    PolySystem s = encode_independent_set(complete(2), 2);
    Polynomial beta1 = invert_cardinality_form(s, structure_monomial_basis(s));
    Certificate cert = complete_certificate(s, beta1, 3);
    CHECK(verify_certificate(s, cert).ok);
    CHECK(cert.degree <= 1);
    CHECK(cert.betas[*s.cardinality_index] == beta1);
}

TEST_CASE("completion degree matches the ascent degree on K3 at m=2") {
    PolySystem s = encode_independent_set(complete(3), 2);
    Polynomial beta1 = invert_cardinality_form(s, structure_monomial_basis(s));
    Certificate cert = complete_certificate(s, beta1, 3);
    CHECK(cert.degree == 1);
    NullaResult res = nulla_solve(s, 2);
    REQUIRE(res.certificate.has_value());
    CHECK(res.certificate->degree == 1);
}

TEST_CASE("completion handles degree-equality relations: P3 regular at m=1") {
    PolySystem s = encode_regular_spanning_subgraph(path(3), 1);
    StructureBasis b = structure_monomial_basis(s);
    CHECK(b.members == std::vector<std::vector<int>>{{}});
    Polynomial beta1 = invert_cardinality_form(s, b);
    Certificate cert = complete_certificate(s, beta1, 3);
    CHECK(verify_certificate(s, cert).ok);
    NullaResult res = nulla_solve(s, default_degree_bound(s));
    REQUIRE(res.certificate.has_value());
    CHECK(cert.degree == res.certificate->degree);
}

TEST_CASE("completion handles odd cycles: K3 two-colorable subgraphs") {
    PolySystem s = encode_k_colorable_subgraph(complete(3), 2, 3);
    Polynomial beta1 = invert_cardinality_form(s, structure_monomial_basis(s));
    Certificate cert = complete_certificate(s, beta1, 5);
    CHECK(verify_certificate(s, cert).ok);
    CHECK(cert.betas[0] == beta1);
}

TEST_CASE("completion handles K2-homomorphism systems on odd cycles") {
    for (const Graph& g : {complete(3), cycle(5)}) {
        long m = g.edge_count();   // beyond the max bipartite subgraph
        PolySystem s = encode_graph_homomorphism(g, complete(2), m);
        Polynomial beta1 = invert_cardinality_form(s, structure_monomial_basis(s));
        Certificate cert = complete_certificate(s, beta1, 8);
        CHECK(verify_certificate(s, cert).ok);
    }
}

TEST_CASE("enumerative support and completion across subset-closed encoders") {
    OracleGuards guards;
    for (int n = 1; n <= 4; ++n)
        for (const Graph& g : iso_classes(n)) {
            std::vector<PolySystem> systems;
            {
                long mx = static_cast<long>(
                    max_structure_size(enum_independent_sets(g)));
                systems.push_back(encode_independent_set(g, mx + 1));
                systems.push_back(encode_vertex_cover(
                    g, g.vertex_count() - (mx + 1) < 0 ? 0 : g.vertex_count() - mx - 1,
                    CoverForm::Subset));
            }
            {
                auto cages = enum_cagefree_subgraphs(g);
                if (!cages.members.empty()) {
                    long mx = static_cast<long>(max_structure_size(cages));
                    if (g.edge_count() - mx - 1 >= 0)
                        systems.push_back(encode_edge_cover(
                            g, g.edge_count() - mx - 1, CoverForm::Subset));
                }
            }
            if (g.vertex_count() % 2 == 0 &&
                max_structure_size(enum_matchings(g)) <
                    static_cast<std::size_t>(g.vertex_count() / 2))
                systems.push_back(encode_perfect_matching_v2(g));
            for (const PolySystem& s : systems) {
                if (!s.m || *s.m <= 0) continue;
                StructureBasis b = structure_monomial_basis(s, guards);
                long mx = static_cast<long>(max_structure_size(b.family));
                if (*s.m <= mx) continue;   // feasible variant of the cover forms
                Polynomial beta1 = invert_cardinality_form(s, b);
                CHECK(beta1.term_count() == b.monomials.size());
                int sign = 0;
                bool common = true;
                for (const auto& [mono, c] : beta1.terms()) {
                    if (!sign) sign = c.sign();
                    if (c.sign() != sign) common = false;
                }
                CHECK(common);
                Certificate cert = complete_certificate(
                    s, beta1, static_cast<unsigned>(mx) + 3);
                CHECK(verify_certificate(s, cert).ok);
            }
        }
}

TEST_CASE("enumerative support on six-vertex spot checks") {
    Graph k33(6, {{1, 4}, {1, 5}, {1, 6}, {2, 4}, {2, 5}, {2, 6},
                  {3, 4}, {3, 5}, {3, 6}});
    for (const Graph& g : {cycle(6), complete(6), star(5), k33}) {
        long mx = static_cast<long>(max_structure_size(enum_independent_sets(g)));
        PolySystem s = encode_independent_set(g, mx + 1);
        StructureBasis b = structure_monomial_basis(s);
        Polynomial beta1 = invert_cardinality_form(s, b);
        CHECK(beta1.term_count() == b.monomials.size());
        Certificate cert = complete_certificate(s, beta1, static_cast<unsigned>(mx) + 2);
        CHECK(verify_certificate(s, cert).ok);
        CHECK(cert.degree == static_cast<unsigned>(mx));
    }
}

TEST_CASE("bipartite degree-zero certificates") {
    auto p3 = bipartite_degree_zero(path(3));
    REQUIRE(p3.has_value());
    CHECK(p3->degree == 0);
    PolySystem s = encode_perfect_matching_v1(path(3));
    CHECK(p3->betas[0] == Polynomial::constant(s.table, Rational(-1)));
    CHECK(p3->betas[1] == Polynomial::constant(s.table, Rational(1)));
    CHECK(p3->betas[2] == Polynomial::constant(s.table, Rational(-1)));

    auto star3 = bipartite_degree_zero(star(3));
    REQUIRE(star3.has_value());
    PolySystem st = encode_perfect_matching_v1(star(3));
    // Three leaves against one center: coefficients +-1/2, negative on the
    // larger class (the leaves).
    CHECK(star3->betas[0] == Polynomial::constant(st.table, Rational(1, 2)));
    CHECK(star3->betas[1] == Polynomial::constant(st.table, Rational(-1, 2)));

    CHECK(!bipartite_degree_zero(complete(3)).has_value());
    CHECK(!bipartite_degree_zero(cycle(4)).has_value());
}

TEST_CASE("matching transform on the star K_{1,3}") {
    Graph g = star(3);
    PolySystem v2 = encode_perfect_matching_v2(g);
    StructureBasis b = structure_monomial_basis(v2);
    Polynomial a = invert_cardinality_form(v2, b);
    Certificate cert2 = complete_certificate(v2, a, 4);
    REQUIRE(verify_certificate(v2, cert2).ok);

    Certificate cert1 = matching_transform(g, v2, cert2);
    PolySystem v1 = encode_perfect_matching_v1(g);
    CHECK(verify_certificate(v1, cert1).ok);

    std::size_t max_matching = max_structure_size(enum_matchings(g));
    unsigned theta_max = 0;
    unsigned delta_min = UINT32_MAX, delta_max = 0;
    for (std::size_t i = 0; i < v1.size(); ++i) {
        if (v1.eq_info[i].role == EquationRole::VertexLinear) {
            delta_min = std::min(delta_min, cert1.betas[i].degree());
            delta_max = std::max(delta_max, cert1.betas[i].degree());
            // Every matching monomial appears in every delta.
            for (const auto& member : b.members) {
                Monomial mono;
                for (int p : member)
                    mono = mono.times(Monomial::variable(
                        v1.indicator_ids[static_cast<std::size_t>(p)]));
                CHECK(!cert1.betas[i].coefficient(mono).is_zero());
            }
        } else {
            theta_max = std::max(theta_max, cert1.betas[i].degree());
        }
    }
    CHECK(delta_min == max_matching);
    CHECK(delta_max == max_matching);
    CHECK(theta_max <= delta_max);
}

TEST_CASE("run_analysis verdicts") {
    AnalyzeReport rep = run_analysis(encode_independent_set(complete(3), 2));
    CHECK(rep.support_match);
    CHECK(rep.common_sign);
    CHECK(rep.observed_sign < 0);
    CHECK(rep.complete_verified);
    CHECK(rep.enum_degree == 1);
    CHECK(rep.nulla_degree == 1);
    CHECK(rep.degree_match);

    AnalyzeReport kreg = run_analysis(encode_k_regular_subgraph(complete(3), 2, 2));
    CHECK(kreg.downgraded);
    CHECK(!kreg.subset_closed);
    CHECK(kreg.kreg_edge_condition.has_value());
    CHECK(kreg.nulla_degree.has_value());

    AnalyzeReport fea = run_analysis(encode_independent_set(complete(2), 1));
    CHECK(fea.feasible);

    AnalyzeReport fast = run_analysis(encode_perfect_matching_v1(path(3)));
    CHECK(fast.bipartite_fast_path);
    CHECK(fast.nulla_degree == 0);
}
