#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nullcert/oracles.hpp"
#include "nullcert/errors.hpp"
#include "support/graph_gen.hpp"

using namespace nullcert;
using namespace nullcert::testsupport;

namespace {

std::set<std::vector<int>> members_of(const StructureFamily& f) { return f.members; }

std::set<std::vector<int>> sets(std::initializer_list<std::vector<int>> list) {
    return {list.begin(), list.end()};
}

} // namespace

TEST_CASE("independent sets") {
    CHECK(members_of(enum_independent_sets(complete(3))) ==
          sets({{}, {0}, {1}, {2}}));
    CHECK(members_of(enum_independent_sets(complete(2))) == sets({{}, {0}, {1}}));
    CHECK(members_of(enum_independent_sets(edgeless(2))) ==
          sets({{}, {0}, {1}, {0, 1}}));
}

TEST_CASE("matchings") {
    CHECK(members_of(enum_matchings(complete(3))) == sets({{}, {0}, {1}, {2}}));
    CHECK(members_of(enum_matchings(path(3))) == sets({{}, {0}, {1}}));
    CHECK(enum_matchings(complete(4)).members.size() == 10);
}

TEST_CASE("k-colorable subgraphs") {
    auto f = enum_k_colorable_subgraphs(complete(3), 2);
    CHECK(f.members.size() == 7);          // everything except the full triangle
    CHECK(!f.contains({0, 1, 2}));
    // k >= chi(G): every edge subset qualifies.
    CHECK(enum_k_colorable_subgraphs(complete(3), 3).members.size() == 8);
    CHECK(members_of(enum_k_colorable_subgraphs(complete(2), 1)) == sets({{}}));
}

TEST_CASE("homomorphic subgraphs") {
    // H = K2: exactly the bipartite edge subsets.
    for (const Graph& g : {complete(3), path(3), cycle(4)}) {
        auto hom = enum_homomorphic_subgraphs(g, complete(2));
        auto bip = enum_k_colorable_subgraphs(g, 2);
        CHECK(hom.members == bip.members);
    }
    // H = K_k matches k-colorable in general.
    CHECK(enum_homomorphic_subgraphs(complete(4), complete(3)).members ==
          enum_k_colorable_subgraphs(complete(4), 3).members);
    // Loop-free single vertex can host no edge.
    CHECK(members_of(enum_homomorphic_subgraphs(complete(2), edgeless(1))) ==
          sets({{}}));
}

TEST_CASE("regular subgraphs") {
    CHECK(members_of(enum_regular_subgraphs(complete(3))) == sets({{}, {0, 1, 2}}));
    CHECK(members_of(enum_regular_subgraphs(path(3))) == sets({{}}));
    CHECK(members_of(enum_regular_subgraphs(complete(2))) == sets({{}, {0}}));
}

TEST_CASE("k-regular subgraphs") {
    CHECK(members_of(enum_k_regular_subgraphs(complete(3), 2)) ==
          sets({{}, {0, 1, 2}}));
    CHECK(enum_k_regular_subgraphs(complete(3), 1).members ==
          enum_matchings(complete(3)).members);
    auto k4 = enum_k_regular_subgraphs(complete(4), 3);
    CHECK(k4.members.size() == 2);
    CHECK(k4.contains({0, 1, 2, 3, 4, 5}));
}

TEST_CASE("1-regular subgraphs are exactly the matchings") {
    for (int n = 1; n <= 5; ++n)
        for (const Graph& g : iso_classes(n))
            CHECK(enum_k_regular_subgraphs(g, 1).members == enum_matchings(g).members);
}

TEST_CASE("vertex covers") {
    CHECK(members_of(enum_vertex_covers(complete(2))) == sets({{0}, {1}, {0, 1}}));
    auto k3 = enum_vertex_covers(complete(3));
    CHECK(k3.members.size() == 4);   // the three pairs and the full set
    for (const auto& m : k3.members) CHECK(m.size() >= 2);
}

TEST_CASE("edge covers") {
    CHECK(members_of(enum_edge_covers(path(3))) == sets({{0, 1}}));
    // Isolated vertex: no cover exists.
    Graph lonely(3, {{1, 2}});
    CHECK(enum_edge_covers(lonely).members.empty());
}

TEST_CASE("cage-free subgraphs") {
    CHECK(members_of(enum_cagefree_subgraphs(complete(2))) == sets({{}}));
    CHECK(members_of(enum_cagefree_subgraphs(path(3))) == sets({{}}));
    CHECK(members_of(enum_cagefree_subgraphs(complete(3))) ==
          sets({{}, {0}, {1}, {2}}));
}

TEST_CASE("subset closure") {
    for (int n = 1; n <= 5; ++n)
        for (const Graph& g : iso_classes(n))
            CHECK(is_subset_closed(enum_independent_sets(g)).closed);

    auto reg = is_subset_closed(enum_regular_subgraphs(complete(3)));
    CHECK(!reg.closed);
    REQUIRE(reg.witness.has_value());
    CHECK(reg.witness->member == std::vector<int>{0, 1, 2});
    CHECK(reg.witness->subset.size() == 2);

    StructureFamily trivial;
    trivial.ground_size = 2;
    trivial.labels = {"a", "b"};
    trivial.members.insert(std::vector<int>{});
    CHECK(is_subset_closed(trivial).closed);
}

TEST_CASE("max structure size") {
    CHECK(max_structure_size(enum_independent_sets(complete(3))) == 1);
    CHECK(max_structure_size(enum_matchings(complete(5))) == 2);
    CHECK(max_structure_size(enum_cagefree_subgraphs(complete(3))) == 1);
    StructureFamily empty;
    CHECK_THROWS_AS(max_structure_size(empty), structural_error);
}

TEST_CASE("vertex covers complement independent sets") {
    for (int n = 1; n <= 5; ++n)
        for (const Graph& g : iso_classes(n)) {
            auto covers = enum_vertex_covers(g);
            auto indep = enum_independent_sets(g);
            std::set<std::vector<int>> complements;
            for (const auto& c : covers.members) {
                std::vector<int> rest;
                for (int v = 0; v < n; ++v)
                    if (!std::binary_search(c.begin(), c.end(), v)) rest.push_back(v);
                complements.insert(rest);
            }
            CHECK(complements == indep.members);
        }
}

TEST_CASE("guards refuse oversized instances with the limit in the message") {
    OracleGuards tight;
    tight.max_vertices = 3;
    tight.max_edges = 2;
    CHECK_THROWS_WITH_AS(enum_independent_sets(complete(4), tight),
                         doctest::Contains("guard 3"), guard_refusal);
    CHECK_THROWS_WITH_AS(enum_matchings(complete(3), tight),
                         doctest::Contains("guard 2"), guard_refusal);
}
