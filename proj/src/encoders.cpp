#include "nullcert/encoders.hpp"

#include <memory>

#include "nullcert/errors.hpp"

namespace nullcert {

namespace {

std::string edge_name(const std::string& prefix, int u, int v) {
    return prefix + std::to_string(u) + "_" + std::to_string(v);
}

struct SystemBuilder {
    std::shared_ptr<VariableTable> table = std::make_shared<VariableTable>();
    std::vector<Polynomial> polys;
    std::vector<EquationInfo> info;

    VarId add_var(const std::string& name, VarRole role) { return table->add(name, role); }

    std::vector<VarId> add_vertex_vars(const Graph& g, const std::string& prefix,
                                       VarRole role) {
        std::vector<VarId> ids;
        for (int v = 1; v <= g.vertex_count(); ++v)
            ids.push_back(add_var(prefix + std::to_string(v), role));
        return ids;
    }

    std::vector<VarId> add_edge_vars(const Graph& g, const std::string& prefix,
                                     VarRole role) {
        std::vector<VarId> ids;
        for (const auto& [u, v] : g.edges())
            ids.push_back(add_var(edge_name(prefix, u, v), role));
        return ids;
    }

    void push(Polynomial p, EquationInfo i) {
        polys.push_back(std::move(p));
        info.push_back(i);
    }

    PolySystem finish(StructureKind kind, EncodingParams params,
                      std::vector<VarId> indicators,
                      std::optional<std::size_t> card_index, std::optional<long> m) {
        PolySystem s;
        s.table = table;
        s.polys = std::move(polys);
        s.eq_info = std::move(info);
        s.cardinality_index = card_index;
        s.m = m;
        s.kind = kind;
        s.params = std::move(params);
        s.indicator_ids = std::move(indicators);
        s.validate();
        return s;
    }

    Polynomial var(VarId v) const { return Polynomial::variable(table, v); }
    Polynomial constant(Rational c) const { return Polynomial::constant(table, c); }
    Polynomial zero() const { return Polynomial::zero(table); }

    Polynomial boolean_square(VarId v) const {
        Polynomial p = zero();
        p.add_term(Monomial::variable(v, 2), Rational(1));
        p.add_term(Monomial::variable(v), Rational(-1));
        return p;
    }

    Polynomial cardinality(const std::vector<VarId>& indicators, long m) const {
        Polynomial p = constant(Rational(-m));
        for (VarId v : indicators) p.add_term(Monomial::variable(v), Rational(1));
        return p;
    }

    void push_booleans(const std::vector<VarId>& ids) {
        for (VarId v : ids)
            push(boolean_square(v), {EquationRole::BooleanSquare, static_cast<int>(v)});
    }
};

void require_nonnegative(long m, const char* what) {
    if (m < 0) throw structural_error(std::string(what) + ": m must be nonnegative");
}

} // namespace

const Polynomial& PolySystem::cardinality_poly() const {
    if (!cardinality_index)
        throw structural_error("system has no cardinality equation");
    return polys[*cardinality_index];
}

void PolySystem::validate() const {
    if (!eq_info.empty() && eq_info.size() != polys.size())
        throw structural_error("equation info out of step with polynomials");
    for (VarId v : indicator_ids)
        if (table->role(v) != VarRole::Indicator)
            throw structural_error("indicator id without indicator role");
    if (cardinality_index) {
        if (*cardinality_index >= polys.size())
            throw structural_error("cardinality index out of range");
        if (!m) throw structural_error("cardinality equation without m");
        Polynomial expect = Polynomial::constant(table, Rational(-*m));
        for (VarId v : indicator_ids)
            expect.add_term(Monomial::variable(v), Rational(1));
        if (polys[*cardinality_index] != expect)
            throw structural_error("cardinality equation is not -m + sum of indicators");
    }
}

PolySystem encode_independent_set(const Graph& g, long m) {
    require_nonnegative(m, "encode_independent_set");
    SystemBuilder b;
    auto xs = b.add_vertex_vars(g, "x", VarRole::Indicator);
    b.push_booleans(xs);
    for (const auto& [u, v] : g.edges()) {
        Polynomial p = b.zero();
        p.add_term(Monomial::from_pairs({{xs[u - 1], 1}, {xs[v - 1], 1}}), Rational(1));
        b.push(std::move(p), {EquationRole::EdgeMonomial, u, v});
    }
    std::size_t card = b.polys.size();
    b.push(b.cardinality(xs, m), {EquationRole::Cardinality});
    EncodingParams params;
    params.m = m;
    params.graph = g;
    return b.finish(StructureKind::IndependentSet, std::move(params), xs, card, m);
}

PolySystem encode_k_colorable_subgraph(const Graph& g, int k, long m) {
    if (k < 1) throw structural_error("encode_k_colorable_subgraph: k must be >= 1");
    require_nonnegative(m, "encode_k_colorable_subgraph");
    SystemBuilder b;
    auto ys = b.add_edge_vars(g, "y", VarRole::Indicator);
    auto xs = b.add_vertex_vars(g, "x", VarRole::Auxiliary);
    b.push(b.cardinality(ys, m), {EquationRole::Cardinality});
    b.push_booleans(ys);
    for (int i = 1; i <= g.vertex_count(); ++i) {
        Polynomial p = b.zero();
        p.add_term(Monomial::variable(xs[i - 1], static_cast<unsigned>(k)), Rational(1));
        p.add_term(Monomial(), Rational(-1));
        b.push(std::move(p), {EquationRole::ColorPower, i});
    }
    for (std::size_t e = 0; e < g.edges().size(); ++e) {
        auto [u, v] = g.edges()[e];
        // y_uv * (x_u^{k-1} + x_u^{k-2} x_v + ... + x_v^{k-1})
        Polynomial p = b.zero();
        for (int t = 0; t < k; ++t)
            p.add_term(Monomial::from_pairs({{ys[e], 1},
                                             {xs[u - 1], static_cast<unsigned>(k - 1 - t)},
                                             {xs[v - 1], static_cast<unsigned>(t)}}),
                       Rational(1));
        b.push(std::move(p), {EquationRole::MixedColor, u, v});
    }
    EncodingParams params;
    params.m = m;
    params.k = k;
    params.graph = g;
    return b.finish(StructureKind::KColorableSubgraph, std::move(params), ys, 0, m);
}

PolySystem encode_edge_chromatic(const Graph& g, long m) {
    require_nonnegative(m, "encode_edge_chromatic");
    const int delta = g.max_degree();
    SystemBuilder b;
    auto ys = b.add_edge_vars(g, "y", VarRole::Indicator);
    auto xs = b.add_edge_vars(g, "x", VarRole::Auxiliary);
    std::vector<VarId> svar(static_cast<std::size_t>(g.vertex_count()) + 1, 0);
    for (int i = 1; i <= g.vertex_count(); ++i)
        if (g.degree(i) >= 2)
            svar[i] = b.add_var("s" + std::to_string(i), VarRole::Auxiliary);
    b.push(b.cardinality(ys, m), {EquationRole::Cardinality});
    b.push_booleans(ys);
    for (std::size_t e = 0; e < g.edges().size(); ++e) {
        auto [u, v] = g.edges()[e];
        // y_uv (x_uv^delta - 1)
        Polynomial p = b.zero();
        p.add_term(Monomial::from_pairs({{ys[e], 1}, {xs[e], static_cast<unsigned>(delta)}}),
                   Rational(1));
        p.add_term(Monomial::variable(ys[e]), Rational(-1));
        b.push(std::move(p), {EquationRole::EdgePower, u, v});
    }
    for (int i = 1; i <= g.vertex_count(); ++i) {
        if (g.degree(i) < 2) continue;
        const auto& nb = g.neighbors(i);
        Polynomial prod = b.constant(Rational(1));
        for (std::size_t a = 0; a < nb.size(); ++a)
            for (std::size_t c = a + 1; c < nb.size(); ++c) {
                VarId xa = xs[static_cast<std::size_t>(*g.edge_index(i, nb[a]))];
                VarId xc = xs[static_cast<std::size_t>(*g.edge_index(i, nb[c]))];
                prod = prod * (b.var(xa) - b.var(xc));
            }
        Polynomial p = b.var(svar[i]) * prod - b.constant(Rational(1));
        b.push(std::move(p), {EquationRole::InverseConstraint, i});
    }
    EncodingParams params;
    params.m = m;
    params.graph = g;
    return b.finish(StructureKind::EdgeChromaticSubgraph, std::move(params), ys, 0, m);
}

PolySystem encode_graph_homomorphism(const Graph& g, const Graph& h, long m) {
    require_nonnegative(m, "encode_graph_homomorphism");
    if (h.vertex_count() < 1)
        throw structural_error("encode_graph_homomorphism: target graph has no vertices");
    SystemBuilder b;
    auto ys = b.add_edge_vars(g, "y", VarRole::Indicator);
    auto zs = b.add_vertex_vars(g, "z", VarRole::Auxiliary);
    std::vector<VarId> hx;
    for (int v = 1; v <= h.vertex_count(); ++v)
        hx.push_back(b.add_var("x" + std::to_string(v), VarRole::Auxiliary));

    // Anchor values 2^v: pairwise sums 2^v + 2^w are all distinct, so an
    // edge-assignment equation pins {z_i, z_j} to an actual edge of H.
    auto anchor_value = [](int v) {
        mpz_class val = 1;
        val <<= v;
        return Rational(val);
    };

    b.push(b.cardinality(ys, m), {EquationRole::Cardinality});
    b.push_booleans(ys);
    for (int i = 1; i <= g.vertex_count(); ++i) {
        Polynomial inc = b.zero();
        for (int j : g.neighbors(i))
            inc += b.var(ys[static_cast<std::size_t>(*g.edge_index(i, j))]);
        Polynomial prod = b.constant(Rational(1));
        for (int v = 1; v <= h.vertex_count(); ++v)
            prod = prod * (b.var(zs[i - 1]) - b.var(hx[v - 1]));
        b.push(inc * prod, {EquationRole::VertexAssignment, i});
    }
    for (std::size_t e = 0; e < g.edges().size(); ++e) {
        auto [i, j] = g.edges()[e];
        Polynomial prod = b.constant(Rational(1));
        for (const auto& [v, w] : h.edges())
            prod = prod * (b.var(zs[i - 1]) + b.var(zs[j - 1]) - b.var(hx[v - 1]) -
                           b.var(hx[w - 1]));
        b.push(b.var(ys[e]) * prod, {EquationRole::EdgeAssignment, i, j});
    }
    for (int v = 1; v <= h.vertex_count(); ++v)
        b.push(b.var(hx[v - 1]) - b.constant(anchor_value(v)), {EquationRole::Anchor, v});

    EncodingParams params;
    params.m = m;
    params.graph = g;
    params.target = h;
    return b.finish(StructureKind::HomomorphicSubgraph, std::move(params), ys, 0, m);
}

PolySystem encode_regular_spanning_subgraph(const Graph& g, long m, bool full_pairwise) {
    require_nonnegative(m, "encode_regular_spanning_subgraph");
    SystemBuilder b;
    auto ys = b.add_edge_vars(g, "y", VarRole::Indicator);
    b.push(b.cardinality(ys, m), {EquationRole::Cardinality});
    b.push_booleans(ys);
    auto incidence_sum = [&](int i) {
        Polynomial p = b.zero();
        for (int j : g.neighbors(i))
            p += b.var(ys[static_cast<std::size_t>(*g.edge_index(i, j))]);
        return p;
    };
    auto push_pair = [&](int i, int l) {
        b.push(incidence_sum(i) - incidence_sum(l), {EquationRole::DegreeEquality, i, l});
    };
    if (full_pairwise) {
        for (int i = 1; i <= g.vertex_count(); ++i)
            for (int l = i + 1; l <= g.vertex_count(); ++l) push_pair(i, l);
    } else {
        for (int i = 1; i + 1 <= g.vertex_count(); ++i) push_pair(i, i + 1);
    }
    EncodingParams params;
    params.m = m;
    params.graph = g;
    params.full_pairwise = full_pairwise;
    return b.finish(StructureKind::RegularSpanningSubgraph, std::move(params), ys, 0, m);
}

PolySystem encode_k_regular_subgraph(const Graph& g, int k, long m) {
    if (k < 1) throw structural_error("encode_k_regular_subgraph: k must be >= 1");
    require_nonnegative(m, "encode_k_regular_subgraph");
    SystemBuilder b;
    auto ys = b.add_edge_vars(g, "y", VarRole::Indicator);
    b.push(b.cardinality(ys, m), {EquationRole::Cardinality});
    b.push_booleans(ys);
    for (int i = 1; i <= g.vertex_count(); ++i) {
        Polynomial inc = b.zero();
        for (int j : g.neighbors(i))
            inc += b.var(ys[static_cast<std::size_t>(*g.edge_index(i, j))]);
        b.push(inc * (inc - b.constant(Rational(k))), {EquationRole::DegreeQuadratic, i});
    }
    EncodingParams params;
    params.m = m;
    params.k = k;
    params.graph = g;
    return b.finish(StructureKind::KRegularSubgraph, std::move(params), ys, 0, m);
}

PolySystem encode_vertex_cover(const Graph& g, long m, CoverForm form) {
    require_nonnegative(m, "encode_vertex_cover");
    if (m > g.vertex_count())
        throw structural_error("encode_vertex_cover: m exceeds vertex count");
    SystemBuilder b;
    if (form == CoverForm::Subset) {
        // Same system as independent sets of size n - m, with y-named vars.
        long mhat = g.vertex_count() - m;
        auto ys = b.add_vertex_vars(g, "y", VarRole::Indicator);
        b.push_booleans(ys);
        for (const auto& [u, v] : g.edges()) {
            Polynomial p = b.zero();
            p.add_term(Monomial::from_pairs({{ys[u - 1], 1}, {ys[v - 1], 1}}), Rational(1));
            b.push(std::move(p), {EquationRole::EdgeMonomial, u, v});
        }
        std::size_t card = b.polys.size();
        b.push(b.cardinality(ys, mhat), {EquationRole::Cardinality});
        EncodingParams params;
        params.variant = "subset";
        params.m = m;
        params.graph = g;
        return b.finish(StructureKind::VertexCover, std::move(params), ys, card, mhat);
    }
    auto xs = b.add_vertex_vars(g, "x", VarRole::Indicator);
    b.push(b.cardinality(xs, m), {EquationRole::Cardinality});
    b.push_booleans(xs);
    for (const auto& [u, v] : g.edges()) {
        Polynomial p = (b.var(xs[u - 1]) - b.constant(Rational(1))) *
                       (b.var(xs[v - 1]) - b.constant(Rational(1)));
        b.push(std::move(p), {EquationRole::CoverPairProduct, u, v});
    }
    EncodingParams params;
    params.variant = "original";
    params.m = m;
    params.graph = g;
    return b.finish(StructureKind::VertexCover, std::move(params), xs, 0, m);
}

PolySystem encode_edge_cover(const Graph& g, long m, CoverForm form) {
    require_nonnegative(m, "encode_edge_cover");
    if (m > g.edge_count())
        throw structural_error("encode_edge_cover: m exceeds edge count");
    SystemBuilder b;
    const char* prefix = form == CoverForm::Subset ? "y" : "x";
    auto es = b.add_edge_vars(g, prefix, VarRole::Indicator);
    long mhat = form == CoverForm::Subset ? g.edge_count() - m : m;
    b.push(b.cardinality(es, mhat), {EquationRole::Cardinality});
    b.push_booleans(es);
    for (int i = 1; i <= g.vertex_count(); ++i) {
        // Empty product at an isolated vertex is 1, leaving the constant
        // equation 1 = 0.
        Polynomial prod = b.constant(Rational(1));
        for (int j : g.neighbors(i)) {
            VarId ev = es[static_cast<std::size_t>(*g.edge_index(i, j))];
            if (form == CoverForm::Subset)
                prod = prod * b.var(ev);
            else
                prod = prod * (b.var(ev) - b.constant(Rational(1)));
        }
        b.push(std::move(prod),
               {form == CoverForm::Subset ? EquationRole::VertexProduct
                                          : EquationRole::CoverVertexProduct,
                i});
    }
    EncodingParams params;
    params.variant = form == CoverForm::Subset ? "subset" : "original";
    params.m = m;
    params.graph = g;
    return b.finish(StructureKind::EdgeCover, std::move(params), es, 0, mhat);
}

PolySystem encode_perfect_matching_v1(const Graph& g) {
    SystemBuilder b;
    auto xs = b.add_edge_vars(g, "x", VarRole::Indicator);
    for (int i = 1; i <= g.vertex_count(); ++i) {
        Polynomial p = b.zero();
        for (int j : g.neighbors(i))
            p += b.var(xs[static_cast<std::size_t>(*g.edge_index(i, j))]);
        p -= b.constant(Rational(1));
        b.push(std::move(p), {EquationRole::VertexLinear, i});
    }
    for (int i = 1; i <= g.vertex_count(); ++i) {
        const auto& nb = g.neighbors(i);
        for (std::size_t a = 0; a < nb.size(); ++a)
            for (std::size_t c = a + 1; c < nb.size(); ++c) {
                VarId ea = xs[static_cast<std::size_t>(*g.edge_index(i, nb[a]))];
                VarId ec = xs[static_cast<std::size_t>(*g.edge_index(i, nb[c]))];
                Polynomial p = b.zero();
                p.add_term(Monomial::from_pairs({{ea, 1}, {ec, 1}}), Rational(1));
                b.push(std::move(p), {EquationRole::IncidentPair, i, nb[a], nb[c]});
            }
    }
    EncodingParams params;
    params.variant = "v1";
    params.graph = g;
    return b.finish(StructureKind::Matching, std::move(params), xs, std::nullopt,
                    std::nullopt);
}

PolySystem encode_perfect_matching_v2(const Graph& g) {
    if (g.vertex_count() % 2 != 0)
        throw structural_error(
            "encode_perfect_matching_v2: |V| is odd, cardinality |V|/2 is not an "
            "integer; use the v1 encoding");
    SystemBuilder b;
    auto xs = b.add_edge_vars(g, "x", VarRole::Indicator);
    b.push_booleans(xs);
    for (int i = 1; i <= g.vertex_count(); ++i) {
        const auto& nb = g.neighbors(i);
        for (std::size_t a = 0; a < nb.size(); ++a)
            for (std::size_t c = a + 1; c < nb.size(); ++c) {
                VarId ea = xs[static_cast<std::size_t>(*g.edge_index(i, nb[a]))];
                VarId ec = xs[static_cast<std::size_t>(*g.edge_index(i, nb[c]))];
                Polynomial p = b.zero();
                p.add_term(Monomial::from_pairs({{ea, 1}, {ec, 1}}), Rational(1));
                b.push(std::move(p), {EquationRole::IncidentPair, i, nb[a], nb[c]});
            }
    }
    long mhat = g.vertex_count() / 2;
    std::size_t card = b.polys.size();
    b.push(b.cardinality(xs, mhat), {EquationRole::Cardinality});
    EncodingParams params;
    params.variant = "v2";
    params.graph = g;
    return b.finish(StructureKind::Matching, std::move(params), xs, card, mhat);
}

PolySystem reencode(const StructureKind& kind, const EncodingParams& params) {
    if (!params.graph) throw structural_error("reencode: params carry no graph");
    const Graph& g = *params.graph;
    switch (kind) {
        case StructureKind::IndependentSet:
            return encode_independent_set(g, params.m.value());
        case StructureKind::KColorableSubgraph:
            return encode_k_colorable_subgraph(g, params.k.value(), params.m.value());
        case StructureKind::EdgeChromaticSubgraph:
            return encode_edge_chromatic(g, params.m.value());
        case StructureKind::HomomorphicSubgraph:
            return encode_graph_homomorphism(g, params.target.value(), params.m.value());
        case StructureKind::RegularSpanningSubgraph:
            return encode_regular_spanning_subgraph(g, params.m.value(),
                                                    params.full_pairwise);
        case StructureKind::KRegularSubgraph:
            return encode_k_regular_subgraph(g, params.k.value(), params.m.value());
        case StructureKind::VertexCover:
            return encode_vertex_cover(g, params.m.value(),
                                       params.variant == "original" ? CoverForm::Original
                                                                    : CoverForm::Subset);
        case StructureKind::EdgeCover:
            return encode_edge_cover(g, params.m.value(),
                                     params.variant == "original" ? CoverForm::Original
                                                                  : CoverForm::Subset);
        case StructureKind::Matching:
            return params.variant == "v2" ? encode_perfect_matching_v2(g)
                                          : encode_perfect_matching_v1(g);
        default:
            throw structural_error("reencode: kind has no encoder");
    }
}

} // namespace nullcert
