#include "nullcert/enumcert.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "nullcert/errors.hpp"

namespace nullcert {

namespace {

std::string member_text(const StructureFamily& family, const std::vector<int>& member) {
    if (member.empty()) return "{}";
    std::string out;
    for (std::size_t i = 0; i < member.size(); ++i) {
        if (i) out += " ";
        out += family.labels[static_cast<std::size_t>(member[i])];
    }
    return out;
}

StructureFamily family_for_system(const PolySystem& s, const OracleGuards& guards) {
    if (!s.params.graph)
        throw structural_error("system carries no source graph; cannot run oracle");
    const Graph& g = *s.params.graph;
    switch (s.kind) {
        case StructureKind::IndependentSet:
            return enum_independent_sets(g, guards);
        case StructureKind::Matching:
            return enum_matchings(g, guards);
        case StructureKind::KColorableSubgraph:
            return enum_k_colorable_subgraphs(g, s.params.k.value(), guards);
        case StructureKind::HomomorphicSubgraph:
            return enum_homomorphic_subgraphs(g, s.params.target.value(), guards);
        case StructureKind::RegularSpanningSubgraph:
            return enum_regular_subgraphs(g, guards);
        case StructureKind::KRegularSubgraph:
            return enum_k_regular_subgraphs(g, s.params.k.value(), guards);
        case StructureKind::VertexCover:
            // Subset form indicators mark vertices outside the cover, so the
            // family is the independent sets; the original form counts the
            // covers themselves.
            return s.params.variant == "original" ? enum_vertex_covers(g, guards)
                                                  : enum_independent_sets(g, guards);
        case StructureKind::EdgeCover:
            return s.params.variant == "original" ? enum_edge_covers(g, guards)
                                                  : enum_cagefree_subgraphs(g, guards);
        case StructureKind::CageFreeSubgraph:
            return enum_cagefree_subgraphs(g, guards);
        case StructureKind::EdgeChromaticSubgraph:
            throw guard_refusal("no oracle for edge-chromatic systems");
    }
    throw structural_error("unknown kind");
}

} // namespace

StructureBasis structure_monomial_basis(const PolySystem& s, const OracleGuards& guards) {
    StructureBasis basis;
    basis.family = family_for_system(s, guards);
    if (basis.family.ground_size != s.indicator_ids.size())
        throw structural_error("oracle ground set does not match system indicators");
    for (const auto& member : basis.family.members) {
        Monomial::Factors f;
        for (int idx : member)
            f.emplace_back(s.indicator_ids[static_cast<std::size_t>(idx)], 1u);
        basis.monomials.push_back(Monomial::from_pairs(std::move(f)));
        basis.members.push_back(member);
    }
    std::vector<std::size_t> order(basis.monomials.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return MonomialLess{}(basis.monomials[a], basis.monomials[b]);
    });
    StructureBasis sorted;
    sorted.family = std::move(basis.family);
    for (std::size_t i : order) {
        sorted.members.push_back(std::move(basis.members[i]));
        sorted.monomials.push_back(std::move(basis.monomials[i]));
    }
    return sorted;
}

Polynomial invert_cardinality_form(const PolySystem& s, const StructureBasis& basis) {
    if (!s.cardinality_index || !s.m)
        throw structural_error("invert_cardinality_form: system has no cardinality "
                               "equation");
    const long m = *s.m;
    auto closed = is_subset_closed(basis.family);
    if (!closed.closed) {
        std::string msg = "invert_cardinality_form: family is not subset closed";
        if (closed.witness)
            msg += " (witness: " + member_text(basis.family, closed.witness->member) +
                   " is in the family, its subset " +
                   member_text(basis.family, closed.witness->subset) + " is not)";
        throw structural_error(msg);
    }
    long max_size = static_cast<long>(max_structure_size(basis.family));
    if (m <= max_size)
        throw structural_error(
            "invert_cardinality_form: m = " + std::to_string(m) +
            " is within reach of the family (max structure size " +
            std::to_string(max_size) + "); the system is feasible");

    // f_1 * y_b reduces to (|b| - m) y_b + sum of y_{b+i}, so coefficients
    // solve triangularly by member size.
    std::map<std::vector<int>, std::size_t> pos;
    for (std::size_t i = 0; i < basis.members.size(); ++i) pos[basis.members[i]] = i;
    std::vector<Rational> coef(basis.members.size());
    // Members are sorted by monomial, hence by size (graded order).
    for (std::size_t i = 0; i < basis.members.size(); ++i) {
        const auto& b = basis.members[i];
        Rational sum(0);
        for (std::size_t j = 0; j < b.size(); ++j) {
            std::vector<int> sub = b;
            sub.erase(sub.begin() + static_cast<long>(j));
            sum += coef[pos.at(sub)];
        }
        Rational target = b.empty() ? Rational(1) : Rational(0);
        coef[i] = (target - sum) / Rational(static_cast<long>(b.size()) - m);
    }
    Polynomial beta1 = Polynomial::zero(s.table);
    for (std::size_t i = 0; i < basis.members.size(); ++i)
        beta1.add_term(basis.monomials[i], coef[i]);
    return beta1;
}

namespace {

// p = (x - c) * quotient + p|_{x=c}; returns the quotient.
Polynomial divide_linear(const Polynomial& p, VarId var, const Rational& c) {
    Polynomial q = Polynomial::zero(p.table());
    for (const auto& [m, cf] : p.terms()) {
        unsigned e = m.exponent(var);
        if (e == 0) continue;
        Monomial rest = m.divided_by(Monomial::variable(var, e));
        for (unsigned t = 0; t < e; ++t)
            q.add_term(rest.times(Monomial::variable(var, t)),
                       cf * c.pow(e - 1 - t));
    }
    return q;
}

Polynomial eval_at(const Polynomial& p, VarId var, const Rational& c) {
    Polynomial out = Polynomial::zero(p.table());
    for (const auto& [m, cf] : p.terms()) {
        unsigned e = m.exponent(var);
        if (e == 0) {
            out.add_term(m, cf);
        } else {
            out.add_term(m.divided_by(Monomial::variable(var, e)), cf * c.pow(e));
        }
    }
    return out;
}

// Odd cycle in the graph spanned by the given edges; returns the cycle's
// vertices in order. The edge set must contain one.
std::vector<int> find_odd_cycle(const std::vector<std::pair<int, int>>& edges) {
    std::map<int, std::vector<int>> adj;
    for (const auto& [u, v] : edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    std::map<int, int> color, parent;
    for (const auto& [root, nb] : adj) {
        if (color.count(root)) continue;
        color[root] = 0;
        parent[root] = 0;
        std::vector<int> queue{root};
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            int u = queue[qi];
            for (int w : adj[u]) {
                if (!color.count(w)) {
                    color[w] = 1 - color[u];
                    parent[w] = u;
                    queue.push_back(w);
                } else if (color[w] == color[u]) {
                    // Tree paths u->root and w->root meet at the LCA; the
                    // closing edge makes the cycle odd.
                    std::vector<int> up;
                    std::map<int, std::size_t> depth_of;
                    for (int x = u;; x = parent[x]) {
                        depth_of[x] = up.size();
                        up.push_back(x);
                        if (x == root) break;
                    }
                    std::vector<int> down;
                    int meet = -1;
                    for (int x = w;; x = parent[x]) {
                        if (depth_of.count(x)) {
                            meet = x;
                            break;
                        }
                        down.push_back(x);
                        if (x == root) break;
                    }
                    std::vector<int> cycle;
                    for (std::size_t i = 0; i <= depth_of.at(meet); ++i)
                        cycle.push_back(up[i]);
                    std::reverse(down.begin(), down.end());
                    for (int x : down) cycle.push_back(x);
                    return cycle;
                }
            }
        }
    }
    throw structural_error("expected an odd cycle, found none");
}

// Bookkeeping for constructive completion: every move keeps the running
// identity sum(betas_i * f_i) - 1 = r exact.
struct Reducer {
    const PolySystem& sys;
    std::vector<Polynomial> betas;
    Polynomial r;

    std::map<VarId, std::size_t> boolean_eq;
    // Single-term non-cardinality equations: obstruction monomials.
    std::vector<std::pair<std::size_t, std::pair<Rational, Monomial>>> mono_eqs;

    // 2-colorable machinery.
    bool k2 = false;
    std::map<int, std::size_t> mixed_eq;    // edge position -> equation
    std::map<int, std::size_t> power_eq;    // vertex -> equation
    std::map<int, VarId> color_var;         // vertex -> x variable

    // K2-homomorphism machinery.
    bool homk2 = false;
    std::map<int, std::size_t> edge_assign;    // edge position -> equation
    std::map<int, std::size_t> vertex_assign;  // vertex -> equation
    std::map<int, std::size_t> anchor_eq;      // H-vertex -> equation
    std::map<int, VarId> z_var;                // vertex -> z variable
    Rational anchor1, anchor2;
    std::vector<Polynomial> xfree;                     // per equation
    std::vector<std::map<int, Polynomial>> cofactor;   // per equation, per H-vertex

    std::map<VarId, int> edge_pos_of_var;   // indicator var -> edge position

    explicit Reducer(const PolySystem& s, const Polynomial& beta1)
        : sys(s), r(Polynomial::zero(s.table)) {
        for (std::size_t i = 0; i < s.polys.size(); ++i)
            betas.push_back(Polynomial::zero(s.table));
        std::size_t card = s.cardinality_index.value();
        betas[card] = beta1;
        r = beta1 * s.polys[card] - Polynomial::constant(s.table, Rational(1));
        index_roles();
    }

    void index_roles() {
        const auto& info = sys.eq_info;
        if (info.empty())
            throw structural_error("complete_certificate: system has no equation "
                                   "roles; re-encode it from its parameters");
        std::size_t card = sys.cardinality_index.value();
        for (std::size_t i = 0; i < sys.polys.size(); ++i) {
            if (i == card) continue;
            switch (info[i].role) {
                case EquationRole::BooleanSquare:
                    boolean_eq[static_cast<VarId>(info[i].a)] = i;
                    break;
                case EquationRole::MixedColor:
                    mixed_eq[*sys.params.graph->edge_index(info[i].a, info[i].b)] = i;
                    break;
                case EquationRole::ColorPower:
                    power_eq[info[i].a] = i;
                    break;
                case EquationRole::EdgeAssignment:
                    edge_assign[*sys.params.graph->edge_index(info[i].a, info[i].b)] = i;
                    break;
                case EquationRole::VertexAssignment:
                    vertex_assign[info[i].a] = i;
                    break;
                case EquationRole::Anchor:
                    anchor_eq[info[i].a] = i;
                    break;
                default:
                    break;
            }
            if (sys.polys[i].term_count() == 1 && sys.polys[i].degree() >= 1) {
                const auto& [m, c] = *sys.polys[i].terms().begin();
                mono_eqs.push_back({i, {c, m}});
            }
        }
        for (std::size_t p = 0; p < sys.indicator_ids.size(); ++p)
            edge_pos_of_var[sys.indicator_ids[p]] = static_cast<int>(p);

        k2 = sys.kind == StructureKind::KColorableSubgraph && sys.params.k == 2 &&
             sys.params.graph.has_value();
        if (k2)
            for (int v = 1; v <= sys.params.graph->vertex_count(); ++v)
                color_var[v] = sys.table->find("x" + std::to_string(v)).value();

        homk2 = sys.kind == StructureKind::HomomorphicSubgraph && sys.params.target &&
                sys.params.target->vertex_count() == 2 &&
                sys.params.target->edge_count() == 1 && sys.params.graph.has_value();
        if (homk2) {
            for (int v = 1; v <= sys.params.graph->vertex_count(); ++v)
                z_var[v] = sys.table->find("z" + std::to_string(v)).value();
            anchor1 = Rational(2);
            anchor2 = Rational(4);
            // Split every equation as f = xfree + sum_v cofactor_v (x_v - 2^v).
            std::vector<std::pair<int, VarId>> anchors;
            for (int v = 1; v <= 2; ++v)
                anchors.push_back({v, sys.table->find("x" + std::to_string(v)).value()});
            for (std::size_t i = 0; i < sys.polys.size(); ++i) {
                Polynomial p = sys.polys[i];
                std::map<int, Polynomial> cof;
                for (const auto& [hv, var] : anchors) {
                    Rational value = hv == 1 ? anchor1 : anchor2;
                    cof.emplace(hv, divide_linear(p, var, value));
                    p = eval_at(p, var, value);
                }
                xfree.push_back(std::move(p));
                cofactor.push_back(std::move(cof));
            }
        }
    }

    void apply(std::size_t i, const Polynomial& mult) {
        betas[i] += mult;
        r += mult * sys.polys[i];
    }

    // Adds mult against the x-substituted form of equation i, routing the
    // anchor discrepancy onto the anchor equations.
    void virtual_apply(std::size_t i, const Polynomial& mult) {
        betas[i] += mult;
        for (const auto& [hv, cof] : cofactor[i])
            betas[anchor_eq.at(hv)] -= mult * cof;
        r += mult * xfree[i];
    }

    bool boolean_pass() {
        bool progress = false;
        for (;;) {
            bool hit = false;
            for (const auto& [m, c] : r.terms()) {
                for (const auto& [v, e] : m.factors()) {
                    if (e < 2) continue;
                    auto it = boolean_eq.find(v);
                    if (it == boolean_eq.end()) continue;
                    // c * v^e * rest - apply c * v^{e-2} * rest * (v^2 - v).
                    Monomial mult =
                        m.divided_by(Monomial::variable(v, 2));
                    apply(it->second, Polynomial::term(sys.table, mult, -c));
                    hit = true;
                    progress = true;
                    break;
                }
                if (hit) break;
            }
            if (!hit) return progress;
        }
    }

    bool mono_pass() {
        bool progress = false;
        for (;;) {
            bool hit = false;
            for (const auto& [m, c] : r.terms()) {
                for (const auto& [i, eq] : mono_eqs) {
                    if (!eq.second.divides(m)) continue;
                    apply(i, Polynomial::term(sys.table, m.divided_by(eq.second),
                                              -(c / eq.first)));
                    hit = true;
                    progress = true;
                    break;
                }
                if (hit) break;
            }
            if (!hit) return progress;
        }
    }

    std::vector<std::pair<int, int>> term_edges(const Monomial& m) const {
        std::vector<std::pair<int, int>> edges;
        for (const auto& [v, e] : m.factors()) {
            auto it = edge_pos_of_var.find(v);
            if (it == edge_pos_of_var.end())
                throw structural_error("unexpected non-indicator variable in residual");
            edges.push_back(sys.params.graph->edges()[static_cast<std::size_t>(it->second)]);
        }
        return edges;
    }

    Monomial indicator_monomial(const std::vector<int>& positions) const {
        Monomial::Factors f;
        for (int p : positions)
            f.emplace_back(sys.indicator_ids[static_cast<std::size_t>(p)], 1u);
        return Monomial::from_pairs(std::move(f));
    }

    // Removes one term c*y_T whose edge set contains an odd cycle, for
    // 2-colorable systems: the alternating sum of the mixed equations
    // around the cycle times x_{v0} telescopes to y_T x_{v0}^2.
    bool k2_cycle_pass() {
        if (!k2 || r.is_zero()) return false;
        auto [m, c] = *r.terms().begin();
        auto edges = term_edges(m);
        auto cycle = find_odd_cycle(edges);
        const Graph& g = *sys.params.graph;
        int v0 = cycle[0];
        Monomial x0 = Monomial::variable(color_var.at(v0));
        for (std::size_t t = 0; t < cycle.size(); ++t) {
            int a = cycle[t], b = cycle[(t + 1) % cycle.size()];
            int pos = g.edge_index(a, b).value();
            VarId evar = sys.indicator_ids[static_cast<std::size_t>(pos)];
            Monomial rest = m.divided_by(Monomial::variable(evar)).times(x0);
            Rational k = (t % 2 == 0 ? Rational(-1, 2) : Rational(1, 2)) * c;
            apply(mixed_eq.at(pos), Polynomial::term(sys.table, rest, k));
        }
        apply(power_eq.at(v0), Polynomial::term(sys.table, m, c));
        return true;
    }

    // Same job for K2-homomorphism systems, working with the x-anchored
    // forms: the cycle telescopes to y_T (z_{v0} - sigma/2), and the vertex
    // assignment at v0 supplies y_T (z-c1)(z-c2) through a triangular
    // combination over the supersets of T by edges at v0.
    bool homk2_cycle_pass() {
        if (!homk2 || r.is_zero()) return false;
        auto [m, c] = *r.terms().begin();
        auto edges = term_edges(m);
        auto cycle = find_odd_cycle(edges);
        const Graph& g = *sys.params.graph;
        int v0 = cycle[0];
        Rational sigma = anchor1 + anchor2;
        Rational delta = (anchor1 - anchor2) / Rational(2);
        Rational d2 = delta * delta;
        Polynomial z0 = Polynomial::variable(sys.table, z_var.at(v0));
        Polynomial zhalf = z0 - Polynomial::constant(sys.table, sigma / Rational(2));
        Polynomial w = (z0 - Polynomial::constant(sys.table, anchor1)) *
                       (z0 - Polynomial::constant(sys.table, anchor2));

        Rational lambda = -(c / d2) / Rational(2);
        for (std::size_t t = 0; t < cycle.size(); ++t) {
            int a = cycle[t], b = cycle[(t + 1) % cycle.size()];
            int pos = g.edge_index(a, b).value();
            VarId evar = sys.indicator_ids[static_cast<std::size_t>(pos)];
            Monomial rest = m.divided_by(Monomial::variable(evar));
            Rational k = t % 2 == 0 ? lambda : -lambda;
            virtual_apply(edge_assign.at(pos),
                          zhalf.times_monomial(rest, Rational(1)).scaled(k));
        }

        // Supersets of T by edges at v0, smallest first.
        std::vector<int> t_pos;
        for (const auto& [v, e] : m.factors()) t_pos.push_back(edge_pos_of_var.at(v));
        std::sort(t_pos.begin(), t_pos.end());
        std::vector<int> extra;
        for (int j : g.neighbors(v0)) {
            int pos = g.edge_index(v0, j).value();
            if (!std::binary_search(t_pos.begin(), t_pos.end(), pos)) extra.push_back(pos);
        }
        std::sort(extra.begin(), extra.end());
        std::map<std::vector<int>, Rational> mu;
        std::vector<std::vector<int>> supersets;
        for (unsigned long mask = 0; mask < (1ul << extra.size()); ++mask) {
            std::vector<int> s = t_pos;
            for (std::size_t i = 0; i < extra.size(); ++i)
                if (mask & (1ul << i)) s.push_back(extra[i]);
            std::sort(s.begin(), s.end());
            supersets.push_back(std::move(s));
        }
        std::sort(supersets.begin(), supersets.end(),
                  [](const auto& a, const auto& b) {
                      return a.size() != b.size() ? a.size() < b.size() : a < b;
                  });
        auto edges_at_v0 = [&](const std::vector<int>& s) {
            int k = 0;
            for (int p : s) {
                auto [u, v] = g.edges()[static_cast<std::size_t>(p)];
                if (u == v0 || v == v0) ++k;
            }
            return k;
        };
        for (const auto& s : supersets) {
            Rational acc = s == t_pos ? Rational(1) : Rational(0);
            for (int p : s) {
                if (std::binary_search(t_pos.begin(), t_pos.end(), p)) continue;
                std::vector<int> sub = s;
                sub.erase(std::find(sub.begin(), sub.end(), p));
                acc -= mu.at(sub);
            }
            mu[s] = acc / Rational(edges_at_v0(s));
        }

        Rational nu = c / d2;
        for (const auto& s : supersets) {
            Rational coefficient = nu * mu.at(s);
            Monomial ys = indicator_monomial(s);
            virtual_apply(vertex_assign.at(v0),
                          Polynomial::term(sys.table, ys, coefficient));
            for (int p : s) {
                auto [u, v] = g.edges()[static_cast<std::size_t>(p)];
                if (u != v0 && v != v0) continue;
                VarId evar = sys.indicator_ids[static_cast<std::size_t>(p)];
                std::vector<int> sub;
                for (int q : s)
                    if (q != p) sub.push_back(q);
                apply(boolean_eq.at(evar),
                      w.times_monomial(indicator_monomial(sub), -coefficient));
            }
        }
        return true;
    }

    // Linear solve for whatever the rewrite passes left behind, with
    // multiplier monomials of degree <= bound over all non-cardinality
    // equations.
    bool fallback_solve(unsigned bound, const NullaOptions& opts) {
        std::size_t card = sys.cardinality_index.value();
        const std::size_t n_vars = sys.table->size();
        for (unsigned d = 0; d <= bound; ++d) {
            mpz_class count =
                monomial_count(n_vars, d) * static_cast<long>(sys.polys.size() - 1);
            if (count > static_cast<long>(opts.column_cap))
                throw guard_refusal("completion matrix over column cap");
            auto monos = monomials_up_to(n_vars, d);
            std::vector<std::size_t> eqs;
            for (std::size_t i = 0; i < sys.polys.size(); ++i)
                if (i != card) eqs.push_back(i);

            std::map<Monomial, std::size_t, MonomialLess> row_of;
            for (const auto& [mm, cc] : r.terms()) row_of.emplace(mm, 0);
            for (std::size_t i : eqs)
                for (const auto& [mf, cf] : sys.polys[i].terms())
                    for (const auto& mono : monos) row_of.emplace(mono.times(mf), 0);
            std::size_t next = 0;
            for (auto& [mm, idx] : row_of) idx = next++;

            SparseRationalMatrix mat;
            mat.resize(row_of.size(), eqs.size() * monos.size());
            for (const auto& [mm, cc] : r.terms()) mat.rhs[row_of.at(mm)] = -cc;
            for (std::size_t ei = 0; ei < eqs.size(); ++ei)
                for (std::size_t mi = 0; mi < monos.size(); ++mi)
                    for (const auto& [mf, cf] : sys.polys[eqs[ei]].terms())
                        mat.add_entry(row_of.at(monos[mi].times(mf)),
                                      ei * monos.size() + mi, cf);
            mat.finalize();
            SolveResult sr = solve_particular(mat);
            if (sr.status != SolveStatus::Solved) continue;
            for (std::size_t ei = 0; ei < eqs.size(); ++ei) {
                Polynomial mult = Polynomial::zero(sys.table);
                for (std::size_t mi = 0; mi < monos.size(); ++mi) {
                    const Rational& v = sr.solution[ei * monos.size() + mi];
                    if (!v.is_zero()) mult.add_term(monos[mi], v);
                }
                if (!mult.is_zero()) apply(eqs[ei], mult);
            }
            return r.is_zero();
        }
        return false;
    }
};

} // namespace

Certificate complete_certificate(const PolySystem& s, const Polynomial& beta1,
                                 unsigned degree_bound, const NullaOptions& opts) {
    if (!s.cardinality_index)
        throw structural_error("complete_certificate: no cardinality equation");
    Reducer red(s, beta1);
    while (!red.r.is_zero()) {
        bool progress = red.boolean_pass();
        progress = red.mono_pass() || progress;
        if (red.r.is_zero()) break;
        if (red.k2 ? red.k2_cycle_pass() : red.homk2 ? red.homk2_cycle_pass() : false)
            continue;
        if (!progress) break;
    }
    if (!red.r.is_zero() && !red.fallback_solve(degree_bound, opts))
        throw structural_error(
            "complete_certificate: no completion within multiplier degree " +
            std::to_string(degree_bound) +
            "; raise the bound (a completion is guaranteed to exist for subset-"
            "closed systems)");
    Certificate cert;
    cert.betas = std::move(red.betas);
    for (const auto& b : cert.betas) cert.degree = std::max(cert.degree, b.degree());
    VerifyResult check = verify_certificate(s, cert);
    if (!check.ok)
        throw structural_error("internal: completed certificate failed verification");
    return cert;
}

Certificate matching_transform(const Graph& g, const PolySystem& v2_system,
                               const Certificate& v2_cert) {
    if (v2_system.kind != StructureKind::Matching || v2_system.params.variant != "v2")
        throw structural_error("matching_transform: expected a v2 matching system");
    if (!verify_certificate(v2_system, v2_cert).ok)
        throw structural_error("matching_transform: input certificate does not verify");
    if (v2_system.eq_info.empty())
        throw structural_error("matching_transform: v2 system has no equation roles");

    PolySystem v1 = encode_perfect_matching_v1(g);

    // Pull A, P_e, Q^i_{jk} out of the v2 certificate by role.
    const Polynomial* a_poly = nullptr;
    std::map<int, const Polynomial*> p_of_edge;                    // edge position
    std::map<std::tuple<int, int, int>, const Polynomial*> q_of;   // (i, j, k)
    for (std::size_t i = 0; i < v2_system.polys.size(); ++i) {
        const EquationInfo& info = v2_system.eq_info[i];
        switch (info.role) {
            case EquationRole::Cardinality:
                a_poly = &v2_cert.betas[i];
                break;
            case EquationRole::BooleanSquare: {
                // Boolean equations are per indicator variable, i.e. per edge.
                VarId var = static_cast<VarId>(info.a);
                for (std::size_t p = 0; p < v2_system.indicator_ids.size(); ++p)
                    if (v2_system.indicator_ids[p] == var)
                        p_of_edge[static_cast<int>(p)] = &v2_cert.betas[i];
                break;
            }
            case EquationRole::IncidentPair:
                q_of[{info.a, info.b, info.c}] = &v2_cert.betas[i];
                break;
            default:
                throw structural_error("matching_transform: unexpected equation role");
        }
    }

    // Rebuild the v2 polynomials over the v1 table (same variable names).
    auto to_v1 = [&](const Polynomial& p) {
        Polynomial out = Polynomial::zero(v1.table);
        for (const auto& [m, c] : p.terms()) {
            Monomial::Factors f;
            for (const auto& [v, e] : m.factors())
                f.emplace_back(v1.table->find(v2_system.table->name(v)).value(), e);
            out.add_term(Monomial::from_pairs(std::move(f)), c);
        }
        return out;
    };
    Polynomial a_v1 = to_v1(*a_poly);

    Certificate out;
    out.betas.assign(v1.polys.size(), Polynomial::zero(v1.table));
    Polynomial half_a = a_v1.scaled(Rational(1, 2));
    for (std::size_t i = 0; i < v1.polys.size(); ++i) {
        const EquationInfo& info = v1.eq_info[i];
        if (info.role == EquationRole::VertexLinear) {
            // Delta_i = A/2 + sum of P_e x_e over edges whose smaller
            // endpoint is i.
            Polynomial delta = half_a;
            for (int j : g.neighbors(info.a)) {
                int pos = g.edge_index(info.a, j).value();
                if (g.edges()[static_cast<std::size_t>(pos)].first != info.a) continue;
                VarId evar = v1.indicator_ids[static_cast<std::size_t>(pos)];
                delta += to_v1(*p_of_edge.at(pos)).times_monomial(Monomial::variable(evar));
            }
            out.betas[i] = std::move(delta);
        } else {
            // Theta^i_{jk} = Q^i_{jk} - P_{ij} if i is {i,j}'s smaller end,
            // likewise for {i,k}.
            Polynomial theta = to_v1(*q_of.at({info.a, info.b, info.c}));
            for (int other : {info.b, info.c}) {
                int pos = g.edge_index(info.a, other).value();
                if (g.edges()[static_cast<std::size_t>(pos)].first != info.a) continue;
                theta -= to_v1(*p_of_edge.at(pos));
            }
            out.betas[i] = std::move(theta);
        }
        out.degree = std::max(out.degree, out.betas[i].degree());
    }
    VerifyResult check = verify_certificate(v1, out);
    if (!check.ok)
        throw structural_error("internal: matching_transform output failed exact "
                               "verification");
    return out;
}

std::optional<Certificate> bipartite_degree_zero(const Graph& g) {
    auto bp = bipartition(g);
    if (!bp) return std::nullopt;
    const auto& big = bp->class_a.size() >= bp->class_b.size() ? bp->class_a : bp->class_b;
    const auto& small = bp->class_a.size() >= bp->class_b.size() ? bp->class_b : bp->class_a;
    if (big.size() == small.size()) return std::nullopt;
    Rational c(1, static_cast<long>(big.size()) - static_cast<long>(small.size()));

    PolySystem v1 = encode_perfect_matching_v1(g);
    Certificate cert;
    cert.betas.assign(v1.polys.size(), Polynomial::zero(v1.table));
    std::vector<int> sign(static_cast<std::size_t>(g.vertex_count()) + 1, 0);
    for (int v : big) sign[v] = -1;
    for (int v : small) sign[v] = 1;
    for (std::size_t i = 0; i < v1.polys.size(); ++i) {
        if (v1.eq_info[i].role != EquationRole::VertexLinear) continue;
        cert.betas[i] = Polynomial::constant(
            v1.table, sign[v1.eq_info[i].a] < 0 ? -c : c);
    }
    cert.degree = 0;
    VerifyResult check = verify_certificate(v1, cert);
    if (!check.ok)
        throw structural_error("internal: degree-zero construction failed verification");
    return cert;
}

namespace {

// The enumerative construction for k-regular systems only covers the
// minimum degree when some edge of a maximum subgraph has, at both
// endpoints, an incident edge used by no maximum subgraph.
bool kreg_edge_condition(const Graph& g, const StructureFamily& family) {
    std::size_t max_size = 0;
    for (const auto& m : family.members) max_size = std::max(max_size, m.size());
    if (max_size == 0) return false;
    std::vector<bool> used(static_cast<std::size_t>(g.edge_count()), false);
    for (const auto& m : family.members)
        if (m.size() == max_size)
            for (int p : m) used[static_cast<std::size_t>(p)] = true;
    auto unused_at = [&](int v) {
        for (int j : g.neighbors(v))
            if (!used[static_cast<std::size_t>(*g.edge_index(v, j))]) return true;
        return false;
    };
    for (const auto& m : family.members) {
        if (m.size() != max_size) continue;
        for (int p : m) {
            auto [u, v] = g.edges()[static_cast<std::size_t>(p)];
            if (unused_at(u) && unused_at(v)) return true;
        }
    }
    return false;
}

} // namespace

AnalyzeReport run_analysis(const PolySystem& s, std::optional<unsigned> degree_bound,
                           const OracleGuards& guards, const NullaOptions& opts) {
    AnalyzeReport rep;
    rep.kind = s.kind;
    rep.has_cardinality = s.cardinality_index.has_value();
    rep.m = s.m;

    StructureBasis basis;
    try {
        basis = structure_monomial_basis(s, guards);
        rep.oracle_available = true;
    } catch (const guard_refusal& e) {
        rep.refusal = e.what();
    }

    if (rep.oracle_available) {
        rep.family_size = basis.family.members.size();
        rep.max_structure =
            basis.family.members.empty() ? 0 : max_structure_size(basis.family);
        auto closed = is_subset_closed(basis.family);
        rep.subset_closed = closed.closed;
        rep.witness = closed.witness;
        if (s.kind == StructureKind::KRegularSubgraph && s.params.graph)
            rep.kreg_edge_condition = kreg_edge_condition(*s.params.graph, basis.family);
        if (rep.has_cardinality) {
            for (const auto& member : basis.family.members)
                if (static_cast<long>(member.size()) == s.m.value()) rep.feasible = true;
        } else if (s.kind == StructureKind::Matching && s.params.graph) {
            for (const auto& member : basis.family.members)
                if (static_cast<long>(member.size()) * 2 ==
                    s.params.graph->vertex_count())
                    rep.feasible = true;
        }
    }

    if (!rep.has_cardinality) {
        // Vertex-equation matching system: no inversion route; report the
        // constant-certificate shortcut and the solver result.
        rep.downgraded = true;
        if (s.kind == StructureKind::Matching && s.params.graph) {
            if (auto fast = bipartite_degree_zero(*s.params.graph)) {
                rep.bipartite_fast_path = true;
                rep.enum_degree = 0;
            }
        }
        if (!rep.feasible) {
            unsigned bound = degree_bound ? *degree_bound : default_degree_bound(s, guards);
            NullaResult nr = nulla_solve(s, bound, opts);
            rep.nulla_report = nr.report;
            if (nr.certificate) rep.nulla_degree = nr.certificate->degree;
        }
        return rep;
    }

    if (rep.feasible || !rep.oracle_available) {
        rep.downgraded = true;
        if (!rep.feasible) {
            unsigned bound = degree_bound ? *degree_bound : default_degree_bound(s, guards);
            NullaResult nr = nulla_solve(s, bound, opts);
            rep.nulla_report = nr.report;
            if (nr.certificate) rep.nulla_degree = nr.certificate->degree;
        }
        return rep;
    }

    unsigned bound = degree_bound ? *degree_bound : default_degree_bound(s, guards);
    if (!rep.subset_closed) {
        rep.downgraded = true;
        NullaResult nr = nulla_solve(s, bound, opts);
        rep.nulla_report = nr.report;
        if (nr.certificate) rep.nulla_degree = nr.certificate->degree;
        return rep;
    }

    Polynomial beta1 = invert_cardinality_form(s, basis);
    rep.support_size = beta1.term_count();
    rep.support_match = true;
    for (const auto& mono : basis.monomials)
        if (beta1.coefficient(mono).is_zero()) rep.support_match = false;
    if (rep.support_size != basis.monomials.size()) rep.support_match = false;
    rep.common_sign = true;
    for (const auto& [m, c] : beta1.terms()) {
        if (rep.observed_sign == 0) rep.observed_sign = c.sign();
        if (c.sign() != rep.observed_sign) rep.common_sign = false;
    }
    for (std::size_t i = 0; i < basis.members.size(); ++i) {
        AnalyzeRow row;
        row.structure = member_text(basis.family, basis.members[i]);
        Polynomial one = Polynomial::term(s.table, basis.monomials[i], Rational(1));
        row.monomial = one.str();
        row.coefficient = beta1.coefficient(basis.monomials[i]);
        rep.rows.push_back(std::move(row));
    }

    Certificate enum_cert = complete_certificate(s, beta1, bound + 2, opts);
    rep.enum_degree = enum_cert.degree;
    rep.complete_verified = verify_certificate(s, enum_cert).ok;

    NullaResult nr = nulla_solve(s, bound, opts);
    rep.nulla_report = nr.report;
    if (nr.certificate) rep.nulla_degree = nr.certificate->degree;
    rep.degree_match = rep.enum_degree && rep.nulla_degree &&
                       *rep.enum_degree == *rep.nulla_degree;
    return rep;
}

} // namespace nullcert
