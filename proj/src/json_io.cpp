#include "nullcert/json_io.hpp"

#include <json.hpp>

#include "nullcert/errors.hpp"

namespace nullcert {

using json = nlohmann::ordered_json;

namespace {

json poly_to_json(const Polynomial& p) {
    json terms = json::array();
    for (const auto& [m, c] : p.terms()) {
        json mono = json::object();
        for (const auto& [v, e] : m.factors()) mono[p.table()->name(v)] = e;
        terms.push_back({{"coeff", c.str()}, {"mono", mono}});
    }
    return terms;
}

Polynomial poly_from_json(const json& j, const TablePtr& table) {
    Polynomial p = Polynomial::zero(table);
    for (const auto& term : j) {
        Rational c = Rational::from_string(term.at("coeff").get<std::string>());
        Monomial::Factors f;
        for (const auto& [name, exp] : term.at("mono").items()) {
            auto id = table->find(name);
            if (!id) throw parse_error("unknown variable '" + name + "'");
            f.emplace_back(*id, exp.get<unsigned>());
        }
        p.add_term(Monomial::from_pairs(std::move(f)), c);
    }
    return p;
}

json graph_to_json(const Graph& g) {
    json edges = json::array();
    for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
    return {{"n", g.vertex_count()}, {"edges", edges}};
}

Graph graph_from_json(const json& j) {
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j.at("edges")) edges.push_back({e.at(0), e.at(1)});
    return Graph(j.at("n").get<int>(), std::move(edges));
}

json params_to_json(const EncodingParams& p) {
    json out;
    out["variant"] = p.variant;
    out["m"] = p.m ? json(*p.m) : json(nullptr);
    out["k"] = p.k ? json(*p.k) : json(nullptr);
    out["graph"] = p.graph ? graph_to_json(*p.graph) : json(nullptr);
    out["target"] = p.target ? graph_to_json(*p.target) : json(nullptr);
    out["full_pairwise"] = p.full_pairwise;
    return out;
}

EncodingParams params_from_json(const json& j) {
    EncodingParams p;
    p.variant = j.value("variant", std::string());
    if (j.contains("m") && !j.at("m").is_null()) p.m = j.at("m").get<long>();
    if (j.contains("k") && !j.at("k").is_null()) p.k = j.at("k").get<int>();
    if (j.contains("graph") && !j.at("graph").is_null())
        p.graph = graph_from_json(j.at("graph"));
    if (j.contains("target") && !j.at("target").is_null())
        p.target = graph_from_json(j.at("target"));
    p.full_pairwise = j.value("full_pairwise", false);
    return p;
}

json system_core(const PolySystem& s) {
    json vars = json::array();
    for (VarId v = 0; v < s.table->size(); ++v)
        vars.push_back({{"name", s.table->name(v)},
                        {"role", s.table->role(v) == VarRole::Indicator ? "indicator"
                                                                        : "auxiliary"}});
    json polys = json::array();
    for (const auto& p : s.polys) polys.push_back(poly_to_json(p));
    json out;
    out["variables"] = vars;
    out["polys"] = polys;
    out["cardinality_index"] =
        s.cardinality_index ? json(*s.cardinality_index) : json(nullptr);
    out["m"] = s.m ? json(*s.m) : json(nullptr);
    out["kind"] = kind_name(s.kind);
    return out;
}

std::string fnv1a64(const std::string& data) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char ch : data) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

} // namespace

std::string system_to_json(const PolySystem& s) {
    json out = system_core(s);
    out["params"] = params_to_json(s.params);
    return out.dump(2) + "\n";
}

PolySystem system_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const std::exception& e) {
        throw parse_error(std::string("bad system JSON: ") + e.what());
    }
    try {
        auto table = std::make_shared<VariableTable>();
        for (const auto& v : j.at("variables"))
            table->add(v.at("name").get<std::string>(),
                       v.at("role").get<std::string>() == "indicator"
                           ? VarRole::Indicator
                           : VarRole::Auxiliary);
        PolySystem s;
        s.table = table;
        for (const auto& p : j.at("polys")) s.polys.push_back(poly_from_json(p, s.table));
        if (!j.at("cardinality_index").is_null())
            s.cardinality_index = j.at("cardinality_index").get<std::size_t>();
        if (!j.at("m").is_null()) s.m = j.at("m").get<long>();
        auto kind = kind_from_name(j.at("kind").get<std::string>());
        if (!kind) throw parse_error("unknown kind '" + j.at("kind").get<std::string>() + "'");
        s.kind = *kind;
        if (j.contains("params")) s.params = params_from_json(j.at("params"));
        s.indicator_ids = table->indicator_ids();
        s.validate();

        // Re-encoding from the recorded inputs restores equation roles; keep
        // the file's polynomials if they disagree (verification still works).
        if (s.params.graph) {
            try {
                PolySystem re = reencode(s.kind, s.params);
                if (re.polys == s.polys && *re.table == *s.table &&
                    re.cardinality_index == s.cardinality_index)
                    return re;
            } catch (const std::exception&) {
            }
        }
        return s;
    } catch (const json::exception& e) {
        throw parse_error(std::string("bad system JSON: ") + e.what());
    }
}

std::string system_hash(const PolySystem& s) {
    return fnv1a64(system_core(s).dump());
}

std::string certificate_to_json(const Certificate& c, const PolySystem& s,
                                const SolveReport* report) {
    json out;
    out["degree"] = c.degree;
    out["system_hash"] = system_hash(s);
    json betas = json::array();
    for (const auto& b : c.betas) betas.push_back(poly_to_json(b));
    out["betas"] = betas;
    if (report) {
        json rows = json::array();
        for (const auto& rec : report->records)
            rows.push_back({{"degree", rec.degree},
                            {"rows", rec.n_rows},
                            {"cols", rec.n_cols},
                            {"status", rec.status == SolveStatus::Solved ? "solved"
                                                                         : "infeasible"},
                            {"ms", rec.wall_ms}});
        out["report"] = rows;
    }
    return out.dump(2) + "\n";
}

LoadedCertificate certificate_from_json(const std::string& text, const PolySystem& s) {
    json j;
    try {
        j = json::parse(text);
    } catch (const std::exception& e) {
        throw parse_error(std::string("bad certificate JSON: ") + e.what());
    }
    try {
        LoadedCertificate out;
        out.system_hash = j.value("system_hash", std::string());
        for (const auto& b : j.at("betas"))
            out.cert.betas.push_back(poly_from_json(b, s.table));
        out.cert.degree = 0;
        for (const auto& b : out.cert.betas)
            out.cert.degree = std::max(out.cert.degree, b.degree());
        return out;
    } catch (const json::exception& e) {
        throw parse_error(std::string("bad certificate JSON: ") + e.what());
    }
}

} // namespace nullcert
