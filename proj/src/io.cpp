#include "weave/io.hpp"

#include <sstream>

#include "weave/errors.hpp"

namespace weave {

using nlohmann::json;

json to_json(const DynkinType& t) {
    return {{"family", std::string(1, family_letter(t.family))}, {"rank", t.rank}};
}

DynkinType dynkin_from_json(const json& j) {
    return parse_dynkin(j.at("family").get<std::string>() + std::to_string(j.at("rank").get<int>()));
}

json to_json(const LaurentPoly& p) {
    json out = json::array();
    for (std::size_t t = 0; t < p.size(); ++t) {
        std::vector<int> e(p.exps(t), p.exps(t) + p.nvars());
        out.push_back({{"coef", p.coef(t)}, {"exp", e}});
    }
    return out;
}

LaurentPoly laurent_from_json(const json& j, int nvars) {
    LaurentPoly p(nvars);
    for (const auto& term : j) {
        auto e = term.at("exp").get<std::vector<std::int32_t>>();
        if (static_cast<int>(e.size()) != nvars)
            throw InvalidArgument("exponent vector has wrong length");
        p.push_term(e.data(), term.at("coef").get<std::int64_t>());
    }
    p.normalize();
    return p;
}

json to_json(const ExchangeMatrix& b) {
    return {{"n", b.n()}, {"m", b.m()}, {"entries", b.rows()}};
}

ExchangeMatrix matrix_from_json(const json& j) {
    int n = j.at("n").get<int>();
    auto rows = j.at("entries").get<IntMatrix>();
    if (static_cast<int>(rows.size()) != n)
        throw InvalidArgument("matrix row count does not match n");
    auto b = ExchangeMatrix::from_rows(rows, n);
    if (j.contains("m") && b.m() != j.at("m").get<int>())
        throw InvalidArgument("matrix column count does not match m");
    return b;
}

json to_json(const Quiver& q) {
    json arrows = json::array();
    for (auto [i, j, k] : q.arrows())
        arrows.push_back({i, j, k});
    return {{"m", q.m()}, {"n", q.n()}, {"arrows", arrows}};
}

Quiver quiver_from_json(const json& j) {
    Quiver q(j.at("m").get<int>(), j.at("n").get<int>());
    for (const auto& a : j.at("arrows"))
        q.add_arrows(a.at(0).get<int>(), a.at(1).get<int>(), a.at(2).get<int>());
    return q;
}

json to_json(const Seed& s) {
    json vars = json::array();
    for (const auto& v : s.vars)
        vars.push_back(to_json(v));
    return {{"vars", vars}, {"matrix", to_json(s.matrix)}};
}

Seed seed_from_json(const json& j) {
    Seed s;
    s.matrix = matrix_from_json(j.at("matrix"));
    for (const auto& v : j.at("vars"))
        s.vars.push_back(laurent_from_json(v, s.matrix.m()));
    if (static_cast<int>(s.vars.size()) != s.matrix.m())
        throw InvalidArgument("seed has the wrong number of variables");
    return s;
}

json to_json(const YSeedNumeric& y) {
    json vals = json::array();
    for (const auto& v : y.y)
        vals.push_back(v.get_str());
    return {{"y", vals}, {"matrix", to_json(y.matrix)}};
}

YSeedNumeric yseed_from_json(const json& j) {
    YSeedNumeric y;
    y.matrix = matrix_from_json(j.at("matrix"));
    for (const auto& v : j.at("y")) {
        mpq_class q(v.get<std::string>());
        q.canonicalize();
        y.y.push_back(q);
    }
    return y;
}

json to_json(const VertexAction& a) {
    return {{"order", a.order}, {"perm", a.perm}, {"orbits", a.orbits}};
}

VertexAction action_from_json(const json& j) {
    auto perm = j.at("perm").get<std::vector<int>>();
    VertexAction a = j.contains("orbits") ? VertexAction(perm, j.at("orbits").get<std::vector<Orbit>>())
                                          : VertexAction(perm);
    if (j.contains("order") && j.at("order").get<int>() != a.order)
        throw InvalidArgument("action order does not match the permutation");
    return a;
}

json to_json(const FoldedMatrix& f) {
    return {{"mutable_orbits", f.n_orbits}, {"orbits", f.m_orbits}, {"entries", f.entries}};
}

json to_json(const ExchangeGraph& g) {
    json vars = json::array();
    for (const auto& v : g.variables)
        vars.push_back(to_json(v));
    json edges = json::array();
    for (auto [u, v, k] : g.edges)
        edges.push_back({u, v, k});
    return {{"n", g.n},
            {"m", g.m},
            {"num_seeds", g.num_vertices()},
            {"num_cluster_variables", g.num_cluster_variables()},
            {"variables", vars},
            {"seeds", g.vertex_vars},
            {"edges", edges}};
}

std::string to_dot(const ExchangeGraph& g) {
    std::ostringstream os;
    os << "graph exchange {\n  node [shape=point];\n";
    for (std::size_t v = 0; v < g.num_vertices(); ++v)
        os << "  s" << v << ";\n";
    for (auto [u, v, k] : g.edges)
        os << "  s" << u << " -- s" << v << " [label=\"" << k + 1 << "\"];\n";
    os << "}\n";
    return os.str();
}

std::string to_dot(const Quiver& q) {
    std::ostringstream os;
    os << "digraph quiver {\n";
    for (int i = 0; i < q.m(); ++i)
        os << "  v" << i + 1 << " [label=\"" << i + 1 << "\"" << (i >= q.n() ? ", shape=box" : "") << "];\n";
    for (auto [i, j, k] : q.arrows())
        for (int t = 0; t < k; ++t)
            os << "  v" << i + 1 << " -> v" << j + 1 << ";\n";
    os << "}\n";
    return os.str();
}

}  // namespace weave
