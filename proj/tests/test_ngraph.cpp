#include <doctest.h>
#include <set>

#include "weave/errors.hpp"
#include "weave/ngraph.hpp"

using namespace weave;

namespace {

std::string canon(const NGraph& g) { return canonical_form(g).text; }

int count_kind(const NGraph& g, VertexKind k) {
    int n = 0;
    for (int v = 0; v < g.num_vertex_slots(); ++v)
        if (g.vertex_alive(v) && g.kind(v) == k) ++n;
    return n;
}

std::vector<int> alive_edges(const NGraph& g) {
    std::vector<int> out;
    for (int e = 0; e < g.num_edge_slots(); ++e)
        if (g.edge_alive(e)) out.push_back(e);
    return out;
}

// Bare graphs (no cycles) in which the local moves have room to act.
std::vector<NGraph> move_testbed() {
    return {build_tripod(1, 1, 1).graph, build_tripod(2, 2, 2).graph, build_tripod(2, 2, 3).graph,
            legendrian_mutate(build_tripod(2, 2, 2), 0).graph, tripod_coxeter_power(1, 1, 1, 1).graph};
}

}  // namespace

TEST_CASE("linear and tripod constructions") {
    for (int n = 1; n <= 7; ++n) {
        auto w = build_linear(n);
        CHECK(w.graph.N() == 2);
        CHECK(w.graph.boundary_word() == linear_boundary(n));
        CHECK(w.cycles.size() == static_cast<std::size_t>(n));
        CHECK(quiver_of(w.graph, w.cycles) == Quiver::from_matrix(linear_matrix(n)));
        CHECK(count_kind(w.graph, VertexKind::Trivalent) == n + 1);
    }
    for (int a = 1; a <= 4; ++a)
        for (int b = 1; b <= 4; ++b)
            for (int c = 1; c <= 4; ++c) {
                auto w = build_tripod(a, b, c);
                CHECK(w.graph.N() == 3);
                CHECK(w.graph.boundary_word() == tripod_boundary(a, b, c));
                CHECK(w.cycles.size() == static_cast<std::size_t>(a + b + c - 2));
                CHECK(quiver_of(w.graph, w.cycles) == Quiver::from_matrix(tripod_matrix(a, b, c)));
                CHECK_NOTHROW(w.graph.validate());
                for (const auto& cy : w.cycles) CHECK_NOTHROW(validate_cycle(w.graph, cy));
            }
    CHECK_THROWS_AS(build_tripod(0, 1, 1), InvalidArgument);
}

TEST_CASE("face count matches Euler characteristic of the disk") {
    std::vector<NGraph> gs = {build_linear(1).graph, build_linear(5).graph, build_tripod(1, 1, 1).graph,
                              build_tripod(2, 3, 4).graph, tripod_coxeter_power(2, 2, 2, 2).graph};
    for (const auto& g : gs) {
        auto fm = faces(g);
        int V = g.num_vertices(), E = g.num_edges(), L = static_cast<int>(g.boundary().size());
        CHECK(static_cast<int>(fm.faces.size()) == 1 + E + L - V);
        // every arc lies in exactly one face
        std::multiset<int> arcs;
        for (const auto& f : fm.faces) arcs.insert(f.arcs.begin(), f.arcs.end());
        CHECK(static_cast<int>(arcs.size()) == L);
        CHECK(static_cast<int>(std::set<int>(arcs.begin(), arcs.end()).size()) == L);
    }
}

TEST_CASE("color swap") {
    auto w = build_tripod(2, 3, 2);
    auto s = color_swap(w);
    auto word = w.graph.boundary_word(), swapped = s.graph.boundary_word();
    REQUIRE(word.size() == swapped.size());
    for (std::size_t i = 0; i < word.size(); ++i) CHECK(swapped.letters[i] == 3 - word.letters[i]);
    CHECK(canon(color_swap(s.graph)) == canon(w.graph));
    CHECK(quiver_of(color_swap(s).graph, color_swap(s).cycles) == quiver_of(w.graph, w.cycles));
}

TEST_CASE("annulus concatenation") {
    for (auto [a, b, c] : {std::tuple{1, 1, 1}, {2, 2, 2}, {1, 2, 3}}) {
        auto C = coxeter_padding(a, b, c, false);
        auto Cb = coxeter_padding(a, b, c, true);
        auto g = build_tripod(a, b, c);
        // the inner word of C is the boundary of the color-swapped tripod
        CHECK(C.inner_word() == color_swap(g.graph).boundary_word());
        CHECK(C.outer_word() == g.graph.boundary_word());

        auto once = concat(C, color_swap(g));
        CHECK_NOTHROW(once.graph.validate());
        // Cb . (C . swap(G)) == (Cb . C) . swap(G), with the boundary of G back on the outside
        auto twice = concat(Cb, once);
        CHECK(twice.graph.boundary_word() == color_swap(g.graph).boundary_word());
        CHECK(canon(concat(concat(Cb, C), color_swap(g)).graph) == canon(twice.graph));
        // empty annulus is an identity
        auto e = empty_annulus(g.graph.boundary_word());
        CHECK(canon(concat(e, g).graph) == canon(g.graph));
    }
    auto g = build_tripod(1, 1, 1);
    CHECK_THROWS_AS(concat(empty_annulus(linear_boundary(2)), g), BoundaryMismatch);
}

TEST_CASE("Legendrian mutation is functorial on quivers") {
    std::vector<WeaveData> ws = {build_linear(3), build_linear(4), build_tripod(1, 1, 1), build_tripod(2, 2, 2),
                                 build_tripod(2, 2, 3)};
    for (const auto& w : ws) {
        auto q = quiver_of(w.graph, w.cycles);
        for (int k = 0; k < static_cast<int>(w.cycles.size()); ++k) {
            INFO("cycle " << k);
            auto m = legendrian_mutate(w, k);
            CHECK_NOTHROW(m.graph.validate());
            CHECK(m.graph.boundary_word() == w.graph.boundary_word());
            CHECK(quiver_of(m.graph, m.cycles) == mutate_quiver(q, k));
            auto back = legendrian_mutate(m, k);
            CHECK(quiver_of(back.graph, back.cycles) == q);
        }
    }
    CHECK_THROWS_AS(legendrian_mutate(build_linear(2), 2), InvalidArgument);
}

TEST_CASE("Legendrian Coxeter mutation") {
    for (int a = 1; a <= 4; ++a)
        for (int b = 1; b <= 4; ++b)
            for (int c = 1; c <= 4; ++c) {
                INFO(a << b << c);
                auto w = build_tripod(a, b, c);
                auto want = coxeter_mutation(Quiver::from_matrix(tripod_matrix(a, b, c)));
                auto cat = concat(coxeter_padding(a, b, c, false), color_swap(w));
                CHECK(quiver_of(cat.graph, cat.cycles) == want);
            }
    for (int n = 1; n <= 6; ++n) {
        auto w = build_linear(n);
        auto m = legendrian_coxeter_mutation(w);
        CHECK(canon(m.graph) == canon(rotate(w.graph, -1)));
        CHECK(quiver_of(m.graph, m.cycles) == coxeter_mutation(quiver_of(w.graph, w.cycles)));
    }
    for (int r = 0; r <= 3; ++r) {
        auto w = tripod_coxeter_power(2, 2, 2, r);
        auto q = Quiver::from_matrix(tripod_matrix(2, 2, 2));
        for (int i = 0; i < r; ++i) q = coxeter_mutation(q);
        CHECK(quiver_of(w.graph, w.cycles) == q);
    }
    CHECK_THROWS_AS(tripod_coxeter_power(1, 1, 1, -1), InvalidArgument);
}

TEST_CASE("rotation") {
    for (int n = 1; n <= 6; ++n) {
        auto g = build_linear(n).graph;
        int L = static_cast<int>(g.boundary().size());
        CHECK(canon(rotate(g, L)) == canon(g));
        CHECK(canon(rotate(rotate(g, 1), -1)) == canon(g));
    }
    auto t = build_tripod(2, 2, 3).graph;
    CHECK_THROWS_AS(rotate(t, 1), BoundaryNotRotationInvariant);
}

TEST_CASE("rotation symmetry of standard graphs") {
    for (int n = 1; n <= 7; n += 2) {
        auto g = build_linear(n).graph;
        CHECK(is_rotation_symmetric(g, 2));
    }
    CHECK(is_rotation_symmetric(build_tripod(2, 2, 2).graph, 3));
    CHECK(is_rotation_symmetric(build_tripod(1, 1, 1).graph, 3));
    CHECK_FALSE(is_rotation_symmetric(build_tripod(3, 2, 2).graph, 3));
}

TEST_CASE("ray symmetry and partial rotation") {
    for (int n = 3; n <= 6; ++n) {
        auto w = build_tripod(n - 1, 2, 2);
        REQUIRE(is_ray_symmetric(w.graph));
        auto rs = find_rays(w.graph);
        REQUIRE(rs);
        CHECK(rs->spokes.size() == 3);
        auto p = partial_rotation(w);
        CHECK(canon(p.graph) == canon(w.graph));
        CHECK(quiver_of(p.graph, p.cycles) == quiver_of(w.graph, w.cycles));
    }
    auto padded = tripod_coxeter_power(2, 3, 3, 1);
    CHECK_FALSE(is_ray_symmetric(padded.graph));
    CHECK_THROWS_AS(partial_rotation(padded), NotRaySymmetric);
}

TEST_CASE("G-admissibility") {
    struct Case {
        AdmissibleSetting s;
        int n;
    };
    for (auto [s, n] : {Case{AdmissibleSetting::A_odd, 2}, {AdmissibleSetting::A_odd, 3},
                        {AdmissibleSetting::D4, 2}, {AdmissibleSetting::D_partial, 3},
                        {AdmissibleSetting::D_partial, 4}, {AdmissibleSetting::E6, 4}}) {
        INFO(to_string(s) << " rank " << n);
        auto w = standard_admissible_graph(s, n);
        auto r = is_G_admissible(w, s);
        REQUIRE(r.ok());
        auto act = action_from_relabel(r.relabel);
        auto q = quiver_of(w.graph, w.cycles);
        CHECK(check_admissible(q.exchange_matrix(), act).ok());
        CHECK(act.orbits.size() == static_cast<std::size_t>(n));
    }
    CHECK_FALSE(is_G_admissible(build_tripod(3, 2, 2), AdmissibleSetting::D4).ok());
    CHECK_FALSE(is_G_admissible(build_tripod(2, 3, 2), AdmissibleSetting::E6).ok());
    CHECK_FALSE(is_G_admissible(build_linear(2), AdmissibleSetting::A_odd).ok());
    CHECK(parse_setting(to_string(AdmissibleSetting::E6)) == AdmissibleSetting::E6);
    CHECK_THROWS_AS(parse_setting("Z9"), InvalidArgument);
}

TEST_CASE("Move I round trip") {
    int trips = 0;
    for (const auto& g : move_testbed()) {
        WeaveData w{g, {}};
        const std::string before = canon(g);
        auto es = alive_edges(g);
        for (int mid : es)
            for (int up : es)
                for (int down : es) {
                    if (mid == up || mid == down || up == down) continue;
                    if (g.edge_color(up) != g.edge_color(down) || g.edge_color(up) == g.edge_color(mid)) continue;
                    WeaveData b;
                    try {
                        b = apply_move(w, Move::I, {{mid, up, down}, -1}, true);
                    } catch (const SiteMismatch&) {
                        continue;
                    }
                    // the new hexagon edge is the first edge added
                    int ee = g.num_edge_slots();
                    REQUIRE(b.graph.edge_alive(ee));
                    auto f = apply_move(b, Move::I, {{ee}, -1});
                    CHECK(canon(f.graph) == before);
                    CHECK(f.graph.boundary_word() == g.boundary_word());
                    ++trips;
                }
    }
    CHECK(trips > 0);
    auto w = build_tripod(1, 1, 1);
    CHECK_THROWS_AS(apply_move(w, Move::I, {{0, 1}, -1}), SiteMismatch);
}

TEST_CASE("Move II round trip") {
    int trips = 0;
    for (const auto& g : move_testbed()) {
        WeaveData w{g, {}};
        const std::string before = canon(g);
        for (int P = 0; P < g.num_vertex_slots(); ++P) {
            if (!g.vertex_alive(P) || g.kind(P) != VertexKind::Trivalent) continue;
            for (int h : g.rotation(P)) {
                WeaveData f;
                try {
                    f = apply_move(w, Move::II, {{NGraph::edge_of(h)}, P});
                } catch (const SiteMismatch&) {
                    continue;
                }
                CHECK(f.graph.boundary_word() == g.boundary_word());
                bool back = false;
                for (int R = 0; R < f.graph.num_vertex_slots() && !back; ++R) {
                    if (!f.graph.vertex_alive(R) || f.graph.kind(R) != VertexKind::Trivalent) continue;
                    try {
                        back = canon(apply_move(f, Move::II, {{}, R}, true).graph) == before;
                    } catch (const SiteMismatch&) {
                    }
                }
                CHECK(back);
                ++trips;
            }
        }
    }
    CHECK(trips > 0);
    auto w = build_tripod(1, 1, 1);
    int hex = -1;
    for (int v = 0; v < w.graph.num_vertex_slots(); ++v)
        if (w.graph.vertex_alive(v) && w.graph.kind(v) == VertexKind::Hexagonal) hex = v;
    REQUIRE(hex >= 0);
    CHECK_THROWS_AS(apply_move(w, Move::II, {{NGraph::edge_of(w.graph.rotation(hex)[0])}, hex}), SiteMismatch);
}

TEST_CASE("long I-cycles normalize to I-cycles") {
    auto w = tripod_coxeter_power(1, 1, 1, 1);
    auto n = normalize_long_i(w);
    for (const auto& c : n.cycles) CHECK(c.kind != CycleKind::LongI);
    CHECK(quiver_of(n.graph, n.cycles) == quiver_of(w.graph, w.cycles));
    CHECK(n.graph.boundary_word() == w.graph.boundary_word());
    CHECK_THROWS_AS(apply_move(build_linear(2), Move::IIStar, {{0}, -1}, true), SiteMismatch);
}

TEST_CASE("JSON round trip") {
    std::vector<WeaveData> ws = {build_linear(3), build_tripod(2, 2, 3), tripod_coxeter_power(1, 2, 2, 1)};
    for (const auto& w : ws) {
        auto j = to_json(w);
        auto r = weave_from_json(j);
        CHECK(canon(r.graph) == canon(w.graph));
        CHECK(quiver_of(r.graph, r.cycles) == quiver_of(w.graph, w.cycles));
        CHECK(to_json(r) == j);
    }
    auto j = to_json(build_linear(1));
    j["cycles"][0]["edges"] = {9999};
    CHECK_THROWS(weave_from_json(j));
}

TEST_CASE("drawing output") {
    auto w = build_tripod(1, 1, 1);
    auto dot = to_dot(w);
    CHECK(dot.find("graph") != std::string::npos);
    auto svg = to_svg(w);
    CHECK(svg.rfind("<svg", 0) == 0);
    CHECK(svg.find("</svg>") != std::string::npos);
}
