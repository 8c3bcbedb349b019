#include <algorithm>
#include <array>
#include <optional>
#include <map>
#include <set>

#include "ngraph_detail.hpp"
#include "weave/errors.hpp"
#include "weave/ngraph.hpp"

namespace weave {

using detail::cycle_edges;
using detail::cycle_ends;
using detail::cycle_interior;

// ---------------------------------------------------------------- quiver

Quiver quiver_of(const NGraph& g, const CycleTuple& cycles) {
    const int n = static_cast<int>(cycles.size());
    std::vector<std::vector<detail::CycleEnd>> ends(n);
    std::vector<std::set<int>> interior(n), edges(n);
    for (int i = 0; i < n; ++i) {
        validate_cycle(g, cycles[i]);
        ends[i] = cycle_ends(g, cycles[i]);
        auto in = cycle_interior(g, cycles[i]);
        interior[i].insert(in.begin(), in.end());
        auto es = cycle_edges(cycles[i]);
        edges[i].insert(es.begin(), es.end());
    }
    Quiver q(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            for (int e : edges[i])
                if (edges[j].count(e))
                    throw UnsupportedConfiguration("cycles " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                                                   " share an edge");
            for (int v : interior[i])
                if (interior[j].count(v))
                    throw UnsupportedConfiguration("cycles " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                                                   " share a hexagonal point");
            int b = 0;
            for (const auto& x : ends[i])
                for (const auto& y : ends[j]) {
                    if (x.vertex != y.vertex) continue;
                    b += g.next_ccw(x.half) == y.half ? 1 : -1;
                }
            if (b > 0) q.add_arrows(i, j, b);
            if (b < 0) q.add_arrows(j, i, -b);
        }
    return q;
}

// -------------------------------------------------------------- mutation

namespace {

void check_others_avoid(const WeaveData& w, int k, const std::set<int>& edges, const std::set<int>& verts) {
    for (int i = 0; i < static_cast<int>(w.cycles.size()); ++i) {
        if (i == k) continue;
        for (int e : cycle_edges(w.cycles[i]))
            if (edges.count(e))
                throw UnsupportedConfiguration("cycle " + std::to_string(i + 1) + " shares an edge with the mutated cycle");
        for (int v : cycle_interior(w.graph, w.cycles[i]))
            if (verts.count(v))
                throw UnsupportedConfiguration("cycle " + std::to_string(i + 1) + " passes through the mutation site");
    }
}

WeaveData mutate_i(const WeaveData& w, int k) {
    const NGraph& g = w.graph;
    int e = w.cycles[k].edges[0];
    int hu = 2 * e, hv = 2 * e + 1;
    int u = g.vertex_of(hu), v = g.vertex_of(hv);
    check_others_avoid(w, k, {e}, {});
    int a1 = g.next_ccw(hu), a2 = g.next_ccw(a1);
    int c1 = g.next_ccw(hv), c2 = g.next_ccw(c1);
    WeaveData out = w;
    out.graph.set_rotation(u, {hu, c2, a1});
    out.graph.set_rotation(v, {hv, a2, c1});
    detail::revalidate(out, "I-mutation");
    return out;
}

WeaveData mutate_y(const WeaveData& w, int k) {
    const NGraph& g = w.graph;
    const CycleSpec& cy = w.cycles[k];
    for (const auto& leg : cy.legs)
        if (leg.size() != 1) throw UnsupportedConfiguration("Y-mutation needs legs of length one");
    int h = detail::y_center(g, cy);
    int c = g.edge_color(cy.legs[0][0]);
    int cp = c == 1 ? 2 : 1;
    int s = g.slot_of(g.half_at(cy.legs[0][0], h));
    const auto& hr = g.rotation(h);
    auto at = [&](int d) { return hr[(s + d) % 6]; };
    int eT = at(0) >> 1, eLL = at(2) >> 1, eLR = at(4) >> 1;
    int r1 = at(1), r2 = at(3), r3 = at(5);
    int T = g.other_end(eT, h), LL = g.other_end(eLL, h), LR = g.other_end(eLR, h);
    if (T == LL || LL == LR || T == LR) throw UnsupportedConfiguration("Y-cycle legs share an endpoint");
    auto ports = [&](int x, int e) {
        int h0 = g.half_at(e, x);
        int pa = g.next_ccw(h0);
        return std::pair<int, int>{pa, g.next_ccw(pa)};
    };
    auto [Ta, Tb] = ports(T, eT);
    auto [LLa, LLb] = ports(LL, eLL);
    auto [LRa, LRb] = ports(LR, eLR);
    check_others_avoid(w, k, {eT, eLL, eLR}, {h});

    WeaveData out = w;
    NGraph& G = out.graph;
    int H1 = G.add_vertex(VertexKind::Hexagonal, 1), H2 = G.add_vertex(VertexKind::Hexagonal, 1),
        H3 = G.add_vertex(VertexKind::Hexagonal, 1), O = G.add_vertex(VertexKind::Hexagonal, 1);
    int RT = G.add_vertex(VertexKind::Trivalent, cp), RLL = G.add_vertex(VertexKind::Trivalent, cp),
        RLR = G.add_vertex(VertexKind::Trivalent, cp);
    // first half at the first named vertex
    int h2_rt = G.add_edge(cp), h2_o = G.add_edge(c), h2_rlr = G.add_edge(cp);
    int h1_rll = G.add_edge(cp), h1_o = G.add_edge(c), h1_rt = G.add_edge(cp);
    int h3_rlr = G.add_edge(cp), h3_o = G.add_edge(c), h3_rll = G.add_edge(cp);
    int o_rt = G.add_edge(cp), o_rll = G.add_edge(cp), o_rlr = G.add_edge(cp);
    G.remove_edge(eT);
    G.remove_edge(eLL);
    G.remove_edge(eLR);
    G.remove_vertex(h);
    G.remove_vertex(T);
    G.remove_vertex(LL);
    G.remove_vertex(LR);
    G.set_rotation(H2, {r3, Ta, 2 * h2_rt, 2 * h2_o, 2 * h2_rlr, LRb});
    G.set_rotation(H1, {r1, LLa, 2 * h1_rll, 2 * h1_o, 2 * h1_rt, Tb});
    G.set_rotation(H3, {r2, LRa, 2 * h3_rlr, 2 * h3_o, 2 * h3_rll, LLb});
    G.set_rotation(O, {2 * h2_o + 1, 2 * o_rt, 2 * h1_o + 1, 2 * o_rll, 2 * h3_o + 1, 2 * o_rlr});
    G.set_rotation(RT, {2 * h1_rt + 1, 2 * o_rt + 1, 2 * h2_rt + 1});
    G.set_rotation(RLL, {2 * h3_rll + 1, 2 * o_rll + 1, 2 * h1_rll + 1});
    G.set_rotation(RLR, {2 * h2_rlr + 1, 2 * o_rlr + 1, 2 * h3_rlr + 1});

    // port half -> (vertex it ended at, extension edge)
    std::map<int, std::pair<int, int>> ext{{Ta, {T, h2_rlr}},   {Tb, {T, h1_rll}},   {LLa, {LL, h1_rt}},
                                           {LLb, {LL, h3_rlr}}, {LRa, {LR, h3_rll}}, {LRb, {LR, h2_rt}}};
    auto port_edge = [&](int e, int x) -> int {
        for (const auto& [half, info] : ext)
            if ((half >> 1) == e && info.first == x) return info.second;
        return -1;
    };
    for (int i = 0; i < static_cast<int>(out.cycles.size()); ++i) {
        if (i == k) continue;
        auto& cyc = out.cycles[i];
        auto old_ends = cycle_ends(g, w.cycles[i]);
        if (cyc.is_y()) {
            int o = detail::y_center(g, w.cycles[i]);
            for (std::size_t l = 0; l < 3; ++l) {
                auto vs = detail::path_vertices(g, w.cycles[i].legs[l], o);
                int x = port_edge(cyc.legs[l].back(), vs.back());
                if (x >= 0) cyc.legs[l].push_back(x);
            }
        } else {
            int first = old_ends[0].vertex, last = old_ends[1].vertex;
            int xl = port_edge(cyc.edges.back(), last);
            int xf = port_edge(cyc.edges.front(), first);
            if (xl >= 0) cyc.edges.push_back(xl);
            if (xf >= 0) cyc.edges.insert(cyc.edges.begin(), xf);
            if (cyc.edges.size() > 1) cyc.kind = CycleKind::LongI;
        }
    }
    out.cycles[k] = CycleSpec{y_kind_for_color(cp), {}, {{o_rt}, {o_rll}, {o_rlr}}, cy.label};
    detail::revalidate(out, "Y-mutation");
    return out;
}

}  // namespace

WeaveData legendrian_mutate(const WeaveData& w, int k) {
    if (k < 0 || k >= static_cast<int>(w.cycles.size())) throw InvalidArgument("cycle index out of range");
    validate_cycle(w.graph, w.cycles[k]);
    switch (w.cycles[k].kind) {
    case CycleKind::I: return mutate_i(w, k);
    case CycleKind::LongI: {
        // push the cycle through to an I-cycle first
        WeaveData n = apply_move(w, Move::IIStar, MoveSite{w.cycles[k].edges, -1});
        return mutate_i(n, k);
    }
    default: return mutate_y(w, k);
    }
}

// ---------------------------------------------------------------- annuli

BraidWord AnnularNGraph::inner_word() const {
    std::vector<int> w;
    for (int v : inner) w.push_back(graph.edge_color(graph.rotation(v).at(0) >> 1));
    return BraidWord(graph.N(), w);
}

AnnularNGraph empty_annulus(const BraidWord& w) {
    AnnularNGraph a;
    a.graph = NGraph(w.strands);
    std::vector<int> outer;
    for (int c : w.letters) {
        int o = a.graph.add_vertex(VertexKind::Boundary), i = a.graph.add_vertex(VertexKind::Boundary);
        int e = a.graph.add_edge(c);
        a.graph.set_rotation(o, {2 * e});
        a.graph.set_rotation(i, {2 * e + 1});
        outer.push_back(o);
        a.inner.push_back(i);
    }
    a.graph.set_boundary(outer);
    return a;
}

AnnularNGraph coxeter_padding(int a, int b, int c, bool barred) {
    if (a < 1 || b < 1 || c < 1) throw InvalidArgument("tripod legs must be >= 1");
    const int B = 1, R = 2;
    NGraph g(3);
    std::array<int, 3> len{a, b, c};
    std::array<std::vector<int>, 3> Q;
    for (int s = 0; s < 3; ++s)
        for (int j = 0; j < len[s]; ++j) Q[s].push_back(g.add_vertex(VertexKind::Hexagonal, 1));
    std::vector<std::vector<int>> rot(g.num_vertex_slots(), std::vector<int>(6, -1));
    auto stub = [&](int color, int v, int slot) {
        int bv = g.add_vertex(VertexKind::Boundary);
        int e = g.add_edge(color);
        rot.push_back({});
        rot[bv] = {2 * e + 1};
        rot[v][slot] = 2 * e;
        return bv;
    };
    auto link = [&](int color, int v, int sv, int u, int su) {
        int e = g.add_edge(color);
        rot[v][sv] = 2 * e;
        rot[u][su] = 2 * e + 1;
    };
    std::array<std::vector<int>, 3> outer, inner;
    std::array<int, 3> spill_out, bin0, in1;  // cross-sector stubs
    for (int s = 0; s < 3; ++s) {
        const auto& q = Q[s];
        int p = len[s];
        outer[s].push_back(stub(R, q[0], 5));
        for (int j = 0; j < p; ++j) outer[s].push_back(stub(B, q[j], 0));
        for (int j = 0; j + 1 < p; ++j) {
            link(R, q[j], 1, q[j + 1], 5);
            link(B, q[j], 2, q[j + 1], 4);
        }
        for (int j = 0; j < p; ++j) inner[s].push_back(stub(R, q[j], 3));
        int nxt = (s + 1) % 3;
        spill_out[nxt] = stub(B, Q[nxt][0], 4);
        in1[nxt] = stub(R, q[p - 1], 1);
        bin0[nxt] = stub(B, q[p - 1], 2);
    }
    std::vector<int> ob, ib;
    for (int s = 0; s < 3; ++s) {
        ob.insert(ob.end(), outer[s].begin(), outer[s].end());
        ob.push_back(spill_out[(s + 1) % 3]);
        ib.push_back(bin0[s]);
        ib.push_back(in1[s]);
        ib.insert(ib.end(), inner[s].begin(), inner[s].end());
    }
    for (int v = 0; v < g.num_vertex_slots(); ++v) g.set_rotation(v, rot[v]);
    g.set_boundary(ob);
    AnnularNGraph out{barred ? color_swap(g) : g, ib};
    out.graph.validate();
    return out;
}

namespace {

// Appends a copy of src to dst; returns the vertex and edge id offsets.
std::pair<int, int> append_graph(NGraph& dst, const NGraph& src) {
    int vo = dst.num_vertex_slots(), eo = dst.num_edge_slots();
    for (int v = 0; v < src.num_vertex_slots(); ++v) dst.add_vertex(src.kind(v), src.vertex_color(v));
    for (int e = 0; e < src.num_edge_slots(); ++e) dst.add_edge(src.edge_color(e));
    for (int v = 0; v < src.num_vertex_slots(); ++v) {
        std::vector<int> r;
        for (int h : src.rotation(v)) r.push_back(h + 2 * eo);
        dst.set_rotation(vo + v, r);
        if (!src.vertex_alive(v)) dst.remove_vertex(vo + v);
    }
    for (int e = 0; e < src.num_edge_slots(); ++e)
        if (!src.edge_alive(e)) dst.remove_edge(eo + e);
    return {vo, eo};
}

// Fuses the stub edges at boundary vertices s and d into one edge.
void fuse(NGraph& g, int s, int d) {
    int hs = g.rotation(s).at(0), hd = g.rotation(d).at(0);
    if ((hs >> 1) == (hd >> 1)) throw BoundaryMismatch("gluing closes a loop");
    if (g.half_color(hs) != g.half_color(hd)) throw BoundaryMismatch("boundary colors differ");
    int hx = NGraph::twin(hd);
    int x = g.vertex_of(hx);
    std::vector<int> r = g.rotation(x);
    *std::find(r.begin(), r.end(), hx) = hs;
    g.remove_vertex(s);
    g.set_rotation(x, r);
    g.remove_edge(hd >> 1);
    g.remove_vertex(d);
}

void glue(NGraph& g, const std::vector<int>& inner, const std::vector<int>& disk_bd, int offset) {
    const int L = static_cast<int>(inner.size());
    if (static_cast<int>(disk_bd.size()) != L) throw BoundaryMismatch("boundary lengths differ");
    for (int p = 0; p < L; ++p) {
        int d = disk_bd[((p + offset) % L + L) % L];
        if (g.half_color(g.rotation(inner[p]).at(0)) != g.half_color(g.rotation(d).at(0)))
            throw BoundaryMismatch("boundary letter " + std::to_string(p) + " differs");
    }
    for (int p = 0; p < L; ++p) fuse(g, inner[p], disk_bd[((p + offset) % L + L) % L]);
}

}  // namespace

WeaveData concat(const AnnularNGraph& ann, const WeaveData& disk, int offset) {
    if (ann.graph.N() != disk.graph.N()) throw BoundaryMismatch("different N");
    WeaveData out;
    out.graph = ann.graph;
    auto [vo, eo] = append_graph(out.graph, disk.graph);
    std::vector<int> bd;
    for (int v : disk.graph.boundary()) bd.push_back(v + vo);
    glue(out.graph, ann.inner, bd, offset);
    out.cycles = disk.cycles;
    for (auto& c : out.cycles) {
        for (auto& e : c.edges) e += eo;
        for (auto& leg : c.legs)
            for (auto& e : leg) e += eo;
    }
    detail::revalidate(out, "concat");
    return out;
}

AnnularNGraph concat(const AnnularNGraph& outer, const AnnularNGraph& inner, int offset) {
    if (outer.graph.N() != inner.graph.N()) throw BoundaryMismatch("different N");
    AnnularNGraph out;
    out.graph = outer.graph;
    auto [vo, eo] = append_graph(out.graph, inner.graph);
    (void)eo;
    std::vector<int> bd;
    for (int v : inner.graph.boundary()) bd.push_back(v + vo);
    glue(out.graph, outer.inner, bd, offset);
    for (int v : inner.inner) out.inner.push_back(v + vo);
    out.graph.validate();
    return out;
}

// ------------------------------------------------------- Coxeter mutation

namespace {

// (a, b, c, barred) when the boundary word is a tripod word read from 0.
std::optional<std::array<int, 4>> tripod_shape(const NGraph& g) {
    if (g.N() != 3) return std::nullopt;
    auto w = g.boundary_word().letters;
    if (w.empty()) return std::nullopt;
    int spoke = w[0];
    std::vector<int> runs;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] == spoke) {
            runs.push_back(0);
        } else {
            if (runs.empty()) return std::nullopt;
            ++runs.back();
        }
    }
    if (runs.size() != 3) return std::nullopt;
    for (int r : runs)
        if (r < 2) return std::nullopt;
    return std::array<int, 4>{runs[0] - 1, runs[1] - 1, runs[2] - 1, spoke == 1 ? 1 : 0};
}

}  // namespace

WeaveData legendrian_coxeter_mutation(const WeaveData& w) {
    if (auto sh = tripod_shape(w.graph)) {
        auto [a, b, c, barred] = *sh;
        WeaveData std_w = build_tripod(a, b, c);
        if (barred) std_w = color_swap(std_w);
        auto rel = match_cycles(std_w.graph, std_w.cycles, w.graph, w.cycles);
        bool identity = rel.has_value();
        if (identity)
            for (std::size_t i = 0; i < rel->size(); ++i) identity = identity && (*rel)[i] == static_cast<int>(i);
        if (identity) return concat(coxeter_padding(a, b, c, barred), color_swap(w));
    }
    auto split = bipartite_split(quiver_of(w.graph, w.cycles));
    if (!split) throw NotBipartite("intersection quiver is not bipartite");
    WeaveData cur = w;
    for (int k : split->plus) cur = legendrian_mutate(cur, k);
    for (int k : split->minus) cur = legendrian_mutate(cur, k);
    return cur;
}

WeaveData tripod_coxeter_power(int a, int b, int c, int r) {
    if (r < 0) throw InvalidArgument("power must be >= 0");
    WeaveData x = build_tripod(a, b, c);
    if (r % 2 == 1) x = color_swap(x);
    for (int i = r - 1; i >= 0; --i) x = concat(coxeter_padding(a, b, c, i % 2 == 1), x);
    return x;
}

}  // namespace weave
