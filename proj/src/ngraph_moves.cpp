#include <algorithm>
#include <array>
#include <numeric>
#include <set>

#include "ngraph_detail.hpp"
#include "weave/errors.hpp"
#include "weave/ngraph.hpp"

namespace weave {

using detail::cycle_edges;
using detail::cycle_ends;
using detail::cycle_interior;

namespace {

// Puts `fresh` in the rotation slot currently held by `old`.
void replace_half(NGraph& g, int old, int fresh) {
    int v = g.vertex_of(old);
    std::vector<int> r = g.rotation(v);
    *std::find(r.begin(), r.end(), old) = fresh;
    g.set_rotation(v, r);
}

bool uses_any(const NGraph& g, const CycleSpec& c, const std::set<int>& edges, const std::set<int>& verts) {
    for (int e : cycle_edges(c))
        if (edges.count(e)) return true;
    for (int v : cycle_interior(g, c))
        if (verts.count(v)) return true;
    return false;
}

void reject_touching(const WeaveData& w, const std::set<int>& edges, const std::set<int>& verts, const char* what) {
    for (const auto& c : w.cycles)
        if (uses_any(w.graph, c, edges, verts))
            throw UnsupportedConfiguration(std::string(what) + ": cycle " + std::to_string(c.label) +
                                           " crosses the site");
}

int other_color(int c) { return c == 1 ? 2 : 1; }

// ---------------------------------------------------------------- Move I

WeaveData move_one_forward(const WeaveData& w, const MoveSite& site) {
    const NGraph& g = w.graph;
    if (site.edges.size() != 1) throw SiteMismatch("Move I needs the edge joining the two hexagons");
    int e = site.edges[0];
    int L = g.vertex_of(2 * e), R = g.vertex_of(2 * e + 1);
    if (g.kind(L) != VertexKind::Hexagonal || g.kind(R) != VertexKind::Hexagonal)
        throw SiteMismatch("Move I edge does not join two hexagonal points");
    auto ring = [&](int h) {
        std::vector<int> r{h};
        for (int k = 1; k < 6; ++k) r.push_back(g.next_ccw(r.back()));
        return r;
    };
    auto l = ring(2 * e), r = ring(2 * e + 1);
    // l = (e, up, UL, W, LL, low), r = (e, low, LR, E, UR, up)
    if ((l[1] >> 1) != (r[5] >> 1) || (l[5] >> 1) != (r[1] >> 1) || (l[1] >> 1) == (l[5] >> 1))
        throw SiteMismatch("Move I needs a double bigon around the edge");
    std::set<int> bad{e, l[1] >> 1, l[5] >> 1};
    for (auto [a, b] : {std::pair{l[2], r[4]}, {l[3], r[3]}, {l[4], r[2]}})
        if ((a >> 1) == (b >> 1)) throw SiteMismatch("Move I strands close up");
    reject_touching(w, bad, {L, R}, "Move I");
    WeaveData out = w;
    NGraph& G = out.graph;
    for (auto [a, b] : {std::pair{l[2], r[4]}, {l[3], r[3]}, {l[4], r[2]}}) {
        // keep edge of a; its L-side half takes the far slot of b
        replace_half(G, NGraph::twin(b), a);
        G.remove_edge(b >> 1);
    }
    for (int x : bad) G.remove_edge(x);
    G.remove_vertex(L);
    G.remove_vertex(R);
    detail::revalidate(out, "Move I");
    return out;
}

WeaveData move_one_backward(const WeaveData& w, const MoveSite& site) {
    const NGraph& g = w.graph;
    if (site.edges.size() != 3) throw SiteMismatch("backward Move I needs {middle, upper, lower}");
    int mid = site.edges[0], up = site.edges[1], down = site.edges[2];
    if (mid == up || mid == down || up == down) throw SiteMismatch("backward Move I edges must differ");
    int c = g.edge_color(up), cp = g.edge_color(mid);
    if (g.edge_color(down) != c || std::abs(c - cp) != 1) throw SiteMismatch("backward Move I colors do not fit");
    auto fm = faces(g);
    int hm = -1, hu = -1, hd = -1;
    for (int cand : {2 * mid, 2 * mid + 1}) {
        int f1 = fm.face_of_half[cand], f2 = fm.face_of_half[NGraph::twin(cand)];
        int a = -1, b = -1;
        for (int h : {2 * up, 2 * up + 1})
            if (fm.face_of_half[h] == f1) a = h;
        for (int h : {2 * down, 2 * down + 1})
            if (fm.face_of_half[h] == f2) b = h;
        if (a >= 0 && b >= 0) {
            hm = cand;
            hu = a;
            hd = b;
            break;
        }
    }
    if (hm < 0) throw SiteMismatch("strands are not parallel across one face");
    for (const auto& cy : w.cycles)
        for (int x : cycle_edges(cy))
            if (x == mid || x == up || x == down)
                throw UnsupportedConfiguration("backward Move I: cycle " + std::to_string(cy.label) + " uses a strand");
    WeaveData out = w;
    NGraph& G = out.graph;
    int hex_color = std::min(c, cp);
    int L = G.add_vertex(VertexKind::Hexagonal, hex_color), R = G.add_vertex(VertexKind::Hexagonal, hex_color);
    int ee = G.add_edge(c), ucurve = G.add_edge(cp), lcurve = G.add_edge(cp);
    int upW = G.add_edge(c), midE = G.add_edge(cp), downE = G.add_edge(c);
    replace_half(G, NGraph::twin(hm), 2 * midE + 1);
    replace_half(G, NGraph::twin(hu), 2 * upW + 1);
    replace_half(G, NGraph::twin(hd), 2 * downE + 1);
    G.set_rotation(L, {2 * ee, 2 * ucurve, 2 * upW, NGraph::twin(hm), NGraph::twin(hd), 2 * lcurve});
    G.set_rotation(R, {2 * ee + 1, 2 * lcurve + 1, 2 * downE, 2 * midE, NGraph::twin(hu), 2 * ucurve + 1});
    detail::revalidate(out, "Move I");
    return out;
}

// --------------------------------------------------------------- Move II

WeaveData move_two_forward(const WeaveData& w, int P, int eP) {
    const NGraph& g = w.graph;
    if (P < 0 || P >= g.num_vertex_slots() || !g.vertex_alive(P) || g.kind(P) != VertexKind::Trivalent)
        throw SiteMismatch("Move II needs a trivalent vertex");
    int hP = g.half_at(eP, P), hH = NGraph::twin(hP);
    int H = g.vertex_of(hH);
    if (g.kind(H) != VertexKind::Hexagonal) throw SiteMismatch("Move II edge does not reach a hexagonal point");
    int c = g.vertex_color(P), cp = other_color(c);
    std::vector<int> hr;
    for (int k = 0, h = hH; k < 6; ++k, h = g.next_ccw(h)) hr.push_back(h);
    // hr = (P, SW, SE, E, NE, NW)
    int SW = hr[1], SE = hr[2], E = hr[3], NE = hr[4], NW = hr[5];
    int PNW = g.next_ccw(hP), PSW = g.next_ccw(PNW);
    if (g.vertex_of(NGraph::twin(PNW)) == H || g.vertex_of(NGraph::twin(PSW)) == H)
        throw SiteMismatch("Move II vertex is joined twice to the hexagonal point");

    // cycle transport plan (computed on the old graph)
    WeaveData out = w;
    NGraph& G = out.graph;
    int hex_color = std::min(c, cp);
    int H1 = G.add_vertex(VertexKind::Hexagonal, hex_color), H2 = G.add_vertex(VertexKind::Hexagonal, hex_color);
    int R = G.add_vertex(VertexKind::Trivalent, cp);
    int curve = G.add_edge(cp), bl = G.add_edge(c), r1 = G.add_edge(cp), r2 = G.add_edge(cp);
    for (std::size_t i = 0; i < w.cycles.size(); ++i) {
        const auto& oc = w.cycles[i];
        auto& cy = out.cycles[i];
        auto fix_path = [&](std::vector<int>& path, int start) {
            auto vs = detail::path_vertices(g, path, start);
            auto pos = std::find(path.begin(), path.end(), eP);
            if (pos != path.end()) {
                std::size_t k = pos - path.begin();
                bool ok = (k + 1 == path.size() && k > 0 && path[k - 1] == (E >> 1)) ||
                          (k == 0 && start < 0 && path.size() > 1 && path[1] == (E >> 1));
                if (!ok) throw UnsupportedConfiguration("Move II: cycle " + std::to_string(oc.label) + " crosses the site");
                path.erase(pos);
                return;
            }
            for (std::size_t k = 1; k + 1 < vs.size(); ++k)
                if (vs[k] == H) throw UnsupportedConfiguration("Move II: cycle " + std::to_string(oc.label) + " crosses the site");
            auto extend = [&](int endv, int e, bool back) {
                if (endv != P) return;
                int x = (e == (PNW >> 1)) ? r1 : (e == (PSW >> 1)) ? r2 : -1;
                if (x < 0) return;
                if (back) path.push_back(x);
                else path.insert(path.begin(), x);
            };
            int first = vs.front(), last = vs.back();
            int fe = path.front(), le = path.back();
            extend(last, le, true);
            if (start < 0) extend(first, fe, false);
        };
        if (oc.is_y()) {
            int o = detail::y_center(g, oc);
            if (o == H) throw UnsupportedConfiguration("Move II: Y-cycle centered at the site");
            for (auto& leg : cy.legs) fix_path(leg, o);
        } else {
            fix_path(cy.edges, -1);
            cy.kind = cy.edges.size() == 1 ? CycleKind::I : CycleKind::LongI;
        }
    }
    G.remove_edge(eP);
    G.remove_vertex(H);
    G.remove_vertex(P);
    G.set_rotation(H1, {NE, NW, PNW, 2 * curve, 2 * bl, 2 * r1});
    G.set_rotation(H2, {SE, 2 * r2, 2 * bl + 1, 2 * curve + 1, PSW, SW});
    G.set_rotation(R, {E, 2 * r1 + 1, 2 * r2 + 1});
    detail::revalidate(out, "Move II");
    return out;
}

WeaveData move_two_backward(const WeaveData& w, int R) {
    const NGraph& g = w.graph;
    if (R < 0 || R >= g.num_vertex_slots() || !g.vertex_alive(R) || g.kind(R) != VertexKind::Trivalent)
        throw SiteMismatch("backward Move II needs a trivalent vertex");
    int cp = g.vertex_color(R), c = other_color(cp);
    const auto& rr = g.rotation(R);
    bool found = false;
    int E = -1, H1 = -1, H2 = -1, NE = -1, NW = -1, PNW = -1, SE = -1, PSW = -1, SW = -1;
    int curve = -1, bl = -1, r1 = -1, r2 = -1;
    for (int s = 0; s < 3 && !found; ++s) {
        int hE = rr[s], h1 = rr[(s + 1) % 3], h2 = rr[(s + 2) % 3];
        int a = g.vertex_of(NGraph::twin(h1)), b = g.vertex_of(NGraph::twin(h2));
        if (g.kind(a) != VertexKind::Hexagonal || g.kind(b) != VertexKind::Hexagonal || a == b) continue;
        std::vector<int> x, y;
        for (int k = 0, h = NGraph::twin(h1); k < 6; ++k, h = g.next_ccw(h)) x.push_back(h);
        for (int k = 0, h = NGraph::twin(h2); k < 6; ++k, h = g.next_ccw(h)) y.push_back(h);
        // x = (r1, NE, NW, PNW, curve, blue), y = (r2, blue, curve, PSW, SW, SE)
        if ((x[4] >> 1) != (y[2] >> 1) || (x[5] >> 1) != (y[1] >> 1)) continue;
        found = true;
        E = hE;
        H1 = a;
        H2 = b;
        NE = x[1];
        NW = x[2];
        PNW = x[3];
        curve = x[4] >> 1;
        bl = x[5] >> 1;
        PSW = y[3];
        SW = y[4];
        SE = y[5];
        r1 = h1 >> 1;
        r2 = h2 >> 1;
    }
    if (!found) throw SiteMismatch("no Move II pattern at this vertex");
    WeaveData out = w;
    NGraph& G = out.graph;
    int H = G.add_vertex(VertexKind::Hexagonal, std::min(c, cp));
    int P = G.add_vertex(VertexKind::Trivalent, c);
    int eP = G.add_edge(c);
    for (std::size_t i = 0; i < w.cycles.size(); ++i) {
        const auto& oc = w.cycles[i];
        auto& cy = out.cycles[i];
        auto fix_path = [&](std::vector<int>& path, int start) {
            // [.., PNW, r1] -> [.., PNW]
            auto strip = [&](bool back) {
                if (path.size() < 2) return false;
                int e = back ? path.back() : path.front();
                int f = back ? path[path.size() - 2] : path[1];
                if ((e == r1 && f == (PNW >> 1)) || (e == r2 && f == (PSW >> 1))) {
                    if (back) path.pop_back();
                    else path.erase(path.begin());
                    return true;
                }
                return false;
            };
            bool sb = strip(true);
            bool sf = start < 0 && strip(false);
            auto vs = detail::path_vertices(g, path, start);
            for (std::size_t k = 1; k + 1 < vs.size(); ++k)
                if (vs[k] == H1 || vs[k] == H2 || vs[k] == R)
                    throw UnsupportedConfiguration("Move II: cycle " + std::to_string(oc.label) + " crosses the site");
            for (int e : path)
                if (e == curve || e == bl || e == r1 || e == r2)
                    throw UnsupportedConfiguration("Move II: cycle " + std::to_string(oc.label) + " crosses the site");
            auto handle = [&](bool back) {
                int endv = back ? vs.back() : vs.front();
                if (endv != R) return;
                int e = back ? path.back() : path.front();
                if (e != (E >> 1))
                    throw UnsupportedConfiguration("Move II: cycle " + std::to_string(oc.label) + " ends at the site");
                if (back) path.push_back(eP);
                else path.insert(path.begin(), eP);
            };
            if (!sb) handle(true);
            if (start < 0 && !sf) handle(false);
        };
        if (oc.is_y()) {
            int o = detail::y_center(g, oc);
            if (o == H1 || o == H2) throw UnsupportedConfiguration("Move II: Y-cycle centered at the site");
            for (auto& leg : cy.legs) fix_path(leg, o);
        } else {
            fix_path(cy.edges, -1);
            cy.kind = cy.edges.size() == 1 ? CycleKind::I : CycleKind::LongI;
        }
    }
    for (int e : {curve, bl, r1, r2}) G.remove_edge(e);
    G.remove_vertex(H1);
    G.remove_vertex(H2);
    G.remove_vertex(R);
    G.set_rotation(H, {E, NE, NW, 2 * eP, SW, SE});
    G.set_rotation(P, {2 * eP + 1, PNW, PSW});
    detail::revalidate(out, "Move II");
    return out;
}

WeaveData push_through(const WeaveData& w, const std::vector<int>& path) {
    int idx = -1;
    for (std::size_t i = 0; i < w.cycles.size(); ++i) {
        auto rev = w.cycles[i].edges;
        std::reverse(rev.begin(), rev.end());
        if (!w.cycles[i].is_y() && (w.cycles[i].edges == path || rev == path)) idx = static_cast<int>(i);
    }
    WeaveData cur = w;
    if (idx < 0) {
        CycleSpec c{path.size() == 1 ? CycleKind::I : CycleKind::LongI, path, {}, 0};
        try {
            validate_cycle(w.graph, c);
        } catch (const InvalidGraph& e) {
            throw SiteMismatch(std::string("II* needs a long I-cycle path: ") + e.what());
        }
        cur.cycles.push_back(c);
        idx = static_cast<int>(cur.cycles.size()) - 1;
    }
    cur.cycles[idx].edges = path;
    while (cur.cycles[idx].edges.size() > 1) {
        const auto& p = cur.cycles[idx].edges;
        int start = detail::path_vertices(cur.graph, p).front();
        cur = move_two_forward(cur, start, p.front());
    }
    cur.cycles[idx].kind = CycleKind::I;
    if (idx >= static_cast<int>(w.cycles.size())) cur.cycles.pop_back();
    return cur;
}

}  // namespace

WeaveData apply_move(const WeaveData& w, Move m, const MoveSite& site, bool backward) {
    switch (m) {
    case Move::I: return backward ? move_one_backward(w, site) : move_one_forward(w, site);
    case Move::II:
        if (backward) return move_two_backward(w, site.vertex);
        if (site.edges.size() != 1) throw SiteMismatch("Move II needs the edge from the trivalent vertex");
        return move_two_forward(w, site.vertex, site.edges[0]);
    case Move::IIStar:
        if (backward) throw SiteMismatch("II* has no backward form");
        return push_through(w, site.edges);
    }
    throw InvalidArgument("unknown move");
}

WeaveData normalize_long_i(const WeaveData& w) {
    WeaveData cur = w;
    for (std::size_t i = 0; i < cur.cycles.size(); ++i)
        if (cur.cycles[i].kind == CycleKind::LongI) cur = push_through(cur, cur.cycles[i].edges);
    return cur;
}

// -------------------------------------------------------------- symmetry

std::optional<RaySpokes> find_rays(const NGraph& g) {
    if (g.N() != 3 || g.boundary().empty()) return std::nullopt;
    int b0 = g.boundary()[0];
    int h = NGraph::twin(g.rotation(b0).at(0));
    int o = g.vertex_of(h);
    if (g.kind(o) != VertexKind::Hexagonal) return std::nullopt;
    RaySpokes rs{o, {}};
    for (int k = 0; k < 3; ++k) {
        int s = g.rotation(o)[(g.slot_of(h) + 2 * k) % 6];
        int v = g.vertex_of(NGraph::twin(s));
        if (g.kind(v) != VertexKind::Boundary) return std::nullopt;
        rs.spokes.push_back(s);
    }
    return rs;
}

namespace {

// Boundary positions of the three sectors, or nullopt if some component
// between the rays reaches outside its own sector.
std::optional<std::array<std::vector<int>, 3>> sectors(const NGraph& g, const RaySpokes& rs) {
    const auto& bd = g.boundary();
    std::array<int, 3> p;
    for (int k = 0; k < 3; ++k) p[k] = g.boundary_position(g.vertex_of(NGraph::twin(rs.spokes[k])));
    if (p[0] != 0 || !(p[0] < p[1] && p[1] < p[2])) return std::nullopt;
    std::array<std::vector<int>, 3> sec;
    for (int k = 0; k < 3; ++k) {
        int hi = k == 2 ? static_cast<int>(bd.size()) : p[k + 1];
        for (int q = p[k] + 1; q < hi; ++q) sec[k].push_back(q);
        // flood from the non-spoke half between spokes k and k+1
        int start = g.next_ccw(rs.spokes[k]);
        std::vector<bool> seen(g.num_vertex_slots(), false);
        seen[rs.center] = true;
        std::vector<int> stack{g.vertex_of(NGraph::twin(start))};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            if (seen[v]) continue;
            seen[v] = true;
            int q = g.boundary_position(v);
            if (q >= 0 && !std::binary_search(sec[k].begin(), sec[k].end(), q)) return std::nullopt;
            for (int h : g.rotation(v)) {
                int u = g.vertex_of(NGraph::twin(h));
                if (u == rs.center && h != NGraph::twin(start)) return std::nullopt;
                if (!seen[u]) stack.push_back(u);
            }
        }
    }
    return sec;
}

}  // namespace

bool is_ray_symmetric(const NGraph& g) {
    auto rs = find_rays(g);
    return rs && sectors(g, *rs).has_value();
}

WeaveData partial_rotation(const WeaveData& w) {
    const NGraph& g = w.graph;
    auto rs = find_rays(g);
    if (!rs) throw NotRaySymmetric("no central hexagonal point with three boundary spokes");
    auto sec = sectors(g, *rs);
    if (!sec) throw NotRaySymmetric("sectors are not separated by the rays");
    const auto& bd = g.boundary();
    WeaveData out = w;
    const auto& sp = rs->spokes;
    std::vector<int> rot{sp[0], g.next_ccw(sp[0]), sp[1], g.next_ccw(sp[2]), sp[2], g.next_ccw(sp[1])};
    std::vector<int> nb;
    auto spoke_vertex = [&](int k) { return g.vertex_of(NGraph::twin(rs->spokes[k])); };
    nb.push_back(spoke_vertex(0));
    for (int q : (*sec)[0]) nb.push_back(bd[q]);
    nb.push_back(spoke_vertex(1));
    for (int q : (*sec)[2]) nb.push_back(bd[q]);
    nb.push_back(spoke_vertex(2));
    for (int q : (*sec)[1]) nb.push_back(bd[q]);
    out.graph.set_rotation(rs->center, rot);
    out.graph.set_boundary(nb);
    detail::revalidate(out, "partial rotation");
    return out;
}

AdmissibleSetting parse_setting(const std::string& s) {
    if (s == "A_odd" || s == "A" || s == "a-odd") return AdmissibleSetting::A_odd;
    if (s == "D4" || s == "d4") return AdmissibleSetting::D4;
    if (s == "D_partial" || s == "Dn" || s == "d-partial") return AdmissibleSetting::D_partial;
    if (s == "E6" || s == "e6") return AdmissibleSetting::E6;
    throw InvalidArgument("unknown admissibility setting '" + s + "' (A_odd, D4, D_partial, E6)");
}

std::string to_string(AdmissibleSetting s) {
    switch (s) {
    case AdmissibleSetting::A_odd: return "A_odd";
    case AdmissibleSetting::D4: return "D4";
    case AdmissibleSetting::D_partial: return "D_partial";
    case AdmissibleSetting::E6: return "E6";
    }
    return "?";
}

GAdmissibility is_G_admissible(const WeaveData& w, AdmissibleSetting s) {
    GAdmissibility r;
    const int m = static_cast<int>(w.cycles.size());
    const int L = static_cast<int>(w.graph.boundary().size());
    WeaveData tw;
    try {
        switch (s) {
        case AdmissibleSetting::A_odd:
            if (L % 2) return r;
            tw = {rotate(w.graph, L / 2), w.cycles};
            break;
        case AdmissibleSetting::D4:
            if (L % 3) return r;
            tw = {rotate(w.graph, L / 3), w.cycles};
            break;
        default: tw = partial_rotation(w);
        }
    } catch (const Error&) {
        return r;
    }
    r.graph_symmetric = canonical_form(tw.graph).text == canonical_form(w.graph).text;
    if (!r.graph_symmetric) return r;
    auto rel = match_cycles(w.graph, w.cycles, tw.graph, tw.cycles);
    if (!rel) return r;
    r.relabel = *rel;
    std::vector<int> expect(m);
    std::iota(expect.begin(), expect.end(), 0);
    switch (s) {
    case AdmissibleSetting::A_odd:
        for (int i = 0; i < m; ++i) expect[i] = m - 1 - i;
        r.cycles_match = r.relabel == expect;
        break;
    case AdmissibleSetting::D4: {
        // center fixed, legs permuted cyclically in either direction
        bool ok = m == 4 && r.relabel[0] == 0;
        std::vector<int> fwd{0, 2, 3, 1}, bwd{0, 3, 1, 2};
        r.cycles_match = ok && (r.relabel == fwd || r.relabel == bwd);
        break;
    }
    case AdmissibleSetting::D_partial:
        if (m < 3) return r;
        std::swap(expect[m - 2], expect[m - 1]);
        r.cycles_match = r.relabel == expect;
        break;
    case AdmissibleSetting::E6:
        if (m != 6) return r;
        expect = {0, 1, 4, 5, 2, 3};
        r.cycles_match = r.relabel == expect;
        break;
    }
    return r;
}

WeaveData standard_admissible_graph(AdmissibleSetting s, int n) {
    switch (s) {
    case AdmissibleSetting::A_odd:
        if (n < 1) throw InvalidArgument("rank must be >= 1");
        return build_linear(2 * n - 1);
    case AdmissibleSetting::D4: return build_tripod(2, 2, 2);
    case AdmissibleSetting::D_partial:
        if (n < 3) throw InvalidArgument("D_partial needs n >= 3");
        return build_tripod(n - 1, 2, 2);
    case AdmissibleSetting::E6: return build_tripod(2, 3, 3);
    }
    throw InvalidArgument("unknown setting");
}

VertexAction action_from_relabel(const std::vector<int>& relabel) { return VertexAction(relabel); }

}  // namespace weave
