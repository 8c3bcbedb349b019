#include "weave/ngraph.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>
#include <sstream>

#include "weave/errors.hpp"
#include "ngraph_detail.hpp"

namespace weave {

std::string to_string(VertexKind k) {
    switch (k) {
    case VertexKind::Trivalent: return "trivalent";
    case VertexKind::Hexagonal: return "hexagonal";
    case VertexKind::Boundary: return "boundary";
    case VertexKind::Crossing: return "crossing";
    }
    return "?";
}

std::string to_string(CycleKind k) {
    switch (k) {
    case CycleKind::I: return "I";
    case CycleKind::LongI: return "longI";
    case CycleKind::YUpper: return "Y_upper";
    case CycleKind::YLower: return "Y_lower";
    }
    return "?";
}

CycleKind y_kind_for_color(int color) { return color == 2 ? CycleKind::YUpper : CycleKind::YLower; }

// ----------------------------------------------------------------- NGraph

int NGraph::add_vertex(VertexKind kind, int color) {
    kind_.push_back(kind);
    vcolor_.push_back(color);
    rot_.emplace_back();
    valive_.push_back(true);
    return static_cast<int>(kind_.size()) - 1;
}

int NGraph::add_edge(int color) {
    if (color < 1 || color >= N_) throw InvalidArgument("edge color out of range");
    edge_color_.push_back(color);
    ealive_.push_back(true);
    hvert_.insert(hvert_.end(), {-1, -1});
    hslot_.insert(hslot_.end(), {-1, -1});
    return static_cast<int>(edge_color_.size()) - 1;
}

void NGraph::set_rotation(int v, std::vector<int> halves) {
    // a half-edge moved here from another vertex leaves that rotation
    for (int h : halves) {
        int u = hvert_[h];
        if (u < 0 || u == v) continue;
        auto& r = rot_[u];
        r.erase(std::find(r.begin(), r.end(), h));
        for (int s = 0; s < static_cast<int>(r.size()); ++s) hslot_[r[s]] = s;
    }
    for (int h : rot_[v])
        if (hvert_[h] == v) {
            hvert_[h] = -1;
            hslot_[h] = -1;
        }
    rot_[v] = std::move(halves);
    for (int s = 0; s < static_cast<int>(rot_[v].size()); ++s) {
        int h = rot_[v][s];
        hvert_[h] = v;
        hslot_[h] = s;
    }
}

void NGraph::remove_vertex(int v) {
    for (int h : rot_[v])
        if (hvert_[h] == v) {
            hvert_[h] = -1;
            hslot_[h] = -1;
        }
    rot_[v].clear();
    valive_[v] = false;
}

void NGraph::remove_edge(int e) {
    for (int h : {2 * e, 2 * e + 1}) {
        int v = hvert_[h];
        if (v < 0) continue;
        auto& r = rot_[v];
        r.erase(std::find(r.begin(), r.end(), h));
        for (int s = 0; s < static_cast<int>(r.size()); ++s) hslot_[r[s]] = s;
        hvert_[h] = -1;
        hslot_[h] = -1;
    }
    ealive_[e] = false;
}

int NGraph::num_vertices() const { return static_cast<int>(std::count(valive_.begin(), valive_.end(), true)); }
int NGraph::num_edges() const { return static_cast<int>(std::count(ealive_.begin(), ealive_.end(), true)); }

int NGraph::next_ccw(int h) const {
    const auto& r = rot_[hvert_[h]];
    return r[(hslot_[h] + 1) % r.size()];
}

int NGraph::prev_ccw(int h) const {
    const auto& r = rot_[hvert_[h]];
    return r[(hslot_[h] + r.size() - 1) % r.size()];
}

int NGraph::half_at(int e, int v) const {
    if (hvert_[2 * e] == v) return 2 * e;
    if (hvert_[2 * e + 1] == v) return 2 * e + 1;
    throw InvalidGraph("edge " + std::to_string(e) + " is not incident to vertex " + std::to_string(v));
}

int NGraph::other_end(int e, int v) const { return hvert_[twin(half_at(e, v))]; }

int NGraph::boundary_position(int v) const {
    auto it = std::find(boundary_.begin(), boundary_.end(), v);
    return it == boundary_.end() ? -1 : static_cast<int>(it - boundary_.begin());
}

BraidWord NGraph::boundary_word() const {
    std::vector<int> w;
    for (int v : boundary_) w.push_back(edge_color_[rot_[v].at(0) >> 1]);
    return BraidWord(N_, w);
}

void NGraph::validate() const {
    auto fail = [](const std::string& s) { throw InvalidGraph(s); };
    for (int e = 0; e < num_edge_slots(); ++e) {
        if (!ealive_[e]) continue;
        for (int h : {2 * e, 2 * e + 1}) {
            int v = hvert_[h];
            if (v < 0 || !valive_[v]) fail("half-edge " + std::to_string(h) + " is unattached");
            if (rot_[v][hslot_[h]] != h) fail("slot table out of sync");
        }
        if (hvert_[2 * e] == hvert_[2 * e + 1]) fail("loop at vertex " + std::to_string(hvert_[2 * e]));
    }
    std::vector<int> seen_pos;
    for (int v = 0; v < num_vertex_slots(); ++v) {
        if (!valive_[v]) continue;
        const auto& r = rot_[v];
        for (int h : r)
            if (!ealive_[h >> 1] || hvert_[h] != v) fail("dead half-edge in rotation of " + std::to_string(v));
        auto col = [&](int s) { return edge_color_[r[s] >> 1]; };
        switch (kind_[v]) {
        case VertexKind::Trivalent:
            if (r.size() != 3) fail("trivalent vertex " + std::to_string(v) + " has degree " + std::to_string(r.size()));
            for (int s = 0; s < 3; ++s)
                if (col(s) != vcolor_[v]) fail("trivalent vertex " + std::to_string(v) + " is not monochromatic");
            break;
        case VertexKind::Hexagonal:
            if (r.size() != 6) fail("hexagonal vertex " + std::to_string(v) + " has degree " + std::to_string(r.size()));
            for (int s = 0; s < 6; ++s) {
                int c = col(s), d = col((s + 1) % 6);
                if (std::abs(c - d) != 1 || std::min(c, d) != vcolor_[v] || c != col((s + 2) % 6))
                    fail("hexagonal vertex " + std::to_string(v) + " does not alternate colors");
            }
            break;
        case VertexKind::Boundary:
            if (r.size() != 1) fail("boundary vertex " + std::to_string(v) + " has degree " + std::to_string(r.size()));
            break;
        case VertexKind::Crossing:
            if (r.size() != 4 || col(0) != col(2) || col(1) != col(3) || std::abs(col(0) - col(1)) <= 1)
                fail("crossing vertex " + std::to_string(v) + " is malformed");
            break;
        }
    }
    for (int v : boundary_) {
        if (v < 0 || v >= num_vertex_slots() || !valive_[v] || kind_[v] != VertexKind::Boundary)
            fail("boundary list holds a non-boundary vertex");
    }
}

NGraph NGraph::compacted(std::vector<int>* edge_map, std::vector<int>* vertex_map) const {
    NGraph out(N_);
    std::vector<int> vm(num_vertex_slots(), -1), em(num_edge_slots(), -1);
    for (int v = 0; v < num_vertex_slots(); ++v)
        if (valive_[v]) vm[v] = out.add_vertex(kind_[v], vcolor_[v]);
    for (int e = 0; e < num_edge_slots(); ++e)
        if (ealive_[e]) em[e] = out.add_edge(edge_color_[e]);
    for (int v = 0; v < num_vertex_slots(); ++v) {
        if (!valive_[v]) continue;
        std::vector<int> r;
        for (int h : rot_[v]) r.push_back(2 * em[h >> 1] + (h & 1));
        out.set_rotation(vm[v], r);
    }
    std::vector<int> b;
    for (int v : boundary_) b.push_back(vm[v]);
    out.set_boundary(b);
    if (edge_map) *edge_map = em;
    if (vertex_map) *vertex_map = vm;
    return out;
}

// ----------------------------------------------------------------- faces

FaceMap faces(const NGraph& g) {
    FaceMap fm;
    const int H = 2 * g.num_edge_slots();
    const auto& bd = g.boundary();
    const int L = static_cast<int>(bd.size());
    fm.face_of_half.assign(H, -1);
    fm.face_of_arc.assign(L, -1);
    std::vector<int> pos(g.num_vertex_slots(), -1);
    for (int p = 0; p < L; ++p) pos[bd[p]] = p;
    for (int h0 = 0; h0 < H; ++h0) {
        if (!g.edge_alive(h0 >> 1) || fm.face_of_half[h0] >= 0) continue;
        // start from a half-edge not leaving an unlisted degree-one vertex
        Face f;
        const int id = static_cast<int>(fm.faces.size());
        int h = h0;
        long guard = 0;
        do {
            if (fm.face_of_half[h] >= 0) throw InvalidGraph("face traversal re-entered a half-edge");
            fm.face_of_half[h] = id;
            f.halves.push_back(h);
            int head = g.vertex_of(NGraph::twin(h));
            int p = pos[head];
            if (p >= 0) {
                f.arcs.push_back(p);
                fm.face_of_arc[p] = id;
                h = g.rotation(bd[(p + 1) % L])[0];
            } else {
                h = g.prev_ccw(NGraph::twin(h));
            }
            if (++guard > 4L * H + 8) throw InvalidGraph("face traversal does not close");
        } while (h != h0);
        fm.faces.push_back(std::move(f));
    }
    return fm;
}

// ------------------------------------------------------------ canonical form

CanonicalForm canonical_form(const NGraph& g) {
    CanonicalForm cf;
    cf.vertex_label.assign(g.num_vertex_slots(), -1);
    cf.edge_label.assign(g.num_edge_slots(), -1);
    const auto& bd = g.boundary();
    const int L = static_cast<int>(bd.size());
    auto word = L ? g.boundary_word().letters : std::vector<int>{};
    int start = 0;
    for (int p = 1; p < L; ++p)
        if (word[p] < word[start]) start = p;

    std::vector<int> entry(g.num_vertex_slots(), -1);
    int nv = 0, ne = 0;
    std::vector<int> order;
    auto bfs = [&](int v0, int h0) {
        std::deque<int> q{v0};
        cf.vertex_label[v0] = nv++;
        entry[v0] = h0;
        order.push_back(v0);
        while (!q.empty()) {
            int v = q.front();
            q.pop_front();
            const auto& r = g.rotation(v);
            if (r.empty()) continue;
            int s0 = g.slot_of(entry[v]);
            for (std::size_t k = 0; k < r.size(); ++k) {
                int h = r[(s0 + k) % r.size()];
                int e = h >> 1;
                if (cf.edge_label[e] < 0) cf.edge_label[e] = ne++;
                int w = g.vertex_of(NGraph::twin(h));
                if (cf.vertex_label[w] < 0) {
                    cf.vertex_label[w] = nv++;
                    entry[w] = NGraph::twin(h);
                    order.push_back(w);
                    q.push_back(w);
                }
            }
        }
    };
    for (int k = 0; k < L; ++k) {
        int v = bd[(start + k) % L];
        if (cf.vertex_label[v] < 0) bfs(v, g.rotation(v)[0]);
    }
    for (int v = 0; v < g.num_vertex_slots(); ++v)
        if (g.vertex_alive(v) && cf.vertex_label[v] < 0) bfs(v, g.rotation(v).empty() ? -1 : g.rotation(v)[0]);

    std::ostringstream os;
    os << "N" << g.N() << ";s" << start << ";";
    for (int v : order) {
        os << static_cast<int>(g.kind(v)) << "," << g.vertex_color(v) << "[";
        const auto& r = g.rotation(v);
        if (!r.empty()) {
            int s0 = g.slot_of(entry[v]);
            for (std::size_t k = 0; k < r.size(); ++k) {
                int h = r[(s0 + k) % r.size()];
                os << cf.edge_label[h >> 1] << ":" << g.half_color(h) << ":"
                   << cf.vertex_label[g.vertex_of(NGraph::twin(h))] << " ";
            }
        }
        os << "]";
    }
    os << ";b";
    for (int v : bd) os << " " << cf.vertex_label[v];
    cf.text = os.str();
    return cf;
}

// ------------------------------------------------------------------ cycles

namespace detail {

std::vector<int> path_vertices(const NGraph& g, const std::vector<int>& edges, int from) {
    if (edges.empty()) throw InvalidGraph("empty cycle path");
    for (int e : edges)
        if (e < 0 || e >= g.num_edge_slots() || !g.edge_alive(e)) throw InvalidGraph("cycle uses a dead edge");
    int a = g.vertex_of(2 * edges[0]), b = g.vertex_of(2 * edges[0] + 1);
    int v0;
    if (from >= 0) {
        v0 = from;
    } else if (edges.size() == 1) {
        v0 = a;
    } else {
        int c = g.vertex_of(2 * edges[1]), d = g.vertex_of(2 * edges[1] + 1);
        v0 = (b == c || b == d) ? a : b;
    }
    std::vector<int> vs{v0};
    for (int e : edges) vs.push_back(g.other_end(e, vs.back()));
    return vs;
}

int y_center(const NGraph& g, const CycleSpec& c) {
    if (c.legs.size() != 3) throw InvalidGraph("Y-cycle needs three legs");
    int e0 = c.legs[0].at(0);
    for (int v : {g.vertex_of(2 * e0), g.vertex_of(2 * e0 + 1)}) {
        bool all = v >= 0 && g.kind(v) == VertexKind::Hexagonal;
        for (const auto& leg : c.legs) {
            int e = leg.at(0);
            all = all && (g.vertex_of(2 * e) == v || g.vertex_of(2 * e + 1) == v);
        }
        if (all) return v;
    }
    throw InvalidGraph("Y-cycle legs do not meet at a hexagonal point");
}

std::vector<CycleEnd> cycle_ends(const NGraph& g, const CycleSpec& c) {
    std::vector<CycleEnd> out;
    if (c.is_y()) {
        int o = y_center(g, c);
        for (const auto& leg : c.legs) {
            auto vs = path_vertices(g, leg, o);
            out.push_back({vs.back(), g.half_at(leg.back(), vs.back())});
        }
    } else {
        auto vs = path_vertices(g, c.edges);
        out.push_back({vs.front(), g.half_at(c.edges.front(), vs.front())});
        out.push_back({vs.back(), g.half_at(c.edges.back(), vs.back())});
    }
    return out;
}

std::vector<int> cycle_interior(const NGraph& g, const CycleSpec& c) {
    std::vector<int> out;
    if (c.is_y()) {
        int o = y_center(g, c);
        out.push_back(o);
        for (const auto& leg : c.legs) {
            auto vs = path_vertices(g, leg, o);
            out.insert(out.end(), vs.begin() + 1, vs.end() - 1);
        }
    } else {
        auto vs = path_vertices(g, c.edges);
        out.insert(out.end(), vs.begin() + 1, vs.end() - 1);
    }
    return out;
}

std::vector<int> cycle_edges(const CycleSpec& c) {
    std::vector<int> out = c.edges;
    for (const auto& leg : c.legs) out.insert(out.end(), leg.begin(), leg.end());
    return out;
}

void revalidate(const WeaveData& w, const char* what) {
    w.graph.validate();
    for (const auto& c : w.cycles) {
        try {
            validate_cycle(w.graph, c);
        } catch (const InvalidGraph& e) {
            throw UnsupportedConfiguration(std::string(what) + ": cycle " + std::to_string(c.label) +
                                           " cannot be transported (" + e.what() + ")");
        }
    }
}

}  // namespace detail

using detail::path_vertices;

void validate_cycle(const NGraph& g, const CycleSpec& c) {
    auto fail = [](const std::string& s) { throw InvalidGraph(s); };
    auto check_path = [&](const std::vector<int>& edges, int from, bool end_start) {
        auto vs = path_vertices(g, edges, from);
        for (std::size_t i = 1; i + 1 < vs.size(); ++i) {
            int v = vs[i];
            if (g.kind(v) != VertexKind::Hexagonal) fail("cycle passes through a non-hexagonal vertex");
            int s1 = g.slot_of(g.half_at(edges[i - 1], v)), s2 = g.slot_of(g.half_at(edges[i], v));
            if ((s1 - s2 + 6) % 6 != 3) fail("cycle does not cross a hexagonal point in the opposite way");
        }
        auto is_end = [&](int v, int e) { return g.kind(v) == VertexKind::Trivalent && g.vertex_color(v) == g.edge_color(e); };
        if (!is_end(vs.back(), edges.back())) fail("cycle does not end at a trivalent vertex of its color");
        if (end_start && !is_end(vs.front(), edges.front())) fail("cycle does not start at a trivalent vertex");
        return vs;
    };
    switch (c.kind) {
    case CycleKind::I:
        if (c.edges.size() != 1) fail("I-cycle must be one edge");
        check_path(c.edges, -1, true);
        break;
    case CycleKind::LongI:
        if (c.edges.size() < 2) fail("long I-cycle needs at least two edges");
        check_path(c.edges, -1, true);
        break;
    case CycleKind::YUpper:
    case CycleKind::YLower: {
        int center = detail::y_center(g, c);
        int e0 = c.legs[0][0];
        int color = g.edge_color(e0);
        if (c.kind != y_kind_for_color(color)) fail("Y-cycle kind does not match its color");
        std::vector<int> slots;
        for (const auto& leg : c.legs) {
            if (g.edge_color(leg[0]) != color) fail("Y-cycle legs differ in color");
            slots.push_back(g.slot_of(g.half_at(leg[0], center)));
            check_path(leg, center, false);
        }
        std::sort(slots.begin(), slots.end());
        if (slots[1] - slots[0] != 2 || slots[2] - slots[1] != 2) fail("Y-cycle legs are not alternate");
        break;
    }
    }
}

// ------------------------------------------------------------ constructors

namespace {

struct Builder {
    NGraph g;
    explicit Builder(int N) : g(N) {}
    // edge between a (half 2e) and b (half 2e+1)
    int edge(int color) { return g.add_edge(color); }
    // boundary stub: returns the half-edge at the interior end, records stub
    int stub(int color, std::vector<int>& stubs) {
        int b = g.add_vertex(VertexKind::Boundary);
        int e = g.add_edge(color);
        g.set_rotation(b, {2 * e + 1});
        stubs.push_back(b);
        return 2 * e;
    }
};

}  // namespace

WeaveData build_linear(int n) {
    if (n < 1) throw InvalidArgument("linear family needs n >= 1");
    Builder bd(2);
    std::vector<int> u(n + 1);
    for (auto& x : u) x = bd.g.add_vertex(VertexKind::Trivalent, 1);
    std::vector<int> e(n + 1, -1);
    for (int k = 1; k <= n; ++k) e[k] = bd.edge(1);  // 2e at u_{k-1}, 2e+1 at u_k
    std::vector<int> left, down, right, up_rev;
    std::vector<int> stub_l, stub_d0;
    int hL = bd.stub(1, stub_l), hD = bd.stub(1, stub_d0);
    bd.g.set_rotation(u[0], {2 * e[1], hL, hD});
    std::vector<int> downs, ups;  // stub vertices in left-to-right order
    std::vector<std::pair<int, int>> up_pairs;
    for (int k = 1; k < n; ++k) {
        if (k % 2 == 1) {
            std::vector<int> tmp;
            int h = bd.stub(1, tmp);
            bd.g.set_rotation(u[k], {2 * e[k] + 1, 2 * e[k + 1], h});
            ups.push_back(tmp[0]);
        } else {
            std::vector<int> tmp;
            int h = bd.stub(1, tmp);
            bd.g.set_rotation(u[k], {2 * e[k] + 1, h, 2 * e[k + 1]});
            downs.push_back(tmp[0]);
        }
    }
    std::vector<int> end_stubs;
    int h1 = bd.stub(1, end_stubs), h2 = bd.stub(1, end_stubs);
    bd.g.set_rotation(u[n], {2 * e[n] + 1, h1, h2});
    std::vector<int> boundary{stub_l[0], stub_d0[0]};
    boundary.insert(boundary.end(), downs.begin(), downs.end());
    boundary.insert(boundary.end(), end_stubs.begin(), end_stubs.end());
    boundary.insert(boundary.end(), ups.rbegin(), ups.rend());
    bd.g.set_boundary(boundary);
    bd.g.validate();
    WeaveData w{bd.g, {}};
    for (int k = 1; k <= n; ++k) w.cycles.push_back({CycleKind::I, {e[k]}, {}, k});
    return w;
}

WeaveData build_tripod(int a, int b, int c) {
    if (a < 1 || b < 1 || c < 1) throw InvalidArgument("tripod legs must be >= 1");
    Builder bd(3);
    NGraph& g = bd.g;
    int O = g.add_vertex(VertexKind::Hexagonal, 1);
    std::vector<int> orot, boundary;
    WeaveData w;
    std::vector<std::vector<int>> legs;
    std::vector<CycleSpec> leg_cycles;
    int label = 2;
    for (int len : {a, b, c}) {
        std::vector<int> spoke;
        int hs = bd.stub(2, spoke);
        orot.push_back(hs);
        boundary.push_back(spoke[0]);
        std::vector<int> T(len);
        for (auto& t : T) t = g.add_vertex(VertexKind::Trivalent, 1);
        std::vector<int> chain(len);  // chain[k]: edge into T[k] from its predecessor
        for (auto& x : chain) x = bd.edge(1);
        orot.push_back(2 * chain[0]);
        legs.push_back({chain[0]});
        std::vector<int> evens, odds, last;
        for (int k = 1; k <= len; ++k) {
            int prev = 2 * chain[k - 1] + 1;
            std::vector<int> tmp;
            if (k == len) {
                int b1 = bd.stub(1, last), b2 = bd.stub(1, last);
                g.set_rotation(T[k - 1], {prev, b1, b2});
            } else if (k % 2 == 1) {
                int s = bd.stub(1, tmp);
                g.set_rotation(T[k - 1], {prev, 2 * chain[k], s});
                odds.push_back(tmp[0]);
            } else {
                int s = bd.stub(1, tmp);
                g.set_rotation(T[k - 1], {prev, s, 2 * chain[k]});
                evens.push_back(tmp[0]);
            }
        }
        boundary.insert(boundary.end(), evens.begin(), evens.end());
        boundary.insert(boundary.end(), last.begin(), last.end());
        boundary.insert(boundary.end(), odds.rbegin(), odds.rend());
        for (int k = 1; k < len; ++k) leg_cycles.push_back({CycleKind::I, {chain[k]}, {}, label++});
    }
    g.set_rotation(O, orot);
    g.set_boundary(boundary);
    g.validate();
    w.graph = g;
    w.cycles.push_back({y_kind_for_color(1), {}, legs, 1});
    w.cycles.insert(w.cycles.end(), leg_cycles.begin(), leg_cycles.end());
    return w;
}

NGraph color_swap(const NGraph& g) {
    if (g.N() != 3) throw UnsupportedConfiguration("color swap needs N = 3");
    NGraph out = g;
    for (int e = 0; e < g.num_edge_slots(); ++e)
        if (g.edge_alive(e)) out.set_edge_color(e, 3 - g.edge_color(e));
    for (int v = 0; v < g.num_vertex_slots(); ++v)
        if (g.vertex_alive(v) && g.kind(v) == VertexKind::Trivalent) out.set_vertex_color(v, 3 - g.vertex_color(v));
    return out;
}

WeaveData color_swap(const WeaveData& w) {
    WeaveData out{color_swap(w.graph), w.cycles};
    for (auto& c : out.cycles)
        if (c.is_y()) c.kind = c.kind == CycleKind::YUpper ? CycleKind::YLower : CycleKind::YUpper;
    return out;
}

NGraph rotate(const NGraph& g, int steps) {
    const auto& bd = g.boundary();
    const int L = static_cast<int>(bd.size());
    if (L == 0) return g;
    auto w = g.boundary_word().letters;
    int s = ((steps % L) + L) % L;
    for (int p = 0; p < L; ++p)
        if (w[p] != w[(p + s) % L])
            throw BoundaryNotRotationInvariant("boundary word changes under rotation by " + std::to_string(steps));
    std::vector<int> nb(L);
    for (int p = 0; p < L; ++p) nb[(p + s) % L] = bd[p];
    NGraph out = g;
    out.set_boundary(nb);
    return out;
}

bool is_rotation_symmetric(const NGraph& g, int order) {
    const int L = static_cast<int>(g.boundary().size());
    if (order < 1 || L % order != 0) return false;
    try {
        return canonical_form(rotate(g, L / order)).text == canonical_form(g).text;
    } catch (const BoundaryNotRotationInvariant&) {
        return false;
    }
}

std::optional<std::vector<int>> match_cycles(const NGraph& g, const CycleTuple& cg, const NGraph& h,
                                             const CycleTuple& ch) {
    auto fg = canonical_form(g), fh = canonical_form(h);
    if (fg.text != fh.text) return std::nullopt;
    std::vector<int> inv(fh.edge_label.size() + fg.edge_label.size() + 1, -1);
    for (int e = 0; e < static_cast<int>(fh.edge_label.size()); ++e)
        if (fh.edge_label[e] >= 0) inv[fh.edge_label[e]] = e;
    auto image = [&](const CycleSpec& c) {
        CycleSpec out = c;
        for (auto& e : out.edges) e = inv[fg.edge_label[e]];
        for (auto& leg : out.legs)
            for (auto& e : leg) e = inv[fg.edge_label[e]];
        return out;
    };
    auto same = [](CycleSpec x, CycleSpec y) {
        if (x.kind != y.kind) return false;
        if (x.is_y()) {
            std::sort(x.legs.begin(), x.legs.end());
            std::sort(y.legs.begin(), y.legs.end());
            return x.legs == y.legs;
        }
        if (x.edges == y.edges) return true;
        std::reverse(y.edges.begin(), y.edges.end());
        return x.edges == y.edges;
    };
    std::vector<int> rel;
    for (const auto& c : cg) {
        CycleSpec im = image(c);
        int found = -1;
        for (std::size_t j = 0; j < ch.size(); ++j)
            if (same(im, ch[j])) found = static_cast<int>(j);
        if (found < 0) return std::nullopt;
        rel.push_back(found);
    }
    return rel;
}

// ------------------------------------------------------------------- I/O

nlohmann::json to_json(const NGraph& g0) {
    NGraph g = g0.compacted();
    nlohmann::json j;
    j["N"] = g.N();
    j["vertices"] = nlohmann::json::array();
    for (int v = 0; v < g.num_vertex_slots(); ++v)
        j["vertices"].push_back({{"id", v}, {"kind", to_string(g.kind(v))}, {"color", g.vertex_color(v)}, {"rotation", g.rotation(v)}});
    j["edges"] = nlohmann::json::array();
    for (int e = 0; e < g.num_edge_slots(); ++e)
        j["edges"].push_back({{"id", e}, {"color", g.edge_color(e)}, {"ends", {g.vertex_of(2 * e), g.vertex_of(2 * e + 1)}}});
    j["boundary"] = g.boundary();
    j["boundary_word"] = g.boundary_word().letters;
    return j;
}

static nlohmann::json cycle_json(const CycleSpec& c) {
    return {{"kind", to_string(c.kind)}, {"label", c.label}, {"edges", c.edges}, {"legs", c.legs}};
}

nlohmann::json to_json(const WeaveData& w) {
    std::vector<int> em;
    NGraph g = w.graph.compacted(&em);
    nlohmann::json j;
    j["graph"] = to_json(g);
    j["cycles"] = nlohmann::json::array();
    for (CycleSpec c : w.cycles) {
        for (auto& e : c.edges) e = em[e];
        for (auto& leg : c.legs)
            for (auto& e : leg) e = em[e];
        j["cycles"].push_back(cycle_json(c));
    }
    return j;
}

static VertexKind kind_from_string(const std::string& s) {
    for (auto k : {VertexKind::Trivalent, VertexKind::Hexagonal, VertexKind::Boundary, VertexKind::Crossing})
        if (to_string(k) == s) return k;
    throw InvalidArgument("unknown vertex kind '" + s + "'");
}

static CycleKind cycle_kind_from_string(const std::string& s) {
    for (auto k : {CycleKind::I, CycleKind::LongI, CycleKind::YUpper, CycleKind::YLower})
        if (to_string(k) == s) return k;
    throw InvalidArgument("unknown cycle kind '" + s + "'");
}

NGraph ngraph_from_json(const nlohmann::json& j) {
    NGraph g(j.at("N").get<int>());
    for (const auto& v : j.at("vertices")) g.add_vertex(kind_from_string(v.at("kind")), v.at("color").get<int>());
    for (const auto& e : j.at("edges")) g.add_edge(e.at("color").get<int>());
    int v = 0;
    for (const auto& jv : j.at("vertices")) g.set_rotation(v++, jv.at("rotation").get<std::vector<int>>());
    g.set_boundary(j.at("boundary").get<std::vector<int>>());
    g.validate();
    return g;
}

WeaveData weave_from_json(const nlohmann::json& j) {
    WeaveData w;
    w.graph = ngraph_from_json(j.at("graph"));
    for (const auto& c : j.at("cycles")) {
        CycleSpec cs;
        cs.kind = cycle_kind_from_string(c.at("kind"));
        cs.label = c.at("label").get<int>();
        cs.edges = c.at("edges").get<std::vector<int>>();
        cs.legs = c.at("legs").get<std::vector<std::vector<int>>>();
        validate_cycle(w.graph, cs);
        w.cycles.push_back(cs);
    }
    return w;
}

static const char* color_name(int c) { return c == 1 ? "blue" : c == 2 ? "red" : "darkgreen"; }

std::string to_dot(const WeaveData& w) {
    const NGraph& g = w.graph;
    std::vector<int> cyc(g.num_edge_slots(), 0);
    for (const auto& c : w.cycles) {
        for (int e : c.edges) cyc[e] = c.label;
        for (const auto& leg : c.legs)
            for (int e : leg) cyc[e] = c.label;
    }
    std::ostringstream os;
    os << "graph ngraph {\n  node [shape=point];\n";
    for (int v = 0; v < g.num_vertex_slots(); ++v) {
        if (!g.vertex_alive(v)) continue;
        os << "  v" << v;
        switch (g.kind(v)) {
        case VertexKind::Boundary: os << " [shape=circle,width=0.08,label=\"\",xlabel=\"" << g.boundary_position(v) << "\"]"; break;
        case VertexKind::Hexagonal: os << " [shape=circle,width=0.12,style=filled,fillcolor=white]"; break;
        default: os << " [color=" << color_name(g.vertex_color(v)) << "]";
        }
        os << ";\n";
    }
    for (int e = 0; e < g.num_edge_slots(); ++e) {
        if (!g.edge_alive(e)) continue;
        os << "  v" << g.vertex_of(2 * e) << " -- v" << g.vertex_of(2 * e + 1) << " [color=" << color_name(g.edge_color(e));
        if (cyc[e]) os << ",penwidth=3,label=\"" << cyc[e] << "\"";
        os << "];\n";
    }
    os << "}\n";
    return os.str();
}

std::string to_svg(const WeaveData& w) {
    const NGraph& g = w.graph;
    const int V = g.num_vertex_slots();
    const auto& bd = g.boundary();
    const int L = static_cast<int>(bd.size());
    std::vector<double> x(V, 0.0), y(V, 0.0);
    std::vector<bool> fixed(V, false);
    const double pi = 3.14159265358979323846;
    for (int p = 0; p < L; ++p) {
        double t = 2 * pi * p / L;
        x[bd[p]] = std::cos(t);
        y[bd[p]] = std::sin(t);
        fixed[bd[p]] = true;
    }
    for (int round = 0; round < 200; ++round)
        for (int v = 0; v < V; ++v) {
            if (!g.vertex_alive(v) || fixed[v] || g.rotation(v).empty()) continue;
            double sx = 0, sy = 0;
            for (int h : g.rotation(v)) {
                int u = g.vertex_of(NGraph::twin(h));
                sx += x[u];
                sy += y[u];
            }
            x[v] = sx / g.rotation(v).size();
            y[v] = sy / g.rotation(v).size();
        }
    std::vector<bool> cyc(g.num_edge_slots(), false);
    for (const auto& c : w.cycles) {
        for (int e : c.edges) cyc[e] = true;
        for (const auto& leg : c.legs)
            for (int e : leg) cyc[e] = true;
    }
    auto X = [&](int v) { return 220 + 200 * x[v]; };
    auto Y = [&](int v) { return 220 - 200 * y[v]; };
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"440\" height=\"440\">\n";
    os << "<circle cx=\"220\" cy=\"220\" r=\"200\" fill=\"none\" stroke=\"gray\" stroke-dasharray=\"4\"/>\n";
    for (int e = 0; e < g.num_edge_slots(); ++e) {
        if (!g.edge_alive(e)) continue;
        int a = g.vertex_of(2 * e), b = g.vertex_of(2 * e + 1);
        if (cyc[e])
            os << "<line x1=\"" << X(a) << "\" y1=\"" << Y(a) << "\" x2=\"" << X(b) << "\" y2=\"" << Y(b)
               << "\" stroke=\"gold\" stroke-width=\"8\" stroke-opacity=\"0.5\"/>\n";
        os << "<line x1=\"" << X(a) << "\" y1=\"" << Y(a) << "\" x2=\"" << X(b) << "\" y2=\"" << Y(b)
           << "\" stroke=\"" << color_name(g.edge_color(e)) << "\" stroke-width=\"2\"/>\n";
    }
    for (int v = 0; v < V; ++v) {
        if (!g.vertex_alive(v) || g.kind(v) == VertexKind::Boundary) continue;
        bool hex = g.kind(v) == VertexKind::Hexagonal;
        os << "<circle cx=\"" << X(v) << "\" cy=\"" << Y(v) << "\" r=\"" << (hex ? 5 : 3) << "\" fill=\""
           << (hex ? "white" : color_name(g.vertex_color(v))) << "\" stroke=\"black\"/>\n";
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace weave
