#include "weave/flagkit.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>

#include "ngraph_detail.hpp"
#include "weave/errors.hpp"

namespace weave {

namespace {

QVec cross(const QVec& a, const QVec& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

mpq_class dot(const QVec& a, const QVec& b) {
    mpq_class s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

bool is_zero(const QVec& v) {
    return std::all_of(v.begin(), v.end(), [](const mpq_class& x) { return x == 0; });
}

mpq_class det2(const QVec& a, const QVec& b) { return a[0] * b[1] - a[1] * b[0]; }
mpq_class det3(const QVec& a, const QVec& b, const QVec& c) { return dot(a, cross(b, c)); }

bool parallel(const QVec& a, const QVec& b) {
    if (a.size() == 2) return det2(a, b) == 0;
    return is_zero(cross(a, b));
}

QVec random_vec(GenericDraws& rng, int n) {
    QVec v(n);
    for (auto& x : v) x = static_cast<long>(rng.next()) - 50;
    return v;
}

// Two vectors spanning the plane with normal n.
std::pair<QVec, QVec> plane_basis(const QVec& n) {
    std::vector<QVec> axes{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    std::vector<QVec> out;
    for (const auto& e : axes) {
        QVec c = cross(n, e);
        if (is_zero(c)) continue;
        if (out.empty() || !parallel(out[0], c)) out.push_back(c);
        if (out.size() == 2) break;
    }
    return {out.at(0), out.at(1)};
}

struct UnionFind {
    std::vector<int> p;
    explicit UnionFind(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
    void unite(int a, int b) { p[find(a)] = find(b); }
};

// Line classes (faces glued across edges of color != 1) and plane classes
// (glued across edges of color != 2) with their incidences.
struct Classes {
    int N = 2;
    std::vector<int> line_of, plane_of;  // per face
    int n_lines = 0, n_planes = 0;
    std::vector<std::vector<int>> line_nb, plane_nb;  // incidence lists
};

Classes make_classes(const NGraph& g, const FaceMap& fm) {
    Classes c;
    c.N = g.N();
    if (c.N != 2 && c.N != 3) throw UnsupportedConfiguration("flags are implemented for N = 2, 3");
    const int F = static_cast<int>(fm.faces.size());
    UnionFind ul(F), up(F);
    for (int e = 0; e < g.num_edge_slots(); ++e) {
        if (!g.edge_alive(e)) continue;
        int f1 = fm.face_of_half[2 * e], f2 = fm.face_of_half[2 * e + 1];
        int col = g.edge_color(e);
        if (col != 1) ul.unite(f1, f2);
        if (col != 2) up.unite(f1, f2);
    }
    auto compress = [&](UnionFind& u, std::vector<int>& of, int& count) {
        std::vector<int> id(F, -1);
        of.assign(F, -1);
        for (int f = 0; f < F; ++f) {
            int r = u.find(f);
            if (id[r] < 0) id[r] = count++;
            of[f] = id[r];
        }
    };
    compress(ul, c.line_of, c.n_lines);
    c.line_nb.resize(c.n_lines);
    if (c.N == 3) {
        compress(up, c.plane_of, c.n_planes);
        c.plane_nb.resize(c.n_planes);
        for (int f = 0; f < F; ++f) {
            auto& a = c.line_nb[c.line_of[f]];
            if (std::find(a.begin(), a.end(), c.plane_of[f]) == a.end()) {
                a.push_back(c.plane_of[f]);
                c.plane_nb[c.plane_of[f]].push_back(c.line_of[f]);
            }
        }
    }
    // a class may not meet itself across an edge of its own color
    for (int e = 0; e < g.num_edge_slots(); ++e) {
        if (!g.edge_alive(e)) continue;
        int f1 = fm.face_of_half[2 * e], f2 = fm.face_of_half[2 * e + 1];
        bool bad = g.edge_color(e) == 1 ? c.line_of[f1] == c.line_of[f2] : c.plane_of[f1] == c.plane_of[f2];
        if (bad) throw InconsistentClosure("edge " + std::to_string(e) + " separates a face class from itself");
    }
    return c;
}

struct Values {
    std::vector<std::optional<QVec>> line, normal;
};

// One propagation step for a class from its assigned neighbours; returns
// nullopt when fewer than two independent neighbours are known.
std::optional<QVec> determine(const std::vector<int>& nb, const std::vector<std::optional<QVec>>& vals) {
    const QVec* first = nullptr;
    for (int x : nb) {
        if (!vals[x]) continue;
        if (!first) {
            first = &*vals[x];
        } else if (!parallel(*first, *vals[x])) {
            return cross(*first, *vals[x]);
        }
    }
    return std::nullopt;
}

// Fills unknown classes that are forced by two known neighbours.
void propagate(const Classes& c, Values& v) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (int l = 0; l < c.n_lines; ++l)
            if (!v.line[l])
                if (auto x = determine(c.line_nb[l], v.normal)) {
                    v.line[l] = *x;
                    changed = true;
                }
        for (int p = 0; p < c.n_planes; ++p)
            if (!v.normal[p])
                if (auto x = determine(c.plane_nb[p], v.line)) {
                    v.normal[p] = *x;
                    changed = true;
                }
    }
}

// Checks incidences; returns false on a violated one.
bool incidences_hold(const Classes& c, const Values& v) {
    for (int l = 0; l < c.n_lines; ++l)
        for (int p : c.line_nb[l])
            if (dot(*v.line[l], *v.normal[p]) != 0) return false;
    return true;
}

std::vector<Flag> face_flags_from(const Classes& c, const Values& v, int F) {
    std::vector<Flag> out;
    for (int f = 0; f < F; ++f) {
        if (c.N == 2) out.push_back(Flag::from_line(*v.line[c.line_of[f]]));
        else out.push_back(Flag::from_line_plane(*v.line[c.line_of[f]], *v.normal[c.plane_of[f]]));
    }
    return out;
}

bool edges_distinct(const NGraph& g, const FaceMap& fm, const std::vector<Flag>& ff, std::string* why) {
    for (int e = 0; e < g.num_edge_slots(); ++e) {
        if (!g.edge_alive(e)) continue;
        const Flag& a = ff[fm.face_of_half[2 * e]];
        const Flag& b = ff[fm.face_of_half[2 * e + 1]];
        int col = g.edge_color(e);
        for (int i = 1; i < g.N(); ++i) {
            bool same = same_subspace(a, b, i);
            if (same == (i == col)) {
                if (why)
                    *why = "edge " + std::to_string(e) + " (color " + std::to_string(col) + ") breaks the flag condition at F^" +
                           std::to_string(i);
                return false;
            }
        }
    }
    return true;
}

}  // namespace

// ------------------------------------------------------------------ Flag

QVec Flag::plane_normal() const {
    if (N() != 3) throw InvalidArgument("plane normal needs N = 3");
    return cross(basis[0], basis[1]);
}

Flag Flag::from_line(const QVec& v) {
    if (v.size() != 2 || is_zero(v)) throw ConstraintViolated("line must be a nonzero vector in Q^2");
    return Flag{{v, v[0] == 0 ? QVec{1, 0} : QVec{0, 1}}};
}

Flag Flag::from_line_plane(const QVec& v, const QVec& n) {
    if (v.size() != 3 || is_zero(v) || is_zero(n)) throw ConstraintViolated("degenerate line or plane");
    if (dot(v, n) != 0) throw ConstraintViolated("line is not in the plane");
    return Flag{{v, cross(n, v), n}};
}

void Flag::check() const {
    bool ok = N() == 2 ? det2(basis[0], basis[1]) != 0 : det3(basis[0], basis[1], basis[2]) != 0;
    if (!ok) throw ConstraintViolated("flag basis is singular");
}

bool same_subspace(const Flag& a, const Flag& b, int i) {
    if (a.N() != b.N()) return false;
    if (i == 0 || i == a.N()) return true;
    if (i == 1) return parallel(a.line(), b.line());
    return parallel(a.plane_normal(), b.plane_normal());
}

// ---------------------------------------------------------------- solving

BoundaryFlags generic_boundary_flags(const NGraph& g, std::uint64_t seed) {
    FaceMap fm = faces(g);
    Classes c = make_classes(g, fm);
    const int F = static_cast<int>(fm.faces.size());
    std::string why;
    for (int attempt = 0; attempt < 16; ++attempt) {
        GenericDraws rng(seed + 0x9e3779b97f4a7c15ULL * attempt);
        Values v;
        v.line.assign(c.n_lines, std::nullopt);
        v.normal.assign(c.n_planes, std::nullopt);
        if (c.N == 2) {
            for (auto& l : v.line) l = random_vec(rng, 2);
        } else {
            // greedy: most constrained class first, random where still free
            const int total = c.n_lines + c.n_planes;
            bool degenerate = false;
            for (int step = 0; step < total && !degenerate; ++step) {
                int best = -1, best_known = -1;
                for (int x = 0; x < total; ++x) {
                    bool is_line = x < c.n_lines;
                    int id = is_line ? x : x - c.n_lines;
                    if (is_line ? v.line[id].has_value() : v.normal[id].has_value()) continue;
                    const auto& nb = is_line ? c.line_nb[id] : c.plane_nb[id];
                    const auto& other = is_line ? v.normal : v.line;
                    int known = 0;
                    for (int y : nb) known += other[y].has_value();
                    if (known > best_known) {
                        best = x;
                        best_known = known;
                    }
                }
                bool is_line = best < c.n_lines;
                int id = is_line ? best : best - c.n_lines;
                const auto& nb = is_line ? c.line_nb[id] : c.plane_nb[id];
                const auto& other = is_line ? v.normal : v.line;
                QVec val;
                if (best_known >= 2) {
                    auto d = determine(nb, other);
                    if (!d) {
                        degenerate = true;
                        break;
                    }
                    val = *d;
                } else if (best_known == 1) {
                    const QVec* known = nullptr;
                    for (int y : nb)
                        if (other[y]) known = &*other[y];
                    // a random line in the known plane, or a random plane
                    // through the known line
                    if (is_line) {
                        auto [p, q] = plane_basis(*known);
                        mpq_class s = rng.next(), t = rng.next();
                        val = {s * p[0] + t * q[0], s * p[1] + t * q[1], s * p[2] + t * q[2]};
                    } else {
                        val = cross(*known, random_vec(rng, 3));
                    }
                } else {
                    val = random_vec(rng, 3);
                }
                if (is_zero(val)) {
                    degenerate = true;
                    break;
                }
                (is_line ? v.line[id] : v.normal[id]) = val;
            }
            if (degenerate || !incidences_hold(c, v)) {
                why = "degenerate draw";
                continue;
            }
        }
        auto ff = face_flags_from(c, v, F);
        if (!edges_distinct(g, fm, ff, &why)) continue;
        BoundaryFlags bf{g.N(), {}};
        for (int j = 0; j < static_cast<int>(fm.face_of_arc.size()); ++j) bf.arcs.push_back(ff[fm.face_of_arc[j]]);
        return bf;
    }
    throw DegenerateDraw("no generic flags after 16 draws: " + why);
}

BoundaryFlags generic_boundary_flags(const BraidWord& beta, std::uint64_t seed) {
    const auto& w = beta.letters;
    if (beta.strands == 2) {
        if (w.size() < 4) throw InvalidArgument("linear boundary needs at least four letters");
        return generic_boundary_flags(build_linear(static_cast<int>(w.size()) - 3).graph, seed);
    }
    if (beta.strands == 3 && !w.empty()) {
        int spoke = w[0];
        std::vector<int> runs;
        for (int x : w) {
            if (x == spoke) runs.push_back(0);
            else ++runs.back();
        }
        if (runs.size() == 3 && *std::min_element(runs.begin(), runs.end()) >= 2) {
            NGraph g = build_tripod(runs[0] - 1, runs[1] - 1, runs[2] - 1).graph;
            if (spoke == 1) g = color_swap(g);
            return generic_boundary_flags(g, seed);
        }
    }
    throw UnsupportedConfiguration("generic flags need a linear or tripod boundary word");
}

FlagAssignment solve_face_flags(const NGraph& g, const BoundaryFlags& bf) {
    FlagAssignment fa;
    fa.faces = faces(g);
    fa.boundary = bf;
    const auto& fm = fa.faces;
    const int F = static_cast<int>(fm.faces.size());
    if (bf.N != g.N() || bf.arcs.size() != fm.face_of_arc.size())
        throw InconsistentClosure("boundary flags do not match the boundary word");
    Classes c = make_classes(g, fm);
    Values v;
    v.line.assign(c.n_lines, std::nullopt);
    v.normal.assign(c.n_planes, std::nullopt);
    for (int j = 0; j < static_cast<int>(bf.arcs.size()); ++j) {
        int f = fm.face_of_arc[j];
        const Flag& fl = bf.arcs[j];
        auto put = [&](std::optional<QVec>& slot, const QVec& x, const char* what) {
            if (slot && !parallel(*slot, x))
                throw InconsistentClosure(std::string("face touches arcs with different ") + what + " (arc " +
                                          std::to_string(j) + ")");
            if (!slot) slot = x;
        };
        put(v.line[c.line_of[f]], fl.line(), "lines");
        if (c.N == 3) put(v.normal[c.plane_of[f]], fl.plane_normal(), "planes");
    }
    if (c.N == 2) {
        for (int l = 0; l < c.n_lines; ++l)
            if (!v.line[l]) throw InteriorFace("a face touches no boundary arc");
    } else {
        propagate(c, v);
        for (int l = 0; l < c.n_lines; ++l)
            if (!v.line[l]) throw InteriorFace("a line class is not determined by the boundary");
        for (int p = 0; p < c.n_planes; ++p)
            if (!v.normal[p]) throw InteriorFace("a plane class is not determined by the boundary");
        if (!incidences_hold(c, v)) throw InconsistentClosure("propagated flags are not nested");
    }
    fa.face_flags = face_flags_from(c, v, F);
    check_flag_conditions(g, fa);
    return fa;
}

void check_flag_conditions(const NGraph& g, const FlagAssignment& fa) {
    for (const auto& f : fa.face_flags) f.check();
    std::string why;
    if (!edges_distinct(g, fa.faces, fa.face_flags, &why)) throw ConstraintViolated(why);
    for (std::size_t j = 0; j < fa.boundary.arcs.size(); ++j)
        for (int i = 1; i < g.N(); ++i)
            if (!same_subspace(fa.boundary.arcs[j], fa.face_flags[fa.faces.face_of_arc[j]], i))
                throw ConstraintViolated("face flag differs from its arc " + std::to_string(j));
}

// ------------------------------------------------------------ monodromies

mpq_class cross_ratio(const QVec& v1, const QVec& v2, const QVec& v3, const QVec& v4) {
    mpq_class a = det2(v1, v2), b = det2(v2, v3), c = det2(v3, v4), d = det2(v4, v1);
    if (b == 0 || d == 0 || a == 0 || c == 0) throw ZeroWedge("consecutive lines coincide");
    return a * c / (b * d);
}

mpq_class triple_ratio(const QVec& a, const QVec& b, const QVec& c, const QVec& A, const QVec& B, const QVec& C,
                       YSense sense) {
    mpq_class Ba = dot(B, a), Cb = dot(C, b), Ac = dot(A, c), Bc = dot(B, c), Ca = dot(C, a), Ab = dot(A, b);
    if (Ba == 0 || Cb == 0 || Ac == 0 || Bc == 0 || Ca == 0 || Ab == 0) throw ZeroPairing("a pairing vanishes");
    mpq_class up = Ba * Cb * Ac / (Bc * Ca * Ab);
    return sense == YSense::Upper ? up : 1 / up;
}

namespace {

mpq_class monodromy_i(const NGraph& g, const FlagAssignment& fa, int e) {
    int hu = 2 * e, hv = 2 * e + 1;
    int a1 = g.next_ccw(hu), a2 = g.next_ccw(a1), c1 = g.next_ccw(hv);
    const auto& fh = fa.faces.face_of_half;
    const Flag* F[4] = {&fa.face_flags[fh[hu]], &fa.face_flags[fh[a1]], &fa.face_flags[fh[a2]], &fa.face_flags[fh[c1]]};
    int col = g.edge_color(e);
    if (g.N() == 2) return cross_ratio(F[0]->line(), F[1]->line(), F[2]->line(), F[3]->line());
    // wedge in the two-dimensional quotient F^{i+1}/F^{i-1}
    std::function<mpq_class(const Flag&, const Flag&)> wedge;
    QVec n = F[0]->plane_normal(), l = F[0]->line();
    if (col == 1) {
        wedge = [n](const Flag& x, const Flag& y) { return dot(cross(x.line(), y.line()), n); };
    } else {
        wedge = [l](const Flag& x, const Flag& y) {
            return det3(l, cross(x.plane_normal(), l), cross(y.plane_normal(), l));
        };
    }
    mpq_class w12 = wedge(*F[0], *F[1]), w23 = wedge(*F[1], *F[2]), w34 = wedge(*F[2], *F[3]), w41 = wedge(*F[3], *F[0]);
    if (w12 == 0 || w23 == 0 || w34 == 0 || w41 == 0) throw ZeroWedge("consecutive subspaces coincide");
    return w12 * w34 / (w23 * w41);
}

mpq_class monodromy_y(const NGraph& g, const FlagAssignment& fa, const CycleSpec& cy) {
    if (g.N() != 3) throw UnsupportedConfiguration("Y-cycles need N = 3");
    int o = detail::y_center(g, cy);
    // legs in counterclockwise order at the center
    std::vector<std::pair<int, int>> order;
    int s0 = g.slot_of(g.half_at(cy.legs[0][0], o));
    for (int l = 0; l < 3; ++l) order.push_back({(g.slot_of(g.half_at(cy.legs[l][0], o)) - s0 + 6) % 6, l});
    std::sort(order.begin(), order.end());
    std::vector<QVec> lines, normals;
    for (auto [slot, l] : order) {
        auto ends = detail::path_vertices(g, cy.legs[l], o);
        int t = ends.back();
        int h = g.half_at(cy.legs[l].back(), t);
        const Flag& fl = fa.face_flags[fa.faces.face_of_half[g.next_ccw(h)]];
        lines.push_back(fl.line());
        normals.push_back(fl.plane_normal());
    }
    YSense sense = cy.kind == CycleKind::YUpper ? YSense::Upper : YSense::Lower;
    return triple_ratio(lines[0], lines[1], lines[2], normals[0], normals[1], normals[2], sense);
}

}  // namespace

mpq_class monodromy(const NGraph& g, const FlagAssignment& fa, const CycleSpec& cycle) {
    validate_cycle(g, cycle);
    bool long_leg = false;
    for (const auto& leg : cycle.legs) long_leg = long_leg || leg.size() > 1;
    if (cycle.kind == CycleKind::LongI || long_leg) {
        WeaveData w{g, {cycle}};
        if (cycle.kind == CycleKind::LongI) {
            w = apply_move(w, Move::IIStar, MoveSite{cycle.edges, -1});
        } else {
            for (int l = 0; l < 3; ++l)
                while (w.cycles[0].legs[l].size() > 1) {
                    int o = detail::y_center(w.graph, w.cycles[0]);
                    auto vs = detail::path_vertices(w.graph, w.cycles[0].legs[l], o);
                    w = apply_move(w, Move::II, MoveSite{{w.cycles[0].legs[l].back()}, vs.back()});
                }
        }
        FlagAssignment nfa = solve_face_flags(w.graph, fa.boundary);
        return monodromy(w.graph, nfa, w.cycles[0]);
    }
    // the I-cycle coordinate is the negated cross ratio of v1..v4
    if (cycle.kind == CycleKind::I) return -monodromy_i(g, fa, cycle.edges[0]);
    return monodromy_y(g, fa, cycle);
}

YSeedNumeric extract_seed(const WeaveData& w, const FlagAssignment& fa) {
    YSeedNumeric s;
    for (const auto& c : w.cycles) s.y.push_back(monodromy(w.graph, fa, c));
    s.matrix = quiver_of(w.graph, w.cycles).exchange_matrix();
    return s;
}

EquivarianceReport check_equivariance(const WeaveData& w, const BoundaryFlags& bf, int k) {
    EquivarianceReport r;
    r.before = extract_seed(w, solve_face_flags(w.graph, bf));
    r.expected = mutate_y(r.before, k);
    WeaveData m = legendrian_mutate(w, k);
    r.after = extract_seed(m, solve_face_flags(m.graph, bf));
    r.ok = r.after == r.expected;
    return r;
}

// --------------------------------------------------------------- GL action

Flag transform(const Flag& f, const QMatrix& m) {
    Flag out;
    for (const auto& v : f.basis) {
        QVec x(v.size(), 0);
        for (std::size_t i = 0; i < v.size(); ++i)
            for (std::size_t j = 0; j < v.size(); ++j) x[i] += m[i][j] * v[j];
        out.basis.push_back(x);
    }
    out.check();
    return out;
}

BoundaryFlags transform(const BoundaryFlags& bf, const QMatrix& m) {
    BoundaryFlags out{bf.N, {}};
    for (const auto& f : bf.arcs) out.arcs.push_back(transform(f, m));
    return out;
}

FlagAssignment transform(const FlagAssignment& fa, const QMatrix& m) {
    FlagAssignment out{fa.faces, {}, transform(fa.boundary, m)};
    for (const auto& f : fa.face_flags) out.face_flags.push_back(transform(f, m));
    return out;
}

// -------------------------------------------------------------------- I/O

nlohmann::json to_json(const Flag& f) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& v : f.basis) {
        nlohmann::json r = nlohmann::json::array();
        for (const auto& x : v) r.push_back(x.get_str());
        rows.push_back(r);
    }
    return {{"basis", rows}};
}

nlohmann::json to_json(const BoundaryFlags& bf) {
    nlohmann::json arcs = nlohmann::json::array();
    for (const auto& f : bf.arcs) arcs.push_back(to_json(f));
    return {{"N", bf.N}, {"arcs", arcs}};
}

nlohmann::json to_json(const FlagAssignment& fa) {
    nlohmann::json faces_j = nlohmann::json::array();
    for (std::size_t f = 0; f < fa.face_flags.size(); ++f) {
        auto j = to_json(fa.face_flags[f]);
        j["face"] = f;
        j["arcs"] = fa.faces.faces[f].arcs;
        faces_j.push_back(j);
    }
    return {{"boundary", to_json(fa.boundary)}, {"faces", faces_j}};
}

Flag flag_from_json(const nlohmann::json& j) {
    Flag f;
    for (const auto& r : j.at("basis")) {
        QVec v;
        for (const auto& x : r) {
            mpq_class q(x.get<std::string>());
            q.canonicalize();
            v.push_back(q);
        }
        f.basis.push_back(v);
    }
    f.check();
    return f;
}

BoundaryFlags boundary_flags_from_json(const nlohmann::json& j) {
    BoundaryFlags bf{j.at("N").get<int>(), {}};
    for (const auto& a : j.at("arcs")) bf.arcs.push_back(flag_from_json(a));
    return bf;
}

}  // namespace weave
