#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "weave/braid.hpp"
#include "weave/clusterkit.hpp"
#include "weave/foldkit.hpp"

namespace weave {

enum class VertexKind { Trivalent, Hexagonal, Boundary, Crossing };

std::string to_string(VertexKind k);

// Planar N-graph on the disk stored as a rotation system. Edge e owns the
// half-edges 2e and 2e+1; a half-edge emanates from the vertex it is
// attached to. Colors are 1..N-1 (1 = blue, 2 = red when N = 3).
class NGraph {
public:
    NGraph() = default;
    explicit NGraph(int N) : N_(N) {}

    int N() const { return N_; }

    // construction
    int add_vertex(VertexKind kind, int color = 0);
    int add_edge(int color);
    // Sets the counterclockwise rotation at v.
    void set_rotation(int v, std::vector<int> halves);
    void remove_vertex(int v);
    void remove_edge(int e);
    void set_boundary(std::vector<int> verts) { boundary_ = std::move(verts); }
    void set_edge_color(int e, int c) { edge_color_[e] = c; }
    void set_vertex_color(int v, int c) { vcolor_[v] = c; }

    // structure
    int num_vertex_slots() const { return static_cast<int>(kind_.size()); }
    int num_edge_slots() const { return static_cast<int>(edge_color_.size()); }
    bool vertex_alive(int v) const { return valive_[v]; }
    bool edge_alive(int e) const { return ealive_[e]; }
    int num_vertices() const;
    int num_edges() const;
    VertexKind kind(int v) const { return kind_[v]; }
    int vertex_color(int v) const { return vcolor_[v]; }
    int edge_color(int e) const { return edge_color_[e]; }
    int half_color(int h) const { return edge_color_[h >> 1]; }
    const std::vector<int>& rotation(int v) const { return rot_[v]; }

    static int twin(int h) { return h ^ 1; }
    static int edge_of(int h) { return h >> 1; }
    int vertex_of(int h) const { return hvert_[h]; }
    int slot_of(int h) const { return hslot_[h]; }
    int next_ccw(int h) const;
    int prev_ccw(int h) const;
    // Half-edge of e emanating from v (the first one when e is a loop).
    int half_at(int e, int v) const;
    int other_end(int e, int v) const;

    const std::vector<int>& boundary() const { return boundary_; }
    int boundary_position(int v) const;  // -1 if v is not on the boundary
    BraidWord boundary_word() const;

    // Throws InvalidGraph when the map is malformed.
    void validate() const;

    // Copy without dead slots; edge_map[e] is the new id of e (or -1).
    NGraph compacted(std::vector<int>* edge_map = nullptr, std::vector<int>* vertex_map = nullptr) const;

    bool operator==(const NGraph&) const = default;

private:
    int N_ = 2;
    std::vector<VertexKind> kind_;
    std::vector<int> vcolor_;
    std::vector<std::vector<int>> rot_;
    std::vector<bool> valive_;
    std::vector<int> edge_color_;
    std::vector<bool> ealive_;
    std::vector<int> hvert_;
    std::vector<int> hslot_;
    std::vector<int> boundary_;
};

// Faces of the disk cut along the graph. A face lists the half-edges having it
// on their left and the boundary arcs it contains; arc j runs from boundary
// position j to position j+1 counterclockwise.
struct Face {
    std::vector<int> halves;
    std::vector<int> arcs;
};

struct FaceMap {
    std::vector<Face> faces;
    std::vector<int> face_of_half;  // indexed by half-edge id, -1 for dead
    std::vector<int> face_of_arc;
};

FaceMap faces(const NGraph& g);

// Canonical serialization seeded at the first boundary position holding the
// least letter; boundary positions are part of the form.
struct CanonicalForm {
    std::string text;
    std::vector<int> edge_label;    // canonical label per edge id (-1 dead)
    std::vector<int> vertex_label;  // canonical label per vertex id
};
CanonicalForm canonical_form(const NGraph& g);

enum class CycleKind { I, LongI, YUpper, YLower };
std::string to_string(CycleKind k);

// I / long-I: edges is the path from one trivalent end to the other through
// hexagonal points. Y: legs are three paths leaving one hexagonal point.
struct CycleSpec {
    CycleKind kind = CycleKind::I;
    std::vector<int> edges;
    std::vector<std::vector<int>> legs;
    int label = 0;

    bool is_y() const { return kind == CycleKind::YUpper || kind == CycleKind::YLower; }
    bool operator==(const CycleSpec&) const = default;
};

using CycleTuple = std::vector<CycleSpec>;

// Y-cycle kind for a given edge color.
CycleKind y_kind_for_color(int color);

// Checks the cycle against the graph; throws InvalidGraph.
void validate_cycle(const NGraph& g, const CycleSpec& c);

struct WeaveData {
    NGraph graph;
    CycleTuple cycles;
};

WeaveData build_linear(int n);
WeaveData build_tripod(int a, int b, int c);
NGraph color_swap(const NGraph& g);
WeaveData color_swap(const WeaveData& w);

// Rotation by `steps` boundary positions counterclockwise (negative is
// clockwise).
NGraph rotate(const NGraph& g, int steps);
bool is_rotation_symmetric(const NGraph& g, int order);

// Annular graph: g.boundary() is the outer circle, inner the inner circle,
// both counterclockwise.
struct AnnularNGraph {
    NGraph graph;
    std::vector<int> inner;
    BraidWord outer_word() const { return graph.boundary_word(); }
    BraidWord inner_word() const;
};

AnnularNGraph coxeter_padding(int a, int b, int c, bool barred);
AnnularNGraph empty_annulus(const BraidWord& w);
// Inner boundary position p of the annulus is glued to boundary position
// p + offset of the disk.
WeaveData concat(const AnnularNGraph& ann, const WeaveData& inner, int offset = 0);
AnnularNGraph concat(const AnnularNGraph& outer, const AnnularNGraph& inner, int offset = 0);

// Signed intersection quiver; b_ij sums, over shared trivalent ends, +1 when
// the half-edge of j follows that of i counterclockwise, -1 otherwise.
Quiver quiver_of(const NGraph& g, const CycleTuple& cycles);

WeaveData legendrian_mutate(const WeaveData& w, int k);
WeaveData legendrian_coxeter_mutation(const WeaveData& w);
// r-fold Legendrian Coxeter mutation of the standard tripod.
WeaveData tripod_coxeter_power(int a, int b, int c, int r);

enum class Move { I, II, IIStar };
struct MoveSite {
    std::vector<int> edges;
    int vertex = -1;
};
// Forward Move I: the edge joining the two hexagons. Backward Move I: edges
// {middle, upper, lower} of three parallel strands. Move II forward:
// vertex = the trivalent P, edges = {edge from P to the hexagon}; backward:
// vertex = the trivalent R of the right-hand pattern. II*: edges = a long-I
// path, pushed through from its first end until it is an I-cycle.
WeaveData apply_move(const WeaveData& w, Move m, const MoveSite& site, bool backward = false);
// Normalizes every long-I cycle to an I-cycle by repeated Move II.
WeaveData normalize_long_i(const WeaveData& w);

struct RaySpokes {
    int center = -1;
    std::vector<int> spokes;  // the three boundary spokes of the center, ccw
};
std::optional<RaySpokes> find_rays(const NGraph& g);
bool is_ray_symmetric(const NGraph& g);
WeaveData partial_rotation(const WeaveData& w);

enum class AdmissibleSetting { A_odd, D4, D_partial, E6 };
AdmissibleSetting parse_setting(const std::string& s);
std::string to_string(AdmissibleSetting s);

struct GAdmissibility {
    bool graph_symmetric = false;
    bool cycles_match = false;
    std::vector<int> relabel;  // cycle i goes to cycle relabel[i]
    bool ok() const { return graph_symmetric && cycles_match; }
};
GAdmissibility is_G_admissible(const WeaveData& w, AdmissibleSetting s);
// Standard input for each setting and rank of the folded type.
WeaveData standard_admissible_graph(AdmissibleSetting s, int n);
VertexAction action_from_relabel(const std::vector<int>& relabel);

// Cycle-to-cycle map induced by an isomorphism between g and h (canonical
// forms equal); nullopt if some cycle has no image.
std::optional<std::vector<int>> match_cycles(const NGraph& g, const CycleTuple& cg, const NGraph& h,
                                             const CycleTuple& ch);

// I/O
nlohmann::json to_json(const NGraph& g);
nlohmann::json to_json(const WeaveData& w);
NGraph ngraph_from_json(const nlohmann::json& j);
WeaveData weave_from_json(const nlohmann::json& j);
std::string to_dot(const WeaveData& w);
std::string to_svg(const WeaveData& w);

}  // namespace weave
