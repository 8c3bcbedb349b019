#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>
#include <nlohmann/json.hpp>

#include "weave/clusterkit.hpp"
#include "weave/ngraph.hpp"

namespace weave {

using QVec = std::vector<mpq_class>;
using QMatrix = std::vector<QVec>;  // row-major

// Full flag in Q^N: F^i is spanned by the first i basis vectors.
struct Flag {
    std::vector<QVec> basis;

    int N() const { return static_cast<int>(basis.size()); }
    const QVec& line() const { return basis.at(0); }
    QVec plane_normal() const;  // N = 3 only
    static Flag from_line(const QVec& v);                       // N = 2
    static Flag from_line_plane(const QVec& v, const QVec& n);  // N = 3, v.n = 0
    // Throws ConstraintViolated if the basis is not a basis.
    void check() const;
};

// Same subspace F^i (projective comparison of spanning data).
bool same_subspace(const Flag& a, const Flag& b, int i);

// Flags on the arcs of the boundary circle; arc j runs from boundary
// position j to position j+1.
struct BoundaryFlags {
    int N = 2;
    std::vector<Flag> arcs;
};

struct FlagAssignment {
    FaceMap faces;
    std::vector<Flag> face_flags;
    BoundaryFlags boundary;
};

// Generic flags compatible with the faces of g: line and plane classes are
// assigned from the seeded RNG, then read off on the boundary arcs.
BoundaryFlags generic_boundary_flags(const NGraph& g, std::uint64_t seed);
// Same, for a standard linear or tripod boundary word.
BoundaryFlags generic_boundary_flags(const BraidWord& beta, std::uint64_t seed);

// Face flags forced by the boundary flags; interior faces are filled by
// intersecting and spanning known lines and planes.
FlagAssignment solve_face_flags(const NGraph& g, const BoundaryFlags& bf);
// Independent audit of the edge conditions; throws ConstraintViolated.
void check_flag_conditions(const NGraph& g, const FlagAssignment& fa);

// <v1,v2,v3,v4> = (v1^v2)(v3^v4) / ((v2^v3)(v4^v1)) for vectors in Q^2.
mpq_class cross_ratio(const QVec& v1, const QVec& v2, const QVec& v3, const QVec& v4);

enum class YSense { Upper, Lower };
// Upper: B(a)C(b)A(c) / (B(c)C(a)A(b)); lower: C(a)B(c)A(b) / (C(b)B(a)A(c)).
// a, b, c are vectors and A, B, C covectors in Q^3.
mpq_class triple_ratio(const QVec& a, const QVec& b, const QVec& c, const QVec& A, const QVec& B, const QVec& C,
                       YSense sense);

// Microlocal monodromy along a cycle. Long I-cycles and Y-cycles with long
// legs are first shortened by Move II on a copy of the graph.
mpq_class monodromy(const NGraph& g, const FlagAssignment& fa, const CycleSpec& cycle);

// Monodromies as y-variables together with the intersection matrix.
YSeedNumeric extract_seed(const WeaveData& w, const FlagAssignment& fa);

struct EquivarianceReport {
    bool ok = false;
    YSeedNumeric before;
    YSeedNumeric expected;  // X-mutation of `before`
    YSeedNumeric after;     // read off the mutated graph
};
EquivarianceReport check_equivariance(const WeaveData& w, const BoundaryFlags& bf, int k);

// Applies an invertible matrix to every flag.
Flag transform(const Flag& f, const QMatrix& m);
BoundaryFlags transform(const BoundaryFlags& bf, const QMatrix& m);
FlagAssignment transform(const FlagAssignment& fa, const QMatrix& m);

nlohmann::json to_json(const Flag& f);
nlohmann::json to_json(const BoundaryFlags& bf);
nlohmann::json to_json(const FlagAssignment& fa);
Flag flag_from_json(const nlohmann::json& j);
BoundaryFlags boundary_flags_from_json(const nlohmann::json& j);

}  // namespace weave
