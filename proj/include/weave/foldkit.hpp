#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "weave/clusterkit.hpp"

namespace weave {

using Orbit = std::vector<int>;

// Cyclic action on [m] generated by one permutation. Orbits are kept in a
// fixed order; by default sorted by their smallest element.
struct VertexAction {
    std::vector<int> perm;
    int order = 1;
    std::vector<Orbit> orbits;

    VertexAction() = default;
    explicit VertexAction(std::vector<int> perm);
    VertexAction(std::vector<int> perm, std::vector<Orbit> orbit_order);

    int m() const { return static_cast<int>(perm.size()); }
    int orbit_of(int i) const;
    static VertexAction identity(int m);
};

struct AdmissibilityViolation {
    char condition;  // 'a'..'d'
    int i = -1;
    int j = -1;
    int g = 0;  // power of the generator
    std::string str() const;
};

struct AdmissibilityReport {
    std::vector<AdmissibilityViolation> violations;
    bool ok() const { return violations.empty(); }
};

AdmissibilityReport check_admissible(const ExchangeMatrix& b, const VertexAction& a);

// Rows run over all orbits, columns over the mutable orbits:
// b^G_{I,J} = sum_{i in I} b_{i,j} for any j in J.
struct FoldedMatrix {
    int n_orbits = 0;  // mutable orbits
    int m_orbits = 0;  // all orbits
    IntMatrix entries;  // m_orbits x n_orbits

    bool operator==(const FoldedMatrix&) const = default;
    // The n x m exchange matrix driving mutations of folded seeds and y-seeds.
    ExchangeMatrix exchange() const;
    IntMatrix cartan() const;  // counterpart of the mutable square part
};

FoldedMatrix fold_matrix(const ExchangeMatrix& b, const VertexAction& a);
FoldedMatrix mutate_folded(const FoldedMatrix& f, int k);

// mu_I as a composite; checks the forward and reverse orders agree.
ExchangeMatrix orbit_mutation(const ExchangeMatrix& b, const VertexAction& a, int orbit);
Quiver orbit_mutation(const Quiver& q, const VertexAction& a, int orbit);
Seed orbit_mutation(const Seed& s, const VertexAction& a, int orbit);
YSeedNumeric orbit_mutation(const YSeedNumeric& y, const VertexAction& a, int orbit);

struct FoldedSeedNumeric {
    std::vector<mpq_class> y;  // one value per mutable orbit
    FoldedMatrix matrix;

    bool operator==(const FoldedSeedNumeric&) const = default;
};

// Requires equal values along every orbit.
FoldedSeedNumeric fold_y(const YSeedNumeric& y, const VertexAction& a);
FoldedSeedNumeric orbit_mutation(const FoldedSeedNumeric& f, int orbit);
FoldedSeedNumeric coxeter_mutation(const FoldedSeedNumeric& f);
// y-seed with values constant along orbits, drawn from the RNG.
YSeedNumeric invariant_y_seed(const ExchangeMatrix& b, const VertexAction& a, std::uint64_t rng_seed);

bool check_globally_foldable(const ExchangeMatrix& b, const VertexAction& a, long cap = 100000);

struct FoldedExchangeGraph {
    std::vector<Seed> seeds;  // unfolded representatives
    std::vector<FoldedMatrix> matrices;
    std::vector<std::tuple<int, int, int>> edges;  // (u, v, orbit), u < v
    long commutation_checks = 0;

    std::size_t num_vertices() const { return seeds.size(); }
};

FoldedExchangeGraph enumerate_folded_pattern(const Seed& s0, const VertexAction& a, long cap = 100000);
// Folded cluster variables: distinct orbit-indexed variable sets over all seeds.
std::size_t folded_cluster_variable_count(const FoldedExchangeGraph& g, const VertexAction& a);

// The four standard foldings ADE -> BCFG, with the orbit order that puts
// the folded Cartan counterpart in the usual labeling.
struct StandardFolding {
    DynkinType unfolded;
    DynkinType folded;
    ExchangeMatrix matrix;  // bipartite unfolded matrix
    VertexAction action;
};

StandardFolding standard_folding(const DynkinType& folded);

}  // namespace weave
