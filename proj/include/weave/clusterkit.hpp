#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "weave/braid.hpp"
#include "weave/laurent.hpp"
#include "weave/rootdata.hpp"

namespace weave {

// n x m integer matrix: rows are the mutable indices, columns all indices.
// Indices are 0-based throughout the library.
class ExchangeMatrix {
public:
    ExchangeMatrix() = default;
    ExchangeMatrix(int n, int m);
    ExchangeMatrix(int n, int m, std::vector<int> entries);
    static ExchangeMatrix from_rows(const IntMatrix& rows, int n = -1);

    int n() const { return n_; }
    int m() const { return m_; }
    // b(i, j) for i < n and j < m.
    int operator()(int i, int j) const { return e_[static_cast<std::size_t>(i) * m_ + j]; }
    int& at(int i, int j) { return e_[static_cast<std::size_t>(i) * m_ + j]; }
    const std::vector<int>& entries() const { return e_; }
    IntMatrix rows() const;
    IntMatrix principal() const;

    bool operator==(const ExchangeMatrix&) const = default;

private:
    int n_ = 0;
    int m_ = 0;
    std::vector<int> e_;
};

ExchangeMatrix mutate_matrix(const ExchangeMatrix& b, int k);

// Symmetrizer d with diag(d) B^pr skew-symmetric, or nullopt.
std::optional<std::vector<long>> skew_symmetrizer(const ExchangeMatrix& b);

// Cartan counterpart: 2 on the diagonal, -|b_ij| off it.
IntMatrix cartan_counterpart(const ExchangeMatrix& b);

// Quiver on m vertices, the first n mutable. adj is m x m and skew-symmetric;
// adj(i,j) > 0 counts arrows i -> j.
class Quiver {
public:
    Quiver() = default;
    Quiver(int m, int n);
    static Quiver from_matrix(const ExchangeMatrix& b);  // needs n == m
    static Quiver from_adjacency(const IntMatrix& adj, int n = -1);

    int m() const { return m_; }
    int n() const { return n_; }
    int operator()(int i, int j) const { return adj_[static_cast<std::size_t>(i) * m_ + j]; }
    void add_arrows(int i, int j, int count = 1);
    ExchangeMatrix exchange_matrix() const;
    IntMatrix adjacency() const;
    // Arrow list (i, j, multiplicity) with i -> j.
    std::vector<std::tuple<int, int, int>> arrows() const;

    bool operator==(const Quiver&) const = default;

private:
    int m_ = 0;
    int n_ = 0;
    std::vector<int> adj_;
};

Quiver mutate_quiver(const Quiver& q, int k);

struct Seed {
    std::vector<LaurentPoly> vars;  // size m, in the initial variables
    ExchangeMatrix matrix;

    bool operator==(const Seed&) const = default;
};

Seed initial_seed(const ExchangeMatrix& b);
Seed mutate_seed(const Seed& s, int k);
// Exchange binomial prod_{b_kj>0} x_j^{b_kj} + prod_{b_kj<0} x_j^{-b_kj}.
LaurentPoly exchange_numerator(const Seed& s, int k);

struct YSeedNumeric {
    std::vector<mpq_class> y;  // size n
    ExchangeMatrix matrix;

    bool operator==(const YSeedNumeric&) const = default;
};

YSeedNumeric mutate_y(const YSeedNumeric& y, int k);

// Seeded draws of integers in [2, 97]; deterministic for a given seed.
class GenericDraws {
public:
    explicit GenericDraws(std::uint64_t seed);
    long next();
    std::uint64_t next_mod();  // uniform nonzero residue mod 2^61-1

private:
    std::uint64_t state_;
};

// y-values drawn from the RNG, resampled (at most 16 times) until a
// mutation in every direction is defined.
YSeedNumeric generic_y_seed(const ExchangeMatrix& b, std::uint64_t rng_seed);

struct ClusterKey {
    std::vector<std::string> parts;  // sorted serializations of mutable variables
    auto operator<=>(const ClusterKey&) const = default;
    bool operator==(const ClusterKey&) const = default;
    std::string str() const;
};

ClusterKey cluster_key(const Seed& s);

struct BipartiteSplit {
    std::vector<int> plus;
    std::vector<int> minus;
};

// Coloring of the mutable part with every arrow from plus to minus. A
// component without arrows puts its smallest vertex in plus.
std::optional<BipartiteSplit> bipartite_split(const ExchangeMatrix& b);
std::optional<BipartiteSplit> bipartite_split(const Quiver& q);

// mu_- mu_+ with the split of the input.
Seed coxeter_mutation(const Seed& s);
Quiver coxeter_mutation(const Quiver& q);
YSeedNumeric coxeter_mutation(const YSeedNumeric& y);

// Same, with a fixed split (used when iterating).
Seed coxeter_mutation(const Seed& s, const BipartiteSplit& split);
YSeedNumeric coxeter_mutation(const YSeedNumeric& y, const BipartiteSplit& split);

struct CoxeterOrbit {
    std::vector<Seed> seeds;  // seeds[r] = mu_Q^r(s)
    bool periodic = false;    // the initial cluster recurred
    int period = 0;           // valid when periodic
};

CoxeterOrbit coxeter_orbit(const Seed& s, int cap);

// Distinctness certificate for long orbits: clusters are compared through
// their values at random points mod 2^61-1. Distinct values prove distinct
// Laurent polynomials; equal values are reported as a recurrence candidate.
struct ModularOrbit {
    std::vector<std::vector<std::uint64_t>> cluster_values;  // sorted per step
    bool periodic = false;
    int period = 0;
};
ModularOrbit coxeter_orbit_mod(const ExchangeMatrix& b, int cap, std::uint64_t rng_seed);

struct EnumOptions {
    long cap = 100000;
    // Re-derive every exchange relation exactly, not only new variables.
    bool verify_all_paths = true;
    std::uint64_t rng_seed = 0x5eed;
};

struct ExchangeGraph {
    int n = 0;
    int m = 0;
    std::vector<LaurentPoly> variables;        // interned; ids index this
    std::vector<bool> frozen_variable;
    std::vector<std::vector<int>> vertex_vars;  // labeled variable ids per vertex
    std::vector<ExchangeMatrix> vertex_matrix;
    std::vector<std::tuple<int, int, int>> edges;  // (u, v, k), u < v, k the first direction seen
    long exact_divisions = 0;
    long verified_relations = 0;

    std::size_t num_vertices() const { return vertex_vars.size(); }
    std::size_t num_cluster_variables() const;
    Seed seed(std::size_t v) const;
    ClusterKey key(std::size_t v) const;
    std::vector<std::vector<int>> neighbours() const;
    bool is_regular() const;
    bool is_connected() const;
};

ExchangeGraph enumerate_exchange_graph(const Seed& s0, const EnumOptions& opt = {});

// d_i = -(min exponent of x_i), over the first n variables.
RootVector denominator_vector(const LaurentPoly& v, int n);

// Standard seeds.
ExchangeMatrix dynkin_matrix(const DynkinType& t);  // bipartite, vertex 1 a source
ExchangeMatrix linear_matrix(int n);                // 1 -> 2 <- 3 -> ...
ExchangeMatrix tripod_matrix(int a, int b, int c);  // Q(a,b,c), center 1 a source

// (r, i) -> root labeling mu_Q^r(F_{-alpha_i}), r in 0..h/2.
struct FacetTable {
    int e = 0;
    std::vector<std::vector<RootVector>> rows;  // rows[r][i]
};
FacetTable facet_orbit_table(const DynkinType& t);

// Bounded search in the mutation class for an acyclic representative whose
// Cartan counterpart is of finite type.
std::optional<std::vector<DynkinType>> detect_finite_type(const ExchangeMatrix& b, long bound = 20000);

bool is_acyclic(const ExchangeMatrix& b);

// One vertex per bounded brick (between consecutive equal letters), ordered
// by (row, start). Consecutive bricks in a row point left to right; bricks in
// adjacent rows interleaving as s' < s < t' < t give (s,t) -> (s',t').
Quiver quiver_from_brick(const BraidWord& w);

}  // namespace weave
