#include "weave/foldkit.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "weave/errors.hpp"

namespace weave {

// ------------------------------------------------------------------ action

static int perm_order(const std::vector<int>& p) {
    const int m = static_cast<int>(p.size());
    std::vector<int> cur(m);
    for (int i = 0; i < m; ++i) cur[i] = i;
    for (int g = 1; g <= 720720; ++g) {
        for (int i = 0; i < m; ++i) cur[i] = p[cur[i]];
        bool id = true;
        for (int i = 0; i < m && id; ++i) id = cur[i] == i;
        if (id) return g;
    }
    throw InvalidArgument("permutation order too large");
}

static void check_perm(const std::vector<int>& p) {
    std::vector<bool> hit(p.size(), false);
    for (int x : p) {
        if (x < 0 || x >= static_cast<int>(p.size()) || hit[x]) throw InvalidArgument("action is not a permutation");
        hit[x] = true;
    }
}

VertexAction::VertexAction(std::vector<int> p) : perm(std::move(p)) {
    check_perm(perm);
    order = perm_order(perm);
    std::vector<bool> seen(perm.size(), false);
    for (int i = 0; i < m(); ++i) {
        if (seen[i]) continue;
        Orbit o;
        for (int j = i; !seen[j]; j = perm[j]) {
            seen[j] = true;
            o.push_back(j);
        }
        std::sort(o.begin(), o.end());
        orbits.push_back(o);
    }
}

VertexAction::VertexAction(std::vector<int> p, std::vector<Orbit> orbit_order) : VertexAction(std::move(p)) {
    std::vector<Orbit> given = orbit_order;
    for (auto& o : given) std::sort(o.begin(), o.end());
    std::vector<Orbit> mine = orbits;
    std::sort(given.begin(), given.end());
    std::sort(mine.begin(), mine.end());
    if (given != mine) throw InvalidArgument("orbit order does not list the orbits of the action");
    orbits = std::move(orbit_order);
}

int VertexAction::orbit_of(int i) const {
    for (std::size_t k = 0; k < orbits.size(); ++k)
        if (std::find(orbits[k].begin(), orbits[k].end(), i) != orbits[k].end()) return static_cast<int>(k);
    throw InvalidArgument("index outside the action");
}

VertexAction VertexAction::identity(int m) {
    std::vector<int> p(m);
    for (int i = 0; i < m; ++i) p[i] = i;
    return VertexAction(p);
}

std::string AdmissibilityViolation::str() const {
    return std::string("(") + condition + ") i=" + std::to_string(i + 1) + " j=" + std::to_string(j + 1) +
           " g=" + std::to_string(g);
}

static int power_between(const VertexAction& a, int i, int ip) {
    int x = i;
    for (int g = 0; g < a.order; ++g) {
        if (x == ip) return g;
        x = a.perm[x];
    }
    return -1;
}

AdmissibilityReport check_admissible(const ExchangeMatrix& b, const VertexAction& a) {
    if (a.m() != b.m()) throw InvalidArgument("action size differs from the matrix");
    AdmissibilityReport rep;
    const int n = b.n(), m = b.m();
    for (int i = 0; i < m; ++i)
        if ((i < n) != (a.perm[i] < n)) rep.violations.push_back({'a', i, a.perm[i], 1});
    if (!rep.ok()) return rep;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j)
            if (b(i, j) != b(a.perm[i], a.perm[j])) rep.violations.push_back({'b', i, j, 1});
    for (const auto& o : a.orbits)
        for (int i : o)
            for (int ip : o) {
                if (i == ip || i >= n) continue;
                if (b(i, ip) != 0) rep.violations.push_back({'c', i, ip, power_between(a, i, ip)});
                for (int j = 0; j < n && i < ip; ++j)
                    if (static_cast<long>(b(i, j)) * b(ip, j) < 0)
                        rep.violations.push_back({'d', i, j, power_between(a, i, ip)});
            }
    return rep;
}

// ------------------------------------------------------------------ folding

static std::vector<Orbit> mutable_first(const VertexAction& a, int n) {
    std::vector<Orbit> out;
    for (const auto& o : a.orbits)
        if (o[0] < n) out.push_back(o);
    for (const auto& o : a.orbits)
        if (o[0] >= n) out.push_back(o);
    return out;
}

ExchangeMatrix FoldedMatrix::exchange() const {
    ExchangeMatrix e(n_orbits, m_orbits);
    for (int k = 0; k < n_orbits; ++k)
        for (int j = 0; j < m_orbits; ++j) e.at(k, j) = -entries[j][k];
    return e;
}

IntMatrix FoldedMatrix::cartan() const {
    IntMatrix c(n_orbits, std::vector<int>(n_orbits));
    for (int i = 0; i < n_orbits; ++i)
        for (int j = 0; j < n_orbits; ++j) c[i][j] = i == j ? 2 : -std::abs(entries[i][j]);
    return c;
}

FoldedMatrix fold_matrix(const ExchangeMatrix& b, const VertexAction& a) {
    auto rep = check_admissible(b, a);
    if (!rep.ok()) throw NotAdmissible("matrix is not admissible: " + rep.violations[0].str());
    const int n = b.n();
    auto orbs = mutable_first(a, n);
    FoldedMatrix f;
    f.m_orbits = static_cast<int>(orbs.size());
    for (const auto& o : orbs) f.n_orbits += o[0] < n;
    f.entries.assign(f.m_orbits, std::vector<int>(f.n_orbits, 0));
    for (int I = 0; I < f.m_orbits; ++I)
        for (int J = 0; J < f.n_orbits; ++J) {
            const int j = orbs[J][0];
            int s = 0;
            for (int i : orbs[I]) s += i < n ? b(i, j) : -b(j, i);
            f.entries[I][J] = s;
        }
    return f;
}

FoldedMatrix mutate_folded(const FoldedMatrix& f, int k) {
    if (k < 0 || k >= f.n_orbits) throw InvalidArgument("folded mutation direction is not mutable");
    FoldedMatrix r = f;
    for (int I = 0; I < f.m_orbits; ++I)
        for (int J = 0; J < f.n_orbits; ++J) {
            int bij = f.entries[I][J];
            if (I == k || J == k) {
                r.entries[I][J] = -bij;
            } else {
                int bik = f.entries[I][k], bkj = f.entries[k][J];
                r.entries[I][J] = bij + (std::abs(bik) * bkj + bik * std::abs(bkj)) / 2;
            }
        }
    return r;
}

// --------------------------------------------------------- orbit mutations

static const Orbit& mutable_orbit(const VertexAction& a, int n, int orbit) {
    auto orbs = mutable_first(a, n);
    if (orbit < 0 || orbit >= static_cast<int>(orbs.size()) || orbs[orbit][0] >= n)
        throw InvalidArgument("orbit " + std::to_string(orbit) + " is not a mutable orbit");
    for (const auto& o : a.orbits)
        if (o == orbs[orbit]) return o;
    throw InvalidArgument("orbit lookup failed");
}

template <class T, class F>
static T composite(const T& x, const Orbit& o, F mut) {
    T fwd = x, bwd = x;
    for (int i : o) fwd = mut(fwd, i);
    for (auto it = o.rbegin(); it != o.rend(); ++it) bwd = mut(bwd, *it);
    if (!(fwd == bwd)) throw NonCommuting("mutations inside an orbit do not commute");
    return fwd;
}

static void require_admissible(const ExchangeMatrix& b, const VertexAction& a) {
    auto rep = check_admissible(b, a);
    if (!rep.ok()) throw NotAdmissible("input is not admissible: " + rep.violations[0].str());
}

ExchangeMatrix orbit_mutation(const ExchangeMatrix& b, const VertexAction& a, int orbit) {
    require_admissible(b, a);
    return composite(b, mutable_orbit(a, b.n(), orbit), [](const ExchangeMatrix& x, int k) { return mutate_matrix(x, k); });
}

Quiver orbit_mutation(const Quiver& q, const VertexAction& a, int orbit) {
    require_admissible(q.exchange_matrix(), a);
    return composite(q, mutable_orbit(a, q.n(), orbit), [](const Quiver& x, int k) { return mutate_quiver(x, k); });
}

Seed orbit_mutation(const Seed& s, const VertexAction& a, int orbit) {
    require_admissible(s.matrix, a);
    return composite(s, mutable_orbit(a, s.matrix.n(), orbit), [](const Seed& x, int k) { return mutate_seed(x, k); });
}

YSeedNumeric orbit_mutation(const YSeedNumeric& y, const VertexAction& a, int orbit) {
    require_admissible(y.matrix, a);
    return composite(y, mutable_orbit(a, y.matrix.n(), orbit), [](const YSeedNumeric& x, int k) { return mutate_y(x, k); });
}

FoldedSeedNumeric fold_y(const YSeedNumeric& y, const VertexAction& a) {
    FoldedSeedNumeric f;
    f.matrix = fold_matrix(y.matrix, a);
    auto orbs = mutable_first(a, y.matrix.n());
    for (int I = 0; I < f.matrix.n_orbits; ++I) {
        const mpq_class& v = y.y[orbs[I][0]];
        for (int i : orbs[I])
            if (y.y[i] != v) throw NotAdmissible("y-values differ along an orbit");
        f.y.push_back(v);
    }
    return f;
}

FoldedSeedNumeric orbit_mutation(const FoldedSeedNumeric& f, int orbit) {
    YSeedNumeric y{f.y, f.matrix.exchange()};
    y = mutate_y(y, orbit);
    return {y.y, mutate_folded(f.matrix, orbit)};
}

FoldedSeedNumeric coxeter_mutation(const FoldedSeedNumeric& f) {
    auto sp = bipartite_split(f.matrix.exchange());
    if (!sp) throw NotBipartite("folded matrix is not bipartite");
    FoldedSeedNumeric r = f;
    for (int k : sp->plus) r = orbit_mutation(r, k);
    for (int k : sp->minus) r = orbit_mutation(r, k);
    return r;
}

YSeedNumeric invariant_y_seed(const ExchangeMatrix& b, const VertexAction& a, std::uint64_t rng_seed) {
    GenericDraws rng(rng_seed);
    YSeedNumeric y{std::vector<mpq_class>(b.n()), b};
    for (const auto& o : a.orbits) {
        if (o[0] >= b.n()) continue;
        mpq_class v(rng.next());
        for (int i : o) y.y[i] = v;
    }
    return y;
}

// ------------------------------------------------------- global foldability

bool check_globally_foldable(const ExchangeMatrix& b0, const VertexAction& a, long cap) {
    if (!check_admissible(b0, a).ok()) return false;
    const int nI = fold_matrix(b0, a).n_orbits;
    // The action is fixed, so the orbit-respecting labeling is the identity
    // labeling and the matrix entries are already canonical.
    std::set<std::vector<int>> seen{b0.entries()};
    std::deque<ExchangeMatrix> q{b0};
    while (!q.empty()) {
        ExchangeMatrix b = q.front();
        q.pop_front();
        for (int I = 0; I < nI; ++I) {
            ExchangeMatrix c = orbit_mutation(b, a, I);
            if (!check_admissible(c, a).ok()) return false;
            if (seen.insert(c.entries()).second) {
                if (static_cast<long>(seen.size()) > cap) throw CapExceeded("global foldability search exceeds cap");
                q.push_back(c);
            }
        }
    }
    return true;
}

FoldedExchangeGraph enumerate_folded_pattern(const Seed& s0, const VertexAction& a, long cap) {
    require_admissible(s0.matrix, a);
    FoldedExchangeGraph g;
    const int nI = fold_matrix(s0.matrix, a).n_orbits;
    std::map<ClusterKey, int> index;
    index.emplace(cluster_key(s0), 0);
    g.seeds.push_back(s0);
    g.matrices.push_back(fold_matrix(s0.matrix, a));
    std::set<std::pair<int, int>> seen;
    for (std::size_t u = 0; u < g.seeds.size(); ++u) {
        for (int I = 0; I < nI; ++I) {
            Seed s = orbit_mutation(g.seeds[u], a, I);
            FoldedMatrix f = fold_matrix(s.matrix, a);
            if (!(f == mutate_folded(g.matrices[u], I)))
                throw Error("FoldCommutationFailure", "folding does not commute with orbit mutation");
            ++g.commutation_checks;
            auto key = cluster_key(s);
            auto it = index.find(key);
            int v;
            if (it == index.end()) {
                if (static_cast<long>(g.seeds.size()) >= cap) throw CapExceeded("folded pattern exceeds cap");
                v = static_cast<int>(g.seeds.size());
                index.emplace(std::move(key), v);
                g.seeds.push_back(std::move(s));
                g.matrices.push_back(std::move(f));
            } else {
                v = it->second;
            }
            int uu = static_cast<int>(u);
            if (uu != v && seen.emplace(std::min(uu, v), std::max(uu, v)).second)
                g.edges.emplace_back(std::min(uu, v), std::max(uu, v), I);
        }
    }
    return g;
}

std::size_t folded_cluster_variable_count(const FoldedExchangeGraph& g, const VertexAction& a) {
    std::set<std::vector<std::string>> seen;
    for (const auto& s : g.seeds)
        for (const auto& orb : a.orbits) {
            if (orb.front() >= s.matrix.n()) continue;
            std::vector<std::string> vs;
            for (int i : orb) vs.push_back(s.vars[i].serialize());
            std::sort(vs.begin(), vs.end());
            seen.insert(std::move(vs));
        }
    return seen.size();
}

// ------------------------------------------------------ standard foldings

StandardFolding standard_folding(const DynkinType& t) {
    validate(t);
    const int n = t.rank;
    StandardFolding sf;
    sf.folded = t;
    std::vector<int> perm;
    std::vector<Orbit> orbs;
    switch (t.family) {
    case Family::B: {
        sf.unfolded = {Family::A, 2 * n - 1};
        const int N = 2 * n - 1;
        perm.resize(N);
        for (int i = 0; i < N; ++i) perm[i] = N - 1 - i;
        for (int i = 0; i + 1 < n; ++i) orbs.push_back({i, N - 1 - i});
        orbs.push_back({n - 1});
        sf.matrix = dynkin_matrix(sf.unfolded);
        break;
    }
    case Family::C: {
        sf.unfolded = {Family::D, n + 1};
        perm.resize(n + 1);
        for (int i = 0; i <= n; ++i) perm[i] = i;
        std::swap(perm[n - 1], perm[n]);
        for (int i = 0; i + 1 < n; ++i) orbs.push_back({i});
        orbs.push_back({n - 1, n});
        sf.matrix = dynkin_matrix(sf.unfolded);
        break;
    }
    case Family::F:
        sf.unfolded = {Family::E, 6};
        perm = {5, 1, 4, 3, 2, 0};
        orbs = {{0, 5}, {2, 4}, {3}, {1}};
        sf.matrix = dynkin_matrix(sf.unfolded);
        break;
    case Family::G: {
        sf.unfolded = {Family::D, 4};
        perm = {2, 1, 3, 0};
        orbs = {{1}, {0, 2, 3}};
        // star with the center a source
        ExchangeMatrix b = dynkin_matrix(sf.unfolded);
        sf.matrix = ExchangeMatrix(4, 4);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) sf.matrix.at(i, j) = -b(i, j);
        break;
    }
    default:
        throw UnsupportedConfiguration("no standard folding onto " + to_string(t));
    }
    sf.action = VertexAction(perm, orbs);
    return sf;
}

}  // namespace weave
