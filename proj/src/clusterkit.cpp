#include "weave/clusterkit.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <unordered_map>

#include "weave/errors.hpp"

namespace weave {

// ---------------------------------------------------------------- matrices

ExchangeMatrix::ExchangeMatrix(int n, int m) : n_(n), m_(m), e_(static_cast<std::size_t>(n) * m, 0) {
    if (n < 0 || m < n) throw InvalidArgument("exchange matrix needs 0 <= n <= m");
}

ExchangeMatrix::ExchangeMatrix(int n, int m, std::vector<int> entries) : n_(n), m_(m), e_(std::move(entries)) {
    if (n < 0 || m < n) throw InvalidArgument("exchange matrix needs 0 <= n <= m");
    if (e_.size() != static_cast<std::size_t>(n) * m) throw InvalidArgument("exchange matrix size mismatch");
}

ExchangeMatrix ExchangeMatrix::from_rows(const IntMatrix& rows, int n) {
    int nr = static_cast<int>(rows.size());
    int m = nr ? static_cast<int>(rows[0].size()) : 0;
    if (n < 0) n = nr;
    if (n != nr) throw InvalidArgument("row count must equal n");
    ExchangeMatrix b(n, m);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(rows[i].size()) != m) throw InvalidArgument("ragged exchange matrix");
        for (int j = 0; j < m; ++j) b.at(i, j) = rows[i][j];
    }
    return b;
}

IntMatrix ExchangeMatrix::rows() const {
    IntMatrix r(n_, std::vector<int>(m_));
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < m_; ++j) r[i][j] = (*this)(i, j);
    return r;
}

IntMatrix ExchangeMatrix::principal() const {
    IntMatrix r(n_, std::vector<int>(n_));
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) r[i][j] = (*this)(i, j);
    return r;
}

static void check_direction(int k, int n) {
    if (k < 0 || k >= n) throw InvalidArgument("mutation direction " + std::to_string(k) + " is not mutable");
}

static int mutated_entry(int bij, int bik, int bkj) {
    return bij + (std::abs(bik) * bkj + bik * std::abs(bkj)) / 2;
}

ExchangeMatrix mutate_matrix(const ExchangeMatrix& b, int k) {
    check_direction(k, b.n());
    ExchangeMatrix r = b;
    for (int i = 0; i < b.n(); ++i)
        for (int j = 0; j < b.m(); ++j) {
            if (i == k || j == k) r.at(i, j) = -b(i, j);
            else r.at(i, j) = mutated_entry(b(i, j), b(i, k), b(k, j));
        }
    return r;
}

std::optional<std::vector<long>> skew_symmetrizer(const ExchangeMatrix& b) {
    const int n = b.n();
    IntMatrix c(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) {
        if (b(i, i) != 0) return std::nullopt;
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            if ((b(i, j) == 0) != (b(j, i) == 0)) return std::nullopt;
            if (b(i, j) != 0 && (b(i, j) > 0) == (b(j, i) > 0)) return std::nullopt;
            c[i][j] = -std::abs(b(i, j));
        }
        c[i][i] = 2;
    }
    return symmetrizer(c);
}

IntMatrix cartan_counterpart(const ExchangeMatrix& b) {
    const int n = b.n();
    IntMatrix c(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) c[i][j] = i == j ? 2 : -std::abs(b(i, j));
    return c;
}

// ------------------------------------------------------------------ quivers

Quiver::Quiver(int m, int n) : m_(m), n_(n), adj_(static_cast<std::size_t>(m) * m, 0) {
    if (n < 0 || m < n) throw InvalidArgument("quiver needs 0 <= n <= m");
}

Quiver Quiver::from_matrix(const ExchangeMatrix& b) {
    if (b.n() != b.m()) throw InvalidArgument("quiver from a non-square exchange matrix");
    return from_adjacency(b.rows(), b.n());
}

Quiver Quiver::from_adjacency(const IntMatrix& adj, int n) {
    int m = static_cast<int>(adj.size());
    if (n < 0) n = m;
    Quiver q(m, n);
    for (int i = 0; i < m; ++i) {
        if (static_cast<int>(adj[i].size()) != m) throw InvalidArgument("adjacency must be square");
        if (adj[i][i] != 0) throw InvalidArgument("quiver has a loop");
        for (int j = 0; j < m; ++j) {
            if (adj[i][j] != -adj[j][i]) throw InvalidArgument("adjacency is not skew-symmetric");
            q.adj_[static_cast<std::size_t>(i) * m + j] = adj[i][j];
        }
    }
    return q;
}

void Quiver::add_arrows(int i, int j, int count) {
    if (i == j) throw InvalidArgument("quiver loops are not allowed");
    adj_[static_cast<std::size_t>(i) * m_ + j] += count;
    adj_[static_cast<std::size_t>(j) * m_ + i] -= count;
}

ExchangeMatrix Quiver::exchange_matrix() const {
    ExchangeMatrix b(n_, m_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < m_; ++j) b.at(i, j) = (*this)(i, j);
    return b;
}

IntMatrix Quiver::adjacency() const {
    IntMatrix r(m_, std::vector<int>(m_));
    for (int i = 0; i < m_; ++i)
        for (int j = 0; j < m_; ++j) r[i][j] = (*this)(i, j);
    return r;
}

std::vector<std::tuple<int, int, int>> Quiver::arrows() const {
    std::vector<std::tuple<int, int, int>> out;
    for (int i = 0; i < m_; ++i)
        for (int j = 0; j < m_; ++j)
            if ((*this)(i, j) > 0) out.emplace_back(i, j, (*this)(i, j));
    return out;
}

Quiver mutate_quiver(const Quiver& q, int k) {
    check_direction(k, q.n());
    const int m = q.m();
    Quiver r(m, q.n());
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            int v = (i == k || j == k) ? -q(i, j) : mutated_entry(q(i, j), q(i, k), q(k, j));
            if (v) r.add_arrows(i, j, v);
        }
    return r;
}

// -------------------------------------------------------------------- seeds

Seed initial_seed(const ExchangeMatrix& b) {
    Seed s;
    s.matrix = b;
    for (int i = 0; i < b.m(); ++i) s.vars.push_back(LaurentPoly::variable(b.m(), i));
    return s;
}

LaurentPoly exchange_numerator(const Seed& s, int k) {
    const int m = s.matrix.m();
    const int nv = s.vars.empty() ? m : s.vars[0].nvars();
    LaurentPoly pos = LaurentPoly::constant(nv, 1), neg = LaurentPoly::constant(nv, 1);
    for (int j = 0; j < m; ++j) {
        int b = s.matrix(k, j);
        if (b > 0) pos = pos * s.vars[j].pow(static_cast<unsigned>(b));
        else if (b < 0) neg = neg * s.vars[j].pow(static_cast<unsigned>(-b));
    }
    return pos + neg;
}

Seed mutate_seed(const Seed& s, int k) {
    check_direction(k, s.matrix.n());
    LaurentPoly num = exchange_numerator(s, k);
    auto q = num.divide_exact(s.vars[k]);
    if (!q) throw NonLaurentDivision("exchange binomial is not divisible by x_" + std::to_string(k + 1));
    Seed r{s.vars, mutate_matrix(s.matrix, k)};
    r.vars[k] = std::move(*q);
    return r;
}

YSeedNumeric mutate_y(const YSeedNumeric& y, int k) {
    check_direction(k, y.matrix.n());
    const mpq_class& yk = y.y[k];
    if (yk == 0) throw DivisionByZero("y_k = 0");
    mpq_class onep = 1 + yk;
    if (onep == 0) throw DivisionByZero("1 + y_k = 0 (non-generic initialization)");
    YSeedNumeric r{y.y, mutate_matrix(y.matrix, k)};
    r.y[k] = 1 / yk;
    for (int i = 0; i < y.matrix.n(); ++i) {
        if (i == k) continue;
        int b = y.matrix(i, k);
        mpq_class v = y.y[i];
        for (int t = 0; t < std::max(b, 0); ++t) v *= yk;
        if (b > 0)
            for (int t = 0; t < b; ++t) v /= onep;
        else
            for (int t = 0; t < -b; ++t) v *= onep;
        r.y[i] = v;
    }
    return r;
}

GenericDraws::GenericDraws(std::uint64_t seed) : state_(seed) {}

long GenericDraws::next() {
    std::mt19937_64 g(state_);
    state_ = g();
    return 2 + static_cast<long>(state_ % 96);
}

std::uint64_t GenericDraws::next_mod() {
    std::mt19937_64 g(state_);
    state_ = g();
    return 1 + state_ % (modp::P - 1);
}

YSeedNumeric generic_y_seed(const ExchangeMatrix& b, std::uint64_t rng_seed) {
    GenericDraws rng(rng_seed);
    for (int attempt = 0; attempt < 16; ++attempt) {
        YSeedNumeric y{{}, b};
        for (int i = 0; i < b.n(); ++i) y.y.emplace_back(rng.next());
        bool ok = true;
        for (int k = 0; k < b.n() && ok; ++k) ok = (1 + y.y[k]) != 0;
        if (ok) return y;
    }
    throw DivisionByZero("no generic y-values after 16 draws");
}

std::string ClusterKey::str() const {
    std::string s;
    for (const auto& p : parts) {
        if (!s.empty()) s += '|';
        s += p;
    }
    return s;
}

ClusterKey cluster_key(const Seed& s) {
    ClusterKey k;
    for (int i = 0; i < s.matrix.n(); ++i) k.parts.push_back(s.vars[i].serialize());
    std::sort(k.parts.begin(), k.parts.end());
    return k;
}

// --------------------------------------------------------- bipartite/Coxeter

std::optional<BipartiteSplit> bipartite_split(const ExchangeMatrix& b) {
    const int n = b.n();
    std::vector<int> color(n, 0);  // +1 plus, -1 minus
    for (int s = 0; s < n; ++s) {
        if (color[s]) continue;
        // find a forced color for this component, else plus for the smallest
        std::vector<int> comp{s};
        std::vector<bool> in(n, false);
        in[s] = true;
        for (std::size_t h = 0; h < comp.size(); ++h)
            for (int j = 0; j < n; ++j)
                if (!in[j] && (b(comp[h], j) != 0 || b(j, comp[h]) != 0)) {
                    in[j] = true;
                    comp.push_back(j);
                }
        for (int v : comp) {
            bool out = false, inc = false;
            for (int j = 0; j < n; ++j) {
                if (b(v, j) > 0) out = true;
                if (b(v, j) < 0) inc = true;
            }
            if (out && inc) return std::nullopt;
            color[v] = out ? 1 : (inc ? -1 : 0);
        }
        for (int v : comp)
            if (color[v] == 0) color[v] = 1;  // isolated vertex
        for (int v : comp)
            for (int j = 0; j < n; ++j)
                if (b(v, j) > 0 && !(color[v] == 1 && color[j] == -1)) return std::nullopt;
    }
    BipartiteSplit sp;
    for (int i = 0; i < n; ++i) (color[i] > 0 ? sp.plus : sp.minus).push_back(i);
    return sp;
}

std::optional<BipartiteSplit> bipartite_split(const Quiver& q) { return bipartite_split(q.exchange_matrix()); }

static BipartiteSplit require_split(const ExchangeMatrix& b) {
    auto sp = bipartite_split(b);
    if (!sp) throw NotBipartite("exchange matrix is not bipartite");
    return *sp;
}

Seed coxeter_mutation(const Seed& s, const BipartiteSplit& sp) {
    Seed r = s;
    for (int k : sp.plus) r = mutate_seed(r, k);
    for (int k : sp.minus) r = mutate_seed(r, k);
    return r;
}

YSeedNumeric coxeter_mutation(const YSeedNumeric& y, const BipartiteSplit& sp) {
    YSeedNumeric r = y;
    for (int k : sp.plus) r = mutate_y(r, k);
    for (int k : sp.minus) r = mutate_y(r, k);
    return r;
}

Seed coxeter_mutation(const Seed& s) { return coxeter_mutation(s, require_split(s.matrix)); }

YSeedNumeric coxeter_mutation(const YSeedNumeric& y) { return coxeter_mutation(y, require_split(y.matrix)); }

Quiver coxeter_mutation(const Quiver& q) {
    auto sp = require_split(q.exchange_matrix());
    Quiver r = q;
    for (int k : sp.plus) r = mutate_quiver(r, k);
    for (int k : sp.minus) r = mutate_quiver(r, k);
    return r;
}

CoxeterOrbit coxeter_orbit(const Seed& s, int cap) {
    if (cap < 1) throw InvalidArgument("cap must be at least 1");
    auto sp = require_split(s.matrix);
    CoxeterOrbit out;
    const ClusterKey k0 = cluster_key(s);
    Seed cur = s;
    out.seeds.push_back(cur);
    while (static_cast<int>(out.seeds.size()) < cap) {
        cur = coxeter_mutation(cur, sp);
        if (cluster_key(cur) == k0) {
            out.periodic = true;
            out.period = static_cast<int>(out.seeds.size());
            return out;
        }
        out.seeds.push_back(cur);
    }
    // one more step decides periodicity at exactly cap
    cur = coxeter_mutation(cur, sp);
    if (cluster_key(cur) == k0) {
        out.periodic = true;
        out.period = cap;
    }
    return out;
}

namespace {

struct Fp {
    std::uint64_t a = 0, b = 0;
    bool operator==(const Fp&) const = default;
};

struct FpHash {
    std::size_t operator()(const Fp& f) const { return f.a * 0x9e3779b97f4a7c15ULL ^ f.b; }
};

// Values of the exchange relation at two evaluation points.
Fp exchange_value(const std::vector<Fp>& vals, const ExchangeMatrix& b, int k) {
    Fp pos{1, 1}, neg{1, 1};
    for (int j = 0; j < b.m(); ++j) {
        int e = b(k, j);
        if (e == 0) continue;
        Fp& t = e > 0 ? pos : neg;
        std::uint64_t ue = static_cast<std::uint64_t>(std::abs(e));
        t.a = modp::mul(t.a, modp::pow(vals[j].a, ue));
        t.b = modp::mul(t.b, modp::pow(vals[j].b, ue));
    }
    return {modp::mul(modp::add(pos.a, neg.a), modp::inv(vals[k].a)),
            modp::mul(modp::add(pos.b, neg.b), modp::inv(vals[k].b))};
}

struct VecHash {
    std::size_t operator()(const std::vector<int>& v) const {
        std::size_t h = 1469598103934665603ULL;
        for (int x : v) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ULL;
        return h;
    }
};

}  // namespace

ModularOrbit coxeter_orbit_mod(const ExchangeMatrix& b, int cap, std::uint64_t rng_seed) {
    if (cap < 1) throw InvalidArgument("cap must be at least 1");
    auto sp = require_split(b);
    GenericDraws rng(rng_seed);
    std::vector<Fp> vals(b.m());
    for (auto& v : vals) v = {rng.next_mod(), rng.next_mod()};
    auto sorted_cluster = [&](const std::vector<Fp>& vs) {
        std::vector<std::uint64_t> out;
        for (int i = 0; i < b.n(); ++i) out.push_back(vs[i].a);
        std::sort(out.begin(), out.end());
        return out;
    };
    ModularOrbit out;
    ExchangeMatrix cur = b;
    out.cluster_values.push_back(sorted_cluster(vals));
    for (int r = 1; r <= cap; ++r) {
        for (const auto* part : {&sp.plus, &sp.minus})
            for (int k : *part) {
                vals[k] = exchange_value(vals, cur, k);
                cur = mutate_matrix(cur, k);
            }
        auto cv = sorted_cluster(vals);
        if (cv == out.cluster_values[0]) {
            out.periodic = true;
            out.period = r;
            return out;
        }
        if (r < cap) out.cluster_values.push_back(cv);
    }
    return out;
}

// ---------------------------------------------------------------- enumeration

std::size_t ExchangeGraph::num_cluster_variables() const {
    return static_cast<std::size_t>(std::count(frozen_variable.begin(), frozen_variable.end(), false));
}

Seed ExchangeGraph::seed(std::size_t v) const {
    Seed s;
    s.matrix = vertex_matrix.at(v);
    for (int id : vertex_vars.at(v)) s.vars.push_back(variables[id]);
    return s;
}

ClusterKey ExchangeGraph::key(std::size_t v) const { return cluster_key(seed(v)); }

std::vector<std::vector<int>> ExchangeGraph::neighbours() const {
    std::vector<std::vector<int>> nb(num_vertices());
    for (auto& [u, v, k] : edges) {
        nb[u].push_back(v);
        nb[v].push_back(u);
    }
    return nb;
}

bool ExchangeGraph::is_regular() const {
    for (auto& nb : neighbours()) {
        std::set<int> s(nb.begin(), nb.end());
        if (static_cast<int>(nb.size()) != n || static_cast<int>(s.size()) != n) return false;
    }
    return true;
}

bool ExchangeGraph::is_connected() const {
    if (num_vertices() == 0) return true;
    auto nb = neighbours();
    std::vector<bool> seen(num_vertices(), false);
    std::vector<int> st{0};
    seen[0] = true;
    std::size_t count = 1;
    while (!st.empty()) {
        int u = st.back();
        st.pop_back();
        for (int w : nb[u])
            if (!seen[w]) {
                seen[w] = true;
                ++count;
                st.push_back(w);
            }
    }
    return count == num_vertices();
}

ExchangeGraph enumerate_exchange_graph(const Seed& s0, const EnumOptions& opt) {
    const int n = s0.matrix.n(), m = s0.matrix.m();
    if (static_cast<int>(s0.vars.size()) != m) throw InvalidArgument("seed variable count mismatch");
    ExchangeGraph g;
    g.n = n;
    g.m = m;

    GenericDraws rng(opt.rng_seed);
    const int nv = m ? s0.vars[0].nvars() : 0;
    std::vector<std::uint64_t> pa(nv), pb(nv);
    for (int i = 0; i < nv; ++i) {
        pa[i] = rng.next_mod();
        pb[i] = rng.next_mod();
    }
    std::unordered_map<Fp, int, FpHash> intern;
    std::vector<Fp> fps;
    auto add_var = [&](LaurentPoly p, Fp f, bool frozen) {
        int id = static_cast<int>(g.variables.size());
        g.variables.push_back(std::move(p));
        g.frozen_variable.push_back(frozen);
        fps.push_back(f);
        intern.emplace(f, id);
        return id;
    };

    std::vector<int> start(m);
    for (int i = 0; i < m; ++i) {
        Fp f{s0.vars[i].eval_mod(pa), s0.vars[i].eval_mod(pb)};
        auto it = intern.find(f);
        start[i] = it != intern.end() ? it->second : add_var(s0.vars[i], f, i >= n);
    }

    std::unordered_map<std::vector<int>, int, VecHash> index;
    auto key_of = [&](const std::vector<int>& vars) {
        std::vector<int> k(vars.begin(), vars.begin() + n);
        std::sort(k.begin(), k.end());
        return k;
    };
    index.emplace(key_of(start), 0);
    g.vertex_vars.push_back(start);
    g.vertex_matrix.push_back(s0.matrix);
    std::set<std::pair<int, int>> seen_edges;

    std::vector<Fp> vals(m);
    for (std::size_t u = 0; u < g.vertex_vars.size(); ++u) {
        for (int k = 0; k < n; ++k) {
            const std::vector<int> uvars = g.vertex_vars[u];
            const ExchangeMatrix ub = g.vertex_matrix[u];
            for (int j = 0; j < m; ++j) vals[j] = fps[uvars[j]];
            Fp f = exchange_value(vals, ub, k);
            auto it = intern.find(f);
            int id;
            if (it == intern.end()) {
                Seed s;
                s.matrix = ub;
                for (int v : uvars) s.vars.push_back(g.variables[v]);
                LaurentPoly num = exchange_numerator(s, k);
                auto q = num.divide_exact(s.vars[k]);
                ++g.exact_divisions;
                if (!q) throw NonLaurentDivision("exchange binomial not divisible along enumeration");
                if (q->eval_mod(pa) != f.a || q->eval_mod(pb) != f.b)
                    throw Error("FingerprintMismatch", "modular value disagrees with exact variable");
                id = add_var(std::move(*q), f, false);
            } else {
                id = it->second;
                if (opt.verify_all_paths) {
                    Seed s;
                    s.matrix = ub;
                    for (int v : uvars) s.vars.push_back(g.variables[v]);
                    if (g.variables[id] * s.vars[k] != exchange_numerator(s, k))
                        throw NonLaurentDivision("exchange relation fails for an interned variable");
                    ++g.verified_relations;
                }
            }
            std::vector<int> nvars = uvars;
            nvars[k] = id;
            auto key = key_of(nvars);
            auto vit = index.find(key);
            int v;
            if (vit == index.end()) {
                if (static_cast<long>(g.vertex_vars.size()) >= opt.cap)
                    throw CapExceeded("exchange graph exceeds cap " + std::to_string(opt.cap));
                v = static_cast<int>(g.vertex_vars.size());
                index.emplace(std::move(key), v);
                g.vertex_vars.push_back(nvars);
                g.vertex_matrix.push_back(mutate_matrix(ub, k));
            } else {
                v = vit->second;
            }
            int a = static_cast<int>(u);
            if (a != v && seen_edges.emplace(std::min(a, v), std::max(a, v)).second)
                g.edges.emplace_back(std::min(a, v), std::max(a, v), k);
        }
    }
    return g;
}

RootVector denominator_vector(const LaurentPoly& v, int n) {
    RootVector d(n);
    for (int i = 0; i < n; ++i) d[i] = -v.min_exponent(i);
    return d;
}

// ------------------------------------------------------------ standard seeds

ExchangeMatrix dynkin_matrix(const DynkinType& t) {
    IntMatrix c = cartan_matrix(t);
    const int n = t.rank;
    std::vector<int> eps(n, 0);
    eps[0] = 1;
    std::vector<int> st{0};
    while (!st.empty()) {
        int i = st.back();
        st.pop_back();
        for (int j = 0; j < n; ++j)
            if (j != i && c[i][j] != 0 && eps[j] == 0) {
                eps[j] = -eps[i];
                st.push_back(j);
            }
    }
    ExchangeMatrix b(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) b.at(i, j) = eps[i] > 0 ? -c[i][j] : c[i][j];
    return b;
}

ExchangeMatrix linear_matrix(int n) {
    if (n < 1) throw InvalidArgument("linear quiver needs n >= 1");
    ExchangeMatrix b(n, n);
    for (int i = 0; i + 1 < n; ++i) {
        int s = i % 2 == 0 ? 1 : -1;  // 1 -> 2 <- 3 -> 4 ...
        b.at(i, i + 1) = s;
        b.at(i + 1, i) = -s;
    }
    return b;
}

ExchangeMatrix tripod_matrix(int a, int b, int c) {
    if (a < 1 || b < 1 || c < 1) throw InvalidArgument("tripod legs must be >= 1");
    const int n = a + b + c - 2;
    ExchangeMatrix m(n, n);
    auto arrow = [&](int i, int j) {
        m.at(i, j) = 1;
        m.at(j, i) = -1;
    };
    int next = 1;
    for (int len : {a, b, c}) {
        int prev = 0;  // center, a source
        for (int t = 1; t < len; ++t) {
            int v = next++;
            // parity along the leg alternates starting with a sink
            if (t % 2 == 1) arrow(prev, v);
            else arrow(v, prev);
            prev = v;
        }
    }
    return m;
}

// ------------------------------------------------------------ facets

FacetTable facet_orbit_table(const DynkinType& t) {
    const int h = coxeter_number(t);
    if (h % 2 != 0) throw OddCoxeterNumber("Coxeter number " + std::to_string(h) + " is odd");
    const int n = t.rank;
    ExchangeMatrix b = dynkin_matrix(t);
    auto sp = require_split(b);
    // Facet images are read off slot i along the belt mu_+ mu_- (the minus
    // part mutated first), which is the seed-level form of the tropical
    // action tau_- tau_+ on almost positive roots.
    BipartiteSplit rev{sp.minus, sp.plus};
    FacetTable out;
    out.e = h / 2;
    Seed cur = initial_seed(b);
    for (int r = 0; r <= out.e; ++r) {
        std::vector<RootVector> row;
        for (int i = 0; i < n; ++i) row.push_back(denominator_vector(cur.vars[i], n));
        out.rows.push_back(row);
        cur = coxeter_mutation(cur, rev);
    }
    return out;
}

// ------------------------------------------------------------ finite type

bool is_acyclic(const ExchangeMatrix& b) {
    const int n = b.n();
    std::vector<int> indeg(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (b(i, j) > 0) ++indeg[j];
    std::vector<int> st;
    for (int i = 0; i < n; ++i)
        if (!indeg[i]) st.push_back(i);
    int seen = 0;
    while (!st.empty()) {
        int i = st.back();
        st.pop_back();
        ++seen;
        for (int j = 0; j < n; ++j)
            if (b(i, j) > 0 && --indeg[j] == 0) st.push_back(j);
    }
    return seen == n;
}

std::optional<std::vector<DynkinType>> detect_finite_type(const ExchangeMatrix& b0, long bound) {
    std::set<std::vector<int>> seen{b0.entries()};
    std::deque<ExchangeMatrix> q{b0};
    long steps = 0;
    while (!q.empty() && steps++ < bound) {
        ExchangeMatrix b = q.front();
        q.pop_front();
        if (is_acyclic(b)) return classify_finite_cartan(cartan_counterpart(b));
        for (int k = 0; k < b.n(); ++k) {
            ExchangeMatrix c = mutate_matrix(b, k);
            if (seen.insert(c.entries()).second) q.push_back(c);
        }
    }
    return std::nullopt;
}

}  // namespace weave
