#include "weave/rootdata.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>

#include <gmpxx.h>

#include "weave/errors.hpp"

namespace weave {

char family_letter(Family f) { return "ABCDEFG"[static_cast<int>(f)]; }

std::string to_string(const DynkinType& t) {
    return std::string(1, family_letter(t.family)) + std::to_string(t.rank);
}

DynkinType parse_dynkin(const std::string& s) {
    if (s.size() < 2) throw InvalidArgument("bad Dynkin type '" + s + "'");
    char c = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
    if (c < 'A' || c > 'G') throw InvalidArgument("bad Dynkin family in '" + s + "'");
    int rank = 0;
    for (size_t i = 1; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            throw InvalidArgument("bad Dynkin rank in '" + s + "'");
        rank = rank * 10 + (s[i] - '0');
        if (rank > 1000) throw InvalidArgument("rank too large in '" + s + "'");
    }
    DynkinType t{static_cast<Family>(c - 'A'), rank};
    validate(t);
    return t;
}

void validate(const DynkinType& t) {
    const int n = t.rank;
    bool ok = n >= 1;
    switch (t.family) {
        case Family::A: break;
        case Family::B: ok = ok && n >= 2; break;
        case Family::C: ok = ok && n >= 3; break;
        case Family::D: ok = ok && n >= 4; break;
        case Family::E: ok = ok && n >= 6 && n <= 8; break;
        case Family::F: ok = ok && n == 4; break;
        case Family::G: ok = ok && n == 2; break;
    }
    if (!ok) throw InvalidArgument("invalid rank " + std::to_string(n) + " for family " +
                                   family_letter(t.family));
}

IntMatrix cartan_matrix(const DynkinType& t) {
    validate(t);
    const int n = t.rank;
    IntMatrix c(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) c[i][i] = 2;
    auto link = [&](int i, int j) {  // 1-based, simple edge
        c[i - 1][j - 1] = -1;
        c[j - 1][i - 1] = -1;
    };
    switch (t.family) {
        case Family::A:
            for (int i = 1; i < n; ++i) link(i, i + 1);
            break;
        case Family::B:
            for (int i = 1; i < n; ++i) link(i, i + 1);
            c[n - 2][n - 1] = -2;  // alpha_n short
            break;
        case Family::C:
            for (int i = 1; i < n; ++i) link(i, i + 1);
            c[n - 1][n - 2] = -2;  // alpha_n long
            break;
        case Family::D:
            for (int i = 1; i < n - 1; ++i) link(i, i + 1);
            link(n - 2, n);
            break;
        case Family::E:
            link(1, 3);
            link(3, 4);
            link(2, 4);
            for (int i = 4; i < n; ++i) link(i, i + 1);
            break;
        case Family::F:
            link(1, 2);
            link(2, 3);
            link(3, 4);
            c[1][2] = -2;
            break;
        case Family::G:
            link(1, 2);
            c[1][0] = -3;
            break;
    }
    return c;
}

int coxeter_number(const DynkinType& t) {
    validate(t);
    const int n = t.rank;
    switch (t.family) {
        case Family::A: return n + 1;
        case Family::B:
        case Family::C: return 2 * n;
        case Family::D: return 2 * n - 2;
        case Family::E: return n == 6 ? 12 : (n == 7 ? 18 : 30);
        case Family::F: return 12;
        case Family::G: return 6;
    }
    return 0;
}

RootVector simple_reflection(const IntMatrix& cartan, const RootVector& beta, int i) {
    long pairing = 0;
    for (size_t j = 0; j < beta.size(); ++j) pairing += static_cast<long>(beta[j]) * cartan[j][i];
    RootVector out = beta;
    out[i] -= static_cast<int>(pairing);
    return out;
}

static bool root_less(const RootVector& a, const RootVector& b) {
    long ha = std::accumulate(a.begin(), a.end(), 0L);
    long hb = std::accumulate(b.begin(), b.end(), 0L);
    if (ha != hb) return ha < hb;
    return a < b;
}

std::vector<RootVector> positive_roots(const DynkinType& t) {
    const IntMatrix c = cartan_matrix(t);
    const int n = t.rank;
    const long cap = 10L * n * coxeter_number(t);
    std::set<RootVector> seen;
    std::vector<RootVector> queue;
    for (int i = 0; i < n; ++i) {
        RootVector e(n, 0);
        e[i] = 1;
        seen.insert(e);
        queue.push_back(e);
    }
    long steps = 0;
    for (size_t head = 0; head < queue.size(); ++head) {
        if (++steps > cap) throw Error("RootClosureCap", "orbit closure did not terminate");
        for (int i = 0; i < n; ++i) {
            RootVector r = simple_reflection(c, queue[head], i);
            bool positive = std::all_of(r.begin(), r.end(), [](int x) { return x >= 0; });
            if (positive && seen.insert(r).second) queue.push_back(r);
        }
    }
    std::vector<RootVector> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end(), root_less);
    return out;
}

std::vector<RootVector> almost_positive_roots(const DynkinType& t) {
    std::vector<RootVector> out;
    for (int i = 0; i < t.rank; ++i) {
        RootVector e(t.rank, 0);
        e[i] = -1;
        out.push_back(e);
    }
    for (auto& r : positive_roots(t)) out.push_back(r);
    return out;
}

static void check_generalized_cartan(const IntMatrix& c) {
    const size_t n = c.size();
    for (size_t i = 0; i < n; ++i) {
        if (c[i].size() != n) throw InvalidArgument("Cartan matrix is not square");
        if (c[i][i] != 2) throw InvalidArgument("diagonal entry is not 2");
        for (size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            if (c[i][j] > 0) throw InvalidArgument("positive off-diagonal entry");
            if ((c[i][j] == 0) != (c[j][i] == 0))
                throw InvalidArgument("zero pattern is not symmetric");
        }
    }
}

std::optional<std::vector<long>> symmetrizer(const IntMatrix& c) {
    const int n = static_cast<int>(c.size());
    std::vector<mpq_class> d(n, 0);
    std::vector<bool> done(n, false);
    for (int s = 0; s < n; ++s) {
        if (done[s]) continue;
        std::vector<int> comp{s};
        d[s] = 1;
        done[s] = true;
        for (size_t h = 0; h < comp.size(); ++h) {
            int i = comp[h];
            for (int j = 0; j < n; ++j) {
                if (i == j || c[i][j] == 0) continue;
                // d_i c_ij = d_j c_ji
                mpq_class dj = d[i] * c[i][j] / c[j][i];
                if (!done[j]) {
                    d[j] = dj;
                    done[j] = true;
                    comp.push_back(j);
                } else if (d[j] != dj) {
                    return std::nullopt;
                }
            }
        }
        mpz_class l = 1;
        for (int i : comp) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d[i].get_den_mpz_t());
        mpz_class g = 0;
        for (int i : comp) {
            d[i] *= l;
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d[i].get_num_mpz_t());
        }
        for (int i : comp) d[i] /= g;
    }
    std::vector<long> out(n);
    for (int i = 0; i < n; ++i) out[i] = d[i].get_num().get_si();
    return out;
}

static bool positive_definite(std::vector<std::vector<mpq_class>> a) {
    // Leading principal minors via exact elimination without pivoting.
    const size_t n = a.size();
    for (size_t k = 0; k < n; ++k) {
        if (a[k][k] <= 0) return false;
        for (size_t i = k + 1; i < n; ++i) {
            mpq_class f = a[i][k] / a[k][k];
            for (size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
        }
    }
    return true;
}

static DynkinType identify_component(const IntMatrix& c, const std::vector<int>& verts) {
    const int n = static_cast<int>(verts.size());
    if (n == 1) return {Family::A, 1};
    std::vector<std::vector<int>> adj(n);
    int max_mult = 1;
    int mult_edges = 0;
    int ma = -1, mb = -1;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            int p = c[verts[a]][verts[b]] * c[verts[b]][verts[a]];
            if (p == 0) continue;
            adj[a].push_back(b);
            adj[b].push_back(a);
            if (p > 1) {
                ++mult_edges;
                max_mult = std::max(max_mult, p);
                ma = a;
                mb = b;
            }
        }
    if (max_mult == 3) return {Family::G, 2};
    std::vector<int> leaves, branch;
    for (int a = 0; a < n; ++a) {
        if (adj[a].size() == 1) leaves.push_back(a);
        if (adj[a].size() >= 3) branch.push_back(a);
    }
    if (max_mult == 2) {
        if (n == 2) return {Family::B, 2};
        bool ma_leaf = adj[ma].size() == 1, mb_leaf = adj[mb].size() == 1;
        if (!ma_leaf && !mb_leaf) return {Family::F, 4};
        int end = ma_leaf ? ma : mb;
        int other = ma_leaf ? mb : ma;
        // the row with -2 belongs to the long neighbour of a short end
        bool end_short = c[verts[other]][verts[end]] == -2;
        return {end_short ? Family::B : Family::C, n};
    }
    if (branch.empty()) return {Family::A, n};
    int center = branch.front();
    std::vector<int> arms;
    for (int start : adj[center]) {
        int len = 1, prev = center, cur = start;
        while (adj[cur].size() == 2) {
            int nxt = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
            prev = cur;
            cur = nxt;
            ++len;
        }
        arms.push_back(len);
    }
    std::sort(arms.begin(), arms.end());
    if (arms[0] == 1 && arms[1] == 1) return {Family::D, n};
    if (arms[0] == 1 && arms[1] == 2 && arms[2] <= 4) return {Family::E, n};
    throw Error("UnidentifiedComponent", "positive definite component of unknown shape");
}

std::optional<std::vector<DynkinType>> classify_finite_cartan(const IntMatrix& c) {
    check_generalized_cartan(c);
    auto d = symmetrizer(c);
    if (!d) throw InvalidArgument("Cartan matrix is not symmetrizable");
    const int n = static_cast<int>(c.size());
    std::vector<std::vector<mpq_class>> s(n, std::vector<mpq_class>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) s[i][j] = mpq_class((*d)[i]) * c[i][j];
    if (!positive_definite(s)) return std::nullopt;

    std::vector<int> comp(n, -1);
    std::vector<DynkinType> out;
    for (int v = 0; v < n; ++v) {
        if (comp[v] >= 0) continue;
        std::vector<int> verts{v};
        comp[v] = v;
        for (size_t h = 0; h < verts.size(); ++h)
            for (int j = 0; j < n; ++j)
                if (j != verts[h] && c[verts[h]][j] != 0 && comp[j] < 0) {
                    comp[j] = v;
                    verts.push_back(j);
                }
        std::sort(verts.begin(), verts.end());
        out.push_back(identify_component(c, verts));
    }
    return out;
}

}  // namespace weave
