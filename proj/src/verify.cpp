#include "weave/verify.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "weave/clusterkit.hpp"
#include "weave/errors.hpp"
#include "weave/flagkit.hpp"
#include "weave/foldkit.hpp"
#include "weave/ngraph.hpp"
#include "weave/rootdata.hpp"

namespace weave {

namespace {

struct Ctx {
    const VerifyOptions& opt;
    std::vector<std::string> failures;
    std::vector<std::string> notes;

    void expect(bool cond, const std::string& what) {
        if (!cond) failures.push_back(what);
    }
    template <class T>
    void expect_eq(const T& got, const T& want, const std::string& what) {
        if (!(got == want)) {
            std::ostringstream os;
            os << what << ": got " << got << ", expected " << want;
            failures.push_back(os.str());
        }
    }
    // Runs f and records any library error as a failure.
    void guard(const std::string& what, const std::function<void()>& f) {
        try {
            f();
        } catch (const std::exception& e) {
            failures.push_back(what + ": " + e.what());
        }
    }
};

std::string join(const std::vector<std::string>& v, const char* sep = ", ") {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i];
    return s;
}

std::string root_str(const RootVector& r) {
    std::string s = "(";
    for (std::size_t i = 0; i < r.size(); ++i) s += (i ? "," : "") + std::to_string(r[i]);
    return s + ")";
}

// ---------------------------------------------------------------- tables

void seed_counts(Ctx& c) {
    const std::vector<std::pair<const char*, long>> simply_laced = {
        {"A1", 2}, {"A2", 5}, {"A3", 14}, {"A4", 42}, {"D4", 50}, {"E6", 833}};
    for (auto [name, want] : simply_laced) {
        c.guard(name, [&] {
            auto g = enumerate_exchange_graph(initial_seed(dynkin_matrix(parse_dynkin(name))));
            c.expect_eq<long>(static_cast<long>(g.num_vertices()), want, std::string(name) + " seeds");
        });
    }
    const std::vector<std::pair<const char*, long>> folded = {
        {"B2", 6}, {"B3", 20}, {"C3", 20}, {"G2", 8}, {"F4", 105}};
    for (auto [name, want] : folded) {
        c.guard(name, [&] {
            auto sf = standard_folding(parse_dynkin(name));
            auto g = enumerate_folded_pattern(initial_seed(sf.matrix), sf.action);
            c.expect_eq<long>(static_cast<long>(g.num_vertices()), want, std::string(name) + " folded seeds");
        });
    }
    if (!c.opt.long_tests) {
        c.notes.push_back("E7/E8 skipped (--long)");
        return;
    }
    c.guard("E7", [&] {
        auto g = enumerate_exchange_graph(initial_seed(dynkin_matrix(parse_dynkin("E7"))));
        c.expect_eq<long>(static_cast<long>(g.num_vertices()), 4160, "E7 seeds");
        c.expect_eq<long>(static_cast<long>(g.num_cluster_variables()), 70, "E7 variables");
    });
    c.guard("E8", [&] {
        EnumOptions o;
        o.verify_all_paths = false;
        auto g = enumerate_exchange_graph(initial_seed(dynkin_matrix(parse_dynkin("E8"))), o);
        c.expect_eq<long>(static_cast<long>(g.num_vertices()), 25080, "E8 seeds");
        c.expect_eq<long>(static_cast<long>(g.num_cluster_variables()), 128, "E8 variables");
    });
}

void variable_counts(Ctx& c) {
    std::vector<std::pair<std::string, long>> cases;
    for (int n = 1; n <= 5; ++n) cases.emplace_back("A" + std::to_string(n), n * (n + 3) / 2);
    cases.emplace_back("D4", 16);
    cases.emplace_back("E6", 42);
    for (const auto& [name, want] : cases) {
        c.guard(name, [&] {
            auto g = enumerate_exchange_graph(initial_seed(dynkin_matrix(parse_dynkin(name))));
            c.expect_eq<long>(static_cast<long>(g.num_cluster_variables()), want, name + " variables");
        });
    }
}

void a2_example(Ctx& c) {
    const int m = 2;
    auto x = [&](int i) { return LaurentPoly::variable(m, i); };
    auto mono = [&](std::vector<int> e) { return LaurentPoly::monomial(m, e); };
    auto one = LaurentPoly::constant(m, 1);
    // expected variable -> root of the denominator-vector bijection
    std::vector<std::pair<LaurentPoly, RootVector>> want = {
        {x(0), {-1, 0}},
        {x(1), {0, -1}},
        {mono({-1, 0}) * (one + x(1)), {1, 0}},
        {mono({0, -1}) * (one + x(0)), {0, 1}},
        {mono({-1, -1}) * (one + x(0) + x(1)), {1, 1}},
    };
    auto g = enumerate_exchange_graph(initial_seed(dynkin_matrix(parse_dynkin("A2"))));
    c.expect_eq<long>(static_cast<long>(g.num_cluster_variables()), 5, "A2 variables");
    for (const auto& [p, root] : want) {
        bool found = false;
        for (const auto& v : g.variables) found = found || v == p;
        c.expect(found, "missing variable " + p.pretty());
        auto d = denominator_vector(p, m);
        c.expect(d == root, "denominator of " + p.pretty() + " is " + root_str(d) + ", expected " + root_str(root));
    }
    std::set<RootVector> got, phi;
    for (const auto& v : g.variables) got.insert(denominator_vector(v, m));
    for (const auto& r : almost_positive_roots(parse_dynkin("A2"))) phi.insert(r);
    c.expect(got == phi, "denominator vectors do not realize the almost positive roots");
}

void facet_table(Ctx& c) {
    const std::vector<std::vector<RootVector>> want = {
        {{-1, 0, 0}, {0, -1, 0}, {0, 0, -1}},
        {{1, 1, 0}, {0, 1, 0}, {0, 1, 1}},
        {{0, 0, 1}, {1, 1, 1}, {1, 0, 0}},
    };
    auto t = facet_orbit_table(parse_dynkin("A3"));
    c.expect_eq<std::size_t>(t.rows.size(), want.size(), "A3 table rows");
    for (std::size_t r = 0; r < want.size() && r < t.rows.size(); ++r)
        for (std::size_t i = 0; i < 3; ++i)
            c.expect(t.rows[r][i] == want[r][i], "entry (r=" + std::to_string(r) + ", i=" + std::to_string(i + 1) +
                                                     ") is " + root_str(t.rows[r][i]) + ", expected " +
                                                     root_str(want[r][i]));
}

// --------------------------------------------------------------- coxeter

void coxeter_periods(Ctx& c) {
    const std::vector<std::pair<const char*, int>> pinned = {
        {"A3", 3}, {"D4", 4}, {"A5", 4}, {"D5", 5}, {"E6", 7}, {"A2", 5}, {"A4", 7}};
    for (auto [name, want] : pinned) {
        c.guard(name, [&] {
            auto orb = coxeter_orbit(initial_seed(dynkin_matrix(parse_dynkin(name))), 64);
            c.expect(orb.periodic, std::string(name) + " orbit not periodic");
            c.expect_eq(orb.period, want, std::string(name) + " period");
        });
    }
    // every simply-laced type of rank <= 6 against the formula
    for (const char* name : {"A1", "A6", "D6"}) {
        c.guard(name, [&] {
            auto t = parse_dynkin(name);
            int h = coxeter_number(t);
            int want = h % 2 == 0 ? (h + 2) / 2 : h + 2;
            auto orb = coxeter_orbit(initial_seed(dynkin_matrix(t)), 64);
            c.expect_eq(orb.period, want, std::string(name) + " period");
        });
    }
}

void infinite_type(Ctx& c) {
    const int steps = 6;  // r = 0..5
    c.guard("(3,3,3)", [&] {
        Seed s = initial_seed(tripod_matrix(3, 3, 3));
        auto split = *bipartite_split(s.matrix);
        std::set<ClusterKey> keys;
        for (int r = 0; r < steps; ++r) {
            keys.insert(cluster_key(s));
            if (r + 1 < steps) s = coxeter_mutation(s, split);
        }
        c.expect_eq<std::size_t>(keys.size(), steps, "(3,3,3) distinct exact keys");
    });
    c.guard("(2,3,6)", [&] {
        if (c.opt.long_tests) {
            Seed s = initial_seed(tripod_matrix(2, 3, 6));
            auto split = *bipartite_split(s.matrix);
            std::set<ClusterKey> keys;
            for (int r = 0; r < steps; ++r) {
                keys.insert(cluster_key(s));
                if (r + 1 < steps) s = coxeter_mutation(s, split);
            }
            c.expect_eq<std::size_t>(keys.size(), steps, "(2,3,6) distinct exact keys");
        } else {
            auto orb = coxeter_orbit_mod(tripod_matrix(2, 3, 6), steps, c.opt.seed);
            std::set<std::vector<std::uint64_t>> vals(orb.cluster_values.begin(),
                                                      orb.cluster_values.begin() +
                                                          std::min<std::size_t>(steps, orb.cluster_values.size()));
            c.expect_eq<std::size_t>(vals.size(), steps, "(2,3,6) distinct modular clusters");
            c.notes.push_back("(2,3,6) modular certificate; exact keys under --long");
        }
    });
}

// --------------------------------------------------------------- folding

void folding(Ctx& c) {
    c.guard("D4 -> G2", [&] {
        auto sf = standard_folding(parse_dynkin("G2"));
        auto f = fold_matrix(sf.matrix, sf.action);
        c.expect(f.entries == IntMatrix{{0, 1}, {-3, 0}}, "D4 star folds to the wrong matrix");
    });
    for (const char* name : {"B3", "C3", "F4", "G2"}) {
        c.guard(name, [&] {
            auto sf = standard_folding(parse_dynkin(name));
            c.expect(check_globally_foldable(sf.matrix, sf.action), std::string(name) + " not globally foldable");
            auto g = enumerate_folded_pattern(initial_seed(sf.matrix), sf.action);
            // one check per (state, orbit); a failure throws
            c.expect(g.commutation_checks == static_cast<long>(g.num_vertices()) * sf.folded.rank,
                     std::string(name) + " commutation not checked at every state");
        });
    }
}

// ---------------------------------------------------------------- ngraph

void ngraph_quivers(Ctx& c) {
    for (int a = 1; a <= 4; ++a)
        for (int b = 1; b <= 4; ++b)
            for (int d = 1; d <= 4; ++d) {
                std::string name = "G(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(d) + ")";
                c.guard(name, [&] {
                    auto w = build_tripod(a, b, d);
                    c.expect(quiver_of(w.graph, w.cycles) == Quiver::from_matrix(tripod_matrix(a, b, d)),
                             name + " quiver differs from Q(a,b,c)");
                });
            }
    for (int n = 1; n <= 7; ++n) {
        std::string name = "G(A" + std::to_string(n) + ")";
        c.guard(name, [&] {
            auto w = build_linear(n);
            c.expect(quiver_of(w.graph, w.cycles) == Quiver::from_matrix(linear_matrix(n)),
                     name + " quiver is not the alternating A_n quiver");
        });
    }
}

void legendrian_coxeter(Ctx& c) {
    for (int n = 1; n <= 6; ++n) {
        std::string name = "A" + std::to_string(n);
        c.guard(name, [&] {
            auto w = build_linear(n);
            auto m = legendrian_coxeter_mutation(w);
            c.expect(canonical_form(m.graph).text == canonical_form(rotate(w.graph, -1)).text,
                     name + " Coxeter mutation is not the one-step rotation");
        });
    }
    for (int a = 1; a <= 3; ++a)
        for (int b = 1; b <= 3; ++b)
            for (int d = 1; d <= 3; ++d) {
                std::string name = "C(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(d) + ")";
                c.guard(name, [&] {
                    auto w = concat(coxeter_padding(a, b, d, false), color_swap(build_tripod(a, b, d)));
                    auto want = coxeter_mutation(Quiver::from_matrix(tripod_matrix(a, b, d)));
                    c.expect(quiver_of(w.graph, w.cycles) == want, name + " concatenation quiver differs from mu_Q");
                });
            }
}

// ---------------------------------------------------------- equivariance

std::vector<std::pair<std::string, WeaveData>> small_family() {
    return {{"G(A1)", build_linear(1)},       {"G(A2)", build_linear(2)},       {"G(A3)", build_linear(3)},
            {"G(1,1,1)", build_tripod(1, 1, 1)}, {"G(2,2,2)", build_tripod(2, 2, 2)}};
}

void equivariance(Ctx& c) {
    long checks = 0;
    for (const auto& [name, w] : small_family())
        for (int k = 0; k < static_cast<int>(w.cycles.size()); ++k)
            for (std::uint64_t s = 0; s < 5; ++s) {
                std::uint64_t seed = c.opt.seed * 1000 + s;
                std::string what = name + " cycle " + std::to_string(k + 1) + " seed " + std::to_string(seed);
                c.guard(what, [&] {
                    auto r = check_equivariance(w, generic_boundary_flags(w.graph, seed), k);
                    ++checks;
                    c.expect(r.ok, what);
                });
            }
    c.notes.push_back(std::to_string(checks) + " checks");
}

// ------------------------------------------------------------ properties

QVec random_vec(std::mt19937_64& rng, int n) {
    std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
    QVec v(n);
    for (auto& x : v) {
        x = mpq_class(num(rng), den(rng));
        x.canonicalize();
    }
    return v;
}

mpq_class det(const QMatrix& m) {
    if (m.size() == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

void properties(Ctx& c) {
    std::mt19937_64 rng(c.opt.seed);

    // mutation involution on random finite-type seeds
    c.guard("involution", [&] {
        std::vector<ExchangeMatrix> pool;
        for (const char* t : {"A1", "A3", "A5", "B3", "C3", "D4", "D5", "E6", "F4", "G2"})
            pool.push_back(dynkin_matrix(parse_dynkin(t)));
        int bad = 0;
        for (int trial = 0; trial < 1000; ++trial) {
            const auto& b = pool[rng() % pool.size()];
            Seed s = initial_seed(b);
            int walk = static_cast<int>(rng() % 7);
            for (int i = 0; i < walk; ++i) s = mutate_seed(s, static_cast<int>(rng() % b.n()));
            int k = static_cast<int>(rng() % b.n());
            if (!(mutate_seed(mutate_seed(s, k), k) == s)) ++bad;
        }
        c.expect_eq(bad, 0, "involution failures out of 1000");
    });

    // Laurent division along every path, and n-regularity
    for (const char* t : {"A4", "B3", "C3", "D5", "E6", "F4", "G2"}) {
        c.guard(t, [&] {
            EnumOptions o;
            o.verify_all_paths = true;
            auto g = enumerate_exchange_graph(initial_seed(dynkin_matrix(parse_dynkin(t))), o);
            c.expect(g.exact_divisions + g.verified_relations == static_cast<long>(g.num_vertices()) * g.n,
                     std::string(t) + " not every exchange relation was divided");
            c.expect(g.is_regular(), std::string(t) + " exchange graph not regular");
        });
    }

    // antisymmetry of intersection matrices, including mutated graphs
    c.guard("antisymmetry", [&] {
        std::vector<WeaveData> ws;
        for (int n = 1; n <= 7; ++n) ws.push_back(build_linear(n));
        for (int a = 1; a <= 3; ++a)
            for (int b = 1; b <= 3; ++b)
                for (int d = 1; d <= 3; ++d) ws.push_back(build_tripod(a, b, d));
        const std::size_t base = ws.size();
        for (std::size_t i = 0; i < base; ++i)
            for (int k = 0; k < static_cast<int>(ws[i].cycles.size()); ++k) {
                try {
                    ws.push_back(legendrian_mutate(ws[i], k));
                } catch (const UnsupportedConfiguration&) {
                }
            }
        for (const auto& w : ws) {
            auto q = quiver_of(w.graph, w.cycles);
            for (int i = 0; i < q.m(); ++i)
                for (int j = 0; j < q.m(); ++j)
                    if (q(i, j) != -q(j, i)) {
                        c.failures.push_back("intersection matrix not antisymmetric");
                        return;
                    }
        }
        c.notes.push_back(std::to_string(ws.size()) + " intersection matrices");
    });

    // GL-invariance of monodromies
    c.guard("GL-invariance", [&] {
        auto fam = small_family();
        int bad = 0;
        for (int trial = 0; trial < 100; ++trial) {
            const auto& w = fam[rng() % fam.size()].second;
            auto bf = generic_boundary_flags(w.graph, rng());
            const int N = bf.N;
            QMatrix m;
            do {
                m.clear();
                for (int i = 0; i < N; ++i) m.push_back(random_vec(rng, N));
            } while (det(m) == 0);
            auto fa = solve_face_flags(w.graph, bf);
            auto fb = solve_face_flags(w.graph, transform(bf, m));
            for (const auto& cyc : w.cycles)
                if (monodromy(w.graph, fa, cyc) != monodromy(w.graph, fb, cyc)) ++bad;
        }
        c.expect_eq(bad, 0, "monodromies changed under GL transforms");
    });

    // cyclic shift inverts the cross ratio
    c.guard("cross ratio", [&] {
        int bad = 0, done = 0;
        while (done < 100) {
            QVec v[4];
            for (auto& x : v) x = random_vec(rng, 2);
            mpq_class r, s;
            try {
                r = cross_ratio(v[0], v[1], v[2], v[3]);
                s = cross_ratio(v[1], v[2], v[3], v[0]);
            } catch (const ZeroWedge&) {
                continue;  // not generic, redraw
            }
            ++done;
            if (r * s != 1) ++bad;
        }
        c.expect_eq(bad, 0, "cyclic inversion failures out of 100");
    });
}

struct Entry {
    const char* title;
    void (*run)(Ctx&);
};

const Entry kEntries[kNumCriteria] = {
    {"seed counts", seed_counts},
    {"cluster-variable counts", variable_counts},
    {"A2 worked example", a2_example},
    {"Coxeter mutation periods", coxeter_periods},
    {"A3 facet orbit table", facet_table},
    {"folding", folding},
    {"N-graph quivers", ngraph_quivers},
    {"Legendrian Coxeter mutation", legendrian_coxeter},
    {"infinite type distinct seeds", infinite_type},
    {"monodromy equivariance", equivariance},
    {"property suites", properties},
};

}  // namespace

CheckResult run_criterion(int id, const VerifyOptions& opt) {
    if (id < 1 || id > kNumCriteria) throw InvalidArgument("no criterion " + std::to_string(id));
    const Entry& e = kEntries[id - 1];
    Ctx c{opt, {}, {}};
    auto t0 = std::chrono::steady_clock::now();
    c.guard(e.title, [&] { e.run(c); });
    CheckResult r;
    r.criterion = id;
    r.title = e.title;
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    r.ok = c.failures.empty();
    r.failures = std::move(c.failures);
    r.summary = join(c.notes);
    return r;
}

std::vector<int> suite_criteria(const std::string& suite) {
    static const std::map<std::string, std::vector<int>> suites = {
        {"tables", {1, 2, 3, 5}}, {"coxeter", {4, 9}},      {"folding", {6}},
        {"ngraph", {7, 8}},       {"equivariance", {10}},   {"properties", {11}},
        {"all", {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11}},
    };
    auto it = suites.find(suite);
    if (it == suites.end()) throw InvalidArgument("unknown suite '" + suite + "'");
    return it->second;
}

}  // namespace weave
