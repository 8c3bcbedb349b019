#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "weave/clusterkit.hpp"
#include "weave/errors.hpp"
#include "weave/flagkit.hpp"
#include "weave/foldkit.hpp"
#include "weave/io.hpp"
#include "weave/ngraph.hpp"
#include "weave/verify.hpp"

using nlohmann::json;
using namespace weave;

namespace {

enum class Format { json, dot, svg, text };

struct RunConfig {
    std::uint64_t seed = 1;
    long cap = 100000;
    bool long_tests = false;
    std::string format = "text";
    std::string out;

    Format fmt() const {
        if (format == "json") return Format::json;
        if (format == "dot") return Format::dot;
        if (format == "svg") return Format::svg;
        return Format::text;
    }
};

// Where a command gets its seed or N-graph from.
struct Source {
    std::string type;
    std::vector<int> tripod;
    int linear = 0;
    std::string in;

    void add_to(CLI::App* sub, bool graphs_only) {
        if (!graphs_only) sub->add_option("--type", type, "Dynkin type, e.g. A3, E6, B3 (folded)");
        sub->add_option("--tripod", tripod, "standard tripod a b c")->expected(3);
        sub->add_option("--linear", linear, "standard linear N-graph of type A_n");
        sub->add_option("--in", in, "JSON input file");
    }
    bool has_graph() const { return !tripod.empty() || linear > 0 || !in.empty(); }
};

void emit(const RunConfig& cfg, const std::string& text) {
    if (cfg.out.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream f(cfg.out);
    if (!f) throw InvalidArgument("cannot write " + cfg.out);
    f << text;
}

json read_json(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw InvalidArgument("cannot read " + path);
    try {
        return json::parse(f);
    } catch (const json::exception& e) {
        throw InvalidArgument(path + ": " + e.what());
    }
}

void require(bool cond, const std::string& msg) {
    if (!cond) throw InvalidArgument(msg);
}

WeaveData load_weave(const Source& src) {
    if (!src.tripod.empty()) return build_tripod(src.tripod[0], src.tripod[1], src.tripod[2]);
    if (src.linear > 0) return build_linear(src.linear);
    require(!src.in.empty(), "give --tripod a b c, --linear n or --in FILE");
    return weave_from_json(read_json(src.in));
}

std::string matrix_text(const ExchangeMatrix& b) {
    std::ostringstream os;
    for (int i = 0; i < b.n(); ++i) {
        os << "  [";
        for (int j = 0; j < b.m(); ++j) os << (j ? " " : "") << b(i, j);
        os << "]\n";
    }
    return os.str();
}

std::string quiver_text(const Quiver& q) {
    std::ostringstream os;
    os << "vertices " << q.m() << " (mutable " << q.n() << ")\n";
    for (auto [i, j, k] : q.arrows()) os << "  " << i + 1 << " -> " << j + 1 << (k > 1 ? " x" + std::to_string(k) : "") << "\n";
    return os.str();
}

std::string weave_text(const WeaveData& w) {
    std::ostringstream os;
    os << "N=" << w.graph.N() << " vertices " << w.graph.num_vertices() << " edges " << w.graph.num_edges()
       << "\nboundary " << w.graph.boundary_word().str() << "\ncycles\n";
    for (std::size_t i = 0; i < w.cycles.size(); ++i) {
        const auto& c = w.cycles[i];
        os << "  " << i + 1 << " " << to_string(c.kind) << " edges";
        if (c.is_y())
            for (const auto& leg : c.legs) os << " " << leg.size();
        else
            os << " " << c.edges.size();
        os << "\n";
    }
    os << "quiver\n" << quiver_text(quiver_of(w.graph, w.cycles));
    return os.str();
}

std::string render(const RunConfig& cfg, const WeaveData& w) {
    switch (cfg.fmt()) {
    case Format::json: return to_json(w).dump(2);
    case Format::dot: return to_dot(w);
    case Format::svg: return to_svg(w);
    case Format::text: break;
    }
    return weave_text(w);
}

// ------------------------------------------------------------ enumerate

// FNV-1a; stable across builds, unlike std::hash.
std::string content_hash(const std::string& s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

json enumerate_report(const Source& src, const RunConfig& cfg, std::string& label) {
    ExchangeMatrix b;
    std::optional<StandardFolding> fold;
    if (!src.type.empty()) {
        auto t = parse_dynkin(src.type);
        validate(t);
        label = to_string(t);
        if (t.family == Family::B || t.family == Family::C || t.family == Family::F || t.family == Family::G) {
            fold = standard_folding(t);
            b = fold->matrix;
        } else {
            b = dynkin_matrix(t);
        }
    } else if (!src.tripod.empty()) {
        b = tripod_matrix(src.tripod[0], src.tripod[1], src.tripod[2]);
        label = "Q(" + std::to_string(src.tripod[0]) + "," + std::to_string(src.tripod[1]) + "," +
                std::to_string(src.tripod[2]) + ")";
    } else if (src.linear > 0) {
        b = linear_matrix(src.linear);
        label = "A" + std::to_string(src.linear);
    } else {
        require(!src.in.empty(), "give --type, --tripod, --linear or --in");
        b = seed_from_json(read_json(src.in)).matrix;
        label = src.in;
    }
    const bool verify_paths = !(cfg.long_tests && b.n() >= 8);

    // content-addressed by the canonical input form
    json key = {{"op", "enumerate"}, {"matrix", to_json(b)}, {"cap", cfg.cap}, {"verify", verify_paths}};
    if (fold) key["action"] = to_json(fold->action);
    std::filesystem::path cache_file;
    if (const char* dir = std::getenv("WEAVE_CACHE_DIR"); dir && *dir) {
        cache_file = std::filesystem::path(dir) / ("enumerate-" + content_hash(key.dump()) + ".json");
        if (std::filesystem::exists(cache_file)) {
            json hit = read_json(cache_file.string());
            if (hit.value("input", json()) == key) return hit.at("report");
        }
    }

    json report;
    if (fold) {
        auto g = enumerate_folded_pattern(initial_seed(b), fold->action, cfg.cap);
        json edges = json::array();
        for (auto [u, v, k] : g.edges) edges.push_back({u, v, k});
        report = {{"folded", true},
                  {"unfolded", to_string(fold->unfolded)},
                  {"num_seeds", g.num_vertices()},
                  {"num_cluster_variables", folded_cluster_variable_count(g, fold->action)},
                  {"graph", {{"edges", edges}}}};
    } else {
        EnumOptions o;
        o.cap = cfg.cap;
        o.rng_seed = cfg.seed;
        o.verify_all_paths = verify_paths;
        auto g = enumerate_exchange_graph(initial_seed(b), o);
        report = {{"folded", false},
                  {"num_seeds", g.num_vertices()},
                  {"num_cluster_variables", g.num_cluster_variables()},
                  {"regular", g.is_regular()},
                  {"graph", to_json(g)},
                  {"dot", to_dot(g)}};
    }
    report["matrix"] = to_json(b);
    if (!cache_file.empty()) {
        std::filesystem::create_directories(cache_file.parent_path());
        std::ofstream(cache_file) << json{{"input", key}, {"report", report}}.dump();
    }
    return report;
}

int cmd_enumerate(const Source& src, const RunConfig& cfg) {
    std::string label;
    json r = enumerate_report(src, cfg, label);
    switch (cfg.fmt()) {
    case Format::json: {
        json out = r;
        out.erase("dot");
        emit(cfg, out.dump(2));
        break;
    }
    case Format::dot:
        require(r.contains("dot"), "DOT export is only available for unfolded patterns");
        emit(cfg, r.at("dot").get<std::string>());
        break;
    case Format::svg: throw UnsupportedConfiguration("SVG export is for N-graphs only");
    case Format::text:
        emit(cfg, label + (r.at("folded").get<bool>() ? " (folded from " + r.at("unfolded").get<std::string>() + ")" : "") +
                      "\nseeds " + std::to_string(r.at("num_seeds").get<long>()) + "\ncluster variables " +
                      std::to_string(r.at("num_cluster_variables").get<long>()));
        break;
    }
    return 0;
}

// --------------------------------------------------------------- verify

int cmd_verify(const std::string& suite, const RunConfig& cfg) {
    VerifyOptions opt;
    opt.seed = cfg.seed;
    opt.long_tests = cfg.long_tests;
    json results = json::array();
    std::ostringstream text;
    bool all_ok = true;
    for (int id : suite_criteria(suite)) {
        auto r = run_criterion(id, opt);
        all_ok = all_ok && r.ok;
        results.push_back({{"criterion", r.criterion},
                           {"title", r.title},
                           {"ok", r.ok},
                           {"failures", r.failures},
                           {"summary", r.summary},
                           {"seconds", r.seconds}});
        text << (r.ok ? "PASS" : "FAIL") << " [" << r.criterion << "] " << r.title;
        if (!r.summary.empty()) text << " (" << r.summary << ")";
        text << "\n";
        for (const auto& f : r.failures) text << "    - " << f << "\n";
    }
    if (cfg.fmt() == Format::json)
        emit(cfg, json{{"suite", suite}, {"ok", all_ok}, {"results", results}}.dump(2));
    else
        emit(cfg, text.str());
    return all_ok ? 0 : 2;
}

// ----------------------------------------------------------------- walk

std::vector<int> parse_seq(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        try {
            out.push_back(std::stoi(tok) - 1);
        } catch (const std::exception&) {
            throw InvalidArgument("bad mutation index '" + tok + "'");
        }
    }
    return out;
}

std::string vars_text(const Seed& s) {
    std::ostringstream os;
    for (int i = 0; i < s.matrix.n(); ++i) {
        auto d = denominator_vector(s.vars[i], s.matrix.n());
        os << "  x" << i + 1 << " d=(";
        for (std::size_t j = 0; j < d.size(); ++j) os << (j ? "," : "") << d[j];
        os << ")";
        if (s.vars[i].size() <= 8) os << " " << s.vars[i].pretty();
        else os << " [" << s.vars[i].size() << " terms]";
        os << "\n";
    }
    return os.str();
}

int cmd_walk(const Source& src, const std::string& seq_str, int coxeter_r, const RunConfig& cfg) {
    require(coxeter_r >= 0, "--coxeter must be >= 0");
    ExchangeMatrix b;
    std::optional<WeaveData> w;
    if (!src.type.empty()) {
        b = dynkin_matrix(parse_dynkin(src.type));
    } else if (!src.tripod.empty()) {
        const auto& t = src.tripod;
        b = tripod_matrix(t[0], t[1], t[2]);
        w = tripod_coxeter_power(t[0], t[1], t[2], coxeter_r);
    } else if (src.linear > 0) {
        b = linear_matrix(src.linear);
        w = build_linear(src.linear);
        for (int r = 0; r < coxeter_r; ++r) w = legendrian_coxeter_mutation(*w);
    } else {
        require(!src.in.empty(), "give --type, --tripod, --linear or --in");
        b = seed_from_json(read_json(src.in)).matrix;
    }
    auto seq = parse_seq(seq_str);
    for (int k : seq) require(k >= 0 && k < b.n(), "mutation index out of range");

    Seed s = initial_seed(b);
    YSeedNumeric y = generic_y_seed(b, cfg.seed);
    json steps = json::array();
    std::ostringstream text;
    auto record = [&](const std::string& op) {
        json step = {{"op", op}, {"seed", to_json(s)}, {"y", to_json(y)}, {"key", cluster_key(s).str()}};
        if (w) step["ngraph"] = to_json(*w);
        steps.push_back(step);
        text << "step " << steps.size() - 1 << ": " << op << "\n" << vars_text(s) << "  matrix\n"
             << matrix_text(s.matrix) << "  y";
        for (const auto& v : y.y) text << " " << v.get_str();
        text << "\n";
        if (w) text << "  N-graph vertices " << w->graph.num_vertices() << ", edges " << w->graph.num_edges() << "\n";
    };
    record("initial");

    std::set<ClusterKey> coxeter_keys;
    if (coxeter_r > 0) {
        auto split = bipartite_split(b);
        if (!split) throw NotBipartite("the initial quiver is not bipartite");
        for (int r = 1; r <= coxeter_r; ++r) {
            s = coxeter_mutation(s, *split);
            y = coxeter_mutation(y, *split);
            coxeter_keys.insert(cluster_key(s));
        }
        record("mu_Q^" + std::to_string(coxeter_r));
    }
    for (int k : seq) {
        s = mutate_seed(s, k);
        y = mutate_y(y, k);
        if (w) w = legendrian_mutate(*w, k);
        record("mu_" + std::to_string(k + 1));
    }

    json out = {{"steps", steps}};
    if (coxeter_r > 0) {
        out["distinct_coxeter_seeds"] = coxeter_keys.size();
        text << "distinct seeds among mu_Q^1..mu_Q^" << coxeter_r << ": " << coxeter_keys.size() << "\n";
    }
    if (!seq.empty()) {
        // returns to the initial cluster up to relabeling
        bool back = cluster_key(s) == cluster_key(initial_seed(b)) && coxeter_r == 0;
        out["returned_to_initial_cluster"] = back;
        text << "returned to the initial cluster: " << (back ? "yes" : "no") << "\n";
    }
    switch (cfg.fmt()) {
    case Format::json: emit(cfg, out.dump(2)); break;
    case Format::dot:
    case Format::svg:
        require(w.has_value(), "graph export needs an N-graph start (--tripod or --linear)");
        emit(cfg, render(cfg, *w));
        break;
    case Format::text: emit(cfg, text.str()); break;
    }
    return 0;
}

// --------------------------------------------------------------- ngraph

int cmd_ngraph_build(const std::vector<std::string>& args, const RunConfig& cfg) {
    require(!args.empty(), "usage: ngraph build tripod a b c | ngraph build linear n");
    std::vector<int> nums;
    for (std::size_t i = 1; i < args.size(); ++i) {
        try {
            nums.push_back(std::stoi(args[i]));
        } catch (const std::exception&) {
            throw InvalidArgument("expected an integer, got '" + args[i] + "'");
        }
    }
    WeaveData w;
    if (args[0] == "tripod") {
        require(nums.size() == 3, "tripod needs a b c");
        w = build_tripod(nums[0], nums[1], nums[2]);
    } else if (args[0] == "linear") {
        require(nums.size() == 1, "linear needs n");
        w = build_linear(nums[0]);
    } else {
        throw InvalidArgument("unknown family '" + args[0] + "'");
    }
    emit(cfg, render(cfg, w));
    return 0;
}

int cmd_ngraph_coxeter(const Source& src, int r, const RunConfig& cfg) {
    require(r >= 0, "power must be >= 0");
    WeaveData w;
    if (!src.tripod.empty()) {
        w = tripod_coxeter_power(src.tripod[0], src.tripod[1], src.tripod[2], r);
    } else {
        w = load_weave(src);
        for (int i = 0; i < r; ++i) w = legendrian_coxeter_mutation(w);
    }
    emit(cfg, render(cfg, w));
    return 0;
}

int cmd_ngraph_quiver(const Source& src, const RunConfig& cfg) {
    auto w = load_weave(src);
    auto q = quiver_of(w.graph, w.cycles);
    switch (cfg.fmt()) {
    case Format::json: emit(cfg, to_json(q).dump(2)); break;
    case Format::dot: emit(cfg, to_dot(q)); break;
    case Format::svg: throw UnsupportedConfiguration("SVG export is for N-graphs only");
    case Format::text: emit(cfg, quiver_text(q)); break;
    }
    return 0;
}

int cmd_ngraph_admissible(const Source& src, const std::string& setting, int rank, const RunConfig& cfg) {
    auto s = parse_setting(setting);
    WeaveData w = src.has_graph() ? load_weave(src) : standard_admissible_graph(s, rank);
    auto r = is_G_admissible(w, s);
    json out = {{"setting", to_string(s)},
                {"graph_symmetric", r.graph_symmetric},
                {"cycles_match", r.cycles_match},
                {"ok", r.ok()}};
    if (r.ok()) {
        std::vector<int> rel;
        for (int i : r.relabel) rel.push_back(i + 1);
        out["relabel"] = rel;
        auto act = action_from_relabel(r.relabel);
        auto ok = check_admissible(quiver_of(w.graph, w.cycles).exchange_matrix(), act);
        out["quiver_admissible"] = ok.ok();
    }
    if (cfg.fmt() == Format::json) {
        emit(cfg, out.dump(2));
    } else {
        std::ostringstream os;
        os << "setting " << to_string(s) << "\ngraph symmetric " << (r.graph_symmetric ? "yes" : "no")
           << "\ncycles match " << (r.cycles_match ? "yes" : "no") << "\n"
           << (r.ok() ? "admissible" : "not admissible");
        emit(cfg, os.str());
    }
    return r.ok() ? 0 : 2;
}

// ---------------------------------------------------------------- flags

BoundaryFlags load_flags(const WeaveData& w, const std::string& path, const RunConfig& cfg) {
    if (!path.empty()) return boundary_flags_from_json(read_json(path));
    return generic_boundary_flags(w.graph, cfg.seed);
}

int check_cycle(const WeaveData& w, int k) {
    require(k >= 1 && k <= static_cast<int>(w.cycles.size()),
            "--cycle must be between 1 and " + std::to_string(w.cycles.size()));
    return k - 1;
}

int cmd_flags_solve(const Source& src, const std::string& flags, const RunConfig& cfg) {
    auto w = load_weave(src);
    auto bf = load_flags(w, flags, cfg);
    auto fa = solve_face_flags(w.graph, bf);
    check_flag_conditions(w.graph, fa);
    if (cfg.fmt() == Format::json) {
        emit(cfg, to_json(fa).dump(2));
    } else {
        std::ostringstream os;
        os << fa.faces.faces.size() << " faces, all edge conditions hold\n";
        for (std::size_t f = 0; f < fa.face_flags.size(); ++f) {
            os << "  face " << f + 1 << ":";
            for (const auto& v : fa.face_flags[f].basis) {
                os << " (";
                for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i].get_str();
                os << ")";
            }
            os << "\n";
        }
        emit(cfg, os.str());
    }
    return 0;
}

int cmd_flags_monodromy(const Source& src, const std::string& flags, int k, const RunConfig& cfg) {
    auto w = load_weave(src);
    int c = check_cycle(w, k);
    auto fa = solve_face_flags(w.graph, load_flags(w, flags, cfg));
    auto v = monodromy(w.graph, fa, w.cycles[c]);
    if (cfg.fmt() == Format::json)
        emit(cfg, json{{"cycle", k}, {"kind", to_string(w.cycles[c].kind)}, {"monodromy", v.get_str()}}.dump(2));
    else
        emit(cfg, v.get_str());
    return 0;
}

int cmd_flags_equivariance(const Source& src, const std::string& flags, int k, const RunConfig& cfg) {
    auto w = load_weave(src);
    int c = check_cycle(w, k);
    auto r = check_equivariance(w, load_flags(w, flags, cfg), c);
    if (cfg.fmt() == Format::json) {
        emit(cfg, json{{"cycle", k},
                       {"ok", r.ok},
                       {"before", to_json(r.before)},
                       {"expected", to_json(r.expected)},
                       {"after", to_json(r.after)}}
                      .dump(2));
    } else {
        auto line = [](const YSeedNumeric& y) {
            std::string s;
            for (const auto& v : y.y) s += " " + v.get_str();
            return s;
        };
        emit(cfg, std::string(r.ok ? "equivariant" : "NOT equivariant") + "\n  before  " + line(r.before) +
                      "\n  expected" + line(r.expected) + "\n  after   " + line(r.after));
    }
    return r.ok ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"weave: cluster seed patterns, N-graphs and flag monodromy"};
    app.require_subcommand(1);
    app.fallthrough();

    RunConfig cfg;
    app.add_option("--seed", cfg.seed, "RNG seed")->capture_default_str();
    app.add_option("--cap", cfg.cap, "enumeration cap")->check(CLI::PositiveNumber)->capture_default_str();
    app.add_flag("--long", cfg.long_tests, "enable long-running checks (E7, E8, exact (2,3,6))");
    app.add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"json", "dot", "svg", "text"}))
        ->capture_default_str();
    app.add_option("--out", cfg.out, "write output to FILE");

    int code = 0;
    std::function<int()> action;

    Source enum_src;
    auto* en = app.add_subcommand("enumerate", "enumerate seeds and cluster variables");
    enum_src.add_to(en, false);
    en->callback([&] { action = [&] { return cmd_enumerate(enum_src, cfg); }; });

    std::string suite;
    auto* ve = app.add_subcommand("verify", "run a reproduction suite");
    ve->add_option("suite", suite, "suite name")
        ->required()
        ->check(CLI::IsMember({"tables", "coxeter", "folding", "ngraph", "equivariance", "properties", "all"}));
    ve->callback([&] { action = [&] { return cmd_verify(suite, cfg); }; });

    Source walk_src;
    std::string seq;
    int coxeter_r = 0;
    auto* wk = app.add_subcommand("walk", "apply a mutation sequence");
    walk_src.add_to(wk, false);
    wk->add_option("--seq", seq, "comma separated 1-based directions");
    wk->add_option("--coxeter", coxeter_r, "apply mu_Q^r first");
    wk->callback([&] { action = [&] { return cmd_walk(walk_src, seq, coxeter_r, cfg); }; });

    auto* ng = app.add_subcommand("ngraph", "N-graph operations");
    ng->require_subcommand(1);
    std::vector<std::string> build_args;
    auto* ng_build = ng->add_subcommand("build", "build a standard N-graph");
    ng_build->add_option("family", build_args, "tripod a b c | linear n")->required();
    ng_build->callback([&] { action = [&] { return cmd_ngraph_build(build_args, cfg); }; });

    Source ng_src;
    int mut_k = 0;
    auto* ng_mut = ng->add_subcommand("mutate", "Legendrian mutation at cycle k");
    ng_mut->add_option("k", mut_k, "1-based cycle index")->required();
    ng_src.add_to(ng_mut, true);
    ng_mut->callback([&] {
        action = [&] {
            auto w = load_weave(ng_src);
            emit(cfg, render(cfg, legendrian_mutate(w, check_cycle(w, mut_k))));
            return 0;
        };
    });

    int cox_r = 0;
    auto* ng_cox = ng->add_subcommand("coxeter", "r-fold Legendrian Coxeter mutation");
    ng_cox->add_option("r", cox_r, "power")->required();
    ng_src.add_to(ng_cox, true);
    ng_cox->callback([&] { action = [&] { return cmd_ngraph_coxeter(ng_src, cox_r, cfg); }; });

    auto* ng_q = ng->add_subcommand("quiver", "intersection quiver");
    ng_src.add_to(ng_q, true);
    ng_q->callback([&] { action = [&] { return cmd_ngraph_quiver(ng_src, cfg); }; });

    std::string setting;
    int rank = 0;
    auto* ng_adm = ng->add_subcommand("check-admissible", "G-admissibility of an N-graph");
    ng_adm->add_option("--setting", setting, "A_odd, D4, D_partial or E6")->required();
    ng_adm->add_option("--rank", rank, "rank of the folded type for the standard graph");
    ng_src.add_to(ng_adm, true);
    ng_adm->callback([&] { action = [&] { return cmd_ngraph_admissible(ng_src, setting, rank, cfg); }; });

    auto* fl = app.add_subcommand("flags", "flags and microlocal monodromy");
    fl->require_subcommand(1);
    Source fl_src;
    std::string flags_file;
    int cycle = 0;
    auto* fl_solve = fl->add_subcommand("solve", "face flags from boundary flags");
    auto* fl_mono = fl->add_subcommand("monodromy", "monodromy along a cycle");
    auto* fl_eq = fl->add_subcommand("check-equivariance", "monodromy versus X-mutation");
    for (auto* sub : {fl_solve, fl_mono, fl_eq}) {
        fl_src.add_to(sub, true);
        sub->add_option("--flags", flags_file, "boundary flags JSON (default: generic from --seed)");
    }
    fl_mono->add_option("--cycle", cycle, "1-based cycle index")->required();
    fl_eq->add_option("--cycle", cycle, "1-based cycle index")->required();
    fl_solve->callback([&] { action = [&] { return cmd_flags_solve(fl_src, flags_file, cfg); }; });
    fl_mono->callback([&] { action = [&] { return cmd_flags_monodromy(fl_src, flags_file, cycle, cfg); }; });
    fl_eq->callback([&] { action = [&] { return cmd_flags_equivariance(fl_src, flags_file, cycle, cfg); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        code = action ? action() : 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return static_cast<int>(e.kind());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return code;
}
