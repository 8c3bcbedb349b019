// Thin bindings; structured results cross the boundary as JSON text and are
// decoded in weave/__init__.py.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "weave/clusterkit.hpp"
#include "weave/errors.hpp"
#include "weave/flagkit.hpp"
#include "weave/foldkit.hpp"
#include "weave/io.hpp"
#include "weave/ngraph.hpp"
#include "weave/rootdata.hpp"
#include "weave/verify.hpp"

namespace py = pybind11;
using namespace weave;
using nlohmann::json;

namespace {

bool is_folded_family(const DynkinType& t) {
    return t.family == Family::B || t.family == Family::C || t.family == Family::F || t.family == Family::G;
}

std::string enumerate_counts(const std::string& type, long cap) {
    auto t = parse_dynkin(type);
    if (is_folded_family(t)) {
        auto f = standard_folding(t);
        auto g = enumerate_folded_pattern(initial_seed(f.matrix), f.action, cap);
        return json{{"type", to_string(t)},
                    {"folded", true},
                    {"num_seeds", g.num_vertices()},
                    {"num_cluster_variables", folded_cluster_variable_count(g, f.action)}}
            .dump();
    }
    EnumOptions opt;
    opt.cap = cap;
    auto g = enumerate_exchange_graph(initial_seed(dynkin_matrix(t)), opt);
    return json{{"type", to_string(t)},
                {"folded", false},
                {"num_seeds", g.num_vertices()},
                {"num_cluster_variables", g.num_cluster_variables()}}
        .dump();
}

std::string coxeter_period(const std::string& type, int cap) {
    auto orbit = coxeter_orbit(initial_seed(dynkin_matrix(parse_dynkin(type))), cap);
    return json{{"periodic", orbit.periodic}, {"period", orbit.period}, {"steps", orbit.seeds.size()}}.dump();
}

WeaveData weave_from(const std::string& text) { return weave_from_json(json::parse(text)); }

std::string tripod(int a, int b, int c) { return to_json(build_tripod(a, b, c)).dump(); }
std::string linear(int n) { return to_json(build_linear(n)).dump(); }

std::string ngraph_quiver(const std::string& w) {
    auto d = weave_from(w);
    return to_json(quiver_of(d.graph, d.cycles)).dump();
}

std::string ngraph_mutate(const std::string& w, int k) { return to_json(legendrian_mutate(weave_from(w), k)).dump(); }

std::string y_seed(const std::string& w, std::uint64_t seed) {
    auto d = weave_from(w);
    auto fa = solve_face_flags(d.graph, generic_boundary_flags(d.graph, seed));
    return to_json(extract_seed(d, fa)).dump();
}

bool equivariant(const std::string& w, int k, std::uint64_t seed) {
    auto d = weave_from(w);
    return check_equivariance(d, generic_boundary_flags(d.graph, seed), k).ok;
}

std::string criterion(int id, std::uint64_t seed, bool long_tests) {
    auto r = run_criterion(id, {seed, long_tests});
    return json{{"criterion", r.criterion}, {"title", r.title},     {"ok", r.ok},
                {"failures", r.failures},   {"summary", r.summary}, {"seconds", r.seconds}}
        .dump();
}

}  // namespace

PYBIND11_MODULE(_weave, m) {
    m.doc() = "Cluster patterns, foldings and N-graph weaves";

    static py::exception<Error> base(m, "WeaveError");
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            py::set_error(base, e.what());
        }
    });

    m.def("coxeter_number", [](const std::string& t) { return coxeter_number(parse_dynkin(t)); });
    m.def("positive_roots", [](const std::string& t) { return positive_roots(parse_dynkin(t)); });
    m.def("cartan_matrix", [](const std::string& t) { return cartan_matrix(parse_dynkin(t)); });
    m.def("enumerate_counts", &enumerate_counts, py::arg("type"), py::arg("cap") = 100000);
    m.def("coxeter_period", &coxeter_period, py::arg("type"), py::arg("cap") = 64);
    m.def("tripod", &tripod);
    m.def("linear", &linear);
    m.def("ngraph_quiver", &ngraph_quiver);
    m.def("ngraph_mutate", &ngraph_mutate);
    m.def("y_seed", &y_seed, py::arg("weave"), py::arg("seed") = 1);
    m.def("equivariant", &equivariant, py::arg("weave"), py::arg("k"), py::arg("seed") = 1);
    m.def("run_criterion", &criterion, py::arg("id"), py::arg("seed") = 1, py::arg("long_tests") = false);
    m.attr("num_criteria") = kNumCriteria;
}
