#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include <nlohmann/json.hpp>

namespace fs = std::filesystem;

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run run(const std::string& args) {
    std::string cmd = std::string(WEAVE_CLI_PATH) + " " + args + " 2>/dev/null";
    Run r;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
    int st = pclose(p);
    r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return r;
}

fs::path scratch_dir(const char* name) {
    auto d = fs::temp_directory_path() / ("weave-cli-" + std::string(name) + "-" + std::to_string(::getpid()));
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
}

}  // namespace

TEST_CASE("cli enumerate and cache") {
    auto cache = scratch_dir("cache");
    ::setenv("WEAVE_CACHE_DIR", cache.c_str(), 1);
    auto a = run("enumerate --type A3 --format text");
    CHECK(a.code == 0);
    CHECK(a.out.find("seeds 14") != std::string::npos);
    CHECK(a.out.find("cluster variables 9") != std::string::npos);
    int files = 0;
    for (const auto& e : fs::directory_iterator(cache)) files += e.path().extension() == ".json";
    CHECK(files == 1);
    auto b = run("enumerate --type A3 --format text");
    CHECK(b.code == 0);
    CHECK(b.out == a.out);

    auto g2 = run("enumerate --type G2 --format json");
    CHECK(g2.code == 0);
    auto j = nlohmann::json::parse(g2.out);
    CHECK(j.at("folded") == true);
    ::unsetenv("WEAVE_CACHE_DIR");
    fs::remove_all(cache);
}

TEST_CASE("cli exit codes") {
    CHECK(run("enumerate --type A3 --format svg").code == 3);
    CHECK(run("--cap 10 enumerate --type E6").code == 4);
    CHECK(run("ngraph check-admissible --setting E6 --tripod 2 3 2").code == 2);
    CHECK(run("ngraph check-admissible --setting D4 --tripod 2 2 2").code == 0);
    CHECK(run("enumerate --type Z3").code == 1);
    CHECK(run("verify tables").code == 0);
}

TEST_CASE("cli --out writes the result") {
    auto dir = scratch_dir("out");
    auto file = dir / "quiver.json";
    auto r = run("ngraph quiver --tripod 1 1 1 --format json --out " + file.string());
    CHECK(r.code == 0);
    REQUIRE(fs::exists(file));
    std::ifstream in(file);
    auto j = nlohmann::json::parse(in);
    CHECK(j.dump().find("arrows") != std::string::npos);
    fs::remove_all(dir);
}

TEST_CASE("cli walk and flags") {
    auto w = run("walk --type A2 --seq 1,2,1,2,1 --format json");
    CHECK(w.code == 0);
    CHECK(nlohmann::json::parse(w.out).at("returned_to_initial_cluster") == true);
    auto c = run("walk --type A2 --coxeter 5 --format json");
    CHECK(c.code == 0);
    CHECK(nlohmann::json::parse(c.out).at("distinct_coxeter_seeds") == 5);
    auto f = run("flags check-equivariance --linear 1 --cycle 1 --seed 4");
    CHECK(f.code == 0);
}
