// Prints one line per reproduction criterion and fails if any criterion
// fails or runs over its time budget.
#include <cstdio>
#include <cstring>
#include <string>

#include "weave/verify.hpp"

namespace {

// Wall-clock budgets in seconds, indexed by criterion.
double budget(int id, bool long_tests) {
    switch (id) {
    case 1: return long_tests ? 900 : 60;
    case 9: return long_tests ? 300 : 30;
    default: return 60;
    }
}

}  // namespace

int main(int argc, char** argv) {
    weave::VerifyOptions opt;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--long") == 0) opt.long_tests = true;
        else if (std::strcmp(argv[i], "--seed") == 0 && i + 1 < argc) opt.seed = std::stoull(argv[++i]);
    }
    int failed = 0;
    for (int id = 1; id <= weave::kNumCriteria; ++id) {
        auto r = weave::run_criterion(id, opt);
        double cap = budget(id, opt.long_tests);
        bool in_time = r.seconds <= cap;
        bool ok = r.ok && in_time;
        if (!ok) ++failed;
        std::string note = r.summary.empty() ? "" : " (" + r.summary + ")";
        std::printf("criterion %d: %s %s%s [%.2fs / %.0fs]\n", id, ok ? "PASS" : "FAIL", r.title.c_str(), note.c_str(),
                    r.seconds, cap);
        for (const auto& f : r.failures) std::printf("    %s\n", f.c_str());
        if (!in_time) std::printf("    over the time budget\n");
        std::fflush(stdout);
    }
    std::printf("%d of %d criteria passed\n", weave::kNumCriteria - failed, weave::kNumCriteria);
    return failed == 0 ? 0 : 1;
}
