// Acceptance suite runner: one PASS/FAIL line per criterion, nonzero exit on
// any failure.  --cli <path> points at the antk binary (used by the
// determinism criterion); --quick runs the sub-minute subset.

#include <cstdio>
#include <cstring>
#include <string>

#include "antk/accept.hpp"

int main(int argc, char** argv) {
    antk::accept::VerifyOptions opt;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--cli") == 0 && i + 1 < argc) {
            opt.cli_path = argv[++i];
        } else if (std::strcmp(argv[i], "--quick") == 0) {
            opt.quick = true;
        } else if (std::strcmp(argv[i], "--seed") == 0 && i + 1 < argc) {
            opt.seed = std::strtoull(argv[++i], nullptr, 10);
        } else {
            std::fprintf(stderr, "usage: %s [--cli <antk binary>] [--quick] [--seed N]\n", argv[0]);
            return 2;
        }
    }
    auto results = antk::accept::run_acceptance(opt);
    bool all = true;
    for (const auto& r : results) {
        std::printf("%s %2d: %s (%s) [%.1fs]\n", r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(),
                    r.detail.c_str(), r.seconds);
        all = all && r.pass;
    }
    std::printf("%s: %zu criteria\n", all ? "ALL PASS" : "FAILURES PRESENT", results.size());
    return all ? 0 : 1;
}
