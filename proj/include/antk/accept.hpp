#ifndef ANTK_ACCEPT_HPP
#define ANTK_ACCEPT_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace antk::accept {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail; // deterministic; no timings
    double seconds = 0.0;
};

struct VerifyOptions {
    bool quick = false;
    uint64_t seed = 1;
    std::string cli_path; // path to the antk binary; required for the determinism criterion
};

std::vector<CriterionResult> run_acceptance(const VerifyOptions& opt);

// deterministic JSON rendering of the results (seed echoed, no timings)
std::string results_json(const std::vector<CriterionResult>& results, uint64_t seed);

} // namespace antk::accept

#endif
