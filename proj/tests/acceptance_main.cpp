// Acceptance battery: runs every verification check and prints one
// pass/fail line per criterion. Exit code 0 iff nothing failed.

#include "checks.hpp"

#include <cstdio>
#include <map>

using namespace torelli;

int main() {
    const std::map<std::string, int> criterion{
        {"symplectic_random", 1},  {"transvection_anchor", 2}, {"chain_calculus", 3},
        {"rewrite_soundness", 4},  {"relations", 5},           {"abelianization_ranks", 6},
        {"w_compatibility", 7},    {"d_min", 8},               {"graph_connectivity", 9},
        {"generator_count", 10},   {"support_cover", 11}};

    bool any_failed = false;
    for (const CheckResult& r : run_all_checks()) {
        const char* tag = r.verdict == "fail" ? "FAIL" : (r.verdict == "pass" ? "PASS" : "INFO");
        any_failed = any_failed || r.failed();
        std::printf("[%s] criterion-%d %s %s\n", tag, criterion.at(r.name), r.name.c_str(),
                    r.details.dump().c_str());
        std::fflush(stdout);
    }
    std::printf(any_failed ? "ACCEPTANCE: FAIL\n" : "ACCEPTANCE: PASS\n");
    return any_failed ? 1 : 0;
}
