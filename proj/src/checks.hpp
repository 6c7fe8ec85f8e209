#pragma once

#include "json_io.hpp"

#include <string>
#include <vector>

namespace torelli {

struct CheckResult {
    std::string name;
    std::string verdict;  // pass | fail | report-only
    json details;

    bool failed() const { return verdict == "fail"; }
};

// The verification battery. Genus ranges are fixed by the check definitions
// themselves; every check is exact and deterministic.
CheckResult check_symplectic_random();
CheckResult check_transvection_anchor();
CheckResult check_chain_calculus();
CheckResult check_rewrite_soundness();
CheckResult check_relations();
CheckResult check_abelianization_ranks();
CheckResult check_w_compatibility();
CheckResult check_d_min();
CheckResult check_graph_connectivity();
CheckResult check_generator_count();
CheckResult check_support_cover();

std::vector<CheckResult> run_all_checks();

}  // namespace torelli
