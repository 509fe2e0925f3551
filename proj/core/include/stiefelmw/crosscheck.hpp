#pragma once

#include <string>
#include <vector>

#include "stiefelmw/bigraded.hpp"
#include "stiefelmw/motive.hpp"
#include "stiefelmw/stiefel_basis.hpp"

namespace stiefelmw {

/// One convention set under which the motive path is expanded, with the
/// short name used to key its verdicts in reports.
struct ConventionChoice {
    std::string name;
    Conventions conv;
};

/// Verdicts for a single (n, k): whether the closed form (A), the Gysin
/// induction (B) and the motive expansion (C, per convention) agree as
/// canonical multisets. Diffs are recorded on disagreement.
struct PairVerdict {
    int n = 0;
    int k = 0;
    bool a_eq_b = true;
    FormalSum only_in_a_vs_b;  // atoms of A missing from B
    FormalSum only_in_b_vs_a;

    struct MotiveVerdict {
        std::string convention;
        bool equal = true;
        FormalSum only_in_a;  // atoms of A missing from C
        FormalSum only_in_c;
    };
    std::vector<MotiveVerdict> motive;
};

struct CrosscheckReport {
    int n_max = 0;
    std::string k_rule = "1..n-1";
    std::vector<ConventionChoice> conventions;
    std::vector<PairVerdict> results;  // sorted by (n, k)

    bool a_eq_b_all = true;
    struct ConventionSummary {
        std::string convention;
        bool all_equal = true;
        int matches = 0;
        int first_mismatch_n = 0;  // 0 when all_equal
        int first_mismatch_k = 0;
    };
    std::vector<ConventionSummary> motive_summary;

    int pair_count() const { return static_cast<int>(results.size()); }
};

/// Sweep every 1 <= k <= n-1, n <= n_max (n_max >= 3) and compare the three
/// paths. `jobs` worker threads split the pairs; 0 means hardware
/// concurrency. The assembled report is identical for every jobs value.
CrosscheckReport run_crosscheck(int n_max, const std::vector<ConventionChoice>& conventions,
                                int jobs = 0);

}  // namespace stiefelmw
