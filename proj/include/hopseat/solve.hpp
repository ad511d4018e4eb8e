#pragma once

#include <string>
#include <vector>

#include "hopseat/assembly.hpp"
#include "hopseat/model.hpp"

namespace hopseat {

class FixtureStore;

struct SolveOptions {
    FixtureStore* store = nullptr;  // search cache; may be null
    long node_budget = 10'000'000;  // per search attempt
    double time_budget = 0;         // seconds per search attempt; 0 means unlimited
};

struct Construction {
    HOPDecomposition decomposition;
    std::string route;                 // e.g. "c2cm-mod1 k=1 FullRotation"
    std::vector<std::string> repairs;  // starter repair log
};

// Builds an HOP decomposition of 4K_n^* whose pieces have the spec's cycle type.
// Throws UnsupportedParameters, or BudgetExceeded when every applicable search ran out of budget.
Construction construct(const ProblemSpec& spec, const SolveOptions& opts = {});

struct Solution {
    Schedule schedule;
    Construction construction;
};

// construct + lift + emit; the schedule is verified before it is returned (VerificationFailed otherwise).
Solution solve_detailed(const ProblemSpec& spec, const SolveOptions& opts = {});
Schedule solve(const ProblemSpec& spec, const SolveOptions& opts = {});

// Every spec with all m_i >= 2, m <= max_m, odd n <= max_n and 2m | n(n-1).
std::vector<ProblemSpec> sweep_specs(int max_m, int max_n);
// (C2, Cm) specs for m in [lo, hi], k in [1, kmax]: n = 2(m+2)k+1, and n = (2k+1)(m+2) for odd m.
std::vector<ProblemSpec> two_table_specs(int lo, int hi, int kmax);

}  // namespace hopseat
