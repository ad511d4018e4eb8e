#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hopseat/assembly.hpp"
#include "hopseat/model.hpp"

namespace hopseat {

struct LiftedFactor {
    std::vector<std::vector<Participant>> cycles;
    std::vector<std::pair<Participant, Participant>> pairs;
};

std::pair<Participant, Participant> lift_edge(const DecoratedEdge& e);
std::vector<Participant> lift_cycle(const ColoredCycle& c);

std::vector<LiftedFactor> lift_phi(const HOPDecomposition& d, const ProblemSpec& spec);
LiftedFactor extend_with_couples(const LiftedFactor& f, const ProblemSpec& spec);
Schedule emit_schedule(const std::vector<LiftedFactor>& factors, const ProblemSpec& spec);

// Rotates every table to its smallest participant and sorts tables and pairs.
Night canonical_night(const Night& night);

struct PairOffender {
    Participant a;
    Participant b;
    int count = 0;
};

struct VerificationReport {
    bool night_count_ok = true;
    std::vector<std::string> shape_failures;
    std::vector<std::pair<int, int>> spouse_failures;  // (night, couple)
    std::vector<PairOffender> pair_offenders;

    bool ok() const { return night_count_ok && shape_failures.empty() && spouse_failures.empty() && pair_offenders.empty(); }
    std::vector<std::string> failures() const;
};

VerificationReport verify_schedule(const Schedule& schedule, const ProblemSpec& spec);

}  // namespace hopseat
