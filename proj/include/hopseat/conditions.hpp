#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "hopseat/model.hpp"

namespace hopseat {

struct Violation {
    std::string condition;  // e.g. "coverage", "A1", "B2"
    std::string key;        // difference or orbit the violation is about
    int expected = 0;
    int found = 0;
};

struct CoverageReport {
    std::map<int, int> usage;  // difference -> edge count; -1 stands for infinity
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
    std::string summary() const;
};

bool check_c1(const ColoredCycle& cycle);
bool check_even_pink(const ColoredCycle& cycle);

CoverageReport coverage_full_rotation(const std::vector<Piece>& pieces, int modulus, const std::set<int>& required);

// Orbit of a decorated edge under x -> x+1 on Z_M (x_inf fixed).
struct EdgeOrbit {
    std::string id;
    int size = 0;
    int position = 0;
};

EdgeOrbit orbit_of(const DecoratedEdge& e, int modulus);

struct Orbit {
    std::string id;
    std::string color;
    Difference difference;
    int size = 0;
    DecoratedEdge representative;
};

struct OrbitTable {
    int modulus = 0;
    bool fixes_infinity = false;
    int fold = 4;
    std::vector<Orbit> orbits;
};

// All edge orbits of fold*K_n (fold 2: plain pink/black, fold 4: blue/pink/arcs).
// With fixes_infinity the labeling is Z_{n-1} plus x_inf, otherwise Z_n.
OrbitTable orbit_table(int n, bool fixes_infinity, int fold);

enum class Flavor { A, B, D };

const char* flavor_name(Flavor f);

CoverageReport check_starter_conditions(const std::vector<Piece>& pieces, Flavor flavor, int n);

}  // namespace hopseat
