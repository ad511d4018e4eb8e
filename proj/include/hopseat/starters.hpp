#pragma once

#include <set>
#include <string>
#include <vector>

#include "hopseat/conditions.hpp"
#include "hopseat/model.hpp"

namespace hopseat {

class FixtureStore;

enum class StarterLemma {
    C2CmMod1,          // (C2, Cm), n = 2(m+2)k + 1
    C2CmEquipartite,   // (C2, Cm) on K_{(2k+1)[m+2]}, m odd
    Deuces,            // (C2), n = 4k + 1
    C2C4Mod12,         // (C2, C4), n = 12k + 9
    C3C3Nine,          // (C3, C3), n = 9
    C4C5Nine,          // (C4, C5), n = 9
    C2C3C3Mod16,       // (C2, C3, C3), n = 16k + 1
    C2C3C4Mod18,       // (C2, C3, C4), n = 18k + 1
    C2C3C4Equipartite, // (C2, C3, C4), n = 18k + 9
    C2C4C4Mod20,       // (C2, C4, C4), n = 20k + 1
    C2C3C5Mod20,       // (C2, C3, C5), n = 20k + 1
    C2C8Mod20,         // (C2, C8), n = 20k + 5
    C2C4C4Mod20Half,   // (C2, C4, C4), n = 20k + 5
    C2C3C5Mod20Half,   // (C2, C3, C5), n = 20k + 5
};

const char* lemma_name(StarterLemma l);

// Subgroup: spanning factors over Z_n translated by the order-`symmetry` subgroup.
enum class Development { FullRotation, HalfA, HalfB, HalfD, BlockCompose, Subgroup };

const char* development_name(Development d);

struct StarterRecipe {
    StarterLemma lemma = StarterLemma::C2CmMod1;
    std::vector<int> cycle_type;  // sorted half sizes, 2 marks a 2-cycle / K2 pair
    int k = 0;
    int n = 0;
    int modulus = 0;
    bool has_infinity = false;
    Development development = Development::FullRotation;
    std::set<int> differences;  // required differences for full rotation, empty otherwise
    int block = 0;              // BlockCompose: size of each diagonal block
    int symmetry = 1;           // Subgroup: order of the translating subgroup
};

struct StarterSet {
    StarterRecipe recipe;
    std::vector<Piece> pieces;
    std::vector<std::string> repairs;
    std::vector<StarterSet> blocks;  // BlockCompose: the factorization placed on each block
};

// Differences 1..(M-1)/2 of Z_M that are not multiples of l.
std::set<int> equipartite_differences(int modulus, int l);

std::vector<Piece> starter_c2cm_n_equiv_1(int m, int k, std::vector<std::string>* repairs = nullptr);
std::vector<Piece> starter_c2cm_equipartite(int m, int k, std::vector<std::string>* repairs = nullptr);
std::vector<Piece> deuces_starter(int n);

// Validates a full-rotation family; clashing K2 edges are swapped for the lexicographically
// smallest same-difference edge that keeps the piece disjoint. Throws StarterInvalid.
std::vector<Piece> validate_and_repair(std::vector<Piece> pieces, int modulus, const std::set<int>& required,
                                       std::vector<std::string>* repairs);

// The explicit small-case construction for (spec.n, spec.half_sizes), if one exists.
// Search-backed bases go through `store` when given. Throws UnsupportedCase otherwise.
StarterSet small_case_starter(const ProblemSpec& spec, FixtureStore* store = nullptr);

// Half-rotation starters found by search (cached in `store`); throws Exhausted or BudgetExceeded.
StarterSet search_backed_set(StarterLemma lemma, int n, std::vector<int> lens, Flavor flavor, FixtureStore* store);

// Lemma by its lemma_name; throws BadParameters for unknown names.
StarterLemma parse_lemma(const std::string& name);
std::vector<StarterLemma> all_lemmas();

// Starter family of `lemma` at parameter k (m only for the two (C2, Cm) families).
// Throws BadParameters when (m, k) is outside the family's range.
StarterSet starter_set(StarterLemma lemma, int m, int k, FixtureStore* store = nullptr);

// Differences per cycle and per K2 edge, in traversal order; used by inspect.
std::vector<std::vector<int>> cycle_differences(const Piece& p, int modulus);

}  // namespace hopseat
