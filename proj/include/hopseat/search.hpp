#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hopseat/assembly.hpp"
#include "hopseat/conditions.hpp"
#include "hopseat/model.hpp"

namespace hopseat {

enum class SearchKind {
    // Base pieces over Z_n whose translates under the order-q subgroup decompose K_n.
    // Each piece: vertex-disjoint cycles plus two matchings of `deuces` edges each.
    Plain,
    // Half-rotation starters over Z_{n-1} + x_inf for flavor A (2-fold) or B/D (4-fold).
    Half,
    // Spanning factors of 4K_n^* over Z_n, developed under the order-q subgroup.
    Direct,
};

struct SearchTask {
    SearchKind kind = SearchKind::Plain;
    int n = 0;
    std::vector<int> cycle_lengths;
    int deuces = 0;
    int symmetry = 1;
    Flavor flavor = Flavor::B;
    long node_budget = 10'000'000;
    double time_budget = 0;  // seconds; 0 means unlimited
    unsigned seed = 1;

    std::string id() const;
    int modulus() const { return kind == SearchKind::Half ? n - 1 : n; }
};

enum class SearchStatus { Found, Exhausted, BudgetExceeded };

const char* status_name(SearchStatus s);

struct SearchResult {
    SearchStatus status = SearchStatus::BudgetExceeded;
    std::vector<Piece> pieces;
    long nodes = 0;
};

SearchResult search(const SearchTask& task);

// Throws (FixtureInvalid) unless `pieces` solve `task`.
void validate_solution(const SearchTask& task, const std::vector<Piece>& pieces);

// Translates every base piece by the order-q subgroup of Z_n.
std::vector<Piece> develop_subgroup(const std::vector<Piece>& pieces, int n, int q);

// Plain decomposition of K_n into cycles of the given lengths (one cycle per piece, cyclic lengths repeat).
SearchResult oracle_decompose(int n, const std::vector<int>& cycle_lengths, long node_budget = 10'000'000);

class FixtureStore {
public:
    static constexpr const char* kHeader = "hopseat-fixtures 1";

    FixtureStore() = default;
    static FixtureStore load(const std::string& path);
    void save(const std::string& path) const;

    std::optional<std::vector<Piece>> find(const SearchTask& task) const;
    void put(const SearchTask& task, const std::vector<Piece>& pieces);
    size_t size() const { return entries_.size(); }

    static std::string format_pieces(const std::vector<Piece>& pieces);
    static std::vector<Piece> parse_pieces(const std::vector<std::string>& lines, int modulus);

private:
    std::map<std::string, std::vector<Piece>> entries_;
};

// Looks up `task` in `store`, otherwise runs the search and caches a found solution.
SearchResult search_cached(const SearchTask& task, FixtureStore* store);

}  // namespace hopseat
