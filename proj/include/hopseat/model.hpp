#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hopseat {

enum class ErrorCode {
    DivisibilityViolation,
    InvalidTable,
    EmptyInstance,
    SameVertex,
    UncoloredEdge,
    WrongLabeling,
    BadParameters,
    StarterInvalid,
    UnsupportedCase,
    NotADecomposition,
    NotDisjoint,
    OddCycleDesignated,
    CoverageFailure,
    ConditionFailure,
    BlockMismatch,
    OddPink,
    C1Violation,
    ArityMismatch,
    BrokenCouple,
    CountMismatch,
    UnsupportedParameters,
    BudgetExceeded,
    Exhausted,
    ParseError,
    FixtureInvalid,
    VerificationFailed,
};

const char* error_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what);
    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

struct ProblemSpec {
    int s = 0;
    std::vector<int> half_sizes;
    int n = 0;
    int m = 0;
    long gamma = 0;

    int t() const { return static_cast<int>(half_sizes.size()); }
    bool operator==(const ProblemSpec&) const = default;
};

ProblemSpec make_problem_spec(int s, std::vector<int> half_sizes);

// A vertex of a circulant labeling Z_M, or the fixed point x_inf.
struct Vertex {
    int index = 0;
    int modulus = 1;
    bool inf = false;

    static Vertex finite(long i, int modulus);
    static Vertex infinity(int modulus);

    // Couple number used by the lift: x_i -> i, x_inf -> modulus.
    int couple() const { return inf ? modulus : index; }
    Vertex shifted(long by) const;

    bool operator==(const Vertex& o) const { return inf == o.inf && modulus == o.modulus && (inf || index == o.index); }
    bool operator<(const Vertex& o) const { return couple() < o.couple(); }
};

std::string to_string(const Vertex& v);

struct Difference {
    bool inf = false;
    int d = 0;
    bool is_diameter = false;
    bool operator==(const Difference&) const = default;
};

Difference edge_difference(const Vertex& u, const Vertex& v, int modulus);

enum class Color { None, Blue, Pink, BlackArc, PlainPink, PlainBlack };

const char* color_name(Color c);

// For BlackArc, u is the tail and v the head. Other colors are unordered.
struct DecoratedEdge {
    Vertex u;
    Vertex v;
    Color color = Color::None;

    bool has_endpoint(const Vertex& w) const { return u == w || v == w; }
    bool operator==(const DecoratedEdge& o) const;
};

// End bit of an edge at one of its endpoints: blue 0, pink 1, arc 0 at tail and 1 at head.
int end_bit(const DecoratedEdge& e, const Vertex& at);

struct ColoredCycle {
    std::vector<Vertex> verts;
    std::vector<DecoratedEdge> edges;  // edges[j] joins verts[j] and verts[j+1]

    int length() const { return static_cast<int>(verts.size()); }
    bool fully_colored() const;
};

ColoredCycle make_cycle(std::vector<Vertex> verts);
ColoredCycle make_cycle(std::vector<Vertex> verts, std::vector<Color> colors);
// Coloring from outgoing end bits: edge j gets pattern (bits[j], !bits[j+1]).
ColoredCycle cycle_from_bits(std::vector<Vertex> verts, const std::vector<int>& bits);
std::vector<int> cycle_bits(const ColoredCycle& c);
void validate_cycle(const ColoredCycle& c);

struct Deuce {
    Vertex a;
    Vertex b;
    int group = 0;  // which of the two matchings in a Lemma-4.1 input
};

struct Piece {
    std::vector<ColoredCycle> cycles;
    std::vector<Deuce> deuces;
    std::string label;
    bool factor_like = true;

    std::vector<Vertex> vertices() const;
    std::vector<int> cycle_lengths() const;
};

// Throws NotDisjoint if a factor_like piece shares a vertex between components
// that have to be disjoint (cycles, a deuce with a cycle, deuces of one matching).
void check_piece_disjoint(const Piece& p);
bool piece_disjoint(const Piece& p);

Piece shift_piece(const Piece& p, long by);

struct Participant {
    int couple = 0;
    int bit = 0;
    auto operator<=>(const Participant&) const = default;
};

struct Night {
    std::vector<std::pair<Participant, Participant>> pairs;
    std::vector<std::vector<Participant>> tables;
    bool operator==(const Night&) const = default;
};

struct Schedule {
    ProblemSpec spec;
    std::vector<Night> nights;
    bool operator==(const Schedule&) const = default;
};

}  // namespace hopseat
