#include "hopseat/model.hpp"

#include <algorithm>
#include <set>

namespace hopseat {

const char* error_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::DivisibilityViolation: return "DivisibilityViolation";
        case ErrorCode::InvalidTable: return "InvalidTable";
        case ErrorCode::EmptyInstance: return "EmptyInstance";
        case ErrorCode::SameVertex: return "SameVertex";
        case ErrorCode::UncoloredEdge: return "UncoloredEdge";
        case ErrorCode::WrongLabeling: return "WrongLabeling";
        case ErrorCode::BadParameters: return "BadParameters";
        case ErrorCode::StarterInvalid: return "StarterInvalid";
        case ErrorCode::UnsupportedCase: return "UnsupportedCase";
        case ErrorCode::NotADecomposition: return "NotADecomposition";
        case ErrorCode::NotDisjoint: return "NotDisjoint";
        case ErrorCode::OddCycleDesignated: return "OddCycleDesignated";
        case ErrorCode::CoverageFailure: return "CoverageFailure";
        case ErrorCode::ConditionFailure: return "ConditionFailure";
        case ErrorCode::BlockMismatch: return "BlockMismatch";
        case ErrorCode::OddPink: return "OddPink";
        case ErrorCode::C1Violation: return "C1Violation";
        case ErrorCode::ArityMismatch: return "ArityMismatch";
        case ErrorCode::BrokenCouple: return "BrokenCouple";
        case ErrorCode::CountMismatch: return "CountMismatch";
        case ErrorCode::UnsupportedParameters: return "UnsupportedParameters";
        case ErrorCode::BudgetExceeded: return "BudgetExceeded";
        case ErrorCode::Exhausted: return "Exhausted";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::FixtureInvalid: return "FixtureInvalid";
        case ErrorCode::VerificationFailed: return "VerificationFailed";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}

ProblemSpec make_problem_spec(int s, std::vector<int> half_sizes) {
    if (s < 0) throw Error(ErrorCode::InvalidTable, "negative number of 2-tables");
    for (int h : half_sizes)
        if (h < 2) throw Error(ErrorCode::InvalidTable, "round table half-size " + std::to_string(h) + " < 2");
    if (half_sizes.empty()) throw Error(ErrorCode::EmptyInstance, "no round tables");
    std::sort(half_sizes.begin(), half_sizes.end());
    ProblemSpec spec;
    spec.s = s;
    spec.half_sizes = std::move(half_sizes);
    for (int h : spec.half_sizes) spec.m += h;
    spec.n = s + spec.m;
    long twice_pairs = 2L * spec.n * (spec.n - 1);
    if (twice_pairs % spec.m != 0)
        throw Error(ErrorCode::DivisibilityViolation,
                    std::to_string(spec.m) + " does not divide 2n(n-1) = " + std::to_string(twice_pairs));
    spec.gamma = twice_pairs / spec.m;
    return spec;
}

Vertex Vertex::finite(long i, int modulus) {
    long r = i % modulus;
    if (r < 0) r += modulus;
    return Vertex{static_cast<int>(r), modulus, false};
}

Vertex Vertex::infinity(int modulus) { return Vertex{0, modulus, true}; }

Vertex Vertex::shifted(long by) const { return inf ? *this : finite(index + by, modulus); }

std::string to_string(const Vertex& v) { return v.inf ? "x_inf" : "x" + std::to_string(v.index); }

Difference edge_difference(const Vertex& u, const Vertex& v, int modulus) {
    if (u == v) throw Error(ErrorCode::SameVertex, to_string(u));
    if (u.inf || v.inf) return Difference{true, 0, false};
    int raw = ((v.index - u.index) % modulus + modulus) % modulus;
    int d = std::min(raw, modulus - raw);
    return Difference{false, d, modulus % 2 == 0 && d == modulus / 2};
}

const char* color_name(Color c) {
    switch (c) {
        case Color::None: return "none";
        case Color::Blue: return "blue";
        case Color::Pink: return "pink";
        case Color::BlackArc: return "black";
        case Color::PlainPink: return "plain-pink";
        case Color::PlainBlack: return "plain-black";
    }
    return "?";
}

bool DecoratedEdge::operator==(const DecoratedEdge& o) const {
    if (color != o.color) return false;
    if (color == Color::BlackArc) return u == o.u && v == o.v;
    return (u == o.u && v == o.v) || (u == o.v && v == o.u);
}

int end_bit(const DecoratedEdge& e, const Vertex& at) {
    switch (e.color) {
        case Color::Blue: return 0;
        case Color::Pink: return 1;
        case Color::BlackArc: return e.u == at ? 0 : 1;
        default: throw Error(ErrorCode::UncoloredEdge, "end bit of a non 4-fold edge");
    }
}

bool ColoredCycle::fully_colored() const {
    for (const auto& e : edges)
        if (e.color != Color::Blue && e.color != Color::Pink && e.color != Color::BlackArc) return false;
    return true;
}

ColoredCycle make_cycle(std::vector<Vertex> verts) {
    std::vector<Color> colors(verts.size(), Color::None);
    return make_cycle(std::move(verts), colors);
}

ColoredCycle make_cycle(std::vector<Vertex> verts, std::vector<Color> colors) {
    ColoredCycle c;
    const size_t l = verts.size();
    if (colors.size() != l) throw Error(ErrorCode::ArityMismatch, "one color per edge needed");
    for (size_t j = 0; j < l; ++j) c.edges.push_back(DecoratedEdge{verts[j], verts[(j + 1) % l], colors[j]});
    c.verts = std::move(verts);
    return c;
}

ColoredCycle cycle_from_bits(std::vector<Vertex> verts, const std::vector<int>& bits) {
    ColoredCycle c;
    const size_t l = verts.size();
    for (size_t j = 0; j < l; ++j) {
        const Vertex& a = verts[j];
        const Vertex& b = verts[(j + 1) % l];
        int x = bits[j] & 1;
        int y = 1 - (bits[(j + 1) % l] & 1);
        DecoratedEdge e;
        if (x == 0 && y == 0) e = {a, b, Color::Blue};
        else if (x == 1 && y == 1) e = {a, b, Color::Pink};
        else if (x == 0) e = {a, b, Color::BlackArc};
        else e = {b, a, Color::BlackArc};
        c.edges.push_back(e);
    }
    c.verts = std::move(verts);
    return c;
}

std::vector<int> cycle_bits(const ColoredCycle& c) {
    std::vector<int> bits;
    for (int j = 0; j < c.length(); ++j) bits.push_back(end_bit(c.edges[j], c.verts[j]));
    return bits;
}

void validate_cycle(const ColoredCycle& c) {
    const size_t l = c.verts.size();
    if (l < 2 || c.edges.size() != l) throw Error(ErrorCode::ArityMismatch, "cycle needs >= 2 vertices and one edge per step");
    std::set<std::pair<bool, int>> seen;
    for (const auto& v : c.verts)
        if (!seen.insert({v.inf, v.inf ? 0 : v.index}).second) throw Error(ErrorCode::SameVertex, "repeated vertex " + to_string(v));
    for (size_t j = 0; j < l; ++j) {
        const auto& e = c.edges[j];
        const Vertex& a = c.verts[j];
        const Vertex& b = c.verts[(j + 1) % l];
        if (!((e.u == a && e.v == b) || (e.u == b && e.v == a)))
            throw Error(ErrorCode::ArityMismatch, "edge endpoints do not match the vertex sequence");
    }
}

std::vector<Vertex> Piece::vertices() const {
    std::vector<Vertex> out;
    for (const auto& c : cycles) out.insert(out.end(), c.verts.begin(), c.verts.end());
    for (const auto& d : deuces) {
        out.push_back(d.a);
        out.push_back(d.b);
    }
    return out;
}

std::vector<int> Piece::cycle_lengths() const {
    std::vector<int> out;
    for (const auto& c : cycles) out.push_back(c.length());
    std::sort(out.begin(), out.end());
    return out;
}

bool piece_disjoint(const Piece& p) {
    std::set<int> cyc;
    for (const auto& c : p.cycles)
        for (const auto& v : c.verts)
            if (!cyc.insert(v.couple()).second) return false;
    std::set<int> group[2];
    for (const auto& d : p.deuces) {
        if (d.a == d.b) return false;
        for (const Vertex* v : {&d.a, &d.b}) {
            if (cyc.count(v->couple())) return false;
            if (!group[d.group & 1].insert(v->couple()).second) return false;
        }
    }
    return true;
}

void check_piece_disjoint(const Piece& p) {
    if (!piece_disjoint(p)) throw Error(ErrorCode::NotDisjoint, "components of piece '" + p.label + "' share a vertex");
}

Piece shift_piece(const Piece& p, long by) {
    Piece q = p;
    for (auto& c : q.cycles) {
        for (auto& v : c.verts) v = v.shifted(by);
        for (auto& e : c.edges) {
            e.u = e.u.shifted(by);
            e.v = e.v.shifted(by);
        }
    }
    for (auto& d : q.deuces) {
        d.a = d.a.shifted(by);
        d.b = d.b.shifted(by);
    }
    return q;
}

}  // namespace hopseat
