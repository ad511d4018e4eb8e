#include "hopseat/conditions.hpp"

#include <algorithm>
#include <sstream>

namespace hopseat {

std::string CoverageReport::summary() const {
    if (ok()) return "ok";
    std::ostringstream os;
    for (size_t i = 0; i < violations.size(); ++i) {
        const auto& v = violations[i];
        if (i) os << "; ";
        os << v.condition << " " << v.key << " expected " << v.expected << " found " << v.found;
    }
    return os.str();
}

bool check_c1(const ColoredCycle& cycle) {
    if (!cycle.fully_colored()) throw Error(ErrorCode::UncoloredEdge, "check_c1 needs blue/pink/black edges");
    const int l = cycle.length();
    for (int j = 0; j < l; ++j) {
        const Vertex& v = cycle.verts[j];
        const auto& in = cycle.edges[(j + l - 1) % l];
        const auto& out = cycle.edges[j];
        if (end_bit(in, v) == end_bit(out, v)) return false;
    }
    return true;
}

bool check_even_pink(const ColoredCycle& cycle) {
    if (cycle.length() < 3) return true;
    int pink = 0;
    for (const auto& e : cycle.edges) pink += e.color == Color::PlainPink;
    return pink % 2 == 0;
}

CoverageReport coverage_full_rotation(const std::vector<Piece>& pieces, int modulus, const std::set<int>& required) {
    CoverageReport rep;
    auto count = [&](const Vertex& a, const Vertex& b) {
        if (a.inf || b.inf || a.modulus != modulus || b.modulus != modulus) {
            rep.violations.push_back({"labeling", to_string(a) + to_string(b), 0, 1});
            return;
        }
        rep.usage[edge_difference(a, b, modulus).d]++;
    };
    for (const auto& p : pieces) {
        for (const auto& c : p.cycles)
            for (const auto& e : c.edges) count(e.u, e.v);
        for (const auto& d : p.deuces) count(d.a, d.b);
    }
    for (int d : required) {
        auto it = rep.usage.find(d);
        int found = it == rep.usage.end() ? 0 : it->second;
        if (found != 1) rep.violations.push_back({"coverage", std::to_string(d), 1, found});
    }
    for (const auto& [d, c] : rep.usage)
        if (!required.count(d)) rep.violations.push_back({"coverage", std::to_string(d), 0, c});
    return rep;
}

EdgeOrbit orbit_of(const DecoratedEdge& e, int M) {
    const Vertex& a = e.u;
    const Vertex& b = e.v;
    if (a == b) throw Error(ErrorCode::SameVertex, to_string(a));
    std::string base;
    switch (e.color) {
        case Color::Blue: base = "blue"; break;
        case Color::Pink: base = "pink"; break;
        case Color::PlainPink: base = "plain-pink"; break;
        case Color::PlainBlack: base = "plain-black"; break;
        case Color::BlackArc: base = "black"; break;
        case Color::None: throw Error(ErrorCode::UncoloredEdge, "orbit of an uncolored edge");
    }
    if (e.color == Color::BlackArc) {
        if (b.inf) return {base + ":to-inf", M, a.index};
        if (a.inf) return {base + ":from-inf", M, b.index};
        int r = ((b.index - a.index) % M + M) % M;
        return {base + ":+" + std::to_string(r), M, a.index};
    }
    if (a.inf || b.inf) return {base + ":inf", M, a.inf ? b.index : a.index};
    int r = ((b.index - a.index) % M + M) % M;
    if (M % 2 == 0 && r == M / 2) return {base + ":" + std::to_string(r), M / 2, std::min(a.index, b.index) % (M / 2)};
    if (r <= M / 2) return {base + ":" + std::to_string(r), M, a.index};
    return {base + ":" + std::to_string(M - r), M, b.index};
}

const char* flavor_name(Flavor f) {
    switch (f) {
        case Flavor::A: return "A";
        case Flavor::B: return "B";
        case Flavor::D: return "D";
    }
    return "?";
}

OrbitTable orbit_table(int n, bool fixes_infinity, int fold) {
    if (fold != 2 && fold != 4) throw Error(ErrorCode::BadParameters, "fold must be 2 or 4");
    OrbitTable t;
    t.modulus = fixes_infinity ? n - 1 : n;
    t.fixes_infinity = fixes_infinity;
    t.fold = fold;
    const int M = t.modulus;
    std::vector<Vertex> verts;
    for (int i = 0; i < M; ++i) verts.push_back(Vertex::finite(i, M));
    if (fixes_infinity) verts.push_back(Vertex::infinity(M));
    std::map<std::string, Orbit> by_id;
    auto add = [&](const DecoratedEdge& e, const std::string& color) {
        auto o = orbit_of(e, M);
        auto it = by_id.find(o.id);
        if (it == by_id.end()) {
            Orbit orb{o.id, color, edge_difference(e.u, e.v, M), 0, e};
            it = by_id.emplace(o.id, orb).first;
        }
        it->second.size++;
    };
    for (size_t i = 0; i < verts.size(); ++i)
        for (size_t j = i + 1; j < verts.size(); ++j) {
            const Vertex& a = verts[i];
            const Vertex& b = verts[j];
            if (fold == 4) {
                add({a, b, Color::Blue}, "blue");
                add({a, b, Color::Pink}, "pink");
                add({a, b, Color::BlackArc}, "black");
                add({b, a, Color::BlackArc}, "black");
            } else {
                add({a, b, Color::PlainPink}, "pink");
                add({a, b, Color::PlainBlack}, "black");
            }
        }
    for (auto& [id, o] : by_id) t.orbits.push_back(o);
    auto rank = [](const Orbit& o) { return o.difference.inf ? 1 << 20 : o.difference.d; };
    std::stable_sort(t.orbits.begin(), t.orbits.end(), [&](const Orbit& x, const Orbit& y) {
        if (rank(x) != rank(y)) return rank(x) < rank(y);
        return x.id < y.id;
    });
    return t;
}

namespace {

struct Hit {
    int size;
    std::vector<int> positions;
};

void check_pair_orbits(const std::map<std::string, Hit>& hits, const OrbitTable& table, const char* long_tag,
                       const char* short_tag, CoverageReport& rep) {
    const int M = table.modulus;
    for (const auto& o : table.orbits) {
        auto it = hits.find(o.id);
        std::vector<int> pos = it == hits.end() ? std::vector<int>{} : it->second.positions;
        if (o.size == M) {
            bool good = pos.size() == 2 && ((pos[0] - pos[1]) % M + M) % M == M / 2;
            if (!good) rep.violations.push_back({long_tag, o.id, 2, static_cast<int>(pos.size())});
        } else if (pos.size() != 1) {
            rep.violations.push_back({short_tag, o.id, 1, static_cast<int>(pos.size())});
        }
    }
}

}  // namespace

CoverageReport check_starter_conditions(const std::vector<Piece>& pieces, Flavor flavor, int n) {
    if (n % 2 == 0 || n < 3) throw Error(ErrorCode::BadParameters, "half rotation needs odd n >= 3");
    const int M = n - 1;
    CoverageReport rep;
    std::map<std::string, Hit> hits;
    int diameter_edges = 0;
    std::vector<const ColoredCycle*> diameter_cycles;
    for (const auto& p : pieces) {
        if (!p.deuces.empty()) rep.violations.push_back({"shape", p.label, 0, static_cast<int>(p.deuces.size())});
        for (const auto& c : p.cycles) {
            for (const auto& v : c.verts)
                if (v.modulus != M) throw Error(ErrorCode::WrongLabeling, "vertex modulus " + std::to_string(v.modulus) + " != n-1");
            if (flavor == Flavor::A) {
                for (const auto& e : c.edges)
                    if (e.color != Color::PlainPink && e.color != Color::PlainBlack)
                        throw Error(ErrorCode::UncoloredEdge, "flavor A needs pink/black 2-fold colors");
                if (!check_even_pink(c)) rep.violations.push_back({"A1", "cycle of length " + std::to_string(c.length()), 0, 1});
            } else {
                if (!check_c1(c)) rep.violations.push_back({flavor == Flavor::B ? "B1" : "D1", "cycle of length " + std::to_string(c.length()), 0, 1});
            }
            bool has_diameter = false;
            for (const auto& e : c.edges) {
                auto diff = edge_difference(e.u, e.v, M);
                rep.usage[diff.inf ? -1 : diff.d]++;
                if (flavor == Flavor::B && diff.is_diameter) {
                    ++diameter_edges;
                    has_diameter = true;
                    continue;
                }
                auto o = orbit_of(e, M);
                auto& h = hits[o.id];
                h.size = o.size;
                h.positions.push_back(o.position);
            }
            if (has_diameter) diameter_cycles.push_back(&c);
        }
    }
    if (flavor == Flavor::B) {
        bool in_two_cycle = diameter_cycles.size() == 1 && diameter_cycles[0]->length() == 2;
        if (diameter_edges != 2 || !in_two_cycle) rep.violations.push_back({"B2", std::to_string(M / 2), 2, diameter_edges});
        auto table = orbit_table(n, true, 4);
        for (const auto& o : table.orbits) {
            if (o.difference.is_diameter) continue;
            auto it = hits.find(o.id);
            int found = it == hits.end() ? 0 : static_cast<int>(it->second.positions.size());
            if (found != 1) rep.violations.push_back({"B3", o.id, 1, found});
        }
    } else if (flavor == Flavor::A) {
        check_pair_orbits(hits, orbit_table(n, true, 2), "A2", "A3", rep);
    } else {
        check_pair_orbits(hits, orbit_table(n, true, 4), "D2", "D3", rep);
    }
    return rep;
}

}  // namespace hopseat
