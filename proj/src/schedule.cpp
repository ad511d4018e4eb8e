#include "hopseat/schedule.hpp"

#include <algorithm>

#include "hopseat/conditions.hpp"

namespace hopseat {

std::pair<Participant, Participant> lift_edge(const DecoratedEdge& e) {
    const int i = e.u.couple(), j = e.v.couple();
    switch (e.color) {
        case Color::Blue: return {{i, 0}, {j, 0}};
        case Color::Pink: return {{i, 1}, {j, 1}};
        case Color::BlackArc: return {{i, 0}, {j, 1}};
        default: throw Error(ErrorCode::UncoloredEdge, "only blue, pink and black arcs lift");
    }
}

std::vector<Participant> lift_cycle(const ColoredCycle& c) {
    validate_cycle(c);
    if (!check_c1(c)) throw Error(ErrorCode::C1Violation, "cycle violates C1");
    std::vector<Participant> out;
    auto bits = cycle_bits(c);
    for (int j = 0; j < c.length(); ++j) {
        int v = c.verts[j].couple();
        out.push_back({v, 1 - bits[j]});
        out.push_back({v, bits[j]});
    }
    return out;
}

std::vector<LiftedFactor> lift_phi(const HOPDecomposition& d, const ProblemSpec& spec) {
    if (static_cast<long>(d.pieces.size()) != spec.gamma)
        throw Error(ErrorCode::ArityMismatch, std::to_string(d.pieces.size()) + " pieces for gamma " + std::to_string(spec.gamma));
    std::vector<LiftedFactor> out;
    for (const auto& p : d.pieces) {
        if (!p.deuces.empty() || p.cycle_lengths() != spec.half_sizes)
            throw Error(ErrorCode::ArityMismatch, "piece '" + p.label + "' does not have the requested cycle type");
        LiftedFactor f;
        for (const auto& c : p.cycles) f.cycles.push_back(lift_cycle(c));
        out.push_back(std::move(f));
    }
    return out;
}

LiftedFactor extend_with_couples(const LiftedFactor& f, const ProblemSpec& spec) {
    std::vector<int> seen(spec.n * 2, 0);
    auto mark = [&](const Participant& p) {
        if (p.couple < 0 || p.couple >= spec.n || p.bit < 0 || p.bit > 1)
            throw Error(ErrorCode::ArityMismatch, "participant out of range");
        seen[p.couple * 2 + p.bit]++;
    };
    for (const auto& c : f.cycles)
        for (const auto& p : c) mark(p);
    for (const auto& [a, b] : f.pairs) {
        mark(a);
        mark(b);
    }
    LiftedFactor out = f;
    for (int i = 0; i < spec.n; ++i) {
        int a = seen[2 * i], b = seen[2 * i + 1];
        if (a > 1 || b > 1) throw Error(ErrorCode::ArityMismatch, "participant of couple " + std::to_string(i) + " seated twice");
        if (a != b) throw Error(ErrorCode::BrokenCouple, "couple " + std::to_string(i) + " is half covered");
        if (a == 0) out.pairs.push_back({{i, 0}, {i, 1}});
    }
    if (static_cast<int>(out.pairs.size()) != spec.s)
        throw Error(ErrorCode::ArityMismatch, std::to_string(out.pairs.size()) + " couple tables instead of " + std::to_string(spec.s));
    return out;
}

Night canonical_night(const Night& night) {
    Night out;
    for (auto [a, b] : night.pairs) out.pairs.push_back(a < b ? std::make_pair(a, b) : std::make_pair(b, a));
    std::sort(out.pairs.begin(), out.pairs.end());
    for (const auto& t : night.tables) {
        if (t.empty()) {
            out.tables.push_back(t);
            continue;
        }
        const size_t l = t.size();
        size_t k = std::min_element(t.begin(), t.end()) - t.begin();
        std::vector<Participant> fwd, bwd;
        for (size_t j = 0; j < l; ++j) {
            fwd.push_back(t[(k + j) % l]);
            bwd.push_back(t[(k + l - j) % l]);
        }
        out.tables.push_back(std::min(fwd, bwd));
    }
    std::sort(out.tables.begin(), out.tables.end(), [](const auto& x, const auto& y) {
        if (x.size() != y.size()) return x.size() < y.size();
        return x < y;
    });
    return out;
}

Schedule emit_schedule(const std::vector<LiftedFactor>& factors, const ProblemSpec& spec) {
    if (static_cast<long>(factors.size()) != spec.gamma)
        throw Error(ErrorCode::CountMismatch, std::to_string(factors.size()) + " factors for gamma " + std::to_string(spec.gamma));
    Schedule s;
    s.spec = spec;
    for (const auto& f : factors) {
        LiftedFactor full = extend_with_couples(f, spec);
        Night night{full.pairs, full.cycles};
        s.nights.push_back(canonical_night(night));
    }
    std::sort(s.nights.begin(), s.nights.end(), [](const Night& a, const Night& b) {
        if (a.tables != b.tables) return a.tables < b.tables;
        return a.pairs < b.pairs;
    });
    return s;
}

std::vector<std::string> VerificationReport::failures() const {
    std::vector<std::string> out;
    if (!night_count_ok) out.push_back("NightCount");
    for (const auto& s : shape_failures) out.push_back("Shape: " + s);
    for (auto [night, couple] : spouse_failures)
        out.push_back("SpouseViolation: night " + std::to_string(night) + " couple " + std::to_string(couple));
    for (const auto& p : pair_offenders)
        out.push_back("PairCount: " + std::to_string(p.a.couple) + "." + std::to_string(p.a.bit) + " and " +
                      std::to_string(p.b.couple) + "." + std::to_string(p.b.bit) + " adjacent " + std::to_string(p.count) +
                      " times");
    return out;
}

VerificationReport verify_schedule(const Schedule& schedule, const ProblemSpec& spec) {
    VerificationReport rep;
    const int n = spec.n, P = 2 * n;
    rep.night_count_ok = static_cast<long>(schedule.nights.size()) == spec.gamma;
    std::vector<int> adj(static_cast<size_t>(P) * P, 0);
    auto id = [](const Participant& p) { return p.couple * 2 + p.bit; };
    auto valid = [&](const Participant& p) { return p.couple >= 0 && p.couple < n && (p.bit == 0 || p.bit == 1); };
    std::vector<int> want_sizes;
    for (int h : spec.half_sizes) want_sizes.push_back(2 * h);
    for (size_t k = 0; k < schedule.nights.size(); ++k) {
        const Night& night = schedule.nights[k];
        const std::string tag = "night " + std::to_string(k) + ": ";
        std::vector<int> seats(P, 0);
        std::vector<char> spouse_ok(n, 0);
        bool in_range = true;
        auto seat = [&](const Participant& p) {
            if (!valid(p)) {
                in_range = false;
                return;
            }
            seats[id(p)]++;
        };
        auto touch = [&](const Participant& a, const Participant& b) {
            if (!valid(a) || !valid(b) || id(a) == id(b)) return;
            if (a.couple == b.couple) {
                spouse_ok[a.couple] = 1;
                return;
            }
            adj[static_cast<size_t>(id(a)) * P + id(b)]++;
            adj[static_cast<size_t>(id(b)) * P + id(a)]++;
        };
        if (static_cast<int>(night.pairs.size()) != spec.s)
            rep.shape_failures.push_back(tag + std::to_string(night.pairs.size()) + " couple tables, expected " + std::to_string(spec.s));
        std::vector<int> sizes;
        for (const auto& t : night.tables) sizes.push_back(static_cast<int>(t.size()));
        std::sort(sizes.begin(), sizes.end());
        if (sizes != want_sizes) rep.shape_failures.push_back(tag + "round table sizes differ from the instance");
        for (const auto& [a, b] : night.pairs) {
            seat(a);
            seat(b);
            touch(a, b);
        }
        for (const auto& t : night.tables) {
            for (const auto& p : t) seat(p);
            const size_t l = t.size();
            if (l < 2) continue;
            for (size_t j = 0; j < l; ++j) {
                if (l == 2 && j == 1) break;
                touch(t[j], t[(j + 1) % l]);
            }
        }
        if (!in_range) rep.shape_failures.push_back(tag + "participant out of range");
        for (int p = 0; p < P; ++p)
            if (seats[p] != 1) {
                rep.shape_failures.push_back(tag + "participant " + std::to_string(p / 2) + "." + std::to_string(p % 2) +
                                             " seated " + std::to_string(seats[p]) + " times");
            }
        for (int c = 0; c < n; ++c)
            if (!spouse_ok[c]) rep.spouse_failures.push_back({static_cast<int>(k), c});
    }
    for (int a = 0; a < P; ++a)
        for (int b = a + 1; b < P; ++b) {
            if (a / 2 == b / 2) continue;
            int c = adj[static_cast<size_t>(a) * P + b];
            if (c != 1) rep.pair_offenders.push_back({{a / 2, a % 2}, {b / 2, b % 2}, c});
        }
    return rep;
}

}  // namespace hopseat
