#include "hopseat/assembly.hpp"

#include <algorithm>
#include <map>

namespace hopseat {

SimpleGraph SimpleGraph::complete(int n) {
    SimpleGraph g;
    g.order = n;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.edges.emplace_back(i, j);
    return g;
}

SimpleGraph SimpleGraph::equipartite_residues(int n, int parts) {
    SimpleGraph g;
    g.order = n;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (i % parts != j % parts) g.edges.emplace_back(i, j);
    return g;
}

namespace {

// Per unordered pair: blue, pink, arc low->high, arc high->low.
struct EdgeCounter {
    int n;
    std::vector<std::array<int, 4>> cnt;
    explicit EdgeCounter(int n_) : n(n_), cnt(static_cast<size_t>(n_) * n_) {}

    bool add(const DecoratedEdge& e) {
        int a = e.u.couple(), b = e.v.couple();
        if (a < 0 || b < 0 || a >= n || b >= n || a == b) return false;
        int lo = std::min(a, b), hi = std::max(a, b);
        int slot;
        switch (e.color) {
            case Color::Blue: slot = 0; break;
            case Color::Pink: slot = 1; break;
            case Color::BlackArc: slot = a < b ? 2 : 3; break;
            default: return false;
        }
        cnt[static_cast<size_t>(lo) * n + hi][slot]++;
        return true;
    }
};

std::string pair_name(int a, int b) { return "{" + std::to_string(a) + "," + std::to_string(b) + "}"; }

}  // namespace

std::vector<std::string> hop_problems(const HOPDecomposition& d) { return hop_problems(d, SimpleGraph::complete(d.n)); }

std::vector<std::string> hop_problems(const HOPDecomposition& d, const SimpleGraph& g) {
    std::vector<std::string> out;
    EdgeCounter counter(g.order);
    for (const auto& p : d.pieces) {
        if (!p.deuces.empty()) out.push_back("piece '" + p.label + "' still has bare K2 edges");
        if (!piece_disjoint(p)) out.push_back("piece '" + p.label + "' is not vertex-disjoint");
        for (const auto& c : p.cycles) {
            try {
                validate_cycle(c);
                if (!check_c1(c)) out.push_back("piece '" + p.label + "' has a cycle violating C1");
            } catch (const Error& e) {
                out.push_back("piece '" + p.label + "': " + e.what());
                continue;
            }
            for (const auto& e : c.edges)
                if (!counter.add(e)) out.push_back("piece '" + p.label + "' has an edge outside the vertex range");
        }
        if (out.size() > 50) return out;
    }
    std::vector<char> in_graph(static_cast<size_t>(g.order) * g.order, 0);
    for (auto [a, b] : g.edges) in_graph[static_cast<size_t>(std::min(a, b)) * g.order + std::max(a, b)] = 1;
    for (int a = 0; a < g.order; ++a)
        for (int b = a + 1; b < g.order; ++b) {
            const auto& c = counter.cnt[static_cast<size_t>(a) * g.order + b];
            int want = in_graph[static_cast<size_t>(a) * g.order + b];
            for (int k = 0; k < 4; ++k)
                if (c[k] != want) {
                    static const char* names[] = {"blue", "pink", "arc->", "arc<-"};
                    out.push_back("edge " + pair_name(a, b) + " " + names[k] + " used " + std::to_string(c[k]) +
                                  " times, expected " + std::to_string(want));
                    if (out.size() > 50) return out;
                }
        }
    return out;
}

void require_hop_decomposition(const HOPDecomposition& d, const SimpleGraph& g) {
    auto problems = hop_problems(d, g);
    if (!problems.empty()) throw Error(ErrorCode::NotADecomposition, problems.front());
}

std::array<ColoredCycle, 4> four_copy_colorings(const std::vector<Vertex>& cycle) {
    const size_t l = cycle.size();
    if (l < 2) throw Error(ErrorCode::BadParameters, "cycle length < 2");
    std::vector<int> zero(l, 0), u(l, 1), v(l, 0);
    if (l % 2 == 0) {
        for (size_t j = 0; j < l; ++j) v[j] = static_cast<int>(j % 2);
    } else {
        u[0] = 0;
        for (size_t j = 0; j < l; ++j) v[j] = j % 2 == 0 ? 1 : 0;
    }
    std::vector<int> uv(l);
    for (size_t j = 0; j < l; ++j) uv[j] = u[j] ^ v[j];
    return {cycle_from_bits(cycle, zero), cycle_from_bits(cycle, u), cycle_from_bits(cycle, v), cycle_from_bits(cycle, uv)};
}

ColoredCycle pink_blue_two_cycle(const Vertex& a, const Vertex& b) { return cycle_from_bits({a, b}, {0, 1}); }

ColoredCycle black_two_cycle(const Vertex& a, const Vertex& b) { return cycle_from_bits({a, b}, {0, 0}); }

std::array<ColoredCycle, 2> lift_two_colored(const ColoredCycle& cycle) {
    validate_cycle(cycle);
    for (const auto& e : cycle.edges)
        if (e.color != Color::PlainPink && e.color != Color::PlainBlack)
            throw Error(ErrorCode::UncoloredEdge, "lift needs a pink/black 2-fold cycle");
    if (cycle.length() == 2) return {pink_blue_two_cycle(cycle.verts[0], cycle.verts[1]), black_two_cycle(cycle.verts[0], cycle.verts[1])};
    if (!check_even_pink(cycle)) throw Error(ErrorCode::OddPink, "odd number of pink edges");
    const int l = cycle.length();
    std::vector<int> bits(l, 0), comp(l, 1);
    for (int j = 0; j + 1 < l; ++j) bits[j + 1] = bits[j] ^ (cycle.edges[j].color == Color::PlainPink ? 1 : 0);
    for (int j = 0; j < l; ++j) comp[j] = 1 - bits[j];
    return {cycle_from_bits(cycle.verts, bits), cycle_from_bits(cycle.verts, comp)};
}

void require_plain_decomposition(const std::vector<Piece>& pieces, const SimpleGraph& g) {
    std::vector<int> cnt(static_cast<size_t>(g.order) * g.order, 0);
    auto add = [&](const Vertex& x, const Vertex& y) {
        int a = x.couple(), b = y.couple();
        if (a < 0 || b < 0 || a >= g.order || b >= g.order || a == b)
            throw Error(ErrorCode::NotADecomposition, "edge outside the graph's vertex range");
        cnt[static_cast<size_t>(std::min(a, b)) * g.order + std::max(a, b)]++;
    };
    for (const auto& p : pieces) {
        for (const auto& c : p.cycles)
            for (const auto& e : c.edges) add(e.u, e.v);
        for (const auto& d : p.deuces) add(d.a, d.b);
    }
    std::vector<int> want(cnt.size(), 0);
    for (auto [a, b] : g.edges) want[static_cast<size_t>(std::min(a, b)) * g.order + std::max(a, b)]++;
    for (int a = 0; a < g.order; ++a)
        for (int b = a + 1; b < g.order; ++b) {
            size_t k = static_cast<size_t>(a) * g.order + b;
            if (cnt[k] != want[k])
                throw Error(ErrorCode::NotADecomposition, "edge " + pair_name(a, b) + " used " + std::to_string(cnt[k]) +
                                                              " times, expected " + std::to_string(want[k]));
        }
}

HOPDecomposition assemble_combination(const std::vector<Piece>& pieces, const SimpleGraph& g) {
    require_plain_decomposition(pieces, g);
    HOPDecomposition out;
    out.n = g.order;
    bool first = true;
    for (const auto& p : pieces) {
        check_piece_disjoint(p);
        int count[2] = {0, 0};
        for (const auto& d : p.deuces) count[d.group & 1]++;
        if (count[0] != count[1]) throw Error(ErrorCode::NotDisjoint, "piece '" + p.label + "' has unequal matchings");
        std::vector<std::array<ColoredCycle, 4>> copies;
        for (const auto& c : p.cycles) {
            if (first && !c.verts.empty()) {
                out.modulus = c.verts[0].modulus;
                first = false;
            }
            if (c.length() < 3) throw Error(ErrorCode::BadParameters, "cycle part must have cycles of length >= 3");
            copies.push_back(four_copy_colorings(c.verts));
        }
        for (int k = 0; k < 4; ++k) {
            Piece t;
            t.label = p.label + "/T" + std::to_string(k + 1);
            for (const auto& cc : copies) t.cycles.push_back(cc[k]);
            int group = k % 2;
            for (const auto& d : p.deuces) {
                if ((d.group & 1) != group) continue;
                t.cycles.push_back(k < 2 ? pink_blue_two_cycle(d.a, d.b) : black_two_cycle(d.a, d.b));
                if (first) {
                    out.modulus = d.a.modulus;
                    first = false;
                }
            }
            out.pieces.push_back(std::move(t));
        }
    }
    for (const auto& p : out.pieces)
        for (const auto& v : p.vertices()) out.has_infinity = out.has_infinity || v.inf;
    return out;
}

Piece split_even_cycles(const Piece& p, int designated) {
    if (designated > static_cast<int>(p.cycles.size())) throw Error(ErrorCode::BadParameters, "more designated cycles than cycles");
    Piece q;
    q.label = p.label;
    q.factor_like = p.factor_like;
    for (int i = 0; i < static_cast<int>(p.cycles.size()); ++i) {
        const auto& c = p.cycles[i];
        if (i >= designated) {
            q.cycles.push_back(c);
            continue;
        }
        if (c.length() % 2 != 0) throw Error(ErrorCode::OddCycleDesignated, "cycle of length " + std::to_string(c.length()));
        for (int j = 0; j < c.length(); ++j) q.deuces.push_back(Deuce{c.verts[j], c.verts[(j + 1) % c.length()], j % 2});
    }
    q.deuces.insert(q.deuces.end(), p.deuces.begin(), p.deuces.end());
    return q;
}

std::vector<Piece> split_even_cycles(const std::vector<Piece>& pieces, int designated) {
    std::vector<Piece> out;
    for (const auto& p : pieces) out.push_back(split_even_cycles(p, designated));
    return out;
}

std::set<int> all_differences(int modulus) {
    std::set<int> out;
    for (int d = 1; d <= modulus / 2; ++d) out.insert(d);
    return out;
}

std::vector<Piece> develop_full_rotation(const std::vector<Piece>& pieces, int modulus) {
    return develop_full_rotation(pieces, modulus, all_differences(modulus));
}

std::vector<Piece> develop_full_rotation(const std::vector<Piece>& pieces, int modulus, const std::set<int>& required) {
    auto rep = coverage_full_rotation(pieces, modulus, required);
    if (!rep.ok()) throw Error(ErrorCode::CoverageFailure, rep.summary());
    std::vector<Piece> out;
    for (const auto& p : pieces)
        for (int i = 0; i < modulus; ++i) {
            Piece q = shift_piece(p, i);
            q.label = p.label + "+" + std::to_string(i);
            out.push_back(std::move(q));
        }
    return out;
}

namespace {

Piece shifted_labeled(const Piece& p, int i, const std::string& suffix = "") {
    Piece q = shift_piece(p, i);
    q.label = p.label + suffix + "+" + std::to_string(i);
    return q;
}

}  // namespace

HOPDecomposition develop_half_rotation(const std::vector<Piece>& pieces, Flavor flavor, int n) {
    auto rep = check_starter_conditions(pieces, flavor, n);
    if (!rep.ok()) throw Error(ErrorCode::ConditionFailure, std::string("flavor ") + flavor_name(flavor) + ": " + rep.summary());
    const int M = n - 1, h = M / 2;
    HOPDecomposition out;
    out.n = n;
    out.modulus = M;
    out.has_infinity = true;
    if (flavor == Flavor::D) {
        for (const auto& p : pieces)
            for (int i = 0; i < h; ++i) out.pieces.push_back(shifted_labeled(p, i));
    } else if (flavor == Flavor::B) {
        for (const auto& p : pieces) {
            int owner = -1;
            for (size_t c = 0; c < p.cycles.size(); ++c)
                for (const auto& e : p.cycles[c].edges)
                    if (edge_difference(e.u, e.v, M).is_diameter) owner = static_cast<int>(c);
            if (owner < 0) {
                for (int i = 0; i < M; ++i) out.pieces.push_back(shifted_labeled(p, i));
                continue;
            }
            Piece fs = p, fs2 = p;
            const auto& c = p.cycles[owner];
            fs.cycles[owner] = pink_blue_two_cycle(c.verts[0], c.verts[1]);
            fs2.cycles[owner] = black_two_cycle(c.verts[0], c.verts[1]);
            for (int i = 0; i < h; ++i) out.pieces.push_back(shifted_labeled(fs, i));
            for (int i = 0; i < h; ++i) out.pieces.push_back(shifted_labeled(fs2, h + i, "'"));
        }
    } else {
        for (const auto& p : pieces)
            for (int i = 0; i < h; ++i) {
                Piece q = shifted_labeled(p, i);
                Piece a, b;
                a.label = q.label + "/1";
                b.label = q.label + "/2";
                for (const auto& c : q.cycles) {
                    auto lifted = lift_two_colored(c);
                    a.cycles.push_back(lifted[0]);
                    b.cycles.push_back(lifted[1]);
                }
                out.pieces.push_back(std::move(a));
                out.pieces.push_back(std::move(b));
            }
    }
    return out;
}

HOPDecomposition compose_blockwise(int n, int b, const HOPDecomposition& inner, const HOPDecomposition& outer) {
    if (b <= 0 || n % b != 0 || (n / b) % 2 == 0) throw Error(ErrorCode::BlockMismatch, "block size must divide n with odd quotient");
    if (inner.n != b) throw Error(ErrorCode::BlockMismatch, "inner decomposition is not on b vertices");
    if (!outer.pieces.empty() && outer.n != n) throw Error(ErrorCode::BlockMismatch, "outer decomposition is not on n vertices");
    const int l = n / b;
    HOPDecomposition out;
    out.n = n;
    out.modulus = n;
    auto map_vertex = [&](const Vertex& v, int r) { return Vertex::finite(r + static_cast<long>(l) * v.couple(), n); };
    for (int r = 0; r < l; ++r)
        for (const auto& p : inner.pieces) {
            Piece q;
            q.label = "block" + std::to_string(r) + ":" + p.label;
            for (const auto& c : p.cycles) {
                ColoredCycle cc;
                for (const auto& v : c.verts) cc.verts.push_back(map_vertex(v, r));
                for (const auto& e : c.edges) cc.edges.push_back(DecoratedEdge{map_vertex(e.u, r), map_vertex(e.v, r), e.color});
                q.cycles.push_back(std::move(cc));
            }
            out.pieces.push_back(std::move(q));
        }
    for (const auto& p : outer.pieces) {
        for (const auto& v : p.vertices())
            if (v.inf || v.modulus != n) throw Error(ErrorCode::BlockMismatch, "outer piece not labeled over Z_n");
        out.pieces.push_back(p);
    }
    return out;
}

}  // namespace hopseat
