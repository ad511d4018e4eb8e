#include "hopseat/starters.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>

#include "hopseat/assembly.hpp"
#include "hopseat/search.hpp"

namespace hopseat {

const char* lemma_name(StarterLemma l) {
    switch (l) {
        case StarterLemma::C2CmMod1: return "c2cm-mod1";
        case StarterLemma::C2CmEquipartite: return "c2cm-equipartite";
        case StarterLemma::Deuces: return "deuces";
        case StarterLemma::C2C4Mod12: return "c2c4-12k9";
        case StarterLemma::C3C3Nine: return "c3c3-9";
        case StarterLemma::C4C5Nine: return "c4c5-9";
        case StarterLemma::C2C3C3Mod16: return "c2c3c3-16k1";
        case StarterLemma::C2C3C4Mod18: return "c2c3c4-18k1";
        case StarterLemma::C2C3C4Equipartite: return "c2c3c4-18k9";
        case StarterLemma::C2C4C4Mod20: return "c2c4c4-20k1";
        case StarterLemma::C2C3C5Mod20: return "c2c3c5-20k1";
        case StarterLemma::C2C8Mod20: return "c2c8-20k5";
        case StarterLemma::C2C4C4Mod20Half: return "c2c4c4-20k5";
        case StarterLemma::C2C3C5Mod20Half: return "c2c3c5-20k5";
    }
    return "?";
}

const char* development_name(Development d) {
    switch (d) {
        case Development::FullRotation: return "FullRotation";
        case Development::HalfA: return "HalfA";
        case Development::HalfB: return "HalfB";
        case Development::HalfD: return "HalfD";
        case Development::BlockCompose: return "BlockCompose";
        case Development::Subgroup: return "Subgroup";
    }
    return "?";
}

std::set<int> equipartite_differences(int modulus, int l) {
    std::set<int> out;
    for (int d = 1; d <= (modulus - 1) / 2; ++d)
        if (d % l != 0) out.insert(d);
    return out;
}

namespace {

using Idx = std::vector<long>;

struct Labeling {
    int modulus;
    Vertex x(long i) const { return Vertex::finite(i, modulus); }
    Vertex inf() const { return Vertex::infinity(modulus); }
    std::vector<Vertex> xs(const Idx& idx) const {
        std::vector<Vertex> out;
        for (long i : idx) out.push_back(x(i));
        return out;
    }
};

Piece plain_piece(const Labeling& z, const std::vector<Idx>& cycles, const std::vector<std::pair<long, long>>& group0,
                  const std::vector<std::pair<long, long>>& group1, const std::string& label) {
    Piece p;
    p.label = label;
    for (const auto& c : cycles) p.cycles.push_back(make_cycle(z.xs(c)));
    for (auto [a, b] : group0) p.deuces.push_back(Deuce{z.x(a), z.x(b), 0});
    for (auto [a, b] : group1) p.deuces.push_back(Deuce{z.x(a), z.x(b), 1});
    return p;
}

// 4-fold coloring given by one pink and one blue edge; black arcs run away from pink toward blue.
ColoredCycle pink_blue_cycle(const std::vector<Vertex>& verts, int pink, int blue) {
    const int l = static_cast<int>(verts.size());
    std::vector<int> bits(l, 0);
    bits[pink] = 1;
    for (int t = 0; t + 1 < l; ++t) {
        int j = (pink + t) % l, nx = (j + 1) % l;
        if (j == pink) bits[nx] = 0;
        else if (j == blue) bits[nx] = 1;
        else bits[nx] = bits[j];
    }
    ColoredCycle c = cycle_from_bits(verts, bits);
    if (!check_c1(c)) throw Error(ErrorCode::StarterInvalid, "pink/blue placement breaks C1");
    return c;
}

// 2-fold coloring: edge j pink when (j + offset) is even.
ColoredCycle alternating_two_fold(const std::vector<Vertex>& verts, int offset) {
    std::vector<Color> cols;
    for (size_t j = 0; j < verts.size(); ++j) cols.push_back((j + offset) % 2 == 0 ? Color::PlainPink : Color::PlainBlack);
    return make_cycle(verts, cols);
}

int diff_of(const Vertex& a, const Vertex& b, int M) { return edge_difference(a, b, M).d; }

StarterRecipe recipe(StarterLemma lemma, std::vector<int> type, int k, int n, Development dev) {
    StarterRecipe r;
    r.lemma = lemma;
    std::sort(type.begin(), type.end());
    r.cycle_type = std::move(type);
    r.k = k;
    r.n = n;
    r.development = dev;
    const bool half = dev == Development::HalfA || dev == Development::HalfB || dev == Development::HalfD;
    r.modulus = half ? n - 1 : n;
    r.has_infinity = half;
    if (dev == Development::FullRotation) r.differences = all_differences(n);
    return r;
}

void check_half(const StarterSet& s, Flavor f) {
    for (const auto& p : s.pieces)
        if (p.cycle_lengths() != s.recipe.cycle_type)
            throw Error(ErrorCode::StarterInvalid, std::string(lemma_name(s.recipe.lemma)) + ": piece '" + p.label + "' has the wrong shape");
    CoverageReport rep = check_starter_conditions(s.pieces, f, s.recipe.n);
    if (!rep.ok()) throw Error(ErrorCode::StarterInvalid, std::string(lemma_name(s.recipe.lemma)) + ": " + rep.summary());
    for (const auto& p : s.pieces)
        if (!piece_disjoint(p)) throw Error(ErrorCode::StarterInvalid, std::string(lemma_name(s.recipe.lemma)) + ": '" + p.label + "' not disjoint");
}

// Four T-pieces per (cycles, first 2-cycle, second 2-cycle), colored as in the four-copy scheme.
std::vector<Piece> four_t_pieces(const std::vector<std::vector<Vertex>>& cycles, std::pair<Vertex, Vertex> e1,
                                 std::pair<Vertex, Vertex> e2, const std::string& label) {
    std::vector<std::array<ColoredCycle, 4>> copies;
    for (const auto& c : cycles) copies.push_back(four_copy_colorings(c));
    std::vector<Piece> out;
    for (int t = 0; t < 4; ++t) {
        Piece p;
        p.label = label + "/T" + std::to_string(t + 1);
        for (const auto& cc : copies) p.cycles.push_back(cc[t]);
        auto e = t % 2 == 0 ? e1 : e2;
        p.cycles.push_back(t < 2 ? pink_blue_two_cycle(e.first, e.second) : black_two_cycle(e.first, e.second));
        out.push_back(std::move(p));
    }
    return out;
}

}  // namespace

std::vector<Piece> validate_and_repair(std::vector<Piece> pieces, int modulus, const std::set<int>& required,
                                       std::vector<std::string>* repairs) {
    for (auto& p : pieces) {
        for (const auto& c : p.cycles) {
            try {
                validate_cycle(c);
            } catch (const Error& e) {
                throw Error(ErrorCode::StarterInvalid, "piece '" + p.label + "': " + e.what());
            }
        }
        std::set<int> cyc;
        for (const auto& c : p.cycles)
            for (const auto& v : c.verts) cyc.insert(v.couple());
        for (size_t i = 0; i < p.deuces.size(); ++i) {
            auto clashes = [&](int a, int b, size_t self) {
                if (a == b || cyc.count(a) || cyc.count(b)) return true;
                for (size_t j = 0; j < p.deuces.size(); ++j) {
                    if (j == self || (p.deuces[j].group & 1) != (p.deuces[i].group & 1)) continue;
                    int c = p.deuces[j].a.couple(), d = p.deuces[j].b.couple();
                    if (a == c || a == d || b == c || b == d) return true;
                }
                return false;
            };
            Deuce& d = p.deuces[i];
            if (!clashes(d.a.couple(), d.b.couple(), i)) continue;
            const int want = diff_of(d.a, d.b, modulus);
            bool fixed = false;
            for (int a = 0; a < modulus && !fixed; ++a)
                for (int b = a + 1; b < modulus && !fixed; ++b) {
                    if (diff_of(Vertex::finite(a, modulus), Vertex::finite(b, modulus), modulus) != want) continue;
                    if (clashes(a, b, i)) continue;
                    if (repairs)
                        repairs->push_back("piece '" + p.label + "': K2 " + to_string(d.a) + to_string(d.b) + " -> x" +
                                           std::to_string(a) + "x" + std::to_string(b) + " (difference " + std::to_string(want) + ")");
                    d.a = Vertex::finite(a, modulus);
                    d.b = Vertex::finite(b, modulus);
                    fixed = true;
                }
            if (!fixed) throw Error(ErrorCode::StarterInvalid, "piece '" + p.label + "': no disjoint edge of difference " + std::to_string(want));
        }
        if (!piece_disjoint(p)) throw Error(ErrorCode::StarterInvalid, "piece '" + p.label + "' is not disjoint");
    }
    auto rep = coverage_full_rotation(pieces, modulus, required);
    if (!rep.ok()) throw Error(ErrorCode::StarterInvalid, rep.summary());
    return pieces;
}

std::vector<Piece> starter_c2cm_n_equiv_1(int m, int k, std::vector<std::string>* repairs) {
    if (m < 3 || k < 1) throw Error(ErrorCode::BadParameters, "need m >= 3 and k >= 1");
    const long n = 2L * (m + 2) * k + 1;
    const Labeling z{static_cast<int>(n)};
    std::vector<Piece> out;
    for (long i = 1; i <= k; ++i) {
        Idx c{1 - i};
        std::pair<long, long> e1, e2;
        const long j = i;
        switch (m % 4) {
            case 0:
                for (long a = 0; a <= (m - 4) / 2; a += 2) {
                    c.push_back(a * k + i);
                    if (a != (m - 4) / 2) c.push_back(-(a * k + i));
                }
                for (long a = (m + 4) / 2; a <= m; a += 2) {
                    c.push_back(-(a * k + i));
                    c.push_back(a * k + i);
                }
                if (m >= 8) {
                    e1 = {-((m - 6) / 2 * k + j), (m - 2) / 2 * k + j};
                    e2 = {-((m - 4) / 2 * k + j), m / 2 * k + j};
                } else {
                    e1 = j < k ? std::pair<long, long>{-(6 * k - j + 1), 6 * k - j} : std::pair<long, long>{-k, -3 * k};
                    e2 = {-(k + j), k + j};
                }
                break;
            case 2:
                for (long a = 0; a <= (m - 6) / 2; a += 2) {
                    c.push_back(a * k + i);
                    c.push_back(-(a * k + i));
                }
                c.push_back((m + 2) / 2 * k + i);
                for (long a = (m + 6) / 2; a <= m; a += 2) {
                    c.push_back(-(a * k + i));
                    c.push_back(a * k + i);
                }
                e1 = {-((m - 4) / 2 * k + j), (m - 4) / 2 * k + j};
                e2 = {-(m / 2 * k + j), m / 2 * k + j};
                break;
            case 1:
                for (long a = 0; a <= (m - 5) / 2; a += 2) {
                    c.push_back(a * k + i);
                    c.push_back(-(a * k + i));
                }
                c.push_back((m - 1) / 2 * k + i);
                for (long a = (m + 11) / 2, b = (m + 3) / 2; a <= m + 1; a += 2, b += 2) {
                    c.push_back(-(a * k + i));
                    c.push_back(b * k + i);
                }
                c.push_back((m - 1) * k + 3 * i - 1);
                e1 = {-((m + 1) / 2 * k + j - 1), (m - 3) / 2 * k + j};
                e2 = {-((m - 3) / 2 * k + 3 * j), (m + 1) / 2 * k + j};
                break;
            default:
                for (long a = 0; a <= (m - 7) / 2; a += 2) {
                    c.push_back(a * k + i);
                    c.push_back(-(a * k + i));
                }
                c.push_back((m - 3) / 2 * k + i);
                for (long a = (m + 9) / 2, b = (m + 1) / 2; a <= m + 1; a += 2, b += 2) {
                    c.push_back(-(a * k + i));
                    c.push_back(b * k + i);
                }
                c.push_back((m - 1) * k + 3 * i - 1);
                if (m >= 7) {
                    e1 = {-((m - 5) / 2 * k + j), (m - 1) / 2 * k + j};
                    e2 = {-((m + 3) / 2 * k + 3 * j), (m - 5) / 2 * k + j};
                } else {
                    e1 = {-(2 * k + j), -(2 * k - j)};
                    e2 = {-(k + 3 * j), k + j};
                }
                break;
        }
        out.push_back(plain_piece(z, {c}, {e1}, {e2}, "F" + std::to_string(i)));
    }
    return validate_and_repair(std::move(out), z.modulus, all_differences(z.modulus), repairs);
}

std::vector<Piece> starter_c2cm_equipartite(int m, int k, std::vector<std::string>* repairs) {
    if (m < 3 || m % 2 == 0 || k < 1) throw Error(ErrorCode::BadParameters, "need odd m >= 3 and k >= 1");
    const long l = 2L * k + 1;
    const long n = (m + 2) * l;
    const Labeling z{static_cast<int>(n)};
    std::vector<Piece> out;
    for (long i = 1; i <= k; ++i) {
        const long j = i;
        Idx c{1 - i};
        std::pair<long, long> e1, e2;
        if (m % 4 == 1) {
            for (long a = 0; a <= (m - 5) / 4; ++a) {
                c.push_back(a * (l - 1) + i);
                c.push_back(-(a * (l + 1) + i));
            }
            c.push_back((m - 1) / 4 * (l - 1) + i);
            if (m == 5) {
                c.push_back(2 * l + 3 * i + 1);
                e1 = {-(k + 3 * j), 3 * k + j};
                e2 = j < k ? std::pair<long, long>{-(3 * k + j + 3), k + j} : std::pair<long, long>{-(7 * k + 3), -5 * k};
            } else {
                for (long a = (m + 7) / 4; a <= (m - 1) / 2; ++a) {
                    c.push_back(-(a * (l - 1) + (m - 1) / 2 + 3 * i));
                    c.push_back(a * (l + 1) - (m - 1) / 2 - i);
                }
                c.push_back((m + 1) / 2 * l + i);
                // Differences (m-1)/2 l + 2j and (m-3)/2 l + 4j - 2 from the free vertex intervals.
                e1 = {-((m - 1) / 4 * (l + 1) - k + j), (m - 1) / 4 * (l - 1) + k + j};
                e2 = {-((m - 1) / 4 * (l + 1) - k + 3 * j - 3), (m - 5) / 4 * (l - 1) + k + j};
            }
        } else {
            for (long a = 0; a <= (m - 7) / 4 && m >= 7; ++a) {
                c.push_back(a * (l - 1) + i);
                c.push_back(-(a * (l + 1) + i));
            }
            c.push_back((m - 3) / 4 * (l - 1) + i);
            for (long a = (m + 5) / 4; a <= (m - 1) / 2; ++a) {
                c.push_back(-(a * (l - 1) + (m + 3) / 2 - 3 * i));
                c.push_back(a * (l + 1) - (m + 3) / 2 + 5 * i);
            }
            c.push_back(-((m + 1) / 2 * (l - 1) + (m + 3) / 2 - 3 * i));
            if (m >= 7) {
                // Differences (m-3)/2 l + 4j - 2 and (m+1)/2 l + j.
                e1 = {-((m - 3) / 4 * (l + 1) - k - 1 + j), (m - 3) / 4 * (l - 1) + k - 1 + 3 * j};
                e2 = {-((m - 3) / 4 * (l + 1) + j), (m + 5) / 4 * l - (m - 3) / 4};
            } else {
                e1 = {3 * k + 2 * j, 3 * k - 2 * j + 2};
                e2 = {-(k + 2), 3 * k + j};
            }
        }
        out.push_back(plain_piece(z, {c}, {e1}, {e2}, "F" + std::to_string(i)));
    }
    return validate_and_repair(std::move(out), z.modulus, equipartite_differences(z.modulus, static_cast<int>(l)), repairs);
}

std::vector<Piece> deuces_starter(int n) {
    if (n < 5 || n % 4 != 1) throw Error(ErrorCode::BadParameters, "deuces starter needs n = 4k + 1 with k >= 1");
    const Labeling z{n};
    const long k = (n - 1) / 4;
    std::vector<Piece> out;
    for (long j = 1; j <= k; ++j) out.push_back(plain_piece(z, {}, {{0, 2 * j - 1}}, {{-1, -1 - 2 * j}}, "F" + std::to_string(j)));
    return validate_and_repair(std::move(out), n, all_differences(n), nullptr);
}

std::vector<std::vector<int>> cycle_differences(const Piece& p, int modulus) {
    std::vector<std::vector<int>> out;
    auto d = [&](const Vertex& a, const Vertex& b) {
        Difference x = edge_difference(a, b, modulus);
        return x.inf ? -1 : x.d;
    };
    for (const auto& c : p.cycles) {
        std::vector<int> row;
        for (const auto& e : c.edges) row.push_back(d(e.u, e.v));
        out.push_back(row);
    }
    for (const auto& e : p.deuces) out.push_back({d(e.a, e.b)});
    return out;
}

namespace {

StarterSet c2c4_mod12(int k) {
    const int n = 12 * k + 9;
    StarterSet s;
    s.recipe = recipe(StarterLemma::C2C4Mod12, {2, 4}, k, n, Development::HalfB);
    const Labeling z{n - 1};
    for (long i = 1; i <= 2 * k + 1; ++i) {
        auto c = z.xs({0, i, 6L * k + 4, -(6L * k + 4 - i)});
        Vertex a = z.x(3L * k + 2);
        Vertex b = i == k + 1 ? z.inf() : z.x(5L * k + 3 + i);
        Piece p1, p2;
        p1.label = "G" + std::to_string(i) + "a";
        p1.cycles = {pink_blue_cycle(c, 0, 2), pink_blue_two_cycle(a, b)};
        p2.label = "G" + std::to_string(i) + "b";
        p2.cycles = {pink_blue_cycle(c, 1, 3), black_two_cycle(a, b)};
        s.pieces.push_back(std::move(p1));
        s.pieces.push_back(std::move(p2));
    }
    Piece fs;
    fs.label = "Fs";
    fs.cycles = {pink_blue_cycle(z.xs({0, 3L * k + 2, 6L * k + 4, -(3L * k + 2)}), 3, 1),
                 pink_blue_two_cycle(z.x(1), z.x(-(6L * k + 3)))};
    s.pieces.push_back(std::move(fs));
    check_half(s, Flavor::B);
    return s;
}

StarterSet c2c3c3_mod16(int k, std::vector<std::string>* repairs) {
    const int n = 16 * k + 1;
    StarterSet s;
    s.recipe = recipe(StarterLemma::C2C3C3Mod16, {2, 3, 3}, k, n, Development::FullRotation);
    const Labeling z{n};
    auto C = [&](long i) { return Idx{1 - i, -(8L * k - 3 * i + 1), i}; };
    auto E = [&](long i) { return i <= k ? std::pair<long, long>{2L * k + 1, 2L * k + 4 * i + 1} : std::pair<long, long>{2L * k + 1, -(14L * k - 4 * i)}; };
    for (long i = 1; i <= k; ++i)
        s.pieces.push_back(plain_piece(z, {C(2 * i - 1), C(2 * i)}, {E(2 * i - 1)}, {E(2 * i)}, "F" + std::to_string(i)));
    s.pieces = validate_and_repair(std::move(s.pieces), n, s.recipe.differences, repairs);
    return s;
}

StarterSet c2c3c4_mod18(int k, std::vector<std::string>* repairs) {
    const int n = 18 * k + 1;
    StarterSet s;
    s.recipe = recipe(StarterLemma::C2C3C4Mod18, {2, 3, 4}, k, n, Development::FullRotation);
    const Labeling z{n};
    const long t = (3L * k) / 4;
    for (long i = 1; i <= k; ++i) {
        Idx c4{0, 4 * i - 3, -1, 4 * i - 1};
        Idx c3{-2, 4L * k + 2 * i - 2, -(4L * k + 2 * i + 1)};
        std::pair<long, long> e{-3, -(6L * k + 2 * i + 2)};
        std::pair<long, long> e2 = i <= t ? std::pair<long, long>{-3, -(6L * k + 4 * i + 3)} : std::pair<long, long>{-3, 12L * k - 4 * i - 2};
        s.pieces.push_back(plain_piece(z, {c4, c3}, {e}, {e2}, "F" + std::to_string(i)));
    }
    s.pieces = validate_and_repair(std::move(s.pieces), n, s.recipe.differences, repairs);
    return s;
}

StarterSet c2c3c4_equipartite_outer(int k, std::vector<std::string>* repairs) {
    const int n = 18 * k + 9;
    StarterSet s;
    s.recipe = recipe(StarterLemma::C2C3C4Equipartite, {2, 3, 4}, k, n, Development::BlockCompose);
    s.recipe.differences = equipartite_differences(n, 2 * k + 1);
    s.recipe.block = 9;
    const Labeling z{n};
    for (long i = 1; i <= k; ++i) {
        Idx c4{0, 2 * i - 1, -1, 4L * k + 2 * i + 1};
        Idx c3{-2, 2L * k + i - 1, -(6L * k + i + 5)};
        std::pair<long, long> e{-3, -(4L * k - i + 5)};
        std::pair<long, long> e2{-(4L * k + 4), 4L * k - i};
        s.pieces.push_back(plain_piece(z, {c4, c3}, {e}, {e2}, "F" + std::to_string(i)));
    }
    s.pieces = validate_and_repair(std::move(s.pieces), n, s.recipe.differences, repairs);
    return s;
}

StarterSet c2c4c4_mod20(int k, std::vector<std::string>* repairs) {
    const int n = 20 * k + 1;
    StarterSet s;
    s.recipe = recipe(StarterLemma::C2C4C4Mod20, {2, 4, 4}, k, n, Development::FullRotation);
    const Labeling z{n};
    auto C = [&](long i) { return Idx{1 - i, i, -(2L * k + i), 4L * k + i}; };
    for (long i = 1; i <= k; ++i) {
        std::pair<long, long> e{6L * k + 1, 6L * k + 2 * i + 1};
        std::pair<long, long> e2{6L * k + 1, -(6L * k - 2 * i + 1)};
        s.pieces.push_back(plain_piece(z, {C(2 * i - 1), C(2 * i)}, {e}, {e2}, "F" + std::to_string(i)));
    }
    s.pieces = validate_and_repair(std::move(s.pieces), n, s.recipe.differences, repairs);
    return s;
}

StarterSet c2c3c5_mod20(int k, std::vector<std::string>* repairs) {
    const int n = 20 * k + 1;
    StarterSet s;
    s.recipe = recipe(StarterLemma::C2C3C5Mod20, {2, 3, 5}, k, n, Development::FullRotation);
    const Labeling z{n};
    auto E = [&](long i) { return i < 2 * k ? std::pair<long, long>{-5L * k, 8L * k - i + 1} : std::pair<long, long>{-5L * k, 5L * k}; };
    for (long i = 1; i <= k; ++i) {
        Idx c5{0, 2 * i - 1, -1, 2L * k + i - 1, -(3L * k + i)};
        Idx c3{-(k + i), 3L * k, -(8L * k - i + 2)};
        s.pieces.push_back(plain_piece(z, {c5, c3}, {E(2 * i - 1)}, {E(2 * i)}, "F" + std::to_string(i)));
    }
    s.pieces = validate_and_repair(std::move(s.pieces), n, s.recipe.differences, repairs);
    return s;
}

StarterSet c2c8_mod20(int k) {
    const int n = 20 * k + 5;
    StarterSet s;
    s.recipe = recipe(StarterLemma::C2C8Mod20, {2, 8}, k, n, Development::HalfA);
    const Labeling z{n - 1};
    const long h = 10L * k + 2;
    std::vector<std::pair<Vertex, Vertex>> es;
    for (long j = 1; j < k; ++j) es.push_back({z.x(-(4L * k + 1)), z.x(5L * k + 1 + j)});
    es.push_back({z.x(-(3L * k + 2)), z.inf()});
    for (long j = 1; j < k; ++j) es.push_back({z.x(6L * k + 1), z.x(-(5L * k + 1 - j))});
    es.push_back({z.x(7L * k), z.inf()});
    for (long j = 1; j <= k; ++j) es.push_back({z.x(-(4L * k + 1)), z.x(j)});
    for (long j = 1; j <= k; ++j) es.push_back({z.x(6L * k + 1), z.x(-(h - j))});
    es.push_back({z.x(1), z.x(-(10L * k + 1))});
    for (long i = 1; i <= 4L * k + 1; ++i) {
        auto c = z.xs({0, i, -(5L * k + 1), h - i, h, -(h - i), 5L * k + 1, -i});
        Piece p;
        p.label = "F" + std::to_string(i);
        p.cycles = {alternating_two_fold(c, 0), alternating_two_fold({es[i - 1].first, es[i - 1].second}, 0)};
        s.pieces.push_back(std::move(p));
    }
    check_half(s, Flavor::A);
    return s;
}

StarterSet c2c4c4_mod20_half(int k) {
    const int n = 20 * k + 5;
    StarterSet s;
    s.recipe = recipe(StarterLemma::C2C4C4Mod20Half, {2, 4, 4}, k, n, Development::HalfA);
    const Labeling z{n - 1};
    const long h = 10L * k + 2;
    std::vector<std::pair<Vertex, Vertex>> es;
    for (long j = 1; j < 2 * k; ++j) es.push_back({z.x(0), z.x(-(4L * k + 1 + j))});
    es.push_back({z.x(0), z.inf()});
    for (long j = 1; j < 2 * k; ++j) es.push_back({z.x(h), z.x(6L * k + 1 - j)});
    es.push_back({z.x(h), z.inf()});
    es.push_back({z.x(0), z.x(h)});
    for (long i = 1; i <= 4L * k + 1; ++i) {
        auto c = z.xs({1, i + 1, -(10L * k + 1), -(10L * k + 1 - i)});
        auto c2 = z.xs({-1, -(i + 1), 10L * k + 1, 10L * k + 1 - i});
        Piece p;
        p.label = "F" + std::to_string(i);
        p.cycles = {alternating_two_fold(c, 0), alternating_two_fold(c2, 1), alternating_two_fold({es[i - 1].first, es[i - 1].second}, 0)};
        s.pieces.push_back(std::move(p));
    }
    check_half(s, Flavor::A);
    return s;
}

StarterSet c2c3c5_mod20_half(int k) {
    const int n = 20 * k + 5;
    StarterSet s;
    s.recipe = recipe(StarterLemma::C2C3C5Mod20Half, {2, 3, 5}, k, n, Development::HalfB);
    const Labeling z{n - 1};
    std::vector<std::pair<Vertex, Vertex>> es;
    const Vertex hub = z.x(-(3L * k + 2));
    for (long i = 1; i <= 2L * k - 4; ++i) es.push_back({hub, z.x(4L * k + i)});
    es.push_back({z.x(3L * k + 1), z.x(5L * k + 2)});
    es.push_back({hub, z.x(7L * k - 3)});
    es.push_back({hub, z.x(7L * k - 2)});
    es.push_back({hub, z.inf()});
    for (long i = 1; i <= k; ++i) {
        auto c5 = z.xs({0, 2 * i - 1, -3, 2L * k + i - 1, -(3L * k + i + 2)});
        auto c3 = z.xs({-(k + i + 2), 3L * k, -(8L * k - i + 6)});
        auto ts = four_t_pieces({c5, c3}, es[i - 1], es[k + i - 1], "F" + std::to_string(i));
        s.pieces.insert(s.pieces.end(), ts.begin(), ts.end());
    }
    Piece fs;
    fs.label = "Fs";
    fs.cycles = {pink_blue_cycle(z.xs({1, -1, 10L * k, 10L * k + 2, -10L * k}), 4, 3),
                 pink_blue_cycle(z.xs({0, 10L * k + 1, -(10L * k + 1)}), 1, 2),
                 pink_blue_two_cycle(z.x(-(5L * k + 1)), z.x(5L * k + 1))};
    s.pieces.push_back(std::move(fs));
    check_half(s, Flavor::B);
    return s;
}

}  // namespace

StarterSet search_backed_set(StarterLemma lemma, int n, std::vector<int> lens, Flavor flavor, FixtureStore* store) {
    StarterSet s;
    Development dev = flavor == Flavor::A ? Development::HalfA : flavor == Flavor::B ? Development::HalfB : Development::HalfD;
    s.recipe = recipe(lemma, lens, 0, n, dev);
    SearchTask t;
    t.kind = SearchKind::Half;
    t.n = n;
    t.cycle_lengths = lens;
    t.flavor = flavor;
    t.node_budget = 10'000'000;
    auto res = search_cached(t, store);
    if (res.status != SearchStatus::Found)
        throw Error(res.status == SearchStatus::Exhausted ? ErrorCode::Exhausted : ErrorCode::BudgetExceeded, t.id() + ": " + status_name(res.status));
    s.pieces = res.pieces;
    return s;
}

StarterSet small_case_starter(const ProblemSpec& spec, FixtureStore* store) {
    std::vector<int> lens = spec.half_sizes;
    std::sort(lens.begin(), lens.end());
    const int n = spec.n;
    using V = std::vector<int>;
    auto with_log = [](StarterSet (*f)(int, std::vector<std::string>*), int k) {
        std::vector<std::string> log;
        StarterSet s = f(k, &log);
        s.repairs = std::move(log);
        return s;
    };
    if (lens == V{2, 4} && n % 12 == 9) return c2c4_mod12((n - 9) / 12);
    if (lens == V{3, 3} && n == 9) return search_backed_set(StarterLemma::C3C3Nine, 9, lens, Flavor::D, store);
    if (lens == V{4, 5} && n == 9) return search_backed_set(StarterLemma::C4C5Nine, 9, lens, Flavor::D, store);
    if (lens == V{2, 3, 3} && n % 16 == 1 && n > 1) return with_log(c2c3c3_mod16, (n - 1) / 16);
    if (lens == V{2, 3, 4} && n % 18 == 1 && n > 1) return with_log(c2c3c4_mod18, (n - 1) / 18);
    if (lens == V{2, 3, 4} && n % 18 == 9) {
        StarterSet base = search_backed_set(StarterLemma::C2C3C4Equipartite, 9, lens, Flavor::B, store);
        if (n == 9) return base;
        StarterSet s = with_log(c2c3c4_equipartite_outer, (n - 9) / 18);
        s.blocks.push_back(std::move(base));
        return s;
    }
    if (lens == V{2, 4, 4} && n % 20 == 1 && n > 1) return with_log(c2c4c4_mod20, (n - 1) / 20);
    if (lens == V{2, 3, 5} && n % 20 == 1 && n > 1) return with_log(c2c3c5_mod20, (n - 1) / 20);
    if (lens == V{2, 8} && n % 20 == 5 && n > 5) return c2c8_mod20((n - 5) / 20);
    if (lens == V{2, 4, 4} && n % 20 == 5 && n > 5) {
        const int k = (n - 5) / 20;
        StarterSet s = k >= 2 ? c2c4c4_mod20_half(k) : search_backed_set(StarterLemma::C2C4C4Mod20Half, n, lens, Flavor::A, store);
        s.recipe.k = k;
        return s;
    }
    if (lens == V{2, 3, 5} && n % 20 == 5 && n > 5) {
        const int k = (n - 5) / 20;
        StarterSet s = k >= 2 ? c2c3c5_mod20_half(k) : search_backed_set(StarterLemma::C2C3C5Mod20Half, n, lens, Flavor::B, store);
        s.recipe.k = k;
        return s;
    }
    throw Error(ErrorCode::UnsupportedCase, "no explicit construction for n=" + std::to_string(n));
}

std::vector<StarterLemma> all_lemmas() {
    return {StarterLemma::C2CmMod1,    StarterLemma::C2CmEquipartite,   StarterLemma::Deuces,
            StarterLemma::C2C4Mod12,   StarterLemma::C3C3Nine,          StarterLemma::C4C5Nine,
            StarterLemma::C2C3C3Mod16, StarterLemma::C2C3C4Mod18,       StarterLemma::C2C3C4Equipartite,
            StarterLemma::C2C4C4Mod20, StarterLemma::C2C3C5Mod20,       StarterLemma::C2C8Mod20,
            StarterLemma::C2C4C4Mod20Half, StarterLemma::C2C3C5Mod20Half};
}

StarterLemma parse_lemma(const std::string& name) {
    for (auto l : all_lemmas())
        if (name == lemma_name(l)) return l;
    throw Error(ErrorCode::BadParameters, "unknown lemma '" + name + "'");
}

StarterSet starter_set(StarterLemma lemma, int m, int k, FixtureStore* store) {
    auto need = [&](bool ok) {
        if (!ok) throw Error(ErrorCode::BadParameters, std::string(lemma_name(lemma)) + ": parameters out of range");
    };
    StarterSet s;
    switch (lemma) {
        case StarterLemma::C2CmMod1:
            need(m >= 3 && k >= 1);
            s.recipe = recipe(lemma, {2, m}, k, 2 * (m + 2) * k + 1, Development::FullRotation);
            s.pieces = starter_c2cm_n_equiv_1(m, k, &s.repairs);
            return s;
        case StarterLemma::C2CmEquipartite: {
            need(m >= 3 && m % 2 == 1 && k >= 1);
            const int n = (m + 2) * (2 * k + 1);
            s.recipe = recipe(lemma, {2, m}, k, n, Development::BlockCompose);
            s.recipe.differences = equipartite_differences(n, 2 * k + 1);
            s.recipe.block = m + 2;
            s.pieces = starter_c2cm_equipartite(m, k, &s.repairs);
            return s;
        }
        case StarterLemma::Deuces:
            need(k >= 1);
            s.recipe = recipe(lemma, {2}, k, 4 * k + 1, Development::FullRotation);
            s.pieces = deuces_starter(4 * k + 1);
            return s;
        default: break;
    }
    struct Family {
        int a, b, kmin;
        std::vector<int> lens;
    };
    static const std::map<StarterLemma, Family> families = {
        {StarterLemma::C2C4Mod12, {12, 9, 0, {2, 4}}},          {StarterLemma::C3C3Nine, {0, 9, 0, {3, 3}}},
        {StarterLemma::C4C5Nine, {0, 9, 0, {4, 5}}},            {StarterLemma::C2C3C3Mod16, {16, 1, 1, {2, 3, 3}}},
        {StarterLemma::C2C3C4Mod18, {18, 1, 1, {2, 3, 4}}},     {StarterLemma::C2C3C4Equipartite, {18, 9, 0, {2, 3, 4}}},
        {StarterLemma::C2C4C4Mod20, {20, 1, 1, {2, 4, 4}}},     {StarterLemma::C2C3C5Mod20, {20, 1, 1, {2, 3, 5}}},
        {StarterLemma::C2C8Mod20, {20, 5, 1, {2, 8}}},          {StarterLemma::C2C4C4Mod20Half, {20, 5, 1, {2, 4, 4}}},
        {StarterLemma::C2C3C5Mod20Half, {20, 5, 1, {2, 3, 5}}},
    };
    const Family& f = families.at(lemma);
    need(k >= f.kmin && (f.a > 0 || k == 0));
    const int n = f.a * k + f.b;
    int sum = 0;
    for (int x : f.lens) sum += x;
    return small_case_starter(make_problem_spec(n - sum, f.lens), store);
}

}  // namespace hopseat
