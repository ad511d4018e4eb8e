#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <functional>
#include <map>

#include "hopseat/assembly.hpp"
#include "hopseat/starters.hpp"

using namespace hopseat;

namespace {

Vertex x(long i, int M) { return Vertex::finite(i, M); }

int diff(const Vertex& a, const Vertex& b, int M) {
    int d = ((b.index - a.index) % M + M) % M;
    return std::min(d, M - d);
}

// Independent difference count: every edge of every cycle and deuce, straight from the vertex indices.
std::map<int, int> difference_usage(const std::vector<Piece>& pieces, int M) {
    std::map<int, int> out;
    for (const auto& p : pieces) {
        for (const auto& c : p.cycles)
            for (int j = 0; j < c.length(); ++j) ++out[diff(c.verts[j], c.verts[(j + 1) % c.length()], M)];
        for (const auto& d : p.deuces) ++out[diff(d.a, d.b, M)];
    }
    return out;
}

bool covers_exactly_once(const std::vector<Piece>& pieces, int M, const std::set<int>& required) {
    auto use = difference_usage(pieces, M);
    if (use.size() != required.size()) return false;
    for (int d : required)
        if (use[d] != 1) return false;
    return true;
}

bool pieces_disjoint(const std::vector<Piece>& pieces) {
    return std::all_of(pieces.begin(), pieces.end(), [](const Piece& p) { return piece_disjoint(p); });
}

ErrorCode code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no error thrown");
    return ErrorCode::ParseError;
}

std::set<int> range(int lo, int hi) {
    std::set<int> s;
    for (int d = lo; d <= hi; ++d) s.insert(d);
    return s;
}

}  // namespace

TEST_CASE("c2cm n = 2(m+2)k+1: m=3, k=1") {
    auto f = starter_c2cm_n_equiv_1(3, 1);
    REQUIRE(f.size() == 1);
    REQUIRE(f[0].cycles.size() == 1);
    CHECK(f[0].cycles[0].verts == std::vector<Vertex>{x(0, 11), x(1, 11), x(4, 11)});
    REQUIRE(f[0].deuces.size() == 2);
    CHECK(diff(f[0].deuces[0].a, f[0].deuces[0].b, 11) == 2);
    CHECK(diff(f[0].deuces[1].a, f[0].deuces[1].b, 11) == 5);
    CHECK(covers_exactly_once(f, 11, range(1, 5)));
}

TEST_CASE("c2cm n = 2(m+2)k+1: m=4, k=1") {
    std::vector<std::string> repairs;
    auto f = starter_c2cm_n_equiv_1(4, 1, &repairs);
    REQUIRE(f.size() == 1);
    CHECK(f[0].cycles[0].verts == std::vector<Vertex>{x(0, 13), x(1, 13), x(8, 13), x(5, 13)});
    REQUIRE(f[0].deuces.size() == 2);
    CHECK(f[0].deuces[0].a == x(-1, 13));
    CHECK(f[0].deuces[0].b == x(-3, 13));
    CHECK(f[0].deuces[1].a == x(-2, 13));
    CHECK(f[0].deuces[1].b == x(2, 13));
    CHECK(repairs.empty());
    CHECK(covers_exactly_once(f, 13, range(1, 6)));
    CHECK(code_of([] { starter_c2cm_n_equiv_1(4, 0); }) == ErrorCode::BadParameters);
    CHECK(code_of([] { starter_c2cm_n_equiv_1(2, 1); }) == ErrorCode::BadParameters);
}

TEST_CASE("c2cm n = 2(m+2)k+1 grid") {
    for (int m = 3; m <= 12; ++m)
        for (int k = 1; k <= 4; ++k) {
            CAPTURE(m);
            CAPTURE(k);
            std::vector<std::string> repairs;
            auto f = starter_c2cm_n_equiv_1(m, k, &repairs);
            const int M = 2 * (m + 2) * k + 1;
            CHECK(f.size() == static_cast<size_t>(k));
            CHECK(covers_exactly_once(f, M, range(1, (m + 2) * k)));
            CHECK(pieces_disjoint(f));
            for (const auto& p : f) CHECK(p.cycle_lengths() == std::vector<int>{m});
            CHECK(repairs.empty());
        }
}

TEST_CASE("c2cm equipartite examples") {
    auto f3 = starter_c2cm_equipartite(3, 1);
    CHECK(f3.size() == 1);
    CHECK(equipartite_differences(15, 3) == std::set<int>{1, 2, 4, 5, 7});
    CHECK(covers_exactly_once(f3, 15, {1, 2, 4, 5, 7}));

    auto f5 = starter_c2cm_equipartite(5, 1);
    REQUIRE(f5.size() == 1);
    auto ds = cycle_differences(f5[0], 21)[0];
    std::sort(ds.begin(), ds.end());
    CHECK(ds == std::vector<int>{1, 2, 4, 7, 10});

    CHECK(code_of([] { starter_c2cm_equipartite(4, 1); }) == ErrorCode::BadParameters);
    CHECK(code_of([] { starter_c2cm_equipartite(5, 0); }) == ErrorCode::BadParameters);
}

TEST_CASE("c2cm equipartite grid") {
    for (int m = 3; m <= 13; m += 2)
        for (int k = 1; k <= 4; ++k) {
            CAPTURE(m);
            CAPTURE(k);
            std::vector<std::string> repairs;
            auto f = starter_c2cm_equipartite(m, k, &repairs);
            const int l = 2 * k + 1, M = (m + 2) * l;
            std::set<int> S;
            for (int d = 1; d <= (M - 1) / 2; ++d)
                if (d % l != 0) S.insert(d);
            CHECK(equipartite_differences(M, l) == S);
            CHECK(f.size() == static_cast<size_t>(k));
            CHECK(covers_exactly_once(f, M, S));
            CHECK(pieces_disjoint(f));
            for (const auto& p : f) CHECK(p.cycle_lengths() == std::vector<int>{m});
            CHECK(repairs.empty());
        }
}

TEST_CASE("deuces starter") {
    for (int n : {5, 9, 13, 17, 21, 41}) {
        auto f = deuces_starter(n);
        CHECK(covers_exactly_once(f, n, range(1, (n - 1) / 2)));
        CHECK(pieces_disjoint(f));
        for (const auto& p : f) {
            CHECK(p.cycles.empty());
            CHECK(p.deuces.size() == 2);
        }
    }
    // n = 5: five translates of one 2-edge matching partition E(K5).
    auto d5 = develop_full_rotation(deuces_starter(5), 5);
    CHECK(d5.size() == 5);
    CHECK(code_of([] { deuces_starter(7); }) == ErrorCode::BadParameters);
}

TEST_CASE("validate_and_repair logs a swapped K2") {
    const int M = 13;
    Piece p;
    p.cycles.push_back(make_cycle({x(0, M), x(1, M), x(8, M), x(5, M)}));
    p.deuces = {{x(12, M), x(10, M), 0}, {x(5, M), x(9, M), 1}};  // difference 4, but x5 is on the cycle
    std::vector<std::string> log;
    auto fixed = validate_and_repair({p}, M, range(1, 6), &log);
    REQUIRE(log.size() == 1);
    CHECK(piece_disjoint(fixed[0]));
    CHECK(diff(fixed[0].deuces[1].a, fixed[0].deuces[1].b, M) == 4);
    CHECK(covers_exactly_once(fixed, M, range(1, 6)));
}

TEST_CASE("12k+9 (C2,C4) at k=0") {
    StarterSet s = small_case_starter(make_problem_spec(3, {2, 4}));
    CHECK(s.recipe.development == Development::HalfB);
    CHECK(s.recipe.modulus == 8);
    CHECK(s.recipe.has_infinity);
    REQUIRE(s.pieces.size() == 3);  // G1 in two colorings, then Fs
    const int M = 8;
    const Piece& g = s.pieces[0];
    CHECK(g.cycle_lengths() == std::vector<int>{2, 4});
    CHECK(g.cycles[0].verts == std::vector<Vertex>{x(0, M), x(1, M), x(4, M), x(5, M)});
    CHECK(g.cycles[1].verts == std::vector<Vertex>{x(2, M), Vertex::infinity(M)});
    const Piece& fs = s.pieces.back();
    CHECK(fs.cycles[0].verts == std::vector<Vertex>{x(0, M), x(2, M), x(4, M), x(6, M)});
    CHECK(fs.cycles[1].verts == std::vector<Vertex>{x(1, M), x(5, M)});
    CHECK(check_starter_conditions(s.pieces, Flavor::B, 9).ok());
}

TEST_CASE("16k+1 at k=1 repairs E2") {
    StarterSet s = starter_set(StarterLemma::C2C3C3Mod16, 0, 1);
    REQUIRE(s.pieces.size() == 1);
    const Piece& f = s.pieces[0];
    const int M = 17;
    CHECK(f.cycles[0].verts == std::vector<Vertex>{x(0, M), x(11, M), x(1, M)});
    CHECK(f.cycles[1].verts == std::vector<Vertex>{x(16, M), x(14, M), x(2, M)});
    REQUIRE(s.repairs.size() == 1);
    CHECK(s.repairs[0].find("x3x11 -> x3x12") != std::string::npos);
    CHECK(diff(f.deuces[1].a, f.deuces[1].b, M) == 8);
    CHECK(piece_disjoint(f));
    CHECK(covers_exactly_once(s.pieces, M, range(1, 8)));
}

TEST_CASE("every family validates") {
    for (StarterLemma l : all_lemmas()) {
        if (l == StarterLemma::C3C3Nine || l == StarterLemma::C4C5Nine) continue;  // search backed
        for (int k = 0; k <= 3; ++k) {
            const int m = (l == StarterLemma::C2CmMod1 || l == StarterLemma::C2CmEquipartite) ? 5 : 0;
            StarterSet s;
            try {
                s = starter_set(l, m, k);
            } catch (const Error& e) {
                CHECK(e.code() == ErrorCode::BadParameters);
                continue;
            }
            CAPTURE(lemma_name(l));
            CAPTURE(k);
            const StarterRecipe& r = s.recipe;
            CHECK(pieces_disjoint(s.pieces));
            switch (r.development) {
                case Development::FullRotation:
                case Development::BlockCompose:
                    CHECK(covers_exactly_once(s.pieces, r.modulus, r.differences));
                    break;
                case Development::HalfA: CHECK(check_starter_conditions(s.pieces, Flavor::A, r.n).ok()); break;
                case Development::HalfB: CHECK(check_starter_conditions(s.pieces, Flavor::B, r.n).ok()); break;
                case Development::HalfD: CHECK(check_starter_conditions(s.pieces, Flavor::D, r.n).ok()); break;
                case Development::Subgroup: break;
            }
            if (!(l == StarterLemma::C2C3C3Mod16 && k == 1)) CHECK(s.repairs.empty());
        }
    }
}

TEST_CASE("lemma names round trip") {
    for (StarterLemma l : all_lemmas()) CHECK(parse_lemma(lemma_name(l)) == l);
    CHECK(code_of([] { parse_lemma("nope"); }) == ErrorCode::BadParameters);
}

TEST_CASE("unsupported small case") {
    CHECK(code_of([] { small_case_starter(make_problem_spec(6, {2, 3})); }) == ErrorCode::UnsupportedCase);
}
