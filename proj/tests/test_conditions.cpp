#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <chrono>
#include <map>

#include "hopseat/assembly.hpp"
#include "hopseat/conditions.hpp"
#include "hopseat/starters.hpp"

using namespace hopseat;

namespace {

Vertex x(long i, int M) { return Vertex::finite(i, M); }

ColoredCycle colored(int M, std::vector<long> idx, std::vector<Color> cols) {
    std::vector<Vertex> vs;
    for (long i : idx) vs.push_back(x(i, M));
    return make_cycle(vs, cols);
}

// The literal four-case table: two edges meeting at w.
bool table_ok(const DecoratedEdge& e, const DecoratedEdge& f, const Vertex& w) {
    auto toward = [&](const DecoratedEdge& arc) { return arc.v == w; };  // head at the shared vertex
    const Color a = e.color, b = f.color;
    if ((a == Color::Blue && b == Color::Pink) || (a == Color::Pink && b == Color::Blue)) return true;
    if (a == Color::Blue && b == Color::BlackArc) return toward(f);
    if (b == Color::Blue && a == Color::BlackArc) return toward(e);
    if (a == Color::Pink && b == Color::BlackArc) return !toward(f);
    if (b == Color::Pink && a == Color::BlackArc) return !toward(e);
    if (a == Color::BlackArc && b == Color::BlackArc) return toward(e) != toward(f);  // one enters, one leaves
    return false;
}

bool table_c1(const ColoredCycle& c) {
    const int l = c.length();
    for (int j = 0; j < l; ++j) {
        const DecoratedEdge& in = c.edges[(j + l - 1) % l];
        const DecoratedEdge& out = c.edges[j];
        if (!table_ok(in, out, c.verts[j])) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("check_c1 examples") {
    CHECK(check_c1(colored(9, {0, 1, 2, 3}, {Color::Blue, Color::Pink, Color::Blue, Color::Pink})));
    CHECK(check_c1(colored(9, {0, 1}, {Color::Pink, Color::Blue})));
    CHECK_FALSE(check_c1(colored(9, {0, 1, 2}, {Color::Blue, Color::Blue, Color::Pink})));
    CHECK_THROWS_AS(check_c1(make_cycle({x(0, 9), x(1, 9), x(2, 9)})), Error);
}

TEST_CASE("check_c1 agrees with the four-case table") {
    const auto t0 = std::chrono::steady_clock::now();
    const Color palette[4] = {Color::Blue, Color::Pink, Color::BlackArc, Color::BlackArc};
    long checked = 0;
    for (int l = 2; l <= 6; ++l) {
        std::vector<Vertex> vs;
        for (int i = 0; i < l; ++i) vs.push_back(x(i, 16));
        long total = 1;
        for (int i = 0; i < l; ++i) total *= 4;
        for (long code = 0; code < total; ++code) {
            ColoredCycle c = make_cycle(vs);
            long r = code;
            for (int j = 0; j < l; ++j, r /= 4) {
                c.edges[j].color = palette[r % 4];
                if (r % 4 == 3) std::swap(c.edges[j].u, c.edges[j].v);  // reverse arc
            }
            REQUIRE(check_c1(c) == table_c1(c));
            ++checked;
        }
    }
    CHECK(checked == 16 + 64 + 256 + 1024 + 4096);
    CHECK(std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() < 1.0);
}

TEST_CASE("check_c1 is rotation invariant") {
    for (int l = 2; l <= 5; ++l)
        for (int bitsv = 0; bitsv < (1 << l); ++bitsv) {
            std::vector<Vertex> vs;
            std::vector<int> bits;
            for (int i = 0; i < l; ++i) {
                vs.push_back(x(3 * i, 17));
                bits.push_back((bitsv >> i) & 1);
            }
            ColoredCycle c = cycle_from_bits(vs, bits);
            Piece p;
            p.cycles = {c};
            for (int r = 0; r < 17; ++r) CHECK(check_c1(shift_piece(p, r).cycles[0]) == check_c1(c));
        }
}

TEST_CASE("check_even_pink") {
    CHECK(check_even_pink(colored(9, {0, 1, 2, 3}, {Color::PlainPink, Color::PlainBlack, Color::PlainPink, Color::PlainBlack})));
    CHECK_FALSE(check_even_pink(colored(9, {0, 1, 2}, {Color::PlainPink, Color::PlainBlack, Color::PlainBlack})));
    CHECK(check_even_pink(colored(9, {0, 1}, {Color::PlainPink, Color::PlainBlack})));
}

TEST_CASE("coverage_full_rotation") {
    auto v = [](long i) { return x(i, 13); };
    Piece f;
    f.cycles.push_back(make_cycle({v(0), v(1), v(8), v(5)}));
    f.deuces = {{v(-1), v(-3), 0}, {v(-2), v(2), 1}};
    auto rep = coverage_full_rotation({f}, 13, all_differences(13));
    CHECK(rep.ok());
    for (int d = 1; d <= 6; ++d) CHECK(rep.usage[d] == 1);

    Piece g = f;
    g.deuces.clear();
    auto bad = coverage_full_rotation({g}, 13, all_differences(13));
    REQUIRE(bad.violations.size() == 2);
    CHECK(bad.violations[0].key == "2");
    CHECK(bad.violations[1].key == "4");

    CHECK(coverage_full_rotation({}, 13, {}).ok());
}

TEST_CASE("orbit table matches the enumerated orbit structure") {
    for (int n = 3; n <= 41; n += 2) {
        const int M = n - 1;
        OrbitTable t = orbit_table(n, true, 4);
        std::map<std::pair<std::string, int>, std::vector<int>> by;  // (color, difference or -1) -> sizes
        for (const auto& o : t.orbits) by[{o.color, o.difference.inf ? -1 : o.difference.d}].push_back(o.size);
        for (int d = 1; d <= (n - 3) / 2; ++d) {
            CHECK(by[{"pink", d}] == std::vector<int>{M});
            CHECK(by[{"blue", d}] == std::vector<int>{M});
            CHECK(by[{"black", d}] == std::vector<int>{M, M});
        }
        CHECK(by[{"pink", M / 2}] == std::vector<int>{M / 2});
        CHECK(by[{"blue", M / 2}] == std::vector<int>{M / 2});
        CHECK(by[{"black", M / 2}] == std::vector<int>{M});
        CHECK(by[{"pink", -1}] == std::vector<int>{M});
        CHECK(by[{"blue", -1}] == std::vector<int>{M});
        CHECK(by[{"black", -1}] == std::vector<int>{M, M});
        // Every decorated edge of 4K_n lies in exactly one orbit.
        long total = 0;
        for (const auto& o : t.orbits) total += o.size;
        CHECK(total == 4L * n * (n - 1) / 2);
    }
}

TEST_CASE("orbit of is consistent with the table") {
    const int n = 9, M = 8;
    OrbitTable t = orbit_table(n, true, 4);
    for (const auto& o : t.orbits) {
        DecoratedEdge e = o.representative;
        for (int r = 0; r < M; ++r) {
            DecoratedEdge s{e.u.shifted(r), e.v.shifted(r), e.color};
            CHECK(orbit_of(s, M).id == o.id);
        }
    }
}

TEST_CASE("starter conditions, flavor B example") {
    ProblemSpec spec = make_problem_spec(3, {2, 4});
    StarterSet s = small_case_starter(spec);
    CHECK(check_starter_conditions(s.pieces, Flavor::B, 9).ok());

    // Diameter edges moved into the 4-cycle break (B2).
    const int M = 8;
    Piece bad;
    bad.cycles.push_back(cycle_from_bits({x(0, M), x(4, M), x(1, M), x(5, M)}, {1, 0, 1, 0}));
    auto rep = check_starter_conditions({bad}, Flavor::B, 9);
    bool b2 = false;
    for (const auto& v : rep.violations) b2 = b2 || v.condition == "B2";
    CHECK(b2);
}

TEST_CASE("starter conditions, flavor A odd pink") {
    const int M = 8;
    Piece p;
    p.cycles.push_back(colored(M, {0, 1, 3}, {Color::PlainPink, Color::PlainBlack, Color::PlainBlack}));
    auto rep = check_starter_conditions({p}, Flavor::A, 9);
    bool a1 = false;
    for (const auto& v : rep.violations) a1 = a1 || v.condition == "A1";
    CHECK(a1);
}

TEST_CASE("starter conditions reject a foreign labeling") {
    Piece p;
    p.cycles.push_back(cycle_from_bits({x(0, 9), x(1, 9)}, {0, 1}));
    CHECK_THROWS_AS(check_starter_conditions({p}, Flavor::D, 9), Error);
}
