#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <functional>

#include "hopseat/model.hpp"

using namespace hopseat;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no error thrown");
    return ErrorCode::ParseError;
}

}  // namespace

TEST_CASE("problem spec counts") {
    auto a = make_problem_spec(3, {2});
    CHECK(a.n == 5);
    CHECK(a.m == 2);
    CHECK(a.gamma == 20);

    auto b = make_problem_spec(0, {5, 4});
    CHECK(b.n == 9);
    CHECK(b.m == 9);
    CHECK(b.gamma == 16);
    CHECK(b.half_sizes == std::vector<int>{4, 5});

    CHECK(code_of([] { make_problem_spec(2, {3, 3}); }) == ErrorCode::DivisibilityViolation);
    CHECK(code_of([] { make_problem_spec(3, {1}); }) == ErrorCode::InvalidTable);
    CHECK(code_of([] { make_problem_spec(4, {}); }) == ErrorCode::EmptyInstance);
}

TEST_CASE("problem spec round trip") {
    for (int s = 0; s <= 12; ++s)
        for (int a = 2; a <= 6; ++a)
            for (int b = a; b <= 6; ++b) {
                ProblemSpec p;
                try {
                    p = make_problem_spec(s, {b, a});
                } catch (const Error&) {
                    continue;
                }
                CHECK(p.n == s + a + b);
                CHECK(p.gamma * p.m == 2L * p.n * (p.n - 1));
                CHECK(make_problem_spec(p.s, p.half_sizes) == p);
            }
}

TEST_CASE("vertex reduction") {
    CHECK(Vertex::finite(-1, 13).index == 12);
    CHECK(Vertex::finite(27, 13).index == 1);
    CHECK(Vertex::infinity(8).couple() == 8);
    CHECK(Vertex::finite(3, 8).shifted(-5).index == 6);
    CHECK(Vertex::infinity(8).shifted(3).inf);
}

TEST_CASE("edge difference examples") {
    CHECK(edge_difference(Vertex::finite(2, 11), Vertex::finite(7, 11), 11).d == 5);
    CHECK(edge_difference(Vertex::finite(1, 11), Vertex::finite(10, 11), 11).d == 2);
    auto inf = edge_difference(Vertex::finite(3, 10), Vertex::infinity(10), 10);
    CHECK(inf.inf);
    CHECK(edge_difference(Vertex::finite(1, 10), Vertex::finite(6, 10), 10).is_diameter);
    CHECK_FALSE(edge_difference(Vertex::finite(1, 11), Vertex::finite(6, 11), 11).is_diameter);
    CHECK(code_of([] { edge_difference(Vertex::finite(4, 9), Vertex::finite(13, 9), 9); }) == ErrorCode::SameVertex);
}

TEST_CASE("edge difference is translation invariant") {
    for (int M = 2; M <= 64; ++M)
        for (int d = 1; d <= M / 2; ++d)
            for (int i = 0; i < M; ++i) {
                auto got = edge_difference(Vertex::finite(i, M), Vertex::finite(i + d, M), M);
                REQUIRE(got.d == d);
                REQUIRE(got.is_diameter == (M % 2 == 0 && d == M / 2));
            }
}

TEST_CASE("cycle construction and validation") {
    auto v = [](long i) { return Vertex::finite(i, 13); };
    ColoredCycle c = make_cycle({v(0), v(1), v(8), v(5)});
    CHECK(c.length() == 4);
    CHECK(c.edges[3].u == v(5));
    CHECK(c.edges[3].v == v(0));
    CHECK_FALSE(c.fully_colored());
    CHECK(code_of([&] { validate_cycle(make_cycle({v(0), v(1), v(14)})); }) == ErrorCode::SameVertex);
    CHECK(code_of([&] { make_cycle({v(0), v(1)}, {Color::Blue}); }) == ErrorCode::ArityMismatch);

    auto bits = std::vector<int>{0, 1, 1, 0};
    ColoredCycle d = cycle_from_bits({v(0), v(1), v(2), v(3)}, bits);
    CHECK(cycle_bits(d) == bits);
    // edge j carries the end bits (bits[j], !bits[j+1])
    CHECK(d.edges[0].color == Color::Blue);
    CHECK(d.edges[1].color == Color::BlackArc);
    CHECK(d.edges[1].u == v(2));
    CHECK(d.edges[2].color == Color::Pink);
    CHECK(d.edges[3].color == Color::BlackArc);
    CHECK(d.edges[3].u == v(3));
}

TEST_CASE("end bits") {
    auto a = Vertex::finite(2, 7), b = Vertex::finite(5, 7);
    CHECK(end_bit({a, b, Color::Blue}, a) == 0);
    CHECK(end_bit({a, b, Color::Pink}, b) == 1);
    CHECK(end_bit({a, b, Color::BlackArc}, a) == 0);
    CHECK(end_bit({a, b, Color::BlackArc}, b) == 1);
}

TEST_CASE("piece disjointness") {
    auto v = [](long i) { return Vertex::finite(i, 13); };
    Piece p;
    p.cycles.push_back(make_cycle({v(0), v(1), v(8), v(5)}));
    p.deuces = {{v(12), v(10), 0}, {v(11), v(2), 1}};
    CHECK(piece_disjoint(p));
    p.deuces.push_back({v(10), v(3), 0});
    CHECK_FALSE(piece_disjoint(p));
    p.deuces.back().group = 1;
    CHECK(piece_disjoint(p));
    p.deuces.push_back({v(4), v(8), 1});
    CHECK_FALSE(piece_disjoint(p));
    CHECK(code_of([&] { check_piece_disjoint(p); }) == ErrorCode::NotDisjoint);

    Piece q = shift_piece(p, 3);
    CHECK(q.cycles[0].verts[2] == v(11));
    CHECK(q.deuces[0].a == v(2));
}
