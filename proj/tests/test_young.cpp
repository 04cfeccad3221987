#include <set>

#include "doctest.h"
#include "hamming/rational.hpp"
#include "hamming/young.hpp"
#include "helpers.hpp"

using namespace hamming;
using namespace hamming::testing;

TEST_CASE("construction and invariants") {
    CHECK(YoungDiagram().cardinality() == 0);
    CHECK(YoungDiagram::from_rows({}).empty());

    auto r22 = YoungDiagram::rectangle(2, 2);
    CHECK(r22.rows() == std::vector<int>{2, 2});
    CHECK(r22.cardinality() == 4);

    auto t2 = YoungDiagram::triangle(2);
    CHECK(t2.rows() == std::vector<int>{2, 1});
    CHECK(diagram_cells(t2) == std::set<Cell>{{0, 0}, {1, 0}, {0, 1}});

    CHECK_THROWS_AS(YoungDiagram::from_rows({1, 2}), invalid_input);
    CHECK_THROWS_AS(YoungDiagram::from_rows({2, 0}), invalid_input);
    CHECK_THROWS_AS(YoungDiagram::from_rows({-1}), invalid_input);

    // lshape(a,b,c,d) = R_{a+b,c} u R_{a,c+d}
    auto l = YoungDiagram::lshape(2, 1, 2, 1);
    CHECK(l.rows() == std::vector<int>{3, 3, 2});

    auto t3 = YoungDiagram::triangle(3);
    CHECK(t3.contains(2, 0));
    CHECK(!t3.contains(2, 1));
    CHECK(t3.contains_pair(1, 1));
    CHECK(!t3.contains_pair(3, 0));
    CHECK(!t3.contains_pair(0, 3));
}

TEST_CASE("outer boundary") {
    CHECK(YoungDiagram().outer_boundary().empty());
    auto r22 = YoungDiagram::rectangle(2, 2);
    CHECK(r22.outer_boundary() ==
          std::vector<Cell>{{2, 0}, {2, 1}, {0, 2}, {1, 2}});
    auto t2 = YoungDiagram::triangle(2);
    CHECK(t2.outer_boundary() == std::vector<Cell>{{2, 0}, {1, 1}, {0, 2}});

    // Reference definition, exhaustively on all small diagrams.
    for (long long n = 0; n <= 6; ++n) {
        for (const auto& z : all_diagrams_of_size(n)) {
            std::set<Cell> expect;
            for (int v = 0; v <= z.height() + 1; ++v)
                for (int u = 0; u <= z.width() + 1; ++u)
                    if (!z.contains(u, v) &&
                        (z.contains(u - 1, v) || z.contains(u, v - 1)))
                        expect.insert({u, v});
            CHECK(cellset(z.outer_boundary()) == expect);
        }
    }
}

TEST_CASE("addable corners are incomparable and valid") {
    CHECK(YoungDiagram().addable_corners() == std::vector<Cell>{{0, 0}});
    for (long long n = 0; n <= 7; ++n) {
        for (const auto& z : all_diagrams_of_size(n)) {
            auto corners = z.addable_corners();
            auto boundary = cellset(z.outer_boundary());
            for (size_t i = 0; i < corners.size(); ++i) {
                if (n > 0) CHECK(boundary.count(corners[i]) == 1);
                // adding the corner keeps a valid diagram
                std::vector<int> rows = z.rows();
                if (corners[i].v == (int)rows.size())
                    rows.push_back(1);
                else
                    ++rows[corners[i].v];
                CHECK_NOTHROW(YoungDiagram::from_rows(rows));
                for (size_t j = i + 1; j < corners.size(); ++j) {
                    bool le = corners[i].u <= corners[j].u && corners[i].v <= corners[j].v;
                    bool ge = corners[i].u >= corners[j].u && corners[i].v >= corners[j].v;
                    CHECK(!le);
                    CHECK(!ge);
                    (void)le;
                }
            }
        }
    }
}

TEST_CASE("shrink") {
    auto r32 = YoungDiagram::rectangle(3, 2);
    CHECK(r32.shrink(1, YoungDiagram::Shrink::down) == YoungDiagram::rectangle(3, 1));

    // Oracle: cells of T_3 shifted by (1,1).
    auto t3 = YoungDiagram::triangle(3);
    std::set<Cell> shifted;
    for (const Cell& c : diagram_cells(t3))
        if (c.u >= 1 && c.v >= 1) shifted.insert({c.u - 1, c.v - 1});
    auto diag = t3.shrink(1, YoungDiagram::Shrink::diag);
    CHECK(diagram_cells(diag) == shifted);
    CHECK(diag == YoungDiagram::triangle(1));

    for (const auto& z : all_diagrams_of_size(5)) {
        CHECK(z.shrink(0, YoungDiagram::Shrink::down) == z);
        CHECK(z.shrink(0, YoungDiagram::Shrink::left) == z);
        CHECK(z.shrink(0, YoungDiagram::Shrink::diag) == z);
        CHECK(z.shrink(9, YoungDiagram::Shrink::diag).empty());
    }

    // down-then-left equals diag, exhaustively up to 8 cells
    for (long long n = 0; n <= 8; ++n)
        for (const auto& z : all_diagrams_of_size(n))
            for (int k = 0; k <= 3; ++k)
                CHECK(z.shrink(k, YoungDiagram::Shrink::down)
                          .shrink(k, YoungDiagram::Shrink::left) ==
                      z.shrink(k, YoungDiagram::Shrink::diag));
}

TEST_CASE("corner strip") {
    // Oracle: Z minus the translate of the diagonal shrink.
    for (long long n = 0; n <= 7; ++n) {
        for (const auto& z : all_diagrams_of_size(n)) {
            for (int k = 0; k <= 2; ++k) {
                auto cs = z.corner_strip(k);
                std::set<Cell> translate;
                for (const Cell& c : diagram_cells(cs.residual))
                    translate.insert({c.u + k, c.v + k});
                std::set<Cell> strip;
                for (const Cell& c : diagram_cells(z))
                    if (!translate.count(c)) strip.insert(c);
                CHECK((long long)strip.size() == cs.strip_cells);
            }
        }
    }
}

TEST_CASE("max rectangle") {
    auto r53 = YoungDiagram::rectangle(5, 3).max_rectangle();
    CHECK(r53.a == 5);
    CHECK(r53.b == 3);
    CHECK(r53.area == 15);

    // candidates (2,1) and (1,2) tie at area 2; smallest width wins
    auto t2 = YoungDiagram::triangle(2).max_rectangle();
    CHECK(t2.a == 1);
    CHECK(t2.b == 2);
    CHECK(t2.area == 2);

    auto t4 = YoungDiagram::triangle(4).max_rectangle();
    CHECK(t4.a == 2);  // tie with (3,2) broken by smallest a
    CHECK(t4.b == 3);
    CHECK(t4.area == 6);

    CHECK(YoungDiagram().max_rectangle().area == 0);

    for (long long n = 1; n <= 7; ++n)
        for (const auto& z : all_diagrams_of_size(n))
            CHECK(z.max_rectangle().area <= z.cardinality());
}

TEST_CASE("truncate") {
    auto t3 = YoungDiagram::triangle(3).truncate(-1, 1);
    CHECK(t3.diagram.rows() == std::vector<int>{3});
    CHECK(t3.removed == 3);

    auto idt = YoungDiagram::triangle(3).truncate(-1, -1);
    CHECK(idt.diagram == YoungDiagram::triangle(3));
    CHECK(idt.removed == 0);

    auto r = YoungDiagram::rectangle(2, 2).truncate(1, 1);
    CHECK(r.diagram == YoungDiagram::rectangle(1, 1));
    CHECK(r.removed == 3);

    RngStream rng = make_stream(11, 0, 0);
    for (int i = 0; i < 50; ++i) {
        auto z = random_diagram(rng, 9);
        int a = (int)rng.below(5) - 1;
        int b = (int)rng.below(5) - 1;
        auto t = z.truncate(a, b);
        CHECK(z.cardinality() == t.diagram.cardinality() + t.removed);
    }
}

TEST_CASE("transpose and partitions") {
    for (long long n = 0; n <= 7; ++n) {
        for (const auto& z : all_diagrams_of_size(n)) {
            CHECK(z.transpose().transpose() == z);
            CHECK(z.transpose().cardinality() == z.cardinality());
        }
    }
    CHECK(all_diagrams_of_size(7).size() == 15);
    CHECK(all_diagrams_of_size(6).size() == 11);
    CHECK(all_diagrams_of_size(0).size() == 1);
}

TEST_CASE("rationals") {
    CHECK(Rat::parse("3/10") == Rat(3, 10));
    CHECK(Rat::parse("0.25") == Rat(1, 4));
    CHECK(Rat::parse("1") == Rat(1));
    CHECK(Rat::parse("-0.5") == Rat(-1, 2));
    CHECK(Rat(1, 2) + Rat(1, 3) == Rat(5, 6));
    CHECK(Rat(7, 2).floor() == 3);
    CHECK(Rat(-7, 2).floor() == -4);
    CHECK(Rat(7, 2).ceil() == 4);
    CHECK(Rat(1, 3) < Rat(1, 2));
    CHECK(Rat(2, 4) == Rat(1, 2));
    CHECK((Rat(3, 4) * Rat(2, 3)).str() == "1/2");
    CHECK_THROWS_AS(Rat(1, 0), invalid_input);
    CHECK_THROWS_AS(Rat::parse("x"), invalid_input);
}
