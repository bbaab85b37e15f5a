#include <doctest.h>

#include "helpers.hpp"
#include "tvg/graphs.hpp"

using namespace tvg;
using namespace tvgtest;

TEST_CASE("make_edge normalizes and validates") {
    CHECK(make_edge(3, 1) == Edge{1, 3});
    CHECK(make_edge(0, 2) == Edge{0, 2});
    CHECK_THROWS_AS(make_edge(2, 2), InvalidInput);
    CHECK_THROWS_AS(make_edge(-1, 2), InvalidInput);
}

TEST_CASE("make_tree validates shape, range, and acyclicity") {
    CHECK_NOTHROW(make_tree(3, {{0, 1}, {1, 2}}));
    CHECK(make_tree(3, {{1, 2}, {0, 1}}).edges == std::vector<Edge>{{0, 1}, {1, 2}});
    CHECK_THROWS_AS(make_tree(0, {}), InvalidInput);
    CHECK_THROWS_AS(make_tree(3, {{0, 1}}), InvalidInput);
    CHECK_THROWS_AS(make_tree(3, {{0, 1}, {0, 3}}), InvalidInput);
    CHECK_THROWS_AS(make_tree(3, {{0, 1}, {0, 1}}), InvalidInput);
    CHECK_THROWS_AS(make_tree(4, {{0, 1}, {1, 2}, {0, 2}}), InvalidInput);
}

TEST_CASE("make_matching validates coverage") {
    CHECK(make_matching(4, {{2, 3}, {0, 1}}).edges == std::vector<Edge>{{0, 1}, {2, 3}});
    CHECK_THROWS_AS(make_matching(3, {{0, 1}}), InvalidInput);
    CHECK_THROWS_AS(make_matching(4, {{0, 1}}), InvalidInput);
    CHECK_THROWS_AS(make_matching(4, {{0, 1}, {1, 2}}), InvalidInput);
    CHECK_THROWS_AS(make_matching(4, {{0, 1}, {0, 1}}), InvalidInput);
    CHECK_THROWS_AS(make_matching(4, {{0, 1}, {2, 4}}), InvalidInput);
}

TEST_CASE("cost functions evaluate and name themselves") {
    CHECK(CostFunction::identity()(2.5) == 2.5);
    CHECK(CostFunction::identity().name() == "identity");
    CHECK(CostFunction::square()(3.0) == 9.0);
    CHECK(CostFunction::square().name() == "square");
    CHECK(CostFunction::sqrt()(9.0) == 3.0);
    CHECK(CostFunction::sqrt().name() == "sqrt");
}

TEST_CASE("table cost function interpolates and extrapolates end slopes") {
    const auto f = CostFunction::table({{0, 0}, {1, 1}, {2, 4}});
    CHECK(f.name() == "table");
    CHECK(f(0.0) == 0.0);
    CHECK(f(0.5) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(f(1.0) == 1.0);
    CHECK(f(1.5) == doctest::Approx(2.5).epsilon(1e-15));
    CHECK(f(2.0) == 4.0);
    CHECK(f(3.0) == doctest::Approx(7.0).epsilon(1e-15));   // right slope 3
    CHECK(f(-1.0) == doctest::Approx(-1.0).epsilon(1e-15)); // left slope 1
    CHECK_THROWS_AS(CostFunction::table({{0, 0}}), InvalidInput);
    CHECK_THROWS_AS(CostFunction::table({{0, 0}, {0, 1}}), InvalidInput);
    CHECK_THROWS_AS(CostFunction::table({{0, 1}, {1, 1}}), InvalidInput);
}

TEST_CASE("cost sums f over stored edges") {
    const PointSet sq = make_point_set({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
    CHECK(cost(sq, {{0, 2}, {1, 3}}) == doctest::Approx(2.0 * std::sqrt(2.0)).epsilon(1e-15));
    CHECK(cost(sq, {{0, 1}, {2, 3}}) == 2.0);
    CHECK(cost(sq, {{0, 2}, {1, 3}}, CostFunction::square()) ==
          doctest::Approx(4.0).epsilon(1e-15));
    CHECK(cost(sq, {}) == 0.0);
}

TEST_CASE("max_sum_tree pinned instances") {
    SUBCASE("three collinear points") {
        const PointSet ps = make_point_set({{0, 0}, {1, 0}, {2, 0}});
        const Tree t = max_sum_tree(ps);
        CHECK(t.edges == std::vector<Edge>{{0, 1}, {0, 2}});
        CHECK(cost(ps, t.edges) == doctest::Approx(3.0).epsilon(1e-15));
    }
    SUBCASE("rhombus star") {
        const PointSet ps = make_point_set({{-1, 0}, {1, 0}, {0, 0.5}, {0, -0.5}});
        const Tree t = max_sum_tree(ps);
        CHECK(t.edges == std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}});
        CHECK(cost(ps, t.edges) == doctest::Approx(4.2360679774997898).epsilon(1e-15));
    }
    SUBCASE("unit square takes both diagonals") {
        const PointSet ps = make_point_set({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
        const Tree t = max_sum_tree(ps);
        CHECK(t.edges == std::vector<Edge>{{0, 1}, {0, 2}, {1, 3}});
        CHECK(cost(ps, t.edges) ==
              doctest::Approx(1.0 + 2.0 * std::sqrt(2.0)).epsilon(1e-15));
    }
    SUBCASE("two points") {
        const Tree t = max_sum_tree(make_point_set({{0, 0}, {5, 0}}));
        CHECK(t.edges == std::vector<Edge>{{0, 1}});
    }
    CHECK_THROWS_AS(max_sum_tree(make_point_set({{0, 0}})), InvalidInput);
}

TEST_CASE("max_sum_tree edges do not depend on the increasing transform") {
    auto eng = rng(301);
    for (int it = 0; it < 40; ++it) {
        const PointSet ps = random_distinct_set(eng, uniform_int(eng, 2, 7),
                                                uniform_int(eng, 2, 3));
        const Tree base = max_sum_tree(ps);
        CHECK(max_sum_tree(ps, CostFunction::square()).edges == base.edges);
        CHECK(max_sum_tree(ps, CostFunction::sqrt()).edges == base.edges);
    }
}

TEST_CASE("max_sum_tree matches the exhaustive oracle") {
    auto eng = rng(302);
    for (int it = 0; it < 60; ++it) {
        const int n = uniform_int(eng, 2, 7);
        const int d = uniform_int(eng, 2, 4);
        const PointSet ps = random_distinct_set(eng, n, d);
        const CostFunction& f =
            (it % 3 == 0) ? CostFunction::identity()
                          : (it % 3 == 1) ? CostFunction::square() : CostFunction::sqrt();
        const Tree fast = max_sum_tree(ps, f);
        const Tree slow = brute_force_tree(ps, f);
        CAPTURE(it);
        CHECK(cost(ps, fast.edges, f) ==
              doctest::Approx(cost(ps, slow.edges, f)).epsilon(1e-12));
        CHECK(fast.edges == slow.edges);
    }
}

TEST_CASE("tie-broken trees agree between greedy and oracle") {
    // Both tie cases have several optimal trees; the lexicographic rule must
    // make the two routes coincide exactly.
    for (const PointSet& ps : {make_point_set({{-1, 0}, {1, 0}, {0, 0.5}, {0, -0.5}}),
                               make_point_set({{0, 0}, {1, 0}, {1, 1}, {0, 1}})}) {
        CHECK(max_sum_tree(ps).edges == brute_force_tree(ps).edges);
    }
}

TEST_CASE("max_sum_matching pinned instances") {
    SUBCASE("unit square crosses") {
        const PointSet ps = make_point_set({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
        const Matching m = max_sum_matching(ps);
        CHECK(m.edges == std::vector<Edge>{{0, 2}, {1, 3}});
        CHECK(cost(ps, m.edges) == doctest::Approx(2.8284271247461903).epsilon(1e-15));
    }
    SUBCASE("collinear with a duplicate breaks ties lexicographically") {
        const PointSet ps = make_point_set({{0, 0}, {1, 0}, {1, 0}, {3, 0}});
        const Matching m = max_sum_matching(ps);
        CHECK(cost(ps, m.edges) == doctest::Approx(3.0).epsilon(1e-15));
        CHECK(m.edges == std::vector<Edge>{{0, 1}, {2, 3}});
    }
    SUBCASE("regular hexagon takes the three long diagonals") {
        std::vector<std::vector<double>> rows;
        for (int k = 0; k < 6; ++k) {
            const double a = k * std::acos(-1.0) / 3.0;
            rows.push_back({std::cos(a), std::sin(a)});
        }
        const PointSet ps = make_point_set(rows);
        const Matching m = max_sum_matching(ps);
        CHECK(m.edges == std::vector<Edge>{{0, 3}, {1, 4}, {2, 5}});
        CHECK(cost(ps, m.edges) == doctest::Approx(6.0).epsilon(1e-12));
    }
    SUBCASE("two points") {
        CHECK(max_sum_matching(make_point_set({{0, 0}, {1, 1}})).edges ==
              std::vector<Edge>{{0, 1}});
    }
    CHECK_THROWS_AS(max_sum_matching(make_point_set({{0, 0}, {1, 0}, {2, 0}})),
                    InvalidInput);
    {
        std::vector<std::vector<double>> rows;
        for (int i = 0; i < 24; ++i)
            rows.push_back({static_cast<double>(i), 0.0});
        CHECK_THROWS_AS(max_sum_matching(make_point_set(rows)), InvalidInput);
    }
}

TEST_CASE("max_sum_matching matches the exhaustive oracle") {
    auto eng = rng(303);
    for (int it = 0; it < 60; ++it) {
        const int n = 2 * uniform_int(eng, 1, 5);
        const int d = uniform_int(eng, 2, 4);
        const PointSet ps = random_distinct_set(eng, n, d);
        const Matching fast = max_sum_matching(ps);
        const Matching slow = brute_force_matching(ps);
        CAPTURE(it);
        CHECK(cost(ps, fast.edges) == doctest::Approx(cost(ps, slow.edges)).epsilon(1e-12));
        CHECK(fast.edges == slow.edges);
    }
}

TEST_CASE("matching tie cases agree between routes") {
    const PointSet dup = make_point_set({{0, 0}, {1, 0}, {1, 0}, {3, 0}});
    CHECK(max_sum_matching(dup).edges == brute_force_matching(dup).edges);
    std::vector<std::vector<double>> rows;
    for (int k = 0; k < 6; ++k) {
        const double a = k * std::acos(-1.0) / 3.0;
        rows.push_back({std::cos(a), std::sin(a)});
    }
    const PointSet hex = make_point_set(rows);
    CHECK(max_sum_matching(hex).edges == brute_force_matching(hex).edges);
}

TEST_CASE("exhaustive oracles enforce their caps") {
    std::vector<std::vector<double>> rows;
    for (int i = 0; i < 14; ++i)
        rows.push_back({static_cast<double>(i), 1.0});
    CHECK_THROWS_AS(brute_force_tree(make_point_set(rows)), InvalidInput);
    CHECK_THROWS_AS(brute_force_matching(make_point_set(rows)), InvalidInput);
    CHECK_THROWS_AS(brute_force_tree(make_point_set({{0, 0}})), InvalidInput);
    CHECK_THROWS_AS(
        brute_force_matching(make_point_set({{0, 0}, {1, 0}, {2, 0}})), InvalidInput);
}
