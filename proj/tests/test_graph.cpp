#include "starwalk/graph.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <map>

using namespace starwalk;

TEST_CASE("double subdivided star basic shapes") {
    SECTION("T_{1,1} is a 6-vertex path, still tagged as the family") {
        GraphSpec g = build_double_subdivided_star(1, 1);
        CHECK(g.n == 6);
        CHECK(g.edges.size() == 5);
        CHECK(g.family == Family::DoubleSubdividedStar);
        // path ordering: pendant, middle, a, b, middle, pendant
        std::vector<int> order{3, 2, 0, 1, 4, 5};
        for (size_t i = 0; i + 1 < order.size(); ++i) {
            int u = order[i], v = order[i + 1];
            if (u > v) std::swap(u, v);
            CHECK(g.edges.count({u, v}) == 1);
        }
    }
    SECTION("T_{2,2}") {
        GraphSpec g = build_double_subdivided_star(2, 2);
        CHECK(g.n == 10);
        CHECK(g.edges.size() == 9);
        CHECK(g.degree(g.label_or_throw('a')) == 3);
        CHECK(g.degree(g.label_or_throw('b')) == 3);
    }
    SECTION("T_{3,5} degree sequence") {
        GraphSpec g = build_double_subdivided_star(3, 5);
        CHECK(g.n == 18);
        std::map<int, int> hist;
        for (int v = 0; v < g.n; ++v) ++hist[g.degree(v)];
        CHECK(hist[4] == 1);
        CHECK(hist[6] == 1);
        CHECK(hist[2] == 8);
        CHECK(hist[1] == 8);
    }
    SECTION("labels") {
        GraphSpec g = build_double_subdivided_star(3, 2);
        CHECK(g.label_or_throw('a') == 0);
        CHECK(g.label_or_throw('b') == 1);
        // c,d pendants of the first two l-side branches; e,f their middles
        CHECK(g.label_or_throw('e') == 2);
        CHECK(g.label_or_throw('f') == 3);
        CHECK(g.label_or_throw('c') == 5);
        CHECK(g.label_or_throw('d') == 6);
        CHECK(g.degree(*g.label('c')) == 1);
        CHECK(g.degree(*g.label('e')) == 2);
        CHECK(!build_double_subdivided_star(1, 5).label('c').has_value());
    }
    SECTION("domain errors") {
        CHECK_THROWS_AS(build_double_subdivided_star(0, 1), std::invalid_argument);
        CHECK_THROWS_AS(build_double_subdivided_star(1, 0), std::invalid_argument);
    }
}

TEST_CASE("subdivided star and path builders") {
    CHECK(build_subdivided_star(1).n == 3);
    CHECK(build_subdivided_star(2).n == 5);
    GraphSpec sk4 = build_subdivided_star(4);
    CHECK(sk4.n == 9);
    CHECK(sk4.degree(sk4.label_or_throw('a')) == 4);
    CHECK_THROWS_AS(build_subdivided_star(0), std::invalid_argument);

    // SK_{1,2} is P_5: same degree sequence and connected tree
    GraphSpec sk2 = build_subdivided_star(2);
    int deg2 = 0, deg1 = 0;
    for (int v = 0; v < sk2.n; ++v) {
        if (sk2.degree(v) == 2) ++deg2;
        if (sk2.degree(v) == 1) ++deg1;
    }
    CHECK(deg2 == 3);
    CHECK(deg1 == 2);

    GraphSpec p2 = build_path(2);
    CHECK(p2.edges.size() == 1);
    CHECK(build_path(6).n == 6);
    CHECK(build_path(3).n == build_subdivided_star(1).n);
    CHECK_THROWS_AS(build_path(0), std::invalid_argument);
}

TEST_CASE("edge list construction") {
    GraphSpec p3 = from_edge_list(3, {{0, 1}, {1, 2}});
    CHECK(p3.n == 3);
    CHECK(p3.edges.size() == 2);
    CHECK(p3.family == Family::General);

    GraphSpec c4 = from_edge_list(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    CHECK(c4.edges.size() == 4);
    CHECK(!c4.duplicate_edges_collapsed);

    GraphSpec dup = from_edge_list(2, {{0, 1}, {0, 1}});
    CHECK(dup.edges.size() == 1);
    CHECK(dup.duplicate_edges_collapsed);

    CHECK_THROWS_AS(from_edge_list(3, {{0, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(from_edge_list(3, {{1, 1}}), std::invalid_argument);
}

TEST_CASE("adjacency matrix") {
    Matrix A = adjacency(build_path(2));
    CHECK(A(0, 0) == 0.0);
    CHECK(A(0, 1) == 1.0);
    CHECK(A(1, 0) == 1.0);

    GraphSpec g = build_double_subdivided_star(3, 4);
    Matrix B = adjacency(g);
    CHECK((B - B.transpose()).cwiseAbs().maxCoeff() == 0.0);
    CHECK(B.trace() == 0.0);
    for (int v = 0; v < g.n; ++v) CHECK(B.row(v).sum() == g.degree(v));
}

TEST_CASE("family invariants") {
    for (int l = 1; l <= 6; ++l)
        for (int m = 1; m <= 6; ++m) {
            GraphSpec g = build_double_subdivided_star(l, m);
            CHECK(g.edges.size() == static_cast<size_t>(g.n - 1));
            CHECK(is_connected(g));
            CHECK_NOTHROW(bipartition(g));

            std::vector<int> degs;
            for (int v = 0; v < g.n; ++v) degs.push_back(g.degree(v));
            std::sort(degs.begin(), degs.end());
            std::vector<int> expect(l + m, 1);
            for (int i = 0; i < l + m; ++i) expect.push_back(2);
            expect.push_back(l + 1);
            expect.push_back(m + 1);
            std::sort(expect.begin(), expect.end());
            CHECK(degs == expect);
        }
}

TEST_CASE("T_{l,m} is permutation-similar to T_{m,l}") {
    for (auto [l, m] : {std::pair{2, 5}, {1, 3}, {4, 4}}) {
        GraphSpec g = build_double_subdivided_star(l, m);
        GraphSpec h = build_double_subdivided_star(m, l);
        // explicit side-swapping permutation
        std::vector<int> perm(g.n);
        perm[0] = 1;
        perm[1] = 0;
        for (int j = 0; j < l; ++j) {
            perm[2 + j] = 2 + 2 * m + j;
            perm[2 + l + j] = 2 + 2 * m + l + j;
        }
        for (int k = 0; k < m; ++k) {
            perm[2 + 2 * l + k] = 2 + k;
            perm[2 + 2 * l + m + k] = 2 + m + k;
        }
        Matrix A = adjacency(g), B = adjacency(h);
        for (int u = 0; u < g.n; ++u)
            for (int v = 0; v < g.n; ++v) CHECK(A(u, v) == B(perm[u], perm[v]));
    }
}
