#include "doctest.h"

#include "gallai/constructions.hpp"
#include "gallai/detectors.hpp"
#include "gallai/formulas.hpp"
#include "oracles.hpp"

using namespace gallai;

TEST_CASE("k3 lower blow-up")
{
    EdgeColoring g = build_k3_lower(4, 1);
    CHECK(g.order() == 10);
    CHECK(g.color_count() == 3);
    for (Vertex v = 0; v < 10; ++v) {
        CHECK(g.color_degree(v, 0) == 1);
        CHECK(g.color_degree(v, 1) == 4);
        CHECK(g.color_degree(v, 2) == 4);
    }

    EdgeColoring odd = build_k3_lower(5, 1);
    CHECK(odd.order() == 11);

    EdgeColoring k1 = build_k3_lower(1, 1);
    CHECK(k1.order() == 1);

    CHECK_THROWS_AS(build_k3_lower(0, 0), std::invalid_argument);
    CHECK_THROWS_AS(build_k3_lower(3, 4), std::invalid_argument);
}

TEST_CASE("k3 lower degree cap")
{
    for (int n : {2, 3, 4, 5, 8, 9, 14, 15}) {
        EdgeColoring g = build_k3_lower(n, 1);
        CHECK(g.order() == k3_lower_order(n));
        int top = 0;
        for (Vertex v = 0; v < g.order(); ++v)
            for (Color c = 0; c < g.color_count(); ++c)
                top = std::max(top, g.color_degree(v, c));
        CHECK(top <= n); // no vertex can center a monochromatic K_{1,n+1}
        CHECK(!find_rainbow_triangle(g));
    }
}

TEST_CASE("extend with clique")
{
    EdgeColoring k1(1, 1, 0);
    EdgeColoring k2 = extend_with_clique(k1, 1, 1, 0);
    CHECK(k2.order() == 2);
    CHECK(k2.color_of(0, 1) == 1);

    EdgeColoring base = build_k3_lower(14, 1);
    CHECK(base.order() == 35);
    EdgeColoring ext = extend_with_clique(base, 1, 3, 0);
    CHECK(ext.order() == 36);
    CHECK(ext.color_count() == 4);
    CHECK(ext.color_degree(35, 3) == 35);
    CHECK(!find_rainbow_triangle(ext));
    CHECK(!find_mono_double_star(ext, DoubleStarSpec(14, 1)));

    // the new color must be fresh
    CHECK_THROWS_AS(extend_with_clique(base, 1, 2, 0), std::invalid_argument);
    CHECK_THROWS_AS(extend_with_clique(base, 0, 3, 0), std::invalid_argument);

    // clique of size >= 2 really lands in the clique color
    EdgeColoring two = extend_with_clique(base, 2, 3, 0);
    CHECK(two.color_of(35, 36) == 0);
    CHECK(two.color_of(35, 0) == 3);
}

TEST_CASE("ramsey lower colorings")
{
    // (3,1): both circulant classes stay below the degree thresholds
    EdgeColoring g31 = build_ramsey_lower(3, 1);
    CHECK(g31.order() == 6);
    CHECK(g31.color_count() == 2);
    for (Vertex v = 0; v < 6; ++v) {
        CHECK(g31.color_degree(v, 0) == 2);
        CHECK(g31.color_degree(v, 1) == 3);
    }
    CHECK(!oracle::has_mono_double_star(g31, DoubleStarSpec(3, 1)));

    // (1,1): circulants fail, the search fallback finds K4 = triangle + star
    EdgeColoring g11 = build_ramsey_lower(1, 1);
    CHECK(g11.order() == 4);
    CHECK(!oracle::has_mono_double_star(g11, DoubleStarSpec(1, 1)));

    // (2,2): no circulant strategy applies; searched K7 certificate
    EdgeColoring g22 = build_ramsey_lower(2, 2);
    CHECK(g22.order() == 7);
    CHECK(!oracle::has_mono_double_star(g22, DoubleStarSpec(2, 2)));

    // (2,1): n-regular circulant, both classes are pentagons
    EdgeColoring g21 = build_ramsey_lower(2, 1);
    CHECK(g21.order() == 5);
    CHECK(!oracle::has_mono_double_star(g21, DoubleStarSpec(2, 1)));

    CHECK_THROWS_AS(build_ramsey_lower(1, 0), std::invalid_argument);
}

TEST_CASE("composed lower-bound pipelines")
{
    EdgeColoring a = build_gallai_lower(13, 1, 3);
    CHECK(a.order() == 31);
    CHECK(a.order() == gallai_lower_order(13, 1, 3));

    EdgeColoring b = build_gallai_lower(14, 1, 5);
    CHECK(b.order() == 37);
    CHECK(b.color_count() == 5);

    // small n routes through the 2-color pipeline: K4 plus one color-2 vertex
    EdgeColoring c = build_gallai_lower(1, 1, 3);
    CHECK(c.order() == 5);
    CHECK(c.color_count() == 3);
    CHECK(!find_rainbow_triangle(c));
    CHECK(!find_mono_double_star(c, DoubleStarSpec(1, 1)));

    CHECK_THROWS_AS(build_gallai_lower(3, 1, 2), std::invalid_argument);
}

TEST_CASE("composed pipeline validates across the exactness grid")
{
    for (int m : {1, 2})
        for (int n : {6 * m + 7, 6 * m + 8})
            for (int k : {3, 4, 5, 6}) {
                EdgeColoring g = build_gallai_lower(n, m, k);
                CHECK(g.order() == gr_exact(n, m, k).value() - 1);
                CHECK(!find_rainbow_triangle(g));
                CHECK(!find_mono_double_star(g, DoubleStarSpec(n, m)));
            }
}
