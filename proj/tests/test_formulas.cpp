#include "doctest.h"

#include "gallai/constructions.hpp"
#include "gallai/formulas.hpp"

using namespace gallai;

TEST_CASE("classical double-star values")
{
    auto r31 = ramsey_double_star(3, 1);
    CHECK(r31.exact());
    CHECK(r31.value() == 7);

    auto r41 = ramsey_double_star(4, 1);
    CHECK(r41.exact());
    CHECK(r41.value() == 10);

    auto r22 = ramsey_double_star(2, 2); // n <= sqrt(2) m via n^2 <= 2 m^2
    CHECK(r22.exact());
    CHECK(r22.value() == 8);

    // stars: S(n,0)
    CHECK(ramsey_double_star(3, 0).value() == 7);
    CHECK(ramsey_double_star(4, 0).value() == 10);
    CHECK(ramsey_double_star(0, 0).value() == 2);

    CHECK_THROWS_AS(ramsey_double_star(1, 2), std::invalid_argument);
}

TEST_CASE("window and uncovered branches")
{
    // (2,1): even, not within sqrt(2)m or 3m, but inside the 1.699(m+1) window
    auto r21 = ramsey_double_star(2, 1);
    CHECK(r21.status == BoundStatus::interval);
    CHECK(*r21.lower == 6);
    CHECK(*r21.upper == 6);

    // (7,3): odd with m >= 3, fails both exactness side conditions and the window
    auto r73 = ramsey_double_star(7, 3);
    CHECK(r73.status == BoundStatus::not_covered);
    CHECK(*r73.lower == 15);
    CHECK(!r73.upper.has_value());

    // boundary arithmetic is exact: n = 3m passes, n = 3m - 1 falls out
    CHECK(ramsey_double_star(6, 2).exact());
    CHECK(ramsey_double_star(9, 3).exact());
    CHECK(ramsey_double_star(8, 3).status == BoundStatus::not_covered);

    // the 1.699(m+1) window edge is rational, not floating-point:
    // 1000*1699 == 1699*1000 sits inside, one more falls out
    CHECK(ramsey_double_star(1699, 999).status == BoundStatus::interval);
    CHECK(ramsey_double_star(1700, 999).status == BoundStatus::not_covered);
}

TEST_CASE("gr exact values and gating")
{
    auto g13 = gr_exact(13, 1, 3);
    CHECK(g13.exact());
    CHECK(g13.value() == 32);

    auto g14 = gr_exact(14, 1, 4);
    CHECK(g14.exact());
    CHECK(g14.value() == 37);

    // n = 20 < 6*3+7 = 25: must NOT come back exact
    auto g20 = gr_exact(20, 3, 5);
    CHECK(!g20.exact());
    CHECK(g20.status == BoundStatus::interval);

    // gate boundary: 6m+7 exactly passes, 6m+6 does not unless relaxed
    CHECK(gr_exact(13, 1, 5).exact());
    CHECK(!gr_exact(12, 1, 5).exact());
    CHECK(gr_exact(12, 1, 5, true).exact());
    CHECK(!gr_exact(10, 1, 5, true).exact());

    CHECK_THROWS_AS(gr_exact(5, 1, 2), std::invalid_argument);
    CHECK_THROWS_AS(gr_exact(5, 0, 3), std::invalid_argument);
}

TEST_CASE("gr bounds report both lower forms")
{
    auto b21 = gr_bounds(2, 1, 3);
    CHECK(b21.status == BoundStatus::interval);
    CHECK(*b21.stated_lower == 7);
    CHECK(*b21.upper == 18);

    auto b11 = gr_bounds(1, 1, 3);
    CHECK(*b11.stated_lower == 7);
    CHECK(*b11.proven_lower == 6);
    CHECK(*b11.upper == 17);

    // above the upper-bound window the report downgrades to lower-only
    auto wide = gr_bounds(20, 1, 3);
    CHECK(wide.status == BoundStatus::lower_only);
    CHECK(!wide.upper.has_value());
}

TEST_CASE("upper-bound forms agree where both apply")
{
    for (int m = 1; m <= 12; ++m)
        for (int n = m; n <= 6 * m + 6; ++n)
            for (int k = 3; k <= 20; ++k) {
                auto b = gr_bounds(n, m, k);
                REQUIRE(b.upper.has_value());
                REQUIRE(b.alt_upper.has_value());
                CHECK(*b.upper == *b.alt_upper);
            }
}

TEST_CASE("exact value sits inside the general bounds")
{
    for (int m = 1; m <= 3; ++m)
        for (int n = 6 * m + 7; n <= 6 * m + 12; ++n)
            for (int k = 3; k <= 8; ++k) {
                auto exact = gr_exact(n, m, k);
                auto bounds = gr_bounds(n, m, k);
                REQUIRE(exact.exact());
                CHECK(exact.value() >= *bounds.lower);
                CHECK(exact.value() >= *bounds.proven_lower);
                if (bounds.upper)
                    CHECK(exact.value() <= *bounds.upper);
            }
}

TEST_CASE("lower bound never exceeds exact classical values")
{
    for (int m = 0; m <= 6; ++m)
        for (int n = m; n <= 20; ++n) {
            auto r = ramsey_double_star(n, m);
            if (r.exact())
                CHECK(r.value() >= n + 2 * m + 2);
        }
}

TEST_CASE("construction orders match the proven lower bound on the exact grid")
{
    for (int m = 1; m <= 2; ++m)
        for (int n = 6 * m + 7; n <= 6 * m + 8; ++n)
            for (int k = 3; k <= 6; ++k) {
                auto bounds = gr_bounds(n, m, k);
                int order = gallai_lower_order(n, m, k);
                CHECK(order + 1 >= *bounds.proven_lower);
                CHECK(order + 1 == *bounds.proven_lower); // pipeline A dominates here
                CHECK(order + 1 == gr_exact(n, m, k).value());
            }
}
