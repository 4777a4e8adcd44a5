#include "dexact/errors.hpp"
#include "dexact/quiver.hpp"

#include "printers.hpp"

#include <doctest.h>

#include <set>

using namespace dexact;

TEST_CASE("orientation word builds the quiver")
{
    auto q = build_type_a(5, "RLRR");
    CHECK(q.n() == 5);
    CHECK(q.points_right(1));
    CHECK_FALSE(q.points_right(2));
    CHECK(q.points_right(3));
    CHECK(q.points_right(4));
    CHECK_FALSE(q.is_linear());

    auto two = build_type_a(2, "R");
    CHECK(two.n() == 2);
    CHECK(two.is_linear());
}

TEST_CASE("malformed orientations are rejected")
{
    CHECK_THROWS_AS(build_type_a(5, "RLR"), QuiverError);
    CHECK_THROWS_AS(build_type_a(3, "RX"), QuiverError);
    CHECK_THROWS_AS(build_type_a(0, ""), QuiverError);
}

TEST_CASE("projectives and injectives on RLRR")
{
    auto q = build_type_a(5, "RLRR");
    CHECK(projective(q, 3) == Interval{2, 5});
    CHECK(projective(q, 4) == Interval{4, 5});
    CHECK(projective(q, 1) == Interval{1, 2});
    CHECK(projective(q, 5) == Interval{5, 5});
    CHECK(injective(q, 2) == Interval{1, 3});
    CHECK(injective(q, 5) == Interval{3, 5});
    CHECK(simple(q, 4) == Interval{4, 4});
    CHECK_THROWS_AS(projective(q, 6), QuiverError);
    CHECK_THROWS_AS(injective(q, 0), QuiverError);

    CHECK(display_name(q, Interval{2, 5}) == "3/24/5");
    CHECK(display_name(q, Interval{1, 3}) == "13/2");
    CHECK(display_name(q, Interval{3, 5}) == "3/4/5");
}

TEST_CASE("linear orientation: P(1) is everything")
{
    for (int n = 2; n <= 7; ++n) {
        auto q = build_type_a(n, std::string(n - 1, 'R'));
        CHECK(projective(q, 1) == Interval{1, n});
        CHECK(injective(q, n) == Interval{1, n});
    }
}

TEST_CASE("indecomposables are listed lexicographically")
{
    auto q2 = build_type_a(2, "R");
    CHECK(list_indecomposables(q2) == std::vector<Interval>{{1, 1}, {1, 2}, {2, 2}});
    CHECK(list_indecomposables(build_type_a(5, "RLRR")).size() == 15);

    // direct count of contiguous vertex sets
    auto q7 = build_type_a(7, "RLLRLR");
    std::set<std::pair<int, int>> seen;
    for (int lo = 1; lo <= 7; ++lo)
        for (int hi = lo; hi <= 7; ++hi)
            seen.insert({lo, hi});
    auto listed = list_indecomposables(q7);
    CHECK(listed.size() == seen.size());
    CHECK(listed.size() == 28);
    for (std::size_t k = 0; k < listed.size(); ++k)
        CHECK(q7.index_of(listed[k]) == k);
}

TEST_CASE("projectives and injectives are distinct and contain their vertex")
{
    for (int n = 2; n <= 6; ++n) {
        for (const auto& w : all_orientations(n)) {
            auto q = build_type_a(n, w);
            std::set<Interval> ps, is;
            for (int i = 1; i <= n; ++i) {
                auto p = projective(q, i), in = injective(q, i);
                CHECK(p.contains(i));
                CHECK(in.contains(i));
                ps.insert(p);
                is.insert(in);
                CHECK(is_projective(q, p));
                CHECK(is_injective(q, in));
            }
            CHECK(ps.size() == static_cast<std::size_t>(n));
            CHECK(is.size() == static_cast<std::size_t>(n));
            // a projective-injective shared between different vertices is the full interval
            for (int i = 1; i <= n; ++i)
                for (int j = 1; j <= n; ++j)
                    if (i != j && projective(q, i) == injective(q, j))
                        CHECK(projective(q, i) == Interval{1, n});
        }
    }
}

TEST_CASE("all orientations are enumerated in order")
{
    auto words = all_orientations(4);
    CHECK(words.size() == 8);
    CHECK(words.front() == "LLL");
    CHECK(words.back() == "RRR");
    CHECK(std::is_sorted(words.begin(), words.end()));
}

TEST_CASE("module sums stay sorted")
{
    ModuleSum s({{2, 3}, {1, 1}, {2, 3}});
    CHECK(s.summands() == std::vector<Interval>{{1, 1}, {2, 3}, {2, 3}});
    CHECK_FALSE(s.basic());
    CHECK(s.contains(Interval{2, 3}));
    CHECK(s.dim_vector(3) == std::vector<int>{1, 2, 2});
    CHECK(ModuleSum({{1, 2}, {3, 3}}).basic());
}
