#include "dexact/ar_grid.hpp"
#include "dexact/oracle/knitting.hpp"
#include "dexact/type_a_oracle.hpp"

#include "printers.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace dexact;
using oracle::F101;
using oracle::Rational;

namespace {

const TypeAQuiver kRlrr = build_type_a(5, "RLRR");

Interval P(int i) { return projective(kRlrr, i); }
Interval I(int i) { return injective(kRlrr, i); }

std::set<Interval> as_set(const std::vector<Interval>& v) { return {v.begin(), v.end()}; }

/// Middle of the nonsplit class of Ext^1(c, a) as computed by linear algebra.
std::optional<ModuleSum> oracle_middle(const TypeAOracle<Rational>& model, const Interval& c, const Interval& a)
{
    oracle::ExtModel<Rational> e(model.rep(c), model.rep(a));
    if (e.dim() == 0)
        return std::nullopt;
    REQUIRE(e.dim() == 1);
    return model.decompose(e.realize({Rational(1)}).middle);
}

} // namespace

TEST_CASE("boundary rows of RLRR")
{
    ArGrid g(kRlrr);
    CHECK(g.row(5) == std::vector<Interval>{P(5), {4, 4}, {2, 3}, I(1)});
    CHECK(g.row(1) == std::vector<Interval>{P(1), I(5)});
    CHECK(P(1) == Interval{1, 2});
    CHECK(I(1) == Interval{1, 1});
    CHECK(g.modules().size() == 15);
    for (const auto& m : g.row(1))
        CHECK(g.in_boundary_rows(m));
    CHECK_FALSE(g.in_boundary_rows(P(3)));
}

TEST_CASE("linear A3: rows are the orbits of the projectives")
{
    ArGrid g(build_type_a(3, "RR"));
    CHECK(g.modules().size() == 6);
    // P(1) = [1,3] is projective-injective and alone in its orbit; the simples
    // form the orbit of P(3)
    CHECK(g.row(1) == std::vector<Interval>{{1, 3}});
    CHECK(as_set(g.row(3)) == std::set<Interval>{{1, 1}, {2, 2}, {3, 3}});
}

TEST_CASE("translation agrees with knitting")
{
    for (const auto& [n, w] : std::vector<std::pair<int, std::string>>{{3, "RR"}, {4, "LRL"}, {5, "RLRR"}, {6, "RRLLR"}}) {
        ArGrid g(build_type_a(n, w));
        auto bq = type_a_bound_quiver(g.quiver());
        auto knit = oracle::knit_hereditary(*bq);
        REQUIRE(knit.modules.size() == g.modules().size());
        for (const auto& v : knit.modules) {
            auto support = [](const std::vector<int>& d) {
                int lo = 0, hi = 0;
                for (int k = 0; k < static_cast<int>(d.size()); ++k)
                    if (d[k]) {
                        if (!lo)
                            lo = k + 1;
                        hi = k + 1;
                    }
                return Interval{lo, hi};
            };
            auto m = support(v.dims);
            if (v.tau < 0)
                CHECK_FALSE(g.tau(m).has_value());
            else
                CHECK(g.tau(m) == support(knit.modules[v.tau].dims));
        }
    }
}

TEST_CASE("translation")
{
    ArGrid g(kRlrr);
    // I(4) = 3/4 lies in the orbit of P(2), one step right of 13/245
    CHECK(g.tau(I(4)) == Interval{1, 5});
    CHECK(g.position(I(4)).y == 2);
    for (int i = 1; i <= 5; ++i) {
        CHECK_FALSE(g.tau(P(i)).has_value());
        CHECK_FALSE(g.tau_inverse(I(i)).has_value());
    }
    for (const auto& m : g.modules()) {
        if (auto t = g.tau(m)) {
            CHECK(g.tau_inverse(*t) == m);
            CHECK(g.position(*t).y == g.position(m).y);
            CHECK(g.position(*t).x == g.position(m).x - 2);
        }
    }
}

TEST_CASE("rays")
{
    ArGrid g(kRlrr);
    CHECK(g.ray(I(5), Direction::NE) == std::vector<Interval>{I(5), I(4), I(3)});
    CHECK(g.end_of_ray(I(5), Direction::NE) == I(3));
    CHECK(g.end_of_ray(Interval{1, 5}, Direction::SW) == P(1));
    CHECK(g.end_of_ray(Interval{1, 5}, Direction::NW) == P(5));
    for (const auto& m : g.modules()) {
        auto ne = g.ray(m, Direction::NE), se = g.ray(m, Direction::SE);
        auto a = as_set(ne), b = as_set(se);
        std::vector<Interval> common;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
        CHECK(common == std::vector<Interval>{m});
    }
}

TEST_CASE("pair classification on RLRR")
{
    ArGrid g(kRlrr);
    CHECK(std::holds_alternative<RectangularDegenerate>(g.classify_pair(P(2), {2, 3})));
    CHECK(g.classify_pair(P(4), I(4)) == PairClass{RectangularNonDegenerate{{4, 4}, I(5)}});
    CHECK(g.classify_pair({4, 4}, I(3)) == PairClass{UpperDeleted{I(4)}});

    CHECK(g.hom_dim(P(2), {2, 3}) == 1);
    CHECK(g.hom_dim({4, 4}, I(3)) == 0);
    for (const auto& m : g.modules())
        CHECK(g.hom_dim(m, m) == 1);
}

TEST_CASE("extension classes on RLRR")
{
    ArGrid g(kRlrr);
    auto diamond = g.ext_class(I(4), P(4));
    REQUIRE(diamond);
    CHECK(diamond->kind == SesKind::Diamond);
    CHECK(diamond->middle == ModuleSum({I(5), {4, 4}}));

    auto ind = g.ext_class(I(3), {4, 4});
    REQUIRE(ind);
    CHECK(ind->kind == SesKind::IndecomposableMiddle);
    CHECK(ind->middle == ModuleSum({I(4)}));

    CHECK_FALSE(g.ext_class({2, 3}, P(2)).has_value());
}

TEST_CASE("rectangular regions on RLRR")
{
    ArGrid g(kRlrr);
    CHECK(as_set(g.region_right({1, 4})) == std::set<Interval>{{1, 4}, I(1), I(2), I(3), I(4)});
    auto r = g.region_right(P(4));
    CHECK(r.size() == 8);
    CHECK(as_set(r) == as_set(g.region_left(I(4))));
    for (int k = 1; k <= 5; ++k)
        CHECK(as_set(g.region_right(I(k))).count(I(k)) == 1);
    for (const auto& m : g.modules()) {
        std::set<Interval> right, left;
        for (const auto& n : g.modules()) {
            if (g.hom_dim(m, n))
                right.insert(n);
            if (g.hom_dim(n, m))
                left.insert(n);
        }
        CHECK(as_set(g.region_right(m)) == right);
        CHECK(as_set(g.region_left(m)) == left);
    }
}

TEST_CASE("diamond capability matches an exhaustive oracle scan")
{
    for (int n = 3; n <= 5; ++n) {
        for (const auto& w : all_orientations(n)) {
            ArGrid g(build_type_a(n, w));
            TypeAOracle<Rational> model(g.quiver());
            for (const auto& m : g.modules()) {
                bool as_quot = false, as_sub = false;
                for (const auto& x : g.modules()) {
                    if (auto mid = oracle_middle(model, m, x); mid && mid->size() == 2)
                        as_quot = true;
                    if (auto mid = oracle_middle(model, x, m); mid && mid->size() == 2)
                        as_sub = true;
                }
                CHECK(g.diamond_capable(m, Side::AsQuotient) == as_quot);
                CHECK(g.diamond_capable(m, Side::AsSub) == as_sub);
            }
        }
    }
    ArGrid g(kRlrr);
    CHECK_FALSE(g.diamond_capable(P(3), Side::AsQuotient));
    CHECK(g.diamond_capable(P(3), Side::AsSub));
    CHECK(g.diamond_capable({1, 4}, Side::AsQuotient));
    CHECK(g.diamond_capable({1, 4}, Side::AsSub));
    for (const auto& m : g.row(1)) {
        CHECK_FALSE(g.diamond_capable(m, Side::AsQuotient));
        CHECK_FALSE(g.diamond_capable(m, Side::AsSub));
    }
}

TEST_CASE("projective hammocks")
{
    ArGrid g(kRlrr);
    TypeAOracle<Rational> model(kRlrr);

    auto h4 = g.projective_hammock(4);
    CHECK(h4.e1 == I(5));
    CHECK(h4.e2 == Interval{4, 4});
    REQUIRE(h4.ses);
    CHECK(h4.ses->middle == ModuleSum({I(5), {4, 4}}));
    CHECK(h4.ses->quot == I(4));

    // i = 3: P(3) = [2,5], I(3) = [3,3]; the middle is whatever the oracle says
    auto h3 = g.projective_hammock(3);
    REQUIRE(h3.ses);
    CHECK(h3.ses->sub == P(3));
    CHECK(h3.ses->quot == I(3));
    CHECK(h3.ses->middle == oracle_middle(model, I(3), P(3)));
    CHECK(h3.ses->middle == ModuleSum({{2, 3}, {3, 5}}));

    auto h1 = g.projective_hammock(1);
    CHECK(h1.e1 == P(1));
    CHECK_FALSE(h1.ses.has_value());
    CHECK_THROWS(g.projective_hammock(6));

    // every hammock runs from L_1 to L_n, diamonds only strictly inside
    for (int n = 3; n <= 6; ++n)
        for (const auto& w : all_orientations(n)) {
            ArGrid gg(build_type_a(n, w));
            for (int i = 1; i <= n; ++i) {
                auto h = gg.projective_hammock(i);
                CHECK(gg.position(h.e1).y == 1);
                CHECK(gg.position(h.e2).y == n);
                CHECK(h.ses.has_value() == (i > 1 && i < n));
            }
        }
}

TEST_CASE("grid calculus agrees with linear algebra over both fields")
{
    for (int n = 2; n <= 5; ++n) {
        for (const auto& w : all_orientations(n)) {
            ArGrid g(build_type_a(n, w));
            TypeAOracle<Rational> rq(g.quiver());
            TypeAOracle<F101> fp(g.quiver());
            for (const auto& a : g.modules()) {
                for (const auto& b : g.modules()) {
                    const auto hq = oracle::hom_dim(rq.rep(a), rq.rep(b));
                    CHECK(g.hom_dim(a, b) == static_cast<int>(hq));
                    CHECK(oracle::hom_dim(fp.rep(a), fp.rep(b)) == hq);
                    oracle::ExtModel<Rational> eq(rq.rep(b), rq.rep(a));
                    oracle::ExtModel<F101> ef(fp.rep(b), fp.rep(a));
                    CHECK(eq.dim() == ef.dim());
                    auto cls = g.ext_class(b, a);
                    CHECK(cls.has_value() == (eq.dim() == 1));
                    if (cls) {
                        CHECK(cls->middle == rq.decompose(eq.realize({Rational(1)}).middle));
                        CHECK(cls->middle == fp.decompose(ef.realize({F101(1)}).middle));
                    }
                }
            }
        }
    }
}

TEST_CASE("Ext is nonzero exactly for non-degenerate rectangles and deleted pairs")
{
    for (int n = 3; n <= 6; ++n)
        for (const auto& w : all_orientations(n)) {
            ArGrid g(build_type_a(n, w));
            for (const auto& m : g.modules())
                for (const auto& x : g.modules()) {
                    auto c = g.classify_pair(m, x);
                    const bool expect = std::holds_alternative<RectangularNonDegenerate>(c) || is_deleted(c);
                    CHECK(g.ext_class(x, m).has_value() == expect);
                }
        }
}

TEST_CASE("maps compose through intermediate modules")
{
    // whenever Hom(M,N) and Hom(N,L) are nonzero and Hom(M,L) is nonzero, the
    // composite of the nonzero maps spans Hom(M,L)
    for (int n = 3; n <= 5; ++n)
        for (const auto& w : all_orientations(n)) {
            ArGrid g(build_type_a(n, w));
            TypeAOracle<Rational> model(g.quiver());
            for (const auto& m : g.modules())
                for (const auto& x : g.region_right(m))
                    for (const auto& l : g.region_right(x)) {
                        if (!g.hom_dim(m, l))
                            continue;
                        auto f = oracle::hom_space(model.rep(m), model.rep(x));
                        auto h = oracle::hom_space(model.rep(x), model.rep(l));
                        REQUIRE(f.size() == 1);
                        REQUIRE(h.size() == 1);
                        CHECK_FALSE(oracle::is_zero(oracle::compose(h[0], f[0])));
                    }
        }
}

TEST_CASE("diamond middles map nontrivially both ways")
{
    for (int n = 3; n <= 6; ++n)
        for (const auto& w : all_orientations(n)) {
            ArGrid g(build_type_a(n, w));
            for (const auto& a : g.modules())
                for (const auto& c : g.modules()) {
                    auto cls = g.ext_class(c, a);
                    if (!cls || cls->kind != SesKind::Diamond)
                        continue;
                    REQUIRE(cls->middle.size() == 2);
                    for (const auto& e : cls->middle.summands()) {
                        CHECK(g.hom_dim(a, e) == 1);
                        CHECK(g.hom_dim(e, c) == 1);
                    }
                }
        }
}

TEST_CASE("rectangles touching both boundary rows are projective hammocks")
{
    for (int n = 3; n <= 6; ++n)
        for (const auto& w : all_orientations(n)) {
            ArGrid g(build_type_a(n, w));
            const auto& q = g.quiver();
            for (const auto& m : g.modules())
                for (const auto& x : g.region_right(m)) {
                    bool low = false, high = false;
                    for (const auto& r : g.region_right(m)) {
                        if (!g.hom_dim(r, x))
                            continue;
                        low = low || g.position(r).y == 1;
                        high = high || g.position(r).y == n;
                    }
                    if (!(low && high))
                        continue;
                    bool found = false;
                    for (int i = 1; i <= n; ++i)
                        found = found || (m == projective(q, i) && x == injective(q, i));
                    CHECK_MESSAGE(found, w << " " << m.str() << " " << x.str());
                }
        }
}
