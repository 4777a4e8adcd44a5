#include "dexact/errors.hpp"
#include "dexact/exact_structures.hpp"
#include "dexact/mar.hpp"
#include "dexact/type_a_oracle.hpp"

#include "printers.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

using namespace dexact;
using oracle::Rational;

namespace {

const TypeAQuiver kRlrr = build_type_a(5, "RLRR");

Interval P(int i) { return projective(kRlrr, i); }
Interval I(int i) { return injective(kRlrr, i); }

std::shared_ptr<const ArGrid> grid(const TypeAQuiver& q) { return std::make_shared<const ArGrid>(q); }

std::set<Interval> as_set(const std::vector<Interval>& v) { return {v.begin(), v.end()}; }

std::vector<Interval> to_intervals(const TypeAOracle<Rational>& model, const std::vector<int>& idx)
{
    std::vector<Interval> out;
    for (int k : idx)
        out.push_back(model.interval(k));
    return out;
}

} // namespace

TEST_CASE("diamond generators are the two boundary rows")
{
    auto es = e_diamond(grid(kRlrr));
    CHECK(as_set(es.generators())
          == std::set<Interval>{{1, 2}, {3, 5}, {5, 5}, {4, 4}, {2, 3}, {1, 1}});
    CHECK(es.is_diamond());

    CHECK(e_diamond(grid(build_type_a(2, "R"))).generators().size() == 3);

    // linear A5: count boundary orbit members by walking the rows directly
    auto g = grid(build_type_a(5, "RRRR"));
    std::set<Interval> boundary;
    for (int y : {1, 5})
        for (const auto& m : g->modules())
            if (g->position(m).y == y)
                boundary.insert(m);
    CHECK(e_diamond(g).generators().size() == boundary.size());
    CHECK(boundary.size() == 6);
}

TEST_CASE("admissibility of single classes")
{
    auto g = grid(kRlrr);
    auto es = e_diamond(g);
    CHECK(is_admissible(es, P(4), I(4)));
    CHECK_FALSE(is_admissible(es, {4, 4}, I(3)));
    CHECK_THROWS_AS(is_admissible(es, P(2), {2, 3}), PreconditionError);

    CHECK(admissible_class_dim(es, I(4), P(4)) == 1);
    CHECK(admissible_class_dim(es, I(3), {4, 4}) == 0);

    auto full = f_empty(g);
    for (const auto& c : g->modules())
        for (const auto& a : g->modules()) {
            CHECK(admissible_class_dim(es, c, c) == 0);
            if (g->ext_class(c, a))
                CHECK(is_admissible(full, a, c));
        }
}

TEST_CASE("admissibility agrees with the relative oracle for assorted generator sets")
{
    std::mt19937_64 rng(7);
    for (int n = 3; n <= 4; ++n)
        for (const auto& w : all_orientations(n)) {
            auto g = grid(build_type_a(n, w));
            TypeAOracle<Rational> model(g->quiver());
            for (int trial = 0; trial < 6; ++trial) {
                std::vector<Interval> gens;
                for (const auto& m : g->modules())
                    if (rng() % 3 == 0)
                        gens.push_back(m);
                auto es = f_x(g, gens);
                auto rel = model.relative(gens);
                for (const auto& c : g->modules())
                    for (const auto& a : g->modules()) {
                        const int k = model.index(c), j = model.index(a);
                        CHECK(admissible_class_dim(es, c, a) == static_cast<int>(rel->admissible_basis(k, j).cols()));
                    }
                CHECK(as_set(relative_projectives(es)) == as_set(to_intervals(model, rel->relative_projectives())));
                CHECK(as_set(relative_injectives(es)) == as_set(to_intervals(model, rel->relative_injectives())));
            }
        }
}

TEST_CASE("relative projectives and injectives")
{
    auto g = grid(kRlrr);
    auto es = e_diamond(g);
    auto proj = relative_projectives(es);
    CHECK(proj.size() == 9);
    std::set<Interval> expect{P(1), P(2), P(3), P(4), P(5), {1, 2}, {3, 5}, {5, 5}, {4, 4}, {2, 3}, {1, 1}};
    CHECK(as_set(proj) == expect);
    CHECK(as_set(relative_proj_injectives(es)) == as_set(es.generators()));
    CHECK(relative_proj_injectives(es).size() == 6);

    std::set<Interval> projectives;
    for (int i = 1; i <= 5; ++i)
        projectives.insert(P(i));
    CHECK(as_set(relative_projectives(f_empty(g))) == projectives);

    for (int n = 3; n <= 5; ++n)
        for (const auto& w : all_orientations(n)) {
            auto es2 = e_diamond(grid(build_type_a(n, w)));
            CHECK(as_set(relative_projectives(es2)) == as_set(relative_projectives_by_scan(es2)));
            CHECK(as_set(relative_injectives(es2)) == as_set(relative_injectives_by_scan(es2)));
            CHECK(relative_projectives(es2).size() == static_cast<std::size_t>(2 * n - 1));
        }
}

TEST_CASE("relative projective dimension for the diamond structure")
{
    auto g = grid(kRlrr);
    auto es = e_diamond(g);
    TypeAOracle<Rational> model(kRlrr);

    auto s3 = pd_e(es, I(3));
    CHECK(s3.pd == 1);
    REQUIRE(s3.resolution.steps.size() == 1);
    CHECK(s3.resolution.steps[0].sub == ModuleSum({P(3)}));
    CHECK(s3.resolution.steps[0].middle == ModuleSum({{2, 3}, {3, 5}}));
    CHECK_FALSE(s3.resolution.steps[0].augmented);

    CHECK(pd_e(es, P(2)).pd == 0);

    auto big = pd_e(es, {1, 5});
    CHECK(big.pd == 1);
    REQUIRE(big.resolution.steps.size() == 1);
    const auto& step = big.resolution.steps[0];
    CHECK(step.augmented);
    for (const auto& m : {P(3), P(1), P(5)})
        CHECK(step.middle.contains(m));
    for (const auto& m : step.middle.summands())
        CHECK(as_set(relative_projectives(es)).count(m));

    for (int n = 3; n <= 6; ++n)
        for (const auto& w : all_orientations(n)) {
            auto e2 = e_diamond(grid(build_type_a(n, w)));
            auto rp = as_set(relative_projectives(e2));
            for (const auto& m : e2.grid().modules()) {
                auto r = pd_e(e2, m);
                CHECK(r.pd >= 0);
                CHECK(r.pd <= 1);
                CHECK((r.pd == 0) == (rp.count(m) == 1));
                CHECK(relative_pd(e2, m) == r.pd);
            }
        }
}

TEST_CASE("dominant dimension witnesses")
{
    auto es = e_diamond(grid(kRlrr));
    auto rep = dominant_dim_check(es);
    CHECK(rep.ok);
    bool saw_p4 = false;
    for (const auto& w : rep.witnesses) {
        if (es.grid().in_boundary_rows(w.projective)) {
            CHECK(w.trivial);
            CHECK_FALSE(w.ses.has_value());
        }
        if (w.projective == P(4)) {
            saw_p4 = true;
            REQUIRE(w.ses);
            CHECK(w.ses->middle == ModuleSum({I(5), {4, 4}}));
            CHECK(w.ses->quot == I(4));
        }
    }
    CHECK(saw_p4);

    auto lin = build_type_a(5, "RRRR");
    auto rl = dominant_dim_check(e_diamond(grid(lin)));
    bool saw_p3 = false;
    for (const auto& w : rl.witnesses)
        if (w.projective == projective(lin, 3)) {
            saw_p3 = true;
            REQUIRE(w.ses);
            CHECK(w.ses->quot == injective(lin, 3));
        }
    CHECK(saw_p3);
}

TEST_CASE("0-Auslander verdicts")
{
    for (int n = 3; n <= 6; ++n)
        for (const auto& w : all_orientations(n)) {
            auto rep = zero_auslander_report(e_diamond(grid(build_type_a(n, w))));
            CHECK(rep.global_dim <= 1);
            CHECK(rep.dominant_dim_ok);
            CHECK(rep.is_0_auslander);
            CHECK(rep.method == "combinatorial");
        }

    for (int n = 2; n <= 4; ++n)
        for (const auto& w : all_orientations(n)) {
            auto q = build_type_a(n, w);
            auto g = grid(q);

            // only split sequences: everything is projective and injective
            auto split = zero_auslander_report(f_all(g));
            CHECK(split.global_dim == 0);
            CHECK(split.is_0_auslander);
            CHECK(split.relative_proj_injectives.size() == g->modules().size());

            // every sequence: hereditary, and dominant dimension is at least one iff
            // the injective envelope of each projective is projective
            auto full = zero_auslander_report(f_empty(g));
            CHECK(full.global_dim == 1);
            bool envelopes_projective = true;
            for (int i = 1; i <= n; ++i) {
                const auto p = projective(q, i);
                if (is_injective(q, p))
                    continue;
                // the socle of an interval sits at its sinks
                for (int v = p.lo; v <= p.hi; ++v) {
                    const bool out_left = v > p.lo && !q.points_right(v - 1);
                    const bool out_right = v < p.hi && q.points_right(v);
                    if (!out_left && !out_right)
                        envelopes_projective = envelopes_projective && is_projective(q, injective(q, v));
                }
            }
            CHECK_MESSAGE(full.dominant_dim_ok == envelopes_projective, w);
            CHECK(full.is_0_auslander == envelopes_projective);
        }
}

TEST_CASE("tilting, maximal rigid and complete rigid")
{
    auto es = e_diamond(grid(kRlrr));
    ModuleSum minimum(relative_projectives(es));
    CHECK(minimum.size() == 9);
    CHECK(is_rigid(es, minimum));
    CHECK(is_tilting(es, minimum));
    CHECK(is_maximal_rigid(es, minimum));
    CHECK(is_complete_rigid(es, minimum));

    ModuleSum single({{1, 4}});
    CHECK_FALSE(is_complete_rigid(es, single));
    CHECK_FALSE(is_tilting(es, single));
    CHECK_THROWS_AS(is_tilting(es, ModuleSum({{1, 4}, {1, 4}})), PreconditionError);

    // the three predicates agree with each other and with MAR membership on
    // every basic module for n = 3
    for (const auto& w : all_orientations(3)) {
        auto g = grid(build_type_a(3, w));
        auto e3 = e_diamond(g);
        ConflictGraph cg(g);
        const auto& mods = g->modules();
        for (std::uint32_t mask = 1; mask < (1u << mods.size()); ++mask) {
            std::vector<Interval> parts;
            for (std::size_t k = 0; k < mods.size(); ++k)
                if (mask >> k & 1)
                    parts.push_back(mods[k]);
            ModuleSum t(parts);
            const bool tilt = is_tilting(e3, t);
            CHECK(is_maximal_rigid(e3, t) == tilt);
            CHECK(is_complete_rigid(e3, t) == tilt);
            CHECK(cg.is_mar(t) == tilt);
        }
    }
}
