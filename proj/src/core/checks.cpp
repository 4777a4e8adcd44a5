#include "dexact/checks.hpp"

#include "dexact/beyond_type_a.hpp"
#include "dexact/exact_structures.hpp"
#include "dexact/mar.hpp"
#include "dexact/oracle_context.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <sstream>

namespace dexact {

using oracle::Rational;
using Rep = oracle::Rep<Rational>;
using Morphism = oracle::Morphism<Rational>;
using Ses = oracle::ExplicitSes<Rational>;

namespace {

/// Counts comparisons and keeps the first failure.
struct Tally {
    std::size_t cases = 0;
    std::string failure;

    bool expect(bool ok, const std::string& witness)
    {
        ++cases;
        if (!ok && failure.empty())
            failure = witness;
        return ok;
    }
    bool ok() const { return failure.empty(); }
};

CriterionResult finish(int id, std::string title, const Tally& t, std::string summary,
                       std::chrono::steady_clock::time_point start)
{
    CriterionResult r;
    r.id = id;
    r.title = std::move(title);
    r.cases = t.cases;
    r.passed = t.ok() && t.cases > 0;
    r.detail = t.ok() ? (t.cases > 0 ? std::move(summary) : "no cases ran") : t.failure;
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

std::string range_text(int lo, int hi) { return "n = " + std::to_string(lo) + ".." + std::to_string(hi); }

std::string where(const TypeAQuiver& q) { return "[" + std::to_string(q.n()) + " " + q.orientation() + "] "; }

template <class Fn>
void for_each_quiver(int n_lo, int n_hi, Fn&& fn)
{
    for (int n = n_lo; n <= n_hi; ++n)
        for (const auto& word : all_orientations(n))
            fn(TypeAQuiver(n, word));
}

std::vector<Interval> boundary(const ArGrid& g)
{
    auto out = g.row(1);
    for (const auto& m : g.row(g.n()))
        out.push_back(m);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

ModuleSum middle_of(const OracleContext& ctx, const Ses& s) { return ctx.model.decompose(s.middle); }

/// Explicit sequence (+) middle -> quot built from one basis map per summand.
std::optional<Ses> assemble(const OracleContext& ctx, const ModuleSum& middle, const Interval& quot)
{
    const auto& target = ctx.model.rep(quot);
    std::vector<Rep> parts;
    std::vector<Morphism> maps;
    for (const auto& c : middle.summands()) {
        auto basis = oracle::hom_space(ctx.model.rep(c), target);
        if (basis.size() != 1)
            return std::nullopt;
        parts.push_back(ctx.model.rep(c));
        maps.push_back(basis.front());
    }
    Ses s;
    s.quot = target;
    s.middle = oracle::direct_sum(parts, ctx.model.bound_quiver());
    s.p = oracle::from_sum(maps, target);
    auto k = oracle::kernel(s.p, s.middle);
    s.sub = k.object;
    s.i = k.inclusion;
    return s;
}

bool contains(const std::vector<Interval>& v, const Interval& m) { return std::find(v.begin(), v.end(), m) != v.end(); }

std::vector<Interval> to_intervals(const OracleContext& ctx, const std::vector<int>& idx)
{
    std::vector<Interval> out;
    for (int k : idx)
        out.push_back(ctx.model.interval(k));
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

CriterionResult check_hom_equivalence(int n_lo, int n_hi)
{
    auto start = std::chrono::steady_clock::now();
    Tally t;
    for_each_quiver(n_lo, n_hi, [&](const TypeAQuiver& q) {
        ArGrid g(q);
        TypeAOracle<Rational> model(q);
        for (const auto& m : g.modules())
            for (const auto& n : g.modules()) {
                const auto expected = oracle::hom_dim(model.rep(m), model.rep(n));
                t.expect(static_cast<std::size_t>(g.hom_dim(m, n)) == expected,
                         where(q) + "Hom(" + m.str() + ", " + n.str() + "): grid " + std::to_string(g.hom_dim(m, n))
                             + ", oracle " + std::to_string(expected));
            }
    });
    return finish(1, "Hom dimensions agree with the oracle", t,
                  std::to_string(t.cases) + " ordered pairs, " + range_text(n_lo, n_hi), start);
}

CriterionResult check_ext_equivalence(int n_lo, int n_hi)
{
    auto start = std::chrono::steady_clock::now();
    Tally t;
    for_each_quiver(n_lo, n_hi, [&](const TypeAQuiver& q) {
        auto g = std::make_shared<const ArGrid>(q);
        auto es = e_diamond(g);
        const auto& ctx = es.oracle();
        for (const auto& c : g->modules())
            for (const auto& a : g->modules()) {
                const auto& e = ctx.relative.ext(ctx.model.index(c), ctx.model.index(a));
                auto cls = g->ext_class(c, a);
                const std::string pair = where(q) + "Ext^1(" + c.str() + ", " + a.str() + ")";
                if (!t.expect(cls.has_value() == (e.dim() > 0),
                              pair + ": grid " + (cls ? "nonzero" : "zero") + ", oracle dim " + std::to_string(e.dim())))
                    continue;
                if (!cls)
                    continue;
                t.expect(e.dim() == 1, pair + ": oracle dimension " + std::to_string(e.dim()));
                auto mid = middle_of(ctx, e.realize({Rational(1)}));
                t.expect(mid == cls->middle, pair + ": grid middle " + cls->middle.str() + ", oracle " + mid.str());
                const bool two = mid.size() == 2;
                t.expect(two == (cls->kind == SesKind::Diamond),
                         pair + ": kind " + ses_kind_name(cls->kind) + " with middle " + mid.str());
            }
    });
    return finish(2, "Ext classes and middle terms agree with the oracle", t,
                  std::to_string(t.cases) + " comparisons, " + range_text(n_lo, n_hi), start);
}

CriterionResult check_diamond_characterization(int n_lo, int n_hi)
{
    auto start = std::chrono::steady_clock::now();
    Tally t;
    for_each_quiver(n_lo, n_hi, [&](const TypeAQuiver& q) {
        auto g = std::make_shared<const ArGrid>(q);
        auto es = e_diamond(g);
        const auto& ctx = es.oracle();
        for (const auto& c : g->modules())
            for (const auto& a : g->modules()) {
                const int ci = ctx.model.index(c), ai = ctx.model.index(a);
                const auto& e = ctx.relative.ext(ci, ai);
                const int comb = admissible_class_dim(es, c, a);
                const auto lin = ctx.relative.admissible_dim(ci, ai);
                const std::string pair = where(q) + "(" + c.str() + ", " + a.str() + ")";
                bool two = false;
                if (e.dim() > 0)
                    two = middle_of(ctx, e.realize({Rational(1)})).size() == 2;
                t.expect((comb == 1) == two, pair + ": admissible " + std::to_string(comb) + " but oracle middle has "
                                                 + (two ? "two" : "not two") + " summands");
                t.expect(static_cast<std::size_t>(comb) == lin,
                         pair + ": combinatorial admissible dimension " + std::to_string(comb) + ", oracle "
                             + std::to_string(lin));
            }
    });
    return finish(3, "Diamond classes are exactly the admissible ones", t,
                  std::to_string(t.cases) + " comparisons, " + range_text(n_lo, n_hi), start);
}

CriterionResult check_zero_auslander(int n_lo, int n_hi)
{
    auto start = std::chrono::steady_clock::now();
    Tally t;
    std::size_t steps = 0, witnesses = 0;
    for_each_quiver(n_lo, n_hi, [&](const TypeAQuiver& q) {
        auto g = std::make_shared<const ArGrid>(q);
        auto es = e_diamond(g);
        auto rep = zero_auslander_report(es);
        t.expect(rep.global_dim <= 1, where(q) + "global dimension " + std::to_string(rep.global_dim));
        t.expect(rep.dominant_dim_ok, where(q) + "dominant dimension check failed");
        t.expect(rep.is_0_auslander, where(q) + "not 0-Auslander");

        const auto& ctx = es.oracle();
        const auto proj = to_intervals(ctx, ctx.relative.relative_projectives());
        const auto inj = to_intervals(ctx, ctx.relative.relative_injectives());
        const auto pi = to_intervals(ctx, ctx.relative.relative_proj_injectives());
        t.expect(proj == rep.relative_projectives, where(q) + "relative projectives differ from the oracle");
        t.expect(inj == rep.relative_injectives, where(q) + "relative injectives differ from the oracle");
        t.expect(pi == rep.relative_proj_injectives, where(q) + "relative projective-injectives differ from the oracle");

        for (const auto& res : rep.resolutions) {
            const auto& m = res.target.summands().front();
            if (res.length == 0) {
                t.expect(contains(proj, m), where(q) + m.str() + " has length 0 but is not relatively projective");
                continue;
            }
            for (const auto& step : res.steps) {
                ++steps;
                const std::string label = where(q) + "resolution of " + m.str();
                auto s = assemble(ctx, step.middle, m);
                if (!t.expect(s.has_value(), label + ": a middle summand has no map onto " + m.str()))
                    continue;
                t.expect(oracle::is_epi(s->p), label + ": cover is not onto");
                t.expect(ctx.model.decompose(s->sub) == step.sub, label + ": kernel is not " + step.sub.str());
                t.expect(ctx.relative.is_admissible(*s), label + ": sequence is not admissible");
                for (const auto& x : step.middle.summands())
                    t.expect(contains(proj, x), label + ": middle summand " + x.str() + " not relatively projective");
                for (const auto& x : step.sub.summands())
                    t.expect(contains(proj, x), label + ": kernel summand " + x.str() + " not relatively projective");
            }
        }
        for (const auto& w : rep.dominant.witnesses) {
            if (w.trivial || !w.ses)
                continue;
            ++witnesses;
            const auto& s = *w.ses;
            const std::string label = where(q) + "dominant witness for " + w.projective.str();
            const int ci = ctx.model.index(s.quot), ai = ctx.model.index(s.sub);
            const auto& e = ctx.relative.ext(ci, ai);
            if (!t.expect(e.dim() == 1, label + ": Ext^1 is not one-dimensional"))
                continue;
            auto real = e.realize({Rational(1)});
            t.expect(middle_of(ctx, real) == s.middle, label + ": middle differs from " + s.middle.str());
            t.expect(ctx.relative.is_admissible(real), label + ": not admissible");
            for (const auto& x : s.middle.summands())
                t.expect(contains(pi, x), label + ": " + x.str() + " is not relatively projective-injective");
            t.expect(contains(inj, s.quot), label + ": " + s.quot.str() + " is not relatively injective");
        }
    });
    return finish(4, "The diamond structure is 0-Auslander", t,
                  std::to_string(steps) + " resolution steps and " + std::to_string(witnesses)
                      + " dominant witnesses re-verified, " + range_text(n_lo, n_hi),
                  start);
}

CriterionResult check_mar_tilting(int n_lo, int exhaustive_hi, int sampled_hi, int random_count, std::uint64_t seed)
{
    auto start = std::chrono::steady_clock::now();
    Tally t;
    std::size_t modules = 0;
    auto compare = [&](const TypeAQuiver& q, const ExactStructure& es, const ConflictGraph& cg, const ModuleSum& m) {
        ++modules;
        const bool mar = cg.is_mar(m);
        const bool tilting = is_tilting(es, m);
        const bool maximal = is_maximal_rigid(es, m);
        const bool complete = is_complete_rigid(es, m);
        t.expect(mar == tilting && mar == maximal && mar == complete,
                 where(q) + m.str() + ": MAR " + std::to_string(mar) + ", tilting " + std::to_string(tilting)
                     + ", maximal rigid " + std::to_string(maximal) + ", complete rigid " + std::to_string(complete));
    };

    for_each_quiver(n_lo, exhaustive_hi, [&](const TypeAQuiver& q) {
        auto g = std::make_shared<const ArGrid>(q);
        auto es = e_diamond(g);
        ConflictGraph cg(g);
        const auto& all = g->modules();
        const std::uint64_t count = std::uint64_t{1} << all.size();
        for (std::uint64_t mask = 0; mask < count; ++mask)
            compare(q, es, cg, cg.module(mask));
    });

    std::mt19937_64 rng(seed);
    std::size_t sampled = 0;
    for (int n = std::max(n_lo, exhaustive_hi + 1); n <= sampled_hi; ++n) {
        std::vector<std::shared_ptr<const ArGrid>> grids;
        std::vector<ExactStructure> structures;
        std::vector<ConflictGraph> graphs;
        for (const auto& word : all_orientations(n)) {
            grids.push_back(std::make_shared<const ArGrid>(TypeAQuiver(n, word)));
            structures.push_back(e_diamond(grids.back()));
            graphs.emplace_back(grids.back());
        }
        for (std::size_t k = 0; k < grids.size(); ++k)
            for (const auto& m : enumerate_mar(graphs[k]))
                compare(grids[k]->quiver(), structures[k], graphs[k], m);
        std::uniform_int_distribution<std::size_t> pick(0, grids.size() - 1);
        std::bernoulli_distribution keep(0.5);
        for (int r = 0; r < random_count; ++r) {
            const std::size_t k = pick(rng);
            const auto& cg = graphs[k];
            std::vector<int> order(grids[k]->modules().size());
            for (std::size_t v = 0; v < order.size(); ++v)
                order[v] = static_cast<int>(v);
            std::shuffle(order.begin(), order.end(), rng);
            std::uint64_t mask = 0;
            for (int v : order)
                if (!(cg.neighbours(v) & mask) && keep(rng))
                    mask |= std::uint64_t{1} << v;
            if (cg.is_mar(cg.module(mask))) {
                // drop one summand to fall below maximality
                std::vector<int> members;
                for (std::size_t v = 0; v < order.size(); ++v)
                    if (mask >> v & 1)
                        members.push_back(static_cast<int>(v));
                std::uniform_int_distribution<std::size_t> drop(0, members.size() - 1);
                mask &= ~(std::uint64_t{1} << members[drop(rng)]);
            }
            auto m = cg.module(mask);
            t.expect(cg.is_almost_rigid(m) && !cg.is_mar(m), where(grids[k]->quiver()) + "sampler produced " + m.str());
            compare(grids[k]->quiver(), structures[k], cg, m);
            ++sampled;
        }
    }
    return finish(5, "MAR, tilting, maximal rigid and complete rigid coincide", t,
                  std::to_string(modules) + " modules compared (" + std::to_string(sampled)
                      + " random rigid non-MAR), exhaustive " + range_text(n_lo, exhaustive_hi),
                  start);
}

CriterionResult check_counting(int n_lo, int n_hi)
{
    auto start = std::chrono::steady_clock::now();
    Tally t;
    std::string counts;
    for (int n = n_lo; n <= n_hi; ++n) {
        counts += (counts.empty() ? "" : ", ") + std::to_string(catalan(n - 1));
        for (const auto& word : all_orientations(n)) {
            TypeAQuiver q(n, word);
            auto g = std::make_shared<const ArGrid>(q);
            ConflictGraph cg(g);
            auto mars = enumerate_mar(cg);
            t.expect(mars.size() == catalan(n - 1), where(q) + std::to_string(mars.size()) + " MAR modules, expected "
                                                         + std::to_string(catalan(n - 1)));
            auto rows = boundary(*g);
            t.expect(static_cast<int>(rows.size()) == n + 1,
                     where(q) + "boundary rows hold " + std::to_string(rows.size()) + " modules");
            for (const auto& m : mars) {
                t.expect(static_cast<int>(m.size()) == 2 * n - 1,
                         where(q) + m.str() + " has " + std::to_string(m.size()) + " summands");
                for (const auto& b : rows)
                    t.expect(m.contains(b), where(q) + m.str() + " misses boundary module " + b.str());
            }
        }
    }
    return finish(6, "MAR modules are counted by Catalan numbers", t,
                  "counts " + counts + ", " + range_text(n_lo, n_hi), start);
}

CriterionResult check_bijection_lattice(int n_lo, int n_hi)
{
    auto start = std::chrono::steady_clock::now();
    Tally t;
    for_each_quiver(n_lo, n_hi, [&](const TypeAQuiver& q) {
        auto g = std::make_shared<const ArGrid>(q);
        ConflictGraph cg(g);
        auto poset = mar_poset(cg);
        auto flips = polygon_flip_graph(q.n() + 1);
        auto report = bijection_report(cg);
        t.expect(report.isomorphic, where(q) + "exchange graph is not isomorphic to the flip graph");
        t.expect(is_isomorphism(poset.exchange_graph(), flips.graph, report.certificate), where(q) + "isomorphism certificate does not verify");
        t.expect(poset.acyclic, where(q) + "Hasse diagram has a cycle");
        t.expect(poset.minimum >= 0 && poset.maximum >= 0, where(q) + "no unique minimum or maximum");
        t.expect(poset.minimum_has_projectives, where(q) + "minimum misses a projective");
        t.expect(poset.maximum_has_injectives, where(q) + "maximum misses an injective");
        t.expect(poset.is_lattice, where(q) + "not a lattice");
        t.expect(poset.covers_are_minimal, where(q) + "a cover is implied by a longer chain");
    });
    return finish(7, "Mutation graph is the flip graph; the poset is a lattice", t,
                  std::to_string(t.cases) + " checks with certificates, " + range_text(n_lo, n_hi), start);
}

namespace {

CriterionResult from_example(int id, std::string title, const ExampleReport& rep,
                             std::chrono::steady_clock::time_point start)
{
    Tally t;
    std::string summary;
    for (const auto& c : rep.checks) {
        t.expect(c.passed, c.name + ": " + c.detail);
        summary += (summary.empty() ? "" : ", ") + c.name;
    }
    return finish(id, std::move(title), t, summary, start);
}

/// Inflation of a nonsplit class, or the identity.
struct Inflation {
    Rep target;
    Morphism map;
};

} // namespace

CriterionResult check_d4_example()
{
    auto start = std::chrono::steady_clock::now();
    return from_example(8, "D4: pushout failure, pd two, MAR but not tilting", verify_d4_example(), start);
}

CriterionResult check_gentle_example()
{
    auto start = std::chrono::steady_clock::now();
    return from_example(9, "Gentle example: resolutions, proj-injectives, not 0-Auslander", verify_gentle_example(),
                        start);
}

CriterionResult check_exact_axioms(int n_lo, int n_hi, int composition_hi)
{
    auto start = std::chrono::steady_clock::now();
    Tally t;
    std::size_t pushouts = 0, pullbacks = 0, composites = 0;
    for_each_quiver(n_lo, n_hi, [&](const TypeAQuiver& q) {
        auto g = std::make_shared<const ArGrid>(q);
        auto es = e_diamond(g);
        const auto& ctx = es.oracle();
        const auto& mods = g->modules();

        // A pushout or pullback of an admissible class must be split or a diamond, and admissible.
        auto judge = [&](const Ses& s, const Interval& quot, const Interval& sub, const std::string& label) {
            const auto& e = ctx.relative.ext(ctx.model.index(quot), ctx.model.index(sub));
            auto cls = e.class_of(s);
            const bool split = std::all_of(cls.begin(), cls.end(), [](const Rational& x) { return x == 0; });
            t.expect(oracle::is_exact(s), label + ": not exact");
            t.expect(ctx.relative.is_admissible(s), label + ": not admissible");
            if (!split) {
                auto mid = middle_of(ctx, s);
                t.expect(mid.size() == 2 && admissible_class_dim(es, quot, sub) == 1,
                         label + ": nonsplit with middle " + mid.str());
            }
        };

        for (const auto& c : mods)
            for (const auto& a : mods) {
                auto split = oracle::split_ses(ctx.model.rep(a), ctx.model.rep(c));
                t.expect(ctx.relative.is_admissible(split), where(q) + "split sequence " + a.str() + " + " + c.str()
                                                                 + " is not admissible");
                if (admissible_class_dim(es, c, a) != 1)
                    continue;
                auto xi = ctx.relative.ext(ctx.model.index(c), ctx.model.index(a)).realize({Rational(1)});
                for (const auto& other : mods) {
                    for (const auto& f : oracle::hom_space(ctx.model.rep(a), ctx.model.rep(other))) {
                        ++pushouts;
                        judge(oracle::pushout(xi, f, ctx.model.rep(other)), c, other,
                              where(q) + "pushout of " + a.str() + " -> ? -> " + c.str() + " along " + a.str() + " -> "
                                  + other.str());
                    }
                    for (const auto& h : oracle::hom_space(ctx.model.rep(other), ctx.model.rep(c))) {
                        ++pullbacks;
                        judge(oracle::pullback(xi, h, ctx.model.rep(other)), other, a,
                              where(q) + "pullback of " + a.str() + " -> ? -> " + c.str() + " along " + other.str()
                                  + " -> " + c.str());
                    }
                }
            }

        if (q.n() > composition_hi)
            return;
        // Composites of admissible monos: an admissible class out of A, followed by identities
        // or admissible classes out of each summand of its middle.
        auto out_of = [&](const Interval& m) {
            std::vector<Inflation> options{{ctx.model.rep(m), oracle::identity(ctx.model.rep(m))}};
            for (const auto& c : mods)
                if (admissible_class_dim(es, c, m) == 1) {
                    auto s = ctx.relative.ext(ctx.model.index(c), ctx.model.index(m)).realize({Rational(1)});
                    options.push_back({s.middle, s.i});
                }
            return options;
        };
        for (const auto& c : mods)
            for (const auto& a : mods) {
                if (admissible_class_dim(es, c, a) != 1)
                    continue;
                auto xi = ctx.relative.ext(ctx.model.index(c), ctx.model.index(a)).realize({Rational(1)});
                auto dec = oracle::decompose(xi.middle, ctx.model.catalog());
                std::vector<Rep> pieces;
                for (int k : dec.indices)
                    pieces.push_back(ctx.model.catalog().at(k));
                auto split_iso = oracle::inverse_iso(oracle::from_sum(dec.inclusions, xi.middle));
                std::vector<std::vector<Inflation>> choices;
                for (int k : dec.indices)
                    choices.push_back(out_of(ctx.model.interval(k)));
                std::vector<std::size_t> pick(choices.size(), 0);
                while (true) {
                    bool all_identity = std::all_of(pick.begin(), pick.end(), [](std::size_t p) { return p == 0; });
                    if (!all_identity) {
                        std::vector<Rep> targets;
                        for (std::size_t k = 0; k < pick.size(); ++k)
                            targets.push_back(choices[k][pick[k]].target);
                        auto big = oracle::direct_sum(targets, ctx.model.bound_quiver());
                        auto inj = oracle::sum_injections(targets, big);
                        std::vector<Morphism> legs;
                        for (std::size_t k = 0; k < pick.size(); ++k)
                            legs.push_back(oracle::compose(inj[k], choices[k][pick[k]].map));
                        auto second = oracle::compose(oracle::from_sum(legs, big), split_iso);
                        auto composite = oracle::compose(second, xi.i);
                        ++composites;
                        const std::string label = where(q) + "composite inflation out of " + a.str();
                        if (t.expect(oracle::is_mono(composite), label + ": not a monomorphism")) {
                            Ses s;
                            s.sub = xi.sub;
                            s.middle = big;
                            s.i = composite;
                            auto co = oracle::cokernel(composite, big);
                            s.quot = co.object;
                            s.p = co.projection;
                            t.expect(ctx.relative.is_admissible(s), label + ": cokernel sequence is not admissible");
                        }
                    }
                    std::size_t k = 0;
                    while (k < pick.size() && ++pick[k] == choices[k].size())
                        pick[k++] = 0;
                    if (k == pick.size())
                        break;
                }
                // classes with the whole middle as sub: basis vectors and their sum
                for (const auto& other : mods) {
                    oracle::ExtModel<Rational> e(ctx.model.rep(other), xi.middle);
                    std::vector<std::vector<Rational>> trials;
                    for (std::size_t j = 0; j < e.dim(); ++j) {
                        std::vector<Rational> v(e.dim(), Rational(0));
                        v[j] = 1;
                        trials.push_back(v);
                    }
                    if (e.dim() > 1)
                        trials.emplace_back(e.dim(), Rational(1));
                    for (const auto& v : trials) {
                        auto s2 = e.realize(v);
                        if (!ctx.relative.is_admissible(s2))
                            continue;
                        ++composites;
                        auto composite = oracle::compose(s2.i, xi.i);
                        const std::string label =
                            where(q) + "composite of " + a.str() + " -> ? -> " + c.str() + " and a class ending in " + other.str();
                        if (t.expect(oracle::is_mono(composite), label + ": not a monomorphism")) {
                            Ses s;
                            s.sub = xi.sub;
                            s.middle = s2.middle;
                            s.i = composite;
                            auto co = oracle::cokernel(composite, s2.middle);
                            s.quot = co.object;
                            s.p = co.projection;
                            t.expect(ctx.relative.is_admissible(s), label + ": cokernel sequence is not admissible");
                        }
                    }
                }
            }
    });
    return finish(10, "Admissible classes are closed under pushout, pullback and composition", t,
                  std::to_string(pushouts) + " pushouts, " + std::to_string(pullbacks) + " pullbacks, "
                      + std::to_string(composites) + " composite inflations, " + range_text(n_lo, n_hi),
                  start);
}

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options,
                                            const std::function<void(const CriterionResult&)>& on_result)
{
    const int cap = options.max_n;
    const int lo = std::max(2, std::min(3, cap));
    auto clip = [&](int hi) { return std::min(hi, cap); };
    std::vector<CriterionResult> out;
    auto record = [&](CriterionResult r) {
        if (on_result)
            on_result(r);
        out.push_back(std::move(r));
    };
    auto skipped = [&](int id, const std::string& title) {
        CriterionResult r;
        r.id = id;
        r.title = title;
        r.passed = true;
        r.skipped = true;
        r.detail = "skipped: maximal almost rigid theory needs n >= 3 (max n is " + std::to_string(cap) + ")";
        return r;
    };

    record(check_hom_equivalence(lo, clip(7)));
    record(check_ext_equivalence(lo, clip(6)));
    record(check_diamond_characterization(lo, clip(6)));
    record(check_zero_auslander(lo, clip(7)));
    if (cap >= 3) {
        record(check_mar_tilting(3, clip(4), clip(6), options.random_rigid, options.seed));
        record(check_counting(3, clip(7)));
        record(check_bijection_lattice(3, clip(6)));
    } else {
        record(skipped(5, "MAR, tilting, maximal rigid and complete rigid coincide"));
        record(skipped(6, "MAR modules are counted by Catalan numbers"));
        record(skipped(7, "Mutation graph is the flip graph; the poset is a lattice"));
    }
    record(check_d4_example());
    record(check_gentle_example());
    record(check_exact_axioms(lo, clip(5), clip(4)));
    return out;
}

} // namespace dexact
