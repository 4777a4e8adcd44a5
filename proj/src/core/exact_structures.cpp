#include "dexact/exact_structures.hpp"

#include "dexact/errors.hpp"
#include "dexact/oracle_context.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace dexact {

struct OracleSlot {
    std::once_flag once;
    std::unique_ptr<OracleContext> context;
};

namespace {

using oracle::Rational;

std::vector<Interval> boundary_rows(const ArGrid& g)
{
    auto out = g.row(1);
    auto top = g.row(g.n());
    out.insert(out.end(), top.begin(), top.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Interval> sorted_unique(std::vector<Interval> v)
{
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

bool contains(const std::vector<Interval>& sorted, const Interval& m)
{
    return std::binary_search(sorted.begin(), sorted.end(), m);
}

} // namespace

ExactStructure::ExactStructure(std::shared_ptr<const ArGrid> grid, std::vector<Interval> generators, std::string label)
    : grid_(std::move(grid)), generators_(sorted_unique(std::move(generators))), label_(std::move(label)),
      oracle_(std::make_shared<OracleSlot>())
{
    member_.assign(grid_->quiver().module_count(), false);
    for (const auto& g : generators_)
        member_[grid_->quiver().index_of(g)] = true;
    diamond_ = generators_ == boundary_rows(*grid_);
}

bool ExactStructure::is_generator(const Interval& m) const { return member_[grid_->quiver().index_of(m)]; }

OracleContext& ExactStructure::oracle() const
{
    std::call_once(oracle_->once,
                   [&] { oracle_->context = std::make_unique<OracleContext>(grid_->quiver(), generators_); });
    return *oracle_->context;
}

ExactStructure e_diamond(std::shared_ptr<const ArGrid> grid)
{
    auto gens = boundary_rows(*grid);
    return ExactStructure(std::move(grid), std::move(gens), "E_diamond");
}

ExactStructure f_x(std::shared_ptr<const ArGrid> grid, std::vector<Interval> generators)
{
    return ExactStructure(std::move(grid), std::move(generators), "F_X");
}

ExactStructure f_empty(std::shared_ptr<const ArGrid> grid) { return ExactStructure(std::move(grid), {}, "F_empty"); }

ExactStructure f_all(std::shared_ptr<const ArGrid> grid)
{
    auto all = grid->modules();
    return ExactStructure(std::move(grid), std::move(all), "F_all");
}

bool is_admissible(const ExactStructure& es, const Interval& sub, const Interval& quot)
{
    const auto& g = es.grid();
    auto s = g.ext_class(quot, sub);
    if (!s)
        throw PreconditionError("Ext^1(" + quot.str() + ", " + sub.str() + ") = 0: no nonsplit class to test");
    for (const auto& x : es.generators()) {
        if (g.hom_dim(x, quot) == 0)
            continue;
        bool lifts = false;
        for (const auto& e : s->middle.summands())
            lifts = lifts || g.hom_dim(x, e) == 1;
        if (!lifts)
            return false;
    }
    return true;
}

int admissible_class_dim(const ExactStructure& es, const Interval& quot, const Interval& sub)
{
    if (!es.grid().ext_class(quot, sub))
        return 0;
    return is_admissible(es, sub, quot) ? 1 : 0;
}

std::vector<Interval> relative_projectives(const ExactStructure& es)
{
    auto out = es.generators();
    for (int i = 1; i <= es.grid().n(); ++i)
        out.push_back(projective(es.quiver(), i));
    return sorted_unique(std::move(out));
}

std::vector<Interval> relative_injectives(const ExactStructure& es)
{
    std::vector<Interval> out;
    for (const auto& x : es.generators())
        if (auto t = es.grid().tau(x))
            out.push_back(*t);
    for (int i = 1; i <= es.grid().n(); ++i)
        out.push_back(injective(es.quiver(), i));
    return sorted_unique(std::move(out));
}

std::vector<Interval> relative_proj_injectives(const ExactStructure& es)
{
    auto p = relative_projectives(es);
    auto i = relative_injectives(es);
    std::vector<Interval> out;
    std::set_intersection(p.begin(), p.end(), i.begin(), i.end(), std::back_inserter(out));
    return out;
}

std::vector<Interval> relative_projectives_by_scan(const ExactStructure& es)
{
    std::vector<Interval> out;
    for (const auto& c : es.grid().modules()) {
        bool none = true;
        for (const auto& a : es.grid().modules())
            none = none && admissible_class_dim(es, c, a) == 0;
        if (none)
            out.push_back(c);
    }
    return out;
}

std::vector<Interval> relative_injectives_by_scan(const ExactStructure& es)
{
    std::vector<Interval> out;
    for (const auto& a : es.grid().modules()) {
        bool none = true;
        for (const auto& c : es.grid().modules())
            none = none && admissible_class_dim(es, c, a) == 0;
        if (none)
            out.push_back(a);
    }
    return out;
}

PdResult pd_e(const ExactStructure& es, const Interval& m)
{
    if (!es.is_diamond())
        throw PreconditionError("pd_e constructs resolutions for the diamond structure only");
    const auto& g = es.grid();
    PdResult r;
    r.resolution.target = ModuleSum({m});
    if (contains(relative_projectives(es), m))
        return r;

    const Interval e1 = g.end_of_ray(m, Direction::SW);
    const Interval e2 = g.end_of_ray(m, Direction::NW);
    const auto p1 = g.position(e1);
    const auto p2 = g.position(e2);
    // Meeting point of the north-west ray from e1 and the south-west ray from e2.
    const int rise = p2.y - p1.y;
    const int run = p2.x - p1.x;
    const int from_e1 = (rise - run) / 2;
    const int from_e2 = (rise + run) / 2;
    std::optional<Interval> meet;
    if (from_e1 >= 0 && from_e2 >= 0)
        meet = g.at(p1.x - from_e1, p1.y + from_e1);

    ResolutionStep step;
    step.quot = ModuleSum({m});
    if (meet) {
        step.sub = ModuleSum({*meet});
        step.middle = ModuleSum({e1, e2});
    } else {
        // Augmented cover P + E1 + E2 -> M; its kernel comes from the oracle.
        std::vector<Interval> cover;
        for (int v : top_vertices(es.quiver(), m))
            cover.push_back(projective(es.quiver(), v));
        cover.push_back(e1);
        cover.push_back(e2);
        step.middle = ModuleSum(cover);
        step.augmented = true;

        const auto& model = es.oracle().model;
        const auto& target = model.rep(m);
        std::vector<oracle::Rep<Rational>> parts;
        std::vector<oracle::Morphism<Rational>> maps;
        for (const auto& c : step.middle.summands()) {
            auto basis = oracle::hom_space(model.rep(c), target);
            if (basis.size() != 1)
                throw std::logic_error("augmented cover summand " + c.str() + " has no map to " + m.str());
            parts.push_back(model.rep(c));
            maps.push_back(basis.front());
        }
        auto middle = oracle::direct_sum(parts, model.bound_quiver());
        auto f = oracle::from_sum(maps, target);
        if (!oracle::is_epi(f))
            throw std::logic_error("augmented cover of " + m.str() + " is not onto");
        step.sub = model.decompose(oracle::kernel(f, middle).object);
        auto rp = relative_projectives(es);
        for (const auto& k : step.sub.summands())
            if (!contains(rp, k))
                throw std::logic_error("kernel of the augmented cover of " + m.str() + " has a summand " + k.str()
                                       + " that is not relatively projective");
    }
    r.pd = 1;
    r.resolution.length = 1;
    r.resolution.steps.push_back(std::move(step));
    return r;
}

DominantReport dominant_dim_check(const ExactStructure& es)
{
    if (!es.is_diamond())
        throw PreconditionError("dominant_dim_check uses the hammock witnesses of the diamond structure");
    const auto& g = es.grid();
    const auto pi = relative_proj_injectives(es);
    const auto ri = relative_injectives(es);
    DominantReport rep;
    for (const auto& p : relative_projectives(es)) {
        DominantWitness w;
        w.projective = p;
        if (contains(pi, p)) {
            w.trivial = true;
            w.ok = true;
        } else {
            int vertex = 0;
            for (int i = 1; i <= g.n(); ++i)
                if (projective(es.quiver(), i) == p)
                    vertex = i;
            if (vertex > 1 && vertex < g.n()) {
                auto h = g.projective_hammock(vertex);
                w.ses = h.ses;
                w.ok = h.ses && contains(pi, h.e1) && contains(pi, h.e2) && contains(ri, h.ses->quot)
                       && is_admissible(es, h.ses->sub, h.ses->quot);
            }
        }
        rep.ok = rep.ok && w.ok;
        rep.witnesses.push_back(std::move(w));
    }
    return rep;
}

AuslanderReport zero_auslander_report(const ExactStructure& es)
{
    AuslanderReport r;
    if (es.is_diamond()) {
        r.method = "combinatorial";
        r.relative_projectives = relative_projectives(es);
        r.relative_injectives = relative_injectives(es);
        r.relative_proj_injectives = relative_proj_injectives(es);
        for (const auto& m : es.grid().modules()) {
            auto pd = pd_e(es, m);
            r.global_dim = std::max(r.global_dim, pd.pd);
            r.resolutions.push_back(std::move(pd.resolution));
        }
        r.dominant = dominant_dim_check(es);
        r.dominant_dim_ok = r.dominant.ok;
    } else {
        r.method = "oracle";
        auto& ctx = es.oracle();
        auto rep = oracle::oracle_auslander_report(ctx.relative);
        auto to_intervals = [&](const std::vector<int>& idx) {
            std::vector<Interval> out;
            for (int k : idx)
                out.push_back(ctx.model.interval(k));
            return sorted_unique(std::move(out));
        };
        r.relative_projectives = to_intervals(rep.relative_projectives);
        r.relative_injectives = to_intervals(rep.relative_injectives);
        r.relative_proj_injectives = to_intervals(rep.relative_proj_injectives);
        r.global_dim = rep.global_dim;
        r.dominant_dim_ok = rep.dominant_dim_ok;
        r.dominant.ok = rep.dominant_dim_ok;
    }
    r.is_0_auslander = r.global_dim >= 0 && r.global_dim <= 1 && r.dominant_dim_ok;
    return r;
}

int relative_pd(const ExactStructure& es, const Interval& m)
{
    if (es.is_diamond())
        return pd_e(es, m).pd;
    auto& ctx = es.oracle();
    return ctx.relative.relative_pd(ctx.model.rep(m)).length;
}

bool is_rigid(const ExactStructure& es, const ModuleSum& t)
{
    for (const auto& x : t.summands())
        for (const auto& y : t.summands())
            if (admissible_class_dim(es, x, y) != 0)
                return false;
    return true;
}

namespace {

void require_basic(const ModuleSum& t)
{
    if (!t.basic())
        throw PreconditionError("module " + t.str() + " is not basic");
}

/// An admissible 0 -> P -> T1 -> T2 -> 0 with T1, T2 in add(t).
bool coresolves(const ExactStructure& es, const ModuleSum& t, const Interval& p)
{
    if (t.contains(p))
        return true;
    const auto& g = es.grid();
    // combinatorial witnesses: a single admissible class with middle and quotient in t
    for (const auto& q : t.summands()) {
        auto s = g.ext_class(q, p);
        if (!s || !is_admissible(es, p, q))
            continue;
        bool inside = true;
        for (const auto& e : s->middle.summands())
            inside = inside && t.contains(e);
        if (inside)
            return true;
    }
    // Universal left add(t)-approximation. For rigid t every such sequence is a left
    // approximation, so one exists iff this one is admissible with cokernel in add(t).
    auto& ctx = es.oracle();
    std::vector<int> into;
    for (const auto& m : t.summands())
        into.push_back(ctx.model.index(m));
    auto ses = ctx.relative.left_approximation(ctx.model.rep(p), into);
    if (!oracle::is_mono(ses.i) || !ctx.relative.is_admissible(ses))
        return false;
    const auto cokernel = ctx.model.decompose(ses.quot);
    for (const auto& c : cokernel.summands())
        if (!t.contains(c))
            return false;
    return true;
}

} // namespace

bool is_tilting(const ExactStructure& es, const ModuleSum& t)
{
    require_basic(t);
    if (!is_rigid(es, t))
        return false;
    for (const auto& m : t.summands())
        if (relative_pd(es, m) > 1 || relative_pd(es, m) < 0)
            return false;
    for (const auto& p : relative_projectives(es))
        if (!coresolves(es, t, p))
            return false;
    return true;
}

bool is_maximal_rigid(const ExactStructure& es, const ModuleSum& t)
{
    require_basic(t);
    if (!is_rigid(es, t))
        return false;
    for (const auto& y : es.grid().modules()) {
        if (t.contains(y))
            continue;
        auto bigger = t.summands();
        bigger.push_back(y);
        if (is_rigid(es, ModuleSum(bigger)))
            return false;
    }
    return true;
}

bool is_complete_rigid(const ExactStructure& es, const ModuleSum& t)
{
    require_basic(t);
    return is_rigid(es, t) && t.size() == relative_projectives(es).size();
}

} // namespace dexact
