#include "dexact/mar.hpp"

#include "dexact/errors.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <map>
#include <stdexcept>

namespace dexact {

void require_mar_domain(int n)
{
    if (n < 3)
        throw MarDomainError(n);
    if (n > kMaxMarN)
        throw PreconditionError("the MAR layer supports n <= " + std::to_string(kMaxMarN) + " (got n = "
                                + std::to_string(n) + ")");
}

ConflictGraph::ConflictGraph(std::shared_ptr<const ArGrid> grid) : grid_(std::move(grid))
{
    require_mar_domain(grid_->n());
    const auto& mods = grid_->modules();
    adj_.assign(mods.size(), 0);
    for (std::size_t a = 0; a < mods.size(); ++a)
        for (std::size_t b = 0; b < mods.size(); ++b) {
            auto s = grid_->ext_class(mods[a], mods[b]);
            if (s && s->kind == SesKind::Diamond) {
                adj_[a] |= std::uint64_t{1} << b;
                adj_[b] |= std::uint64_t{1} << a;
            }
        }
}

bool ConflictGraph::has_edge(const Interval& a, const Interval& b) const
{
    const auto& q = grid_->quiver();
    return (adj_[q.index_of(a)] >> q.index_of(b)) & 1u;
}

std::vector<std::pair<Interval, Interval>> ConflictGraph::edges() const
{
    std::vector<std::pair<Interval, Interval>> out;
    const auto& mods = vertices();
    for (std::size_t a = 0; a < mods.size(); ++a)
        for (std::size_t b = a + 1; b < mods.size(); ++b)
            if ((adj_[a] >> b) & 1u)
                out.emplace_back(mods[a], mods[b]);
    return out;
}

std::uint64_t ConflictGraph::mask(const ModuleSum& s) const
{
    std::uint64_t m = 0;
    for (const auto& x : s.summands())
        m |= std::uint64_t{1} << grid_->quiver().index_of(x);
    return m;
}

ModuleSum ConflictGraph::module(std::uint64_t mask) const
{
    std::vector<Interval> out;
    for (std::size_t k = 0; k < vertices().size(); ++k)
        if ((mask >> k) & 1u)
            out.push_back(vertices()[k]);
    return ModuleSum(std::move(out));
}

bool ConflictGraph::is_independent(const ModuleSum& s) const
{
    const auto m = mask(s);
    for (std::size_t k = 0; k < adj_.size(); ++k)
        if (((m >> k) & 1u) && (adj_[k] & m))
            return false;
    return true;
}

bool ConflictGraph::is_mar(const ModuleSum& s) const
{
    if (!is_almost_rigid(s))
        return false;
    const auto m = mask(s);
    for (std::size_t k = 0; k < adj_.size(); ++k)
        if (!((m >> k) & 1u) && !(adj_[k] & m))
            return false; // k could be added
    return true;
}

ConflictGraph conflict_graph(std::shared_ptr<const ArGrid> grid) { return ConflictGraph(std::move(grid)); }

namespace {

// Maximal independent sets = maximal cliques of the complement (Bron-Kerbosch with pivot).
void bron_kerbosch(const std::vector<std::uint64_t>& comp, std::uint64_t r, std::uint64_t p, std::uint64_t x,
                   std::vector<std::uint64_t>& out)
{
    if (p == 0 && x == 0) {
        out.push_back(r);
        return;
    }
    int pivot = -1, best = -1;
    for (std::uint64_t px = p | x; px; px &= px - 1) {
        int u = std::countr_zero(px);
        int c = std::popcount(p & comp[u]);
        if (c > best) {
            best = c;
            pivot = u;
        }
    }
    for (std::uint64_t cand = p & ~comp[pivot]; cand; cand &= cand - 1) {
        int v = std::countr_zero(cand);
        const std::uint64_t bit = std::uint64_t{1} << v;
        bron_kerbosch(comp, r | bit, p & comp[v], x & comp[v], out);
        p &= ~bit;
        x |= bit;
    }
}

} // namespace

std::vector<ModuleSum> enumerate_mar(const ConflictGraph& g)
{
    const std::size_t count = g.vertices().size();
    const std::uint64_t all = count == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << count) - 1;
    std::vector<std::uint64_t> comp(count);
    for (std::size_t k = 0; k < count; ++k)
        comp[k] = ~g.neighbours(static_cast<int>(k)) & all & ~(std::uint64_t{1} << k);
    std::vector<std::uint64_t> masks;
    bron_kerbosch(comp, 0, all, 0, masks);
    std::vector<ModuleSum> out;
    for (auto m : masks)
        out.push_back(g.module(m));
    std::sort(out.begin(), out.end());
    return out;
}

const char* direction_name(MutationDirection d) { return d == MutationDirection::Up ? "up" : "down"; }

Mutation mutate(const ConflictGraph& g, const ModuleSum& t, const Interval& x)
{
    const auto& grid = g.grid();
    if (!g.is_mar(t))
        throw PreconditionError("module " + t.str() + " is not maximal almost rigid");
    if (!t.contains(x))
        throw PreconditionError(x.str() + " is not a summand of " + t.str());
    if (grid.in_boundary_rows(x))
        throw PreconditionError(x.str() + " lies in a boundary row and is not mutable");

    std::vector<Interval> rest;
    for (const auto& s : t.summands())
        if (s != x)
            rest.push_back(s);
    std::vector<Interval> found;
    for (const auto& y : g.vertices()) {
        if (t.contains(y))
            continue;
        auto cand = rest;
        cand.push_back(y);
        if (g.is_mar(ModuleSum(cand)))
            found.push_back(y);
    }
    if (found.size() != 1)
        throw std::logic_error("mutation of " + t.str() + " at " + x.str() + " has " + std::to_string(found.size())
                               + " complements");
    Mutation mu;
    mu.replacement = found.front();
    auto up = grid.ext_class(mu.replacement, x);
    auto down = grid.ext_class(x, mu.replacement);
    const bool is_up = up && up->kind == SesKind::Diamond;
    const bool is_down = down && down->kind == SesKind::Diamond;
    if (is_up == is_down)
        throw std::logic_error("exchange pair " + x.str() + ", " + mu.replacement.str()
                               + " does not have exactly one diamond direction");
    mu.exchange = is_up ? *up : *down;
    mu.direction = is_up ? MutationDirection::Up : MutationDirection::Down;
    const ModuleSum rest_sum(rest);
    for (const auto& e : mu.exchange.middle.summands())
        if (!rest_sum.contains(e))
            throw std::logic_error("exchange middle term " + e.str() + " is not in the remaining summands");
    rest.push_back(mu.replacement);
    mu.result = ModuleSum(std::move(rest));
    return mu;
}

namespace {

using Bits = std::vector<std::uint64_t>;

Bits make_bits(std::size_t n) { return Bits((n + 63) / 64, 0); }
void set_bit(Bits& b, std::size_t k) { b[k / 64] |= std::uint64_t{1} << (k % 64); }
bool test_bit(const Bits& b, std::size_t k) { return (b[k / 64] >> (k % 64)) & 1u; }
std::size_t count_bits(const Bits& b)
{
    std::size_t c = 0;
    for (auto w : b)
        c += static_cast<std::size_t>(std::popcount(w));
    return c;
}
Bits intersect(const Bits& a, const Bits& b)
{
    Bits out(a.size());
    for (std::size_t k = 0; k < a.size(); ++k)
        out[k] = a[k] & b[k];
    return out;
}

/// Greatest element of the common bound set, if it exists. `bound[k]` is the
/// down-set (for meets) or up-set (for joins) of k.
bool has_extremum(const std::vector<Bits>& bound, std::size_t a, std::size_t b)
{
    Bits common = intersect(bound[a], bound[b]);
    const std::size_t want = count_bits(common);
    if (want == 0)
        return false;
    for (std::size_t k = 0; k < bound.size(); ++k)
        if (test_bit(common, k) && count_bits(bound[k]) == want)
            return bound[k] == common;
    return false;
}

} // namespace

Graph MarPoset::exchange_graph() const
{
    Graph g(static_cast<int>(elements.size()));
    for (const auto& c : hasse_edges)
        g.add_edge(c.lower, c.upper);
    g.normalize();
    return g;
}

MarPoset mar_poset(const ConflictGraph& g)
{
    const auto& grid = g.grid();
    MarPoset p;
    p.elements = enumerate_mar(g);
    const std::size_t count = p.elements.size();
    std::map<std::uint64_t, int> index;
    for (std::size_t k = 0; k < count; ++k)
        index[g.mask(p.elements[k])] = static_cast<int>(k);

    std::vector<std::vector<int>> up_edges(count);
    std::vector<int> indegree(count, 0);
    for (std::size_t k = 0; k < count; ++k)
        for (const auto& x : p.elements[k].summands()) {
            if (grid.in_boundary_rows(x))
                continue;
            auto mu = mutate(g, p.elements[k], x);
            if (mu.direction != MutationDirection::Up)
                continue;
            const int j = index.at(g.mask(mu.result));
            p.hasse_edges.push_back(Cover{static_cast<int>(k), j, x, mu.replacement, mu.exchange});
            up_edges[k].push_back(j);
            ++indegree[j];
        }

    // Kahn order; down-sets follow it.
    std::deque<int> ready;
    for (std::size_t k = 0; k < count; ++k)
        if (indegree[k] == 0)
            ready.push_back(static_cast<int>(k));
    std::vector<int> order;
    auto deg = indegree;
    while (!ready.empty()) {
        int k = ready.front();
        ready.pop_front();
        order.push_back(k);
        for (int j : up_edges[k])
            if (--deg[j] == 0)
                ready.push_back(j);
    }
    p.acyclic = order.size() == count;
    if (!p.acyclic)
        return p;

    std::vector<Bits> down(count, make_bits(count)), up(count, make_bits(count));
    for (int k : order) {
        set_bit(down[k], k);
        for (int j : up_edges[k])
            for (std::size_t w = 0; w < down[k].size(); ++w)
                down[j][w] |= down[k][w];
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int k = *it;
        set_bit(up[k], k);
        for (int j : up_edges[k])
            for (std::size_t w = 0; w < up[k].size(); ++w)
                up[k][w] |= up[j][w];
    }

    std::vector<int> sources, sinks;
    for (std::size_t k = 0; k < count; ++k) {
        if (indegree[k] == 0)
            sources.push_back(static_cast<int>(k));
        if (up_edges[k].empty())
            sinks.push_back(static_cast<int>(k));
    }
    if (sources.size() == 1 && count_bits(up[sources[0]]) == count)
        p.minimum = sources[0];
    if (sinks.size() == 1 && count_bits(down[sinks[0]]) == count)
        p.maximum = sinks[0];

    p.covers_are_minimal = true;
    for (const auto& c : p.hasse_edges)
        if (count_bits(intersect(up[c.lower], down[c.upper])) != 2)
            p.covers_are_minimal = false;

    p.is_lattice = p.minimum >= 0 && p.maximum >= 0;
    for (std::size_t a = 0; a < count && p.is_lattice; ++a)
        for (std::size_t b = a + 1; b < count; ++b)
            if (!has_extremum(down, a, b) || !has_extremum(up, a, b)) {
                p.is_lattice = false;
                p.lattice_failure = std::make_pair(static_cast<int>(a), static_cast<int>(b));
                break;
            }

    const auto& q = grid.quiver();
    if (p.minimum >= 0) {
        p.minimum_has_projectives = true;
        for (int i = 1; i <= q.n(); ++i)
            p.minimum_has_projectives = p.minimum_has_projectives && p.elements[p.minimum].contains(projective(q, i));
    }
    if (p.maximum >= 0) {
        p.maximum_has_injectives = true;
        for (int i = 1; i <= q.n(); ++i)
            p.maximum_has_injectives = p.maximum_has_injectives && p.elements[p.maximum].contains(injective(q, i));
    }
    return p;
}

bool chords_cross(std::pair<int, int> a, std::pair<int, int> b)
{
    auto [i, j] = a;
    auto [k, l] = b;
    return (i < k && k < j && j < l) || (k < i && i < l && l < j);
}

namespace {

void triangulate(const std::vector<std::pair<int, int>>& diagonals, std::size_t next, std::size_t need,
                 std::vector<std::pair<int, int>>& chosen, std::vector<Triangulation>& out)
{
    if (chosen.size() == need) {
        out.push_back(Triangulation{chosen});
        return;
    }
    if (need - chosen.size() > diagonals.size() - next)
        return;
    const auto d = diagonals[next];
    bool fits = true;
    for (const auto& c : chosen)
        fits = fits && !chords_cross(c, d);
    if (fits) {
        chosen.push_back(d);
        triangulate(diagonals, next + 1, need, chosen, out);
        chosen.pop_back();
    }
    triangulate(diagonals, next + 1, need, chosen, out);
}

} // namespace

FlipGraph polygon_flip_graph(int m)
{
    if (m < 4)
        throw PreconditionError("polygon flip graph needs m >= 4 (got m = " + std::to_string(m) + ")");
    if (m > kMaxMarN + 1)
        throw PreconditionError("polygon flip graph supports m <= " + std::to_string(kMaxMarN + 1));
    std::vector<std::pair<int, int>> diagonals;
    for (int i = 0; i < m; ++i)
        for (int j = i + 2; j < m; ++j)
            if (!(i == 0 && j == m - 1))
                diagonals.emplace_back(i, j);
    FlipGraph fg;
    fg.m = m;
    std::vector<std::pair<int, int>> chosen;
    // noncrossing sets of m-3 diagonals are exactly the triangulations
    triangulate(diagonals, 0, static_cast<std::size_t>(m - 3), chosen, fg.triangulations);
    std::sort(fg.triangulations.begin(), fg.triangulations.end());
    fg.graph = Graph(static_cast<int>(fg.triangulations.size()));
    std::map<std::vector<std::pair<int, int>>, std::vector<int>> by_rest;
    for (std::size_t t = 0; t < fg.triangulations.size(); ++t) {
        const auto& ds = fg.triangulations[t].diagonals;
        for (std::size_t k = 0; k < ds.size(); ++k) {
            auto rest = ds;
            rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(k));
            by_rest[rest].push_back(static_cast<int>(t));
        }
    }
    for (const auto& [rest, ts] : by_rest)
        for (std::size_t a = 0; a < ts.size(); ++a)
            for (std::size_t b = a + 1; b < ts.size(); ++b)
                fg.graph.add_edge(ts[a], ts[b]);
    fg.graph.normalize();
    return fg;
}

BijectionReport bijection_report(const ConflictGraph& g)
{
    auto poset = mar_poset(g);
    auto flips = polygon_flip_graph(g.grid().n() + 1);
    BijectionReport r;
    r.mar_count = poset.elements.size();
    r.triangulation_count = flips.triangulations.size();
    auto phi = find_isomorphism(poset.exchange_graph(), flips.graph);
    if (phi) {
        r.isomorphic = true;
        r.certificate = std::move(*phi);
    }
    return r;
}

bool verify_bijection(const TypeAQuiver& q)
{
    require_mar_domain(q.n());
    return bijection_report(ConflictGraph(std::make_shared<const ArGrid>(q))).isomorphic;
}

std::uint64_t catalan(int k)
{
    std::uint64_t c = 1;
    for (int i = 0; i < k; ++i)
        c = c * 2 * (2 * i + 1) / (i + 2);
    return c;
}

} // namespace dexact
