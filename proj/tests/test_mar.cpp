#include "dexact/errors.hpp"
#include "dexact/exact_structures.hpp"
#include "dexact/mar.hpp"

#include "printers.hpp"

#include <doctest.h>

#include <algorithm>
#include <bit>
#include <set>

using namespace dexact;

namespace {

std::shared_ptr<const ArGrid> grid(const TypeAQuiver& q) { return std::make_shared<const ArGrid>(q); }

const TypeAQuiver kRlrr = build_type_a(5, "RLRR");

// Triangulations counted by brute force over noncrossing chord sets, with no
// reference to the flip-graph builder.
std::size_t brute_force_triangulations(int m)
{
    std::vector<std::pair<int, int>> chords;
    for (int i = 0; i < m; ++i)
        for (int j = i + 2; j < m; ++j)
            if (!(i == 0 && j == m - 1))
                chords.push_back({i, j});
    auto cross = [](std::pair<int, int> a, std::pair<int, int> b) {
        return (a.first < b.first && b.first < a.second && a.second < b.second)
               || (b.first < a.first && a.first < b.second && b.second < a.second);
    };
    std::size_t count = 0;
    for (std::uint32_t mask = 0; mask < (1u << chords.size()); ++mask) {
        if (std::popcount(mask) != m - 3)
            continue;
        bool ok = true;
        for (std::size_t a = 0; a < chords.size() && ok; ++a)
            for (std::size_t b = a + 1; b < chords.size() && ok; ++b)
                if ((mask >> a & 1) && (mask >> b & 1) && cross(chords[a], chords[b]))
                    ok = false;
        count += ok;
    }
    return count;
}

} // namespace

TEST_CASE("conflict graph edges")
{
    ConflictGraph cg(grid(kRlrr));
    CHECK(cg.has_edge(projective(kRlrr, 4), injective(kRlrr, 4)));
    CHECK_FALSE(cg.has_edge({4, 4}, injective(kRlrr, 3)));
    for (const auto& m : cg.vertices())
        if (cg.grid().in_boundary_rows(m))
            CHECK(cg.neighbours(static_cast<int>(kRlrr.index_of(m))) == 0);
}

TEST_CASE("MAR modules are counted by Catalan numbers")
{
    CHECK(brute_force_triangulations(4) == 2);
    CHECK(brute_force_triangulations(6) == 14);
    for (const auto& w : all_orientations(3))
        CHECK(enumerate_mar(ConflictGraph(grid(build_type_a(3, w)))).size() == 2);
    for (int n = 3; n <= 6; ++n) {
        const auto expect = brute_force_triangulations(n + 1);
        CHECK(catalan(n - 1) == expect);
        for (const auto& w : all_orientations(n)) {
            auto g = grid(build_type_a(n, w));
            ConflictGraph cg(g);
            auto mars = enumerate_mar(cg);
            CHECK(mars.size() == expect);
            CHECK(std::is_sorted(mars.begin(), mars.end()));
            const auto boundary = e_diamond(g).generators();
            for (const auto& t : mars) {
                CHECK(t.size() == static_cast<std::size_t>(2 * n - 1));
                for (const auto& b : boundary)
                    CHECK(t.contains(b));
                CHECK(cg.is_mar(t));
            }
        }
    }
    CHECK_THROWS_AS(enumerate_mar(ConflictGraph(grid(build_type_a(2, "R")))), MarDomainError);
    CHECK_THROWS_AS(require_mar_domain(2), MarDomainError);
}

TEST_CASE("projectives and boundary rows form a MAR module on RLRR")
{
    auto g = grid(kRlrr);
    ConflictGraph cg(g);
    ModuleSum minimum(relative_projectives(e_diamond(g)));
    CHECK(cg.is_mar(minimum));
    auto mars = enumerate_mar(cg);
    CHECK(std::find(mars.begin(), mars.end(), minimum) != mars.end());
}

TEST_CASE("mutation")
{
    auto g = grid(kRlrr);
    ConflictGraph cg(g);
    ModuleSum t(relative_projectives(e_diamond(g)));
    const Interval p4 = projective(kRlrr, 4), y = {2, 4};
    auto mu = mutate(cg, t, p4);
    CHECK(mu.replacement == y);
    CHECK(mu.direction == MutationDirection::Up);
    CHECK(mu.exchange.sub == p4);
    CHECK(mu.exchange.quot == y);
    CHECK(mu.exchange.middle == ModuleSum({projective(kRlrr, 3), {4, 4}}));
    CHECK(cg.is_mar(mu.result));

    // no other replacement gives a tilting module
    auto es = e_diamond(g);
    for (const auto& m : g->modules()) {
        if (t.contains(m))
            continue;
        std::vector<Interval> parts{m};
        for (const auto& s : t.summands())
            if (s != p4)
                parts.push_back(s);
        CHECK(is_tilting(es, ModuleSum(parts)) == (m == y));
    }

    auto back = mutate(cg, mu.result, y);
    CHECK(back.replacement == p4);
    CHECK(back.direction == MutationDirection::Down);
    CHECK(back.result == t);

    CHECK_THROWS_AS(mutate(cg, t, Interval{1, 1}), PreconditionError);
    CHECK_THROWS_AS(mutate(cg, t, Interval{1, 4}), PreconditionError);

    // involution, two-term middles in add(T \ X), and exactly one direction
    for (int n = 3; n <= 6; ++n)
        for (const auto& w : all_orientations(n)) {
            auto gg = grid(build_type_a(n, w));
            ConflictGraph c(gg);
            for (const auto& m : enumerate_mar(c)) {
                int mutable_count = 0;
                for (const auto& x : m.summands()) {
                    if (gg->in_boundary_rows(x))
                        continue;
                    ++mutable_count;
                    auto r = mutate(c, m, x);
                    CHECK(r.replacement != x);
                    CHECK(r.exchange.middle.size() == 2);
                    for (const auto& e : r.exchange.middle.summands()) {
                        CHECK(m.contains(e));
                        CHECK(e != x);
                    }
                    const bool up = r.exchange.sub == x && r.exchange.quot == r.replacement;
                    const bool down = r.exchange.quot == x && r.exchange.sub == r.replacement;
                    CHECK(up != down);
                    CHECK((r.direction == MutationDirection::Up) == up);
                    CHECK(mutate(c, r.result, r.replacement).result == m);
                }
                CHECK(mutable_count == n - 2);
            }
        }
}

TEST_CASE("mutation poset is a lattice with the expected ends")
{
    for (int n = 3; n <= 6; ++n)
        for (const auto& w : all_orientations(n)) {
            auto q = build_type_a(n, w);
            auto p = mar_poset(ConflictGraph(grid(q)));
            CHECK(p.elements.size() == catalan(n - 1));
            CHECK(p.acyclic);
            CHECK(p.is_lattice);
            CHECK(p.covers_are_minimal);
            REQUIRE(p.minimum >= 0);
            REQUIRE(p.maximum >= 0);
            for (int i = 1; i <= n; ++i) {
                CHECK(p.elements[p.minimum].contains(projective(q, i)));
                CHECK(p.elements[p.maximum].contains(injective(q, i)));
            }
            // unique source and sink of the Hasse diagram
            std::vector<int> indeg(p.elements.size()), outdeg(p.elements.size());
            for (const auto& c : p.hasse_edges) {
                ++outdeg[c.lower];
                ++indeg[c.upper];
            }
            CHECK(std::count(indeg.begin(), indeg.end(), 0) == 1);
            CHECK(std::count(outdeg.begin(), outdeg.end(), 0) == 1);
            CHECK(indeg[p.minimum] == 0);
            CHECK(outdeg[p.maximum] == 0);
        }

    // n = 4: five elements and five covers, a pentagon for every orientation
    std::set<std::size_t> shapes;
    for (const auto& w : all_orientations(4)) {
        auto p = mar_poset(ConflictGraph(grid(build_type_a(4, w))));
        CHECK(p.elements.size() == 5);
        shapes.insert(p.hasse_edges.size());
    }
    CHECK(shapes == std::set<std::size_t>{5});
}

TEST_CASE("polygon flip graphs")
{
    auto square = polygon_flip_graph(4);
    CHECK(square.triangulations.size() == 2);
    CHECK(square.graph.edge_count() == 1);

    auto hexagon = polygon_flip_graph(6);
    CHECK(hexagon.triangulations.size() == 14);
    for (const auto& adj : hexagon.graph.adj)
        CHECK(adj.size() == 3);
    for (int m = 4; m <= 9; ++m)
        CHECK(polygon_flip_graph(m).triangulations.size() == brute_force_triangulations(m));
    CHECK_THROWS(polygon_flip_graph(3));

    CHECK(chords_cross({0, 2}, {1, 3}));
    CHECK_FALSE(chords_cross({0, 2}, {2, 4}));
    CHECK_FALSE(chords_cross({0, 3}, {1, 2}));
}

TEST_CASE("exchange graphs match flip graphs")
{
    for (int n = 3; n <= 6; ++n)
        for (const auto& w : all_orientations(n)) {
            auto q = build_type_a(n, w);
            CHECK(verify_bijection(q));
            auto rep = bijection_report(ConflictGraph(grid(q)));
            CHECK(rep.isomorphic);
            CHECK(rep.mar_count == rep.triangulation_count);
            REQUIRE(rep.certificate.size() == rep.mar_count);
            auto ex = mar_poset(ConflictGraph(grid(q))).exchange_graph();
            CHECK(is_isomorphism(ex, polygon_flip_graph(n + 1).graph, rep.certificate));
        }
    auto p3 = mar_poset(ConflictGraph(grid(build_type_a(3, "RL"))));
    CHECK(p3.exchange_graph().edge_count() == 1);
}

TEST_CASE("graph isomorphism search")
{
    Graph path(4), star(4);
    path.add_edge(0, 1);
    path.add_edge(1, 2);
    path.add_edge(2, 3);
    star.add_edge(0, 1);
    star.add_edge(0, 2);
    star.add_edge(0, 3);
    CHECK_FALSE(find_isomorphism(path, star).has_value());

    Graph relabelled(4);
    relabelled.add_edge(3, 1);
    relabelled.add_edge(1, 0);
    relabelled.add_edge(0, 2);
    auto phi = find_isomorphism(path, relabelled);
    REQUIRE(phi);
    CHECK(is_isomorphism(path, relabelled, *phi));

    // two 3-regular graphs on six vertices: the prism and K_{3,3}
    Graph prism(6), k33(6);
    for (auto [a, b] : std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}, {1, 4}, {2, 5}})
        prism.add_edge(a, b);
    for (int a = 0; a < 3; ++a)
        for (int b = 3; b < 6; ++b)
            k33.add_edge(a, b);
    CHECK_FALSE(find_isomorphism(prism, k33).has_value());
}
