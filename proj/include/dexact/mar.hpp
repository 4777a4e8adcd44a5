#pragma once

// Maximal almost rigid modules: enumeration, mutation, the poset of
// oriented mutations, and comparison with polygon flip graphs.

#include "dexact/ar_grid.hpp"
#include "dexact/graph_iso.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

namespace dexact {

/// Largest n accepted by the MAR layer (vertex sets are 64-bit masks).
inline constexpr int kMaxMarN = 10;

void require_mar_domain(int n);

class ConflictGraph {
public:
    explicit ConflictGraph(std::shared_ptr<const ArGrid> grid);

    const ArGrid& grid() const { return *grid_; }
    const std::vector<Interval>& vertices() const { return grid_->modules(); }
    bool has_edge(const Interval& a, const Interval& b) const;
    std::uint64_t neighbours(int k) const { return adj_[k]; }
    std::vector<std::pair<Interval, Interval>> edges() const;
    bool is_independent(const ModuleSum& s) const;
    bool is_almost_rigid(const ModuleSum& s) const { return s.basic() && is_independent(s); }
    bool is_mar(const ModuleSum& s) const;
    std::uint64_t mask(const ModuleSum& s) const;
    ModuleSum module(std::uint64_t mask) const;

private:
    std::shared_ptr<const ArGrid> grid_;
    std::vector<std::uint64_t> adj_;
};

ConflictGraph conflict_graph(std::shared_ptr<const ArGrid> grid);

/// All maximal almost rigid modules, lexicographic on their sorted summand lists.
std::vector<ModuleSum> enumerate_mar(const ConflictGraph& g);

enum class MutationDirection { Up, Down };
const char* direction_name(MutationDirection d);

struct Mutation {
    Interval replacement;
    SesClass exchange;
    MutationDirection direction = MutationDirection::Up;
    ModuleSum result;
};

Mutation mutate(const ConflictGraph& g, const ModuleSum& t, const Interval& x);

struct Cover {
    int lower = 0;
    int upper = 0;
    Interval removed;
    Interval added;
    SesClass exchange;
};

struct MarPoset {
    std::vector<ModuleSum> elements;
    std::vector<Cover> hasse_edges;
    int minimum = -1;
    int maximum = -1;
    bool acyclic = false;
    bool is_lattice = false;
    bool covers_are_minimal = false; // no cover is implied by a longer chain
    bool minimum_has_projectives = false;
    bool maximum_has_injectives = false;
    std::optional<std::pair<int, int>> lattice_failure;

    /// Undirected exchange graph on element indices.
    Graph exchange_graph() const;
};

MarPoset mar_poset(const ConflictGraph& g);

struct Triangulation {
    std::vector<std::pair<int, int>> diagonals; // sorted chords (i, j), i < j
    friend auto operator<=>(const Triangulation&, const Triangulation&) = default;
    friend bool operator==(const Triangulation&, const Triangulation&) = default;
};

struct FlipGraph {
    int m = 0;
    std::vector<Triangulation> triangulations;
    Graph graph;
};

bool chords_cross(std::pair<int, int> a, std::pair<int, int> b);
FlipGraph polygon_flip_graph(int m);

struct BijectionReport {
    bool isomorphic = false;
    std::size_t mar_count = 0;
    std::size_t triangulation_count = 0;
    std::vector<int> certificate; // MAR index -> triangulation index
};

BijectionReport bijection_report(const ConflictGraph& g);
bool verify_bijection(const TypeAQuiver& q);

std::uint64_t catalan(int k);

} // namespace dexact
