#pragma once

// Type-A quivers with arbitrary orientation and their interval modules.

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace dexact {

/// Indecomposable type-A module, identified by its support [lo, hi] (1-based).
struct Interval {
    int lo = 1;
    int hi = 1;

    bool contains(int v) const { return lo <= v && v <= hi; }
    int dim() const { return hi - lo + 1; }
    std::string str() const;

    friend auto operator<=>(const Interval&, const Interval&) = default;
    friend bool operator==(const Interval&, const Interval&) = default;
};

class TypeAQuiver {
public:
    /// orientation[i-1] == 'R' means i -> i+1, 'L' means i <- i+1.
    TypeAQuiver(int n, std::string orientation);

    int n() const { return n_; }
    const std::string& orientation() const { return orientation_; }
    /// True if the arrow between i and i+1 points to i+1.
    bool points_right(int i) const { return orientation_[i - 1] == 'R'; }
    bool is_linear() const;

    void check_vertex(int i) const;
    void check_interval(const Interval& m) const;

    /// Canonical index of an interval in list_indecomposables order.
    std::size_t index_of(const Interval& m) const;
    std::size_t module_count() const { return static_cast<std::size_t>(n_) * (n_ + 1) / 2; }

    friend bool operator==(const TypeAQuiver&, const TypeAQuiver&) = default;

private:
    int n_;
    std::string orientation_;
};

TypeAQuiver build_type_a(int n, const std::string& orientation);

/// All 2^(n-1) orientation words in lexicographic order (L < R).
std::vector<std::string> all_orientations(int n);

Interval projective(const TypeAQuiver& q, int i);
Interval injective(const TypeAQuiver& q, int i);
Interval simple(const TypeAQuiver& q, int i);

bool is_projective(const TypeAQuiver& q, const Interval& m);
bool is_injective(const TypeAQuiver& q, const Interval& m);

/// All n(n+1)/2 intervals, lexicographic by (lo, hi).
std::vector<Interval> list_indecomposables(const TypeAQuiver& q);

/// Vertices of m with no arrow coming in from inside m (the top of m).
std::vector<int> top_vertices(const TypeAQuiver& q, const Interval& m);

/// Radical-filtration name, e.g. "3/24/5" for [2,5] on RLRR. Layers are longest
/// paths from the top; vertices above 9 are separated by spaces.
std::string display_name(const TypeAQuiver& q, const Interval& m);

/// Finite multiset of intervals kept sorted.
class ModuleSum {
public:
    ModuleSum() = default;
    explicit ModuleSum(std::vector<Interval> summands);

    const std::vector<Interval>& summands() const { return summands_; }
    std::size_t size() const { return summands_.size(); }
    bool empty() const { return summands_.empty(); }
    bool basic() const;
    bool contains(const Interval& m) const;
    std::vector<int> dim_vector(int n) const;
    std::string str() const;

    friend auto operator<=>(const ModuleSum&, const ModuleSum&) = default;
    friend bool operator==(const ModuleSum&, const ModuleSum&) = default;

private:
    std::vector<Interval> summands_;
};

} // namespace dexact
