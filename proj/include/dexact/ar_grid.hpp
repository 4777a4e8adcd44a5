#pragma once

// The Auslander-Reiten quiver of a type-A quiver embedded in Z x [n], built by
// knitting, and the coordinate calculus for Hom and Ext between intervals.

#include "dexact/quiver.hpp"

#include <optional>
#include <utility>
#include <variant>
#include <vector>

namespace dexact {

struct GridPoint {
    int x = 0;
    int y = 0;
    friend bool operator==(const GridPoint&, const GridPoint&) = default;
};

enum class Direction { NE, SE, SW, NW };

struct NonRectangular {
    friend bool operator==(const NonRectangular&, const NonRectangular&) = default;
};
struct RectangularDegenerate {
    friend bool operator==(const RectangularDegenerate&, const RectangularDegenerate&) = default;
};
/// e1 is the top corner of the rectangle, e2 the bottom corner.
struct RectangularNonDegenerate {
    Interval e1, e2;
    friend bool operator==(const RectangularNonDegenerate&, const RectangularNonDegenerate&) = default;
};
struct LowerDeleted {
    Interval e;
    friend bool operator==(const LowerDeleted&, const LowerDeleted&) = default;
};
struct UpperDeleted {
    Interval e;
    friend bool operator==(const UpperDeleted&, const UpperDeleted&) = default;
};

using PairClass = std::variant<NonRectangular, RectangularDegenerate, RectangularNonDegenerate, LowerDeleted, UpperDeleted>;

bool is_rectangular(const PairClass& c);
bool is_deleted(const PairClass& c);
const char* pair_class_name(const PairClass& c);

enum class SesKind { Split, Diamond, IndecomposableMiddle };
const char* ses_kind_name(SesKind k);

struct SesClass {
    Interval sub;
    ModuleSum middle;
    Interval quot;
    SesKind kind = SesKind::Split;
    friend bool operator==(const SesClass&, const SesClass&) = default;
};

enum class Side { AsQuotient, AsSub };

struct Hammock {
    Interval e1; // end of the south-east ray, in the bottom row
    Interval e2; // end of the north-east ray, in the top row
    std::optional<SesClass> ses;
};

class ArGrid {
public:
    explicit ArGrid(TypeAQuiver q);

    const TypeAQuiver& quiver() const { return q_; }
    int n() const { return q_.n(); }
    const std::vector<Interval>& modules() const { return modules_; }

    GridPoint position(const Interval& m) const;
    std::optional<Interval> at(int x, int y) const;
    int width() const { return width_; }

    std::optional<Interval> tau(const Interval& m) const;
    std::optional<Interval> tau_inverse(const Interval& m) const;

    /// Modules in row y (the tau-orbit of P(y)), left to right.
    std::vector<Interval> row(int y) const;
    bool in_boundary_rows(const Interval& m) const;

    /// Irreducible maps, as (source, target) pairs in canonical order.
    std::vector<std::pair<Interval, Interval>> arrows() const;

    /// Modules on the ray or coray from m, starting with m itself.
    std::vector<Interval> ray(const Interval& m, Direction d) const;
    Interval end_of_ray(const Interval& m, Direction d) const { return ray(m, d).back(); }

    PairClass classify_pair(const Interval& m, const Interval& n) const;
    int hom_dim(const Interval& m, const Interval& n) const;
    /// The nonsplit class of Ext^1(quot, sub), if any.
    std::optional<SesClass> ext_class(const Interval& quot, const Interval& sub) const;

    std::vector<Interval> region_right(const Interval& m) const;
    std::vector<Interval> region_left(const Interval& m) const;

    bool diamond_capable(const Interval& m, Side side) const;
    Hammock projective_hammock(int i) const;

private:
    int index(const Interval& m) const { return static_cast<int>(q_.index_of(m)); }

    TypeAQuiver q_;
    std::vector<Interval> modules_;
    std::vector<GridPoint> pos_;
    int width_ = 0;
    std::vector<int> cell_; // (x, y) -> module index or -1
};

} // namespace dexact
