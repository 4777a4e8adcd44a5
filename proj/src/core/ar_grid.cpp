#include "dexact/ar_grid.hpp"

#include "dexact/errors.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <stdexcept>

namespace dexact {

namespace {

constexpr int kUnplaced = std::numeric_limits<int>::min();

GridPoint step(Direction d)
{
    switch (d) {
    case Direction::NE: return {1, 1};
    case Direction::SE: return {1, -1};
    case Direction::SW: return {-1, -1};
    case Direction::NW: return {-1, 1};
    }
    return {0, 0};
}

} // namespace

bool is_rectangular(const PairClass& c)
{
    return std::holds_alternative<RectangularDegenerate>(c) || std::holds_alternative<RectangularNonDegenerate>(c);
}

bool is_deleted(const PairClass& c)
{
    return std::holds_alternative<LowerDeleted>(c) || std::holds_alternative<UpperDeleted>(c);
}

const char* pair_class_name(const PairClass& c)
{
    static constexpr const char* names[] = {"non_rectangular", "rectangular_degenerate", "rectangular_nondegenerate",
                                            "lower_deleted", "upper_deleted"};
    return names[c.index()];
}

const char* ses_kind_name(SesKind k)
{
    switch (k) {
    case SesKind::Split: return "split";
    case SesKind::Diamond: return "diamond";
    case SesKind::IndecomposableMiddle: return "indecomposable_middle";
    }
    return "?";
}

ArGrid::ArGrid(TypeAQuiver q) : q_(std::move(q)), modules_(list_indecomposables(q_))
{
    const int n = q_.n();
    const std::size_t count = modules_.size();
    pos_.assign(count, GridPoint{kUnplaced, 0});
    std::map<std::pair<int, int>, int> cell;

    auto place = [&](const Interval& m, int x, int y) {
        int k = index(m);
        if (pos_[k].x != kUnplaced)
            throw std::logic_error("knitting placed " + m.str() + " twice");
        pos_[k] = {x, y};
        cell[{x, y}] = k;
    };

    // Projectives: for i -> i+1 the map P(i+1) -> P(i) is irreducible, so P(i+1) sits one column left.
    int x = 0;
    place(projective(q_, 1), 0, 1);
    for (int i = 1; i < n; ++i) {
        x += q_.points_right(i) ? -1 : 1;
        place(projective(q_, i + 1), x, i + 1);
    }
    int min_x = std::numeric_limits<int>::max();
    for (const auto& [key, k] : cell)
        min_x = std::min(min_x, key.first);

    // Mesh rule column by column: dim tau^-1 X = sum of dims at (x+1, y+-1) minus dim X.
    for (int col = min_x; col <= min_x + 2 * n + 2; ++col) {
        for (int y = 1; y <= n; ++y) {
            auto it = cell.find({col, y});
            if (it == cell.end())
                continue;
            const Interval& m = modules_[it->second];
            if (is_injective(q_, m))
                continue;
            std::vector<int> dims(n + 2, 0);
            for (int dy : {-1, 1}) {
                auto mid = cell.find({col + 1, y + dy});
                if (mid == cell.end())
                    continue;
                const Interval& e = modules_[mid->second];
                for (int v = e.lo; v <= e.hi; ++v)
                    ++dims[v];
            }
            for (int v = m.lo; v <= m.hi; ++v)
                --dims[v];
            int lo = 0, hi = -1;
            for (int v = 1; v <= n; ++v) {
                if (dims[v] < 0 || dims[v] > 1)
                    throw std::logic_error("knitting produced a non-thin dimension vector");
                if (dims[v] == 1) {
                    if (hi >= 0 && hi != v - 1)
                        throw std::logic_error("knitting produced a disconnected support");
                    if (hi < 0)
                        lo = v;
                    hi = v;
                }
            }
            if (hi < 0)
                throw std::logic_error("knitting produced a zero module");
            place(Interval{lo, hi}, col + 2, y);
        }
    }
    for (std::size_t k = 0; k < count; ++k)
        if (pos_[k].x == kUnplaced)
            throw std::logic_error("knitting missed " + modules_[k].str());

    int max_x = std::numeric_limits<int>::min();
    for (auto& p : pos_) {
        p.x -= min_x;
        max_x = std::max(max_x, p.x);
    }
    width_ = max_x + 1;
    cell_.assign(static_cast<std::size_t>(width_) * n, -1);
    for (std::size_t k = 0; k < count; ++k)
        cell_[static_cast<std::size_t>(pos_[k].x) * n + (pos_[k].y - 1)] = static_cast<int>(k);
}

GridPoint ArGrid::position(const Interval& m) const { return pos_[index(m)]; }

std::optional<Interval> ArGrid::at(int x, int y) const
{
    if (x < 0 || x >= width_ || y < 1 || y > q_.n())
        return std::nullopt;
    int k = cell_[static_cast<std::size_t>(x) * q_.n() + (y - 1)];
    if (k < 0)
        return std::nullopt;
    return modules_[k];
}

std::optional<Interval> ArGrid::tau(const Interval& m) const
{
    auto p = position(m);
    return at(p.x - 2, p.y);
}

std::optional<Interval> ArGrid::tau_inverse(const Interval& m) const
{
    auto p = position(m);
    return at(p.x + 2, p.y);
}

std::vector<Interval> ArGrid::row(int y) const
{
    q_.check_vertex(y);
    std::vector<Interval> out;
    for (int x = 0; x < width_; ++x)
        if (auto m = at(x, y))
            out.push_back(*m);
    return out;
}

bool ArGrid::in_boundary_rows(const Interval& m) const
{
    auto y = position(m).y;
    return y == 1 || y == q_.n();
}

std::vector<std::pair<Interval, Interval>> ArGrid::arrows() const
{
    std::vector<std::pair<Interval, Interval>> out;
    for (const auto& m : modules_) {
        auto p = position(m);
        for (int dy : {1, -1})
            if (auto t = at(p.x + 1, p.y + dy))
                out.emplace_back(m, *t);
    }
    return out;
}

std::vector<Interval> ArGrid::ray(const Interval& m, Direction d) const
{
    std::vector<Interval> out{m};
    auto p = position(m);
    auto s = step(d);
    while (auto next = at(p.x + s.x, p.y + s.y)) {
        out.push_back(*next);
        p = {p.x + s.x, p.y + s.y};
    }
    return out;
}

PairClass ArGrid::classify_pair(const Interval& m, const Interval& n) const
{
    const auto pm = position(m);
    const auto pn = position(n);
    const int dx = pn.x - pm.x;
    const int dy = pn.y - pm.y;
    // x + y has constant parity on the grid, so these are integers.
    const int up = (dx + dy) / 2;   // steps north-east from m to the top corner
    const int down = (dx - dy) / 2; // steps south-east from m to the bottom corner
    const auto top = up >= 0 && down >= 0 ? at(pm.x + up, pm.y + up) : std::nullopt;
    const auto bottom = up >= 0 && down >= 0 ? at(pm.x + down, pm.y - down) : std::nullopt;

    if (top && bottom) {
        if (up == 0 || down == 0)
            return RectangularDegenerate{};
        return RectangularNonDegenerate{*top, *bottom};
    }
    if (top) {
        auto l = end_of_ray(m, Direction::SE);
        auto t = tau_inverse(l);
        if (t && *t == end_of_ray(n, Direction::SW))
            return LowerDeleted{*top};
    }
    if (bottom) {
        auto l = end_of_ray(m, Direction::NE);
        auto t = tau_inverse(l);
        if (t && *t == end_of_ray(n, Direction::NW))
            return UpperDeleted{*bottom};
    }
    return NonRectangular{};
}

int ArGrid::hom_dim(const Interval& m, const Interval& n) const { return is_rectangular(classify_pair(m, n)) ? 1 : 0; }

std::optional<SesClass> ArGrid::ext_class(const Interval& quot, const Interval& sub) const
{
    auto c = classify_pair(sub, quot);
    if (auto* r = std::get_if<RectangularNonDegenerate>(&c))
        return SesClass{sub, ModuleSum({r->e1, r->e2}), quot, SesKind::Diamond};
    if (auto* l = std::get_if<LowerDeleted>(&c))
        return SesClass{sub, ModuleSum({l->e}), quot, SesKind::IndecomposableMiddle};
    if (auto* u = std::get_if<UpperDeleted>(&c))
        return SesClass{sub, ModuleSum({u->e}), quot, SesKind::IndecomposableMiddle};
    return std::nullopt;
}

std::vector<Interval> ArGrid::region_right(const Interval& m) const
{
    std::vector<Interval> out;
    for (const auto& n : modules_)
        if (is_rectangular(classify_pair(m, n)))
            out.push_back(n);
    return out;
}

std::vector<Interval> ArGrid::region_left(const Interval& m) const
{
    std::vector<Interval> out;
    for (const auto& n : modules_)
        if (is_rectangular(classify_pair(n, m)))
            out.push_back(n);
    return out;
}

bool ArGrid::diamond_capable(const Interval& m, Side side) const
{
    for (const auto& n : modules_) {
        auto s = side == Side::AsQuotient ? ext_class(m, n) : ext_class(n, m);
        if (s && s->kind == SesKind::Diamond)
            return true;
    }
    return false;
}

Hammock ArGrid::projective_hammock(int i) const
{
    const auto p = projective(q_, i);
    Hammock h;
    h.e1 = end_of_ray(p, Direction::SE);
    h.e2 = end_of_ray(p, Direction::NE);
    if (position(h.e1).y != 1 || position(h.e2).y != q_.n())
        throw std::logic_error("hammock ends are not in the boundary rows");
    if (i > 1 && i < q_.n()) {
        auto s = ext_class(injective(q_, i), p);
        if (!s || s->kind != SesKind::Diamond || s->middle != ModuleSum({h.e1, h.e2}))
            throw std::logic_error("projective hammock has no diamond with the expected middle");
        h.ses = s;
    }
    return h;
}

} // namespace dexact
