#include "dexact/quiver.hpp"

#include "dexact/errors.hpp"

#include <algorithm>

namespace dexact {

std::string Interval::str() const { return "[" + std::to_string(lo) + "," + std::to_string(hi) + "]"; }

TypeAQuiver::TypeAQuiver(int n, std::string orientation) : n_(n), orientation_(std::move(orientation))
{
    if (n_ < 2)
        throw QuiverError("type A quiver needs n >= 2 (got n = " + std::to_string(n_) + ")");
    if (static_cast<int>(orientation_.size()) != n_ - 1)
        throw QuiverError("orientation word has length " + std::to_string(orientation_.size()) + ", expected "
                          + std::to_string(n_ - 1));
    for (char c : orientation_)
        if (c != 'R' && c != 'L')
            throw QuiverError(std::string("orientation letter '") + c + "' is not R or L");
}

bool TypeAQuiver::is_linear() const
{
    return std::all_of(orientation_.begin(), orientation_.end(), [&](char c) { return c == orientation_[0]; });
}

void TypeAQuiver::check_vertex(int i) const
{
    if (i < 1 || i > n_)
        throw QuiverError("vertex " + std::to_string(i) + " out of range 1.." + std::to_string(n_));
}

void TypeAQuiver::check_interval(const Interval& m) const
{
    if (m.lo < 1 || m.hi > n_ || m.lo > m.hi)
        throw QuiverError("interval " + m.str() + " is not inside [1," + std::to_string(n_) + "]");
}

std::size_t TypeAQuiver::index_of(const Interval& m) const
{
    check_interval(m);
    // intervals starting before lo: sum_{l<lo} (n - l + 1)
    std::size_t idx = 0;
    for (int l = 1; l < m.lo; ++l)
        idx += static_cast<std::size_t>(n_ - l + 1);
    return idx + static_cast<std::size_t>(m.hi - m.lo);
}

TypeAQuiver build_type_a(int n, const std::string& orientation) { return TypeAQuiver(n, orientation); }

std::vector<std::string> all_orientations(int n)
{
    if (n < 2)
        throw QuiverError("type A quiver needs n >= 2");
    if (n > 21)
        throw QuiverError("refusing to enumerate 2^" + std::to_string(n - 1) + " orientations");
    std::vector<std::string> out;
    const std::size_t count = std::size_t{1} << (n - 1);
    for (std::size_t code = 0; code < count; ++code) {
        std::string w(n - 1, 'L');
        for (int k = 0; k < n - 1; ++k)
            if (code & (std::size_t{1} << (n - 2 - k)))
                w[k] = 'R';
        out.push_back(std::move(w));
    }
    return out;
}

Interval projective(const TypeAQuiver& q, int i)
{
    q.check_vertex(i);
    int lo = i, hi = i;
    while (hi < q.n() && q.points_right(hi))
        ++hi;
    while (lo > 1 && !q.points_right(lo - 1))
        --lo;
    return {lo, hi};
}

Interval injective(const TypeAQuiver& q, int i)
{
    q.check_vertex(i);
    int lo = i, hi = i;
    while (hi < q.n() && !q.points_right(hi))
        ++hi;
    while (lo > 1 && q.points_right(lo - 1))
        --lo;
    return {lo, hi};
}

Interval simple(const TypeAQuiver& q, int i)
{
    q.check_vertex(i);
    return {i, i};
}

bool is_projective(const TypeAQuiver& q, const Interval& m)
{
    for (int i = m.lo; i <= m.hi; ++i)
        if (projective(q, i) == m)
            return true;
    return false;
}

bool is_injective(const TypeAQuiver& q, const Interval& m)
{
    for (int i = m.lo; i <= m.hi; ++i)
        if (injective(q, i) == m)
            return true;
    return false;
}

std::vector<Interval> list_indecomposables(const TypeAQuiver& q)
{
    std::vector<Interval> out;
    for (int lo = 1; lo <= q.n(); ++lo)
        for (int hi = lo; hi <= q.n(); ++hi)
            out.push_back({lo, hi});
    return out;
}

std::vector<int> top_vertices(const TypeAQuiver& q, const Interval& m)
{
    q.check_interval(m);
    std::vector<int> out;
    for (int v = m.lo; v <= m.hi; ++v) {
        bool from_left = v > m.lo && q.points_right(v - 1);
        bool from_right = v < m.hi && !q.points_right(v);
        if (!from_left && !from_right)
            out.push_back(v);
    }
    return out;
}

std::string display_name(const TypeAQuiver& q, const Interval& m)
{
    q.check_interval(m);
    const int len = m.dim();
    // longest path from a top vertex, computed by sweeping left-to-right and right-to-left
    std::vector<int> from_left(len, 0), from_right(len, 0);
    for (int v = m.lo + 1; v <= m.hi; ++v)
        if (q.points_right(v - 1))
            from_left[v - m.lo] = from_left[v - 1 - m.lo] + 1;
    for (int v = m.hi - 1; v >= m.lo; --v)
        if (!q.points_right(v))
            from_right[v - m.lo] = from_right[v + 1 - m.lo] + 1;
    int depth = 0;
    std::vector<int> layer(len);
    for (int k = 0; k < len; ++k) {
        layer[k] = std::max(from_left[k], from_right[k]);
        depth = std::max(depth, layer[k]);
    }
    const bool spaced = m.hi > 9;
    std::string out;
    for (int d = 0; d <= depth; ++d) {
        if (d > 0)
            out += '/';
        bool first = true;
        for (int k = 0; k < len; ++k) {
            if (layer[k] != d)
                continue;
            if (!first && spaced)
                out += ' ';
            out += std::to_string(m.lo + k);
            first = false;
        }
    }
    return out;
}

ModuleSum::ModuleSum(std::vector<Interval> summands) : summands_(std::move(summands))
{
    std::sort(summands_.begin(), summands_.end());
}

bool ModuleSum::basic() const
{
    return std::adjacent_find(summands_.begin(), summands_.end()) == summands_.end();
}

bool ModuleSum::contains(const Interval& m) const
{
    return std::binary_search(summands_.begin(), summands_.end(), m);
}

std::vector<int> ModuleSum::dim_vector(int n) const
{
    std::vector<int> d(n, 0);
    for (const auto& m : summands_)
        for (int v = m.lo; v <= m.hi; ++v)
            ++d[v - 1];
    return d;
}

std::string ModuleSum::str() const
{
    if (summands_.empty())
        return "0";
    std::string out;
    for (std::size_t k = 0; k < summands_.size(); ++k)
        out += (k ? " + " : "") + summands_[k].str();
    return out;
}

} // namespace dexact
