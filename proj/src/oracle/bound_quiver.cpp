#include "dexact/oracle/bound_quiver.hpp"

#include "dexact/errors.hpp"

#include <algorithm>

namespace dexact::oracle {

BoundQuiver::BoundQuiver(int vertex_count, std::vector<Arrow> arrows, std::vector<std::vector<int>> relations)
    : vertex_count_(vertex_count), arrows_(std::move(arrows)), relations_(std::move(relations)),
      out_(vertex_count), in_(vertex_count), paths_from_(vertex_count)
{
    if (vertex_count <= 0)
        throw OracleError("bound quiver needs at least one vertex");
    for (std::size_t a = 0; a < arrows_.size(); ++a) {
        const auto& arr = arrows_[a];
        if (arr.source < 0 || arr.source >= vertex_count || arr.target < 0 || arr.target >= vertex_count)
            throw OracleError("arrow endpoint out of range");
        out_[arr.source].push_back(static_cast<int>(a));
        in_[arr.target].push_back(static_cast<int>(a));
    }
    for (const auto& rel : relations_) {
        if (rel.size() < 2)
            throw OracleError("monomial relations must have length >= 2");
        for (std::size_t k = 0; k + 1 < rel.size(); ++k)
            if (arrows_.at(rel[k]).target != arrows_.at(rel[k + 1]).source)
                throw OracleError("relation is not a composable path");
    }

    for (int v = 0; v < vertex_count; ++v) {
        auto& out = paths_from_[v];
        out.push_back(Path{v, v, {}});
        for (std::size_t i = 0; i < out.size(); ++i) {
            Path p = out[i];
            for (int a : out_[p.end]) {
                Path q = p;
                q.arrows.push_back(a);
                q.end = arrows_[a].target;
                if (is_zero_path(q.arrows))
                    continue;
                if (q.length() > kPathLengthCap)
                    throw OracleError("path basis exceeds length cap; algebra is not finite-dimensional at desk scale");
                out.push_back(std::move(q));
            }
        }
    }
}

bool BoundQuiver::is_zero_path(const std::vector<int>& arrows) const
{
    for (const auto& rel : relations_) {
        if (rel.size() > arrows.size())
            continue;
        auto it = std::search(arrows.begin(), arrows.end(), rel.begin(), rel.end());
        if (it != arrows.end())
            return true;
    }
    return false;
}

std::vector<Path> BoundQuiver::paths_to(int v) const
{
    std::vector<Path> out;
    for (int u = 0; u < vertex_count_; ++u)
        for (const auto& p : paths_from_[u])
            if (p.end == v)
                out.push_back(p);
    return out;
}

std::vector<int> BoundQuiver::projective_dims(int v) const
{
    std::vector<int> d(vertex_count_, 0);
    for (const auto& p : paths_from_[v])
        ++d[p.end];
    return d;
}

std::vector<int> BoundQuiver::injective_dims(int v) const
{
    std::vector<int> d(vertex_count_, 0);
    for (const auto& p : paths_to(v))
        ++d[p.start];
    return d;
}

} // namespace dexact::oracle
