#include "dexact/type_a_oracle.hpp"

namespace dexact {

oracle::QuiverPtr type_a_bound_quiver(const TypeAQuiver& q)
{
    std::vector<oracle::Arrow> arrows;
    for (int i = 1; i < q.n(); ++i) {
        // vertices are 0-based on the oracle side
        if (q.points_right(i))
            arrows.push_back({i - 1, i, "a" + std::to_string(i)});
        else
            arrows.push_back({i, i - 1, "a" + std::to_string(i)});
    }
    return std::make_shared<const oracle::BoundQuiver>(q.n(), std::move(arrows));
}

} // namespace dexact
