#include "dexact/oracle/knitting.hpp"

#include "dexact/errors.hpp"

#include <algorithm>
#include <deque>

namespace dexact::oracle {

KnitResult knit_hereditary(const BoundQuiver& quiver, std::size_t cap)
{
    if (quiver.has_relations())
        throw OracleError("knit_hereditary: quiver has relations");
    const int n = quiver.vertex_count();
    KnitResult out;
    auto& mods = out.modules;

    std::vector<std::vector<int>> injectives;
    for (int v = 0; v < n; ++v)
        injectives.push_back(quiver.injective_dims(v));
    auto mark_injective = [&](KnitVertex& m) {
        for (int v = 0; v < n; ++v)
            if (injectives[v] == m.dims)
                m.injective_of = v;
    };

    for (int v = 0; v < n; ++v) {
        KnitVertex m;
        m.dims = quiver.projective_dims(v);
        m.projective_of = v;
        mark_injective(m);
        mods.push_back(std::move(m));
    }
    // P(j) is a summand of rad P(i) for each arrow i -> j: irreducible P(j) -> P(i).
    for (const auto& arr : quiver.arrows()) {
        mods[arr.target].successors.push_back(arr.source);
        mods[arr.source].predecessors.push_back(arr.target);
    }

    // A module is handled once every predecessor has been handled: at that point
    // all of its successors are known and the mesh gives tau^-1.
    std::vector<bool> handled;
    auto ready = [&](int k) {
        for (int p : mods[k].predecessors)
            if (!handled[p])
                return false;
        return true;
    };
    bool progress = true;
    while (progress) {
        progress = false;
        handled.resize(mods.size(), false);
        for (std::size_t k = 0; k < mods.size(); ++k) {
            if (handled[k] || !ready(static_cast<int>(k)))
                continue;
            handled[k] = true;
            progress = true;
            if (mods[k].injective_of >= 0)
                continue;
            std::vector<int> next(n, 0);
            for (int s : mods[k].successors)
                for (int v = 0; v < n; ++v)
                    next[v] += mods[s].dims[v];
            for (int v = 0; v < n; ++v)
                next[v] -= mods[k].dims[v];
            if (std::any_of(next.begin(), next.end(), [](int d) { return d < 0; })
                || std::all_of(next.begin(), next.end(), [](int d) { return d == 0; }))
                throw OracleError("knit_hereditary: mesh produced an invalid dimension vector");
            KnitVertex t;
            t.dims = std::move(next);
            t.tau = static_cast<int>(k);
            t.predecessors = mods[k].successors;
            mark_injective(t);
            const int idx = static_cast<int>(mods.size());
            mods[k].tau_inverse = idx;
            for (int s : t.predecessors)
                mods[s].successors.push_back(idx);
            mods.push_back(std::move(t));
            handled.push_back(false);
            if (mods.size() > cap)
                throw OracleError("knit_hereditary: too many modules (representation-infinite?)");
        }
    }
    return out;
}

} // namespace dexact::oracle
