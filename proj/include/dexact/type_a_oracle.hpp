#pragma once

// Matrix models of type-A quivers and interval modules for the oracle.

#include "dexact/oracle/relative.hpp"
#include "dexact/quiver.hpp"

#include <memory>
#include <vector>

namespace dexact {

oracle::QuiverPtr type_a_bound_quiver(const TypeAQuiver& q);

template <class F>
oracle::Rep<F> interval_rep(const oracle::QuiverPtr& bq, const TypeAQuiver& q, const Interval& m)
{
    q.check_interval(m);
    std::vector<int> dims(q.n(), 0);
    for (int v = m.lo; v <= m.hi; ++v)
        dims[v - 1] = 1;
    std::vector<oracle::Matrix<F>> maps;
    for (const auto& arr : bq->arrows()) {
        oracle::Matrix<F> a(dims[arr.target], dims[arr.source]);
        if (dims[arr.target] && dims[arr.source])
            a(0, 0) = F(1);
        maps.push_back(std::move(a));
    }
    return oracle::Rep<F>(bq, std::move(dims), std::move(maps));
}

/// Oracle view of mod KQ: catalog index k is the k-th interval in canonical order.
template <class F>
class TypeAOracle {
public:
    explicit TypeAOracle(const TypeAQuiver& q) : q_(q), bq_(type_a_bound_quiver(q))
    {
        std::vector<oracle::Rep<F>> reps;
        std::vector<std::string> names;
        for (const auto& m : list_indecomposables(q)) {
            reps.push_back(interval_rep<F>(bq_, q, m));
            names.push_back(m.str());
        }
        catalog_ = std::make_unique<oracle::Catalog<F>>(bq_, std::move(reps), std::move(names));
    }

    const TypeAQuiver& quiver() const { return q_; }
    const oracle::QuiverPtr& bound_quiver() const { return bq_; }
    const oracle::Catalog<F>& catalog() const { return *catalog_; }
    int index(const Interval& m) const { return static_cast<int>(q_.index_of(m)); }
    const oracle::Rep<F>& rep(const Interval& m) const { return catalog_->at(index(m)); }
    Interval interval(int k) const { return list_indecomposables(q_)[k]; }

    oracle::Rep<F> sum(const ModuleSum& s) const
    {
        std::vector<int> idx;
        for (const auto& m : s.summands())
            idx.push_back(index(m));
        return catalog_->sum(idx);
    }

    ModuleSum to_module_sum(const std::vector<int>& indices) const
    {
        auto all = list_indecomposables(q_);
        std::vector<Interval> out;
        for (int k : indices)
            out.push_back(all[k]);
        return ModuleSum(std::move(out));
    }

    ModuleSum decompose(const oracle::Rep<F>& m) const { return to_module_sum(oracle::summand_indices(m, *catalog_)); }

    std::unique_ptr<oracle::RelativeStructure<F>> relative(const std::vector<Interval>& generators) const
    {
        std::vector<int> idx;
        for (const auto& g : generators)
            idx.push_back(index(g));
        return std::make_unique<oracle::RelativeStructure<F>>(*catalog_, std::move(idx));
    }

private:
    TypeAQuiver q_;
    oracle::QuiverPtr bq_;
    std::unique_ptr<oracle::Catalog<F>> catalog_;
};

} // namespace dexact
