#pragma once

#include "dexact/exact_structures.hpp"
#include "dexact/type_a_oracle.hpp"

namespace dexact {

/// Rational matrix model of mod KQ together with the relative structure F_X.
struct OracleContext {
    OracleContext(const TypeAQuiver& q, const std::vector<Interval>& generators)
        : model(q), relative(model.catalog(), indices(model, generators))
    {
    }

    TypeAOracle<oracle::Rational> model;
    oracle::RelativeStructure<oracle::Rational> relative;

private:
    static std::vector<int> indices(const TypeAOracle<oracle::Rational>& m, const std::vector<Interval>& gens)
    {
        std::vector<int> out;
        for (const auto& g : gens)
            out.push_back(m.index(g));
        return out;
    }
};

} // namespace dexact
