#pragma once

// Two small algebras outside type A where the diamond theory breaks down:
// the D4 quiver 1 -> 2, 2 -> 3, 2 -> 4 and the gentle algebra on the same
// quiver bound by the composite 1 -> 2 -> 3. Both are checked entirely with
// the linear-algebra oracle.

#include "dexact/oracle/relative.hpp"

#include <string>
#include <vector>

namespace dexact {

struct CheckOutcome {
    std::string name;
    bool passed = false;
    std::string detail; // witness or counterexample
};

struct ExampleReport {
    std::string example;
    std::vector<CheckOutcome> checks;

    bool passed() const;
    const CheckOutcome* find(const std::string& name) const;
};

/// Indecomposables of one of the two example algebras, with display names
/// ("1/2/4", "2/34", "1/22/34", ...) and the generating set of the example's F_X.
template <class F>
struct ExampleAlgebra {
    oracle::QuiverPtr quiver;
    oracle::Catalog<F> catalog;
    std::vector<int> generators;

    int index(const std::string& name) const { return catalog.index_of(name); }
    std::vector<int> indices(const std::vector<std::string>& names) const;
    std::string names(const std::vector<int>& indices) const; // "a + b + c"
};

oracle::QuiverPtr d4_quiver();
oracle::QuiverPtr gentle_quiver();

/// Catalog built by knitting dimension vectors; throws OracleError if the
/// knitted vectors do not match the expected twelve modules.
template <class F>
ExampleAlgebra<F> d4_algebra();

/// Catalog of string modules: simple walks in the underlying tree that avoid the zero relation.
template <class F>
ExampleAlgebra<F> gentle_algebra();

/// Vertex lists (1-based) of the strings of the gentle example.
std::vector<std::vector<int>> gentle_strings();

/// Middle-term summand counts of every nonzero class of Ext^1(c, a) up to scalar.
template <class F>
std::vector<std::size_t> middle_counts(const ExampleAlgebra<F>& alg, int c, int a);

ExampleReport verify_d4_example();
ExampleReport verify_gentle_example();

} // namespace dexact
