#pragma once

// Knitting of the preprojective component of a hereditary representation-finite
// quiver on dimension vectors alone. Used to list the indecomposables of D4 and
// as an independent check of the type-A translation.

#include "dexact/oracle/bound_quiver.hpp"

#include <vector>

namespace dexact::oracle {

struct KnitVertex {
    std::vector<int> dims;
    int tau = -1;          // index of the AR translate, -1 for projectives
    int tau_inverse = -1;  // -1 for injectives
    std::vector<int> successors;   // irreducible maps out
    std::vector<int> predecessors; // irreducible maps in
    int projective_of = -1; // vertex v if this is P(v)
    int injective_of = -1;  // vertex v if this is I(v)
};

struct KnitResult {
    std::vector<KnitVertex> modules; // projectives first, then in knitting order
};

/// Throws OracleError for quivers with relations or if knitting does not terminate
/// within `cap` modules (representation-infinite input).
KnitResult knit_hereditary(const BoundQuiver& quiver, std::size_t cap = 512);

} // namespace dexact::oracle
