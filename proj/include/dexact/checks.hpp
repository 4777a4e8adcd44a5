#pragma once

// The acceptance sweep: combinatorial answers checked against the oracle,
// the 0-Auslander and tilting theorems, MAR counting, the triangulation
// bijection, the two non-type-A examples and the exact-structure axioms.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace dexact {

struct CriterionResult {
    int id = 0;
    std::string title;
    bool passed = false;
    bool skipped = false;
    std::size_t cases = 0; // individual comparisons made
    std::string detail;    // summary, or the first counterexample
    double seconds = 0;
};

struct AcceptanceOptions {
    int max_n = 7;                  // caps every range below
    int random_rigid = 1000;        // random non-MAR rigid modules per sampled n
    std::uint64_t seed = 0x5eed2024;
};

CriterionResult check_hom_equivalence(int n_lo, int n_hi);
CriterionResult check_ext_equivalence(int n_lo, int n_hi);
CriterionResult check_diamond_characterization(int n_lo, int n_hi);
CriterionResult check_zero_auslander(int n_lo, int n_hi);
/// Exhaustive over basic modules for n <= exhaustive_hi, MAR modules plus random
/// rigid ones for exhaustive_hi < n <= sampled_hi.
CriterionResult check_mar_tilting(int n_lo, int exhaustive_hi, int sampled_hi, int random_count, std::uint64_t seed);
CriterionResult check_counting(int n_lo, int n_hi);
CriterionResult check_bijection_lattice(int n_lo, int n_hi);
CriterionResult check_d4_example();
CriterionResult check_gentle_example();
CriterionResult check_exact_axioms(int n_lo, int n_hi, int composition_hi);

/// Criteria 1-10 with their standard ranges clipped to options.max_n.
/// The callback, if set, sees each result as soon as it is ready.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options,
                                            const std::function<void(const CriterionResult&)>& on_result = {});

} // namespace dexact
