#pragma once

// Relative exact structures F_X on mod KQ for type A, the diamond structure,
// relative resolutions, dominant dimension and tilting.

#include "dexact/ar_grid.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace dexact {

struct OracleContext; // linear-algebra model of the structure, see oracle_context.hpp
struct OracleSlot;    // lazily built OracleContext shared between copies

class ExactStructure {
public:
    ExactStructure(std::shared_ptr<const ArGrid> grid, std::vector<Interval> generators, std::string label);

    const ArGrid& grid() const { return *grid_; }
    const std::shared_ptr<const ArGrid>& grid_ptr() const { return grid_; }
    const TypeAQuiver& quiver() const { return grid_->quiver(); }
    const std::vector<Interval>& generators() const { return generators_; }
    bool is_generator(const Interval& m) const;
    /// True when the generators are exactly the two boundary rows.
    bool is_diamond() const { return diamond_; }
    const std::string& label() const { return label_; }

    OracleContext& oracle() const;

private:
    std::shared_ptr<const ArGrid> grid_;
    std::vector<Interval> generators_;
    std::vector<bool> member_;
    std::string label_;
    bool diamond_ = false;
    std::shared_ptr<OracleSlot> oracle_;
};

ExactStructure e_diamond(std::shared_ptr<const ArGrid> grid);
ExactStructure f_x(std::shared_ptr<const ArGrid> grid, std::vector<Interval> generators);
/// No generators: every sequence is admissible (the full Ext structure).
ExactStructure f_empty(std::shared_ptr<const ArGrid> grid);
/// Every indecomposable is a generator: only split sequences are admissible.
ExactStructure f_all(std::shared_ptr<const ArGrid> grid);

/// Admissibility of the nonsplit class of Ext^1(quot, sub). Throws PreconditionError if Ext^1 = 0.
bool is_admissible(const ExactStructure& es, const Interval& sub, const Interval& quot);
int admissible_class_dim(const ExactStructure& es, const Interval& quot, const Interval& sub);

std::vector<Interval> relative_projectives(const ExactStructure& es);
std::vector<Interval> relative_injectives(const ExactStructure& es);
std::vector<Interval> relative_proj_injectives(const ExactStructure& es);
/// The same sets found by scanning admissible_class_dim.
std::vector<Interval> relative_projectives_by_scan(const ExactStructure& es);
std::vector<Interval> relative_injectives_by_scan(const ExactStructure& es);

struct ResolutionStep {
    ModuleSum sub;
    ModuleSum middle;
    ModuleSum quot;
    bool augmented = false; // built from projective cover plus ray ends
};

struct ResolutionE {
    ModuleSum target;
    std::vector<ResolutionStep> steps;
    int length = 0;
};

struct PdResult {
    int pd = 0;
    ResolutionE resolution;
};

/// Relative projective dimension for the diamond structure with an explicit resolution.
PdResult pd_e(const ExactStructure& es, const Interval& m);

struct DominantWitness {
    Interval projective;
    bool trivial = false;          // projective is already relatively projective-injective
    std::optional<SesClass> ses;   // 0 -> P -> E1 + E2 -> I -> 0 otherwise
    bool ok = false;
};

struct DominantReport {
    bool ok = true;
    std::vector<DominantWitness> witnesses;
};

DominantReport dominant_dim_check(const ExactStructure& es);

struct AuslanderReport {
    std::vector<Interval> relative_projectives;
    std::vector<Interval> relative_injectives;
    std::vector<Interval> relative_proj_injectives;
    int global_dim = 0;
    bool dominant_dim_ok = false;
    bool is_0_auslander = false;
    std::string method; // "combinatorial" for the diamond structure, "oracle" otherwise
    std::vector<ResolutionE> resolutions;
    DominantReport dominant;
};

AuslanderReport zero_auslander_report(const ExactStructure& es);

/// Relative projective dimension for any F_X (diamond structure combinatorially, otherwise by the oracle).
int relative_pd(const ExactStructure& es, const Interval& m);

bool is_rigid(const ExactStructure& es, const ModuleSum& t);
bool is_tilting(const ExactStructure& es, const ModuleSum& t);
bool is_maximal_rigid(const ExactStructure& es, const ModuleSum& t);
bool is_complete_rigid(const ExactStructure& es, const ModuleSum& t);

} // namespace dexact
