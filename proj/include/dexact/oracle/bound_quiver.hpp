#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

namespace dexact::oracle {

struct Arrow {
    int source = 0;
    int target = 0;
    std::string name;
};

/// A path as a sequence of arrow indices, read left to right (first arrow first).
/// The trivial path at a vertex is represented by an empty arrow list.
struct Path {
    int start = 0;
    int end = 0;
    std::vector<int> arrows;

    std::size_t length() const { return arrows.size(); }
    friend bool operator==(const Path&, const Path&) = default;
};

/// Finite quiver with monomial relations. Vertices are 0-based internally;
/// vertex labels (1-based in all displays) are kept for naming.
class BoundQuiver {
public:
    static constexpr std::size_t kPathLengthCap = 32;

    BoundQuiver(int vertex_count, std::vector<Arrow> arrows, std::vector<std::vector<int>> relations = {});

    int vertex_count() const { return vertex_count_; }
    const std::vector<Arrow>& arrows() const { return arrows_; }
    const std::vector<std::vector<int>>& relations() const { return relations_; }
    bool has_relations() const { return !relations_.empty(); }

    const std::vector<int>& out_arrows(int v) const { return out_[v]; }
    const std::vector<int>& in_arrows(int v) const { return in_[v]; }

    /// True if the arrow sequence contains a relation as a contiguous subpath.
    bool is_zero_path(const std::vector<int>& arrows) const;

    /// Nonzero paths starting at v (the basis of P(v)), trivial path first,
    /// then by length. Throws OracleError past the length cap.
    const std::vector<Path>& paths_from(int v) const { return paths_from_[v]; }

    /// Nonzero paths ending at v (the basis of I(v)).
    std::vector<Path> paths_to(int v) const;

    /// Dimension vector of the indecomposable projective P(v).
    std::vector<int> projective_dims(int v) const;
    /// Dimension vector of the indecomposable injective I(v).
    std::vector<int> injective_dims(int v) const;

private:
    int vertex_count_;
    std::vector<Arrow> arrows_;
    std::vector<std::vector<int>> relations_;
    std::vector<std::vector<int>> out_, in_;
    std::vector<std::vector<Path>> paths_from_;
};

using QuiverPtr = std::shared_ptr<const BoundQuiver>;

} // namespace dexact::oracle
