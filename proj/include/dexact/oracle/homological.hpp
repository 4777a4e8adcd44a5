#pragma once

// Projective covers, Ext^1 via the first syzygy, explicit extensions,
// pushouts, pullbacks and brick-based Krull-Schmidt splitting.

#include "dexact/errors.hpp"
#include "dexact/oracle/rep.hpp"

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

namespace dexact::oracle {

template <class F>
struct ProjectiveCover {
    Rep<F> object;
    Morphism<F> cover;
    std::vector<int> tops; // vertex of each indecomposable summand P(v), in order
    std::vector<Rep<F>> parts;
    std::vector<Matrix<F>> generator_images; // image of the trivial path of each summand
};

/// Minimal projective cover: one P(v) per basis vector of the top at v.
template <class F>
ProjectiveCover<F> projective_cover(const Rep<F>& m)
{
    const auto& qp = m.quiver_ptr();
    ProjectiveCover<F> out;
    std::vector<Morphism<F>> maps;
    for (int v = 0; v < m.quiver().vertex_count(); ++v) {
        if (m.dim(v) == 0)
            continue;
        Matrix<F> top = complement_basis(radical_at(m, v), m.dim(v));
        for (std::size_t c = 0; c < top.cols(); ++c) {
            Matrix<F> gen = top.col(c);
            out.tops.push_back(v);
            out.parts.push_back(projective_rep<F>(qp, v));
            maps.push_back(morphism_from_projective(qp, v, m, gen));
            out.generator_images.push_back(std::move(gen));
        }
    }
    out.object = out.parts.empty() ? Rep<F>::zero(qp) : direct_sum(out.parts, qp);
    out.cover = from_sum(maps, m);
    if (out.parts.empty())
        out.cover = zero_morphism(out.object, m);
    return out;
}

/// Lift h : X -> C through an epi p : P -> C, where X is given with a projective cover
/// (so only generator images need lifting). Returns the lift from the cover of X to P.
template <class F>
Morphism<F> lift_through_epi(const ProjectiveCover<F>& cover_x, const Morphism<F>& h, const Morphism<F>& p,
                             const Rep<F>& target)
{
    const auto& qp = target.quiver_ptr();
    std::vector<Morphism<F>> maps;
    for (std::size_t k = 0; k < cover_x.tops.size(); ++k) {
        const int v = cover_x.tops[k];
        Matrix<F> img = h.comps[v] * cover_x.generator_images[k];
        auto pre = solve(p.comps[v], img);
        if (!pre)
            throw OracleError("lift_through_epi: map is not an epimorphism at a generator");
        maps.push_back(morphism_from_projective(qp, v, target, *pre));
    }
    if (maps.empty())
        return zero_morphism(cover_x.object, target);
    return from_sum(maps, target);
}

/// 0 -> A --i--> B --p--> C -> 0 given by explicit maps.
template <class F>
struct ExplicitSes {
    Rep<F> sub;
    Rep<F> middle;
    Rep<F> quot;
    Morphism<F> i;
    Morphism<F> p;
};

template <class F>
bool is_exact(const ExplicitSes<F>& s)
{
    if (!is_morphism(s.i, s.sub, s.middle) || !is_morphism(s.p, s.middle, s.quot))
        return false;
    if (!is_mono(s.i) || !is_epi(s.p) || !is_zero(compose(s.p, s.i)))
        return false;
    for (int v = 0; v < s.middle.quiver().vertex_count(); ++v)
        if (s.sub.dim(v) + s.quot.dim(v) != s.middle.dim(v))
            return false;
    return true;
}

/// Ext^1(C, A) modelled as Hom(Omega C, A) modulo maps extending to the projective cover.
template <class F>
class ExtModel {
public:
    ExtModel(const Rep<F>& c, const Rep<F>& a) : quot_(c), sub_(a), cover_(projective_cover(c))
    {
        auto syz = kernel(cover_.cover, cover_.object);
        omega_ = std::move(syz.object);
        iota_ = std::move(syz.inclusion);
        cocycles_ = hom_space(omega_, sub_);
        len_ = hom_coordinate_count(omega_, sub_);
        const std::size_t z = cocycles_.size();
        if (z == 0)
            return;
        zmat_ = flatten_columns(cocycles_, len_);
        // Coboundaries in cocycle coordinates.
        std::vector<Morphism<F>> bnd;
        for (const auto& h : hom_space(cover_.object, sub_))
            bnd.push_back(compose(h, iota_));
        Matrix<F> bcoords(z, 0);
        for (const auto& b : bnd)
            bcoords = Matrix<F>::hcat(bcoords, cocycle_coordinates(b));
        Matrix<F> bind = bcoords.cols() == 0 ? Matrix<F>(z, 0)
                                              : select_columns(bcoords, independent_columns(bcoords));
        Matrix<F> comp = complement_basis(bind, z);
        boundary_rank_ = bind.cols();
        change_ = Matrix<F>::hcat(bind, comp);
        ext_basis_ = comp;
    }

    std::size_t dim() const { return ext_basis_.cols(); }
    const Rep<F>& quot() const { return quot_; }
    const Rep<F>& sub() const { return sub_; }
    const ProjectiveCover<F>& cover() const { return cover_; }
    const Rep<F>& syzygy() const { return omega_; }
    const Morphism<F>& syzygy_inclusion() const { return iota_; }

    /// Coordinates of a cocycle Omega C -> A in the cocycle basis.
    Matrix<F> cocycle_coordinates(const Morphism<F>& phi) const
    {
        Matrix<F> col = Matrix<F>::column(flatten(phi));
        auto x = solve(zmat_, col);
        if (!x)
            throw OracleError("ExtModel: map is not a cocycle");
        return *x;
    }

    /// Class of a cocycle in the Ext basis (length dim()).
    std::vector<F> class_of(const Morphism<F>& phi) const
    {
        if (dim() == 0)
            return {};
        auto x = solve(change_, cocycle_coordinates(phi));
        std::vector<F> out;
        for (std::size_t k = 0; k < dim(); ++k)
            out.push_back((*x)(boundary_rank_ + k, 0));
        return out;
    }

    /// A representative cocycle for the class with the given coordinates.
    Morphism<F> cocycle(const std::vector<F>& coords) const
    {
        Matrix<F> z(cocycles_.size(), 1);
        for (std::size_t k = 0; k < coords.size(); ++k)
            if (!is_zero(coords[k]))
                z = z + coords[k] * ext_basis_.col(k);
        std::vector<F> zc(cocycles_.size());
        for (std::size_t r = 0; r < zc.size(); ++r)
            zc[r] = z(r, 0);
        if (cocycles_.empty())
            return zero_morphism(omega_, sub_);
        return combine(cocycles_, zc, omega_, sub_);
    }

    /// Pushout of 0 -> Omega -> P0 -> C -> 0 along the cocycle of the class.
    ExplicitSes<F> realize(const std::vector<F>& coords) const
    {
        Morphism<F> phi = cocycle(coords);
        const auto& qp = quot_.quiver_ptr();
        Rep<F> sum = direct_sum<F>({sub_, cover_.object}, qp);
        auto inj = sum_injections<F>({sub_, cover_.object}, sum);
        // Omega -> A (+) P0 via (phi, -iota)
        Morphism<F> rel = compose(inj[0], phi) + scale(F(-1), compose(inj[1], iota_));
        auto q = cokernel(rel, sum);
        ExplicitSes<F> s;
        s.sub = sub_;
        s.quot = quot_;
        s.middle = q.object;
        s.i = compose(q.projection, inj[0]);
        Morphism<F> to_c = from_sum<F>({zero_morphism(sub_, quot_), cover_.cover}, quot_);
        s.p = factor_through_quotient(to_c, q);
        return s;
    }

    /// Class of an explicit sequence ending in C and starting at A.
    std::vector<F> class_of(const ExplicitSes<F>& s) const
    {
        // Lift the cover of C through s.p, restrict to Omega, read off the cocycle.
        Morphism<F> lift = lift_through_epi(cover_, identity(quot_), s.p, s.middle);
        Morphism<F> on_omega = compose(lift, iota_);
        SubObject<F> a_in_b{s.sub, s.i};
        Morphism<F> phi = factor_through_sub(on_omega, a_in_b);
        return class_of(phi);
    }

private:
    Rep<F> quot_, sub_;
    ProjectiveCover<F> cover_;
    Rep<F> omega_;
    Morphism<F> iota_;
    std::vector<Morphism<F>> cocycles_;
    std::size_t len_ = 0;
    Matrix<F> zmat_;
    Matrix<F> change_;
    Matrix<F> ext_basis_;
    std::size_t boundary_rank_ = 0;
};

template <class F>
ExplicitSes<F> pushout(const ExplicitSes<F>& s, const Morphism<F>& f, const Rep<F>& new_sub)
{
    const auto& qp = s.sub.quiver_ptr();
    Rep<F> sum = direct_sum<F>({new_sub, s.middle}, qp);
    auto inj = sum_injections<F>({new_sub, s.middle}, sum);
    Morphism<F> rel = compose(inj[0], f) + scale(F(-1), compose(inj[1], s.i));
    auto q = cokernel(rel, sum);
    ExplicitSes<F> out;
    out.sub = new_sub;
    out.quot = s.quot;
    out.middle = q.object;
    out.i = compose(q.projection, inj[0]);
    out.p = factor_through_quotient(from_sum<F>({zero_morphism(new_sub, s.quot), s.p}, s.quot), q);
    return out;
}

template <class F>
ExplicitSes<F> pullback(const ExplicitSes<F>& s, const Morphism<F>& g, const Rep<F>& new_quot)
{
    const auto& qp = s.sub.quiver_ptr();
    std::vector<Rep<F>> parts{s.middle, new_quot};
    Rep<F> sum = direct_sum<F>(parts, qp);
    auto prj = sum_projections<F>(parts, sum);
    Morphism<F> diff = from_sum<F>({s.p, scale(F(-1), g)}, s.quot);
    auto k = kernel(diff, sum);
    ExplicitSes<F> out;
    out.sub = s.sub;
    out.quot = new_quot;
    out.middle = k.object;
    Morphism<F> into_sum = to_sum<F>({s.i, zero_morphism(s.sub, new_quot)}, s.sub);
    out.i = factor_through_sub(into_sum, k);
    out.p = compose(prj[1], k.inclusion);
    return out;
}

template <class F>
ExplicitSes<F> split_ses(const Rep<F>& a, const Rep<F>& c)
{
    const auto& qp = a.quiver_ptr();
    ExplicitSes<F> s;
    s.sub = a;
    s.quot = c;
    s.middle = direct_sum<F>({a, c}, qp);
    s.i = sum_injections<F>({a, c}, s.middle)[0];
    s.p = sum_projections<F>({a, c}, s.middle)[1];
    return s;
}

/// A list of pairwise non-isomorphic bricks used for Krull-Schmidt splitting.
template <class F>
class Catalog {
public:
    Catalog() = default;
    Catalog(QuiverPtr quiver, std::vector<Rep<F>> reps, std::vector<std::string> names)
        : quiver_(std::move(quiver)), reps_(std::move(reps)), names_(std::move(names))
    {
        if (reps_.size() != names_.size())
            throw OracleError("catalog: names and representations differ in length");
        for (std::size_t k = 0; k < reps_.size(); ++k)
            if (hom_dim(reps_[k], reps_[k]) != 1)
                throw OracleError("catalog entry " + names_[k] + " is not a brick");
    }

    const QuiverPtr& quiver() const { return quiver_; }
    std::size_t size() const { return reps_.size(); }
    const Rep<F>& at(std::size_t k) const { return reps_[k]; }
    const std::string& name(std::size_t k) const { return names_[k]; }
    const std::vector<Rep<F>>& reps() const { return reps_; }

    int index_of(const std::string& name) const
    {
        auto it = std::find(names_.begin(), names_.end(), name);
        if (it == names_.end())
            throw OracleError("catalog has no module named " + name);
        return static_cast<int>(it - names_.begin());
    }

    Rep<F> sum(const std::vector<int>& indices) const
    {
        std::vector<Rep<F>> parts;
        for (int k : indices)
            parts.push_back(reps_[k]);
        return parts.empty() ? Rep<F>::zero(quiver_) : direct_sum(parts, quiver_);
    }

private:
    QuiverPtr quiver_;
    std::vector<Rep<F>> reps_;
    std::vector<std::string> names_;
};

template <class F>
struct Decomposition {
    std::vector<int> indices;              // catalog index of each summand
    std::vector<Morphism<F>> inclusions;   // summand -> M, split monos
};

/// Split M into catalog bricks. X is a summand of R iff g f != 0 for some f : X -> R, g : R -> X.
template <class F>
Decomposition<F> decompose(const Rep<F>& m, const Catalog<F>& catalog)
{
    Decomposition<F> out;
    Rep<F> residual = m;
    Morphism<F> into_m = identity(m);
    while (!residual.is_zero()) {
        bool found = false;
        for (std::size_t k = 0; k < catalog.size() && !found; ++k) {
            const auto& x = catalog.at(k);
            bool fits = true;
            for (int v = 0; v < m.quiver().vertex_count(); ++v)
                if (x.dim(v) > residual.dim(v))
                    fits = false;
            if (!fits)
                continue;
            auto fs = hom_space(x, residual);
            if (fs.empty())
                continue;
            auto gs = hom_space(residual, x);
            for (const auto& f : fs) {
                for (const auto& g : gs) {
                    if (is_zero(compose(g, f)))
                        continue;
                    out.indices.push_back(static_cast<int>(k));
                    out.inclusions.push_back(compose(into_m, f));
                    auto rest = kernel(g, residual);
                    into_m = compose(into_m, rest.inclusion);
                    residual = std::move(rest.object);
                    found = true;
                    break;
                }
                if (found)
                    break;
            }
        }
        if (!found)
            throw OracleError("decompose: residual summand matches no catalog entry");
    }
    // canonical order by catalog index
    std::vector<std::size_t> order(out.indices.size());
    for (std::size_t k = 0; k < order.size(); ++k)
        order[k] = k;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return out.indices[a] < out.indices[b]; });
    Decomposition<F> sorted;
    for (auto k : order) {
        sorted.indices.push_back(out.indices[k]);
        sorted.inclusions.push_back(std::move(out.inclusions[k]));
    }
    return sorted;
}

template <class F>
std::vector<int> summand_indices(const Rep<F>& m, const Catalog<F>& catalog)
{
    return decompose(m, catalog).indices;
}

/// Every class of Ext^1 up to nonzero scalar: one per projective point.
/// Over the rationals only dimensions <= 1 can be listed this way.
template <class F>
std::vector<std::vector<F>> classes_up_to_scalar(std::size_t dim)
{
    std::vector<std::vector<F>> out;
    if (dim == 0)
        return out;
    if constexpr (!FieldInfo<F>::finite) {
        if (dim > 1)
            throw OracleError("class enumeration over an infinite field needs Ext dimension <= 1");
        out.push_back({F(1)});
        return out;
    } else {
        const std::uint32_t q = FieldInfo<F>::order;
        // normalized vectors: first nonzero coordinate equals 1
        for (std::size_t lead = 0; lead < dim; ++lead) {
            std::size_t free = dim - lead - 1;
            std::size_t total = 1;
            for (std::size_t k = 0; k < free; ++k) {
                total *= q;
                if (total > 1000000)
                    throw OracleError("class enumeration too large");
            }
            for (std::size_t code = 0; code < total; ++code) {
                std::vector<F> v(dim, F(0));
                v[lead] = F(1);
                std::size_t c = code;
                for (std::size_t k = lead + 1; k < dim; ++k) {
                    v[k] = F(static_cast<long long>(c % q));
                    c /= q;
                }
                out.push_back(std::move(v));
            }
        }
        return out;
    }
}

} // namespace dexact::oracle
