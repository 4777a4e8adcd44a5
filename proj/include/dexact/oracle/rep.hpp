#pragma once

// Representations of bound quivers over an exact field and morphisms
// between them: Hom spaces, kernels, cokernels, direct sums.

#include "dexact/errors.hpp"
#include "dexact/oracle/bound_quiver.hpp"
#include "dexact/oracle/matrix.hpp"

#include <numeric>
#include <string>
#include <utility>
#include <vector>

namespace dexact::oracle {

template <class F>
class Rep {
public:
    Rep() = default;

    /// maps[a] has shape dims[target(a)] x dims[source(a)]; relation composites must vanish.
    Rep(QuiverPtr quiver, std::vector<int> dims, std::vector<Matrix<F>> maps)
        : quiver_(std::move(quiver)), dims_(std::move(dims)), maps_(std::move(maps))
    {
        const auto& q = *quiver_;
        if (static_cast<int>(dims_.size()) != q.vertex_count() || maps_.size() != q.arrows().size())
            throw OracleError("representation shape does not match quiver");
        for (std::size_t a = 0; a < maps_.size(); ++a) {
            const auto& arr = q.arrows()[a];
            if (maps_[a].rows() != static_cast<std::size_t>(dims_[arr.target])
                || maps_[a].cols() != static_cast<std::size_t>(dims_[arr.source]))
                throw OracleError("arrow matrix has wrong shape");
        }
        for (const auto& rel : q.relations())
            if (!path_map(rel).is_zero())
                throw OracleError("relation does not vanish on representation");
    }

    static Rep zero(QuiverPtr quiver)
    {
        std::vector<int> dims(quiver->vertex_count(), 0);
        std::vector<Matrix<F>> maps(quiver->arrows().size());
        return Rep(std::move(quiver), std::move(dims), std::move(maps));
    }

    const BoundQuiver& quiver() const { return *quiver_; }
    const QuiverPtr& quiver_ptr() const { return quiver_; }
    int dim(int v) const { return dims_[v]; }
    const std::vector<int>& dims() const { return dims_; }
    int total_dim() const { return std::accumulate(dims_.begin(), dims_.end(), 0); }
    bool is_zero() const { return total_dim() == 0; }
    const Matrix<F>& map(int arrow) const { return maps_[arrow]; }
    const std::vector<Matrix<F>>& maps() const { return maps_; }

    /// Action of a (composable) arrow sequence; shape dim(end) x dim(start).
    Matrix<F> path_map(const std::vector<int>& arrows) const
    {
        const auto& q = *quiver_;
        if (arrows.empty())
            throw OracleError("path_map needs a nonempty path; use identity for trivial paths");
        Matrix<F> m = maps_[arrows.front()];
        for (std::size_t k = 1; k < arrows.size(); ++k) {
            if (q.arrows()[arrows[k - 1]].target != q.arrows()[arrows[k]].source)
                throw OracleError("path is not composable");
            m = maps_[arrows[k]] * m;
        }
        return m;
    }

    Matrix<F> path_map(const Path& p) const
    {
        if (p.arrows.empty())
            return Matrix<F>::identity(dims_[p.start]);
        return path_map(p.arrows);
    }

private:
    QuiverPtr quiver_;
    std::vector<int> dims_;
    std::vector<Matrix<F>> maps_;
};

/// A morphism of representations: one matrix per vertex (target dim x source dim).
template <class F>
struct Morphism {
    std::vector<Matrix<F>> comps;

    const Matrix<F>& at(int v) const { return comps[v]; }
};

template <class F>
Morphism<F> identity(const Rep<F>& m)
{
    Morphism<F> f;
    for (int v = 0; v < m.quiver().vertex_count(); ++v)
        f.comps.push_back(Matrix<F>::identity(m.dim(v)));
    return f;
}

template <class F>
Morphism<F> zero_morphism(const Rep<F>& src, const Rep<F>& dst)
{
    Morphism<F> f;
    for (int v = 0; v < src.quiver().vertex_count(); ++v)
        f.comps.emplace_back(dst.dim(v), src.dim(v));
    return f;
}

template <class F>
Morphism<F> compose(const Morphism<F>& g, const Morphism<F>& f)
{
    Morphism<F> h;
    for (std::size_t v = 0; v < f.comps.size(); ++v)
        h.comps.push_back(g.comps[v] * f.comps[v]);
    return h;
}

template <class F>
Morphism<F> operator+(Morphism<F> a, const Morphism<F>& b)
{
    for (std::size_t v = 0; v < a.comps.size(); ++v)
        a.comps[v] = a.comps[v] + b.comps[v];
    return a;
}

template <class F>
Morphism<F> scale(const F& s, Morphism<F> a)
{
    for (auto& c : a.comps)
        c = s * c;
    return a;
}

template <class F>
bool is_zero(const Morphism<F>& f)
{
    for (const auto& c : f.comps)
        if (!c.is_zero())
            return false;
    return true;
}

template <class F>
bool is_morphism(const Morphism<F>& f, const Rep<F>& src, const Rep<F>& dst)
{
    const auto& q = src.quiver();
    if (static_cast<int>(f.comps.size()) != q.vertex_count())
        return false;
    for (int v = 0; v < q.vertex_count(); ++v)
        if (f.comps[v].rows() != static_cast<std::size_t>(dst.dim(v))
            || f.comps[v].cols() != static_cast<std::size_t>(src.dim(v)))
            return false;
    for (std::size_t a = 0; a < q.arrows().size(); ++a) {
        const auto& arr = q.arrows()[a];
        if (!(f.comps[arr.target] * src.map(a) == dst.map(a) * f.comps[arr.source]))
            return false;
    }
    return true;
}

/// Morphism coordinates: all vertex matrices concatenated row-major.
template <class F>
std::vector<F> flatten(const Morphism<F>& f)
{
    std::vector<F> out;
    for (const auto& c : f.comps)
        out.insert(out.end(), c.entries().begin(), c.entries().end());
    return out;
}

template <class F>
Morphism<F> unflatten(const std::vector<F>& x, const Rep<F>& src, const Rep<F>& dst)
{
    Morphism<F> f;
    std::size_t pos = 0;
    for (int v = 0; v < src.quiver().vertex_count(); ++v) {
        Matrix<F> m(dst.dim(v), src.dim(v));
        for (std::size_t r = 0; r < m.rows(); ++r)
            for (std::size_t c = 0; c < m.cols(); ++c)
                m(r, c) = x[pos++];
        f.comps.push_back(std::move(m));
    }
    return f;
}

/// Matrix whose columns are the flattened morphisms.
template <class F>
Matrix<F> flatten_columns(const std::vector<Morphism<F>>& fs, std::size_t length)
{
    Matrix<F> m(length, fs.size());
    for (std::size_t j = 0; j < fs.size(); ++j) {
        auto x = flatten(fs[j]);
        for (std::size_t i = 0; i < length; ++i)
            m(i, j) = x[i];
    }
    return m;
}

template <class F>
std::size_t hom_coordinate_count(const Rep<F>& src, const Rep<F>& dst)
{
    std::size_t n = 0;
    for (int v = 0; v < src.quiver().vertex_count(); ++v)
        n += static_cast<std::size_t>(src.dim(v)) * dst.dim(v);
    return n;
}

template <class F>
Morphism<F> combine(const std::vector<Morphism<F>>& basis, const std::vector<F>& coeffs, const Rep<F>& src,
                    const Rep<F>& dst)
{
    Morphism<F> f = zero_morphism(src, dst);
    for (std::size_t k = 0; k < basis.size(); ++k)
        if (!is_zero(coeffs[k]))
            f = f + scale(coeffs[k], basis[k]);
    return f;
}

/// Basis of Hom(src, dst): the solution space of f_t M_a = N_a f_s over all arrows.
template <class F>
std::vector<Morphism<F>> hom_space(const Rep<F>& src, const Rep<F>& dst)
{
    const auto& q = src.quiver();
    if (src.quiver_ptr() != dst.quiver_ptr() && &src.quiver() != &dst.quiver())
        if (src.quiver().vertex_count() != dst.quiver().vertex_count()
            || src.quiver().arrows().size() != dst.quiver().arrows().size())
            throw OracleError("hom_space: representations over different quivers");
    const int nv = q.vertex_count();
    std::vector<std::size_t> offset(nv + 1, 0);
    for (int v = 0; v < nv; ++v)
        offset[v + 1] = offset[v] + static_cast<std::size_t>(dst.dim(v)) * src.dim(v);
    const std::size_t unknowns = offset[nv];
    if (unknowns == 0)
        return {};

    std::size_t eq_count = 0;
    for (const auto& arr : q.arrows())
        eq_count += static_cast<std::size_t>(dst.dim(arr.target)) * src.dim(arr.source);
    Matrix<F> sys(eq_count, unknowns);
    std::size_t row = 0;
    for (std::size_t a = 0; a < q.arrows().size(); ++a) {
        const auto& arr = q.arrows()[a];
        const int s = arr.source, t = arr.target;
        const auto& ma = src.map(a); // dim src_t x dim src_s
        const auto& na = dst.map(a); // dim dst_t x dim dst_s
        // (f_t * M_a)(i,j) - (N_a * f_s)(i,j) = 0 for i < dst_t, j < src_s
        for (int i = 0; i < dst.dim(t); ++i)
            for (int j = 0; j < src.dim(s); ++j, ++row) {
                for (int k = 0; k < src.dim(t); ++k)
                    if (!is_zero(ma(k, j)))
                        sys(row, offset[t] + static_cast<std::size_t>(i) * src.dim(t) + k) += ma(k, j);
                for (int k = 0; k < dst.dim(s); ++k)
                    if (!is_zero(na(i, k)))
                        sys(row, offset[s] + static_cast<std::size_t>(k) * src.dim(s) + j) -= na(i, k);
            }
    }
    Matrix<F> ker = kernel_basis(sys);
    std::vector<Morphism<F>> basis;
    for (std::size_t c = 0; c < ker.cols(); ++c) {
        std::vector<F> x(unknowns);
        for (std::size_t i = 0; i < unknowns; ++i)
            x[i] = ker(i, c);
        basis.push_back(unflatten(x, src, dst));
    }
    return basis;
}

template <class F>
std::size_t hom_dim(const Rep<F>& src, const Rep<F>& dst)
{
    return hom_space(src, dst).size();
}

template <class F>
Rep<F> direct_sum(const std::vector<Rep<F>>& parts, const QuiverPtr& quiver)
{
    const auto& q = *quiver;
    std::vector<int> dims(q.vertex_count(), 0);
    for (const auto& p : parts)
        for (int v = 0; v < q.vertex_count(); ++v)
            dims[v] += p.dim(v);
    std::vector<Matrix<F>> maps;
    for (std::size_t a = 0; a < q.arrows().size(); ++a) {
        const auto& arr = q.arrows()[a];
        Matrix<F> m(dims[arr.target], dims[arr.source]);
        std::size_t r = 0, c = 0;
        for (const auto& p : parts) {
            m.set_block(r, c, p.map(a));
            r += p.dim(arr.target);
            c += p.dim(arr.source);
        }
        maps.push_back(std::move(m));
    }
    return Rep<F>(quiver, std::move(dims), std::move(maps));
}

/// [f_1 f_2 ...] : (+)_j S_j -> T.
template <class F>
Morphism<F> from_sum(const std::vector<Morphism<F>>& parts, const Rep<F>& target)
{
    Morphism<F> f;
    for (int v = 0; v < target.quiver().vertex_count(); ++v) {
        Matrix<F> m(target.dim(v), 0);
        for (const auto& p : parts)
            m = Matrix<F>::hcat(m, p.comps[v]);
        if (m.rows() != static_cast<std::size_t>(target.dim(v)))
            m = Matrix<F>(target.dim(v), m.cols());
        f.comps.push_back(std::move(m));
    }
    return f;
}

/// (f_1; f_2; ...) : S -> (+)_j T_j.
template <class F>
Morphism<F> to_sum(const std::vector<Morphism<F>>& parts, const Rep<F>& source)
{
    Morphism<F> f;
    for (int v = 0; v < source.quiver().vertex_count(); ++v) {
        Matrix<F> m(0, source.dim(v));
        for (const auto& p : parts)
            m = Matrix<F>::vcat(m, p.comps[v]);
        if (m.cols() != static_cast<std::size_t>(source.dim(v)))
            m = Matrix<F>(m.rows(), source.dim(v));
        f.comps.push_back(std::move(m));
    }
    return f;
}

/// Canonical injections of each summand into direct_sum(parts).
template <class F>
std::vector<Morphism<F>> sum_injections(const std::vector<Rep<F>>& parts, const Rep<F>& sum)
{
    std::vector<Morphism<F>> out;
    const int nv = sum.quiver().vertex_count();
    std::vector<int> off(nv, 0);
    for (const auto& p : parts) {
        Morphism<F> f;
        for (int v = 0; v < nv; ++v) {
            Matrix<F> m(sum.dim(v), p.dim(v));
            for (int i = 0; i < p.dim(v); ++i)
                m(off[v] + i, i) = F(1);
            off[v] += p.dim(v);
            f.comps.push_back(std::move(m));
        }
        out.push_back(std::move(f));
    }
    return out;
}

template <class F>
std::vector<Morphism<F>> sum_projections(const std::vector<Rep<F>>& parts, const Rep<F>& sum)
{
    std::vector<Morphism<F>> out;
    for (auto& inj : sum_injections(parts, sum)) {
        for (auto& c : inj.comps)
            c = c.transpose();
        out.push_back(std::move(inj));
    }
    return out;
}

template <class F>
struct SubObject {
    Rep<F> object;
    Morphism<F> inclusion;
};

template <class F>
struct QuotientObject {
    Rep<F> object;
    Morphism<F> projection;
    std::vector<Matrix<F>> section; // linear (not module) sections, projection * section = 1
};

template <class F>
SubObject<F> kernel(const Morphism<F>& f, const Rep<F>& src)
{
    const auto& q = src.quiver();
    std::vector<int> dims;
    std::vector<Matrix<F>> incl;
    for (int v = 0; v < q.vertex_count(); ++v) {
        Matrix<F> k = f.comps[v].rows() == 0 ? Matrix<F>::identity(src.dim(v)) : kernel_basis(f.comps[v]);
        dims.push_back(static_cast<int>(k.cols()));
        incl.push_back(std::move(k));
    }
    std::vector<Matrix<F>> maps;
    for (std::size_t a = 0; a < q.arrows().size(); ++a) {
        const auto& arr = q.arrows()[a];
        auto x = solve(incl[arr.target], src.map(a) * incl[arr.source]);
        if (!x)
            throw OracleError("kernel is not a subrepresentation (input is not a morphism)");
        maps.push_back(std::move(*x));
    }
    return {Rep<F>(src.quiver_ptr(), std::move(dims), std::move(maps)), Morphism<F>{std::move(incl)}};
}

template <class F>
QuotientObject<F> cokernel(const Morphism<F>& f, const Rep<F>& dst)
{
    const auto& q = dst.quiver();
    std::vector<int> dims;
    std::vector<Matrix<F>> proj, sect;
    for (int v = 0; v < q.vertex_count(); ++v) {
        const std::size_t d = dst.dim(v);
        Matrix<F> image = f.comps[v].cols() == 0 ? Matrix<F>(d, 0)
                                                 : select_columns(f.comps[v], independent_columns(f.comps[v]));
        Matrix<F> comp = complement_basis(image, d);
        Matrix<F> basis = Matrix<F>::hcat(image, comp);
        Matrix<F> p(comp.cols(), d);
        if (d > 0) {
            Matrix<F> inv = inverse(basis);
            p = inv.block(image.cols(), 0, comp.cols(), d);
        }
        dims.push_back(static_cast<int>(comp.cols()));
        proj.push_back(std::move(p));
        sect.push_back(std::move(comp));
    }
    std::vector<Matrix<F>> maps;
    for (std::size_t a = 0; a < q.arrows().size(); ++a) {
        const auto& arr = q.arrows()[a];
        maps.push_back(proj[arr.target] * dst.map(a) * sect[arr.source]);
    }
    return {Rep<F>(dst.quiver_ptr(), std::move(dims), std::move(maps)), Morphism<F>{std::move(proj)},
            std::move(sect)};
}

/// Given h : T -> X vanishing on the image of q's kernel, the induced map coker -> X.
template <class F>
Morphism<F> factor_through_quotient(const Morphism<F>& h, const QuotientObject<F>& quot)
{
    Morphism<F> out;
    for (std::size_t v = 0; v < h.comps.size(); ++v)
        out.comps.push_back(h.comps[v] * quot.section[v]);
    return out;
}

/// Given h : X -> S landing in a subobject, the induced map X -> sub.
template <class F>
Morphism<F> factor_through_sub(const Morphism<F>& h, const SubObject<F>& sub)
{
    Morphism<F> out;
    for (std::size_t v = 0; v < h.comps.size(); ++v) {
        auto x = solve(sub.inclusion.comps[v], h.comps[v]);
        if (!x)
            throw OracleError("map does not factor through the subobject");
        out.comps.push_back(std::move(*x));
    }
    return out;
}

template <class F>
bool is_mono(const Morphism<F>& f)
{
    for (const auto& c : f.comps)
        if (rank(c) != c.cols())
            return false;
    return true;
}

template <class F>
bool is_epi(const Morphism<F>& f)
{
    for (const auto& c : f.comps)
        if (rank(c) != c.rows())
            return false;
    return true;
}

template <class F>
Morphism<F> inverse_iso(const Morphism<F>& f)
{
    Morphism<F> g;
    for (const auto& c : f.comps) {
        if (c.rows() != c.cols())
            throw OracleError("inverse_iso: not square");
        g.comps.push_back(c.rows() == 0 ? Matrix<F>() : inverse(c));
    }
    return g;
}

/// Indecomposable projective P(v) with basis the nonzero paths starting at v.
template <class F>
Rep<F> projective_rep(const QuiverPtr& quiver, int v)
{
    const auto& q = *quiver;
    const auto& paths = q.paths_from(v);
    std::vector<std::vector<std::size_t>> at(q.vertex_count());
    std::vector<std::size_t> local(paths.size());
    for (std::size_t i = 0; i < paths.size(); ++i) {
        local[i] = at[paths[i].end].size();
        at[paths[i].end].push_back(i);
    }
    std::vector<int> dims;
    for (const auto& list : at)
        dims.push_back(static_cast<int>(list.size()));
    std::vector<Matrix<F>> maps;
    for (std::size_t a = 0; a < q.arrows().size(); ++a) {
        const auto& arr = q.arrows()[a];
        Matrix<F> m(dims[arr.target], dims[arr.source]);
        for (std::size_t idx : at[arr.source]) {
            auto ext = paths[idx].arrows;
            ext.push_back(static_cast<int>(a));
            if (q.is_zero_path(ext))
                continue;
            for (std::size_t j : at[arr.target])
                if (paths[j].arrows == ext)
                    m(local[j], local[idx]) = F(1);
        }
        maps.push_back(std::move(m));
    }
    return Rep<F>(quiver, std::move(dims), std::move(maps));
}

/// The morphism P(v) -> M sending the trivial path at v to `element` (a column in M_v).
template <class F>
Morphism<F> morphism_from_projective(const QuiverPtr& quiver, int v, const Rep<F>& m, const Matrix<F>& element)
{
    const auto& q = *quiver;
    const auto& paths = q.paths_from(v);
    std::vector<Matrix<F>> comps;
    for (int w = 0; w < q.vertex_count(); ++w)
        comps.emplace_back(m.dim(w), 0);
    for (const auto& p : paths)
        comps[p.end] = Matrix<F>::hcat(comps[p.end], m.path_map(p) * element);
    for (int w = 0; w < q.vertex_count(); ++w)
        if (comps[w].cols() == 0)
            comps[w] = Matrix<F>(m.dim(w), 0);
    return Morphism<F>{std::move(comps)};
}

/// Radical of M at vertex v: span of images of all incoming arrows (columns).
template <class F>
Matrix<F> radical_at(const Rep<F>& m, int v)
{
    Matrix<F> span(m.dim(v), 0);
    for (int a : m.quiver().in_arrows(v))
        span = Matrix<F>::hcat(span, m.map(a));
    if (span.cols() == 0)
        return span;
    return select_columns(span, independent_columns(span));
}

} // namespace dexact::oracle
