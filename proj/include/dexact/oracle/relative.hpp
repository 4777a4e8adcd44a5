#pragma once

// Relative exact structures F_X computed by linear algebra: a sequence is
// admissible when Hom(X, -) stays exact on it for every generator X.

#include "dexact/oracle/homological.hpp"

#include <map>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

namespace dexact::oracle {

template <class F>
struct RelativeResolution {
    int length = -1; // -1 when the cap was reached without terminating
    std::vector<std::vector<int>> terms;      // relative projective term at each step (catalog indices)
    std::vector<std::vector<int>> syzygies;   // summands of successive relative syzygies
    std::vector<ExplicitSes<F>> steps;        // 0 -> K_{k+1} -> P_k -> K_k -> 0
};

template <class F>
struct InjectionWitness {
    bool found = false;
    ExplicitSes<F> ses;              // 0 -> P -> I -> coker -> 0
    std::vector<int> middle;         // summands of I
    std::vector<int> cokernel;       // summands of the cokernel
};

template <class F>
class RelativeStructure {
public:
    RelativeStructure(const Catalog<F>& catalog, std::vector<int> generators)
        : catalog_(&catalog), generators_(std::move(generators))
    {
    }

    const Catalog<F>& catalog() const { return *catalog_; }
    const std::vector<int>& generators() const { return generators_; }

    const ExtModel<F>& ext(int c, int a) const
    {
        auto key = std::make_pair(c, a);
        auto it = ext_cache_.find(key);
        if (it == ext_cache_.end())
            it = ext_cache_.emplace(key, std::make_unique<ExtModel<F>>(catalog_->at(c), catalog_->at(a))).first;
        return *it->second;
    }

    /// Columns span F_X(C, A) inside Ext^1(C, A), in ExtModel coordinates.
    const Matrix<F>& admissible_basis(int c, int a) const
    {
        auto key = std::make_pair(c, a);
        auto it = admissible_cache_.find(key);
        if (it != admissible_cache_.end())
            return it->second;
        const auto& e = ext(c, a);
        const std::size_t d = e.dim();
        Matrix<F> obstruction(0, d);
        if (d > 0) {
            std::vector<Morphism<F>> cocycles;
            for (std::size_t k = 0; k < d; ++k) {
                std::vector<F> unit(d, F(0));
                unit[k] = F(1);
                cocycles.push_back(e.cocycle(unit));
            }
            for (int x : generators_) {
                const auto& ex = ext(x, a);
                if (ex.dim() == 0)
                    continue;
                for (const auto& h : hom_space(catalog_->at(x), catalog_->at(c))) {
                    Morphism<F> h0 = lift_through_epi(ex.cover(), h, e.cover().cover, e.cover().object);
                    SubObject<F> omega_c{e.syzygy(), e.syzygy_inclusion()};
                    Morphism<F> h1 = factor_through_sub(compose(h0, ex.syzygy_inclusion()), omega_c);
                    Matrix<F> block(ex.dim(), d);
                    for (std::size_t k = 0; k < d; ++k) {
                        auto cls = ex.class_of(compose(cocycles[k], h1));
                        for (std::size_t r = 0; r < cls.size(); ++r)
                            block(r, k) = cls[r];
                    }
                    obstruction = Matrix<F>::vcat(obstruction, block);
                }
            }
        }
        Matrix<F> basis = d == 0 ? Matrix<F>(0, 0) : kernel_basis(obstruction);
        return admissible_cache_.emplace(key, std::move(basis)).first->second;
    }

    std::size_t admissible_dim(int c, int a) const { return admissible_basis(c, a).cols(); }

    bool is_admissible_class(int c, int a, const std::vector<F>& coords) const
    {
        const auto& b = admissible_basis(c, a);
        if (coords.empty())
            return true;
        return solve(b, Matrix<F>::column(coords)).has_value();
    }

    /// Hom(X, p) surjective for every generator X.
    bool is_admissible(const ExplicitSes<F>& s) const
    {
        for (int x : generators_) {
            const auto& xr = catalog_->at(x);
            auto target = hom_space(xr, s.quot);
            if (target.empty())
                continue;
            std::vector<Morphism<F>> images;
            for (const auto& f : hom_space(xr, s.middle))
                images.push_back(compose(s.p, f));
            Matrix<F> cols = flatten_columns(images, hom_coordinate_count(xr, s.quot));
            if (rank(cols) != target.size())
                return false;
        }
        return true;
    }

    bool is_relative_projective(int c) const
    {
        for (std::size_t a = 0; a < catalog_->size(); ++a)
            if (admissible_dim(c, static_cast<int>(a)) != 0)
                return false;
        return true;
    }

    bool is_relative_injective(int a) const
    {
        for (std::size_t c = 0; c < catalog_->size(); ++c)
            if (admissible_dim(static_cast<int>(c), a) != 0)
                return false;
        return true;
    }

    std::vector<int> relative_projectives() const
    {
        std::vector<int> out;
        for (std::size_t k = 0; k < catalog_->size(); ++k)
            if (is_relative_projective(static_cast<int>(k)))
                out.push_back(static_cast<int>(k));
        return out;
    }

    std::vector<int> relative_injectives() const
    {
        std::vector<int> out;
        for (std::size_t k = 0; k < catalog_->size(); ++k)
            if (is_relative_injective(static_cast<int>(k)))
                out.push_back(static_cast<int>(k));
        return out;
    }

    std::vector<int> relative_proj_injectives() const
    {
        std::vector<int> out;
        for (int k : relative_projectives())
            if (is_relative_injective(k))
                out.push_back(k);
        return out;
    }

    /// Relative projective dimension by iterated universal approximations.
    /// Different admissible relative-projective covers give syzygies that agree
    /// up to relative-projective summands, so the length is independent of the choice.
    RelativeResolution<F> relative_pd(const Rep<F>& m, int cap = 8) const
    {
        auto proj = relative_projectives();
        std::vector<bool> is_proj(catalog_->size(), false);
        for (int k : proj)
            is_proj[k] = true;
        RelativeResolution<F> res;
        Rep<F> current = m;
        for (int step = 0; step <= cap; ++step) {
            auto summands = summand_indices(current, *catalog_);
            res.syzygies.push_back(summands);
            bool done = true;
            for (int k : summands)
                done = done && is_proj[k];
            if (done) {
                res.length = step;
                return res;
            }
            if (step == cap)
                break;
            auto ses = right_approximation(proj, current);
            if (!is_epi(ses.p))
                throw OracleError("relative_pd: approximation is not an epimorphism");
            std::vector<int> terms;
            for (int k : proj)
                for (std::size_t j = 0; j < hom_dim(catalog_->at(k), current); ++j)
                    terms.push_back(k);
            res.terms.push_back(std::move(terms));
            current = ses.sub;
            res.steps.push_back(std::move(ses));
        }
        return res;
    }

    /// 0 -> K -> (+) Y^{Hom(Y, M)} -> M, all basis maps from the listed catalog entries.
    ExplicitSes<F> right_approximation(const std::vector<int>& from, const Rep<F>& m) const
    {
        const auto& qp = catalog_->quiver();
        std::vector<Rep<F>> parts;
        std::vector<Morphism<F>> maps;
        for (int k : from)
            for (auto& f : hom_space(catalog_->at(k), m)) {
                parts.push_back(catalog_->at(k));
                maps.push_back(std::move(f));
            }
        ExplicitSes<F> s;
        s.quot = m;
        s.middle = parts.empty() ? Rep<F>::zero(qp) : direct_sum(parts, qp);
        s.p = parts.empty() ? zero_morphism(s.middle, m) : from_sum(maps, m);
        auto k = kernel(s.p, s.middle);
        s.sub = k.object;
        s.i = k.inclusion;
        return s;
    }

    /// M -> (+) Y^{Hom(M, Y)} into the listed catalog entries, with its cokernel.
    ExplicitSes<F> left_approximation(const Rep<F>& m, const std::vector<int>& into) const
    {
        const auto& qp = catalog_->quiver();
        std::vector<Rep<F>> parts;
        std::vector<Morphism<F>> maps;
        for (int k : into)
            for (auto& f : hom_space(m, catalog_->at(k))) {
                parts.push_back(catalog_->at(k));
                maps.push_back(std::move(f));
            }
        ExplicitSes<F> s;
        s.sub = m;
        s.middle = parts.empty() ? Rep<F>::zero(qp) : direct_sum(parts, qp);
        s.i = parts.empty() ? zero_morphism(m, s.middle) : to_sum(maps, m);
        auto q = cokernel(s.i, s.middle);
        s.quot = q.object;
        s.p = q.projection;
        return s;
    }

    /// Some admissible mono from catalog entry p into add(targets) exists iff the
    /// universal left approximation is one: any such mono factors through it, and
    /// admissibility of a composite mono passes to its first factor.
    InjectionWitness<F> admissible_mono_into(int p, const std::vector<int>& targets) const
    {
        InjectionWitness<F> w;
        w.ses = left_approximation(catalog_->at(p), targets);
        if (!is_mono(w.ses.i) || !is_admissible(w.ses))
            return w;
        w.found = true;
        w.middle = summand_indices(w.ses.middle, *catalog_);
        w.cokernel = summand_indices(w.ses.quot, *catalog_);
        return w;
    }

private:
    const Catalog<F>* catalog_;
    std::vector<int> generators_;
    mutable std::map<std::pair<int, int>, std::unique_ptr<ExtModel<F>>> ext_cache_;
    mutable std::map<std::pair<int, int>, Matrix<F>> admissible_cache_;
};

template <class F>
struct OracleAuslanderReport {
    std::vector<int> relative_projectives;
    std::vector<int> relative_injectives;
    std::vector<int> relative_proj_injectives;
    int global_dim = 0;      // -1 if some resolution hit the cap
    int worst_module = -1;   // catalog index attaining global_dim
    bool dominant_dim_ok = true;
    int dominant_failure = -1;
    bool is_0_auslander = false;
};

/// Global dimension <= 1 and every relative projective admits an admissible mono
/// into a relative projective-injective.
template <class F>
OracleAuslanderReport<F> oracle_auslander_report(const RelativeStructure<F>& rs)
{
    OracleAuslanderReport<F> r;
    r.relative_projectives = rs.relative_projectives();
    r.relative_injectives = rs.relative_injectives();
    r.relative_proj_injectives = rs.relative_proj_injectives();
    for (std::size_t k = 0; k < rs.catalog().size(); ++k) {
        auto res = rs.relative_pd(rs.catalog().at(k));
        if (res.length < 0) {
            r.global_dim = -1;
            r.worst_module = static_cast<int>(k);
            break;
        }
        if (res.length > r.global_dim) {
            r.global_dim = res.length;
            r.worst_module = static_cast<int>(k);
        }
    }
    for (int p : r.relative_projectives) {
        if (std::find(r.relative_proj_injectives.begin(), r.relative_proj_injectives.end(), p)
            != r.relative_proj_injectives.end())
            continue;
        if (!rs.admissible_mono_into(p, r.relative_proj_injectives).found) {
            r.dominant_dim_ok = false;
            r.dominant_failure = p;
            break;
        }
    }
    r.is_0_auslander = r.global_dim >= 0 && r.global_dim <= 1 && r.dominant_dim_ok;
    return r;
}

} // namespace dexact::oracle
