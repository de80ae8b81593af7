#pragma once

// Kronecker function rings Kr(Y) = ∩{V(T) : V ∈ Y} inside K(T), tested only
// through membership.

#include <optional>
#include <string>
#include <vector>

#include "zariski/polyt.hpp"
#include "zariski/semistar.hpp"

namespace zariski {

template <class D>
class KrSpec {
public:
    /// Throws DomainError for empty Y.
    KrSpec(BasePair<D> base, ZarSubset<D> subset);

    const BasePair<D>& base() const noexcept { return base_; }
    const ZarSubset<D>& subset() const noexcept { return subset_; }

private:
    BasePair<D> base_;
    ZarSubset<D> subset_;
};

/// h ∈ V_place(T), i.e. v*(f) >= v*(g) for h = f/g. True for h = 0.
template <class D>
bool in_trivial_extension(const Place<D>& place, const RatFunT<D>& h);

struct KrAnswer {
    bool member;
    std::optional<std::string> witness; // first failing place
};

/// Only places in the supports of the coefficients of f and g can fail, so
/// those (intersected with Y) are the ones checked.
template <class D>
KrAnswer kr_member(const KrSpec<D>& spec, const RatFunT<D>& h);

/// T, 1/T and f(0)/f for each sample with f(0) != 0.
template <class D>
CheckReport kfr_axiom_check(const KrSpec<D>& spec, const std::vector<PolyT<D>>& samples);

/// c(f)Kr(Y) = fKr(Y): each f_i/f is a member, and at each tested place
/// f/c ∈ V(T) for a coefficient c of least valuation.
template <class D>
CheckReport content_formula_check(const KrSpec<D>& spec, const PolyT<D>& f);

/// The sets F_ij = {a_i/b_j} ∪ {a_l/a_i} ∪ {b_m/b_j} over nonzero a_i, b_j
/// (and nonzero a_l, b_m), for h = (Σ a_i T^i)/(Σ b_j T^j); each set keeps
/// first-occurrence order without repeats.
template <class D>
std::vector<std::vector<Fraction<D>>> phi_pullback(const RatFunT<D>& h);

/// V_place ∈ ⋃ B_{F_ij}.
template <class D>
bool pullback_contains(const std::vector<std::vector<Fraction<D>>>& family, const Place<D>& place);

/// c(f)^{∧_Y} ⊆ c(g)^{∧_Y} for f, g ∈ A[T]; throws DomainError when a
/// coefficient lies outside A or g = 0.
template <class D>
bool kr_star_member(const BasePair<D>& base, const ZarSubset<D>& subset, const PolyT<D>& f, const PolyT<D>& g);

/// Same, after clearing the denominators of h's coefficients into A.
template <class D>
bool kr_star_member(const BasePair<D>& base, const ZarSubset<D>& subset, const RatFunT<D>& h);

/// The content ideal c(f) of a nonzero polynomial.
template <class D>
FracIdeal<D> content(const BasePair<D>& base, const PolyT<D>& f);

extern template class KrSpec<Integer>;
extern template class KrSpec<Poly>;

} // namespace zariski
