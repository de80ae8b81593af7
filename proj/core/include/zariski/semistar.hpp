#pragma once

// Semistar operations ∧_Y : E ↦ ∩{EV : V ∈ Y} on finitely generated
// fractional ideals.
//
// For a place p, EV_p = {x : v_p(x) >= min_g v_p(g)}, so E^{∧_Y} only sees
// the exponent map of E restricted to the places of Y. The result is a
// GenModule: {x : v_p(x) >= e_p for every p in a constraint set}.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "zariski/zr_space.hpp"

namespace zariski {

template <class D>
class FracIdeal {
public:
    using ExponentMap = std::map<Place<D>, long>;

    /// The A-module generated by `generators` (nonempty, all nonzero).
    FracIdeal(const BasePair<D>& base, std::vector<Fraction<D>> generators);
    static FracIdeal principal(const BasePair<D>& base, const Fraction<D>& x) { return FracIdeal(base, {x}); }

    const BasePair<D>& base() const noexcept { return base_; }
    const std::vector<Fraction<D>>& generators() const noexcept { return generators_; }
    /// p -> min over generators of v_p; zero entries omitted.
    const ExponentMap& exponents() const noexcept { return exponents_; }
    long exponent(const Place<D>& p) const;

    /// The product ideal; exponents add.
    FracIdeal operator*(const FracIdeal& other) const;
    /// xI for x != 0.
    FracIdeal scaled(const Fraction<D>& x) const;

    std::string str() const;

private:
    FracIdeal(BasePair<D> base, std::vector<Fraction<D>> generators, ExponentMap exponents)
        : base_(base), generators_(std::move(generators)), exponents_(std::move(exponents)) {}

    BasePair<D> base_;
    std::vector<Fraction<D>> generators_;
    ExponentMap exponents_;
};

template <class D>
class GenModule {
public:
    using ExponentMap = std::map<Place<D>, long>;

    /// `constraint` loses its generic flag; every exception must be a place of
    /// it (InvalidSubset otherwise). Zero exponents are dropped.
    GenModule(ZarSubset<D> constraint, ExponentMap exponents);

    const ZarSubset<D>& constraint() const noexcept { return constraint_; }
    const ExponentMap& exceptions() const noexcept { return exceptions_; }
    long exponent(const Place<D>& p) const;
    /// No constraint at all: the module is K.
    bool is_field() const noexcept { return constraint_.is_empty(); }

    std::string str() const;

    friend bool operator==(const GenModule&, const GenModule&) = default;

private:
    ZarSubset<D> constraint_;
    ExponentMap exceptions_;
};

template <class D>
class StarSpec {
public:
    /// Throws DomainError for the empty family.
    explicit StarSpec(ZarSubset<D> subset);
    const ZarSubset<D>& subset() const noexcept { return subset_; }

private:
    ZarSubset<D> subset_;
};

template <class D>
GenModule<D> apply_wedge(const StarSpec<D>& star, const FracIdeal<D>& ideal);

/// M2 ⊆ M1. Decided by comparing constraints and exponents, which is exact
/// for modules of the form E^{∧_Y} with E finitely generated.
template <class D>
bool gen_contains(const GenModule<D>& m1, const GenModule<D>& m2);

template <class D>
bool gen_member(const BasePair<D>& base, const GenModule<D>& m, const Fraction<D>& x);

/// Cl_cons(Y)↑.
template <class D>
ZarSubset<D> hat_closure(const ZarSubset<D>& subset);

/// (∧_{Y1})_f = (∧_{Y2})_f, decided by comparing hat closures.
template <class D>
bool wedge_ft_equal(const ZarSubset<D>& y1, const ZarSubset<D>& y2);

/// When the finite-type parts differ: an ideal I = (1/t)A with t a
/// uniformizer at a place in the symmetric difference of the hat closures,
/// and an element lying in exactly one of I^{∧_{Y1}}, I^{∧_{Y2}}.
template <class D>
struct WedgeWitness {
    Place<D> place;
    FracIdeal<D> ideal;
    Fraction<D> element;
    bool element_in_first;
};

template <class D>
std::optional<WedgeWitness<D>> wedge_witness(const BasePair<D>& base, const ZarSubset<D>& y1, const ZarSubset<D>& y2);

/// The b-operation ∧_{Zar(K|A)}.
template <class D>
GenModule<D> b_apply(const FracIdeal<D>& ideal);

template <class D>
using IdealTriple = std::tuple<FracIdeal<D>, FracIdeal<D>, FracIdeal<D>>;

struct CheckReport {
    std::size_t checked = 0;
    std::size_t violations = 0;
    std::vector<std::string> failures; // first few violations, human-readable

    bool passed() const noexcept { return violations == 0; }
    void fail(std::string what);
    void merge(const CheckReport& other);
};

/// (FG)^⋆ ⊆ (FH)^⋆ implies G^⋆ ⊆ H^⋆ on each triple (F, G, H).
template <class D>
CheckReport eab_check(const StarSpec<D>& star, const std::vector<IdealTriple<D>>& triples);

/// The ⋆-valuation overrings {V : F^⋆ ⊆ FV for all F}, which equal the hat
/// closure of Y; `check` records the cross-check against `ideals` at the
/// points of Y's hat closure among `probes` and a failing witness F =
/// (1/t)A at each probe outside it.
template <class D>
ZarSubset<D> star_valuation_overrings(const BasePair<D>& base, const StarSpec<D>& star,
                                      const std::vector<FracIdeal<D>>& ideals,
                                      const std::vector<SpacePoint<D>>& probes, CheckReport* check = nullptr);

template <class D>
struct CompleteWitness {
    ZarSubset<D> hat;
    bool proconstructible;
    bool generically_closed;
    bool ft_equal;
    bool equals_cl_inv;
};

template <class D>
CompleteWitness<D> complete_witness(const ZarSubset<D>& subset);

struct VacancyCheck {
    bool representation;
    bool holds; // true when vacuous
    std::string detail;
};

template <class D>
VacancyCheck vacancy_check(const BasePair<D>& base, const ZarSubset<D>& subset);

struct VacancyReport {
    bool vacant;
    std::string argument;
    CheckReport confirmation;
};

/// Whether A is vacant, with randomized confirmation on `trials`
/// representations and as many perturbed non-representations. Throws
/// PreconditionError when K is not the quotient field of A.
template <class D>
VacancyReport is_vacant_base(const BasePair<D>& base, std::uint64_t seed, int trials = 20);

extern template class FracIdeal<Integer>;
extern template class FracIdeal<Poly>;
extern template class GenModule<Integer>;
extern template class GenModule<Poly>;
extern template class StarSpec<Integer>;
extern template class StarSpec<Poly>;

} // namespace zariski
