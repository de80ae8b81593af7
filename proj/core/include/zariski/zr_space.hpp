#pragma once

// Zar(K|A) for the one-dimensional base pairs as an effective spectral space.
//
// Points are the generic point K and the places. Every basic open B_F contains
// K and all but finitely many places, so the constructible sets trace to the
// Boolean algebra generated by finite place sets and the generic point. A
// ZarSubset is an element of that algebra: a finite or cofinite set of places
// plus a flag for K. Ultrafilters are represented by their trace on the
// algebra: principal at a point, or the single free class shared by every
// non-principal ultrafilter on an infinite place set.

#include <optional>
#include <string>
#include <vector>

#include "zariski/field.hpp"

namespace zariski {

enum class SubsetMode { FinitePlaces, CofinitePlaces };

template <class D>
class ZarSubset {
public:
    static ZarSubset finite(std::vector<Place<D>> places, bool contains_generic);
    static ZarSubset cofinite(std::vector<Place<D>> excluded, bool contains_generic);
    static ZarSubset empty() { return finite({}, false); }
    static ZarSubset whole() { return cofinite({}, true); }
    static ZarSubset all_places() { return cofinite({}, false); }
    static ZarSubset generic_only() { return finite({}, true); }
    static ZarSubset point(const SpacePoint<D>& pt);

    SubsetMode mode() const noexcept { return mode_; }
    /// Listed places (finite mode) or excluded places (cofinite mode), sorted.
    const std::vector<Place<D>>& exceptions() const noexcept { return exceptions_; }
    bool contains_generic() const noexcept { return generic_; }

    bool contains(const SpacePoint<D>& pt) const;
    bool contains_place(const Place<D>& p) const;
    bool is_empty() const noexcept { return mode_ == SubsetMode::FinitePlaces && exceptions_.empty() && !generic_; }
    bool has_infinite_place_part() const noexcept { return mode_ == SubsetMode::CofinitePlaces; }
    bool is_finite() const noexcept { return mode_ == SubsetMode::FinitePlaces; }

    ZarSubset place_part() const { return with_generic(false); }
    ZarSubset with_generic(bool g) const;

    ZarSubset complement() const;
    ZarSubset unite(const ZarSubset& other) const;
    ZarSubset intersect(const ZarSubset& other) const;
    ZarSubset minus(const ZarSubset& other) const { return intersect(other.complement()); }
    bool is_subset_of(const ZarSubset& other) const { return minus(other).is_empty(); }

    std::string str() const;

    friend bool operator==(const ZarSubset&, const ZarSubset&) = default;

private:
    ZarSubset(SubsetMode mode, std::vector<Place<D>> exceptions, bool generic);

    SubsetMode mode_;
    std::vector<Place<D>> exceptions_;
    bool generic_;
};

template <class D>
class UltrafilterClass {
public:
    static UltrafilterClass principal(SpacePoint<D> center) { return UltrafilterClass(std::move(center)); }
    static UltrafilterClass free_class() { return UltrafilterClass(); }

    bool is_free() const noexcept { return !center_.has_value(); }
    const SpacePoint<D>& center() const;
    std::string str() const { return is_free() ? std::string("free") : "principal(" + center_->str() + ")"; }

    friend bool operator==(const UltrafilterClass&, const UltrafilterClass&) = default;

private:
    UltrafilterClass() = default;
    explicit UltrafilterClass(SpacePoint<D> c) : center_(std::move(c)) {}

    std::optional<SpacePoint<D>> center_;
};

/// All ultrafilter traces on a subset Y: one principal class per point of Y
/// (enumerated lazily in cofinite mode) plus the free class when the place
/// part is infinite.
template <class D>
class UltrafilterFamily {
public:
    explicit UltrafilterFamily(ZarSubset<D> subset) : subset_(std::move(subset)) {}

    const ZarSubset<D>& subset() const noexcept { return subset_; }
    bool has_free_class() const noexcept { return subset_.has_infinite_place_part(); }
    bool is_finite() const noexcept { return subset_.is_finite(); }
    bool contains(const UltrafilterClass<D>& u) const;

    /// Every class in finite mode; in cofinite mode the principal classes at
    /// points among `places` (plus K), followed by the free class.
    std::vector<UltrafilterClass<D>> enumerate(const std::vector<Place<D>>& places = {}) const;

private:
    ZarSubset<D> subset_;
};

/// {x != 0}: B_x = {V : x in V}.
template <class D>
ZarSubset<D> b_x(const BasePair<D>& base, const Fraction<D>& x);

/// Intersection of b_x over F; whole space for empty F.
template <class D>
ZarSubset<D> b_F(const BasePair<D>& base, const std::vector<Fraction<D>>& elements);

/// Specialization order: V <= W iff W ⊆ V, so K is the unique generic point
/// and every place is closed.
template <class D>
ZarSubset<D> sp_closure(const ZarSubset<D>& subset);
template <class D>
ZarSubset<D> gen_closure(const ZarSubset<D>& subset);

template <class D>
UltrafilterFamily<D> ultrafilter_classes(const ZarSubset<D>& subset);

template <class D>
SpacePoint<D> limit_point(const ZarSubset<D>& subset, const UltrafilterClass<D>& u);

template <class D>
ZarSubset<D> cl_cons(const ZarSubset<D>& subset);
template <class D>
ZarSubset<D> cl_zar(const ZarSubset<D>& subset);
template <class D>
ZarSubset<D> cl_inv(const ZarSubset<D>& subset);

/// Some place belonging to `subset`, searching enumerate_places with growing
/// bounds in cofinite mode; nullopt when the place part is empty.
template <class D>
std::optional<Place<D>> some_place_in(const BasePair<D>& base, const ZarSubset<D>& subset);

template <class D>
bool is_proconstructible(const ZarSubset<D>& subset);
template <class D>
bool is_quasicompact_zar(const ZarSubset<D>& subset);

/// The ring ∩{V : V in Y}, stored as the set of places imposing v >= 0.
template <class D>
class SemilocalRing {
public:
    explicit SemilocalRing(ZarSubset<D> constraint);
    const ZarSubset<D>& constraint() const noexcept { return constraint_; }
    std::string str() const;
    friend bool operator==(const SemilocalRing&, const SemilocalRing&) = default;

private:
    ZarSubset<D> constraint_;
};

template <class D>
SemilocalRing<D> intersection_ring(const ZarSubset<D>& subset);

template <class D>
bool ring_member(const BasePair<D>& base, const SemilocalRing<D>& ring, const Fraction<D>& x);

/// Whether ∩Y = A, i.e. Y is a representation of the base ring.
template <class D>
bool is_representation(const ZarSubset<D>& subset);

struct WitnessedAnswer {
    bool value;
    std::string witness;
};

template <class D>
WitnessedAnswer is_locally_finite(const ZarSubset<D>& subset);

template <class D>
std::string center(const BasePair<D>& base, const SpacePoint<D>& pt) {
    return base.center(pt);
}

struct ClosureRingReport {
    bool closures_equal;
    bool rings_equal;
    bool holds; // closures_equal implies rings_equal
};

/// Equal constructible closures force equal intersection rings.
template <class D>
ClosureRingReport check_closure_determines_ring(const ZarSubset<D>& y1, const ZarSubset<D>& y2);

/// For a representation Y of a Prüfer base A, every place (the preimage of
/// Max(A) under the center map) lies in Cl_cons(Y). Throws PreconditionError
/// when Y is not a representation or K is not the quotient field of A.
template <class D>
WitnessedAnswer check_maximal_centers(const BasePair<D>& base, const ZarSubset<D>& subset);

extern template class ZarSubset<Integer>;
extern template class ZarSubset<Poly>;
extern template class UltrafilterClass<Integer>;
extern template class UltrafilterClass<Poly>;
extern template class UltrafilterFamily<Integer>;
extern template class UltrafilterFamily<Poly>;
extern template class SemilocalRing<Integer>;
extern template class SemilocalRing<Poly>;

} // namespace zariski
