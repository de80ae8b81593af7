#include "zariski/zr_space.hpp"

#include <algorithm>
#include <iterator>

namespace zariski {

namespace {

template <class T>
std::vector<T> sorted_unique(std::vector<T> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

template <class T>
std::vector<T> set_union(const std::vector<T>& a, const std::vector<T>& b) {
    std::vector<T> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

template <class T>
std::vector<T> set_intersection(const std::vector<T>& a, const std::vector<T>& b) {
    std::vector<T> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

template <class T>
std::vector<T> set_difference(const std::vector<T>& a, const std::vector<T>& b) {
    std::vector<T> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

/// Places where x has negative valuation: the irreducible factors of the
/// reduced denominator, plus the degree place when it is legal and the
/// numerator has larger degree.
template <class D>
std::vector<Place<D>> negative_places(const BasePair<D>& base, const Fraction<D>& x) {
    std::vector<Place<D>> out;
    for (auto& g : Domain<D>::irreducible_factors(x.den())) out.push_back(Place<D>::from_generator(std::move(g)));
    if constexpr (std::is_same_v<D, Poly>) {
        if (base.admits_infinity() && x.num().degree() > x.den().degree()) out.push_back(base.infinity());
    }
    return sorted_unique(std::move(out));
}

} // namespace

// ---- ZarSubset -----------------------------------------------------------

template <class D>
ZarSubset<D>::ZarSubset(SubsetMode mode, std::vector<Place<D>> exceptions, bool generic)
    : mode_(mode), exceptions_(sorted_unique(std::move(exceptions))), generic_(generic) {}

template <class D>
ZarSubset<D> ZarSubset<D>::finite(std::vector<Place<D>> places, bool contains_generic) {
    return ZarSubset(SubsetMode::FinitePlaces, std::move(places), contains_generic);
}

template <class D>
ZarSubset<D> ZarSubset<D>::cofinite(std::vector<Place<D>> excluded, bool contains_generic) {
    return ZarSubset(SubsetMode::CofinitePlaces, std::move(excluded), contains_generic);
}

template <class D>
ZarSubset<D> ZarSubset<D>::point(const SpacePoint<D>& pt) {
    if (pt.is_generic()) return generic_only();
    return finite({pt.place()}, false);
}

template <class D>
bool ZarSubset<D>::contains_place(const Place<D>& p) const {
    const bool listed = std::binary_search(exceptions_.begin(), exceptions_.end(), p);
    return mode_ == SubsetMode::FinitePlaces ? listed : !listed;
}

template <class D>
bool ZarSubset<D>::contains(const SpacePoint<D>& pt) const {
    return pt.is_generic() ? generic_ : contains_place(pt.place());
}

template <class D>
ZarSubset<D> ZarSubset<D>::with_generic(bool g) const {
    return ZarSubset(mode_, exceptions_, g);
}

template <class D>
ZarSubset<D> ZarSubset<D>::complement() const {
    const auto flipped = mode_ == SubsetMode::FinitePlaces ? SubsetMode::CofinitePlaces : SubsetMode::FinitePlaces;
    return ZarSubset(flipped, exceptions_, !generic_);
}

template <class D>
ZarSubset<D> ZarSubset<D>::unite(const ZarSubset& other) const {
    const bool g = generic_ || other.generic_;
    const auto& a = exceptions_;
    const auto& b = other.exceptions_;
    if (is_finite() && other.is_finite()) return finite(set_union(a, b), g);
    if (is_finite()) return cofinite(set_difference(b, a), g);
    if (other.is_finite()) return cofinite(set_difference(a, b), g);
    return cofinite(set_intersection(a, b), g);
}

template <class D>
ZarSubset<D> ZarSubset<D>::intersect(const ZarSubset& other) const {
    const bool g = generic_ && other.generic_;
    const auto& a = exceptions_;
    const auto& b = other.exceptions_;
    if (is_finite() && other.is_finite()) return finite(set_intersection(a, b), g);
    if (is_finite()) return finite(set_difference(a, b), g);
    if (other.is_finite()) return finite(set_difference(b, a), g);
    return cofinite(set_union(a, b), g);
}

template <class D>
std::string ZarSubset<D>::str() const {
    std::string out = is_finite() ? "{" : "all places except {";
    for (std::size_t i = 0; i < exceptions_.size(); ++i) out += (i ? ", " : "") + exceptions_[i].str();
    out += "}";
    if (generic_) out += " + K";
    return out;
}

// ---- ultrafilters --------------------------------------------------------

template <class D>
const SpacePoint<D>& UltrafilterClass<D>::center() const {
    if (!center_) throw DomainError("the free ultrafilter class has no center");
    return *center_;
}

template <class D>
bool UltrafilterFamily<D>::contains(const UltrafilterClass<D>& u) const {
    return u.is_free() ? has_free_class() : subset_.contains(u.center());
}

template <class D>
std::vector<UltrafilterClass<D>> UltrafilterFamily<D>::enumerate(const std::vector<Place<D>>& places) const {
    std::vector<UltrafilterClass<D>> out;
    if (subset_.contains_generic()) out.push_back(UltrafilterClass<D>::principal(SpacePoint<D>::generic()));
    const auto& listed = subset_.is_finite() ? subset_.exceptions() : places;
    for (const auto& p : listed)
        if (subset_.contains_place(p)) out.push_back(UltrafilterClass<D>::principal(SpacePoint<D>::at(p)));
    if (has_free_class()) out.push_back(UltrafilterClass<D>::free_class());
    return out;
}

// ---- operations ----------------------------------------------------------

template <class D>
ZarSubset<D> b_x(const BasePair<D>& base, const Fraction<D>& x) {
    if (x.is_zero()) throw DomainError("B_0 is not represented; omit 0 from F");
    return ZarSubset<D>::cofinite(negative_places(base, x), true);
}

template <class D>
ZarSubset<D> b_F(const BasePair<D>& base, const std::vector<Fraction<D>>& elements) {
    ZarSubset<D> out = ZarSubset<D>::whole();
    for (const auto& x : elements) out = out.intersect(b_x(base, x));
    return out;
}

template <class D>
ZarSubset<D> sp_closure(const ZarSubset<D>& subset) {
    // Cl({K}) is the whole space; every place is a closed point.
    return subset.contains_generic() ? ZarSubset<D>::whole() : subset;
}

template <class D>
ZarSubset<D> gen_closure(const ZarSubset<D>& subset) {
    // K contains every valuation ring, so it generizes every point.
    return subset.is_empty() ? subset : subset.with_generic(true);
}

template <class D>
UltrafilterFamily<D> ultrafilter_classes(const ZarSubset<D>& subset) {
    if (subset.is_empty()) throw DomainError("the empty set carries no ultrafilter");
    return UltrafilterFamily<D>(subset);
}

template <class D>
SpacePoint<D> limit_point(const ZarSubset<D>& subset, const UltrafilterClass<D>& u) {
    if (!ultrafilter_classes(subset).contains(u))
        throw InvalidSubset("ultrafilter class " + u.str() + " does not live on " + subset.str());
    if (!u.is_free()) return u.center();
    // For x != 0 the set B_x ∩ Y is cofinite in Y, hence in every free
    // ultrafilter; the limit ring {x : B_x ∩ Y in U} is all of K.
    return SpacePoint<D>::generic();
}

template <class D>
ZarSubset<D> cl_cons(const ZarSubset<D>& subset) {
    if (subset.is_empty()) return subset;
    ZarSubset<D> out = subset;
    const auto family = ultrafilter_classes(subset);
    // Principal classes contribute their centres, i.e. Y itself.
    if (family.has_free_class())
        out = out.unite(ZarSubset<D>::point(limit_point(subset, UltrafilterClass<D>::free_class())));
    return out;
}

template <class D>
ZarSubset<D> cl_zar(const ZarSubset<D>& subset) {
    return sp_closure(cl_cons(subset));
}

template <class D>
ZarSubset<D> cl_inv(const ZarSubset<D>& subset) {
    return gen_closure(cl_cons(subset));
}

template <class D>
std::optional<Place<D>> some_place_in(const BasePair<D>& base, const ZarSubset<D>& subset) {
    if (subset.is_finite()) {
        if (subset.exceptions().empty()) return std::nullopt;
        return subset.exceptions().front();
    }
    // Only finitely many places are excluded, so the search terminates.
    for (unsigned bound = 1;; bound *= 2) {
        const unsigned b = std::is_same_v<D, Integer> ? 64 * bound : bound;
        for (const auto& p : enumerate_places(base, b))
            if (subset.contains_place(p)) return p;
    }
}

template <class D>
bool is_proconstructible(const ZarSubset<D>& subset) {
    return cl_cons(subset) == subset;
}

template <class D>
bool is_quasicompact_zar(const ZarSubset<D>& subset) {
    // An infinite set of places without K is covered by the B_x with x a
    // uniformizer-free element of each place's complement and admits no
    // finite subcover; any open containing K is cofinite in places.
    return subset.is_finite() || subset.contains_generic();
}

template <class D>
SemilocalRing<D>::SemilocalRing(ZarSubset<D> constraint) : constraint_(constraint.place_part()) {}

template <class D>
std::string SemilocalRing<D>::str() const {
    if (constraint_.is_empty()) return "K";
    return "∩ V_p over " + constraint_.str();
}

template <class D>
SemilocalRing<D> intersection_ring(const ZarSubset<D>& subset) {
    if (subset.is_empty()) throw DomainError("intersection over the empty family is not represented");
    return SemilocalRing<D>(subset);
}

template <class D>
bool ring_member(const BasePair<D>& base, const SemilocalRing<D>& ring, const Fraction<D>& x) {
    if (x.is_zero()) return true;
    const auto& c = ring.constraint();
    if (c.is_finite()) {
        return std::all_of(c.exceptions().begin(), c.exceptions().end(),
                           [&](const Place<D>& p) { return val(p, x) >= 0; });
    }
    const auto bad = negative_places(base, x);
    return std::none_of(bad.begin(), bad.end(), [&](const Place<D>& p) { return c.contains_place(p); });
}

template <class D>
bool is_representation(const ZarSubset<D>& subset) {
    if (subset.is_empty()) return false;
    return intersection_ring(subset) == SemilocalRing<D>(ZarSubset<D>::all_places());
}

template <class D>
WitnessedAnswer is_locally_finite(const ZarSubset<D>&) {
    return {true, "every nonzero element has finite support, so it is a non-unit at finitely many places"};
}

template <class D>
ClosureRingReport check_closure_determines_ring(const ZarSubset<D>& y1, const ZarSubset<D>& y2) {
    ClosureRingReport r{};
    r.closures_equal = cl_cons(y1) == cl_cons(y2);
    r.rings_equal = intersection_ring(y1) == intersection_ring(y2);
    r.holds = !r.closures_equal || r.rings_equal;
    return r;
}

template <class D>
WitnessedAnswer check_maximal_centers(const BasePair<D>& base, const ZarSubset<D>& subset) {
    if (!base.is_fraction_field_of_base())
        throw PreconditionError("K is not the quotient field of A for " + base.name());
    if (!is_representation(subset)) {
        std::string why = "∩Y != A";
        if (auto p = some_place_in(base, subset.complement()))
            why = "1/" + Domain<D>::str(base.uniformizer(*p).num()) + " lies in ∩Y but not in A (" + p->str() +
                  " is missing from Y)";
        throw PreconditionError("Y is not a representation of A: " + why);
    }
    const bool ok = cl_cons(subset).place_part() == ZarSubset<D>::all_places();
    return {ok, ok ? "Y contains every place, so every preimage of a maximal ideal lies in Cl_cons(Y)"
                   : "some place is missing from Cl_cons(Y)"};
}

#define ZARISKI_INSTANTIATE_ZR(D)                                                                       \
    template class ZarSubset<D>;                                                                        \
    template class UltrafilterClass<D>;                                                                 \
    template class UltrafilterFamily<D>;                                                                \
    template class SemilocalRing<D>;                                                                    \
    template ZarSubset<D> b_x(const BasePair<D>&, const Fraction<D>&);                                  \
    template ZarSubset<D> b_F(const BasePair<D>&, const std::vector<Fraction<D>>&);                     \
    template ZarSubset<D> sp_closure(const ZarSubset<D>&);                                              \
    template ZarSubset<D> gen_closure(const ZarSubset<D>&);                                             \
    template UltrafilterFamily<D> ultrafilter_classes(const ZarSubset<D>&);                             \
    template SpacePoint<D> limit_point(const ZarSubset<D>&, const UltrafilterClass<D>&);                \
    template ZarSubset<D> cl_cons(const ZarSubset<D>&);                                                 \
    template ZarSubset<D> cl_zar(const ZarSubset<D>&);                                                  \
    template ZarSubset<D> cl_inv(const ZarSubset<D>&);                                                  \
    template std::optional<Place<D>> some_place_in(const BasePair<D>&, const ZarSubset<D>&);            \
    template bool is_proconstructible(const ZarSubset<D>&);                                             \
    template bool is_quasicompact_zar(const ZarSubset<D>&);                                             \
    template SemilocalRing<D> intersection_ring(const ZarSubset<D>&);                                   \
    template bool ring_member(const BasePair<D>&, const SemilocalRing<D>&, const Fraction<D>&);         \
    template bool is_representation(const ZarSubset<D>&);                                               \
    template WitnessedAnswer is_locally_finite(const ZarSubset<D>&);                                    \
    template ClosureRingReport check_closure_determines_ring(const ZarSubset<D>&, const ZarSubset<D>&);                       \
    template WitnessedAnswer check_maximal_centers(const BasePair<D>&, const ZarSubset<D>&);

ZARISKI_INSTANTIATE_ZR(Integer)
ZARISKI_INSTANTIATE_ZR(Poly)

} // namespace zariski
