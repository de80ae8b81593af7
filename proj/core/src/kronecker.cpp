#include "zariski/kronecker.hpp"

#include <algorithm>
#include <set>

namespace zariski {

namespace {

template <class D>
std::set<Place<D>> coefficient_places(const BasePair<D>& base, const PolyT<D>& f) {
    std::set<Place<D>> out;
    for (const auto& c : f.coeffs())
        if (!c.is_zero())
            for (auto& p : support(base, c)) out.insert(std::move(p));
    return out;
}

/// The places of Y at which membership of h can fail.
template <class D>
std::vector<Place<D>> places_to_test(const BasePair<D>& base, const ZarSubset<D>& subset, const RatFunT<D>& h) {
    if (subset.is_finite()) return subset.exceptions();
    auto places = coefficient_places(base, h.num());
    places.merge(coefficient_places(base, h.den()));
    std::vector<Place<D>> out;
    for (const auto& p : places)
        if (subset.contains_place(p)) out.push_back(p);
    return out;
}

template <class D>
void push_unique(std::vector<Fraction<D>>& set, Fraction<D> x) {
    if (std::find(set.begin(), set.end(), x) == set.end()) set.push_back(std::move(x));
}

} // namespace

template <class D>
KrSpec<D>::KrSpec(BasePair<D> base, ZarSubset<D> subset) : base_(base), subset_(std::move(subset)) {
    if (subset_.is_empty()) throw DomainError("Kr(Y) needs a nonempty Y");
}

template <class D>
bool in_trivial_extension(const Place<D>& place, const RatFunT<D>& h) {
    if (h.is_zero()) return true;
    return gauss_val(place, h.num()) >= gauss_val(place, h.den());
}

template <class D>
KrAnswer kr_member(const KrSpec<D>& spec, const RatFunT<D>& h) {
    if (h.is_zero()) return {true, std::nullopt};
    for (const auto& p : places_to_test(spec.base(), spec.subset(), h))
        if (!in_trivial_extension(p, h)) return {false, p.str()};
    return {true, std::nullopt};
}

template <class D>
CheckReport kfr_axiom_check(const KrSpec<D>& spec, const std::vector<PolyT<D>>& samples) {
    CheckReport report;
    const auto t = RatFunT<D>::indeterminate(spec.base().from_int(1));
    for (const auto& h : {t, t.inverse()}) {
        ++report.checked;
        if (auto a = kr_member(spec, h); !a.member) report.fail(h.str() + " fails at " + *a.witness);
    }
    for (const auto& f : samples) {
        if (f.is_zero() || f.coeff(0).is_zero()) continue;
        ++report.checked;
        const RatFunT<D> h(PolyT<D>::constant(f.coeff(0)), f);
        if (auto a = kr_member(spec, h); !a.member) report.fail("f(0)/f = " + h.str() + " fails at " + *a.witness);
    }
    return report;
}

template <class D>
CheckReport content_formula_check(const KrSpec<D>& spec, const PolyT<D>& f) {
    if (f.is_zero()) throw DomainError("content of the zero polynomial");
    CheckReport report;
    for (const auto& c : f.coeffs()) {
        if (c.is_zero()) continue;
        ++report.checked;
        const RatFunT<D> h(PolyT<D>::constant(c), f);
        if (auto a = kr_member(spec, h); !a.member) report.fail(h.str() + " fails at " + *a.witness);
    }
    for (const auto& p : places_to_test(spec.base(), spec.subset(), RatFunT<D>(f))) {
        const Fraction<D>* best = nullptr;
        long best_val = 0;
        for (const auto& c : f.coeffs()) {
            if (c.is_zero()) continue;
            const long v = val(p, c);
            if (!best || v < best_val) best = &c, best_val = v;
        }
        ++report.checked;
        if (!in_trivial_extension(p, RatFunT<D>(f.scaled(best->inverse()))))
            report.fail("f/" + best->str() + " is not in V(T) at " + p.str());
    }
    return report;
}

template <class D>
std::vector<std::vector<Fraction<D>>> phi_pullback(const RatFunT<D>& h) {
    if (h.is_zero()) throw DomainError("the pullback formula needs h = f/g with f, g nonzero");
    const auto& a = h.num().coeffs();
    const auto& b = h.den().coeffs();
    std::vector<std::vector<Fraction<D>>> family;
    for (const auto& ai : a) {
        if (ai.is_zero()) continue;
        for (const auto& bj : b) {
            if (bj.is_zero()) continue;
            std::vector<Fraction<D>> f;
            push_unique(f, ai / bj);
            for (const auto& al : a)
                if (!al.is_zero()) push_unique(f, al / ai);
            for (const auto& bm : b)
                if (!bm.is_zero()) push_unique(f, bm / bj);
            family.push_back(std::move(f));
        }
    }
    return family;
}

template <class D>
bool pullback_contains(const std::vector<std::vector<Fraction<D>>>& family, const Place<D>& place) {
    return std::any_of(family.begin(), family.end(), [&](const std::vector<Fraction<D>>& f) {
        return std::all_of(f.begin(), f.end(), [&](const Fraction<D>& x) { return val(place, x) >= 0; });
    });
}

template <class D>
FracIdeal<D> content(const BasePair<D>& base, const PolyT<D>& f) {
    std::vector<Fraction<D>> gens;
    for (const auto& c : f.coeffs())
        if (!c.is_zero()) gens.push_back(c);
    return FracIdeal<D>(base, std::move(gens));
}

template <class D>
bool kr_star_member(const BasePair<D>& base, const ZarSubset<D>& subset, const PolyT<D>& f, const PolyT<D>& g) {
    if (g.is_zero()) throw DomainError("zero denominator in K(T)");
    for (const auto* poly : {&f, &g})
        for (const auto& c : poly->coeffs())
            if (!base.in_base_ring(c)) throw DomainError("coefficient " + c.str() + " is not in A");
    if (f.is_zero()) return true;
    const StarSpec<D> star(subset);
    return gen_contains(apply_wedge(star, content(base, g)), apply_wedge(star, content(base, f)));
}

template <class D>
bool kr_star_member(const BasePair<D>& base, const ZarSubset<D>& subset, const RatFunT<D>& h) {
    auto in_a = [&](const PolyT<D>& p) {
        return std::all_of(p.coeffs().begin(), p.coeffs().end(), [&](const auto& c) { return base.in_base_ring(c); });
    };
    if ((in_a(h.num()) && in_a(h.den())) || !base.is_fraction_field_of_base())
        return kr_star_member(base, subset, h.num(), h.den());
    D l = Domain<D>::one_like(h.den().leading().den());
    for (const auto* poly : {&h.num(), &h.den()})
        for (const auto& c : poly->coeffs()) l = Domain<D>::quo(l * c.den(), Domain<D>::gcd(l, c.den()));
    const Fraction<D> scale(l);
    return kr_star_member(base, subset, h.num().scaled(scale), h.den().scaled(scale));
}

#define ZARISKI_INSTANTIATE_KR(D)                                                                               \
    template class KrSpec<D>;                                                                                   \
    template bool in_trivial_extension(const Place<D>&, const RatFunT<D>&);                                     \
    template KrAnswer kr_member(const KrSpec<D>&, const RatFunT<D>&);                                           \
    template CheckReport kfr_axiom_check(const KrSpec<D>&, const std::vector<PolyT<D>>&);                       \
    template CheckReport content_formula_check(const KrSpec<D>&, const PolyT<D>&);                              \
    template std::vector<std::vector<Fraction<D>>> phi_pullback(const RatFunT<D>&);                             \
    template bool pullback_contains(const std::vector<std::vector<Fraction<D>>>&, const Place<D>&);             \
    template FracIdeal<D> content(const BasePair<D>&, const PolyT<D>&);                                         \
    template bool kr_star_member(const BasePair<D>&, const ZarSubset<D>&, const PolyT<D>&, const PolyT<D>&);    \
    template bool kr_star_member(const BasePair<D>&, const ZarSubset<D>&, const RatFunT<D>&);

ZARISKI_INSTANTIATE_KR(Integer)
ZARISKI_INSTANTIATE_KR(Poly)

} // namespace zariski
