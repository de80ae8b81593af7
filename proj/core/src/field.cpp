#include "zariski/field.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>
#include <type_traits>

namespace zariski {

template <class D>
Place<D> Place<D>::from_generator(D generator) {
    if (!Domain<D>::is_normal(generator))
        throw DomainError("place generator " + Domain<D>::str(generator) + " is not normalized (positive / monic)");
    if (!Domain<D>::is_irreducible(generator))
        throw DomainError("place generator " + Domain<D>::str(generator) + " is not prime / irreducible");
    const PlaceKind kind = std::is_same_v<D, Integer> ? PlaceKind::Finite : PlaceKind::Irreducible;
    return Place(kind, std::move(generator));
}

template <class D>
Place<D> Place<D>::infinity(const D& like) {
    return Place(PlaceKind::Infinity, Domain<D>::zero_like(like));
}

template <class D>
std::string Place<D>::str() const {
    switch (kind_) {
    case PlaceKind::Finite: return "p:" + Domain<D>::str(generator_);
    case PlaceKind::Irreducible: return "irr:" + Domain<D>::str(generator_);
    case PlaceKind::Infinity: return "inf";
    }
    return "?";
}

template <class D>
const Place<D>& SpacePoint<D>::place() const {
    if (!place_) throw DomainError("the generic point is not a place");
    return *place_;
}

template <class D>
BasePair<D> BasePair<D>::rationals() {
    if constexpr (!std::is_same_v<D, Integer>) throw DomainError("q-z is modelled over integer numerators");
    return BasePair(BaseKind::QZ, 0);
}

template <class D>
BasePair<D> BasePair<D>::rational_functions() {
    if constexpr (!std::is_same_v<D, Poly>) throw DomainError("qx-qx is modelled over polynomial numerators");
    return BasePair(BaseKind::QxQx, 0);
}

namespace {

void require_prime_characteristic(std::uint64_t p) {
    if (!is_prime(Integer(static_cast<unsigned long>(p))))
        throw DomainError("characteristic " + std::to_string(p) + " is not prime");
}

} // namespace

template <class D>
BasePair<D> BasePair<D>::fp_functions(std::uint64_t p) {
    if constexpr (!std::is_same_v<D, Poly>) throw DomainError("fpx-fpx is modelled over polynomial numerators");
    require_prime_characteristic(p);
    return BasePair(BaseKind::FpxFpx, p);
}

template <class D>
BasePair<D> BasePair<D>::fp_functions_over_fp(std::uint64_t p) {
    if constexpr (!std::is_same_v<D, Poly>) throw DomainError("fpx-fp is modelled over polynomial numerators");
    require_prime_characteristic(p);
    return BasePair(BaseKind::FpxFp, p);
}

template <class D>
std::string BasePair<D>::name() const {
    switch (kind_) {
    case BaseKind::QZ: return "q-z";
    case BaseKind::QxQx: return "qx-qx";
    case BaseKind::FpxFpx: return "fpx-fpx:" + std::to_string(p_);
    case BaseKind::FpxFp: return "fpx-fp:" + std::to_string(p_);
    }
    return "?";
}

template <class D>
D BasePair<D>::zero() const {
    if constexpr (std::is_same_v<D, Integer>) return Integer(0);
    else return Poly(p_);
}

template <class D>
D BasePair<D>::one() const {
    if constexpr (std::is_same_v<D, Integer>) return Integer(1);
    else return Poly::constant(p_, 1);
}

template <class D>
Fraction<D> BasePair<D>::from_int(long n) const {
    return from_rational(Rational(n));
}

template <class D>
Fraction<D> BasePair<D>::from_rational(const Rational& q) const {
    if constexpr (std::is_same_v<D, Integer>) {
        return Fraction<D>(q.get_num(), q.get_den());
    } else {
        // Over F_p the reduction happens inside the constant polynomial.
        return Fraction<D>(Poly::constant(p_, q));
    }
}

template <class D>
Fraction<D> BasePair<D>::variable() const {
    if constexpr (std::is_same_v<D, Integer>) throw DomainError("q-z has no variable x");
    else return Fraction<D>(Poly::variable(p_));
}

template <class D>
bool BasePair<D>::in_base_ring(const Fraction<D>& x) const {
    if (!Domain<D>::is_unit(x.den())) return false;
    if constexpr (std::is_same_v<D, Poly>) {
        if (kind_ == BaseKind::FpxFp) return x.num().degree() <= 0;
    }
    return true;
}

template <class D>
Place<D> BasePair<D>::place(D generator) const {
    if constexpr (std::is_same_v<D, Poly>) {
        if (generator.modulus() != p_)
            throw DomainError("place " + generator.str() + " has the wrong coefficient field for " + name());
    }
    return Place<D>::from_generator(std::move(generator));
}

template <class D>
Place<D> BasePair<D>::infinity() const {
    if (!admits_infinity()) throw DomainError("the degree place is not part of Zar(K|A) for " + name());
    return Place<D>::infinity(zero());
}

template <class D>
void BasePair<D>::check_place(const Place<D>& place) const {
    if (place.is_infinity()) {
        if (!admits_infinity()) throw DomainError("the degree place is not part of Zar(K|A) for " + name());
        return;
    }
    if constexpr (std::is_same_v<D, Poly>) {
        if (place.generator().modulus() != p_)
            throw DomainError("place " + place.str() + " has the wrong coefficient field for " + name());
    }
}

template <class D>
Fraction<D> BasePair<D>::uniformizer(const Place<D>& place) const {
    if (place.is_infinity()) return variable().inverse();
    return Fraction<D>(place.generator());
}

template <class D>
std::string BasePair<D>::center(const SpacePoint<D>& point) const {
    if (point.is_generic()) return "(0)";
    // Over the constant field every place lies over the only prime (0).
    if (kind_ == BaseKind::FpxFp) return "(0)";
    return "(" + Domain<D>::str(point.place().generator()) + ")";
}

template <class D>
long val(const Place<D>& place, const Fraction<D>& x) {
    if (x.is_zero()) throw DomainError("valuation of zero is not represented");
    if (place.is_infinity()) {
        if constexpr (std::is_same_v<D, Poly>) return x.den().degree() - x.num().degree();
        else throw DomainError("integers have no degree place");
    }
    return Domain<D>::multiplicity(x.num(), place.generator()) - Domain<D>::multiplicity(x.den(), place.generator());
}

template <class D>
std::vector<Place<D>> support(const BasePair<D>& base, const Fraction<D>& x) {
    if (x.is_zero()) throw DomainError("support of zero is not represented");
    std::set<Place<D>> out;
    for (auto& g : Domain<D>::irreducible_factors(x.num())) out.insert(Place<D>::from_generator(std::move(g)));
    for (auto& g : Domain<D>::irreducible_factors(x.den())) out.insert(Place<D>::from_generator(std::move(g)));
    if constexpr (std::is_same_v<D, Poly>) {
        if (base.admits_infinity() && x.num().degree() != x.den().degree()) out.insert(base.infinity());
    }
    return {out.begin(), out.end()};
}

namespace {

std::vector<Rational> small_rationals(unsigned height) {
    std::set<Rational> vals;
    for (long b = 1; b <= static_cast<long>(height); ++b)
        for (long a = -static_cast<long>(height); a <= static_cast<long>(height); ++a) {
            Rational q(a, b);
            q.canonicalize();
            vals.insert(q);
        }
    return {vals.begin(), vals.end()};
}

/// Every monic polynomial of the given degree with coefficients drawn from
/// `values` (all lower coefficients independently).
void for_each_monic(std::uint64_t modulus, int degree, const std::vector<Rational>& values,
                    const std::function<void(Poly)>& fn) {
    std::vector<std::size_t> idx(static_cast<std::size_t>(degree), 0);
    for (;;) {
        std::vector<Rational> c(static_cast<std::size_t>(degree) + 1);
        for (std::size_t i = 0; i < idx.size(); ++i) c[i] = values[idx[i]];
        c.back() = 1;
        fn(Poly(modulus, std::move(c)));
        std::size_t pos = 0;
        while (pos < idx.size() && ++idx[pos] == values.size()) idx[pos++] = 0;
        if (pos == idx.size()) return;
    }
}

} // namespace

template <class D>
std::vector<Place<D>> enumerate_places(const BasePair<D>& base, unsigned bound, unsigned height) {
    std::vector<Place<D>> out;
    if constexpr (std::is_same_v<D, Integer>) {
        (void)height;
        std::vector<char> composite(bound + 1, 0);
        for (unsigned n = 2; n <= bound; ++n) {
            if (composite[n]) continue;
            out.push_back(Place<D>::from_generator(Integer(n)));
            for (unsigned long m = static_cast<unsigned long>(n) * n; m <= bound; m += n) composite[m] = 1;
        }
    } else {
        const std::uint64_t p = base.characteristic();
        std::vector<Rational> values;
        if (p == 0) {
            values = small_rationals(height);
        } else {
            for (std::uint64_t c = 0; c < p; ++c) values.emplace_back(static_cast<unsigned long>(c));
        }
        double total = 0;
        for (unsigned d = 1; d <= bound; ++d) total += std::pow(static_cast<double>(values.size()), d);
        constexpr double kEnumerationCap = 2e6;
        if (total > kEnumerationCap)
            throw DomainError("place enumeration with degree bound " + std::to_string(bound) + " is too large");
        for (unsigned d = 1; d <= bound; ++d) {
            std::vector<Place<D>> level;
            for_each_monic(p, static_cast<int>(d), values, [&](Poly f) {
                if (is_irreducible(f)) level.push_back(Place<D>::from_generator(std::move(f)));
            });
            std::sort(level.begin(), level.end());
            out.insert(out.end(), level.begin(), level.end());
        }
        if (base.admits_infinity()) out.push_back(base.infinity());
    }
    return out;
}

template class Place<Integer>;
template class Place<Poly>;
template class SpacePoint<Integer>;
template class SpacePoint<Poly>;
template class BasePair<Integer>;
template class BasePair<Poly>;

template long val(const Place<Integer>&, const Fraction<Integer>&);
template long val(const Place<Poly>&, const Fraction<Poly>&);
template std::vector<Place<Integer>> support(const BasePair<Integer>&, const Fraction<Integer>&);
template std::vector<Place<Poly>> support(const BasePair<Poly>&, const Fraction<Poly>&);
template std::vector<Place<Integer>> enumerate_places(const BasePair<Integer>&, unsigned, unsigned);
template std::vector<Place<Poly>> enumerate_places(const BasePair<Poly>&, unsigned, unsigned);

} // namespace zariski
