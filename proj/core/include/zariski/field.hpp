#pragma once

// Base pairs (K, A), their places, and the discrete valuations attached to
// them.
//
// Supported pairs:
//   q-z        (Q, Z)                 places: primes
//   qx-qx      (Q(x), Q[x])           places: monic irreducibles over Q
//   fpx-fpx:p  (F_p(x), F_p[x])       places: monic irreducibles over F_p
//   fpx-fp:p   (F_p(x), F_p)          the above plus the degree place "inf"
//
// The degree place is legal only when A is the constant field: x is not in
// its valuation ring, so it cannot contain k[x].

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zariski/fraction.hpp"

namespace zariski {

enum class BaseKind { QZ, QxQx, FpxFpx, FpxFp };

enum class PlaceKind { Finite, Irreducible, Infinity };

template <class D>
class Place {
public:
    /// Validates that `generator` is a normalized prime / monic irreducible.
    static Place from_generator(D generator);
    static Place infinity(const D& like);

    PlaceKind kind() const noexcept { return kind_; }
    bool is_infinity() const noexcept { return kind_ == PlaceKind::Infinity; }
    const D& generator() const noexcept { return generator_; }

    /// "p:5", "irr:x^2+1" or "inf".
    std::string str() const;

    friend bool operator==(const Place& a, const Place& b) {
        return a.kind_ == b.kind_ && a.generator_ == b.generator_;
    }
    /// Canonical order; the degree place sorts last.
    friend std::strong_ordering operator<=>(const Place& a, const Place& b) {
        if (a.is_infinity() != b.is_infinity()) return a.is_infinity() ? std::strong_ordering::greater : std::strong_ordering::less;
        if (a.is_infinity()) return std::strong_ordering::equal;
        return Domain<D>::compare(a.generator_, b.generator_);
    }

private:
    Place(PlaceKind kind, D generator) : kind_(kind), generator_(std::move(generator)) {}

    PlaceKind kind_;
    D generator_;
};

/// A point of Zar(K|A): the generic point K (trivial valuation) or a place.
template <class D>
class SpacePoint {
public:
    static SpacePoint generic() { return SpacePoint(); }
    static SpacePoint at(Place<D> place) { return SpacePoint(std::move(place)); }

    bool is_generic() const noexcept { return !place_.has_value(); }
    const Place<D>& place() const;

    std::string str() const { return is_generic() ? std::string("K") : place_->str(); }

    friend bool operator==(const SpacePoint&, const SpacePoint&) = default;
    friend std::strong_ordering operator<=>(const SpacePoint& a, const SpacePoint& b) {
        if (a.is_generic() || b.is_generic())
            return b.is_generic() <=> a.is_generic(); // generic first
        return *a.place_ <=> *b.place_;
    }

private:
    SpacePoint() = default;
    explicit SpacePoint(Place<D> p) : place_(std::move(p)) {}

    std::optional<Place<D>> place_;
};

template <class D>
class BasePair {
public:
    static BasePair rationals();                          // q-z
    static BasePair rational_functions();                 // qx-qx
    static BasePair fp_functions(std::uint64_t p);        // fpx-fpx:p
    static BasePair fp_functions_over_fp(std::uint64_t p); // fpx-fp:p

    BaseKind kind() const noexcept { return kind_; }
    std::uint64_t characteristic() const noexcept { return p_; }
    bool admits_infinity() const noexcept { return kind_ == BaseKind::FpxFp; }
    /// The quotient field of A is K (true except for (F_p(x), F_p)).
    bool is_fraction_field_of_base() const noexcept { return kind_ != BaseKind::FpxFp; }
    std::string name() const;

    D zero() const;
    D one() const;
    Fraction<D> from_int(long n) const;
    Fraction<D> from_rational(const Rational& q) const;
    /// The transcendental x; throws for q-z.
    Fraction<D> variable() const;

    /// Membership of x in the base ring A.
    bool in_base_ring(const Fraction<D>& x) const;

    Place<D> place(D generator) const;
    Place<D> infinity() const;
    /// Throws DomainError when `place` does not belong to this pair.
    void check_place(const Place<D>& place) const;

    /// An element of valuation 1 at `place`.
    Fraction<D> uniformizer(const Place<D>& place) const;

    /// Human-readable generator of the prime of A lying under a point.
    std::string center(const SpacePoint<D>& point) const;

    friend bool operator==(const BasePair&, const BasePair&) = default;

private:
    BasePair(BaseKind kind, std::uint64_t p) : kind_(kind), p_(p) {}

    BaseKind kind_;
    std::uint64_t p_;
};

/// v_place(x); throws DomainError for x = 0.
template <class D>
long val(const Place<D>& place, const Fraction<D>& x);

/// The places where x has nonzero valuation, in canonical order.
template <class D>
std::vector<Place<D>> support(const BasePair<D>& base, const Fraction<D>& x);

/// Places of bounded size, in canonical order: primes <= bound, or monic
/// irreducibles of degree <= bound (followed by "inf" when legal). Over Q the
/// polynomial coefficients a/b are further limited to |a|, b <= height.
template <class D>
std::vector<Place<D>> enumerate_places(const BasePair<D>& base, unsigned bound, unsigned height = 1);

extern template class Place<Integer>;
extern template class Place<Poly>;
extern template class SpacePoint<Integer>;
extern template class SpacePoint<Poly>;
extern template class BasePair<Integer>;
extern template class BasePair<Poly>;

} // namespace zariski
