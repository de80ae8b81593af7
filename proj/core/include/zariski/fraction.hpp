#pragma once

#include <compare>
#include <ostream>
#include <string>
#include <utility>

#include "zariski/domain.hpp"

namespace zariski {

/// Element of the fraction field of a Euclidean domain D, kept reduced with a
/// normal (positive / monic) denominator.
template <class D>
class Fraction {
    using Ops = Domain<D>;

public:
    Fraction() : num_(), den_(Ops::one_like(num_)) {}
    explicit Fraction(D num) : num_(std::move(num)), den_(Ops::one_like(num_)) {}
    Fraction(D num, D den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

    static Fraction zero_like(const Fraction& f) { return Fraction(Ops::zero_like(f.num_)); }
    static Fraction one_like(const Fraction& f) { return Fraction(Ops::one_like(f.num_)); }

    const D& num() const noexcept { return num_; }
    const D& den() const noexcept { return den_; }
    bool is_zero() const { return Ops::is_zero(num_); }
    bool is_one() const { return num_ == den_; }

    Fraction inverse() const {
        if (is_zero()) throw DomainError("inverse of zero");
        return Fraction(den_, num_);
    }

    Fraction operator-() const { return Fraction(D(Ops::zero_like(num_) - num_), den_, Normalized{}); }
    friend Fraction operator+(const Fraction& a, const Fraction& b) {
        return Fraction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Fraction operator-(const Fraction& a, const Fraction& b) {
        return Fraction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Fraction operator*(const Fraction& a, const Fraction& b) {
        return Fraction(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Fraction operator/(const Fraction& a, const Fraction& b) {
        if (b.is_zero()) throw DomainError("division by zero");
        return Fraction(a.num_ * b.den_, a.den_ * b.num_);
    }
    Fraction& operator+=(const Fraction& b) { return *this = *this + b; }
    Fraction& operator-=(const Fraction& b) { return *this = *this - b; }
    Fraction& operator*=(const Fraction& b) { return *this = *this * b; }
    Fraction& operator/=(const Fraction& b) { return *this = *this / b; }

    /// Integer power; negative exponents invert.
    Fraction pow(long e) const {
        Fraction base = e < 0 ? inverse() : *this;
        unsigned long k = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
        Fraction acc = one_like(*this);
        while (k) {
            if (k & 1UL) acc *= base;
            k >>= 1UL;
            if (k) base *= base;
        }
        return acc;
    }

    friend bool operator==(const Fraction& a, const Fraction& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    /// Canonical (not field) order, used for sorting and set keys.
    friend std::strong_ordering operator<=>(const Fraction& a, const Fraction& b) {
        if (auto c = Ops::compare(a.den_, b.den_); c != 0) return c;
        return Ops::compare(a.num_, b.num_);
    }

    std::string str() const {
        if (Ops::is_unit(den_)) return Ops::str(num_);
        std::string n = Ops::str(num_);
        std::string d = Ops::str(den_);
        if (!Ops::is_atomic(num_)) n = "(" + n + ")";
        if (!Ops::is_atomic(den_)) d = "(" + d + ")";
        return n + "/" + d;
    }

    friend std::ostream& operator<<(std::ostream& os, const Fraction& f) { return os << f.str(); }

private:
    struct Normalized {};
    Fraction(D num, D den, Normalized) : num_(std::move(num)), den_(std::move(den)) {}

    void normalize() {
        if (Ops::is_zero(den_)) throw DomainError("zero denominator");
        if (Ops::is_zero(num_)) {
            den_ = Ops::one_like(den_);
            return;
        }
        D g = Ops::gcd(num_, den_);
        num_ = Ops::quo(num_, g);
        den_ = Ops::quo(den_, g);
        D u = Ops::unit(den_);
        num_ = Ops::quo(num_, u);
        den_ = Ops::quo(den_, u);
    }

    D num_;
    D den_;
};

using RationalElem = Fraction<Integer>;
using FunctionElem = Fraction<Poly>;

} // namespace zariski
