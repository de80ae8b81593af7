#pragma once

// Polynomials and rational functions in an indeterminate T over K, together
// with the Gauss (trivial) extension of a place valuation to K(T):
//   v*(a_0 + a_1 T + ... + a_r T^r) = min v(a_i),   v*(f/g) = v*(f) - v*(g).

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "zariski/field.hpp"

namespace zariski {

template <class D>
class PolyT {
public:
    using Elem = Fraction<D>;

    /// The zero polynomial over the coefficient field of `like`.
    explicit PolyT(const Elem& like) : zero_(Elem::zero_like(like)) {}
    PolyT(std::vector<Elem> coeffs, const Elem& like) : zero_(Elem::zero_like(like)), coeffs_(std::move(coeffs)) {
        trim();
    }
    static PolyT constant(const Elem& c) { return PolyT({c}, c); }
    static PolyT indeterminate(const Elem& like) { return PolyT({Elem::zero_like(like), Elem::one_like(like)}, like); }

    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    const std::vector<Elem>& coeffs() const noexcept { return coeffs_; }
    const Elem& coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : zero_; }
    const Elem& leading() const { return coeffs_.back(); }
    const Elem& zero_elem() const noexcept { return zero_; }

    PolyT operator-() const {
        PolyT r = *this;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }
    friend PolyT operator+(const PolyT& a, const PolyT& b) {
        std::vector<Elem> out(std::max(a.coeffs_.size(), b.coeffs_.size()), a.zero_);
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coeff(i) + b.coeff(i);
        return PolyT(std::move(out), a.zero_);
    }
    friend PolyT operator-(const PolyT& a, const PolyT& b) { return a + (-b); }
    friend PolyT operator*(const PolyT& a, const PolyT& b) {
        if (a.is_zero() || b.is_zero()) return PolyT(a.zero_);
        std::vector<Elem> out(a.coeffs_.size() + b.coeffs_.size() - 1, a.zero_);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return PolyT(std::move(out), a.zero_);
    }
    PolyT scaled(const Elem& c) const {
        std::vector<Elem> out = coeffs_;
        for (auto& x : out) x *= c;
        return PolyT(std::move(out), zero_);
    }

    static void divmod(const PolyT& a, const PolyT& b, PolyT& quotient, PolyT& remainder) {
        if (b.is_zero()) throw DomainError("division by the zero polynomial in T");
        PolyT r = a;
        std::vector<Elem> q(a.degree() >= b.degree() ? static_cast<std::size_t>(a.degree() - b.degree() + 1) : 0,
                            a.zero_);
        const Elem lead_inv = b.leading().inverse();
        while (!r.is_zero() && r.degree() >= b.degree()) {
            const auto shift = static_cast<std::size_t>(r.degree() - b.degree());
            const Elem factor = r.leading() * lead_inv;
            q[shift] = factor;
            for (std::size_t i = 0; i < b.coeffs_.size(); ++i) r.coeffs_[i + shift] -= factor * b.coeffs_[i];
            r.trim();
        }
        quotient = PolyT(std::move(q), a.zero_);
        remainder = std::move(r);
    }

    PolyT monic() const { return is_zero() ? *this : scaled(leading().inverse()); }

    friend PolyT gcd(const PolyT& a, const PolyT& b) {
        PolyT x = a, y = b;
        while (!y.is_zero()) {
            PolyT q(a.zero_), r(a.zero_);
            divmod(x, y, q, r);
            x = std::move(y);
            y = std::move(r);
        }
        return x.monic();
    }

    std::string str() const {
        if (is_zero()) return "0";
        std::string out;
        for (int i = degree(); i >= 0; --i) {
            const Elem& c = coeffs_[static_cast<std::size_t>(i)];
            if (c.is_zero()) continue;
            if (!out.empty()) out += " + ";
            if (i == 0) {
                out += c.str();
                continue;
            }
            if (!c.is_one()) out += "(" + c.str() + ")*";
            out += "T";
            if (i > 1) out += "^" + std::to_string(i);
        }
        return out;
    }

    friend bool operator==(const PolyT& a, const PolyT& b) { return a.coeffs_ == b.coeffs_; }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }

    Elem zero_;
    std::vector<Elem> coeffs_;
};

/// f/g in K(T) with g monic. Common factors are not cancelled: Euclid over
/// Q(x)[T] blows up, and v*(f) - v*(g) does not depend on the representative.
template <class D>
class RatFunT {
public:
    using Elem = Fraction<D>;

    explicit RatFunT(PolyT<D> num) : num_(std::move(num)), den_(PolyT<D>::constant(Elem::one_like(num_.zero_elem()))) {}
    RatFunT(PolyT<D> num, PolyT<D> den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }
    static RatFunT constant(const Elem& c) { return RatFunT(PolyT<D>::constant(c)); }
    static RatFunT indeterminate(const Elem& like) { return RatFunT(PolyT<D>::indeterminate(like)); }

    const PolyT<D>& num() const noexcept { return num_; }
    const PolyT<D>& den() const noexcept { return den_; }
    bool is_zero() const noexcept { return num_.is_zero(); }

    RatFunT inverse() const {
        if (is_zero()) throw DomainError("inverse of zero in K(T)");
        return RatFunT(den_, num_);
    }
    RatFunT operator-() const { return RatFunT(-num_, den_); }
    friend RatFunT operator+(const RatFunT& a, const RatFunT& b) {
        return RatFunT(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunT operator-(const RatFunT& a, const RatFunT& b) { return a + (-b); }
    friend RatFunT operator*(const RatFunT& a, const RatFunT& b) {
        return RatFunT(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFunT operator/(const RatFunT& a, const RatFunT& b) { return a * b.inverse(); }
    RatFunT pow(long e) const {
        RatFunT base = e < 0 ? inverse() : *this;
        unsigned long k = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
        RatFunT acc = constant(Elem::one_like(num_.zero_elem()));
        while (k) {
            if (k & 1UL) acc = acc * base;
            k >>= 1UL;
            if (k) base = base * base;
        }
        return acc;
    }

    std::string str() const {
        if (den_.degree() == 0) return num_.str();
        return "(" + num_.str() + ")/(" + den_.str() + ")";
    }

    friend bool operator==(const RatFunT& a, const RatFunT& b) { return a.num_ * b.den_ == b.num_ * a.den_; }

private:
    void normalize() {
        if (den_.is_zero()) throw DomainError("zero denominator in K(T)");
        if (num_.is_zero()) {
            den_ = PolyT<D>::constant(Elem::one_like(num_.zero_elem()));
            return;
        }
        const Elem lead_inv = den_.leading().inverse();
        num_ = num_.scaled(lead_inv);
        den_ = den_.scaled(lead_inv);
    }

    PolyT<D> num_;
    PolyT<D> den_;
};

/// min over nonzero coefficients of v_place; throws for the zero polynomial.
template <class D>
long gauss_val(const Place<D>& place, const PolyT<D>& f) {
    if (f.is_zero()) throw DomainError("Gauss valuation of the zero polynomial is not represented");
    std::optional<long> best;
    for (const auto& c : f.coeffs()) {
        if (c.is_zero()) continue;
        const long v = val(place, c);
        if (!best || v < *best) best = v;
    }
    return *best;
}

template <class D>
long gauss_val(const Place<D>& place, const RatFunT<D>& h) {
    return gauss_val(place, h.num()) - gauss_val(place, h.den());
}

} // namespace zariski
