#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace zariski {

using Integer = mpz_class;
using Rational = mpq_class;

/// Dense univariate polynomial over Q (modulus 0) or F_p (modulus p).
///
/// Over F_p every coefficient is kept as an integer in [0, p), stored in the
/// same mpq_class slot so that both coefficient fields share one code path.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::uint64_t modulus) : modulus_(modulus) {}
    Poly(std::uint64_t modulus, std::vector<Rational> coeffs);

    static Poly constant(std::uint64_t modulus, const Rational& c);
    static Poly monomial(std::uint64_t modulus, const Rational& c, std::size_t degree);
    static Poly variable(std::uint64_t modulus) { return monomial(modulus, 1, 1); }

    std::uint64_t modulus() const noexcept { return modulus_; }
    bool over_rationals() const noexcept { return modulus_ == 0; }

    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_one() const;
    bool is_constant() const noexcept { return coeffs_.size() <= 1; }
    bool is_monic() const { return !is_zero() && coeffs_.back() == 1; }

    const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
    Rational coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }
    const Rational& leading() const { return coeffs_.back(); }

    Poly operator-() const;
    Poly& operator+=(const Poly& rhs);
    Poly& operator-=(const Poly& rhs);
    Poly& operator*=(const Poly& rhs);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const Poly& b) { return a *= b; }

    Poly scaled(const Rational& c) const;

    /// Euclidean division; throws DomainError on division by zero.
    static void divmod(const Poly& a, const Poly& b, Poly& quotient, Poly& remainder);
    friend Poly operator/(const Poly& a, const Poly& b);
    friend Poly operator%(const Poly& a, const Poly& b);

    Poly monic() const;
    Poly derivative() const;
    Rational eval(const Rational& at) const;
    Poly pow(unsigned e) const;

    /// Field inverse of a coefficient (modular inverse over F_p).
    Rational inverse(const Rational& c) const;
    Rational reduce(const Rational& c) const;

    std::string str(char var = 'x') const;

    friend bool operator==(const Poly& a, const Poly& b) {
        return a.modulus_ == b.modulus_ && a.coeffs_ == b.coeffs_;
    }
    /// Canonical order: degree first, then coefficients from the top down.
    friend std::strong_ordering operator<=>(const Poly& a, const Poly& b);

private:
    void trim();
    void check_compatible(const Poly& rhs) const;

    std::uint64_t modulus_ = 0;
    std::vector<Rational> coeffs_;
};

/// Monic gcd (zero when both are zero).
Poly gcd(const Poly& a, const Poly& b);

/// a^e mod m, exponent given as an arbitrary-size integer.
Poly powmod(const Poly& a, const Integer& e, const Poly& m);

} // namespace zariski
