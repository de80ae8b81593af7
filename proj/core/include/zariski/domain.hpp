#pragma once

// Euclidean-domain traits for the two rings whose fraction fields are
// modelled: Z (fraction field Q) and k[x] (fraction field k(x)), k = Q or F_p.

#include <compare>
#include <string>

#include "zariski/errors.hpp"
#include "zariski/factor.hpp"
#include "zariski/poly.hpp"

namespace zariski {

template <class D>
struct Domain;

template <>
struct Domain<Integer> {
    static Integer zero_like(const Integer&) { return 0; }
    static Integer one_like(const Integer&) { return 1; }
    static bool is_zero(const Integer& a) { return a == 0; }
    static bool is_unit(const Integer& a) { return a == 1 || a == -1; }
    static Integer quo(const Integer& a, const Integer& b) {
        if (b == 0) throw DomainError("integer division by zero");
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        return q;
    }
    static Integer rem(const Integer& a, const Integer& b) {
        if (b == 0) throw DomainError("integer division by zero");
        Integer r;
        mpz_tdiv_r(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        return r;
    }
    static Integer gcd(const Integer& a, const Integer& b) { return ::gcd(a, b); }
    /// The unit u with a / u in normal form (positive).
    static Integer unit(const Integer& a) { return a < 0 ? Integer(-1) : Integer(1); }
    /// Multiplicity of the prime `p` in a != 0.
    static long multiplicity(const Integer& a, const Integer& p) {
        Integer rest;
        return static_cast<long>(mpz_remove(rest.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t()));
    }
    /// Distinct normalized irreducible factors of a != 0.
    static std::vector<Integer> irreducible_factors(const Integer& a) {
        std::vector<Integer> out;
        for (auto& [p, e] : factor_integer(a)) out.push_back(p);
        return out;
    }
    static bool is_irreducible(const Integer& a) { return is_prime(a); }
    static bool is_normal(const Integer& a) { return a > 0; }
    static std::string str(const Integer& a) { return a.get_str(); }
    /// "Atomic" means no parentheses are needed when printed as a numerator.
    static bool is_atomic(const Integer&) { return true; }
    static std::strong_ordering compare(const Integer& a, const Integer& b) {
        const int c = cmp(a, b);
        return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }
};

template <>
struct Domain<Poly> {
    static Poly zero_like(const Poly& a) { return Poly(a.modulus()); }
    static Poly one_like(const Poly& a) { return Poly::constant(a.modulus(), 1); }
    static bool is_zero(const Poly& a) { return a.is_zero(); }
    static bool is_unit(const Poly& a) { return a.degree() == 0; }
    static Poly quo(const Poly& a, const Poly& b) { return a / b; }
    static Poly rem(const Poly& a, const Poly& b) { return a % b; }
    static Poly gcd(const Poly& a, const Poly& b) { return zariski::gcd(a, b); }
    static Poly unit(const Poly& a) {
        return a.is_zero() ? Poly::constant(a.modulus(), 1) : Poly::constant(a.modulus(), a.leading());
    }
    static long multiplicity(Poly a, const Poly& p) {
        long k = 0;
        for (;;) {
            Poly q, r;
            Poly::divmod(a, p, q, r);
            if (!r.is_zero()) return k;
            a = std::move(q);
            ++k;
        }
    }
    static std::vector<Poly> irreducible_factors(const Poly& a) {
        std::vector<Poly> out;
        for (auto& [q, e] : factor_poly(a)) out.push_back(q);
        return out;
    }
    static bool is_irreducible(const Poly& a) { return zariski::is_irreducible(a); }
    static bool is_normal(const Poly& a) { return a.is_monic(); }
    static std::string str(const Poly& a) { return a.str('x'); }
    static bool is_atomic(const Poly& a) {
        if (a.is_zero()) return true;
        int terms = 0;
        for (const auto& c : a.coeffs()) terms += c != 0;
        // A single monomial with a non-negative coefficient prints without +/-.
        return terms == 1 && (a.modulus() != 0 || a.leading() > 0);
    }
    static std::strong_ordering compare(const Poly& a, const Poly& b) { return a <=> b; }
};

} // namespace zariski
