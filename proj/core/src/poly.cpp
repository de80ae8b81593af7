#include "zariski/poly.hpp"

#include <algorithm>
#include <sstream>

#include "zariski/errors.hpp"

namespace zariski {

Poly::Poly(std::uint64_t modulus, std::vector<Rational> coeffs) : modulus_(modulus), coeffs_(std::move(coeffs)) {
    for (auto& c : coeffs_) c = reduce(c);
    trim();
}

Poly Poly::constant(std::uint64_t modulus, const Rational& c) { return Poly(modulus, {c}); }

Poly Poly::monomial(std::uint64_t modulus, const Rational& c, std::size_t degree) {
    std::vector<Rational> v(degree + 1, Rational(0));
    v[degree] = c;
    return Poly(modulus, std::move(v));
}

bool Poly::is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }

Rational Poly::reduce(const Rational& c) const {
    if (modulus_ == 0) {
        Rational r = c;
        r.canonicalize();
        return r;
    }
    const Integer p(static_cast<unsigned long>(modulus_));
    Integer num = c.get_num() % p;
    if (num < 0) num += p;
    Integer den = c.get_den() % p;
    if (den < 0) den += p;
    if (den == 0) throw DomainError("coefficient denominator vanishes modulo " + std::to_string(modulus_));
    if (den != 1) {
        Integer inv;
        mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
        num = (num * inv) % p;
    }
    return Rational(num);
}

Rational Poly::inverse(const Rational& c) const {
    if (c == 0) throw DomainError("inverse of zero coefficient");
    if (modulus_ == 0) return 1 / c;
    const Integer p(static_cast<unsigned long>(modulus_));
    Integer inv;
    Integer num = c.get_num();
    if (mpz_invert(inv.get_mpz_t(), num.get_mpz_t(), p.get_mpz_t()) == 0)
        throw DomainError("coefficient is not invertible modulo " + std::to_string(modulus_));
    return Rational(inv);
}

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

void Poly::check_compatible(const Poly& rhs) const {
    if (modulus_ != rhs.modulus_)
        throw DomainError("polynomials over different coefficient fields (" + std::to_string(modulus_) + " vs " +
                          std::to_string(rhs.modulus_) + ")");
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& c : r.coeffs_) c = reduce(-c);
    return r;
}

Poly& Poly::operator+=(const Poly& rhs) {
    check_compatible(rhs);
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] = reduce(coeffs_[i] + rhs.coeffs_[i]);
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
    check_compatible(rhs);
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] = reduce(coeffs_[i] - rhs.coeffs_[i]);
    trim();
    return *this;
}

Poly& Poly::operator*=(const Poly& rhs) {
    check_compatible(rhs);
    if (is_zero() || rhs.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Rational> out(coeffs_.size() + rhs.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
    for (auto& c : out) c = reduce(c);
    coeffs_ = std::move(out);
    trim();
    return *this;
}

Poly Poly::scaled(const Rational& c) const {
    Poly r = *this;
    for (auto& x : r.coeffs_) x = reduce(x * c);
    r.trim();
    return r;
}

void Poly::divmod(const Poly& a, const Poly& b, Poly& quotient, Poly& remainder) {
    a.check_compatible(b);
    if (b.is_zero()) throw DomainError("polynomial division by zero");
    Poly q(a.modulus_);
    Poly r = a;
    const Rational lead_inv = b.inverse(b.leading());
    if (r.degree() >= b.degree()) q.coeffs_.assign(static_cast<std::size_t>(r.degree() - b.degree() + 1), Rational(0));
    while (!r.is_zero() && r.degree() >= b.degree()) {
        const auto shift = static_cast<std::size_t>(r.degree() - b.degree());
        const Rational factor = r.reduce(r.leading() * lead_inv);
        q.coeffs_[shift] = factor;
        for (std::size_t i = 0; i < b.coeffs_.size(); ++i)
            r.coeffs_[i + shift] = r.reduce(r.coeffs_[i + shift] - factor * b.coeffs_[i]);
        r.trim();
    }
    q.trim();
    quotient = std::move(q);
    remainder = std::move(r);
}

Poly operator/(const Poly& a, const Poly& b) {
    Poly q, r;
    Poly::divmod(a, b, q, r);
    return q;
}

Poly operator%(const Poly& a, const Poly& b) {
    Poly q, r;
    Poly::divmod(a, b, q, r);
    return r;
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return scaled(inverse(leading()));
}

Poly Poly::derivative() const {
    Poly r(modulus_);
    if (coeffs_.size() <= 1) return r;
    std::vector<Rational> out(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * static_cast<long>(i);
    return Poly(modulus_, std::move(out));
}

Rational Poly::eval(const Rational& at) const {
    Rational acc(0);
    const Rational point = reduce(at);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = reduce(acc * point + *it);
    return acc;
}

Poly Poly::pow(unsigned e) const {
    Poly result = constant(modulus_, 1);
    Poly base = *this;
    while (e) {
        if (e & 1U) result *= base;
        e >>= 1U;
        if (e) base *= base;
    }
    return result;
}

namespace {

std::string coeff_str(const Rational& c) {
    std::ostringstream os;
    os << c;
    return os.str();
}

} // namespace

std::string Poly::str(char var) const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        const Rational& c = coeffs_[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        const bool negative = modulus_ == 0 && c < 0;
        const Rational mag = negative ? Rational(-c) : c;
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? "-" : "+";
        }
        if (i == 0) {
            out += coeff_str(mag);
            continue;
        }
        if (mag != 1) out += coeff_str(mag) + "*";
        out += var;
        if (i > 1) out += "^" + std::to_string(i);
    }
    return out;
}

std::strong_ordering operator<=>(const Poly& a, const Poly& b) {
    if (auto c = a.modulus_ <=> b.modulus_; c != 0) return c;
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    for (int i = a.degree(); i >= 0; --i) {
        const auto& x = a.coeffs_[static_cast<std::size_t>(i)];
        const auto& y = b.coeffs_[static_cast<std::size_t>(i)];
        if (x < y) return std::strong_ordering::less;
        if (y < x) return std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

Poly gcd(const Poly& a, const Poly& b) {
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = x % y;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

Poly powmod(const Poly& a, const Integer& e, const Poly& m) {
    Poly result = Poly::constant(m.modulus(), 1) % m;
    Poly base = a % m;
    const auto bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    if (e == 0) return result;
    for (std::size_t i = bits; i-- > 0;) {
        result = (result * result) % m;
        if (mpz_tstbit(e.get_mpz_t(), i)) result = (result * base) % m;
    }
    return result;
}

} // namespace zariski
