#include "zariski/factor.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <random>

#include "zariski/errors.hpp"

namespace zariski {

bool is_prime(const Integer& n) {
    if (n < 2) return false;
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

namespace {

Integer pollard_brent(const Integer& n) {
    if (mpz_even_p(n.get_mpz_t())) return 2;
    for (unsigned long c = 1;; ++c) {
        Integer y = 2, x, q = 1, g = 1, ys;
        const Integer cc(c);
        std::size_t r = 1;
        constexpr std::size_t m = 128;
        auto step = [&](const Integer& v) { return Integer((v * v + cc) % n); };
        do {
            x = y;
            for (std::size_t i = 0; i < r; ++i) y = step(y);
            std::size_t k = 0;
            while (k < r && g == 1) {
                ys = y;
                for (std::size_t i = 0; i < std::min(m, r - k); ++i) {
                    y = step(y);
                    Integer diff = abs(x - y);
                    q = (q * diff) % n;
                }
                g = gcd(q, n);
                k += m;
            }
            r *= 2;
        } while (g == 1);
        if (g == n) {
            do {
                ys = step(ys);
                g = gcd(Integer(abs(x - ys)), n);
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

void split_into(const Integer& n, std::map<Integer, unsigned>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        ++out[n];
        return;
    }
    Integer d = pollard_brent(n);
    split_into(d, out);
    split_into(Integer(n / d), out);
}

} // namespace

Factorization<Integer> factor_integer(const Integer& n) {
    if (n == 0) throw DomainError("cannot factor zero");
    Integer m = abs(n);
    std::map<Integer, unsigned> found;
    constexpr unsigned long kTrialBound = 10000;
    for (unsigned long d = 2; d <= kTrialBound; d += (d == 2 ? 1 : 2)) {
        if (Integer(d) * d > m) break;
        while (mpz_divisible_ui_p(m.get_mpz_t(), d)) {
            ++found[Integer(d)];
            m /= d;
        }
    }
    split_into(m, found);
    return {found.begin(), found.end()};
}

std::vector<Integer> divisors(const Integer& n) {
    std::vector<Integer> out{1};
    for (const auto& [p, e] : factor_integer(n)) {
        const std::size_t current = out.size();
        Integer pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < current; ++i) out.push_back(out[i] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// ---- F_p ----------------------------------------------------------------

Poly pth_root(const Poly& f) {
    const auto p = f.modulus();
    std::vector<Rational> out;
    for (std::size_t i = 0; i * p < f.coeffs().size(); ++i) out.push_back(f.coeff(i * p));
    return Poly(p, std::move(out));
}

void squarefree_fp(const Poly& f, unsigned multiplier, Factorization<Poly>& out) {
    Poly c = gcd(f, f.derivative());
    Poly w = f / c;
    unsigned i = 1;
    while (!w.is_one()) {
        Poly y = gcd(w, c);
        Poly fac = w / y;
        if (!fac.is_one()) out.emplace_back(fac.monic(), i * multiplier);
        w = std::move(y);
        c = c / w;
        ++i;
    }
    if (!c.is_one()) squarefree_fp(pth_root(c).monic(), multiplier * static_cast<unsigned>(f.modulus()), out);
}

std::vector<std::pair<Poly, int>> distinct_degree(Poly f) {
    std::vector<std::pair<Poly, int>> out;
    const Poly x = Poly::variable(f.modulus());
    const Integer p(static_cast<unsigned long>(f.modulus()));
    Poly h = x % f;
    for (int i = 1; f.degree() >= 2 * i; ++i) {
        h = powmod(h, p, f);
        Poly g = gcd(h - x, f);
        if (!g.is_one()) {
            out.emplace_back(g, i);
            f = f / g;
            h = h % f;
        }
    }
    if (f.degree() > 0) out.emplace_back(f.monic(), f.degree());
    return out;
}

void equal_degree(const Poly& g, int d, std::mt19937_64& rng, std::vector<Poly>& out) {
    if (g.degree() == d) {
        out.push_back(g.monic());
        return;
    }
    const auto p = g.modulus();
    std::uniform_int_distribution<std::uint64_t> coeff(0, p - 1);
    Integer exponent = 0;
    if (p != 2) {
        mpz_ui_pow_ui(exponent.get_mpz_t(), p, static_cast<unsigned long>(d));
        exponent = (exponent - 1) / 2;
    }
    for (;;) {
        std::vector<Rational> a(static_cast<std::size_t>(g.degree()));
        for (auto& c : a) c = Rational(static_cast<unsigned long>(coeff(rng)));
        Poly r(p, std::move(a));
        if (r.degree() < 1) continue;
        Poly b(p);
        if (p == 2) {
            Poly term = r;
            for (int j = 0; j < d; ++j) {
                b += term;
                term = (term * term) % g;
            }
        } else {
            b = powmod(r, exponent, g) - Poly::constant(p, 1);
        }
        Poly u = gcd(g, b);
        if (u.degree() > 0 && u.degree() < g.degree()) {
            equal_degree(u, d, rng, out);
            equal_degree(g / u, d, rng, out);
            return;
        }
    }
}

Factorization<Poly> factor_fp(const Poly& f) {
    Factorization<Poly> squarefree;
    squarefree_fp(f.monic(), 1, squarefree);
    std::mt19937_64 rng(0x5eed);
    Factorization<Poly> out;
    for (const auto& [s, mult] : squarefree)
        for (const auto& [g, d] : distinct_degree(s)) {
            std::vector<Poly> irreducibles;
            equal_degree(g, d, rng, irreducibles);
            for (auto& q : irreducibles) out.emplace_back(std::move(q), mult);
        }
    return out;
}

// ---- Q ------------------------------------------------------------------

/// Scales a rational polynomial to a primitive integer polynomial with
/// positive leading coefficient.
Poly primitive_part(const Poly& f) {
    Integer den_lcm = 1;
    for (const auto& c : f.coeffs()) den_lcm = lcm(den_lcm, c.get_den());
    Integer content = 0;
    for (const auto& c : f.coeffs()) content = gcd(content, Integer(c.get_num() * (den_lcm / c.get_den())));
    Rational scale(den_lcm, content);
    if (f.leading() < 0) scale = -scale;
    return f.scaled(scale);
}

std::vector<std::pair<Poly, unsigned>> squarefree_q(const Poly& f) {
    std::vector<std::pair<Poly, unsigned>> out;
    Poly fm = f.monic();
    Poly a0 = gcd(fm, fm.derivative());
    Poly b = fm / a0;
    Poly c = fm.derivative() / a0;
    Poly d = c - b.derivative();
    for (unsigned i = 1; !b.is_one(); ++i) {
        Poly a = gcd(b, d);
        if (!a.is_one()) out.emplace_back(a, i);
        b = b / a;
        c = d / a;
        d = c - b.derivative();
    }
    return out;
}

std::vector<Poly> lagrange_basis(const std::vector<Integer>& points) {
    std::vector<Poly> basis;
    for (std::size_t i = 0; i < points.size(); ++i) {
        Poly l = Poly::constant(0, 1);
        for (std::size_t j = 0; j < points.size(); ++j) {
            if (i == j) continue;
            Poly lin(0, {Rational(-points[j]), Rational(1)});
            l = l * lin.scaled(Rational(1) / Rational(points[i] - points[j]));
        }
        basis.push_back(std::move(l));
    }
    return basis;
}

/// Kronecker's method: a factor of degree `k` of the primitive integer
/// polynomial `f`, which is known to have no rational roots.
std::optional<Poly> kronecker_factor(const Poly& f, int k) {
    struct Sample {
        Integer point;
        std::vector<Integer> divs;
    };
    std::vector<Sample> samples;
    for (long a = 0; samples.size() < static_cast<std::size_t>(3 * k + 6); a = a > 0 ? -a : -a + 1) {
        Rational v = f.eval(Rational(a));
        samples.push_back({Integer(a), divisors(v.get_num())});
    }
    std::stable_sort(samples.begin(), samples.end(),
                     [](const Sample& x, const Sample& y) { return x.divs.size() < y.divs.size(); });
    samples.resize(static_cast<std::size_t>(k + 1));

    std::vector<Integer> points;
    for (const auto& s : samples) points.push_back(s.point);
    const auto basis = lagrange_basis(points);

    double combos = static_cast<double>(samples[0].divs.size());
    for (std::size_t i = 1; i < samples.size(); ++i) combos *= 2.0 * static_cast<double>(samples[i].divs.size());
    constexpr double kComboCap = 4e6;
    if (combos > kComboCap)
        throw DomainError("rational factorization search is too large for " + f.str());

    // Mixed-radix counter; slot 0 ranges over positive divisors only.
    std::vector<std::size_t> radix(samples.size());
    radix[0] = samples[0].divs.size();
    for (std::size_t i = 1; i < samples.size(); ++i) radix[i] = 2 * samples[i].divs.size();
    std::vector<std::size_t> idx(samples.size(), 0);
    for (;;) {
        Poly g(0);
        for (std::size_t i = 0; i < samples.size(); ++i) {
            const auto& divs = samples[i].divs;
            const std::size_t j = idx[i];
            Integer value = i == 0 ? divs[j] : (j % 2 == 0 ? divs[j / 2] : Integer(-divs[j / 2]));
            g += basis[i].scaled(Rational(value));
        }
        if (g.degree() == k &&
            std::all_of(g.coeffs().begin(), g.coeffs().end(), [](const Rational& c) { return c.get_den() == 1; }) &&
            (f % g).is_zero())
            return g.monic();
        std::size_t pos = 0;
        while (pos < idx.size() && ++idx[pos] == radix[pos]) idx[pos++] = 0;
        if (pos == idx.size()) return std::nullopt;
    }
}

void split_rootfree(const Poly& f, std::vector<Poly>& out) {
    if (f.degree() <= 3) {
        out.push_back(f.monic());
        return;
    }
    if (f.degree() > kMaxRationalSplitDegree)
        throw DomainError("factorization over Q is limited to root-free parts of degree <= " +
                          std::to_string(kMaxRationalSplitDegree) + ", got " + f.str());
    const Poly prim = primitive_part(f);
    for (int k = 2; 2 * k <= f.degree(); ++k) {
        if (auto g = kronecker_factor(prim, k)) {
            split_rootfree(*g, out);
            split_rootfree(f / *g, out);
            return;
        }
    }
    out.push_back(f.monic());
}

std::vector<Poly> factor_squarefree_q(const Poly& f) {
    std::vector<Poly> out;
    Poly rest = f.monic();
    Poly prim = primitive_part(rest);
    if (prim.coeff(0) == 0) {
        out.push_back(Poly::variable(0));
        rest = rest / Poly::variable(0);
        prim = primitive_part(rest);
    }
    if (rest.degree() >= 1) {
        const auto num_divs = divisors(prim.coeff(0).get_num());
        const auto den_divs = divisors(prim.leading().get_num());
        for (const auto& u : num_divs) {
            for (const auto& v : den_divs) {
                for (int sign : {1, -1}) {
                    if (rest.degree() < 1) break;
                    Rational r(Integer(sign * u), v);
                    r.canonicalize();
                    if (r.get_den() != v) continue; // visited in lowest terms
                    if (rest.eval(r) != 0) continue;
                    Poly lin(0, {Rational(-r), Rational(1)});
                    out.push_back(lin);
                    rest = rest / lin;
                }
            }
        }
    }
    if (rest.degree() >= 1) split_rootfree(rest, out);
    return out;
}

Factorization<Poly> factor_q(const Poly& f) {
    Factorization<Poly> out;
    for (const auto& [s, mult] : squarefree_q(f))
        for (auto& q : factor_squarefree_q(s)) out.emplace_back(std::move(q), mult);
    return out;
}

} // namespace

Factorization<Poly> factor_poly(const Poly& f) {
    if (f.is_zero()) throw DomainError("cannot factor the zero polynomial");
    if (f.degree() == 0) return {};
    auto out = f.over_rationals() ? factor_q(f) : factor_fp(f);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

bool is_irreducible(const Poly& f) {
    if (f.degree() < 1) return false;
    if (f.degree() == 1) return true;
    const auto fac = factor_poly(f);
    return fac.size() == 1 && fac[0].second == 1 && fac[0].first.degree() == f.degree();
}

} // namespace zariski
