#include <gtest/gtest.h>

#include <random>
#include <set>

#include "helpers.hpp"
#include "zariski/polyt.hpp"

using namespace zt;

namespace {

std::vector<Poly> monic_polys(std::uint64_t p, int degree) {
    std::vector<Poly> out;
    std::uint64_t count = 1;
    for (int i = 0; i < degree; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
        std::vector<Rational> c(static_cast<std::size_t>(degree) + 1, 0);
        std::uint64_t rest = code;
        for (int i = 0; i < degree; ++i) {
            c[static_cast<std::size_t>(i)] = static_cast<unsigned long>(rest % p);
            rest /= p;
        }
        c.back() = 1;
        out.emplace_back(p, std::move(c));
    }
    return out;
}

// Reducible monic polynomials of degree <= max_degree, from products alone.
std::set<std::string> reducible_monics(std::uint64_t p, int max_degree) {
    std::set<std::string> out;
    for (int a = 1; 2 * a <= max_degree; ++a)
        for (int b = a; a + b <= max_degree; ++b)
            for (const auto& f : monic_polys(p, a))
                for (const auto& g : monic_polys(p, b)) out.insert((f * g).str());
    return out;
}

long mobius(long n) {
    long result = 1;
    for (long d = 2; d * d <= n; ++d) {
        if (n % d) continue;
        n /= d;
        if (n % d == 0) return 0;
        result = -result;
    }
    return n > 1 ? -result : result;
}

// Number of monic irreducibles of degree n over F_p.
long necklace(long p, long n) {
    long total = 0;
    for (long d = 1; d <= n; ++d) {
        if (n % d) continue;
        long power = 1;
        for (long i = 0; i < n / d; ++i) power *= p;
        total += mobius(d) * power;
    }
    return total / n;
}

} // namespace

TEST(Valuation, Examples) {
    EXPECT_EQ(val(pl(qz(), "p:2"), el(qz(), "3/2")), -1);
    EXPECT_EQ(val(pl(qz(), "p:5"), el(qz(), "7")), 0);
    EXPECT_EQ(val(pl(qx(), "irr:x^2+1"), el(qx(), "(x^2+1)^2/x")), 2);
    EXPECT_THROW(val(pl(qz(), "p:2"), el(qz(), "0")), DomainError);
}

TEST(Valuation, IntegerMatchesRepeatedDivision) {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long long> dist(1, 2'000'000);
    for (int i = 0; i < 2000; ++i) {
        const long long n = dist(rng), d = dist(rng);
        const auto x = Fraction<Integer>(Integer(std::to_string(n)), Integer(std::to_string(d)));
        for (long long p : {2, 3, 5, 7, 11, 13, 101}) {
            ASSERT_EQ(val(qz().place(Integer(std::to_string(p))), x), int_val(n, p) - int_val(d, p))
                << n << "/" << d << " at " << p;
        }
    }
}

TEST(Valuation, AtXCountsLowZeroCoefficients) {
    std::mt19937_64 rng(11);
    const auto base = fpx(3);
    const auto x = pl(base, "irr:x");
    for (int i = 0; i < 500; ++i) {
        std::vector<Rational> c(6);
        for (auto& v : c) v = static_cast<unsigned long>(rng() % 3);
        c.back() = 1;
        const Poly f(3, c);
        long zeros = 0;
        while (c[static_cast<std::size_t>(zeros)] == 0) ++zeros;
        ASSERT_EQ(val(x, Fraction<Poly>(f)), zeros) << f.str();
        ASSERT_EQ(val(x, Fraction<Poly>(f).inverse()), -zeros);
    }
}

TEST(Valuation, DegreePlaceIsMinusDegree) {
    const auto base = BasePair<Poly>::fp_functions_over_fp(5);
    const auto inf = base.infinity();
    EXPECT_EQ(val(inf, el(base, "x^3+x")), -3);
    EXPECT_EQ(val(inf, el(base, "(x+1)/x^4")), 3);
    EXPECT_EQ(val(inf, el(base, "2")), 0);
}

TEST(Support, Examples) {
    EXPECT_EQ(support(qz(), el(qz(), "3/2")), pls(qz(), {"p:2", "p:3"}));
    EXPECT_TRUE(support(qz(), el(qz(), "1")).empty());
    EXPECT_EQ(support(qx(), el(qx(), "x/(x^2+1)")), pls(qx(), {"irr:x", "irr:x^2+1"}));
    EXPECT_THROW(support(qz(), el(qz(), "0")), DomainError);
}

TEST(EnumeratePlaces, PrimesMatchTrialDivision) {
    std::vector<Place<Integer>> expected;
    for (long long n = 2; n <= 500; ++n)
        if (int_is_prime(n)) expected.push_back(qz().place(Integer(std::to_string(n))));
    EXPECT_EQ(enumerate_places(qz(), 500), expected);
    EXPECT_EQ(enumerate_places(qz(), 10), pls(qz(), {"p:2", "p:3", "p:5", "p:7"}));
}

TEST(EnumeratePlaces, SmallFiniteFields) {
    EXPECT_EQ(enumerate_places(fpx(2), 2), pls(fpx(2), {"irr:x", "irr:x+1", "irr:x^2+x+1"}));
    const auto fp = BasePair<Poly>::fp_functions_over_fp(2);
    EXPECT_EQ(enumerate_places(fp, 1), pls(fp, {"irr:x", "irr:x+1", "inf"}));
}

TEST(EnumeratePlaces, IrreducibleCountsMatchNecklaceFormula) {
    for (auto [p, max_degree] : {std::pair{2L, 8L}, std::pair{3L, 5L}, std::pair{5L, 3L}}) {
        const auto places = enumerate_places(fpx(static_cast<std::uint64_t>(p)), static_cast<unsigned>(max_degree));
        std::vector<long> by_degree(static_cast<std::size_t>(max_degree) + 1, 0);
        for (const auto& q : places) ++by_degree[static_cast<std::size_t>(q.generator().degree())];
        for (long n = 1; n <= max_degree; ++n)
            EXPECT_EQ(by_degree[static_cast<std::size_t>(n)], necklace(p, n)) << "p=" << p << " n=" << n;
    }
}

TEST(Factor, IrreducibilityMatchesProductSieve) {
    for (std::uint64_t p : {2, 3}) {
        const int max_degree = p == 2 ? 7 : 4;
        const auto reducible = reducible_monics(p, max_degree);
        for (int d = 1; d <= max_degree; ++d)
            for (const auto& f : monic_polys(p, d))
                ASSERT_EQ(is_irreducible(f), !reducible.count(f.str())) << f.str() << " over F_" << p;
    }
}

TEST(Factor, PolyFactorizationReassembles) {
    std::mt19937_64 rng(3);
    for (std::uint64_t p : {0, 2, 3, 7}) {
        for (int i = 0; i < 200; ++i) {
            std::vector<Rational> c(static_cast<std::size_t>(rng() % 7) + 2);
            for (auto& v : c) v = p ? Rational(static_cast<unsigned long>(rng() % p)) : Rational(static_cast<long>(rng() % 7) - 3);
            c.back() = p ? Rational(1 + static_cast<unsigned long>(rng() % (p - 1))) : Rational(2);
            const Poly f(p, c);
            if (f.degree() < 1) continue;
            Poly rebuilt = Poly::constant(p, f.leading());
            for (const auto& [q, e] : factor_poly(f)) {
                ASSERT_TRUE(q.is_monic());
                ASSERT_GE(q.degree(), 1);
                rebuilt *= q.pow(e);
            }
            ASSERT_EQ(rebuilt, f) << f.str();
        }
    }
}

TEST(Factor, RationalKnownFactors) {
    const auto f = el(qx(), "(x^2+1)^2*(x^3-2)*(2*x-1)").num();
    const auto factors = factor_poly(f);
    ASSERT_EQ(factors.size(), 3u);
    std::set<std::string> got;
    for (const auto& [q, e] : factors) got.insert(q.str() + "^" + std::to_string(e));
    std::set<std::string> want = {el(qx(), "x^2+1").num().str() + "^2", el(qx(), "x^3-2").num().str() + "^1",
                                  el(qx(), "x-1/2").num().str() + "^1"};
    EXPECT_EQ(got, want);
    EXPECT_FALSE(is_irreducible(el(qx(), "x^4+4").num())); // (x^2+2x+2)(x^2-2x+2)
    EXPECT_TRUE(is_irreducible(el(qx(), "x^4+1").num()));
}

TEST(Factor, RationalDegreeCap) {
    EXPECT_THROW(factor_poly(el(qx(), "x^8+3").num()), DomainError);
}

TEST(Factor, IntegersMatchTrialDivision) {
    for (long long n = 2; n <= 5000; ++n) {
        ASSERT_EQ(is_prime(Integer(std::to_string(n))), int_is_prime(n)) << n;
        Integer rebuilt = 1;
        for (const auto& [q, e] : factor_integer(Integer(std::to_string(n)))) {
            ASSERT_TRUE(int_is_prime(q.get_si()));
            for (unsigned i = 0; i < e; ++i) rebuilt *= q;
        }
        ASSERT_EQ(rebuilt, Integer(std::to_string(n)));
    }
    const Integer big = Integer("1000003") * Integer("1000033") * Integer("999983");
    const auto f = factor_integer(big);
    ASSERT_EQ(f.size(), 3u);
    EXPECT_EQ(f[0].first, Integer("999983"));
    EXPECT_EQ(f[2].first, Integer("1000033"));
}

TEST(Fraction, AgreesWithMpq) {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long> dist(-500, 500);
    for (int i = 0; i < 2000; ++i) {
        long a = dist(rng), b = dist(rng), c = dist(rng), d = dist(rng);
        if (b == 0 || d == 0 || c == 0) continue;
        const Fraction<Integer> x{Integer(a), Integer(b)}, y{Integer(c), Integer(d)};
        const Rational qx = Rational(a) / Rational(b), qy = Rational(c) / Rational(d);
        auto same = [](const Fraction<Integer>& f, Rational q) {
            q.canonicalize();
            return f.num() == q.get_num() && f.den() == q.get_den();
        };
        ASSERT_TRUE(same(x + y, Rational(qx + qy)));
        ASSERT_TRUE(same(x - y, Rational(qx - qy)));
        ASSERT_TRUE(same(x * y, Rational(qx * qy)));
        ASSERT_TRUE(same(x / y, Rational(qx / qy)));
    }
}

TEST(GaussValuation, Examples) {
    EXPECT_EQ(gauss_val(pl(qz(), "p:2"), parse_polyt(qz(), "4 + 2*T + T^2")), 0);
    EXPECT_EQ(gauss_val(pl(qz(), "p:3"), parse_polyt(qz(), "3 + 9*T")), 1);
    EXPECT_EQ(gauss_val(pl(qz(), "p:2"), parse_ratfun(qz(), "(2+T)/(1+2*T)")), 0);
    EXPECT_THROW(gauss_val(pl(qz(), "p:2"), parse_polyt(qz(), "0")), DomainError);
}

TEST(GaussValuation, Multiplicative) {
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<long> dist(-40, 40);
    auto random_poly = [&] {
        std::vector<Fraction<Integer>> c;
        for (int i = 0; i < 4; ++i) {
            long n = dist(rng), d = dist(rng);
            c.emplace_back(Integer(n), Integer(d == 0 ? 1 : d));
        }
        if (c.back().is_zero()) c.back() = Fraction<Integer>(Integer(1));
        return PolyT<Integer>(c, c.back());
    };
    for (int i = 0; i < 300; ++i) {
        const auto f = random_poly(), g = random_poly();
        for (const char* p : {"p:2", "p:3", "p:5"}) {
            const auto place = pl(qz(), p);
            ASSERT_EQ(gauss_val(place, f * g), gauss_val(place, f) + gauss_val(place, g)) << f.str() << " * " << g.str();
        }
    }
}

TEST(Parse, Errors) {
    EXPECT_THROW(parse_element(qz(), "1/"), ParseError);
    EXPECT_THROW(parse_element(qz(), "x"), ParseError);
    EXPECT_THROW(parse_element(qz(), "1/0"), DomainError);
    EXPECT_THROW(parse_place(qz(), "p:4"), DomainError);
    EXPECT_THROW(parse_place(qz(), "inf"), DomainError);
    EXPECT_THROW(parse_place(qx(), "irr:x^2-1"), DomainError);
    EXPECT_THROW(BasePair<Poly>::fp_functions(6), DomainError);
    EXPECT_EQ(parse_generators(qz(), "ideal:[2/3, 4]").size(), 2u);
}
