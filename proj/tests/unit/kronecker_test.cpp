#include <gtest/gtest.h>

#include <random>

#include "helpers.hpp"
#include "zariski/kronecker.hpp"
#include "zariski/sampling.hpp"

using namespace zt;

namespace {

using ZS = ZarSubset<Integer>;

RatFunT<Integer> rf(std::string_view s) { return parse_ratfun(qz(), s); }
PolyT<Integer> pt(std::string_view s) { return parse_polyt(qz(), s); }

std::vector<long long> random_coeffs(std::mt19937_64& rng) {
    std::uniform_int_distribution<long long> dist(-60, 60);
    std::vector<long long> c(1 + rng() % 4);
    for (auto& x : c) x = dist(rng);
    if (c.back() == 0) c.back() = 1;
    return c;
}

PolyT<Integer> to_polyt(const std::vector<long long>& c) {
    std::vector<Fraction<Integer>> out;
    for (auto x : c) out.emplace_back(Integer(std::to_string(x)));
    return PolyT<Integer>(out, out.back());
}

long min_val(const std::vector<long long>& c, long long p) {
    long best = 1000;
    for (auto x : c)
        if (x != 0) best = std::min(best, int_val(x, p));
    return best;
}

} // namespace

TEST(TrivialExtension, Examples) {
    const auto p2 = pl(qz(), "p:2");
    EXPECT_TRUE(in_trivial_extension(p2, rf("T")));
    EXPECT_TRUE(in_trivial_extension(p2, rf("1/T")));
    EXPECT_TRUE(in_trivial_extension(p2, rf("(2+T)/(1+2*T)")));
    EXPECT_FALSE(in_trivial_extension(p2, rf("1/2")));
    EXPECT_TRUE(in_trivial_extension(p2, rf("0")));
    EXPECT_THROW(rf("1/(T-T)"), DomainError);
}

TEST(KrMember, Examples) {
    const KrSpec<Integer> all(qz(), ZS::all_places());
    EXPECT_TRUE(kr_member(all, rf("(2+T)/(1+2*T)")).member);
    const auto half = kr_member(all, rf("1/2"));
    EXPECT_FALSE(half.member);
    EXPECT_EQ(half.witness, "p:2");
    EXPECT_TRUE(kr_member(KrSpec<Integer>(qz(), primes({"p:3"})), rf("1/2")).member);
    EXPECT_TRUE(kr_member(all, rf("0")).member);
    EXPECT_THROW(KrSpec<Integer>(qz(), ZS::empty()), DomainError);
}

TEST(KrMember, MatchesCoefficientValuationOracle) {
    std::mt19937_64 rng(31);
    const KrSpec<Integer> all(qz(), ZS::all_places());
    const KrSpec<Integer> some(qz(), all_but({"p:2", "p:7"}));
    int members = 0;
    for (int i = 0; i < 1500; ++i) {
        const auto a = random_coeffs(rng), b = random_coeffs(rng);
        const RatFunT<Integer> h(to_polyt(a), to_polyt(b));
        bool in_all = true, in_some = true;
        for (long long p = 2; p <= 60; ++p) {
            if (!int_is_prime(p)) continue;
            const bool ok = min_val(a, p) >= min_val(b, p);
            in_all = in_all && ok;
            if (p != 2 && p != 7) in_some = in_some && ok;
        }
        ASSERT_EQ(kr_member(all, h).member, in_all) << h.str();
        ASSERT_EQ(kr_member(some, h).member, in_some) << h.str();
        members += in_all;
    }
    EXPECT_GT(members, 100);
    EXPECT_LT(members, 1400);
}

TEST(KrMember, PolynomialBase) {
    const auto base = fpx(3);
    const KrSpec<Poly> all(base, ZarSubset<Poly>::all_places());
    EXPECT_TRUE(kr_member(all, parse_ratfun(base, "(x*T + 1)/(T + x)")).member);
    const auto a = kr_member(all, parse_ratfun(base, "T/(x^2+1)"));
    EXPECT_FALSE(a.member);
    EXPECT_EQ(a.witness, pl(base, "irr:x^2+1").str());
}

TEST(FunctionRingAxioms, Examples) {
    const KrSpec<Integer> all(qz(), ZS::all_places());
    EXPECT_TRUE(kr_member(all, rf("2/(2+T)")).member);
    EXPECT_TRUE(kfr_axiom_check(all, {pt("2+T"), pt("1")}).passed());
    EXPECT_EQ(kfr_axiom_check(all, {pt("2+T"), pt("1")}).checked, 4u);
    EXPECT_TRUE(content_formula_check(all, pt("5")).passed());
    EXPECT_THROW(content_formula_check(all, pt("0")), DomainError);
}

TEST(FunctionRingAxioms, RandomSamples) {
    for (auto base : {BasePair<Poly>::fp_functions(2), BasePair<Poly>::fp_functions_over_fp(2)}) {
        Sampler<Poly> s(base, kDefaultSeed);
        for (int i = 0; i < 20; ++i) {
            const KrSpec<Poly> spec(base, s.nonempty_subset());
            std::vector<PolyT<Poly>> fs;
            for (int j = 0; j < 5; ++j) fs.push_back(s.polyt(4));
            const auto r = kfr_axiom_check(spec, fs);
            ASSERT_TRUE(r.passed()) << (r.failures.empty() ? "" : r.failures.front());
            for (const auto& f : fs) ASSERT_TRUE(content_formula_check(spec, f).passed());
        }
    }
}

TEST(PhiPullback, Examples) {
    const auto c = phi_pullback(rf("3/5"));
    ASSERT_EQ(c.size(), 1u);
    EXPECT_EQ(c[0], (std::vector<Fraction<Integer>>{el(qz(), "3/5"), el(qz(), "1")}));
    const auto t = phi_pullback(rf("T"));
    ASSERT_EQ(t.size(), 1u);
    EXPECT_EQ(t[0], std::vector<Fraction<Integer>>{el(qz(), "1")});
    EXPECT_EQ(b_F(qz(), t[0]), ZS::whole());
    EXPECT_THROW(phi_pullback(rf("0")), DomainError);
}

TEST(PhiPullback, UnionMatchesTrivialExtension) {
    for (auto base : {BasePair<Poly>::fp_functions(3), BasePair<Poly>::fp_functions_over_fp(2)}) {
        Sampler<Poly> s(base, kDefaultSeed + 1);
        for (int i = 0; i < 150; ++i) {
            const auto h = s.ratfun(3);
            const auto family = phi_pullback(h);
            for (const auto& p : s.place_pool())
                ASSERT_EQ(pullback_contains(family, p), in_trivial_extension(p, h)) << h.str() << " at " << p.str();
        }
    }
}

TEST(KrStar, Examples) {
    EXPECT_TRUE(kr_star_member(qz(), ZS::all_places(), pt("2+4*T"), pt("2")));
    EXPECT_TRUE(kr_star_member(qz(), primes({"p:3"}), pt("3+T"), pt("3+T")));
    EXPECT_FALSE(kr_star_member(qz(), ZS::all_places(), pt("2"), pt("4+8*T")));
    EXPECT_THROW(kr_star_member(qz(), ZS::all_places(), pt("1/2"), pt("1")), DomainError);
    EXPECT_EQ(content(qz(), pt("6+4*T")).exponents().size(), 1u);
}

TEST(KrStar, AgreesWithMembership) {
    Sampler<Integer> s(qz(), kDefaultSeed + 2);
    for (int i = 0; i < 500; ++i) {
        const auto y = s.nonempty_subset();
        const auto h = s.ratfun(3);
        ASSERT_EQ(kr_star_member(qz(), y, h), kr_member(KrSpec<Integer>(qz(), y), h).member)
            << h.str() << " over " << y.str();
    }
}
