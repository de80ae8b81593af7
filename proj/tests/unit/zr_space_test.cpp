#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "helpers.hpp"
#include "zariski/sampling.hpp"

using namespace zt;

namespace {

using ZS = ZarSubset<Integer>;
using UC = UltrafilterClass<Integer>;
using Pt = SpacePoint<Integer>;

Pt at(std::string_view p) { return Pt::at(pl(qz(), p)); }

// For a/b in lowest terms: the ring of finitely many places S contains a/b iff no
// prime of S divides b.
bool in_localization(long long b, const std::vector<long long>& ps) {
    for (auto p : ps)
        if (b % p == 0) return false;
    return true;
}

} // namespace

TEST(ZarSubset, SetAlgebra) {
    const auto a = primes({"p:2", "p:3"});
    const auto b = all_but({"p:3", "p:5"}, true);
    EXPECT_EQ(a.unite(b), all_but({"p:5"}, true));
    EXPECT_EQ(a.intersect(b), primes({"p:2"}));
    EXPECT_EQ(b.complement(), primes({"p:3", "p:5"}));
    EXPECT_TRUE(primes({"p:2"}).is_subset_of(b));
    EXPECT_TRUE(ZS::empty().is_subset_of(ZS::empty()));
    EXPECT_EQ(ZS::whole().complement(), ZS::empty());
}

TEST(BasicOpen, Examples) {
    EXPECT_EQ(b_x(qz(), el(qz(), "3/2")), all_but({"p:2"}, true));
    EXPECT_EQ(b_x(qz(), el(qz(), "1")), ZS::whole());
    EXPECT_EQ(b_x(qz(), el(qz(), "1/6")), all_but({"p:2", "p:3"}, true));
    EXPECT_THROW(b_x(qz(), el(qz(), "0")), DomainError);
    EXPECT_EQ(b_F(qz(), {el(qz(), "3/2"), el(qz(), "1/5")}), all_but({"p:2", "p:5"}, true));
    EXPECT_EQ(b_F<Integer>(qz(), {}), ZS::whole());
    EXPECT_EQ(b_F(qz(), {el(qz(), "2"), el(qz(), "3")}), ZS::whole());
}

TEST(BasicOpen, MembershipMatchesValuationOracle) {
    std::mt19937_64 rng(13);
    std::uniform_int_distribution<long long> dist(1, 5000);
    for (int i = 0; i < 300; ++i) {
        const long long a = dist(rng), b = dist(rng);
        const auto x = Fraction<Integer>(Integer(std::to_string(a)), Integer(std::to_string(b)));
        const auto open = b_x(qz(), x);
        for (long long p = 2; p <= 100; ++p) {
            if (!int_is_prime(p)) continue;
            const bool oracle = int_val(a, p) >= int_val(b, p);
            ASSERT_EQ(open.contains_place(qz().place(Integer(std::to_string(p)))), oracle) << a << "/" << b << " at " << p;
        }
        ASSERT_TRUE(open.contains_generic());
    }
}

TEST(BasicOpen, DegreePlaceOverFiniteField) {
    const auto base = BasePair<Poly>::fp_functions_over_fp(3);
    const auto open = b_x(base, el(base, "x^2/(x+1)"));
    EXPECT_FALSE(open.contains_place(base.infinity()));
    EXPECT_FALSE(open.contains_place(pl(base, "irr:x+1")));
    EXPECT_TRUE(open.contains_place(pl(base, "irr:x")));
    EXPECT_TRUE(b_x(base, el(base, "1/x")).contains_place(base.infinity()));
}

TEST(SpecializationOrder, Examples) {
    EXPECT_EQ(gen_closure(primes({"p:2"})), primes({"p:2"}, true));
    EXPECT_EQ(sp_closure(primes({"p:2"})), primes({"p:2"}));
    EXPECT_EQ(gen_closure(ZS::generic_only()), ZS::generic_only());
    EXPECT_EQ(sp_closure(ZS::generic_only()), ZS::whole());
    EXPECT_EQ(gen_closure(ZS::empty()), ZS::empty());
    EXPECT_EQ(sp_closure(ZS::empty()), ZS::empty());
}

TEST(Ultrafilters, Classes) {
    const auto fin = ultrafilter_classes(primes({"p:2", "p:3"}));
    EXPECT_FALSE(fin.has_free_class());
    EXPECT_EQ(fin.enumerate(), (std::vector<UC>{UC::principal(at("p:2")), UC::principal(at("p:3"))}));

    const auto all = ultrafilter_classes(ZS::all_places());
    EXPECT_TRUE(all.has_free_class());
    EXPECT_TRUE(all.contains(UC::free_class()));
    EXPECT_TRUE(all.contains(UC::principal(at("p:101"))));
    EXPECT_FALSE(all.contains(UC::principal(Pt::generic())));
    const auto listed = all.enumerate(pls(qz(), {"p:2", "p:3"}));
    ASSERT_FALSE(listed.empty());
    EXPECT_EQ(listed.back(), UC::free_class());

    EXPECT_EQ(ultrafilter_classes(ZS::generic_only()).enumerate(), std::vector<UC>{UC::principal(Pt::generic())});
    EXPECT_THROW(ultrafilter_classes(ZS::empty()), DomainError);
}

TEST(Ultrafilters, LimitPoints) {
    EXPECT_EQ(limit_point(primes({"p:5"}), UC::principal(at("p:5"))), at("p:5"));
    EXPECT_EQ(limit_point(ZS::all_places(), UC::free_class()), Pt::generic());
    EXPECT_EQ(limit_point(all_but({"p:2"}), UC::free_class()), Pt::generic());
    EXPECT_THROW(limit_point(primes({"p:5"}), UC::free_class()), InvalidSubset);
    EXPECT_THROW(limit_point(primes({"p:5"}), UC::principal(at("p:7"))), InvalidSubset);
}

TEST(Ultrafilters, FreeLimitIsGenericBecauseBasicOpensAreCofinite) {
    // Every B_x meets Y = all places except 2 in a cofinite set, so each B_x
    // lies in every free ultrafilter on Y and the limit ring is K.
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<long> dist(1, 100000);
    const auto y = all_but({"p:2"});
    for (int i = 0; i < 50; ++i) {
        const auto x = Fraction<Integer>(Integer(dist(rng)), Integer(dist(rng)));
        const auto meet = b_x(qz(), x).intersect(y);
        ASSERT_TRUE(meet.has_infinite_place_part()) << x.str();
    }
    EXPECT_EQ(limit_point(y, UC::free_class()), Pt::generic());
}

TEST(Closures, Examples) {
    EXPECT_EQ(cl_cons(ZS::all_places()), ZS::whole());
    EXPECT_EQ(cl_cons(primes({"p:2", "p:7"})), primes({"p:2", "p:7"}));
    EXPECT_EQ(cl_zar(ZS::generic_only()), ZS::whole());
    EXPECT_EQ(cl_inv(ZS::generic_only()), ZS::generic_only());
    EXPECT_EQ(cl_cons(ZS::generic_only()), ZS::generic_only());
    EXPECT_FALSE(is_proconstructible(ZS::all_places()));
    EXPECT_TRUE(is_proconstructible(ZS::whole()));
    EXPECT_TRUE(is_quasicompact_zar(ZS::whole()));
    EXPECT_TRUE(is_proconstructible(primes({"p:3"})));
    EXPECT_TRUE(is_quasicompact_zar(primes({"p:3"})));
}

TEST(Closures, IdentitiesOnSamples) {
    for (auto base : {BasePair<Poly>::fp_functions(2), BasePair<Poly>::fp_functions_over_fp(3)}) {
        Sampler<Poly> s(base, kDefaultSeed);
        for (int i = 0; i < 300; ++i) {
            const auto y = s.subset();
            const auto c = cl_cons(y);
            ASSERT_TRUE(y.is_subset_of(c));
            ASSERT_EQ(cl_cons(c), c);
            ASSERT_EQ(cl_zar(y), sp_closure(c));
            ASSERT_EQ(cl_inv(y), gen_closure(c));
            ASSERT_TRUE(is_proconstructible(c));
        }
    }
}

TEST(IntersectionRing, RepresentsIntegers) {
    const auto ring = intersection_ring(ZS::all_places());
    std::mt19937_64 rng(19);
    std::uniform_int_distribution<long> dist(-300, 300);
    for (int i = 0; i < 500; ++i) {
        long a = dist(rng), b = dist(rng);
        if (b == 0) continue;
        const Fraction<Integer> x{Integer(a), Integer(b)};
        ASSERT_EQ(ring_member(qz(), ring, x), x.den() == 1) << x.str();
    }
    EXPECT_TRUE(is_representation(ZS::all_places()));
    EXPECT_TRUE(is_representation(ZS::whole()));
    EXPECT_FALSE(is_representation(all_but({"p:2"})));
    EXPECT_THROW(intersection_ring(ZS::empty()), DomainError);
}

TEST(IntersectionRing, Localizations) {
    const auto k = intersection_ring(ZS::generic_only());
    const auto z2 = intersection_ring(primes({"p:2"}));
    EXPECT_TRUE(ring_member(qz(), k, el(qz(), "1/7")));
    EXPECT_FALSE(ring_member(qz(), intersection_ring(ZS::all_places()), el(qz(), "3/2")));
    EXPECT_FALSE(ring_member(qz(), z2, el(qz(), "3/2")));
    EXPECT_TRUE(ring_member(qz(), z2, el(qz(), "2/3")));
    EXPECT_TRUE(ring_member(qz(), z2, el(qz(), "0")));

    std::mt19937_64 rng(23);
    std::uniform_int_distribution<long long> dist(1, 1000);
    const auto ring = intersection_ring(primes({"p:3", "p:7"}));
    for (int i = 0; i < 300; ++i) {
        const long long a = dist(rng), b = dist(rng);
        const Fraction<Integer> x{Integer(std::to_string(a)), Integer(std::to_string(b))};
        const long long g = std::gcd(a, b);
        ASSERT_EQ(ring_member(qz(), ring, x), in_localization(b / g, {3, 7}));
    }
}

TEST(Centers, Examples) {
    EXPECT_EQ(qz().center(at("p:5")), "(5)");
    EXPECT_EQ(qz().center(Pt::generic()), "(0)");
    const auto c = qx().center(SpacePoint<Poly>::at(pl(qx(), "irr:x^2+1")));
    EXPECT_EQ(c, "(" + el(qx(), "x^2+1").str() + ")");
}

TEST(LocallyFinite, AlwaysWitnessed) {
    EXPECT_TRUE(is_locally_finite(ZS::all_places()).value);
    EXPECT_TRUE(is_locally_finite(primes({"p:2"})).value);
    EXPECT_TRUE(is_locally_finite(all_but({"p:2", "p:3"})).value);
    // Oracle: each nonzero x has finitely many negative places, all among the
    // primes dividing its denominator.
    std::mt19937_64 rng(29);
    std::uniform_int_distribution<long> dist(1, 10000);
    for (int i = 0; i < 100; ++i) {
        const Fraction<Integer> x{Integer(dist(rng)), Integer(dist(rng))};
        EXPECT_EQ(b_x(qz(), x).complement().exceptions().size(), support(qz(), Fraction<Integer>(x.den())).size());
    }
}

TEST(ClosureDeterminesRing, Examples) {
    EXPECT_TRUE(check_closure_determines_ring(ZS::all_places(), ZS::whole()).closures_equal);
    EXPECT_TRUE(check_closure_determines_ring(ZS::all_places(), ZS::whole()).rings_equal);
    const auto r = check_closure_determines_ring(primes({"p:2"}), primes({"p:3"}));
    EXPECT_FALSE(r.closures_equal);
    EXPECT_TRUE(r.holds);
}

TEST(MaximalCenters, Examples) {
    EXPECT_TRUE(check_maximal_centers(qz(), ZS::all_places()).value);
    EXPECT_TRUE(check_maximal_centers(qz(), ZS::whole()).value);
    EXPECT_THROW(check_maximal_centers(qz(), all_but({"p:2"})), PreconditionError);
    EXPECT_TRUE(ring_member(qz(), intersection_ring(all_but({"p:2"})), el(qz(), "1/2")));
}

TEST(SomePlace, FindsMembers) {
    EXPECT_EQ(some_place_in(qz(), primes({"p:3"})), pl(qz(), "p:3"));
    EXPECT_FALSE(some_place_in(qz(), ZS::generic_only()).has_value());
    const auto p = some_place_in(qz(), all_but({"p:2", "p:3", "p:5"}));
    ASSERT_TRUE(p.has_value());
    EXPECT_TRUE(all_but({"p:2", "p:3", "p:5"}).contains_place(*p));
}
