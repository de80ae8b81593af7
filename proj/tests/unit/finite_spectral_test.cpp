#include <gtest/gtest.h>

#include <numeric>

#include "zariski/finite_spectral.hpp"
#include "zariski/sampling.hpp"

using namespace zariski;

namespace {

FinitePoset chain2() { return FinitePoset::from_pairs({"a", "b"}, {{"a", "b"}}); }
FinitePoset vee() { return FinitePoset::from_pairs({"a", "b", "c"}, {{"a", "b"}, {"a", "c"}}); }

FinSubset S(const FinitePoset& p, std::vector<std::string> labels) { return FinSubset::from_labels(p, labels); }

// Closure by scanning every relation: y joins when some x in Y has x <= y (up)
// or y <= x (down).
FinSubset scan(const FinitePoset& p, const FinSubset& y, bool up) {
    std::vector<std::size_t> out;
    for (std::size_t t = 0; t < p.size(); ++t)
        for (std::size_t x : y.members())
            if (up ? p.leq(x, t) : p.leq(t, x)) {
                out.push_back(t);
                break;
            }
    return {p.size(), out};
}

} // namespace

TEST(FinitePoset, RejectsNonOrders) {
    EXPECT_THROW(FinitePoset::from_pairs({"a", "b"}, {{"a", "b"}, {"b", "a"}}), DomainError);
    EXPECT_THROW(FinitePoset({"a", "b"}, {{true, false}, {false, false}}), DomainError);
    EXPECT_THROW(FinitePoset({"a", "b", "c"}, {{true, true, false}, {false, true, true}, {false, false, true}}),
                 DomainError);
    EXPECT_THROW(S(chain2(), {"z"}), InvalidSubset);
}

TEST(FinitePoset, SpecializationClosureExamples) {
    EXPECT_EQ(sp_closure(chain2(), S(chain2(), {"a"})), S(chain2(), {"a", "b"}));
    EXPECT_EQ(sp_closure(vee(), FinSubset::empty(3)), FinSubset::empty(3));
    EXPECT_EQ(sp_closure(vee(), S(vee(), {"b"})), S(vee(), {"b"}));
}

TEST(FinitePoset, GenerizationClosureExamples) {
    EXPECT_EQ(gen_closure(chain2(), S(chain2(), {"b"})), S(chain2(), {"a", "b"}));
    EXPECT_EQ(gen_closure(chain2(), FinSubset::empty(2)), FinSubset::empty(2));
    EXPECT_EQ(gen_closure(vee(), S(vee(), {"b", "c"})), S(vee(), {"a", "b", "c"}));
}

TEST(FinitePoset, DualExamples) {
    EXPECT_EQ(dual(chain2()), FinitePoset::from_pairs({"a", "b"}, {{"b", "a"}}));
    const auto anti = FinitePoset::antichain({"x", "y", "z"});
    EXPECT_EQ(dual(anti), anti);
}

TEST(FinitePoset, ClosuresAgreeWithRelationScan) {
    Rng rng(kDefaultSeed);
    for (int trial = 0; trial < 300; ++trial) {
        const auto p = random_poset(rng, 1 + trial % 7);
        const auto d = dual(p);
        for (std::uint64_t mask = 0; mask < (1ULL << p.size()); ++mask) {
            const auto y = FinSubset::from_mask(p.size(), mask);
            const auto up = scan(p, y, true), down = scan(p, y, false);
            ASSERT_EQ(sp_closure(p, y), up);
            ASSERT_EQ(gen_closure(p, y), down);
            ASSERT_EQ(cl_cons(p, y), y);
            ASSERT_EQ(cl_zar(p, y), up);
            ASSERT_EQ(cl_inv(p, y), down);
            ASSERT_EQ(cl_inv(p, y), cl_zar(d, y));
            ASSERT_EQ(dual(d), p);
        }
    }
}

TEST(FinitePoset, PrincipalLimitIsCenter) {
    const auto p = vee();
    for (std::uint64_t mask = 1; mask < 8; ++mask) {
        const auto y = FinSubset::from_mask(3, mask);
        for (std::size_t c = 0; c < 3; ++c) {
            if (y.contains(c)) EXPECT_EQ(principal_limit(p, y, c), c);
            else EXPECT_THROW(principal_limit(p, y, c), InvalidSubset);
        }
    }
    EXPECT_EQ(principal_limit(chain2(), S(chain2(), {"a"}), 0), 0u);
}

TEST(SpecZn, Examples) {
    auto [r12, p12] = spec_zn(12);
    EXPECT_EQ(r12.primes, (std::vector<std::uint64_t>{2, 3}));
    EXPECT_EQ(p12, FinitePoset::antichain({"2", "3"}));
    EXPECT_EQ(spec_zn(7).first.primes, (std::vector<std::uint64_t>{7}));
    EXPECT_EQ(spec_zn(30).second, FinitePoset::antichain({"2", "3", "5"}));
    EXPECT_THROW(spec_zn(1), DomainError);
    EXPECT_THROW(spec_zn(-4), DomainError);
}

TEST(SpecZn, UltrafilterPrime) {
    const auto r12 = spec_zn(12).first;
    const std::vector<std::uint64_t> y23 = {2, 3}, y2 = {2};
    EXPECT_EQ(ultrafilter_prime(r12, y23, 3), 3u);
    EXPECT_EQ(ultrafilter_prime(r12, y2, 2), 2u);
    const std::vector<std::uint64_t> y7 = {7};
    EXPECT_EQ(ultrafilter_prime(spec_zn(7).first, y7, 7), 7u);
    EXPECT_THROW(ultrafilter_prime(r12, y2, 3), PreconditionError);
    const std::vector<std::uint64_t> bad = {5};
    EXPECT_THROW(ultrafilter_prime(r12, bad, 5), PreconditionError);
}

TEST(SpecZn, UltrafilterPrimeIsCenterForAllModuli) {
    for (std::int64_t n = 2; n <= 210; ++n) {
        const auto ring = spec_zn(n).first;
        const auto& ps = ring.primes;
        for (std::uint64_t mask = 1; mask < (1ULL << ps.size()); ++mask) {
            std::vector<std::uint64_t> y;
            for (std::size_t i = 0; i < ps.size(); ++i)
                if (mask >> i & 1) y.push_back(ps[i]);
            for (auto c : y) ASSERT_EQ(ultrafilter_prime(ring, y, c), c) << n;
        }
    }
}
