#pragma once

// Seeded random generators for the verification suites.

#include <cstdint>
#include <random>
#include <vector>

#include "zariski/finite_spectral.hpp"
#include "zariski/polyt.hpp"
#include "zariski/semistar.hpp"

namespace zariski {

inline constexpr std::uint64_t kDefaultSeed = 20240917;

using Rng = std::mt19937_64;

/// A random poset on n elements labelled "0".."n-1": a random DAG on a
/// shuffled order, transitively closed.
FinitePoset random_poset(Rng& rng, std::size_t n, double edge_probability = 0.35);

struct SampleShape {
    long height = 1000;  // |numerator|, denominator bound for rational constants
    int x_degree = 2;    // degree bound in x for elements of k(x)
    int t_degree = 4;    // degree bound in T
    unsigned place_bound = 0; // 0 picks a per-base default
};

template <class D>
class Sampler {
public:
    Sampler(BasePair<D> base, std::uint64_t seed, SampleShape shape = {});

    const BasePair<D>& base() const noexcept { return base_; }
    Rng& rng() noexcept { return rng_; }
    const SampleShape& shape() const noexcept { return shape_; }

    /// Small places (primes <= 113, or low-degree irreducibles, plus inf).
    const std::vector<Place<D>>& place_pool() const noexcept { return pool_; }
    Place<D> place();
    /// Up to `max_count` distinct places from the pool.
    std::vector<Place<D>> places(std::size_t max_count);
    SpacePoint<D> point();

    long integer(long lo, long hi);
    bool coin(double p = 0.5);

    /// A nonzero element of A.
    Fraction<D> base_element();
    /// A nonzero element of K.
    Fraction<D> element();
    /// A nonzero element of K whose support meets the place pool.
    Fraction<D> pool_element();

    ZarSubset<D> finite_subset();
    ZarSubset<D> cofinite_subset();
    ZarSubset<D> subset();
    ZarSubset<D> nonempty_subset();

    /// Nonzero polynomial in T with coefficients in K (or in A).
    PolyT<D> polyt(int max_degree);
    PolyT<D> base_polyt(int max_degree);
    RatFunT<D> ratfun(int max_degree);

    /// 1 to 3 nonzero generators drawn from pool elements.
    FracIdeal<D> ideal();

private:
    Fraction<D> constant(long height);
    D base_ring_element(long height);

    BasePair<D> base_;
    SampleShape shape_;
    Rng rng_;
    std::vector<Place<D>> pool_;
};

extern template class Sampler<Integer>;
extern template class Sampler<Poly>;

} // namespace zariski
