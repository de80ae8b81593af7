#include "zariski/sampling.hpp"

#include <algorithm>
#include <numeric>

namespace zariski {

FinitePoset random_poset(Rng& rng, std::size_t n, double edge_probability) {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    std::bernoulli_distribution edge(edge_probability);
    std::vector<std::pair<std::string, std::string>> pairs;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (edge(rng)) pairs.emplace_back(labels[order[i]], labels[order[j]]);
    return FinitePoset::from_pairs(std::move(labels), pairs);
}

namespace {

template <class D>
unsigned default_place_bound(const BasePair<D>& base) {
    switch (base.kind()) {
    case BaseKind::QZ: return 113;
    case BaseKind::QxQx: return 2;
    default: return base.characteristic() <= 3 ? 3 : 2;
    }
}

} // namespace

template <class D>
Sampler<D>::Sampler(BasePair<D> base, std::uint64_t seed, SampleShape shape)
    : base_(base), shape_(shape), rng_(seed) {
    const unsigned bound = shape_.place_bound ? shape_.place_bound : default_place_bound(base_);
    pool_ = enumerate_places(base_, bound);
}

template <class D>
long Sampler<D>::integer(long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng_);
}

template <class D>
bool Sampler<D>::coin(double p) {
    return std::bernoulli_distribution(p)(rng_);
}

template <class D>
Place<D> Sampler<D>::place() {
    return pool_[static_cast<std::size_t>(integer(0, static_cast<long>(pool_.size()) - 1))];
}

template <class D>
std::vector<Place<D>> Sampler<D>::places(std::size_t max_count) {
    const auto count = static_cast<std::size_t>(integer(0, static_cast<long>(std::min(max_count, pool_.size()))));
    std::vector<Place<D>> out;
    std::sample(pool_.begin(), pool_.end(), std::back_inserter(out), count, rng_);
    return out;
}

template <class D>
SpacePoint<D> Sampler<D>::point() {
    return coin(0.15) ? SpacePoint<D>::generic() : SpacePoint<D>::at(place());
}

template <class D>
D Sampler<D>::base_ring_element(long height) {
    if constexpr (std::is_same_v<D, Integer>) {
        long n = 0;
        while (n == 0) n = integer(-height, height);
        return Integer(n);
    } else {
        const std::uint64_t p = base_.characteristic();
        const long h = p ? static_cast<long>(p) - 1 : std::min(height, 9L);
        for (;;) {
            std::vector<Rational> coeffs;
            const int degree = static_cast<int>(integer(0, shape_.x_degree));
            for (int i = 0; i <= degree; ++i) coeffs.emplace_back(p ? integer(0, h) : integer(-h, h));
            Poly f(p, std::move(coeffs));
            if (!f.is_zero()) return f;
        }
    }
}

template <class D>
Fraction<D> Sampler<D>::constant(long height) {
    long a = 0;
    while (a == 0) a = integer(-height, height);
    return base_.from_rational(Rational(a, integer(1, height)));
}

template <class D>
Fraction<D> Sampler<D>::base_element() {
    if (base_.kind() == BaseKind::FpxFp) {
        return base_.from_int(integer(1, static_cast<long>(base_.characteristic()) - 1));
    }
    return Fraction<D>(base_ring_element(shape_.height));
}

template <class D>
Fraction<D> Sampler<D>::element() {
    if constexpr (std::is_same_v<D, Integer>) {
        return constant(shape_.height);
    } else {
        return Fraction<D>(base_ring_element(shape_.height), base_ring_element(shape_.height));
    }
}

template <class D>
Fraction<D> Sampler<D>::pool_element() {
    Fraction<D> x = std::is_same_v<D, Integer> ? base_.from_int(coin() ? 1 : -1) : base_element();
    const auto count = integer(1, 3);
    for (long i = 0; i < count; ++i) x *= base_.uniformizer(place()).pow(integer(-2, 2));
    return x;
}

template <class D>
ZarSubset<D> Sampler<D>::finite_subset() {
    return ZarSubset<D>::finite(places(4), coin());
}

template <class D>
ZarSubset<D> Sampler<D>::cofinite_subset() {
    return ZarSubset<D>::cofinite(places(3), coin());
}

template <class D>
ZarSubset<D> Sampler<D>::subset() {
    return coin() ? finite_subset() : cofinite_subset();
}

template <class D>
ZarSubset<D> Sampler<D>::nonempty_subset() {
    for (;;) {
        auto y = subset();
        if (!y.is_empty()) return y;
    }
}

template <class D>
PolyT<D> Sampler<D>::polyt(int max_degree) {
    const Fraction<D> zero = base_.from_int(0);
    const int degree = static_cast<int>(integer(0, max_degree));
    std::vector<Fraction<D>> coeffs;
    for (int i = 0; i <= degree; ++i) {
        if (i < degree && coin(0.2)) coeffs.push_back(zero);
        else coeffs.push_back(coin(0.5) ? element() : pool_element());
    }
    return PolyT<D>(std::move(coeffs), zero);
}

template <class D>
PolyT<D> Sampler<D>::base_polyt(int max_degree) {
    const Fraction<D> zero = base_.from_int(0);
    const int degree = static_cast<int>(integer(0, max_degree));
    std::vector<Fraction<D>> coeffs;
    for (int i = 0; i <= degree; ++i) {
        if (i < degree && coin(0.2)) coeffs.push_back(zero);
        else if (!std::is_same_v<D, Integer> || coin()) coeffs.push_back(base_element());
        else coeffs.push_back(Fraction<D>(pool_element().num()));
    }
    return PolyT<D>(std::move(coeffs), zero);
}

template <class D>
RatFunT<D> Sampler<D>::ratfun(int max_degree) {
    return RatFunT<D>(polyt(max_degree), polyt(max_degree));
}

template <class D>
FracIdeal<D> Sampler<D>::ideal() {
    std::vector<Fraction<D>> gens;
    const auto count = integer(1, 3);
    for (long i = 0; i < count; ++i) gens.push_back(coin(0.7) ? pool_element() : element());
    return FracIdeal<D>(base_, std::move(gens));
}

template class Sampler<Integer>;
template class Sampler<Poly>;

} // namespace zariski
