#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "zariski/parse.hpp"
#include "zariski/zr_space.hpp"

namespace zt {

using namespace zariski;

inline BasePair<Integer> qz() { return BasePair<Integer>::rationals(); }
inline BasePair<Poly> qx() { return BasePair<Poly>::rational_functions(); }
inline BasePair<Poly> fpx(std::uint64_t p) { return BasePair<Poly>::fp_functions(p); }

template <class D>
Fraction<D> el(const BasePair<D>& b, std::string_view s) {
    return parse_element(b, s);
}

template <class D>
Place<D> pl(const BasePair<D>& b, std::string_view s) {
    return parse_place(b, s);
}

template <class D>
std::vector<Place<D>> pls(const BasePair<D>& b, std::initializer_list<std::string_view> names) {
    std::vector<Place<D>> out;
    for (auto n : names) out.push_back(parse_place(b, n));
    return out;
}

inline ZarSubset<Integer> primes(std::initializer_list<std::string_view> names, bool generic = false) {
    return ZarSubset<Integer>::finite(pls(qz(), names), generic);
}

inline ZarSubset<Integer> all_but(std::initializer_list<std::string_view> names, bool generic = false) {
    return ZarSubset<Integer>::cofinite(pls(qz(), names), generic);
}

/// v_p(n) for n != 0 by repeated division.
inline long int_val(long long n, long long p) {
    long k = 0;
    while (n % p == 0) {
        n /= p;
        ++k;
    }
    return k;
}

inline bool int_is_prime(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

} // namespace zt
