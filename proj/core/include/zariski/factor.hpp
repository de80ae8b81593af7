#pragma once

#include <utility>
#include <vector>

#include "zariski/poly.hpp"

namespace zariski {

template <class T>
using Factorization = std::vector<std::pair<T, unsigned>>;

/// Deterministic primality (BPSW, proven below 2^64).
bool is_prime(const Integer& n);

/// Prime factorization of |n| for n != 0, ascending. Trial division with a
/// Pollard-Brent fallback for large cofactors.
Factorization<Integer> factor_integer(const Integer& n);

/// Positive divisors of |n|, ascending.
std::vector<Integer> divisors(const Integer& n);

/// Largest polynomial degree (after removing linear factors) that the
/// rational factorizer will split.
inline constexpr int kMaxRationalSplitDegree = 7;

/// Monic irreducible factorization of a nonzero polynomial, canonical order.
///
/// Over F_p: square-free decomposition, distinct-degree factorization and
/// Cantor-Zassenhaus splitting. Over Q: Yun square-free decomposition,
/// rational roots, then Kronecker's method for quadratic and cubic factors;
/// throws DomainError when a root-free part exceeds kMaxRationalSplitDegree.
Factorization<Poly> factor_poly(const Poly& f);

bool is_irreducible(const Poly& f);

} // namespace zariski
