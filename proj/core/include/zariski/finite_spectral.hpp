#pragma once

// Finite spectral spaces, modelled by their specialization order.
//
// A finite T0 space is the same thing as a finite poset: x <= y iff y lies in
// the closure of {x}. Every ultrafilter on a finite set is principal, so the
// constructible topology is discrete and the three closures reduce to
// up-sets, down-sets and the identity.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace zariski {

class FinitePoset {
public:
    /// Strict constructor: `leq` is an n x n matrix, row-major, and must
    /// already be reflexive, antisymmetric and transitive.
    FinitePoset(std::vector<std::string> elements, std::vector<std::vector<bool>> leq);

    /// Builds the reflexive-transitive closure of `pairs` and then checks
    /// antisymmetry. Pairs read (x, y) meaning x <= y.
    static FinitePoset from_pairs(std::vector<std::string> elements,
                                  const std::vector<std::pair<std::string, std::string>>& pairs);

    static FinitePoset antichain(std::vector<std::string> elements);

    std::size_t size() const noexcept { return elements_.size(); }
    const std::vector<std::string>& elements() const noexcept { return elements_; }
    const std::string& label(std::size_t i) const { return elements_.at(i); }

    bool leq(std::size_t x, std::size_t y) const { return leq_[x * size() + y] != 0; }

    /// Index of `label`; throws InvalidSubset when absent.
    std::size_t index_of(const std::string& label) const;

    friend bool operator==(const FinitePoset&, const FinitePoset&) = default;

private:
    FinitePoset() = default;
    void validate() const;

    std::vector<std::string> elements_;
    std::vector<char> leq_;
};

/// A subset of a poset's carrier, stored as sorted element indices.
class FinSubset {
public:
    FinSubset(std::size_t carrier_size, std::vector<std::size_t> members);

    static FinSubset from_labels(const FinitePoset& poset, const std::vector<std::string>& labels);
    static FinSubset empty(std::size_t carrier_size) { return {carrier_size, {}}; }
    static FinSubset full(std::size_t carrier_size);
    /// Subset whose members are the set bits of `mask`.
    static FinSubset from_mask(std::size_t carrier_size, std::uint64_t mask);

    std::size_t carrier_size() const noexcept { return carrier_size_; }
    const std::vector<std::size_t>& members() const noexcept { return members_; }
    bool contains(std::size_t x) const;
    bool is_subset_of(const FinSubset& other) const;
    std::size_t size() const noexcept { return members_.size(); }
    bool is_empty() const noexcept { return members_.empty(); }

    std::vector<std::string> labels(const FinitePoset& poset) const;

    friend bool operator==(const FinSubset&, const FinSubset&) = default;

private:
    std::size_t carrier_size_ = 0;
    std::vector<std::size_t> members_;
};

/// {x : y <= x for some y in Y}
FinSubset sp_closure(const FinitePoset& poset, const FinSubset& subset);
/// {x : x <= y for some y in Y}
FinSubset gen_closure(const FinitePoset& poset, const FinSubset& subset);

FinSubset cl_cons(const FinitePoset& poset, const FinSubset& subset);
FinSubset cl_zar(const FinitePoset& poset, const FinSubset& subset);
FinSubset cl_inv(const FinitePoset& poset, const FinSubset& subset);

/// The inverse topology of a finite spectral space has the opposite order.
FinitePoset dual(const FinitePoset& poset);

/// Limit point of the principal ultrafilter on Y centred at y.
std::size_t principal_limit(const FinitePoset& poset, const FinSubset& subset, std::size_t center);

struct FiniteRingSpec {
    std::uint64_t modulus = 0;
    std::vector<std::uint64_t> primes; // ascending

    friend bool operator==(const FiniteRingSpec&, const FiniteRingSpec&) = default;
};

/// Spec(Z/nZ): the antichain on the prime divisors of n, labelled by decimal.
std::pair<FiniteRingSpec, FinitePoset> spec_zn(std::int64_t n);

/// Evaluates P = {a in Z/n : V(a) ∩ Y belongs to the principal ultrafilter at
/// `center`} by brute force over the residues and returns the prime q with
/// P = (q). Throws PreconditionError for an invalid center or subset.
std::uint64_t ultrafilter_prime(const FiniteRingSpec& ring, std::span<const std::uint64_t> subset,
                                std::uint64_t center);

} // namespace zariski
