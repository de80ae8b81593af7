#include "zariski/finite_spectral.hpp"

#include <algorithm>
#include <numeric>

#include "zariski/errors.hpp"

namespace zariski {

FinitePoset::FinitePoset(std::vector<std::string> elements, std::vector<std::vector<bool>> leq)
    : elements_(std::move(elements)) {
    const std::size_t n = elements_.size();
    if (leq.size() != n) throw DomainError("poset relation matrix has wrong number of rows");
    leq_.assign(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        if (leq[i].size() != n) throw DomainError("poset relation matrix has wrong number of columns");
        for (std::size_t j = 0; j < n; ++j) leq_[i * n + j] = leq[i][j] ? 1 : 0;
    }
    validate();
}

FinitePoset FinitePoset::from_pairs(std::vector<std::string> elements,
                                    const std::vector<std::pair<std::string, std::string>>& pairs) {
    FinitePoset p;
    p.elements_ = std::move(elements);
    const std::size_t n = p.size();
    p.leq_.assign(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) p.leq_[i * n + i] = 1;
    for (const auto& [a, b] : pairs) p.leq_[p.index_of(a) * n + p.index_of(b)] = 1;
    // Warshall
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            if (p.leq_[i * n + k])
                for (std::size_t j = 0; j < n; ++j)
                    if (p.leq_[k * n + j]) p.leq_[i * n + j] = 1;
    p.validate();
    return p;
}

FinitePoset FinitePoset::antichain(std::vector<std::string> elements) {
    return from_pairs(std::move(elements), {});
}

std::size_t FinitePoset::index_of(const std::string& label) const {
    auto it = std::find(elements_.begin(), elements_.end(), label);
    if (it == elements_.end()) throw InvalidSubset("element '" + label + "' is not in the poset");
    return static_cast<std::size_t>(it - elements_.begin());
}

void FinitePoset::validate() const {
    const std::size_t n = size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (elements_[i] == elements_[j]) throw DomainError("duplicate poset element '" + elements_[i] + "'");
    for (std::size_t i = 0; i < n; ++i) {
        if (!leq(i, i)) throw DomainError("relation is not reflexive at '" + elements_[i] + "'");
        for (std::size_t j = 0; j < n; ++j) {
            if (i != j && leq(i, j) && leq(j, i))
                throw DomainError("relation is not antisymmetric: '" + elements_[i] + "' and '" + elements_[j] + "'");
            if (!leq(i, j)) continue;
            for (std::size_t k = 0; k < n; ++k)
                if (leq(j, k) && !leq(i, k))
                    throw DomainError("relation is not transitive through '" + elements_[j] + "'");
        }
    }
}

FinSubset::FinSubset(std::size_t carrier_size, std::vector<std::size_t> members)
    : carrier_size_(carrier_size), members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    if (!members_.empty() && members_.back() >= carrier_size_)
        throw InvalidSubset("subset member index " + std::to_string(members_.back()) + " is outside the carrier");
}

FinSubset FinSubset::from_labels(const FinitePoset& poset, const std::vector<std::string>& labels) {
    std::vector<std::size_t> idx;
    idx.reserve(labels.size());
    for (const auto& l : labels) idx.push_back(poset.index_of(l));
    return {poset.size(), std::move(idx)};
}

FinSubset FinSubset::full(std::size_t carrier_size) {
    std::vector<std::size_t> all(carrier_size);
    std::iota(all.begin(), all.end(), std::size_t{0});
    return {carrier_size, std::move(all)};
}

FinSubset FinSubset::from_mask(std::size_t carrier_size, std::uint64_t mask) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < carrier_size && i < 64; ++i)
        if ((mask >> i) & 1U) idx.push_back(i);
    return {carrier_size, std::move(idx)};
}

bool FinSubset::contains(std::size_t x) const {
    return std::binary_search(members_.begin(), members_.end(), x);
}

bool FinSubset::is_subset_of(const FinSubset& other) const {
    return carrier_size_ == other.carrier_size_ &&
           std::includes(other.members_.begin(), other.members_.end(), members_.begin(), members_.end());
}

std::vector<std::string> FinSubset::labels(const FinitePoset& poset) const {
    std::vector<std::string> out;
    out.reserve(members_.size());
    for (auto i : members_) out.push_back(poset.label(i));
    return out;
}

namespace {

void check_carrier(const FinitePoset& poset, const FinSubset& subset) {
    if (subset.carrier_size() != poset.size())
        throw InvalidSubset("subset was built for a carrier of size " + std::to_string(subset.carrier_size()) +
                            ", poset has " + std::to_string(poset.size()));
}

} // namespace

FinSubset sp_closure(const FinitePoset& poset, const FinSubset& subset) {
    check_carrier(poset, subset);
    std::vector<std::size_t> out;
    for (std::size_t x = 0; x < poset.size(); ++x)
        for (auto y : subset.members())
            if (poset.leq(y, x)) {
                out.push_back(x);
                break;
            }
    return {poset.size(), std::move(out)};
}

FinSubset gen_closure(const FinitePoset& poset, const FinSubset& subset) {
    check_carrier(poset, subset);
    std::vector<std::size_t> out;
    for (std::size_t x = 0; x < poset.size(); ++x)
        for (auto y : subset.members())
            if (poset.leq(x, y)) {
                out.push_back(x);
                break;
            }
    return {poset.size(), std::move(out)};
}

FinSubset cl_cons(const FinitePoset& poset, const FinSubset& subset) {
    check_carrier(poset, subset);
    // Every ultrafilter on a finite set is principal, so the limit points of Y
    // are exactly its members.
    std::vector<std::size_t> limits;
    for (auto y : subset.members()) limits.push_back(principal_limit(poset, subset, y));
    return {poset.size(), std::move(limits)};
}

FinSubset cl_zar(const FinitePoset& poset, const FinSubset& subset) {
    return sp_closure(poset, cl_cons(poset, subset));
}

FinSubset cl_inv(const FinitePoset& poset, const FinSubset& subset) {
    return gen_closure(poset, cl_cons(poset, subset));
}

FinitePoset dual(const FinitePoset& poset) {
    const std::size_t n = poset.size();
    std::vector<std::vector<bool>> rel(n, std::vector<bool>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) rel[i][j] = poset.leq(j, i);
    return {poset.elements(), std::move(rel)};
}

std::size_t principal_limit(const FinitePoset& poset, const FinSubset& subset, std::size_t center) {
    check_carrier(poset, subset);
    if (!subset.contains(center))
        throw InvalidSubset("ultrafilter center '" + (center < poset.size() ? poset.label(center) : std::to_string(center)) +
                            "' is not a member of the subset");
    return center;
}

std::pair<FiniteRingSpec, FinitePoset> spec_zn(std::int64_t n) {
    if (n < 2) throw DomainError("Spec(Z/nZ) needs n >= 2, got " + std::to_string(n));
    FiniteRingSpec ring{static_cast<std::uint64_t>(n), {}};
    auto m = static_cast<std::uint64_t>(n);
    for (std::uint64_t d = 2; d * d <= m; ++d) {
        if (m % d != 0) continue;
        ring.primes.push_back(d);
        while (m % d == 0) m /= d;
    }
    if (m > 1) ring.primes.push_back(m);
    std::vector<std::string> labels;
    for (auto p : ring.primes) labels.push_back(std::to_string(p));
    return {std::move(ring), FinitePoset::antichain(std::move(labels))};
}

std::uint64_t ultrafilter_prime(const FiniteRingSpec& ring, std::span<const std::uint64_t> subset,
                                std::uint64_t center) {
    const auto& primes = ring.primes;
    for (auto y : subset)
        if (!std::binary_search(primes.begin(), primes.end(), y))
            throw PreconditionError(std::to_string(y) + " is not a prime divisor of " + std::to_string(ring.modulus));
    auto pos = std::find(subset.begin(), subset.end(), center);
    if (pos == subset.end())
        throw PreconditionError("ultrafilter center " + std::to_string(center) + " is not in the subset");
    const auto center_bit = static_cast<std::size_t>(pos - subset.begin());

    // V(a) ∩ Y as a bitmask over positions in Y; the principal ultrafilter at
    // the center contains a set iff the set contains the center.
    const std::uint64_t n = ring.modulus;
    std::vector<char> ideal(n, 0);
    for (std::uint64_t a = 0; a < n; ++a) {
        std::uint64_t trace = 0;
        for (std::size_t i = 0; i < subset.size(); ++i)
            if (a % subset[i] == 0) trace |= std::uint64_t{1} << i;
        ideal[a] = static_cast<char>((trace >> center_bit) & 1U);
    }
    for (auto q : primes) {
        bool match = true;
        for (std::uint64_t a = 0; a < n && match; ++a) match = (ideal[a] != 0) == (a % q == 0);
        if (match) return q;
    }
    throw DomainError("ultrafilter ideal is not a prime of Z/" + std::to_string(n));
}

} // namespace zariski
