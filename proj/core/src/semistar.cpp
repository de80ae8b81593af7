#include "zariski/semistar.hpp"

#include <algorithm>
#include <set>

#include "zariski/sampling.hpp"

namespace zariski {

namespace {

constexpr std::size_t kKeptFailures = 5;

template <class D>
void add_exponents(std::map<Place<D>, long>& into, const std::map<Place<D>, long>& from, long sign = 1) {
    for (const auto& [p, e] : from) {
        long& slot = into[p];
        slot += sign * e;
        if (slot == 0) into.erase(p);
    }
}

template <class D>
std::string exponent_str(const std::map<Place<D>, long>& exps) {
    std::string out = "{";
    bool first = true;
    for (const auto& [p, e] : exps) {
        out += (first ? "" : ", ") + p.str() + ": " + std::to_string(e);
        first = false;
    }
    return out + "}";
}

} // namespace

void CheckReport::fail(std::string what) {
    ++violations;
    if (failures.size() < kKeptFailures) failures.push_back(std::move(what));
}

void CheckReport::merge(const CheckReport& other) {
    checked += other.checked;
    violations += other.violations;
    for (const auto& f : other.failures)
        if (failures.size() < kKeptFailures) failures.push_back(f);
}

// ---- FracIdeal -----------------------------------------------------------

template <class D>
FracIdeal<D>::FracIdeal(const BasePair<D>& base, std::vector<Fraction<D>> generators)
    : base_(base), generators_(std::move(generators)) {
    if (generators_.empty()) throw DomainError("a fractional ideal needs at least one generator");
    std::set<Place<D>> places;
    for (const auto& g : generators_) {
        if (g.is_zero()) throw DomainError("fractional ideal generators must be nonzero");
        for (auto& p : support(base_, g)) places.insert(std::move(p));
    }
    for (const auto& p : places) {
        long e = val(p, generators_.front());
        for (const auto& g : generators_) e = std::min(e, val(p, g));
        if (e != 0) exponents_.emplace(p, e);
    }
}

template <class D>
long FracIdeal<D>::exponent(const Place<D>& p) const {
    const auto it = exponents_.find(p);
    return it == exponents_.end() ? 0 : it->second;
}

template <class D>
FracIdeal<D> FracIdeal<D>::operator*(const FracIdeal& other) const {
    if (!(base_ == other.base_)) throw DomainError("ideals over different base pairs");
    std::vector<Fraction<D>> gens;
    for (const auto& a : generators_)
        for (const auto& b : other.generators_) gens.push_back(a * b);
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    ExponentMap exps = exponents_;
    add_exponents(exps, other.exponents_);
    return FracIdeal(base_, std::move(gens), std::move(exps));
}

template <class D>
FracIdeal<D> FracIdeal<D>::scaled(const Fraction<D>& x) const {
    if (x.is_zero()) throw DomainError("0·I is not a fractional ideal");
    std::vector<Fraction<D>> gens;
    for (const auto& g : generators_) gens.push_back(g * x);
    ExponentMap shift;
    for (const auto& p : support(base_, x)) shift.emplace(p, val(p, x));
    ExponentMap exps = exponents_;
    add_exponents(exps, shift);
    return FracIdeal(base_, std::move(gens), std::move(exps));
}

template <class D>
std::string FracIdeal<D>::str() const {
    std::string out = "ideal:[";
    for (std::size_t i = 0; i < generators_.size(); ++i) out += (i ? ", " : "") + generators_[i].str();
    return out + "]";
}

// ---- GenModule -----------------------------------------------------------

template <class D>
GenModule<D>::GenModule(ZarSubset<D> constraint, ExponentMap exponents) : constraint_(constraint.place_part()) {
    for (const auto& [p, e] : exponents) {
        if (e == 0) continue;
        if (!constraint_.contains_place(p))
            throw InvalidSubset("exponent at " + p.str() + " outside the constraint set " + constraint_.str());
        exceptions_.emplace(p, e);
    }
}

template <class D>
long GenModule<D>::exponent(const Place<D>& p) const {
    const auto it = exceptions_.find(p);
    return it == exceptions_.end() ? 0 : it->second;
}

template <class D>
std::string GenModule<D>::str() const {
    if (is_field()) return "K";
    return "{x : v_p(x) >= e_p on " + constraint_.str() + "}, e = " + exponent_str(exceptions_);
}

template <class D>
StarSpec<D>::StarSpec(ZarSubset<D> subset) : subset_(std::move(subset)) {
    if (subset_.is_empty()) throw DomainError("the semistar operation needs a nonempty family Y");
}

// ---- operations ----------------------------------------------------------

template <class D>
GenModule<D> apply_wedge(const StarSpec<D>& star, const FracIdeal<D>& ideal) {
    const ZarSubset<D> constraint = star.subset().place_part();
    typename GenModule<D>::ExponentMap exps;
    for (const auto& [p, e] : ideal.exponents())
        if (constraint.contains_place(p)) exps.emplace(p, e);
    return GenModule<D>(constraint, std::move(exps));
}

template <class D>
bool gen_contains(const GenModule<D>& m1, const GenModule<D>& m2) {
    // A place constraining M1 but not M2 lets M2 contain g/t^n for every n.
    if (!m1.constraint().is_subset_of(m2.constraint())) return false;
    std::set<Place<D>> keys;
    for (const auto& [p, e] : m1.exceptions()) keys.insert(p);
    for (const auto& [p, e] : m2.exceptions()) keys.insert(p);
    return std::all_of(keys.begin(), keys.end(), [&](const Place<D>& p) {
        return !m1.constraint().contains_place(p) || m1.exponent(p) <= m2.exponent(p);
    });
}

template <class D>
bool gen_member(const BasePair<D>& base, const GenModule<D>& m, const Fraction<D>& x) {
    if (x.is_zero()) return true;
    std::set<Place<D>> places;
    if (m.constraint().is_finite()) {
        places.insert(m.constraint().exceptions().begin(), m.constraint().exceptions().end());
    } else {
        for (auto& p : support(base, x)) places.insert(std::move(p));
        for (const auto& [p, e] : m.exceptions()) places.insert(p);
    }
    return std::all_of(places.begin(), places.end(), [&](const Place<D>& p) {
        return !m.constraint().contains_place(p) || val(p, x) >= m.exponent(p);
    });
}

template <class D>
ZarSubset<D> hat_closure(const ZarSubset<D>& subset) {
    if (subset.is_empty()) throw DomainError("hat closure of the empty family");
    return gen_closure(cl_cons(subset));
}

template <class D>
bool wedge_ft_equal(const ZarSubset<D>& y1, const ZarSubset<D>& y2) {
    return hat_closure(y1) == hat_closure(y2);
}

template <class D>
std::optional<WedgeWitness<D>> wedge_witness(const BasePair<D>& base, const ZarSubset<D>& y1, const ZarSubset<D>& y2) {
    const auto h1 = hat_closure(y1).place_part();
    const auto h2 = hat_closure(y2).place_part();
    if (h1 == h2) return std::nullopt;
    auto p = some_place_in(base, h1.minus(h2));
    const bool in_first = p.has_value();
    if (!p) p = some_place_in(base, h2.minus(h1));
    const Fraction<D> t = base.uniformizer(*p);
    // I = t^{-1}A has exponent -1 at p; t^{-2} escapes I^⋆ exactly where p
    // constrains, and meets every other constraint.
    return WedgeWitness<D>{*p, FracIdeal<D>::principal(base, t.inverse()), t.pow(-2), !in_first};
}

template <class D>
GenModule<D> b_apply(const FracIdeal<D>& ideal) {
    return apply_wedge(StarSpec<D>(ZarSubset<D>::whole()), ideal);
}

template <class D>
CheckReport eab_check(const StarSpec<D>& star, const std::vector<IdealTriple<D>>& triples) {
    CheckReport report;
    for (const auto& [f, g, h] : triples) {
        ++report.checked;
        const bool premise = gen_contains(apply_wedge(star, f * h), apply_wedge(star, f * g));
        if (premise && !gen_contains(apply_wedge(star, h), apply_wedge(star, g)))
            report.fail("F=" + f.str() + " G=" + g.str() + " H=" + h.str() + ": (FG)* ⊆ (FH)* but G* ⊄ H*");
    }
    return report;
}

template <class D>
ZarSubset<D> star_valuation_overrings(const BasePair<D>& base, const StarSpec<D>& star,
                                      const std::vector<FracIdeal<D>>& ideals,
                                      const std::vector<SpacePoint<D>>& probes, CheckReport* check) {
    const ZarSubset<D> hat = hat_closure(star.subset());
    if (!check) return hat;
    for (const auto& v : probes) {
        const StarSpec<D> at_v(ZarSubset<D>::point(v));
        if (hat.contains(v)) {
            for (const auto& f : ideals) {
                ++check->checked;
                if (!gen_contains(apply_wedge(at_v, f), apply_wedge(star, f)))
                    check->fail(v.str() + " is in the hat closure but F* ⊄ FV for F=" + f.str());
            }
            continue;
        }
        ++check->checked;
        const auto f = FracIdeal<D>::principal(base, base.uniformizer(v.place()).inverse());
        if (gen_contains(apply_wedge(at_v, f), apply_wedge(star, f)))
            check->fail(v.str() + " is outside the hat closure but F* ⊆ FV for F=" + f.str());
    }
    return hat;
}

template <class D>
CompleteWitness<D> complete_witness(const ZarSubset<D>& subset) {
    const ZarSubset<D> hat = hat_closure(subset);
    return {hat, is_proconstructible(hat), gen_closure(hat) == hat, wedge_ft_equal(subset, hat), cl_inv(subset) == hat};
}

template <class D>
VacancyCheck vacancy_check(const BasePair<D>& base, const ZarSubset<D>& subset) {
    if (!base.is_fraction_field_of_base())
        throw PreconditionError("vacancy needs K = Frac(A), which fails for " + base.name());
    if (subset.is_empty()) return {false, true, "vacuous: the empty family is not a representation"};
    if (!is_representation(subset)) {
        const auto p = some_place_in(base, subset.complement().place_part());
        const Fraction<D> x = base.uniformizer(*p).inverse();
        return {false, true,
                "vacuous: " + x.str() + " lies in ∩Y but not in A, since " + p->str() + " is missing from Y"};
    }
    const bool whole = hat_closure(subset) == ZarSubset<D>::whole();
    return {true, whole, whole ? "representation with hat closure equal to the whole space"
                               : "representation whose hat closure misses a point"};
}

template <class D>
VacancyReport is_vacant_base(const BasePair<D>& base, std::uint64_t seed, int trials) {
    if (!base.is_fraction_field_of_base())
        throw PreconditionError("vacancy needs K = Frac(A), which fails for " + base.name());
    VacancyReport report{false,
                         "A is a PID, so ∩Y = A forces Y to contain every place (dropping p admits 1/p); "
                         "every representation therefore has hat closure Zar(K|A) and induces the b-operation",
                         {}};
    Sampler<D> sampler(base, seed);
    for (int i = 0; i < trials; ++i) {
        // Representations: a cofinite piece patched with its own gaps.
        const auto gaps = sampler.places(3);
        ZarSubset<D> rep = ZarSubset<D>::cofinite(gaps, sampler.coin())
                               .unite(ZarSubset<D>::finite(gaps, false))
                               .unite(sampler.finite_subset());
        ++report.confirmation.checked;
        const auto r = vacancy_check(base, rep);
        if (!r.representation || !r.holds) report.confirmation.fail("representation " + rep.str() + ": " + r.detail);

        // Non-representations: leave at least one gap open.
        auto holes = sampler.places(3);
        if (holes.empty()) holes.push_back(sampler.place());
        const std::vector<Place<D>> patched(holes.begin() + 1, holes.end());
        ZarSubset<D> non_rep = sampler.coin() ? ZarSubset<D>::cofinite(holes, sampler.coin())
                                                    .unite(ZarSubset<D>::finite(patched, false))
                                              : sampler.finite_subset();
        ++report.confirmation.checked;
        const auto n = vacancy_check(base, non_rep);
        if (n.representation || !n.holds) report.confirmation.fail("non-representation " + non_rep.str() + " not flagged");
    }
    report.vacant = report.confirmation.passed();
    return report;
}

#define ZARISKI_INSTANTIATE_SEMISTAR(D)                                                                          \
    template class FracIdeal<D>;                                                                                 \
    template class GenModule<D>;                                                                                 \
    template class StarSpec<D>;                                                                                  \
    template GenModule<D> apply_wedge(const StarSpec<D>&, const FracIdeal<D>&);                                  \
    template bool gen_contains(const GenModule<D>&, const GenModule<D>&);                                        \
    template bool gen_member(const BasePair<D>&, const GenModule<D>&, const Fraction<D>&);                       \
    template ZarSubset<D> hat_closure(const ZarSubset<D>&);                                                      \
    template bool wedge_ft_equal(const ZarSubset<D>&, const ZarSubset<D>&);                                      \
    template std::optional<WedgeWitness<D>> wedge_witness(const BasePair<D>&, const ZarSubset<D>&,               \
                                                          const ZarSubset<D>&);                                  \
    template GenModule<D> b_apply(const FracIdeal<D>&);                                                          \
    template CheckReport eab_check(const StarSpec<D>&, const std::vector<IdealTriple<D>>&);                      \
    template ZarSubset<D> star_valuation_overrings(const BasePair<D>&, const StarSpec<D>&,                       \
                                                   const std::vector<FracIdeal<D>>&,                             \
                                                   const std::vector<SpacePoint<D>>&, CheckReport*);             \
    template CompleteWitness<D> complete_witness(const ZarSubset<D>&);                                           \
    template VacancyCheck vacancy_check(const BasePair<D>&, const ZarSubset<D>&);                                \
    template VacancyReport is_vacant_base(const BasePair<D>&, std::uint64_t, int);

ZARISKI_INSTANTIATE_SEMISTAR(Integer)
ZARISKI_INSTANTIATE_SEMISTAR(Poly)

} // namespace zariski
