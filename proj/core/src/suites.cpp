#include "zariski/suites.hpp"

#include <chrono>
#include <functional>
#include <set>

#include "zariski/kronecker.hpp"

namespace zariski {

namespace {

using Bases = std::pair<std::vector<BasePair<Integer>>, std::vector<BasePair<Poly>>>;

Bases all_bases() {
    return {{BasePair<Integer>::rationals()},
            {BasePair<Poly>::rational_functions(), BasePair<Poly>::fp_functions(2), BasePair<Poly>::fp_functions(3),
             BasePair<Poly>::fp_functions_over_fp(2)}};
}

/// Shapes that keep every sampled element within the exact factorization
/// range over Q.
template <class D>
SampleShape shape_for(const BasePair<D>& base) {
    SampleShape s;
    if (base.kind() == BaseKind::QxQx) {
        s.height = 5;
        s.x_degree = 1;
    }
    return s;
}

/// Runs `body` once per base pair with an independent seed stream.
template <class F>
void for_each_base(std::uint64_t seed, F&& body) {
    auto [ints, polys] = all_bases();
    std::uint64_t stream = 0;
    for (const auto& b : ints) body(b, seed + 1000003ULL * ++stream);
    for (const auto& b : polys) body(b, seed + 1000003ULL * ++stream);
}

FinSubset brute_up(const FinitePoset& p, const FinSubset& y) {
    std::vector<std::size_t> out;
    for (std::size_t x = 0; x < p.size(); ++x)
        for (auto m : y.members())
            if (p.leq(m, x)) {
                out.push_back(x);
                break;
            }
    return {p.size(), out};
}

FinSubset brute_down(const FinitePoset& p, const FinSubset& y) {
    std::vector<std::size_t> out;
    for (std::size_t x = 0; x < p.size(); ++x)
        for (auto m : y.members())
            if (p.leq(x, m)) {
                out.push_back(x);
                break;
            }
    return {p.size(), out};
}

// 1 ---------------------------------------------------------------------------

void closure_identities(CheckReport& r, std::uint64_t) {
    // Every finite poset has a natural labelling (x < y only if i < j), so
    // transitive strict upper-triangular relations cover all isomorphism types.
    for (std::size_t n = 1; n <= 5; ++n) {
        std::vector<std::pair<std::size_t, std::size_t>> slots;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) slots.emplace_back(i, j);
        std::vector<std::string> labels;
        for (std::size_t i = 0; i < n; ++i) labels.push_back(std::string(1, static_cast<char>('a' + i)));
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << slots.size()); ++bits) {
            std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
            for (std::size_t i = 0; i < n; ++i) leq[i][i] = true;
            for (std::size_t s = 0; s < slots.size(); ++s)
                if ((bits >> s) & 1U) leq[slots[s].first][slots[s].second] = true;
            bool transitive = true;
            for (std::size_t i = 0; i < n && transitive; ++i)
                for (std::size_t j = 0; j < n && transitive; ++j)
                    for (std::size_t k = 0; k < n && transitive; ++k)
                        if (leq[i][j] && leq[j][k] && !leq[i][k]) transitive = false;
            if (!transitive) continue;
            const FinitePoset p(labels, leq);
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
                const auto y = FinSubset::from_mask(n, mask);
                ++r.checked;
                const auto cons = cl_cons(p, y);
                const bool ok = cl_zar(p, y) == sp_closure(p, cons) && cl_inv(p, y) == gen_closure(p, cons) &&
                                cl_zar(p, y) == brute_up(p, y) && cl_inv(p, y) == brute_down(p, y) && cons == y;
                if (!ok) r.fail("poset bits " + std::to_string(bits) + " on " + std::to_string(n) + " points, mask " +
                                std::to_string(mask));
            }
        }
    }
}

// 2 ---------------------------------------------------------------------------

void order_duality(CheckReport& r, std::uint64_t seed) {
    Rng rng(seed);
    std::uniform_int_distribution<std::size_t> size(1, 8);
    for (int t = 0; t < 200; ++t) {
        const auto p = random_poset(rng, size(rng));
        const auto d = dual(p);
        for (std::size_t x = 0; x < p.size(); ++x)
            for (std::size_t y = 0; y < p.size(); ++y) {
                ++r.checked;
                if (p.leq(x, y) != d.leq(y, x)) r.fail("poset " + std::to_string(t) + " pair " + p.label(x) + "," + p.label(y));
            }
        ++r.checked;
        if (!(dual(d) == p)) r.fail("dual is not an involution on poset " + std::to_string(t));
    }
}

// 3 ---------------------------------------------------------------------------

void ultrafilter_primes(CheckReport& r, std::uint64_t) {
    for (std::int64_t n = 2; n <= 10000; ++n) {
        const auto [ring, poset] = spec_zn(n);
        const auto k = ring.primes.size();
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
            std::vector<std::uint64_t> y;
            for (std::size_t i = 0; i < k; ++i)
                if ((mask >> i) & 1U) y.push_back(ring.primes[i]);
            for (auto c : y) {
                ++r.checked;
                if (ultrafilter_prime(ring, y, c) != c)
                    r.fail("n=" + std::to_string(n) + " center " + std::to_string(c));
            }
        }
    }
}

// 4 ---------------------------------------------------------------------------

template <class D>
void locally_finite_closure(CheckReport& r, const BasePair<D>& base, std::uint64_t seed) {
    Sampler<D> s(base, seed, shape_for(base));
    for (int t = 0; t < 100; ++t) {
        const auto y = s.cofinite_subset();
        const auto c = cl_cons(y);
        ++r.checked;
        if (!(c == y.with_generic(true))) r.fail(base.name() + ": cl_cons(" + y.str() + ") = " + c.str());
        // K is adherent: every basic neighbourhood B_F of K meets Y.
        std::vector<Fraction<D>> f;
        for (int i = 0; i < 3; ++i) f.push_back(s.pool_element());
        ++r.checked;
        if (b_F(base, f).intersect(y).is_empty()) r.fail(base.name() + ": B_F misses " + y.str());
    }
    // All finite subsets of the first six pool places, with and without K.
    const auto& pool = s.place_pool();
    const std::size_t m = std::min<std::size_t>(6, pool.size());
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (m + 1)); ++mask) {
        std::vector<Place<D>> places;
        for (std::size_t i = 0; i < m; ++i)
            if ((mask >> i) & 1U) places.push_back(pool[i]);
        const auto y = ZarSubset<D>::finite(places, (mask >> m) & 1U);
        ++r.checked;
        if (!(cl_cons(y) == y)) r.fail(base.name() + ": finite " + y.str() + " is not cons-closed");
    }
}

// 5 ---------------------------------------------------------------------------

template <class D>
void pullback_formula(CheckReport& r, const BasePair<D>& base, std::uint64_t seed) {
    Sampler<D> s(base, seed, shape_for(base));
    const auto others = enumerate_places(base, base.kind() == BaseKind::QZ ? 1000 : 3);
    for (int t = 0; t < 200; ++t) {
        RatFunT<D> h = s.ratfun(4);
        if (h.is_zero()) h = RatFunT<D>::indeterminate(base.from_int(1));
        const auto family = phi_pullback(h);
        std::set<Place<D>> places;
        for (const auto* poly : {&h.num(), &h.den()})
            for (const auto& c : poly->coeffs())
                if (!c.is_zero())
                    for (auto& p : support(base, c)) places.insert(std::move(p));
        for (int i = 0; i < 20; ++i) places.insert(others[static_cast<std::size_t>(s.integer(0, static_cast<long>(others.size()) - 1))]);
        for (const auto& p : places) {
            ++r.checked;
            if (in_trivial_extension(p, h) != pullback_contains(family, p))
                r.fail(base.name() + ": h = " + h.str() + " at " + p.str());
        }
    }
}

// 6 ---------------------------------------------------------------------------

template <class D>
void function_ring_axioms(CheckReport& r, const BasePair<D>& base, std::uint64_t seed) {
    Sampler<D> s(base, seed, shape_for(base));
    const auto& pool = s.place_pool();
    const std::vector<ZarSubset<D>> choices = {
        ZarSubset<D>::all_places(),
        ZarSubset<D>::whole(),
        ZarSubset<D>::finite({pool[0]}, false),
        ZarSubset<D>::cofinite({pool[0], pool[1]}, true),
        ZarSubset<D>::finite({pool[0], pool[1], pool[2]}, true),
    };
    for (const auto& y : choices) {
        const KrSpec<D> spec(base, y);
        std::vector<PolyT<D>> samples;
        for (int t = 0; t < 100; ++t) {
            auto f = s.polyt(4);
            samples.push_back(f);
            r.merge(content_formula_check(spec, f));
        }
        r.merge(kfr_axiom_check(spec, samples));
    }
}

// 7 ---------------------------------------------------------------------------

template <class D>
void hat_invariance(CheckReport& r, const BasePair<D>& base, std::uint64_t seed) {
    Sampler<D> s(base, seed, shape_for(base));
    for (int t = 0; t < 200; ++t) {
        const auto y = s.nonempty_subset();
        const auto h = s.ratfun(3);
        ++r.checked;
        const bool a = kr_member(KrSpec<D>(base, y), h).member;
        const bool b = kr_member(KrSpec<D>(base, hat_closure(y)), h).member;
        if (a != b) r.fail(base.name() + ": Y = " + y.str() + ", h = " + h.str());
    }
}

// 8 ---------------------------------------------------------------------------

template <class D>
void finite_type_equality(CheckReport& r, const BasePair<D>& base, std::uint64_t seed) {
    Sampler<D> s(base, seed, shape_for(base));
    for (int t = 0; t < 50; ++t) {
        const auto y1 = s.nonempty_subset();
        ZarSubset<D> y2 = y1;
        switch (s.integer(0, 2)) {
        case 0: y2 = y1.has_infinite_place_part() ? y1.with_generic(!y1.contains_generic()) : cl_inv(y1); break;
        case 1: y2 = y1.unite(ZarSubset<D>::point(s.point())); break;
        default: y2 = s.nonempty_subset(); break;
        }
        const StarSpec<D> s1(y1), s2(y2);
        if (wedge_ft_equal(y1, y2)) {
            for (int i = 0; i < 20; ++i) {
                const auto ideal = s.ideal();
                const auto m1 = apply_wedge(s1, ideal);
                const auto m2 = apply_wedge(s2, ideal);
                ++r.checked;
                bool ok = m1 == m2;
                for (int k = 0; k < 3 && ok; ++k) {
                    const auto x = s.pool_element();
                    ok = gen_member(base, m1, x) == gen_member(base, m2, x);
                }
                if (!ok) r.fail(base.name() + ": equal hats but " + ideal.str() + " separates " + y1.str() + " / " + y2.str());
            }
            continue;
        }
        ++r.checked;
        const auto w = wedge_witness(base, y1, y2);
        if (!w) {
            r.fail(base.name() + ": no witness for " + y1.str() + " / " + y2.str());
            continue;
        }
        const auto m1 = apply_wedge(s1, w->ideal);
        const auto m2 = apply_wedge(s2, w->ideal);
        const bool in1 = gen_member(base, m1, w->element);
        const bool in2 = gen_member(base, m2, w->element);
        if (m1 == m2 || in1 == in2 || in1 != w->element_in_first)
            r.fail(base.name() + ": witness " + w->ideal.str() + " fails to separate " + y1.str() + " / " + y2.str());
    }
}

// 9 ---------------------------------------------------------------------------

template <class D>
void eab(CheckReport& r, const BasePair<D>& base, std::uint64_t seed) {
    Sampler<D> s(base, seed, shape_for(base));
    for (int batch = 0; batch < 10; ++batch) {
        const StarSpec<D> star(s.nonempty_subset());
        std::vector<IdealTriple<D>> triples;
        for (int t = 0; t < 50; ++t) {
            auto f = s.ideal();
            auto g = s.ideal();
            // Bias towards triples where the premise holds.
            auto h = s.coin(0.4) ? g * FracIdeal<D>::principal(base, s.base_element()) : s.ideal();
            triples.emplace_back(std::move(f), std::move(g), std::move(h));
        }
        r.merge(eab_check(star, triples));
    }
}

// 10 --------------------------------------------------------------------------

template <class D>
void hat_completion(CheckReport& r, const BasePair<D>& base, std::uint64_t seed) {
    Sampler<D> s(base, seed, shape_for(base));
    for (int t = 0; t < 200; ++t) {
        const auto y = s.nonempty_subset();
        const auto ideal = s.ideal();
        const auto hat = hat_closure(y);
        ++r.checked;
        if (!(apply_wedge(StarSpec<D>(y), ideal) == apply_wedge(StarSpec<D>(hat), ideal)))
            r.fail(base.name() + ": " + ideal.str() + " on " + y.str());
        ++r.checked;
        const auto w = complete_witness(y);
        if (!(hat_closure(hat) == hat) || !is_proconstructible(hat) || !w.proconstructible || !w.generically_closed ||
            !w.ft_equal || !w.equals_cl_inv)
            r.fail(base.name() + ": hat closure of " + y.str() + " is not a complete witness");
    }
}

// 11 --------------------------------------------------------------------------

template <class D>
void vacancy(CheckReport& r, const BasePair<D>& base, std::uint64_t seed) {
    const auto report = is_vacant_base(base, seed, 20);
    r.merge(report.confirmation);
    ++r.checked;
    if (!report.vacant) r.fail(base.name() + " not reported vacant");

    // Independent confirmation that a missing place p lets 1/t_p into ∩Y.
    Sampler<D> s(base, seed ^ 0x5bd1e995ULL, shape_for(base));
    for (int t = 0; t < 20; ++t) {
        const auto p = s.place();
        const auto y = ZarSubset<D>::cofinite({p}, s.coin());
        const auto x = base.uniformizer(p).inverse();
        ++r.checked;
        const auto v = vacancy_check(base, y);
        if (v.representation || !v.holds || !ring_member(base, intersection_ring(y), x) || base.in_base_ring(x))
            r.fail(base.name() + ": " + y.str() + " should be a vacuous non-representation");
        const auto rep = y.unite(ZarSubset<D>::point(SpacePoint<D>::at(p)));
        ++r.checked;
        const auto w = vacancy_check(base, rep);
        if (!w.representation || !w.holds) r.fail(base.name() + ": " + rep.str() + " should pass");
    }
}

// 12 --------------------------------------------------------------------------

template <class D>
void closure_determines_ring(CheckReport& r, const BasePair<D>& base, std::uint64_t seed) {
    Sampler<D> s(base, seed, shape_for(base));
    int pairs = 0;
    while (pairs < 100) {
        const auto y1 = s.nonempty_subset();
        const auto y2 = s.coin() && y1.has_infinite_place_part() ? y1.with_generic(!y1.contains_generic())
                                                                  : cl_cons(y1);
        if (!(cl_cons(y1) == cl_cons(y2)) || y2.is_empty()) continue;
        ++pairs;
        const auto report = check_closure_determines_ring(y1, y2);
        const auto r1 = intersection_ring(y1);
        const auto r2 = intersection_ring(y2);
        ++r.checked;
        if (!report.holds) r.fail(base.name() + ": rings differ for " + y1.str() + " / " + y2.str());
        for (int i = 0; i < 100; ++i) {
            const auto x = s.coin() ? s.pool_element() : s.element();
            ++r.checked;
            if (ring_member(base, r1, x) != ring_member(base, r2, x))
                r.fail(base.name() + ": " + x.str() + " separates " + y1.str() + " / " + y2.str());
        }
    }
}

#define ZARISKI_PER_BASE(fn)                                                                \
    [](CheckReport& r, std::uint64_t seed) {                                                \
        for_each_base(seed, [&](const auto& base, std::uint64_t s) { fn(r, base, s); });    \
    }

using Runner = std::function<void(CheckReport&, std::uint64_t)>;

const std::vector<Runner>& runners() {
    static const std::vector<Runner> table = {
        closure_identities,
        order_duality,
        ultrafilter_primes,
        ZARISKI_PER_BASE(locally_finite_closure),
        ZARISKI_PER_BASE(pullback_formula),
        ZARISKI_PER_BASE(function_ring_axioms),
        ZARISKI_PER_BASE(hat_invariance),
        ZARISKI_PER_BASE(finite_type_equality),
        ZARISKI_PER_BASE(eab),
        ZARISKI_PER_BASE(hat_completion),
        [](CheckReport& r, std::uint64_t seed) {
            vacancy(r, BasePair<Integer>::rationals(), seed);
            vacancy(r, BasePair<Poly>::fp_functions(2), seed + 1);
        },
        ZARISKI_PER_BASE(closure_determines_ring),
    };
    return table;
}

} // namespace

const std::vector<SuiteInfo>& suite_catalog() {
    static const std::vector<SuiteInfo> catalog = {
        {1, "closure-identities", "cl_zar = sp(cl_cons) and cl_inv = gen(cl_cons) on every poset with at most 5 points"},
        {2, "order-duality", "the dual poset reverses the specialization order (200 random posets, up to 8 points)"},
        {3, "ultrafilter-prime", "the ultrafilter prime of Z/n recovers the center for every n <= 10000"},
        {4, "locally-finite-closure", "cl_cons adds exactly the generic point to infinite place sets, nothing to finite ones"},
        {5, "pullback-formula", "V(T) contains h iff V lies in the union of the B_{F_ij} (200 random h per base)"},
        {6, "function-ring-axioms", "T, 1/T and f(0)/f lie in Kr(Y), and the content formula holds, for 5 choices of Y"},
        {7, "function-ring-hat-invariance", "Kr(Y) and Kr(hat Y) have the same members (200 random pairs per base)"},
        {8, "finite-type-equality", "hat-closure equality agrees with ideal-level behaviour of the wedge operations"},
        {9, "eab", "the wedge operations are e.a.b. on 500 random ideal triples per base"},
        {10, "hat-completion", "Y and its hat closure induce the same wedge on f.g. ideals; the hat is proconstructible"},
        {11, "vacancy", "Z and F_2[x] are vacant; representations pass and non-representations are vacuous"},
        {12, "closure-determines-ring", "subsets with equal constructible closure have the same intersection ring"},
    };
    return catalog;
}

std::optional<int> find_suite(std::string_view key) {
    for (const auto& s : suite_catalog())
        if (key == s.name || key == std::to_string(s.id)) return s.id;
    return std::nullopt;
}

SuiteReport run_suite(int id, std::uint64_t seed) {
    if (id < 1 || id > static_cast<int>(runners().size())) throw DomainError("no suite numbered " + std::to_string(id));
    SuiteReport report{suite_catalog()[static_cast<std::size_t>(id - 1)], {}, 0};
    const auto start = std::chrono::steady_clock::now();
    try {
        runners()[static_cast<std::size_t>(id - 1)](report.result, seed);
    } catch (const std::exception& e) {
        report.result.fail(std::string("aborted: ") + e.what());
    }
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

} // namespace zariski
