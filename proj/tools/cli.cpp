#include "cli.hpp"

#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "zariski/io.hpp"
#include "zariski/kronecker.hpp"
#include "zariski/suites.hpp"

namespace zariski::cli {

namespace {

struct Options {
    std::string base = "q-z";
    std::uint64_t seed = kDefaultSeed;

    std::string kind = "cons";
    std::string subset;
    std::string subset2;
    std::string ultrafilter = "free";
    std::vector<std::string> elements;
    std::string h;
    std::vector<std::string> polys;
    int samples = 100;
    std::string ideal;
    std::string place;
    bool star = false;

    std::string op = "zar";
    std::string poset;
    std::string labels = "[]";
    std::string center;
    std::int64_t modulus = 0;
    std::vector<std::string> suites;
};

json point_json(const std::string& s) {
    return s;
}

template <class D>
json witness_json(const std::optional<WedgeWitness<D>>& w) {
    if (!w) return nullptr;
    return {{"place", w->place.str()},
            {"ideal", w->ideal.str()},
            {"element", w->element.str()},
            {"element_in_first", w->element_in_first}};
}

template <class D>
json execute(const std::string& cmd, const BasePair<D>& base, const Options& o) {
    auto subset = [&](const std::string& text) { return parse_subset(base, text); };

    if (cmd == "closure") {
        const auto y = subset(o.subset);
        ZarSubset<D> r = y;
        if (o.kind == "cons") r = cl_cons(y);
        else if (o.kind == "zar") r = cl_zar(y);
        else if (o.kind == "inv") r = cl_inv(y);
        else if (o.kind == "gen") r = gen_closure(y);
        else r = sp_closure(y);
        json out = to_json(r);
        out["kind"] = o.kind;
        out["text"] = r.str();
        return out;
    }
    if (cmd == "limit") {
        const auto y = subset(o.subset);
        const auto u = o.ultrafilter == "free" ? UltrafilterClass<D>::free_class()
                                               : UltrafilterClass<D>::principal(parse_point(base, o.ultrafilter));
        const auto pt = limit_point(y, u);
        return {{"class", u.str()}, {"limit", point_json(pt.str())}, {"center", base.center(pt)}};
    }
    if (cmd == "bx") {
        std::vector<Fraction<D>> f;
        json shown = json::array();
        for (const auto& e : o.elements) {
            f.push_back(parse_element(base, e));
            shown.push_back(f.back().str());
        }
        json out = to_json(b_F(base, f));
        out["elements"] = shown;
        return out;
    }
    if (cmd == "intersect") {
        const auto y = subset(o.subset);
        const auto ring = intersection_ring(y);
        json members = json::array();
        for (const auto& e : o.elements) {
            const auto x = parse_element(base, e);
            members.push_back({{"x", x.str()}, {"member", ring_member(base, ring, x)}});
        }
        return {{"constraint", to_json(ring.constraint())},
                {"text", ring.str()},
                {"representation", is_representation(y)},
                {"locally_finite", is_locally_finite(y).value},
                {"members", members}};
    }
    if (cmd == "kr-member") {
        const KrSpec<D> spec(base, subset(o.subset));
        const auto h = parse_ratfun(base, o.h);
        const auto a = kr_member(spec, h);
        json out = {{"member", a.member}, {"witness", a.witness ? json(*a.witness) : json(nullptr)}};
        if (o.star) out["star_member"] = kr_star_member(base, spec.subset(), h);
        return out;
    }
    if (cmd == "kr-axioms") {
        const KrSpec<D> spec(base, subset(o.subset));
        std::vector<PolyT<D>> samples;
        for (const auto& f : o.polys) samples.push_back(parse_polyt(base, f));
        if (samples.empty()) {
            Sampler<D> s(base, o.seed);
            for (int i = 0; i < o.samples; ++i) samples.push_back(s.polyt(4));
        }
        const auto axioms = kfr_axiom_check(spec, samples);
        CheckReport content;
        for (const auto& f : samples)
            if (!f.is_zero()) content.merge(content_formula_check(spec, f));
        return {{"samples", samples.size()},
                {"axioms", to_json(axioms)},
                {"content", to_json(content)},
                {"passed", axioms.passed() && content.passed()}};
    }
    if (cmd == "phi-pullback") {
        const auto h = parse_ratfun(base, o.h);
        const auto family = phi_pullback(h);
        json sets = json::array();
        for (const auto& f : family) {
            json s = json::array();
            for (const auto& x : f) s.push_back(x.str());
            sets.push_back(s);
        }
        json out = {{"h", h.str()}, {"F", sets}};
        if (!o.place.empty()) {
            const auto p = parse_place(base, o.place);
            out["place"] = p.str();
            out["in_union"] = pullback_contains(family, p);
            out["in_trivial_extension"] = in_trivial_extension(p, h);
        }
        return out;
    }
    if (cmd == "star-apply") {
        const StarSpec<D> star(subset(o.subset.empty() ? "all+K" : o.subset));
        const FracIdeal<D> ideal(base, parse_generators(base, o.ideal));
        return {{"ideal", to_json(ideal)}, {"result", to_json(apply_wedge(star, ideal))}};
    }
    if (cmd == "star-eq") {
        const auto y1 = subset(o.subset);
        const auto y2 = subset(o.subset2);
        return {{"equal", wedge_ft_equal(y1, y2)},
                {"hat1", to_json(hat_closure(y1))},
                {"hat2", to_json(hat_closure(y2))},
                {"witness", witness_json(wedge_witness(base, y1, y2))}};
    }
    if (cmd == "star-complete") {
        const auto w = complete_witness(subset(o.subset));
        return {{"hat", to_json(w.hat)},
                {"proconstructible", w.proconstructible},
                {"generically_closed", w.generically_closed},
                {"ft_equal", w.ft_equal},
                {"equals_cl_inv", w.equals_cl_inv}};
    }
    if (cmd == "vacant") {
        if (!o.subset.empty()) {
            const auto v = vacancy_check(base, subset(o.subset));
            return {{"representation", v.representation}, {"holds", v.holds}, {"detail", v.detail}};
        }
        const auto v = is_vacant_base(base, o.seed);
        return {{"base", base.name()}, {"vacant", v.vacant}, {"argument", v.argument}, {"confirmation", to_json(v.confirmation)}};
    }
    throw ParseError("unknown subcommand " + cmd);
}

json execute_poset(const Options& o) {
    if (o.op == "spec-zn") {
        const auto [ring, poset] = spec_zn(o.modulus);
        return {{"modulus", ring.modulus}, {"primes", ring.primes}, {"poset", to_json(poset)}};
    }
    if (o.op == "ultrafilter-prime") {
        const auto [ring, poset] = spec_zn(o.modulus);
        std::vector<std::uint64_t> y;
        try {
            y = parse_json(o.labels).get<std::vector<std::uint64_t>>();
        } catch (const json::exception& e) {
            throw ParseError(std::string("--subset must be a JSON array of primes: ") + e.what());
        }
        std::uint64_t center = 0;
        try {
            center = std::stoull(o.center);
        } catch (const std::exception&) {
            throw ParseError("--center must be a prime number");
        }
        return {{"modulus", ring.modulus}, {"prime", ultrafilter_prime(ring, y, center)}};
    }
    if (o.poset.empty()) throw ParseError("--poset is required for --op " + o.op);
    const auto p = poset_from_json(parse_json(inline_or_file(o.poset)));
    if (o.op == "dual") return {{"poset", to_json(dual(p))}};
    const auto y = fin_subset_from_json(p, parse_json(o.labels));
    if (o.op == "limit") {
        const auto c = principal_limit(p, y, p.index_of(o.center));
        return {{"limit", p.label(c)}};
    }
    FinSubset r = y;
    if (o.op == "sp") r = sp_closure(p, y);
    else if (o.op == "gen") r = gen_closure(p, y);
    else if (o.op == "zar") r = cl_zar(p, y);
    else if (o.op == "inv") r = cl_inv(p, y);
    else r = cl_cons(p, y);
    return {{"op", o.op}, {"result", to_json(p, r)}};
}

json execute_suites(const Options& o, bool& all_passed) {
    std::vector<int> ids;
    for (const auto& key : o.suites) {
        if (key == "all") {
            for (const auto& s : suite_catalog()) ids.push_back(s.id);
            continue;
        }
        const auto id = find_suite(key);
        if (!id) throw ParseError("unknown suite '" + key + "'");
        ids.push_back(*id);
    }
    if (ids.empty())
        for (const auto& s : suite_catalog()) ids.push_back(s.id);
    json reports = json::array();
    std::size_t passed = 0;
    for (int id : ids) {
        const auto r = run_suite(id, o.seed);
        const bool ok = r.result.passed() && r.result.checked > 0;
        passed += ok ? 1 : 0;
        json j = to_json(r.result);
        j["passed"] = ok;
        j["id"] = r.info.id;
        j["name"] = r.info.name;
        j["description"] = r.info.description;
        j["seconds"] = r.seconds;
        reports.push_back(j);
    }
    all_passed = passed == ids.size();
    return {{"seed", o.seed}, {"suites", reports}, {"passed", passed}, {"failed", ids.size() - passed}};
}

json dispatch(const std::string& cmd, const Options& o, bool& ok) {
    ok = true;
    if (cmd == "poset") return execute_poset(o);
    if (cmd == "suite") return execute_suites(o, ok);

    const std::string& b = o.base;
    if (b == "q-z") return execute(cmd, BasePair<Integer>::rationals(), o);
    if (b == "qx-qx") return execute(cmd, BasePair<Poly>::rational_functions(), o);
    auto characteristic = [&](std::size_t prefix) {
        try {
            std::size_t used = 0;
            const auto p = std::stoull(b.substr(prefix), &used);
            if (used != b.size() - prefix) throw std::invalid_argument(b);
            return static_cast<std::uint64_t>(p);
        } catch (const std::exception&) {
            throw ParseError("malformed characteristic in --base " + b);
        }
    };
    if (b.rfind("fpx-fpx:", 0) == 0) return execute(cmd, BasePair<Poly>::fp_functions(characteristic(8)), o);
    if (b.rfind("fpx-fp:", 0) == 0) return execute(cmd, BasePair<Poly>::fp_functions_over_fp(characteristic(7)), o);
    throw ParseError("--base must be one of q-z, qx-qx, fpx-fpx:p, fpx-fp:p");
}

void report_error(std::ostream& err, const std::string& kind, const std::string& message) {
    err << json{{"error", {{"kind", kind}, {"message", message}}}}.dump() << '\n';
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Closures, function rings and semistar operations on Zariski-Riemann spaces", "zariski"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--base", o.base, "q-z | qx-qx | fpx-fpx:p | fpx-fp:p")->capture_default_str();
    app.add_option("--seed", o.seed, "seed for randomized checks")->capture_default_str();

    auto subset_opt = [&](CLI::App* sub, bool required = true) {
        auto* opt = sub->add_option("--Y,--set", o.subset, "subset: all | all+K | K | empty | JSON | file");
        if (required) opt->required();
    };

    auto* closure = app.add_subcommand("closure", "cons, zar, inv, gen or sp closure of a subset");
    closure->add_option("--kind", o.kind)->check(CLI::IsMember({"cons", "zar", "inv", "gen", "sp"}))->capture_default_str();
    subset_opt(closure);

    auto* limit = app.add_subcommand("limit", "limit point of an ultrafilter class on a subset");
    subset_opt(limit);
    limit->add_option("--class", o.ultrafilter, "free, K, or a place")->capture_default_str();

    auto* bx = app.add_subcommand("bx", "basic open B_F");
    bx->add_option("--x", o.elements, "element of K (repeatable)");

    auto* intersect = app.add_subcommand("intersect", "intersection ring of a subset");
    subset_opt(intersect);
    intersect->add_option("--x", o.elements, "membership query (repeatable)");

    auto* krm = app.add_subcommand("kr-member", "membership in Kr(Y)");
    krm->set_help_flag("--help", "Print this help message and exit"); // -h would clash with --h
    subset_opt(krm);
    krm->add_option("--h", o.h, "rational function in T")->required();
    krm->add_flag("--star", o.star, "also decide through the wedge operation on contents");

    auto* kra = app.add_subcommand("kr-axioms", "function-ring axioms and content formula");
    subset_opt(kra);
    kra->add_option("--f", o.polys, "polynomial in T (repeatable); random samples otherwise");
    kra->add_option("--samples", o.samples)->capture_default_str();

    auto* phi = app.add_subcommand("phi-pullback", "the sets F_ij of a rational function");
    phi->set_help_flag("--help", "Print this help message and exit");
    phi->add_option("--h", o.h)->required();
    phi->add_option("--place", o.place, "also test this place against the union");

    auto* sapply = app.add_subcommand("star-apply", "apply the wedge operation of Y to an ideal");
    sapply->add_option("--Y,--set", o.subset, "subset; all+K (the b-operation) by default");
    sapply->add_option("--ideal", o.ideal, "ideal:[g1, g2, ...]")->required();

    auto* seq = app.add_subcommand("star-eq", "finite-type equality of two wedge operations");
    seq->add_option("--Y1", o.subset)->required();
    seq->add_option("--Y2", o.subset2)->required();

    auto* scomplete = app.add_subcommand("star-complete", "hat closure as a complete witness");
    subset_opt(scomplete);

    auto* vacant = app.add_subcommand("vacant", "vacancy of the base ring, or of one representation");
    subset_opt(vacant, false);

    auto* poset = app.add_subcommand("poset", "finite posets and Spec(Z/n)");
    poset->add_option("--op", o.op)
        ->check(CLI::IsMember({"sp", "gen", "zar", "inv", "cons", "dual", "limit", "spec-zn", "ultrafilter-prime"}))
        ->capture_default_str();
    poset->add_option("--poset", o.poset, "poset JSON or file");
    poset->add_option("--subset", o.labels, "JSON array of labels (or primes)")->capture_default_str();
    poset->add_option("--center", o.center);
    poset->add_option("-n,--modulus", o.modulus);

    auto* suite = app.add_subcommand("suite", "run acceptance suites by number or name");
    suite->add_option("suites", o.suites, "suite numbers or names; all by default");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        report_error(err, "usage", e.what());
        err << app.help();
        return 2;
    }

    const std::string cmd = app.get_subcommands().front()->get_name();
    try {
        bool ok = true;
        out << dispatch(cmd, o, ok).dump() << '\n';
        return ok ? 0 : 1;
    } catch (const ParseError& e) {
        report_error(err, "parse", e.what());
        return 2;
    } catch (const PreconditionError& e) {
        report_error(err, "precondition", e.what());
        return 1;
    } catch (const InvalidSubset& e) {
        report_error(err, "invalid-subset", e.what());
        return 1;
    } catch (const DomainError& e) {
        report_error(err, "domain", e.what());
        return 1;
    } catch (const std::exception& e) {
        report_error(err, "internal", e.what());
        return 1;
    }
}

} // namespace zariski::cli
