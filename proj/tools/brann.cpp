#include <cstdint>
#include <fstream>
#include <iostream>
#include <random>
#include <string>

#include <CLI11.hpp>

#include "brann/error.hpp"
#include "brann/io.hpp"

using namespace brann;

namespace {

enum Exit { ok = 0, io_error = 1, too_large = 2, not_normalized = 3, condition_failed = 4 };

struct Globals {
    std::uint64_t seed = 0;
    std::uint64_t brute_bound = std::uint64_t{1} << 16;
    int max_coordinates = 512;
    int workers = 1;
    std::string format = "json";
    std::string output;

    Limits limits() const { return {max_coordinates, brute_bound, workers}; }
};

void render_text(std::ostream& os, const json& j, const std::string& indent) {
    for (auto it = j.begin(); it != j.end(); ++it) {
        const json& v = it.value();
        bool nested = v.is_array() && !v.empty() && v.front().is_object();
        if (v.is_object()) {
            os << indent << it.key() << ":\n";
            render_text(os, v, indent + "  ");
        } else if (nested) {
            os << indent << it.key() << ":\n";
            for (std::size_t i = 0; i < v.size(); ++i) {
                os << indent << "  [" << i << "]\n";
                render_text(os, v[i], indent + "    ");
            }
        } else {
            os << indent << it.key() << ": " << v.dump() << "\n";
        }
    }
}

void emit(const Globals& g, const json& j) {
    std::ofstream file;
    if (!g.output.empty()) {
        file.open(g.output);
        if (!file) throw ParseError(g.output + ": cannot open for writing");
    }
    std::ostream& os = g.output.empty() ? std::cout : file;
    if (g.format == "text")
        render_text(os, j, "");
    else
        os << j.dump(2) << "\n";
}

json violations_json(const CocycleReport& rep) {
    json out = json::array();
    for (const auto& v : rep.violations)
        out.push_back({{"id", v.id}, {"witness", v.witness}, {"lhs", v.lhs}, {"rhs", v.rhs}, {"count", v.count}});
    return out;
}

json axiom_failures_json(const AxiomReport& rep) {
    json out = json::array();
    for (const auto& f : rep.failures) {
        if (!out.empty() && out.back()["id"] == f.id) {
            out.back()["count"] = out.back()["count"].get<std::size_t>() + 1;
            continue;
        }
        out.push_back({{"id", f.id},
                       {"witness", f.objects},
                       {"lhs", {f.lhs.object, f.lhs.value}},
                       {"rhs", {f.rhs.object, f.rhs.value}},
                       {"count", 1}});
    }
    return out;
}

json obstruction_json(const Obstruction& o) {
    return {{"class_coordinates", o.class_coordinates},
            {"invariant_factors", o.invariant_factors},
            {"vanishes", o.vanishes()},
            {"k", to_json(o.k)}};
}

struct Inputs {
    std::string ring, module, cochain, category, source, target, hom, alpha;
};

ModulePtr load_module(const Inputs& in) {
    FiniteCommutativeRing r = ring_from_json(read_json(in.ring), in.ring);
    return std::make_shared<const FiniteModule>(module_from_json(read_json(in.module), r, in.module));
}

int cmd_cohomology(const Globals& g, const Inputs& in, int degree, const std::string& variant) {
    ModulePtr m = load_module(in);
    CohomologyGroup group(m, degree, parse_variant(variant), g.limits());
    emit(g, to_json(group));
    return ok;
}

int cmd_check(const Globals& g, const Inputs& in, const std::string& mode, const std::string& variant) {
    Cochain c;
    if (!in.category.empty()) {
        c = load_category(in.category).structure;
    } else {
        if (in.ring.empty() || in.module.empty() || in.cochain.empty())
            throw ParseError("check: give --category or all of --ring, --module, --cochain");
        c = cochain_from_json(read_json(in.cochain), load_module(in), in.cochain);
    }
    c.check_normalized();
    json out{{"mode", mode}};
    bool pass = false;
    if (mode == "cocycle") {
        Variant v = variant.empty() ? c.variant() : parse_variant(variant);
        CocycleReport rep = is_cocycle(c, c.degree(), v, g.workers);
        out["variant"] = std::string(variant_name(v));
        out["degree"] = c.degree();
        out["instances"] = rep.instances;
        out["violations"] = violations_json(rep);
        pass = rep.ok();
    } else {
        if (c.degree() != 3 || !c.has(Component::beta))
            throw ParseError("check --mode axioms: expected a degree-3 cochain with beta");
        AxiomReport rep = verify_axioms(TypeRMCategory::unchecked(c), g.workers);
        out["checked"] = rep.checked;
        out["violations"] = axiom_failures_json(rep);
        pass = rep.ok();
    }
    out["ok"] = pass;
    emit(g, out);
    return pass ? ok : condition_failed;
}

struct FunctorSetting {
    CategoryFile source, target;
    HomPair pair;
};

FunctorSetting load_setting(const Inputs& in) {
    CategoryFile s = load_category(in.source);
    CategoryFile t = load_category(in.target);
    HomPair pair = hom_from_json(read_json(in.hom), *s.module, *t.module, in.hom);
    ValidationReport rep = check_ring_hom(pair.p);
    if (rep.ok) rep = check_hom_pair(pair);
    if (!rep.ok) throw AxiomError(rep.axiom, rep.witness);
    return {std::move(s), std::move(t), std::move(pair)};
}

int cmd_obstruction(const Globals& g, const Inputs& in) {
    FunctorSetting st = load_setting(in);
    auto s = TypeRMCategory::make(st.source.structure);
    auto t = TypeRMCategory::make(st.target.structure);
    emit(g, obstruction_json(obstruction(s, t, st.pair, g.limits())));
    return ok;
}

int cmd_classify_functors(const Globals& g, const Inputs& in) {
    FunctorSetting st = load_setting(in);
    auto s = TypeRMCategory::make(st.source.structure);
    auto t = TypeRMCategory::make(st.target.structure);
    FunctorClassification fc = classify_functors(s, t, st.pair, g.limits());
    json classes = json::array();
    for (const auto& c : fc.classes)
        classes.push_back({{"coordinates", c.coordinates}, {"functor", to_json(c.representative)}});
    emit(g, {{"obstruction", obstruction_json(fc.obstruction)},
             {"h2_invariant_factors", fc.h2_invariant_factors},
             {"method", fc.brute_force ? "brute-force" : "coset"},
             {"class_count", fc.classes.size()},
             {"classes", classes}});
    return ok;
}

int cmd_classify(const Globals& g, const Inputs& in, int samples) {
    ModulePtr m = load_module(in);
    CategoryClassification cls = classify_categories(m, g.limits());
    json entries = json::array();
    for (const auto& e : cls.entries)
        entries.push_back({{"coordinates", e.coordinates},
                           {"axioms_ok", verify_axioms(e.category, g.workers).ok()},
                           {"structure", to_json(e.category.structure())}});
    json out{{"invariant_factors", cls.group.invariant_factors()},
             {"entry_count", cls.entries.size()},
             {"entries", entries}};
    if (samples > 0) {
        const CochainLayout& layout = cls.group.layout();
        const auto& gens = cls.group.cocycles().generators;
        std::mt19937_64 rng(g.seed);
        std::vector<std::size_t> hits(cls.entries.size(), 0);
        for (int s = 0; s < samples; ++s) {
            Vec v(layout.size(), 0);
            for (const Vec& gen : gens) {
                auto k = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(layout.exponent()));
                for (int i = 0; i < layout.size(); ++i) v[i] += k * gen[i];
            }
            ++hits[cls.locate(layout.to_cochain(layout.reduce(v)))];
        }
        out["samples"] = {{"seed", g.seed}, {"count", samples}, {"per_entry", hits}};
    }
    emit(g, out);
    return ok;
}

int cmd_trace(const Globals& g, const Inputs& in) {
    CategoryFile c = load_category(in.category);
    c.structure.check_normalized();
    if (!is_cocycle(c.structure, 3, Variant::ab, g.workers).ok()) {
        emit(g, {{"ok", false}, {"error", "structure is not an abelian 3-cocycle"}});
        return condition_failed;
    }
    auto cat = TypeRMCategory::make(c.structure);
    emit(g, {{"trace", trace_of(cat).data()}, {"symmetric", is_symmetric(cat)}});
    return ok;
}

int cmd_harrison(const Globals& g, const Inputs& in) {
    ModulePtr m = load_module(in);
    CohomologyGroup h3(m, 3, Variant::ab, g.limits());
    if (!in.alpha.empty()) {
        Table a = alpha_from_json(read_json(in.alpha), m->ring(), m->size(), in.alpha);
        CocycleReport rep = harrison_is_cocycle(m, a);
        json out{{"accepted", rep.ok()}, {"violations", violations_json(rep)}};
        if (rep.ok()) out["class_coordinates"] = h3.coordinates(harrison_embed(m, a));
        emit(g, out);
        return rep.ok() ? ok : condition_failed;
    }
    json list = json::array();
    for (const Table& a : harrison_cocycles(m, g.limits()))
        list.push_back({{"alpha", to_json(a)}, {"class_coordinates", h3.coordinates(harrison_embed(m, a))}});
    emit(g, {{"count", list.size()}, {"h3_invariant_factors", h3.invariant_factors()}, {"cocycles", list}});
    return ok;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Abelian ring cohomology and braided Ann-categories of type (R,M)"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    Inputs in;
    app.add_option("--seed", g.seed, "Seed for sampling checks");
    app.add_option("--brute-bound", g.brute_bound, "Largest search space enumerated exhaustively");
    app.add_option("--max-coordinates", g.max_coordinates, "Largest cochain layout accepted");
    app.add_option("--workers", g.workers, "Worker threads")->check(CLI::Range(1, 256));
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--output", g.output, "Write the result to a file");

    int degree = 3;
    std::string variant = "ab";
    auto* coh = app.add_subcommand("cohomology", "Invariant factors and representatives of H^i");
    coh->add_option("--ring", in.ring)->required();
    coh->add_option("--module", in.module)->required();
    coh->add_option("--degree", degree)->check(CLI::Range(1, 3));
    coh->add_option("--variant", variant)->check(CLI::IsMember({"macl", "ab", "sym"}));

    std::string mode = "cocycle";
    std::string check_variant;
    auto* chk = app.add_subcommand("check", "Cocycle conditions or category axioms of a cochain");
    chk->add_option("--ring", in.ring);
    chk->add_option("--module", in.module);
    chk->add_option("--cochain", in.cochain);
    chk->add_option("--category", in.category);
    chk->add_option("--mode", mode)->check(CLI::IsMember({"cocycle", "axioms"}));
    chk->add_option("--variant", check_variant)->check(CLI::IsMember({"macl", "ab", "sym"}));

    auto* obs = app.add_subcommand("obstruction", "Obstruction class of a pair (p,q)");
    auto* cfun = app.add_subcommand("classify-functors", "Homotopy classes of functors of type (p,q)");
    for (auto* sub : {obs, cfun}) {
        sub->add_option("--source", in.source)->required();
        sub->add_option("--target", in.target)->required();
        sub->add_option("--hom", in.hom)->required();
    }

    int samples = 0;
    auto* cls = app.add_subcommand("classify", "Braided Ann-categories of type (R,M) up to equivalence");
    cls->add_option("--ring", in.ring)->required();
    cls->add_option("--module", in.module)->required();
    cls->add_option("--samples", samples, "Random cocycles to locate in the table")->check(CLI::NonNegativeNumber);

    auto* trc = app.add_subcommand("trace", "Trace x -> beta(x,x) of a structure");
    trc->add_option("--category", in.category)->required();

    auto* har = app.add_subcommand("harrison", "Harrison 3-cocycles and their classes");
    har->add_option("--ring", in.ring)->required();
    har->add_option("--module", in.module)->required();
    har->add_option("--alpha", in.alpha);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? ok : io_error;
    }

    try {
        if (*coh) return cmd_cohomology(g, in, degree, variant);
        if (*chk) return cmd_check(g, in, mode, check_variant);
        if (*obs) return cmd_obstruction(g, in);
        if (*cfun) return cmd_classify_functors(g, in);
        if (*cls) return cmd_classify(g, in, samples);
        if (*trc) return cmd_trace(g, in);
        if (*har) return cmd_harrison(g, in);
    } catch (const NormalizationError& e) {
        std::cerr << "normalization: " << e.what() << "\n";
        return not_normalized;
    } catch (const InstanceTooLargeError& e) {
        std::cerr << "too large: " << e.what() << "\n";
        return too_large;
    } catch (const OverflowError& e) {
        std::cerr << "too large: " << e.what() << "\n";
        return too_large;
    } catch (const PreconditionError& e) {
        std::cerr << "condition: " << e.what() << "\n";
        return condition_failed;
    } catch (const Error& e) {
        std::cerr << "input: " << e.what() << "\n";
        return io_error;
    }
    return io_error;
}
