// Command-line front end: AR quivers, Hom/Ext queries, exact structures,
// MAR modules and their mutation poset, and the verification sweep.

#include "dexact/errors.hpp"
#include "dexact/io.hpp"
#include "dexact/oracle_context.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <unistd.h>

using namespace dexact;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct RunConfig {
    int n = 0;
    std::string orientation;
    std::string format; // empty until resolved per command
    std::string output;
    std::string field = "rational";
    int verbose = 0;
};

void add_common(CLI::App* cmd, RunConfig& cfg, bool needs_quiver)
{
    if (needs_quiver) {
        cmd->add_option("-n", cfg.n, "number of vertices")->required()->check(CLI::PositiveNumber);
        cmd->add_option("-o,--orientation", cfg.orientation, "orientation word over {R,L}, or \"all\"")->required();
    }
    cmd->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "dot", "text"}));
    cmd->add_option("--output", cfg.output, "write to this file instead of stdout");
    cmd->add_option("--field", cfg.field, "field for oracle computations")->check(CLI::IsMember({"rational", "f101"}));
    cmd->add_flag("-v,--verbose", cfg.verbose, "more detail on stderr");
}

std::vector<TypeAQuiver> quivers(const RunConfig& cfg)
{
    std::vector<TypeAQuiver> out;
    if (cfg.orientation == "all") {
        if (cfg.n < 2)
            throw QuiverError("n must be at least 2");
        for (const auto& w : all_orientations(cfg.n))
            out.push_back(build_type_a(cfg.n, w));
    } else {
        out.push_back(build_type_a(cfg.n, cfg.orientation));
    }
    return out;
}

void emit(const RunConfig& cfg, const std::string& text)
{
    if (cfg.output.empty()) {
        std::cout << text;
        std::cout.flush();
        return;
    }
    std::ofstream f(cfg.output);
    if (!f)
        throw std::runtime_error("cannot open " + cfg.output);
    f << text;
}

/// Single results are emitted as one object, "all" as a list under "results".
std::string wrap_json(const std::string& command, std::vector<Json> results)
{
    Json out{{"schema", kJsonSchema}, {"command", command}};
    if (results.size() == 1) {
        for (auto& [k, v] : results.front().items())
            out[k] = v;
    } else {
        out["results"] = std::move(results);
    }
    return out.dump(2) + "\n";
}

bool use_color(const RunConfig& cfg)
{
    return cfg.output.empty() && std::getenv("NO_COLOR") == nullptr && isatty(fileno(stdout));
}

std::string verdict(bool ok, bool color)
{
    if (!color)
        return ok ? "PASS" : "FAIL";
    return ok ? "\033[32mPASS\033[0m" : "\033[31mFAIL\033[0m";
}

template <class F>
std::size_t oracle_hom(const TypeAQuiver& q, const Interval& a, const Interval& b)
{
    TypeAOracle<F> model(q);
    return oracle::hom_dim(model.rep(a), model.rep(b));
}

template <class F>
std::pair<std::size_t, std::optional<ModuleSum>> oracle_ext(const TypeAQuiver& q, const Interval& c, const Interval& a)
{
    TypeAOracle<F> model(q);
    oracle::ExtModel<F> e(model.rep(c), model.rep(a));
    if (e.dim() != 1)
        return {e.dim(), std::nullopt};
    return {e.dim(), model.decompose(e.realize({F(1)}).middle)};
}

// ---------------------------------------------------------------- commands

int cmd_ar_quiver(const RunConfig& cfg)
{
    std::vector<Json> results;
    std::string text;
    for (const auto& q : quivers(cfg)) {
        ArGrid g(q);
        if (cfg.format == "dot")
            text += grid_dot(g);
        else if (cfg.format == "text")
            text += q.orientation() + " (n = " + std::to_string(q.n()) + ")\n" + grid_text(g);
        else
            results.push_back(grid_json(g));
    }
    emit(cfg, cfg.format == "json" ? wrap_json("ar-quiver", std::move(results)) : text);
    return kExitOk;
}

int cmd_hom(const RunConfig& cfg, const std::string& from, const std::string& to)
{
    const Interval a = parse_interval(from), b = parse_interval(to);
    std::vector<Json> results;
    std::string text;
    for (const auto& q : quivers(cfg)) {
        q.check_interval(a);
        q.check_interval(b);
        ArGrid g(q);
        const int dim = g.hom_dim(a, b);
        const auto check = cfg.field == "f101" ? oracle_hom<oracle::F101>(q, a, b) : oracle_hom<oracle::Rational>(q, a, b);
        results.push_back(Json{{"quiver", to_json(q)},
                               {"from", to_json(a)},
                               {"to", to_json(b)},
                               {"dim", dim},
                               {"pair_class", to_json(g.classify_pair(a, b))},
                               {"oracle_dim", check},
                               {"field", cfg.field}});
        text += q.orientation() + ": dim Hom(" + a.str() + ", " + b.str() + ") = " + std::to_string(dim) + " ("
                + pair_class_name(g.classify_pair(a, b)) + "; oracle " + std::to_string(check) + ")\n";
    }
    emit(cfg, cfg.format == "json" ? wrap_json("hom", std::move(results)) : text);
    return kExitOk;
}

int cmd_ext(const RunConfig& cfg, const std::string& quot_text, const std::string& sub_text)
{
    const Interval c = parse_interval(quot_text), a = parse_interval(sub_text);
    std::vector<Json> results;
    std::string text;
    for (const auto& q : quivers(cfg)) {
        q.check_interval(c);
        q.check_interval(a);
        auto g = std::make_shared<const ArGrid>(q);
        auto cls = g->ext_class(c, a);
        auto [odim, omid] = cfg.field == "f101" ? oracle_ext<oracle::F101>(q, c, a) : oracle_ext<oracle::Rational>(q, c, a);
        Json j{{"quiver", to_json(q)}, {"quot", to_json(c)}, {"sub", to_json(a)}, {"dim", cls ? 1 : 0}};
        j["class"] = cls ? to_json(*cls) : Json();
        j["admissible_in_diamond"] = cls ? is_admissible(e_diamond(g), a, c) : false;
        j["oracle_dim"] = odim;
        j["oracle_middle"] = omid ? to_json(*omid) : Json();
        j["field"] = cfg.field;
        results.push_back(j);
        text += q.orientation() + ": Ext^1(" + c.str() + ", " + a.str() + ") ";
        text += cls ? "= 1: " + ses_text(*cls) : std::string("= 0");
        text += "; oracle dim " + std::to_string(odim) + "\n";
    }
    emit(cfg, cfg.format == "json" ? wrap_json("ext", std::move(results)) : text);
    return kExitOk;
}

int cmd_exact_structure(const RunConfig& cfg, const std::string& structure, const std::string& generators)
{
    std::vector<Json> results;
    std::string text;
    for (const auto& q : quivers(cfg)) {
        auto g = std::make_shared<const ArGrid>(q);
        std::optional<ExactStructure> es;
        if (structure == "diamond")
            es = e_diamond(g);
        else if (structure == "empty")
            es = f_empty(g);
        else if (structure == "all")
            es = f_all(g);
        else {
            if (generators.empty())
                throw QuiverError("--structure generators needs --generators");
            auto gens = parse_module(generators).summands();
            for (const auto& m : gens)
                q.check_interval(m);
            es = f_x(g, gens);
        }
        auto rep = zero_auslander_report(*es);
        Json j{{"quiver", to_json(q)}, {"structure", es->label()}, {"generators", to_json(ModuleSum(es->generators()))}};
        const Json report = to_json(rep);
        for (const auto& [k, v] : report.items())
            j[k] = v;
        results.push_back(j);
        text += q.orientation() + " " + es->label() + ": global dim " + std::to_string(rep.global_dim) + ", dominant "
                + (rep.dominant_dim_ok ? "ok" : "fails") + ", 0-Auslander " + (rep.is_0_auslander ? "yes" : "no")
                + "\n  relative projectives " + ModuleSum(rep.relative_projectives).str() + "\n  relative injectives "
                + ModuleSum(rep.relative_injectives).str() + "\n";
        for (const auto& res : rep.resolutions)
            for (const auto& s : res.steps)
                text += "  0 -> " + s.sub.str() + " -> " + s.middle.str() + " -> " + s.quot.str() + " -> 0"
                        + (s.augmented ? " (augmented cover)" : "") + "\n";
    }
    emit(cfg, cfg.format == "json" ? wrap_json("exact-structure", std::move(results)) : text);
    return kExitOk;
}

struct MarFlags {
    bool hasse = false;
    bool flip_graph = false;
    bool verify_bijection = false;
    bool certificate = false;
};

int cmd_mar(const RunConfig& cfg, const MarFlags& flags)
{
    require_mar_domain(cfg.n);
    std::vector<Json> results;
    std::string dot;
    std::size_t passed = 0, total = 0, modules = 0;
    bool sizes_ok = true;
    for (const auto& q : quivers(cfg)) {
        auto g = std::make_shared<const ArGrid>(q);
        ConflictGraph cg(g);
        auto mars = enumerate_mar(cg);
        modules += mars.size();
        Json j = mar_json(cg, mars);
        sizes_ok = sizes_ok && j["all_sizes_ok"].get<bool>();
        if (flags.verify_bijection || flags.certificate) {
            auto rep = bijection_report(cg);
            ++total;
            passed += rep.isomorphic;
            j["bijection"] = Json{{"isomorphic", rep.isomorphic},
                                  {"mar_count", rep.mar_count},
                                  {"triangulation_count", rep.triangulation_count}};
            if (flags.certificate)
                j["bijection"]["certificate"] = rep.certificate;
        }
        if (flags.hasse)
            dot += hasse_dot(mar_poset(cg));
        results.push_back(std::move(j));
    }
    if (flags.flip_graph)
        dot += flip_graph_dot(polygon_flip_graph(cfg.n + 1));

    if (flags.hasse || flags.flip_graph)
        emit(cfg, dot);
    else
        emit(cfg, wrap_json("mar", std::move(results)));

    const auto count = quivers(cfg).size();
    std::cerr << modules << " MAR modules over " << count << " orientation" << (count == 1 ? "" : "s") << ", each with "
              << 2 * cfg.n - 1 << " summands: " << (sizes_ok ? "ok" : "MISMATCH") << "\n";
    if (flags.verify_bijection)
        std::cerr << total << " orientations, " << (passed == total ? "all pass" : std::to_string(total - passed) + " fail")
                  << "\n";
    return (flags.verify_bijection && passed != total) || !sizes_ok ? kExitFailure : kExitOk;
}

int cmd_mutate(const RunConfig& cfg, const std::string& module_text, const std::string& summand_text)
{
    require_mar_domain(cfg.n);
    auto qs = quivers(cfg);
    if (qs.size() != 1)
        throw QuiverError("mutate needs a single orientation");
    const auto& q = qs.front();
    auto g = std::make_shared<const ArGrid>(q);
    ConflictGraph cg(g);
    ModuleSum t;
    if (module_text.empty()) {
        auto poset = mar_poset(cg);
        t = poset.elements.at(poset.minimum);
    } else {
        t = parse_module(module_text);
    }
    for (const auto& m : t.summands())
        q.check_interval(m);
    const Interval x = parse_interval(summand_text);
    auto mu = mutate(cg, t, x);
    Json j{{"quiver", to_json(q)},
           {"module", to_json(t)},
           {"summand", to_json(x)},
           {"replacement", to_json(mu.replacement)},
           {"exchange", to_json(mu.exchange)},
           {"direction", direction_name(mu.direction)},
           {"result", to_json(mu.result)}};
    std::string text = "mutating " + t.str() + " at " + x.str() + "\n  replacement " + mu.replacement.str() + " ("
                       + direction_name(mu.direction) + ")\n  exchange " + ses_text(mu.exchange) + "\n  result "
                       + mu.result.str() + "\n";
    emit(cfg, cfg.format == "json" ? wrap_json("mutate", {j}) : text);
    return kExitOk;
}

int cmd_poset(const RunConfig& cfg)
{
    require_mar_domain(cfg.n);
    std::vector<Json> results;
    std::string text;
    for (const auto& q : quivers(cfg)) {
        ConflictGraph cg(std::make_shared<const ArGrid>(q));
        auto p = mar_poset(cg);
        if (cfg.format == "dot") {
            text += hasse_dot(p);
        } else if (cfg.format == "text") {
            text += q.orientation() + ": " + std::to_string(p.elements.size()) + " elements, "
                    + std::to_string(p.hasse_edges.size()) + " covers, lattice " + (p.is_lattice ? "yes" : "no") + "\n";
            for (std::size_t k = 0; k < p.elements.size(); ++k)
                text += "  " + std::to_string(k) + ": " + p.elements[k].str()
                        + (static_cast<int>(k) == p.minimum ? "  (minimum)" : "")
                        + (static_cast<int>(k) == p.maximum ? "  (maximum)" : "") + "\n";
            for (const auto& c : p.hasse_edges)
                text += "  " + std::to_string(c.lower) + " < " + std::to_string(c.upper) + " via "
                        + ses_text(c.exchange) + "\n";
        } else {
            Json j{{"quiver", to_json(q)}};
            const Json body = poset_json(p);
            for (const auto& [k, v] : body.items())
                j[k] = v;
            results.push_back(std::move(j));
        }
    }
    emit(cfg, cfg.format == "json" ? wrap_json("poset", std::move(results)) : text);
    return kExitOk;
}

struct VerifyFlags {
    int max_n = 7;
    bool examples_only = false;
    std::uint64_t seed = AcceptanceOptions{}.seed;
    int random = AcceptanceOptions{}.random_rigid;
};

int cmd_verify(const RunConfig& cfg, const VerifyFlags& flags)
{
    const bool color = use_color(cfg) && cfg.format == "text";
    std::vector<CriterionResult> results;
    std::vector<ExampleReport> examples;
    std::string text;
    auto line = [&](const CriterionResult& r) {
        std::string l = (r.skipped ? std::string("SKIP") : verdict(r.passed, color)) + " " + std::to_string(r.id) + " "
                        + r.title + ": " + r.detail;
        if (cfg.verbose)
            l += " [" + std::to_string(r.cases) + " cases, " + std::to_string(r.seconds) + " s]";
        return l + "\n";
    };
    if (flags.examples_only) {
        examples = {verify_d4_example(), verify_gentle_example()};
        for (const auto& e : examples)
            for (const auto& c : e.checks)
                text += verdict(c.passed, color) + " " + c.name + ": " + c.detail + "\n";
    } else {
        AcceptanceOptions options;
        options.max_n = flags.max_n;
        options.seed = flags.seed;
        options.random_rigid = flags.random;
        results = run_acceptance(options, [&](const CriterionResult& r) {
            if (cfg.verbose)
                std::cerr << line(r);
        });
        for (const auto& r : results)
            text += line(r);
    }
    bool ok = true;
    for (const auto& r : results)
        ok = ok && r.passed;
    for (const auto& e : examples)
        ok = ok && e.passed();

    if (cfg.format == "json") {
        Json j{{"passed", ok}};
        if (flags.examples_only) {
            Json list = Json::array();
            for (const auto& e : examples)
                list.push_back(to_json(e));
            j["examples"] = list;
        } else {
            Json list = Json::array();
            for (const auto& r : results)
                list.push_back(to_json(r));
            j["max_n"] = flags.max_n;
            j["criteria"] = list;
        }
        emit(cfg, wrap_json("verify", {j}));
    } else {
        emit(cfg, text);
    }
    return ok ? kExitOk : kExitFailure;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact structures, AR quivers and maximal almost rigid modules for type A quivers"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto* ar = app.add_subcommand("ar-quiver", "embedded Auslander-Reiten quiver");
    add_common(ar, cfg, true);

    std::string from, to;
    auto* hom = app.add_subcommand("hom", "dim Hom(M, N) with pair classification");
    add_common(hom, cfg, true);
    hom->add_option("M", from, "source interval, e.g. 2,3")->required();
    hom->add_option("N", to, "target interval")->required();

    auto* ext = app.add_subcommand("ext", "the nonsplit class of Ext^1(C, A), i.e. 0 -> A -> B -> C -> 0");
    add_common(ext, cfg, true);
    ext->add_option("C", from, "quotient interval")->required();
    ext->add_option("A", to, "sub interval")->required();

    std::string structure = "diamond", generators;
    auto* es = app.add_subcommand("exact-structure", "relative projectives, resolutions and the 0-Auslander verdict");
    add_common(es, cfg, true);
    es->add_option("--structure", structure, "diamond, empty (all sequences), all (split only) or generators")
        ->check(CLI::IsMember({"diamond", "empty", "all", "generators"}));
    es->add_option("--generators", generators, "generating intervals, e.g. \"1,1 + 2,3\"");

    MarFlags mar_flags;
    auto* mar = app.add_subcommand("mar", "maximal almost rigid modules");
    add_common(mar, cfg, true);
    mar->add_flag("--hasse", mar_flags.hasse, "emit the Hasse diagram as DOT");
    mar->add_flag("--flip-graph", mar_flags.flip_graph, "emit the flip graph of the (n+1)-gon as DOT");
    mar->add_flag("--verify-bijection", mar_flags.verify_bijection, "check exchange graph = flip graph");
    mar->add_flag("--certificate", mar_flags.certificate, "include the isomorphism (MAR index -> triangulation index)");

    std::string module_text, summand;
    auto* mu = app.add_subcommand("mutate", "mutate a MAR module at a summand");
    add_common(mu, cfg, true);
    mu->add_option("--module", module_text, "MAR module (default: the lattice minimum)");
    mu->add_option("--summand", summand, "summand to exchange")->required();

    auto* poset = app.add_subcommand("poset", "poset of MAR modules under oriented mutation");
    add_common(poset, cfg, true);

    VerifyFlags vflags;
    auto* verify = app.add_subcommand("verify", "run the acceptance sweep");
    add_common(verify, cfg, false);
    verify->add_option("--max-n", vflags.max_n, "largest n in every sweep")->check(CLI::Range(2, kMaxMarN));
    verify->add_flag("--section5,--examples", vflags.examples_only, "only the D4 and gentle examples");
    verify->add_option("--seed", vflags.seed, "seed for random rigid modules");
    verify->add_option("--random", vflags.random, "random rigid non-MAR modules per sampled n")
        ->check(CLI::NonNegativeNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (cfg.format.empty())
        cfg.format = verify->parsed() ? "text" : "json";

    try {
        if (ar->parsed())
            return cmd_ar_quiver(cfg);
        if (hom->parsed())
            return cmd_hom(cfg, from, to);
        if (ext->parsed())
            return cmd_ext(cfg, from, to);
        if (es->parsed())
            return cmd_exact_structure(cfg, structure, generators);
        if (mar->parsed())
            return cmd_mar(cfg, mar_flags);
        if (mu->parsed())
            return cmd_mutate(cfg, module_text, summand);
        if (poset->parsed())
            return cmd_poset(cfg);
        if (verify->parsed())
            return cmd_verify(cfg, vflags);
    } catch (const QuiverError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const MarDomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailure;
    }
    return kExitUsage;
}
