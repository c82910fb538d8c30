/* mftop_main.cpp -- command-line driver: document verification,
 * neighbourhood round trips, continuity/homeomorphism checks, product
 * space checks, compactness, and proposition mining.
 *
 * Exit codes: 0 all checks pass, 2 check failure, 64 usage error,
 * 65 input/data error.
 */
#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "mftop/document.hpp"
#include "mftop/enumerate.hpp"
#include "mftop/mine.hpp"
#include "mftop/morphisms.hpp"
#include "mftop/product.hpp"
#include "mftop/report.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailure = 2;
constexpr int kExitUsage = 64;
constexpr int kExitInputError = 65;

struct GlobalOptions {
    std::uint64_t seed = 0;
    std::int64_t budget_ms = 0; // 0 = unlimited
    std::string format = "text";
    bool no_verify = false;

    std::optional<std::chrono::milliseconds> budget() const {
        std::int64_t ms = budget_ms;
        if (const char* env = std::getenv("MFTOP_BUDGET_MS"))
            ms = std::strtoll(env, nullptr, 10); // env wins over the flag
        if (ms > 0) return std::chrono::milliseconds(ms);
        return std::nullopt; // 0 = unlimited
    }
};

void emit(const GlobalOptions& global, const mftop::VerificationReport& report) {
    if (global.format == "json")
        std::cout << report.to_json().dump(2) << "\n";
    else
        std::cout << report.to_text();
}

mftop::SpaceDocument load_checked(const GlobalOptions& global, const std::string& path,
                                  mftop::VerificationReport& report) {
    mftop::SpaceDocument doc = mftop::load_space_document(path);
    if (!global.no_verify) {
        const mftop::AxiomReport axioms =
            mftop::verify_axioms(doc.shape, doc.opens, doc.kind);
        report.add("axioms(" + path + ")", axioms.ok,
                   axioms.ok ? nlohmann::json(nullptr)
                             : mftop::axiom_report_to_json(axioms));
    }
    return doc;
}

// Picks the named map, or the only one when the name is empty.
mftop::PointMap pick_map(const mftop::SpaceDocument& from, const mftop::SpaceDocument& to,
                         std::string name) {
    if (name.empty()) {
        if (from.maps.size() != 1)
            throw mftop::ValueError("document defines " + std::to_string(from.maps.size()) +
                                    " maps; choose one with --map");
        name = from.maps.begin()->first;
    }
    return mftop::resolve_map(from, to, name);
}

int run_verify(const GlobalOptions& global, const std::string& path) {
    mftop::VerificationReport report{"verify", global.seed, {}};
    mftop::SpaceDocument doc = mftop::load_space_document(path);
    const mftop::AxiomReport axioms = mftop::verify_axioms(doc.shape, doc.opens, doc.kind);
    report.add("axioms", axioms.ok,
               axioms.ok ? nlohmann::json(nullptr) : mftop::axiom_report_to_json(axioms));
    emit(global, report);
    return report.ok() ? kExitPass : kExitCheckFailure;
}

int run_nbd(const GlobalOptions& global, const std::string& path, const std::string& point) {
    mftop::VerificationReport report{"nbd", global.seed, {}};
    mftop::SpaceDocument doc = load_checked(global, path, report);
    const mftop::MultiFuzzyTopology space = doc.topology();
    const mftop::NbdSystem system = mftop::nbd_from_topology(space);
    const mftop::NbdReport axioms = mftop::verify_nbd_axioms(system);

    nlohmann::json families = nlohmann::json::object();
    for (std::size_t x = 0; x < space.shape().universe.size(); ++x) {
        const std::string& label = space.shape().universe.label(x);
        if (!point.empty() && point != label) continue;
        families[label] = mftop::family_to_json(system.family_at(x));
    }
    report.add("nbd-axioms", axioms.ok,
               axioms.ok ? nlohmann::json{{"families", families}}
                         : nlohmann::json{{"families", families},
                                          {"report", mftop::nbd_report_to_json(axioms)}});
    emit(global, report);
    return report.ok() ? kExitPass : kExitCheckFailure;
}

int run_roundtrip(const GlobalOptions& global, const std::string& path) {
    mftop::VerificationReport report{"roundtrip", global.seed, {}};
    mftop::SpaceDocument doc = load_checked(global, path, report);
    const mftop::MultiFuzzyTopology space = doc.topology();
    const mftop::NbdSystem system = mftop::nbd_from_topology(space);
    const mftop::NbdReport axioms = mftop::verify_nbd_axioms(system);
    report.add("derived-system-axioms", axioms.ok,
               axioms.ok ? nlohmann::json(nullptr) : mftop::nbd_report_to_json(axioms));
    const mftop::MultiFuzzyTopology rebuilt =
        mftop::topology_from_nbd(system, /*verify=*/false);
    const bool equal = rebuilt.opens() == space.opens();
    report.add("tau_L_tau == tau", equal,
               equal ? nlohmann::json(nullptr)
                     : nlohmann::json{{"rebuilt", mftop::topology_to_json(rebuilt)}});
    emit(global, report);
    return report.ok() ? kExitPass : kExitCheckFailure;
}

int run_continuity(const GlobalOptions& global, const std::string& dom_path,
                   const std::string& cod_path, const std::string& map_name,
                   const std::string& criteria) {
    mftop::VerificationReport report{"continuity", global.seed, {}};
    mftop::SpaceDocument dom = load_checked(global, dom_path, report);
    mftop::SpaceDocument cod =
        cod_path.empty() ? dom : load_checked(global, cod_path, report);
    const mftop::SpaceMap m(pick_map(dom, cod, map_name), dom.topology(), cod.topology());

    std::vector<mftop::ContinuityCriterion> selected;
    if (criteria == "all") {
        selected = {mftop::ContinuityCriterion::OpenPreimage,
                    mftop::ContinuityCriterion::ClosedPreimage,
                    mftop::ContinuityCriterion::NbdPullback,
                    mftop::ContinuityCriterion::NbdWitness};
    } else {
        std::string token;
        std::istringstream stream(criteria);
        while (std::getline(stream, token, ','))
            selected.push_back(mftop::continuity_criterion_from_string(token));
    }

    std::vector<bool> verdicts;
    for (const auto criterion : selected) {
        const bool v = mftop::is_continuous_via(m, criterion);
        verdicts.push_back(v);
        report.add("continuous-via-" + mftop::to_string(criterion), v);
    }
    if (verdicts.size() > 1) {
        const bool agree =
            std::all_of(verdicts.begin(), verdicts.end(),
                        [&verdicts](bool v) { return v == verdicts.front(); });
        report.add("criteria-agree", agree);
    }
    emit(global, report);
    return report.ok() ? kExitPass : kExitCheckFailure;
}

int run_homeo(const GlobalOptions& global, const std::string& dom_path,
              const std::string& cod_path, const std::string& map_name) {
    mftop::VerificationReport report{"homeo", global.seed, {}};
    mftop::SpaceDocument dom = load_checked(global, dom_path, report);
    mftop::SpaceDocument cod =
        cod_path.empty() ? dom : load_checked(global, cod_path, report);
    const mftop::SpaceMap m(pick_map(dom, cod, map_name), dom.topology(), cod.topology());

    const bool bijective = m.map().is_bijective();
    report.add("bijective", bijective);
    if (bijective) {
        const bool fwd = mftop::is_continuous(m);
        const bool both = fwd && mftop::is_continuous(mftop::inverse(m));
        const bool open_and_cont = fwd && mftop::is_open_map(m);
        report.add("continuous-both-ways", both);
        report.add("continuous-and-open", open_and_cont);
        report.add("characterizations-agree", both == open_and_cont);
        report.add("homeomorphism", both);
    } else {
        report.add("homeomorphism", false);
    }
    emit(global, report);
    return report.ok() ? kExitPass : kExitCheckFailure;
}

int run_product(const GlobalOptions& global, const std::string& path1,
                const std::string& path2, const std::string& checks) {
    mftop::VerificationReport report{"product", global.seed, {}};
    mftop::SpaceDocument doc1 = load_checked(global, path1, report);
    mftop::SpaceDocument doc2 = load_checked(global, path2, report);
    const mftop::ProductSpace product =
        mftop::product_topology(doc1.topology(), doc2.topology());

    const bool all = checks.empty() || checks == "all";
    auto wants = [&checks, all](const char* name) {
        return all || checks.find(name) != std::string::npos;
    };

    if (wants("base")) {
        report.add("basis-is-open-base", mftop::is_open_base(product.basis(), product.topology()));
        const mftop::SetFamily base = mftop::product_base(
            product, mftop::minimal_base(product.factor1()),
            mftop::minimal_base(product.factor2()));
        report.add("product-of-minimal-bases-is-base",
                   mftop::is_open_base(base, product.topology()),
                   nlohmann::json{{"cardinality", base.size()}});
        const auto sc = mftop::is_second_countable(product.topology());
        report.add("second-countable", sc.second_countable,
                   nlohmann::json{{"base_cardinality", sc.base.size()}});
    }
    if (wants("projections")) {
        for (int j = 1; j <= 2; ++j) {
            const mftop::SpaceMap pi = mftop::projection(product, j);
            report.add("projection-" + std::to_string(j) + "-continuous",
                       mftop::is_continuous(pi));
            report.add("projection-" + std::to_string(j) + "-open", mftop::is_open_map(pi));
        }
        report.add("smallest-topology", mftop::smallest_topology_check(product));
    }
    if (wants("compact")) {
        mftop::CompactnessOptions opts;
        opts.seed = global.seed;
        const mftop::CompactnessReport cr = mftop::check_compact(product, opts);
        report.add("compact", cr.compact,
                   nlohmann::json{{"covers_enumerated", cr.covers_enumerated},
                                  {"vacuous", cr.vacuously_compact}});
        report.add("product-subcover-pattern",
                   cr.vacuously_compact || cr.product_pattern_ok,
                   nlohmann::json{{"basic_covers_checked", cr.basic_covers_checked}});
    }
    emit(global, report);
    return report.ok() ? kExitPass : kExitCheckFailure;
}

int run_base(const GlobalOptions& global, const std::string& path) {
    mftop::VerificationReport report{"base", global.seed, {}};
    mftop::SpaceDocument doc = load_checked(global, path, report);
    const mftop::MultiFuzzyTopology space = doc.topology();
    const mftop::SetFamily base = mftop::minimal_base(space);
    report.add("minimal-base-is-base", mftop::is_open_base(base, space),
               nlohmann::json{{"cardinality", base.size()},
                              {"base", mftop::family_to_json(base)}});
    const auto sc = mftop::is_second_countable(space);
    report.add("second-countable", sc.second_countable);
    emit(global, report);
    return report.ok() ? kExitPass : kExitCheckFailure;
}

int run_compact(const GlobalOptions& global, const std::string& path,
                std::size_t max_cover_size) {
    mftop::VerificationReport report{"compact", global.seed, {}};
    mftop::SpaceDocument doc = load_checked(global, path, report);
    mftop::CompactnessOptions opts;
    opts.max_cover_size = max_cover_size;
    opts.seed = global.seed;
    const mftop::CompactnessReport cr = mftop::check_compact(doc.topology(), opts);
    report.add("compact", cr.compact,
               nlohmann::json{{"cover_exists", cr.cover_exists},
                              {"vacuous", cr.vacuously_compact},
                              {"covers_enumerated", cr.covers_enumerated},
                              {"covers_sampled", cr.covers_sampled},
                              {"largest_min_subcover", cr.largest_min_subcover}});
    emit(global, report);
    return report.ok() ? kExitPass : kExitCheckFailure;
}

int run_mine(const GlobalOptions& global, const std::string& proposition,
             const mftop::MineBounds& bounds, const std::string& mutation) {
    mftop::MineOptions options;
    options.seed = global.seed;
    options.budget = global.budget();
    options.mutation = mftop::mutation_from_string(mutation);
    const mftop::MineResult result =
        mftop::mine_counterexamples(proposition, bounds, options);
    if (global.format == "json") {
        std::cout << result.to_json().dump(2) << "\n";
    } else {
        std::cout << "proposition " << result.proposition << ": "
                  << (result.ok() ? "no counterexample" : "COUNTEREXAMPLE FOUND") << " ("
                  << result.instances_checked << " instances, "
                  << (result.exhaustive ? "exhaustive" : "random")
                  << (result.complete ? "" : ", INCOMPLETE: budget exceeded") << ")\n";
        if (result.witness) std::cout << result.witness->dump(2) << "\n";
    }
    return result.ok() ? kExitPass : kExitCheckFailure;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"mftop -- finite multi-fuzzy topology toolkit"};
    app.require_subcommand(1);

    GlobalOptions global;
    app.add_option("--seed", global.seed, "PRNG seed recorded in every report");
    app.add_option("--budget-ms", global.budget_ms,
                   "time budget in milliseconds (0 = unlimited); the "
                   "MFTOP_BUDGET_MS environment variable overrides this");
    app.add_option("--format", global.format, "report format")
        ->check(CLI::IsMember({"json", "text"}));
    app.add_flag("--no-verify", global.no_verify, "skip axiom verification of input documents");

    std::string path1, path2, point, map_name, criteria = "all", checks = "all";
    std::size_t max_cover_size = 4;
    std::string proposition, mutation = "none";
    mftop::MineBounds bounds;

    CLI::App* verify = app.add_subcommand("verify", "check the topology axioms of a document");
    verify->add_option("space", path1, "space document")->required();

    CLI::App* nbd = app.add_subcommand("nbd", "derive and verify neighbourhood families");
    nbd->add_option("space", path1, "space document")->required();
    nbd->add_option("--point", point, "restrict output to one point");

    CLI::App* roundtrip =
        app.add_subcommand("roundtrip", "neighbourhood system round trip tau -> L -> tau");
    roundtrip->add_option("space", path1, "space document")->required();

    CLI::App* continuity = app.add_subcommand("continuity", "evaluate continuity criteria");
    continuity->add_option("domain", path1, "domain space document")->required();
    continuity->add_option("codomain", path2, "codomain space document (defaults to domain)");
    continuity->add_option("--map", map_name, "map name in the domain document");
    continuity->add_option("--criteria", criteria,
                           "all or comma list: open-preimage,closed-preimage,"
                           "nbd-pullback,nbd-witness");

    CLI::App* homeo = app.add_subcommand("homeo", "check for a homeomorphism");
    homeo->add_option("domain", path1, "domain space document")->required();
    homeo->add_option("codomain", path2, "codomain space document (defaults to domain)");
    homeo->add_option("--map", map_name, "map name in the domain document");

    CLI::App* product = app.add_subcommand("product", "product space checks");
    product->add_option("first", path1, "first factor document")->required();
    product->add_option("second", path2, "second factor document")->required();
    product->add_option("--check", checks, "comma list of base,projections,compact");

    CLI::App* base = app.add_subcommand("base", "minimal open base and second countability");
    base->add_option("space", path1, "space document")->required();

    CLI::App* compact = app.add_subcommand("compact", "open-cover compactness check");
    compact->add_option("space", path1, "space document")->required();
    compact->add_option("--max-cover-size", max_cover_size,
                        "exhaustive cover enumeration cap");

    CLI::App* mine = app.add_subcommand("mine", "mine counterexamples to a proposition");
    mine->add_option("proposition", proposition, "proposition id, e.g. 2.18")->required();
    mine->add_option("--max-points", bounds.max_points, "universe size bound");
    mine->add_option("--dim", bounds.max_dim, "dimension bound");
    mine->add_option("--max-den", bounds.max_den, "grade denominator bound");
    mine->add_option("--samples", bounds.samples, "random samples (0 = exhaustive/default)");
    mine->add_option("--mutate", mutation, "fault injection: none or drop-n1");

    // Let global flags appear after the subcommand name as well.
    for (CLI::App* sub : app.get_subcommands(nullptr)) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return kExitUsage;
    }

    const auto started = std::chrono::steady_clock::now();
    int code = kExitPass;
    try {
        if (verify->parsed()) code = run_verify(global, path1);
        else if (nbd->parsed()) code = run_nbd(global, path1, point);
        else if (roundtrip->parsed()) code = run_roundtrip(global, path1);
        else if (continuity->parsed())
            code = run_continuity(global, path1, path2, map_name, criteria);
        else if (homeo->parsed()) code = run_homeo(global, path1, path2, map_name);
        else if (product->parsed()) code = run_product(global, path1, path2, checks);
        else if (base->parsed()) code = run_base(global, path1);
        else if (compact->parsed()) code = run_compact(global, path1, max_cover_size);
        else if (mine->parsed()) code = run_mine(global, proposition, bounds, mutation);
    } catch (const mftop::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInputError;
    }
    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - started);
    std::cerr << "elapsed_ms: " << elapsed.count() << "\n";
    return code;
}
