// hg: command line front end for the hat guessing library.
//
// Exit codes partition outcomes:
//   0  success: Winning verification, object built/solved/handled, report done
//   1  usage or input error (also internal contract violations)
//   2  a successful attack: counterexample, defeating coloring, failed check
//   3  NotFound / infeasible / not winnable / over budget / clean sample scan
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "hatg/book.hpp"
#include "hatg/clique_handler.hpp"
#include "hatg/errors.hpp"
#include "hatg/game.hpp"
#include "hatg/graph.hpp"
#include "hatg/json_io.hpp"
#include "hatg/linear.hpp"
#include "hatg/planar.hpp"
#include "hatg/randgraph.hpp"
#include "hatg/rng.hpp"
#include "hatg/solve.hpp"
#include "hatg/strategy.hpp"

namespace {

using nlohmann::json;

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kAttack = 2;
constexpr int kNotFound = 3;

struct Global {
    std::uint64_t seed = 0;
    std::uint64_t budget = hatg::kDefaultBudget;
    std::string out;
    std::string format = "json";
    CLI::Option* seed_opt = nullptr;

    // Explicit seed when given; otherwise a recorded random one.
    std::uint64_t take_seed() {
        if (seed_opt != nullptr && seed_opt->count() == 0) {
            std::random_device rd;
            seed = (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
        }
        return seed;
    }
};

std::string csv_scalar(const json& value) {
    if (value.is_string()) return value.get<std::string>();
    return value.dump();
}

std::string to_csv(const json& report) {
    std::string text;
    if (report.contains("rows") && report.at("rows").is_array() &&
        !report.at("rows").empty()) {
        const json& rows = report.at("rows");
        bool first = true;
        for (const auto& [key, value] : rows.front().items()) {
            (void)value;
            if (!first) text += ",";
            text += key;
            first = false;
        }
        text += "\n";
        for (const auto& row : rows) {
            first = true;
            for (const auto& [key, value] : row.items()) {
                (void)key;
                if (!first) text += ",";
                text += csv_scalar(value);
                first = false;
            }
            text += "\n";
        }
        return text;
    }
    text = "key,value\n";
    for (const auto& [key, value] : report.items()) {
        if (value.is_object() || value.is_array()) continue;
        text += key + "," + csv_scalar(value) + "\n";
    }
    return text;
}

void emit(const Global& g, const json& report) {
    const std::string text =
        g.format == "csv" ? to_csv(report) : hatg::json::dump_report(report);
    if (g.out.empty()) {
        std::cout << text;
    } else {
        std::ofstream file(g.out);
        if (!file) throw hatg::InvalidInputError("cannot write '" + g.out + "'");
        file << text;
    }
}

json base_config(const Global& g) {
    return {{"budget", g.budget}, {"format", g.format}, {"out", g.out}};
}

// Loads a JSON document, unwrapping a report written by `--out`: when the top
// level carries `key`, the nested document under it is used instead, so build
// and solve reports feed the verify commands directly.
json load_document(const std::string& path, const char* key) {
    json doc = hatg::json::load_file(path);
    if (doc.is_object() && doc.contains(key)) return doc.at(key);
    return doc;
}

json coloring_json(const hatg::Coloring& c) { return hatg::json::to_json(c); }

json clique_strategy_json(const hatg::CliqueStrategy& s) {
    json tables = json::array();
    for (const auto& table : s.tables) {
        json rows = json::array();
        for (const auto& [obs, guess] : table) {
            rows.push_back({{"obs", obs}, {"guess", guess}});
        }
        tables.push_back(std::move(rows));
    }
    return {{"d", s.d}, {"q", s.q}, {"tables", std::move(tables)}};
}

hatg::StrategyProfile load_or_random_profile(const std::string& spec, int q, int n,
                                             std::uint64_t seed) {
    if (spec == "random") {
        std::vector<hatg::Guesser> guessers;
        guessers.reserve(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) {
            guessers.emplace_back(hatg::make_seeded_random_guesser(q, v, seed));
        }
        return hatg::StrategyProfile(q, std::move(guessers));
    }
    return hatg::json::profile_from_json(load_document(spec, "witness"));
}

// ---------------------------------------------------------------- verify

struct VerifyCmd {
    Global* g;
    std::string graph_path;
    std::string strategy_path;
    int q = 0;
    std::uint64_t samples = 0;

    int run() {
        const hatg::Graph graph =
            hatg::json::graph_from_json(hatg::json::load_file(graph_path));
        const hatg::StrategyProfile profile =
            hatg::json::profile_from_json(load_document(strategy_path, "witness"));
        if (q != 0 && q != profile.q()) {
            throw hatg::InvalidInputError("--q disagrees with the strategy file");
        }
        json config = base_config(*g);
        config["graph"] = graph_path;
        config["strategy"] = strategy_path;
        config["samples"] = samples;
        json report = {{"command", "verify"}, {"config", std::move(config)}};

        hatg::VerifyOutcome outcome;
        if (samples == 0) {
            outcome = hatg::verify_exhaustive(graph, profile, g->budget);
        } else {
            report["config"]["seed"] = g->take_seed();
            outcome = hatg::verify_sampled(graph, profile, samples, g->seed);
        }
        report["checked"] = outcome.checked;
        if (outcome.kind == hatg::VerifyOutcome::Kind::winning) {
            report["winning"] = true;
            emit(*g, report);
            return kOk;
        }
        if (outcome.kind == hatg::VerifyOutcome::Kind::counterexample) {
            report["winning"] = false;
            report["counterexample"] = coloring_json(*outcome.counterexample);
            emit(*g, report);
            return kAttack;
        }
        report["none_found"] = true;
        emit(*g, report);
        return kNotFound;
    }
};

// ----------------------------------------------------------------- solve

struct SolveCmd {
    Global* g;
    std::string graph_path;
    int q = 0;

    int run() {
        const hatg::Graph graph =
            hatg::json::graph_from_json(hatg::json::load_file(graph_path));
        json config = base_config(*g);
        config["graph"] = graph_path;
        config["q"] = q;
        json report = {{"command", "solve"}, {"config", std::move(config)}};
        const hatg::SolveResult result = hatg::solve_hg(graph, q, g->budget);
        report["winnable"] = result.winnable;
        report["nodes"] = result.nodes;
        if (result.winnable) {
            report["witness"] = hatg::json::to_json(*result.witness);
            emit(*g, report);
            return kOk;
        }
        emit(*g, report);
        return kNotFound;
    }
};

// ------------------------------------------------------------- handle-set

struct HandleSetCmd {
    Global* g;
    std::string input_path;

    int run() {
        const hatg::KnownSet set =
            hatg::json::known_set_from_json(hatg::json::load_file(input_path));
        json config = base_config(*g);
        config["input"] = input_path;
        json report = {{"command", "handle-set"}, {"config", std::move(config)}};
        const hatg::HandleOutcome outcome = hatg::handle_known_set(set, g->budget);
        report["feasible"] = outcome.feasible();
        report["nodes"] = outcome.nodes;
        if (outcome.feasible()) {
            report["strategy"] = clique_strategy_json(*outcome.strategy);
            emit(*g, report);
            return kOk;
        }
        report["certificate"] = {{"nodes_explored", outcome.certificate->nodes_explored},
                                 {"reduced_space", outcome.certificate->reduced_space}};
        emit(*g, report);
        return kNotFound;
    }
};

// ---------------------------------------------------------- planar build

struct PlanarBuildCmd {
    Global* g;
    int q = 0;
    int t = -1;
    bool full = false;

    int run() {
        json config = base_config(*g);
        config["q"] = q;
        config["full"] = full;
        hatg::planar::PairFunctionFamily family;
        if (full) {
            family = hatg::planar::build_full_family(q, g->budget);
        } else {
            const int t_used = t > 0 ? t : q / 2;
            config["t"] = t_used;
            config["seed"] = g->take_seed();
            family = hatg::planar::build_cover_family(q, t_used, g->seed, g->budget);
        }
        json report = {{"command", "planar build"},
                       {"config", std::move(config)},
                       {"members", family.members.size()},
                       {"cover_verified", family.cover_verified},
                       {"family", hatg::json::to_json(family)}};
        emit(*g, report);
        return kOk;
    }
};

// --------------------------------------------------------- planar verify

struct PlanarVerifyCmd {
    Global* g;
    std::string family_path;
    int full_q = 0;
    std::uint64_t samples = 0;

    int run() {
        json config = base_config(*g);
        config["samples"] = samples;
        hatg::planar::CoverCheck check;
        if (full_q > 0) {
            config["full_q"] = full_q;
            if (samples == 0) {
                check = hatg::planar::verify_full_cover_exact(full_q, g->budget);
            } else {
                config["seed"] = g->take_seed();
                check = hatg::planar::verify_full_cover_sampled(full_q, samples, g->seed);
            }
        } else {
            if (family_path.empty()) {
                throw hatg::InvalidInputError("provide --family or --full-q");
            }
            config["family"] = family_path;
            hatg::planar::PairFunctionFamily family =
                hatg::json::pair_family_from_json(load_document(family_path, "family"));
            if (samples == 0) {
                check = hatg::planar::verify_cover_family(family, g->budget);
            } else {
                config["seed"] = g->take_seed();
                check = hatg::planar::verify_cover_family_sampled(family, samples, g->seed);
            }
        }
        json report = {{"command", "planar verify"},
                       {"config", std::move(config)},
                       {"ok", check.ok},
                       {"exact", check.exact},
                       {"subsets_checked", check.subsets_checked}};
        if (check.violating_subset) report["violating_subset"] = *check.violating_subset;
        emit(*g, report);
        return check.ok ? kOk : kAttack;
    }
};

// --------------------------------------------------------- planar attack

struct PlanarAttackCmd {
    Global* g;
    int m = 0;
    std::string strategy = "random";

    int run() {
        json config = base_config(*g);
        config["m"] = m;
        config["strategy"] = strategy;
        const hatg::Graph graph = hatg::Graph::planar_construction(13, m);
        std::uint64_t seed = 0;
        if (strategy == "random") {
            seed = g->take_seed();
            config["seed"] = seed;
        }
        const hatg::StrategyProfile profile =
            load_or_random_profile(strategy, 13, graph.vertex_count(), seed);
        const hatg::Coloring defeat = hatg::planar::adversary_13(graph, profile);
        json report = {{"command", "planar attack"},
                       {"config", std::move(config)},
                       {"all_wrong", true},
                       {"coloring", coloring_json(defeat)}};
        emit(*g, report);
        return kAttack;
    }
};

// ------------------------------------------------------------ book build

struct BookBuildCmd {
    Global* g;
    int d = 0;
    int q = 0;
    std::uint64_t m = 0;
    std::uint64_t s = 0;
    int retries = 32;

    int run() {
        hatg::book::BookParameters params;
        if (q > 0 || m > 0 || s > 0) {
            if (q <= 0 || m == 0 || s == 0) {
                throw hatg::InvalidInputError("give all of --q, --m, --s or none");
            }
            params = {d, q, m, s};
        } else {
            params = hatg::book::lemma_parameters(d);
        }
        json config = base_config(*g);
        config["d"] = params.d;
        config["q"] = params.q;
        config["m"] = params.m;
        config["s"] = params.s;
        config["retries"] = retries;
        config["seed"] = g->take_seed();
        hatg::book::BuildOptions options;
        options.retries = retries;
        const hatg::book::OntoFamily family =
            hatg::book::build_onto_family(params, g->seed, options);
        json report = {{"command", "book build"},
                       {"config", std::move(config)},
                       {"verified",
                        family.verified == hatg::book::OntoFamily::Verified::exact
                            ? "exact"
                            : "sampled"},
                       {"family", hatg::json::to_json(family)}};
        emit(*g, report);
        return kOk;
    }
};

// ----------------------------------------------------------- book verify

struct BookVerifyCmd {
    Global* g;
    std::string family_path;
    std::uint64_t samples = 0;

    int run() {
        hatg::book::OntoFamily family =
            hatg::json::onto_family_from_json(load_document(family_path, "family"));
        json config = base_config(*g);
        config["family"] = family_path;
        config["samples"] = samples;
        hatg::book::OntoCheck check;
        if (samples == 0) {
            check = hatg::book::verify_onto_family(family, g->budget);
        } else {
            config["seed"] = g->take_seed();
            check = hatg::book::verify_onto_family_sampled(family, samples, g->seed);
        }
        json report = {{"command", "book verify"},
                       {"config", std::move(config)},
                       {"ok", check.ok},
                       {"exact", check.exact},
                       {"subsets_checked", check.subsets_checked}};
        if (check.violating_subset) report["violating_subset"] = *check.violating_subset;
        emit(*g, report);
        return check.ok ? kOk : kAttack;
    }
};

// ---------------------------------------------------------- linear common

hatg::linear::LinearStrategy load_or_random_linear(const std::string& spec, int n, int m,
                                                   int p, std::uint64_t seed) {
    if (spec == "random") {
        return hatg::linear::random_linear_strategy(n, m, p, seed);
    }
    hatg::linear::LinearStrategy strategy =
        hatg::json::linear_from_json(hatg::json::load_file(spec));
    if ((n != 0 && n != strategy.n) || (m != 0 && m != strategy.m) ||
        (p != 0 && p != strategy.p)) {
        throw hatg::InvalidInputError("--n/--m/--p disagree with the strategy file");
    }
    return strategy;
}

// ---------------------------------------------------------- linear defeat

struct LinearDefeatCmd {
    Global* g;
    int n = 0;
    int m = 0;
    int p = 0;
    std::string strategy = "random";
    int retries = 64;

    int run() {
        json config = base_config(*g);
        config["n"] = n;
        config["m"] = m;
        config["p"] = p;
        config["strategy"] = strategy;
        config["retries"] = retries;
        config["seed"] = g->take_seed();
        const hatg::linear::LinearStrategy linear = load_or_random_linear(
            strategy, n, m, p, hatg::derive_seed(g->seed, 0x57a7));
        const hatg::linear::DefeatOutcome outcome =
            hatg::linear::defeat_linear(linear, g->seed, retries);
        json report = {{"command", "linear defeat"},
                       {"config", std::move(config)},
                       {"retries_used", outcome.retries_used}};
        if (outcome.coloring) {
            report["coloring"] = coloring_json(*outcome.coloring);
            emit(*g, report);
            return kAttack;
        }
        report["not_found"] = true;
        emit(*g, report);
        return kNotFound;
    }
};

// ---------------------------------------------------------- linear spread

struct LinearSpreadCmd {
    Global* g;
    std::string family_path;
    std::string strategy;
    std::string kind = "F";
    int n = 0;
    int m = 0;
    int p = 0;

    hatg::linear::SpreadFamily load_family(std::uint64_t seed) const {
        if (!family_path.empty()) {
            return hatg::json::spread_family_from_json(load_document(family_path, "family"));
        }
        if (strategy.empty()) {
            throw hatg::InvalidInputError("provide --family or --strategy");
        }
        if (kind != "F" && kind != "G") {
            throw hatg::InvalidInputError("--kind must be F or G");
        }
        return hatg::linear::implicit_family(
            kind == "F" ? hatg::linear::FamilyKind::F : hatg::linear::FamilyKind::G,
            load_or_random_linear(strategy, n, m, p, seed));
    }

    int run() {
        json config = base_config(*g);
        config["family"] = family_path;
        config["strategy"] = strategy;
        config["kind"] = kind;
        std::uint64_t seed = 0;
        if (strategy == "random") {
            seed = g->take_seed();
            config["seed"] = seed;
        }
        const hatg::linear::SpreadFamily family = load_family(seed);
        const hatg::linear::SpreadReport spread =
            hatg::linear::spread_value(family, g->budget);
        json report = {{"command", "linear spread"},
                       {"config", std::move(config)},
                       {"r_star", spread.r_star},
                       {"members", spread.members},
                       {"argmin", spread.argmin},
                       {"argmin_count", spread.argmin_count},
                       {"subsets_counted", spread.subsets_counted}};
        emit(*g, report);
        return kOk;
    }
};

// ----------------------------------------------------------- linear trial

struct LinearTrialCmd {
    Global* g;
    std::string family_path;
    std::string strategy;
    std::string kind = "F";
    int n = 0;
    int m = 0;
    int p = 0;
    double r = 2.0;
    int trials = 1000;

    int run() {
        json config = base_config(*g);
        config["family"] = family_path;
        config["strategy"] = strategy;
        config["kind"] = kind;
        config["r"] = r;
        config["trials"] = trials;
        config["seed"] = g->take_seed();
        LinearSpreadCmd loader{g, family_path, strategy, kind, n, m, p};
        hatg::linear::SpreadFamily family =
            loader.load_family(hatg::derive_seed(g->seed, 0x57a7));
        family.ground.r = r;
        const hatg::linear::TrialReport trial =
            hatg::linear::spread_lemma_trial(family, trials, g->seed);
        json report = {{"command", "linear trial"},
                       {"config", std::move(config)},
                       {"trials", trial.trials},
                       {"successes", trial.successes},
                       {"frequency", trial.frequency},
                       {"r_times_log_2w",
                        family.ground.r * std::log(2.0 * family.ground.w())}};
        try {
            report["r_star"] = hatg::linear::spread_value(family, g->budget).r_star;
        } catch (const hatg::BudgetError&) {
            // spread enumeration can exceed the budget; the trial stands alone
        }
        emit(*g, report);
        return kOk;
    }
};

// ---------------------------------------------------- randgraph experiment

struct RandgraphExperimentCmd {
    Global* g;
    std::vector<int> sizes;
    int seeds = 5;
    int d_override = 0;
    std::uint64_t clique_cap = 10'000;

    int run() {
        if (sizes.empty()) throw hatg::InvalidInputError("--sizes must list graph sizes");
        if (seeds < 1) throw hatg::InvalidInputError("--seeds must be positive");
        json config = base_config(*g);
        config["sizes"] = sizes;
        config["seeds"] = seeds;
        config["d"] = d_override;
        config["clique_cap"] = clique_cap;
        config["seed"] = g->take_seed();
        hatg::randgraph::FindBookOptions find_options;
        find_options.clique_cap = clique_cap;
        json rows = json::array();
        std::uint64_t counter = 0;
        for (const int n : sizes) {
            for (int t = 0; t < seeds; ++t) {
                const std::uint64_t row_seed = hatg::derive_seed(g->seed, counter++);
                const hatg::randgraph::GnpSample sample =
                    hatg::randgraph::sample_gnp(n, row_seed);
                const hatg::randgraph::LowerBoundReport row =
                    hatg::randgraph::certified_lower_bound(sample, d_override, {},
                                                           find_options);
                rows.push_back({{"n", row.n},
                                {"seed", row.seed},
                                {"d", row.d},
                                {"m_found", row.m_found},
                                {"q_certified", row.q_certified},
                                {"wall_ms", row.wall_ms}});
            }
        }
        json report = {{"command", "randgraph experiment"},
                       {"config", std::move(config)},
                       {"rows", std::move(rows)}};
        emit(*g, report);
        return kOk;
    }
};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"hat guessing game toolkit"};
    app.require_subcommand(1);

    Global global;
    global.seed_opt = app.add_option("--seed", global.seed, "seed for randomized steps");
    app.add_option("--budget", global.budget, "exact-enumeration budget");
    app.add_option("--out", global.out, "write the report to this path");
    app.add_option("--format", global.format, "report format")
        ->check(CLI::IsMember({"json", "csv"}));

    int exit_code = kOk;
    const auto wire = [&exit_code](CLI::App* cmd, auto runner) {
        cmd->fallthrough();
        cmd->callback([&exit_code, runner]() mutable { exit_code = runner->run(); });
    };

    VerifyCmd verify{&global, "", "", 0, 0};
    auto* verify_cmd = app.add_subcommand("verify", "check a strategy against a graph");
    verify_cmd->add_option("--graph", verify.graph_path, "graph JSON")->required();
    verify_cmd->add_option("--strategy", verify.strategy_path, "strategy JSON")->required();
    verify_cmd->add_option("--q", verify.q, "cross-check the palette size");
    verify_cmd->add_option("--samples", verify.samples,
                           "sampled scan count (0 = exhaustive)");
    wire(verify_cmd, &verify);

    SolveCmd solve{&global, "", 0};
    auto* solve_cmd = app.add_subcommand("solve", "search for a winning profile");
    solve_cmd->add_option("--graph", solve.graph_path, "graph JSON")->required();
    solve_cmd->add_option("--q", solve.q, "palette size")->required();
    wire(solve_cmd, &solve);

    HandleSetCmd handle{&global, ""};
    auto* handle_cmd = app.add_subcommand("handle-set", "clique strategy for a known set");
    handle_cmd->add_option("--input", handle.input_path, "known set JSON")->required();
    wire(handle_cmd, &handle);

    auto* planar_cmd = app.add_subcommand("planar", "pair-function constructions");
    planar_cmd->require_subcommand(1);
    planar_cmd->fallthrough();

    PlanarBuildCmd planar_build{&global, 0, -1, false};
    auto* planar_build_cmd = planar_cmd->add_subcommand("build", "build a pair family");
    planar_build_cmd->add_option("--q", planar_build.q, "palette size")->required();
    planar_build_cmd->add_option("--t", planar_build.t, "cover subset size (default q/2)");
    planar_build_cmd->add_flag("--full", planar_build.full, "materialize the full family");
    wire(planar_build_cmd, &planar_build);

    PlanarVerifyCmd planar_verify{&global, "", 0, 0};
    auto* planar_verify_cmd = planar_cmd->add_subcommand("verify", "check the cover property");
    planar_verify_cmd->add_option("--family", planar_verify.family_path, "family JSON");
    planar_verify_cmd->add_option("--full-q", planar_verify.full_q,
                                  "check the implicit full family at this q");
    planar_verify_cmd->add_option("--samples", planar_verify.samples,
                                  "sampled subsets (0 = exhaustive)");
    wire(planar_verify_cmd, &planar_verify);

    PlanarAttackCmd planar_attack{&global, 0, "random"};
    auto* planar_attack_cmd =
        planar_cmd->add_subcommand("attack", "defeat a 13-color profile");
    planar_attack_cmd->add_option("--m", planar_attack.m, "outer pair count")->required();
    planar_attack_cmd->add_option("--strategy", planar_attack.strategy,
                                  "strategy JSON path or 'random'");
    wire(planar_attack_cmd, &planar_attack);

    auto* book_cmd = app.add_subcommand("book", "onto families on book graphs");
    book_cmd->require_subcommand(1);
    book_cmd->fallthrough();

    BookBuildCmd book_build{&global, 0, 0, 0, 0, 32};
    auto* book_build_cmd = book_cmd->add_subcommand("build", "build an onto family");
    book_build_cmd->add_option("--d", book_build.d, "clique size")->required();
    book_build_cmd->add_option("--q", book_build.q, "palette size");
    book_build_cmd->add_option("--m", book_build.m, "member count");
    book_build_cmd->add_option("--s", book_build.s, "onto threshold");
    book_build_cmd->add_option("--retries", book_build.retries, "build retries");
    wire(book_build_cmd, &book_build);

    BookVerifyCmd book_verify{&global, "", 0};
    auto* book_verify_cmd = book_cmd->add_subcommand("verify", "check the onto property");
    book_verify_cmd->add_option("--family", book_verify.family_path, "family JSON")
        ->required();
    book_verify_cmd->add_option("--samples", book_verify.samples,
                                "sampled subsets (0 = exhaustive)");
    wire(book_verify_cmd, &book_verify);

    auto* linear_cmd = app.add_subcommand("linear", "affine strategies and spread families");
    linear_cmd->require_subcommand(1);
    linear_cmd->fallthrough();

    LinearDefeatCmd linear_defeat{&global, 0, 0, 0, "random", 64};
    auto* linear_defeat_cmd = linear_cmd->add_subcommand("defeat", "defeat an affine profile");
    linear_defeat_cmd->add_option("--n", linear_defeat.n, "part size")->required();
    linear_defeat_cmd->add_option("--m", linear_defeat.m, "part count")->required();
    linear_defeat_cmd->add_option("--p", linear_defeat.p, "prime modulus")->required();
    linear_defeat_cmd->add_option("--strategy", linear_defeat.strategy,
                                  "strategy JSON path or 'random'");
    linear_defeat_cmd->add_option("--retries", linear_defeat.retries, "sampled splits");
    wire(linear_defeat_cmd, &linear_defeat);

    LinearSpreadCmd linear_spread{&global, "", "", "F", 0, 0, 0};
    auto* linear_spread_cmd = linear_cmd->add_subcommand("spread", "exact spread value");
    linear_spread_cmd->add_option("--family", linear_spread.family_path, "family JSON");
    linear_spread_cmd->add_option("--strategy", linear_spread.strategy,
                                  "strategy JSON path or 'random'");
    linear_spread_cmd->add_option("--kind", linear_spread.kind, "family kind F or G");
    linear_spread_cmd->add_option("--n", linear_spread.n, "part size");
    linear_spread_cmd->add_option("--m", linear_spread.m, "part count");
    linear_spread_cmd->add_option("--p", linear_spread.p, "prime modulus");
    wire(linear_spread_cmd, &linear_spread);

    LinearTrialCmd linear_trial{&global, "", "", "F", 0, 0, 0, 2.0, 1000};
    auto* linear_trial_cmd =
        linear_cmd->add_subcommand("trial", "empirical containment frequency");
    linear_trial_cmd->add_option("--family", linear_trial.family_path, "family JSON");
    linear_trial_cmd->add_option("--strategy", linear_trial.strategy,
                                 "strategy JSON path or 'random'");
    linear_trial_cmd->add_option("--kind", linear_trial.kind, "family kind F or G");
    linear_trial_cmd->add_option("--n", linear_trial.n, "part size");
    linear_trial_cmd->add_option("--m", linear_trial.m, "part count");
    linear_trial_cmd->add_option("--p", linear_trial.p, "prime modulus");
    linear_trial_cmd->add_option("--r", linear_trial.r, "sampling parameter");
    linear_trial_cmd->add_option("--trials", linear_trial.trials, "trial count");
    wire(linear_trial_cmd, &linear_trial);

    auto* randgraph_cmd = app.add_subcommand("randgraph", "random graph experiments");
    randgraph_cmd->require_subcommand(1);
    randgraph_cmd->fallthrough();

    RandgraphExperimentCmd experiment{&global, {}, 5, 0, 10'000};
    auto* experiment_cmd =
        randgraph_cmd->add_subcommand("experiment", "certified lower bounds on G(n,1/2)");
    experiment_cmd->add_option("--sizes", experiment.sizes, "graph sizes")
        ->required()
        ->delimiter(',');
    experiment_cmd->add_option("--seeds", experiment.seeds, "samples per size");
    experiment_cmd->add_option("--d", experiment.d_override, "clique size override");
    experiment_cmd->add_option("--k-max", experiment.clique_cap, "clique search cap");
    wire(experiment_cmd, &experiment);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    } catch (const hatg::BudgetError& e) {
        std::cerr << "over budget: " << e.what();
        if (!e.count_decimal().empty()) std::cerr << " (count " << e.count_decimal() << ")";
        std::cerr << "\n";
        return kNotFound;
    } catch (const hatg::SearchError& e) {
        std::cerr << "search failed: " << e.what() << "\n";
        return kNotFound;
    } catch (const hatg::InvalidInputError& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kUsage;
    } catch (const hatg::ContractError& e) {
        std::cerr << "internal contract violation: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return exit_code;
}
