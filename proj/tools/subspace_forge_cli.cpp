// subspace-forge: construct, verify, bound, search and batch-encode families
// of subspaces. All machine output is JSON on stdout (or --out).
//
// Exit codes: 0 ok, 1 internal error, 2 bad parameters, 3 malformed input,
// 4 size guard exceeded.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "subspace_forge/batch.hpp"
#include "subspace_forge/constructions.hpp"
#include "subspace_forge/errors.hpp"
#include "subspace_forge/json_io.hpp"
#include "subspace_forge/search.hpp"

namespace sf = subspace_forge;
using sf::json;

namespace {

constexpr int kExitParams = 2;
constexpr int kExitParse = 3;
constexpr int kExitGuard = 4;

struct Globals {
    unsigned threads = 0;
    bool pretty = false;
    std::string out;
};

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw sf::FormatError("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw sf::FormatError(path + ": " + e.what());
    }
}

void print_pretty(std::ostream& os, const json& j, const std::string& indent = "") {
    for (const auto& [key, value] : j.items()) {
        if (value.is_object()) {
            os << indent << key << ":\n";
            print_pretty(os, value, indent + "  ");
        } else {
            os << indent << key << ": " << value.dump() << "\n";
        }
    }
}

void emit(const Globals& g, const std::string& command, const json& params, std::uint64_t seed, json result,
          std::chrono::steady_clock::time_point start) {
    const auto digest = sf::json_digest(result);
    const auto elapsed =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream hex;
    hex << std::hex << digest;
    result["manifest"] = {{"command", command},
                          {"parameters", params},
                          {"seed", seed},
                          {"tool_version", SUBSPACE_FORGE_VERSION},
                          {"wall_time_ms", elapsed},
                          {"output_digest", hex.str()}};
    std::ofstream file;
    if (!g.out.empty()) {
        file.open(g.out);
        if (!file) throw sf::ParameterError("cannot write " + g.out);
    }
    std::ostream& os = g.out.empty() ? std::cout : file;
    if (g.pretty)
        print_pretty(os, result);
    else
        os << result.dump() << "\n";
}

sf::Family demo_family() {
    const auto f = sf::Field::make(2, 1);
    std::vector<sf::Subspace> lines;
    for (const sf::Vec& v : {sf::Vec{1, 0, 0}, sf::Vec{0, 1, 0}, sf::Vec{0, 0, 1}, sf::Vec{1, 1, 1}})
        lines.push_back(sf::Subspace::from_generators(f, 3, {v}));
    return sf::Family(f, 3, 1, std::move(lines));
}

sf::Properties parse_properties(const std::string& list) {
    sf::Properties p{false, false, false, false, false};
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item == "spread")
            p.spread = true;
        else if (item == "aad")
            p.aad = true;
        else if (item == "as")
            p.as = true;
        else if (item == "thm1")
            p.thm1 = true;
        else if (item == "relations")
            p.relations = true;
        else
            throw sf::ParameterError("unknown property \"" + item + "\"");
    }
    return p;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Constructions, verifiers and bounds for almost affinely disjoint subspace families"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_option("--threads", g.threads, "Worker threads (default: all cores)");
    app.add_flag("--pretty", g.pretty, "Human-readable output instead of JSON");
    app.add_option("--out", g.out, "Write output to this file instead of stdout");

    // construct
    auto* construct = app.add_subcommand("construct", "Build a family and print it as JSON");
    std::string kind;
    std::size_t n = 0, k = 0, rows = 3;
    std::uint64_t L = 0, q = 0, seed = 0, max_rounds = 10'000;
    std::string matrix_file;
    construct->add_option("kind", kind, "rs | random | code-based")
        ->required()
        ->check(CLI::IsMember({"rs", "random", "code-based"}));
    construct->add_option("--n", n, "Ambient dimension");
    construct->add_option("--k", k, "Subspace dimension")->required();
    construct->add_option("--L", L, "Target AS parameter (random)");
    construct->add_option("--q", q, "Field order (prime power)");
    construct->add_option("--seed", seed, "64-bit seed (random)");
    construct->add_option("--max-rounds", max_rounds, "Pruning rounds (random)");
    construct->add_option("--rows", rows, "Vandermonde rows (code-based)");
    construct->add_option("--matrix", matrix_file, "Parity-check matrix JSON {field, matrix} (code-based)");

    // verify
    auto* verify = app.add_subcommand("verify", "Verify a family JSON file");
    std::string family_file, properties = "spread,aad,as,thm1,relations";
    verify->add_option("family", family_file, "Family JSON file")->required();
    verify->add_option("--properties", properties, "Comma list of spread,aad,as,thm1,relations");

    // bounds
    auto* bounds = app.add_subcommand("bounds", "Closed-form bounds for (n, k, L, q)");
    bounds->add_option("--n", n)->required();
    bounds->add_option("--k", k)->required();
    bounds->add_option("--L", L)->required();
    bounds->add_option("--q", q)->required();

    // search
    auto* search = app.add_subcommand("search", "Search for a maximum AAD family");
    std::string mode = "exhaustive";
    std::uint64_t budget = 10'000'000;
    bool no_symmetry = false;
    search->add_option("--n", n)->required();
    search->add_option("--k", k)->required();
    search->add_option("--L", L)->required();
    search->add_option("--q", q)->required();
    search->add_option("--mode", mode)->check(CLI::IsMember({"exhaustive", "greedy"}));
    search->add_option("--budget", budget, "Node budget for exhaustive mode");
    search->add_option("--seed", seed, "Seed for greedy mode");
    search->add_flag("--no-symmetry-break", no_symmetry);

    // batch
    auto* batch = app.add_subcommand("batch", "Batch code from an AAD family (default: 4 lines in F_2^3)");
    std::string batch_mode = "exhaustive";
    std::uint64_t s_override = 0, trials = 1000;
    bool layout = false;
    batch->add_option("--family", family_file, "Family JSON file");
    batch->add_option("--s", s_override, "Request multiset size (default floor(|F|/L))");
    batch->add_option("--mode", batch_mode)->check(CLI::IsMember({"exhaustive", "sampled"}));
    batch->add_option("--trials", trials, "Sampled multisets");
    batch->add_option("--seed", seed);
    batch->add_flag("--layout", layout, "Include the position map");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitParams;
    }

    const auto start = std::chrono::steady_clock::now();
    sf::VerifyOptions vopts;
    vopts.threads = g.threads;

    try {
        if (*construct) {
            json params = {{"kind", kind}, {"n", n}, {"k", k}};
            json result;
            if (kind == "rs") {
                if (n == 0 || q == 0) throw sf::ParameterError("construct rs needs --n and --q");
                params["q"] = q;
                result = sf::family_json(sf::build_rs_family(n, k, sf::Field::of_order(q)));
            } else if (kind == "random") {
                if (n == 0 || q == 0) throw sf::ParameterError("construct random needs --n and --q");
                params["q"] = q;
                params["L"] = L;
                sf::RandomBuildOptions ro;
                ro.n = n;
                ro.k = k;
                ro.L = L;
                ro.seed = seed;
                ro.max_rounds = max_rounds;
                ro.verify = vopts;
                const auto r = sf::build_random_family(sf::Field::of_order(q), ro);
                result = sf::family_json(r.family);
                result["diagnostics"] = {{"sampled", r.sampled},
                                         {"removed_for_spread", r.removed_for_spread},
                                         {"removed_for_as", r.removed_for_as},
                                         {"rounds", r.rounds},
                                         {"converged", r.converged},
                                         {"L_as", r.final_L_as}};
            } else {
                sf::Matrix h = [&] {
                    if (!matrix_file.empty()) {
                        const json mj = read_json_file(matrix_file);
                        if (!mj.contains("field") || !mj.contains("matrix"))
                            throw sf::FormatError("matrix file needs \"field\" and \"matrix\"");
                        const auto f = sf::parse_field(mj["field"]);
                        return sf::parse_matrix(mj["matrix"], f);
                    }
                    if (q == 0) throw sf::ParameterError("construct code-based needs --q or --matrix");
                    const auto f = sf::Field::of_order(q);
                    const auto nodes = f.elements();
                    return sf::vandermonde(f, rows, nodes);
                }();
                params["rows"] = h.rows();
                params["q"] = h.field().q();
                result = sf::family_json(sf::build_code_based_family(h, k));
            }
            emit(g, "construct", params, seed, std::move(result), start);
            return 0;
        }
        if (*verify) {
            const sf::Family fam = sf::parse_family(read_json_file(family_file));
            const auto report = sf::verify_family(fam, parse_properties(properties), vopts);
            json result = sf::report_json(report);
            result["size"] = fam.size();
            emit(g, "verify", {{"family", family_file}, {"properties", properties}}, 0, std::move(result), start);
            return 0;
        }
        if (*bounds) {
            json result = sf::bounds_json(sf::bounds_table(n, k, L, q));
            emit(g, "bounds", {{"n", n}, {"k", k}, {"L", L}, {"q", q}}, 0, std::move(result), start);
            return 0;
        }
        if (*search) {
            sf::SearchConfig cfg{sf::Field::of_order(q), n, k, L,
                                 mode == "greedy" ? sf::SearchMode::greedy : sf::SearchMode::exhaustive, budget,
                                 !no_symmetry};
            sf::SearchResult r{0, sf::Family(cfg.field, n, k, {}), false, 0, 0};
            if (cfg.mode == sf::SearchMode::exhaustive) {
                r = sf::exhaustive_max_family(cfg);
            } else {
                r.family = sf::greedy_max_family(cfg, seed);
                r.size = r.family.size();
                r.bound = sf::bound_theorem1(n, k, L, q);
            }
            emit(g, "search", {{"n", n}, {"k", k}, {"L", L}, {"q", q}, {"mode", mode}}, seed,
                 sf::certificate_json(cfg, r), start);
            return 0;
        }
        if (*batch) {
            sf::Family fam = family_file.empty() ? demo_family() : sf::parse_family(read_json_file(family_file));
            const sf::BatchCode code(std::move(fam), vopts);
            const std::uint64_t s = s_override != 0 ? s_override : code.s();
            const auto v = sf::verify_batch(code, s,
                                            batch_mode == "sampled" ? sf::BatchMode::sampled : sf::BatchMode::exhaustive,
                                            trials, seed);
            json result = {{"N", code.N()},       {"K", code.K()},       {"L", code.L()},
                           {"size", code.family().size()},                  {"s", s},
                           {"verified", v.ok},    {"checked", v.checked}, {"mode", batch_mode},
                           {"counterexample", v.counterexample ? json(*v.counterexample) : json()}};
            if (layout) result["layout"] = sf::batch_layout_json(code);
            emit(g, "batch", {{"family", family_file.empty() ? "demo" : family_file}, {"mode", batch_mode}}, seed,
                 std::move(result), start);
            return 0;
        }
    } catch (const sf::ParameterError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParams;
    } catch (const sf::FormatError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const sf::GuardError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitGuard;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
