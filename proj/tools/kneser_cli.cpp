// kneser: command-line front end for Kneser chromatic functions of small
// graphs and tree reconstruction from the k = 2 invariant.
//
// Exit codes: 0 success, 2 input error, 3 cap exceeded, 4 verification failure.

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "kneser/kneser.hpp"

namespace {

constexpr int kExitInput = 2;
constexpr int kExitCap = 3;
constexpr int kExitVerify = 4;

struct Options {
    int k = 2;
    int nmax = 7;
    int trials = 4;
    std::uint64_t seed = kneser::kDefaultSeed;
    std::string cache;
    bool json = true;
    bool witness = false;
    bool timings = true;
    std::vector<std::string> graphs;
    std::string series_path;
};

std::vector<std::string> read_graph_lines(const std::vector<std::string>& args) {
    if (!args.empty()) return args;
    std::vector<std::string> out;
    std::string line;
    while (std::getline(std::cin, line))
        if (!line.empty()) out.push_back(line);
    return out;
}

std::string render_text(const kneser::PSeries& s) {
    std::ostringstream out;
    out << "X_{K_{N," << s.k << "}} of degree " << s.n << ", " << s.terms.size() << " terms\n";
    for (const auto& [cls, coeff] : s.terms) {
        out << (coeff > 0 ? "+" : "") << coeff << " p[";
        for (std::size_t i = 0; i < cls.components.size(); ++i) out << (i ? " | " : "") << cls.components[i];
        out << "]\n";
    }
    return out.str();
}

int cmd_invariant(const Options& opt) {
    std::unique_ptr<kneser::SeriesCache> cache;
    if (!opt.cache.empty()) cache = std::make_unique<kneser::SeriesCache>(opt.cache);
    for (const auto& line : read_graph_lines(opt.graphs)) {
        const auto g = kneser::parse_graph6(line);
        const auto series = kneser::cached_psum(g, opt.k, cache.get());
        if (opt.json)
            std::cout << kneser::to_json(series).dump() << '\n';
        else
            std::cout << render_text(series);
    }
    return 0;
}

int cmd_reconstruct(const Options& opt) {
    std::string text;
    if (opt.series_path == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
        std::ifstream in(opt.series_path);
        if (!in) throw kneser::InvalidInput("cannot open " + opt.series_path);
        text.assign(std::istreambuf_iterator<char>(in), {});
    }
    const auto series = kneser::pseries_from_json(text);
    const auto result = kneser::reconstruct_from_invariant(series);
    if (opt.json)
        std::cout << kneser::to_json(result).dump() << '\n';
    else
        std::cout << kneser::write_graph6(result.tree) << '\n';
    return 0;
}

int cmd_verify(const Options& opt) {
    const auto summary = kneser::verify_trees(opt.nmax, opt.witness, [&](const kneser::VerifyRecord& rec) {
        auto j = rec.to_json();
        if (!opt.timings) j.erase("millis");
        if (opt.json) {
            std::cout << j.dump() << '\n';
        } else {
            std::cout << (rec.pass ? "pass " : "FAIL ") << rec.graph6 << " n=" << rec.n
                      << " |Lambda_t|=" << rec.lambda_t_size << " r=" << kneser::to_string(rec.min_profile) << '\n';
        }
    });
    if (opt.json)
        std::cout << summary.to_json().dump() << '\n';
    else
        std::cout << summary.passed << "/" << summary.total << " reconstructed, injective="
                  << (summary.injective ? "yes" : "no") << '\n';
    return summary.ok() ? 0 : kExitVerify;
}

int cmd_collide(const Options& opt) {
    std::unique_ptr<kneser::SeriesCache> cache;
    if (!opt.cache.empty()) cache = std::make_unique<kneser::SeriesCache>(opt.cache);
    const auto report = kneser::collide(opt.nmax, opt.k, opt.trials, opt.seed, cache.get());
    if (opt.json) {
        std::cout << report.to_json().dump() << '\n';
    } else {
        std::cout << report.graphs << " graphs, " << report.fingerprint_groups << " fingerprint groups, "
                  << report.collisions.size() << " confirmed collisions (seed " << report.seed << ")\n";
        for (const auto& c : report.collisions) std::cout << c.first << ' ' << c.second << '\n';
    }
    return 0;
}

int cmd_profile(const Options& opt) {
    for (const auto& line : read_graph_lines(opt.graphs)) {
        const auto profile = kneser::min_degree_sequence(kneser::parse_graph6(line));
        std::cout << (opt.json ? kneser::to_json(profile).dump() : kneser::to_string(profile)) << '\n';
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Kneser chromatic functions of small graphs and tree reconstruction"};
    app.require_subcommand(1);
    Options opt;

    auto add_format = [&](CLI::App* sub) {
        auto* j = sub->add_flag_callback("--json", [&] { opt.json = true; }, "JSON output (default)");
        auto* t = sub->add_flag_callback("--text", [&] { opt.json = false; }, "human-readable output");
        j->excludes(t);
    };
    auto add_k = [&](CLI::App* sub) { sub->add_option("--k", opt.k, "block size")->check(CLI::IsMember({1, 2})); };

    auto* invariant = app.add_subcommand("invariant", "power-sum expansion of X_{K_{N,k}}(G) as JSON");
    invariant->add_option("graph6", opt.graphs, "graphs in graph6 (default: one per line on stdin)");
    add_k(invariant);
    invariant->add_option("--cache", opt.cache, "JSONL cache file");
    add_format(invariant);

    auto* reconstruct = app.add_subcommand("reconstruct", "rebuild a tree from its k = 2 series");
    reconstruct->add_option("series", opt.series_path, "series JSON file, or - for stdin")->required();
    add_format(reconstruct);
    reconstruct->callback([&] {
        // graph6 is the default output here
        if (reconstruct->count("--json") == 0) opt.json = false;
    });

    auto* verify = app.add_subcommand("verify", "reconstruct every tree up to --nmax vertices");
    verify->add_option("--nmax", opt.nmax, "largest tree order")->check(CLI::PositiveNumber);
    verify->add_flag("--witness", opt.witness, "also check the max-symbol isomorphism");
    verify->add_flag("!--no-timings", opt.timings, "omit per-tree timings");
    add_format(verify);

    auto* collide = app.add_subcommand("collide", "search for non-isomorphic graphs with equal invariants");
    collide->add_option("--nmax", opt.nmax, "largest graph order")->check(CLI::PositiveNumber);
    add_k(collide);
    collide->add_option("--trials", opt.trials, "evaluations per fingerprint")->check(CLI::PositiveNumber);
    collide->add_option("--seed", opt.seed, "fingerprint seed");
    collide->add_option("--cache", opt.cache, "JSONL cache file");
    add_format(collide);

    auto* profile = app.add_subcommand("profile", "minimum degree sequence r(T) of a tree");
    profile->add_option("graph6", opt.graphs, "trees in graph6 (default: stdin)");
    add_format(profile);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitInput;
    }

    try {
        if (*invariant) return cmd_invariant(opt);
        if (*reconstruct) return cmd_reconstruct(opt);
        if (*verify) return cmd_verify(opt);
        if (*collide) return cmd_collide(opt);
        if (*profile) return cmd_profile(opt);
    } catch (const kneser::CapExceeded& e) {
        std::cerr << "kneser: " << e.what() << '\n';
        return kExitCap;
    } catch (const kneser::Error& e) {
        std::cerr << "kneser: " << e.what() << '\n';
        return kExitInput;
    }
    return kExitInput;
}
