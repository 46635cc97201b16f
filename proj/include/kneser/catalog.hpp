#pragma once

// Drivers behind the command-line front end: the JSONL result cache,
// modular fingerprints, the exhaustive tree verifier and the bounded
// collision search.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include <json.hpp>

#include "kneser/canonical.hpp"
#include "kneser/enumerate.hpp"
#include "kneser/error.hpp"
#include "kneser/evaluation.hpp"
#include "kneser/graph6.hpp"
#include "kneser/json_io.hpp"
#include "kneser/psum.hpp"
#include "kneser/reconstruction.hpp"
#include "kneser/tree_lambda.hpp"

namespace kneser {

inline constexpr const char* kCacheVersion = "kneser-psum/1";
inline constexpr int kVerifyCap = 9;

struct CacheRecord {
    std::string key; // graph6
    int k = 2;
    Json payload;
    std::uint64_t seed = kDefaultSeed;
    std::string version = kCacheVersion;

    Json to_json() const {
        return Json{{"key", key}, {"k", k}, {"version", version}, {"seed", seed}, {"payload", payload}};
    }
};

/// Append-only JSONL cache of series keyed by (graph6, k, version).
class SeriesCache {
public:
    explicit SeriesCache(std::string path) : path_(std::move(path)) {
        std::ifstream in(path_);
        std::string line;
        int lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            if (line.empty()) continue;
            try {
                const auto j = nlohmann::json::parse(line);
                CacheRecord r;
                r.key = j.at("key").get<std::string>();
                r.k = j.at("k").get<int>();
                r.version = j.at("version").get<std::string>();
                r.seed = j.value("seed", kDefaultSeed);
                r.payload = Json::parse(j.at("payload").dump());
                parse_graph6(r.key);
                if (r.version == kCacheVersion) pseries_from_json(j.at("payload"));
                records_[{r.key, r.k, r.version}] = std::move(r);
            } catch (const std::exception& e) {
                throw InvalidInput(path_ + ":" + std::to_string(lineno) + ": bad cache record: " + e.what());
            }
        }
    }

    std::optional<PSeries> lookup(const std::string& graph6, int k) const {
        const auto it = records_.find({graph6, k, kCacheVersion});
        if (it == records_.end()) return std::nullopt;
        return pseries_from_json(nlohmann::json::parse(it->second.payload.dump()));
    }

    void store(const std::string& graph6, int k, const PSeries& series) {
        CacheRecord r;
        r.key = graph6;
        r.k = k;
        r.payload = kneser::to_json(series);
        std::ofstream out(path_, std::ios::app);
        if (!out) throw InvalidInput("cannot write cache file " + path_);
        out << r.to_json().dump() << '\n';
        records_[{r.key, r.k, r.version}] = std::move(r);
    }

    std::size_t size() const noexcept { return records_.size(); }

private:
    std::string path_;
    std::map<std::tuple<std::string, int, std::string>, CacheRecord> records_;
};

/// Series of `g`, served from and written to `cache` when one is given.
inline PSeries cached_psum(const SimpleGraph& g, int k, SeriesCache* cache) {
    const auto key = write_graph6(g);
    if (cache)
        if (auto hit = cache->lookup(key, k)) return *hit;
    auto series = kneser_psum(g, k);
    if (cache) cache->store(key, k, series);
    return series;
}

/// Evaluations of X_{K_{N,k}}(G) at pseudo-random points. The value maps
/// depend only on (seed, k, m, trial), so equal series give equal
/// fingerprints.
struct Fingerprint {
    int k = 2;
    int alphabet = 0;
    std::uint64_t seed = kDefaultSeed;
    std::uint64_t prime = kDefaultPrime;
    std::vector<std::uint64_t> residues;

    friend auto operator<=>(const Fingerprint&, const Fingerprint&) = default;
};

/// Alphabet used for fingerprints of n-vertex graphs. n symbols separate all
/// k = 1 series of degree n; for k = 2 the n + 1 symbols cover every tree class.
inline int fingerprint_alphabet(int n, int k) { return std::max(k == 1 ? n : n + 1, k); }

inline std::vector<BlockValues> fingerprint_points(int k, int m, int trials, std::uint64_t seed) {
    std::mt19937_64 rng(seed ^ (static_cast<std::uint64_t>(k) << 32) ^ static_cast<std::uint64_t>(m));
    std::vector<BlockValues> out;
    for (int t = 0; t < trials; ++t) out.push_back(BlockValues::random(k, m, kDefaultPrime, rng));
    return out;
}

inline Fingerprint fingerprint(const SimpleGraph& g, int k, int trials, std::uint64_t seed) {
    Fingerprint f;
    f.k = k;
    f.alphabet = fingerprint_alphabet(g.order(), k);
    f.seed = seed;
    for (const auto& values : fingerprint_points(k, f.alphabet, trials, seed)) f.residues.push_back(direct_eval(g, values));
    return f;
}

struct VerifyRecord {
    std::string graph6;
    int n = 0;
    std::size_t lambda_t_size = 0;
    DegreeProfile min_profile;
    std::string reconstructed;
    bool pass = false;
    std::optional<bool> witness_ok;
    double millis = 0;

    Json to_json() const {
        Json j{{"graph6", graph6},
               {"n", n},
               {"lambda_t_size", lambda_t_size},
               {"min_profile", min_profile.degrees},
               {"reconstructed", reconstructed},
               {"pass", pass}};
        if (witness_ok) j["witness_ok"] = *witness_ok;
        j["millis"] = millis;
        return j;
    }
};

struct VerifySummary {
    std::size_t total = 0;
    std::size_t passed = 0;
    bool injective = true; // distinct trees have distinct tree-class sets

    bool ok() const { return passed == total && injective; }

    Json to_json() const {
        return Json{{"summary", true}, {"total", total}, {"passed", passed}, {"injective", injective}, {"ok", ok()}};
    }
};

/// Reconstructs every free tree with at most `n_max` vertices from its tree
/// classes. `on_record` sees each record as soon as it is produced.
template <typename Sink>
VerifySummary verify_trees(int n_max, bool with_witness, Sink&& on_record) {
    if (n_max < 1) throw InvalidInput("n_max must be positive");
    if (n_max > kVerifyCap) throw CapExceeded("verification tree order", n_max, kVerifyCap);
    VerifySummary summary;
    std::set<std::set<PClass>> seen;
    for (int n = 1; n <= n_max; ++n) {
        for (const auto& tree : enumerate_trees(n)) {
            const auto start = std::chrono::steady_clock::now();
            VerifyRecord rec;
            rec.graph6 = write_graph6(tree);
            rec.n = n;
            const auto classes = lambda_t(tree);
            rec.lambda_t_size = classes.size();
            rec.min_profile = minimal_profile_classes(classes).profile;
            const auto result = reconstruct_from_lambda_t(classes, with_witness ? &tree : nullptr);
            rec.reconstructed = write_graph6(result.tree);
            rec.pass = are_isomorphic(result.tree, tree);
            if (with_witness) {
                rec.witness_ok = result.witness && is_isomorphism(tree, result.tree, *result.witness);
                rec.pass = rec.pass && *rec.witness_ok;
            }
            if (!seen.insert(classes).second) summary.injective = false;
            rec.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
            ++summary.total;
            if (rec.pass) ++summary.passed;
            on_record(rec);
        }
    }
    return summary;
}

struct Collision {
    std::string first;
    std::string second;
};

struct CollisionReport {
    int n_max = 0;
    int k = 2;
    int trials = 0;
    std::uint64_t seed = kDefaultSeed;
    std::size_t graphs = 0;
    std::size_t fingerprint_groups = 0; // groups of size > 1
    std::size_t exact_comparisons = 0;
    std::vector<Collision> collisions;

    Json to_json() const {
        Json pairs = Json::array();
        for (const auto& c : collisions) pairs.push_back(Json::array({c.first, c.second}));
        return Json{{"n_max", n_max},
                    {"k", k},
                    {"trials", trials},
                    {"seed", seed},
                    {"prime", kDefaultPrime},
                    {"graphs", graphs},
                    {"fingerprint_groups", fingerprint_groups},
                    {"exact_comparisons", exact_comparisons},
                    {"collisions", std::move(pairs)}};
    }
};

inline int collide_cap(int k) { return k == 1 ? 7 : 5; }

/// Groups all graphs on 1..n_max vertices by fingerprint and confirms every
/// candidate pair by comparing exact series. Only confirmed pairs are
/// reported.
inline CollisionReport collide(int n_max, int k, int trials, std::uint64_t seed, SeriesCache* cache = nullptr) {
    if (k != 1 && k != 2) throw InvalidInput("block size must be 1 or 2");
    if (n_max < 1) throw InvalidInput("n_max must be positive");
    if (n_max > collide_cap(k)) throw CapExceeded("collision search order", n_max, collide_cap(k));
    if (trials < 1) throw InvalidInput("trials must be positive");

    CollisionReport report;
    report.n_max = n_max;
    report.k = k;
    report.trials = trials;
    report.seed = seed;
    for (int n = 1; n <= n_max; ++n) {
        std::map<Fingerprint, std::vector<SimpleGraph>> groups;
        for (auto& g : enumerate_graphs(n)) {
            ++report.graphs;
            groups[fingerprint(g, k, trials, seed)].push_back(std::move(g));
        }
        for (const auto& [fp, members] : groups) {
            if (members.size() < 2) continue;
            ++report.fingerprint_groups;
            std::vector<PSeries> series;
            for (const auto& g : members) series.push_back(cached_psum(g, k, cache));
            for (std::size_t i = 0; i < members.size(); ++i)
                for (std::size_t j = i + 1; j < members.size(); ++j) {
                    ++report.exact_comparisons;
                    if (series[i] == series[j])
                        report.collisions.push_back({write_graph6(members[i]), write_graph6(members[j])});
                }
        }
    }
    return report;
}

} // namespace kneser
