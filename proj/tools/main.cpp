// Command-line front end: seed, enumerate, merge, stats, verify, oracle.
// Data goes to files under the database directory; progress lines go to
// standard error. Exit codes: 0 success, 1 verification or diff failure,
// 2 usage or missing-prerequisite errors.

#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>

#include "tlp/analysis.hpp"
#include "tlp/enumerate.hpp"
#include "tlp/oracle.hpp"

namespace fs = std::filesystem;
using namespace tlp;

namespace {

struct RunConfig {
    std::string db_dir = "db";
    int dim = 0;
    int workers = 1;
    bool no_max_vertex_filter = false;
    bool simplex_shortcut = false;
    std::string bases;  // "i..j"
};

Database require_database(const fs::path& file) {
    if (!fs::exists(file)) {
        std::cerr << "missing database file: " << file.string()
                  << " (run the lower-dimension steps first)\n";
        std::exit(2);
    }
    return load_database(file);
}

std::optional<std::pair<int, int>> parse_range(const std::string& s) {
    if (s.empty()) return std::nullopt;
    auto pos = s.find("..");
    if (pos == std::string::npos) {
        std::cerr << "bad base range '" << s << "', expected i..j\n";
        std::exit(2);
    }
    try {
        int lo = std::stoi(s.substr(0, pos));
        int hi = std::stoi(s.substr(pos + 2));
        if (lo < 0 || hi < lo) throw std::invalid_argument("order");
        return std::make_pair(lo, hi);
    } catch (const std::exception&) {
        std::cerr << "bad base range '" << s << "', expected i..j with 0 <= i <= j\n";
        std::exit(2);
    }
}

int cmd_seed(const RunConfig& cfg) {
    fs::create_directories(cfg.db_dir);
    Database db = seed_database();
    save_database(db, database_file(cfg.db_dir, 1));
    std::cerr << "wrote " << database_file(cfg.db_dir, 1).string() << " (1 record)\n";
    return 0;
}

int cmd_enumerate(const RunConfig& cfg) {
    if (cfg.dim < 2) {
        std::cerr << "enumerate needs --dim >= 2\n";
        return 2;
    }
    Database prev = require_database(database_file(cfg.db_dir, cfg.dim - 1));
    EnumOptions opt;
    opt.max_vertex_filter = !cfg.no_max_vertex_filter;
    opt.simplex_shortcut = cfg.simplex_shortcut;
    opt.workers = cfg.workers;
    opt.base_range = parse_range(cfg.bases);
    if (opt.base_range && opt.base_range->second >= int(prev.size())) {
        std::cerr << "base range exceeds the " << prev.size() << " bases of dimension "
                  << cfg.dim - 1 << "\n";
        return 2;
    }

    auto t0 = std::chrono::steady_clock::now();
    EnumStats stats;
    Database db = enumerate_dimension(cfg.dim, prev, opt, &stats);
    double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    fs::path out = opt.base_range
                       ? shard_file(cfg.db_dir, cfg.dim, opt.base_range->first,
                                    opt.base_range->second)
                       : database_file(cfg.db_dir, cfg.dim);
    save_database(db, out);
    std::cerr << "dim " << cfg.dim << ": closed sets " << stats.closed_sets << ", filtered "
              << stats.filtered << ", tests " << stats.tests << ", accepted " << stats.accepted
              << ", records " << db.size() << ", " << dt << "s\n";
    std::cerr << "wrote " << out.string() << "\n";
    return 0;
}

int cmd_merge(const RunConfig& cfg) {
    Database prev = require_database(database_file(cfg.db_dir, cfg.dim - 1));
    Database db = merge_shards(cfg.dim, cfg.db_dir, int(prev.size()));
    save_database(db, database_file(cfg.db_dir, cfg.dim));
    std::cerr << "merged " << db.size() << " records into "
              << database_file(cfg.db_dir, cfg.dim).string() << "\n";
    return 0;
}

int cmd_stats(const RunConfig& cfg) {
    Database db = require_database(database_file(cfg.db_dir, cfg.dim));
    std::vector<FVector> fvecs;
    std::vector<ClassFlags> flags;
    long long polar = 0, cs = 0, stab = 0, dfacet = 0, susp = 0;
    for (const PolytopeRecord& rec : db.records) {
        fvecs.push_back(f_vector(rec));
        flags.push_back(classify(rec, db));
        polar += flags.back().polar_two_level;
        cs += flags.back().centrally_symmetric;
        stab += flags.back().simple_vertex;
        dfacet += flags.back().simplicial_facet;
        susp += flags.back().suspension;
    }

    fs::path stats_dir = fs::path(cfg.db_dir) / "stats";
    fs::create_directories(stats_dir);
    auto dump = [&](const std::string& name, const std::string& content) {
        fs::path p = stats_dir / name;
        std::ofstream out(p, std::ios::binary);
        out << content;
        std::cerr << "wrote " << p.string() << "\n";
    };
    std::string suffix = "_d" + std::to_string(cfg.dim) + ".csv";
    dump("vertices_histogram" + suffix,
         export_stats(db, fvecs, flags, StatsKind::vertices_histogram));
    dump("facets_vs_vertices" + suffix,
         export_stats(db, fvecs, flags, StatsKind::facets_vs_vertices));
    dump("suspension_table" + suffix,
         export_stats(db, fvecs, flags, StatsKind::suspension_table));
    std::string report = conjecture_report(db, fvecs);
    dump("conjectures_d" + std::to_string(cfg.dim) + ".txt", report);

    std::cout << "dim " << cfg.dim << " count " << db.size() << " polar " << polar << " cs " << cs
              << " stab " << stab << " simplicial-facet " << dfacet << " suspensions " << susp
              << "\n";
    std::cout << report;
    return 0;
}

int cmd_verify(const RunConfig& cfg) {
    Database db = require_database(database_file(cfg.db_dir, cfg.dim));
    int failures = 0;
    std::unordered_set<std::string> prev_keys;
    if (cfg.dim >= 2) {
        Database prev = require_database(database_file(cfg.db_dir, cfg.dim - 1));
        prev_keys = prev.key_set;
    }
    TwoLevelVerifier verifier(cfg.dim, prev_keys);
    for (std::size_t i = 0; i < db.records.size(); ++i) {
        const PolytopeRecord& rec = db.records[i];
        try {
            rec.validate();
        } catch (const std::exception& e) {
            std::cout << "record " << i << ": invariant failure: " << e.what() << "\n";
            ++failures;
            continue;
        }
        if (cfg.dim >= 2 && !verifier.is_two_level(rec.slack)) {
            std::cout << "record " << i << ": rejected by the 2-level test\n";
            ++failures;
        }
    }
    // Cross-check the sidecar index when present.
    fs::path idx = index_file(database_file(cfg.db_dir, cfg.dim));
    if (fs::exists(idx)) {
        std::ifstream in(idx);
        std::string line;
        std::size_t i = 0;
        while (std::getline(in, line) && i < db.keys.size()) {
            if (line != db.keys[i].hex()) {
                std::cout << "record " << i << ": sidecar key mismatch\n";
                ++failures;
            }
            ++i;
        }
        if (i != db.keys.size()) {
            std::cout << "sidecar index length mismatch\n";
            ++failures;
        }
    }
    std::cout << (failures ? "FAIL" : "OK") << ": " << db.size() << " records, " << failures
              << " failures\n";
    return failures ? 1 : 0;
}

int cmd_oracle(const RunConfig& cfg) {
    if (cfg.dim < 1 || cfg.dim > 4) {
        std::cerr << "oracle supports --dim 1..4\n";
        return 2;
    }
    Database db = require_database(database_file(cfg.db_dir, cfg.dim));
    auto t0 = std::chrono::steady_clock::now();
    std::vector<CanonicalKey> oracle_keys = brute_force_two_level(cfg.dim);
    double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::set<std::string> engine, oracle;
    for (const CanonicalKey& k : db.keys) engine.insert(k.bytes);
    for (const CanonicalKey& k : oracle_keys) oracle.insert(k.bytes);
    std::cerr << "oracle found " << oracle.size() << " classes in " << dt << "s; database has "
              << engine.size() << "\n";
    int missing = 0, extra = 0;
    for (const std::string& k : oracle)
        if (!engine.count(k)) ++missing;
    for (const std::string& k : engine)
        if (!oracle.count(k)) ++extra;
    if (missing || extra) {
        std::cout << "DIFF: " << missing << " classes missing from the database, " << extra
                  << " unexpected\n";
        return 1;
    }
    std::cout << "OK: oracle and database agree on " << engine.size() << " classes\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exhaustive enumeration of 2-level polytopes by dimension"};
    app.require_subcommand(1);
    RunConfig cfg;
    app.add_option("--db", cfg.db_dir, "database directory (default: db)");

    CLI::App* seed = app.add_subcommand("seed", "write the dimension-1 database");
    CLI::App* enumerate = app.add_subcommand("enumerate", "extend the lists by one dimension");
    enumerate->add_option("--dim", cfg.dim, "target dimension")->required();
    enumerate->add_option("--bases", cfg.bases, "restrict to base indices i..j (writes a shard)");
    enumerate->add_option("--workers", cfg.workers, "worker threads (default 1)");
    enumerate->add_flag("--no-max-vertex-filter", cfg.no_max_vertex_filter,
                        "keep candidates whose facets outgrow the base");
    enumerate->add_flag("--simplex-shortcut", cfg.simplex_shortcut,
                        "synthesize the simplicial family instead of walking the simplex base");
    CLI::App* merge = app.add_subcommand("merge", "combine shards into the full database");
    merge->add_option("--dim", cfg.dim, "target dimension")->required();
    CLI::App* stats = app.add_subcommand("stats", "per-dimension statistics and reports");
    stats->add_option("--dim", cfg.dim, "dimension to analyze")->required();
    CLI::App* verify = app.add_subcommand("verify", "re-run the 2-level test on stored records");
    verify->add_option("--dim", cfg.dim, "dimension to verify")->required();
    CLI::App* oracle = app.add_subcommand("oracle", "brute-force cross-check (dim <= 4)");
    oracle->add_option("--dim", cfg.dim, "dimension to cross-check")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 2;
    }

    try {
        if (seed->parsed()) return cmd_seed(cfg);
        if (enumerate->parsed()) return cmd_enumerate(cfg);
        if (merge->parsed()) return cmd_merge(cfg);
        if (stats->parsed()) return cmd_stats(cfg);
        if (verify->parsed()) return cmd_verify(cfg);
        if (oracle->parsed()) return cmd_oracle(cfg);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
