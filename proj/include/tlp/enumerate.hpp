#pragma once

#include <cstdint>
#include <filesystem>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "tlp/canonical.hpp"
#include "tlp/geometry.hpp"
#include "tlp/verify.hpp"

namespace tlp {

/// Complete list of combinatorial types for one dimension, pairwise
/// non-isomorphic and deterministically ordered by (vertex count, facet
/// count, canonical key bytes).
struct Database {
    int dim = 0;
    std::vector<PolytopeRecord> records;
    std::vector<CanonicalKey> keys;
    std::unordered_set<std::string> key_set;

    std::size_t size() const { return records.size(); }
    bool contains(const CanonicalKey& k) const { return key_set.count(k.bytes) > 0; }

    static Database from_records(int dim, std::vector<std::pair<PolytopeRecord, CanonicalKey>> recs);
};

/// Dimension-1 list: the segment with its 2x2 identity slack matrix.
Database seed_database();

/// Concurrent key -> record store keeping, per key, the record of minimum
/// (base index, sequence) priority; this makes parallel and sharded runs
/// reproduce the sequential output byte for byte.
class RecordRegistry {
public:
    using Priority = std::pair<int, long long>;

    /// Returns true when the key was not present before.
    bool upsert(const CanonicalKey& key, Priority prio, const PolytopeRecord& rec);
    bool contains(const CanonicalKey& key) const;
    std::vector<std::pair<PolytopeRecord, CanonicalKey>> take_all();
    std::size_t size() const;

private:
    struct Entry {
        Priority prio;
        PolytopeRecord rec;
    };
    mutable std::mutex mu_;
    std::unordered_map<std::string, Entry> map_;
};

/// Reorders an accepted candidate so the core extending the base's core sits
/// top-left: the base facet row first, the lifted apex column first. Throws
/// std::logic_error when the expected rows are missing or ambiguous.
PolytopeRecord extend_core(const PolytopeRecord& base, const ReducedSlack& m);

struct EnumOptions {
    bool max_vertex_filter = true;
    bool simplex_shortcut = false;
    int workers = 1;
    std::optional<std::pair<int, int>> base_range;  // inclusive indices into the base list
};

struct EnumStats {
    long long closed_sets = 0;
    long long filtered = 0;
    long long tests = 0;
    long long accepted = 0;
};

/// All 2-level polytopes over one prescribed base: walks the closed sets of
/// the base's closure operator, tests each reduced slack matrix, and files
/// accepted records into the shared registry.
void enumerate_from_base(const PolytopeRecord& base, int base_index, const Database& prev,
                         RecordRegistry& registry, const EnumOptions& opt, EnumStats& stats);

Database enumerate_dimension(int dim, const Database& prev, const EnumOptions& opt = {},
                             EnumStats* stats = nullptr);

/// Database files: `2LP 1`, `dim D count K`, then per record a blank line,
/// `m M n N`, and M rows of N characters from {0,1}. A sidecar .idx file
/// lists one hex canonical key per record.
void save_database(const Database& db, const std::filesystem::path& file);
Database load_database(const std::filesystem::path& file);

std::filesystem::path database_file(const std::filesystem::path& dir, int dim);
std::filesystem::path shard_file(const std::filesystem::path& dir, int dim, int lo, int hi);
std::filesystem::path index_file(const std::filesystem::path& file);

/// Combines shard files L{dim}.bases{i}-{j}.2lp in ascending range order,
/// re-deduplicates, and returns the merged database. Throws when the shards
/// do not cover every base index.
Database merge_shards(int dim, const std::filesystem::path& dir, int base_count);

}  // namespace tlp
