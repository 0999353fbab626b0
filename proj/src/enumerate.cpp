#include "tlp/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <regex>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace tlp {

Database Database::from_records(int dim,
                                std::vector<std::pair<PolytopeRecord, CanonicalKey>> recs) {
    std::sort(recs.begin(), recs.end(), [](const auto& a, const auto& b) {
        if (a.first.vertex_count() != b.first.vertex_count())
            return a.first.vertex_count() < b.first.vertex_count();
        if (a.first.facet_count() != b.first.facet_count())
            return a.first.facet_count() < b.first.facet_count();
        return a.second.bytes < b.second.bytes;
    });
    Database db;
    db.dim = dim;
    for (auto& [rec, key] : recs) {
        if (db.key_set.count(key.bytes)) throw std::logic_error("database: duplicate key");
        db.key_set.insert(key.bytes);
        db.records.push_back(std::move(rec));
        db.keys.push_back(std::move(key));
    }
    return db;
}

Database seed_database() {
    PolytopeRecord segment{1, BinaryMatrix::identity(2)};
    segment.validate();
    CanonicalKey key = canonical_form(segment.slack);
    std::vector<std::pair<PolytopeRecord, CanonicalKey>> recs;
    recs.emplace_back(std::move(segment), std::move(key));
    return Database::from_records(1, std::move(recs));
}

bool RecordRegistry::upsert(const CanonicalKey& key, Priority prio, const PolytopeRecord& rec) {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = map_.find(key.bytes);
    if (it == map_.end()) {
        map_.emplace(key.bytes, Entry{prio, rec});
        return true;
    }
    if (prio < it->second.prio) it->second = Entry{prio, rec};
    return false;
}

bool RecordRegistry::contains(const CanonicalKey& key) const {
    std::lock_guard<std::mutex> lock(mu_);
    return map_.count(key.bytes) > 0;
}

std::vector<std::pair<PolytopeRecord, CanonicalKey>> RecordRegistry::take_all() {
    std::lock_guard<std::mutex> lock(mu_);
    std::vector<std::pair<PolytopeRecord, CanonicalKey>> out;
    out.reserve(map_.size());
    for (auto& [bytes, entry] : map_)
        out.emplace_back(std::move(entry.rec), CanonicalKey{bytes});
    map_.clear();
    return out;
}

std::size_t RecordRegistry::size() const {
    std::lock_guard<std::mutex> lock(mu_);
    return map_.size();
}

PolytopeRecord extend_core(const PolytopeRecord& base, const ReducedSlack& m) {
    const int d = base.dim + 1;
    const BinaryMatrix& s = m.matrix;
    const int nb = m.base_cols;

    // F_1 is the unique row vanishing exactly on the base columns.
    int f1 = -1;
    for (int i = 0; i < s.rows(); ++i) {
        BitVec z = s.row_zeros(i);
        bool exact = true;
        for (int j = 0; j < s.cols() && exact; ++j) exact = (z.test(std::size_t(j)) == (j < nb));
        if (exact) {
            if (f1 >= 0) throw std::logic_error("extend_core: ambiguous base facet row");
            f1 = i;
        }
    }
    if (f1 < 0) throw std::logic_error("extend_core: base facet row missing");
    if (m.col_points.empty() || m.col_points[0] != 0)
        throw std::logic_error("extend_core: candidate does not contain the apex point");

    // The base core has base.dim + 1 facets and vertices; each core facet
    // extends to the unique other facet of the candidate containing it.
    std::vector<int> core_rows{f1};
    for (int i = 0; i <= base.dim; ++i) {
        // Base core facet i spans the base columns where the base row is 0.
        BitVec ridge(std::size_t(s.cols()));
        for (int j = 0; j < nb; ++j)
            if (!base.slack.at(i, j)) ridge.set(std::size_t(j));
        int found = -1;
        for (int r = 0; r < s.rows(); ++r) {
            if (r == f1) continue;
            if (ridge.subset_of(s.row_zeros(r))) {
                if (found >= 0) throw std::logic_error("extend_core: ambiguous core extension row");
                found = r;
            }
        }
        if (found < 0) throw std::logic_error("extend_core: missing core extension row");
        core_rows.push_back(found);
    }

    std::vector<int> row_order = core_rows;
    std::vector<char> used(std::size_t(s.rows()), 0);
    for (int r : core_rows) used[std::size_t(r)] = 1;
    for (int r = 0; r < s.rows(); ++r)
        if (!used[std::size_t(r)]) row_order.push_back(r);

    std::vector<int> col_order{nb};  // the apex e_1
    for (int j = 0; j <= base.dim; ++j) col_order.push_back(j);
    for (int j = base.dim + 1; j < nb; ++j) col_order.push_back(j);
    for (int j = nb + 1; j < s.cols(); ++j) col_order.push_back(j);

    PolytopeRecord rec{d, s.permuted(row_order, col_order)};
    for (int i = 0; i <= d; ++i) {
        if (!rec.slack.at(i, i)) throw std::logic_error("extend_core: core diagonal not one");
        for (int j = i + 1; j <= d; ++j)
            if (rec.slack.at(i, j)) throw std::logic_error("extend_core: core not triangular");
    }
    return rec;
}

void enumerate_from_base(const PolytopeRecord& base, int base_index, const Database& prev,
                         RecordRegistry& registry, const EnumOptions& opt, EnumStats& stats) {
    HEmbedding emb = h_embedding(base);
    GroundSet gs = ground_set(emb);
    ClosureContext ctx(emb, gs.points);
    TwoLevelVerifier verifier(base.dim + 1, prev.key_set);
    const int nb = ctx.base_vertex_count();

    NextClosure cursor(ctx);
    long long seq = 0;
    while (auto a = cursor.next()) {
        ++stats.closed_sets;
        ReducedSlack rs = reduced_slack(ctx, *a);
        if (opt.max_vertex_filter) {
            bool over = false;
            for (int i = 0; i < rs.matrix.rows() && !over; ++i)
                if (int(rs.matrix.row_zeros(i).count()) > nb) over = true;
            if (over) {
                ++stats.filtered;
                continue;
            }
        }
        ++stats.tests;
        if (!verifier.is_two_level(rs.matrix)) continue;
        ++stats.accepted;
        PolytopeRecord rec = extend_core(base, rs);
        CanonicalKey key = canonical_form(rec.slack);
        registry.upsert(key, {base_index, seq++}, rec);
    }
}

namespace {

// Free sums of d/k simplices of dimension k, for k dividing d: the complete
// simplicial family. Row (j_1..j_m) misses exactly vertex j_i of summand i.
std::vector<PolytopeRecord> simplicial_family(int d) {
    std::vector<PolytopeRecord> out;
    for (int k = 1; k <= d; ++k) {
        if (d % k) continue;
        int m = d / k;
        int rows = 1;
        for (int i = 0; i < m; ++i) rows *= k + 1;
        int cols = m * (k + 1);
        BinaryMatrix slack(rows, cols);
        std::vector<int> choice(std::size_t(m), 0);
        for (int r = 0; r < rows; ++r) {
            for (int i = 0; i < m; ++i) slack.set(r, i * (k + 1) + choice[std::size_t(i)], true);
            int c = m - 1;
            while (c >= 0 && choice[std::size_t(c)] == k) choice[std::size_t(c--)] = 0;
            if (c >= 0) ++choice[std::size_t(c)];
        }
        PolytopeRecord rec = with_core_first(PolytopeRecord{d, slack}, 0);
        out.push_back(std::move(rec));
    }
    return out;
}

bool is_simplex_record(const PolytopeRecord& rec) {
    return rec.vertex_count() == rec.dim + 1;
}

}  // namespace

Database enumerate_dimension(int dim, const Database& prev, const EnumOptions& opt,
                             EnumStats* stats_out) {
    if (dim != prev.dim + 1) throw std::invalid_argument("enumerate_dimension: dimension mismatch");
    int lo = 0, hi = int(prev.records.size()) - 1;
    if (opt.base_range) {
        lo = std::max(lo, opt.base_range->first);
        hi = std::min(hi, opt.base_range->second);
    }

    RecordRegistry registry;
    EnumStats stats;
    std::mutex stats_mu;

    std::vector<int> bases;
    for (int b = lo; b <= hi; ++b) {
        if (opt.simplex_shortcut && is_simplex_record(prev.records[std::size_t(b)])) {
            long long seq = 0;
            for (PolytopeRecord& rec : simplicial_family(dim)) {
                CanonicalKey key = canonical_form(rec.slack);
                registry.upsert(key, {b, seq++}, rec);
            }
            continue;
        }
        bases.push_back(b);
    }

    auto work = [&](int b) {
        EnumStats local;
        enumerate_from_base(prev.records[std::size_t(b)], b, prev, registry, opt, local);
        std::lock_guard<std::mutex> lock(stats_mu);
        stats.closed_sets += local.closed_sets;
        stats.filtered += local.filtered;
        stats.tests += local.tests;
        stats.accepted += local.accepted;
    };

    if (opt.workers <= 1) {
        for (int b : bases) work(b);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        for (int w = 0; w < opt.workers; ++w)
            pool.emplace_back([&] {
                for (;;) {
                    std::size_t i = next.fetch_add(1);
                    if (i >= bases.size()) return;
                    work(bases[i]);
                }
            });
        for (auto& t : pool) t.join();
    }

    if (stats_out) *stats_out = stats;
    return Database::from_records(dim, registry.take_all());
}

std::filesystem::path database_file(const std::filesystem::path& dir, int dim) {
    return dir / ("L" + std::to_string(dim) + ".2lp");
}

std::filesystem::path shard_file(const std::filesystem::path& dir, int dim, int lo, int hi) {
    return dir / ("L" + std::to_string(dim) + ".bases" + std::to_string(lo) + "-" +
                  std::to_string(hi) + ".2lp");
}

std::filesystem::path index_file(const std::filesystem::path& file) {
    std::filesystem::path p = file;
    p.replace_extension(".idx");
    return p;
}

void save_database(const Database& db, const std::filesystem::path& file) {
    std::ofstream out(file, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + file.string());
    out << "2LP 1\n";
    out << "dim " << db.dim << " count " << db.records.size() << "\n";
    for (const PolytopeRecord& rec : db.records) {
        out << "\nm " << rec.slack.rows() << " n " << rec.slack.cols() << "\n";
        for (int i = 0; i < rec.slack.rows(); ++i) {
            for (int j = 0; j < rec.slack.cols(); ++j) out << (rec.slack.at(i, j) ? '1' : '0');
            out << "\n";
        }
    }
    out.flush();
    if (!out) throw std::runtime_error("write failed for " + file.string());

    std::ofstream idx(index_file(file), std::ios::binary);
    if (!idx) throw std::runtime_error("cannot write " + index_file(file).string());
    for (const CanonicalKey& k : db.keys) idx << k.hex() << "\n";
}

Database load_database(const std::filesystem::path& file) {
    std::ifstream in(file, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + file.string());
    std::string magic;
    int version = 0, dim = 0;
    std::size_t count = 0;
    std::string tok;
    in >> magic >> version;
    if (magic != "2LP" || version != 1)
        throw std::runtime_error(file.string() + ": not a version-1 database file");
    in >> tok >> dim;
    if (tok != "dim") throw std::runtime_error(file.string() + ": malformed header");
    in >> tok >> count;
    if (tok != "count") throw std::runtime_error(file.string() + ": malformed header");

    std::vector<std::pair<PolytopeRecord, CanonicalKey>> recs;
    recs.reserve(count);
    for (std::size_t r = 0; r < count; ++r) {
        int m = 0, n = 0;
        in >> tok >> m;
        if (tok != "m") throw std::runtime_error(file.string() + ": malformed record header");
        in >> tok >> n;
        if (tok != "n") throw std::runtime_error(file.string() + ": malformed record header");
        std::vector<std::string> rows;
        rows.reserve(std::size_t(m));
        for (int i = 0; i < m; ++i) {
            std::string line;
            in >> line;
            if (int(line.size()) != n)
                throw std::runtime_error(file.string() + ": row length mismatch");
            rows.push_back(std::move(line));
        }
        PolytopeRecord rec{dim, BinaryMatrix::from_strings(rows)};
        CanonicalKey key = canonical_form(rec.slack);
        recs.emplace_back(std::move(rec), std::move(key));
    }
    if (!in) throw std::runtime_error(file.string() + ": truncated file");
    return Database::from_records(dim, std::move(recs));
}

Database merge_shards(int dim, const std::filesystem::path& dir, int base_count) {
    struct Shard {
        int lo, hi;
        std::filesystem::path path;
    };
    std::vector<Shard> shards;
    std::regex pat("L" + std::to_string(dim) + R"(\.bases(\d+)-(\d+)\.2lp)");
    for (const auto& e : std::filesystem::directory_iterator(dir)) {
        std::smatch m;
        std::string name = e.path().filename().string();
        if (std::regex_match(name, m, pat))
            shards.push_back({std::stoi(m[1]), std::stoi(m[2]), e.path()});
    }
    if (shards.empty()) throw std::runtime_error("merge: no shard files found");
    std::sort(shards.begin(), shards.end(), [](const Shard& a, const Shard& b) {
        return a.lo != b.lo ? a.lo < b.lo : a.hi < b.hi;
    });
    int covered = 0;
    for (const Shard& s : shards) {
        if (s.lo > covered) throw std::runtime_error("merge: shard ranges leave a gap");
        covered = std::max(covered, s.hi + 1);
    }
    if (covered < base_count) throw std::runtime_error("merge: shards do not cover all bases");

    // First shard containing a key wins; ranges ascend, so this reproduces
    // the sequential run's stored record.
    std::unordered_set<std::string> seen;
    std::vector<std::pair<PolytopeRecord, CanonicalKey>> recs;
    for (const Shard& s : shards) {
        Database part = load_database(s.path);
        if (part.dim != dim) throw std::runtime_error("merge: shard dimension mismatch");
        for (std::size_t i = 0; i < part.records.size(); ++i) {
            if (!seen.insert(part.keys[i].bytes).second) continue;
            recs.emplace_back(std::move(part.records[i]), std::move(part.keys[i]));
        }
    }
    return Database::from_records(dim, std::move(recs));
}

}  // namespace tlp
