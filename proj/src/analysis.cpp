#include "tlp/analysis.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace tlp {

namespace {

// Lectic enumeration of the closed sets of an arbitrary total closure
// function over n elements.
template <class Cl, class Emit>
void for_each_closed(std::size_t n, Cl&& cl, Emit&& emit) {
    BitVec cur = cl(BitVec(n));
    emit(cur);
    for (;;) {
        bool advanced = false;
        for (std::size_t ii = n; ii-- > 0;) {
            if (cur.test(ii)) continue;
            BitVec probe = cur;
            probe.truncate_from(ii);
            probe.set(ii);
            BitVec b = cl(probe);
            BitVec fresh = b;
            fresh.and_not(cur);
            if (fresh.any_below(ii)) continue;
            cur = b;
            emit(cur);
            advanced = true;
            break;
        }
        if (!advanced) return;
    }
}

}  // namespace

std::vector<BitVec> proper_faces(const BinaryMatrix& slack) {
    const std::size_t n = std::size_t(slack.cols());
    std::vector<BitVec> zeros;
    zeros.reserve(std::size_t(slack.rows()));
    for (int i = 0; i < slack.rows(); ++i) zeros.push_back(slack.row_zeros(i));

    auto cl = [&](const BitVec& v) {
        BitVec res = BitVec::ones(n);
        bool hit = false;
        for (const BitVec& z : zeros)
            if (v.subset_of(z)) {
                res &= z;
                hit = true;
            }
        if (!hit) return BitVec::ones(n);
        return res;
    };

    std::vector<BitVec> faces;
    for_each_closed(n, cl, [&](const BitVec& f) {
        if (f.none() || f.count() == n) return;
        faces.push_back(f);
    });
    return faces;
}

FVector f_vector(const PolytopeRecord& rec) {
    std::vector<BitVec> faces = proper_faces(rec.slack);
    std::vector<std::size_t> order(faces.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return faces[a].count() < faces[b].count();
    });

    // Dimension = longest chain from the vertices upward.
    std::vector<int> dim(faces.size(), 0);
    for (std::size_t oi = 0; oi < order.size(); ++oi) {
        std::size_t i = order[oi];
        int best = -1;
        for (std::size_t oj = 0; oj < oi; ++oj) {
            std::size_t j = order[oj];
            if (faces[j].count() >= faces[i].count()) continue;
            if (faces[j].subset_of(faces[i])) best = std::max(best, dim[j]);
        }
        dim[i] = best + 1;
    }

    FVector fv;
    fv.f.assign(std::size_t(rec.dim), 0);
    for (std::size_t i = 0; i < faces.size(); ++i) {
        if (dim[i] >= rec.dim) throw std::logic_error("f_vector: face dimension out of range");
        ++fv.f[std::size_t(dim[i])];
    }
    if (fv.f[0] != rec.vertex_count() || fv.f[std::size_t(rec.dim - 1)] != rec.facet_count())
        throw std::logic_error("f_vector: boundary counts disagree with the slack matrix");
    long long euler = 0;
    for (std::size_t i = 0; i < fv.f.size(); ++i) euler += (i % 2 ? -1 : 1) * fv.f[i];
    if (euler != 1 - (rec.dim % 2 ? -1 : 1))
        throw std::logic_error("f_vector: Euler relation violated");
    return fv;
}

bool is_centrally_symmetric(const PolytopeRecord& rec) {
    const BinaryMatrix& s = rec.slack;
    std::set<std::string> cols;
    for (int j = 0; j < s.cols(); ++j) cols.insert(s.col(j).bytes());
    for (int j = 0; j < s.cols(); ++j)
        if (!cols.count(s.col(j).complement().bytes())) return false;
    return true;
}

bool has_simple_vertex(const PolytopeRecord& rec) {
    for (int j = 0; j < rec.slack.cols(); ++j)
        if (int(rec.slack.col(j).complement().count()) == rec.dim) return true;
    return false;
}

bool has_simplicial_facet(const PolytopeRecord& rec) {
    for (int i = 0; i < rec.slack.rows(); ++i)
        if (int(rec.slack.row_zeros(i).count()) == rec.dim) return true;
    return false;
}

bool is_polar_two_level(const PolytopeRecord& rec, const Database& same_dim) {
    return same_dim.contains(canonical_form(rec.slack.transposed()));
}

bool is_suspension(const PolytopeRecord& rec) {
    const BinaryMatrix& s = rec.slack;
    for (int i = 0; i < s.rows(); ++i) {
        PolytopeRecord cored = with_core_first(rec, i);
        HEmbedding emb = h_embedding(cored);
        // Row 0 of the re-cored record reads x_1 >= 0; its zero columns are
        // the base copy, the rest sit on the x_1 = 1 translate.
        std::vector<int> top, bottom;
        for (int j = 0; j < cored.slack.cols(); ++j)
            (cored.slack.at(0, j) ? top : bottom).push_back(j);
        std::map<IntVec, int> bottom_at;
        for (int j : bottom) bottom_at[emb.vertices[std::size_t(j)]] = j;

        std::vector<BitVec> zeros;
        for (int r = 0; r < cored.slack.rows(); ++r) zeros.push_back(cored.slack.row_zeros(r));

        for (int a : top) {
            for (int v : bottom) {
                BitVec w(std::size_t(cored.slack.cols()));
                bool ok = true;
                for (int p : top) {
                    IntVec shifted = emb.vertices[std::size_t(p)];
                    for (std::size_t k = 0; k < shifted.size(); ++k)
                        shifted[k] += emb.vertices[std::size_t(v)][k] - emb.vertices[std::size_t(a)][k];
                    auto it = bottom_at.find(shifted);
                    if (it == bottom_at.end()) {
                        ok = false;
                        break;
                    }
                    w.set(std::size_t(it->second));
                }
                if (!ok) continue;
                // w is a face's vertex set iff it is closed under the
                // facet-vertex Galois closure.
                BitVec closure = BitVec::ones(std::size_t(cored.slack.cols()));
                for (const BitVec& z : zeros)
                    if (w.subset_of(z)) closure &= z;
                if (closure == w) return true;
            }
        }
    }
    return false;
}

ClassFlags classify(const PolytopeRecord& rec, const Database& same_dim) {
    ClassFlags f;
    f.centrally_symmetric = is_centrally_symmetric(rec);
    f.polar_two_level = is_polar_two_level(rec, same_dim);
    f.simple_vertex = has_simple_vertex(rec);
    f.simplicial_facet = has_simplicial_facet(rec);
    f.suspension = is_suspension(rec);
    return f;
}

std::string conjecture_report(const Database& db, const std::vector<FVector>& fvecs) {
    std::ostringstream out;
    const int d = db.dim;
    const long long bound = (long long)d << (d + 1);
    long long best = -1;
    std::size_t best_i = 0;
    for (std::size_t i = 0; i < db.records.size(); ++i) {
        long long prod = fvecs[i].f.front() * fvecs[i].f.back();
        if (prod > best) {
            best = prod;
            best_i = i;
        }
    }
    out << "dim " << d << " records " << db.records.size() << "\n";
    if (best >= 0)
        out << "max f0*f" << d - 1 << " = " << best << " (record " << best_i << ", f0 "
            << fvecs[best_i].f.front() << ", f" << d - 1 << " " << fvecs[best_i].f.back()
            << "), bound d*2^(d+1) = " << bound << (best <= bound ? ": holds" : ": VIOLATED")
            << "\n";
    long long three_d = 1;
    for (int k = 0; k < d; ++k) three_d *= 3;
    bool kalai_ok = true;
    for (std::size_t i = 0; i < db.records.size(); ++i) {
        if (!is_centrally_symmetric(db.records[i])) continue;
        long long nonempty = fvecs[i].total_proper() + 1;  // faces including the polytope
        bool ok = nonempty >= three_d;
        kalai_ok = kalai_ok && ok;
        out << "cs record " << i << ": faces incl empty and full = " << nonempty + 1
            << ", nonempty = " << nonempty << ", 3^d = " << three_d
            << (ok ? ": holds" : ": VIOLATED") << "\n";
    }
    out << "kalai 3^d over cs records: " << (kalai_ok ? "holds" : "VIOLATED") << "\n";
    bool fv_ok = true;
    for (const FVector& fv : fvecs)
        fv_ok = fv_ok && fv.f.front() <= (1LL << d) && fv.f.back() <= (1LL << d);
    out << "f0 <= 2^d and f" << d - 1 << " <= 2^d: " << (fv_ok ? "holds" : "VIOLATED") << "\n";
    return out.str();
}

std::string export_stats(const Database& db, const std::vector<FVector>& fvecs,
                         const std::vector<ClassFlags>& flags, StatsKind kind) {
    std::ostringstream out;
    switch (kind) {
        case StatsKind::vertices_histogram: {
            std::map<int, long long> hist;
            for (const PolytopeRecord& r : db.records) ++hist[r.vertex_count()];
            out << "vertices,count\n";
            for (auto [v, c] : hist) out << v << "," << c << "\n";
            break;
        }
        case StatsKind::facets_vs_vertices: {
            out << "record,vertices,facets\n";
            for (std::size_t i = 0; i < db.records.size(); ++i)
                out << i << "," << db.records[i].vertex_count() << ","
                    << db.records[i].facet_count() << "\n";
            break;
        }
        case StatsKind::suspension_table: {
            long long susp = 0;
            for (const ClassFlags& f : flags) susp += f.suspension ? 1 : 0;
            double ratio = db.records.empty() ? 0.0 : double(susp) / double(db.records.size());
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.3f", ratio);
            out << "dim,two_level,suspensions,ratio\n";
            out << db.dim << "," << db.records.size() << "," << susp << "," << buf << "\n";
            break;
        }
    }
    (void)fvecs;
    return out.str();
}

}  // namespace tlp
