#pragma once

#include <cstdint>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "tlp/binary_matrix.hpp"

namespace tlp {

/// Byte string identifying the isomorphism class of a 0/1 matrix under
/// independent row and column permutations. Layout: rows and cols as 32-bit
/// big-endian integers, then the canonical arrangement's rows packed 8 bits
/// per byte, high bit first.
struct CanonicalKey {
    std::string bytes;

    bool operator==(const CanonicalKey& o) const { return bytes == o.bytes; }
    bool operator!=(const CanonicalKey& o) const { return bytes != o.bytes; }
    bool operator<(const CanonicalKey& o) const { return bytes < o.bytes; }
    std::string hex() const;
    static std::optional<CanonicalKey> from_hex(const std::string& h);
};

/// Canonical form under independent row/column permutations, computed on the
/// 2-colored bipartite row/column graph: equitable refinement by incidence
/// counts, then backtracking over the first non-singleton cell, keeping the
/// lexicographically least serialization. Row and column classes are never
/// exchanged, so an m x n and an n x m matrix always get distinct keys.
CanonicalKey canonical_form(const BinaryMatrix& m);

/// Row and column orders realizing the canonical arrangement: applying them
/// via permuted() yields the same matrix for every member of an isomorphism
/// class, so equal permuted forms are an explicit isomorphism certificate.
std::pair<std::vector<int>, std::vector<int>> canonical_arrangement(const BinaryMatrix& m);

bool are_isomorphic(const BinaryMatrix& a, const BinaryMatrix& b);

/// Canonical keys seen so far, optionally carrying a payload index per key.
/// insert_if_absent is linearizable; inserting an existing key is a no-op.
class CanonicalRegistry {
public:
    bool insert_if_absent(const CanonicalKey& key, std::size_t payload = 0);
    bool contains(const CanonicalKey& key) const;
    std::optional<std::size_t> payload(const CanonicalKey& key) const;
    std::size_t size() const;

private:
    mutable std::mutex mu_;
    std::unordered_map<std::string, std::size_t> map_;
};

/// Memoizes canonical_form behind a cheap sort-based normal form. The normal
/// form only permutes rows/columns, so cache hits are always sound.
class CanonicalCache {
public:
    CanonicalKey get(const BinaryMatrix& m);
    std::size_t misses() const { return misses_; }

private:
    std::unordered_map<std::string, CanonicalKey> map_;
    std::size_t misses_ = 0;
};

}  // namespace tlp
