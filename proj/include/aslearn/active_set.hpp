#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace aslearn {

/**
 * @brief Canonical, hashable encoding of a set of binding inequality rows.
 *
 * A key is a bitset over the m inequality rows of a program; equality rows
 * are always active and never part of the key. Two keys compare equal iff
 * their binding-index sets are equal. The canonical ordering treats the
 * bitset as an unsigned integer with bit i weighted 2^i, which is total,
 * deterministic, and cheap; it is the tie-break order used by the ensemble
 * policy.
 */
class ActiveSetKey {
  public:
    ActiveSetKey() = default;
    explicit ActiveSetKey(int bit_count);
    static ActiveSetKey from_indices(int bit_count, std::span<const int> indices);

    void set(int i);
    bool test(int i) const;

    int bit_count() const { return bits_; }
    int cardinality() const;
    std::vector<int> indices() const;

    // Hex serialization of the word array, lowest word first.
    std::string to_hex() const;
    static ActiveSetKey from_hex(int bit_count, const std::string& hex);

    std::size_t hash() const { return hash_; }
    void finalize();  // recompute the cached hash after set() calls

    friend bool operator==(const ActiveSetKey& a, const ActiveSetKey& b);
    friend bool operator<(const ActiveSetKey& a, const ActiveSetKey& b);

  private:
    int bits_ = 0;
    std::vector<std::uint64_t> words_;
    std::size_t hash_ = 0;
};

struct ActiveSetKeyHash {
    std::size_t operator()(const ActiveSetKey& k) const { return k.hash(); }
};

}  // namespace aslearn
