#include "aslearn/active_set.hpp"

#include <algorithm>
#include <stdexcept>

#include "aslearn/errors.hpp"

namespace aslearn {

namespace {
constexpr std::uint64_t kFnvOffset = 1469598103934665603ULL;
constexpr std::uint64_t kFnvPrime = 1099511628211ULL;
}  // namespace

ActiveSetKey::ActiveSetKey(int bit_count) : bits_(bit_count) {
    if (bit_count < 0) throw DimensionMismatch("negative bit count for ActiveSetKey");
    words_.assign(static_cast<std::size_t>((bit_count + 63) / 64), 0);
    finalize();
}

ActiveSetKey ActiveSetKey::from_indices(int bit_count, std::span<const int> indices) {
    ActiveSetKey key(bit_count);
    for (int i : indices) key.set(i);
    key.finalize();
    return key;
}

void ActiveSetKey::set(int i) {
    if (i < 0 || i >= bits_) throw DimensionMismatch("ActiveSetKey index out of range");
    words_[static_cast<std::size_t>(i) / 64] |= (1ULL << (static_cast<std::size_t>(i) % 64));
}

bool ActiveSetKey::test(int i) const {
    if (i < 0 || i >= bits_) return false;
    return (words_[static_cast<std::size_t>(i) / 64] >> (static_cast<std::size_t>(i) % 64)) & 1ULL;
}

int ActiveSetKey::cardinality() const {
    int n = 0;
    for (auto w : words_) n += __builtin_popcountll(w);
    return n;
}

std::vector<int> ActiveSetKey::indices() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(cardinality()));
    for (int i = 0; i < bits_; ++i)
        if (test(i)) out.push_back(i);
    return out;
}

std::string ActiveSetKey::to_hex() const {
    static const char* digits = "0123456789abcdef";
    std::string s;
    s.reserve(words_.size() * 16);
    for (auto w : words_)
        for (int nib = 0; nib < 16; ++nib) s.push_back(digits[(w >> (4 * nib)) & 0xF]);
    // trim trailing zeros but keep at least one digit
    while (s.size() > 1 && s.back() == '0') s.pop_back();
    return s;
}

ActiveSetKey ActiveSetKey::from_hex(int bit_count, const std::string& hex) {
    ActiveSetKey key(bit_count);
    for (std::size_t pos = 0; pos < hex.size(); ++pos) {
        char c = hex[pos];
        int v;
        if (c >= '0' && c <= '9') v = c - '0';
        else if (c >= 'a' && c <= 'f') v = 10 + (c - 'a');
        else if (c >= 'A' && c <= 'F') v = 10 + (c - 'A');
        else throw DimensionMismatch("invalid hex digit in ActiveSetKey");
        std::size_t word = pos / 16, nib = pos % 16;
        if (v != 0) {
            if (word >= key.words_.size()) throw DimensionMismatch("hex string exceeds key width");
            key.words_[word] |= (static_cast<std::uint64_t>(v) << (4 * nib));
        }
    }
    key.finalize();
    return key;
}

void ActiveSetKey::finalize() {
    std::uint64_t h = kFnvOffset;
    h = (h ^ static_cast<std::uint64_t>(bits_)) * kFnvPrime;
    for (auto w : words_) {
        for (int byte = 0; byte < 8; ++byte) h = (h ^ ((w >> (8 * byte)) & 0xFF)) * kFnvPrime;
    }
    hash_ = static_cast<std::size_t>(h);
}

bool operator==(const ActiveSetKey& a, const ActiveSetKey& b) {
    return a.bits_ == b.bits_ && a.words_ == b.words_;
}

bool operator<(const ActiveSetKey& a, const ActiveSetKey& b) {
    if (a.bits_ != b.bits_) return a.bits_ < b.bits_;
    // numeric comparison, high word first
    for (std::size_t i = a.words_.size(); i-- > 0;) {
        if (a.words_[i] != b.words_[i]) return a.words_[i] < b.words_[i];
    }
    return false;
}

}  // namespace aslearn
