#pragma once

// Static predecessor / membership sets over 64-bit integer keys.
//
// Backed by a sorted array with binary search. Callers only see the
// predecessor/member contract, so a faster integer structure can replace the
// internals without touching them.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rlematch/error.hpp"

namespace rlematch {

template <class Payload>
class PredecessorSet {
public:
    using Key = std::uint64_t;

    struct Entry {
        Key key;
        Payload payload;
    };

    PredecessorSet() = default;

    // Throws DuplicateKey when two pairs share a key.
    static PredecessorSet build(std::vector<std::pair<Key, Payload>> pairs) {
        std::sort(pairs.begin(), pairs.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        PredecessorSet set;
        set.entries_.reserve(pairs.size());
        for (auto& [key, payload] : pairs) {
            if (!set.entries_.empty() && set.entries_.back().key == key) {
                throw Error(ErrorCode::DuplicateKey, "key " + std::to_string(key));
            }
            set.entries_.push_back(Entry{key, std::move(payload)});
        }
        return set;
    }

    // Largest key <= x.
    std::optional<Entry> predecessor(Key x) const {
        auto it = std::upper_bound(entries_.begin(), entries_.end(), x,
                                   [](Key k, const Entry& e) { return k < e.key; });
        if (it == entries_.begin()) return std::nullopt;
        return *std::prev(it);
    }

    std::optional<Payload> member(Key x) const {
        auto it = std::lower_bound(entries_.begin(), entries_.end(), x,
                                   [](const Entry& e, Key k) { return e.key < k; });
        if (it == entries_.end() || it->key != x) return std::nullopt;
        return it->payload;
    }

    std::size_t size() const noexcept { return entries_.size(); }
    bool empty() const noexcept { return entries_.empty(); }
    const std::vector<Entry>& entries() const noexcept { return entries_; }

private:
    std::vector<Entry> entries_;
};

}  // namespace rlematch
