#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "kempe/colouring.hpp"

namespace kempe::detail {

// Packs an assignment vector into 64-bit words, vertex 0 in the most significant
// bits. Lexicographic order on assignments equals lexicographic order on words.
class ColouringCodec {
public:
    ColouringCodec(int n, int k)
        : n_(n), bits_(std::max(1, static_cast<int>(std::bit_width(static_cast<unsigned>(k - 1))))),
          per_word_(64 / bits_), words_(std::max(1, (n + per_word_ - 1) / per_word_))
    {
    }

    int words() const noexcept { return words_; }

    void encode(std::span<const Colour> colours, std::uint64_t* out) const noexcept
    {
        std::fill(out, out + words_, 0);
        for (int v = 0; v < n_; ++v) {
            const int slot = v % per_word_;
            out[v / per_word_] |= static_cast<std::uint64_t>(colours[static_cast<std::size_t>(v)])
                                  << (bits_ * (per_word_ - 1 - slot));
        }
    }

    void decode(const std::uint64_t* in, std::span<Colour> colours) const noexcept
    {
        const std::uint64_t mask = (std::uint64_t{1} << bits_) - 1;
        for (int v = 0; v < n_; ++v) {
            const int slot = v % per_word_;
            colours[static_cast<std::size_t>(v)]
                = static_cast<Colour>((in[v / per_word_] >> (bits_ * (per_word_ - 1 - slot))) & mask);
        }
    }

    /// XORs the packed colour of v with `delta`; swapping colours a and b on v is
    /// toggle(key, v, a ^ b).
    void toggle(std::uint64_t* key, int v, std::uint64_t delta) const noexcept
    {
        key[v / per_word_] ^= delta << (bits_ * (per_word_ - 1 - v % per_word_));
    }

private:
    int n_;
    int bits_;
    int per_word_;
    int words_;
};

// Append-only store of packed colourings that must be pushed in increasing order;
// lookup is a binary search.
class SortedColouringStore {
public:
    explicit SortedColouringStore(int words) : words_(words) {}

    std::size_t size() const noexcept { return data_.size() / static_cast<std::size_t>(words_); }

    void push(const std::uint64_t* key) { data_.insert(data_.end(), key, key + words_); }

    const std::uint64_t* at(std::size_t i) const noexcept { return data_.data() + i * words_; }

    std::optional<std::size_t> find(const std::uint64_t* key) const noexcept
    {
        std::size_t lo = 0;
        std::size_t hi = size();
        while (lo < hi) {
            const std::size_t mid = lo + (hi - lo) / 2;
            const std::uint64_t* probe = at(mid);
            const bool less = std::lexicographical_compare(probe, probe + words_, key, key + words_);
            if (less) {
                lo = mid + 1;
            } else {
                hi = mid;
            }
        }
        if (lo < size() && std::equal(key, key + words_, at(lo))) {
            return lo;
        }
        return std::nullopt;
    }

private:
    int words_;
    std::vector<std::uint64_t> data_;
};

} // namespace kempe::detail
