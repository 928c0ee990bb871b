#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace cores {

// Fixed-width bitset indexed by position in a poset's sorted element list.
// Comparison treats the bitset as a binary number with bit 0 least
// significant; enumeration emits ideals in exactly this order.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

    std::size_t size() const { return n_; }

    bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(__builtin_popcountll(w));
        return c;
    }

    bool any() const {
        for (auto w : words_)
            if (w) return true;
        return false;
    }

    friend bool operator==(const Bitset&, const Bitset&) = default;

    std::strong_ordering operator<=>(const Bitset& other) const {
        if (auto c = n_ <=> other.n_; c != 0) return c;
        for (std::size_t k = words_.size(); k-- > 0;) {
            if (auto c = words_[k] <=> other.words_[k]; c != 0) return c;
        }
        return std::strong_ordering::equal;
    }

    // Visits set bit indices in ascending order.
    template <class F>
    void for_each_set(F&& f) const {
        for (std::size_t k = 0; k < words_.size(); ++k) {
            std::uint64_t w = words_[k];
            while (w) {
                f(k * 64 + static_cast<std::size_t>(__builtin_ctzll(w)));
                w &= w - 1;
            }
        }
    }

private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace cores
