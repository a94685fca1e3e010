#ifndef TOTBOND_BITSET_HPP
#define TOTBOND_BITSET_HPP

#include <bit>
#include <cstdint>
#include <vector>

namespace totbond {

// Dynamic fixed-capacity bitset over 64-bit words. Graphs at solver scale fit
// in a single word; larger vertex sets fall back to multiple words with the
// same behavior.
class Bitset {
public:
    Bitset() = default;

    explicit Bitset(int nbits) : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

    static Bitset full(int nbits) {
        Bitset b(nbits);
        for (int w = 0; w < (int)b.words_.size(); ++w) b.words_[w] = ~0ull;
        b.trim();
        return b;
    }

    int capacity() const { return nbits_; }

    void set(int i) { words_[i >> 6] |= 1ull << (i & 63); }
    void reset(int i) { words_[i >> 6] &= ~(1ull << (i & 63)); }
    bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

    int count() const {
        int c = 0;
        for (std::uint64_t w : words_) c += std::popcount(w);
        return c;
    }

    bool any() const {
        for (std::uint64_t w : words_)
            if (w) return true;
        return false;
    }

    bool none() const { return !any(); }

    Bitset& operator|=(const Bitset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }

    Bitset& operator&=(const Bitset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }

    // this \ o
    Bitset& subtract(const Bitset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    bool contains_all(const Bitset& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (o.words_[i] & ~words_[i]) return false;
        return true;
    }

    bool intersects(const Bitset& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    int first_set() const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i]) return (int)(i * 64) + std::countr_zero(words_[i]);
        return -1;
    }

    template <typename F>
    void for_each_set(F&& f) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            std::uint64_t w = words_[i];
            while (w) {
                f((int)(i * 64) + std::countr_zero(w));
                w &= w - 1;
            }
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(count());
        for_each_set([&](int v) { out.push_back(v); });
        return out;
    }

    bool operator==(const Bitset& o) const = default;

private:
    void trim() {
        int r = nbits_ & 63;
        if (r && !words_.empty()) words_.back() &= (1ull << r) - 1;
    }

    int nbits_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace totbond

#endif
