#ifndef TURAN_BITSET_HPP
#define TURAN_BITSET_HPP

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace turan {

// Fixed-width bitset used for adjacency rows and vertex sets. Width is set
// at construction; all binary operations require equal widths.
class Bitset {
  public:
    Bitset() = default;

    explicit Bitset(int nbits) : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

    int size() const { return nbits_; }

    bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }

    void set(int i) { words_[i >> 6] |= (std::uint64_t{1} << (i & 63)); }

    void reset(int i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

    void clear() { std::fill(words_.begin(), words_.end(), 0); }

    void set_all() {
        std::fill(words_.begin(), words_.end(), ~std::uint64_t{0});
        trim();
    }

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

    Bitset& operator&=(const Bitset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }

    Bitset& operator|=(const Bitset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }

    // this := this & ~o
    Bitset& and_not(const Bitset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }

    bool is_subset_of(const Bitset& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    bool intersects(const Bitset& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    int intersection_count(const Bitset& o) const {
        int c = 0;
        for (std::size_t i = 0; i < words_.size(); ++i)
            c += std::popcount(words_[i] & o.words_[i]);
        return c;
    }

    // First set bit with index >= from, or -1.
    int next(int from) const {
        if (from >= nbits_) return -1;
        int wi = from >> 6;
        std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (from & 63));
        while (true) {
            if (w) return (wi << 6) + std::countr_zero(w);
            if (++wi >= static_cast<int>(words_.size())) return -1;
            w = words_[wi];
        }
    }

    template <typename F>
    void for_each(F&& f) const {
        for (int i = next(0); i >= 0; i = next(i + 1)) f(i);
    }

    std::vector<int> to_vector() const {
        std::vector<int> v;
        v.reserve(count());
        for_each([&](int i) { v.push_back(i); });
        return v;
    }

    bool operator==(const Bitset& o) const {
        return nbits_ == o.nbits_ && words_ == o.words_;
    }

    static Bitset from_indices(int nbits, const std::vector<int>& idx) {
        Bitset b(nbits);
        for (int i : idx) {
            if (i < 0 || i >= nbits) throw std::invalid_argument("bit index out of range");
            b.set(i);
        }
        return b;
    }

  private:
    void trim() {
        int extra = static_cast<int>(words_.size()) * 64 - nbits_;
        if (extra > 0 && !words_.empty())
            words_.back() &= ~std::uint64_t{0} >> extra;
    }

    int nbits_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace turan

#endif
