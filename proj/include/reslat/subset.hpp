#pragma once

#include <array>
#include <bit>
#include <cassert>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace reslat {

/// Fixed-width bit set over indices [0, width). Used for carrier subsets,
/// sets of prime indices, and sets of sheaf points; 128 bits is wide enough
/// for every space the toolkit builds at its supported sizes.
class Subset {
public:
    static constexpr int max_width = 128;

    Subset() = default;

    explicit Subset(int width) : width_(width) {
        assert(width >= 0 && width <= max_width);
    }

    static Subset full(int width) {
        Subset s(width);
        for (int i = 0; i < width; ++i) s.set(i);
        return s;
    }

    static Subset single(int width, int bit) {
        Subset s(width);
        s.set(bit);
        return s;
    }

    static Subset of(int width, std::initializer_list<int> bits) {
        Subset s(width);
        for (int b : bits) s.set(b);
        return s;
    }

    int width() const { return width_; }

    bool test(int bit) const {
        assert(bit >= 0 && bit < width_);
        return (words_[bit >> 6] >> (bit & 63)) & 1u;
    }

    void set(int bit) {
        assert(bit >= 0 && bit < width_);
        words_[bit >> 6] |= std::uint64_t{1} << (bit & 63);
    }

    void reset(int bit) {
        assert(bit >= 0 && bit < width_);
        words_[bit >> 6] &= ~(std::uint64_t{1} << (bit & 63));
    }

    int count() const {
        return std::popcount(words_[0]) + std::popcount(words_[1]);
    }

    bool empty() const { return words_[0] == 0 && words_[1] == 0; }

    bool is_full() const { return count() == width_; }

    bool subset_of(const Subset& o) const {
        assert(width_ == o.width_);
        return (words_[0] & ~o.words_[0]) == 0 && (words_[1] & ~o.words_[1]) == 0;
    }

    bool intersects(const Subset& o) const {
        assert(width_ == o.width_);
        return (words_[0] & o.words_[0]) != 0 || (words_[1] & o.words_[1]) != 0;
    }

    Subset operator|(const Subset& o) const {
        assert(width_ == o.width_);
        Subset r(width_);
        r.words_ = {words_[0] | o.words_[0], words_[1] | o.words_[1]};
        return r;
    }

    Subset operator&(const Subset& o) const {
        assert(width_ == o.width_);
        Subset r(width_);
        r.words_ = {words_[0] & o.words_[0], words_[1] & o.words_[1]};
        return r;
    }

    /// Set difference, this minus o.
    Subset minus(const Subset& o) const {
        assert(width_ == o.width_);
        Subset r(width_);
        r.words_ = {words_[0] & ~o.words_[0], words_[1] & ~o.words_[1]};
        return r;
    }

    friend bool operator==(const Subset& a, const Subset& b) {
        return a.width_ == b.width_ && a.words_ == b.words_;
    }

    friend bool operator!=(const Subset& a, const Subset& b) { return !(a == b); }

    /// (cardinality, bit-mask value) ascending; the canonical list order used
    /// everywhere a family of subsets is returned.
    static bool canonical_less(const Subset& a, const Subset& b) {
        int ca = a.count(), cb = b.count();
        if (ca != cb) return ca < cb;
        return value_less(a, b);
    }

    /// Plain bit-mask value order.
    static bool value_less(const Subset& a, const Subset& b) {
        if (a.words_[1] != b.words_[1]) return a.words_[1] < b.words_[1];
        return a.words_[0] < b.words_[0];
    }

    std::vector<int> members() const {
        std::vector<int> r;
        for (int i = 0; i < width_; ++i)
            if (test(i)) r.push_back(i);
        return r;
    }

    std::uint64_t hash() const {
        std::uint64_t h = 0xcbf29ce484222325ULL;
        auto mix = [&h](std::uint64_t v) {
            h ^= v;
            h *= 0x100000001b3ULL;
        };
        mix(words_[0]);
        mix(words_[1]);
        mix(static_cast<std::uint64_t>(width_));
        return h;
    }

    struct Hash {
        std::size_t operator()(const Subset& s) const {
            return static_cast<std::size_t>(s.hash());
        }
    };

private:
    std::array<std::uint64_t, 2> words_{0, 0};
    int width_ = 0;
};

}  // namespace reslat
