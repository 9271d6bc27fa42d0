#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace mlines {

inline constexpr int kMaxVertices = 512;

// Fixed-capacity set of vertex ids in [0, kMaxVertices), stored as 64-bit words.
class VertexSet {
public:
    static constexpr int kWords = kMaxVertices / 64;

    constexpr VertexSet() = default;
    VertexSet(std::initializer_list<int> vs) {
        for (int v : vs) insert(v);
    }

    // {0, 1, ..., n-1}
    static VertexSet range(int n) {
        VertexSet s;
        for (int w = 0; w < kWords && n > 0; ++w, n -= 64)
            s.words_[w] = n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
        return s;
    }

    bool contains(int v) const { return (words_[v >> 6] >> (v & 63)) & 1U; }
    void insert(int v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
    void erase(int v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

    int size() const {
        int c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }
    bool empty() const {
        for (auto w : words_)
            if (w) return false;
        return true;
    }

    // Smallest member, or -1 when empty.
    int min() const {
        for (int w = 0; w < kWords; ++w)
            if (words_[w]) return w * 64 + std::countr_zero(words_[w]);
        return -1;
    }

    bool is_subset_of(const VertexSet& o) const {
        for (int w = 0; w < kWords; ++w)
            if (words_[w] & ~o.words_[w]) return false;
        return true;
    }
    bool intersects(const VertexSet& o) const {
        for (int w = 0; w < kWords; ++w)
            if (words_[w] & o.words_[w]) return true;
        return false;
    }

    VertexSet& operator&=(const VertexSet& o) {
        for (int w = 0; w < kWords; ++w) words_[w] &= o.words_[w];
        return *this;
    }
    VertexSet& operator|=(const VertexSet& o) {
        for (int w = 0; w < kWords; ++w) words_[w] |= o.words_[w];
        return *this;
    }
    VertexSet& operator-=(const VertexSet& o) {
        for (int w = 0; w < kWords; ++w) words_[w] &= ~o.words_[w];
        return *this;
    }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    template <class F>
    void for_each(F&& f) const {
        for (int w = 0; w < kWords; ++w) {
            for (auto bits = words_[w]; bits; bits &= bits - 1)
                f(w * 64 + std::countr_zero(bits));
        }
    }

    std::vector<int> members() const {
        std::vector<int> out;
        for_each([&](int v) { out.push_back(v); });
        return out;
    }

    std::string to_string() const {
        std::string s = "{";
        bool first = true;
        for_each([&](int v) {
            if (!first) s += ',';
            s += std::to_string(v);
            first = false;
        });
        return s + "}";
    }

    std::size_t hash() const {
        std::size_t h = 0x9e3779b97f4a7c15ULL;
        for (auto w : words_) h = (h ^ w) * 0x100000001b3ULL + (h >> 29);
        return h;
    }

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

    // Lexicographic order of the sorted member lists.
    friend std::strong_ordering operator<=>(const VertexSet& a, const VertexSet& b) {
        int w = 0;
        while (w < kWords && a.words_[w] == b.words_[w]) ++w;
        if (w == kWords) return std::strong_ordering::equal;
        const auto diff = a.words_[w] ^ b.words_[w];
        const int x = w * 64 + std::countr_zero(diff);
        // The set lacking x is smaller iff it has nothing beyond x (it is a prefix).
        const bool a_has = a.contains(x);
        const VertexSet& lacking = a_has ? b : a;
        const bool lacking_is_prefix = !lacking.any_above(x);
        if (a_has) return lacking_is_prefix ? std::strong_ordering::greater : std::strong_ordering::less;
        return lacking_is_prefix ? std::strong_ordering::less : std::strong_ordering::greater;
    }

private:
    bool any_above(int x) const {
        const int w0 = x >> 6;
        const int bit = x & 63;
        if (bit < 63 && (words_[w0] >> (bit + 1))) return true;
        for (int w = w0 + 1; w < kWords; ++w)
            if (words_[w]) return true;
        return false;
    }

    std::array<std::uint64_t, kWords> words_{};
};

}  // namespace mlines

template <>
struct std::hash<mlines::VertexSet> {
    std::size_t operator()(const mlines::VertexSet& s) const noexcept { return s.hash(); }
};
