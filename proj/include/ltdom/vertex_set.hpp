#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace ltdom {

// Subset of {0..n-1} backed by 64-bit words. A VertexSet is a value type tied
// to a fixed universe size n; combining sets from different universes throws.
class VertexSet {
public:
    VertexSet() = default;

    explicit VertexSet(int universe) : n_(check_universe(universe)), words_(word_count_for(universe), 0) {}

    static VertexSet full(int universe) {
        VertexSet s(universe);
        for (auto& w : s.words_) w = ~uint64_t{0};
        s.clear_tail();
        return s;
    }

    static VertexSet of(int universe, std::initializer_list<int> vertices) {
        VertexSet s(universe);
        for (int v : vertices) s.set(v);
        return s;
    }

    int universe() const { return n_; }
    std::size_t word_count() const { return words_.size(); }
    uint64_t word(std::size_t i) const { return i < words_.size() ? words_[i] : 0; }
    const std::vector<uint64_t>& words() const { return words_; }

    bool test(int v) const {
        check_vertex(v);
        return (words_[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1;
    }

    void set(int v) {
        check_vertex(v);
        words_[static_cast<std::size_t>(v) >> 6] |= uint64_t{1} << (v & 63);
    }

    void reset(int v) {
        check_vertex(v);
        words_[static_cast<std::size_t>(v) >> 6] &= ~(uint64_t{1} << (v & 63));
    }

    int count() const {
        int c = 0;
        for (uint64_t w : words_) c += std::popcount(w);
        return c;
    }

    bool empty() const {
        for (uint64_t w : words_)
            if (w) return false;
        return true;
    }

    bool any() const { return !empty(); }

    // Smallest member, or -1 when empty.
    int first() const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i]) return static_cast<int>(i * 64 + std::countr_zero(words_[i]));
        return -1;
    }

    bool contains(const VertexSet& sub) const {
        check_same(sub);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (sub.words_[i] & ~words_[i]) return false;
        return true;
    }

    bool intersects(const VertexSet& other) const {
        check_same(other);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & other.words_[i]) return true;
        return false;
    }

    VertexSet& operator|=(const VertexSet& o) {
        check_same(o);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    VertexSet& operator&=(const VertexSet& o) {
        check_same(o);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    VertexSet& operator-=(const VertexSet& o) {
        check_same(o);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    // Complement within the universe.
    VertexSet operator~() const {
        VertexSet r(*this);
        for (auto& w : r.words_) w = ~w;
        r.clear_tail();
        return r;
    }

    friend bool operator==(const VertexSet& a, const VertexSet& b) {
        return a.n_ == b.n_ && a.words_ == b.words_;
    }
    friend bool operator!=(const VertexSet& a, const VertexSet& b) { return !(a == b); }

    // Total order (universe, then little-endian word comparison); for use as
    // map keys and deterministic sorting.
    friend bool operator<(const VertexSet& a, const VertexSet& b) {
        if (a.n_ != b.n_) return a.n_ < b.n_;
        for (std::size_t i = a.words_.size(); i-- > 0;)
            if (a.words_[i] != b.words_[i]) return a.words_[i] < b.words_[i];
        return false;
    }

    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            uint64_t w = words_[i];
            while (w) {
                int v = static_cast<int>(i * 64 + std::countr_zero(w));
                f(v);
                w &= w - 1;
            }
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(count()));
        for_each([&](int v) { out.push_back(v); });
        return out;
    }

    std::string to_string() const {
        std::string s = "{";
        bool first_elem = true;
        for_each([&](int v) {
            if (!first_elem) s += ",";
            s += std::to_string(v);
            first_elem = false;
        });
        s += "}";
        return s;
    }

private:
    static int check_universe(int n) {
        if (n < 0) throw std::invalid_argument("VertexSet universe must be nonnegative");
        return n;
    }
    static std::size_t word_count_for(int n) { return (static_cast<std::size_t>(n) + 63) / 64; }

    void check_vertex(int v) const {
        if (v < 0 || v >= n_)
            throw std::invalid_argument("vertex " + std::to_string(v) + " outside universe of size " +
                                        std::to_string(n_));
    }
    void check_same(const VertexSet& o) const {
        if (n_ != o.n_)
            throw std::invalid_argument("VertexSet universe mismatch: " + std::to_string(n_) + " vs " +
                                        std::to_string(o.n_));
    }
    void clear_tail() {
        if (n_ % 64 != 0 && !words_.empty()) words_.back() &= (uint64_t{1} << (n_ % 64)) - 1;
    }

    int n_ = 0;
    std::vector<uint64_t> words_;
};

} // namespace ltdom
