#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace hb {

using Arc = std::pair<int, int>;

// Subset of the vertex range [0, p) as a 64-bit mask.
struct VertexSet {
    uint64_t bits = 0;

    VertexSet() = default;
    explicit VertexSet(uint64_t b) : bits(b) {}

    static VertexSet full(int order) {
        return VertexSet{order >= 64 ? ~uint64_t{0} : (uint64_t{1} << order) - 1};
    }
    static VertexSet of(std::initializer_list<int> vs) {
        VertexSet s;
        for (int v : vs) s.add(v);
        return s;
    }

    bool contains(int v) const { return (bits >> v) & 1; }
    VertexSet& add(int v) {
        bits |= uint64_t{1} << v;
        return *this;
    }
    VertexSet& remove(int v) {
        bits &= ~(uint64_t{1} << v);
        return *this;
    }
    int size() const { return std::popcount(bits); }
    bool empty() const { return bits == 0; }
    bool subset_of(VertexSet other) const { return (bits & ~other.bits) == 0; }
    std::vector<int> to_vector() const;

    friend bool operator==(VertexSet a, VertexSet b) { return a.bits == b.bits; }
};

struct DegreeTriple {
    int out = 0;
    int in = 0;
    int total = 0;
};

// Simple loop-free digraph on p <= 64 vertices, stored as one adjacency
// bit row per vertex (and the transpose, so in-neighborhood queries are
// single word reads). Values are immutable after construction.
class Digraph {
public:
    static constexpr int kMaxOrder = 64;

    explicit Digraph(int order);
    Digraph(int order, std::span<const Arc> arcs);
    Digraph(int order, std::initializer_list<Arc> arcs);

    // Decodes the row-major off-diagonal arc-bit string used by the
    // enumeration and sampling orders: arc (u,v) lives at bit
    // u*(order-1) + (v < u ? v : v-1), LSB-first within words.
    static Digraph from_arc_bits(int order, std::span<const uint64_t> words);

    int order() const { return order_; }
    int arc_count() const { return arc_count_; }

    bool has_arc(int u, int v) const { return (out_[u] >> v) & 1; }
    bool adjacent(int u, int v) const { return has_arc(u, v) || has_arc(v, u); }

    uint64_t out_bits(int v) const { return out_[v]; }
    uint64_t in_bits(int v) const { return in_[v]; }

    int out_degree(int v) const { return std::popcount(out_[v]); }
    int in_degree(int v) const { return std::popcount(in_[v]); }
    int degree(int v) const { return out_degree(v) + in_degree(v); }

    // od/id/d restricted to A; A = full vertex set gives the global values
    DegreeTriple degrees(int v, VertexSet a) const;
    DegreeTriple degrees(int v) const { return degrees(v, vertices()); }

    VertexSet vertices() const { return VertexSet::full(order_); }
    VertexSet out_set(int v) const { return VertexSet{out_[v]}; }
    VertexSet in_set(int v) const { return VertexSet{in_[v]}; }

    Digraph converse() const;
    Digraph induced(VertexSet a) const;

    std::vector<Arc> arcs() const;

    bool operator==(const Digraph& other) const;

private:
    void add_arc_unchecked(int u, int v);
    void check_vertex(int v) const;

    int order_ = 0;
    int arc_count_ = 0;
    std::array<uint64_t, kMaxOrder> out_{};
    std::array<uint64_t, kMaxOrder> in_{};
};

}  // namespace hb
