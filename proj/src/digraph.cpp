#include "digraph.hpp"

#include <stdexcept>
#include <string>

namespace hb {

std::vector<int> VertexSet::to_vector() const {
    std::vector<int> out;
    uint64_t b = bits;
    while (b) {
        int v = std::countr_zero(b);
        out.push_back(v);
        b &= b - 1;
    }
    return out;
}

Digraph::Digraph(int order) : order_(order) {
    if (order < 1 || order > kMaxOrder)
        throw std::invalid_argument("digraph order must be in [1, 64], got " + std::to_string(order));
}

Digraph::Digraph(int order, std::span<const Arc> arcs) : Digraph(order) {
    for (auto [u, v] : arcs) {
        if (u < 0 || u >= order_ || v < 0 || v >= order_)
            throw std::invalid_argument("arc endpoint out of range: (" + std::to_string(u) + "," +
                                        std::to_string(v) + ") with order " + std::to_string(order_));
        if (u == v)
            throw std::invalid_argument("loop arc rejected at vertex " + std::to_string(u));
        add_arc_unchecked(u, v);  // duplicates are idempotent
    }
}

Digraph::Digraph(int order, std::initializer_list<Arc> arcs)
    : Digraph(order, std::span<const Arc>(arcs.begin(), arcs.size())) {}

Digraph Digraph::from_arc_bits(int order, std::span<const uint64_t> words) {
    Digraph g(order);
    int bit = 0;
    for (int u = 0; u < order; ++u) {
        for (int v = 0; v < order; ++v) {
            if (v == u) continue;
            if ((words[bit >> 6] >> (bit & 63)) & 1) g.add_arc_unchecked(u, v);
            ++bit;
        }
    }
    return g;
}

void Digraph::add_arc_unchecked(int u, int v) {
    uint64_t m = uint64_t{1} << v;
    if (!(out_[u] & m)) {
        out_[u] |= m;
        in_[v] |= uint64_t{1} << u;
        ++arc_count_;
    }
}

void Digraph::check_vertex(int v) const {
    if (v < 0 || v >= order_)
        throw std::invalid_argument("vertex " + std::to_string(v) + " out of range for order " +
                                    std::to_string(order_));
}

DegreeTriple Digraph::degrees(int v, VertexSet a) const {
    check_vertex(v);
    if (!a.subset_of(vertices()))
        throw std::invalid_argument("vertex set not contained in the digraph's vertex range");
    DegreeTriple t;
    t.out = std::popcount(out_[v] & a.bits);
    t.in = std::popcount(in_[v] & a.bits);
    t.total = t.out + t.in;
    return t;
}

Digraph Digraph::converse() const {
    Digraph g(order_);
    for (int v = 0; v < order_; ++v) {
        g.out_[v] = in_[v];
        g.in_[v] = out_[v];
    }
    g.arc_count_ = arc_count_;
    return g;
}

Digraph Digraph::induced(VertexSet a) const {
    if (a.empty()) throw std::invalid_argument("induced subdigraph of an empty vertex set rejected");
    if (!a.subset_of(vertices()))
        throw std::invalid_argument("vertex set not contained in the digraph's vertex range");
    std::vector<int> keep = a.to_vector();  // ascending, so vertex order is inherited
    Digraph g(static_cast<int>(keep.size()));
    for (size_t i = 0; i < keep.size(); ++i)
        for (size_t j = 0; j < keep.size(); ++j)
            if (i != j && has_arc(keep[i], keep[j])) g.add_arc_unchecked(static_cast<int>(i), static_cast<int>(j));
    return g;
}

std::vector<Arc> Digraph::arcs() const {
    std::vector<Arc> out;
    out.reserve(arc_count_);
    for (int u = 0; u < order_; ++u) {
        uint64_t b = out_[u];
        while (b) {
            int v = std::countr_zero(b);
            out.emplace_back(u, v);
            b &= b - 1;
        }
    }
    return out;
}

bool Digraph::operator==(const Digraph& other) const {
    if (order_ != other.order_ || arc_count_ != other.arc_count_) return false;
    for (int v = 0; v < order_; ++v)
        if (out_[v] != other.out_[v]) return false;
    return true;
}

}  // namespace hb
