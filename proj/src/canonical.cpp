#include "canonical.hpp"

#include <algorithm>
#include <stdexcept>

namespace hb {

namespace {

void check_order_limit(const Digraph& g, const char* what) {
    if (g.order() > kCanonicalOrderLimit)
        throw std::invalid_argument(std::string(what) + " limited to order <= " +
                                    std::to_string(kCanonicalOrderLimit) + ", got " +
                                    std::to_string(g.order()));
}

CanonicalForm string_of(const Digraph& g, const std::vector<int>& pos_to_vertex) {
    CanonicalForm f;
    f.order = g.order();
    int pos = 0;
    for (int i = 0; i < f.order; ++i) {
        for (int j = 0; j < f.order; ++j) {
            if (j == i) continue;
            if (g.has_arc(pos_to_vertex[i], pos_to_vertex[j])) f.set_bit(pos);
            ++pos;
        }
    }
    return f;
}

// Enumerates every permutation that can realize the minimal string: the
// first position must take a vertex of minimum out-degree, and the rest of
// row 0 is forced to the pattern 0...01...1, which pins each later position
// to either the non-out-neighbors or the out-neighbors of that first vertex.
struct MinSearch {
    const Digraph& g;
    std::vector<int> assign;
    std::vector<bool> used;
    int zero_block_end;  // positions [1, zero_block_end) take non-out-neighbors
    uint64_t first_out;
    CanonicalForm best;
    bool have_best = false;

    explicit MinSearch(const Digraph& gr) : g(gr), assign(gr.order()), used(gr.order(), false) {}

    void run() {
        int p = g.order();
        int min_od = p;
        for (int v = 0; v < p; ++v) min_od = std::min(min_od, g.out_degree(v));
        zero_block_end = 1 + (p - 1 - min_od);
        for (int v = 0; v < p; ++v) {
            if (g.out_degree(v) != min_od) continue;
            assign[0] = v;
            used[v] = true;
            first_out = g.out_bits(v);
            place(1);
            used[v] = false;
        }
    }

    void place(int t) {
        int p = g.order();
        if (t == p) {
            CanonicalForm f = string_of(g, assign);
            if (!have_best || f < best) {
                best = f;
                have_best = true;
            }
            return;
        }
        bool want_out = t >= zero_block_end;
        for (int v = 0; v < p; ++v) {
            if (used[v] || v == assign[0]) continue;
            if ((((first_out >> v) & 1) != 0) != want_out) continue;
            assign[t] = v;
            used[v] = true;
            place(t + 1);
            used[v] = false;
        }
    }
};

}  // namespace

CanonicalForm canonical_form(const Digraph& g) {
    check_order_limit(g, "canonical form");
    if (g.order() == 1) return CanonicalForm{1, {}};
    MinSearch search(g);
    search.run();
    return search.best;
}

std::string CanonicalForm::to_text() const {
    static const char* kHex = "0123456789abcdef";
    std::string out = std::to_string(order);
    out += ':';
    int nbits = bit_length();
    for (int i = 0; i < nbits; i += 4) {
        int nibble = 0;
        for (int j = 0; j < 4; ++j)
            if (i + j < nbits && bit(i + j)) nibble |= 8 >> j;
        out += kHex[nibble];
    }
    return out;
}

CanonicalForm CanonicalForm::from_text(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("canonical form text missing ':'");
    int order = std::stoi(text.substr(0, colon));
    if (order < 1 || order > kCanonicalOrderLimit)
        throw std::invalid_argument("canonical form order out of range");
    CanonicalForm f;
    f.order = order;
    int nbits = f.bit_length();
    std::string hex = text.substr(colon + 1);
    if (static_cast<int>(hex.size()) != (nbits + 3) / 4)
        throw std::invalid_argument("canonical form hex length mismatch");
    for (int i = 0; i < static_cast<int>(hex.size()); ++i) {
        char c = hex[i];
        int nibble;
        if (c >= '0' && c <= '9')
            nibble = c - '0';
        else if (c >= 'a' && c <= 'f')
            nibble = c - 'a' + 10;
        else
            throw std::invalid_argument("canonical form hex digit invalid");
        for (int j = 0; j < 4; ++j) {
            int pos = i * 4 + j;
            if (nibble & (8 >> j)) {
                if (pos >= nbits) throw std::invalid_argument("canonical form padding bits must be zero");
                f.set_bit(pos);
            }
        }
    }
    return f;
}

Digraph CanonicalForm::to_digraph() const {
    Digraph g(order);
    std::vector<Arc> arcs;
    int pos = 0;
    for (int i = 0; i < order; ++i)
        for (int j = 0; j < order; ++j) {
            if (j == i) continue;
            if (bit(pos)) arcs.emplace_back(i, j);
            ++pos;
        }
    return Digraph(order, std::span<const Arc>(arcs));
}

Digraph apply_permutation(const Digraph& g, const std::vector<int>& perm) {
    if (static_cast<int>(perm.size()) != g.order())
        throw std::invalid_argument("permutation length does not match order");
    std::vector<Arc> arcs;
    arcs.reserve(g.arc_count());
    for (auto [u, v] : g.arcs()) arcs.emplace_back(perm[u], perm[v]);
    return Digraph(g.order(), std::span<const Arc>(arcs));
}

namespace {

struct IsoSearch {
    const Digraph& a;
    const Digraph& b;
    std::vector<int> map;      // a-vertex -> b-vertex
    std::vector<bool> used_b;

    IsoSearch(const Digraph& x, const Digraph& y)
        : a(x), b(y), map(x.order(), -1), used_b(y.order(), false) {}

    bool extend(int u) {
        if (u == a.order()) return true;
        for (int w = 0; w < b.order(); ++w) {
            if (used_b[w]) continue;
            if (a.out_degree(u) != b.out_degree(w) || a.in_degree(u) != b.in_degree(w)) continue;
            bool ok = true;
            for (int prev = 0; prev < u && ok; ++prev) {
                if (a.has_arc(u, prev) != b.has_arc(w, map[prev])) ok = false;
                if (a.has_arc(prev, u) != b.has_arc(map[prev], w)) ok = false;
            }
            if (!ok) continue;
            map[u] = w;
            used_b[w] = true;
            if (extend(u + 1)) return true;
            used_b[w] = false;
            map[u] = -1;
        }
        return false;
    }
};

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const Digraph& a, const Digraph& b) {
    check_order_limit(a, "isomorphism search");
    check_order_limit(b, "isomorphism search");
    if (a.order() != b.order() || a.arc_count() != b.arc_count()) return std::nullopt;
    IsoSearch s(a, b);
    if (!s.extend(0)) return std::nullopt;
    return s.map;
}

}  // namespace hb
