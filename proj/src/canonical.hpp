#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "digraph.hpp"

namespace hb {

// Lexicographically minimal adjacency bit string (rows with the diagonal
// removed, row-major) over all vertex permutations. Two digraphs have equal
// forms iff they are isomorphic. Bits are packed MSB-first so comparing the
// two words compares the strings.
struct CanonicalForm {
    int order = 0;
    std::array<uint64_t, 2> words{};

    auto operator<=>(const CanonicalForm&) const = default;

    int bit_length() const { return order * (order - 1); }
    bool bit(int pos) const { return (words[pos >> 6] >> (63 - (pos & 63))) & 1; }
    void set_bit(int pos) { words[pos >> 6] |= uint64_t{1} << (63 - (pos & 63)); }

    // bit string as hex, MSB-first, zero-padded at the tail to a nibble
    // boundary; prefixed with the order as "<p>:<hex>"
    std::string to_text() const;
    static CanonicalForm from_text(const std::string& text);

    // the canonically labeled representative itself
    Digraph to_digraph() const;
};

inline constexpr int kCanonicalOrderLimit = 10;

CanonicalForm canonical_form(const Digraph& g);

// Relabels: vertex v of g becomes perm[v] in the result.
Digraph apply_permutation(const Digraph& g, const std::vector<int>& perm);

// Backtracking isomorphism search with degree-pair pruning; returns a map
// (vertex of a -> vertex of b), orders <= 10.
std::optional<std::vector<int>> find_isomorphism(const Digraph& a, const Digraph& b);

}  // namespace hb
