#pragma once

#include <vector>

#include "digraph.hpp"

namespace hb {

// Partition of V into strong components D_1..D_s such that no arc leaves a
// later component for an earlier one (all arcs between components go from
// lower to higher index). Ties in the topological order are broken by the
// minimum vertex id, so the decomposition is deterministic.
struct ComponentDecomposition {
    std::vector<VertexSet> components;
    int count() const { return static_cast<int>(components.size()); }
};

ComponentDecomposition strong_components_ordered(const Digraph& g);

bool is_strong(const Digraph& g);

// |V| >= k+1 and removing every vertex subset of size <= k-1 leaves a
// strong digraph; k >= 1
bool is_k_strong(const Digraph& g, int k);

// fast path used by the sweep filters: strongness straight off adjacency rows
bool is_strong_rows(int order, const uint64_t* out_rows);

}  // namespace hb
