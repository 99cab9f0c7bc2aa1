#pragma once

#include <optional>
#include <span>
#include <vector>

#include "digraph.hpp"
#include "witness.hpp"

namespace hb {

// Exhaustive backtracking searchers. All branching is least-vertex-first, so
// identical inputs yield identical (lexicographically least) witnesses.

std::optional<Witness> find_hamiltonian_cycle(const Digraph& g);   // order >= 2
std::optional<Witness> find_hamiltonian_path(const Digraph& g);
std::optional<Witness> find_hamiltonian_bypass(const Digraph& g);  // order >= 3

// Two internally disjoint (x,y)-paths of arc-lengths n-1 and p-n+1 covering
// V; 2 <= n <= p-1 (n = 2 delegates to the bypass search).
std::optional<Witness> find_dpn(const Digraph& g, int n);

// least cycle of length exactly k (anchored at its minimum vertex), if any
std::optional<std::vector<int>> find_cycle_of_length(const Digraph& g, int k);

// lexicographically least cycle of maximum length; nullopt when acyclic
std::optional<std::vector<int>> find_longest_cycle(const Digraph& g);

// achievable cycle lengths within [2, p]; order <= 10
std::vector<int> cycle_spectrum(const Digraph& g);

inline constexpr int kSpectrumOrderLimit = 10;

bool is_pancyclic(const Digraph& g);  // spectrum contains all of [3, p]

// Splices x between two consecutive path vertices (smallest slot); nullopt
// when no slot has both arcs.
std::optional<std::vector<int>> insert_into_path(const Digraph& g, std::span<const int> path, int x);

// Cycle of length k through x using only V(C) and x; 2 <= k <= |C|+1.
// Succeeds whenever d(x, V(C)) >= |C|+1.
std::optional<std::vector<int>> insert_into_cycle(const Digraph& g, std::span<const int> cycle, int x,
                                                  int k);

struct PathExtension {
    std::vector<int> path;  // same endpoints as the input path
    VertexSet leftover;     // members of S that could not be inserted
};

// Repeated insertion of S-members until none fits. When every y in S has
// d(y) >= 2p - |P| the leftover set is empty.
PathExtension extend_path_maximally(const Digraph& g, std::span<const int> path, VertexSet s);

// Cycle with vertex set exactly V(C) u S, if one exists; S = {} returns C
// unchanged. Succeeds whenever every y in S has d(y) >= 2p - |C| - 1.
std::optional<std::vector<int>> extend_cycle_with_set(const Digraph& g, std::span<const int> cycle,
                                                      VertexSet s);

// Structure report for a (p-1)-cycle C plus the one off-cycle vertex y in a
// bypass-free digraph (the precondition is re-verified internally):
//   (i)   od(y) and id(y) meet every consecutive cycle pair at most once
//   (ii)  2 od(y) <= p-1, 2 id(y) <= p-1, d(y) <= p-1
//   (iii) whenever x_k -> y -> x_{k+1}, no arc x_{i+1} -> x_i for i != k
// (iii) is evaluated per qualifying k and reported individually.
struct Lemma35Report {
    bool consecutive_pairs = false;
    bool degree_bounds = false;
    bool reversed_arc_exclusion = false;
    std::vector<std::pair<int, bool>> per_k;  // (k index into C, clause holds)
    bool all() const { return consecutive_pairs && degree_bounds && reversed_arc_exclusion; }
};

Lemma35Report check_lemma_35(const Digraph& g, std::span<const int> cycle, int y);

}  // namespace hb
