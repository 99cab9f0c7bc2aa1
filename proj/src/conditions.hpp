#pragma once

#include <cstdint>

#include "digraph.hpp"

namespace hb {

// Margin of the degree-sum condition over non-adjacent pairs: the minimum of
// d(x)+d(y) - (2p-2). Condition (M_k) holds iff the margin is >= k, vacuously
// for every k when the digraph has no non-adjacent pair (`all_adjacent`).
struct MeynielDeficiency {
    bool all_adjacent = false;
    int margin = 0;  // meaningful only when !all_adjacent

    bool satisfies(int k) const { return all_adjacent || margin >= k; }
};

MeynielDeficiency meyniel_deficiency(const Digraph& g);  // order >= 2

struct ClassicConditions {
    bool nash_williams = false;  // od(x) >= p/2 and id(x) >= p/2 for all x
    bool ghouila_houri = false;  // d(x) >= p for all x
    bool woodall = false;        // od(x)+id(y) >= p whenever the arc x->y is absent
};

ClassicConditions classic_conditions(const Digraph& g);  // order >= 2

struct ExtendedConditions {
    // non-adjacent pairs with a common in-neighbor:
    //   min{d(x),d(y)} >= p-1 and d(x)+d(y) >= 2p-1
    bool bjgl_51 = false;
    // non-adjacent pairs with a common out- or in-neighbor:
    //   min{od(x)+id(y), id(x)+od(y)} >= p
    bool bjgl_52 = false;
    //   d(x)+d(y) >= 2p-1 and min{od(x)+id(y), id(x)+od(y)} >= p-1
    bool bgy_53 = false;
    // ordered triples x,y,z with x,y non-adjacent:
    //   no arc x->z  =>  d(x)+d(y)+od(x)+id(z) >= 3p-2
    //   no arc z->x  =>  d(x)+d(y)+id(x)+od(z) >= 3p-2
    bool manoussakis_54 = false;
    bool manoussakis_54_applicable = false;  // requires order >= 4
};

ExtendedConditions extended_conditions(const Digraph& g);  // order >= 2

struct ConditionReport {
    MeynielDeficiency meyniel;
    ClassicConditions classic;
    ExtendedConditions extended;
};

ConditionReport condition_report(const Digraph& g);

// sweep fast path: margin straight off adjacency rows; returns true when the
// margin is >= k (or there is no non-adjacent pair)
bool meyniel_satisfies_rows(int order, const uint64_t* out_rows, int k);

}  // namespace hb
