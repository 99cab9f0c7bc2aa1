#pragma once

#include <string>
#include <vector>

#include "digraph.hpp"

namespace hb {

enum class WitnessKind { HamCycle, HamPath, HamBypass, Dpn, CycleOfLength };

// Certified structure found in a digraph, as explicit vertex sequences.
// For Dpn the primary sequence is the short (x,y)-path of n-1 arcs and
// `second` is the long path of p-n+1 arcs; they share exactly their
// endpoints and together cover every vertex.
struct Witness {
    WitnessKind kind;
    int param = 0;  // n for Dpn, k for CycleOfLength
    std::vector<int> seq;
    std::vector<int> second;
};

// Checks a witness against the digraph by direct arc lookups: arc existence,
// vertex distinctness, coverage, and the per-kind shape rules. Deliberately
// shares nothing with the searchers.
bool validate_witness(const Digraph& g, const Witness& w);

std::string witness_to_string(const Witness& w);

}  // namespace hb
