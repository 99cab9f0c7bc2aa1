#include "witness.hpp"

namespace hb {

namespace {

bool vertices_valid(const Digraph& g, const std::vector<int>& seq) {
    for (int v : seq)
        if (v < 0 || v >= g.order()) return false;
    return true;
}

bool all_distinct(const std::vector<int>& seq) {
    uint64_t seen = 0;
    for (int v : seq) {
        uint64_t bit = uint64_t{1} << v;
        if (seen & bit) return false;
        seen |= bit;
    }
    return true;
}

bool consecutive_arcs(const Digraph& g, const std::vector<int>& seq) {
    for (size_t i = 0; i + 1 < seq.size(); ++i)
        if (!g.has_arc(seq[i], seq[i + 1])) return false;
    return true;
}

uint64_t mask_of(const std::vector<int>& seq) {
    uint64_t m = 0;
    for (int v : seq) m |= uint64_t{1} << v;
    return m;
}

}  // namespace

bool validate_witness(const Digraph& g, const Witness& w) {
    int p = g.order();
    if (!vertices_valid(g, w.seq) || !vertices_valid(g, w.second)) return false;

    switch (w.kind) {
        case WitnessKind::HamCycle:
            return static_cast<int>(w.seq.size()) == p && p >= 2 && all_distinct(w.seq) &&
                   consecutive_arcs(g, w.seq) && g.has_arc(w.seq.back(), w.seq.front()) && w.second.empty();

        case WitnessKind::HamPath:
            return static_cast<int>(w.seq.size()) == p && all_distinct(w.seq) && consecutive_arcs(g, w.seq) &&
                   w.second.empty();

        case WitnessKind::HamBypass:
            return static_cast<int>(w.seq.size()) == p && p >= 3 && all_distinct(w.seq) &&
                   consecutive_arcs(g, w.seq) && g.has_arc(w.seq.front(), w.seq.back()) && w.second.empty();

        case WitnessKind::Dpn: {
            int n = w.param;
            if (n < 2 || n > p - 1) return false;
            if (static_cast<int>(w.seq.size()) != n) return false;
            if (static_cast<int>(w.second.size()) != p - n + 2) return false;
            if (w.seq.front() != w.second.front() || w.seq.back() != w.second.back()) return false;
            if (w.seq.front() == w.seq.back()) return false;
            if (!all_distinct(w.seq) || !all_distinct(w.second)) return false;
            if (!consecutive_arcs(g, w.seq) || !consecutive_arcs(g, w.second)) return false;
            // internally disjoint: the sequences overlap exactly on the endpoints
            uint64_t ends = (uint64_t{1} << w.seq.front()) | (uint64_t{1} << w.seq.back());
            if ((mask_of(w.seq) & mask_of(w.second)) != ends) return false;
            // union covers all of V
            uint64_t all = p >= 64 ? ~uint64_t{0} : (uint64_t{1} << p) - 1;
            return (mask_of(w.seq) | mask_of(w.second)) == all;
        }

        case WitnessKind::CycleOfLength:
            return static_cast<int>(w.seq.size()) == w.param && w.param >= 2 && w.param <= p &&
                   all_distinct(w.seq) && consecutive_arcs(g, w.seq) &&
                   g.has_arc(w.seq.back(), w.seq.front()) && w.second.empty();
    }
    return false;
}

std::string witness_to_string(const Witness& w) {
    std::string out;
    switch (w.kind) {
        case WitnessKind::HamCycle: out = "hamcycle:"; break;
        case WitnessKind::HamPath: out = "hampath:"; break;
        case WitnessKind::HamBypass: out = "bypass:"; break;
        case WitnessKind::Dpn: out = "dpn:" + std::to_string(w.param) + ":"; break;
        case WitnessKind::CycleOfLength: out = "cycle:" + std::to_string(w.param) + ":"; break;
    }
    for (int v : w.seq) out += " " + std::to_string(v);
    if (w.kind == WitnessKind::Dpn) {
        out += " |";
        for (int v : w.second) out += " " + std::to_string(v);
    }
    return out;
}

}  // namespace hb
