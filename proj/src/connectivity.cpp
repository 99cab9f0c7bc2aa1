#include "connectivity.hpp"

#include <algorithm>
#include <stdexcept>

namespace hb {

namespace {

// reach[v] = vertices reachable from v (including v), restricted to `alive`
void reachability(int order, const uint64_t* out_rows, uint64_t alive, uint64_t* reach) {
    for (int v = 0; v < order; ++v) {
        uint64_t bit = uint64_t{1} << v;
        if (!(alive & bit)) {
            reach[v] = 0;
            continue;
        }
        uint64_t seen = bit;
        uint64_t frontier = bit;
        while (frontier) {
            uint64_t next = 0;
            uint64_t f = frontier;
            while (f) {
                int u = std::countr_zero(f);
                f &= f - 1;
                next |= out_rows[u] & alive;
            }
            frontier = next & ~seen;
            seen |= next;
        }
        reach[v] = seen;
    }
}

bool strong_within(int order, const uint64_t* out_rows, uint64_t alive) {
    if (std::popcount(alive) <= 1) return true;
    int start = std::countr_zero(alive);
    // forward closure from start
    uint64_t seen = uint64_t{1} << start;
    uint64_t frontier = seen;
    while (frontier) {
        uint64_t next = 0;
        uint64_t f = frontier;
        while (f) {
            int u = std::countr_zero(f);
            f &= f - 1;
            next |= out_rows[u] & alive;
        }
        frontier = next & ~seen;
        seen |= next;
    }
    if (seen != alive) return false;
    // backward closure: grow the set of vertices that reach start
    uint64_t reaches = uint64_t{1} << start;
    bool changed = true;
    while (changed) {
        changed = false;
        uint64_t rest = alive & ~reaches;
        uint64_t r = rest;
        while (r) {
            int u = std::countr_zero(r);
            r &= r - 1;
            if (out_rows[u] & reaches) {
                reaches |= uint64_t{1} << u;
                changed = true;
            }
        }
    }
    return reaches == alive;
}

}  // namespace

bool is_strong_rows(int order, const uint64_t* out_rows) {
    uint64_t alive = order >= 64 ? ~uint64_t{0} : (uint64_t{1} << order) - 1;
    return strong_within(order, out_rows, alive);
}

ComponentDecomposition strong_components_ordered(const Digraph& g) {
    int p = g.order();
    std::array<uint64_t, Digraph::kMaxOrder> rows;
    for (int v = 0; v < p; ++v) rows[v] = g.out_bits(v);
    uint64_t all = g.vertices().bits;

    std::array<uint64_t, Digraph::kMaxOrder> reach;
    reachability(p, rows.data(), all, reach.data());

    // component of v = reach(v) intersected with the set of vertices reaching v
    std::vector<VertexSet> comps;
    uint64_t assigned = 0;
    for (int v = 0; v < p; ++v) {
        uint64_t bit = uint64_t{1} << v;
        if (assigned & bit) continue;
        uint64_t comp = 0;
        for (int u = 0; u < p; ++u)
            if ((reach[v] >> u) & 1 && (reach[u] >> v) & 1) comp |= uint64_t{1} << u;
        comps.push_back(VertexSet{comp});
        assigned |= comp;
    }

    // topological order of the condensation; among sources pick the one with
    // the smallest minimum vertex id
    ComponentDecomposition out;
    std::vector<bool> done(comps.size(), false);
    for (size_t step = 0; step < comps.size(); ++step) {
        int pick = -1;
        for (size_t i = 0; i < comps.size(); ++i) {
            if (done[i]) continue;
            bool source = true;
            for (size_t j = 0; j < comps.size() && source; ++j) {
                if (j == i || done[j]) continue;
                uint64_t from_j = 0;
                uint64_t jb = comps[j].bits;
                while (jb) {
                    int u = std::countr_zero(jb);
                    jb &= jb - 1;
                    from_j |= rows[u];
                }
                if (from_j & comps[i].bits) source = false;
            }
            if (!source) continue;
            if (pick < 0 || std::countr_zero(comps[i].bits) < std::countr_zero(comps[pick].bits)) pick = static_cast<int>(i);
        }
        out.components.push_back(comps[pick]);
        done[pick] = true;
    }
    return out;
}

bool is_strong(const Digraph& g) {
    std::array<uint64_t, Digraph::kMaxOrder> rows;
    for (int v = 0; v < g.order(); ++v) rows[v] = g.out_bits(v);
    return is_strong_rows(g.order(), rows.data());
}

namespace {

bool k_strong_subsets(const Digraph& g, const uint64_t* rows, uint64_t removed, int next, int budget) {
    uint64_t alive = g.vertices().bits & ~removed;
    if (!strong_within(g.order(), rows, alive)) return false;
    if (budget == 0) return true;
    for (int v = next; v < g.order(); ++v) {
        if (!k_strong_subsets(g, rows, removed | (uint64_t{1} << v), v + 1, budget - 1)) return false;
    }
    return true;
}

}  // namespace

bool is_k_strong(const Digraph& g, int k) {
    if (k < 1) throw std::invalid_argument("k-strong test requires k >= 1");
    if (g.order() < k + 1) return false;
    std::array<uint64_t, Digraph::kMaxOrder> rows;
    for (int v = 0; v < g.order(); ++v) rows[v] = g.out_bits(v);
    return k_strong_subsets(g, rows.data(), 0, 0, k - 1);
}

}  // namespace hb
