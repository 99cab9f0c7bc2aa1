#include "search.hpp"

#include <algorithm>
#include <stdexcept>

namespace hb {

namespace {

uint64_t mask_of(std::span<const int> seq) {
    uint64_t m = 0;
    for (int v : seq) m |= uint64_t{1} << v;
    return m;
}

void check_path(const Digraph& g, std::span<const int> path, const char* what) {
    if (path.size() < 1) throw std::invalid_argument(std::string(what) + ": empty vertex sequence");
    uint64_t seen = 0;
    for (int v : path) {
        if (v < 0 || v >= g.order())
            throw std::invalid_argument(std::string(what) + ": vertex out of range");
        uint64_t bit = uint64_t{1} << v;
        if (seen & bit) throw std::invalid_argument(std::string(what) + ": repeated vertex");
        seen |= bit;
    }
    for (size_t i = 0; i + 1 < path.size(); ++i)
        if (!g.has_arc(path[i], path[i + 1]))
            throw std::invalid_argument(std::string(what) + ": sequence is not a path of the digraph");
}

void check_cycle(const Digraph& g, std::span<const int> cycle, const char* what) {
    if (cycle.size() < 2) throw std::invalid_argument(std::string(what) + ": cycle needs length >= 2");
    check_path(g, cycle, what);
    if (!g.has_arc(cycle.back(), cycle.front()))
        throw std::invalid_argument(std::string(what) + ": closing arc missing");
}

// DFS for a Hamiltonian path with fixed start, least-vertex-first; `require`
// restricts the admissible final vertex (-1: any; otherwise the path must end
// there). Returns true with `seq` filled on success.
struct HamPathSearch {
    const Digraph& g;
    uint64_t all;
    std::vector<int> seq;

    explicit HamPathSearch(const Digraph& gr) : g(gr), all(gr.vertices().bits) {}

    bool from(int start, int require_end) {
        seq.assign(1, start);
        return extend(uint64_t{1} << start, start, require_end);
    }

    bool extend(uint64_t visited, int last, int require_end) {
        if (visited == all) return require_end < 0 || last == require_end;
        uint64_t options = g.out_bits(last) & ~visited;
        while (options) {
            int v = std::countr_zero(options);
            options &= options - 1;
            seq.push_back(v);
            if (extend(visited | (uint64_t{1} << v), v, require_end)) return true;
            seq.pop_back();
        }
        return false;
    }
};

}  // namespace

std::optional<Witness> find_hamiltonian_cycle(const Digraph& g) {
    if (g.order() < 2) throw std::invalid_argument("hamiltonian cycle search requires order >= 2");
    // every hamiltonian cycle passes through vertex 0: anchor there
    struct CycleSearch {
        const Digraph& g;
        uint64_t all;
        std::vector<int> seq;
        bool extend(uint64_t visited, int last) {
            if (visited == all) return g.has_arc(last, seq.front());
            uint64_t options = g.out_bits(last) & ~visited;
            while (options) {
                int v = std::countr_zero(options);
                options &= options - 1;
                seq.push_back(v);
                if (extend(visited | (uint64_t{1} << v), v)) return true;
                seq.pop_back();
            }
            return false;
        }
    } cs{g, g.vertices().bits, {0}};
    if (!cs.extend(uint64_t{1} << 0, 0)) return std::nullopt;
    return Witness{WitnessKind::HamCycle, 0, cs.seq, {}};
}

std::optional<Witness> find_hamiltonian_path(const Digraph& g) {
    HamPathSearch s(g);
    for (int start = 0; start < g.order(); ++start)
        if (s.from(start, -1)) return Witness{WitnessKind::HamPath, 0, s.seq, {}};
    return std::nullopt;
}

std::optional<Witness> find_hamiltonian_bypass(const Digraph& g) {
    if (g.order() < 3) throw std::invalid_argument("bypass search requires order >= 3");
    struct BypassSearch {
        const Digraph& g;
        uint64_t all;
        std::vector<int> seq;
        bool extend(uint64_t visited, int last) {
            if (visited == all) return g.has_arc(seq.front(), last);
            uint64_t options = g.out_bits(last) & ~visited;
            while (options) {
                int v = std::countr_zero(options);
                options &= options - 1;
                seq.push_back(v);
                if (extend(visited | (uint64_t{1} << v), v)) return true;
                seq.pop_back();
            }
            return false;
        }
    } bs{g, g.vertices().bits, {}};
    for (int start = 0; start < g.order(); ++start) {
        if (g.out_bits(start) == 0) continue;  // a bypass start dominates its end
        bs.seq.assign(1, start);
        if (bs.extend(uint64_t{1} << start, start)) return Witness{WitnessKind::HamBypass, 0, bs.seq, {}};
    }
    return std::nullopt;
}

namespace {

// long-path half of a D(p,n): hamiltonian (x,y)-path of the digraph
// restricted to `alive`
bool ham_path_within(const Digraph& g, uint64_t alive, int from, int to, std::vector<int>& seq) {
    struct Search {
        const Digraph& g;
        uint64_t alive;
        int to;
        std::vector<int>& seq;
        bool extend(uint64_t visited, int last) {
            if (visited == alive) return last == to;
            uint64_t options = g.out_bits(last) & alive & ~visited;
            while (options) {
                int v = std::countr_zero(options);
                options &= options - 1;
                if (v == to && (visited | (uint64_t{1} << v)) != alive) {
                    continue;  // must not hit the target early
                }
                seq.push_back(v);
                if (extend(visited | (uint64_t{1} << v), v)) return true;
                seq.pop_back();
            }
            return false;
        }
    } s{g, alive, to, seq};
    seq.assign(1, from);
    return s.extend(uint64_t{1} << from, from);
}

}  // namespace

std::optional<Witness> find_dpn(const Digraph& g, int n) {
    int p = g.order();
    if (n < 2 || n > p - 1)
        throw std::invalid_argument("D(p,n) search requires 2 <= n <= p-1, got n = " + std::to_string(n));
    if (n == 2) {
        auto bypass = find_hamiltonian_bypass(g);
        if (!bypass) return std::nullopt;
        // reshape: short path = the dominating arc, long path = the full path
        Witness w{WitnessKind::Dpn, 2, {bypass->seq.front(), bypass->seq.back()}, bypass->seq};
        return w;
    }

    // short path x = s0 s1 ... s_{n-1} = y, then a hamiltonian (x,y)-path of
    // everything outside the short interior
    struct ShortSearch {
        const Digraph& g;
        int n;
        std::vector<int> shortseq;
        std::vector<int> longseq;
        bool found = false;

        bool extend(uint64_t used, int last, int target) {
            if (static_cast<int>(shortseq.size()) == n - 1) {
                if (!g.has_arc(last, target)) return false;
                shortseq.push_back(target);
                uint64_t alive = (g.vertices().bits & ~used) | (uint64_t{1} << shortseq.front()) |
                                 (uint64_t{1} << target);
                if (ham_path_within(g, alive, shortseq.front(), target, longseq)) return true;
                shortseq.pop_back();
                return false;
            }
            uint64_t options = g.out_bits(last) & ~used & ~(uint64_t{1} << target);
            while (options) {
                int v = std::countr_zero(options);
                options &= options - 1;
                shortseq.push_back(v);
                if (extend(used | (uint64_t{1} << v), v, target)) return true;
                shortseq.pop_back();
            }
            return false;
        }
    } ss{g, n, {}, {}};

    for (int x = 0; x < p; ++x) {
        for (int y = 0; y < p; ++y) {
            if (y == x) continue;
            ss.shortseq.assign(1, x);
            if (ss.extend(uint64_t{1} << x, x, y))
                return Witness{WitnessKind::Dpn, n, ss.shortseq, ss.longseq};
        }
    }
    return std::nullopt;
}

namespace {

// cycle of length exactly k whose minimum vertex is `anchor`, searching only
// vertices > anchor beyond it
bool cycle_anchored(const Digraph& g, int anchor, int k, std::vector<int>& seq) {
    struct Search {
        const Digraph& g;
        int anchor, k;
        std::vector<int>& seq;
        bool extend(uint64_t visited, int last) {
            if (static_cast<int>(seq.size()) == k) return g.has_arc(last, anchor);
            uint64_t options = g.out_bits(last) & ~visited;
            options &= ~((uint64_t{2} << anchor) - 1);  // only vertices > anchor
            while (options) {
                int v = std::countr_zero(options);
                options &= options - 1;
                seq.push_back(v);
                if (extend(visited | (uint64_t{1} << v), v)) return true;
                seq.pop_back();
            }
            return false;
        }
    } s{g, anchor, k, seq};
    seq.assign(1, anchor);
    return s.extend(uint64_t{1} << anchor, anchor);
}

}  // namespace

std::optional<std::vector<int>> find_cycle_of_length(const Digraph& g, int k) {
    if (k < 2 || k > g.order()) return std::nullopt;
    std::vector<int> seq;
    for (int anchor = 0; anchor + k <= g.order(); ++anchor)
        if (cycle_anchored(g, anchor, k, seq)) return seq;
    return std::nullopt;
}

std::optional<std::vector<int>> find_longest_cycle(const Digraph& g) {
    for (int k = g.order(); k >= 2; --k)
        if (auto c = find_cycle_of_length(g, k)) return c;
    return std::nullopt;
}

std::vector<int> cycle_spectrum(const Digraph& g) {
    if (g.order() > kSpectrumOrderLimit)
        throw std::invalid_argument("cycle spectrum limited to order <= " +
                                    std::to_string(kSpectrumOrderLimit));
    std::vector<int> lengths;
    for (int k = 2; k <= g.order(); ++k)
        if (find_cycle_of_length(g, k)) lengths.push_back(k);
    return lengths;
}

bool is_pancyclic(const Digraph& g) {
    for (int k = 3; k <= g.order(); ++k)
        if (!find_cycle_of_length(g, k)) return false;
    return true;
}

std::optional<std::vector<int>> insert_into_path(const Digraph& g, std::span<const int> path, int x) {
    check_path(g, path, "insert into path");
    if (x < 0 || x >= g.order()) throw std::invalid_argument("insert into path: vertex out of range");
    if (mask_of(path) & (uint64_t{1} << x))
        throw std::invalid_argument("insert into path: vertex already on the path");
    for (size_t i = 0; i + 1 < path.size(); ++i) {
        if (g.has_arc(path[i], x) && g.has_arc(x, path[i + 1])) {
            std::vector<int> out(path.begin(), path.end());
            out.insert(out.begin() + static_cast<long>(i) + 1, x);
            return out;
        }
    }
    return std::nullopt;
}

std::optional<std::vector<int>> insert_into_cycle(const Digraph& g, std::span<const int> cycle, int x,
                                                  int k) {
    check_cycle(g, cycle, "insert into cycle");
    if (x < 0 || x >= g.order()) throw std::invalid_argument("insert into cycle: vertex out of range");
    if (mask_of(cycle) & (uint64_t{1} << x))
        throw std::invalid_argument("insert into cycle: vertex already on the cycle");
    int m = static_cast<int>(cycle.size());
    if (k < 2 || k > m + 1)
        throw std::invalid_argument("insert into cycle: target length must be in [2, |C|+1]");

    // k-cycle through x inside V(C) u {x}: DFS from x, least-first
    uint64_t allowed = mask_of(cycle) | (uint64_t{1} << x);
    struct Search {
        const Digraph& g;
        uint64_t allowed;
        int k, x;
        std::vector<int> seq;
        bool extend(uint64_t visited, int last) {
            if (static_cast<int>(seq.size()) == k) return g.has_arc(last, x);
            uint64_t options = g.out_bits(last) & allowed & ~visited;
            while (options) {
                int v = std::countr_zero(options);
                options &= options - 1;
                seq.push_back(v);
                if (extend(visited | (uint64_t{1} << v), v)) return true;
                seq.pop_back();
            }
            return false;
        }
    } s{g, allowed, k, x, {x}};
    if (s.extend(uint64_t{1} << x, x)) return s.seq;
    return std::nullopt;
}

PathExtension extend_path_maximally(const Digraph& g, std::span<const int> path, VertexSet s) {
    check_path(g, path, "extend path");
    if (!s.subset_of(g.vertices()))
        throw std::invalid_argument("extend path: set not contained in the vertex range");
    if (s.bits & mask_of(path)) throw std::invalid_argument("extend path: set intersects the path");

    PathExtension result;
    result.path.assign(path.begin(), path.end());
    result.leftover = s;
    bool progress = true;
    while (progress) {
        progress = false;
        for (int y : result.leftover.to_vector()) {
            if (auto extended = insert_into_path(g, result.path, y)) {
                result.path = std::move(*extended);
                result.leftover.remove(y);
                progress = true;
                break;
            }
        }
    }
    return result;
}

std::optional<std::vector<int>> extend_cycle_with_set(const Digraph& g, std::span<const int> cycle,
                                                      VertexSet s) {
    check_cycle(g, cycle, "extend cycle");
    if (!s.subset_of(g.vertices()))
        throw std::invalid_argument("extend cycle: set not contained in the vertex range");
    if (s.bits & mask_of(cycle)) throw std::invalid_argument("extend cycle: set intersects the cycle");
    if (s.empty()) return std::vector<int>(cycle.begin(), cycle.end());

    uint64_t target = mask_of(cycle) | s.bits;
    int len = std::popcount(target);
    int anchor = std::countr_zero(target);
    // cycle with vertex set exactly `target`: DFS from its minimum vertex
    struct Search {
        const Digraph& g;
        uint64_t target;
        int anchor, len;
        std::vector<int> seq;
        bool extend(uint64_t visited, int last) {
            if (static_cast<int>(seq.size()) == len) return g.has_arc(last, anchor);
            uint64_t options = g.out_bits(last) & target & ~visited;
            while (options) {
                int v = std::countr_zero(options);
                options &= options - 1;
                seq.push_back(v);
                if (extend(visited | (uint64_t{1} << v), v)) return true;
                seq.pop_back();
            }
            return false;
        }
    } search{g, target, anchor, len, {anchor}};
    if (search.extend(uint64_t{1} << anchor, anchor)) return search.seq;
    return std::nullopt;
}

Lemma35Report check_lemma_35(const Digraph& g, std::span<const int> cycle, int y) {
    int p = g.order();
    check_cycle(g, cycle, "lemma 3.5 check");
    if (static_cast<int>(cycle.size()) != p - 1)
        throw std::invalid_argument("lemma 3.5 check: cycle must have length order-1");
    if (y < 0 || y >= p || (mask_of(cycle) & (uint64_t{1} << y)))
        throw std::invalid_argument("lemma 3.5 check: y must be the off-cycle vertex");
    if (find_hamiltonian_bypass(g))
        throw std::invalid_argument("lemma 3.5 check: digraph has a hamiltonian bypass");

    int m = p - 1;
    Lemma35Report r;
    r.consecutive_pairs = true;
    for (int i = 0; i < m; ++i) {
        int a = cycle[i], b = cycle[(i + 1) % m];
        int od = (g.has_arc(y, a) ? 1 : 0) + (g.has_arc(y, b) ? 1 : 0);
        int id = (g.has_arc(a, y) ? 1 : 0) + (g.has_arc(b, y) ? 1 : 0);
        if (od > 1 || id > 1) r.consecutive_pairs = false;
    }
    r.degree_bounds =
        2 * g.out_degree(y) <= p - 1 && 2 * g.in_degree(y) <= p - 1 && g.degree(y) <= p - 1;
    r.reversed_arc_exclusion = true;
    for (int k = 0; k < m; ++k) {
        int xk = cycle[k], xk1 = cycle[(k + 1) % m];
        if (!(g.has_arc(xk, y) && g.has_arc(y, xk1))) continue;
        bool ok = true;
        for (int i = 0; i < m; ++i) {
            if (i == k) continue;
            if (g.has_arc(cycle[(i + 1) % m], cycle[i])) ok = false;
        }
        r.per_k.emplace_back(k, ok);
        if (!ok) r.reversed_arc_exclusion = false;
    }
    return r;
}

}  // namespace hb
