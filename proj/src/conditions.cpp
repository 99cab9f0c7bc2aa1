#include "conditions.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace hb {

namespace {

void require_order(const Digraph& g, int min_order, const char* what) {
    if (g.order() < min_order)
        throw std::invalid_argument(std::string(what) + " requires order >= " + std::to_string(min_order));
}

}  // namespace

MeynielDeficiency meyniel_deficiency(const Digraph& g) {
    require_order(g, 2, "meyniel deficiency");
    int p = g.order();
    MeynielDeficiency result;
    result.all_adjacent = true;
    for (int x = 0; x < p; ++x) {
        for (int y = x + 1; y < p; ++y) {
            if (g.adjacent(x, y)) continue;
            int margin = g.degree(x) + g.degree(y) - (2 * p - 2);
            if (result.all_adjacent || margin < result.margin) result.margin = margin;
            result.all_adjacent = false;
        }
    }
    return result;
}

bool meyniel_satisfies_rows(int order, const uint64_t* out_rows, int k) {
    int od[Digraph::kMaxOrder];
    int id[Digraph::kMaxOrder];
    for (int v = 0; v < order; ++v) {
        od[v] = std::popcount(out_rows[v]);
        id[v] = 0;
    }
    for (int u = 0; u < order; ++u) {
        uint64_t row = out_rows[u];
        while (row) {
            int v = std::countr_zero(row);
            row &= row - 1;
            ++id[v];
        }
    }
    int bound = 2 * order - 2 + k;
    for (int x = 0; x < order; ++x)
        for (int y = x + 1; y < order; ++y) {
            bool adj = ((out_rows[x] >> y) | (out_rows[y] >> x)) & 1;
            if (adj) continue;
            if (od[x] + id[x] + od[y] + id[y] < bound) return false;
        }
    return true;
}

ClassicConditions classic_conditions(const Digraph& g) {
    require_order(g, 2, "classic conditions");
    int p = g.order();
    ClassicConditions c;
    c.nash_williams = true;
    c.ghouila_houri = true;
    c.woodall = true;
    for (int x = 0; x < p; ++x) {
        if (2 * g.out_degree(x) < p || 2 * g.in_degree(x) < p) c.nash_williams = false;
        if (g.degree(x) < p) c.ghouila_houri = false;
    }
    for (int x = 0; x < p && c.woodall; ++x)
        for (int y = 0; y < p; ++y) {
            if (x == y || g.has_arc(x, y)) continue;
            if (g.out_degree(x) + g.in_degree(y) < p) {
                c.woodall = false;
                break;
            }
        }
    return c;
}

ExtendedConditions extended_conditions(const Digraph& g) {
    require_order(g, 2, "extended conditions");
    int p = g.order();
    ExtendedConditions e;
    e.bjgl_51 = e.bjgl_52 = e.bgy_53 = true;
    for (int x = 0; x < p; ++x) {
        for (int y = x + 1; y < p; ++y) {
            if (g.adjacent(x, y)) continue;
            bool common_in = (g.in_bits(x) & g.in_bits(y)) != 0;
            bool common_out = (g.out_bits(x) & g.out_bits(y)) != 0;
            int dx = g.degree(x), dy = g.degree(y);
            if (common_in) {
                if (std::min(dx, dy) < p - 1 || dx + dy < 2 * p - 1) e.bjgl_51 = false;
            }
            if (common_in || common_out) {
                int cross = std::min(g.out_degree(x) + g.in_degree(y), g.in_degree(x) + g.out_degree(y));
                if (cross < p) e.bjgl_52 = false;
                if (dx + dy < 2 * p - 1 || cross < p - 1) e.bgy_53 = false;
            }
        }
    }
    e.manoussakis_54_applicable = p >= 4;
    if (e.manoussakis_54_applicable) {
        e.manoussakis_54 = true;
        for (int x = 0; x < p && e.manoussakis_54; ++x) {
            for (int y = 0; y < p && e.manoussakis_54; ++y) {
                if (x == y || g.adjacent(x, y)) continue;
                int dxy = g.degree(x) + g.degree(y);
                for (int z = 0; z < p; ++z) {
                    if (z == x || z == y) continue;
                    if (!g.has_arc(x, z) && dxy + g.out_degree(x) + g.in_degree(z) < 3 * p - 2) {
                        e.manoussakis_54 = false;
                        break;
                    }
                    if (!g.has_arc(z, x) && dxy + g.in_degree(x) + g.out_degree(z) < 3 * p - 2) {
                        e.manoussakis_54 = false;
                        break;
                    }
                }
            }
        }
    }
    return e;
}

ConditionReport condition_report(const Digraph& g) {
    ConditionReport r;
    r.meyniel = meyniel_deficiency(g);
    r.classic = classic_conditions(g);
    r.extended = extended_conditions(g);
    return r;
}

}  // namespace hb
