#pragma once

// Test-only oracles: independent brute-force routes for values the library
// computes structurally.  Nothing here may call the code path it checks.

#include <algorithm>
#include <deque>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "zdg/graph.hpp"
#include "zdg/ring.hpp"

namespace zdg::test {

inline ElemId id_of(const FiniteRing& r, const std::string& name) {
    for (ElemId x = 0; x < r.order(); ++x)
        if (r.elem_name(x) == name) return x;
    throw std::runtime_error("no element named " + name + " in " + r.descriptor());
}

inline ElemId slow_pow(const FiniteRing& r, ElemId x, int k) {
    ElemId v = x;
    for (int i = 1; i < k; ++i) v = r.mul(v, x);
    return v;
}

inline bool brute_is_unit(const FiniteRing& r, ElemId x) {
    for (ElemId y = 0; y < r.order(); ++y)
        if (r.mul(x, y) == 1) return true;
    return false;
}

inline bool brute_is_zero_divisor(const FiniteRing& r, ElemId x) {
    if (x == 0) return false;
    for (ElemId y = 1; y < r.order(); ++y)
        if (r.mul(x, y) == 0) return true;
    return false;
}

inline bool brute_is_nilpotent(const FiniteRing& r, ElemId x) {
    ElemId v = x;
    for (int k = 0; k < r.order(); ++k) {
        if (v == 0) return true;
        v = r.mul(v, x);
    }
    return v == 0;
}

// all exponent pairs n, m <= order, exactly as defined
inline bool brute_extended_adjacent(const FiniteRing& r, ElemId x, ElemId y) {
    const int n = r.order();
    std::vector<ElemId> xp, yp;
    ElemId v = x;
    for (int k = 0; k < n; ++k) {
        xp.push_back(v);
        v = r.mul(v, x);
    }
    v = y;
    for (int k = 0; k < n; ++k) {
        yp.push_back(v);
        v = r.mul(v, y);
    }
    for (ElemId a : xp) {
        if (a == 0) continue;
        for (ElemId b : yp) {
            if (b == 0) continue;
            if (r.mul(a, b) == 0) return true;
        }
    }
    return false;
}

// neighbor lists straight from the definition of the flavor
inline std::vector<std::vector<int>> brute_adjacency(const FiniteRing& r, GraphFlavor flavor) {
    std::vector<ElemId> verts;
    for (ElemId x = 1; x < r.order(); ++x)
        if (brute_is_zero_divisor(r, x)) verts.push_back(x);
    const int n = int(verts.size());
    std::vector<std::vector<int>> adj(verts.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            bool e = flavor == GraphFlavor::classic
                         ? r.mul(verts[std::size_t(i)], verts[std::size_t(j)]) == 0
                         : brute_extended_adjacent(r, verts[std::size_t(i)], verts[std::size_t(j)]);
            if (e) {
                adj[std::size_t(i)].push_back(j);
                adj[std::size_t(j)].push_back(i);
            }
        }
    return adj;
}

// shortest cycle by removing each edge and measuring the detour
inline std::optional<int> brute_girth(const ZeroDivisorGraph& g) {
    const int n = g.vertex_count();
    std::optional<int> best;
    for (int eu = 0; eu < n; ++eu)
        for (int ev = eu + 1; ev < n; ++ev) {
            if (!g.adjacency().test(eu, ev)) continue;
            std::vector<int> dist(std::size_t(n), -1);
            std::deque<int> q{eu};
            dist[std::size_t(eu)] = 0;
            while (!q.empty()) {
                int u = q.front();
                q.pop_front();
                for (int v = 0; v < n; ++v) {
                    if (!g.adjacency().test(u, v)) continue;
                    if (u == eu && v == ev) continue; // the removed edge
                    if (u == ev && v == eu) continue;
                    if (dist[std::size_t(v)] < 0) {
                        dist[std::size_t(v)] = dist[std::size_t(u)] + 1;
                        q.push_back(v);
                    }
                }
            }
            if (dist[std::size_t(ev)] >= 0) {
                int cyc = dist[std::size_t(ev)] + 1;
                if (!best || cyc < *best) best = cyc;
            }
        }
    return best;
}

// complementedness straight from "some edge at v lies on no triangle"
inline bool brute_complemented(const ZeroDivisorGraph& g) {
    const int n = g.vertex_count();
    for (int v = 0; v < n; ++v) {
        bool has = false;
        for (int u = 0; u < n && !has; ++u) {
            if (u == v || !g.adjacency().test(u, v)) continue;
            bool triangle = false;
            for (int w = 0; w < n && !triangle; ++w)
                triangle = w != u && w != v && g.adjacency().test(u, w) && g.adjacency().test(v, w);
            has = !triangle;
        }
        if (!has) return false;
    }
    return true;
}

} // namespace zdg::test
