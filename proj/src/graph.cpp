#include "zdg/graph.hpp"

#include <algorithm>
#include <deque>

#include <nlohmann/json.hpp>

namespace zdg {

ZeroDivisorGraph::ZeroDivisorGraph(FiniteRing ring, GraphFlavor flavor)
    : ring_(std::move(ring)), flavor_(flavor), vertices_(ring_.zero_divisors()) {
    const int n = int(vertices_.size());
    adj_ = BitRows(n);

    if (n > 0 && flavor_ == GraphFlavor::classic) {
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (ring_.mul(vertices_[std::size_t(i)], vertices_[std::size_t(j)]) == 0) {
                    adj_.set(i, j);
                    adj_.set(j, i);
                    ++edge_count_;
                }
    } else if (n > 0) {
        // extended: some nonzero power of x annihilates some nonzero power
        // of y.  PowerProfile enumerates every distinct nonzero power, so
        // testing y's powers against the union of the annihilators of x's
        // powers is sound and complete.
        const int order = ring_.order();
        const std::size_t owords = std::size_t(order + 63) / 64;
        std::vector<std::vector<ElemId>> pows(vertices_.size());
        for (int i = 0; i < n; ++i)
            pows[std::size_t(i)] = ring_.power_profile(vertices_[std::size_t(i)]).nonzero_powers;

        std::vector<int> ann_slot(std::size_t(order), -1);
        std::vector<std::uint64_t> ann_bits; // one annihilator bitmap per distinct power value
        for (int i = 0; i < n; ++i)
            for (ElemId a : pows[std::size_t(i)]) {
                if (ann_slot[std::size_t(a)] >= 0) continue;
                ann_slot[std::size_t(a)] = int(ann_bits.size() / owords);
                ann_bits.resize(ann_bits.size() + owords, 0);
                std::uint64_t* row = ann_bits.data() + ann_bits.size() - owords;
                for (ElemId y = 0; y < order; ++y)
                    if (ring_.mul(a, y) == 0) row[std::size_t(y) >> 6] |= std::uint64_t(1) << (y & 63);
            }

        std::vector<std::uint64_t> kill(std::size_t(n) * owords, 0);
        for (int i = 0; i < n; ++i) {
            std::uint64_t* row = kill.data() + std::size_t(i) * owords;
            for (ElemId a : pows[std::size_t(i)]) {
                const std::uint64_t* src = ann_bits.data() + std::size_t(ann_slot[std::size_t(a)]) * owords;
                for (std::size_t w = 0; w < owords; ++w) row[w] |= src[w];
            }
        }

        for (int i = 0; i < n; ++i) {
            const std::uint64_t* row = kill.data() + std::size_t(i) * owords;
            for (int j = i + 1; j < n; ++j) {
                bool edge = false;
                for (ElemId b : pows[std::size_t(j)])
                    if ((row[std::size_t(b) >> 6] >> (b & 63)) & 1u) {
                        edge = true;
                        break;
                    }
                if (edge) {
                    adj_.set(i, j);
                    adj_.set(j, i);
                    ++edge_count_;
                }
            }
        }
    }

    // group identical adjacency rows
    row_class_.assign(std::size_t(n), 0);
    std::vector<int> idx(std::size_t(n), 0);
    for (int i = 0; i < n; ++i) idx[std::size_t(i)] = i;
    std::sort(idx.begin(), idx.end(), [&](int a, int b) {
        const std::uint64_t* ra = adj_.row(a);
        const std::uint64_t* rb = adj_.row(b);
        for (std::size_t w = 0; w < adj_.words(); ++w)
            if (ra[w] != rb[w]) return ra[w] < rb[w];
        return false;
    });
    int cls = 0;
    for (int k = 0; k < n; ++k) {
        if (k > 0 && !adj_.rows_equal(idx[std::size_t(k - 1)], idx[std::size_t(k)])) ++cls;
        row_class_[std::size_t(idx[std::size_t(k)])] = cls;
    }
}

int ZeroDivisorGraph::index_of(ElemId v) const {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
    if (it == vertices_.end() || *it != v) return -1;
    return int(it - vertices_.begin());
}

int ZeroDivisorGraph::require_index(ElemId v) const {
    int i = index_of(v);
    if (i < 0)
        throw UnknownVertex("element " + std::to_string(v) + " is not a vertex of the graph of " +
                            ring_.descriptor());
    return i;
}

bool ZeroDivisorGraph::adjacent(ElemId u, ElemId v) const {
    int i = require_index(u), j = require_index(v);
    return i != j && adj_.test(i, j);
}

std::vector<ElemId> ZeroDivisorGraph::neighbors(ElemId v) const {
    int i = require_index(v);
    std::vector<ElemId> out;
    for (int j = 0; j < int(vertices_.size()); ++j)
        if (adj_.test(i, j)) out.push_back(vertices_[std::size_t(j)]);
    return out;
}

int ZeroDivisorGraph::degree(ElemId v) const { return adj_.row_count(require_index(v)); }

std::vector<std::pair<ElemId, ElemId>> ZeroDivisorGraph::edges() const {
    std::vector<std::pair<ElemId, ElemId>> out;
    const int n = int(vertices_.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (adj_.test(i, j)) out.emplace_back(vertices_[std::size_t(i)], vertices_[std::size_t(j)]);
    return out;
}

ZeroDivisorGraph build_graph(const FiniteRing& ring, GraphFlavor flavor) {
    return ZeroDivisorGraph(ring, flavor);
}

bool graphs_differ(const FiniteRing& ring) {
    ZeroDivisorGraph classic(ring, GraphFlavor::classic);
    ZeroDivisorGraph extended(ring, GraphFlavor::extended);
    if (classic.edge_count() != extended.edge_count()) return true;
    const int n = classic.vertex_count();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (classic.adjacency().test(i, j) != extended.adjacency().test(i, j)) return true;
    return false;
}

// BFS from every vertex; a non-tree edge (u,v) seen with both distances known
// yields a candidate cycle of length d(u)+d(v)+1 whose two root paths must be
// internally disjoint to count.  For a shortest cycle and a root on it the
// optimal candidate is always disjoint, so the validated minimum is exact.
GirthResult girth(const ZeroDivisorGraph& g) {
    const int n = g.vertex_count();
    GirthResult best;
    if (n == 0) return best;
    const BitRows& adj = g.adjacency();

    std::vector<int> dist(std::size_t(n), -1);
    std::vector<int> parent(std::size_t(n), -1);
    for (int s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(parent.begin(), parent.end(), -1);
        dist[std::size_t(s)] = 0;
        std::deque<int> queue{s};
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (int v = 0; v < n; ++v) {
                if (!adj.test(u, v)) continue;
                if (dist[std::size_t(v)] < 0) {
                    dist[std::size_t(v)] = dist[std::size_t(u)] + 1;
                    parent[std::size_t(v)] = u;
                    queue.push_back(v);
                    continue;
                }
                if (v == parent[std::size_t(u)] || parent[std::size_t(v)] == u) continue;
                int len = dist[std::size_t(u)] + dist[std::size_t(v)] + 1;
                if (best.girth && len >= *best.girth) continue;

                std::vector<int> pu, pv; // u .. s and v .. s along parents
                for (int t = u; t >= 0; t = parent[std::size_t(t)]) pu.push_back(t);
                for (int t = v; t >= 0; t = parent[std::size_t(t)]) pv.push_back(t);
                std::vector<std::uint8_t> seen(std::size_t(n), 0);
                bool disjoint = true;
                for (std::size_t a = 0; a + 1 < pu.size(); ++a) seen[std::size_t(pu[a])] = 1;
                for (std::size_t b = 0; b + 1 < pv.size() && disjoint; ++b)
                    disjoint = !seen[std::size_t(pv[b])];
                if (!disjoint) continue;

                best.girth = len;
                best.cycle.clear();
                for (std::size_t a = pu.size(); a-- > 0;) // s .. u
                    best.cycle.push_back(g.vertices()[std::size_t(pu[a])]);
                for (std::size_t b = 0; b + 1 < pv.size(); ++b) // v .. child of s
                    best.cycle.push_back(g.vertices()[std::size_t(pv[b])]);
            }
        }
    }
    return best;
}

bool is_complete_bipartite(const ZeroDivisorGraph& g) {
    const int n = g.vertex_count();
    if (n == 0) return false;
    const BitRows& adj = g.adjacency();
    std::vector<int> color(std::size_t(n), -1);
    std::deque<int> queue{0};
    color[0] = 0;
    int colored = 1;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int v = 0; v < n; ++v) {
            if (!adj.test(u, v)) continue;
            if (color[std::size_t(v)] < 0) {
                color[std::size_t(v)] = 1 - color[std::size_t(u)];
                ++colored;
                queue.push_back(v);
            } else if (color[std::size_t(v)] == color[std::size_t(u)]) {
                return false;
            }
        }
    }
    if (colored != n) return false; // complete bipartite graphs are connected
    long a = std::count(color.begin(), color.end(), 0);
    long b = n - a;
    if (a == 0 || b == 0) return false;
    return long(g.edge_count()) == a * b;
}

std::string export_dot(const ZeroDivisorGraph& g) {
    std::string out = "graph G {\n";
    for (ElemId v : g.vertices()) out += "  \"" + g.ring().elem_name(v) + "\";\n";
    for (const auto& [u, v] : g.edges())
        out += "  \"" + g.ring().elem_name(u) + "\" -- \"" + g.ring().elem_name(v) + "\";\n";
    out += "}\n";
    return out;
}

std::string export_json(const ZeroDivisorGraph& g) {
    nlohmann::json j;
    j["vertices"] = nlohmann::json::array();
    for (ElemId v : g.vertices()) j["vertices"].push_back(g.ring().elem_name(v));
    j["edges"] = nlohmann::json::array();
    for (const auto& [u, v] : g.edges())
        j["edges"].push_back({g.ring().elem_name(u), g.ring().elem_name(v)});
    return j.dump(2) + "\n";
}

} // namespace zdg
