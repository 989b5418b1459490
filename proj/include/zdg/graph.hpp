#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "zdg/bitrows.hpp"
#include "zdg/ring.hpp"

namespace zdg {

enum class GraphFlavor { classic, extended };

/// Zero-divisor graph of a finite ring: vertices are the nonzero
/// zero-divisors; classic edges need xy = 0, extended edges need
/// x^n y^m = 0 with x^n != 0 and y^m != 0 for some n, m >= 1.
/// Immutable after construction.
class ZeroDivisorGraph {
public:
    ZeroDivisorGraph(FiniteRing ring, GraphFlavor flavor);

    const FiniteRing& ring() const { return ring_; }
    GraphFlavor flavor() const { return flavor_; }
    const std::string& ring_descriptor() const { return ring_.descriptor(); }

    int vertex_count() const { return int(vertices_.size()); }
    const std::vector<ElemId>& vertices() const { return vertices_; }
    bool has_vertex(ElemId v) const { return index_of(v) >= 0; }

    /// Index into vertices(), or -1.
    int index_of(ElemId v) const;
    /// Index lookup that throws UnknownVertex.
    int require_index(ElemId v) const;

    bool adjacent(ElemId u, ElemId v) const;
    std::vector<ElemId> neighbors(ElemId v) const; // open neighborhood, sorted
    int degree(ElemId v) const;
    bool is_end(ElemId v) const { return degree(v) == 1; }

    std::size_t edge_count() const { return edge_count_; }
    std::vector<std::pair<ElemId, ElemId>> edges() const; // u < v, sorted

    const BitRows& adjacency() const { return adj_; }

    /// Vertices with identical adjacency rows share a class id; two vertices
    /// have coinciding open neighborhoods exactly when their classes match.
    int row_class(int index) const { return row_class_[std::size_t(index)]; }

private:
    FiniteRing ring_;
    GraphFlavor flavor_;
    std::vector<ElemId> vertices_; // sorted ids
    BitRows adj_;                  // indexed by vertex position
    std::vector<int> row_class_;
    std::size_t edge_count_ = 0;
};

ZeroDivisorGraph build_graph(const FiniteRing& ring, GraphFlavor flavor);

/// True when the classic and extended edge sets differ.
bool graphs_differ(const FiniteRing& ring);

/// Shortest cycle length and a witnessing cycle (vertex ids, in order);
/// `girth` is absent for forests.
struct GirthResult {
    std::optional<int> girth;
    std::vector<ElemId> cycle;
};
GirthResult girth(const ZeroDivisorGraph& g);

/// Two nonempty parts, every cross edge present, no intra edges.
bool is_complete_bipartite(const ZeroDivisorGraph& g);

/// Deterministic undirected DOT; vertices labeled by canonical element
/// names, sorted by id.
std::string export_dot(const ZeroDivisorGraph& g);
/// Deterministic {"vertices": [...], "edges": [[..], ..]} with name labels.
std::string export_json(const ZeroDivisorGraph& g);

} // namespace zdg
