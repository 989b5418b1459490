#include "zdg/properties.hpp"

namespace zdg {

bool are_orthogonal(const ZeroDivisorGraph& g, ElemId u, ElemId v) {
    int i = g.require_index(u), j = g.require_index(v);
    if (i == j) return false;
    const BitRows& adj = g.adjacency();
    return adj.test(i, j) && !adj.rows_intersect(i, j);
}

namespace {

std::vector<int> perp_indices(const ZeroDivisorGraph& g, int i) {
    const BitRows& adj = g.adjacency();
    std::vector<int> out;
    for (int j = 0; j < g.vertex_count(); ++j)
        if (j != i && adj.test(i, j) && !adj.rows_intersect(i, j)) out.push_back(j);
    return out;
}

} // namespace

std::vector<ElemId> perp_set(const ZeroDivisorGraph& g, ElemId v) {
    int i = g.require_index(v);
    std::vector<ElemId> out;
    for (int j : perp_indices(g, i)) out.push_back(g.vertices()[std::size_t(j)]);
    return out;
}

OrthogonalityReport orthogonality_report(const ZeroDivisorGraph& g, ElemId v) {
    OrthogonalityReport rep;
    rep.vertex = v;
    rep.perp_set = perp_set(g, v);
    rep.has_orthogonal = !rep.perp_set.empty();
    for (ElemId u : rep.perp_set)
        if (!g.ring().is_nilpotent(u)) rep.non_nilpotent_perp.push_back(u);
    return rep;
}

bool neighborhoods_coincide(const ZeroDivisorGraph& g, ElemId u, ElemId w) {
    int i = g.require_index(u), j = g.require_index(w);
    return g.row_class(i) == g.row_class(j);
}

bool neighborhoods_coincide_punctured(const ZeroDivisorGraph& g, ElemId u, ElemId w) {
    int i = g.require_index(u), j = g.require_index(w);
    return g.adjacency().rows_equal_punctured(i, j);
}

ComplementedVerdict is_complemented(const ZeroDivisorGraph& g) {
    ComplementedVerdict verdict;
    verdict.complemented = true;
    for (int i = 0; i < g.vertex_count(); ++i) {
        if (perp_indices(g, i).empty()) {
            verdict.complemented = false;
            verdict.failure_witness = g.vertices()[std::size_t(i)];
            break;
        }
    }
    return verdict;
}

ComplementedVerdict is_uniquely_complemented(const ZeroDivisorGraph& g) {
    ComplementedVerdict verdict = is_complemented(g);
    if (!verdict.complemented) return verdict;
    verdict.uniquely_complemented = true;
    for (int i = 0; i < g.vertex_count() && verdict.uniquely_complemented; ++i) {
        std::vector<int> perp = perp_indices(g, i);
        for (std::size_t b = 1; b < perp.size(); ++b)
            if (g.row_class(perp[b]) != g.row_class(perp[0])) {
                verdict.uniquely_complemented = false;
                verdict.uniqueness_witness = {g.vertices()[std::size_t(i)],
                                              g.vertices()[std::size_t(perp[0])],
                                              g.vertices()[std::size_t(perp[b])]};
                break;
            }
    }
    return verdict;
}

} // namespace zdg
