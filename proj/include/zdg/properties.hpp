#pragma once

#include <array>
#include <optional>
#include <vector>

#include "zdg/graph.hpp"

namespace zdg {

/// v ⊥ u: adjacent and with disjoint open neighborhoods
/// (the edge v-u lies on no triangle).
bool are_orthogonal(const ZeroDivisorGraph& g, ElemId u, ElemId v);

/// All u with v ⊥ u, sorted.
std::vector<ElemId> perp_set(const ZeroDivisorGraph& g, ElemId v);

struct OrthogonalityReport {
    ElemId vertex = 0;
    std::vector<ElemId> perp_set;
    bool has_orthogonal = false;
    std::vector<ElemId> non_nilpotent_perp; // perp members outside Nil(R)
};
OrthogonalityReport orthogonality_report(const ZeroDivisorGraph& g, ElemId v);

/// Literal open-neighborhood equality N(u) = N(w).  Adjacent vertices can
/// never satisfy it (u sits in N(w) but not in N(u)).
bool neighborhoods_coincide(const ZeroDivisorGraph& g, ElemId u, ElemId w);

/// Variant comparing N(u)\{w} with N(w)\{u}.  Provided for convention
/// experiments; nothing in the default claim battery uses it.
bool neighborhoods_coincide_punctured(const ZeroDivisorGraph& g, ElemId u, ElemId w);

struct ComplementedVerdict {
    bool complemented = false;
    bool uniquely_complemented = false;
    /// Least vertex with empty perp set, present iff not complemented.
    std::optional<ElemId> failure_witness;
    /// (v, u, w) with v ⊥ u, v ⊥ w and N(u) != N(w), on uniqueness failure.
    std::optional<std::array<ElemId, 3>> uniqueness_witness;
};

/// Complemented half only: every vertex has an orthogonal partner.
/// The empty graph is vacuously complemented.
ComplementedVerdict is_complemented(const ZeroDivisorGraph& g);

/// Full verdict; uniqueness quantifies distinct u, w orthogonal to a
/// common v and demands N(u) = N(w).
ComplementedVerdict is_uniquely_complemented(const ZeroDivisorGraph& g);

} // namespace zdg
