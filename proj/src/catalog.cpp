#include "zdg/catalog.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace zdg {

namespace {

std::vector<long> default_prime_powers() {
    std::vector<long> out;
    for (long n = 2; n <= 32; ++n) {
        long m = n, p = 0;
        for (long d = 2; d * d <= m; ++d)
            if (m % d == 0) {
                p = d;
                break;
            }
        if (p == 0) p = m;
        while (m % p == 0) m /= p;
        if (m == 1) out.push_back(n);
    }
    return out;
}

struct Builder {
    const CatalogBounds& bounds;
    std::set<std::string> seen;
    std::vector<CatalogEntry> entries;

    void push(RingSpec spec) {
        std::string text = to_string(spec);
        if (seen.insert(text).second) entries.push_back({std::move(spec), std::move(text)});
    }
    void push_text(const std::string& text) {
        if (seen.count(text)) return;
        push(parse_ring_spec(text));
    }
};

} // namespace

Catalog generate_catalog(const CatalogBounds& bounds_in) {
    CatalogBounds bounds = bounds_in;
    if (bounds.prime_powers.empty()) bounds.prime_powers = default_prime_powers();
    Builder b{bounds, {}, {}};

    const BuildOptions build{std::max(bounds.zn_limit(), bounds.max_order)};

    for (long n = 2; n <= bounds.zn_limit(); ++n) {
        RingSpec s;
        s.node = RingSpec::Zn{n};
        b.push(std::move(s));
    }

    // product pool: small modular rings, bundled fields, small local quotients
    std::vector<std::pair<long, std::string>> pool; // (order, text)
    for (long q : bounds.prime_powers)
        if (q >= 2 && q <= 32 && q <= bounds.max_order) pool.emplace_back(q, "Z(" + std::to_string(q) + ")");
    if (bounds.include_quotients) {
        for (long q : {4L, 8L, 9L, 16L})
            if (q <= bounds.max_order) pool.emplace_back(q, "GF(" + std::to_string(q) + ")");
        if (4 <= bounds.max_order) pool.emplace_back(4, "Z(2)[x]/(x^2)");
        if (8 <= bounds.max_order) pool.emplace_back(8, "Z(2)[x]/(x^3)");
        if (9 <= bounds.max_order) pool.emplace_back(9, "Z(3)[x]/(x^2)");
    }
    std::stable_sort(pool.begin(), pool.end());

    for (const auto& [order, text] : pool) b.push_text(text);

    // combinations with repetition, ascending pool index, order-bounded
    if (bounds.max_product_arity >= 2) {
        std::vector<std::size_t> pick;
        auto rec = [&](auto&& self, std::size_t start, long order, int arity) -> void {
            if (arity >= 2) {
                std::string text;
                for (std::size_t k = 0; k < pick.size(); ++k) {
                    if (k) text += " x ";
                    text += pool[pick[k]].second;
                }
                b.push_text(text);
            }
            if (arity == bounds.max_product_arity) return;
            for (std::size_t i = start; i < pool.size(); ++i) {
                if (order * pool[i].first > bounds.max_order) continue;
                pick.push_back(i);
                self(self, i, order * pool[i].first, arity + 1);
                pick.pop_back();
            }
        };
        rec(rec, 0, 1, 0);
    }

    if (bounds.include_quotients && 16 <= bounds.max_order)
        b.push_text("Z(2)[x,y]/(x^3, x*y, y^2)");

    if (bounds.include_idealizations) {
        static const char* kIdealBases[] = {
            "Z(4)",           "Z(6)",          "Z(8)",          "Z(9)",
            "Z(10)",          "Z(12)",         "Z(16)",         "Z(18)",
            "Z(2)[x]/(x^2)",  "Z(2)[x]/(x^3)", "Z(2) x Z(2)",   "Z(2) x Z(4)",
            "Z(2) x Z(6)",    "Z(3) x Z(3)",
        };
        const BuildOptions probe{std::max(bounds.max_order, 64L)};
        for (const char* base_text : kIdealBases) {
            RingSpec base_spec = parse_ring_spec(base_text);
            long base_order = spec_order(base_spec, probe);
            if (2 * base_order > bounds.max_order) continue;
            FiniteRing base = build_ring(base_spec, probe);
            // principal ideals rR of index 2; dedup by the ideal itself
            std::set<std::vector<ElemId>> ideals;
            for (ElemId r = 0; r < base.order(); ++r) {
                std::set<ElemId> image;
                for (ElemId s = 0; s < base.order(); ++s) image.insert(base.mul(r, s));
                if (long(image.size()) * 2 != base_order) continue;
                std::vector<ElemId> ideal(image.begin(), image.end());
                if (!ideals.insert(ideal).second) continue;
                b.push_text("ideal(" + std::string(base_text) + ", (" + base.elem_expr(r) + "))");
            }
        }
    }

    Catalog out;
    out.bounds = bounds;
    out.entries = std::move(b.entries);
    return out;
}

std::string Catalog::recipe() const {
    std::ostringstream os;
    os << "generative catalog: Z(n) for 2 <= n <= " << bounds.zn_limit()
       << "; products of arity <= " << bounds.max_product_arity
       << " over small prime-power rings";
    if (bounds.include_quotients)
        os << ", bundled fields GF(4..16) and the quotients Z(2)[x]/(x^2), Z(2)[x]/(x^3), "
              "Z(3)[x]/(x^2)";
    os << ", capped at order " << bounds.max_order;
    if (bounds.include_quotients) os << "; the quotient Z(2)[x,y]/(x^3, x*y, y^2)";
    if (bounds.include_idealizations)
        os << "; index-2 idealizations ideal(R, (g)) over a fixed base list";
    os << "; entries deduplicated by canonical spec text (not an exhaustive census of finite rings)";
    return os.str();
}

} // namespace zdg
