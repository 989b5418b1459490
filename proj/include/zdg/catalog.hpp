#pragma once

#include <string>
#include <vector>

#include "zdg/ring_spec.hpp"

namespace zdg {

/// Generation recipe for a deterministic, seedless ring catalog.
struct CatalogBounds {
    long max_order = 256;
    int max_product_arity = 3;
    /// Z_{p^k} pool for products; defaults to all prime powers <= 32.
    std::vector<long> prime_powers;
    bool include_quotients = true;
    bool include_idealizations = true;
    /// Extends the plain Z(n) sweep past max_order (modular claims such
    /// as the n <= 400 divisor-pattern sweep); 0 means "= max_order".
    long zn_max = 0;

    long zn_limit() const { return zn_max > max_order ? zn_max : max_order; }
};

struct CatalogEntry {
    RingSpec spec;
    std::string text; // canonical, the dedup key
};

struct Catalog {
    CatalogBounds bounds;
    std::vector<CatalogEntry> entries;

    /// Human-readable generation recipe for report headers.
    std::string recipe() const;
};

/// Deterministic catalog: all Z(n) up to the sweep bound, products (up to
/// the arity bound) over small prime-power rings, bundled small fields and
/// quotient rings, the named quotients, and index-2 idealizations of a fixed
/// base list.  Entries are deduplicated by canonical text.
Catalog generate_catalog(const CatalogBounds& bounds = {});

} // namespace zdg
