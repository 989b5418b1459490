#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "zdg/errors.hpp"

namespace zdg {

using ElemId = int;

enum class ElemClass { zero, unit, zero_divisor };

/// x^1, x^2, ... up to the first zero or first repeated value.
/// `nil_index` is the least n with x^n = 0, absent when no power vanishes.
struct PowerProfile {
    ElemId element = 0;
    std::vector<ElemId> nonzero_powers;
    std::optional<int> nil_index;
};

class FiniteRing;

/// Construction-specific arithmetic over dense element ids.  Implementations
/// keep O(1)-ish operations without materializing full Cayley tables; an
/// explicit-table representation exists for ad-hoc input.
class RingRep {
public:
    virtual ~RingRep() = default;

    virtual int order() const = 0;
    virtual ElemId add(ElemId a, ElemId b) const = 0;
    virtual ElemId mul(ElemId a, ElemId b) const = 0;
    virtual ElemId neg(ElemId a) const = 0;

    /// Display label, e.g. "(1,0,2)" or "x^2+x".  Charset: alphanumerics,
    /// parentheses, commas, '+', '^'.
    virtual std::string name(ElemId a) const = 0;
    /// Re-parseable form for spec text (explicit '*'); defaults to name().
    virtual std::string expr(ElemId a) const { return name(a); }

    // Structural hooks for the element-expression evaluator.
    virtual std::optional<ElemId> var_elem(const std::string& /*var*/) const { return std::nullopt; }
    virtual std::vector<FiniteRing> tuple_parts() const;
    virtual ElemId tuple_encode(const std::vector<ElemId>& /*parts*/) const {
        throw InvalidSpec("tuple elements are not meaningful for this ring");
    }
};

enum class FactorKind { field, b_type, other_local };

/// Immutable finite commutative unital ring.  Ids run 0..order-1 with
/// 0 the additive zero and 1 the multiplicative one.  Unit / zero-divisor /
/// nilpotent classifications are computed once at construction, so values
/// are safe to share across threads.
class FiniteRing {
public:
    FiniteRing(std::shared_ptr<const RingRep> rep, std::string descriptor);

    int order() const { return order_; }
    const std::string& descriptor() const { return descriptor_; }

    ElemId zero() const { return 0; }
    ElemId one() const { return 1; }

    ElemId add(ElemId a, ElemId b) const { return rep_->add(a, b); }
    ElemId mul(ElemId a, ElemId b) const { return rep_->mul(a, b); }
    ElemId neg(ElemId a) const { return rep_->neg(a); }
    ElemId sub(ElemId a, ElemId b) const { return rep_->add(a, rep_->neg(b)); }

    /// x^k for k >= 1 by repeated multiplication.
    ElemId pow(ElemId x, long k) const;

    /// Canonical image of a non-negative integer, k * 1.
    ElemId from_integer(long k) const;

    std::string elem_name(ElemId a) const { return rep_->name(a); }
    std::string elem_expr(ElemId a) const { return rep_->expr(a); }

    ElemClass classify(ElemId x) const;
    bool is_unit(ElemId x) const { return unit_[std::size_t(x)] != 0; }
    bool is_zero_divisor(ElemId x) const { return zd_[std::size_t(x)] != 0; }
    bool is_nilpotent(ElemId x) const { return nil_[std::size_t(x)] != 0; }

    PowerProfile power_profile(ElemId x) const;
    std::vector<ElemId> annihilator(ElemId x) const;

    /// Sorted ids of Z(R)* (nonzero zero-divisors).
    const std::vector<ElemId>& zero_divisors() const { return zds_; }
    /// Sorted ids of Nil(R), 0 included.
    const std::vector<ElemId>& nilradical() const { return nilradical_; }

    /// |Z(R)| with the zero counted in, matching the counting convention
    /// used throughout the claim registry.
    int z_size() const { return int(zds_.size()) + 1; }
    int nil_size() const { return int(nilradical_.size()); }

    bool is_reduced() const { return nilradical_.size() == 1; }
    /// Finite commutative rings are local exactly when Z(R) = Nil(R).
    bool is_local() const;

    /// Factor rings cut out by a complete set of primitive orthogonal
    /// idempotents; a local ring yields itself as the sole factor.
    std::vector<FiniteRing> decompose_local() const;

    const std::shared_ptr<const RingRep>& rep() const { return rep_; }

    // Element-expression structural access (see RingRep).
    std::optional<ElemId> var_elem(const std::string& var) const { return rep_->var_elem(var); }
    std::vector<FiniteRing> tuple_parts() const { return rep_->tuple_parts(); }
    ElemId tuple_encode(const std::vector<ElemId>& parts) const { return rep_->tuple_encode(parts); }

private:
    std::shared_ptr<const RingRep> rep_;
    std::string descriptor_;
    int order_ = 0;
    std::vector<std::uint8_t> unit_, zd_, nil_;
    std::vector<ElemId> zds_;        // Z(R)*, sorted
    std::vector<ElemId> nilradical_; // Nil(R), sorted
};

/// field / b_type (order 4 with |Nil| = 2, i.e. Z_4 or Z_2[X]/(X^2)) /
/// other_local.  Throws NotLocal when the argument is not local.
FactorKind classify_factor(const FiniteRing& ring);

// --- concrete representations -------------------------------------------

std::shared_ptr<const RingRep> make_zn_rep(long n);
std::shared_ptr<const RingRep> make_quot_uni_rep(long p, std::string var,
                                                 std::vector<long> monic_coeffs);
std::shared_ptr<const RingRep> make_quot_mono_rep(long p, std::vector<std::string> vars,
                                                  std::vector<std::vector<int>> gens);
std::shared_ptr<const RingRep> make_product_rep(std::vector<FiniteRing> factors);
std::shared_ptr<const RingRep> make_idealization_rep(FiniteRing base, std::vector<ElemId> ideal_gens);
std::shared_ptr<const RingRep> make_table_rep(int order, ElemId zero_id, ElemId one_id,
                                              std::vector<std::vector<int>> add,
                                              std::vector<std::vector<int>> mul);

/// Smallest ideal of `ring` containing `gens`, as a sorted id list.
std::vector<ElemId> ideal_closure(const FiniteRing& ring, const std::vector<ElemId>& gens);

} // namespace zdg
