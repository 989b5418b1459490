#include "zdg/ring.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <unordered_map>
#include <unordered_set>

namespace zdg {

std::vector<FiniteRing> RingRep::tuple_parts() const { return {}; }

// ---------------------------------------------------------------- Z(n)

namespace {

class ZnRep final : public RingRep {
public:
    explicit ZnRep(long n) : n_(int(n)) {}
    int order() const override { return n_; }
    ElemId add(ElemId a, ElemId b) const override { return int((long(a) + b) % n_); }
    ElemId mul(ElemId a, ElemId b) const override { return int((long(a) * b) % n_); }
    ElemId neg(ElemId a) const override { return a == 0 ? 0 : n_ - a; }
    std::string name(ElemId a) const override { return std::to_string(a); }

private:
    int n_;
};

// ------------------------------------------------- Z_p[x]/(f), f monic

class QuotUniRep final : public RingRep {
public:
    QuotUniRep(long p, std::string var, std::vector<long> coeffs)
        : p_(int(p)), var_(std::move(var)), f_(std::move(coeffs)), deg_(int(f_.size()) - 1) {
        long o = 1;
        for (int i = 0; i < deg_; ++i) o *= p_;
        order_ = int(o);
        pow_.resize(deg_ + 1);
        pow_[0] = 1;
        for (int i = 1; i <= deg_; ++i) pow_[i] = pow_[i - 1] * p_;
    }

    int order() const override { return order_; }

    ElemId add(ElemId a, ElemId b) const override {
        ElemId out = 0;
        for (int k = 0; k < deg_; ++k) {
            int da = int((a / pow_[k]) % p_), db = int((b / pow_[k]) % p_);
            out += int(long(pow_[k]) * ((da + db) % p_));
        }
        return out;
    }

    ElemId neg(ElemId a) const override {
        ElemId out = 0;
        for (int k = 0; k < deg_; ++k) {
            int da = int((a / pow_[k]) % p_);
            out += int(long(pow_[k]) * ((p_ - da) % p_));
        }
        return out;
    }

    ElemId mul(ElemId a, ElemId b) const override {
        std::vector<int> prod(std::size_t(2 * deg_ - 1), 0);
        for (int i = 0; i < deg_; ++i) {
            int da = int((a / pow_[i]) % p_);
            if (!da) continue;
            for (int j = 0; j < deg_; ++j) {
                int db = int((b / pow_[j]) % p_);
                prod[std::size_t(i + j)] = int((prod[std::size_t(i + j)] + long(da) * db) % p_);
            }
        }
        // reduce by the monic modulus
        for (int k = 2 * deg_ - 2; k >= deg_; --k) {
            int c = prod[std::size_t(k)];
            if (!c) continue;
            prod[std::size_t(k)] = 0;
            for (int t = 0; t < deg_; ++t) {
                long v = prod[std::size_t(k - deg_ + t)] - long(c) * f_[std::size_t(t)];
                prod[std::size_t(k - deg_ + t)] = int(((v % p_) + p_) % p_);
            }
        }
        ElemId out = 0;
        for (int k = 0; k < deg_; ++k) out += int(long(pow_[k]) * prod[std::size_t(k)]);
        return out;
    }

    std::string name(ElemId a) const override { return format(a, false); }
    std::string expr(ElemId a) const override { return format(a, true); }

    std::optional<ElemId> var_elem(const std::string& v) const override {
        if (v != var_) return std::nullopt;
        if (deg_ >= 2) return ElemId(pow_[1]);
        // degree-1 modulus x + c: the class of x is -c
        return neg(ElemId(f_[0]));
    }

private:
    std::string format(ElemId a, bool parseable) const {
        std::string out;
        for (int k = deg_ - 1; k >= 0; --k) {
            int c = int((a / pow_[k]) % p_);
            if (!c) continue;
            if (!out.empty()) out += '+';
            if (k == 0) {
                out += std::to_string(c);
            } else {
                if (c != 1) out += std::to_string(c) + (parseable ? "*" : "");
                out += var_;
                if (k >= 2) out += "^" + std::to_string(k);
            }
        }
        return out.empty() ? "0" : out;
    }

    int p_;
    std::string var_;
    std::vector<long> f_; // monic modulus, low->high
    int deg_;
    int order_;
    std::vector<long> pow_;
};

// --------------------------------- Z_p[v...]/(monomial ideal), staircase

class QuotMonoRep final : public RingRep {
public:
    QuotMonoRep(long p, std::vector<std::string> vars, std::vector<std::vector<int>> gens,
                std::vector<std::vector<int>> basis)
        : p_(int(p)), vars_(std::move(vars)), gens_(std::move(gens)), basis_(std::move(basis)) {
        long o = 1;
        for (std::size_t i = 0; i < basis_.size(); ++i) o *= p_;
        order_ = int(o);
        pow_.resize(basis_.size() + 1);
        pow_[0] = 1;
        for (std::size_t i = 1; i <= basis_.size(); ++i) pow_[i] = pow_[i - 1] * p_;
        for (std::size_t i = 0; i < basis_.size(); ++i) index_[key(basis_[i])] = int(i);
    }

    int order() const override { return order_; }

    ElemId add(ElemId a, ElemId b) const override {
        ElemId out = 0;
        for (std::size_t k = 0; k < basis_.size(); ++k) {
            int da = digit(a, k), db = digit(b, k);
            out += int(pow_[k] * ((da + db) % p_));
        }
        return out;
    }

    ElemId neg(ElemId a) const override {
        ElemId out = 0;
        for (std::size_t k = 0; k < basis_.size(); ++k)
            out += int(pow_[k] * ((p_ - digit(a, k)) % p_));
        return out;
    }

    ElemId mul(ElemId a, ElemId b) const override {
        std::vector<int> out(basis_.size(), 0);
        std::vector<int> m(vars_.size());
        for (std::size_t i = 0; i < basis_.size(); ++i) {
            int da = digit(a, i);
            if (!da) continue;
            for (std::size_t j = 0; j < basis_.size(); ++j) {
                int db = digit(b, j);
                if (!db) continue;
                for (std::size_t v = 0; v < vars_.size(); ++v) m[v] = basis_[i][v] + basis_[j][v];
                if (in_ideal(m)) continue; // monomial killed by a generator
                int t = index_.at(key(m));
                out[std::size_t(t)] = int((out[std::size_t(t)] + long(da) * db) % p_);
            }
        }
        ElemId enc = 0;
        for (std::size_t k = 0; k < basis_.size(); ++k) enc += int(pow_[k] * out[k]);
        return enc;
    }

    std::string name(ElemId a) const override { return format(a, false); }
    std::string expr(ElemId a) const override { return format(a, true); }

    std::optional<ElemId> var_elem(const std::string& v) const override {
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            if (vars_[i] != v) continue;
            std::vector<int> m(vars_.size(), 0);
            m[i] = 1;
            if (in_ideal(m)) return 0; // x itself lies in the ideal
            return ElemId(pow_[std::size_t(index_.at(key(m)))]);
        }
        return std::nullopt;
    }

private:
    static std::string key(const std::vector<int>& m) {
        std::string k;
        for (int e : m) {
            k += std::to_string(e);
            k += ',';
        }
        return k;
    }

    bool in_ideal(const std::vector<int>& m) const {
        for (const auto& g : gens_) {
            bool div = true;
            for (std::size_t v = 0; v < m.size(); ++v)
                if (m[v] < g[v]) {
                    div = false;
                    break;
                }
            if (div) return true;
        }
        return false;
    }

    int digit(ElemId a, std::size_t k) const { return int((a / pow_[k]) % p_); }

    std::string monomial(std::size_t i, bool parseable) const {
        std::string out;
        for (std::size_t v = 0; v < vars_.size(); ++v) {
            int e = basis_[i][v];
            if (!e) continue;
            if (!out.empty() && parseable) out += '*';
            out += vars_[v];
            if (e >= 2) out += "^" + std::to_string(e);
        }
        return out; // empty for the constant monomial
    }

    std::string format(ElemId a, bool parseable) const {
        std::string out;
        for (std::size_t k = basis_.size(); k-- > 0;) {
            int c = digit(a, k);
            if (!c) continue;
            if (!out.empty()) out += '+';
            std::string mono = monomial(k, parseable);
            if (mono.empty()) {
                out += std::to_string(c);
            } else {
                if (c != 1) out += std::to_string(c) + (parseable ? "*" : "");
                out += mono;
            }
        }
        return out.empty() ? "0" : out;
    }

    int p_;
    std::vector<std::string> vars_;
    std::vector<std::vector<int>> gens_;
    std::vector<std::vector<int>> basis_; // sorted by (total degree, exponents)
    int order_;
    std::vector<long> pow_;
    std::unordered_map<std::string, int> index_;
};

// ------------------------------------------------------------- products

class ProductRep final : public RingRep {
public:
    explicit ProductRep(std::vector<FiniteRing> factors) : factors_(std::move(factors)) {
        strides_.assign(factors_.size(), 1);
        long o = 1;
        for (std::size_t i = factors_.size(); i-- > 0;) {
            strides_[i] = o;
            o *= factors_[i].order();
        }
        order_ = int(o);
    }

    int order() const override { return order_; }

    ElemId add(ElemId a, ElemId b) const override { return zip(a, b, /*mul=*/false); }
    ElemId mul(ElemId a, ElemId b) const override { return zip(a, b, /*mul=*/true); }

    ElemId neg(ElemId a) const override {
        long out = 0;
        for (std::size_t i = 0; i < factors_.size(); ++i)
            out += strides_[i] * factors_[i].neg(component(a, i));
        return ElemId(out);
    }

    std::string name(ElemId a) const override { return format(a, false); }
    std::string expr(ElemId a) const override { return format(a, true); }

    std::vector<FiniteRing> tuple_parts() const override { return factors_; }

    ElemId tuple_encode(const std::vector<ElemId>& parts) const override {
        if (parts.size() != factors_.size())
            throw InvalidSpec("tuple arity does not match the product");
        long out = 0;
        for (std::size_t i = 0; i < parts.size(); ++i) out += strides_[i] * parts[i];
        return ElemId(out);
    }

    ElemId natural_one() const {
        long out = 0;
        for (std::size_t i = 0; i < factors_.size(); ++i) out += strides_[i] * factors_[i].one();
        return ElemId(out);
    }

private:
    int component(ElemId a, std::size_t i) const {
        return int((a / strides_[i]) % factors_[i].order());
    }

    ElemId zip(ElemId a, ElemId b, bool mul) const {
        long out = 0;
        for (std::size_t i = 0; i < factors_.size(); ++i) {
            int ca = component(a, i), cb = component(b, i);
            out += strides_[i] * (mul ? factors_[i].mul(ca, cb) : factors_[i].add(ca, cb));
        }
        return ElemId(out);
    }

    std::string format(ElemId a, bool parseable) const {
        std::string out = "(";
        for (std::size_t i = 0; i < factors_.size(); ++i) {
            if (i) out += ',';
            int c = component(a, i);
            out += parseable ? factors_[i].elem_expr(c) : factors_[i].elem_name(c);
        }
        out += ')';
        return out;
    }

    std::vector<FiniteRing> factors_;
    std::vector<long> strides_;
    int order_;
};

// Transposition wrapper pinning the multiplicative one at id 1 for
// representations whose natural encoding puts it elsewhere.
class RelabelRep final : public RingRep {
public:
    RelabelRep(std::shared_ptr<const RingRep> inner, ElemId a, ElemId b)
        : inner_(std::move(inner)), a_(a), b_(b) {}

    int order() const override { return inner_->order(); }
    ElemId add(ElemId x, ElemId y) const override { return fix(inner_->add(fix(x), fix(y))); }
    ElemId mul(ElemId x, ElemId y) const override { return fix(inner_->mul(fix(x), fix(y))); }
    ElemId neg(ElemId x) const override { return fix(inner_->neg(fix(x))); }
    std::string name(ElemId x) const override { return inner_->name(fix(x)); }
    std::string expr(ElemId x) const override { return inner_->expr(fix(x)); }

    std::optional<ElemId> var_elem(const std::string& v) const override {
        auto e = inner_->var_elem(v);
        if (e) return fix(*e);
        return std::nullopt;
    }
    std::vector<FiniteRing> tuple_parts() const override { return inner_->tuple_parts(); }
    ElemId tuple_encode(const std::vector<ElemId>& parts) const override {
        return fix(inner_->tuple_encode(parts));
    }

private:
    ElemId fix(ElemId x) const { return x == a_ ? b_ : x == b_ ? a_ : x; }

    std::shared_ptr<const RingRep> inner_;
    ElemId a_, b_;
};

// --------------------------------------------------- idealization R(+)R/I

class IdealizationRep final : public RingRep {
public:
    IdealizationRep(FiniteRing base, std::vector<ElemId> ideal) : base_(std::move(base)) {
        const int n = base_.order();
        rep_of_.assign(std::size_t(n), 0);
        for (ElemId r = 0; r < n; ++r) {
            ElemId best = base_.add(r, ideal[0]);
            for (ElemId i : ideal) best = std::min(best, base_.add(r, i));
            rep_of_[std::size_t(r)] = best;
        }
        for (ElemId r = 0; r < n; ++r)
            if (rep_of_[std::size_t(r)] == r) reps_.push_back(r);
        midx_.assign(std::size_t(n), -1);
        for (std::size_t k = 0; k < reps_.size(); ++k) midx_[std::size_t(reps_[k])] = int(k);
        order_ = n * int(reps_.size());
    }

    int order() const override { return order_; }

    ElemId add(ElemId x, ElemId y) const override {
        auto [a, m] = split(x);
        auto [b, nn] = split(y);
        return join(base_.add(a, b), coset(base_.add(reps_[std::size_t(m)], reps_[std::size_t(nn)])));
    }

    // (a,n)(b,m) = (ab, am + bn)
    ElemId mul(ElemId x, ElemId y) const override {
        auto [a, n] = split(x);
        auto [b, m] = split(y);
        ElemId mod = base_.add(base_.mul(a, reps_[std::size_t(m)]), base_.mul(b, reps_[std::size_t(n)]));
        return join(base_.mul(a, b), coset(mod));
    }

    ElemId neg(ElemId x) const override {
        auto [a, m] = split(x);
        return join(base_.neg(a), coset(base_.neg(reps_[std::size_t(m)])));
    }

    std::string name(ElemId x) const override {
        auto [a, m] = split(x);
        return "(" + base_.elem_name(a) + "," + base_.elem_name(reps_[std::size_t(m)]) + ")";
    }

    std::string expr(ElemId x) const override {
        auto [a, m] = split(x);
        return "(" + base_.elem_expr(a) + "," + base_.elem_expr(reps_[std::size_t(m)]) + ")";
    }

    std::vector<FiniteRing> tuple_parts() const override { return {base_, base_}; }
    ElemId tuple_encode(const std::vector<ElemId>& parts) const override {
        if (parts.size() != 2) throw InvalidSpec("idealization tuples take two components");
        return join(parts[0], coset(parts[1]));
    }

private:
    std::pair<ElemId, int> split(ElemId x) const { return {x % base_.order(), x / base_.order()}; }
    ElemId join(ElemId a, int m) const { return m * base_.order() + a; }
    int coset(ElemId r) const { return midx_[std::size_t(rep_of_[std::size_t(r)])]; }

    FiniteRing base_;
    std::vector<ElemId> rep_of_; // element -> least member of its coset
    std::vector<ElemId> reps_;   // sorted coset representatives; reps_[0] = 0
    std::vector<int> midx_;      // representative -> module index
    int order_;
};

// --------------------------------------------------------- explicit tables

class TableRep final : public RingRep {
public:
    TableRep(std::vector<std::vector<int>> add, std::vector<std::vector<int>> mul)
        : add_(std::move(add)), mul_(std::move(mul)), n_(int(add_.size())) {}

    int order() const override { return n_; }
    ElemId add(ElemId a, ElemId b) const override { return add_[std::size_t(a)][std::size_t(b)]; }
    ElemId mul(ElemId a, ElemId b) const override { return mul_[std::size_t(a)][std::size_t(b)]; }
    ElemId neg(ElemId a) const override {
        for (ElemId b = 0; b < n_; ++b)
            if (add_[std::size_t(a)][std::size_t(b)] == 0) return b;
        throw MalformedTable("element has no additive inverse");
    }
    std::string name(ElemId a) const override { return std::to_string(a); }

private:
    std::vector<std::vector<int>> add_, mul_;
    int n_;
};

// --------------------------------------------------- factor-ring subrings

class SubringRep final : public RingRep {
public:
    SubringRep(FiniteRing parent, std::vector<ElemId> elems)
        : parent_(std::move(parent)), elems_(std::move(elems)) {
        for (std::size_t i = 0; i < elems_.size(); ++i) index_[elems_[i]] = int(i);
    }

    int order() const override { return int(elems_.size()); }
    ElemId add(ElemId a, ElemId b) const override {
        return index_.at(parent_.add(elems_[std::size_t(a)], elems_[std::size_t(b)]));
    }
    ElemId mul(ElemId a, ElemId b) const override {
        return index_.at(parent_.mul(elems_[std::size_t(a)], elems_[std::size_t(b)]));
    }
    ElemId neg(ElemId a) const override {
        // -x within e*R: e*(-x) = -x for x in the factor
        return index_.at(parent_.mul(elems_[1], parent_.neg(elems_[std::size_t(a)])));
    }
    std::string name(ElemId a) const override { return parent_.elem_name(elems_[std::size_t(a)]); }
    std::string expr(ElemId a) const override { return parent_.elem_expr(elems_[std::size_t(a)]); }

private:
    FiniteRing parent_;
    std::vector<ElemId> elems_; // sub id -> parent id; elems_[0] = 0, elems_[1] = identity
    std::unordered_map<ElemId, int> index_;
};

} // namespace

// ------------------------------------------------------------ factories

std::shared_ptr<const RingRep> make_zn_rep(long n) { return std::make_shared<ZnRep>(n); }

std::shared_ptr<const RingRep> make_quot_uni_rep(long p, std::string var, std::vector<long> coeffs) {
    return std::make_shared<QuotUniRep>(p, std::move(var), std::move(coeffs));
}

std::shared_ptr<const RingRep> make_quot_mono_rep(long p, std::vector<std::string> vars,
                                                  std::vector<std::vector<int>> gens) {
    // staircase basis: monomials below every generator, graded order
    std::vector<int> cap(vars.size(), -1);
    for (const auto& g : gens) {
        int nz = -1, cnt = 0;
        for (std::size_t v = 0; v < vars.size(); ++v)
            if (g[v] > 0) {
                nz = int(v);
                ++cnt;
            }
        if (cnt == 1 && (cap[std::size_t(nz)] < 0 || g[std::size_t(nz)] < cap[std::size_t(nz)]))
            cap[std::size_t(nz)] = g[std::size_t(nz)];
    }
    for (std::size_t v = 0; v < vars.size(); ++v)
        if (cap[v] < 0)
            throw InfiniteQuotient("monomial ideal lacks a pure power of variable '" + vars[v] + "'");

    std::vector<std::vector<int>> box;
    std::vector<int> cur(vars.size(), 0);
    while (true) {
        bool killed = false;
        for (const auto& g : gens) {
            bool div = true;
            for (std::size_t v = 0; v < vars.size(); ++v)
                if (cur[v] < g[v]) {
                    div = false;
                    break;
                }
            if (div) {
                killed = true;
                break;
            }
        }
        if (!killed) box.push_back(cur);
        std::size_t v = 0;
        for (; v < vars.size(); ++v) {
            if (++cur[v] < cap[v]) break;
            cur[v] = 0;
        }
        if (v == vars.size()) break;
    }
    std::sort(box.begin(), box.end(), [](const std::vector<int>& a, const std::vector<int>& b) {
        int sa = 0, sb = 0;
        for (int e : a) sa += e;
        for (int e : b) sb += e;
        if (sa != sb) return sa < sb;
        return a < b;
    });
    return std::make_shared<QuotMonoRep>(p, std::move(vars), std::move(gens), std::move(box));
}

std::shared_ptr<const RingRep> make_product_rep(std::vector<FiniteRing> factors) {
    auto prod = std::make_shared<ProductRep>(std::move(factors));
    ElemId one = prod->natural_one();
    if (one == 1) return prod;
    return std::make_shared<RelabelRep>(prod, 1, one);
}

std::shared_ptr<const RingRep> make_idealization_rep(FiniteRing base, std::vector<ElemId> ideal_gens) {
    std::vector<ElemId> ideal = ideal_closure(base, ideal_gens);
    return std::make_shared<IdealizationRep>(std::move(base), std::move(ideal));
}

std::shared_ptr<const RingRep> make_table_rep(int order, ElemId zero_id, ElemId one_id,
                                              std::vector<std::vector<int>> add,
                                              std::vector<std::vector<int>> mul) {
    if (order < 2) throw MalformedTable("order must be at least 2 (1 != 0)");
    if (zero_id < 0 || zero_id >= order || one_id < 0 || one_id >= order || zero_id == one_id)
        throw MalformedTable("zero/one ids out of range or equal");
    auto check_shape = [&](const std::vector<std::vector<int>>& t, const char* which) {
        if (int(t.size()) != order) throw MalformedTable(std::string(which) + " table has wrong height");
        for (const auto& row : t) {
            if (int(row.size()) != order) throw MalformedTable(std::string(which) + " table has wrong width");
            for (int v : row)
                if (v < 0 || v >= order) throw MalformedTable(std::string(which) + " entry out of range");
        }
    };
    check_shape(add, "add");
    check_shape(mul, "mul");

    // remap so zero sits at id 0 and one at id 1
    const std::size_t n = std::size_t(order);
    std::vector<int> perm(n, 0);
    for (int i = 0; i < order; ++i) perm[std::size_t(i)] = i;
    std::swap(perm[std::size_t(zero_id)], perm[0]);
    // location of one after the first swap
    int one_pos = one_id == 0 ? zero_id : one_id;
    std::swap(perm[std::size_t(one_pos)], perm[1]);
    // perm: new id -> old id; invert
    std::vector<int> to_new(n, 0);
    for (int i = 0; i < order; ++i) to_new[std::size_t(perm[std::size_t(i)])] = i;
    std::vector<std::vector<int>> A(n, std::vector<int>(n, 0));
    std::vector<std::vector<int>> M(n, std::vector<int>(n, 0));
    for (int i = 0; i < order; ++i)
        for (int j = 0; j < order; ++j) {
            int oi = perm[std::size_t(i)], oj = perm[std::size_t(j)];
            A[std::size_t(i)][std::size_t(j)] = to_new[std::size_t(add[std::size_t(oi)][std::size_t(oj)])];
            M[std::size_t(i)][std::size_t(j)] = to_new[std::size_t(mul[std::size_t(oi)][std::size_t(oj)])];
        }

    // identities, commutativity and inverses are cheap; check always
    for (int i = 0; i < order; ++i) {
        if (A[0][std::size_t(i)] != i) throw MalformedTable("declared zero is not additively neutral");
        if (M[1][std::size_t(i)] != i) throw MalformedTable("declared one is not multiplicatively neutral");
        if (M[0][std::size_t(i)] != 0) throw MalformedTable("zero is not absorbing");
        bool has_neg = false;
        for (int j = 0; j < order && !has_neg; ++j) has_neg = A[std::size_t(i)][std::size_t(j)] == 0;
        if (!has_neg) throw MalformedTable("element has no additive inverse");
        for (int j = 0; j < order; ++j) {
            if (A[std::size_t(i)][std::size_t(j)] != A[std::size_t(j)][std::size_t(i)])
                throw MalformedTable("addition is not commutative");
            if (M[std::size_t(i)][std::size_t(j)] != M[std::size_t(j)][std::size_t(i)])
                throw MalformedTable("multiplication is not commutative");
        }
    }
    if (order <= 256) {
        for (int a = 0; a < order; ++a)
            for (int b = 0; b < order; ++b)
                for (int c = 0; c < order; ++c) {
                    std::size_t sa = std::size_t(a), sb = std::size_t(b), sc = std::size_t(c);
                    if (A[std::size_t(A[sa][sb])][sc] != A[sa][std::size_t(A[sb][sc])])
                        throw MalformedTable("addition is not associative");
                    if (M[std::size_t(M[sa][sb])][sc] != M[sa][std::size_t(M[sb][sc])])
                        throw MalformedTable("multiplication is not associative");
                    if (M[sa][std::size_t(A[sb][sc])] != A[std::size_t(M[sa][sb])][std::size_t(M[sa][sc])])
                        throw MalformedTable("multiplication does not distribute over addition");
                }
    }
    return std::make_shared<TableRep>(std::move(A), std::move(M));
}

// ------------------------------------------------------------ FiniteRing

FiniteRing::FiniteRing(std::shared_ptr<const RingRep> rep, std::string descriptor)
    : rep_(std::move(rep)), descriptor_(std::move(descriptor)) {
    order_ = rep_->order();
    if (order_ < 2) throw InvalidSpec("ring must have 1 != 0 (order >= 2): " + descriptor_);
    unit_.assign(std::size_t(order_), 0);
    zd_.assign(std::size_t(order_), 0);
    nil_.assign(std::size_t(order_), 0);
    for (ElemId x = 0; x < order_; ++x) {
        for (ElemId y = x; y < order_; ++y) {
            ElemId prod = rep_->mul(x, y);
            if (prod == 1) {
                unit_[std::size_t(x)] = 1;
                unit_[std::size_t(y)] = 1;
            }
            if (prod == 0 && x != 0 && y != 0) {
                zd_[std::size_t(x)] = 1;
                zd_[std::size_t(y)] = 1;
            }
        }
    }
    for (ElemId x = 0; x < order_; ++x) {
        ElemId v = x;
        std::vector<std::uint8_t> seen(std::size_t(order_), 0);
        while (v != 0 && !seen[std::size_t(v)]) {
            seen[std::size_t(v)] = 1;
            v = rep_->mul(v, x);
        }
        if (v == 0) nil_[std::size_t(x)] = 1;
    }
    for (ElemId x = 1; x < order_; ++x)
        if (zd_[std::size_t(x)]) zds_.push_back(x);
    for (ElemId x = 0; x < order_; ++x)
        if (nil_[std::size_t(x)]) nilradical_.push_back(x);
}

ElemId FiniteRing::pow(ElemId x, long k) const {
    assert(k >= 1);
    ElemId res = 1, base = x;
    while (k > 0) {
        if (k & 1) res = rep_->mul(res, base);
        base = rep_->mul(base, base);
        k >>= 1;
    }
    return res;
}

ElemId FiniteRing::from_integer(long k) const {
    if (k < 0) throw InvalidSpec("negative integer literal");
    ElemId res = 0, base = 1;
    while (k > 0) {
        if (k & 1) res = rep_->add(res, base);
        base = rep_->add(base, base);
        k >>= 1;
    }
    return res;
}

ElemClass FiniteRing::classify(ElemId x) const {
    if (x == 0) return ElemClass::zero;
    if (unit_[std::size_t(x)]) return ElemClass::unit;
    if (zd_[std::size_t(x)]) return ElemClass::zero_divisor;
    throw MalformedTable("element is neither a unit nor a zero-divisor: " + elem_name(x) +
                         " in " + descriptor_);
}

PowerProfile FiniteRing::power_profile(ElemId x) const {
    PowerProfile out;
    out.element = x;
    ElemId v = x;
    std::vector<std::uint8_t> seen(std::size_t(order_), 0);
    while (v != 0 && !seen[std::size_t(v)]) {
        seen[std::size_t(v)] = 1;
        out.nonzero_powers.push_back(v);
        v = rep_->mul(v, x);
    }
    if (v == 0) out.nil_index = int(out.nonzero_powers.size()) + 1;
    return out;
}

std::vector<ElemId> FiniteRing::annihilator(ElemId x) const {
    std::vector<ElemId> out;
    for (ElemId y = 0; y < order_; ++y)
        if (rep_->mul(x, y) == 0) out.push_back(y);
    return out;
}

bool FiniteRing::is_local() const {
    if (nilradical_.size() != zds_.size() + 1) return false;
    for (ElemId z : zds_)
        if (!nil_[std::size_t(z)]) return false;
    return true;
}

std::vector<FiniteRing> FiniteRing::decompose_local() const {
    std::vector<ElemId> idem;
    for (ElemId e = 0; e < order_; ++e)
        if (rep_->mul(e, e) == e) idem.push_back(e);

    std::vector<ElemId> prim;
    for (ElemId e : idem) {
        if (e == 0) continue;
        bool minimal = true;
        for (ElemId f : idem) {
            if (f == 0 || f == e) continue;
            if (rep_->mul(e, f) == f) {
                minimal = false;
                break;
            }
        }
        if (minimal) prim.push_back(e);
    }

    if (prim.size() == 1 && prim[0] == 1) return {*this};

    // complete orthogonal set: consistency guard
    ElemId sum = 0;
    for (ElemId e : prim) sum = rep_->add(sum, e);
    if (sum != 1) throw RingError("primitive idempotents do not sum to 1 in " + descriptor_);
    for (std::size_t i = 0; i < prim.size(); ++i)
        for (std::size_t j = i + 1; j < prim.size(); ++j)
            if (rep_->mul(prim[i], prim[j]) != 0)
                throw RingError("primitive idempotents are not orthogonal in " + descriptor_);

    std::vector<FiniteRing> out;
    for (ElemId e : prim) {
        std::vector<std::uint8_t> in(std::size_t(order_), 0);
        std::vector<ElemId> elems;
        for (ElemId r = 0; r < order_; ++r) {
            ElemId v = rep_->mul(e, r);
            if (!in[std::size_t(v)]) {
                in[std::size_t(v)] = 1;
                elems.push_back(v);
            }
        }
        std::sort(elems.begin(), elems.end());
        // sub id 0 = 0, sub id 1 = identity e
        elems.erase(std::remove(elems.begin(), elems.end(), e), elems.end());
        elems.insert(elems.begin() + 1, e);
        out.emplace_back(std::make_shared<SubringRep>(*this, std::move(elems)),
                         "factor(e=" + elem_name(e) + ", " + descriptor_ + ")");
    }
    return out;
}

FactorKind classify_factor(const FiniteRing& ring) {
    if (!ring.is_local())
        throw NotLocal("classify_factor requires a local ring: " + ring.descriptor());
    if (ring.zero_divisors().empty()) return FactorKind::field;
    if (ring.order() == 4 && ring.nil_size() == 2) return FactorKind::b_type;
    return FactorKind::other_local;
}

std::vector<ElemId> ideal_closure(const FiniteRing& ring, const std::vector<ElemId>& gens) {
    const int n = ring.order();
    std::vector<std::uint8_t> in(std::size_t(n), 0);
    std::vector<ElemId> members;
    auto push = [&](ElemId v) {
        if (!in[std::size_t(v)]) {
            in[std::size_t(v)] = 1;
            members.push_back(v);
        }
    };
    push(0);
    for (ElemId g : gens)
        for (ElemId r = 0; r < n; ++r) push(ring.mul(g, r));
    // additive closure of the multiples (sums of multiples = the ideal)
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = 0; j <= i; ++j) push(ring.add(members[i], members[j]));
    std::sort(members.begin(), members.end());
    return members;
}

} // namespace zdg
