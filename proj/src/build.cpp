#include <fstream>
#include <map>
#include <sstream>

#include "zdg/ring_spec.hpp"

#include <nlohmann/json.hpp>

namespace zdg {

namespace {

bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

long checked_power(long base, std::size_t exp, long bound, const std::string& what) {
    long o = 1;
    for (std::size_t i = 0; i < exp; ++i) {
        o *= base;
        if (o > bound)
            throw OrderBoundExceeded(what + " exceeds the order bound " + std::to_string(bound));
    }
    return o;
}

// staircase size without building arithmetic
long staircase_count(const RingSpec::QuotMono& q, long bound) {
    std::vector<int> cap(q.vars.size(), -1);
    for (const auto& g : q.gens) {
        int nz = -1, cnt = 0;
        for (std::size_t v = 0; v < q.vars.size(); ++v)
            if (g[v] > 0) {
                nz = int(v);
                ++cnt;
            }
        if (cnt == 1 && (cap[std::size_t(nz)] < 0 || g[std::size_t(nz)] < cap[std::size_t(nz)]))
            cap[std::size_t(nz)] = g[std::size_t(nz)];
    }
    for (std::size_t v = 0; v < q.vars.size(); ++v)
        if (cap[v] < 0)
            throw InfiniteQuotient("monomial ideal lacks a pure power of variable '" + q.vars[v] + "'");
    long box = 1;
    for (int c : cap) {
        box *= c;
        if (box > (1L << 22)) throw OrderBoundExceeded("monomial staircase too large");
    }
    long basis = 0;
    std::vector<int> cur(q.vars.size(), 0);
    for (long it = 0; it < box; ++it) {
        bool killed = false;
        for (const auto& g : q.gens) {
            bool div = true;
            for (std::size_t v = 0; v < q.vars.size(); ++v)
                if (cur[v] < g[v]) {
                    div = false;
                    break;
                }
            if (div) {
                killed = true;
                break;
            }
        }
        if (!killed) ++basis;
        for (std::size_t v = 0; v < q.vars.size(); ++v) {
            if (++cur[v] < cap[v]) break;
            cur[v] = 0;
        }
    }
    return checked_power(q.p, std::size_t(basis), bound, "monomial quotient");
}

struct TableData {
    int order = 0;
    int zero = 0, one = 0;
    std::vector<std::vector<int>> add, mul;
};

TableData load_table(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw MalformedTable("cannot read table file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw MalformedTable("invalid JSON in " + path + ": " + e.what());
    }
    TableData t;
    try {
        t.order = j.at("order").get<int>();
        t.zero = j.at("zero").get<int>();
        t.one = j.at("one").get<int>();
        t.add = j.at("add").get<std::vector<std::vector<int>>>();
        t.mul = j.at("mul").get<std::vector<std::vector<int>>>();
    } catch (const nlohmann::json::exception& e) {
        throw MalformedTable("table file " + path + " missing fields: " + e.what());
    }
    return t;
}

} // namespace

const std::vector<long>* bundled_irreducible(long p, int k) {
    static const std::map<std::pair<long, int>, std::vector<long>> table = {
        {{2, 2}, {1, 1, 1}},
        {{2, 3}, {1, 1, 0, 1}},
        {{2, 4}, {1, 1, 0, 0, 1}},
        {{2, 5}, {1, 0, 1, 0, 0, 1}},
        {{2, 6}, {1, 1, 0, 0, 0, 0, 1}},
        {{2, 7}, {1, 1, 0, 0, 0, 0, 0, 1}},
        {{2, 8}, {1, 1, 0, 1, 1, 0, 0, 0, 1}},
        {{3, 2}, {1, 0, 1}},
        {{3, 3}, {1, 2, 0, 1}},
        {{3, 4}, {2, 1, 0, 0, 1}},
        {{3, 5}, {1, 2, 0, 0, 0, 1}},
        {{5, 2}, {2, 0, 1}},
        {{5, 3}, {2, 3, 0, 1}},
        {{7, 2}, {1, 0, 1}},
        {{11, 2}, {1, 0, 1}},
        {{13, 2}, {2, 0, 1}},
    };
    auto it = table.find({p, k});
    return it == table.end() ? nullptr : &it->second;
}

long spec_order(const RingSpec& spec, const BuildOptions& opts) {
    const long bound = opts.max_order;
    struct Visitor {
        long bound;
        const BuildOptions& opts;
        long operator()(const RingSpec::Zn& z) const {
            if (z.n < 2) throw InvalidSpec("Z(" + std::to_string(z.n) + ") has no 1 != 0");
            if (z.n > bound)
                throw OrderBoundExceeded("Z(" + std::to_string(z.n) + ") exceeds the order bound " +
                                         std::to_string(bound));
            return z.n;
        }
        long operator()(const RingSpec::QuotUni& q) const {
            if (!is_prime(q.p)) throw InvalidSpec("non-prime modulus: " + std::to_string(q.p));
            if (q.coeffs.size() < 2 || q.coeffs.back() != 1)
                throw NonMonic("quotient polynomial must be monic of degree >= 1");
            return checked_power(q.p, q.coeffs.size() - 1, bound, "univariate quotient");
        }
        long operator()(const RingSpec::QuotMono& q) const {
            if (!is_prime(q.p)) throw InvalidSpec("non-prime modulus: " + std::to_string(q.p));
            if (q.gens.empty()) throw InvalidSpec("monomial quotient needs generators");
            return staircase_count(q, bound);
        }
        long operator()(const RingSpec::Product& p) const {
            if (p.factors.empty()) throw InvalidSpec("empty product");
            long o = 1;
            for (const auto& f : p.factors) {
                o *= spec_order(f, opts);
                if (o > bound)
                    throw OrderBoundExceeded("product exceeds the order bound " + std::to_string(bound));
            }
            return o;
        }
        long operator()(const RingSpec::Idealization& i) const {
            // |R(+)R/I| = |R| * |R/I|; needs the ideal size
            FiniteRing base = build_ring(*i.base, opts);
            std::vector<ElemId> gens;
            gens.reserve(i.gens.size());
            for (const auto& g : i.gens) gens.push_back(eval_elem_expr(base, g));
            long isz = long(ideal_closure(base, gens).size());
            long o = base.order() * (base.order() / isz);
            if (o > bound)
                throw OrderBoundExceeded("idealization exceeds the order bound " + std::to_string(bound));
            return o;
        }
        long operator()(const RingSpec::Table& t) const {
            TableData d = load_table(t.path);
            if (d.order > bound)
                throw OrderBoundExceeded("table ring exceeds the order bound " + std::to_string(bound));
            return d.order;
        }
    };
    return std::visit(Visitor{bound, opts}, spec.node);
}

ElemId eval_elem_expr(const FiniteRing& ring, const ElemExpr& expr) {
    switch (expr.kind) {
    case ElemExpr::Kind::integer:
        return ring.from_integer(expr.value);
    case ElemExpr::Kind::variable: {
        auto v = ring.var_elem(expr.var);
        if (!v) throw InvalidSpec("variable '" + expr.var + "' has no meaning in " + ring.descriptor());
        return *v;
    }
    case ElemExpr::Kind::sum: {
        ElemId acc = 0;
        for (const auto& a : expr.args) acc = ring.add(acc, eval_elem_expr(ring, a));
        return acc;
    }
    case ElemExpr::Kind::product: {
        ElemId acc = 1;
        for (const auto& a : expr.args) acc = ring.mul(acc, eval_elem_expr(ring, a));
        return acc;
    }
    case ElemExpr::Kind::power: {
        if (expr.exponent == 0) return ring.one();
        return ring.pow(eval_elem_expr(ring, expr.args[0]), expr.exponent);
    }
    case ElemExpr::Kind::tuple: {
        std::vector<FiniteRing> parts = ring.tuple_parts();
        if (parts.empty())
            throw InvalidSpec("tuple element used outside a product carrier in " + ring.descriptor());
        if (parts.size() != expr.args.size())
            throw InvalidSpec("tuple arity mismatch in " + ring.descriptor());
        std::vector<ElemId> ids;
        ids.reserve(parts.size());
        for (std::size_t i = 0; i < parts.size(); ++i)
            ids.push_back(eval_elem_expr(parts[i], expr.args[i]));
        return ring.tuple_encode(ids);
    }
    }
    throw InvalidSpec("unreachable element expression kind");
}

FiniteRing build_ring(const RingSpec& spec, const BuildOptions& opts) {
    spec_order(spec, opts); // validates and enforces the bound up front
    std::string descriptor = to_string(spec);
    struct Visitor {
        const BuildOptions& opts;
        const std::string& descriptor;
        FiniteRing operator()(const RingSpec::Zn& z) const {
            return {make_zn_rep(z.n), descriptor};
        }
        FiniteRing operator()(const RingSpec::QuotUni& q) const {
            std::vector<long> coeffs = q.coeffs;
            for (long& c : coeffs) c = ((c % q.p) + q.p) % q.p;
            if (coeffs.back() != 1) throw NonMonic("quotient polynomial must be monic");
            return {make_quot_uni_rep(q.p, q.var, std::move(coeffs)), descriptor};
        }
        FiniteRing operator()(const RingSpec::QuotMono& q) const {
            return {make_quot_mono_rep(q.p, q.vars, q.gens), descriptor};
        }
        FiniteRing operator()(const RingSpec::Product& p) const {
            if (p.factors.size() == 1) return build_ring(p.factors[0], opts);
            std::vector<FiniteRing> factors;
            factors.reserve(p.factors.size());
            for (const auto& f : p.factors) factors.push_back(build_ring(f, opts));
            return {make_product_rep(std::move(factors)), descriptor};
        }
        FiniteRing operator()(const RingSpec::Idealization& i) const {
            FiniteRing base = build_ring(*i.base, opts);
            if (std::holds_alternative<RingSpec::Table>(i.base->node))
                throw InvalidSpec("ideal generators over table rings are not expressible");
            std::vector<ElemId> gens;
            gens.reserve(i.gens.size());
            for (const auto& g : i.gens) gens.push_back(eval_elem_expr(base, g));
            return {make_idealization_rep(std::move(base), std::move(gens)), descriptor};
        }
        FiniteRing operator()(const RingSpec::Table& t) const {
            TableData d = load_table(t.path);
            return {make_table_rep(d.order, d.zero, d.one, std::move(d.add), std::move(d.mul)),
                    descriptor};
        }
    };
    return std::visit(Visitor{opts, descriptor}, spec.node);
}

FiniteRing build_ring(const std::string& spec_text, const BuildOptions& opts) {
    return build_ring(parse_ring_spec(spec_text), opts);
}

} // namespace zdg
