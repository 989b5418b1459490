#include "zdg/ring_spec.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

namespace zdg {

// ------------------------------------------------------------- ElemExpr

ElemExpr ElemExpr::integer(long v) {
    ElemExpr e;
    e.kind = Kind::integer;
    e.value = v;
    return e;
}
ElemExpr ElemExpr::variable(std::string name) {
    ElemExpr e;
    e.kind = Kind::variable;
    e.var = std::move(name);
    return e;
}
ElemExpr ElemExpr::sum(std::vector<ElemExpr> terms) {
    if (terms.size() == 1) return std::move(terms.front());
    ElemExpr e;
    e.kind = Kind::sum;
    e.args = std::move(terms);
    return e;
}
ElemExpr ElemExpr::product(std::vector<ElemExpr> factors) {
    if (factors.size() == 1) return std::move(factors.front());
    ElemExpr e;
    e.kind = Kind::product;
    e.args = std::move(factors);
    return e;
}
ElemExpr ElemExpr::power(ElemExpr base, long k) {
    ElemExpr e;
    e.kind = Kind::power;
    e.args.push_back(std::move(base));
    e.exponent = k;
    return e;
}
ElemExpr ElemExpr::tuple(std::vector<ElemExpr> parts) {
    ElemExpr e;
    e.kind = Kind::tuple;
    e.args = std::move(parts);
    return e;
}

namespace {

int precedence(ElemExpr::Kind k) {
    switch (k) {
    case ElemExpr::Kind::sum: return 0;
    case ElemExpr::Kind::product: return 1;
    case ElemExpr::Kind::power: return 2;
    default: return 3;
    }
}

void print_expr(const ElemExpr& e, std::string& out) {
    switch (e.kind) {
    case ElemExpr::Kind::integer:
        out += std::to_string(e.value);
        return;
    case ElemExpr::Kind::variable:
        out += e.var;
        return;
    case ElemExpr::Kind::tuple: {
        out += '(';
        for (std::size_t i = 0; i < e.args.size(); ++i) {
            if (i) out += ',';
            print_expr(e.args[i], out);
        }
        out += ')';
        return;
    }
    case ElemExpr::Kind::sum:
    case ElemExpr::Kind::product: {
        const char op = e.kind == ElemExpr::Kind::sum ? '+' : '*';
        for (std::size_t i = 0; i < e.args.size(); ++i) {
            if (i) out += op;
            bool paren = precedence(e.args[i].kind) < precedence(e.kind);
            if (paren) out += '(';
            print_expr(e.args[i], out);
            if (paren) out += ')';
        }
        return;
    }
    case ElemExpr::Kind::power: {
        bool paren = precedence(e.args[0].kind) < precedence(ElemExpr::Kind::power);
        if (paren) out += '(';
        print_expr(e.args[0], out);
        if (paren) out += ')';
        out += '^';
        out += std::to_string(e.exponent);
        return;
    }
    }
}

// ------------------------------------------------------------------ parser

struct Parser {
    const std::string& text;
    std::size_t pos = 0;

    explicit Parser(const std::string& t) : text(t) {}

    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos); }

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool match(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!match(c)) fail(std::string("expected '") + c + "'");
    }

    long parse_int() {
        skip_ws();
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            fail("expected an integer");
        long v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            v = v * 10 + (text[pos] - '0');
            if (v > 1000000000000L) fail("integer too large");
            ++pos;
        }
        return v;
    }

    std::string parse_ident() {
        skip_ws();
        if (pos >= text.size() || !std::isalpha(static_cast<unsigned char>(text[pos])))
            fail("expected an identifier");
        std::size_t start = pos;
        while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
            ++pos;
        return text.substr(start, pos - start);
    }

    static std::string lower(std::string s) {
        std::transform(s.begin(), s.end(), s.begin(),
                       [](unsigned char c) { return char(std::tolower(c)); });
        return s;
    }

    // ---- ring spec level ----

    RingSpec parse_spec() {
        RingSpec first = parse_term();
        std::vector<RingSpec> factors;
        factors.push_back(std::move(first));
        while (true) {
            skip_ws();
            if (pos < text.size() && (text[pos] == 'x' || text[pos] == 'X')) {
                // product operator: a lone 'x' between terms
                ++pos;
                factors.push_back(parse_term());
            } else {
                break;
            }
        }
        if (factors.size() == 1) return std::move(factors.front());
        // flatten nested products (the operator is n-ary)
        std::vector<RingSpec> flat;
        for (auto& f : factors) {
            if (auto* p = std::get_if<RingSpec::Product>(&f.node))
                for (auto& g : p->factors) flat.push_back(std::move(g));
            else
                flat.push_back(std::move(f));
        }
        RingSpec out;
        out.node = RingSpec::Product{std::move(flat)};
        return out;
    }

    RingSpec parse_term() {
        skip_ws();
        if (match('(')) {
            RingSpec inner = parse_spec();
            expect(')');
            return inner;
        }
        std::size_t kw_pos = pos;
        std::string kw = lower(parse_ident());
        if (kw == "z") return parse_z();
        if (kw == "gf") return parse_gf();
        if (kw == "ideal") return parse_ideal();
        if (kw == "table") return parse_table();
        pos = kw_pos;
        fail("expected a ring term (Z, GF, ideal, table or parentheses)");
    }

    RingSpec parse_z() {
        expect('(');
        long n = parse_int();
        expect(')');
        skip_ws();
        if (peek() != '[') {
            if (n < 2) fail("Z(" + std::to_string(n) + ") is not a ring with 1 != 0");
            RingSpec out;
            out.node = RingSpec::Zn{n};
            return out;
        }
        expect('[');
        std::vector<std::string> vars;
        vars.push_back(parse_ident());
        while (match(',')) vars.push_back(parse_ident());
        expect(']');
        std::set<std::string> unique(vars.begin(), vars.end());
        if (unique.size() != vars.size()) fail("duplicate variable name");
        for (const auto& v : vars)
            if (lower(v) == "z" || lower(v) == "gf" || lower(v) == "ideal" || lower(v) == "table")
                fail("variable name collides with a keyword: " + v);
        expect('/');
        expect('(');
        if (!is_prime(n)) throw InvalidSpec("non-prime modulus in quotient coefficients: Z(" +
                                            std::to_string(n) + ")[...]");
        std::vector<Poly> gens;
        gens.push_back(parse_poly(vars));
        while (match(',')) gens.push_back(parse_poly(vars));
        expect(')');
        return assemble_quotient(n, vars, std::move(gens));
    }

    RingSpec parse_gf() {
        expect('(');
        long a = parse_int();
        long p = 0;
        int k = 0;
        if (match('^')) {
            long e = parse_int();
            if (!is_prime(a)) throw InvalidSpec("GF base must be prime: " + std::to_string(a));
            if (e < 1 || e > 30) fail("bad GF exponent");
            p = a;
            k = int(e);
        } else {
            // factor q as p^k
            long q = a;
            if (q < 2) fail("GF size must be at least 2");
            long f = 2;
            while (f * f <= q && q % f != 0) ++f;
            p = (f * f <= q) ? f : q;
            k = 0;
            long t = q;
            while (t > 1) {
                if (t % p != 0) throw InvalidSpec("GF size is not a prime power: " + std::to_string(a));
                t /= p;
                ++k;
            }
        }
        expect(')');
        if (k == 1) {
            RingSpec out;
            out.node = RingSpec::Zn{p};
            return out;
        }
        const std::vector<long>* poly = bundled_irreducible(p, k);
        if (!poly)
            throw InvalidSpec("no bundled irreducible for GF(" + std::to_string(p) + "^" +
                              std::to_string(k) + "); spell out the quotient explicitly");
        RingSpec out;
        out.node = RingSpec::QuotUni{p, "x", *poly};
        return out;
    }

    RingSpec parse_ideal() {
        expect('(');
        RingSpec base = parse_spec();
        expect(',');
        expect('(');
        std::vector<ElemExpr> gens;
        gens.push_back(parse_elem_sum());
        while (match(',')) gens.push_back(parse_elem_sum());
        expect(')');
        expect(')');
        RingSpec out;
        out.node = RingSpec::Idealization{std::make_shared<RingSpec>(std::move(base)), std::move(gens)};
        return out;
    }

    RingSpec parse_table() {
        expect('(');
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && text[pos] != ')') ++pos;
        if (pos >= text.size()) fail("unterminated table(...)");
        std::string path = text.substr(start, pos - start);
        while (!path.empty() && std::isspace(static_cast<unsigned char>(path.back()))) path.pop_back();
        ++pos; // ')'
        if (path.empty()) fail("empty table path");
        RingSpec out;
        out.node = RingSpec::Table{std::move(path)};
        return out;
    }

    // ---- polynomial generators: sums of monomial terms ----

    struct Mono {
        long coeff = 1;
        std::map<std::string, int> exps;
    };
    using Poly = std::vector<Mono>;

    Poly parse_poly(const std::vector<std::string>& vars) {
        Poly out;
        out.push_back(parse_mono(vars));
        while (true) {
            skip_ws();
            if (pos < text.size() && text[pos] == '+') {
                ++pos;
                out.push_back(parse_mono(vars));
            } else {
                break;
            }
        }
        return out;
    }

    Mono parse_mono(const std::vector<std::string>& vars) {
        Mono m;
        bool first = true;
        while (true) {
            skip_ws();
            if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
                long c = parse_int();
                m.coeff *= c;
            } else if (pos < text.size() && std::isalpha(static_cast<unsigned char>(text[pos]))) {
                std::size_t at = pos;
                std::string v = parse_ident();
                if (std::find(vars.begin(), vars.end(), v) == vars.end()) {
                    pos = at;
                    fail("unknown variable '" + v + "' in generator");
                }
                int e = 1;
                if (match('^')) e = int(parse_int());
                m.exps[v] += e;
            } else if (first) {
                fail("expected a monomial term");
            }
            first = false;
            skip_ws();
            if (pos < text.size() && text[pos] == '*')
                ++pos;
            else
                break;
        }
        return m;
    }

    RingSpec assemble_quotient(long p, const std::vector<std::string>& vars, std::vector<Poly> gens) {
        const bool univariate = vars.size() == 1 && gens.size() == 1;
        if (univariate) {
            // dense coefficient vector, low -> high, reduced mod p
            const Poly& g = gens[0];
            int deg = 0;
            for (const Mono& m : g)
                for (const auto& [v, e] : m.exps) deg = std::max(deg, e);
            std::vector<long> coeffs(std::size_t(deg) + 1, 0);
            for (const Mono& m : g) {
                int e = m.exps.empty() ? 0 : m.exps.begin()->second;
                coeffs[std::size_t(e)] = (((coeffs[std::size_t(e)] + m.coeff) % p) + p) % p;
            }
            while (coeffs.size() > 1 && coeffs.back() == 0) coeffs.pop_back();
            if (coeffs.size() < 2)
                throw NonMonic("quotient polynomial must have degree >= 1");
            if (coeffs.back() != 1)
                throw NonMonic("quotient polynomial must be monic over Z(" + std::to_string(p) + ")");
            RingSpec out;
            out.node = RingSpec::QuotUni{p, vars[0], std::move(coeffs)};
            return out;
        }
        // monomial ideal
        std::vector<std::vector<int>> exps;
        for (const Poly& g : gens) {
            if (g.size() != 1)
                throw InvalidSpec("non-monomial generator where monomials are required");
            const Mono& m = g[0];
            if (((m.coeff % p) + p) % p == 0)
                throw InvalidSpec("generator vanishes modulo " + std::to_string(p));
            std::vector<int> e(vars.size(), 0);
            bool any = false;
            for (std::size_t v = 0; v < vars.size(); ++v) {
                auto it = m.exps.find(vars[v]);
                if (it != m.exps.end()) {
                    e[v] = it->second;
                    any = any || it->second > 0;
                }
            }
            if (!any) throw InvalidSpec("constant generator collapses the quotient");
            exps.push_back(std::move(e));
        }
        // reachable here only with several generators or several variables
        RingSpec out;
        out.node = RingSpec::QuotMono{p, vars, std::move(exps)};
        validate_quot_mono(std::get<RingSpec::QuotMono>(out.node));
        return out;
    }

    // ---- element expressions (ideal generators) ----

    ElemExpr parse_elem_sum() {
        std::vector<ElemExpr> terms;
        terms.push_back(parse_elem_product());
        while (match('+')) terms.push_back(parse_elem_product());
        return ElemExpr::sum(std::move(terms));
    }

    ElemExpr parse_elem_product() {
        std::vector<ElemExpr> factors;
        factors.push_back(parse_elem_power());
        while (match('*')) factors.push_back(parse_elem_power());
        return ElemExpr::product(std::move(factors));
    }

    ElemExpr parse_elem_power() {
        ElemExpr base = parse_elem_atom();
        if (match('^')) {
            long k = parse_int();
            return ElemExpr::power(std::move(base), k);
        }
        return base;
    }

    ElemExpr parse_elem_atom() {
        skip_ws();
        if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            return ElemExpr::integer(parse_int());
        if (pos < text.size() && std::isalpha(static_cast<unsigned char>(text[pos])))
            return ElemExpr::variable(parse_ident());
        if (match('(')) {
            std::vector<ElemExpr> parts;
            parts.push_back(parse_elem_sum());
            while (match(',')) parts.push_back(parse_elem_sum());
            expect(')');
            if (parts.size() == 1) return std::move(parts.front());
            return ElemExpr::tuple(std::move(parts));
        }
        fail("expected an element expression");
    }

    static bool is_prime(long n) {
        if (n < 2) return false;
        for (long d = 2; d * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    }

    static void validate_quot_mono(const RingSpec::QuotMono& q) {
        for (std::size_t v = 0; v < q.vars.size(); ++v) {
            bool pure = false;
            for (const auto& g : q.gens) {
                bool only_v = g[v] > 0;
                for (std::size_t w = 0; w < q.vars.size() && only_v; ++w)
                    if (w != v && g[w] > 0) only_v = false;
                if (only_v) {
                    pure = true;
                    break;
                }
            }
            if (!pure)
                throw InfiniteQuotient("monomial ideal lacks a pure power of variable '" +
                                       q.vars[v] + "'");
        }
    }
};

void print_spec(const RingSpec& spec, std::string& out);

void print_factor(const RingSpec& spec, std::string& out) {
    bool paren = std::holds_alternative<RingSpec::Product>(spec.node);
    if (paren) out += '(';
    print_spec(spec, out);
    if (paren) out += ')';
}

void print_spec(const RingSpec& spec, std::string& out) {
    struct Printer {
        std::string& out;
        void operator()(const RingSpec::Zn& z) const { out += "Z(" + std::to_string(z.n) + ")"; }
        void operator()(const RingSpec::QuotUni& q) const {
            out += "Z(" + std::to_string(q.p) + ")[" + q.var + "]/(";
            bool first = true;
            for (std::size_t k = q.coeffs.size(); k-- > 0;) {
                long c = q.coeffs[k];
                if (!c) continue;
                if (!first) out += '+';
                first = false;
                if (k == 0) {
                    out += std::to_string(c);
                } else {
                    if (c != 1) out += std::to_string(c) + "*";
                    out += q.var;
                    if (k >= 2) out += "^" + std::to_string(k);
                }
            }
            if (first) out += '0';
            out += ')';
        }
        void operator()(const RingSpec::QuotMono& q) const {
            out += "Z(" + std::to_string(q.p) + ")[";
            for (std::size_t v = 0; v < q.vars.size(); ++v) {
                if (v) out += ',';
                out += q.vars[v];
            }
            out += "]/(";
            for (std::size_t g = 0; g < q.gens.size(); ++g) {
                if (g) out += ", ";
                bool first = true;
                for (std::size_t v = 0; v < q.vars.size(); ++v) {
                    int e = q.gens[g][v];
                    if (!e) continue;
                    if (!first) out += '*';
                    first = false;
                    out += q.vars[v];
                    if (e >= 2) out += "^" + std::to_string(e);
                }
                if (first) out += '1';
            }
            out += ')';
        }
        void operator()(const RingSpec::Product& p) const {
            for (std::size_t i = 0; i < p.factors.size(); ++i) {
                if (i) out += " x ";
                print_factor(p.factors[i], out);
            }
        }
        void operator()(const RingSpec::Idealization& i) const {
            out += "ideal(";
            print_spec(*i.base, out);
            out += ", (";
            for (std::size_t g = 0; g < i.gens.size(); ++g) {
                if (g) out += ", ";
                print_expr(i.gens[g], out);
            }
            out += "))";
        }
        void operator()(const RingSpec::Table& t) const { out += "table(" + t.path + ")"; }
    };
    std::visit(Printer{out}, spec.node);
}

} // namespace

RingSpec parse_ring_spec(const std::string& text) {
    Parser p(text);
    RingSpec spec = p.parse_spec();
    if (!p.eof()) p.fail("unexpected trailing input");
    return spec;
}

std::string to_string(const RingSpec& spec) {
    std::string out;
    print_spec(spec, out);
    return out;
}

std::string to_string(const ElemExpr& expr) {
    std::string out;
    print_expr(expr, out);
    return out;
}

} // namespace zdg
