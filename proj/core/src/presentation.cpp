#include "artmod/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <sstream>

namespace artmod {

int compare_monomials(const Monomial& a, const Monomial& b) {
    const int da = a.degree(), db = b.degree();
    if (da != db) return da < db ? -1 : 1;
    // same degree: higher power of an earlier variable comes first
    for (std::size_t i = 0; i < a.exps.size(); ++i)
        if (a.exps[i] != b.exps[i]) return a.exps[i] > b.exps[i] ? -1 : 1;
    return 0;
}

bool Poly::has_constant_term() const {
    for (const Term& t : terms)
        if (t.mono.degree() == 0) return true;
    return false;
}

Poly normalize(Poly poly, int p) {
    std::map<std::vector<int>, int> acc;
    for (const Term& t : poly.terms) acc[t.mono.exps] = (acc[t.mono.exps] + t.coef) % p;
    Poly out;
    for (auto& [exps, c] : acc) {
        const int v = fp_reduce(c, p);
        if (v) out.terms.push_back(Term{v, Monomial{exps}});
    }
    std::sort(out.terms.begin(), out.terms.end(), [](const Term& a, const Term& b) {
        return compare_monomials(a.mono, b.mono) > 0;  // leading term first
    });
    return out;
}

Poly poly_add(const Poly& a, const Poly& b, int p) {
    Poly out = a;
    out.terms.insert(out.terms.end(), b.terms.begin(), b.terms.end());
    return normalize(std::move(out), p);
}

Poly poly_mul(const Poly& a, const Poly& b, int p) {
    Poly out;
    for (const Term& s : a.terms)
        for (const Term& t : b.terms) {
            Monomial m = s.mono;
            for (std::size_t i = 0; i < m.exps.size(); ++i) m.exps[i] += t.mono.exps[i];
            out.terms.push_back(Term{s.coef * t.coef % p, std::move(m)});
        }
    return normalize(std::move(out), p);
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

const char* const kReservedNames[] = {"m", "R", "So", "Ann"};

struct Scanner {
    const std::string& text;
    std::size_t pos = 0;
    int line;
    int col;

    Scanner(const std::string& t, int line_ = 1, int col_ = 1) : text(t), line(line_), col(col_) {}

    bool eof() const { return pos >= text.size(); }
    char peek() const { return eof() ? '\0' : text[pos]; }

    char advance() {
        const char c = text[pos++];
        if (c == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
        return c;
    }

    void skip_ws() {
        while (!eof() && (peek() == ' ' || peek() == '\t' || peek() == '\r' || peek() == '\n'))
            advance();
    }

    void skip_ws_inline() {
        while (!eof() && (peek() == ' ' || peek() == '\t' || peek() == '\r')) advance();
    }

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(line, col, msg); }

    bool try_consume(char c) {
        skip_ws();
        if (!eof() && peek() == c) {
            advance();
            return true;
        }
        return false;
    }

    void expect(char c) {
        skip_ws();
        if (eof() || peek() != c) fail(std::string("expected '") + c + "'");
        advance();
    }

    std::optional<std::string> try_identifier() {
        skip_ws();
        if (eof() || !(std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_'))
            return std::nullopt;
        std::string id;
        while (!eof() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_'))
            id.push_back(advance());
        return id;
    }

    std::optional<long long> try_integer() {
        skip_ws();
        std::size_t save = pos;
        int sline = line, scol = col;
        bool neg = false;
        if (!eof() && (peek() == '-' || peek() == '+')) neg = advance() == '-';
        if (eof() || !std::isdigit(static_cast<unsigned char>(peek()))) {
            pos = save;
            line = sline;
            col = scol;
            return std::nullopt;
        }
        long long v = 0;
        while (!eof() && std::isdigit(static_cast<unsigned char>(peek())))
            v = v * 10 + (advance() - '0');
        return neg ? -v : v;
    }
};

int var_index(const RingPresentation& ring, const std::string& name, const Scanner& sc) {
    for (std::size_t i = 0; i < ring.vars.size(); ++i)
        if (ring.vars[i] == name) return static_cast<int>(i);
    sc.fail("unknown variable '" + name + "'");
}

// term := factor ('*' factor)*, factor := integer | var ('^' uint)?
Term parse_term(Scanner& sc, const RingPresentation& ring) {
    const int nv = static_cast<int>(ring.vars.size());
    Term t;
    t.coef = 1;
    t.mono.exps.assign(nv, 0);
    bool first = true;
    for (;;) {
        sc.skip_ws();
        if (auto num = sc.try_integer()) {
            t.coef = t.coef * fp_reduce(*num, ring.p) % ring.p;
        } else if (auto id = sc.try_identifier()) {
            const int vi = var_index(ring, *id, sc);
            int exp = 1;
            if (sc.try_consume('^')) {
                auto e = sc.try_integer();
                if (!e || *e < 0) sc.fail("expected nonnegative exponent");
                exp = static_cast<int>(*e);
            }
            t.mono.exps[vi] += exp;
        } else if (first) {
            sc.fail("expected polynomial term");
        } else {
            sc.fail("expected factor after '*'");
        }
        first = false;
        if (!sc.try_consume('*')) break;
    }
    return t;
}

Poly parse_poly_impl(Scanner& sc, const RingPresentation& ring) {
    Poly poly;
    bool negate = false;
    sc.skip_ws();
    if (sc.try_consume('-')) negate = true;
    for (;;) {
        Term t = parse_term(sc, ring);
        if (negate) t.coef = fp_neg(t.coef, ring.p);
        poly.terms.push_back(std::move(t));
        sc.skip_ws();
        if (sc.try_consume('+'))
            negate = false;
        else if (sc.try_consume('-'))
            negate = true;
        else
            break;
    }
    return normalize(std::move(poly), ring.p);
}

struct KeyValue {
    std::string key;
    std::string value;
    int line;
    int value_col;
};

// Line-oriented "key = value" files with '#' comments.
std::vector<KeyValue> split_key_values(const std::string& text) {
    std::vector<KeyValue> out;
    std::istringstream is(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(is, raw)) {
        ++lineno;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        std::size_t b = raw.find_first_not_of(" \t\r");
        if (b == std::string::npos) continue;
        auto eq = raw.find('=');
        if (eq == std::string::npos)
            throw ParseError(lineno, static_cast<int>(b) + 1, "expected 'key = value'");
        std::string key = raw.substr(0, eq);
        key.erase(0, key.find_first_not_of(" \t"));
        key.erase(key.find_last_not_of(" \t") + 1);
        std::string value = raw.substr(eq + 1);
        std::size_t vb = value.find_first_not_of(" \t");
        int vcol = static_cast<int>(eq + 2 + (vb == std::string::npos ? 0 : vb));
        if (vb == std::string::npos)
            value.clear();
        else
            value = value.substr(vb, value.find_last_not_of(" \t\r") - vb + 1);
        out.push_back(KeyValue{key, value, lineno, vcol});
    }
    return out;
}

bool is_reserved(const std::string& name) {
    for (const char* r : kReservedNames)
        if (name == r) return true;
    return false;
}

std::vector<std::string> split_list(const std::string& value) {
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (char c : value) {
        if (c == '(' || c == '[') ++depth;
        if (c == ')' || c == ']') --depth;
        if (c == ',' && depth == 0) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    if (!cur.empty() || !out.empty()) out.push_back(cur);
    return out;
}

std::string trimmed(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

}  // namespace

Poly parse_poly(const std::string& text, const RingPresentation& ring, int line, int col) {
    Scanner sc(text, line, col);
    Poly p = parse_poly_impl(sc, ring);
    sc.skip_ws();
    if (!sc.eof()) sc.fail("trailing input after polynomial");
    return p;
}

RingPresentation parse_ring(const std::string& text) {
    RingPresentation pres;
    bool saw_p = false, saw_vars = false, saw_trunc = false, saw_rels = false;
    std::vector<KeyValue> kvs = split_key_values(text);
    // vars and p must be known before rels can be parsed
    std::sort(kvs.begin(), kvs.end(), [](const KeyValue& a, const KeyValue& b) {
        auto rank = [](const std::string& k) {
            if (k == "p") return 0;
            if (k == "vars") return 1;
            if (k == "trunc") return 2;
            return 3;
        };
        if (rank(a.key) != rank(b.key)) return rank(a.key) < rank(b.key);
        return a.line < b.line;
    });
    for (const KeyValue& kv : kvs) {
        if (kv.key == "p") {
            if (saw_p) throw ParseError(kv.line, 1, "duplicate key 'p'");
            saw_p = true;
            Scanner sc(kv.value, kv.line, kv.value_col);
            auto v = sc.try_integer();
            if (!v) sc.fail("expected integer for p");
            if (!is_prime(static_cast<int>(*v)))
                throw NonPrimeError(kv.line, kv.value_col, "p must be prime, got " + kv.value);
            if (*v > kMaxPrime)
                throw ParseError(kv.line, kv.value_col,
                                 "p exceeds the supported maximum " + std::to_string(kMaxPrime));
            pres.p = static_cast<int>(*v);
        } else if (kv.key == "vars") {
            if (saw_vars) throw ParseError(kv.line, 1, "duplicate key 'vars'");
            saw_vars = true;
            for (const std::string& piece : split_list(kv.value)) {
                std::string name = trimmed(piece);
                if (name.empty()) throw ParseError(kv.line, kv.value_col, "empty variable name");
                if (is_reserved(name))
                    throw ParseError(kv.line, kv.value_col,
                                     "variable name '" + name + "' is reserved");
                if (std::find(pres.vars.begin(), pres.vars.end(), name) != pres.vars.end())
                    throw ParseError(kv.line, kv.value_col, "duplicate variable '" + name + "'");
                pres.vars.push_back(name);
            }
            if (pres.vars.empty()) throw ParseError(kv.line, kv.value_col, "vars must be nonempty");
        } else if (kv.key == "trunc") {
            if (saw_trunc) throw ParseError(kv.line, 1, "duplicate key 'trunc'");
            saw_trunc = true;
            Scanner sc(kv.value, kv.line, kv.value_col);
            auto v = sc.try_integer();
            if (!v || *v < 1) sc.fail("trunc must be an integer >= 1");
            pres.trunc = static_cast<int>(*v);
        } else if (kv.key == "rels") {
            if (saw_rels) throw ParseError(kv.line, 1, "duplicate key 'rels'");
            saw_rels = true;
            if (!saw_p || !saw_vars)
                throw ParseError(kv.line, 1, "rels must come after p and vars");
            for (const std::string& piece : split_list(kv.value)) {
                std::string body = trimmed(piece);
                if (body.empty()) continue;
                Poly poly = parse_poly(body, pres, kv.line, kv.value_col);
                if (poly.is_zero()) continue;
                if (poly.has_constant_term())
                    throw ConstantTermError(kv.line, kv.value_col,
                                            "relation '" + body + "' has a nonzero constant term");
                pres.rels.push_back(std::move(poly));
            }
        } else {
            throw ParseError(kv.line, 1, "unknown key '" + kv.key + "'");
        }
    }
    if (!saw_p) throw ParseError(1, 1, "missing key 'p'");
    if (!saw_vars) throw ParseError(1, 1, "missing key 'vars'");
    if (!saw_trunc) throw ParseError(1, 1, "missing key 'trunc'");
    return pres;
}

ModulePresentation parse_module(const std::string& text, const RingPresentation& ring) {
    ModulePresentation pres;
    bool saw_rank = false;
    std::vector<KeyValue> kvs = split_key_values(text);
    std::stable_sort(kvs.begin(), kvs.end(), [](const KeyValue& a, const KeyValue& b) {
        return (a.key == "rank" ? 0 : 1) < (b.key == "rank" ? 0 : 1);
    });
    for (const KeyValue& kv : kvs) {
        if (kv.key == "rank") {
            saw_rank = true;
            Scanner sc(kv.value, kv.line, kv.value_col);
            auto v = sc.try_integer();
            if (!v || *v < 1) sc.fail("rank must be an integer >= 1");
            pres.free_rank = static_cast<int>(*v);
        } else if (kv.key == "rels") {
            if (!saw_rank) throw ParseError(kv.line, 1, "rels must come after rank");
            for (const std::string& piece : split_list(kv.value)) {
                std::string body = trimmed(piece);
                if (body.empty()) continue;
                if (body.front() != '[' || body.back() != ']')
                    throw ParseError(kv.line, kv.value_col, "relation vector must be bracketed");
                std::string inner = body.substr(1, body.size() - 2);
                if (trimmed(inner).empty()) continue;  // "[]" denotes no relation
                std::vector<Poly> vec;
                for (const std::string& entry : split_list(inner))
                    vec.push_back(parse_poly(trimmed(entry), ring, kv.line, kv.value_col));
                if (static_cast<int>(vec.size()) != pres.free_rank)
                    throw ParseError(kv.line, kv.value_col,
                                     "relation vector length " + std::to_string(vec.size()) +
                                         " does not match rank " + std::to_string(pres.free_rank));
                bool all_zero = true;
                for (const Poly& q : vec) all_zero = all_zero && q.is_zero();
                if (!all_zero) pres.relations.push_back(std::move(vec));
            }
        } else {
            throw ParseError(kv.line, 1, "unknown key '" + kv.key + "'");
        }
    }
    if (!saw_rank) throw ParseError(1, 1, "missing key 'rank'");
    return pres;
}

// ---------------------------------------------------------------------------
// Ideal expressions

namespace {

using ExprPtr = std::shared_ptr<const IdealExpr>;

ExprPtr make_expr(IdealExpr e) { return std::make_shared<const IdealExpr>(std::move(e)); }

ExprPtr parse_expr(Scanner& sc, const RingPresentation& ring);

// Scan forward from an opening parenthesis (already consumed) to the matching
// close, returning the body.
std::string scan_paren_body(Scanner& sc) {
    std::string body;
    int depth = 1;
    while (!sc.eof()) {
        const char c = sc.advance();
        if (c == '(') ++depth;
        if (c == ')' && --depth == 0) return body;
        body.push_back(c);
    }
    sc.fail("unbalanced parenthesis");
}

ExprPtr parse_atom(Scanner& sc, const RingPresentation& ring) {
    sc.skip_ws();
    const int aline = sc.line, acol = sc.col;
    if (sc.try_consume('(')) {
        std::string body = scan_paren_body(sc);
        // A parenthesized group is a generator list when its pieces parse as
        // polynomials, otherwise a grouped subexpression.
        try {
            IdealExpr e;
            e.kind = IdealExpr::Kind::Gens;
            for (const std::string& piece : split_list(body))
                e.gens.push_back(parse_poly(trimmed(piece), ring, aline, acol));
            return make_expr(std::move(e));
        } catch (const ParseError&) {
            Scanner inner(body, aline, acol + 1);
            ExprPtr e = parse_expr(inner, ring);
            inner.skip_ws();
            if (!inner.eof()) inner.fail("trailing input in parenthesized expression");
            return e;
        }
    }
    if (auto id = sc.try_identifier()) {
        if (*id == "m") {
            IdealExpr e;
            e.kind = IdealExpr::Kind::SymM;
            return make_expr(std::move(e));
        }
        if (*id == "R") {
            IdealExpr e;
            e.kind = IdealExpr::Kind::SymR;
            return make_expr(std::move(e));
        }
        if (*id == "So") {
            sc.expect('(');
            std::string body = scan_paren_body(sc);
            Scanner inner(body, aline, acol + 3);
            IdealExpr e;
            e.kind = IdealExpr::Kind::Socle;
            e.lhs = parse_expr(inner, ring);
            inner.skip_ws();
            if (!inner.eof()) inner.fail("trailing input in So(...)");
            return make_expr(std::move(e));
        }
        if (*id == "Ann") {
            sc.expect('(');
            IdealExpr e;
            e.kind = IdealExpr::Kind::AnnModule;
            e.module_path = trimmed(scan_paren_body(sc));
            if (e.module_path.empty()) throw ParseError(aline, acol, "Ann needs a module file");
            return make_expr(std::move(e));
        }
        // bare variable name: single-generator list
        IdealExpr e;
        e.kind = IdealExpr::Kind::Gens;
        Scanner poly_sc(*id, aline, acol);
        e.gens.push_back(parse_poly_impl(poly_sc, ring));
        return make_expr(std::move(e));
    }
    if (sc.peek() == '0') {
        sc.advance();
        IdealExpr e;
        e.kind = IdealExpr::Kind::SymZero;
        return make_expr(std::move(e));
    }
    sc.fail("expected ideal expression");
}

ExprPtr parse_power(Scanner& sc, const RingPresentation& ring) {
    ExprPtr base = parse_atom(sc, ring);
    if (sc.try_consume('^')) {
        auto e = sc.try_integer();
        if (!e || *e < 0) sc.fail("expected nonnegative exponent");
        IdealExpr out;
        out.kind = IdealExpr::Kind::Power;
        out.lhs = base;
        out.exponent = static_cast<int>(*e);
        return make_expr(std::move(out));
    }
    return base;
}

ExprPtr parse_product(Scanner& sc, const RingPresentation& ring) {
    ExprPtr acc = parse_power(sc, ring);
    while (sc.try_consume('*')) {
        IdealExpr out;
        out.kind = IdealExpr::Kind::Product;
        out.lhs = acc;
        out.rhs = parse_power(sc, ring);
        acc = make_expr(std::move(out));
    }
    return acc;
}

ExprPtr parse_expr(Scanner& sc, const RingPresentation& ring) {
    ExprPtr acc = parse_product(sc, ring);
    while (sc.try_consume(':')) {
        IdealExpr out;
        out.kind = IdealExpr::Kind::Colon;
        out.lhs = acc;
        out.rhs = parse_product(sc, ring);
        acc = make_expr(std::move(out));
    }
    return acc;
}

}  // namespace

IdealExpr parse_ideal(const std::string& text, const RingPresentation& ring) {
    Scanner sc(text);
    ExprPtr e = parse_expr(sc, ring);
    sc.skip_ws();
    if (!sc.eof()) sc.fail("trailing input after ideal expression");
    return *e;
}

// ---------------------------------------------------------------------------
// Printing

std::string to_string(const Monomial& mono, const std::vector<std::string>& vars) {
    std::string out;
    for (std::size_t i = 0; i < mono.exps.size(); ++i) {
        if (mono.exps[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += vars[i];
        if (mono.exps[i] > 1) out += "^" + std::to_string(mono.exps[i]);
    }
    return out.empty() ? "1" : out;
}

std::string display_monomial(const Monomial& mono, const std::vector<std::string>& vars) {
    std::string out;
    for (std::size_t i = 0; i < mono.exps.size(); ++i) {
        if (mono.exps[i] == 0) continue;
        out += vars[i];
        if (mono.exps[i] > 1) out += "^" + std::to_string(mono.exps[i]);
    }
    return out.empty() ? "1" : out;
}

std::string to_string(const Poly& poly, const std::vector<std::string>& vars) {
    if (poly.is_zero()) return "0";
    std::string out;
    for (const Term& t : poly.terms) {
        if (!out.empty()) out += "+";
        const std::string mono = to_string(t.mono, vars);
        if (t.coef != 1)
            out += std::to_string(t.coef) + (mono == "1" ? "" : "*" + mono);
        else
            out += mono;
    }
    return out;
}

std::string to_text(const RingPresentation& pres) {
    std::string out = "p = " + std::to_string(pres.p) + "\nvars = ";
    for (std::size_t i = 0; i < pres.vars.size(); ++i)
        out += (i ? "," : "") + pres.vars[i];
    out += "\nrels = ";
    for (std::size_t i = 0; i < pres.rels.size(); ++i)
        out += (i ? "," : "") + to_string(pres.rels[i], pres.vars);
    out += "\ntrunc = " + std::to_string(pres.trunc) + "\n";
    return out;
}

std::string to_text(const ModulePresentation& pres, const RingPresentation& ring) {
    std::string out = "rank = " + std::to_string(pres.free_rank) + "\nrels = ";
    for (std::size_t i = 0; i < pres.relations.size(); ++i) {
        if (i) out += ",";
        out += "[";
        for (std::size_t j = 0; j < pres.relations[i].size(); ++j)
            out += (j ? "," : "") + to_string(pres.relations[i][j], ring.vars);
        out += "]";
    }
    out += "\n";
    return out;
}

std::string to_string(const IdealExpr& expr, const RingPresentation& ring) {
    using K = IdealExpr::Kind;
    switch (expr.kind) {
        case K::SymZero: return "0";
        case K::SymM: return "m";
        case K::SymR: return "R";
        case K::Gens: {
            std::string out = "(";
            for (std::size_t i = 0; i < expr.gens.size(); ++i)
                out += (i ? "," : "") + to_string(expr.gens[i], ring.vars);
            return out + ")";
        }
        case K::Product:
            return to_string(*expr.lhs, ring) + "*" + to_string(*expr.rhs, ring);
        case K::Colon:
            return "(" + to_string(*expr.lhs, ring) + ") : (" + to_string(*expr.rhs, ring) + ")";
        case K::Power:
            return to_string(*expr.lhs, ring) + "^" + std::to_string(expr.exponent);
        case K::Socle: return "So(" + to_string(*expr.lhs, ring) + ")";
        case K::AnnModule: return "Ann(" + expr.module_path + ")";
    }
    return "?";
}

}  // namespace artmod
