#pragma once

#include <memory>
#include <string>
#include <vector>

#include "artmod/errors.hpp"
#include "artmod/fp.hpp"

namespace artmod {

/// Monomial in a fixed, ordered list of variables; exps[i] is the exponent
/// of variable i.
struct Monomial {
    std::vector<int> exps;

    int degree() const {
        int d = 0;
        for (int e : exps) d += e;
        return d;
    }
    bool operator==(const Monomial& o) const { return exps == o.exps; }
};

// Order used throughout for monomial bases: degree first, then within a
// degree earlier variables dominate (1 < x < y < x^2 < xy < y^2 ...).
int compare_monomials(const Monomial& a, const Monomial& b);

struct Term {
    int coef = 0;  // in [1, p)
    Monomial mono;
};

/// Polynomial in normal form: coefficients reduced mod p, terms merged and
/// sorted leading-term first.
struct Poly {
    std::vector<Term> terms;

    bool is_zero() const { return terms.empty(); }
    bool has_constant_term() const;
};

Poly normalize(Poly poly, int p);
Poly poly_add(const Poly& a, const Poly& b, int p);
Poly poly_mul(const Poly& a, const Poly& b, int p);

/// Presentation of the algebra k[vars] / ((rels) + m^trunc) over GF(p).
/// The truncation ideal m^trunc is always part of the quotient, which keeps
/// every construction inside finite-dimensional linear algebra; callers
/// wanting the exact quotient by (rels) must pick trunc large enough that
/// m^trunc is contained in (rels).
struct RingPresentation {
    int p = 2;
    std::vector<std::string> vars;
    std::vector<Poly> rels;
    int trunc = 1;
};

/// Finitely presented module R^rank / (relation columns).
struct ModulePresentation {
    int free_rank = 1;
    std::vector<std::vector<Poly>> relations;  // each vector has length free_rank
};

/// Expression tree for ideals of the ambient ring: generator lists, the
/// maximal-ideal symbol m, R, 0, products, colons, powers, So(...), and
/// Ann(<module file>).
struct IdealExpr {
    enum class Kind { Gens, SymM, SymR, SymZero, Product, Colon, Power, Socle, AnnModule };

    Kind kind = Kind::SymZero;
    std::vector<Poly> gens;                     // Kind::Gens
    std::shared_ptr<const IdealExpr> lhs, rhs;  // Product/Colon; Power/Socle use lhs
    int exponent = 0;                           // Kind::Power
    std::string module_path;                    // Kind::AnnModule
};

RingPresentation parse_ring(const std::string& text);
ModulePresentation parse_module(const std::string& text, const RingPresentation& ring);
IdealExpr parse_ideal(const std::string& text, const RingPresentation& ring);

// Parse a single polynomial in the ring's variables (used by tests and the
// expression parser; errors carry positions relative to the given anchor).
Poly parse_poly(const std::string& text, const RingPresentation& ring, int line = 1, int col = 1);

std::string to_string(const Monomial& mono, const std::vector<std::string>& vars);
std::string display_monomial(const Monomial& mono, const std::vector<std::string>& vars);
std::string to_string(const Poly& poly, const std::vector<std::string>& vars);
std::string to_text(const RingPresentation& pres);
std::string to_text(const ModulePresentation& pres, const RingPresentation& ring);
std::string to_string(const IdealExpr& expr, const RingPresentation& ring);

}  // namespace artmod
