#pragma once

#include <memory>
#include <string>
#include <vector>

#include "artmod/presentation.hpp"
#include "artmod/subspace.hpp"

namespace artmod {

class FiniteLocalAlgebra;
using AlgebraPtr = std::shared_ptr<const FiniteLocalAlgebra>;

/// The finite-dimensional local algebra k[vars] / ((rels) + m^trunc) over
/// k = GF(p), presented by a basis of standard monomials (degree-lex order,
/// basis[0] = 1) together with its multiplication table. The maximal ideal m
/// is spanned by the non-unit basis monomials and satisfies m^trunc = 0, so
/// the algebra is local Artinian.
///
/// Commutativity, associativity and neutrality of 1 are verified on all
/// basis triples at construction time.
class FiniteLocalAlgebra {
public:
    static AlgebraPtr build(const RingPresentation& pres);

    int p() const { return pres_.p; }
    int dim() const { return static_cast<int>(basis_.size()); }
    int trunc() const { return pres_.trunc; }
    int num_vars() const { return static_cast<int>(pres_.vars.size()); }
    const RingPresentation& presentation() const { return pres_; }
    const std::vector<Monomial>& basis() const { return basis_; }

    // Multiplication-by-variable operator on coordinates (column vectors).
    const FpMat& var_action(int v) const { return var_actions_[v]; }
    // Multiplication by the i-th basis monomial.
    const FpMat& basis_action(int i) const { return basis_actions_[i]; }

    FpVec one() const;
    FpVec mul(const FpVec& a, const FpVec& b) const;
    FpMat mult_matrix(const FpVec& elem) const;
    FpVec normal_form(const Poly& poly) const;
    Poly to_poly(const FpVec& coords) const;

    Subspace maximal_ideal_space() const;

private:
    FiniteLocalAlgebra() = default;

    RingPresentation pres_;
    std::vector<Monomial> basis_;
    std::vector<FpVec> table_;  // dim x dim structure constants, row-major
    std::vector<FpMat> var_actions_;
    std::vector<FpMat> basis_actions_;

    const FpVec& table_at(int i, int j) const { return table_[static_cast<std::size_t>(i) * dim() + j]; }
    void verify_structure() const;
};

/// Multiplication-stable subspace of the algebra.
struct Ideal {
    AlgebraPtr ring;
    Subspace space;

    int dim() const { return space.dim(); }
    bool is_zero() const { return space.is_zero(); }
    bool operator==(const Ideal& o) const;
};

Ideal zero_ideal(const AlgebraPtr& r);
Ideal unit_ideal(const AlgebraPtr& r);
Ideal maximal_ideal(const AlgebraPtr& r);

// Smallest ideal containing the given polynomials / coordinate vectors,
// computed by closing the span under the variable actions.
Ideal ideal_from_polys(const AlgebraPtr& r, const std::vector<Poly>& gens);
Ideal ideal_from_vectors(const AlgebraPtr& r, const std::vector<FpVec>& gens);
// Wrap an already multiplication-stable subspace; throws if not stable.
Ideal ideal_from_space(const AlgebraPtr& r, Subspace s);

Ideal product(const Ideal& a, const Ideal& b);
Ideal power(const Ideal& a, int n);
// (j : i) = {r in R : r i <= j}; the empty intersection convention makes
// colon(j, 0) = R.
Ideal colon(const Ideal& j, const Ideal& i);
// So(R) = 0 : m
Ideal socle_ideal(const AlgebraPtr& r);
// Local Artinian rings are self-injective exactly when the socle is a line.
bool is_quasi_frobenius(const AlgebraPtr& r);
// v(I) = dim I/mI
int min_generators(const Ideal& i);
bool is_principal(const Ideal& i);
// Ann_R(I) = 0 : I
Ideal annihilator(const Ideal& i);

// Minimal generating vectors: basis rows of I that stay independent mod mI,
// picked in canonical order (so the result is deterministic).
std::vector<FpVec> minimal_generating_vectors(const Ideal& i);

void check_same_ring(const AlgebraPtr& a, const AlgebraPtr& b);

}  // namespace artmod
