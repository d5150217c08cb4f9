#pragma once

#include <vector>

#include "artmod/matrix.hpp"

namespace artmod {

/// Subspace of a coordinatized space F_p^n, stored as a reduced row echelon
/// basis (rows = basis vectors). The RREF form is a canonical representative,
/// so equality of subspaces is equality of matrices. Instances are immutable
/// values; every operation returns a fresh canonical subspace.
struct Subspace {
    int p = 2;
    int ambient = 0;
    FpMat basis;  // RREF, basis.cols() == ambient

    Subspace() = default;
    Subspace(int p_, int ambient_, FpMat rref_basis)
        : p(p_), ambient(ambient_), basis(std::move(rref_basis)) {}

    int dim() const { return basis.rows(); }
    bool is_zero() const { return dim() == 0; }
    bool is_full() const { return dim() == ambient; }

    bool operator==(const Subspace& o) const {
        return p == o.p && ambient == o.ambient && basis == o.basis;
    }
};

Subspace zero_space(int p, int ambient);
Subspace full_space(int p, int ambient);
Subspace span(int p, int ambient, const std::vector<FpVec>& vectors);
Subspace span(const FpMat& rows);

Subspace sum(const Subspace& u, const Subspace& v);
Subspace intersect(const Subspace& u, const Subspace& v);
// true iff inner is contained in outer
bool contains(const Subspace& outer, const Subspace& inner);
bool contains_vec(const Subspace& s, const FpVec& v);

// {v : A v = 0}
Subspace kernel(const FpMat& a);
// column space of A
Subspace image(const FpMat& a);
// {A v : v in s}
Subspace apply(const FpMat& a, const Subspace& s);
// {v : A v in w}
Subspace preimage(const FpMat& a, const Subspace& w);

// Rows spanning the annihilator {f : f . v = 0 for all v in s} of s in the
// dual coordinate space.
FpMat nullspace_matrix(const Subspace& s);

// Coordinates not used as pivots by the RREF basis; these index a canonical
// complement ("pivot-complement basis") used for quotient coordinates.
std::vector<int> nonpivot_coords(const Subspace& s);

// Eliminate the pivot coordinates of v against the basis rows. The result is
// zero iff v lies in s.
FpVec reduce_by(const Subspace& s, FpVec v);

// Coefficients expressing v in the RREF basis rows; v must lie in s.
FpVec coords_in_basis(const Subspace& s, const FpVec& v);

// All p^dim vectors of s in a deterministic order (coefficient odometer).
std::vector<FpVec> all_vectors(const Subspace& s);

// Canonical total order: (ambient, dim, basis entries).
int compare(const Subspace& a, const Subspace& b);

struct SubspaceLess {
    bool operator()(const Subspace& a, const Subspace& b) const { return compare(a, b) < 0; }
};

}  // namespace artmod
