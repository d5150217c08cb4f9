#include "artmod/subspace.hpp"

#include <algorithm>

namespace artmod {

Subspace zero_space(int p, int ambient) { return Subspace(p, ambient, FpMat(p, 0, ambient)); }

Subspace full_space(int p, int ambient) {
    return Subspace(p, ambient, FpMat::identity(p, ambient));
}

Subspace span(int p, int ambient, const std::vector<FpVec>& vectors) {
    return span(FpMat::from_rows(p, vectors, ambient));
}

Subspace span(const FpMat& rows) {
    FpMat b = rref(rows);
    return Subspace(b.p(), b.cols(), std::move(b));
}

static void check_same_space(const Subspace& u, const Subspace& v) {
    if (u.p != v.p || u.ambient != v.ambient)
        throw MismatchError("subspaces of different ambient spaces");
}

Subspace sum(const Subspace& u, const Subspace& v) {
    check_same_space(u, v);
    if (u.is_zero()) return v;
    if (v.is_zero()) return u;
    return span(vstack(u.basis, v.basis));
}

Subspace intersect(const Subspace& u, const Subspace& v) {
    check_same_space(u, v);
    if (u.is_full()) return v;
    if (v.is_full()) return u;
    // Zassenhaus: rref [U | U; V | 0], rows with zero left half carry the
    // intersection in their right half.
    const int n = u.ambient;
    FpMat top = hstack(u.basis, u.basis);
    FpMat bot = hstack(v.basis, FpMat(u.p, v.dim(), n));
    FpMat r = rref(vstack(top, bot));
    std::vector<FpVec> rows;
    for (int i = 0; i < r.rows(); ++i) {
        bool left_zero = true;
        for (int c = 0; c < n && left_zero; ++c)
            if (r.get(i, c)) left_zero = false;
        if (!left_zero) continue;
        FpVec w(n);
        for (int c = 0; c < n; ++c) w[c] = static_cast<std::uint8_t>(r.get(i, n + c));
        rows.push_back(std::move(w));
    }
    return span(u.p, n, rows);
}

bool contains(const Subspace& outer, const Subspace& inner) {
    check_same_space(outer, inner);
    for (int i = 0; i < inner.dim(); ++i)
        if (!vec_is_zero(reduce_by(outer, inner.basis.row(i)))) return false;
    return true;
}

bool contains_vec(const Subspace& s, const FpVec& v) {
    return vec_is_zero(reduce_by(s, v));
}

Subspace kernel(const FpMat& a) {
    RrefResult r = rref_full(a);
    const int n = a.cols();
    const int p = a.p();
    std::vector<bool> is_pivot(n, false);
    for (int c : r.pivots) is_pivot[c] = true;
    std::vector<FpVec> rows;
    for (int f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        FpVec v(n, 0);
        v[f] = 1;
        for (std::size_t i = 0; i < r.pivots.size(); ++i)
            v[r.pivots[i]] = static_cast<std::uint8_t>(fp_neg(r.mat.get(static_cast<int>(i), f), p));
        rows.push_back(std::move(v));
    }
    return span(p, n, rows);
}

Subspace image(const FpMat& a) { return span(a.transposed()); }

Subspace apply(const FpMat& a, const Subspace& s) {
    if (a.cols() != s.ambient) throw MismatchError("operator does not act on this space");
    return span(s.basis * a.transposed());
}

Subspace preimage(const FpMat& a, const Subspace& w) {
    if (a.rows() != w.ambient) throw MismatchError("target space mismatch in preimage");
    if (w.is_full()) return full_space(a.p(), a.cols());
    FpMat q = nullspace_matrix(w);
    return kernel(q * a);
}

FpMat nullspace_matrix(const Subspace& s) { return kernel(s.basis).basis; }

std::vector<int> nonpivot_coords(const Subspace& s) {
    std::vector<bool> is_pivot(s.ambient, false);
    for (int i = 0; i < s.dim(); ++i) {
        for (int c = 0; c < s.ambient; ++c)
            if (s.basis.get(i, c)) {
                is_pivot[c] = true;
                break;
            }
    }
    std::vector<int> out;
    for (int c = 0; c < s.ambient; ++c)
        if (!is_pivot[c]) out.push_back(c);
    return out;
}

FpVec reduce_by(const Subspace& s, FpVec v) {
    const int p = s.p;
    for (int i = 0; i < s.dim(); ++i) {
        int pivot = -1;
        for (int c = 0; c < s.ambient; ++c)
            if (s.basis.get(i, c)) {
                pivot = c;
                break;
            }
        if (pivot < 0) continue;
        const int coef = v[pivot];
        if (coef == 0) continue;
        const int f = fp_neg(coef, p);
        for (int c = 0; c < s.ambient; ++c)
            v[c] = static_cast<std::uint8_t>((v[c] + f * s.basis.get(i, c)) % p);
    }
    return v;
}

FpVec coords_in_basis(const Subspace& s, const FpVec& v) {
    const int p = s.p;
    FpVec coords(s.dim(), 0);
    FpVec w = v;
    for (int i = 0; i < s.dim(); ++i) {
        int pivot = -1;
        for (int c = 0; c < s.ambient; ++c)
            if (s.basis.get(i, c)) {
                pivot = c;
                break;
            }
        const int coef = w[pivot];
        coords[i] = static_cast<std::uint8_t>(coef);
        if (coef == 0) continue;
        const int f = fp_neg(coef, p);
        for (int c = 0; c < s.ambient; ++c)
            w[c] = static_cast<std::uint8_t>((w[c] + f * s.basis.get(i, c)) % p);
    }
    if (!vec_is_zero(w)) throw MismatchError("vector not contained in subspace");
    return coords;
}

std::vector<FpVec> all_vectors(const Subspace& s) {
    std::vector<FpVec> out;
    const int d = s.dim();
    long long count = 1;
    for (int i = 0; i < d; ++i) count *= s.p;
    out.reserve(static_cast<std::size_t>(count));
    FpVec coef(d, 0);
    for (long long n = 0; n < count; ++n) {
        FpVec v(s.ambient, 0);
        for (int i = 0; i < d; ++i)
            if (coef[i]) vec_addmul(v, s.basis.row(i), coef[i], s.p);
        out.push_back(std::move(v));
        for (int i = 0; i < d; ++i) {
            if (++coef[i] < s.p) break;
            coef[i] = 0;
        }
    }
    return out;
}

int compare(const Subspace& a, const Subspace& b) {
    if (a.ambient != b.ambient) return a.ambient < b.ambient ? -1 : 1;
    if (a.dim() != b.dim()) return a.dim() < b.dim() ? -1 : 1;
    return compare(a.basis, b.basis);
}

}  // namespace artmod
