#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "artmod/fp.hpp"

namespace artmod {

/// Dense matrix over GF(p), p prime <= 17. Rows over GF(2) are bit-packed
/// into 64-bit words so that elimination reduces to word-wide xor; odd
/// primes use one byte per entry. Values are immutable in spirit: the
/// mutating primitives exist for the elimination routines below.
class FpMat {
public:
    FpMat() = default;
    FpMat(int p, int rows, int cols);

    static FpMat identity(int p, int n);
    static FpMat from_rows(int p, const std::vector<FpVec>& rows, int cols);

    int p() const { return p_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    int get(int r, int c) const;
    void set(int r, int c, int v);
    Fp at(int r, int c) const { return Fp(get(r, c), p_); }

    FpVec row(int r) const;
    void set_row(int r, const FpVec& v);

    void swap_rows(int i, int j);
    void scale_row(int i, int c);
    // row[dst] += c * row[src]
    void axpy_row(int dst, int src, int c);

    FpMat transposed() const;
    FpVec apply(const FpVec& v) const;  // A * v, column-vector convention

    friend FpMat operator*(const FpMat& a, const FpMat& b);
    friend FpMat operator+(const FpMat& a, const FpMat& b);
    bool operator==(const FpMat& o) const;
    bool is_zero() const;

    std::string to_string() const;

private:
    int p_ = 2;
    int rows_ = 0;
    int cols_ = 0;
    int wpr_ = 0;                        // words per row (p == 2)
    std::vector<std::uint64_t> words_;   // p == 2
    std::vector<std::uint8_t> bytes_;    // p > 2
};

// Total order used for canonical sorting of subspaces and lattices:
// (p, rows, cols, entries row-major). Returns <0, 0, >0.
int compare(const FpMat& a, const FpMat& b);

struct RrefResult {
    FpMat mat;                // reduced row echelon form, zero rows dropped
    std::vector<int> pivots;  // pivot column per row, strictly increasing
};

RrefResult rref_full(FpMat m);
FpMat rref(FpMat m);
int rank(const FpMat& m);

FpMat vstack(const FpMat& a, const FpMat& b);
FpMat hstack(const FpMat& a, const FpMat& b);

}  // namespace artmod
