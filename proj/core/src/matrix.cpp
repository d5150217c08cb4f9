#include "artmod/matrix.hpp"

#include <algorithm>
#include <sstream>

namespace artmod {

FpMat::FpMat(int p, int rows, int cols) : p_(p), rows_(rows), cols_(cols) {
    check_prime(p);
    if (rows < 0 || cols < 0) throw ValueError("negative matrix dimension");
    if (p == 2) {
        wpr_ = (cols + 63) / 64;
        words_.assign(static_cast<std::size_t>(rows) * wpr_, 0);
    } else {
        bytes_.assign(static_cast<std::size_t>(rows) * cols, 0);
    }
}

FpMat FpMat::identity(int p, int n) {
    FpMat m(p, n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

FpMat FpMat::from_rows(int p, const std::vector<FpVec>& rows, int cols) {
    FpMat m(p, static_cast<int>(rows.size()), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (static_cast<int>(rows[r].size()) != cols)
            throw MismatchError("row length does not match column count");
        m.set_row(static_cast<int>(r), rows[r]);
    }
    return m;
}

int FpMat::get(int r, int c) const {
    if (p_ == 2)
        return static_cast<int>((words_[static_cast<std::size_t>(r) * wpr_ + (c >> 6)] >> (c & 63)) & 1u);
    return bytes_[static_cast<std::size_t>(r) * cols_ + c];
}

void FpMat::set(int r, int c, int v) {
    v = fp_reduce(v, p_);
    if (p_ == 2) {
        auto& w = words_[static_cast<std::size_t>(r) * wpr_ + (c >> 6)];
        const std::uint64_t bit = std::uint64_t(1) << (c & 63);
        w = v ? (w | bit) : (w & ~bit);
    } else {
        bytes_[static_cast<std::size_t>(r) * cols_ + c] = static_cast<std::uint8_t>(v);
    }
}

FpVec FpMat::row(int r) const {
    FpVec v(cols_);
    for (int c = 0; c < cols_; ++c) v[c] = static_cast<std::uint8_t>(get(r, c));
    return v;
}

void FpMat::set_row(int r, const FpVec& v) {
    for (int c = 0; c < cols_; ++c) set(r, c, v[c]);
}

void FpMat::swap_rows(int i, int j) {
    if (i == j) return;
    if (p_ == 2) {
        for (int w = 0; w < wpr_; ++w)
            std::swap(words_[static_cast<std::size_t>(i) * wpr_ + w],
                      words_[static_cast<std::size_t>(j) * wpr_ + w]);
    } else {
        for (int c = 0; c < cols_; ++c) {
            std::swap(bytes_[static_cast<std::size_t>(i) * cols_ + c],
                      bytes_[static_cast<std::size_t>(j) * cols_ + c]);
        }
    }
}

void FpMat::scale_row(int i, int c) {
    if (p_ == 2) return;  // only the identity scaling exists
    for (int k = 0; k < cols_; ++k)
        bytes_[static_cast<std::size_t>(i) * cols_ + k] =
            static_cast<std::uint8_t>(bytes_[static_cast<std::size_t>(i) * cols_ + k] * c % p_);
}

void FpMat::axpy_row(int dst, int src, int c) {
    if (c == 0) return;
    if (p_ == 2) {
        const std::size_t d = static_cast<std::size_t>(dst) * wpr_;
        const std::size_t s = static_cast<std::size_t>(src) * wpr_;
        for (int w = 0; w < wpr_; ++w) words_[d + w] ^= words_[s + w];
    } else {
        const std::size_t d = static_cast<std::size_t>(dst) * cols_;
        const std::size_t s = static_cast<std::size_t>(src) * cols_;
        for (int k = 0; k < cols_; ++k)
            bytes_[d + k] = static_cast<std::uint8_t>((bytes_[d + k] + c * bytes_[s + k]) % p_);
    }
}

FpMat FpMat::transposed() const {
    FpMat t(p_, cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) t.set(c, r, get(r, c));
    return t;
}

FpVec FpMat::apply(const FpVec& v) const {
    if (static_cast<int>(v.size()) != cols_) throw MismatchError("matrix/vector size mismatch");
    FpVec out(rows_, 0);
    for (int r = 0; r < rows_; ++r) {
        int acc = 0;
        for (int c = 0; c < cols_; ++c) acc += get(r, c) * v[c];
        out[r] = static_cast<std::uint8_t>(acc % p_);
    }
    return out;
}

FpMat operator*(const FpMat& a, const FpMat& b) {
    if (a.p_ != b.p_) throw MismatchError("matrix product over different fields");
    if (a.cols_ != b.rows_) throw MismatchError("matrix product shape mismatch");
    FpMat out(a.p_, a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i) {
        for (int k = 0; k < a.cols_; ++k) {
            const int aik = a.get(i, k);
            if (aik == 0) continue;
            if (a.p_ == 2) {
                const std::size_t d = static_cast<std::size_t>(i) * out.wpr_;
                const std::size_t s = static_cast<std::size_t>(k) * b.wpr_;
                for (int w = 0; w < out.wpr_; ++w) out.words_[d + w] ^= b.words_[s + w];
            } else {
                for (int j = 0; j < b.cols_; ++j)
                    out.set(i, j, out.get(i, j) + aik * b.get(k, j));
            }
        }
    }
    return out;
}

FpMat operator+(const FpMat& a, const FpMat& b) {
    if (a.p_ != b.p_ || a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw MismatchError("matrix sum shape mismatch");
    FpMat out = a;
    for (int r = 0; r < out.rows_; ++r) out.axpy_row(r, r, 0);  // no-op, keeps shape
    for (int r = 0; r < a.rows_; ++r)
        for (int c = 0; c < a.cols_; ++c) out.set(r, c, a.get(r, c) + b.get(r, c));
    return out;
}

bool FpMat::operator==(const FpMat& o) const {
    if (p_ != o.p_ || rows_ != o.rows_ || cols_ != o.cols_) return false;
    if (p_ == 2) return words_ == o.words_;
    return bytes_ == o.bytes_;
}

bool FpMat::is_zero() const {
    if (p_ == 2) {
        for (auto w : words_)
            if (w) return false;
        return true;
    }
    for (auto b : bytes_)
        if (b) return false;
    return true;
}

std::string FpMat::to_string() const {
    std::ostringstream os;
    for (int r = 0; r < rows_; ++r) {
        os << (r == 0 ? "[" : " ");
        for (int c = 0; c < cols_; ++c) os << (c ? " " : "") << get(r, c);
        os << (r + 1 == rows_ ? "]" : "\n");
    }
    if (rows_ == 0) os << "[]";
    return os.str();
}

int compare(const FpMat& a, const FpMat& b) {
    if (a.p() != b.p()) return a.p() < b.p() ? -1 : 1;
    if (a.rows() != b.rows()) return a.rows() < b.rows() ? -1 : 1;
    if (a.cols() != b.cols()) return a.cols() < b.cols() ? -1 : 1;
    for (int r = 0; r < a.rows(); ++r)
        for (int c = 0; c < a.cols(); ++c) {
            const int x = a.get(r, c), y = b.get(r, c);
            if (x != y) return x < y ? -1 : 1;
        }
    return 0;
}

RrefResult rref_full(FpMat m) {
    const int p = m.p();
    std::vector<int> pivots;
    int r = 0;
    for (int col = 0; col < m.cols() && r < m.rows(); ++col) {
        int piv = -1;
        for (int i = r; i < m.rows(); ++i)
            if (m.get(i, col) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        m.swap_rows(r, piv);
        const int lead = m.get(r, col);
        if (lead != 1) m.scale_row(r, fp_inv(lead, p));
        for (int i = 0; i < m.rows(); ++i) {
            if (i == r) continue;
            const int v = m.get(i, col);
            if (v) m.axpy_row(i, r, fp_neg(v, p));
        }
        pivots.push_back(col);
        ++r;
    }
    FpMat out(p, r, m.cols());
    for (int i = 0; i < r; ++i) out.set_row(i, m.row(i));
    return {std::move(out), std::move(pivots)};
}

FpMat rref(FpMat m) { return rref_full(std::move(m)).mat; }

int rank(const FpMat& m) { return rref_full(m).mat.rows(); }

FpMat vstack(const FpMat& a, const FpMat& b) {
    if (a.p() != b.p() || a.cols() != b.cols()) throw MismatchError("vstack shape mismatch");
    FpMat out(a.p(), a.rows() + b.rows(), a.cols());
    for (int r = 0; r < a.rows(); ++r) out.set_row(r, a.row(r));
    for (int r = 0; r < b.rows(); ++r) out.set_row(a.rows() + r, b.row(r));
    return out;
}

FpMat hstack(const FpMat& a, const FpMat& b) {
    if (a.p() != b.p() || a.rows() != b.rows()) throw MismatchError("hstack shape mismatch");
    FpMat out(a.p(), a.rows(), a.cols() + b.cols());
    for (int r = 0; r < a.rows(); ++r) {
        for (int c = 0; c < a.cols(); ++c) out.set(r, c, a.get(r, c));
        for (int c = 0; c < b.cols(); ++c) out.set(r, a.cols() + c, b.get(r, c));
    }
    return out;
}

}  // namespace artmod
