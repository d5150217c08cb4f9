#include <doctest.h>

#include <random>

#include "artmod/matrix.hpp"
#include "artmod/subspace.hpp"

using namespace artmod;

namespace {

FpMat mat(int p, std::vector<std::vector<int>> rows) {
    const int r = static_cast<int>(rows.size());
    const int c = r ? static_cast<int>(rows[0].size()) : 0;
    FpMat m(p, r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m.set(i, j, rows[i][j]);
    return m;
}

Subspace random_subspace(std::mt19937& rng, int p, int ambient) {
    std::uniform_int_distribution<int> nrows(0, ambient);
    std::uniform_int_distribution<int> entry(0, p - 1);
    const int r = nrows(rng);
    FpMat m(p, r, ambient);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < ambient; ++j) m.set(i, j, entry(rng));
    return span(m);
}

FpMat random_matrix(std::mt19937& rng, int p, int rows, int cols) {
    std::uniform_int_distribution<int> entry(0, p - 1);
    FpMat m(p, rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.set(i, j, entry(rng));
    return m;
}

}  // namespace

TEST_CASE("rref on small matrices") {
    CHECK(rref(FpMat::identity(2, 2)) == FpMat::identity(2, 2));
    CHECK(rref(mat(2, {{1, 1}, {1, 1}})) == mat(2, {{1, 1}}));
    CHECK(rref(mat(3, {{0, 1}, {1, 0}})) == FpMat::identity(3, 2));
    // scaling needed over GF(3)
    CHECK(rref(mat(3, {{2, 1}})) == mat(3, {{1, 2}}));
}

TEST_CASE("span neutral and absorbing elements") {
    std::mt19937 rng(7);
    for (int p : {2, 3}) {
        for (int it = 0; it < 20; ++it) {
            Subspace u = random_subspace(rng, p, 4);
            CHECK(sum(u, zero_space(p, 4)) == u);
            CHECK(intersect(u, full_space(p, 4)) == u);
        }
    }
}

TEST_CASE("complementary lines over GF(2)") {
    Subspace ex = span(2, 2, {{1, 0}});
    Subspace ey = span(2, 2, {{0, 1}});
    CHECK(sum(ex, ey) == full_space(2, 2));
    CHECK(intersect(ex, ey) == zero_space(2, 2));
}

TEST_CASE("modular law and dimension formula") {
    std::mt19937 rng(11);
    for (int p : {2, 3}) {
        const int n = p == 2 ? 6 : 4;
        for (int it = 0; it < 60; ++it) {
            Subspace u = random_subspace(rng, p, n);
            Subspace v = random_subspace(rng, p, n);
            Subspace w = sum(u, random_subspace(rng, p, n));  // ensures u <= w
            CHECK(sum(u, intersect(v, w)) == intersect(sum(u, v), w));
            CHECK(sum(u, v).dim() + intersect(u, v).dim() == u.dim() + v.dim());
        }
    }
}

TEST_CASE("kernel, image, preimage") {
    std::mt19937 rng(13);
    for (int p : {2, 3}) {
        for (int it = 0; it < 40; ++it) {
            FpMat a = random_matrix(rng, p, 5, 4);
            CHECK(preimage(a, image(a)) == full_space(p, 4));
            CHECK(kernel(a) == preimage(a, zero_space(p, 5)));
            // kernel vectors actually die
            for (const FpVec& v : all_vectors(kernel(a))) CHECK(vec_is_zero(a.apply(v)));
            CHECK(kernel(a).dim() + rank(a) == 4);
        }
    }
}

TEST_CASE("span is canonical") {
    std::mt19937 rng(17);
    for (int it = 0; it < 30; ++it) {
        FpMat m = random_matrix(rng, 2, 4, 5);
        std::vector<FpVec> rows;
        for (int i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
        Subspace a = span(2, 5, rows);
        std::shuffle(rows.begin(), rows.end(), rng);
        // also duplicate a row
        rows.push_back(rows.front());
        Subspace b = span(2, 5, rows);
        CHECK(a == b);
        CHECK(a.basis == b.basis);
    }
}

TEST_CASE("reduce_by and coords_in_basis") {
    Subspace s = span(3, 4, {{1, 2, 0, 1}, {0, 0, 1, 2}});
    FpVec v = {2, 1, 1, 1};  // 2*row0 + row1
    CHECK(contains_vec(s, v));
    FpVec c = coords_in_basis(s, v);
    CHECK(c == FpVec{2, 1});
    CHECK_FALSE(contains_vec(s, FpVec{0, 1, 0, 0}));
}

TEST_CASE("dimension mismatch is rejected") {
    CHECK_THROWS_AS(sum(zero_space(2, 3), zero_space(2, 4)), MismatchError);
    CHECK_THROWS_AS(sum(zero_space(2, 3), zero_space(3, 3)), MismatchError);
}
