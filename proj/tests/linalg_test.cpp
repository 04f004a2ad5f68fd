#include "wildgoppa/linalg.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "wildgoppa/errors.hpp"

namespace wildgoppa {
namespace {

MatrixGF random_matrix(const Field& f, std::size_t rows, std::size_t cols, std::mt19937_64& rng, int sparsity = 0) {
    std::uniform_int_distribution<Elem> coef(0, f.size() - 1);
    std::uniform_int_distribution<int> die(0, 9);
    MatrixGF m(f, rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) m.set(r, c, die(rng) < sparsity ? 0 : coef(rng));
    }
    return m;
}

// All vectors in the row space, by enumerating every combination of rows.
std::set<std::vector<Elem>> span_members(const MatrixGF& m) {
    const Field& f = m.field();
    std::set<std::vector<Elem>> out;
    std::vector<Elem> digits(m.rows(), 0);
    while (true) {
        std::vector<Elem> v(m.cols(), 0);
        for (std::size_t r = 0; r < m.rows(); ++r) {
            for (std::size_t c = 0; c < m.cols(); ++c) v[c] = f.add(v[c], f.mul(digits[r], m(r, c)));
        }
        out.insert(v);
        std::size_t i = 0;
        while (i < digits.size() && ++digits[i] == f.size()) digits[i++] = 0;
        if (i == digits.size()) break;
    }
    return out;
}

TEST(Rref, Examples) {
    const Field f2 = build_tower(2, 1, 1);
    const MatrixGF id = MatrixGF::identity(f2, 4);
    const RrefResult ri = rref(id);
    EXPECT_EQ(ri.reduced, id);
    EXPECT_EQ(ri.rank, 4u);

    const MatrixGF zero(f2, 3, 5);
    const RrefResult rz = rref(zero);
    EXPECT_EQ(rz.reduced, zero);
    EXPECT_EQ(rz.rank, 0u);

    const MatrixGF m = MatrixGF::from_rows(f2, 3, {{1, 1, 0}, {0, 1, 1}, {1, 0, 1}});
    const RrefResult r = rref(m);
    EXPECT_EQ(r.rank, 2u);
    EXPECT_EQ(r.pivots, (std::vector<std::size_t>{0, 1}));
}

TEST(Rref, CanonicalFormProperties) {
    std::mt19937_64 rng(3);
    for (auto [p, a, m] : {std::tuple{2u, 1u, 1u}, std::tuple{3u, 1u, 2u}, std::tuple{2u, 2u, 3u}, std::tuple{7u, 1u, 1u}}) {
        const Field f = build_tower(p, a, m);
        for (int it = 0; it < 40; ++it) {
            const MatrixGF x = random_matrix(f, 1 + it % 7, 1 + it % 9, rng, it % 8);
            const RrefResult r = rref(x);
            EXPECT_EQ(rref(r.reduced).reduced, r.reduced);
            for (std::size_t i = 0; i < r.rank; ++i) {
                if (i) EXPECT_LT(r.pivots[i - 1], r.pivots[i]);
                for (std::size_t k = 0; k < x.rows(); ++k) EXPECT_EQ(r.reduced(k, r.pivots[i]), k == i ? 1u : 0u);
            }
            for (std::size_t i = r.rank; i < x.rows(); ++i) {
                for (std::size_t c = 0; c < x.cols(); ++c) EXPECT_EQ(r.reduced(i, c), 0u);
            }
            EXPECT_TRUE(row_space_equal(x, r.reduced));
        }
    }
}

TEST(Kernel, Examples) {
    const Field f = build_tower(3, 1, 1);
    EXPECT_EQ(kernel(MatrixGF::identity(f, 5)).rows(), 0u);
    const MatrixGF k = kernel(MatrixGF(f, 2, 6));
    EXPECT_EQ(k.rows(), 6u);
    EXPECT_EQ(k, MatrixGF::identity(f, 6));
}

TEST(Kernel, RankNullityAndAnnihilation) {
    std::mt19937_64 rng(5);
    for (auto [p, a, m] : {std::tuple{2u, 1u, 1u}, std::tuple{5u, 1u, 1u}, std::tuple{2u, 1u, 3u}, std::tuple{3u, 2u, 1u}}) {
        const Field f = build_tower(p, a, m);
        for (int it = 0; it < 40; ++it) {
            const MatrixGF x = random_matrix(f, 1 + it % 6, 2 + it % 8, rng, it % 7);
            const MatrixGF k = kernel(x);
            EXPECT_EQ(rank(x) + k.rows(), x.cols());
            EXPECT_EQ(rank(k), k.rows());
            if (k.rows() > 0) {
                const MatrixGF prod = x * k.transpose();
                EXPECT_EQ(prod, MatrixGF(f, x.rows(), k.rows()));
            }
        }
    }
}

TEST(RowSpaces, EqualityAndFullSpace) {
    std::mt19937_64 rng(9);
    const Field f = build_tower(2, 2, 1);
    const MatrixGF x = random_matrix(f, 3, 6, rng);
    EXPECT_TRUE(row_space_equal(x, x));
    EXPECT_TRUE(row_space_equal(intersect_row_spaces(x, MatrixGF::identity(f, 6)), x));
    EXPECT_TRUE(row_space_contains(MatrixGF::identity(f, 6), x));
}

TEST(RowSpaces, IntersectionExampleByEnumeration) {
    const Field f2 = build_tower(2, 1, 1);
    const MatrixGF u = MatrixGF::from_rows(f2, 3, {{1, 0, 0}, {0, 1, 0}});
    const MatrixGF v = MatrixGF::from_rows(f2, 3, {{0, 1, 0}, {0, 0, 1}});
    std::set<std::vector<Elem>> expected;
    const auto su = span_members(u), sv = span_members(v);
    for (const auto& w : su) {
        if (sv.count(w)) expected.insert(w);
    }
    const MatrixGF got = intersect_row_spaces(u, v);
    EXPECT_EQ(span_members(got), expected);
    EXPECT_EQ(got, MatrixGF::from_rows(f2, 3, {{0, 1, 0}}));
}

TEST(RowSpaces, ModularLaw) {
    std::mt19937_64 rng(21);
    for (auto [p, a, m] : {std::tuple{2u, 1u, 1u}, std::tuple{3u, 1u, 1u}, std::tuple{2u, 1u, 2u}}) {
        const Field f = build_tower(p, a, m);
        for (int it = 0; it < 50; ++it) {
            const std::size_t n = 3 + it % 5;
            const MatrixGF u = random_matrix(f, 1 + it % 4, n, rng, 3);
            const MatrixGF v = random_matrix(f, 1 + (it / 4) % 4, n, rng, 3);
            const MatrixGF both = intersect_row_spaces(u, v);
            EXPECT_EQ(both.rows() + sum_row_spaces(u, v).rows(), rank(u) + rank(v));
            EXPECT_TRUE(row_space_contains(u, both));
            EXPECT_TRUE(row_space_contains(v, both));
            if (n <= 5 && f.size() <= 3) {
                std::set<std::vector<Elem>> expected;
                const auto sv = span_members(v);
                for (const auto& w : span_members(u)) {
                    if (sv.count(w)) expected.insert(w);
                }
                EXPECT_EQ(span_members(both), expected);
            }
        }
    }
}

TEST(RowSpaces, Mismatches) {
    const Field f2 = build_tower(2, 1, 1);
    const Field f3 = build_tower(3, 1, 1);
    EXPECT_THROW(row_space_equal(MatrixGF(f2, 1, 3), MatrixGF(f2, 1, 4)), InputError);
    EXPECT_THROW(intersect_row_spaces(MatrixGF(f2, 1, 3), MatrixGF(f3, 1, 3)), InputError);
    MatrixGF m(f2, 0, 2);
    EXPECT_THROW(m.append_row(std::vector<Elem>{1, 2}), InputError);
}

}  // namespace
}  // namespace wildgoppa
