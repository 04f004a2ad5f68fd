#include "wildgoppa/codes.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "wildgoppa/errors.hpp"

namespace wildgoppa {
namespace {

using Word = std::vector<Elem>;

MatrixGF random_matrix(const Field& f, std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
    std::uniform_int_distribution<Elem> coef(0, f.size() - 1);
    MatrixGF m(f, rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) m.set(r, c, coef(rng));
    }
    return m;
}

std::set<Word> codewords(const LinearCode& c) {
    const Field& f = c.field();
    std::set<Word> out;
    Word digits(c.dimension(), 0);
    while (true) {
        Word v(c.length(), 0);
        for (std::size_t r = 0; r < c.dimension(); ++r) {
            for (std::size_t j = 0; j < c.length(); ++j) v[j] = f.add(v[j], f.mul(digits[r], c.generator()(r, j)));
        }
        out.insert(v);
        std::size_t i = 0;
        while (i < digits.size() && ++digits[i] == f.size()) digits[i++] = 0;
        if (i == digits.size()) break;
    }
    return out;
}

std::set<Word> all_words(const Field& f, std::size_t n) { return codewords(LinearCode::full(f, n)); }

TEST(LinearCode, CanonicalFormAndEquality) {
    const Field f = build_tower(3, 1, 1);
    const MatrixGF a = MatrixGF::from_rows(f, 3, {{1, 1, 0}, {2, 2, 0}, {0, 1, 1}});
    const MatrixGF b = MatrixGF::from_rows(f, 3, {{1, 0, 2}, {0, 2, 2}});
    EXPECT_EQ(LinearCode(a), LinearCode(b));
    EXPECT_EQ(LinearCode(a).dimension(), 2u);
    EXPECT_EQ(LinearCode::zero(f, 4).dimension(), 0u);
    EXPECT_EQ(LinearCode::full(f, 4).dimension(), 4u);
    EXPECT_TRUE(LinearCode(a).contains(Word{1, 0, 2}));
    EXPECT_FALSE(LinearCode(a).contains(Word{1, 0, 0}));
    EXPECT_THROW(LinearCode(a).contains(Word{1, 0}), InputError);
}

TEST(Dual, Examples) {
    const Field f2 = build_tower(2, 1, 1);
    EXPECT_EQ(dual(LinearCode::full(f2, 5)), LinearCode::zero(f2, 5));
    EXPECT_EQ(dual(LinearCode::zero(f2, 5)), LinearCode::full(f2, 5));
    const LinearCode rep(MatrixGF::from_rows(f2, 3, {{1, 1, 1}}));
    std::set<Word> expected;
    for (const auto& w : all_words(f2, 3)) {
        if ((w[0] ^ w[1] ^ w[2]) == 0) expected.insert(w);
    }
    EXPECT_EQ(codewords(dual(rep)), expected);
    EXPECT_EQ(dual(rep).dimension(), 2u);
}

TEST(Dual, InvolutionAndOrthogonality) {
    std::mt19937_64 rng(11);
    for (auto [p, a, m] : {std::tuple{2u, 1u, 1u}, std::tuple{3u, 1u, 1u}, std::tuple{2u, 2u, 2u}, std::tuple{5u, 1u, 1u}}) {
        const Field f = build_tower(p, a, m);
        for (int it = 0; it < 30; ++it) {
            const std::size_t n = 2 + it % 9;
            const LinearCode c(random_matrix(f, 1 + it % n, n, rng));
            const LinearCode d = dual(c);
            EXPECT_EQ(c.dimension() + d.dimension(), n);
            EXPECT_EQ(dual(d), c);
            if (d.dimension() > 0) EXPECT_EQ(c.generator() * d.generator().transpose(), MatrixGF(f, c.dimension(), d.dimension()));
        }
    }
}

TEST(Shorten, Examples) {
    const Field f2 = build_tower(2, 1, 1);
    const LinearCode rep(MatrixGF::from_rows(f2, 3, {{1, 1, 1}}));
    const std::vector<std::size_t> first{0};
    EXPECT_EQ(shorten(rep, first), LinearCode::zero(f2, 2));
    const LinearCode even = dual(rep);
    EXPECT_EQ(shorten(even, first), LinearCode(MatrixGF::from_rows(f2, 2, {{1, 1}})));
    const std::vector<std::size_t> bad{3};
    EXPECT_THROW(shorten(rep, bad), InputError);
}

TEST(Shorten, MatchesCodewordFiltering) {
    std::mt19937_64 rng(13);
    for (auto [p, a, m] : {std::tuple{2u, 1u, 1u}, std::tuple{3u, 1u, 1u}, std::tuple{2u, 2u, 1u}}) {
        const Field f = build_tower(p, a, m);
        for (int it = 0; it < 25; ++it) {
            const std::size_t n = 3 + it % 5;
            const LinearCode c(random_matrix(f, 1 + it % 4, n, rng));
            std::vector<std::size_t> positions;
            for (std::size_t j = 0; j < n; ++j) {
                if (rng() % 3 == 0) positions.push_back(j);
            }
            std::set<Word> expected;
            for (const auto& w : codewords(c)) {
                bool vanishes = true;
                Word rest;
                for (std::size_t j = 0; j < n; ++j) {
                    const bool dropped = std::find(positions.begin(), positions.end(), j) != positions.end();
                    if (dropped && w[j] != 0) vanishes = false;
                    if (!dropped) rest.push_back(w[j]);
                }
                if (vanishes) expected.insert(rest);
            }
            EXPECT_EQ(codewords(shorten(c, positions)), expected);
        }
    }
}

TEST(Intersect, MatchesCodewordSets) {
    std::mt19937_64 rng(17);
    const Field f = build_tower(3, 1, 1);
    for (int it = 0; it < 20; ++it) {
        const std::size_t n = 3 + it % 4;
        const LinearCode x(random_matrix(f, 1 + it % 3, n, rng));
        const LinearCode y(random_matrix(f, 1 + (it / 3) % 3, n, rng));
        std::set<Word> expected;
        const auto sy = codewords(y);
        for (const auto& w : codewords(x)) {
            if (sy.count(w)) expected.insert(w);
        }
        EXPECT_EQ(codewords(intersect(x, y)), expected);
    }
}

TEST(ScaleCoordinates, MatchesCodewordMap) {
    std::mt19937_64 rng(19);
    const Field f = build_tower(2, 2, 1);
    for (int it = 0; it < 15; ++it) {
        const std::size_t n = 2 + it % 4;
        const LinearCode c(random_matrix(f, 1 + it % 3, n, rng));
        Word u(n);
        for (auto& v : u) v = 1 + rng() % (f.size() - 1);
        std::set<Word> expected;
        for (auto w : codewords(c)) {
            for (std::size_t j = 0; j < n; ++j) w[j] = f.mul(w[j], u[j]);
            expected.insert(w);
        }
        EXPECT_EQ(codewords(scale_coordinates(c, u)), expected);
    }
    const LinearCode c = LinearCode::full(f, 2);
    EXPECT_THROW(scale_coordinates(c, Word{1, 0}), InputError);
    EXPECT_THROW(scale_coordinates(c, Word{1}), InputError);
}

TEST(SubfieldSubcode, MatchesCodewordFiltering) {
    std::mt19937_64 rng(23);
    for (auto [p, a, m] : {std::tuple{2u, 1u, 2u}, std::tuple{2u, 1u, 3u}, std::tuple{3u, 1u, 2u}}) {
        const Field f = build_tower(p, a, m);
        for (int it = 0; it < 15; ++it) {
            const std::size_t n = 2 + it % 4;
            const LinearCode c(random_matrix(f, 1 + it % 3, n, rng));
            if (codewords(c).size() > 20000) continue;
            std::set<Word> expected;
            for (const auto& w : codewords(c)) {
                if (std::all_of(w.begin(), w.end(), [&](Elem v) { return f.in_subfield(v); })) expected.insert(w);
            }
            const LinearCode sub = subfield_subcode(c);
            EXPECT_EQ(sub.field(), f.subfield());
            EXPECT_EQ(codewords(sub), expected);
        }
    }
    EXPECT_THROW(subfield_subcode(LinearCode::full(build_tower(2, 2, 1), 3)), InputError);
}

TEST(TraceCode, DualOfSubfieldSubcode) {
    std::mt19937_64 rng(29);
    for (auto [p, a, m] : {std::tuple{2u, 1u, 2u}, std::tuple{2u, 1u, 3u}, std::tuple{3u, 1u, 2u}, std::tuple{2u, 2u, 2u}}) {
        const Field f = build_tower(p, a, m);
        for (int it = 0; it < 15; ++it) {
            const std::size_t n = 2 + it % 19;
            const LinearCode c(random_matrix(f, 1 + it % n, n, rng));
            EXPECT_EQ(trace_code(dual(c)), dual(subfield_subcode(c)));
        }
    }
    const Field f = build_tower(2, 1, 2);
    EXPECT_EQ(trace_code(LinearCode::zero(f, 4)), LinearCode::zero(f.subfield(), 4));
}

TEST(MinDistance, Examples) {
    const Field f2 = build_tower(2, 1, 1);
    const LinearCode rep(MatrixGF::from_rows(f2, 3, {{1, 1, 1}}));
    EXPECT_EQ(min_distance(rep).value, 3u);
    EXPECT_EQ(min_distance(LinearCode::full(f2, 6)).value, 1u);
    EXPECT_EQ(min_distance(dual(rep)).value, 2u);
    EXPECT_THROW(min_distance(LinearCode::zero(f2, 3)), InputError);
    const MinDistance over = min_distance(LinearCode::full(f2, 10), 1000);
    EXPECT_FALSE(over.computed());
    EXPECT_EQ(over.codewords, 1024u);
}

TEST(MinDistance, MatchesBruteForce) {
    std::mt19937_64 rng(31);
    for (auto [p, a, m] : {std::tuple{2u, 1u, 1u}, std::tuple{3u, 1u, 1u}, std::tuple{2u, 2u, 1u}}) {
        const Field f = build_tower(p, a, m);
        for (int it = 0; it < 20; ++it) {
            const std::size_t n = 3 + it % 6;
            const LinearCode c(random_matrix(f, 1 + it % 3, n, rng));
            if (c.dimension() == 0) continue;
            std::size_t best = n;
            for (const auto& w : codewords(c)) {
                const std::size_t wt = hamming_weight(w);
                if (wt > 0) best = std::min(best, wt);
            }
            const MinDistance d = min_distance(c);
            EXPECT_EQ(d.value, best);
        }
    }
}

}  // namespace
}  // namespace wildgoppa
