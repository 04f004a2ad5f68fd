#include "wildgoppa/cyclotomic.hpp"

#include <gtest/gtest.h>

#include <numeric>
#include <set>

#include "wildgoppa/errors.hpp"
#include "wildgoppa/identities.hpp"

namespace wildgoppa {
namespace {

TEST(Classes, SmallExamples) {
    const ClassDecomposition d2 = classes(2, 2);
    ASSERT_EQ(d2.classes.size(), 2u);
    EXPECT_EQ(d2.classes[1].members, (std::vector<std::uint64_t>{1, 2}));

    // orbit oracle: walk b, 3b, 9b, ... mod 8 by hand
    std::set<std::set<std::uint64_t>> expected;
    for (std::uint64_t b = 0; b < 8; ++b) {
        std::set<std::uint64_t> orbit{b, b * 3 % 8};
        expected.insert(orbit);
    }
    std::set<std::set<std::uint64_t>> got;
    for (const auto& c : classes(3, 2).classes) got.insert(std::set<std::uint64_t>(c.members.begin(), c.members.end()));
    EXPECT_EQ(got, expected);
    EXPECT_EQ(got.size(), 5u);
}

TEST(Classes, PartitionProperties) {
    for (auto [q, m] : {std::pair{2u, 2u}, {3u, 3u}, {4u, 3u}, {5u, 2u}, {8u, 3u}, {9u, 2u}, {2u, 6u}, {3u, 4u}}) {
        const ClassDecomposition d = classes(q, m);
        std::vector<int> hits(d.modulus, 0);
        std::size_t total = 0;
        for (const auto& c : d.classes) {
            EXPECT_EQ(c.representative, c.members.front());
            EXPECT_EQ(m % c.size(), 0u);
            total += c.size();
            const std::set<std::uint64_t> s(c.members.begin(), c.members.end());
            for (auto x : c.members) {
                ++hits[x];
                EXPECT_TRUE(s.count(x * q % d.modulus));
            }
        }
        EXPECT_EQ(total, d.modulus);
        EXPECT_TRUE(std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; }));
        if (m == 2) {
            for (const auto& c : d.classes) EXPECT_EQ(c.size() == 1, c.representative % (q + 1) == 0);
        }
    }
    EXPECT_THROW(classes(6, 2), InputError);
    EXPECT_THROW(classes(4, 1), InputError);
}

TEST(HmosDim, PublishedValues) {
    EXPECT_EQ(hmos_dim(5, 2, 3).value, 4);
    EXPECT_EQ(hmos_dim(4, 3, 1).value, 26);
    EXPECT_EQ(hmos_dim(7, 2, 5).value, 4);
    EXPECT_EQ(hmos_dim(8, 3, 1).value, 342);
    EXPECT_EQ(hmos_dim(8, 3, 1, 512).value, 343);
    EXPECT_TRUE(hmos_dim(5, 2, 3).exact);
    EXPECT_FALSE(hmos_dim(5, 2, 3, 20).exact);
    EXPECT_TRUE(hmos_dim(2, 4, 1).beyond_paper);
    EXPECT_THROW(hmos_dim(2, 2, 2), InputError);
    EXPECT_THROW(hmos_dim(5, 2, 0), InputError);
}

TEST(ClosedForm, PublishedValues) {
    EXPECT_EQ(closed_form(5, 2, 3).value, 4);
    EXPECT_EQ(closed_form(9, 2, 7).value, 4);
    EXPECT_EQ(closed_form(8, 3, 1).value, 342);
    EXPECT_EQ(closed_form(8, 3, 1, 512).value, 343);
    EXPECT_THROW(closed_form(5, 2, 1), InputError);
    EXPECT_THROW(closed_form(4, 3, 4), InputError);
    EXPECT_THROW(closed_form(4, 4, 1), InputError);
}

TEST(ClosedForm, AgreesWithClassSum) {
    for (std::uint64_t q : {4u, 5u, 7u, 8u, 9u}) {
        for (unsigned t = 2; t + 2 <= q; ++t) {
            EXPECT_EQ(closed_form(q, 2, t).value, hmos_dim(q, 2, t).value) << q << " " << t;
            EXPECT_EQ(closed_form(q, 2, t, q * q - 1).value, hmos_dim(q, 2, t, q * q - 1).value);
            const long long n = static_cast<long long>(q * q), T = t, Q = static_cast<long long>(q);
            EXPECT_EQ(n - 2 * T * (Q + 1) + T * (T + 2), n - 2 * T * (Q - 1) + T * (T - 2));
        }
    }
    for (std::uint64_t q : {2u, 3u, 4u, 5u, 7u, 8u}) {
        for (unsigned t = 1; t + 1 <= q; ++t) {
            for (std::uint64_t n : {q * q * q - 1, q * q * q}) {
                if (t * (q * q + q + 1) >= q * q * q) continue;
                EXPECT_EQ(closed_form(q, 3, t, n).value, hmos_dim(q, 3, t, n).value) << q << " " << t;
            }
        }
    }
}

// Built codes of length q^m (t >= 2) or q^m - 1 against the class sum.
TEST(HmosDim, MatchesConstructedCodes) {
    for (auto [p, a, m] : {std::tuple{2u, 1u, 2u}, {3u, 1u, 2u}, {2u, 2u, 2u}, {5u, 1u, 2u}, {7u, 1u, 2u}, {2u, 3u, 2u},
                           {3u, 2u, 2u}, {2u, 1u, 3u}, {3u, 1u, 3u}, {2u, 2u, 3u}, {2u, 1u, 4u}, {3u, 1u, 4u}, {2u, 1u, 5u},
                           {2u, 1u, 6u}}) {
        const Field f = build_tower(p, a, m);
        const std::uint64_t q = f.q(), e1 = trace_exponent(q, m) + 1;
        for (unsigned t = 1; t * e1 < f.size(); ++t) {
            const Polynomial g = t == 1 ? Polynomial::x(f) : find_irreducible(f, t);
            const Support punctured = support_without(f, std::vector<Elem>{0});
            const LinearCode c1 = goppa_code({punctured, pow(g, e1)});
            const DimensionValue v1 = hmos_dim(q, m, t, f.size() - 1);
            if (v1.beyond_paper) {
                EXPECT_GE(static_cast<long long>(c1.dimension()), v1.value);
            } else {
                EXPECT_EQ(static_cast<long long>(c1.dimension()), v1.value) << f.describe() << " t=" << t;
            }
            if (t == 1) continue;
            const LinearCode c0 = goppa_code({full_support(f), pow(g, e1)});
            const DimensionValue v0 = hmos_dim(q, m, t);
            if (v0.beyond_paper) {
                EXPECT_GE(static_cast<long long>(c0.dimension()), v0.value);
            } else {
                EXPECT_EQ(static_cast<long long>(c0.dimension()), v0.value) << f.describe() << " t=" << t;
            }
            const Support shortened(punctured.begin(), punctured.begin() + punctured.size() / 2);
            EXPECT_GE(static_cast<long long>(goppa_code({shortened, pow(g, e1)}).dimension()),
                      hmos_dim(q, m, t, shortened.size()).value);
        }
    }
}

}  // namespace
}  // namespace wildgoppa
