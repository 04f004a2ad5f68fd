#include "wildgoppa/evidence.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <set>

#include "wildgoppa/errors.hpp"
#include "wildgoppa/identities.hpp"

namespace wildgoppa {
namespace {

Polynomial random_poly(const Field& f, std::size_t below, std::mt19937_64& rng) {
    std::vector<Elem> c(below);
    for (auto& v : c) v = rng() % f.size();
    return Polynomial(f, c);
}

TEST(Flatten, RoundTripAndLayout) {
    std::mt19937_64 rng(71);
    const Field f = build_tower(3, 1, 2);
    for (int it = 0; it < 20; ++it) {
        const Polynomial p = random_poly(f, 5, rng);
        const auto v = flatten(p, 7);
        EXPECT_EQ(v.size(), 14u);
        EXPECT_EQ(unflatten(f, v), p);
    }
    const auto v = flatten(Polynomial::monomial(f, 4, 1), 2);  // 4 = 1 + 1*3: coordinates (1, 1)
    EXPECT_EQ(v, (std::vector<Elem>{0, 0, 1, 1}));
    EXPECT_THROW(flatten(Polynomial::monomial(f, 1, 3), 3), InputError);
}

TEST(Tau, VanishingFamilies) {
    std::mt19937_64 rng(73);
    for (auto [p, a, m] : {std::tuple{2u, 1u, 2u}, std::tuple{3u, 1u, 2u}, std::tuple{2u, 1u, 3u}}) {
        const Field f = build_tower(p, a, m);
        const Support L = full_support(f);
        EXPECT_EQ(hamming_weight(tau(Polynomial(f), L)), 0u);
        const std::uint64_t e1 = trace_exponent(f.q(), m) + 1;
        const auto lambdas = trace_zero_elements(f);
        ASSERT_FALSE(lambdas.empty());
        for (int it = 0; it < 10; ++it) {
            const Polynomial x = random_poly(f, 3, rng);
            EXPECT_EQ(hamming_weight(tau(pow(x, f.q()) - x, L)), 0u);
            const Polynomial lam = Polynomial::constant(f, lambdas[it % lambdas.size()]);
            EXPECT_EQ(hamming_weight(tau(lam * pow(x, e1), L)), 0u);
        }
    }
}

TEST(BuildK, Dimensions) {
    EXPECT_EQ(build_K(build_tower(2, 1, 2), 1).dimension(), 1u);
    EXPECT_EQ(build_K(build_tower(2, 1, 2), 2).dimension(), 3u);
    EXPECT_EQ(build_K(build_tower(3, 1, 2), 2).dimension(), 3u);
    for (auto [p, a, m] : {std::tuple{2u, 1u, 2u}, std::tuple{3u, 1u, 2u}, std::tuple{2u, 2u, 2u}, std::tuple{2u, 1u, 3u},
                           std::tuple{2u, 1u, 4u}}) {
        const Field f = build_tower(p, a, m);
        for (unsigned t = 1; t <= 3; ++t) {
            const FqSubspace K = build_K(f, t);
            EXPECT_EQ(K.dimension(), m * t - 1);
            EXPECT_EQ(K.ambient_dimension(), m * (trace_exponent(f.q(), m) + 1) * t);
        }
    }
}

// Count the image of a -> a^q - a directly: q^dim elements.
TEST(BuildK, DimensionByEnumeratingImages) {
    for (auto [p, a, m, t] : {std::tuple{2u, 1u, 2u, 1u}, std::tuple{2u, 1u, 2u, 2u}, std::tuple{3u, 1u, 2u, 1u},
                              std::tuple{2u, 1u, 3u, 1u}, std::tuple{3u, 1u, 2u, 2u}}) {
        const Field f = build_tower(p, a, m);
        std::set<std::vector<Elem>> images;
        std::vector<Elem> c(t, 0);
        while (true) {
            const Polynomial x(f, c);
            images.insert((pow(x, f.q()) - x).coefficients());
            std::size_t i = 0;
            while (i < c.size() && ++c[i] == f.size()) c[i++] = 0;
            if (i == c.size()) break;
        }
        const double dim = std::log(static_cast<double>(images.size())) / std::log(static_cast<double>(f.q()));
        EXPECT_NEAR(dim, static_cast<double>(build_K(f, t).dimension()), 1e-9);
    }
}

TEST(KProperties, Examples) {
    const Field f4 = build_tower(2, 1, 2);
    const Polynomial g = find_irreducible(f4, 2);
    const KReport r = verify_K_properties(full_support(f4), g);
    EXPECT_EQ(r.dim_K, 3u);
    EXPECT_EQ(r.dim_K_mod_g, 3u);
    EXPECT_EQ(r.dim_intersection, 0u);
    EXPECT_TRUE(r.in_kernel_of_tau);

    const Polynomial sq = pow(Polynomial::linear(f4, 1), 2);
    EXPECT_NO_THROW(verify_K_properties(support_without(f4, std::vector<Elem>{1}), sq));
    EXPECT_THROW(verify_K_properties(full_support(f4), sq), InputError);

    const Field f9 = build_tower(3, 1, 2);
    EXPECT_NO_THROW(verify_K_properties(full_support(f9), find_irreducible(f9, 2)));
    EXPECT_NO_THROW(verify_K_properties(full_support(f9), pow(find_irreducible(f9, 2), 2)));

    const auto quads = all_irreducibles(f4, 2);
    EXPECT_THROW(verify_K_properties(full_support(f4), quads[0] * quads[1]), InputError);
}

TEST(Startkey, ExhaustiveExamples) {
    const Field f4 = build_tower(2, 1, 2);
    const Polynomial h = find_irreducible(f4, 2);
    const StartKey k = startkey_search(h, 1);
    const QuotientRing ring(h);
    EXPECT_NE(absolute_trace(ring, ring.pow(k.alpha, 3)), 0u);
    for (std::uint64_t i = 0; i < k.index; ++i) EXPECT_EQ(absolute_trace(ring, ring.pow(ring.element(i), 3)), 0u);
    std::size_t hits = 0;
    for (std::uint64_t i = 0; i < ring.size(); ++i) hits += absolute_trace(ring, ring.pow(ring.element(i), 3)) != 0;
    EXPECT_GT(hits, 0u);
    EXPECT_LT(hits, 16u);

    const Field f9 = build_tower(3, 1, 2);
    for (Elem lambda : trace_zero_elements(f9)) EXPECT_NO_THROW(startkey_search(find_irreducible(f9, 2), lambda));

    EXPECT_THROW(startkey_search(Polynomial::linear(f4, 1), 1), InputError);
    const Elem bad = [&] {
        for (Elem x = 1; x < 4; ++x)
            if (f4.trace(x) != 0) return x;
        return Elem{0};
    }();
    EXPECT_THROW(startkey_search(h, bad), InputError);
}

TEST(AbsoluteTrace, IsLinearAndFixedByFrobenius) {
    std::mt19937_64 rng(79);
    const Field f = build_tower(3, 1, 2);
    const QuotientRing ring(find_irreducible(f, 2));
    for (int it = 0; it < 30; ++it) {
        const Polynomial x = random_poly(f, 2, rng), y = random_poly(f, 2, rng);
        const Elem c = rng() % 3;
        EXPECT_EQ(absolute_trace(ring, x + y.scaled(c)), f.add(absolute_trace(ring, x), f.mul(c, absolute_trace(ring, y))));
        EXPECT_EQ(absolute_trace(ring, ring.pow(x, 3)), absolute_trace(ring, x));
    }
}

TEST(Decomposition, Examples) {
    const Field f4 = build_tower(2, 1, 2);
    const Decomposition d = find_decomposition(full_support(f4), find_irreducible(f4, 2), 1);
    EXPECT_EQ(d.ambient, 12u);
    EXPECT_EQ(d.dim_K, 3u);
    EXPECT_EQ(d.dim_T, 1u);
    EXPECT_EQ(d.dim_multiples, 8u);
    EXPECT_LT(d.a.degree(), 2);
    EXPECT_TRUE(d.T_in_kernel_of_tau);

    const Field f9 = build_tower(3, 1, 2);
    const auto lam9 = trace_zero_elements(f9);
    EXPECT_NO_THROW(find_decomposition(full_support(f9), find_irreducible(f9, 2), lam9.front()));

    const Field f8 = build_tower(2, 1, 3);
    const Decomposition d8 = find_decomposition(full_support(f8), find_irreducible(f8, 2), trace_zero_elements(f8).front());
    EXPECT_EQ(d8.ambient, 42u);
    EXPECT_EQ(d8.dim_K + d8.dim_T + d8.dim_multiples, 42u);

    EXPECT_THROW(find_decomposition(support_without(f4, std::vector<Elem>{0}), Polynomial::x(f4), 1), InputError);
}

TEST(DualReformulation, MatchesGoppaDimensions) {
    for (auto [p, a, m] : {std::tuple{2u, 1u, 2u}, std::tuple{3u, 1u, 2u}, std::tuple{2u, 1u, 3u}, std::tuple{2u, 2u, 2u}}) {
        const Field f = build_tower(p, a, m);
        const std::uint64_t e = trace_exponent(f.q(), m);
        const Polynomial g = find_irreducible(f, 2);
        const Support L = full_support(f);
        const DualReformulation r = dual_reformulation(L, g);
        EXPECT_TRUE(r.equal);
        EXPECT_EQ(r.dim_full, L.size() - goppa_code({L, pow(g, e + 1)}).dimension());
        EXPECT_EQ(r.dim_multiples, L.size() - goppa_code({L, pow(g, e)}).dimension());
        for (unsigned t = 1; t <= 3; ++t) {
            const Elem rho = 1;
            const Polynomial gr = pow(Polynomial::linear(f, rho), t);
            const Support Lr = support_without(f, std::vector<Elem>{rho});
            const DualReformulation rr = dual_reformulation(Lr, gr);
            EXPECT_LE(rr.dim_full - rr.dim_multiples, 1u);
            EXPECT_EQ(rr.dim_full, Lr.size() - goppa_code({Lr, pow(gr, e + 1)}).dimension());
        }
    }
}

TEST(KModH, EqualsTraceKernel) {
    for (auto [p, a, m, r] : {std::tuple{2u, 1u, 2u, 2u}, std::tuple{3u, 1u, 2u, 2u}, std::tuple{2u, 1u, 3u, 2u},
                              std::tuple{2u, 1u, 2u, 3u}, std::tuple{2u, 1u, 2u, 4u}, std::tuple{2u, 1u, 4u, 2u},
                              std::tuple{2u, 1u, 2u, 1u}}) {
        const Field f = build_tower(p, a, m);
        for (const auto& h : all_irreducibles(f, r)) {
            EXPECT_TRUE(K_mod_h_is_trace_kernel(h, r));
            EXPECT_TRUE(K_mod_h_is_trace_kernel(h, r + 1));
        }
    }
}

}  // namespace
}  // namespace wildgoppa
