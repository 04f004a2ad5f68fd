#pragma once

#include <chrono>
#include <cstdint>
#include <vector>

#include "wildgoppa/goppa.hpp"

namespace wildgoppa {

/// q + q^2 + ... + q^(m-1)
std::uint64_t trace_exponent(std::uint64_t q, unsigned m);

struct IdentityReport {
    std::uint64_t q = 0;
    unsigned m = 0;
    int t = 0;  // degree of the polynomial being raised to powers
    std::vector<std::uint64_t> exponents;
    std::vector<std::size_t> dims;  // dims[i] = dim Gamma(L, g^exponents[i])
    std::vector<bool> equal;        // equal[i]: codes i and i+1 coincide
    std::size_t gap = 0;            // dims.front() - dims.back()
    int r = 0;                      // distinct roots of g in F_{q^m}
    std::chrono::milliseconds elapsed{0};

    bool all_equal() const;
    friend bool operator==(const IdentityReport& x, const IdentityReport& y) {
        return x.q == y.q && x.m == y.m && x.t == y.t && x.exponents == y.exponents && x.dims == y.dims &&
               x.equal == y.equal && x.gap == y.gap && x.r == y.r;
    }
};

/// Gamma(L, g^e) == Gamma(L, g^(e+1)) for g without roots in F_{q^m}.
/// InputError if g has a root; TheoremFalsification if the codes differ.
IdentityReport verify_theorem1(std::span<const Elem> support, const Polynomial& g);

/// dim Gamma(L, g^e) - dim Gamma(L, g^(e+1)), checked against the number r of
/// distinct roots of g. Roots outside L are allowed.
IdentityReport dimension_gap(std::span<const Elem> support, const Polynomial& g);

/// All Gamma(L, h^j) for j in [s e, s(e+1)] coincide; the range starts at
/// s e - 1 when h is squarefree.
IdentityReport verify_chain(std::span<const Elem> support, const Polynomial& h, unsigned s);

/// Gamma(L, g^(sq-1)) == Gamma(L, g^(sq)) for squarefree g.
IdentityReport verify_sugiyama(std::span<const Elem> support, const Polynomial& g, unsigned s);

struct RsEquivalence {
    std::size_t k = 0;          // RS dimension q^m - deg(g)(e+1)
    std::size_t dimension = 0;  // dim Gamma(L, g^(e+1))
    bool equal = false;
};

/// Scales Gamma(L, g^(e+1)) by N(g(alpha_i))^-1 and compares it with the
/// subfield subcode of RS_k on the full field, shortened outside L.
/// InputError when g has a root or k <= 0.
RsEquivalence rs_equivalence(std::span<const Elem> support, const Polynomial& g);

struct CofactorReport {
    IdentityReport report;  // exponents are those of g in h g^j
    bool typo_suspected = false;
};

/// Gamma(L, h g^(e-1)) == Gamma(L, h g^e) == Gamma(L, h g^(e+1)) for h coprime
/// to g; the e-1 term is tested only for squarefree g. A mismatch is reported,
/// not thrown.
CofactorReport verify_cofactor(std::span<const Elem> support, const Polynomial& g, const Polynomial& h);

}  // namespace wildgoppa
