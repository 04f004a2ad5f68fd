#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wildgoppa/gf.hpp"

namespace wildgoppa {

/// Univariate polynomial over a constructed field. Coefficients are stored low
/// degree first with no trailing zeros.
class Polynomial {
   public:
    /// Degree reported for the zero polynomial (stands in for minus infinity).
    static constexpr int kZeroDegree = -1;

    Polynomial() = default;
    explicit Polynomial(Field field) : field_(std::move(field)) {}
    Polynomial(Field field, std::vector<Elem> coeffs);

    static Polynomial constant(Field field, Elem c);
    static Polynomial monomial(Field field, Elem c, std::size_t degree);
    static Polynomial x(Field field) { return monomial(std::move(field), 1, 1); }
    /// x - root
    static Polynomial linear(Field field, Elem root);

    const Field& field() const noexcept { return field_; }
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_one() const noexcept { return coeffs_.size() == 1 && coeffs_[0] == 1; }
    Elem coeff(std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : 0; }
    Elem leading() const noexcept { return coeffs_.empty() ? 0 : coeffs_.back(); }
    const std::vector<Elem>& coefficients() const noexcept { return coeffs_; }

    Elem operator()(Elem x) const;

    Polynomial monic() const;
    Polynomial derivative() const;
    Polynomial scaled(Elem c) const;
    /// Coefficients restricted to indices [lo, hi) shifted down by lo.
    Polynomial slice(std::size_t lo, std::size_t hi) const;

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial x, const Polynomial& y) { return x += y; }
    friend Polynomial operator-(Polynomial x, const Polynomial& y) { return x -= y; }
    friend Polynomial operator*(const Polynomial& x, const Polynomial& y);
    friend Polynomial operator/(const Polynomial& x, const Polynomial& y);
    friend Polynomial operator%(const Polynomial& x, const Polynomial& y);

    friend bool operator==(const Polynomial& x, const Polynomial& y) noexcept {
        return x.coeffs_ == y.coeffs_ && (x.coeffs_.empty() || x.field_ == y.field_);
    }

   private:
    void trim();

    Field field_;
    std::vector<Elem> coeffs_;
};

/// Euclidean division; throws InputError on a zero divisor.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);

Polynomial pow(const Polynomial& base, std::uint64_t e);
Polynomial mulmod(const Polynomial& x, const Polynomial& y, const Polynomial& modulus);
Polynomial powmod(const Polynomial& base, std::uint64_t e, const Polynomial& modulus);

/// Monic gcd; gcd(0, 0) = 0.
Polynomial gcd(Polynomial a, Polynomial b);

struct ExtendedGcd {
    Polynomial g;  // monic gcd
    Polynomial s;  // s*a + t*b == g
    Polynomial t;
};
ExtendedGcd extended_gcd(const Polynomial& a, const Polynomial& b);

/// Component i is f(support[i]).
std::vector<Elem> ev_support(const Polynomial& f, std::span<const Elem> support);

/// Monic polynomial of degree d whose non-leading coefficients are given by the
/// base-|F| digits of `index` (low degree first).
Polynomial monic_from_index(const Field& field, unsigned d, std::uint64_t index);

bool is_irreducible(const Polynomial& f);
/// First monic irreducible of degree d in enumeration order.
Polynomial find_irreducible(const Field& field, unsigned d);
/// All monic irreducibles of degree d, in enumeration order.
std::vector<Polynomial> all_irreducibles(const Field& field, unsigned d);

/// Number of distinct roots in the coefficient field: deg gcd(g, x^|F| - x).
/// Throws InputError on g == 0.
int count_distinct_roots(const Polynomial& g);
/// Roots in the coefficient field by exhaustive evaluation.
std::vector<Elem> roots(const Polynomial& g);

/// Inverse of the Frobenius on coefficients: the h with h^p == f.
/// Requires f' == 0.
Polynomial pth_root(const Polynomial& f);
/// Product of the distinct monic irreducible factors of g.
Polynomial radical(const Polynomial& g);
/// True iff no irreducible factor divides g twice. Throws InputError on g == 0.
bool is_squarefree(const Polynomial& g);

/// If g = c·h^s with h monic irreducible, returns (h, s); otherwise (0, 0).
std::pair<Polynomial, unsigned> irreducible_power(const Polynomial& g);

/// "c0,c1,...,cd" (encoded coefficients, low degree first), "irreducible:d" or
/// "irreducible:d^s". Throws ParseError with the offending offset.
Polynomial parse_polynomial(const Field& field, std::string_view text);
std::string format_polynomial(const Polynomial& f);

/// F[x]/(f) for a monic f of degree >= 1. When f is irreducible this is the
/// field with |F|^deg f elements.
class QuotientRing {
   public:
    explicit QuotientRing(Polynomial modulus);

    const Field& field() const noexcept { return modulus_.field(); }
    const Polynomial& modulus() const noexcept { return modulus_; }
    unsigned degree() const noexcept { return static_cast<unsigned>(modulus_.degree()); }
    /// |F|^deg f; throws InputError if it does not fit in 64 bits.
    std::uint64_t size() const;

    Polynomial reduce(const Polynomial& x) const { return x % modulus_; }
    Polynomial add(const Polynomial& x, const Polynomial& y) const { return x + y; }
    Polynomial sub(const Polynomial& x, const Polynomial& y) const { return x - y; }
    Polynomial mul(const Polynomial& x, const Polynomial& y) const { return mulmod(x, y, modulus_); }
    Polynomial pow(const Polynomial& x, std::uint64_t e) const { return powmod(x, e, modulus_); }
    /// Throws InputError when x is not a unit.
    Polynomial inverse(const Polynomial& x) const;

    /// Element number `index` in enumeration order (coefficient digits base |F|).
    Polynomial element(std::uint64_t index) const;
    std::uint64_t index(const Polynomial& x) const;

   private:
    Polynomial modulus_;
};

}  // namespace wildgoppa
