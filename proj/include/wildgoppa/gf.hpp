#pragma once

// Finite fields arranged as a two-level tower F_p ⊂ F_q ⊂ F_{q^m}, q = p^a.
//
// Elements are handled as integer codes (`Elem`). An element of F_{p^a} with
// power-basis coordinates c_i over F_p has code sum c_i p^i; an element of
// F_{q^m} with coordinates e_j over F_q has code sum code(e_j) q^j. Elements of
// F_q are exactly the codes below q, so the subfield embeds as a prefix of the
// enumeration order. Arithmetic is defined by schoolbook polynomial products
// reduced by the level modulus; small fields memoise it in dense tables.

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace wildgoppa {

using Elem = std::uint32_t;

class FieldElement;

namespace detail {

struct FieldImpl {
    unsigned p = 0;
    unsigned a = 0;
    unsigned m = 0;
    std::uint32_t q = 0;
    std::uint32_t size = 0;
    // Degree over `sub`, and the monic modulus over `sub` (low degree first).
    // For a prime field `sub` is null and the modulus is empty.
    unsigned degree = 1;
    std::shared_ptr<const FieldImpl> sub;
    std::vector<Elem> modulus;

    std::vector<std::uint16_t> add_table;
    std::vector<std::uint16_t> mul_table;
    std::vector<Elem> inv_table;

    Elem add_slow(Elem x, Elem y) const;
    Elem neg_slow(Elem x) const;
    Elem mul_slow(Elem x, Elem y) const;
};

}  // namespace detail

/// Handle to an immutable field tower. Copies share the same arithmetic.
class Field {
   public:
    /// Largest supported cardinality p^(a m).
    static constexpr std::uint32_t kMaxSize = 1u << 20;

    Field() = default;

    unsigned characteristic() const noexcept { return impl_->p; }
    unsigned a() const noexcept { return impl_->a; }
    unsigned m() const noexcept { return impl_->m; }
    std::uint32_t q() const noexcept { return impl_->q; }
    std::uint32_t size() const noexcept { return impl_->size; }
    bool is_tower() const noexcept { return impl_->m >= 2; }
    bool valid() const noexcept { return impl_ != nullptr; }

    /// F_q viewed as a field of its own, i.e. the tower (p, a, 1).
    Field subfield() const;
    /// F_p.
    Field prime_field() const;

    /// Monic modulus of F_{q^m} over F_q (codes of F_q, low degree first).
    /// Empty when m == 1.
    std::vector<Elem> top_modulus() const;
    /// Monic modulus of F_q over F_p. Empty when a == 1.
    std::vector<Elem> subfield_modulus() const;

    Elem add(Elem x, Elem y) const {
        if (impl_->p == 2) return x ^ y;
        if (!impl_->add_table.empty()) return impl_->add_table[x * impl_->size + y];
        return impl_->add_slow(x, y);
    }
    Elem neg(Elem x) const {
        if (impl_->p == 2) return x;
        return impl_->neg_slow(x);
    }
    Elem sub(Elem x, Elem y) const { return add(x, neg(y)); }
    Elem mul(Elem x, Elem y) const {
        if (!impl_->mul_table.empty()) return impl_->mul_table[x * impl_->size + y];
        return impl_->mul_slow(x, y);
    }
    /// Multiplicative inverse; throws InputError on zero.
    Elem inv(Elem x) const;
    Elem div(Elem x, Elem y) const { return mul(x, inv(y)); }
    Elem pow(Elem x, std::uint64_t e) const;

    /// x -> x^q.
    Elem frobenius(Elem x) const { return pow(x, impl_->q); }
    /// Relative trace F_{q^m} -> F_q, sum of x^{q^i} for i < m.
    Elem trace(Elem x) const;
    /// Relative norm F_{q^m} -> F_q, x^{1 + q + ... + q^{m-1}}.
    Elem norm(Elem x) const;
    bool in_subfield(Elem x) const noexcept { return x < impl_->q; }

    /// Coordinates over F_q in the power basis of the top modulus (length m).
    std::vector<Elem> coordinates(Elem x) const;
    Elem from_coordinates(std::span<const Elem> coords) const;
    /// j-th power-basis element over F_q (the class of z^j).
    Elem basis(unsigned j) const;

    FieldElement element(Elem code) const;

    std::string describe() const;

    friend bool operator==(const Field& x, const Field& y) noexcept {
        return x.impl_ == y.impl_ ||
               (x.impl_ && y.impl_ && x.impl_->p == y.impl_->p && x.impl_->a == y.impl_->a &&
                x.impl_->m == y.impl_->m);
    }

   private:
    explicit Field(std::shared_ptr<const detail::FieldImpl> impl) : impl_(std::move(impl)) {}
    friend Field build_tower(unsigned p, unsigned a, unsigned m);

    std::shared_ptr<const detail::FieldImpl> impl_;
};

/// Builds F_p ⊂ F_{p^a} ⊂ F_{p^{am}}. Each level modulus is the monic
/// irreducible polynomial of the required degree whose non-leading
/// coefficients, read as a base-|base field| integer, are smallest.
/// Throws InputError for a non-prime p, a zero degree or an oversized field.
Field build_tower(unsigned p, unsigned a, unsigned m);

bool is_prime(unsigned n) noexcept;

/// An element together with the field it belongs to.
class FieldElement {
   public:
    FieldElement() = default;
    FieldElement(Field field, Elem code);

    const Field& field() const noexcept { return field_; }
    Elem code() const noexcept { return code_; }
    bool is_zero() const noexcept { return code_ == 0; }

    FieldElement operator+(const FieldElement& o) const { return {field_, field_.add(code_, o.code_)}; }
    FieldElement operator-(const FieldElement& o) const { return {field_, field_.sub(code_, o.code_)}; }
    FieldElement operator-() const { return {field_, field_.neg(code_)}; }
    FieldElement operator*(const FieldElement& o) const { return {field_, field_.mul(code_, o.code_)}; }
    FieldElement operator/(const FieldElement& o) const { return {field_, field_.div(code_, o.code_)}; }
    FieldElement pow(std::uint64_t e) const { return {field_, field_.pow(code_, e)}; }
    FieldElement inverse() const { return {field_, field_.inv(code_)}; }

    std::vector<Elem> coordinates() const { return field_.coordinates(code_); }

    friend bool operator==(const FieldElement& x, const FieldElement& y) noexcept {
        return x.code_ == y.code_ && x.field_ == y.field_;
    }

   private:
    Field field_;
    Elem code_ = 0;
};

/// Relative trace onto F_q, returned as an element of `x.field().subfield()`.
FieldElement trace(const FieldElement& x);
/// Relative norm onto F_q, returned as an element of `x.field().subfield()`.
FieldElement norm(const FieldElement& x);

/// Additive Hilbert 90: the first beta in enumeration order with
/// beta - beta^q == alpha. Requires trace(alpha) == 0 (InputError otherwise).
FieldElement hilbert90(const FieldElement& alpha);

}  // namespace wildgoppa
