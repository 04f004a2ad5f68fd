#pragma once

#include <cstdint>
#include <vector>

#include "wildgoppa/goppa.hpp"

namespace wildgoppa {

/// Coefficients of f (degree < bound) over F_q: entry i*m + k is coordinate k of
/// the coefficient of x^i. InputError if deg f >= bound.
std::vector<Elem> flatten(const Polynomial& f, std::size_t bound);
Polynomial unflatten(const Field& field, std::span<const Elem> coords);

/// F_q-subspace of F_{q^m}[x]_{<bound}, stored as an RREF basis of flattened rows.
class FqSubspace {
   public:
    FqSubspace(Field field, std::size_t bound);
    static FqSubspace span(Field field, std::size_t bound, std::span<const Polynomial> polys);

    const Field& field() const noexcept { return field_; }
    std::size_t bound() const noexcept { return bound_; }
    std::size_t ambient_dimension() const noexcept { return field_.m() * bound_; }
    std::size_t dimension() const noexcept { return basis_.rows(); }
    const MatrixGF& basis() const noexcept { return basis_; }
    std::vector<Polynomial> polynomials() const;

    bool contains(const Polynomial& f) const;
    void add(const Polynomial& f);
    void add(const FqSubspace& other);

    friend bool operator==(const FqSubspace& x, const FqSubspace& y) { return x.bound_ == y.bound_ && x.basis_ == y.basis_; }

   private:
    Field field_;
    std::size_t bound_;
    MatrixGF basis_;
};

/// F_q-basis beta_j x^i (i < d) of F_{q^m}[x]_{<d}, in order i major, j minor.
std::vector<Polynomial> monomial_basis(const Field& field, std::size_t d);
/// g F_{q^m}[x]_{<d} inside F_{q^m}[x]_{<bound}.
FqSubspace multiples(const Polynomial& g, std::size_t d, std::size_t bound);

/// Component-wise trace of the evaluation of f on the support, over F_q.
std::vector<Elem> tau(const Polynomial& f, std::span<const Elem> support);
/// RREF basis of tau(V) inside F_q^n.
MatrixGF tau_image(const FqSubspace& v, std::span<const Elem> support);

/// Image of a -> a^q - a on F_{q^m}[x]_{<t}, inside F_{q^m}[x]_{<(e+1)t}.
FqSubspace build_K(const Field& field, unsigned t);
FqSubspace build_K(const Polynomial& g);

struct KReport {
    std::uint64_t q = 0;
    unsigned m = 0;
    unsigned t = 0;
    std::size_t dim_K = 0;
    std::size_t dim_K_mod_g = 0;
    std::size_t dim_intersection = 0;  // dim K ∩ g F[x]_{<et}
    bool in_kernel_of_tau = false;
};

/// Checks K ⊆ ker tau, K ∩ g F[x]_{<et} = 0, dim K = mt - 1 and
/// dim (K mod g) = mt - 1. g must be a power of an irreducible polynomial with
/// no root on the support. TheoremFalsification if a property fails.
KReport verify_K_properties(std::span<const Elem> support, const Polynomial& g);

/// sum_{i < mr} y^(q^i) for y in F_{q^m}[x]/(h) with h irreducible of degree r.
/// The value lies in F_q.
Elem absolute_trace(const QuotientRing& ring, const Polynomial& y);

/// Nonzero elements of F_{q^m} with trace zero over F_q, in encoding order.
std::vector<Elem> trace_zero_elements(const Field& field);

struct StartKey {
    Polynomial alpha;         // element of F_{q^m}[x]/(h)
    std::uint64_t index = 0;  // its position in enumeration order
    Elem trace = 0;           // absolute trace of lambda alpha^(e+1), nonzero
};

/// First alpha in F_{q^m}[x]/(h) with nonzero absolute trace of lambda alpha^(e+1).
/// Requires h monic irreducible of degree r >= 2 and lambda != 0 with trace zero.
StartKey startkey_search(const Polynomial& h, Elem lambda);

struct Decomposition {
    Polynomial a;                 // degree < t
    std::uint64_t index = 0;      // position of a in enumeration order
    std::size_t dim_K = 0;        // mt - 1
    std::size_t dim_T = 0;        // 1
    std::size_t dim_multiples = 0;  // m e t
    std::size_t ambient = 0;      // m (e+1) t
    bool T_in_kernel_of_tau = false;
};

/// First a in F_{q^m}[x]_{<t} with K ⊕ <lambda a^(e+1)> ⊕ g F[x]_{<et} equal to
/// F[x]_{<(e+1)t}. g must be a power of an irreducible without roots in F_{q^m}.
Decomposition find_decomposition(std::span<const Elem> support, const Polynomial& g, Elem lambda);

struct DualReformulation {
    std::size_t dim_full = 0;       // dim tau(F[x]_{<(e+1)t})
    std::size_t dim_multiples = 0;  // dim tau(g F[x]_{<et})
    bool equal = false;
};

/// Compares tau(F[x]_{<(e+1)t}) with tau(g F[x]_{<et}).
DualReformulation dual_reformulation(std::span<const Elem> support, const Polynomial& g);

/// K mod h against the kernel of the absolute trace of F_{q^m}[x]/(h), as
/// F_q-subspaces of F_{q^m}[x]_{<r}. h monic irreducible.
bool K_mod_h_is_trace_kernel(const Polynomial& h, unsigned t);

}  // namespace wildgoppa
