#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "wildgoppa/codes.hpp"
#include "wildgoppa/poly.hpp"

namespace wildgoppa {

/// Ordered list of pairwise distinct elements of a field.
using Support = std::vector<Elem>;

/// Every element of `field` in encoding order.
Support full_support(const Field& field);
/// full_support without the listed elements (order preserved).
Support support_without(const Field& field, std::span<const Elem> removed);
/// "full", "full-minus:e1,e2,..." or an explicit list "e1,e2,...".
/// Throws ParseError with the offending offset.
Support parse_support(const Field& field, std::string_view text);
/// InputError on duplicates or elements outside the field.
void validate_support(const Field& field, std::span<const Elem> support);

/// Indices into `super` of the elements of `super` missing from `sub`.
std::vector<std::size_t> complement_positions(std::span<const Elem> super, std::span<const Elem> sub);

/// prod (x - alpha_i)
Polynomial support_polynomial(const Field& field, std::span<const Elem> support);

struct GoppaSpec {
    Support support;
    Polynomial goppa;

    const Field& field() const noexcept { return goppa.field(); }
    std::size_t length() const noexcept { return support.size(); }
    /// Distinct support, deg G >= 1, and G(alpha) != 0 on the support.
    void validate() const;
};

/// H_{j,i} = alpha_i^j / G(alpha_i), 0 <= j < deg G, over F_{q^m}.
MatrixGF alternant_parity_check(const GoppaSpec& spec);

/// F_q-kernel of the alternant parity check.
LinearCode goppa_code(const GoppaSpec& spec);

/// Kernel of c -> sum c_i (pi_L / (x - alpha_i) mod G), with the residues
/// flattened coefficient-major and tower-coordinate-minor.
LinearCode goppa_via_crt(const GoppaSpec& spec);

/// True iff sum c_i / (x - alpha_i) == 0 mod G, by direct polynomial arithmetic.
bool goppa_member(const GoppaSpec& spec, std::span<const Elem> word);

struct GrsPair {
    LinearCode code;  // multipliers h(alpha_i)/pi_L'(alpha_i), degree < n - t
    LinearCode dual;  // multipliers 1/h(alpha_i), degree < t
};

/// Generalised Reed-Solomon code over F_{q^m} whose subfield subcode is
/// Gamma(L, h), together with its dual. t defaults to deg h.
GrsPair grs_pair(std::span<const Elem> support, const Polynomial& h, std::optional<std::size_t> t = std::nullopt);

/// Evaluations on the support of all polynomials of degree < k.
LinearCode reed_solomon(const Field& field, std::span<const Elem> support, std::size_t k);

/// Evaluations of f_j = x^j (j < k) scaled by the column multipliers.
LinearCode generalized_reed_solomon(const Field& field, std::span<const Elem> support, std::size_t k,
                                    std::span<const Elem> multipliers);

}  // namespace wildgoppa
