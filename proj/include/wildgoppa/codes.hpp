#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "wildgoppa/gf.hpp"
#include "wildgoppa/linalg.hpp"

namespace wildgoppa {

/// Linear code kept in canonical form: its generator matrix is in reduced row
/// echelon form with no zero rows, so two codes are equal exactly when their
/// generators are identical.
class LinearCode {
   public:
    LinearCode() = default;
    /// Any spanning set; it is reduced to canonical form.
    LinearCode(const MatrixGF& spanning_rows);

    static LinearCode zero(Field field, std::size_t n);
    static LinearCode full(Field field, std::size_t n);

    const Field& field() const noexcept { return generator_.field(); }
    std::size_t length() const noexcept { return generator_.cols(); }
    std::size_t dimension() const noexcept { return generator_.rows(); }
    const MatrixGF& generator() const noexcept { return generator_; }

    /// Canonical generator of the dual code.
    MatrixGF parity_check() const;

    bool contains(std::span<const Elem> word) const;
    bool contains(const LinearCode& sub) const;

    friend bool operator==(const LinearCode& x, const LinearCode& y) noexcept { return x.generator_ == y.generator_; }

   private:
    MatrixGF generator_;
};

LinearCode dual(const LinearCode& c);

/// Codewords vanishing on `positions` (0-based), with those positions deleted.
LinearCode shorten(const LinearCode& c, std::span<const std::size_t> positions);

LinearCode intersect(const LinearCode& x, const LinearCode& y);

/// Image under (x_1..x_n) -> (u_1 x_1, .., u_n x_n); every u_i must be nonzero.
LinearCode scale_coordinates(const LinearCode& c, std::span<const Elem> multipliers);

/// {c in F_q^n : H c^T = 0} for H over F_{q^m}: each row of H is expanded into m
/// rows over F_q through the power-basis coordinates.
LinearCode subfield_kernel(const MatrixGF& parity_check_over_extension);

/// C ∩ F_q^n for C over the top of a tower (m >= 2). InputError otherwise.
LinearCode subfield_subcode(const LinearCode& c);

/// F_q-span of Tr(beta_j c) over generator rows c and the power basis beta_j.
LinearCode trace_code(const LinearCode& c);

struct MinDistance {
    /// Exact minimum weight, or empty when enumeration would exceed the budget.
    std::optional<std::size_t> value;
    /// Codewords enumerated (q^k) or that would have been needed.
    std::uint64_t codewords = 0;

    bool computed() const noexcept { return value.has_value(); }
};

inline constexpr std::uint64_t kDefaultDistanceBudget = 10'000'000;

/// Exact minimum distance by enumerating all q^k codewords when q^k <= budget.
/// Never estimates. Throws InputError for k == 0.
MinDistance min_distance(const LinearCode& c, std::uint64_t budget = kDefaultDistanceBudget);

std::size_t hamming_weight(std::span<const Elem> word);

}  // namespace wildgoppa
