#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace wildgoppa {

struct CyclotomicClass {
    std::uint64_t representative = 0;   // smallest member
    std::vector<std::uint64_t> members;  // sorted
    std::size_t size() const noexcept { return members.size(); }
};

/// Orbits of Z/(q^m - 1) under multiplication by q, ordered by representative.
struct ClassDecomposition {
    std::uint64_t q = 0;
    unsigned m = 0;
    std::uint64_t modulus = 0;
    std::vector<CyclotomicClass> classes;
};

/// q must be a prime power >= 2 and m >= 2. InputError otherwise.
ClassDecomposition classes(std::uint64_t q, unsigned m);

struct DimensionValue {
    long long value = 0;
    /// False when the value is only a lower bound (support length other than
    /// q^m or q^m - 1).
    bool exact = true;
    /// Set for m outside {2, 3}: the formula is evaluated but not covered by the
    /// equality statement it comes from.
    bool beyond_paper = false;
};

/// Default support length: q^m for t >= 2, q^m - 1 for t = 1 (a degree one g
/// always has a root, which the support must avoid).
std::uint64_t default_length(std::uint64_t q, unsigned m, unsigned t);

/// n - m t(e+1) + sum over representatives b in A of (m(|I_b ∩ A| - 1) + m - n_b),
/// A = {0, .., t(e+1) - 1}. InputError if t(e+1) >= q^m or t == 0.
DimensionValue hmos_dim(std::uint64_t q, unsigned m, unsigned t, std::optional<std::uint64_t> n = std::nullopt);

/// m = 2 (t >= 2): n - 2t(q+1) + t(t+2).
/// m = 3 (1 <= t <= q-1): n - 3t(q^2+q+1) + 2t + 2t(t+1)(t+2) + 3(q-1-t)t(t+1).
/// InputError for other (m, t).
DimensionValue closed_form(std::uint64_t q, unsigned m, unsigned t, std::optional<std::uint64_t> n = std::nullopt);

}  // namespace wildgoppa
