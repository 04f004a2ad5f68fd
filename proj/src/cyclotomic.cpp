#include "wildgoppa/cyclotomic.hpp"

#include <algorithm>

#include "wildgoppa/errors.hpp"
#include "wildgoppa/gf.hpp"

namespace wildgoppa {

namespace {

bool is_prime_power(std::uint64_t q) {
    if (q < 2) return false;
    std::uint64_t p = 2;
    while (q % p) ++p;
    while (q % p == 0) q /= p;
    return q == 1;
}

std::uint64_t power(std::uint64_t q, unsigned m) {
    std::uint64_t r = 1;
    for (unsigned i = 0; i < m; ++i) r *= q;
    return r;
}

std::uint64_t resolve_length(std::uint64_t q, unsigned m, unsigned t, std::optional<std::uint64_t> n, DimensionValue& out) {
    const std::uint64_t full = power(q, m);
    const std::uint64_t len = n.value_or(default_length(q, m, t));
    if (len == 0 || len > full) throw InputError("support length must be in 1..q^m");
    out.exact = len == full || len + 1 == full;
    out.beyond_paper = m != 2 && m != 3;
    return len;
}

}  // namespace

ClassDecomposition classes(std::uint64_t q, unsigned m) {
    if (!is_prime_power(q)) throw InputError("q must be a prime power");
    if (m < 2) throw InputError("m must be at least 2");
    if (power(q, m) > Field::kMaxSize) throw InputError("q^m too large");
    ClassDecomposition d;
    d.q = q;
    d.m = m;
    d.modulus = power(q, m) - 1;
    std::vector<bool> seen(d.modulus, false);
    for (std::uint64_t b = 0; b < d.modulus; ++b) {
        if (seen[b]) continue;
        CyclotomicClass c;
        c.representative = b;
        std::uint64_t x = b;
        do {
            seen[x] = true;
            c.members.push_back(x);
            x = x * q % d.modulus;
        } while (x != b);
        std::sort(c.members.begin(), c.members.end());
        d.classes.push_back(std::move(c));
    }
    return d;
}

std::uint64_t default_length(std::uint64_t q, unsigned m, unsigned t) { return power(q, m) - (t == 1 ? 1 : 0); }

DimensionValue hmos_dim(std::uint64_t q, unsigned m, unsigned t, std::optional<std::uint64_t> n) {
    if (t == 0) throw InputError("t must be at least 1");
    const ClassDecomposition d = classes(q, m);
    const std::uint64_t window = t * ((d.modulus) / (q - 1));
    if (window >= d.modulus + 1) throw InputError("window t(e+1) reaches the code length q^m");
    DimensionValue out;
    const std::uint64_t len = resolve_length(q, m, t, n, out);
    long long sum = 0;
    for (const auto& c : d.classes) {
        if (c.representative >= window) continue;
        const auto inside = std::count_if(c.members.begin(), c.members.end(), [&](std::uint64_t x) { return x < window; });
        sum += static_cast<long long>(m) * (inside - 1) + m - static_cast<long long>(c.size());
    }
    out.value = static_cast<long long>(len) - static_cast<long long>(m * window) + sum;
    return out;
}

DimensionValue closed_form(std::uint64_t q, unsigned m, unsigned t, std::optional<std::uint64_t> n) {
    if (!is_prime_power(q)) throw InputError("q must be a prime power");
    const long long Q = static_cast<long long>(q), T = t;
    DimensionValue out;
    if (m == 2) {
        if (t < 2) throw InputError("the quadratic closed form needs t >= 2");
        if (T * (Q + 1) >= Q * Q) throw InputError("window t(q+1) reaches the code length q^2");
        const long long len = static_cast<long long>(resolve_length(q, m, t, n, out));
        out.value = len - 2 * T * (Q + 1) + T * (T + 2);
        return out;
    }
    if (m == 3) {
        if (t < 1 || T > Q - 1) throw InputError("the cubic closed form needs 1 <= t <= q-1");
        const long long len = static_cast<long long>(resolve_length(q, m, t, n, out));
        out.value = len - 3 * T * (Q * Q + Q + 1) + 2 * T + 2 * T * (T + 1) * (T + 2) + 3 * (Q - 1 - T) * T * (T + 1);
        return out;
    }
    throw InputError("closed forms exist only for m = 2 and m = 3");
}

}  // namespace wildgoppa
