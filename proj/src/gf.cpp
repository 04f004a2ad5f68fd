#include "wildgoppa/gf.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <tuple>

#include "wildgoppa/errors.hpp"
#include "wildgoppa/poly.hpp"

namespace wildgoppa {

namespace {

// Fields up to this size memoise addition, multiplication and inversion.
constexpr std::uint32_t kTableLimit = 1024;

Elem impl_add(const detail::FieldImpl& f, Elem x, Elem y) {
    if (f.p == 2) return x ^ y;
    if (!f.add_table.empty()) return f.add_table[x * f.size + y];
    return f.add_slow(x, y);
}

Elem impl_neg(const detail::FieldImpl& f, Elem x) { return f.p == 2 ? x : f.neg_slow(x); }

Elem impl_mul(const detail::FieldImpl& f, Elem x, Elem y) {
    if (!f.mul_table.empty()) return f.mul_table[x * f.size + y];
    return f.mul_slow(x, y);
}

std::uint64_t checked_power(std::uint64_t base, unsigned e) {
    std::uint64_t r = 1;
    for (unsigned i = 0; i < e; ++i) {
        r *= base;
        if (r > Field::kMaxSize) return Field::kMaxSize + 1ULL;
    }
    return r;
}

std::shared_ptr<detail::FieldImpl> make_prime(unsigned p) {
    auto f = std::make_shared<detail::FieldImpl>();
    f->p = p;
    f->a = 1;
    f->m = 1;
    f->q = p;
    f->size = p;
    f->degree = 1;
    return f;
}

void fill_tables(detail::FieldImpl& f) {
    if (f.size > kTableLimit) return;
    const std::uint32_t n = f.size;
    std::vector<std::uint16_t> add(static_cast<std::size_t>(n) * n);
    std::vector<std::uint16_t> mul(static_cast<std::size_t>(n) * n);
    for (Elem x = 0; x < n; ++x) {
        for (Elem y = x; y < n; ++y) {
            const auto s = static_cast<std::uint16_t>(f.add_slow(x, y));
            const auto pr = static_cast<std::uint16_t>(f.mul_slow(x, y));
            add[x * n + y] = add[y * n + x] = s;
            mul[x * n + y] = mul[y * n + x] = pr;
        }
    }
    std::vector<Elem> inv(n, 0);
    for (Elem x = 1; x < n; ++x) {
        if (inv[x] != 0) continue;
        for (Elem y = 1; y < n; ++y) {
            if (mul[x * n + y] == 1) {
                inv[x] = y;
                inv[y] = x;
                break;
            }
        }
    }
    f.add_table = std::move(add);
    f.mul_table = std::move(mul);
    f.inv_table = std::move(inv);
}

}  // namespace

namespace detail {

Elem FieldImpl::add_slow(Elem x, Elem y) const {
    if (!sub) return (x + y) % p;
    Elem r = 0;
    Elem place = 1;
    while (x != 0 || y != 0) {
        r += ((x % p + y % p) % p) * place;
        x /= p;
        y /= p;
        place *= p;
    }
    return r;
}

Elem FieldImpl::neg_slow(Elem x) const {
    if (!sub) return (p - x % p) % p;
    Elem r = 0;
    Elem place = 1;
    while (x != 0) {
        r += ((p - x % p) % p) * place;
        x /= p;
        place *= p;
    }
    return r;
}

Elem FieldImpl::mul_slow(Elem x, Elem y) const {
    if (!sub) return static_cast<Elem>((static_cast<std::uint64_t>(x) * y) % p);
    const FieldImpl& s = *sub;
    const Elem base = s.size;
    std::vector<Elem> xs(degree), ys(degree);
    for (unsigned i = 0; i < degree; ++i) {
        xs[i] = x % base;
        x /= base;
        ys[i] = y % base;
        y /= base;
    }
    std::vector<Elem> prod(2 * degree - 1, 0);
    for (unsigned i = 0; i < degree; ++i) {
        if (xs[i] == 0) continue;
        for (unsigned j = 0; j < degree; ++j) {
            prod[i + j] = impl_add(s, prod[i + j], impl_mul(s, xs[i], ys[j]));
        }
    }
    // Reduce by the monic modulus, highest degree first.
    for (std::size_t k = prod.size(); k-- > degree;) {
        const Elem c = prod[k];
        if (c == 0) continue;
        prod[k] = 0;
        for (unsigned i = 0; i < degree; ++i) {
            prod[k - degree + i] = impl_add(s, prod[k - degree + i], impl_neg(s, impl_mul(s, c, modulus[i])));
        }
    }
    Elem r = 0;
    for (unsigned i = degree; i-- > 0;) r = r * base + prod[i];
    return r;
}

}  // namespace detail

bool is_prime(unsigned n) noexcept {
    if (n < 2) return false;
    for (unsigned d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

Field build_tower(unsigned p, unsigned a, unsigned m) {
    if (!is_prime(p)) throw InputError("characteristic " + std::to_string(p) + " is not prime");
    if (a == 0 || m == 0) throw InputError("extension degrees must be positive");
    if (checked_power(p, a * m) > Field::kMaxSize) {
        throw InputError("field of size " + std::to_string(p) + "^" + std::to_string(a * m) + " is too large");
    }

    static std::recursive_mutex mutex;
    static std::map<std::tuple<unsigned, unsigned, unsigned>, std::shared_ptr<const detail::FieldImpl>> cache;

    std::lock_guard lock(mutex);
    const auto key = std::make_tuple(p, a, m);
    if (auto it = cache.find(key); it != cache.end()) return Field(it->second);

    std::shared_ptr<detail::FieldImpl> impl;
    if (a == 1 && m == 1) {
        impl = make_prime(p);
    } else {
        const Field below = (m == 1) ? build_tower(p, 1, 1) : build_tower(p, a, 1);
        const unsigned degree = (m == 1) ? a : m;
        const Polynomial modulus = find_irreducible(below, degree);
        impl = std::make_shared<detail::FieldImpl>();
        impl->p = p;
        impl->a = a;
        impl->m = m;
        impl->q = static_cast<std::uint32_t>(checked_power(p, a));
        impl->size = static_cast<std::uint32_t>(checked_power(p, a * m));
        impl->degree = degree;
        impl->sub = below.impl_;
        impl->modulus = modulus.coefficients();
    }
    fill_tables(*impl);
    cache.emplace(key, impl);
    return Field(impl);
}

Field Field::subfield() const {
    if (impl_->m == 1) return *this;
    return Field(impl_->sub);
}

Field Field::prime_field() const {
    auto f = impl_;
    while (f->sub) f = f->sub;
    return Field(f);
}

std::vector<Elem> Field::top_modulus() const { return impl_->m >= 2 ? impl_->modulus : std::vector<Elem>{}; }

std::vector<Elem> Field::subfield_modulus() const {
    if (impl_->a == 1) return {};
    return impl_->m >= 2 ? impl_->sub->modulus : impl_->modulus;
}

Elem Field::inv(Elem x) const {
    if (x == 0) throw InputError("inverse of zero");
    if (!impl_->inv_table.empty()) return impl_->inv_table[x];
    return pow(x, impl_->size - 2);
}

Elem Field::pow(Elem x, std::uint64_t e) const {
    Elem result = 1;
    Elem base = x;
    while (e != 0) {
        if (e & 1U) result = mul(result, base);
        base = mul(base, base);
        e >>= 1U;
    }
    return result;
}

Elem Field::trace(Elem x) const {
    Elem sum = x;
    Elem y = x;
    for (unsigned i = 1; i < impl_->m; ++i) {
        y = frobenius(y);
        sum = add(sum, y);
    }
    return sum;
}

Elem Field::norm(Elem x) const {
    if (impl_->m == 1) return x;
    return pow(x, (impl_->size - 1) / (impl_->q - 1));
}

std::vector<Elem> Field::coordinates(Elem x) const {
    std::vector<Elem> c(impl_->m);
    for (auto& v : c) {
        v = x % impl_->q;
        x /= impl_->q;
    }
    return c;
}

Elem Field::from_coordinates(std::span<const Elem> coords) const {
    if (coords.size() != impl_->m) throw InputError("coordinate vector has the wrong length");
    Elem r = 0;
    for (std::size_t i = coords.size(); i-- > 0;) {
        if (coords[i] >= impl_->q) throw InputError("coordinate outside the subfield");
        r = r * impl_->q + coords[i];
    }
    return r;
}

Elem Field::basis(unsigned j) const {
    if (j >= impl_->m) throw InputError("basis index out of range");
    Elem r = 1;
    for (unsigned i = 0; i < j; ++i) r *= impl_->q;
    return r;
}

FieldElement Field::element(Elem code) const { return FieldElement(*this, code); }

std::string Field::describe() const {
    std::ostringstream os;
    os << "GF(" << impl_->q;
    if (impl_->m > 1) os << "^" << impl_->m;
    os << ") [p=" << impl_->p << ", a=" << impl_->a << ", m=" << impl_->m << "]";
    return os.str();
}

FieldElement::FieldElement(Field field, Elem code) : field_(std::move(field)), code_(code) {
    if (code_ >= field_.size()) {
        throw InputError("element code " + std::to_string(code) + " outside " + field_.describe());
    }
}

FieldElement trace(const FieldElement& x) {
    return FieldElement(x.field().subfield(), x.field().trace(x.code()));
}

FieldElement norm(const FieldElement& x) { return FieldElement(x.field().subfield(), x.field().norm(x.code())); }

FieldElement hilbert90(const FieldElement& alpha) {
    const Field& f = alpha.field();
    if (f.trace(alpha.code()) != 0) throw InputError("hilbert90 needs an element of trace zero");
    for (Elem beta = 0; beta < f.size(); ++beta) {
        if (f.sub(beta, f.frobenius(beta)) == alpha.code()) return FieldElement(f, beta);
    }
    throw TheoremFalsification("no beta with beta - beta^q = alpha although tr(alpha) = 0");
}

}  // namespace wildgoppa
