#include "wildgoppa/poly.hpp"

#include <charconv>
#include <limits>

#include "wildgoppa/errors.hpp"

namespace wildgoppa {

namespace {

void require_same_field(const Polynomial& x, const Polynomial& y) {
    if (!(x.field() == y.field())) throw InputError("polynomials over different fields");
}

std::vector<unsigned> prime_divisors(unsigned n) {
    std::vector<unsigned> out;
    for (unsigned d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

// x^(|F|^k) mod f, by k successive |F|-th powerings.
Polynomial frobenius_power_of_x(const Polynomial& f, unsigned k) {
    Polynomial h = Polynomial::x(f.field()) % f;
    for (unsigned i = 0; i < k; ++i) h = powmod(h, f.field().size(), f);
    return h;
}

}  // namespace

Polynomial::Polynomial(Field field, std::vector<Elem> coeffs) : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    for (Elem c : coeffs_) {
        if (c >= field_.size()) throw InputError("coefficient " + std::to_string(c) + " outside " + field_.describe());
    }
    trim();
}

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Polynomial Polynomial::constant(Field field, Elem c) { return Polynomial(std::move(field), {c}); }

Polynomial Polynomial::monomial(Field field, Elem c, std::size_t degree) {
    std::vector<Elem> v(degree + 1, 0);
    v[degree] = c;
    return Polynomial(std::move(field), std::move(v));
}

Polynomial Polynomial::linear(Field field, Elem root) {
    const Elem minus_root = field.neg(root);
    return Polynomial(std::move(field), {minus_root, 1});
}

Elem Polynomial::operator()(Elem x) const {
    Elem acc = 0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = field_.add(field_.mul(acc, x), coeffs_[i]);
    return acc;
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return *this;
    return scaled(field_.inv(leading()));
}

Polynomial Polynomial::derivative() const {
    Polynomial d(field_);
    if (coeffs_.size() <= 1) return d;
    d.coeffs_.resize(coeffs_.size() - 1);
    const unsigned p = field_.characteristic();
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
        // i·c is the c added (i mod p) times.
        Elem v = 0;
        for (unsigned k = 0; k < i % p; ++k) v = field_.add(v, coeffs_[i]);
        d.coeffs_[i - 1] = v;
    }
    d.trim();
    return d;
}

Polynomial Polynomial::scaled(Elem c) const {
    Polynomial r(field_);
    if (c == 0) return r;
    r.coeffs_.reserve(coeffs_.size());
    for (Elem v : coeffs_) r.coeffs_.push_back(field_.mul(v, c));
    r.trim();
    return r;
}

Polynomial Polynomial::slice(std::size_t lo, std::size_t hi) const {
    Polynomial r(field_);
    for (std::size_t i = lo; i < hi && i < coeffs_.size(); ++i) r.coeffs_.push_back(coeffs_[i]);
    r.trim();
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    require_same_field(*this, o);
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] = field_.add(coeffs_[i], o.coeffs_[i]);
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) field_ = o.field_;
    require_same_field(*this, o);
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] = field_.sub(coeffs_[i], o.coeffs_[i]);
    trim();
    return *this;
}

Polynomial operator*(const Polynomial& x, const Polynomial& y) {
    if (x.is_zero() || y.is_zero()) return Polynomial(x.field().valid() ? x.field() : y.field());
    require_same_field(x, y);
    const Field& f = x.field();
    std::vector<Elem> r(x.coeffs_.size() + y.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < x.coeffs_.size(); ++i) {
        const Elem xi = x.coeffs_[i];
        if (xi == 0) continue;
        for (std::size_t j = 0; j < y.coeffs_.size(); ++j) r[i + j] = f.add(r[i + j], f.mul(xi, y.coeffs_[j]));
    }
    return Polynomial(f, std::move(r));
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw InputError("polynomial division by zero");
    const Field& f = b.field();
    if (a.degree() < b.degree()) return {Polynomial(f), a};
    require_same_field(a, b);
    std::vector<Elem> rem = a.coefficients();
    const auto& bc = b.coefficients();
    const std::size_t db = bc.size() - 1;
    const Elem lead_inv = f.inv(bc.back());
    std::vector<Elem> quot(rem.size() - db, 0);
    for (std::size_t k = rem.size(); k-- > db;) {
        const Elem c = f.mul(rem[k], lead_inv);
        quot[k - db] = c;
        if (c == 0) continue;
        for (std::size_t i = 0; i <= db; ++i) rem[k - db + i] = f.sub(rem[k - db + i], f.mul(c, bc[i]));
    }
    rem.resize(db);
    return {Polynomial(f, std::move(quot)), Polynomial(f, std::move(rem))};
}

Polynomial operator/(const Polynomial& x, const Polynomial& y) { return divmod(x, y).first; }
Polynomial operator%(const Polynomial& x, const Polynomial& y) { return divmod(x, y).second; }

Polynomial pow(const Polynomial& base, std::uint64_t e) {
    Polynomial result = Polynomial::constant(base.field(), 1);
    Polynomial b = base;
    while (e != 0) {
        if (e & 1U) result = result * b;
        e >>= 1U;
        if (e != 0) b = b * b;
    }
    return result;
}

Polynomial mulmod(const Polynomial& x, const Polynomial& y, const Polynomial& modulus) {
    return (x * y) % modulus;
}

Polynomial powmod(const Polynomial& base, std::uint64_t e, const Polynomial& modulus) {
    Polynomial result = Polynomial::constant(modulus.field(), 1) % modulus;
    Polynomial b = base % modulus;
    while (e != 0) {
        if (e & 1U) result = mulmod(result, b, modulus);
        e >>= 1U;
        if (e != 0) b = mulmod(b, b, modulus);
    }
    return result;
}

Polynomial gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
        Polynomial r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

ExtendedGcd extended_gcd(const Polynomial& a, const Polynomial& b) {
    const Field& f = a.field().valid() ? a.field() : b.field();
    Polynomial r0 = a, r1 = b;
    Polynomial s0 = Polynomial::constant(f, 1), s1(f);
    Polynomial t0(f), t1 = Polynomial::constant(f, 1);
    while (!r1.is_zero()) {
        auto [quot, rem] = divmod(r0, r1);
        r0 = std::exchange(r1, rem);
        s0 = std::exchange(s1, s0 - quot * s1);
        t0 = std::exchange(t1, t0 - quot * t1);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    const Elem li = f.inv(r0.leading());
    return {r0.scaled(li), s0.scaled(li), t0.scaled(li)};
}

std::vector<Elem> ev_support(const Polynomial& f, std::span<const Elem> support) {
    std::vector<Elem> out;
    out.reserve(support.size());
    for (Elem a : support) out.push_back(f(a));
    return out;
}

Polynomial monic_from_index(const Field& field, unsigned d, std::uint64_t index) {
    std::vector<Elem> c(d + 1, 0);
    for (unsigned i = 0; i < d; ++i) {
        c[i] = static_cast<Elem>(index % field.size());
        index /= field.size();
    }
    c[d] = 1;
    return Polynomial(field, std::move(c));
}

bool is_irreducible(const Polynomial& f) {
    if (f.degree() < 1) return false;
    const Polynomial g = f.monic();
    const unsigned d = static_cast<unsigned>(g.degree());
    if (d == 1) return true;
    const Polynomial x = Polynomial::x(g.field());
    // Rabin: x^(Q^d) = x mod g, and gcd(x^(Q^(d/l)) - x, g) = 1 for every prime l | d.
    if (!(frobenius_power_of_x(g, d) == x % g)) return false;
    for (unsigned l : prime_divisors(d)) {
        if (!gcd(frobenius_power_of_x(g, d / l) - x, g).is_one()) return false;
    }
    return true;
}

Polynomial find_irreducible(const Field& field, unsigned d) {
    if (d == 0) throw InputError("irreducible polynomials have positive degree");
    for (std::uint64_t idx = 0;; ++idx) {
        Polynomial f = monic_from_index(field, d, idx);
        if (is_irreducible(f)) return f;
    }
}

std::vector<Polynomial> all_irreducibles(const Field& field, unsigned d) {
    std::uint64_t total = 1;
    for (unsigned i = 0; i < d; ++i) {
        total *= field.size();
        if (total > (1ULL << 32)) throw InputError("too many polynomials to enumerate");
    }
    std::vector<Polynomial> out;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        Polynomial f = monic_from_index(field, d, idx);
        if (is_irreducible(f)) out.push_back(std::move(f));
    }
    return out;
}

int count_distinct_roots(const Polynomial& g) {
    if (g.is_zero()) throw InputError("the zero polynomial has every element as a root");
    if (g.degree() == 0) return 0;
    const Polynomial x = Polynomial::x(g.field());
    const Polynomial xq = powmod(x, g.field().size(), g);
    return gcd(g, xq - x).degree();
}

std::vector<Elem> roots(const Polynomial& g) {
    std::vector<Elem> out;
    for (Elem a = 0; a < g.field().size(); ++a) {
        if (g(a) == 0) out.push_back(a);
    }
    return out;
}

Polynomial pth_root(const Polynomial& f) {
    const Field& field = f.field();
    const unsigned p = field.characteristic();
    if (!f.derivative().is_zero()) throw InputError("pth_root needs a polynomial with zero derivative");
    // a -> a^(|F|/p) inverts a -> a^p on F.
    const std::uint64_t root_exp = field.size() / p;
    std::vector<Elem> c;
    for (std::size_t i = 0; i < f.coefficients().size(); i += p) c.push_back(field.pow(f.coefficients()[i], root_exp));
    return Polynomial(field, std::move(c));
}

Polynomial radical(const Polynomial& g) {
    if (g.is_zero()) throw InputError("radical of the zero polynomial");
    const Polynomial f = g.monic();
    if (f.degree() <= 0) return Polynomial::constant(f.field(), 1);
    const Polynomial d = f.derivative();
    if (d.is_zero()) return radical(pth_root(f));
    const Polynomial c = gcd(f, d);
    // w collects the factors whose multiplicity is prime to p, each once; the
    // remaining ones all divide c.
    const Polynomial w = f / c;
    const Polynomial rc = radical(c);
    return (w * rc / gcd(w, rc)).monic();
}

bool is_squarefree(const Polynomial& g) {
    if (g.is_zero()) throw InputError("squarefreeness of the zero polynomial");
    return radical(g) == g.monic();
}

std::pair<Polynomial, unsigned> irreducible_power(const Polynomial& g) {
    const Field& f = g.field();
    if (g.degree() < 1) return {Polynomial(f), 0};
    const Polynomial h = radical(g);
    if (!is_irreducible(h)) return {Polynomial(f), 0};
    const unsigned s = static_cast<unsigned>(g.degree() / h.degree());
    if (!(pow(h, s) == g.monic())) return {Polynomial(f), 0};
    return {h, s};
}

namespace {

std::uint64_t parse_uint(std::string_view text, std::size_t& pos, std::size_t offset) {
    std::uint64_t v = 0;
    const char* begin = text.data() + pos;
    const char* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(begin, end, v);
    if (ec != std::errc() || ptr == begin) throw ParseError("expected a non-negative integer", offset + pos);
    pos += static_cast<std::size_t>(ptr - begin);
    return v;
}

}  // namespace

Polynomial parse_polynomial(const Field& field, std::string_view text) {
    constexpr std::string_view kIrreducible = "irreducible:";
    std::size_t pos = 0;
    if (text.substr(0, kIrreducible.size()) == kIrreducible) {
        pos = kIrreducible.size();
        const auto d = parse_uint(text, pos, 0);
        std::uint64_t s = 1;
        if (pos < text.size() && text[pos] == '^') {
            ++pos;
            s = parse_uint(text, pos, 0);
        }
        if (pos != text.size()) throw ParseError("unexpected trailing characters", pos);
        if (d == 0 || d > 64) throw ParseError("irreducible degree must be in 1..64", kIrreducible.size());
        if (s == 0 || s > 4096) throw ParseError("exponent must be in 1..4096", pos);
        return pow(find_irreducible(field, static_cast<unsigned>(d)), s);
    }
    std::vector<Elem> coeffs;
    while (true) {
        const std::size_t start = pos;
        const auto v = parse_uint(text, pos, 0);
        if (v >= field.size()) throw ParseError("coefficient outside the field", start);
        coeffs.push_back(static_cast<Elem>(v));
        if (pos == text.size()) break;
        if (text[pos] != ',') throw ParseError("expected ','", pos);
        ++pos;
    }
    return Polynomial(field, std::move(coeffs));
}

std::string format_polynomial(const Polynomial& f) {
    if (f.is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < f.coefficients().size(); ++i) {
        if (i) out += ',';
        out += std::to_string(f.coefficients()[i]);
    }
    return out;
}

QuotientRing::QuotientRing(Polynomial modulus) : modulus_(std::move(modulus)) {
    if (modulus_.degree() < 1) throw InputError("quotient ring modulus must have degree >= 1");
    if (modulus_.leading() != 1) throw InputError("quotient ring modulus must be monic");
}

std::uint64_t QuotientRing::size() const {
    std::uint64_t s = 1;
    for (unsigned i = 0; i < degree(); ++i) {
        if (s > std::numeric_limits<std::uint64_t>::max() / field().size()) throw InputError("quotient ring too large");
        s *= field().size();
    }
    return s;
}

Polynomial QuotientRing::inverse(const Polynomial& x) const {
    const ExtendedGcd eg = extended_gcd(reduce(x), modulus_);
    if (!eg.g.is_one()) throw InputError("element is not a unit of the quotient ring");
    return reduce(eg.s);
}

Polynomial QuotientRing::element(std::uint64_t index) const {
    std::vector<Elem> c(degree(), 0);
    for (auto& v : c) {
        v = static_cast<Elem>(index % field().size());
        index /= field().size();
    }
    if (index != 0) throw InputError("quotient ring index out of range");
    return Polynomial(field(), std::move(c));
}

std::uint64_t QuotientRing::index(const Polynomial& x) const {
    const Polynomial r = reduce(x);
    std::uint64_t idx = 0;
    for (std::size_t i = r.coefficients().size(); i-- > 0;) idx = idx * field().size() + r.coefficients()[i];
    return idx;
}

}  // namespace wildgoppa
