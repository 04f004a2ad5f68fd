#include "wildgoppa/evidence.hpp"

#include <string>

#include "wildgoppa/errors.hpp"
#include "wildgoppa/identities.hpp"

namespace wildgoppa {

namespace {

Polynomial from_index(const Field& f, std::size_t degree_bound, std::uint64_t index) {
    std::vector<Elem> c(degree_bound, 0);
    for (std::size_t i = 0; i < degree_bound && index; ++i) {
        c[i] = static_cast<Elem>(index % f.size());
        index /= f.size();
    }
    return Polynomial(f, std::move(c));
}

std::uint64_t count_below(const Field& f, std::size_t degree_bound) {
    std::uint64_t n = 1;
    for (std::size_t i = 0; i < degree_bound; ++i) {
        if (n > (std::uint64_t{1} << 40) / f.size()) throw InputError("search space too large");
        n *= f.size();
    }
    return n;
}

void require_tower(const Field& f) {
    if (!f.is_tower()) throw InputError("evidence needs a field F_{q^m} with m >= 2");
}

void require_irreducible_power(const Polynomial& g) {
    if (g.degree() < 1) throw InputError("g must have degree >= 1");
    if (irreducible_power(g).second == 0) throw InputError("g must be a power of an irreducible polynomial");
}

void require_lambda(const Field& f, Elem lambda) {
    if (lambda == 0 || lambda >= f.size()) throw InputError("lambda must be a nonzero field element");
    if (f.trace(lambda) != 0) throw InputError("lambda must have trace zero over F_q");
}

std::uint64_t norm_exponent(const Field& f) { return trace_exponent(f.q(), f.m()) + 1; }

}  // namespace

std::vector<Elem> flatten(const Polynomial& f, std::size_t bound) {
    if (f.degree() >= static_cast<int>(bound)) throw InputError("polynomial degree exceeds the ambient bound");
    const Field& field = f.field();
    const unsigned m = field.m();
    std::vector<Elem> out(bound * m, 0);
    for (std::size_t i = 0; i < f.coefficients().size(); ++i) {
        const auto coords = field.coordinates(f.coeff(i));
        for (unsigned k = 0; k < m; ++k) out[i * m + k] = coords[k];
    }
    return out;
}

Polynomial unflatten(const Field& field, std::span<const Elem> coords) {
    const unsigned m = field.m();
    if (coords.size() % m) throw InputError("flattened length is not a multiple of m");
    std::vector<Elem> c(coords.size() / m);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = field.from_coordinates(coords.subspan(i * m, m));
    return Polynomial(field, std::move(c));
}

FqSubspace::FqSubspace(Field field, std::size_t bound)
    : field_(std::move(field)), bound_(bound), basis_(field_.subfield(), 0, field_.m() * bound) {}

FqSubspace FqSubspace::span(Field field, std::size_t bound, std::span<const Polynomial> polys) {
    FqSubspace s(std::move(field), bound);
    MatrixGF rows(s.field_.subfield(), 0, s.ambient_dimension());
    for (const auto& p : polys) rows.append_row(flatten(p, bound));
    s.basis_ = row_basis(rows);
    return s;
}

std::vector<Polynomial> FqSubspace::polynomials() const {
    std::vector<Polynomial> out;
    for (std::size_t i = 0; i < basis_.rows(); ++i) out.push_back(unflatten(field_, basis_.row(i)));
    return out;
}

bool FqSubspace::contains(const Polynomial& f) const {
    MatrixGF single(field_.subfield(), 0, ambient_dimension());
    single.append_row(flatten(f, bound_));
    return row_space_contains(basis_, single);
}

void FqSubspace::add(const Polynomial& f) {
    MatrixGF rows = basis_;
    rows.append_row(flatten(f, bound_));
    basis_ = row_basis(rows);
}

void FqSubspace::add(const FqSubspace& other) {
    if (other.bound_ != bound_ || !(other.field_ == field_)) throw InputError("subspaces of different ambient spaces");
    basis_ = sum_row_spaces(basis_, other.basis_);
}

std::vector<Polynomial> monomial_basis(const Field& field, std::size_t d) {
    std::vector<Polynomial> out;
    for (std::size_t i = 0; i < d; ++i) {
        for (unsigned j = 0; j < field.m(); ++j) out.push_back(Polynomial::monomial(field, field.basis(j), i));
    }
    return out;
}

FqSubspace multiples(const Polynomial& g, std::size_t d, std::size_t bound) {
    std::vector<Polynomial> polys;
    for (const auto& b : monomial_basis(g.field(), d)) polys.push_back(g * b);
    return FqSubspace::span(g.field(), bound, polys);
}

std::vector<Elem> tau(const Polynomial& f, std::span<const Elem> support) {
    std::vector<Elem> out = ev_support(f, support);
    for (auto& v : out) v = f.field().trace(v);
    return out;
}

MatrixGF tau_image(const FqSubspace& v, std::span<const Elem> support) {
    MatrixGF rows(v.field().subfield(), 0, support.size());
    for (const auto& p : v.polynomials()) rows.append_row(tau(p, support));
    return row_basis(rows);
}

FqSubspace build_K(const Field& field, unsigned t) {
    require_tower(field);
    if (t == 0) throw InputError("t must be at least 1");
    const std::size_t bound = norm_exponent(field) * t;
    std::vector<Polynomial> images;
    for (const auto& a : monomial_basis(field, t)) images.push_back(pow(a, field.q()) - a);
    return FqSubspace::span(field, bound, images);
}

FqSubspace build_K(const Polynomial& g) { return build_K(g.field(), static_cast<unsigned>(g.degree())); }

KReport verify_K_properties(std::span<const Elem> support, const Polynomial& g) {
    const Field& f = g.field();
    require_tower(f);
    require_irreducible_power(g);
    GoppaSpec{Support(support.begin(), support.end()), g}.validate();
    const unsigned t = static_cast<unsigned>(g.degree());
    const std::uint64_t e = trace_exponent(f.q(), f.m());
    const std::size_t mt = static_cast<std::size_t>(f.m()) * t;

    KReport rep;
    rep.q = f.q();
    rep.m = f.m();
    rep.t = t;
    const FqSubspace K = build_K(g);
    rep.dim_K = K.dimension();

    rep.in_kernel_of_tau = true;
    std::vector<Polynomial> reduced;
    for (const auto& k : K.polynomials()) {
        const auto v = tau(k, support);
        if (hamming_weight(v) != 0) rep.in_kernel_of_tau = false;
        reduced.push_back(k % g);
    }
    rep.dim_K_mod_g = FqSubspace::span(f, t, reduced).dimension();

    FqSubspace both = multiples(g, e * t, K.bound());
    const std::size_t dim_multiples = both.dimension();
    both.add(K);
    rep.dim_intersection = rep.dim_K + dim_multiples - both.dimension();

    std::string failed;
    if (!rep.in_kernel_of_tau) failed += " K not in ker tau;";
    if (rep.dim_intersection != 0) failed += " K meets g F[x]_{<et};";
    if (rep.dim_K != mt - 1) failed += " dim K = " + std::to_string(rep.dim_K) + ";";
    if (rep.dim_K_mod_g != mt - 1) failed += " dim K mod g = " + std::to_string(rep.dim_K_mod_g) + ";";
    if (!failed.empty()) throw TheoremFalsification("K properties fail for g = " + format_polynomial(g) + ":" + failed);
    return rep;
}

Elem absolute_trace(const QuotientRing& ring, const Polynomial& y) {
    const Field& f = ring.field();
    const std::size_t steps = static_cast<std::size_t>(f.m()) * ring.degree();
    Polynomial acc(f), term = ring.reduce(y);
    for (std::size_t i = 0; i < steps; ++i) {
        acc += term;
        term = ring.pow(term, f.q());
    }
    if (acc.degree() > 0 || !f.in_subfield(acc.coeff(0)))
        throw TheoremFalsification("absolute trace left F_q; is the modulus irreducible?");
    return acc.coeff(0);
}

std::vector<Elem> trace_zero_elements(const Field& field) {
    std::vector<Elem> out;
    for (Elem x = 1; x < field.size(); ++x) {
        if (field.trace(x) == 0) out.push_back(x);
    }
    return out;
}

StartKey startkey_search(const Polynomial& h, Elem lambda) {
    const Field& f = h.field();
    require_tower(f);
    if (h.degree() < 2) throw InputError("startkey search needs deg h >= 2");
    if (h.leading() != 1 || !is_irreducible(h)) throw InputError("h must be monic irreducible");
    require_lambda(f, lambda);
    const QuotientRing ring(h);
    const std::uint64_t e1 = norm_exponent(f);
    const Polynomial lam = Polynomial::constant(f, lambda);
    for (std::uint64_t i = 0; i < ring.size(); ++i) {
        const Polynomial alpha = ring.element(i);
        const Elem tr = absolute_trace(ring, ring.mul(lam, ring.pow(alpha, e1)));
        if (tr != 0) return {alpha, i, tr};
    }
    throw TheoremFalsification("no alpha with nonzero trace of lambda alpha^(e+1) for h = " + format_polynomial(h));
}

Decomposition find_decomposition(std::span<const Elem> support, const Polynomial& g, Elem lambda) {
    const Field& f = g.field();
    require_tower(f);
    require_irreducible_power(g);
    if (count_distinct_roots(g) != 0) throw InputError("g must have no roots in " + f.describe());
    require_lambda(f, lambda);
    GoppaSpec{Support(support.begin(), support.end()), g}.validate();

    const unsigned t = static_cast<unsigned>(g.degree());
    const std::uint64_t e = trace_exponent(f.q(), f.m());
    Decomposition d;
    const FqSubspace K = build_K(g);
    FqSubspace partial = multiples(g, e * t, K.bound());
    d.dim_K = K.dimension();
    d.dim_multiples = partial.dimension();
    d.ambient = K.ambient_dimension();
    partial.add(K);
    if (partial.dimension() != d.dim_K + d.dim_multiples)
        throw TheoremFalsification("K meets g F[x]_{<et} for g = " + format_polynomial(g));

    const Polynomial lam = Polynomial::constant(f, lambda);
    const std::uint64_t total = count_below(f, t);
    for (std::uint64_t i = 1; i < total; ++i) {
        const Polynomial a = from_index(f, t, i);
        const Polynomial candidate = lam * pow(a, e + 1);
        if (partial.contains(candidate)) continue;
        if (partial.dimension() + 1 != d.ambient) continue;
        d.a = a;
        d.index = i;
        d.dim_T = 1;
        d.T_in_kernel_of_tau = hamming_weight(tau(candidate, support)) == 0;
        if (!d.T_in_kernel_of_tau)
            throw TheoremFalsification("lambda a^(e+1) is not in ker tau for g = " + format_polynomial(g));
        return d;
    }
    throw TheoremFalsification("no decomposition K + T + g F[x]_{<et} for g = " + format_polynomial(g));
}

DualReformulation dual_reformulation(std::span<const Elem> support, const Polynomial& g) {
    const Field& f = g.field();
    require_tower(f);
    if (g.degree() < 1) throw InputError("g must have degree >= 1");
    const std::size_t t = static_cast<std::size_t>(g.degree());
    const std::uint64_t e = trace_exponent(f.q(), f.m());
    const std::size_t bound = (e + 1) * t;
    const MatrixGF full = tau_image(FqSubspace::span(f, bound, monomial_basis(f, bound)), support);
    const MatrixGF mult = tau_image(multiples(g, e * t, bound), support);
    DualReformulation out;
    out.dim_full = full.rows();
    out.dim_multiples = mult.rows();
    out.equal = full == mult;
    return out;
}

bool K_mod_h_is_trace_kernel(const Polynomial& h, unsigned t) {
    const Field& f = h.field();
    require_tower(f);
    if (h.leading() != 1 || h.degree() < 1 || !is_irreducible(h)) throw InputError("h must be monic irreducible");
    const unsigned r = static_cast<unsigned>(h.degree());
    if (t < r) throw InputError("t must be at least deg h");
    std::vector<Polynomial> reduced;
    for (const auto& k : build_K(f, t).polynomials()) reduced.push_back(k % h);
    const FqSubspace k_mod_h = FqSubspace::span(f, r, reduced);

    const QuotientRing ring(h);
    const auto basis = monomial_basis(f, r);
    MatrixGF trace_map(f.subfield(), 1, basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i) trace_map.set(0, i, absolute_trace(ring, basis[i]));
    const MatrixGF ker = kernel(trace_map);
    std::vector<Polynomial> ker_polys;
    for (std::size_t i = 0; i < ker.rows(); ++i) {
        Polynomial p(f);
        for (std::size_t j = 0; j < basis.size(); ++j) p += basis[j].scaled(ker(i, j));
        ker_polys.push_back(p);
    }
    const FqSubspace trace_kernel = FqSubspace::span(f, r, ker_polys);
    return k_mod_h == trace_kernel && k_mod_h.dimension() + 1 == static_cast<std::size_t>(f.m()) * r;
}

}  // namespace wildgoppa
