#include "wildgoppa/identities.hpp"

#include <algorithm>
#include <string>

#include "wildgoppa/errors.hpp"

namespace wildgoppa {

namespace {

using Clock = std::chrono::steady_clock;

IdentityReport start_report(const Polynomial& g) {
    IdentityReport rep;
    rep.q = g.field().q();
    rep.m = g.field().m();
    rep.t = g.degree();
    return rep;
}

void require_tower(const Polynomial& g) {
    if (!g.field().is_tower()) throw InputError("identities need a field F_{q^m} with m >= 2");
    if (g.degree() < 1) throw InputError("polynomial must have degree >= 1");
}

void require_rootless(const Polynomial& g) {
    if (count_distinct_roots(g) != 0)
        throw InputError("g has a root in " + g.field().describe() + "; use the dimension gap check instead");
}

// Codes Gamma(L, base * g^j) for each exponent; fills exponents, dims, equal, gap.
std::vector<LinearCode> power_codes(IdentityReport& rep, std::span<const Elem> support, const Polynomial& g,
                                    const Polynomial& base, const std::vector<std::uint64_t>& exponents) {
    const Support L(support.begin(), support.end());
    std::vector<LinearCode> codes;
    Polynomial current = base * pow(g, exponents.front());
    std::uint64_t at = exponents.front();
    for (std::uint64_t j : exponents) {
        current = current * pow(g, j - at);
        at = j;
        codes.push_back(goppa_code({L, current}));
    }
    rep.exponents = exponents;
    rep.dims.clear();
    rep.equal.clear();
    for (std::size_t i = 0; i < codes.size(); ++i) {
        rep.dims.push_back(codes[i].dimension());
        if (i) rep.equal.push_back(codes[i] == codes[i - 1]);
    }
    rep.gap = rep.dims.front() - rep.dims.back();
    return codes;
}

std::vector<std::uint64_t> range(std::uint64_t lo, std::uint64_t hi) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t j = lo; j <= hi; ++j) out.push_back(j);
    return out;
}

void require_nested(const std::vector<LinearCode>& codes, const std::string& what) {
    for (std::size_t i = 1; i < codes.size(); ++i) {
        if (!codes[i - 1].contains(codes[i])) throw TheoremFalsification(what + ": codes are not nested");
    }
}

}  // namespace

std::uint64_t trace_exponent(std::uint64_t q, unsigned m) {
    std::uint64_t e = 0, pw = 1;
    for (unsigned i = 1; i < m; ++i) {
        pw *= q;
        e += pw;
    }
    return e;
}

bool IdentityReport::all_equal() const { return std::all_of(equal.begin(), equal.end(), [](bool b) { return b; }); }

IdentityReport verify_theorem1(std::span<const Elem> support, const Polynomial& g) {
    const auto start = Clock::now();
    require_tower(g);
    require_rootless(g);
    IdentityReport rep = start_report(g);
    const std::uint64_t e = trace_exponent(rep.q, rep.m);
    power_codes(rep, support, g, Polynomial::constant(g.field(), 1), {e, e + 1});
    rep.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
    if (!rep.all_equal())
        throw TheoremFalsification("Gamma(L, g^" + std::to_string(e) + ") != Gamma(L, g^" + std::to_string(e + 1) + ") for g = " +
                                   format_polynomial(g));
    return rep;
}

IdentityReport dimension_gap(std::span<const Elem> support, const Polynomial& g) {
    const auto start = Clock::now();
    require_tower(g);
    IdentityReport rep = start_report(g);
    rep.r = count_distinct_roots(g);
    const std::uint64_t e = trace_exponent(rep.q, rep.m);
    const auto codes = power_codes(rep, support, g, Polynomial::constant(g.field(), 1), {e, e + 1});
    rep.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
    require_nested(codes, "dimension gap");
    if (rep.gap > static_cast<std::size_t>(rep.r))
        throw TheoremFalsification("dimension gap " + std::to_string(rep.gap) + " exceeds the root count " + std::to_string(rep.r) +
                                   " for g = " + format_polynomial(g));
    return rep;
}

IdentityReport verify_chain(std::span<const Elem> support, const Polynomial& h, unsigned s) {
    const auto start = Clock::now();
    require_tower(h);
    require_rootless(h);
    if (s < 1) throw InputError("s must be at least 1");
    IdentityReport rep = start_report(h);
    const std::uint64_t e = trace_exponent(rep.q, rep.m);
    const std::uint64_t lo = is_squarefree(h) ? s * e - 1 : s * e;
    power_codes(rep, support, h, Polynomial::constant(h.field(), 1), range(lo, s * (e + 1)));
    rep.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
    if (!rep.all_equal())
        throw TheoremFalsification("codes Gamma(L, h^j) differ within the chain for h = " + format_polynomial(h));
    return rep;
}

IdentityReport verify_sugiyama(std::span<const Elem> support, const Polynomial& g, unsigned s) {
    const auto start = Clock::now();
    if (g.degree() < 1) throw InputError("polynomial must have degree >= 1");
    if (!is_squarefree(g)) throw InputError("g must be squarefree");
    if (s < 1) throw InputError("s must be at least 1");
    IdentityReport rep = start_report(g);
    rep.r = count_distinct_roots(g);
    const std::uint64_t sq = static_cast<std::uint64_t>(s) * rep.q;
    power_codes(rep, support, g, Polynomial::constant(g.field(), 1), {sq - 1, sq});
    rep.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
    if (!rep.all_equal())
        throw TheoremFalsification("Gamma(L, g^" + std::to_string(sq - 1) + ") != Gamma(L, g^" + std::to_string(sq) +
                                   ") for squarefree g = " + format_polynomial(g));
    return rep;
}

RsEquivalence rs_equivalence(std::span<const Elem> support, const Polynomial& g) {
    require_tower(g);
    require_rootless(g);
    const Field& f = g.field();
    validate_support(f, support);
    const std::uint64_t e = trace_exponent(f.q(), f.m());
    const std::uint64_t designed = static_cast<std::uint64_t>(g.degree()) * (e + 1);
    if (designed >= f.size())
        throw InputError("deg(g)(e+1) = " + std::to_string(designed) + " leaves no Reed-Solomon dimension on " +
                         std::to_string(f.size()) + " points");
    RsEquivalence out;
    out.k = f.size() - designed;

    const Support L(support.begin(), support.end());
    const LinearCode gamma = goppa_code({L, pow(g, e + 1)});
    out.dimension = gamma.dimension();
    std::vector<Elem> multipliers;
    for (Elem a : L) multipliers.push_back(f.inv(f.norm(g(a))));
    const LinearCode scaled = scale_coordinates(LinearCode(gamma), multipliers);

    Support extended = L;
    for (Elem a : support_without(f, L)) extended.push_back(a);
    std::vector<std::size_t> appended;
    for (std::size_t i = L.size(); i < extended.size(); ++i) appended.push_back(i);
    const LinearCode rs = shorten(subfield_subcode(reed_solomon(f, extended, out.k)), appended);
    out.equal = scaled == rs;
    if (!out.equal)
        throw TheoremFalsification("scaled Gamma(L, g^(e+1)) differs from the Reed-Solomon subfield subcode for g = " +
                                   format_polynomial(g));
    return out;
}

CofactorReport verify_cofactor(std::span<const Elem> support, const Polynomial& g, const Polynomial& h) {
    const auto start = Clock::now();
    require_tower(g);
    require_rootless(g);
    if (h.is_zero()) throw InputError("cofactor must be nonzero");
    if (gcd(g, h).degree() > 0) throw InputError("cofactor must be coprime to g");
    CofactorReport out;
    out.report = start_report(g);
    const std::uint64_t e = trace_exponent(out.report.q, out.report.m);
    std::vector<std::uint64_t> exps;
    if (is_squarefree(g) && e >= 2) exps.push_back(e - 1);
    exps.push_back(e);
    exps.push_back(e + 1);
    power_codes(out.report, support, g, h, exps);
    out.report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
    out.typo_suspected = !out.report.all_equal();
    return out;
}

}  // namespace wildgoppa
