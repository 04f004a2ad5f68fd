#include "wildgoppa/goppa.hpp"

#include <charconv>
#include <unordered_set>

#include "wildgoppa/errors.hpp"

namespace wildgoppa {

namespace {

std::vector<Elem> parse_element_list(const Field& field, std::string_view text, std::size_t offset) {
    std::vector<Elem> out;
    std::size_t pos = 0;
    while (true) {
        Elem v = 0;
        const char* begin = text.data() + pos;
        auto [ptr, ec] = std::from_chars(begin, text.data() + text.size(), v);
        if (ec != std::errc() || ptr == begin) throw ParseError("expected a field element code", offset + pos);
        if (v >= field.size()) throw ParseError("element outside the field", offset + pos);
        out.push_back(v);
        pos += static_cast<std::size_t>(ptr - begin);
        if (pos == text.size()) break;
        if (text[pos] != ',') throw ParseError("expected ','", offset + pos);
        ++pos;
    }
    return out;
}

std::vector<Elem> inverse_values(const Polynomial& g, std::span<const Elem> support) {
    const Field& f = g.field();
    std::vector<Elem> out = ev_support(g, support);
    for (auto& v : out) v = f.inv(v);
    return out;
}

// prod_{j != i} (alpha_i - alpha_j)
std::vector<Elem> derivative_values(const Field& f, std::span<const Elem> support) {
    std::vector<Elem> out(support.size(), 1);
    for (std::size_t i = 0; i < support.size(); ++i) {
        for (std::size_t j = 0; j < support.size(); ++j) {
            if (i != j) out[i] = f.mul(out[i], f.sub(support[i], support[j]));
        }
    }
    return out;
}

}  // namespace

Support full_support(const Field& field) {
    Support s(field.size());
    for (Elem i = 0; i < field.size(); ++i) s[i] = i;
    return s;
}

Support support_without(const Field& field, std::span<const Elem> removed) {
    std::vector<bool> drop(field.size(), false);
    for (Elem r : removed) {
        if (r >= field.size()) throw InputError("removed element outside the field");
        drop[r] = true;
    }
    Support s;
    for (Elem i = 0; i < field.size(); ++i) {
        if (!drop[i]) s.push_back(i);
    }
    return s;
}

Support parse_support(const Field& field, std::string_view text) {
    constexpr std::string_view kFull = "full";
    constexpr std::string_view kMinus = "full-minus:";
    if (text == kFull) return full_support(field);
    Support s;
    if (text.substr(0, kMinus.size()) == kMinus) {
        const auto removed = parse_element_list(field, text.substr(kMinus.size()), kMinus.size());
        s = support_without(field, removed);
    } else {
        s = parse_element_list(field, text, 0);
    }
    std::vector<bool> seen(field.size(), false);
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (seen[s[i]]) throw ParseError("duplicate support element", 0);
        seen[s[i]] = true;
    }
    if (s.empty()) throw ParseError("empty support", 0);
    return s;
}

void validate_support(const Field& field, std::span<const Elem> support) {
    std::vector<bool> seen(field.size(), false);
    for (Elem a : support) {
        if (a >= field.size()) throw InputError("support element outside the field");
        if (seen[a]) throw InputError("support elements must be pairwise distinct");
        seen[a] = true;
    }
}

std::vector<std::size_t> complement_positions(std::span<const Elem> super, std::span<const Elem> sub) {
    const std::unordered_set<Elem> keep(sub.begin(), sub.end());
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < super.size(); ++i) {
        if (!keep.count(super[i])) out.push_back(i);
    }
    return out;
}

Polynomial support_polynomial(const Field& field, std::span<const Elem> support) {
    Polynomial p = Polynomial::constant(field, 1);
    for (Elem a : support) p = p * Polynomial::linear(field, a);
    return p;
}

void GoppaSpec::validate() const {
    if (goppa.degree() < 1) throw InputError("Goppa polynomial must have degree >= 1");
    if (support.empty()) throw InputError("empty support");
    validate_support(field(), support);
    for (Elem a : support) {
        if (goppa(a) == 0) throw InputError("Goppa polynomial vanishes at support element " + std::to_string(a));
    }
}

MatrixGF alternant_parity_check(const GoppaSpec& spec) {
    spec.validate();
    const Field& f = spec.field();
    const auto inv = inverse_values(spec.goppa, spec.support);
    const std::size_t r = static_cast<std::size_t>(spec.goppa.degree());
    const std::size_t n = spec.length();
    MatrixGF h(f, r, n);
    for (std::size_t i = 0; i < n; ++i) {
        Elem v = inv[i];
        for (std::size_t j = 0; j < r; ++j) {
            h.set(j, i, v);
            v = f.mul(v, spec.support[i]);
        }
    }
    return h;
}

LinearCode goppa_code(const GoppaSpec& spec) { return subfield_kernel(alternant_parity_check(spec)); }

LinearCode goppa_via_crt(const GoppaSpec& spec) {
    spec.validate();
    const Field& f = spec.field();
    const Field base = f.subfield();
    const unsigned m = f.m();
    const std::size_t r = static_cast<std::size_t>(spec.goppa.degree());
    const Polynomial pi = support_polynomial(f, spec.support);
    MatrixGF map(base, r * m, spec.length());
    for (std::size_t i = 0; i < spec.length(); ++i) {
        const Polynomial residue = (pi / Polynomial::linear(f, spec.support[i])) % spec.goppa;
        for (std::size_t j = 0; j < r; ++j) {
            const auto coords = f.coordinates(residue.coeff(j));
            for (unsigned k = 0; k < m; ++k) map.set(j * m + k, i, coords[k]);
        }
    }
    return LinearCode(kernel(map));
}

bool goppa_member(const GoppaSpec& spec, std::span<const Elem> word) {
    spec.validate();
    if (word.size() != spec.length()) throw InputError("word length differs from the support length");
    const Field& f = spec.field();
    const QuotientRing ring(spec.goppa.monic());
    Polynomial sum(f);
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (word[i] == 0) continue;
        if (word[i] >= f.q()) throw InputError("word entries must lie in F_q");
        sum += ring.inverse(Polynomial::linear(f, spec.support[i])).scaled(word[i]);
    }
    return ring.reduce(sum).is_zero();
}

LinearCode generalized_reed_solomon(const Field& field, std::span<const Elem> support, std::size_t k,
                                    std::span<const Elem> multipliers) {
    validate_support(field, support);
    if (multipliers.size() != support.size()) throw InputError("one multiplier per support element is required");
    MatrixGF g(field, k, support.size());
    for (std::size_t i = 0; i < support.size(); ++i) {
        if (multipliers[i] == 0) throw InputError("multipliers must be nonzero");
        Elem v = multipliers[i];
        for (std::size_t j = 0; j < k; ++j) {
            g.set(j, i, v);
            v = field.mul(v, support[i]);
        }
    }
    return LinearCode(g);
}

LinearCode reed_solomon(const Field& field, std::span<const Elem> support, std::size_t k) {
    const std::vector<Elem> ones(support.size(), 1);
    return generalized_reed_solomon(field, support, k, ones);
}

GrsPair grs_pair(std::span<const Elem> support, const Polynomial& h, std::optional<std::size_t> t) {
    const Field& f = h.field();
    GoppaSpec spec{Support(support.begin(), support.end()), h};
    spec.validate();
    const std::size_t n = support.size();
    const std::size_t deg = t.value_or(static_cast<std::size_t>(h.degree()));
    if (deg < 1 || deg + 1 > n) throw InputError("GRS degree parameter must satisfy 1 <= t <= n - 1");
    const auto inv_h = inverse_values(h, support);
    const auto dpi = derivative_values(f, support);
    std::vector<Elem> code_mult(n);
    for (std::size_t i = 0; i < n; ++i) code_mult[i] = f.div(h(support[i]), dpi[i]);
    return {generalized_reed_solomon(f, support, n - deg, code_mult), generalized_reed_solomon(f, support, deg, inv_h)};
}

}  // namespace wildgoppa
