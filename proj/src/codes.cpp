#include "wildgoppa/codes.hpp"

#include <algorithm>
#include <limits>

#include "wildgoppa/errors.hpp"

namespace wildgoppa {

LinearCode::LinearCode(const MatrixGF& spanning_rows) : generator_(row_basis(spanning_rows)) {}

LinearCode LinearCode::zero(Field field, std::size_t n) { return LinearCode(MatrixGF(std::move(field), 0, n)); }

LinearCode LinearCode::full(Field field, std::size_t n) { return LinearCode(MatrixGF::identity(std::move(field), n)); }

MatrixGF LinearCode::parity_check() const { return kernel(generator_); }

bool LinearCode::contains(std::span<const Elem> word) const {
    if (word.size() != length()) throw InputError("word length differs from the code length");
    MatrixGF single(field(), 0, length());
    single.append_row(word);
    return row_space_contains(generator_, single);
}

bool LinearCode::contains(const LinearCode& sub) const { return row_space_contains(generator_, sub.generator_); }

LinearCode dual(const LinearCode& c) { return LinearCode(c.parity_check()); }

LinearCode shorten(const LinearCode& c, std::span<const std::size_t> positions) {
    const std::size_t n = c.length();
    std::vector<bool> drop(n, false);
    for (std::size_t p : positions) {
        if (p >= n) throw InputError("shortening position out of range");
        drop[p] = true;
    }
    // Put the dropped columns first; after reduction, the rows whose pivot lies
    // past them vanish there and span the shortened code.
    std::vector<std::size_t> order;
    for (std::size_t j = 0; j < n; ++j) {
        if (drop[j]) order.push_back(j);
    }
    const std::size_t dropped = order.size();
    std::vector<std::size_t> kept;
    for (std::size_t j = 0; j < n; ++j) {
        if (!drop[j]) {
            order.push_back(j);
            kept.push_back(j);
        }
    }
    const RrefResult r = rref(c.generator().select_columns(order));
    MatrixGF rows(c.field(), 0, kept.size());
    for (std::size_t i = 0; i < r.rank; ++i) {
        if (r.pivots[i] < dropped) continue;
        const auto full_row = r.reduced.row(i);
        rows.append_row(full_row.subspan(dropped));
    }
    return LinearCode(rows);
}

LinearCode intersect(const LinearCode& x, const LinearCode& y) {
    return LinearCode(intersect_row_spaces(x.generator(), y.generator()));
}

LinearCode scale_coordinates(const LinearCode& c, std::span<const Elem> multipliers) {
    if (multipliers.size() != c.length()) throw InputError("one multiplier per coordinate is required");
    const Field& f = c.field();
    MatrixGF g = c.generator();
    for (std::size_t j = 0; j < multipliers.size(); ++j) {
        if (multipliers[j] == 0 || multipliers[j] >= f.size()) throw InputError("multipliers must be nonzero field elements");
        for (std::size_t i = 0; i < g.rows(); ++i) g.set(i, j, f.mul(g(i, j), multipliers[j]));
    }
    return LinearCode(g);
}

LinearCode subfield_kernel(const MatrixGF& h) {
    const Field& top = h.field();
    const Field base = top.subfield();
    const unsigned m = top.m();
    MatrixGF expanded(base, h.rows() * m, h.cols());
    for (std::size_t i = 0; i < h.rows(); ++i) {
        for (std::size_t j = 0; j < h.cols(); ++j) {
            const auto coords = top.coordinates(h(i, j));
            for (unsigned k = 0; k < m; ++k) expanded.set(i * m + k, j, coords[k]);
        }
    }
    return LinearCode(kernel(expanded));
}

LinearCode subfield_subcode(const LinearCode& c) {
    if (!c.field().is_tower()) throw InputError("subfield subcode needs a code over F_{q^m} with m >= 2");
    return subfield_kernel(c.parity_check());
}

LinearCode trace_code(const LinearCode& c) {
    const Field& top = c.field();
    if (!top.is_tower()) throw InputError("trace code needs a code over F_{q^m} with m >= 2");
    const Field base = top.subfield();
    MatrixGF rows(base, 0, c.length());
    std::vector<Elem> w(c.length());
    for (std::size_t i = 0; i < c.dimension(); ++i) {
        for (unsigned j = 0; j < top.m(); ++j) {
            const Elem beta = top.basis(j);
            for (std::size_t col = 0; col < c.length(); ++col) w[col] = top.trace(top.mul(beta, c.generator()(i, col)));
            rows.append_row(w);
        }
    }
    return LinearCode(rows);
}

std::size_t hamming_weight(std::span<const Elem> word) {
    return static_cast<std::size_t>(std::count_if(word.begin(), word.end(), [](Elem v) { return v != 0; }));
}

MinDistance min_distance(const LinearCode& c, std::uint64_t budget) {
    const std::size_t k = c.dimension();
    if (k == 0) throw InputError("minimum distance of the zero code is undefined");
    const Field& f = c.field();
    const std::uint64_t q = f.size();

    MinDistance result;
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < k; ++i) {
        if (total > std::numeric_limits<std::uint64_t>::max() / q) {
            result.codewords = std::numeric_limits<std::uint64_t>::max();
            return result;
        }
        total *= q;
    }
    result.codewords = total;
    if (total > budget) return result;

    // Odometer over message digits; each step adds a multiple of one generator
    // row, so every codeword costs O(n) on average.
    const MatrixGF& g = c.generator();
    std::vector<Elem> digits(k, 0);
    std::vector<Elem> word(c.length(), 0);
    std::size_t best = c.length();
    for (std::uint64_t step = 1; step < total; ++step) {
        for (std::size_t i = 0; i < k; ++i) {
            const Elem old = digits[i];
            const Elem next = (old + 1 == q) ? 0 : old + 1;
            const Elem delta = f.sub(next, old);
            const auto row = g.row(i);
            for (std::size_t j = 0; j < word.size(); ++j) {
                if (row[j] != 0) word[j] = f.add(word[j], f.mul(delta, row[j]));
            }
            digits[i] = next;
            if (next != 0) break;
        }
        best = std::min(best, hamming_weight(word));
    }
    result.value = best;
    return result;
}

}  // namespace wildgoppa
