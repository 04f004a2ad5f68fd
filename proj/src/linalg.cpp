#include "wildgoppa/linalg.hpp"

#include <algorithm>

#include "wildgoppa/errors.hpp"

namespace wildgoppa {

namespace {

void require_compatible(const MatrixGF& x, const MatrixGF& y) {
    if (!(x.field() == y.field())) throw InputError("matrices over different fields");
    if (x.cols() != y.cols()) throw InputError("matrices with different column counts");
}

// dst += c * src
void axpy(const Field& f, std::span<Elem> dst, std::span<const Elem> src, Elem c, std::size_t from) {
    if (f.characteristic() == 2) {
        for (std::size_t j = from; j < dst.size(); ++j) {
            if (src[j] != 0) dst[j] ^= f.mul(c, src[j]);
        }
        return;
    }
    for (std::size_t j = from; j < dst.size(); ++j) {
        if (src[j] != 0) dst[j] = f.add(dst[j], f.mul(c, src[j]));
    }
}

}  // namespace

MatrixGF::MatrixGF(Field field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

MatrixGF MatrixGF::from_rows(Field field, std::size_t cols, const std::vector<std::vector<Elem>>& rows) {
    MatrixGF m(std::move(field), 0, cols);
    for (const auto& r : rows) m.append_row(r);
    return m;
}

MatrixGF MatrixGF::identity(Field field, std::size_t n) {
    MatrixGF m(std::move(field), n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

std::vector<std::vector<Elem>> MatrixGF::to_rows() const {
    std::vector<std::vector<Elem>> out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out.emplace_back(row(r).begin(), row(r).end());
    return out;
}

void MatrixGF::append_row(std::span<const Elem> values) {
    if (values.size() != cols_) throw InputError("row length does not match the column count");
    for (Elem v : values) {
        if (v >= field_.size()) throw InputError("matrix entry outside the field");
    }
    data_.insert(data_.end(), values.begin(), values.end());
    ++rows_;
}

void MatrixGF::append_rows(const MatrixGF& other) {
    require_compatible(*this, other);
    data_.insert(data_.end(), other.data_.begin(), other.data_.end());
    rows_ += other.rows_;
}

void MatrixGF::remove_trailing_rows(std::size_t keep) {
    if (keep >= rows_) return;
    rows_ = keep;
    data_.resize(rows_ * cols_);
}

MatrixGF MatrixGF::transpose() const {
    MatrixGF t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) t.set(c, r, (*this)(r, c));
    }
    return t;
}

MatrixGF MatrixGF::select_columns(std::span<const std::size_t> columns) const {
    MatrixGF out(field_, rows_, columns.size());
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t j = 0; j < columns.size(); ++j) {
            if (columns[j] >= cols_) throw InputError("column index out of range");
            out.set(r, j, (*this)(r, columns[j]));
        }
    }
    return out;
}

MatrixGF operator*(const MatrixGF& x, const MatrixGF& y) {
    if (!(x.field() == y.field()) || x.cols() != y.rows()) throw InputError("matrix product shape mismatch");
    const Field& f = x.field();
    MatrixGF out(f, x.rows(), y.cols());
    for (std::size_t i = 0; i < x.rows(); ++i) {
        for (std::size_t k = 0; k < x.cols(); ++k) {
            const Elem c = x(i, k);
            if (c != 0) axpy(f, out.row(i), y.row(k), c, 0);
        }
    }
    return out;
}

RrefResult rref(MatrixGF m) {
    const Field& f = m.field();
    RrefResult res;
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < m.cols() && pivot_row < m.rows(); ++col) {
        std::size_t r = pivot_row;
        while (r < m.rows() && m(r, col) == 0) ++r;
        if (r == m.rows()) continue;
        if (r != pivot_row) {
            auto a = m.row(r);
            auto b = m.row(pivot_row);
            std::swap_ranges(a.begin(), a.end(), b.begin());
        }
        auto prow = m.row(pivot_row);
        const Elem scale = f.inv(prow[col]);
        for (std::size_t j = col; j < m.cols(); ++j) prow[j] = f.mul(prow[j], scale);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == pivot_row) continue;
            const Elem c = m(i, col);
            if (c != 0) axpy(f, m.row(i), prow, f.neg(c), col);
        }
        res.pivots.push_back(col);
        ++pivot_row;
    }
    res.rank = pivot_row;
    res.reduced = std::move(m);
    return res;
}

MatrixGF row_basis(const MatrixGF& m) {
    RrefResult r = rref(m);
    r.reduced.remove_trailing_rows(r.rank);
    return std::move(r.reduced);
}

std::size_t rank(const MatrixGF& m) { return rref(m).rank; }

MatrixGF kernel(const MatrixGF& m) {
    const Field& f = m.field();
    const RrefResult r = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t p : r.pivots) is_pivot[p] = true;
    MatrixGF basis(f, 0, m.cols());
    std::vector<Elem> v(m.cols());
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::fill(v.begin(), v.end(), 0);
        v[free] = 1;
        for (std::size_t i = 0; i < r.rank; ++i) v[r.pivots[i]] = f.neg(r.reduced(i, free));
        basis.append_row(v);
    }
    return row_basis(basis);
}

bool row_space_equal(const MatrixGF& x, const MatrixGF& y) {
    require_compatible(x, y);
    return row_basis(x) == row_basis(y);
}

bool row_space_contains(const MatrixGF& super, const MatrixGF& sub) {
    require_compatible(super, sub);
    MatrixGF stacked = super;
    stacked.append_rows(sub);
    return rank(stacked) == rank(super);
}

MatrixGF intersect_row_spaces(const MatrixGF& x, const MatrixGF& y) {
    require_compatible(x, y);
    MatrixGF duals = kernel(x);
    duals.append_rows(kernel(y));
    return kernel(duals);
}

MatrixGF sum_row_spaces(const MatrixGF& x, const MatrixGF& y) {
    require_compatible(x, y);
    MatrixGF stacked = x;
    stacked.append_rows(y);
    return row_basis(stacked);
}

}  // namespace wildgoppa
