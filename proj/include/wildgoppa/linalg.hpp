#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "wildgoppa/gf.hpp"

namespace wildgoppa {

/// Dense row-major matrix over a constructed field.
class MatrixGF {
   public:
    MatrixGF() = default;
    MatrixGF(Field field, std::size_t rows, std::size_t cols);
    static MatrixGF from_rows(Field field, std::size_t cols, const std::vector<std::vector<Elem>>& rows);
    static MatrixGF identity(Field field, std::size_t n);

    const Field& field() const noexcept { return field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool empty() const noexcept { return rows_ == 0; }

    Elem operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, Elem v) { data_[r * cols_ + c] = v; }
    std::span<const Elem> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
    std::span<Elem> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::vector<std::vector<Elem>> to_rows() const;

    void append_row(std::span<const Elem> values);
    /// Rows of `other` appended below; same field and column count.
    void append_rows(const MatrixGF& other);
    void remove_trailing_rows(std::size_t keep);

    MatrixGF transpose() const;
    MatrixGF select_columns(std::span<const std::size_t> columns) const;

    friend bool operator==(const MatrixGF& x, const MatrixGF& y) noexcept {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.data_ == y.data_ && x.field_ == y.field_;
    }

   private:
    Field field_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Elem> data_;
};

MatrixGF operator*(const MatrixGF& x, const MatrixGF& y);

struct RrefResult {
    MatrixGF reduced;  // same shape as the input, zero rows last
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;  // strictly increasing
};

/// Reduced row echelon form by Gaussian elimination, taking the first nonzero
/// entry of each column as pivot.
RrefResult rref(MatrixGF m);
/// The nonzero rows of rref(m).
MatrixGF row_basis(const MatrixGF& m);
std::size_t rank(const MatrixGF& m);

/// Basis of the right null space {v : m v^T = 0}, one vector per row, in RREF.
MatrixGF kernel(const MatrixGF& m);

bool row_space_equal(const MatrixGF& x, const MatrixGF& y);
/// True iff the row space of `sub` lies in the row space of `super`.
bool row_space_contains(const MatrixGF& super, const MatrixGF& sub);
/// Row-space intersection, as the null space of the stacked null spaces. RREF.
MatrixGF intersect_row_spaces(const MatrixGF& x, const MatrixGF& y);
/// Basis (RREF) of the sum of the row spaces.
MatrixGF sum_row_spaces(const MatrixGF& x, const MatrixGF& y);

}  // namespace wildgoppa
