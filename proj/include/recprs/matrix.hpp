#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "recprs/rational.hpp"

namespace recprs {

/// Dense row-major matrix of exact rationals.
class ExactMatrix {
   public:
    ExactMatrix() = default;
    ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

    static ExactMatrix identity(std::size_t n);
    /// Throws IndexError when the rows are ragged.
    static ExactMatrix from_rows(const std::vector<std::vector<Rational>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
    /// Bounds-checked access; throws IndexError.
    const Rational& at(std::size_t r, std::size_t c) const;

    std::span<const Rational> row(std::size_t r) const { return {entries_.data() + r * cols_, cols_}; }

    friend bool operator==(const ExactMatrix&, const ExactMatrix&) = default;

   private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> entries_;
};

struct BlockPlacement {
    ExactMatrix source;
    std::size_t row_offset = 0;
    std::size_t col_offset = 0;
};

/// A set of non-overlapping blocks inside a total_rows x total_cols frame.
struct BlockSpec {
    std::vector<BlockPlacement> placements;
    std::size_t total_rows = 0;
    std::size_t total_cols = 0;
};

/// Unplaced cells are zero. Throws OutOfBounds or OverlapError.
ExactMatrix assemble(const BlockSpec& spec);

/// Rows in the given order. Throws IndexError on out-of-range or repeated indices.
ExactMatrix select_rows(const ExactMatrix& m, std::span<const std::size_t> row_indices);

/// Contiguous leading/trailing row ranges, used for the upper/lower block splits.
ExactMatrix top_rows(const ExactMatrix& m, std::size_t count);
ExactMatrix bottom_rows(const ExactMatrix& m, std::size_t count);

/// Exact determinant. Denominators are cleared column by column, the integer
/// matrix goes through single-step Bareiss elimination, and the result is
/// divided by the product of the column multipliers. Throws NotSquare.
Rational determinant(const ExactMatrix& m);

/// Same elimination over a matrix that is already integral.
Integer bareiss_determinant(std::vector<Integer> entries, std::size_t n);

}  // namespace recprs
