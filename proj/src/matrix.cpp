#include "recprs/matrix.hpp"

#include <string>
#include <utility>

#include "recprs/errors.hpp"

namespace recprs {

ExactMatrix ExactMatrix::identity(std::size_t n) {
    ExactMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

ExactMatrix ExactMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    ExactMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw IndexError("ragged rows in matrix literal");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    }
    return m;
}

const Rational& ExactMatrix::at(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_)
        throw IndexError("matrix index (" + std::to_string(r) + "," + std::to_string(c) + ") out of range");
    return (*this)(r, c);
}

ExactMatrix assemble(const BlockSpec& spec) {
    ExactMatrix out(spec.total_rows, spec.total_cols);
    std::vector<bool> owned(spec.total_rows * spec.total_cols, false);
    for (const auto& p : spec.placements) {
        const auto& src = p.source;
        if (p.row_offset + src.rows() > spec.total_rows || p.col_offset + src.cols() > spec.total_cols)
            throw OutOfBounds("block placement exceeds the assembled frame");
        for (std::size_t r = 0; r < src.rows(); ++r) {
            for (std::size_t c = 0; c < src.cols(); ++c) {
                const std::size_t rr = p.row_offset + r;
                const std::size_t cc = p.col_offset + c;
                const std::size_t idx = rr * spec.total_cols + cc;
                if (owned[idx]) throw OverlapError("block placements overlap");
                owned[idx] = true;
                out(rr, cc) = src(r, c);
            }
        }
    }
    return out;
}

ExactMatrix select_rows(const ExactMatrix& m, std::span<const std::size_t> row_indices) {
    std::vector<bool> seen(m.rows(), false);
    ExactMatrix out(row_indices.size(), m.cols());
    for (std::size_t i = 0; i < row_indices.size(); ++i) {
        const std::size_t r = row_indices[i];
        if (r >= m.rows()) throw IndexError("row index " + std::to_string(r) + " out of range");
        if (seen[r]) throw IndexError("row index " + std::to_string(r) + " selected twice");
        seen[r] = true;
        for (std::size_t c = 0; c < m.cols(); ++c) out(i, c) = m(r, c);
    }
    return out;
}

ExactMatrix top_rows(const ExactMatrix& m, std::size_t count) {
    if (count > m.rows()) throw IndexError("top_rows: not enough rows");
    ExactMatrix out(count, m.cols());
    for (std::size_t r = 0; r < count; ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m(r, c);
    return out;
}

ExactMatrix bottom_rows(const ExactMatrix& m, std::size_t count) {
    if (count > m.rows()) throw IndexError("bottom_rows: not enough rows");
    const std::size_t first = m.rows() - count;
    ExactMatrix out(count, m.cols());
    for (std::size_t r = 0; r < count; ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m(first + r, c);
    return out;
}

Integer bareiss_determinant(std::vector<Integer> a, std::size_t n) {
    if (n == 0) return 1;
    auto at = [&](std::size_t r, std::size_t c) -> Integer& { return a[r * n + c]; };
    int sign = 1;
    Integer prev_pivot = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (at(k, k) == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && at(swap_row, k) == 0) ++swap_row;
            if (swap_row == n) return 0;
            for (std::size_t c = k; c < n; ++c) std::swap(at(k, c), at(swap_row, c));
            sign = -sign;
        }
        const Integer& pivot = at(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            const Integer& lead = at(i, k);
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer& cell = at(i, j);
                cell = cell * pivot - lead * at(k, j);
                mpz_divexact(cell.get_mpz_t(), cell.get_mpz_t(), prev_pivot.get_mpz_t());
            }
        }
        prev_pivot = pivot;
    }
    Integer det = at(n - 1, n - 1);
    return sign < 0 ? Integer(-det) : det;
}

Rational determinant(const ExactMatrix& m) {
    if (!m.is_square()) throw NotSquare("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    std::vector<Integer> ints(n * n);
    Integer scale = 1;
    for (std::size_t c = 0; c < n; ++c) {
        Integer lcm = 1;
        for (std::size_t r = 0; r < n; ++r) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m(r, c).get_den_mpz_t());
        for (std::size_t r = 0; r < n; ++r) {
            const Rational& v = m(r, c);
            Integer& out = ints[r * n + c];
            mpz_divexact(out.get_mpz_t(), lcm.get_mpz_t(), v.get_den_mpz_t());
            out *= v.get_num();
        }
        scale *= lcm;
    }
    return make_rational(bareiss_determinant(std::move(ints), n), scale);
}

}  // namespace recprs
