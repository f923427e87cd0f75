#pragma once

#include <string>
#include <vector>

#include "recprs/corpus.hpp"
#include "recprs/matrix.hpp"
#include "recprs/parser.hpp"
#include "recprs/polynomial.hpp"

namespace recprs::testing {

inline Polynomial poly(const char* text) { return parse_polynomial(text); }

// Coefficients written highest degree first, as they appear in print.
inline Polynomial from_high(const std::vector<std::string>& coeffs) {
    std::vector<Rational> low;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) low.push_back(parse_rational(*it));
    return Polynomial(std::move(low));
}

// Laplace expansion along the first row. Exponential, fine up to 6x6.
inline Rational cofactor_determinant(const ExactMatrix& m) {
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    if (n == 1) return m(0, 0);
    Rational total = 0;
    for (std::size_t c = 0; c < n; ++c) {
        if (m(0, c) == 0) continue;
        ExactMatrix minor(n - 1, n - 1);
        for (std::size_t r = 1; r < n; ++r)
            for (std::size_t cc = 0, k = 0; cc < n; ++cc)
                if (cc != c) minor(r - 1, k++) = m(r, cc);
        const Rational term = m(0, c) * cofactor_determinant(minor);
        total += (c % 2 == 0) ? term : Rational(-term);
    }
    return total;
}

inline ExactMatrix random_matrix(corpus::Rng& rng, std::size_t rows, std::size_t cols, long bound) {
    ExactMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            m(r, c) = make_rational(corpus::draw(rng, -bound, bound), corpus::draw(rng, 1, bound));
    return m;
}

inline Rational random_rational(corpus::Rng& rng, long bound) {
    return make_rational(corpus::draw(rng, -bound, bound), corpus::draw(rng, 1, bound));
}

// The eleven printed elements of the recursive Sturm sequence of
// (x+2)^2 ((x-3)(x+1))^3, level by level.
struct ExampleSequence {
    Polynomial P;
    std::vector<std::vector<Polynomial>> levels;
};

inline ExampleSequence example_sequence() {
    ExampleSequence e;
    e.P = from_high({"1", "-2", "-17", "16", "115", "22", "-279", "-324", "-108"});
    const Polynomial p14 = from_high({"128/25", "-256/25", "-256/5", "1024/25", "4224/25", "2304/25"});
    const Polynomial p24 = from_high({"12800/841", "-25600/841", "-38400/841"});
    e.levels = {
        {e.P, from_high({"8", "-14", "-102", "80", "460", "66", "-558", "-324"}),
         from_high({"75/16", "-45/16", "-60", "-225/8", "3315/16", "4815/16", "945/8"}), p14},
        {p14, from_high({"128/5", "-1024/25", "-768/5", "2048/25", "4224/25"}),
         from_high({"14848/625", "-1536/125", "-88576/625", "-66048/625"}), p24},
        {p24, from_high({"25600/841", "-25600/841"}), from_high({"51200/841"})},
    };
    return e;
}

}  // namespace recprs::testing
