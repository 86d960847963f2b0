#pragma once

#include <random>

#include "cgi/fracfield.hpp"
#include "cgi/matrix.hpp"

// shared pseudorandom matrix generators for the exact-kernel tests

namespace testgen {

inline cgi::Laurent random_laurent(std::mt19937_64& rng, int vars, int max_deg, int max_terms,
                                   long cmax) {
    std::uniform_int_distribution<int> e(-max_deg, max_deg), n(1, max_terms);
    std::uniform_int_distribution<long> c(-cmax, cmax);
    cgi::Laurent out(vars);
    const int terms = n(rng);
    for (int t = 0; t < terms; ++t) {
        cgi::Laurent::Expo expo(static_cast<size_t>(vars));
        for (auto& x : expo) x = e(rng);
        out.add_term(expo, cgi::Rational(c(rng)));
    }
    return out;
}

inline cgi::Matrix<cgi::Laurent> random_laurent_matrix(std::mt19937_64& rng, std::size_t rows,
                                                       std::size_t cols, int vars, int max_deg,
                                                       long cmax) {
    cgi::Matrix<cgi::Laurent> m(rows, cols, cgi::Laurent(vars));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m.at(i, j) = random_laurent(rng, vars, max_deg, 3, cmax);
    return m;
}

inline cgi::Matrix<cgi::Frac> random_frac_matrix(std::mt19937_64& rng, std::size_t rows,
                                                 std::size_t cols, int vars, int max_deg,
                                                 long cmax) {
    cgi::Matrix<cgi::Frac> m(rows, cols, cgi::Frac(vars));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
            cgi::Laurent den(vars);
            while (den.is_zero()) den = random_laurent(rng, vars, 1, 2, 2);
            m.at(i, j) = cgi::Frac(random_laurent(rng, vars, max_deg, 3, cmax), den);
        }
    return m;
}

}  // namespace testgen
