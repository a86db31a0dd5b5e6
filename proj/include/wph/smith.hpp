#pragma once

// Small dense integer linear algebra: Smith normal form diagonal and a basis
// of the lattice {x in Z^r : c . x = 0 mod m}.

#include "wph/numeric.hpp"

#include <cassert>
#include <optional>
#include <utility>
#include <vector>

namespace wph {

using IntMatrix = std::vector<std::vector<BigInt>>;  // row-major

/// Nonzero diagonal entries of the Smith normal form, each dividing the next.
inline std::vector<BigInt> smith_diagonal(IntMatrix a) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    auto abs_of = [](const BigInt& x) { return x < 0 ? BigInt(-x) : x; };
    std::vector<BigInt> diag;

    for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
        for (;;) {
            // smallest nonzero entry of the trailing block becomes the pivot
            std::optional<std::pair<std::size_t, std::size_t>> best;
            for (std::size_t i = t; i < rows; ++i)
                for (std::size_t j = t; j < cols; ++j)
                    if (a[i][j] != 0 &&
                        (!best || abs_of(a[i][j]) < abs_of(a[best->first][best->second])))
                        best = std::make_pair(i, j);
            if (!best) return diag;
            std::swap(a[t], a[best->first]);
            for (auto& row : a) std::swap(row[t], row[best->second]);

            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                const BigInt q = a[i][t] / a[t][t];
                for (std::size_t j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
                clean = clean && a[i][t] == 0;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                const BigInt q = a[t][j] / a[t][t];
                for (std::size_t i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
                clean = clean && a[t][j] == 0;
            }
            if (!clean) continue;

            // divisibility: fold an offending row into the pivot row and retry
            std::optional<std::size_t> offender;
            for (std::size_t i = t + 1; i < rows && !offender; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (a[i][j] % a[t][t] != 0) {
                        offender = i;
                        break;
                    }
            if (!offender) break;
            for (std::size_t j = t; j < cols; ++j) a[t][j] += a[*offender][j];
        }
        diag.push_back(abs_of(a[t][t]));
    }
    return diag;
}

/// Columns of the returned r x r matrix form a basis of {x : c . x = 0 mod m}.
inline IntMatrix congruence_lattice_basis(const std::vector<BigInt>& c, const BigInt& m) {
    const std::size_t r = c.size();
    // Column operations on the row (c | m), tracked in U, until it reads (g, 0, ..., 0);
    // the remaining columns of U span the integer kernel, whose projection to the
    // first r coordinates is the congruence lattice.
    std::vector<BigInt> row(c);
    row.push_back(m);
    IntMatrix u(r + 1, std::vector<BigInt>(r + 1, BigInt(0)));
    for (std::size_t i = 0; i <= r; ++i) u[i][i] = 1;
    auto col_sub = [&](std::size_t dst, std::size_t src, const BigInt& q) {
        row[dst] -= q * row[src];
        for (std::size_t i = 0; i <= r; ++i) u[i][dst] -= q * u[i][src];
    };
    auto col_swap = [&](std::size_t a, std::size_t b) {
        std::swap(row[a], row[b]);
        for (std::size_t i = 0; i <= r; ++i) std::swap(u[i][a], u[i][b]);
    };
    for (;;) {
        std::optional<std::size_t> pivot;
        for (std::size_t j = 0; j <= r; ++j)
            if (row[j] != 0 && (!pivot || abs(row[j]) < abs(row[*pivot]))) pivot = j;
        assert(pivot);
        col_swap(0, *pivot);
        bool done = true;
        for (std::size_t j = 1; j <= r; ++j) {
            if (row[j] == 0) continue;
            col_sub(j, 0, row[j] / row[0]);
            done = done && row[j] == 0;
        }
        if (done) break;
    }
    IntMatrix basis(r, std::vector<BigInt>(r));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) basis[i][j] = u[i][j + 1];
    return basis;
}

/// Integer solution y of B y = v for square nonsingular B, if one exists.
inline std::optional<std::vector<BigInt>> solve_integral(const IntMatrix& b,
                                                         const std::vector<BigInt>& v) {
    const std::size_t n = b.size();
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n + 1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) m[i][j] = Rational(b[i][j]);
        m[i][n] = Rational(v[i]);
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t p = col;
        while (p < n && m[p][col] == 0) ++p;
        if (p == n) return std::nullopt;
        std::swap(m[p], m[col]);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || m[i][col] == 0) continue;
            const Rational f = m[i][col] / m[col][col];
            for (std::size_t j = col; j <= n; ++j) m[i][j] -= f * m[col][j];
        }
    }
    std::vector<BigInt> y(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Rational q = m[i][n] / m[i][i];
        if (denominator(q) != 1) return std::nullopt;
        y[i] = numerator(q);
    }
    return y;
}

} // namespace wph
