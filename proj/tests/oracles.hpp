#pragma once

// Test-only reference computations, independent of the library's HNF/SNF
// code paths: cofactor determinants, determinantal divisors, and brute-force
// lattice comparison by membership enumeration.

#include "cp2b/intlat.hpp"

#include <random>
#include <set>
#include <vector>

namespace cp2b::testing {

// Determinant by cofactor expansion (exponential; fine for n <= 6).
inline Int cofactor_det(const std::vector<IntVec>& m) {
    std::size_t n = m.size();
    if (n == 0) return 1;
    if (n == 1) return m[0][0];
    Int out = 0;
    int sign = 1;
    for (std::size_t j = 0; j < n; ++j) {
        if (m[0][j] != 0) {
            std::vector<IntVec> minor;
            for (std::size_t i = 1; i < n; ++i) {
                IntVec row;
                for (std::size_t c = 0; c < n; ++c)
                    if (c != j) row.push_back(m[i][c]);
                minor.push_back(std::move(row));
            }
            out += sign * m[0][j] * cofactor_det(minor);
        }
        sign = -sign;
    }
    return out;
}

// gcd of all j x j minors of m (0 if every minor vanishes).
inline Int determinantal_divisor(const IntMat& m, std::size_t j) {
    std::vector<std::size_t> ri(j), ci(j);
    Int g = 0;
    auto choose = [&](auto&& self, std::vector<std::size_t>& idx, std::size_t limit,
                      std::size_t pos, std::size_t start, auto&& inner) -> void {
        if (pos == j) {
            inner();
            return;
        }
        for (std::size_t v = start; v + (j - pos) <= limit; ++v) {
            idx[pos] = v;
            self(self, idx, limit, pos + 1, v + 1, inner);
        }
    };
    choose(choose, ri, m.rows(), 0, 0, [&] {
        choose(choose, ci, m.cols(), 0, 0, [&] {
            std::vector<IntVec> sub(j, IntVec(j));
            for (std::size_t a = 0; a < j; ++a)
                for (std::size_t b = 0; b < j; ++b) sub[a][b] = m(ri[a], ci[b]);
            g = int_gcd(g, cofactor_det(sub));
        });
    });
    return g;
}

// Exhaustive comparison of two row lattices on a bounding box: collect every
// lattice point of infinity-norm <= box reachable with coefficients in
// [-coeff_bound, coeff_bound] and compare the two point sets. The coefficient
// range must be generous relative to box and the row norms; only for tiny
// concrete inputs.
inline bool same_lattice_by_enumeration(const IntMat& a, const IntMat& b, int box,
                                        int coeff_bound) {
    auto box_points = [&](const IntMat& m) {
        std::set<IntVec> out;
        std::vector<int> c(m.rows(), -coeff_bound);
        for (;;) {
            IntVec v(m.cols());
            for (std::size_t i = 0; i < m.rows(); ++i)
                for (std::size_t jj = 0; jj < m.cols(); ++jj) v[jj] += c[i] * m(i, jj);
            bool inside = true;
            for (const Int& x : v)
                if (abs(x) > box) inside = false;
            if (inside) out.insert(std::move(v));
            std::size_t i = 0;
            for (; i < c.size(); ++i) {
                if (c[i] < coeff_bound) {
                    ++c[i];
                    break;
                }
                c[i] = -coeff_bound;
            }
            if (i == c.size()) break;
        }
        return out;
    };
    return box_points(a) == box_points(b);
}

inline IntMat random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols,
                            int lo, int hi) {
    std::uniform_int_distribution<int> dist(lo, hi);
    IntMat m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = dist(rng);
    return m;
}

// Random product of elementary unimodular row operations.
inline IntMat random_unimodular(std::mt19937_64& rng, std::size_t n, int steps) {
    std::uniform_int_distribution<int> pick(0, static_cast<int>(n) - 1);
    std::uniform_int_distribution<int> coef(-3, 3);
    std::uniform_int_distribution<int> kind(0, 2);
    IntMat u = IntMat::identity(n);
    for (int s = 0; s < steps; ++s) {
        std::size_t i = static_cast<std::size_t>(pick(rng));
        std::size_t j = static_cast<std::size_t>(pick(rng));
        switch (kind(rng)) {
            case 0:
                u.swap_rows(i, j);
                break;
            case 1:
                u.negate_row(i);
                break;
            default:
                if (i != j) u.submul_row(i, j, Int(coef(rng)));
        }
    }
    return u;
}

}  // namespace cp2b::testing
