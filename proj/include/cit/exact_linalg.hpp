// Small dense exact-rational linear algebra: rank, linear solves, and the
// weighted right-inverse used by the direction-set dual map. Sizes here are
// tiny (at most a few dozen rows), so fraction-free pivoting is not needed.
#pragma once

#include <vector>

#include "cit/rational.hpp"

namespace cit {

struct RationalMatrix {
    int rows = 0, cols = 0;
    std::vector<Rational> a;

    RationalMatrix() = default;
    RationalMatrix(int r, int c) : rows(r), cols(c), a(std::size_t(r) * c) {}
    Rational& at(int i, int j) { return a[std::size_t(i) * cols + j]; }
    const Rational& at(int i, int j) const { return a[std::size_t(i) * cols + j]; }
};

inline int rational_rank(RationalMatrix m) {
    int rank = 0;
    for (int col = 0; col < m.cols && rank < m.rows; ++col) {
        int piv = -1;
        for (int r = rank; r < m.rows; ++r)
            if (m.at(r, col) != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        for (int j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(rank, j));
        for (int r = 0; r < m.rows; ++r) {
            if (r == rank || m.at(r, col) == 0) continue;
            const Rational f = m.at(r, col) / m.at(rank, col);
            for (int j = col; j < m.cols; ++j) m.at(r, j) -= f * m.at(rank, j);
        }
        ++rank;
    }
    return rank;
}

// Solve A x = b exactly, A square nonsingular.
inline std::vector<Rational> rational_solve(RationalMatrix A, std::vector<Rational> b) {
    const int n = A.rows;
    if (A.cols != n || static_cast<int>(b.size()) != n)
        throw std::invalid_argument("rational_solve: shape mismatch");
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (A.at(r, col) != 0) {
                piv = r;
                break;
            }
        if (piv < 0) throw std::domain_error("rational_solve: singular matrix");
        if (piv != col) {
            for (int j = 0; j < n; ++j) std::swap(A.at(piv, j), A.at(col, j));
            std::swap(b[piv], b[col]);
        }
        for (int r = 0; r < n; ++r) {
            if (r == col || A.at(r, col) == 0) continue;
            const Rational f = A.at(r, col) / A.at(col, col);
            for (int j = col; j < n; ++j) A.at(r, j) -= f * A.at(col, j);
            b[r] -= f * b[col];
        }
    }
    std::vector<Rational> x(n);
    for (int i = 0; i < n; ++i) x[i] = b[i] / A.at(i, i);
    return x;
}

}  // namespace cit
