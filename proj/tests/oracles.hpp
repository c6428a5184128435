#pragma once

// Independent reference computations used as test oracles. They work from
// block decompositions and textbook formulas rather than the library's
// index shuffles.

#include <complex>
#include <vector>

#include "spcppt/bipartite.hpp"

namespace oracle {

using spcppt::BigInt;
using spcppt::Complex;
using spcppt::ComplexMatrix;
using spcppt::ComplexVector;
using Index = Eigen::Index;

// Block (i, j) of A in M_k (x) M_m is the m x m matrix A_ij with
// A = sum E_ij (x) A_ij.
inline ComplexMatrix block(const ComplexMatrix& a, int m, Index i, Index j) { return a.block(i * m, j * m, m, m); }

inline ComplexMatrix unit(int n, Index i, Index j) {
    ComplexMatrix e = ComplexMatrix::Zero(n, n);
    e(i, j) = 1.0;
    return e;
}

// Naive Kronecker product from its definition.
inline ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Index i = 0; i < a.rows(); ++i)
        for (Index j = 0; j < a.cols(); ++j)
            for (Index p = 0; p < b.rows(); ++p)
                for (Index q = 0; q < b.cols(); ++q) out(i * b.rows() + p, j * b.cols() + q) = a(i, j) * b(p, q);
    return out;
}

// A^{t2} = sum E_ij (x) A_ij^t.
inline ComplexMatrix partial_transpose_right(const ComplexMatrix& a, int k, int m) {
    ComplexMatrix out(a.rows(), a.cols());
    for (Index i = 0; i < k; ++i)
        for (Index j = 0; j < k; ++j) out.block(i * m, j * m, m, m) = block(a, m, i, j).transpose();
    return out;
}

// A^{t1} = sum E_ji (x) A_ij.
inline ComplexMatrix partial_transpose_left(const ComplexMatrix& a, int k, int m) {
    ComplexMatrix out(a.rows(), a.cols());
    for (Index i = 0; i < k; ++i)
        for (Index j = 0; j < k; ++j) out.block(j * m, i * m, m, m) = block(a, m, i, j);
    return out;
}

// Row-major vectorization: vec(M)[i * cols + j] = M(i, j).
inline ComplexVector vec(const ComplexMatrix& m) {
    ComplexVector v(m.size());
    for (Index i = 0; i < m.rows(); ++i)
        for (Index j = 0; j < m.cols(); ++j) v(i * m.cols() + j) = m(i, j);
    return v;
}

// Realignment through product terms: A = sum E_ij (x) A_ij gives
// R(A) = sum vec(E_ij) vec(A_ij)^t.
inline ComplexMatrix realign(const ComplexMatrix& a, int k, int m) {
    ComplexMatrix out = ComplexMatrix::Zero(static_cast<Index>(k) * k, static_cast<Index>(m) * m);
    for (Index i = 0; i < k; ++i)
        for (Index j = 0; j < k; ++j) out += vec(unit(k, i, j)) * vec(block(a, m, i, j)).transpose();
    return out;
}

// Flip as a sum of matrix-unit products: T = sum E_ij (x) E_ji.
inline ComplexMatrix flip(int k) {
    ComplexMatrix t = ComplexMatrix::Zero(static_cast<Index>(k) * k, static_cast<Index>(k) * k);
    for (Index i = 0; i < k; ++i)
        for (Index j = 0; j < k; ++j) t += kron(unit(k, i, j), unit(k, j, i));
    return t;
}

// Fraction-free (Bareiss) determinant over exact integers.
inline BigInt det(std::vector<std::vector<BigInt>> a) {
    const std::size_t n = a.size();
    if (n == 0) return 1;
    BigInt sign = 1;
    BigInt prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t swap = k + 1;
            while (swap < n && a[swap][k] == 0) ++swap;
            if (swap == n) return 0;
            std::swap(a[k], a[swap]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

// det(x Id - M) at an integer point.
inline BigInt char_poly_at(const std::vector<std::vector<BigInt>>& m, const BigInt& x) {
    auto a = m;
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (auto& e : a[i]) e = -e;
        a[i][i] += x;
    }
    return det(a);
}

}  // namespace oracle
