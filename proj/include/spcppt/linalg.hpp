#pragma once

// Dense complex matrix substrate shared by every other module.
//
// Composite index convention: for a Kronecker product A (x) B the row index of
// the pair (i, p) is i * rows(B) + p (0-based, row-major). Vectorization uses
// the same convention, so vec_F(M)[i * k + j] = M(i, j).

#include <complex>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_int.hpp>

#include "spcppt/error.hpp"

namespace spcppt {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;
using BigInt = boost::multiprecision::cpp_int;

/// Default relative tolerance for Hermitian and PSD checks.
inline constexpr double kDefaultTol = 1e-9;

struct HermitianEigenSystem {
    RealVector eigenvalues;      // ascending
    ComplexMatrix eigenvectors;  // orthonormal columns
};

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Largest absolute entry, or 0 for an empty matrix.
double max_abs(const ComplexMatrix& m);

/// max |M(i,j) - conj(M(j,i))|; infinity for non-square input.
double hermitian_defect(const ComplexMatrix& m);

/// Hermitian within tol * max(1, max|M(i,j)|).
bool is_hermitian(const ComplexMatrix& m, double tol = kDefaultTol);

/// Full eigensystem of a Hermitian matrix, eigenvalues ascending. The first
/// component of each eigenvector above 1e-8 of its largest magnitude is made
/// real and positive so the output is reproducible.
///
/// Throws ErrorCode::NotHermitian when the symmetry check fails.
HermitianEigenSystem hermitian_eig(const ComplexMatrix& m, double tol = kDefaultTol);

/// Spectral norm of a Hermitian matrix from its eigenvalues.
double hermitian_norm(const RealVector& eigenvalues);

/// Hermitian within tol and min eigenvalue >= -tol * max(1, ||M||).
/// Non-Hermitian or non-square input returns false.
bool is_psd(const ComplexMatrix& m, double tol = kDefaultTol);

/// Smallest eigenvalue of a Hermitian matrix (throws NotHermitian otherwise).
double min_eigenvalue(const ComplexMatrix& m, double tol = kDefaultTol);

/// F: M_k -> C^k (x) C^k with F(a b^t) = a (x) b.
ComplexVector vec_F(const ComplexMatrix& m);

/// Inverse of vec_F; the length must be a perfect square.
ComplexMatrix unvec_F(const ComplexVector& v);

/// Trace inner product tr(X Y^*).
Complex trace_inner(const ComplexMatrix& x, const ComplexMatrix& y);

// ---------------------------------------------------------------------------
// Characteristic polynomials

using IntegerMatrix = std::vector<std::vector<BigInt>>;

struct IntegerCharPoly {
    /// Coefficients of det(xI - M), degree descending; leading entry is 1.
    std::vector<BigInt> monic;

    /// Coefficients of det(M - xI) = (-1)^n det(xI - M), degree descending.
    std::vector<BigInt> signed_form() const;

    /// Evaluate det(xI - M) at an integer point.
    BigInt evaluate(const BigInt& x) const;
};

/// Exact Faddeev-LeVerrier recursion over arbitrary-precision integers.
IntegerCharPoly char_poly(const IntegerMatrix& m);

/// Floating-point Faddeev-LeVerrier for det(xI - M), degree descending.
std::vector<Complex> char_poly(const ComplexMatrix& m);

/// True when every entry has zero imaginary part and integral real part.
bool is_integer_matrix(const ComplexMatrix& m);

/// Throws DimensionMismatch if the matrix is not integer-valued.
IntegerMatrix to_integer_matrix(const ComplexMatrix& m);

}  // namespace spcppt
