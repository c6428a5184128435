#pragma once

// Structure maps on M_k (x) M_m: partial transposes, the flip, realignment,
// tensor rank and Hermitian Schmidt decompositions.

#include <vector>

#include "spcppt/linalg.hpp"

namespace spcppt {

/// Square complex matrix of size k*m tagged with its factor dimensions.
class BipartiteOperator {
public:
    /// Throws DimensionMismatch unless matrix is (k*m) x (k*m) and k, m >= 1.
    BipartiteOperator(int k, int m, ComplexMatrix matrix);

    int k() const noexcept { return k_; }
    int m() const noexcept { return m_; }
    const ComplexMatrix& matrix() const noexcept { return matrix_; }
    bool is_square_split() const noexcept { return k_ == m_; }

    /// A (x) B as a bipartite operator.
    static BipartiteOperator product(const ComplexMatrix& left, const ComplexMatrix& right);
    static BipartiteOperator identity(int k, int m);

    BipartiteOperator& operator+=(const BipartiteOperator& other);

private:
    int k_;
    int m_;
    ComplexMatrix matrix_;
};

BipartiteOperator operator+(BipartiteOperator a, const BipartiteOperator& b);
BipartiteOperator operator*(double scale, BipartiteOperator a);

/// A^{t2}[(i,p),(j,q)] = A[(i,q),(j,p)].
BipartiteOperator partial_transpose_right(const BipartiteOperator& a);

/// A^{t1}[(i,p),(j,q)] = A[(j,p),(i,q)].
BipartiteOperator partial_transpose_left(const BipartiteOperator& a);

/// The swap a (x) b -> b (x) a on C^k (x) C^k.
BipartiteOperator flip(int k);

/// u = sum_l e_l (x) e_l, i.e. vec_F(Id).
ComplexVector maximally_entangled_vector(int k);

/// Rectangular realignment: R(A)[(i,j),(p,q)] = A[(i,p),(j,q)], a k^2 x m^2
/// matrix. Maps A1 (x) B1 to vec_F(A1) vec_F(B1)^t.
ComplexMatrix realign(const BipartiteOperator& a);

/// Inverse of realign for the given factor dimensions.
BipartiteOperator unrealign(const ComplexMatrix& r, int k, int m);

/// The map S on M_k (x) M_k. S(S(A)) = A. Throws DimensionMismatch if k != m.
ComplexMatrix realign_S(const BipartiteOperator& a);

/// S applied to a k^2 x k^2 matrix, returned as an operator on C^k (x) C^k.
BipartiteOperator realign_S(const ComplexMatrix& m);

/// Default relative cutoff for tensor rank: sigma_i > 1e-8 * sigma_max.
inline constexpr double kRankTol = 1e-8;

/// Singular values of the realigned matrix, descending.
RealVector realignment_singular_values(const BipartiteOperator& a);

/// Operator Schmidt rank: number of realignment singular values above
/// tol * sigma_max. The zero operator has rank 0.
int tensor_rank(const BipartiteOperator& a, double tol = kRankTol);

/// Orthonormal Hermitian basis of M_k under tr(X Y^*): E_ii, then for i < j
/// (E_ij + E_ji)/sqrt2 and i (E_ij - E_ji)/sqrt2.
std::vector<ComplexMatrix> hermitian_basis(int k);

/// Real coordinates of a Hermitian matrix in hermitian_basis(k).
RealVector hermitian_coordinates(const ComplexMatrix& h);
ComplexMatrix from_hermitian_coordinates(const RealVector& coords, int k);

struct SchmidtTerm {
    double coefficient;   // > 0
    ComplexMatrix left;   // Hermitian, unit Frobenius norm
    ComplexMatrix right;  // Hermitian, unit Frobenius norm
};

struct SchmidtDecomposition {
    int k = 0;
    int m = 0;
    std::vector<SchmidtTerm> terms;  // coefficients descending

    ComplexMatrix reconstruct() const;

    /// right == +left for every term (only meaningful when k == m).
    bool is_symmetric(double tol = kDefaultTol) const;
};

/// Hermitian Schmidt decomposition A = sum lambda_i gamma_i (x) delta_i.
///
/// A is expanded in the product of hermitian_basis(k) and hermitian_basis(m),
/// which yields a real k^2 x m^2 coefficient matrix. When that matrix is
/// symmetric its eigendecomposition is used, so delta_i = +-gamma_i exactly
/// and degenerate coefficients cannot mix the two signs; otherwise a real SVD
/// is taken. Terms with coefficient <= cutoff * lambda_max are dropped.
///
/// Throws NotHermitian.
SchmidtDecomposition hermitian_schmidt(const BipartiteOperator& a, double tol = kDefaultTol,
                                       double cutoff = 1e-12);

/// Real coefficient matrix C[a][b] = tr(A (G_a (x) H_b)).
RealMatrix hermitian_coefficient_matrix(const BipartiteOperator& a);

struct HermitianVectorBasis {
    int k = 0;
    std::vector<double> alphas;           // eigenvalues, ascending
    std::vector<ComplexVector> vectors;   // orthonormal; unvec_F(v) Hermitian
};

/// Orthonormal eigenbasis of a Hermitian matrix on C^k (x) C^k in which every
/// vector is Hermitian. Each eigenvector w is split into Hermitian parts
/// w1 + i w2, both of which lie in the same eigenspace; the parts are then
/// orthonormalized per eigenspace in real coordinates.
///
/// Throws NotHermitian, or NotHermitianPreserving when M does not map
/// Hermitian vectors to Hermitian vectors.
HermitianVectorBasis hermitian_eigenbasis(const ComplexMatrix& m, double tol = kDefaultTol);

}  // namespace spcppt
