#pragma once

// Constructive reductions: the canonical form of rank-4 SPC operators on
// C^2 (x) C^2, and the reduction of tensor-rank-3 PSD operators on
// C^2 (x) C^m to a form invariant under the left partial transpose.

#include <vector>

#include "spcppt/bipartite.hpp"

namespace spcppt {

struct LeadingSchmidtPair {
    double coefficient = 0.0;  // lambda_1 > 0
    ComplexMatrix left;        // PSD, unit Frobenius norm
    ComplexMatrix right;       // PSD, unit Frobenius norm
    int iterations = 0;        // 0 when the SVD fallback produced the pair
};

/// Top operator-Schmidt term of a nonzero PSD operator, with both factors
/// PSD. Alternating power iteration X <- Tr_2(A (Id (x) Y)),
/// Y <- Tr_1(A (X (x) Id)) from the identity; SVD fallback when it stalls.
///
/// Throws NotAState, ConvergenceFailure (after one retry on A + 1e-12 Id).
LeadingSchmidtPair leading_schmidt_pair(const BipartiteOperator& a, double tol = kDefaultTol);

/// Intermediate quantities of the tensor-rank-3 reduction. With
/// L = V U^* R^{-1}, output = (L (x) Id) perturbed (L^* (x) Id) is PSD and
/// left-partial-transpose invariant.
struct ReductionChain {
    double epsilon = 0.0;
    ComplexMatrix a1, b1;   // PSD first pair
    ComplexMatrix a2, b2;   // remaining Hermitian pairs
    ComplexMatrix a3, b3;
    ComplexMatrix r;        // Hermitian square root of a1 + epsilon Id
    ComplexMatrix u;        // unitary diagonalizing R^{-1} a2 R^{-1}
    RealVector d;           // its eigenvalues
    double a = 0.0;         // diagonal of the third factor = a Id + c D
    double c = 0.0;
    Complex b;              // off-diagonal (lower-left) entry of the third factor
    ComplexMatrix v;        // diag(1, conj(b))
    ComplexMatrix l;        // V U^* R^{-1}
    BipartiteOperator perturbed{1, 1, ComplexMatrix::Zero(1, 1)};  // A + epsilon Id (x) b1
    BipartiteOperator output{1, 1, ComplexMatrix::Zero(1, 1)};     // F

    /// ||F^{t1} - F|| / ||F|| in Frobenius norm.
    double left_transpose_residual() const;
    /// Distance between F (computed by conjugation) and the structured sum
    /// VV* (x) (b1 + a b3) + V D V* (x) (b2 + c b3) + V [0 b*; b 0] V* (x) b3,
    /// relative to ||F||.
    double conjugation_residual() const;
};

/// Runs the rank-3 reduction for a PSD operator with k == 2.
///
/// Throws NotAState, DimensionMismatch (k != 2), WrongRank (tensor rank != 3),
/// DegenerateD (R^{-1} a2 R^{-1} proportional to Id) or ZeroOffDiagonal (the
/// third factor is diagonal after rotation, so A(epsilon) has rank <= 2).
ReductionChain rank3_reduce(const BipartiteOperator& a, double epsilon, double tol = kDefaultTol);

struct EpsilonLimitCheck {
    std::vector<double> epsilons;
    std::vector<double> distances;  // ||A(eps) - A|| / ||A||
    std::vector<double> invariance_residuals;
    bool converged = false;
};

/// Runs rank3_reduce over a decreasing epsilon sequence and checks the
/// perturbed operators approach A while every output stays invariant.
EpsilonLimitCheck certify_rank3_limit(const BipartiteOperator& a,
                                      const std::vector<double>& epsilons = {1e-2, 1e-3, 1e-4},
                                      double tol = kDefaultTol);

/// A = lambda Id (x) Id + D (x) D + gamma (x) gamma + delta (x) delta with
/// lambda > 0, D real diagonal and gamma, delta Hermitian.
struct CanonicalFormSPC2 {
    double lambda = 0.0;
    ComplexMatrix d;      // real diagonal (imaginary parts exactly zero)
    ComplexMatrix gamma;
    ComplexMatrix delta;

    // Intermediate values of the construction.
    double mu = 0.0;
    double coeff_r = 0.0;     // a: eigenvalue attached to gamma
    double coeff_s = 0.0;     // b: eigenvalue attached to delta
    ComplexVector kernel;     // Hermitian kernel vector n of M - lambda u u^t
    ComplexVector diag_vec;   // d = d1 e1(x)e1 + d2 e2(x)e2, unit norm

    BipartiteOperator reconstruct() const;
    /// The four Hermitian terms sqrt(lambda) Id, D, gamma, delta.
    std::vector<ComplexMatrix> terms() const;
};

/// Throws DimensionMismatch (not 2x2), NotAState, NotSPC, RankNot4 or
/// NumericalBreakdown.
CanonicalFormSPC2 spc_canonical_2x2(const BipartiteOperator& a, double tol = kDefaultTol);

}  // namespace spcppt
