#pragma once

// Explicit constructions: the 3x3 counterexample, the symmetric and
// antisymmetric bases of M_{2^n}, the flip family, antisymmetric families,
// and seeded random generators for the property sweeps.

#include <cstdint>
#include <vector>

#include "spcppt/classify.hpp"

namespace spcppt {

// ---------------------------------------------------------------------------
// SPC but not PPT in M_3 (x) M_3

struct Counterexample3x3 {
    ComplexMatrix d;  // diag(1, 3, -10)
    ComplexMatrix a;  // real antisymmetric, upper triangle (1, 1, 1)
    IntegerCharPoly p;  // of D (x) D + A (x) A
    IntegerCharPoly q;  // of D (x) D - A (x) A
    double m_p = 0.0;   // smallest eigenvalue of D (x) D + A (x) A
    double m_q = 0.0;   // smallest eigenvalue of D (x) D - A (x) A
    BipartiteOperator c{3, 3, ComplexMatrix::Zero(9, 9)};  // |m_q| Id (x) Id + D (x) D + (iA) (x) (iA)
};

/// Reference coefficients of det(M - xI) for the two 9x9 matrices.
const std::vector<long long>& counterexample_p_reference();
const std::vector<long long>& counterexample_q_reference();

Counterexample3x3 build_counterexample();

// ---------------------------------------------------------------------------
// Symmetric / antisymmetric bases of M_{2^n}

struct SymAsymBases {
    int n = 0;
    std::vector<RealMatrix> symmetric;      // 2^{n-1} (2^n + 1) matrices
    std::vector<RealMatrix> antisymmetric;  // 2^{n-1} (2^n - 1) matrices
};

inline constexpr int kMaxDepth = 4;

/// Orthonormal bases of real symmetric and antisymmetric matrices of order
/// 2^n whose eigenvalues all have magnitude 2^{-n/2}. Built recursively from
/// the 2x2 seeds by Kronecker products. Throws DepthOutOfRange unless
/// 1 <= n <= 4.
SymAsymBases sym_asym_bases(int n);

// ---------------------------------------------------------------------------
// C = alpha Id (x) Id + (T - u u^t) / 2 on C^{2^n} (x) C^{2^n}

struct FlipFamilyInstance {
    int n = 0;
    int k = 0;
    double alpha = 0.0;
    ComplexVector u;
    BipartiteOperator t{1, 1, ComplexMatrix::Zero(1, 1)};
    BipartiteOperator c{1, 1, ComplexMatrix::Zero(1, 1)};
    SymAsymBases bases;
    double sum_identity_residual = 0.0;   // || u u^t - (sum S(x)S + sum A(x)A) ||
    double flip_identity_residual = 0.0;  // || T - (u u^t)^{t2} || + || T - (sum S(x)S - sum A(x)A) ||
    double antisym_form_residual = 0.0;   // || C - (alpha Id - sum A(x)A) ||

    /// Smallest alpha for which C is PSD: (k - 1) / 2.
    double threshold() const { return 0.5 * (k - 1); }
};

/// Throws DepthOutOfRange unless 1 <= n <= 4.
FlipFamilyInstance build_flip_family(int n, double alpha);

/// Separability certificate for the flip family: C splits into
/// (k alpha - k(k-1)/2) Id (x) Id / k plus one PSD tensor-rank-2 bracket
/// Id (x) Id / k + (iA_j) (x) (iA_j) per antisymmetric basis element.
struct FlipDecomposition {
    double identity_weight = 0.0;     // k alpha - k (k - 1) / 2
    double max_residual = 0.0;        // || C - sum of parts || / ||C||
    double worst_bracket_min_eig = 0.0;
    int worst_bracket_rank = 0;
    bool all_brackets_rank_le_2 = false;
    bool valid = false;               // weight >= 0, brackets PSD with rank <= 2, sum matches
};

FlipDecomposition decompose_flip_family(const FlipFamilyInstance& inst, double tol = kDefaultTol);

// ---------------------------------------------------------------------------
// alpha Id (x) Id + sum (iB_j) (x) (iB_j) for real antisymmetric B_j

struct AntisymFamily {
    std::vector<RealMatrix> generators;
    double alpha = 0.0;
    BipartiteOperator a_sum{1, 1, ComplexMatrix::Zero(1, 1)};
    double lambda_min = 0.0;
    double lambda_max = 0.0;
    bool spectral_bound_holds = false;  // lambda_min < 0 and |mu| <= |lambda_min| + 1e-10
    BipartiteOperator c{1, 1, ComplexMatrix::Zero(1, 1)};
};

struct AntisymFamilyResult {
    AntisymFamily family;
    ClassificationReport report;
    bool threshold_met = false;     // alpha >= |lambda_min| - tol * max(1, |lambda_min|)
    bool equivalence_holds = false; // psd == spc == ppt == threshold_met
};

/// Throws NotAntisymmetric or DimensionMismatch.
AntisymFamilyResult antisym_family_classify(const std::vector<RealMatrix>& generators, double alpha,
                                            double tol = kDefaultTol);

// ---------------------------------------------------------------------------
// Seeded generators. Each uses boost::random::mt19937_64 seeded with the given
// value and boost's distributions, so samples are identical across platforms.

/// Complex matrix with i.i.d. standard normal real and imaginary parts.
ComplexMatrix random_gaussian_matrix(int rows, int cols, std::uint64_t seed);

/// Hermitian matrix (G + G^*) / 2 for a complex Gaussian G.
ComplexMatrix random_hermitian(int k, std::uint64_t seed);

/// Haar-ish random real orthogonal matrix (QR of a Gaussian, signs fixed).
RealMatrix random_orthogonal(int n, std::uint64_t seed);

struct RandomSpc {
    BipartiteOperator op{1, 1, ComplexMatrix::Zero(1, 1)};
    /// Hermitian terms A_i with op = sum A_i (x) A_i; the last one is
    /// sqrt(c) Id.
    std::vector<ComplexMatrix> terms;
};

/// sum alpha_i H_i (x) H_i + c Id (x) Id with alpha_i ~ U(0.1, 1) and
/// c = max(0, -lambda_min) + U(0, 1). PSD and SPC by construction.
RandomSpc random_spc_with_terms(int k, int terms, std::uint64_t seed);
BipartiteOperator random_spc(int k, int terms, std::uint64_t seed);

/// P G G^* P / tr with P = (Id + T) / 2.
BipartiteOperator random_symmetric_state(int k, std::uint64_t seed);

/// c Id (x) Id + g2 (x) h2 + g3 (x) h3 with traceless Hermitian g_i, Hermitian
/// h_i, and c = |lambda_min(rest)| + U(0, 1). Resamples until the tensor rank
/// is exactly 3.
BipartiteOperator random_rank3_psd_2xm(int m, std::uint64_t seed);

/// `count` real antisymmetric k x k matrices with Gaussian upper triangles.
std::vector<RealMatrix> random_antisymmetric_family(int k, int count, std::uint64_t seed);

}  // namespace spcppt
