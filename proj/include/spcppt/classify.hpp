#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "spcppt/bipartite.hpp"

namespace spcppt {

enum class Separability { Separable, Entangled, Undecided };

/// Why a separability verdict was reached. Every SEPARABLE verdict carries
/// one of the first five; ENTANGLED always carries NotPpt.
enum class Certificate {
    Ppt2x2,
    Ppt2x3,
    RankAtMost2,
    RankAtMost3In2xM,
    ExplicitDecomposition,
    NotPpt,
    None,
};

std::string_view to_string(Separability s) noexcept;
std::string_view to_string(Certificate c) noexcept;

struct ClassificationReport {
    int k = 0;
    int m = 0;
    bool hermitian = false;
    bool psd = false;
    bool ppt = false;
    std::optional<bool> spc;              // empty when k != m
    std::optional<bool> symmetric_state;  // empty when k != m
    int tensor_rank = 0;
    double min_eig = 0.0;     // NaN when not Hermitian
    double min_eig_pt = 0.0;  // NaN when not Hermitian
    Separability separability = Separability::Undecided;
    Certificate certificate = Certificate::None;
    /// Every certificate that applies, in the priority order used to pick
    /// `certificate`.
    std::vector<Certificate> certificates;
};

/// is_psd(A^{t2}). Throws NotAState when A itself is not PSD.
bool is_ppt(const BipartiteOperator& a, double tol = kDefaultTol);

/// SPC test through the realignment: A is SPC iff S(A^{t2}) is Hermitian and
/// PSD. Throws NotAState when A is not PSD and DimensionMismatch when k != m.
bool is_spc(const BipartiteOperator& a, double tol = kDefaultTol);

/// Independent SPC route: the Hermitian Schmidt decomposition has
/// delta_i = +gamma_i for every term. Same preconditions as is_spc.
bool is_spc_by_schmidt(const BipartiteOperator& a, double tol = kDefaultTol);

/// AT = TA = A within tol * ||A||. False when k != m.
bool is_symmetric_state(const BipartiteOperator& a, double tol = kDefaultTol);

struct SchurWitness {
    ComplexMatrix matrix;  // sum_i A_i o A_i^t
    bool psd = false;
};

/// Sum of Schur products A_i o A_i^t over Hermitian terms of equal size.
/// Throws DimensionMismatch or NotHermitian.
SchurWitness schur_witness(const std::vector<ComplexMatrix>& terms, double tol = kDefaultTol);

/// Fills every report field. Verdict: ENTANGLED if not PPT (a non-PSD input is
/// not PPT); SEPARABLE when tensor rank <= 2, when k == 2 and tensor rank <= 3,
/// or when PPT in 2x2 / 2x3 / 3x2; UNDECIDED otherwise.
ClassificationReport classify(const BipartiteOperator& a, double tol = kDefaultTol);

}  // namespace spcppt
