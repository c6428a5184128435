#include "spcppt/canonical.hpp"

#include <cmath>

#include "spcppt/classify.hpp"

namespace spcppt {

namespace {

using Index = Eigen::Index;

// Tr_2(A (Id (x) Y)) for Hermitian Y.
ComplexMatrix contract_right(const BipartiteOperator& a, const ComplexMatrix& y) {
    const int k = a.k(), m = a.m();
    const auto& src = a.matrix();
    ComplexMatrix out = ComplexMatrix::Zero(k, k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            for (int p = 0; p < m; ++p)
                for (int q = 0; q < m; ++q) out(i, j) += src(i * m + p, j * m + q) * y(q, p);
    return out;
}

// Tr_1(A (X (x) Id)) for Hermitian X.
ComplexMatrix contract_left(const BipartiteOperator& a, const ComplexMatrix& x) {
    const int k = a.k(), m = a.m();
    const auto& src = a.matrix();
    ComplexMatrix out = ComplexMatrix::Zero(m, m);
    for (int p = 0; p < m; ++p)
        for (int q = 0; q < m; ++q)
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j) out(p, q) += src(i * m + p, j * m + q) * x(j, i);
    return out;
}

ComplexMatrix hermitian_part(const ComplexMatrix& m) { return 0.5 * (m + m.adjoint()); }

ComplexMatrix hermitian_power(const ComplexMatrix& m, double exponent) {
    const auto eig = hermitian_eig(m);
    const RealVector powered = eig.eigenvalues.array().pow(exponent);
    return eig.eigenvectors * powered.cast<Complex>().asDiagonal() * eig.eigenvectors.adjoint();
}

bool factor_is_psd(const ComplexMatrix& m, double tol) { return is_psd(hermitian_part(m), tol); }

LeadingSchmidtPair power_iteration(const BipartiteOperator& a, double tol) {
    const int k = a.k(), m = a.m();
    ComplexMatrix x = ComplexMatrix::Identity(k, k) / std::sqrt(static_cast<double>(k));
    ComplexMatrix y = ComplexMatrix::Identity(m, m) / std::sqrt(static_cast<double>(m));

    constexpr int kMaxIterations = 10000;
    for (int it = 1; it <= kMaxIterations; ++it) {
        ComplexMatrix nx = hermitian_part(contract_right(a, y));
        nx /= nx.norm();
        ComplexMatrix ny = hermitian_part(contract_left(a, nx));
        ny /= ny.norm();
        const double change = (nx - x).norm() + (ny - y).norm();
        x = std::move(nx);
        y = std::move(ny);
        if (change <= 1e-12) {
            const double lambda = trace_inner(a.matrix(), kron(x, y)).real();
            if (lambda > 0 && factor_is_psd(x, tol) && factor_is_psd(y, tol)) return {lambda, x, y, it};
            break;
        }
    }

    // Fallback: top term of the full decomposition, signs fixed so both
    // factors have positive trace.
    const auto decomposition = hermitian_schmidt(a, tol);
    const auto& terms = decomposition.terms;
    if (terms.empty()) throw Error(ErrorCode::ConvergenceFailure, "leading_schmidt_pair: zero operator");
    if (terms.size() > 1 && terms[1].coefficient >= (1.0 - 1e-8) * terms[0].coefficient) {
        throw Error(ErrorCode::ConvergenceFailure, "leading_schmidt_pair: degenerate top singular value");
    }
    ComplexMatrix left = terms[0].left;
    ComplexMatrix right = terms[0].right;
    if (left.trace().real() < 0) {
        left = -left;
        right = -right;
    }
    if (!factor_is_psd(left, tol) || !factor_is_psd(right, tol)) {
        throw Error(ErrorCode::ConvergenceFailure, "leading_schmidt_pair: top factors are not PSD");
    }
    return {terms[0].coefficient, left, right, 0};
}

}  // namespace

LeadingSchmidtPair leading_schmidt_pair(const BipartiteOperator& a, double tol) {
    if (!is_psd(a.matrix(), tol)) throw Error(ErrorCode::NotAState, "leading_schmidt_pair: input is not PSD");
    if (a.matrix().norm() == 0.0) throw Error(ErrorCode::NotAState, "leading_schmidt_pair: zero operator");
    try {
        return power_iteration(a, tol);
    } catch (const Error& e) {
        if (e.code() != ErrorCode::ConvergenceFailure) throw;
    }
    const double shift = 1e-12 * a.matrix().norm();
    return power_iteration(a + shift * BipartiteOperator::identity(a.k(), a.m()), tol);
}

// ---------------------------------------------------------------------------

double ReductionChain::left_transpose_residual() const {
    return (partial_transpose_left(output).matrix() - output.matrix()).norm() / output.matrix().norm();
}

double ReductionChain::conjugation_residual() const {
    // Structured form: VV* (x) (B1 + a B3) + V D V* (x) (B2 + c B3) + V A3''' V* (x) B3.
    const ComplexMatrix dm = d.cast<Complex>().asDiagonal();
    ComplexMatrix off = ComplexMatrix::Zero(2, 2);
    off(0, 1) = std::conj(b);
    off(1, 0) = b;
    const ComplexMatrix structured = kron(v * v.adjoint(), b1 + a * b3) + kron(v * dm * v.adjoint(), b2 + c * b3) +
                                     kron(v * off * v.adjoint(), b3);
    return (structured - output.matrix()).norm() / output.matrix().norm();
}

ReductionChain rank3_reduce(const BipartiteOperator& a, double epsilon, double tol) {
    if (a.k() != 2) throw Error(ErrorCode::DimensionMismatch, "rank3_reduce requires k == 2");
    if (!(epsilon > 0)) throw Error(ErrorCode::BadParams, "rank3_reduce: epsilon must be positive");
    if (!is_psd(a.matrix(), tol)) throw Error(ErrorCode::NotAState, "rank3_reduce: input is not PSD");
    const int rank = tensor_rank(a);
    if (rank != 3) throw Error(ErrorCode::WrongRank, "rank3_reduce: tensor rank is " + std::to_string(rank));

    const int m = a.m();
    ReductionChain chain;
    chain.epsilon = epsilon;

    const auto pair = leading_schmidt_pair(a, tol);
    chain.a1 = pair.coefficient * pair.left;
    chain.b1 = pair.right;
    const auto rest = hermitian_schmidt(BipartiteOperator(2, m, a.matrix() - kron(chain.a1, chain.b1)), tol);
    if (rest.terms.size() < 2) throw Error(ErrorCode::WrongRank, "rank3_reduce: remainder has rank < 2");
    chain.a2 = rest.terms[0].coefficient * rest.terms[0].left;
    chain.b2 = rest.terms[0].right;
    chain.a3 = rest.terms[1].coefficient * rest.terms[1].left;
    chain.b3 = rest.terms[1].right;
    const double split_error =
        (a.matrix() - kron(chain.a1, chain.b1) - kron(chain.a2, chain.b2) - kron(chain.a3, chain.b3)).norm();
    if (split_error > 1e-9 * a.matrix().norm()) {
        throw Error(ErrorCode::NumericalBreakdown, "rank3_reduce: three-term split residual " + std::to_string(split_error));
    }

    const ComplexMatrix id2 = ComplexMatrix::Identity(2, 2);
    const ComplexMatrix a1_shifted = hermitian_part(chain.a1) + epsilon * id2;
    chain.r = hermitian_power(a1_shifted, 0.5);
    const ComplexMatrix r_inv = hermitian_power(a1_shifted, -0.5);

    const auto rot = hermitian_eig(hermitian_part(r_inv * chain.a2 * r_inv));
    chain.u = rot.eigenvectors;
    chain.d = rot.eigenvalues;
    const double spread = std::max(std::abs(chain.d(0)), std::abs(chain.d(1)));
    if (spread == 0.0 || chain.d(1) - chain.d(0) <= 1e-9 * spread) {
        throw Error(ErrorCode::DegenerateD, "rank3_reduce: second factor is proportional to the first");
    }

    const ComplexMatrix third = chain.u.adjoint() * r_inv * chain.a3 * r_inv * chain.u;
    const double x0 = third(0, 0).real(), x1 = third(1, 1).real();
    chain.c = (x0 - x1) / (chain.d(0) - chain.d(1));
    chain.a = x0 - chain.c * chain.d(0);
    chain.b = third(1, 0);
    if (std::abs(chain.b) <= 1e-9 * third.norm()) {
        throw Error(ErrorCode::ZeroOffDiagonal, "rank3_reduce: rotated third factor is diagonal");
    }

    chain.v = ComplexMatrix::Zero(2, 2);
    chain.v(0, 0) = 1.0;
    chain.v(1, 1) = std::conj(chain.b);
    chain.l = chain.v * chain.u.adjoint() * r_inv;

    chain.perturbed = BipartiteOperator(2, m, a.matrix() + epsilon * kron(id2, chain.b1));
    const ComplexMatrix lift = kron(chain.l, ComplexMatrix::Identity(m, m));
    chain.output = BipartiteOperator(2, m, lift * chain.perturbed.matrix() * lift.adjoint());
    return chain;
}

EpsilonLimitCheck certify_rank3_limit(const BipartiteOperator& a, const std::vector<double>& epsilons, double tol) {
    EpsilonLimitCheck check;
    check.epsilons = epsilons;
    const double norm = a.matrix().norm();
    bool ok = !epsilons.empty();
    for (double eps : epsilons) {
        const auto chain = rank3_reduce(a, eps, tol);
        check.distances.push_back((chain.perturbed.matrix() - a.matrix()).norm() / norm);
        check.invariance_residuals.push_back(chain.left_transpose_residual());
        ok = ok && check.invariance_residuals.back() <= 1e-8 && is_psd(chain.output.matrix(), tol);
    }
    // The perturbation is epsilon (Id (x) B1) with B1 fixed, so distance / epsilon
    // must be constant and the distances must shrink with epsilon.
    for (std::size_t i = 1; i < epsilons.size() && ok; ++i) {
        const double slope0 = check.distances[0] / epsilons[0];
        const double slope = check.distances[i] / epsilons[i];
        ok = check.distances[i] < check.distances[i - 1] && std::abs(slope - slope0) <= 1e-6 * slope0;
    }
    check.converged = ok;
    return check;
}

// ---------------------------------------------------------------------------

BipartiteOperator CanonicalFormSPC2::reconstruct() const {
    const ComplexMatrix id = ComplexMatrix::Identity(2, 2);
    return {2, 2, lambda * kron(id, id) + kron(d, d) + kron(gamma, gamma) + kron(delta, delta)};
}

std::vector<ComplexMatrix> CanonicalFormSPC2::terms() const {
    return {std::sqrt(lambda) * ComplexMatrix::Identity(2, 2), d, gamma, delta};
}

CanonicalFormSPC2 spc_canonical_2x2(const BipartiteOperator& a, double tol) {
    if (a.k() != 2 || a.m() != 2) throw Error(ErrorCode::DimensionMismatch, "spc_canonical_2x2 requires k == m == 2");
    if (!is_spc(a, tol)) throw Error(ErrorCode::NotSPC, "spc_canonical_2x2: input is not SPC");
    const int rank = tensor_rank(a);
    if (rank != 4) throw Error(ErrorCode::RankNot4, "spc_canonical_2x2: tensor rank is " + std::to_string(rank));

    const ComplexMatrix mm = hermitian_part(realign_S(partial_transpose_right(a)));
    const auto eig = hermitian_eig(mm);
    const double norm = hermitian_norm(eig.eigenvalues);
    if (eig.eigenvalues(0) <= 1e-12 * norm) {
        throw Error(ErrorCode::NumericalBreakdown, "spc_canonical_2x2: realigned matrix is not positive definite");
    }
    const ComplexMatrix m_inv =
        eig.eigenvectors * eig.eigenvalues.cwiseInverse().cast<Complex>().asDiagonal() * eig.eigenvectors.adjoint();

    CanonicalFormSPC2 out;
    const ComplexVector u = maximally_entangled_vector(2);
    const ComplexVector m_inv_u = m_inv * u;
    out.lambda = 1.0 / u.dot(m_inv_u).real();
    const ComplexMatrix b = mm - out.lambda * u * u.transpose();

    // The kernel of B is spanned by M^{-1} u, a Hermitian vector.
    ComplexMatrix n_mat = unvec_F(m_inv_u / m_inv_u.norm());
    if (hermitian_defect(n_mat) > 1e-8 || (b * vec_F(n_mat)).norm() > 1e-8 * norm) {
        throw Error(ErrorCode::NumericalBreakdown, "spc_canonical_2x2: kernel vector is not Hermitian");
    }
    n_mat = hermitian_part(n_mat);
    out.kernel = vec_F(n_mat);

    // d = d1 e1(x)e1 + d2 e2(x)e2 orthogonal to the kernel, i.e. inside Im(B).
    const double n11 = n_mat(0, 0).real(), n22 = n_mat(1, 1).real();
    double d1 = n22, d2 = -n11;
    if (std::abs(n11) <= 1e-12 && std::abs(n22) <= 1e-12) {
        d1 = 1.0;
        d2 = 0.0;
    }
    const double dn = std::hypot(d1, d2);
    d1 /= dn;
    d2 /= dn;
    out.diag_vec = ComplexVector::Zero(4);
    out.diag_vec(0) = d1;
    out.diag_vec(3) = d2;

    const auto beig = hermitian_eig(hermitian_part(b));
    RealVector inv(4);
    const double bnorm = hermitian_norm(beig.eigenvalues);
    for (Index i = 0; i < 4; ++i) inv(i) = beig.eigenvalues(i) > 1e-10 * bnorm ? 1.0 / beig.eigenvalues(i) : 0.0;
    const ComplexMatrix b_pinv = beig.eigenvectors * inv.cast<Complex>().asDiagonal() * beig.eigenvectors.adjoint();
    const double quad = out.diag_vec.dot(b_pinv * out.diag_vec).real();
    if (!(quad > 0)) throw Error(ErrorCode::NumericalBreakdown, "spc_canonical_2x2: d is not in the image of B");
    out.mu = 1.0 / quad;

    const ComplexMatrix rest = hermitian_part(b - out.mu * out.diag_vec * out.diag_vec.adjoint());
    const auto basis = hermitian_eigenbasis(rest, tol);
    const double scale = std::max(1.0, std::abs(basis.alphas.back()));
    if (std::abs(basis.alphas[0]) > 1e-8 * scale || std::abs(basis.alphas[1]) > 1e-8 * scale ||
        basis.alphas[2] <= 1e-10 * scale) {
        throw Error(ErrorCode::NumericalBreakdown, "spc_canonical_2x2: remainder is not PSD of rank 2");
    }
    out.coeff_r = basis.alphas[3];
    out.coeff_s = basis.alphas[2];

    out.d = ComplexMatrix::Zero(2, 2);
    out.d(0, 0) = Complex(std::sqrt(out.mu) * d1, 0.0);
    out.d(1, 1) = Complex(std::sqrt(out.mu) * d2, 0.0);
    out.gamma = std::sqrt(out.coeff_r) * hermitian_part(unvec_F(basis.vectors[3]));
    out.delta = std::sqrt(out.coeff_s) * hermitian_part(unvec_F(basis.vectors[2]));
    return out;
}

}  // namespace spcppt
