#include "spcppt/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace spcppt {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::NotHermitian: return "NotHermitian";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::NotAState: return "NotAState";
        case ErrorCode::NotHermitianPreserving: return "NotHermitianPreserving";
        case ErrorCode::ConvergenceFailure: return "ConvergenceFailure";
        case ErrorCode::WrongRank: return "WrongRank";
        case ErrorCode::DegenerateD: return "DegenerateD";
        case ErrorCode::ZeroOffDiagonal: return "ZeroOffDiagonal";
        case ErrorCode::NotSPC: return "NotSPC";
        case ErrorCode::RankNot4: return "RankNot4";
        case ErrorCode::NumericalBreakdown: return "NumericalBreakdown";
        case ErrorCode::DepthOutOfRange: return "DepthOutOfRange";
        case ErrorCode::NotAntisymmetric: return "NotAntisymmetric";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::BadParams: return "BadParams";
        case ErrorCode::UnknownTarget: return "UnknownTarget";
    }
    return "Unknown";
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

double max_abs(const ComplexMatrix& m) {
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

double hermitian_defect(const ComplexMatrix& m) {
    if (m.rows() != m.cols()) return std::numeric_limits<double>::infinity();
    if (m.size() == 0) return 0.0;
    return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

bool is_hermitian(const ComplexMatrix& m, double tol) {
    return hermitian_defect(m) <= tol * std::max(1.0, max_abs(m));
}

HermitianEigenSystem hermitian_eig(const ComplexMatrix& m, double tol) {
    if (!is_hermitian(m, tol)) {
        throw Error(ErrorCode::NotHermitian,
                    "hermitian_eig: defect " + std::to_string(hermitian_defect(m)));
    }
    // Symmetrize so rounding noise in the input does not leak into the solver.
    const ComplexMatrix h = 0.5 * (m + m.adjoint());
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h);
    HermitianEigenSystem out{solver.eigenvalues(), solver.eigenvectors()};

    for (Eigen::Index c = 0; c < out.eigenvectors.cols(); ++c) {
        auto col = out.eigenvectors.col(c);
        const double largest = col.cwiseAbs().maxCoeff();
        for (Eigen::Index r = 0; r < col.size(); ++r) {
            const double mag = std::abs(col(r));
            if (mag > 1e-8 * largest) {
                col *= std::conj(col(r)) / mag;
                col(r) = Complex(mag, 0.0);
                break;
            }
        }
    }
    return out;
}

double hermitian_norm(const RealVector& eigenvalues) {
    return eigenvalues.size() == 0 ? 0.0 : eigenvalues.cwiseAbs().maxCoeff();
}

bool is_psd(const ComplexMatrix& m, double tol) {
    if (m.rows() != m.cols() || !is_hermitian(m, tol)) return false;
    if (m.size() == 0) return true;
    const auto eig = hermitian_eig(m, tol);
    return eig.eigenvalues(0) >= -tol * std::max(1.0, hermitian_norm(eig.eigenvalues));
}

double min_eigenvalue(const ComplexMatrix& m, double tol) {
    return hermitian_eig(m, tol).eigenvalues(0);
}

ComplexVector vec_F(const ComplexMatrix& m) {
    if (m.rows() != m.cols()) {
        throw Error(ErrorCode::DimensionMismatch, "vec_F: matrix must be square");
    }
    const Eigen::Index k = m.rows();
    ComplexVector v(k * k);
    for (Eigen::Index i = 0; i < k; ++i)
        for (Eigen::Index j = 0; j < k; ++j) v(i * k + j) = m(i, j);
    return v;
}

ComplexMatrix unvec_F(const ComplexVector& v) {
    const auto k = static_cast<Eigen::Index>(std::llround(std::sqrt(static_cast<double>(v.size()))));
    if (k * k != v.size()) {
        throw Error(ErrorCode::DimensionMismatch, "unvec_F: length is not a perfect square");
    }
    ComplexMatrix m(k, k);
    for (Eigen::Index i = 0; i < k; ++i)
        for (Eigen::Index j = 0; j < k; ++j) m(i, j) = v(i * k + j);
    return m;
}

Complex trace_inner(const ComplexMatrix& x, const ComplexMatrix& y) {
    // tr(X Y^*) = sum_ij X_ij conj(Y_ij)
    return (x.array() * y.array().conjugate()).sum();
}

// ---------------------------------------------------------------------------

std::vector<BigInt> IntegerCharPoly::signed_form() const {
    std::vector<BigInt> out = monic;
    const bool odd = (monic.size() - 1) % 2 == 1;
    if (odd) {
        for (auto& c : out) c = -c;
    }
    return out;
}

BigInt IntegerCharPoly::evaluate(const BigInt& x) const {
    BigInt acc = 0;
    for (const auto& c : monic) acc = acc * x + c;
    return acc;
}

IntegerCharPoly char_poly(const IntegerMatrix& a) {
    const std::size_t n = a.size();
    for (const auto& row : a) {
        if (row.size() != n) throw Error(ErrorCode::DimensionMismatch, "char_poly: matrix must be square");
    }
    // M_0 = 0, c_n = 1; M_k = A M_{k-1} + c_{n-k+1} I; c_{n-k} = -tr(A M_k) / k.
    // The division is exact over the integers.
    IntegerCharPoly out;
    out.monic.assign(n + 1, BigInt(0));
    out.monic[0] = 1;

    IntegerMatrix mk(n, std::vector<BigInt>(n, BigInt(0)));
    IntegerMatrix amk(n, std::vector<BigInt>(n, BigInt(0)));
    for (std::size_t k = 1; k <= n; ++k) {
        for (std::size_t i = 0; i < n; ++i) mk[i][i] += out.monic[k - 1];
        BigInt trace = 0;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                BigInt acc = 0;
                for (std::size_t l = 0; l < n; ++l) acc += a[i][l] * mk[l][j];
                amk[i][j] = std::move(acc);
            }
            trace += amk[i][i];
        }
        out.monic[k] = -trace / static_cast<long>(k);
        std::swap(mk, amk);
    }
    return out;
}

std::vector<Complex> char_poly(const ComplexMatrix& a) {
    if (a.rows() != a.cols()) throw Error(ErrorCode::DimensionMismatch, "char_poly: matrix must be square");
    const Eigen::Index n = a.rows();
    std::vector<Complex> coeffs(static_cast<std::size_t>(n) + 1, Complex(0.0));
    coeffs[0] = 1.0;
    ComplexMatrix mk = ComplexMatrix::Zero(n, n);
    for (Eigen::Index k = 1; k <= n; ++k) {
        mk.diagonal().array() += coeffs[static_cast<std::size_t>(k - 1)];
        const ComplexMatrix amk = a * mk;
        coeffs[static_cast<std::size_t>(k)] = -amk.trace() / static_cast<double>(k);
        mk = amk;
    }
    return coeffs;
}

bool is_integer_matrix(const ComplexMatrix& m) {
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            const Complex z = m(i, j);
            if (z.imag() != 0.0 || !std::isfinite(z.real()) || std::trunc(z.real()) != z.real()) return false;
            if (std::abs(z.real()) > 9.0e18) return false;
        }
    }
    return true;
}

IntegerMatrix to_integer_matrix(const ComplexMatrix& m) {
    if (!is_integer_matrix(m)) {
        throw Error(ErrorCode::DimensionMismatch, "to_integer_matrix: entries are not integers");
    }
    IntegerMatrix out(static_cast<std::size_t>(m.rows()),
                      std::vector<BigInt>(static_cast<std::size_t>(m.cols())));
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            out[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                BigInt(static_cast<long long>(m(i, j).real()));
    return out;
}

}  // namespace spcppt
