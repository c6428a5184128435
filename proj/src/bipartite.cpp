#include "spcppt/bipartite.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace spcppt {

namespace {

using Index = Eigen::Index;

int checked_root(Index n, const char* what) {
    const auto k = static_cast<Index>(std::llround(std::sqrt(static_cast<double>(n))));
    if (k * k != n || k == 0) {
        throw Error(ErrorCode::DimensionMismatch, std::string(what) + ": size is not a square k^2");
    }
    return static_cast<int>(k);
}

// Flip the sign so the first coordinate above 1e-8 of the largest is
// positive. Returns whether a flip happened.
bool normalize_sign(Eigen::Ref<RealVector> v) {
    const double largest = v.cwiseAbs().maxCoeff();
    for (Index i = 0; i < v.size(); ++i) {
        if (std::abs(v(i)) > 1e-8 * largest) {
            if (v(i) >= 0) return false;
            v = -v;
            return true;
        }
    }
    return false;
}

// Columns are vec_F of hermitian_basis(k).
ComplexMatrix basis_columns(int k) {
    const auto basis = hermitian_basis(k);
    ComplexMatrix cols(static_cast<Index>(k) * k, static_cast<Index>(basis.size()));
    for (std::size_t a = 0; a < basis.size(); ++a) cols.col(static_cast<Index>(a)) = vec_F(basis[a]);
    return cols;
}

}  // namespace

BipartiteOperator::BipartiteOperator(int k, int m, ComplexMatrix matrix)
    : k_(k), m_(m), matrix_(std::move(matrix)) {
    if (k < 1 || m < 1) throw Error(ErrorCode::DimensionMismatch, "factor dimensions must be positive");
    const Index n = static_cast<Index>(k) * m;
    if (matrix_.rows() != n || matrix_.cols() != n) {
        throw Error(ErrorCode::DimensionMismatch,
                    "expected a " + std::to_string(n) + "x" + std::to_string(n) + " matrix, got " +
                        std::to_string(matrix_.rows()) + "x" + std::to_string(matrix_.cols()));
    }
}

BipartiteOperator BipartiteOperator::product(const ComplexMatrix& left, const ComplexMatrix& right) {
    if (left.rows() != left.cols() || right.rows() != right.cols()) {
        throw Error(ErrorCode::DimensionMismatch, "product: factors must be square");
    }
    return {static_cast<int>(left.rows()), static_cast<int>(right.rows()), kron(left, right)};
}

BipartiteOperator BipartiteOperator::identity(int k, int m) {
    const Index n = static_cast<Index>(k) * m;
    return {k, m, ComplexMatrix::Identity(n, n)};
}

BipartiteOperator& BipartiteOperator::operator+=(const BipartiteOperator& other) {
    if (other.k_ != k_ || other.m_ != m_) throw Error(ErrorCode::DimensionMismatch, "operator+: factor dimensions differ");
    matrix_ += other.matrix_;
    return *this;
}

BipartiteOperator operator+(BipartiteOperator a, const BipartiteOperator& b) {
    a += b;
    return a;
}

BipartiteOperator operator*(double scale, BipartiteOperator a) {
    return {a.k(), a.m(), scale * a.matrix()};
}

BipartiteOperator partial_transpose_right(const BipartiteOperator& a) {
    const int k = a.k(), m = a.m();
    const auto& src = a.matrix();
    ComplexMatrix out(src.rows(), src.cols());
    for (int i = 0; i < k; ++i)
        for (int p = 0; p < m; ++p)
            for (int j = 0; j < k; ++j)
                for (int q = 0; q < m; ++q) out(i * m + p, j * m + q) = src(i * m + q, j * m + p);
    return {k, m, std::move(out)};
}

BipartiteOperator partial_transpose_left(const BipartiteOperator& a) {
    const int k = a.k(), m = a.m();
    const auto& src = a.matrix();
    ComplexMatrix out(src.rows(), src.cols());
    for (int i = 0; i < k; ++i)
        for (int p = 0; p < m; ++p)
            for (int j = 0; j < k; ++j)
                for (int q = 0; q < m; ++q) out(i * m + p, j * m + q) = src(j * m + p, i * m + q);
    return {k, m, std::move(out)};
}

BipartiteOperator flip(int k) {
    if (k < 1) throw Error(ErrorCode::DimensionMismatch, "flip: k must be >= 1");
    const Index n = static_cast<Index>(k) * k;
    ComplexMatrix t = ComplexMatrix::Zero(n, n);
    for (int i = 0; i < k; ++i)
        for (int p = 0; p < k; ++p) t(p * k + i, i * k + p) = 1.0;
    return {k, k, std::move(t)};
}

ComplexVector maximally_entangled_vector(int k) {
    return vec_F(ComplexMatrix::Identity(k, k));
}

ComplexMatrix realign(const BipartiteOperator& a) {
    const int k = a.k(), m = a.m();
    const auto& src = a.matrix();
    ComplexMatrix out(static_cast<Index>(k) * k, static_cast<Index>(m) * m);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            for (int p = 0; p < m; ++p)
                for (int q = 0; q < m; ++q) out(i * k + j, p * m + q) = src(i * m + p, j * m + q);
    return out;
}

BipartiteOperator unrealign(const ComplexMatrix& r, int k, int m) {
    if (r.rows() != static_cast<Index>(k) * k || r.cols() != static_cast<Index>(m) * m) {
        throw Error(ErrorCode::DimensionMismatch, "unrealign: expected a k^2 x m^2 matrix");
    }
    const Index n = static_cast<Index>(k) * m;
    ComplexMatrix out(n, n);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            for (int p = 0; p < m; ++p)
                for (int q = 0; q < m; ++q) out(i * m + p, j * m + q) = r(i * k + j, p * m + q);
    return {k, m, std::move(out)};
}

ComplexMatrix realign_S(const BipartiteOperator& a) {
    if (!a.is_square_split()) {
        throw Error(ErrorCode::DimensionMismatch,
                    "realign_S requires k == m (got " + std::to_string(a.k()) + ", " + std::to_string(a.m()) + ")");
    }
    return realign(a);
}

BipartiteOperator realign_S(const ComplexMatrix& m) {
    if (m.rows() != m.cols()) throw Error(ErrorCode::DimensionMismatch, "realign_S: matrix must be square");
    const int k = checked_root(m.rows(), "realign_S");
    return {k, k, realign(BipartiteOperator(k, k, m))};
}

RealVector realignment_singular_values(const BipartiteOperator& a) {
    Eigen::BDCSVD<ComplexMatrix> svd(realign(a));
    return svd.singularValues();
}

int tensor_rank(const BipartiteOperator& a, double tol) {
    const RealVector sv = realignment_singular_values(a);
    if (sv.size() == 0 || sv(0) == 0.0) return 0;
    int rank = 0;
    for (Index i = 0; i < sv.size(); ++i)
        if (sv(i) > tol * sv(0)) ++rank;
    return rank;
}

std::vector<ComplexMatrix> hermitian_basis(int k) {
    if (k < 1) throw Error(ErrorCode::DimensionMismatch, "hermitian_basis: k must be >= 1");
    const double r = 1.0 / std::sqrt(2.0);
    const Complex iu(0.0, 1.0);
    std::vector<ComplexMatrix> basis;
    basis.reserve(static_cast<std::size_t>(k) * k);
    for (int i = 0; i < k; ++i) {
        ComplexMatrix e = ComplexMatrix::Zero(k, k);
        e(i, i) = 1.0;
        basis.push_back(std::move(e));
    }
    for (int i = 0; i < k; ++i) {
        for (int j = i + 1; j < k; ++j) {
            ComplexMatrix s = ComplexMatrix::Zero(k, k);
            s(i, j) = r;
            s(j, i) = r;
            basis.push_back(std::move(s));
            ComplexMatrix a = ComplexMatrix::Zero(k, k);
            a(i, j) = iu * r;
            a(j, i) = -iu * r;
            basis.push_back(std::move(a));
        }
    }
    return basis;
}

RealVector hermitian_coordinates(const ComplexMatrix& h) {
    if (h.rows() != h.cols()) throw Error(ErrorCode::DimensionMismatch, "hermitian_coordinates: matrix must be square");
    const int k = static_cast<int>(h.rows());
    const ComplexMatrix cols = basis_columns(k);
    return (cols.adjoint() * vec_F(h)).real();
}

ComplexMatrix from_hermitian_coordinates(const RealVector& coords, int k) {
    const ComplexMatrix cols = basis_columns(k);
    if (coords.size() != cols.cols()) throw Error(ErrorCode::DimensionMismatch, "from_hermitian_coordinates: wrong length");
    return unvec_F(cols * coords.cast<Complex>());
}

RealMatrix hermitian_coefficient_matrix(const BipartiteOperator& a) {
    const ComplexMatrix g = basis_columns(a.k());
    const ComplexMatrix h = basis_columns(a.m());
    return (g.adjoint() * realign(a) * h.conjugate()).real();
}

ComplexMatrix SchmidtDecomposition::reconstruct() const {
    const Index n = static_cast<Index>(k) * m;
    ComplexMatrix out = ComplexMatrix::Zero(n, n);
    for (const auto& t : terms) out += t.coefficient * kron(t.left, t.right);
    return out;
}

bool SchmidtDecomposition::is_symmetric(double tol) const {
    if (k != m) return false;
    return std::all_of(terms.begin(), terms.end(), [tol](const SchmidtTerm& t) {
        return max_abs(t.left - t.right) <= tol;
    });
}

SchmidtDecomposition hermitian_schmidt(const BipartiteOperator& a, double tol, double cutoff) {
    if (!is_hermitian(a.matrix(), tol)) {
        throw Error(ErrorCode::NotHermitian, "hermitian_schmidt: defect " + std::to_string(hermitian_defect(a.matrix())));
    }
    const RealMatrix c = hermitian_coefficient_matrix(a);
    const double scale = c.size() ? c.cwiseAbs().maxCoeff() : 0.0;

    SchmidtDecomposition out;
    out.k = a.k();
    out.m = a.m();
    if (scale == 0.0) return out;

    struct Raw {
        double coefficient;
        RealVector left;
        RealVector right;
    };
    std::vector<Raw> raw;

    const bool symmetric = a.k() == a.m() && (c - c.transpose()).cwiseAbs().maxCoeff() <= 1e-10 * scale;
    if (symmetric) {
        Eigen::SelfAdjointEigenSolver<RealMatrix> eig(0.5 * (c + c.transpose()));
        for (Index i = 0; i < c.rows(); ++i) {
            RealVector g = eig.eigenvectors().col(i);
            normalize_sign(g);
            const double mu = eig.eigenvalues()(i);
            raw.push_back({std::abs(mu), g, mu < 0 ? RealVector(-g) : g});
        }
    } else {
        Eigen::JacobiSVD<RealMatrix> svd(c, Eigen::ComputeFullU | Eigen::ComputeFullV);
        for (Index i = 0; i < svd.singularValues().size(); ++i) {
            RealVector g = svd.matrixU().col(i);
            RealVector d = svd.matrixV().col(i);
            if (normalize_sign(g)) d = -d;
            raw.push_back({svd.singularValues()(i), g, d});
        }
    }

    std::stable_sort(raw.begin(), raw.end(), [](const Raw& x, const Raw& y) { return x.coefficient > y.coefficient; });
    const double top = raw.front().coefficient;
    for (const auto& r : raw) {
        if (r.coefficient <= cutoff * top) continue;
        out.terms.push_back({r.coefficient, from_hermitian_coordinates(r.left, a.k()),
                             from_hermitian_coordinates(r.right, a.m())});
    }
    return out;
}

HermitianVectorBasis hermitian_eigenbasis(const ComplexMatrix& m, double tol) {
    if (m.rows() != m.cols()) throw Error(ErrorCode::DimensionMismatch, "hermitian_eigenbasis: matrix must be square");
    const int k = checked_root(m.rows(), "hermitian_eigenbasis");
    const auto eig = hermitian_eig(m, tol);  // throws NotHermitian
    const double scale = std::max(1.0, hermitian_norm(eig.eigenvalues));

    const ComplexMatrix basis = basis_columns(k);
    for (Index a = 0; a < basis.cols(); ++a) {
        const ComplexMatrix image = unvec_F(m * basis.col(a));
        if (hermitian_defect(image) > tol * scale) {
            throw Error(ErrorCode::NotHermitianPreserving,
                        "image of Hermitian basis vector " + std::to_string(a) + " is not Hermitian");
        }
    }

    HermitianVectorBasis out;
    out.k = k;
    const Index n = m.rows();
    const double cluster_tol = 1e-8 * scale;
    const Complex iu(0.0, 1.0);
    Index start = 0;
    while (start < n) {
        Index end = start + 1;
        while (end < n && eig.eigenvalues(end) - eig.eigenvalues(end - 1) <= cluster_tol) ++end;
        const Index dim = end - start;

        // Hermitian parts of each eigenvector, in real coordinates.
        RealMatrix parts(n, 2 * dim);
        for (Index c = 0; c < dim; ++c) {
            const ComplexMatrix w = unvec_F(eig.eigenvectors.col(start + c));
            parts.col(2 * c) = hermitian_coordinates(0.5 * (w + w.adjoint()));
            parts.col(2 * c + 1) = hermitian_coordinates((w - w.adjoint()) / (2.0 * iu));
        }
        Eigen::JacobiSVD<RealMatrix> svd(parts, Eigen::ComputeThinU);
        if (svd.singularValues().size() < dim || svd.singularValues()(dim - 1) <= 1e-6 * svd.singularValues()(0)) {
            throw Error(ErrorCode::NumericalBreakdown, "Hermitian parts do not span the eigenspace");
        }
        for (Index c = 0; c < dim; ++c) {
            RealVector coords = svd.matrixU().col(c);
            normalize_sign(coords);
            const ComplexVector v = basis * coords.cast<Complex>();
            out.alphas.push_back((v.adjoint() * m * v)(0).real());
            out.vectors.push_back(v);
        }
        start = end;
    }
    return out;
}

}  // namespace spcppt
