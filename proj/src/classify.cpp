#include "spcppt/classify.hpp"

#include <cmath>
#include <limits>

namespace spcppt {

namespace {

void require_state(const BipartiteOperator& a, double tol, const char* who) {
    if (!is_psd(a.matrix(), tol)) {
        throw Error(ErrorCode::NotAState, std::string(who) + ": input is not positive semidefinite");
    }
}

bool psd_from_eigenvalues(const RealVector& ev, double tol) {
    return ev.size() == 0 || ev(0) >= -tol * std::max(1.0, hermitian_norm(ev));
}

}  // namespace

std::string_view to_string(Separability s) noexcept {
    switch (s) {
        case Separability::Separable: return "SEPARABLE";
        case Separability::Entangled: return "ENTANGLED";
        case Separability::Undecided: return "UNDECIDED";
    }
    return "UNDECIDED";
}

std::string_view to_string(Certificate c) noexcept {
    switch (c) {
        case Certificate::Ppt2x2: return "PPT-2x2";
        case Certificate::Ppt2x3: return "PPT-2x3";
        case Certificate::RankAtMost2: return "RANK<=2";
        case Certificate::RankAtMost3In2xM: return "RANK<=3-IN-2xM";
        case Certificate::ExplicitDecomposition: return "EXPLICIT-DECOMPOSITION";
        case Certificate::NotPpt: return "NOT-PPT";
        case Certificate::None: return "NONE";
    }
    return "NONE";
}

bool is_ppt(const BipartiteOperator& a, double tol) {
    require_state(a, tol, "is_ppt");
    return is_psd(partial_transpose_right(a).matrix(), tol);
}

bool is_spc(const BipartiteOperator& a, double tol) {
    if (!a.is_square_split()) throw Error(ErrorCode::DimensionMismatch, "is_spc requires k == m");
    require_state(a, tol, "is_spc");
    const ComplexMatrix realigned = realign_S(partial_transpose_right(a));
    return is_psd(realigned, tol);
}

bool is_spc_by_schmidt(const BipartiteOperator& a, double tol) {
    if (!a.is_square_split()) throw Error(ErrorCode::DimensionMismatch, "is_spc_by_schmidt requires k == m");
    require_state(a, tol, "is_spc_by_schmidt");
    const auto decomposition = hermitian_schmidt(a, tol);
    // Factors have unit norm, so an absolute comparison is scale free.
    return decomposition.is_symmetric(std::sqrt(tol));
}

bool is_symmetric_state(const BipartiteOperator& a, double tol) {
    if (!a.is_square_split()) return false;
    const ComplexMatrix& m = a.matrix();
    const ComplexMatrix t = flip(a.k()).matrix();
    const double norm = m.norm();
    return (m * t - m).norm() <= tol * norm && (t * m - m).norm() <= tol * norm;
}

SchurWitness schur_witness(const std::vector<ComplexMatrix>& terms, double tol) {
    if (terms.empty()) throw Error(ErrorCode::DimensionMismatch, "schur_witness: no terms");
    const auto n = terms.front().rows();
    SchurWitness out{ComplexMatrix::Zero(n, n), false};
    for (const auto& t : terms) {
        if (t.rows() != n || t.cols() != n) throw Error(ErrorCode::DimensionMismatch, "schur_witness: size mismatch");
        if (!is_hermitian(t, tol)) throw Error(ErrorCode::NotHermitian, "schur_witness: term is not Hermitian");
        out.matrix += t.cwiseProduct(t.transpose());
    }
    out.psd = is_psd(out.matrix, tol);
    return out;
}

ClassificationReport classify(const BipartiteOperator& a, double tol) {
    ClassificationReport r;
    r.k = a.k();
    r.m = a.m();
    r.hermitian = is_hermitian(a.matrix(), tol);
    r.tensor_rank = tensor_rank(a);
    r.min_eig = std::numeric_limits<double>::quiet_NaN();
    r.min_eig_pt = std::numeric_limits<double>::quiet_NaN();

    if (r.hermitian) {
        const RealVector ev = hermitian_eig(a.matrix(), tol).eigenvalues;
        const RealVector ev_pt = hermitian_eig(partial_transpose_right(a).matrix(), tol).eigenvalues;
        r.min_eig = ev(0);
        r.min_eig_pt = ev_pt(0);
        r.psd = psd_from_eigenvalues(ev, tol);
        r.ppt = r.psd && psd_from_eigenvalues(ev_pt, tol);
    }
    if (a.is_square_split()) {
        r.spc = r.psd && is_spc(a, tol);
        r.symmetric_state = is_symmetric_state(a, tol);
    }

    if (!r.ppt) {
        r.separability = Separability::Entangled;
        r.certificate = Certificate::NotPpt;
        r.certificates = {Certificate::NotPpt};
        return r;
    }
    if (r.tensor_rank <= 2) r.certificates.push_back(Certificate::RankAtMost2);
    if (r.k == 2 && r.tensor_rank <= 3) r.certificates.push_back(Certificate::RankAtMost3In2xM);
    if (r.k == 2 && r.m == 2) r.certificates.push_back(Certificate::Ppt2x2);
    if ((r.k == 2 && r.m == 3) || (r.k == 3 && r.m == 2)) r.certificates.push_back(Certificate::Ppt2x3);

    if (r.certificates.empty()) {
        r.separability = Separability::Undecided;
        r.certificate = Certificate::None;
    } else {
        r.separability = Separability::Separable;
        r.certificate = r.certificates.front();
    }
    return r;
}

}  // namespace spcppt
