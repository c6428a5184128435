#include "spcppt/commands.hpp"

#include <cstdio>

#include "spcppt/matrix_file.hpp"

namespace spcppt {

namespace {

std::string sci(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", x);
    return buf;
}

bool exactly_real_diagonal(const ComplexMatrix& d) {
    for (Eigen::Index i = 0; i < d.rows(); ++i)
        for (Eigen::Index j = 0; j < d.cols(); ++j) {
            if (d(i, j).imag() != 0.0) return false;
            if (i != j && d(i, j).real() != 0.0) return false;
        }
    return true;
}

}  // namespace

ReportDocument analyze_report(std::string_view file_text, double tol) {
    const BipartiteOperator a = parse_matrix_file(file_text).to_operator();
    if (!is_hermitian(a.matrix(), tol)) {
        throw Error(ErrorCode::NotHermitian, "analyze: input matrix is not Hermitian");
    }
    ReportDocument doc;
    doc.command = "analyze";
    doc.input_digest = sha256_digest(file_text);
    doc.tolerance = tol;
    doc.classification = classify(a, tol);
    doc.schmidt = hermitian_schmidt(a, tol);

    const RealVector sv = realignment_singular_values(a);
    doc.results["realignment_singular_values"] = std::vector<double>(sv.data(), sv.data() + sv.size());

    const double norm = a.matrix().norm();
    const double recon = (doc.schmidt->reconstruct() - a.matrix()).norm() / std::max(norm, 1e-300);
    doc.results["schmidt_reconstruction_residual"] = recon;
    doc.assertions.push_back(check("Schmidt terms reconstruct the input", "Hermitian Schmidt decomposition",
                                   recon <= 1e-9, "relative residual " + sci(recon)));

    const auto& r = *doc.classification;
    if (r.psd && a.is_square_split()) {
        const bool by_schmidt = is_spc_by_schmidt(a, tol);
        doc.assertions.push_back(check("SPC by realignment agrees with SPC by Schmidt symmetry",
                                       "SPC iff S(A^t2) is PSD", by_schmidt == r.spc.value_or(false)));
        if (a.k() == 2 && r.spc.value_or(false)) {
            Assertion claim = check("SPC input is PPT", "SPC implies PPT in 2x2", r.ppt);
            if (!r.ppt) claim.status = AssertionStatus::Finding;
            doc.assertions.push_back(std::move(claim));
        }
    }
    if (r.psd && a.k() == 2 && r.tensor_rank <= 3) {
        Assertion claim = check("tensor rank <= 3 input is PPT", "tensor rank 3 in 2xm is separable", r.ppt);
        if (!r.ppt) claim.status = AssertionStatus::Finding;
        doc.assertions.push_back(std::move(claim));
    }
    return doc;
}

ReportDocument canonical_report(std::string_view file_text, CanonicalMode mode, double tol, double epsilon) {
    const BipartiteOperator a = parse_matrix_file(file_text).to_operator();
    ReportDocument doc;
    doc.command = "canonical";
    doc.input_digest = sha256_digest(file_text);
    doc.tolerance = tol;
    const double norm = std::max(a.matrix().norm(), 1e-300);

    if (mode == CanonicalMode::Canonical) {
        doc.params["mode"] = "canonical";
        const CanonicalFormSPC2 form = spc_canonical_2x2(a, tol);
        const double residual = (form.reconstruct().matrix() - a.matrix()).norm() / norm;
        doc.results["reconstruction_residual"] = residual;
        const std::string ref = "canonical form of rank-4 SPC in 2x2";
        doc.assertions.push_back(
            check("canonical form reconstructs the input", ref, residual <= 1e-8, "relative residual " + sci(residual)));
        doc.assertions.push_back(check("lambda is positive", ref, form.lambda > 0.0));
        doc.assertions.push_back(check("D is exactly real diagonal", ref, exactly_real_diagonal(form.d)));
        doc.assertions.push_back(check("gamma and delta are Hermitian", ref,
                                       is_hermitian(form.gamma, 1e-12) && is_hermitian(form.delta, 1e-12)));
        const SchurWitness w = schur_witness(form.terms(), tol);
        doc.assertions.push_back(check("Schur product of the terms is PSD", "Schur-product witness", w.psd));
        doc.canonical = form;
        return doc;
    }

    doc.params["mode"] = "reduce";
    doc.params["epsilon"] = epsilon;
    const ReductionChain chain = rank3_reduce(a, epsilon, tol);
    const double lt = chain.left_transpose_residual();
    const double conj = chain.conjugation_residual();
    const double dist = (chain.perturbed.matrix() - a.matrix()).norm() / norm;
    doc.results["perturbation_distance"] = dist;
    const std::string ref = "tensor rank 3 in 2xm is separable";
    doc.assertions.push_back(
        check("output is invariant under left partial transpose", ref, lt <= 1e-8, "relative residual " + sci(lt)));
    doc.assertions.push_back(check("conjugated output matches the structured sum", ref, conj <= 1e-8,
                                   "relative residual " + sci(conj)));
    doc.assertions.push_back(check("output is PSD", ref, is_psd(chain.output.matrix(), tol)));
    doc.reduction = chain;
    return doc;
}

}  // namespace spcppt
