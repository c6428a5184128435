#include "spcppt/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include <openssl/evp.h>

#include "spcppt/json_format.hpp"

namespace spcppt {

namespace {

using nlohmann::json;

json real_rows(const RealMatrix& m) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

json real_list(const RealVector& v) {
    json out = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i));
    return out;
}

json complex_scalar(Complex z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

json nullable(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

json schmidt_json(const SchmidtDecomposition& s) {
    json terms = json::array();
    for (const auto& t : s.terms) {
        terms.push_back({{"coefficient", t.coefficient}, {"left", matrix_json(t.left)}, {"right", matrix_json(t.right)}});
    }
    return {{"k", s.k}, {"m", s.m}, {"symmetric", s.is_symmetric()}, {"terms", terms}};
}

json canonical_json(const CanonicalFormSPC2& c) {
    return {{"lambda", c.lambda},
            {"d", matrix_json(c.d)},
            {"gamma", matrix_json(c.gamma)},
            {"delta", matrix_json(c.delta)},
            {"mu", c.mu},
            {"coeff_gamma", c.coeff_r},
            {"coeff_delta", c.coeff_s}};
}

json reduction_json(const ReductionChain& r) {
    return {{"epsilon", r.epsilon},
            {"d", real_list(r.d)},
            {"a", r.a},
            {"c", r.c},
            {"b", complex_scalar(r.b)},
            {"r", matrix_json(r.r)},
            {"u", matrix_json(r.u)},
            {"v", matrix_json(r.v)},
            {"l", matrix_json(r.l)},
            {"output", matrix_json(r.output.matrix())},
            {"left_transpose_residual", r.left_transpose_residual()},
            {"conjugation_residual", r.conjugation_residual()}};
}

}  // namespace

std::string_view to_string(AssertionStatus s) noexcept {
    switch (s) {
        case AssertionStatus::Pass: return "PASS";
        case AssertionStatus::Fail: return "FAIL";
        case AssertionStatus::Finding: return "FINDING";
    }
    return "FAIL";
}

Assertion check(std::string name, std::string reference, bool ok, std::string detail) {
    return {std::move(name), std::move(reference), ok ? AssertionStatus::Pass : AssertionStatus::Fail, std::move(detail)};
}

int ReportDocument::exit_code() const {
    for (const auto& a : assertions)
        if (a.status != AssertionStatus::Pass) return 1;
    return 0;
}

json matrix_json(const ComplexMatrix& m) {
    return {{"re", real_rows(m.real())}, {"im", real_rows(m.imag())}};
}

json classification_json(const ClassificationReport& r) {
    json certs = json::array();
    for (auto c : r.certificates) certs.push_back(std::string(to_string(c)));
    json out{{"k", r.k},
             {"m", r.m},
             {"hermitian", r.hermitian},
             {"psd", r.psd},
             {"ppt", r.ppt},
             {"tensor_rank", r.tensor_rank},
             {"min_eig", nullable(r.min_eig)},
             {"min_eig_pt", nullable(r.min_eig_pt)},
             {"separability", std::string(to_string(r.separability))},
             {"certificate", std::string(to_string(r.certificate))},
             {"certificates", certs}};
    out["spc"] = r.spc ? json(*r.spc) : json(nullptr);
    out["symmetric_state"] = r.symmetric_state ? json(*r.symmetric_state) : json(nullptr);
    return out;
}

json to_json(const ReportDocument& doc) {
    json out{{"command", doc.command},
             {"input_digest", doc.input_digest},
             {"tolerance", doc.tolerance},
             {"params", doc.params},
             {"results", doc.results}};
    if (doc.classification) out["classification"] = classification_json(*doc.classification);
    if (doc.schmidt) out["schmidt"] = schmidt_json(*doc.schmidt);
    if (doc.canonical) out["canonical"] = canonical_json(*doc.canonical);
    if (doc.reduction) out["reduction"] = reduction_json(*doc.reduction);
    json assertions = json::array();
    std::size_t passed = 0;
    for (const auto& a : doc.assertions) {
        assertions.push_back({{"name", a.name},
                              {"reference", a.reference},
                              {"status", std::string(to_string(a.status))},
                              {"detail", a.detail}});
        passed += a.status == AssertionStatus::Pass;
    }
    out["assertions"] = assertions;
    out["summary"] = {{"total", doc.assertions.size()}, {"passed", passed}, {"exit_code", doc.exit_code()}};
    if (doc.elapsed_ms) out["elapsed_ms"] = *doc.elapsed_ms;
    return out;
}

std::string render_json(const ReportDocument& doc) { return to_canonical_json(to_json(doc)); }

std::string render_text(const ReportDocument& doc) {
    std::ostringstream out;
    out << "command: " << doc.command << "\n";
    out << "input: " << doc.input_digest << "\n";
    out << "tolerance: " << format_double(doc.tolerance) << "\n";
    if (doc.classification) {
        const auto& r = *doc.classification;
        auto tri = [](const std::optional<bool>& b) { return b ? (*b ? "true" : "false") : "n/a"; };
        out << "dimensions: " << r.k << " x " << r.m << "\n";
        out << "hermitian: " << (r.hermitian ? "true" : "false") << "  psd: " << (r.psd ? "true" : "false")
            << "  ppt: " << (r.ppt ? "true" : "false") << "  spc: " << tri(r.spc)
            << "  symmetric: " << tri(r.symmetric_state) << "\n";
        out << "tensor rank: " << r.tensor_rank << "\n";
        out << "min eigenvalue: " << format_double(r.min_eig) << "  of partial transpose: "
            << format_double(r.min_eig_pt) << "\n";
        out << "verdict: " << to_string(r.separability) << " (" << to_string(r.certificate) << ")\n";
    }
    if (doc.schmidt) {
        out << "schmidt coefficients:";
        for (const auto& t : doc.schmidt->terms) out << " " << format_double(t.coefficient);
        out << "\n";
    }
    if (doc.canonical) {
        out << "canonical: lambda " << format_double(doc.canonical->lambda) << ", D diag ("
            << format_double(doc.canonical->d(0, 0).real()) << ", " << format_double(doc.canonical->d(1, 1).real())
            << ")\n";
    }
    if (doc.reduction) {
        out << "reduction: epsilon " << format_double(doc.reduction->epsilon) << ", left-transpose residual "
            << format_double(doc.reduction->left_transpose_residual()) << "\n";
    }
    std::size_t passed = 0;
    for (const auto& a : doc.assertions) {
        out << "[" << to_string(a.status) << "] " << a.name << " -- " << a.reference;
        if (!a.detail.empty()) out << " (" << a.detail << ")";
        out << "\n";
        passed += a.status == AssertionStatus::Pass;
    }
    out << "summary: " << passed << "/" << doc.assertions.size() << " passed\n";
    if (doc.elapsed_ms) out << "elapsed: " << format_double(*doc.elapsed_ms) << " ms\n";
    return out.str();
}

int exit_code_for(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::ParseError:
            return 2;
        case ErrorCode::NotHermitian:
        case ErrorCode::DimensionMismatch:
        case ErrorCode::NotAState:
        case ErrorCode::NotHermitianPreserving:
        case ErrorCode::DepthOutOfRange:
        case ErrorCode::NotAntisymmetric:
        case ErrorCode::BadParams:
        case ErrorCode::UnknownTarget:
            return 3;
        case ErrorCode::ConvergenceFailure:
        case ErrorCode::WrongRank:
        case ErrorCode::DegenerateD:
        case ErrorCode::ZeroOffDiagonal:
        case ErrorCode::NotSPC:
        case ErrorCode::RankNot4:
        case ErrorCode::NumericalBreakdown:
            return 4;
    }
    return 4;
}

std::string sha256_digest(std::string_view bytes) {
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr);
    std::string out = "sha256:";
    char hex[3];
    for (unsigned int i = 0; i < len; ++i) {
        std::snprintf(hex, sizeof hex, "%02x", md[i]);
        out += hex;
    }
    return out;
}

}  // namespace spcppt
