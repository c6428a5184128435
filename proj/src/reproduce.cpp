#include "spcppt/commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "spcppt/constructions.hpp"
#include "spcppt/json_format.hpp"

namespace spcppt {

namespace {

using nlohmann::json;

constexpr const char* kRefCounterexample = "SPC does not imply PPT in 3x3";
constexpr const char* kRefBases = "flat-spectrum symmetric and antisymmetric bases";
constexpr const char* kRefFlip = "flip family: SPC iff separable";
constexpr const char* kRefSymmetric = "symmetric states: SPC iff PPT";
constexpr const char* kRefSpcPpt = "SPC implies PPT in 2x2";
constexpr const char* kRefRank3 = "tensor rank 3 in 2xm is separable";

std::string sci(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", x);
    return buf;
}

// Lists up to five failing sample seeds.
std::string seeds_detail(const std::vector<std::uint64_t>& seeds) {
    std::ostringstream out;
    out << seeds.size() << " failing";
    for (std::size_t i = 0; i < seeds.size() && i < 5; ++i) out << (i ? ", " : "; seeds ") << seeds[i];
    if (seeds.size() > 5) out << ", ...";
    return out.str();
}

std::string count_detail(std::size_t ok, std::size_t total) {
    return std::to_string(ok) + "/" + std::to_string(total);
}

Assertion finding(std::string name, std::string reference, bool ok, std::string detail = {}) {
    Assertion a = check(std::move(name), std::move(reference), ok, std::move(detail));
    if (!ok) a.status = AssertionStatus::Finding;
    return a;
}

std::vector<int> depths(const ReproduceParams& p) {
    if (!p.n) return {1, 2, 3};
    if (*p.n < 1 || *p.n > kMaxDepth) {
        throw Error(ErrorCode::DepthOutOfRange, "--n must be in [1, " + std::to_string(kMaxDepth) + "]");
    }
    return {*p.n};
}

int sample_count(const ReproduceParams& p, int fallback) {
    const int n = p.samples.value_or(fallback);
    if (n < 1) throw Error(ErrorCode::BadParams, "--samples must be positive");
    return n;
}

std::vector<int> dims(const std::optional<int>& chosen, std::vector<int> fallback, int lo, const char* flag) {
    if (!chosen) return fallback;
    if (*chosen < lo || *chosen > 16) {
        throw Error(ErrorCode::BadParams, std::string(flag) + " must be in [" + std::to_string(lo) + ", 16]");
    }
    return {*chosen};
}

std::vector<long long> to_ll(const std::vector<BigInt>& v) {
    std::vector<long long> out;
    for (const auto& c : v) out.push_back(static_cast<long long>(c));
    return out;
}

// Monic coefficients of prod (x - r_i), highest degree first.
std::vector<double> poly_from_roots(const RealVector& roots) {
    std::vector<double> c{1.0};
    for (Eigen::Index i = 0; i < roots.size(); ++i) {
        c.push_back(0.0);
        for (std::size_t j = c.size() - 1; j > 0; --j) c[j] -= roots(i) * c[j - 1];
    }
    return c;
}

double spectral_norm(const ComplexMatrix& m) {
    return hermitian_norm(hermitian_eig(m).eigenvalues);
}

// ---------------------------------------------------------------------------

void run_counterexample(const ReproduceParams& p, ReportDocument& doc) {
    const Counterexample3x3 ce = build_counterexample();
    const auto ref = kRefCounterexample;
    const std::vector<BigInt> ps = ce.p.signed_form();
    const std::vector<BigInt> qs = ce.q.signed_form();
    const auto& p_ref = counterexample_p_reference();
    const auto& q_ref = counterexample_q_reference();
    doc.results["p"] = to_ll(ps);
    doc.results["q"] = to_ll(qs);
    doc.results["m_p"] = ce.m_p;
    doc.results["m_q"] = ce.m_q;

    doc.assertions.push_back(check("p coefficients match the reference list", ref, to_ll(ps) == p_ref));
    doc.assertions.push_back(check("q coefficients match the reference list", ref, to_ll(qs) == q_ref));

    bool monomial = true;
    for (std::size_t i = 0; i < ps.size(); ++i)
        if (ps.size() - 1 - i != 3) monomial = monomial && ps[i] == qs[i];
    const BigInt c3 = ps[ps.size() - 4] - qs[qs.size() - 4];
    doc.assertions.push_back(check("p - q is a positive multiple of x^3", ref, monomial && c3 > 0,
                                   "coefficient " + c3.str()));
    doc.assertions.push_back(check("p(0) and q(0) are nonzero", ref, ps.back() != 0 && qs.back() != 0));

    const ComplexMatrix dd = kron(ce.d, ce.d);
    const ComplexMatrix aa = kron(ce.a, ce.a);
    const RealVector roots_p = hermitian_eig(dd + aa).eigenvalues;
    const RealVector roots_q = hermitian_eig(dd - aa).eigenvalues;

    // Floating eigenvalues against the exact polynomial.
    const auto from_roots = poly_from_roots(roots_p);
    double worst = 0.0;
    for (std::size_t i = 0; i < from_roots.size(); ++i) {
        const double exact = static_cast<double>(ce.p.monic[i]);
        worst = std::max(worst, std::abs(from_roots[i] - exact) / std::max(1.0, std::abs(exact)));
    }
    doc.assertions.push_back(check("eigenvalues of D(x)D + A(x)A expand to p", ref, worst <= 1e-9,
                                   "max relative coefficient error " + sci(worst)));

    double gap = std::numeric_limits<double>::infinity();
    for (Eigen::Index i = 0; i < roots_p.size(); ++i)
        for (Eigen::Index j = 0; j < roots_q.size(); ++j) gap = std::min(gap, std::abs(roots_p(i) - roots_q(j)));
    doc.assertions.push_back(check("p and q share no root", ref, gap > 1e-6, "closest pair " + sci(gap)));

    doc.assertions.push_back(check("m_p < m_q < 0", ref, ce.m_p < ce.m_q && ce.m_q < 0.0,
                                   "m_p " + format_double(ce.m_p) + ", m_q " + format_double(ce.m_q)));
    const double margin = std::abs(ce.m_q) + ce.m_p;
    doc.assertions.push_back(check("|m_q| + m_p < -1e-6", ref, margin < -1e-6, format_double(margin)));

    const ComplexMatrix& c = ce.c.matrix();
    const double c_norm = spectral_norm(c);
    const double c_min = min_eigenvalue(c);
    doc.assertions.push_back(check("C is PSD", ref, c_min >= -1e-9 * c_norm, "min eigenvalue " + sci(c_min)));
    const bool spc = is_spc(ce.c, p.tol);
    doc.assertions.push_back(check("C is SPC", ref, spc));
    doc.assertions.push_back(check("SPC by Schmidt symmetry agrees", ref, is_spc_by_schmidt(ce.c, p.tol) == spc));
    const int rank = tensor_rank(ce.c);
    doc.assertions.push_back(check("C has tensor rank 3", ref, rank == 3, "rank " + std::to_string(rank)));
    doc.assertions.push_back(check("C is not PPT", ref, !is_ppt(ce.c, p.tol)));
    const double pt_min = min_eigenvalue(partial_transpose_right(ce.c).matrix());
    doc.results["min_eig_partial_transpose"] = pt_min;
    doc.assertions.push_back(check("min eigenvalue of C^t2 equals |m_q| + m_p", ref,
                                   std::abs(pt_min - margin) <= 1e-9 * std::max(1.0, c_norm), format_double(pt_min)));
    doc.classification = classify(ce.c, p.tol);
}

// ---------------------------------------------------------------------------

double gram_defect(const std::vector<RealMatrix>& xs, const std::vector<RealMatrix>& ys, bool same) {
    double worst = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i)
        for (std::size_t j = 0; j < ys.size(); ++j) {
            const double g = (xs[i].transpose() * ys[j]).trace();
            const double target = (same && i == j) ? 1.0 : 0.0;
            worst = std::max(worst, std::abs(g - target));
        }
    return worst;
}

double spectrum_defect(const std::vector<RealMatrix>& xs, bool antisymmetric, double magnitude) {
    const Complex iu(0.0, 1.0);
    double worst = 0.0;
    for (const auto& x : xs) {
        const ComplexMatrix h = antisymmetric ? ComplexMatrix(iu * x.cast<Complex>()) : ComplexMatrix(x.cast<Complex>());
        const RealVector ev = hermitian_eig(h, 1e-12).eigenvalues;
        for (Eigen::Index i = 0; i < ev.size(); ++i) worst = std::max(worst, std::abs(std::abs(ev(i)) - magnitude));
    }
    return worst;
}

void run_bases(const ReproduceParams& p, ReportDocument& doc) {
    for (int n : depths(p)) {
        const SymAsymBases b = sym_asym_bases(n);
        const int k = 1 << n;
        const std::string tag = " (n=" + std::to_string(n) + ")";
        const std::size_t want_s = static_cast<std::size_t>(k / 2) * (k + 1);
        const std::size_t want_a = static_cast<std::size_t>(k / 2) * (k - 1);
        doc.assertions.push_back(check("basis sizes" + tag, kRefBases,
                                       b.symmetric.size() == want_s && b.antisymmetric.size() == want_a,
                                       std::to_string(b.symmetric.size()) + " + " +
                                           std::to_string(b.antisymmetric.size())));
        double sym_defect = 0.0;
        for (const auto& s : b.symmetric) sym_defect = std::max(sym_defect, (s - s.transpose()).cwiseAbs().maxCoeff());
        for (const auto& a : b.antisymmetric)
            sym_defect = std::max(sym_defect, (a + a.transpose()).cwiseAbs().maxCoeff());
        doc.assertions.push_back(check("symmetry types" + tag, kRefBases, sym_defect <= 1e-12, sci(sym_defect)));
        const double gs = gram_defect(b.symmetric, b.symmetric, true);
        const double ga = gram_defect(b.antisymmetric, b.antisymmetric, true);
        const double gx = gram_defect(b.symmetric, b.antisymmetric, false);
        doc.assertions.push_back(check("symmetric family orthonormal" + tag, kRefBases, gs <= 1e-12, sci(gs)));
        doc.assertions.push_back(check("antisymmetric family orthonormal" + tag, kRefBases, ga <= 1e-12, sci(ga)));
        doc.assertions.push_back(check("families mutually orthogonal" + tag, kRefBases, gx <= 1e-12, sci(gx)));
        const double magnitude = 1.0 / std::sqrt(static_cast<double>(k));
        const double es = std::max(spectrum_defect(b.symmetric, false, magnitude),
                                   spectrum_defect(b.antisymmetric, true, magnitude));
        doc.assertions.push_back(
            check("eigenvalue magnitudes equal 2^(-n/2)" + tag, kRefBases, es <= 1e-12, sci(es)));
    }
}

// ---------------------------------------------------------------------------

void run_flip_family(const ReproduceParams& p, ReportDocument& doc) {
    json per_n = json::array();
    for (int n : depths(p)) {
        const int k = 1 << n;
        const double threshold = 0.5 * (k - 1);
        const double alpha = p.alpha.value_or(threshold);
        const FlipFamilyInstance inst = build_flip_family(n, alpha);
        const std::string tag = " (n=" + std::to_string(n) + ")";

        doc.assertions.push_back(check("uu^t = sum S(x)S + sum A(x)A" + tag, kRefFlip,
                                       inst.sum_identity_residual <= 1e-10, sci(inst.sum_identity_residual)));
        doc.assertions.push_back(check("T = (uu^t)^t2 = sum S(x)S - sum A(x)A" + tag, kRefFlip,
                                       inst.flip_identity_residual <= 1e-10, sci(inst.flip_identity_residual)));
        doc.assertions.push_back(check("C = alpha Id - sum A(x)A" + tag, kRefFlip, inst.antisym_form_residual <= 1e-10,
                                       sci(inst.antisym_form_residual)));

        const ComplexMatrix half = 0.5 * (inst.t.matrix() - inst.u * inst.u.transpose());
        const RealVector ev = hermitian_eig(half, 1e-12).eigenvalues;
        double spectrum = 0.0;
        for (Eigen::Index i = 0; i < ev.size(); ++i) {
            const double d = std::min({std::abs(ev(i) + threshold), std::abs(ev(i) - 0.5), std::abs(ev(i) + 0.5)});
            spectrum = std::max(spectrum, d);
        }
        doc.assertions.push_back(check("spectrum of (T - uu^t)/2 in {-(k-1)/2, -1/2, 1/2}" + tag, kRefFlip,
                                       spectrum <= 1e-12, sci(spectrum)));

        const ClassificationReport r = classify(inst.c, p.tol);
        const bool expect_psd = alpha >= threshold - p.tol * std::max(1.0, threshold);
        doc.assertions.push_back(check("C is PSD exactly when alpha >= (k-1)/2" + tag, kRefFlip, r.psd == expect_psd,
                                       "alpha " + format_double(alpha) + ", min eigenvalue " + sci(r.min_eig)));
        doc.assertions.push_back(finding("SPC equals PPT" + tag, kRefFlip, r.spc.value_or(false) == r.ppt));
        if (r.psd) {
            doc.assertions.push_back(finding("C is SPC and PPT" + tag, kRefFlip, r.spc.value_or(false) && r.ppt));
            const FlipDecomposition dec = decompose_flip_family(inst, p.tol);
            doc.assertions.push_back(check("separable decomposition into PSD rank-2 brackets" + tag, kRefFlip,
                                           dec.valid, "residual " + sci(dec.max_residual) + ", worst bracket rank " +
                                                          std::to_string(dec.worst_bracket_rank)));
        }
        const FlipFamilyInstance below = build_flip_family(n, threshold - 0.01);
        doc.assertions.push_back(
            check("C is not PSD at (k-1)/2 - 0.01" + tag, kRefFlip, !is_psd(below.c.matrix(), p.tol)));
        per_n.push_back({{"n", n},
                         {"alpha", alpha},
                         {"threshold", threshold},
                         {"min_eig", r.min_eig},
                         {"psd", r.psd},
                         {"spc", r.spc.value_or(false)},
                         {"ppt", r.ppt}});
    }
    doc.results["instances"] = per_n;
}

// ---------------------------------------------------------------------------

struct SymmetricSample {
    bool symmetric = false;
    bool spc = false;
    bool ppt = false;
};

void run_tg_sweep(const ReproduceParams& p, ReportDocument& doc) {
    const int samples = sample_count(p, 1000);
    json per_k = json::array();
    for (int k : dims(p.k, {2, 3, 4}, 2, "--k")) {
        const auto rows = parallel_map(
            samples,
            [&](std::size_t i) {
                const BipartiteOperator rho = random_symmetric_state(k, p.seed + i);
                SymmetricSample s;
                s.symmetric = is_symmetric_state(rho, 1e-12) && std::abs(rho.matrix().trace().real() - 1.0) <= 1e-12;
                s.spc = is_spc(rho, p.tol);
                s.ppt = is_ppt(rho, p.tol);
                return s;
            },
            p.threads);
        std::vector<std::uint64_t> bad_construction, disagree;
        std::size_t ppt_count = 0;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (!rows[i].symmetric) bad_construction.push_back(p.seed + i);
            if (rows[i].spc != rows[i].ppt) disagree.push_back(p.seed + i);
            ppt_count += rows[i].ppt;
        }
        const std::string tag = " (k=" + std::to_string(k) + ")";
        doc.assertions.push_back(check("samples are symmetric unit-trace states" + tag, kRefSymmetric,
                                       bad_construction.empty(),
                                       bad_construction.empty() ? count_detail(rows.size(), rows.size())
                                                                : seeds_detail(bad_construction)));
        doc.assertions.push_back(finding("SPC equals PPT on every sample" + tag, kRefSymmetric, disagree.empty(),
                                         disagree.empty() ? count_detail(rows.size(), rows.size())
                                                          : seeds_detail(disagree)));
        per_k.push_back({{"k", k}, {"samples", samples}, {"ppt", ppt_count}, {"disagreements", disagree.size()}});
    }
    doc.results["sweeps"] = per_k;
}

// ---------------------------------------------------------------------------

struct SpcSample {
    bool spc = false;
    bool ppt = false;
    bool witness = false;
    double ratio = 0.0;  // min eig(A^t2) / ||A||
};

void run_spc_ppt_sweep(const ReproduceParams& p, ReportDocument& doc) {
    const int samples = sample_count(p, 10000);
    const int k = p.k.value_or(2);
    if (k != 2) throw Error(ErrorCode::BadParams, "spc-ppt-sweep runs on 2x2 only (--k 2)");
    const auto rows = parallel_map(
        samples,
        [&](std::size_t i) {
            const RandomSpc sample = random_spc_with_terms(2, 1 + static_cast<int>(i % 4), p.seed + i);
            const ComplexMatrix& a = sample.op.matrix();
            SpcSample s;
            s.spc = is_spc(sample.op, p.tol);
            const double norm = spectral_norm(a);
            s.ratio = min_eigenvalue(partial_transpose_right(sample.op).matrix()) / norm;
            s.ppt = s.ratio >= -1e-9;
            s.witness = schur_witness(sample.terms, p.tol).psd;
            return s;
        },
        p.threads);
    std::vector<std::uint64_t> not_spc, not_ppt, no_witness;
    double worst = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (!rows[i].spc) not_spc.push_back(p.seed + i);
        if (!rows[i].ppt) not_ppt.push_back(p.seed + i);
        if (!rows[i].witness) no_witness.push_back(p.seed + i);
        worst = std::min(worst, rows[i].ratio);
    }
    doc.assertions.push_back(check("generated samples are SPC", kRefSpcPpt, not_spc.empty(),
                                   not_spc.empty() ? count_detail(rows.size(), rows.size()) : seeds_detail(not_spc)));
    doc.assertions.push_back(finding("every sample is PPT (min eig of A^t2 >= -1e-9 ||A||)", kRefSpcPpt,
                                     not_ppt.empty(),
                                     not_ppt.empty() ? count_detail(rows.size(), rows.size()) : seeds_detail(not_ppt)));
    doc.assertions.push_back(finding("Schur product of the terms is PSD", "Schur-product witness", no_witness.empty(),
                                     no_witness.empty() ? count_detail(rows.size(), rows.size())
                                                        : seeds_detail(no_witness)));
    doc.results["samples"] = samples;
    doc.results["ppt"] = rows.size() - not_ppt.size();
    doc.results["worst_min_eig_ratio"] = worst;
}

// ---------------------------------------------------------------------------

struct Rank3Sample {
    bool reduced = false;
    std::string error;
    double invariance = 0.0;
    bool converged = false;
    bool ppt = false;
    bool certificates_agree = true;
};

void run_rank3_sweep(const ReproduceParams& p, ReportDocument& doc) {
    const int samples = sample_count(p, 1000);
    json per_m = json::array();
    for (int m : dims(p.m, {2, 3, 4}, 2, "--m")) {
        const auto rows = parallel_map(
            samples,
            [&](std::size_t i) {
                const BipartiteOperator a = random_rank3_psd_2xm(m, p.seed + i);
                Rank3Sample s;
                try {
                    const EpsilonLimitCheck lim = certify_rank3_limit(a, {1e-2, 1e-3, 1e-4}, p.tol);
                    s.reduced = true;
                    s.invariance = *std::max_element(lim.invariance_residuals.begin(), lim.invariance_residuals.end());
                    s.converged = lim.converged;
                } catch (const Error& e) {
                    s.error = std::string(to_string(e.code()));
                }
                const ClassificationReport r = classify(a, p.tol);
                s.ppt = r.ppt;
                if (m == 2) {
                    const auto& c = r.certificates;
                    s.certificates_agree =
                        std::find(c.begin(), c.end(), Certificate::Ppt2x2) != c.end() &&
                        std::find(c.begin(), c.end(), Certificate::RankAtMost3In2xM) != c.end();
                }
                return s;
            },
            p.threads);
        std::vector<std::uint64_t> failed, not_invariant, not_converged, not_ppt, disagree;
        double worst = 0.0;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const auto& s = rows[i];
            if (!s.reduced) failed.push_back(p.seed + i);
            if (s.reduced && s.invariance > 1e-8) not_invariant.push_back(p.seed + i);
            if (s.reduced && !s.converged) not_converged.push_back(p.seed + i);
            if (!s.ppt) not_ppt.push_back(p.seed + i);
            if (!s.certificates_agree) disagree.push_back(p.seed + i);
            worst = std::max(worst, s.invariance);
        }
        const std::string tag = " (m=" + std::to_string(m) + ")";
        const auto all = count_detail(rows.size(), rows.size());
        doc.assertions.push_back(check("reduction succeeds" + tag, kRefRank3, failed.empty(),
                                       failed.empty() ? all : seeds_detail(failed)));
        doc.assertions.push_back(check("||F^t1 - F|| <= 1e-8 ||F||" + tag, kRefRank3, not_invariant.empty(),
                                       "worst " + sci(worst)));
        doc.assertions.push_back(check("perturbed operators converge to A" + tag, kRefRank3, not_converged.empty(),
                                       not_converged.empty() ? all : seeds_detail(not_converged)));
        if (m <= 3) {
            doc.assertions.push_back(
                finding("every sample is PPT" + tag, kRefRank3, not_ppt.empty(), not_ppt.empty() ? all : seeds_detail(not_ppt)));
        }
        if (m == 2) {
            doc.assertions.push_back(check("PPT-2x2 and RANK<=3-IN-2xM certificates agree" + tag, kRefRank3,
                                           disagree.empty(), disagree.empty() ? all : seeds_detail(disagree)));
        }
        per_m.push_back({{"m", m}, {"samples", samples}, {"worst_invariance_residual", worst}});
    }
    doc.results["sweeps"] = per_m;
}

}  // namespace

const std::vector<std::string>& reproduce_targets() {
    static const std::vector<std::string> targets{"counterexample", "flip-family",  "bases",
                                                  "tg-sweep",       "spc-ppt-sweep", "rank3-sweep"};
    return targets;
}

ReportDocument reproduce(const ReproduceParams& p) {
    if (!(p.tol > 0.0)) throw Error(ErrorCode::BadParams, "--tol must be positive");
    ReportDocument doc;
    doc.command = "reproduce " + p.target;
    doc.tolerance = p.tol;
    doc.params["target"] = p.target;
    doc.params["seed"] = p.seed;
    if (p.samples) doc.params["samples"] = *p.samples;
    if (p.n) doc.params["n"] = *p.n;
    if (p.k) doc.params["k"] = *p.k;
    if (p.m) doc.params["m"] = *p.m;
    if (p.alpha) doc.params["alpha"] = *p.alpha;
    doc.params["tol"] = p.tol;
    doc.input_digest = sha256_digest(to_canonical_json(doc.params));

    if (p.target == "counterexample") {
        run_counterexample(p, doc);
    } else if (p.target == "bases") {
        run_bases(p, doc);
    } else if (p.target == "flip-family") {
        run_flip_family(p, doc);
    } else if (p.target == "tg-sweep") {
        run_tg_sweep(p, doc);
    } else if (p.target == "spc-ppt-sweep") {
        run_spc_ppt_sweep(p, doc);
    } else if (p.target == "rank3-sweep") {
        run_rank3_sweep(p, doc);
    } else {
        throw Error(ErrorCode::UnknownTarget, "unknown target '" + p.target + "'");
    }
    return doc;
}

}  // namespace spcppt
