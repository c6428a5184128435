#include "spcppt/constructions.hpp"

#include <cmath>

#include <boost/random/mersenne_twister.hpp>
#include <boost/random/normal_distribution.hpp>
#include <boost/random/uniform_real_distribution.hpp>

namespace spcppt {

namespace {

using Index = Eigen::Index;
using Engine = boost::random::mt19937_64;

ComplexMatrix gaussian(int rows, int cols, Engine& rng) {
    boost::random::normal_distribution<double> normal(0.0, 1.0);
    ComplexMatrix g(rows, cols);
    for (Index i = 0; i < rows; ++i)
        for (Index j = 0; j < cols; ++j) {
            const double re = normal(rng);
            const double im = normal(rng);
            g(i, j) = Complex(re, im);
        }
    return g;
}

ComplexMatrix hermitian(int k, Engine& rng) {
    const ComplexMatrix g = gaussian(k, k, rng);
    return 0.5 * (g + g.adjoint());
}

double uniform(double lo, double hi, Engine& rng) {
    return boost::random::uniform_real_distribution<double>(lo, hi)(rng);
}

ComplexMatrix complexify(const RealMatrix& m) { return m.cast<Complex>(); }

// sum_j X_j (x) X_j
ComplexMatrix sum_of_squares(const std::vector<RealMatrix>& family, Index dim) {
    ComplexMatrix out = ComplexMatrix::Zero(dim * dim, dim * dim);
    for (const auto& x : family) {
        const ComplexMatrix cx = complexify(x);
        out += kron(cx, cx);
    }
    return out;
}

}  // namespace

// ---------------------------------------------------------------------------

const std::vector<long long>& counterexample_p_reference() {
    static const std::vector<long long> p{-1, 36, 5420, 104400, -427924, -14134608,
                                          11251344, 415328832, -1106058240, 671846400};
    return p;
}

const std::vector<long long>& counterexample_q_reference() {
    static const std::vector<long long> q{-1, 36, 5420, 104400, -427924, -14134608,
                                          10924160, 415328832, -1106058240, 671846400};
    return q;
}

Counterexample3x3 build_counterexample() {
    Counterexample3x3 ce;
    ce.d = ComplexMatrix::Zero(3, 3);
    ce.d.diagonal() << 1.0, 3.0, -10.0;
    ce.a = ComplexMatrix::Zero(3, 3);
    ce.a(0, 1) = 1.0;
    ce.a(0, 2) = 1.0;
    ce.a(1, 2) = 1.0;
    ce.a -= ce.a.transpose().eval();

    const ComplexMatrix dd = kron(ce.d, ce.d);
    const ComplexMatrix aa = kron(ce.a, ce.a);
    ce.p = char_poly(to_integer_matrix(dd + aa));
    ce.q = char_poly(to_integer_matrix(dd - aa));
    ce.m_p = min_eigenvalue(dd + aa);
    ce.m_q = min_eigenvalue(dd - aa);

    const Complex iu(0.0, 1.0);
    const ComplexMatrix ia = iu * ce.a;
    ce.c = BipartiteOperator(3, 3, std::abs(ce.m_q) * ComplexMatrix::Identity(9, 9) + dd + kron(ia, ia));
    return ce;
}

// ---------------------------------------------------------------------------

SymAsymBases sym_asym_bases(int n) {
    if (n < 1 || n > kMaxDepth) {
        throw Error(ErrorCode::DepthOutOfRange, "sym_asym_bases: n must be in [1, " + std::to_string(kMaxDepth) + "]");
    }
    const double r = 1.0 / std::sqrt(2.0);
    RealMatrix s1(2, 2), s2(2, 2), s3(2, 2), a1(2, 2);
    s1 << r, 0, 0, r;
    s2 << r, 0, 0, -r;
    s3 << 0, r, r, 0;
    a1 << 0, r, -r, 0;
    const std::vector<RealMatrix> seed_sym{s1, s2, s3};

    SymAsymBases out;
    out.n = 1;
    out.symmetric = seed_sym;
    out.antisymmetric = {a1};

    auto kr = [](const RealMatrix& x, const RealMatrix& y) {
        RealMatrix z(x.rows() * y.rows(), x.cols() * y.cols());
        for (Index i = 0; i < x.rows(); ++i)
            for (Index j = 0; j < x.cols(); ++j) z.block(i * y.rows(), j * y.cols(), y.rows(), y.cols()) = x(i, j) * y;
        return z;
    };

    for (int level = 2; level <= n; ++level) {
        SymAsymBases next;
        next.n = level;
        for (const auto& sp : seed_sym)
            for (const auto& sj : out.symmetric) next.symmetric.push_back(kr(sp, sj));
        for (const auto& as : out.antisymmetric) next.symmetric.push_back(kr(a1, as));
        for (const auto& sp : seed_sym)
            for (const auto& as : out.antisymmetric) next.antisymmetric.push_back(kr(sp, as));
        for (const auto& sj : out.symmetric) next.antisymmetric.push_back(kr(a1, sj));
        out = std::move(next);
    }
    return out;
}

FlipFamilyInstance build_flip_family(int n, double alpha) {
    if (n < 1 || n > kMaxDepth) {
        throw Error(ErrorCode::DepthOutOfRange, "build_flip_family: n must be in [1, " + std::to_string(kMaxDepth) + "]");
    }
    FlipFamilyInstance inst;
    inst.n = n;
    inst.k = 1 << n;
    inst.alpha = alpha;
    inst.u = maximally_entangled_vector(inst.k);
    inst.t = flip(inst.k);
    inst.bases = sym_asym_bases(n);

    const Index dim = inst.k;
    const Index n2 = dim * dim;
    const ComplexMatrix uut = inst.u * inst.u.transpose();
    inst.c = BipartiteOperator(inst.k, inst.k, alpha * ComplexMatrix::Identity(n2, n2) + 0.5 * (inst.t.matrix() - uut));

    const ComplexMatrix sym = sum_of_squares(inst.bases.symmetric, dim);
    const ComplexMatrix asym = sum_of_squares(inst.bases.antisymmetric, dim);
    inst.sum_identity_residual = max_abs(uut - (sym + asym));
    inst.flip_identity_residual =
        std::max(max_abs(inst.t.matrix() - partial_transpose_right(BipartiteOperator(inst.k, inst.k, uut)).matrix()),
                 max_abs(inst.t.matrix() - (sym - asym)));
    inst.antisym_form_residual = max_abs(inst.c.matrix() - (alpha * ComplexMatrix::Identity(n2, n2) - asym));
    return inst;
}

FlipDecomposition decompose_flip_family(const FlipFamilyInstance& inst, double tol) {
    FlipDecomposition out;
    const int k = inst.k;
    const Index n2 = static_cast<Index>(k) * k;
    const RealMatrix id_part = RealMatrix::Identity(n2, n2) / static_cast<double>(k);

    out.identity_weight = k * inst.alpha - 0.5 * k * (k - 1);
    RealMatrix total = out.identity_weight * id_part;
    out.worst_bracket_min_eig = std::numeric_limits<double>::infinity();
    out.all_brackets_rank_le_2 = true;
    bool brackets_psd = true;
    for (const auto& a : inst.bases.antisymmetric) {
        RealMatrix aa(n2, n2);
        for (Index i = 0; i < a.rows(); ++i)
            for (Index j = 0; j < a.cols(); ++j) aa.block(i * k, j * k, k, k) = a(i, j) * a;
        // (iA) (x) (iA) = -A (x) A
        const RealMatrix bracket = id_part - aa;
        total += bracket;
        Eigen::SelfAdjointEigenSolver<RealMatrix> eig(bracket, Eigen::EigenvaluesOnly);
        const double lo = eig.eigenvalues()(0);
        out.worst_bracket_min_eig = std::min(out.worst_bracket_min_eig, lo);
        brackets_psd = brackets_psd && lo >= -tol * std::max(1.0, eig.eigenvalues().cwiseAbs().maxCoeff());
        const int rank = tensor_rank(BipartiteOperator(k, k, bracket.cast<Complex>()));
        out.worst_bracket_rank = std::max(out.worst_bracket_rank, rank);
        out.all_brackets_rank_le_2 = out.all_brackets_rank_le_2 && rank <= 2;
    }
    out.max_residual = max_abs(inst.c.matrix() - total.cast<Complex>()) / std::max(1e-300, max_abs(inst.c.matrix()));
    out.valid = out.identity_weight >= -tol * std::max(1.0, std::abs(k * inst.alpha)) && brackets_psd &&
                out.all_brackets_rank_le_2 && out.max_residual <= 1e-10;
    return out;
}

// ---------------------------------------------------------------------------

AntisymFamilyResult antisym_family_classify(const std::vector<RealMatrix>& generators, double alpha, double tol) {
    if (generators.empty()) throw Error(ErrorCode::DimensionMismatch, "antisym_family_classify: no generators");
    const Index k = generators.front().rows();
    for (const auto& b : generators) {
        if (b.rows() != k || b.cols() != k) throw Error(ErrorCode::DimensionMismatch, "antisym_family_classify: size mismatch");
        const double scale = std::max(1.0, b.cwiseAbs().maxCoeff());
        if ((b + b.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale) {
            throw Error(ErrorCode::NotAntisymmetric, "antisym_family_classify: generator is not antisymmetric");
        }
    }

    AntisymFamilyResult out;
    auto& fam = out.family;
    fam.generators = generators;
    fam.alpha = alpha;
    const int kk = static_cast<int>(k);
    // (iB) (x) (iB) = -B (x) B
    fam.a_sum = BipartiteOperator(kk, kk, -sum_of_squares(generators, k));
    const RealVector ev = hermitian_eig(fam.a_sum.matrix(), tol).eigenvalues;
    fam.lambda_min = ev(0);
    fam.lambda_max = ev(ev.size() - 1);
    fam.spectral_bound_holds = fam.lambda_min < 0 && ev.cwiseAbs().maxCoeff() <= std::abs(fam.lambda_min) + 1e-10;
    fam.c = BipartiteOperator(kk, kk, alpha * ComplexMatrix::Identity(k * k, k * k) + fam.a_sum.matrix());

    out.report = classify(fam.c, tol);
    out.threshold_met = alpha >= std::abs(fam.lambda_min) - tol * std::max(1.0, std::abs(fam.lambda_min));
    const bool spc = out.report.spc.value_or(false);
    out.equivalence_holds = out.report.psd == spc && spc == out.report.ppt && out.report.ppt == out.threshold_met;
    return out;
}

// ---------------------------------------------------------------------------

ComplexMatrix random_gaussian_matrix(int rows, int cols, std::uint64_t seed) {
    Engine rng(seed);
    return gaussian(rows, cols, rng);
}

ComplexMatrix random_hermitian(int k, std::uint64_t seed) {
    Engine rng(seed);
    return hermitian(k, rng);
}

RealMatrix random_orthogonal(int n, std::uint64_t seed) {
    Engine rng(seed);
    boost::random::normal_distribution<double> normal(0.0, 1.0);
    RealMatrix g(n, n);
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j) g(i, j) = normal(rng);
    Eigen::HouseholderQR<RealMatrix> qr(g);
    RealMatrix q = qr.householderQ();
    const RealMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Index j = 0; j < n; ++j)
        if (r(j, j) < 0) q.col(j) = -q.col(j);
    return q;
}

RandomSpc random_spc_with_terms(int k, int terms, std::uint64_t seed) {
    if (k < 2 || terms < 1) throw Error(ErrorCode::BadParams, "random_spc: need k >= 2 and terms >= 1");
    Engine rng(seed);
    const Index n = static_cast<Index>(k) * k;
    RandomSpc out;
    ComplexMatrix sum = ComplexMatrix::Zero(n, n);
    for (int i = 0; i < terms; ++i) {
        const ComplexMatrix h = hermitian(k, rng);
        const double weight = uniform(0.1, 1.0, rng);
        sum += weight * kron(h, h);
        out.terms.push_back(std::sqrt(weight) * h);
    }
    const double lo = min_eigenvalue(sum);
    const double c = std::max(0.0, -lo) + uniform(0.0, 1.0, rng);
    sum += c * ComplexMatrix::Identity(n, n);
    out.terms.push_back(std::sqrt(c) * ComplexMatrix::Identity(k, k));
    out.op = BipartiteOperator(k, k, std::move(sum));
    return out;
}

BipartiteOperator random_spc(int k, int terms, std::uint64_t seed) {
    return random_spc_with_terms(k, terms, seed).op;
}

BipartiteOperator random_symmetric_state(int k, std::uint64_t seed) {
    if (k < 2) throw Error(ErrorCode::BadParams, "random_symmetric_state: need k >= 2");
    Engine rng(seed);
    const Index n = static_cast<Index>(k) * k;
    const ComplexMatrix g = gaussian(static_cast<int>(n), static_cast<int>(n), rng);
    const ComplexMatrix p = 0.5 * (ComplexMatrix::Identity(n, n) + flip(k).matrix());
    ComplexMatrix rho = p * (g * g.adjoint()) * p;
    rho = 0.5 * (rho + rho.adjoint());
    rho /= rho.trace().real();
    return {k, k, std::move(rho)};
}

BipartiteOperator random_rank3_psd_2xm(int m, std::uint64_t seed) {
    if (m < 2) throw Error(ErrorCode::BadParams, "random_rank3_psd_2xm: need m >= 2");
    Engine rng(seed);
    const ComplexMatrix id2 = ComplexMatrix::Identity(2, 2);
    for (;;) {
        ComplexMatrix g2 = hermitian(2, rng);
        ComplexMatrix g3 = hermitian(2, rng);
        g2 -= 0.5 * g2.trace() * id2;
        g3 -= 0.5 * g3.trace() * id2;
        const ComplexMatrix h2 = hermitian(m, rng);
        const ComplexMatrix h3 = hermitian(m, rng);
        const ComplexMatrix rest = kron(g2, h2) + kron(g3, h3);
        const double c = std::abs(min_eigenvalue(rest)) + uniform(0.0, 1.0, rng);
        BipartiteOperator a(2, m, c * ComplexMatrix::Identity(2 * m, 2 * m) + rest);
        if (tensor_rank(a) == 3) return a;
    }
}

std::vector<RealMatrix> random_antisymmetric_family(int k, int count, std::uint64_t seed) {
    if (k < 2 || count < 1) throw Error(ErrorCode::BadParams, "random_antisymmetric_family: need k >= 2 and count >= 1");
    Engine rng(seed);
    boost::random::normal_distribution<double> normal(0.0, 1.0);
    std::vector<RealMatrix> out;
    for (int c = 0; c < count; ++c) {
        RealMatrix b = RealMatrix::Zero(k, k);
        for (Index i = 0; i < k; ++i)
            for (Index j = i + 1; j < k; ++j) {
                b(i, j) = normal(rng);
                b(j, i) = -b(i, j);
            }
        out.push_back(std::move(b));
    }
    return out;
}

}  // namespace spcppt
