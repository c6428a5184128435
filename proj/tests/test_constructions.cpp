#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "oracles.hpp"
#include "spcppt/constructions.hpp"
#include "spcppt/sweep.hpp"

using namespace spcppt;

namespace {

ErrorCode code_of(auto&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an error");
    return ErrorCode::ParseError;
}

double gram_defect(const std::vector<RealMatrix>& xs) {
    double worst = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i)
        for (std::size_t j = 0; j < xs.size(); ++j)
            worst = std::max(worst, std::abs((xs[i].transpose() * xs[j]).trace() - (i == j ? 1.0 : 0.0)));
    return worst;
}

RealMatrix rkron(const RealMatrix& a, const RealMatrix& b) {
    return oracle::kron(a.cast<Complex>(), b.cast<Complex>()).real();
}

}  // namespace

TEST_CASE("counterexample polynomials match the reference lists") {
    const auto ce = build_counterexample();
    const auto p = ce.p.signed_form(), q = ce.q.signed_form();
    const auto& pr = counterexample_p_reference();
    const auto& qr = counterexample_q_reference();
    REQUIRE(p.size() == pr.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        CHECK(p[i] == pr[i]);
        CHECK(q[i] == qr[i]);
    }
    CHECK(q[6] == 10924160);
}

TEST_CASE("counterexample inputs") {
    const auto ce = build_counterexample();
    CHECK(ce.d.diagonal() == ComplexVector((ComplexVector(3) << 1, 3, -10).finished()));
    CHECK(ce.a(0, 1) == Complex(1.0));
    CHECK(ce.a(0, 2) == Complex(1.0));
    CHECK(ce.a(1, 2) == Complex(1.0));
    CHECK(ce.a == ComplexMatrix(-ce.a.transpose()));
}

TEST_CASE("counterexample eigenvalue comparison") {
    const auto ce = build_counterexample();
    // Oracle: smallest eigenvalue from a separate dense solver on the real matrices.
    const RealMatrix dd = rkron(ce.d.real(), ce.d.real());
    const RealMatrix aa = rkron(ce.a.real(), ce.a.real());
    Eigen::SelfAdjointEigenSolver<RealMatrix> ep(dd + aa), eq(dd - aa);
    CHECK(std::abs(ce.m_p - ep.eigenvalues()(0)) <= 1e-9);
    CHECK(std::abs(ce.m_q - eq.eigenvalues()(0)) <= 1e-9);
    CHECK(ce.m_p < ce.m_q);
    CHECK(ce.m_q < 0.0);
    CHECK(std::abs(ce.m_q) + ce.m_p < -1e-6);
    // Smallest eigenvalues are roots of the exact polynomials: sign change.
    const auto root_bracket = [](const IntegerCharPoly& poly, double root) {
        // Evaluate on a grid 1/2^20 apart with exact integers: scaled by 2^(20*deg).
        const int deg = static_cast<int>(poly.monic.size()) - 1;
        const BigInt scale = BigInt(1) << 20;
        auto eval = [&](const BigInt& num) {
            BigInt acc = 0;
            for (int i = 0; i <= deg; ++i) acc = acc * num + poly.monic[i] * boost::multiprecision::pow(scale, i);
            return acc;
        };
        const BigInt lo = static_cast<long long>(std::floor(root * (1 << 20))) - 1;
        const BigInt hi = lo + 2;
        return (eval(lo) < 0) != (eval(hi) < 0);
    };
    CHECK(root_bracket(ce.p, ce.m_p));
    CHECK(root_bracket(ce.q, ce.m_q));
}

TEST_CASE("counterexample operator C") {
    const auto ce = build_counterexample();
    const Complex iu(0.0, 1.0);
    const ComplexMatrix ia = iu * ce.a;
    const ComplexMatrix want = std::abs(ce.m_q) * ComplexMatrix::Identity(9, 9) + oracle::kron(ce.d, ce.d) + oracle::kron(ia, ia);
    CHECK(max_abs(ce.c.matrix() - want) <= 1e-12);
    const double norm = hermitian_norm(hermitian_eig(ce.c.matrix()).eigenvalues);
    CHECK(min_eigenvalue(ce.c.matrix()) >= -1e-9 * norm);
    CHECK(is_spc(ce.c));
    CHECK(tensor_rank(ce.c) == 3);
    CHECK_FALSE(is_ppt(ce.c));
    const double pt_min = min_eigenvalue(partial_transpose_right(ce.c).matrix());
    CHECK(std::abs(pt_min - (std::abs(ce.m_q) + ce.m_p)) <= 1e-9);
    CHECK(is_psd(realign_S(partial_transpose_right(ce.c)), 1e-9));
}

TEST_CASE("p - q is a positive multiple of x^3 and p, q have no common root") {
    const auto ce = build_counterexample();
    for (std::size_t i = 0; i < ce.p.monic.size(); ++i) {
        const BigInt diff = ce.p.monic[i] - ce.q.monic[i];
        if (i == 6) {
            // monic form has the opposite overall sign of the reference lists
            CHECK(diff == -327184);
        } else {
            CHECK(diff == 0);
        }
    }
    CHECK(ce.p.evaluate(0) != 0);
    CHECK(ce.q.evaluate(0) != 0);
    const RealVector rp = hermitian_eig(oracle::kron(ce.d, ce.d) + oracle::kron(ce.a, ce.a)).eigenvalues;
    const RealVector rq = hermitian_eig(oracle::kron(ce.d, ce.d) - oracle::kron(ce.a, ce.a)).eigenvalues;
    double gap = 1e300;
    for (Eigen::Index i = 0; i < 9; ++i)
        for (Eigen::Index j = 0; j < 9; ++j) gap = std::min(gap, std::abs(rp(i) - rq(j)));
    CHECK(gap > 1e-6);
}

TEST_CASE("n = 1 seeds of the symmetric / antisymmetric bases") {
    const auto b = sym_asym_bases(1);
    const double r = 1.0 / std::sqrt(2.0);
    REQUIRE(b.symmetric.size() == 3);
    REQUIRE(b.antisymmetric.size() == 1);
    RealMatrix s1(2, 2), s2(2, 2), s3(2, 2), a1(2, 2);
    s1 << r, 0, 0, r;
    s2 << r, 0, 0, -r;
    s3 << 0, r, r, 0;
    a1 << 0, r, -r, 0;
    CHECK(b.symmetric[0] == s1);
    CHECK(b.symmetric[1] == s2);
    CHECK(b.symmetric[2] == s3);
    CHECK(b.antisymmetric[0] == a1);
}

TEST_CASE("symmetric / antisymmetric bases for n = 1..4") {
    for (int n = 1; n <= 4; ++n) {
        const auto b = sym_asym_bases(n);
        const int k = 1 << n;
        CHECK(b.symmetric.size() == static_cast<std::size_t>(k / 2 * (k + 1)));
        CHECK(b.antisymmetric.size() == static_cast<std::size_t>(k / 2 * (k - 1)));
        if (n > 3) continue;
        CHECK(gram_defect(b.symmetric) <= 1e-12);
        CHECK(gram_defect(b.antisymmetric) <= 1e-12);
        for (const auto& s : b.symmetric) {
            CHECK(s == s.transpose());
            for (const auto& a : b.antisymmetric) CHECK(std::abs((s.transpose() * a).trace()) <= 1e-12);
            Eigen::SelfAdjointEigenSolver<RealMatrix> e(s);
            CHECK((e.eigenvalues().cwiseAbs().array() - 1.0 / std::sqrt(double(k))).abs().maxCoeff() <= 1e-12);
        }
        for (const auto& a : b.antisymmetric) {
            CHECK(a == RealMatrix(-a.transpose()));
            // A^t A = Id / k exactly when every |eigenvalue| is k^{-1/2}.
            CHECK((a.transpose() * a - RealMatrix::Identity(k, k) / k).cwiseAbs().maxCoeff() <= 1e-12);
        }
    }
}

TEST_CASE("bases reject out-of-range depth") {
    CHECK(code_of([] { sym_asym_bases(0); }) == ErrorCode::DepthOutOfRange);
    CHECK(code_of([] { sym_asym_bases(5); }) == ErrorCode::DepthOutOfRange);
    CHECK(code_of([] { build_flip_family(5, 1.0); }) == ErrorCode::DepthOutOfRange);
}

TEST_CASE("flip family at and below threshold") {
    const auto at = build_flip_family(1, 0.5);
    CHECK(is_psd(at.c.matrix()));
    CHECK(std::abs(min_eigenvalue(at.c.matrix())) <= 1e-12);
    CHECK(is_spc(at.c));
    CHECK(is_ppt(at.c));
    CHECK_FALSE(is_psd(build_flip_family(1, 0.49).c.matrix()));
    const auto n2 = build_flip_family(2, 1.5);
    CHECK(n2.threshold() == 1.5);
    CHECK(is_psd(n2.c.matrix()));
    CHECK(is_spc(n2.c));
    CHECK(is_ppt(n2.c));
}

TEST_CASE("flip family identities, spectrum and separable decomposition") {
    for (int n = 1; n <= 3; ++n) {
        const int k = 1 << n;
        const auto inst = build_flip_family(n, 0.5 * (k - 1));
        CHECK(inst.sum_identity_residual <= 1e-10);
        CHECK(inst.flip_identity_residual <= 1e-10);
        CHECK(inst.antisym_form_residual <= 1e-10);
        CHECK(inst.t.matrix() == oracle::flip(k));
        const ComplexMatrix half = 0.5 * (inst.t.matrix() - inst.u * inst.u.transpose());
        const RealVector ev = hermitian_eig(half).eigenvalues;
        for (Eigen::Index i = 0; i < ev.size(); ++i) {
            const double d = std::min({std::abs(ev(i) + 0.5 * (k - 1)), std::abs(ev(i) - 0.5), std::abs(ev(i) + 0.5)});
            CHECK(d <= 1e-12);
        }
        const auto dec = decompose_flip_family(inst);
        CHECK(dec.valid);
        CHECK(dec.identity_weight == doctest::Approx(0.0));
        CHECK(dec.worst_bracket_rank == 2);
        // Brackets have spectrum {0, 2/k}.
        const RealMatrix id = RealMatrix::Identity(k * k, k * k) / k;
        for (const auto& a : inst.bases.antisymmetric) {
            Eigen::SelfAdjointEigenSolver<RealMatrix> e(id - rkron(a, a));
            for (Eigen::Index i = 0; i < e.eigenvalues().size(); ++i) {
                const double x = e.eigenvalues()(i);
                CHECK(std::min(std::abs(x), std::abs(x - 2.0 / k)) <= 1e-10);
            }
        }
        CHECK_FALSE(decompose_flip_family(build_flip_family(n, 0.5 * (k - 1) - 0.01)).valid);
    }
}

TEST_CASE("flip family at depth 4 builds and satisfies its identities") {
    const auto inst = build_flip_family(4, 7.5);
    CHECK(inst.k == 16);
    CHECK(inst.sum_identity_residual <= 1e-10);
    CHECK(inst.flip_identity_residual <= 1e-10);
}

TEST_CASE("antisymmetric family from the counterexample's A") {
    const auto ce = build_counterexample();
    const std::vector<RealMatrix> gens{ce.a.real()};
    const auto probe = antisym_family_classify(gens, 0.0);
    const double lam = probe.family.lambda_min;
    CHECK(lam < 0.0);
    CHECK(probe.family.spectral_bound_holds);
    const auto at = antisym_family_classify(gens, std::abs(lam));
    CHECK(at.report.psd);
    CHECK(at.report.spc == std::optional<bool>(true));
    CHECK(at.report.ppt);
    CHECK(at.threshold_met);
    CHECK(at.equivalence_holds);
    const auto below = antisym_family_classify(gens, std::abs(lam) - 0.1);
    CHECK_FALSE(below.report.psd);
    CHECK_FALSE(below.report.spc.value_or(true));
    CHECK_FALSE(below.report.ppt);
    CHECK(below.equivalence_holds);
}

TEST_CASE("antisymmetric family from the n = 1 basis equals the flip family") {
    const auto b = sym_asym_bases(1);
    const auto r = antisym_family_classify(b.antisymmetric, 0.5);
    CHECK(max_abs(r.family.c.matrix() - build_flip_family(1, 0.5).c.matrix()) <= 1e-12);
    CHECK(r.report.spc == std::optional<bool>(true));
    CHECK(r.report.ppt);
}

TEST_CASE("antisymmetric families: spectral bound and equivalence on random inputs") {
    for (std::uint64_t s = 0; s < 60; ++s) {
        const int k = 3 + static_cast<int>(s % 3);
        const int count = 1 + static_cast<int>(s % 4);
        auto gens = random_antisymmetric_family(k, count, s);
        if (s % 5 == 0)
            for (auto& g : gens) g *= 25.0;  // arbitrary scale
        const auto probe = antisym_family_classify(gens, 0.0);
        CHECK(probe.family.lambda_min < 0.0);
        CHECK(probe.family.spectral_bound_holds);
        const double lam = std::abs(probe.family.lambda_min);
        for (double alpha : {lam, lam - 0.1, lam + 0.5}) {
            const auto r = antisym_family_classify(gens, alpha);
            CHECK(r.equivalence_holds);
        }
    }
}

TEST_CASE("antisymmetric family rejects bad generators") {
    RealMatrix sym = RealMatrix::Identity(3, 3);
    CHECK(code_of([&] { antisym_family_classify({sym}, 1.0); }) == ErrorCode::NotAntisymmetric);
    const auto g3 = random_antisymmetric_family(3, 1, 0);
    const auto g4 = random_antisymmetric_family(4, 1, 0);
    CHECK(code_of([&] { antisym_family_classify({g3[0], g4[0]}, 1.0); }) == ErrorCode::DimensionMismatch);
}

TEST_CASE("generators are deterministic in their seed") {
    CHECK(random_spc(2, 3, 5).matrix() == random_spc(2, 3, 5).matrix());
    CHECK(random_spc(2, 3, 5).matrix() != random_spc(2, 3, 6).matrix());
    CHECK(random_symmetric_state(3, 9).matrix() == random_symmetric_state(3, 9).matrix());
    CHECK(random_rank3_psd_2xm(3, 4).matrix() == random_rank3_psd_2xm(3, 4).matrix());
    CHECK(random_orthogonal(5, 1) == random_orthogonal(5, 1));
    CHECK(random_antisymmetric_family(4, 2, 3)[1] == random_antisymmetric_family(4, 2, 3)[1]);
}

TEST_CASE("random SPC operators") {
    for (std::uint64_t s = 0; s < 50; ++s) {
        const int k = 2 + static_cast<int>(s % 2);
        const auto sample = random_spc_with_terms(k, 1 + static_cast<int>(s % 4), s);
        CHECK(is_psd(sample.op.matrix()));
        CHECK(is_spc(sample.op));
        ComplexMatrix sum = ComplexMatrix::Zero(k * k, k * k);
        for (const auto& t : sample.terms) {
            CHECK(is_hermitian(t, 0.0));
            sum += kron(t, t);
        }
        CHECK((sum - sample.op.matrix()).norm() <= 1e-12 * sample.op.matrix().norm());
        CHECK(max_abs(sample.terms.back() - sample.terms.back()(0, 0) * ComplexMatrix::Identity(k, k)) == 0.0);
    }
    for (std::uint64_t s = 0; s < 20; ++s) CHECK(tensor_rank(random_spc(2, 3, s)) <= 4);
    CHECK(code_of([] { random_spc(1, 1, 0); }) == ErrorCode::BadParams);
    CHECK(code_of([] { random_spc(2, 0, 0); }) == ErrorCode::BadParams);
}

TEST_CASE("random symmetric states") {
    for (std::uint64_t s = 0; s < 30; ++s) {
        const int k = 2 + static_cast<int>(s % 3);
        const auto rho = random_symmetric_state(k, s);
        const ComplexMatrix t = oracle::flip(k);
        CHECK((rho.matrix() * t - rho.matrix()).cwiseAbs().maxCoeff() <= 1e-12);
        CHECK((t * rho.matrix() - rho.matrix()).cwiseAbs().maxCoeff() <= 1e-12);
        CHECK(std::abs(rho.matrix().trace() - Complex(1.0)) <= 1e-12);
        CHECK(is_psd(rho.matrix()));
        CHECK(is_spc(rho) == is_ppt(rho));
    }
}

TEST_CASE("random rank-3 PSD operators in 2xm") {
    for (std::uint64_t s = 0; s < 30; ++s) {
        const int m = 2 + static_cast<int>(s % 3);
        const auto a = random_rank3_psd_2xm(m, s);
        CHECK(tensor_rank(a) == 3);
        CHECK(is_psd(a.matrix()));
        if (m <= 3) CHECK(is_ppt(a));
        if (m == 2) {
            const auto r = classify(a);
            CHECK(r.separability == Separability::Separable);
            CHECK(std::find(r.certificates.begin(), r.certificates.end(), Certificate::Ppt2x2) != r.certificates.end());
            CHECK(std::find(r.certificates.begin(), r.certificates.end(), Certificate::RankAtMost3In2xM) !=
                  r.certificates.end());
        }
    }
}

TEST_CASE("random orthogonal matrices") {
    for (int n : {1, 3, 6}) {
        const RealMatrix q = random_orthogonal(n, 17);
        CHECK((q.transpose() * q - RealMatrix::Identity(n, n)).cwiseAbs().maxCoeff() <= 1e-12);
    }
}

TEST_CASE("parallel_map output does not depend on the thread count") {
    auto f = [](std::size_t i) { return random_spc(2, 2, 100 + i).matrix()(1, 2); };
    const auto one = parallel_map(64, f, 1);
    const auto many = parallel_map(64, f, 4);
    CHECK(one == many);
    CHECK_THROWS_AS(parallel_map(8, [](std::size_t i) -> int { if (i == 5) throw Error(ErrorCode::BadParams, "x"); return 0; }, 3),
                    Error);
}
