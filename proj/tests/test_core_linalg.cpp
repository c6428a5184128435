#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "spcppt/constructions.hpp"

using namespace spcppt;

namespace {

ComplexMatrix diag3() {
    ComplexMatrix d = ComplexMatrix::Zero(3, 3);
    d.diagonal() << 1.0, 3.0, -10.0;
    return d;
}

ComplexMatrix antisym3() {
    ComplexMatrix a = ComplexMatrix::Zero(3, 3);
    a(0, 1) = a(0, 2) = a(1, 2) = 1.0;
    a(1, 0) = a(2, 0) = a(2, 1) = -1.0;
    return a;
}

IntegerMatrix random_integer_matrix(int n, std::uint64_t seed) {
    const RealMatrix g = random_gaussian_matrix(n, n, seed).real() * 4.0;
    IntegerMatrix m(n, std::vector<BigInt>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m[i][j] = static_cast<long long>(std::lround(g(i, j)));
    return m;
}

}  // namespace

TEST_CASE("kron of identities is the identity") {
    CHECK(kron(ComplexMatrix::Identity(2, 2), ComplexMatrix::Identity(2, 2)) == ComplexMatrix::Identity(4, 4));
}

TEST_CASE("kron of diag(1,3,-10) with itself") {
    const ComplexMatrix dd = kron(diag3(), diag3());
    ComplexVector want(9);
    want << 1, 3, -10, 3, 9, -30, -10, -30, 100;
    CHECK(dd.diagonal() == want);
    CHECK(max_abs(dd - ComplexMatrix(want.asDiagonal())) == 0.0);
}

TEST_CASE("kron of matrix units lands at the row-major composite index") {
    const ComplexMatrix e12 = oracle::unit(2, 0, 1);
    const ComplexMatrix e21 = oracle::unit(2, 1, 0);
    const ComplexMatrix k = kron(e12, e21);
    // row (i=1, p=2) -> 0*2+1, col (j=2, q=1) -> 1*2+0
    CHECK(k(1, 2) == Complex(1.0));
    CHECK(k.cwiseAbs().sum() == doctest::Approx(1.0));
}

TEST_CASE("kron matches the definition and the mixed-product rule") {
    for (std::uint64_t s = 0; s < 10; ++s) {
        const ComplexMatrix a = random_gaussian_matrix(2, 3, s);
        const ComplexMatrix b = random_gaussian_matrix(3, 2, s + 100);
        const ComplexMatrix c = random_gaussian_matrix(3, 2, s + 200);
        const ComplexMatrix d = random_gaussian_matrix(2, 4, s + 300);
        CHECK(max_abs(kron(a, b) - oracle::kron(a, b)) == 0.0);
        const ComplexMatrix lhs = kron(a, b) * kron(c, d);
        const ComplexMatrix rhs = kron(a * c, b * d);
        CHECK(max_abs(lhs - rhs) <= 1e-12 * std::max(1.0, max_abs(rhs)));
        // bilinearity
        const ComplexMatrix a2 = random_gaussian_matrix(2, 3, s + 400);
        const Complex z(0.3, -1.7);
        CHECK(max_abs(kron(a + z * a2, b) - (kron(a, b) + z * kron(a2, b))) <= 1e-12 * 10);
    }
}

TEST_CASE("hermitian_eig of the identity and the flip") {
    const auto id = hermitian_eig(ComplexMatrix::Identity(2, 2));
    CHECK(id.eigenvalues(0) == doctest::Approx(1.0));
    CHECK(id.eigenvalues(1) == doctest::Approx(1.0));
    const auto t = hermitian_eig(oracle::flip(2));
    RealVector want(4);
    want << -1, 1, 1, 1;
    CHECK((t.eigenvalues - want).cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("hermitian_eig reconstructs random Hermitian matrices up to 64x64") {
    for (int n : {1, 2, 5, 16, 33, 64}) {
        const ComplexMatrix m = random_hermitian(n, 1000 + n);
        const auto e = hermitian_eig(m);
        const ComplexMatrix& v = e.eigenvectors;
        const ComplexMatrix recon = v * e.eigenvalues.cast<Complex>().asDiagonal() * v.adjoint();
        CHECK((recon - m).norm() <= 1e-10 * m.norm());
        CHECK((v.adjoint() * v - ComplexMatrix::Identity(n, n)).cwiseAbs().maxCoeff() <= 1e-10);
        for (Eigen::Index i = 1; i < n; ++i) CHECK(e.eigenvalues(i) >= e.eigenvalues(i - 1));
        for (Eigen::Index j = 0; j < n; ++j) {
            CHECK((m * v.col(j) - e.eigenvalues(j) * v.col(j)).norm() <= 1e-10 * m.norm());
        }
    }
}

TEST_CASE("hermitian_eig phase normalization is deterministic") {
    const ComplexMatrix m = random_hermitian(6, 42);
    const auto a = hermitian_eig(m);
    const auto b = hermitian_eig(m);
    CHECK(a.eigenvectors == b.eigenvectors);
    for (Eigen::Index j = 0; j < 6; ++j) {
        const auto col = a.eigenvectors.col(j);
        const double scale = col.cwiseAbs().maxCoeff();
        Eigen::Index first = 0;
        while (std::abs(col(first)) <= 1e-8 * scale) ++first;
        CHECK(col(first).imag() == 0.0);
        CHECK(col(first).real() > 0.0);
    }
}

TEST_CASE("hermitian_eig rejects non-Hermitian input") {
    ComplexMatrix m = ComplexMatrix::Identity(2, 2);
    m(0, 1) = 1.0;
    CHECK_THROWS_AS(hermitian_eig(m), Error);
    try {
        hermitian_eig(m);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotHermitian);
    }
}

TEST_CASE("eigenvalues of D(x)D + A(x)A have the elementary symmetric functions of p") {
    const ComplexMatrix m = kron(diag3(), diag3()) + kron(antisym3(), antisym3());
    const RealVector ev = hermitian_eig(m).eigenvalues;
    // Expand prod (x - e_i) in floating point.
    std::vector<double> c{1.0};
    for (Eigen::Index i = 0; i < ev.size(); ++i) {
        c.push_back(0.0);
        for (std::size_t j = c.size() - 1; j > 0; --j) c[j] -= ev(i) * c[j - 1];
    }
    const auto exact = char_poly(to_integer_matrix(m));
    for (std::size_t i = 0; i < c.size(); ++i) {
        const double e = static_cast<double>(exact.monic[i]);
        CHECK(std::abs(c[i] - e) <= 1e-9 * std::max(1.0, std::abs(e)));
    }
}

TEST_CASE("is_psd examples") {
    CHECK(is_psd(ComplexMatrix::Identity(4, 4)));
    CHECK_FALSE(is_psd(oracle::flip(2)));
    const ComplexVector u = maximally_entangled_vector(2);
    const ComplexMatrix c = 0.5 * (oracle::flip(2) - u * u.transpose()) + 0.5 * ComplexMatrix::Identity(4, 4);
    CHECK(is_psd(c));
    CHECK(std::abs(min_eigenvalue(c)) <= 1e-12);
    ComplexMatrix skew = ComplexMatrix::Identity(2, 2);
    skew(0, 1) = 0.5;
    CHECK_FALSE(is_psd(skew));
    CHECK_FALSE(is_psd(ComplexMatrix::Identity(2, 3)));
}

TEST_CASE("is_psd tolerance scales with the norm") {
    ComplexMatrix m = ComplexMatrix::Identity(2, 2) * 1e6;
    m(1, 1) = -1e-4;  // -1e-10 relative to the norm
    CHECK(is_psd(m, 1e-9));
    m(1, 1) = -1e-2;
    CHECK_FALSE(is_psd(m, 1e-9));
}

TEST_CASE("vec_F examples") {
    const ComplexVector v = vec_F(oracle::unit(2, 0, 1));
    ComplexVector e1(2), e2(2);
    e1 << 1, 0;
    e2 << 0, 1;
    CHECK(v == kron(e1, e2));
    CHECK(vec_F(ComplexMatrix::Identity(2, 2)) == maximally_entangled_vector(2));
    CHECK(unvec_F(maximally_entangled_vector(3)) == ComplexMatrix::Identity(3, 3));
}

TEST_CASE("vec_F is a linear isometric bijection") {
    for (std::uint64_t s = 0; s < 20; ++s) {
        const ComplexMatrix x = random_gaussian_matrix(3, 3, s);
        const ComplexMatrix y = random_gaussian_matrix(3, 3, s + 50);
        CHECK(vec_F(x) == oracle::vec(x));
        CHECK(unvec_F(vec_F(x)) == x);
        const Complex lhs = trace_inner(x, y);
        const Complex rhs = (vec_F(y).adjoint() * vec_F(x))(0);
        CHECK(std::abs(lhs - rhs) <= 1e-12 * std::max(1.0, std::abs(rhs)));
        const Complex z(1.5, 0.25);
        CHECK((vec_F(x + z * y) - (vec_F(x) + z * vec_F(y))).cwiseAbs().maxCoeff() <= 1e-12 * 10);
    }
    CHECK_THROWS_AS(unvec_F(ComplexVector::Zero(5)), Error);
}

TEST_CASE("char_poly of the identity") {
    IntegerMatrix id{{1, 0}, {0, 1}};
    const auto p = char_poly(id);
    REQUIRE(p.monic.size() == 3);
    CHECK(p.monic[0] == 1);
    CHECK(p.monic[1] == -2);
    CHECK(p.monic[2] == 1);
    const auto f = char_poly(ComplexMatrix(ComplexMatrix::Identity(2, 2)));
    CHECK(std::abs(f[1] - Complex(-2.0)) <= 1e-14);
}

TEST_CASE("char_poly reproduces the reference p and q coefficients") {
    const ComplexMatrix dd = kron(diag3(), diag3());
    const ComplexMatrix aa = kron(antisym3(), antisym3());
    const auto p = char_poly(to_integer_matrix(dd + aa)).signed_form();
    const auto q = char_poly(to_integer_matrix(dd - aa)).signed_form();
    const std::vector<long long> p_ref{-1, 36, 5420, 104400, -427924, -14134608,
                                       11251344, 415328832, -1106058240, 671846400};
    REQUIRE(p.size() == 10);
    for (std::size_t i = 0; i < 10; ++i) CHECK(p[i] == p_ref[i]);
    CHECK(p.back() == 671846400);
    CHECK(p[2] == 5420);  // x^7
    CHECK(q[6] == 10924160);  // x^3
    // p - q is 327184 x^3
    for (std::size_t i = 0; i < 10; ++i) CHECK(p[i] - q[i] == (i == 6 ? BigInt(327184) : BigInt(0)));
}

TEST_CASE("exact char_poly agrees with a Bareiss determinant oracle") {
    for (int n : {1, 2, 3, 5, 7, 9}) {
        const IntegerMatrix m = random_integer_matrix(n, 77 + n);
        const auto p = char_poly(m);
        for (int x = -4; x <= 4; ++x) CHECK(p.evaluate(x) == oracle::char_poly_at(m, x));
    }
}

TEST_CASE("exact char_poly handles entries whose powers overflow 64 bits") {
    IntegerMatrix m(9, std::vector<BigInt>(9, 0));
    for (int i = 0; i < 9; ++i)
        for (int j = 0; j < 9; ++j) m[i][j] = (i == j ? 1000000007LL : (i + 2 * j) % 5 - 2);
    const auto p = char_poly(m);
    for (int x : {0, 1, -3}) CHECK(p.evaluate(x) == oracle::char_poly_at(m, x));
    // The determinant alone exceeds 2^63.
    CHECK(abs(p.evaluate(0)) > BigInt(std::numeric_limits<long long>::max()));
}

TEST_CASE("floating char_poly agrees with the exact one on integer matrices") {
    const IntegerMatrix m = random_integer_matrix(6, 5);
    ComplexMatrix f(6, 6);
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) f(i, j) = static_cast<double>(m[i][j]);
    const auto exact = char_poly(m);
    const auto approx = char_poly(f);
    REQUIRE(approx.size() == exact.monic.size());
    for (std::size_t i = 0; i < approx.size(); ++i) {
        const double e = static_cast<double>(exact.monic[i]);
        CHECK(std::abs(approx[i] - Complex(e)) <= 1e-9 * std::max(1.0, std::abs(e)));
    }
}

TEST_CASE("integer detection guards against non-integers and overflow") {
    ComplexMatrix m = ComplexMatrix::Identity(2, 2);
    CHECK(is_integer_matrix(m));
    m(0, 0) = 0.5;
    CHECK_FALSE(is_integer_matrix(m));
    m(0, 0) = Complex(1.0, 1.0);
    CHECK_FALSE(is_integer_matrix(m));
    m(0, 0) = 1e300;
    CHECK_FALSE(is_integer_matrix(m));
    CHECK_THROWS_AS(to_integer_matrix(m), Error);
}
