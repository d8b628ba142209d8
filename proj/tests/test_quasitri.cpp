#include <catch2/catch_amalgamated.hpp>

#include <random>

#include <homq/twisting.hpp>
#include <homq/catalog.hpp>

using namespace homq;

namespace {

const Ring ring = Ring::approx_complex();

QTHomBialgebra twisted_anyon(std::size_t n, std::size_t k) {
    const FiniteAbelianGroup g({n});
    const QTHomBialgebra classical = anyonic_qt(n, ring);
    return qt_yau_twist(classical.base, classical.R,
                        cyclic_power_endo(g, k).matrix(g, ring));
}

}  // namespace

TEST_CASE("classical anyonic structures satisfy the quasi-triangular axioms") {
    for (std::size_t n : {2u, 3u, 4u, 5u}) {
        const QTHomBialgebra q = anyonic_qt(n, ring);
        INFO("n = " << n);
        CHECK(check_qt_axioms(q).pass());
        const auto qh = check_qhybe(q);
        CHECK(qh[0] < 1e-12);
        CHECK(qh[1] < 1e-12);
        CHECK(is_alpha_invariant(q) < 1e-12);
    }
}

TEST_CASE("twisted anyonic structures satisfy the quasi-triangular axioms") {
    for (std::size_t n : {2u, 5u})
        for (std::size_t k = 1; k < n; ++k) {
            const QTHomBialgebra q = twisted_anyon(n, k);
            INFO("n = " << n << " k = " << k);
            CHECK(check_qt_axioms(q).pass());
            const auto qh = check_qhybe(q);
            CHECK(qh[0] < 1e-9);
            CHECK(qh[1] < 1e-9);
        }
}

TEST_CASE("alpha-invariance of the twisted R holds exactly when k^2 = 1 mod n") {
    const std::size_t n = 5;
    for (std::size_t k = 1; k < n; ++k) {
        const QTHomBialgebra q = twisted_anyon(n, k);
        const bool invariant_expected = (k * k) % n == 1;
        INFO("k = " << k);
        if (invariant_expected) {
            CHECK(is_alpha_invariant(q) < 1e-12);
            CHECK(check_qhybe_coincide(q) < 1e-9);
        } else {
            CHECK(is_alpha_invariant(q) > 1e-3);
            CHECK(check_qhybe_coincide(q) > 1e-3);
        }
    }
}

TEST_CASE("lambda diagrams commute for every twisted anyonic structure") {
    for (std::size_t n : {2u, 3u, 5u})
        for (std::size_t k = 1; k < n; ++k) {
            const QTHomBialgebra q = twisted_anyon(n, k);
            INFO("n = " << n << " k = " << k);
            CHECK(check_lambda_diagrams(q).pass());
        }
}

TEST_CASE("perturbing R breaks the axioms and the diagrams in tandem") {
    std::mt19937 gen(424242);
    const QTHomBialgebra base = twisted_anyon(5, 4);
    std::uniform_int_distribution<std::size_t> pick(0, base.R.size() - 1);
    for (int trial = 0; trial < 20; ++trial) {
        QTHomBialgebra q = base;
        q.R[pick(gen)] += Scalar(ring, cplx{1e-2, 0.0});
        const double axiom12 = std::max(check_qt_axioms(q).residual("qt_delta_alpha"),
                                        check_qt_axioms(q).residual("qt_alpha_delta"));
        const double diagrams = check_lambda_diagrams(q).max_residual();
        INFO("trial " << trial);
        CHECK((axiom12 > 1e-4) == (diagrams > 1e-6));
    }
}

TEST_CASE("lambda maps are built from R and alpha as stated") {
    const QTHomBialgebra q = anyonic_qt(3, ring);  // alpha = Id
    const LambdaMaps lm = lambda_maps(q);
    const std::size_t d = 3;
    // with alpha = Id: lambda1(e^i) = sum_p R[i][p] e_p, lambda2(e^i) = sum_p R[p][i] e_p
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t row = 0; row < d; ++row) {
            CHECK((lm.lambda1.at(row, i) - q.R[i * d + row]).max_abs() < 1e-14);
            CHECK((lm.lambda2.at(row, i) - q.R[row * d + i]).max_abs() < 1e-14);
            CHECK((lm.lambda1p.at(row, i) - lm.lambda1.at(row, i)).max_abs() < 1e-14);
            CHECK((lm.lambda2p.at(row, i) - lm.lambda2.at(row, i)).max_abs() < 1e-14);
        }
}

TEST_CASE("structures without a weak unit are rejected by the QT checkers") {
    QTHomBialgebra q = anyonic_qt(2, ring);
    q.base.weak_unit.reset();
    CHECK_THROWS_AS(check_qt_axioms(q), std::invalid_argument);
    CHECK_THROWS_AS(check_qhybe(q), std::invalid_argument);
    CHECK_THROWS_AS(check_qhybe_coincide(q), std::invalid_argument);
}

TEST_CASE("R size mismatch is rejected") {
    const HomBialgebra b = group_bialgebra(FiniteAbelianGroup({2}), ring);
    CHECK_THROWS_AS(QTHomBialgebra(b, std::vector<Scalar>(3, Scalar::zero(ring))),
                    std::invalid_argument);
}
