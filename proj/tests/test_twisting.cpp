#include <catch2/catch_amalgamated.hpp>

#include <homq/catalog.hpp>

using namespace homq;

namespace {
const Ring ring = Ring::approx_complex();
}

TEST_CASE("cyclic power maps are bialgebra morphisms of kZ/n") {
    for (std::size_t n : {3u, 4u, 6u}) {
        const FiniteAbelianGroup g({n});
        const HomBialgebra b = group_bialgebra(g, ring);
        for (std::size_t k = 1; k < n; ++k) {
            INFO("n = " << n << " k = " << k);
            CHECK(check_bialgebra_morphism(cyclic_power_endo(g, k).matrix(g, ring), b) < 1e-12);
        }
    }
}

TEST_CASE("a non-morphism matrix is rejected by yau_twist") {
    const FiniteAbelianGroup g({3});
    const HomBialgebra b = group_bialgebra(g, ring);
    std::vector<Scalar> bad(9, Scalar::zero(ring));
    bad[0] = Scalar::one(ring);
    bad[4] = Scalar(ring, cplx{0.5, 0.0});  // g -> g/2 is not an algebra map
    bad[8] = Scalar::one(ring);
    CHECK(check_bialgebra_morphism(bad, b) > 1e-3);
    CHECK_THROWS_AS(yau_twist(b, bad), std::invalid_argument);
}

TEST_CASE("qt_yau_twist verifies its input") {
    const QTHomBialgebra q = anyonic_qt(3, ring);
    std::vector<Scalar> broken_r = q.R;
    broken_r[4] += Scalar(ring, cplx{1e-2, 0.0});
    const FiniteAbelianGroup g({3});
    const auto alpha = cyclic_power_endo(g, 2).matrix(g, ring);
    CHECK_THROWS_AS(qt_yau_twist(q.base, broken_r, alpha), std::invalid_argument);
    CHECK_NOTHROW(qt_yau_twist(q.base, q.R, alpha));
}

TEST_CASE("twist_r composes exactly: twice by alpha equals once by alpha^2") {
    const FiniteAbelianGroup g({5});
    const QTHomBialgebra classical = anyonic_qt(5, ring);
    const QTHomBialgebra q = qt_yau_twist(classical.base, classical.R,
                                          cyclic_power_endo(g, 2).matrix(g, ring));
    const QTHomBialgebra twice = twist_r(twist_r(q, 1), 1);
    const QTHomBialgebra squared = twist_r(q, 2);
    double worst = 0.0;
    for (std::size_t i = 0; i < q.R.size(); ++i)
        worst = std::max(worst, (twice.R[i] - squared.R[i]).max_abs());
    CHECK(worst < 1e-12);
}

TEST_CASE("twist_r keeps the quasi-triangular axioms") {
    const FiniteAbelianGroup g({5});
    const QTHomBialgebra classical = anyonic_qt(5, ring);
    for (std::size_t k : {1u, 2u, 3u, 4u}) {
        const QTHomBialgebra q = qt_yau_twist(classical.base, classical.R,
                                              cyclic_power_endo(g, k).matrix(g, ring));
        for (int t : {1, 2, 3}) {
            INFO("k = " << k << " t = " << t);
            CHECK(check_qt_axioms(twist_r(q, t)).pass());
        }
    }
}

TEST_CASE("twist_r rejects a non-surjective alpha") {
    const FiniteAbelianGroup g({4});
    const QTHomBialgebra classical = anyonic_qt(4, ring);
    const auto endo = cyclic_power_endo(g, 2);  // g -> g^2 collapses Z/4
    CHECK_FALSE(endo.is_surjective(g));
    const QTHomBialgebra q =
        qt_yau_twist(classical.base, classical.R, endo.matrix(g, ring));
    CHECK_THROWS_AS(twist_r(q, 1), std::invalid_argument);
}

TEST_CASE("qt_yau_twist_powered is the composite of the two procedures") {
    const FiniteAbelianGroup g({5});
    const QTHomBialgebra classical = anyonic_qt(5, ring);
    const auto alpha = cyclic_power_endo(g, 3).matrix(g, ring);
    const QTHomBialgebra a = qt_yau_twist_powered(classical.base, classical.R, alpha, 2);
    const QTHomBialgebra b = twist_r(qt_yau_twist(classical.base, classical.R, alpha), 2);
    double worst = 0.0;
    for (std::size_t i = 0; i < a.R.size(); ++i)
        worst = std::max(worst, (a.R[i] - b.R[i]).max_abs());
    CHECK(worst == 0.0);
    CHECK(check_qt_axioms(a).pass());
}

TEST_CASE("yau twist of the identity is the identity") {
    const FiniteAbelianGroup g({4});
    const HomBialgebra b = group_bialgebra(g, ring);
    const HomBialgebra t = yau_twist(b, cyclic_power_endo(g, 1).matrix(g, ring));
    double worst = 0.0;
    for (std::size_t i = 0; i < b.mu.size(); ++i) {
        worst = std::max(worst, (b.mu[i] - t.mu[i]).max_abs());
        worst = std::max(worst, (b.delta[i] - t.delta[i]).max_abs());
    }
    CHECK(worst == 0.0);
}
