#include <catch2/catch_amalgamated.hpp>

#include <homq/catalog.hpp>

using namespace homq;

namespace {
const Ring ring = Ring::approx_complex();
}

TEST_CASE("group bialgebras of small cyclic groups pass every axiom") {
    for (std::size_t n : {2u, 3u, 4u}) {
        const HomBialgebra b = group_bialgebra(FiniteAbelianGroup({n}), ring);
        const VerificationReport rep = check_all_bialgebra(b);
        INFO("n = " << n);
        CHECK(rep.pass());
        CHECK(rep.residual("weak_unit") < 1e-12);
    }
}

TEST_CASE("Yau twist of kZ/3 along g -> g^2 passes every axiom") {
    const FiniteAbelianGroup g({3});
    const HomBialgebra b = group_bialgebra(g, ring);
    const auto alpha = cyclic_power_endo(g, 2).matrix(g, ring);
    const HomBialgebra t = yau_twist(b, alpha);
    const VerificationReport rep = check_all_bialgebra(t);
    CHECK(rep.pass());
    // the twist is genuinely non-classical: alpha differs from the identity
    CHECK(residual_norm(t.alpha_operator() -
                        LinearOperator::identity(ring, Dims{3})) > 0.5);
}

TEST_CASE("single-entry perturbations are detected by the right checker") {
    const FiniteAbelianGroup g({3});
    const auto alpha = cyclic_power_endo(g, 2).matrix(g, ring);
    const HomBialgebra base = yau_twist(group_bialgebra(g, ring), alpha);
    const Scalar eps(ring, cplx{1e-3, 0.0});

    SECTION("mu perturbation breaks multiplicativity or associativity") {
        HomBialgebra b = base;
        b.mu_at(1, 1, 0) += eps;
        CHECK(std::max(check_multiplicativity(b), check_hom_associativity(b)) >= 1e-4);
    }
    SECTION("delta perturbation breaks comultiplicativity or coassociativity") {
        HomBialgebra b = base;
        b.delta_at(1, 0, 2) += eps;
        CHECK(std::max(check_comultiplicativity(b), check_hom_coassociativity(b)) >= 1e-4);
    }
    SECTION("mixed perturbation breaks compatibility") {
        HomBialgebra b = base;
        b.delta_at(2, 2, 2) += eps;
        CHECK(check_compatibility(b) >= 1e-4);
    }
    SECTION("alpha perturbation breaks the weak unit identity") {
        HomBialgebra b = base;
        b.alpha_at(0, 1) += eps;
        CHECK(check_weak_unit(b, *b.weak_unit) >= 1e-4);
    }
}

TEST_CASE("check_weak_unit rejects a wrong candidate") {
    const HomBialgebra b = group_bialgebra(FiniteAbelianGroup({3}), ring);
    std::vector<Scalar> wrong(3, Scalar::zero(ring));
    wrong[1] = Scalar::one(ring);  // g is not a unit for alpha = Id
    CHECK(check_weak_unit(b, wrong) >= 0.5);
}

TEST_CASE("dualize is an involution on structure tensors") {
    const FiniteAbelianGroup g({4});
    const auto alpha = cyclic_power_endo(g, 3).matrix(g, ring);
    const HomBialgebra b = yau_twist(group_bialgebra(g, ring), alpha);
    const HomBialgebra dd = dualize(dualize(b));
    double worst = 0.0;
    for (std::size_t i = 0; i < b.mu.size(); ++i) {
        worst = std::max(worst, (b.mu[i] - dd.mu[i]).max_abs());
        worst = std::max(worst, (b.delta[i] - dd.delta[i]).max_abs());
    }
    for (std::size_t i = 0; i < b.alpha.size(); ++i)
        worst = std::max(worst, (b.alpha[i] - dd.alpha[i]).max_abs());
    CHECK(worst == 0.0);
}

TEST_CASE("the dual of kG is k(G)") {
    for (std::size_t n : {2u, 3u, 5u}) {
        const FiniteAbelianGroup g({n});
        const HomBialgebra dual = dualize(group_bialgebra(g, ring));
        const HomBialgebra fun = function_bialgebra(g, ring);
        double worst = 0.0;
        for (std::size_t i = 0; i < dual.mu.size(); ++i) {
            worst = std::max(worst, (dual.mu[i] - fun.mu[i]).max_abs());
            worst = std::max(worst, (dual.delta[i] - fun.delta[i]).max_abs());
        }
        INFO("n = " << n);
        CHECK(worst == 0.0);
    }
}

TEST_CASE("dual of a passing structure passes") {
    const FiniteAbelianGroup g({5});
    const auto alpha = cyclic_power_endo(g, 4).matrix(g, ring);
    HomBialgebra b = yau_twist(group_bialgebra(g, ring), alpha);
    HomBialgebra d = dualize(b);
    d.weak_unit.reset();  // dualize carries no weak unit
    CHECK(check_all_bialgebra(d).pass());
}

TEST_CASE("verification report bookkeeping") {
    VerificationReport rep;
    rep.tolerance = 1e-6;
    rep.add("a", 1e-8);
    rep.add("b", 1e-3);
    CHECK(rep.max_residual() == 1e-3);
    CHECK_FALSE(rep.pass());
    CHECK(rep.residual("a") == 1e-8);
    CHECK_THROWS_AS(rep.residual("missing"), std::out_of_range);
    VerificationReport other;
    other.add("c", 0.0);
    rep.merge(other);
    CHECK(rep.entries.size() == 3);
}
