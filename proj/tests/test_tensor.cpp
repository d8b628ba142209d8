#include <catch2/catch_amalgamated.hpp>

#include <random>

#include <homq/tensor.hpp>

using namespace homq;

namespace {

const Ring ring = Ring::approx_complex();

std::mt19937& rng() {
    static std::mt19937 gen(20240815);
    return gen;
}

Scalar random_scalar() {
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    return Scalar(ring, cplx{dist(rng()), dist(rng())});
}

TensorElement random_tensor(const Dims& dims) {
    TensorElement t(ring, dims);
    for (std::size_t i = 0; i < t.size(); ++i) t[i] = random_scalar();
    return t;
}

LinearOperator random_operator(const Dims& out, const Dims& in) {
    LinearOperator op(ring, out, in);
    for (std::size_t r = 0; r < op.rows(); ++r)
        for (std::size_t c = 0; c < op.cols(); ++c) op.at(r, c) = random_scalar();
    return op;
}

std::vector<Scalar> random_mu(std::size_t d) {
    std::vector<Scalar> mu;
    mu.reserve(d * d * d);
    for (std::size_t i = 0; i < d * d * d; ++i) mu.push_back(random_scalar());
    return mu;
}

// Direct evaluation of the leg-wise product, independent of the
// interleave-and-contract implementation.
TensorElement legwise_oracle(const TensorElement& x, const TensorElement& y,
                             const std::vector<Scalar>& mu, std::size_t d) {
    const std::size_t k = x.legs();
    TensorElement out(x.ring(), x.leg_dims());
    for (std::size_t xi = 0; xi < x.size(); ++xi) {
        if (x[xi].is_zero()) continue;
        const auto im = unflatten(xi, x.leg_dims());
        for (std::size_t yi = 0; yi < y.size(); ++yi) {
            if (y[yi].is_zero()) continue;
            const auto jm = unflatten(yi, y.leg_dims());
            for (std::size_t oi = 0; oi < out.size(); ++oi) {
                const auto km = unflatten(oi, out.leg_dims());
                Scalar w = x[xi] * y[yi];
                for (std::size_t l = 0; l < k; ++l) w *= mu[(im[l] * d + jm[l]) * d + km[l]];
                out[oi] += w;
            }
        }
    }
    return out;
}

}  // namespace

TEST_CASE("flatten and unflatten are mutually inverse") {
    const Dims dims{2, 3, 4};
    for (std::size_t i = 0; i < dim_product(dims); ++i)
        CHECK(flatten(unflatten(i, dims), dims) == i);
}

TEST_CASE("kron is associative") {
    const auto a = random_operator({2}, {2});
    const auto b = random_operator({3}, {3});
    const auto c = random_operator({2}, {2});
    CHECK(residual_norm(kron(kron(a, b), c) - kron(a, kron(b, c))) < 1e-13);
}

TEST_CASE("kron respects composition") {
    const auto a1 = random_operator({2}, {3});
    const auto a2 = random_operator({3}, {2});
    const auto b1 = random_operator({2}, {2});
    const auto b2 = random_operator({2}, {3});
    CHECK(residual_norm(compose(kron(a1, b1), kron(a2, b2)) -
                        kron(compose(a1, a2), compose(b1, b2))) < 1e-12);
}

TEST_CASE("twist operator swaps tensor factors") {
    const auto x = random_tensor({2});
    const auto y = random_tensor({3});
    const auto tau = twist_operator(ring, 2, 3);
    CHECK(residual_norm(tau.apply(outer(x, y)) - outer(y, x)) < 1e-14);
    // tau conjugation turns a (x) b into b (x) a
    const auto a = random_operator({2}, {2});
    const auto b = random_operator({3}, {3});
    const auto tau_back = twist_operator(ring, 3, 2);
    CHECK(residual_norm(compose(tau, compose(kron(a, b), tau_back)) - kron(b, a)) < 1e-13);
}

TEST_CASE("leg_permute round trip and composition") {
    const auto t = random_tensor({2, 3, 4});
    const std::vector<std::size_t> perm{2, 0, 1};
    // result leg p carries source leg perm[p]; inverting recovers the source
    std::vector<std::size_t> inv(perm.size());
    for (std::size_t p = 0; p < perm.size(); ++p) inv[perm[p]] = p;
    CHECK(residual_norm(leg_permute(leg_permute(t, perm), inv) - t) == 0.0);
}

TEST_CASE("legwise_multiply matches the direct oracle") {
    for (std::size_t d : {2u, 3u})
        for (std::size_t k : {2u, 3u}) {
            const Dims dims(k, d);
            const auto x = random_tensor(dims);
            const auto y = random_tensor(dims);
            const auto mu = random_mu(d);
            CHECK(residual_norm(legwise_multiply(x, y, mu, d) - legwise_oracle(x, y, mu, d)) < 1e-12);
        }
}

TEST_CASE("legwise_multiply on the group algebra of Z/2") {
    // basis e0 = 1, e1 = g with g^2 = 1
    const std::size_t d = 2;
    std::vector<Scalar> mu(d * d * d, Scalar::zero(ring));
    auto set = [&](std::size_t i, std::size_t j, std::size_t k) {
        mu[(i * d + j) * d + k] = Scalar::one(ring);
    };
    set(0, 0, 0);
    set(0, 1, 1);
    set(1, 0, 1);
    set(1, 1, 0);
    TensorElement gg(ring, {d, d}), g1(ring, {d, d}), expected(ring, {d, d});
    gg[1 * d + 1] = Scalar::one(ring);        // g (x) g
    g1[1 * d + 0] = Scalar::one(ring);        // g (x) 1
    expected[0 * d + 1] = Scalar::one(ring);  // 1 (x) g
    CHECK(residual_norm(legwise_multiply(gg, g1, mu, d) - expected) == 0.0);
}

TEST_CASE("embed_r places R on the stated legs") {
    const std::size_t d = 2;
    TensorElement r(ring, {d, d});
    r[0 * d + 1] = Scalar(ring, cplx{2.0, 0.0});  // R = 2 e0 (x) e1
    TensorElement c(ring, {d});
    c[0] = Scalar::one(ring);  // weak unit e0
    const auto r12 = embed_r(r, c, LegPair::L12);
    const auto r23 = embed_r(r, c, LegPair::L23);
    const auto r13 = embed_r(r, c, LegPair::L13);
    // flat index of (i,j,k) is (i*d + j)*d + k
    CHECK(std::abs(r12[(0 * d + 1) * d + 0].constant_term() - cplx{2.0, 0.0}) < 1e-15);
    CHECK(std::abs(r23[(0 * d + 0) * d + 1].constant_term() - cplx{2.0, 0.0}) < 1e-15);
    CHECK(std::abs(r13[(0 * d + 0) * d + 1].constant_term() - cplx{2.0, 0.0}) < 1e-15);
    for (const auto& t : {r12, r23, r13}) {
        double total = 0.0;
        for (std::size_t i = 0; i < t.size(); ++i) total += t[i].max_abs();
        CHECK(std::abs(total - 2.0) < 1e-15);  // a single nonzero entry
    }
}

TEST_CASE("contract_pair against a direct sum") {
    const std::size_t d = 2;
    const auto t = random_tensor({d, d, d});
    const auto mu = random_mu(d);
    const auto out = contract_pair(t, 1, mu, d);
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t k = 0; k < d; ++k) {
            Scalar acc = Scalar::zero(ring);
            for (std::size_t i = 0; i < d; ++i)
                for (std::size_t j = 0; j < d; ++j)
                    acc += mu[(i * d + j) * d + k] * t[(a * d + i) * d + j];
            CHECK((out[a * d + k] - acc).max_abs() < 1e-13);
        }
}

TEST_CASE("operator apply matches matrix action") {
    const auto op = random_operator({3}, {2});
    const auto x = random_tensor({2});
    const auto y = op.apply(x);
    for (std::size_t r = 0; r < 3; ++r) {
        Scalar acc = Scalar::zero(ring);
        for (std::size_t c = 0; c < 2; ++c) acc += op.at(r, c) * x[c];
        CHECK((y[r] - acc).max_abs() < 1e-14);
    }
}

TEST_CASE("shape mismatches throw") {
    const auto a = random_operator({2}, {2});
    const auto b = random_operator({3}, {3});
    CHECK_THROWS_AS(compose(a, b), std::invalid_argument);
    CHECK_THROWS_AS(a.apply(random_tensor({3})), std::invalid_argument);
    CHECK_THROWS_AS(leg_permute(random_tensor({2, 2}), {0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(contract_pair(random_tensor({2, 3}), 0, random_mu(2), 2),
                    std::invalid_argument);
}
