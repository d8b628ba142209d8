#pragma once

// Quasi-triangular layer: the three defining axioms, both bracketed forms
// of the quantum Hom-Yang-Baxter equation, alpha-invariance of R, and the
// lambda-map diagram characterizations of the first two axioms.

#include <array>

#include "homstruct.hpp"

namespace homq {

struct QTHomBialgebra {
    HomBialgebra base;
    std::vector<Scalar> R;  // d^2 flat: R = sum R[i*d+j] e_i (x) e_j

    QTHomBialgebra(HomBialgebra b, std::vector<Scalar> r) : base(std::move(b)), R(std::move(r)) {
        if (R.size() != base.dim * base.dim)
            throw std::invalid_argument("QTHomBialgebra: R size mismatch");
    }

    TensorElement r_tensor() const {
        return TensorElement(base.ring, Dims{base.dim, base.dim}, R);
    }
    void require_weak_unit(const char* who) const {
        if (!base.weak_unit)
            throw std::invalid_argument(std::string(who) + ": weak unit c is required");
    }
};

inline VerificationReport check_qt_axioms(const QTHomBialgebra& q, double tolerance = 1e-9) {
    q.require_weak_unit("check_qt_axioms");
    const HomBialgebra& b = q.base;
    const std::size_t d = b.dim;
    const TensorElement r = q.r_tensor();
    const TensorElement c = b.weak_unit_tensor();
    const LinearOperator delta_op = b.delta_operator(), alpha_op = b.alpha_operator();

    const TensorElement r12 = embed_r(r, c, LegPair::L12);
    const TensorElement r13 = embed_r(r, c, LegPair::L13);
    const TensorElement r23 = embed_r(r, c, LegPair::L23);

    VerificationReport rep;
    rep.tolerance = tolerance;
    rep.add("qt_delta_alpha", residual_norm(kron(delta_op, alpha_op).apply(r) -
                                            legwise_multiply(r13, r23, b.mu, d)));
    rep.add("qt_alpha_delta", residual_norm(kron(alpha_op, delta_op).apply(r) -
                                            legwise_multiply(r13, r12, b.mu, d)));

    // [(tau o Delta)(x)] R = R Delta(x), per basis element x.
    double worst = 0.0;
    for (std::size_t x = 0; x < d; ++x) {
        TensorElement dx(b.ring, Dims{d, d});
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) dx[i * d + j] = b.delta_at(x, i, j);
        const TensorElement tdx = leg_permute(dx, {1, 0});
        worst = std::max(worst, residual_norm(legwise_multiply(tdx, r, b.mu, d) -
                                              legwise_multiply(r, dx, b.mu, d)));
    }
    rep.add("qt_r_delta", worst);
    return rep;
}

// (R12 R13) R23 = R23 (R13 R12)  and  R12 (R13 R23) = (R23 R13) R12,
// with the exact bracketings; no re-association is applied.
inline std::array<double, 2> check_qhybe(const QTHomBialgebra& q) {
    q.require_weak_unit("check_qhybe");
    const HomBialgebra& b = q.base;
    const std::size_t d = b.dim;
    const TensorElement r = q.r_tensor();
    const TensorElement c = b.weak_unit_tensor();
    const TensorElement r12 = embed_r(r, c, LegPair::L12);
    const TensorElement r13 = embed_r(r, c, LegPair::L13);
    const TensorElement r23 = embed_r(r, c, LegPair::L23);

    const double first =
        residual_norm(legwise_multiply(legwise_multiply(r12, r13, b.mu, d), r23, b.mu, d) -
                      legwise_multiply(r23, legwise_multiply(r13, r12, b.mu, d), b.mu, d));
    const double second =
        residual_norm(legwise_multiply(r12, legwise_multiply(r13, r23, b.mu, d), b.mu, d) -
                      legwise_multiply(legwise_multiply(r23, r13, b.mu, d), r12, b.mu, d));
    return {first, second};
}

// alpha^{(x)2}(R) = R
inline double is_alpha_invariant(const QTHomBialgebra& q) {
    const LinearOperator a = q.base.alpha_operator();
    const TensorElement r = q.r_tensor();
    return residual_norm(kron(a, a).apply(r) - r);
}

// Difference between the two bracketings on each side of the QHYBE; zero
// when R is alpha-invariant, generically nonzero otherwise.
inline double check_qhybe_coincide(const QTHomBialgebra& q) {
    q.require_weak_unit("check_qhybe_coincide");
    const HomBialgebra& b = q.base;
    const std::size_t d = b.dim;
    const TensorElement r = q.r_tensor();
    const TensorElement c = b.weak_unit_tensor();
    const TensorElement r12 = embed_r(r, c, LegPair::L12);
    const TensorElement r13 = embed_r(r, c, LegPair::L13);
    const TensorElement r23 = embed_r(r, c, LegPair::L23);

    const double lhs =
        residual_norm(legwise_multiply(legwise_multiply(r12, r13, b.mu, d), r23, b.mu, d) -
                      legwise_multiply(r12, legwise_multiply(r13, r23, b.mu, d), b.mu, d));
    const double rhs =
        residual_norm(legwise_multiply(r23, legwise_multiply(r13, r12, b.mu, d), b.mu, d) -
                      legwise_multiply(legwise_multiply(r23, r13, b.mu, d), r12, b.mu, d));
    return std::max(lhs, rhs);
}

struct LambdaMaps {
    LinearOperator lambda1, lambda1p, lambda2, lambda2p;  // all d x d, A* -> A
};

// lambda1(phi)  = <phi (x) alpha, R>         lambda1'(phi) = <alpha*(phi) (x) Id, R>
// lambda2(phi)  = <alpha (x) phi, R>         lambda2'(phi) = <Id (x) alpha*(phi), R>
// Materialized against the dual basis: column i is the image of e^i.
inline LambdaMaps lambda_maps(const QTHomBialgebra& q) {
    const HomBialgebra& b = q.base;
    const std::size_t d = b.dim;
    LambdaMaps lm{LinearOperator(b.ring, Dims{d}, Dims{d}), LinearOperator(b.ring, Dims{d}, Dims{d}),
                  LinearOperator(b.ring, Dims{d}, Dims{d}), LinearOperator(b.ring, Dims{d}, Dims{d})};
    auto R = [&](std::size_t i, std::size_t j) -> const Scalar& { return q.R[i * d + j]; };
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t row = 0; row < d; ++row) {
            Scalar l1 = Scalar::zero(b.ring), l1p = Scalar::zero(b.ring);
            Scalar l2 = Scalar::zero(b.ring), l2p = Scalar::zero(b.ring);
            for (std::size_t p = 0; p < d; ++p) {
                l1 += R(i, p) * b.alpha_at(row, p);       // sum_p R[i][p] alpha(e_p)
                l1p += b.alpha_at(i, p) * R(p, row);      // <e^i o alpha (x) Id, R>
                l2 += R(p, i) * b.alpha_at(row, p);       // sum_p R[p][i] alpha(e_p)
                l2p += R(row, p) * b.alpha_at(i, p);      // <Id (x) e^i o alpha, R>
            }
            lm.lambda1.at(row, i) = l1;
            lm.lambda1p.at(row, i) = l1p;
            lm.lambda2.at(row, i) = l2;
            lm.lambda2p.at(row, i) = l2p;
        }
    return lm;
}

// The four commuting-square residuals equivalent to the first two
// quasi-triangular axioms.  Dual structure maps come from dualize.
inline VerificationReport check_lambda_diagrams(const QTHomBialgebra& q, double tolerance = 1e-9) {
    const HomBialgebra& b = q.base;
    const std::size_t d = b.dim;
    const LambdaMaps lm = lambda_maps(q);
    const HomBialgebra dual = dualize(b);

    // Delta* as a multiplication A* (x) A* -> A*, mu* as a comultiplication
    // A* -> A* (x) A*, read in the dual basis.
    const LinearOperator delta_star = dual.mu_operator();
    const LinearOperator mu_star = dual.delta_operator();
    const LinearOperator mu_op = b.mu_operator();
    const LinearOperator delta_op = b.delta_operator();
    const LinearOperator tau = twist_operator(b.ring, d, d);
    const LinearOperator mu_opp = compose(mu_op, tau);
    const LinearOperator mu_star_opp = compose(tau, mu_star);

    VerificationReport rep;
    rep.tolerance = tolerance;
    rep.add("diagram_axiom1p", residual_norm(compose(lm.lambda1, delta_star) -
                                             compose(mu_op, kron(lm.lambda1p, lm.lambda1p))));
    rep.add("diagram_axiom1pp", residual_norm(compose(delta_op, lm.lambda2p) -
                                              compose(kron(lm.lambda2, lm.lambda2), mu_star)));
    rep.add("diagram_axiom2p", residual_norm(compose(lm.lambda2, delta_star) -
                                             compose(mu_opp, kron(lm.lambda2p, lm.lambda2p))));
    rep.add("diagram_axiom2pp", residual_norm(compose(delta_op, lm.lambda1p) -
                                              compose(kron(lm.lambda1, lm.lambda1), mu_star_opp)));
    return rep;
}

}  // namespace homq
