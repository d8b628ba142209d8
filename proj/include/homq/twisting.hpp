#pragma once

// The two constructive procedures: twisting the (co)multiplication of a
// classical quasi-triangular bialgebra along a bialgebra morphism, and
// twisting the quasi-triangular structure R by powers of alpha.

#include "quasitri.hpp"

namespace homq {

// alpha o mu = mu o alpha^{(x)2}  and  alpha^{(x)2} o Delta = Delta o alpha,
// for a candidate morphism matrix against a classical bialgebra.
inline double check_bialgebra_morphism(const std::vector<Scalar>& alpha, const HomBialgebra& b) {
    if (alpha.size() != b.dim * b.dim)
        throw std::invalid_argument("check_bialgebra_morphism: alpha size mismatch");
    LinearOperator a(b.ring, Dims{b.dim}, Dims{b.dim});
    for (std::size_t r = 0; r < b.dim; ++r)
        for (std::size_t c = 0; c < b.dim; ++c) a.at(r, c) = alpha[r * b.dim + c];
    const LinearOperator m = b.mu_operator(), dl = b.delta_operator();
    const double alg = residual_norm(compose(a, m) - compose(m, kron(a, a)));
    const double coalg = residual_norm(compose(kron(a, a), dl) - compose(dl, a));
    return std::max(alg, coalg);
}

// mu_alpha = alpha o mu, Delta_alpha = Delta o alpha; the twist map becomes
// alpha and a classical unit survives as the weak unit.
inline HomBialgebra yau_twist(const HomBialgebra& b, const std::vector<Scalar>& alpha,
                              double tolerance = 1e-9) {
    const double morph = check_bialgebra_morphism(alpha, b);
    if (morph >= tolerance)
        throw std::invalid_argument("yau_twist: alpha is not a bialgebra morphism (residual " +
                                    std::to_string(morph) + ")");
    const std::size_t d = b.dim;
    HomBialgebra t(b.ring, d);
    t.alpha = alpha;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k) {
                Scalar mu_a = Scalar::zero(b.ring), delta_a = Scalar::zero(b.ring);
                for (std::size_t p = 0; p < d; ++p) {
                    mu_a += b.mu_at(i, j, p) * alpha[k * d + p];
                    delta_a += alpha[p * d + k] * b.delta_at(p, i, j);
                }
                t.mu_at(i, j, k) = mu_a;
                t.delta_at(k, i, j) = delta_a;
            }
    t.weak_unit = b.weak_unit;
    return t;
}

namespace detail {

// Surjective endomorphism of a finite-dimensional space is bijective, so the
// hypothesis is enforced as invertibility of the constant-term matrix.
inline bool invertible_matrix(const std::vector<Scalar>& alpha, std::size_t d, double tolerance) {
    std::vector<cplx> m(d * d);
    for (std::size_t i = 0; i < d * d; ++i) m[i] = alpha[i].constant_term();
    for (std::size_t col = 0; col < d; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < d; ++r)
            if (std::abs(m[r * d + col]) > std::abs(m[pivot * d + col])) pivot = r;
        if (std::abs(m[pivot * d + col]) <= tolerance) return false;
        if (pivot != col)
            for (std::size_t c = 0; c < d; ++c) std::swap(m[pivot * d + c], m[col * d + c]);
        for (std::size_t r = col + 1; r < d; ++r) {
            const cplx f = m[r * d + col] / m[col * d + col];
            for (std::size_t c = col; c < d; ++c) m[r * d + c] -= f * m[col * d + c];
        }
    }
    return true;
}

inline std::vector<Scalar> matrix_multiply(const std::vector<Scalar>& a, const std::vector<Scalar>& b,
                                           std::size_t d, const Ring& ring) {
    std::vector<Scalar> r(d * d, Scalar::zero(ring));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t k = 0; k < d; ++k) {
            if (a[i * d + k].is_zero()) continue;
            for (std::size_t j = 0; j < d; ++j) r[i * d + j] += a[i * d + k] * b[k * d + j];
        }
    return r;
}

}  // namespace detail

// Pre-twist sanity for the classical input: alpha = Id and the classical
// quasi-triangular axioms, both as residuals.
inline VerificationReport check_classical_qt(const HomBialgebra& b, const std::vector<Scalar>& r,
                                             double tolerance = 1e-9) {
    VerificationReport rep = check_all_bialgebra(b, tolerance);
    rep.merge(check_qt_axioms(QTHomBialgebra(b, r), tolerance));
    return rep;
}

inline QTHomBialgebra qt_yau_twist(const HomBialgebra& b, const std::vector<Scalar>& r,
                                   const std::vector<Scalar>& alpha, double tolerance = 1e-9,
                                   bool verify = true) {
    if (verify) {
        const VerificationReport pre = check_classical_qt(b, r, tolerance);
        if (!pre.pass())
            throw std::invalid_argument("qt_yau_twist: input is not a quasi-triangular bialgebra "
                                        "(max residual " + std::to_string(pre.max_residual()) + ")");
    }
    QTHomBialgebra q(yau_twist(b, alpha, tolerance), r);
    if (verify) {
        VerificationReport post = check_all_bialgebra(q.base, tolerance);
        post.merge(check_qt_axioms(q, tolerance));
        if (!post.pass())
            throw std::logic_error("qt_yau_twist: twisted structure failed verification (max residual " +
                                   std::to_string(post.max_residual()) + ")");
    }
    return q;
}

// Replace R by (alpha^n (x) alpha^n)(R).  Requires alpha surjective.
inline QTHomBialgebra twist_r(const QTHomBialgebra& q, int n, double tolerance = 1e-9,
                              bool verify = true) {
    if (n < 1) throw std::invalid_argument("twist_r: n must be >= 1");
    const std::size_t d = q.base.dim;
    if (!detail::invertible_matrix(q.base.alpha, d, tolerance))
        throw std::invalid_argument("twist_r: alpha not surjective (hypothesis violated)");
    std::vector<Scalar> an = q.base.alpha;
    for (int t = 1; t < n; ++t) an = detail::matrix_multiply(an, q.base.alpha, d, q.base.ring);
    // R' = A^n R (A^n)^T
    std::vector<Scalar> r_new(d * d, Scalar::zero(q.base.ring));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            Scalar acc = Scalar::zero(q.base.ring);
            for (std::size_t p = 0; p < d; ++p) {
                if (an[i * d + p].is_zero()) continue;
                for (std::size_t s = 0; s < d; ++s) acc += an[i * d + p] * q.R[p * d + s] * an[j * d + s];
            }
            r_new[i * d + j] = acc;
        }
    QTHomBialgebra out(q.base, std::move(r_new));
    if (verify) {
        const VerificationReport rep = check_qt_axioms(out, tolerance);
        if (!rep.pass())
            throw std::logic_error("twist_r: twisted structure failed verification (max residual " +
                                   std::to_string(rep.max_residual()) + ")");
    }
    return out;
}

inline QTHomBialgebra qt_yau_twist_powered(const HomBialgebra& b, const std::vector<Scalar>& r,
                                           const std::vector<Scalar>& alpha, int n,
                                           double tolerance = 1e-9, bool verify = true) {
    return twist_r(qt_yau_twist(b, r, alpha, tolerance, verify), n, tolerance, verify);
}

}  // namespace homq
