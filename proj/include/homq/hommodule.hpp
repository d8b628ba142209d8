#pragma once

// Hom-modules over Hom-associative algebras, the canonical HYBE solution
// B = tau o R, twisted modules, HYBE verification, braid operators, and
// the U_h(sl2) module-level constructions.

#include "catalog.hpp"

namespace homq {

struct HomModule {
    Ring ring;
    std::size_t dim;
    LinearOperator alpha_m;
    std::vector<LinearOperator> action;  // action[a]: operator of basis element e_a
};

struct HybeSolution {
    LinearOperator b;        // on M (x) M
    LinearOperator alpha_m;  // on M
    bool hypotheses_verified = true;
};

// (ab) alpha_M(x) = alpha_A(a)(bx)  and  alpha_M(ax) = alpha_A(a) alpha_M(x),
// over all basis pairs of the acting Hom-algebra.
inline std::array<double, 2> check_module_axioms(const HomBialgebra& alg, const HomModule& m) {
    const std::size_t d = alg.dim;
    if (m.action.size() != d) throw std::invalid_argument("check_module_axioms: missing action data");
    // lambda(alpha_A(e_a)) as an operator, per basis element a
    std::vector<LinearOperator> act_alpha;
    act_alpha.reserve(d);
    for (std::size_t a = 0; a < d; ++a) {
        LinearOperator op(m.ring, Dims{m.dim}, Dims{m.dim});
        for (std::size_t p = 0; p < d; ++p) {
            if (alg.alpha_at(p, a).is_zero()) continue;
            op += alg.alpha_at(p, a) * m.action[p];
        }
        act_alpha.push_back(std::move(op));
    }
    double r1 = 0.0, r2 = 0.0;
    for (std::size_t a = 0; a < d; ++a) {
        r2 = std::max(r2, residual_norm(compose(m.alpha_m, m.action[a]) -
                                        compose(act_alpha[a], m.alpha_m)));
        for (std::size_t b = 0; b < d; ++b) {
            LinearOperator lhs(m.ring, Dims{m.dim}, Dims{m.dim});
            for (std::size_t k = 0; k < d; ++k) {
                if (alg.mu_at(a, b, k).is_zero()) continue;
                lhs += alg.mu_at(a, b, k) * m.action[k];
            }
            r1 = std::max(r1, residual_norm(compose(lhs, m.alpha_m) -
                                            compose(act_alpha[a], m.action[b])));
        }
    }
    return {r1, r2};
}

// The algebra acting on itself: lambda = mu, alpha_M = alpha.
inline HomModule regular_module(const HomBialgebra& b) {
    HomModule m{b.ring, b.dim, b.alpha_operator(), {}};
    m.action.reserve(b.dim);
    for (std::size_t a = 0; a < b.dim; ++a) {
        LinearOperator op(b.ring, Dims{b.dim}, Dims{b.dim});
        for (std::size_t j = 0; j < b.dim; ++j)
            for (std::size_t k = 0; k < b.dim; ++k) op.at(k, j) = b.mu_at(a, j, k);
        m.action.push_back(std::move(op));
    }
    return m;
}

// Twist a classical module along (alpha_A, alpha_M) with the intertwining
// hypothesis alpha_M o lambda = lambda o (alpha_A (x) alpha_M) checked as a
// residual; the twisted action is lambda_alpha = alpha_M o lambda.
inline HomModule twisted_module(const std::vector<LinearOperator>& classical_action,
                                const std::vector<Scalar>& alpha_a,
                                const LinearOperator& alpha_m, double tolerance = 1e-9) {
    const std::size_t d = classical_action.size();
    if (d == 0 || alpha_a.size() != d * d)
        throw std::invalid_argument("twisted_module: inconsistent algebra data");
    const Ring ring = alpha_m.ring();
    const std::size_t mdim = alpha_m.rows();
    double worst = 0.0;
    std::vector<LinearOperator> twisted;
    twisted.reserve(d);
    for (std::size_t a = 0; a < d; ++a) {
        LinearOperator lam_alpha_a(ring, Dims{mdim}, Dims{mdim});
        for (std::size_t p = 0; p < d; ++p) {
            if (alpha_a[p * d + a].is_zero()) continue;
            lam_alpha_a += alpha_a[p * d + a] * classical_action[p];
        }
        worst = std::max(worst, residual_norm(compose(alpha_m, classical_action[a]) -
                                              compose(lam_alpha_a, alpha_m)));
        twisted.push_back(compose(alpha_m, classical_action[a]));
    }
    if (worst >= tolerance)
        throw std::invalid_argument("twisted_module: intertwining hypothesis fails (residual " +
                                    std::to_string(worst) + ")");
    return HomModule{ring, mdim, alpha_m, std::move(twisted)};
}

// Action of R = sum R[i][j] e_i (x) e_j on M (x) M through the module action.
inline LinearOperator module_r_operator(const HomModule& m, const std::vector<Scalar>& r) {
    const std::size_t d = m.action.size();
    if (r.size() != d * d) throw std::invalid_argument("module_r_operator: R size mismatch");
    LinearOperator op(m.ring, Dims{m.dim, m.dim}, Dims{m.dim, m.dim});
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            if (r[i * d + j].is_zero()) continue;
            op += r[i * d + j] * kron(m.action[i], m.action[j]);
        }
    return op;
}

// B = tau o R on a module over a quasi-triangular Hom-bialgebra whose R is
// alpha-invariant.  The debug flag builds anyway but marks the result
// unverified.
inline HybeSolution build_b(const HomModule& m, const QTHomBialgebra& q, double tolerance = 1e-9,
                            bool force_unverified = false) {
    const double inv = is_alpha_invariant(q);
    if (inv >= tolerance && !force_unverified)
        throw std::invalid_argument("build_b: R is not alpha-invariant (residual " +
                                    std::to_string(inv) + "); hypothesis unmet");
    const LinearOperator r_op = module_r_operator(m, q.R);
    const LinearOperator tau = twist_operator(m.ring, m.dim, m.dim);
    return HybeSolution{compose(tau, r_op), m.alpha_m, inv < tolerance};
}

// B_alpha = (alpha_M (x) alpha_M) o tau o R_op for a classical module twisted
// along alpha_M; hypothesis residual (alpha-invariance of R and intertwining)
// is supplied by the caller.
inline HybeSolution build_b_alpha(const LinearOperator& r_op, const LinearOperator& alpha_m,
                                  double hypothesis_residual, double tolerance = 1e-9,
                                  bool force_unverified = false) {
    if (hypothesis_residual >= tolerance && !force_unverified)
        throw std::invalid_argument("build_b_alpha: hypothesis residual " +
                                    std::to_string(hypothesis_residual) + " exceeds tolerance");
    const std::size_t mdim = alpha_m.rows();
    const LinearOperator tau = twist_operator(alpha_m.ring(), mdim, mdim);
    return HybeSolution{compose(kron(alpha_m, alpha_m), compose(tau, r_op)), alpha_m,
                        hypothesis_residual < tolerance};
}

// HYBE residual plus the residual of [B, alpha_M^{(x)2}].
inline std::array<double, 2> check_hybe(const HybeSolution& s) {
    const LinearOperator& a = s.alpha_m;
    const LinearOperator ab = kron(a, s.b), ba = kron(s.b, a);
    const double hybe = residual_norm(compose(ab, compose(ba, ab)) - compose(ba, compose(ab, ba)));
    const LinearOperator a2 = kron(a, a);
    const double comm = residual_norm(compose(s.b, a2) - compose(a2, s.b));
    return {hybe, comm};
}

// B_i = alpha^{(x)(i-1)} (x) B (x) alpha^{(x)(n-i-1)} on M^{(x)n}.
inline std::vector<LinearOperator> braid_operators(const HybeSolution& s, std::size_t strands) {
    if (strands < 3) throw std::invalid_argument("braid_operators: need at least 3 strands");
    const std::size_t mdim = s.alpha_m.rows();
    double total = 1.0;
    for (std::size_t i = 0; i < strands; ++i) total *= static_cast<double>(mdim);
    if (total > 65536.0)
        throw std::invalid_argument("braid_operators: dim^strands exceeds the 65536 cap");
    std::vector<LinearOperator> ops;
    ops.reserve(strands - 1);
    for (std::size_t i = 1; i <= strands - 1; ++i) {
        // alpha^{(x)(i-1)} (x) B (x) alpha^{(x)(strands-i-1)}
        LinearOperator op = i == 1 ? s.b : s.alpha_m;
        for (std::size_t f = 2; f < i; ++f) op = kron(op, s.alpha_m);
        if (i > 1) op = kron(op, s.b);
        for (std::size_t f = i + 2; f <= strands; ++f) op = kron(op, s.alpha_m);
        ops.push_back(std::move(op));
    }
    return ops;
}

struct BraidResiduals {
    double adjacent = 0.0;  // B_i B_{i+1} B_i = B_{i+1} B_i B_{i+1}
    double far = 0.0;       // B_i B_j = B_j B_i for |i-j| > 1
};

inline BraidResiduals check_braid_relations(const std::vector<LinearOperator>& ops) {
    BraidResiduals r;
    for (std::size_t i = 0; i + 1 < ops.size(); ++i)
        r.adjacent = std::max(r.adjacent,
                              residual_norm(compose(ops[i], compose(ops[i + 1], ops[i])) -
                                            compose(ops[i + 1], compose(ops[i], ops[i + 1]))));
    for (std::size_t i = 0; i < ops.size(); ++i)
        for (std::size_t j = i + 2; j < ops.size(); ++j)
            r.far = std::max(r.far, residual_norm(compose(ops[i], ops[j]) - compose(ops[j], ops[i])));
    return r;
}

// --- U_h(sl2)_alpha on V~_n ---------------------------------------------

// alpha_M o rho(u) = rho(alpha_A(u)) o alpha_M on the generators, where
// alpha_A rescales (H, X+, X-) by (1, gamma, gamma^{-1}).
inline double uhsl2_intertwining_residual(std::size_t n, const Uhsl2Model& model) {
    const Uhsl2Action act = vn_action(n, model.ring);
    const LinearOperator a = vn_alpha(n, model.gamma(), model.ring);
    const auto kappa = uhsl2_generator_alpha_images(model.gamma());
    const LinearOperator* gens[3] = {&act.h, &act.x_plus, &act.x_minus};
    double worst = 0.0;
    for (int i = 0; i < 3; ++i) {
        const Scalar k(model.ring, kappa[static_cast<std::size_t>(i)]);
        worst = std::max(worst,
                         residual_norm(compose(a, *gens[i]) - k * compose(*gens[i], a)));
    }
    return worst;
}

// alpha-invariance of R at module level: conjugation by alpha^{(x)2} fixes
// the R operator, checked as a commutator residual.
inline double uhsl2_r_alpha_invariance_residual(std::size_t n, const Uhsl2Model& model) {
    const LinearOperator r = uhsl2_r_operator(n, n, model.ring);
    const LinearOperator a2 = kron(vn_alpha(n, model.gamma(), model.ring),
                                   vn_alpha(n, model.gamma(), model.ring));
    return residual_norm(compose(a2, r) - compose(r, a2));
}

// Generator-level module axioms for (V~_n, alpha) over U_h(sl2)_alpha, over
// the nine generator pairs, using lambda_alpha = alpha_M o rho and
// mu_alpha(a,b) = alpha_A(ab).
inline std::array<double, 2> check_module_axioms_uhsl2(std::size_t n, const Uhsl2Model& model) {
    const Uhsl2Action act = vn_action(n, model.ring);
    const LinearOperator a = vn_alpha(n, model.gamma(), model.ring);
    const auto kappa = uhsl2_generator_alpha_images(model.gamma());
    const LinearOperator* gens[3] = {&act.h, &act.x_plus, &act.x_minus};
    double r1 = 0.0, r2 = 0.0;
    for (std::size_t i = 0; i < 3; ++i) {
        const Scalar ki(model.ring, kappa[i]);
        // alpha_M o lambda_alpha(u) = lambda_alpha(alpha_A(u)) o alpha_M
        r2 = std::max(r2, residual_norm(compose(a, compose(a, *gens[i])) -
                                        ki * compose(a, compose(*gens[i], a))));
        for (std::size_t j = 0; j < 3; ++j) {
            const Scalar kj(model.ring, kappa[j]);
            // lambda_alpha(mu_alpha(u,v)) o alpha_M = lambda_alpha(alpha_A(u)) o lambda_alpha(v)
            const LinearOperator lhs =
                (ki * kj) * compose(a, compose(*gens[i], compose(*gens[j], a)));
            const LinearOperator rhs =
                ki * compose(a, compose(*gens[i], compose(a, *gens[j])));
            r1 = std::max(r1, residual_norm(lhs - rhs));
        }
    }
    return {r1, r2};
}

// B_alpha = alpha^{(x)2} o tau o R on V~_n (x) V~_n.
inline HybeSolution build_b_alpha_uhsl2(std::size_t n, const Uhsl2Model& model,
                                        double tolerance = 1e-9, bool force_unverified = false) {
    const double hyp = std::max(uhsl2_intertwining_residual(n, model),
                                uhsl2_r_alpha_invariance_residual(n, model));
    return build_b_alpha(uhsl2_r_operator(n, n, model.ring),
                         vn_alpha(n, model.gamma(), model.ring), hyp, tolerance, force_unverified);
}

// The 4x4 HYBE solution on V~_1, in the basis order
// {v0(x)v0, v0(x)v1, v1(x)v0, v1(x)v1} with columns as images.
inline LinearOperator b_alpha_v1_matrix(cplx c_param, const Ring& ring) {
    return build_b_alpha_uhsl2(1, Uhsl2Model(c_param, ring)).b;
}

}  // namespace homq
