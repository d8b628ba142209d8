#pragma once

// Concrete constructors: finite abelian groups, group bialgebras kG,
// function bialgebras k(G), anyon-generating quantum groups, and the
// truncated U_h(sl2) model with its V~_n modules.

#include <numeric>

#include "twisting.hpp"

namespace homq {

struct FiniteAbelianGroup {
    std::vector<std::size_t> cyclic_orders;  // direct product of Z/n_i

    explicit FiniteAbelianGroup(std::vector<std::size_t> orders) : cyclic_orders(std::move(orders)) {
        for (std::size_t n : cyclic_orders)
            if (n < 1) throw std::invalid_argument("FiniteAbelianGroup: orders must be >= 1");
        if (cyclic_orders.empty()) throw std::invalid_argument("FiniteAbelianGroup: no factors");
    }

    std::size_t order() const {
        std::size_t p = 1;
        for (std::size_t n : cyclic_orders) p *= n;
        return p;
    }

    // Elements are tuples (a_1..a_r) enumerated lexicographically.
    std::vector<std::size_t> tuple(std::size_t idx) const {
        std::vector<std::size_t> t(cyclic_orders.size());
        for (std::size_t f = cyclic_orders.size(); f-- > 0;) {
            t[f] = idx % cyclic_orders[f];
            idx /= cyclic_orders[f];
        }
        return t;
    }
    std::size_t index(const std::vector<std::size_t>& t) const {
        std::size_t idx = 0;
        for (std::size_t f = 0; f < cyclic_orders.size(); ++f)
            idx = idx * cyclic_orders[f] + (t[f] % cyclic_orders[f]);
        return idx;
    }

    std::size_t identity() const { return 0; }

    std::size_t multiply(std::size_t a, std::size_t b) const {
        const auto ta = tuple(a), tb = tuple(b);
        std::vector<std::size_t> tc(cyclic_orders.size());
        for (std::size_t f = 0; f < cyclic_orders.size(); ++f)
            tc[f] = (ta[f] + tb[f]) % cyclic_orders[f];
        return index(tc);
    }

    std::size_t inverse(std::size_t a) const {
        const auto ta = tuple(a);
        std::vector<std::size_t> tc(cyclic_orders.size());
        for (std::size_t f = 0; f < cyclic_orders.size(); ++f)
            tc[f] = (cyclic_orders[f] - ta[f]) % cyclic_orders[f];
        return index(tc);
    }
};

struct GroupMorphism {
    // images[f] = image of the generator of the f-th cyclic factor
    std::vector<std::size_t> images;

    static GroupMorphism validated(const FiniteAbelianGroup& g, std::vector<std::size_t> images) {
        if (images.size() != g.cyclic_orders.size())
            throw std::invalid_argument("GroupMorphism: one image per cyclic factor required");
        GroupMorphism m{std::move(images)};
        for (std::size_t f = 0; f < g.cyclic_orders.size(); ++f) {
            std::size_t acc = g.identity();
            for (std::size_t t = 0; t < g.cyclic_orders[f]; ++t) acc = g.multiply(acc, m.images[f]);
            if (acc != g.identity())
                throw std::invalid_argument("GroupMorphism: image does not respect factor order");
        }
        return m;
    }

    std::size_t apply(const FiniteAbelianGroup& g, std::size_t elem) const {
        const auto t = g.tuple(elem);
        std::size_t acc = g.identity();
        for (std::size_t f = 0; f < t.size(); ++f)
            for (std::size_t rep = 0; rep < t[f]; ++rep) acc = g.multiply(acc, images[f]);
        return acc;
    }

    bool is_surjective(const FiniteAbelianGroup& g) const {
        std::vector<bool> hit(g.order(), false);
        for (std::size_t e = 0; e < g.order(); ++e) hit[apply(g, e)] = true;
        for (bool h : hit)
            if (!h) return false;
        return true;
    }

    // Linear extension to kG: alpha(e_u) = e_{alpha(u)}.
    std::vector<Scalar> matrix(const FiniteAbelianGroup& g, const Ring& ring) const {
        const std::size_t d = g.order();
        std::vector<Scalar> m(d * d, Scalar::zero(ring));
        for (std::size_t u = 0; u < d; ++u) m[apply(g, u) * d + u] = Scalar::one(ring);
        return m;
    }
};

// g |-> g^k on Z/n.
inline GroupMorphism cyclic_power_endo(const FiniteAbelianGroup& g, std::size_t k) {
    if (g.cyclic_orders.size() != 1)
        throw std::invalid_argument("cyclic_power_endo: single cyclic factor expected");
    return GroupMorphism::validated(g, {k % g.cyclic_orders[0]});
}

// Classical group bialgebra kG: group-table multiplication, group-like
// comultiplication, alpha = Id, weak unit the group identity.
inline HomBialgebra group_bialgebra(const FiniteAbelianGroup& g, const Ring& ring) {
    const std::size_t d = g.order();
    HomBialgebra b(ring, d);
    b.set_identity_alpha();
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) b.mu_at(i, j, g.multiply(i, j)) = Scalar::one(ring);
        b.delta_at(i, i, i) = Scalar::one(ring);
    }
    std::vector<Scalar> unit(d, Scalar::zero(ring));
    unit[g.identity()] = Scalar::one(ring);
    b.weak_unit = unit;
    return b;
}

// The two conditions for a function R: G x G -> k to define a classical
// quasi-triangular structure on kG:
//   sum_{xy=v} R(u,x)R(w,y) = delta_{u,w} R(u,v)
//   sum_{xy=u} R(x,v)R(y,w) = delta_{v,w} R(u,v)
inline std::array<double, 2> check_group_r(const FiniteAbelianGroup& g,
                                           const std::vector<Scalar>& rtable) {
    const std::size_t d = g.order();
    if (rtable.size() != d * d) throw std::invalid_argument("check_group_r: table size mismatch");
    const Ring ring = rtable[0].ring();
    auto R = [&](std::size_t u, std::size_t v) -> const Scalar& { return rtable[u * d + v]; };
    double r1 = 0.0, r2 = 0.0;
    for (std::size_t u = 0; u < d; ++u)
        for (std::size_t v = 0; v < d; ++v)
            for (std::size_t w = 0; w < d; ++w) {
                Scalar s1 = Scalar::zero(ring), s2 = Scalar::zero(ring);
                for (std::size_t x = 0; x < d; ++x) {
                    const std::size_t y = g.multiply(g.inverse(x), v);  // xy = v
                    s1 += R(u, x) * R(w, y);
                    const std::size_t y2 = g.multiply(g.inverse(x), u);  // xy2 = u
                    s2 += R(x, v) * R(y2, w);
                }
                if (u == w) s1 -= R(u, v);
                if (v == w) s2 -= R(u, v);
                r1 = std::max(r1, s1.max_abs());
                r2 = std::max(r2, s2.max_abs());
            }
    return {r1, r2};
}

// Classical function bialgebra k(G) on the delta-function basis.
inline HomBialgebra function_bialgebra(const FiniteAbelianGroup& g, const Ring& ring) {
    const std::size_t d = g.order();
    HomBialgebra b(ring, d);
    b.set_identity_alpha();
    for (std::size_t u = 0; u < d; ++u) {
        b.mu_at(u, u, u) = Scalar::one(ring);  // delta_u . delta_v = delta_{u,v} delta_u
        for (std::size_t v = 0; v < d; ++v) b.delta_at(g.multiply(u, v), u, v) = Scalar::one(ring);
    }
    // The constant function 1 is the multiplicative identity.
    b.weak_unit = std::vector<Scalar>(d, Scalar::one(ring));
    return b;
}

// Validate a bicharacter table:  R(uv,w) = R(u,w)R(v,w),  R(u,vw) = R(u,w)R(u,v).
inline std::vector<Scalar> bicharacter_r(const FiniteAbelianGroup& g,
                                         const std::vector<Scalar>& chi, double tolerance = 1e-9) {
    const std::size_t d = g.order();
    if (chi.size() != d * d) throw std::invalid_argument("bicharacter_r: table size mismatch");
    auto C = [&](std::size_t u, std::size_t v) -> const Scalar& { return chi[u * d + v]; };
    double worst = 0.0;
    for (std::size_t u = 0; u < d; ++u)
        for (std::size_t v = 0; v < d; ++v)
            for (std::size_t w = 0; w < d; ++w) {
                worst = std::max(worst, (C(g.multiply(u, v), w) - C(u, w) * C(v, w)).max_abs());
                worst = std::max(worst, (C(u, g.multiply(v, w)) - C(u, w) * C(u, v)).max_abs());
            }
    if (worst >= tolerance)
        throw std::invalid_argument("bicharacter_r: table fails the bicharacter conditions (residual " +
                                    std::to_string(worst) + ")");
    return chi;
}

// Anyon-generating quantum group: kZ/n with
// R = (1/n) sum_{p,q} exp(-2 pi i pq / n) g^p (x) g^q.
inline QTHomBialgebra anyonic_qt(std::size_t n, const Ring& ring = Ring::approx_complex()) {
    if (n < 1) throw std::invalid_argument("anyonic_qt: n must be >= 1");
    const FiniteAbelianGroup g({n});
    HomBialgebra b = group_bialgebra(g, ring);
    std::vector<Scalar> r(n * n, Scalar::zero(ring));
    const cplx inv_n{1.0 / static_cast<double>(n), 0.0};
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q)
            r[p * n + q] = inv_n * root_of_unity(static_cast<int>(n),
                                                 -static_cast<int>((p * q) % n), ring);
    return QTHomBialgebra(std::move(b), std::move(r));
}

// --- U_h(sl2) at module level ------------------------------------------
//
// The algebra is infinite-dimensional; everything is represented through
// its action on the rank-(n+1) modules V~_n.

struct Uhsl2Model {
    cplx c_param;  // the twisting parameter c; gamma = e^{2c}
    Ring ring;     // HSeries ring

    Uhsl2Model(cplx c, const Ring& r) : c_param(c), ring(r) {
        if (r.kind != Ring::Kind::HSeries)
            throw std::invalid_argument("Uhsl2Model: HSeries ring required");
    }
    cplx gamma() const { return std::exp(2.0 * c_param); }
};

struct Uhsl2Action {
    LinearOperator h, x_plus, x_minus;
};

// rho(H, v_i) = (n-2i) v_i,  rho(X+, v_i) = [n+1-i]_q v_{i-1},
// rho(X-, v_i) = [i+1]_q v_{i+1}, with v_{-1} = 0 = v_{n+1}.
inline Uhsl2Action vn_action(std::size_t n, const Ring& ring) {
    const std::size_t d = n + 1;
    LinearOperator h(ring, Dims{d}, Dims{d}), xp(ring, Dims{d}, Dims{d}), xm(ring, Dims{d}, Dims{d});
    for (std::size_t i = 0; i <= n; ++i) {
        h.at(i, i) = Scalar(ring, cplx(static_cast<double>(n) - 2.0 * static_cast<double>(i), 0.0));
        if (i >= 1) xp.at(i - 1, i) = q_integer(static_cast<int>(n + 1 - i), ring);
        if (i + 1 <= n) xm.at(i + 1, i) = q_integer(static_cast<int>(i + 1), ring);
    }
    return {h, xp, xm};
}

// alpha(v_i) = gamma^{-i} v_i.
inline LinearOperator vn_alpha(std::size_t n, cplx gamma, const Ring& ring) {
    if (std::abs(gamma) == 0.0) throw std::invalid_argument("vn_alpha: gamma must be nonzero");
    const std::size_t d = n + 1;
    LinearOperator a(ring, Dims{d}, Dims{d});
    cplx power{1.0, 0.0};
    for (std::size_t i = 0; i <= n; ++i) {
        a.at(i, i) = Scalar(ring, power);
        power /= gamma;
    }
    return a;
}

// Scalar multipliers of (H, X+, X-) under the inner automorphism
// alpha(u) = e^{chH} u e^{-chH}: (1, gamma, gamma^{-1}).
inline std::array<cplx, 3> uhsl2_generator_alpha_images(cplx gamma) {
    return {cplx{1.0, 0.0}, gamma, cplx{1.0, 0.0} / gamma};
}

// Action of the quasi-triangular structure
//   R = sum_{a>=0} (q-q^{-1})^a/[a]_q! q^{-a(a+1)/2}
//       exp{ h/4 [H(x)H + a(H(x)1 - 1(x)H)] } (X+^a (x) X-^a)
// on V~_n (x) V~_m.  The sum is finite: X+^a and X-^a vanish beyond
// a = min(n,m).  H acts diagonally with integer eigenvalues, so the
// exponential factor is a diagonal of series exponentials, and the
// prefactor is assembled as prod_j (q-q^{-1}) * invert([j]_q), avoiding the
// non-invertible q - q^{-1} denominator.
inline LinearOperator uhsl2_r_operator(std::size_t n, std::size_t m, const Ring& ring) {
    if (ring.kind != Ring::Kind::HSeries)
        throw std::invalid_argument("uhsl2_r_operator: HSeries ring required");
    const std::size_t dn = n + 1, dm = m + 1;
    LinearOperator r(ring, Dims{dn, dm}, Dims{dn, dm});
    const Scalar q_minus_qinv = q_power(cplx{1.0, 0.0}, ring) - q_power(cplx{-1.0, 0.0}, ring);
    Scalar prefactor = Scalar::one(ring);  // (q-q^{-1})^a / [a]_q!
    const std::size_t a_max = std::min(n, m);
    for (std::size_t a = 0; a <= a_max; ++a) {
        if (a > 0) prefactor *= q_minus_qinv * series_invert(q_integer(static_cast<int>(a), ring));
        const Scalar qshift =
            q_power(cplx(-0.5 * static_cast<double>(a) * static_cast<double>(a + 1), 0.0), ring);
        for (std::size_t i = a; i <= n; ++i)
            for (std::size_t j = 0; j + a <= m; ++j) {
                // (X+^a (x) X-^a)(v_i (x) v_j) with accumulated q-integer weights
                Scalar weight = Scalar::one(ring);
                for (std::size_t t = 0; t < a; ++t) {
                    weight *= q_integer(static_cast<int>(n + 1 - i + t), ring);
                    weight *= q_integer(static_cast<int>(j + 1 + t), ring);
                }
                // diagonal exponential at the target basis vector
                const double lam = static_cast<double>(n) - 2.0 * static_cast<double>(i - a);
                const double lam2 = static_cast<double>(m) - 2.0 * static_cast<double>(j + a);
                const Scalar expo =
                    q_power(cplx(0.5 * (lam * lam2 + static_cast<double>(a) * (lam - lam2)), 0.0), ring);
                r.at((i - a) * dm + (j + a), i * dm + j) += prefactor * qshift * expo * weight;
            }
    }
    return r;
}

}  // namespace homq
