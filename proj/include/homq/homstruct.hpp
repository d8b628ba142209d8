#pragma once

// Hom-algebra / Hom-coalgebra / Hom-bialgebra structures over dense
// structure constants, every axiom expressed as a computable residual,
// weak units, and the dual construction.
//
// Structure constant conventions (flat, lexicographic):
//   mu[(i*d+j)*d+k]    coefficient of e_k in e_i e_j
//   delta[(k*d+i)*d+j] coefficient of e_i (x) e_j in Delta(e_k)
//   alpha[r*d+c]       coefficient of e_r in alpha(e_c)   (columns = images)

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tensor.hpp"

namespace homq {

struct VerificationReport {
    std::vector<std::pair<std::string, double>> entries;
    double tolerance = 1e-9;

    void add(const std::string& name, double residual) { entries.emplace_back(name, residual); }
    void merge(const VerificationReport& other) {
        for (const auto& e : other.entries) entries.push_back(e);
    }
    double max_residual() const {
        double m = 0.0;
        for (const auto& [name, r] : entries) m = std::max(m, r);
        return m;
    }
    bool pass() const { return max_residual() < tolerance; }
    double residual(const std::string& name) const {
        for (const auto& [n, r] : entries)
            if (n == name) return r;
        throw std::out_of_range("VerificationReport: no entry named " + name);
    }
};

struct HomBialgebra {
    Ring ring;
    std::size_t dim = 0;
    std::vector<Scalar> mu;     // d^3
    std::vector<Scalar> delta;  // d^3
    std::vector<Scalar> alpha;  // d^2
    std::optional<std::vector<Scalar>> weak_unit;  // length d

    HomBialgebra(Ring r, std::size_t d)
        : ring(r),
          dim(d),
          mu(d * d * d, Scalar::zero(r)),
          delta(d * d * d, Scalar::zero(r)),
          alpha(d * d, Scalar::zero(r)) {
        if (d == 0) throw std::invalid_argument("HomBialgebra: dim must be positive");
    }

    Scalar& mu_at(std::size_t i, std::size_t j, std::size_t k) { return mu[(i * dim + j) * dim + k]; }
    const Scalar& mu_at(std::size_t i, std::size_t j, std::size_t k) const { return mu[(i * dim + j) * dim + k]; }
    Scalar& delta_at(std::size_t k, std::size_t i, std::size_t j) { return delta[(k * dim + i) * dim + j]; }
    const Scalar& delta_at(std::size_t k, std::size_t i, std::size_t j) const { return delta[(k * dim + i) * dim + j]; }
    Scalar& alpha_at(std::size_t r, std::size_t c) { return alpha[r * dim + c]; }
    const Scalar& alpha_at(std::size_t r, std::size_t c) const { return alpha[r * dim + c]; }

    void set_identity_alpha() {
        for (std::size_t r = 0; r < dim; ++r)
            for (std::size_t c = 0; c < dim; ++c)
                alpha_at(r, c) = r == c ? Scalar::one(ring) : Scalar::zero(ring);
    }

    LinearOperator mu_operator() const {
        LinearOperator op(ring, Dims{dim}, Dims{dim, dim});
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < dim; ++j)
                for (std::size_t k = 0; k < dim; ++k) op.at(k, i * dim + j) = mu_at(i, j, k);
        return op;
    }

    LinearOperator delta_operator() const {
        LinearOperator op(ring, Dims{dim, dim}, Dims{dim});
        for (std::size_t k = 0; k < dim; ++k)
            for (std::size_t i = 0; i < dim; ++i)
                for (std::size_t j = 0; j < dim; ++j) op.at(i * dim + j, k) = delta_at(k, i, j);
        return op;
    }

    LinearOperator alpha_operator() const {
        LinearOperator op(ring, Dims{dim}, Dims{dim});
        for (std::size_t r = 0; r < dim; ++r)
            for (std::size_t c = 0; c < dim; ++c) op.at(r, c) = alpha_at(r, c);
        return op;
    }

    TensorElement weak_unit_tensor() const {
        if (!weak_unit) throw std::invalid_argument("HomBialgebra: weak unit not present");
        return TensorElement(ring, Dims{dim}, *weak_unit);
    }
};

// alpha o mu = mu o alpha^{(x)2}
inline double check_multiplicativity(const HomBialgebra& b) {
    const LinearOperator m = b.mu_operator(), a = b.alpha_operator();
    return residual_norm(compose(a, m) - compose(m, kron(a, a)));
}

// mu o (alpha (x) mu) = mu o (mu (x) alpha)
inline double check_hom_associativity(const HomBialgebra& b) {
    const LinearOperator m = b.mu_operator(), a = b.alpha_operator();
    return residual_norm(compose(m, kron(a, m)) - compose(m, kron(m, a)));
}

// alpha^{(x)2} o Delta = Delta o alpha
inline double check_comultiplicativity(const HomBialgebra& b) {
    const LinearOperator d = b.delta_operator(), a = b.alpha_operator();
    return residual_norm(compose(kron(a, a), d) - compose(d, a));
}

// (alpha (x) Delta) o Delta = (Delta (x) alpha) o Delta
inline double check_hom_coassociativity(const HomBialgebra& b) {
    const LinearOperator d = b.delta_operator(), a = b.alpha_operator();
    return residual_norm(compose(kron(a, d), d) - compose(kron(d, a), d));
}

// Delta o mu = mu^{(x)2} o (Id (x) tau (x) Id) o Delta^{(x)2}, evaluated on
// basis pairs to avoid materializing the d^4 x d^4 middle twist.
inline double check_compatibility(const HomBialgebra& b) {
    const std::size_t d = b.dim;
    std::vector<TensorElement> deltas;
    deltas.reserve(d);
    for (std::size_t i = 0; i < d; ++i) {
        TensorElement di(b.ring, Dims{d, d});
        for (std::size_t x = 0; x < d; ++x)
            for (std::size_t y = 0; y < d; ++y) di[x * d + y] = b.delta_at(i, x, y);
        deltas.push_back(std::move(di));
    }
    double worst = 0.0;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            TensorElement lhs(b.ring, Dims{d, d});
            for (std::size_t k = 0; k < d; ++k) {
                const Scalar& m = b.mu_at(i, j, k);
                if (m.is_zero()) continue;
                lhs += m * deltas[k];
            }
            TensorElement t = leg_permute(outer(deltas[i], deltas[j]), {0, 2, 1, 3});
            t = contract_pair(t, 0, b.mu, d);
            t = contract_pair(t, 1, b.mu, d);
            worst = std::max(worst, residual_norm(lhs - t));
        }
    return worst;
}

// alpha(x) = cx = xc on every basis vector.
inline double check_weak_unit(const HomBialgebra& b, const std::vector<Scalar>& c) {
    if (c.size() != b.dim) throw std::invalid_argument("check_weak_unit: bad weak unit length");
    double worst = 0.0;
    for (std::size_t i = 0; i < b.dim; ++i) {
        for (std::size_t k = 0; k < b.dim; ++k) {
            Scalar left = Scalar::zero(b.ring), right = Scalar::zero(b.ring);
            for (std::size_t p = 0; p < b.dim; ++p) {
                left += c[p] * b.mu_at(p, i, k);
                right += b.mu_at(i, p, k) * c[p];
            }
            worst = std::max(worst, (b.alpha_at(k, i) - left).max_abs());
            worst = std::max(worst, (b.alpha_at(k, i) - right).max_abs());
        }
    }
    return worst;
}

// (A*, Delta*, mu*, alpha*): structure tensors transpose.  Involution.
inline HomBialgebra dualize(const HomBialgebra& b) {
    HomBialgebra d(b.ring, b.dim);
    for (std::size_t i = 0; i < b.dim; ++i)
        for (std::size_t j = 0; j < b.dim; ++j)
            for (std::size_t k = 0; k < b.dim; ++k) {
                d.mu_at(i, j, k) = b.delta_at(k, i, j);
                d.delta_at(k, i, j) = b.mu_at(i, j, k);
            }
    for (std::size_t r = 0; r < b.dim; ++r)
        for (std::size_t c = 0; c < b.dim; ++c) d.alpha_at(r, c) = b.alpha_at(c, r);
    return d;
}

inline VerificationReport check_all_bialgebra(const HomBialgebra& b, double tolerance = 1e-9) {
    VerificationReport rep;
    rep.tolerance = tolerance;
    rep.add("multiplicativity", check_multiplicativity(b));
    rep.add("hom_associativity", check_hom_associativity(b));
    rep.add("comultiplicativity", check_comultiplicativity(b));
    rep.add("hom_coassociativity", check_hom_coassociativity(b));
    rep.add("compatibility", check_compatibility(b));
    if (b.weak_unit) rep.add("weak_unit", check_weak_unit(b, *b.weak_unit));
    return rep;
}

}  // namespace homq
