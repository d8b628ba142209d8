#pragma once

// Dense multilinear algebra over a scalar ring: elements of tensor powers,
// linear operators between them, Kronecker products, the twist, leg
// permutations, weak-unit leg embeddings and leg-wise multiplication.
//
// Index convention, fixed globally: legs are listed left to right and the
// flat index is lexicographic with the leftmost leg slowest.  Operator
// column j is the image of the j-th input basis tensor.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "scalar.hpp"

namespace homq {

using Dims = std::vector<std::size_t>;

inline std::size_t dim_product(const Dims& dims) {
    std::size_t p = 1;
    for (std::size_t d : dims) p *= d;
    return p;
}

// Decompose a flat lexicographic index into per-leg indices.
inline std::vector<std::size_t> unflatten(std::size_t idx, const Dims& dims) {
    std::vector<std::size_t> multi(dims.size());
    for (std::size_t leg = dims.size(); leg-- > 0;) {
        multi[leg] = idx % dims[leg];
        idx /= dims[leg];
    }
    return multi;
}

inline std::size_t flatten(const std::vector<std::size_t>& multi, const Dims& dims) {
    std::size_t idx = 0;
    for (std::size_t leg = 0; leg < dims.size(); ++leg) idx = idx * dims[leg] + multi[leg];
    return idx;
}

class TensorElement {
public:
    TensorElement(Ring ring, Dims leg_dims)
        : ring_(ring), dims_(std::move(leg_dims)), c_(dim_product(dims_), Scalar::zero(ring)) {}

    TensorElement(Ring ring, Dims leg_dims, std::vector<Scalar> coeffs)
        : ring_(ring), dims_(std::move(leg_dims)), c_(std::move(coeffs)) {
        if (c_.size() != dim_product(dims_))
            throw std::invalid_argument("TensorElement: coefficient count mismatch");
    }

    const Ring& ring() const { return ring_; }
    const Dims& leg_dims() const { return dims_; }
    std::size_t size() const { return c_.size(); }
    std::size_t legs() const { return dims_.size(); }

    const Scalar& operator[](std::size_t i) const { return c_[i]; }
    Scalar& operator[](std::size_t i) { return c_[i]; }
    const std::vector<Scalar>& coeffs() const { return c_; }

    TensorElement& operator+=(const TensorElement& o) {
        check_shape(o);
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
        return *this;
    }
    TensorElement& operator-=(const TensorElement& o) {
        check_shape(o);
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
        return *this;
    }
    friend TensorElement operator+(TensorElement a, const TensorElement& b) { return a += b; }
    friend TensorElement operator-(TensorElement a, const TensorElement& b) { return a -= b; }
    friend TensorElement operator*(const Scalar& s, TensorElement t) {
        for (Scalar& v : t.c_) v *= s;
        return t;
    }

private:
    void check_shape(const TensorElement& o) const {
        if (dims_ != o.dims_ || !ring_.compatible(o.ring_))
            throw std::invalid_argument("TensorElement: shape or ring mismatch");
    }

    Ring ring_;
    Dims dims_;
    std::vector<Scalar> c_;
};

// Outer product: legs concatenate.
inline TensorElement outer(const TensorElement& a, const TensorElement& b) {
    if (!a.ring().compatible(b.ring()))
        throw std::invalid_argument("outer: ring mismatch");
    Dims dims = a.leg_dims();
    dims.insert(dims.end(), b.leg_dims().begin(), b.leg_dims().end());
    TensorElement r(a.ring(), dims);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i * b.size() + j] = a[i] * b[j];
    }
    return r;
}

// Reorder legs: result leg p carries source leg perm[p].
inline TensorElement leg_permute(const TensorElement& x, const std::vector<std::size_t>& perm) {
    const Dims& dims = x.leg_dims();
    if (perm.size() != dims.size())
        throw std::invalid_argument("leg_permute: permutation length mismatch");
    std::vector<bool> seen(dims.size(), false);
    for (std::size_t p : perm) {
        if (p >= dims.size() || seen[p]) throw std::invalid_argument("leg_permute: not a permutation");
        seen[p] = true;
    }
    Dims new_dims(dims.size());
    for (std::size_t p = 0; p < perm.size(); ++p) new_dims[p] = dims[perm[p]];
    TensorElement r(x.ring(), new_dims);
    std::vector<std::size_t> src(dims.size());
    for (std::size_t i = 0; i < r.size(); ++i) {
        const std::vector<std::size_t> multi = unflatten(i, new_dims);
        for (std::size_t p = 0; p < perm.size(); ++p) src[perm[p]] = multi[p];
        r[i] = x[flatten(src, dims)];
    }
    return r;
}

class LinearOperator {
public:
    LinearOperator(Ring ring, Dims out_dims, Dims in_dims)
        : ring_(ring),
          out_(std::move(out_dims)),
          in_(std::move(in_dims)),
          m_(dim_product(out_) * dim_product(in_), Scalar::zero(ring)) {}

    static LinearOperator identity(Ring ring, Dims dims) {
        LinearOperator op(ring, dims, dims);
        const std::size_t n = dim_product(dims);
        for (std::size_t i = 0; i < n; ++i) op.at(i, i) = Scalar::one(ring);
        return op;
    }

    const Ring& ring() const { return ring_; }
    const Dims& out_dims() const { return out_; }
    const Dims& in_dims() const { return in_; }
    std::size_t rows() const { return dim_product(out_); }
    std::size_t cols() const { return dim_product(in_); }

    Scalar& at(std::size_t r, std::size_t c) { return m_[r * cols() + c]; }
    const Scalar& at(std::size_t r, std::size_t c) const { return m_[r * cols() + c]; }
    const std::vector<Scalar>& entries() const { return m_; }

    TensorElement apply(const TensorElement& x) const {
        if (x.leg_dims() != in_ || !ring_.compatible(x.ring()))
            throw std::invalid_argument("LinearOperator::apply: shape or ring mismatch");
        TensorElement r(ring_, out_);
        for (std::size_t c = 0; c < cols(); ++c) {
            if (x[c].is_zero()) continue;
            for (std::size_t r_i = 0; r_i < rows(); ++r_i) r[r_i] += at(r_i, c) * x[c];
        }
        return r;
    }

    LinearOperator& operator+=(const LinearOperator& o) {
        check_shape(o);
        for (std::size_t i = 0; i < m_.size(); ++i) m_[i] += o.m_[i];
        return *this;
    }
    LinearOperator& operator-=(const LinearOperator& o) {
        check_shape(o);
        for (std::size_t i = 0; i < m_.size(); ++i) m_[i] -= o.m_[i];
        return *this;
    }
    friend LinearOperator operator+(LinearOperator a, const LinearOperator& b) { return a += b; }
    friend LinearOperator operator-(LinearOperator a, const LinearOperator& b) { return a -= b; }
    friend LinearOperator operator*(const Scalar& s, LinearOperator op) {
        for (Scalar& v : op.m_) v *= s;
        return op;
    }

private:
    void check_shape(const LinearOperator& o) const {
        if (out_ != o.out_ || in_ != o.in_ || !ring_.compatible(o.ring_))
            throw std::invalid_argument("LinearOperator: shape or ring mismatch");
    }

    Ring ring_;
    Dims out_, in_;
    std::vector<Scalar> m_;
};

// A then B is compose(B, A): (B o A)(x) = B(A(x)).
inline LinearOperator compose(const LinearOperator& outer_op, const LinearOperator& inner_op) {
    if (outer_op.in_dims() != inner_op.out_dims())
        throw std::invalid_argument("compose: inner dimensions mismatch");
    LinearOperator r(outer_op.ring(), outer_op.out_dims(), inner_op.in_dims());
    const std::size_t mid = outer_op.cols();
    for (std::size_t k = 0; k < mid; ++k)
        for (std::size_t c = 0; c < r.cols(); ++c) {
            const Scalar& bkc = inner_op.at(k, c);
            if (bkc.is_zero()) continue;
            for (std::size_t row = 0; row < r.rows(); ++row) r.at(row, c) += outer_op.at(row, k) * bkc;
        }
    return r;
}

inline LinearOperator kron(const LinearOperator& a, const LinearOperator& b) {
    if (!a.ring().compatible(b.ring())) throw std::invalid_argument("kron: ring mismatch");
    Dims out = a.out_dims();
    out.insert(out.end(), b.out_dims().begin(), b.out_dims().end());
    Dims in = a.in_dims();
    in.insert(in.end(), b.in_dims().begin(), b.in_dims().end());
    LinearOperator r(a.ring(), out, in);
    for (std::size_t ra = 0; ra < a.rows(); ++ra)
        for (std::size_t ca = 0; ca < a.cols(); ++ca) {
            if (a.at(ra, ca).is_zero()) continue;
            for (std::size_t rb = 0; rb < b.rows(); ++rb)
                for (std::size_t cb = 0; cb < b.cols(); ++cb)
                    r.at(ra * b.rows() + rb, ca * b.cols() + cb) = a.at(ra, ca) * b.at(rb, cb);
        }
    return r;
}

// tau: V1 (x) V2 -> V2 (x) V1, v (x) w -> w (x) v.
inline LinearOperator twist_operator(Ring ring, std::size_t d1, std::size_t d2) {
    if (d1 < 1 || d2 < 1) throw std::invalid_argument("twist_operator: dims must be >= 1");
    LinearOperator r(ring, Dims{d2, d1}, Dims{d1, d2});
    for (std::size_t i = 0; i < d1; ++i)
        for (std::size_t j = 0; j < d2; ++j) r.at(j * d1 + i, i * d2 + j) = Scalar::one(ring);
    return r;
}

// Leg embeddings of R into a 3-fold tensor power with weak-unit padding:
// R12 = R (x) c, R23 = c (x) R, R13 = (tau (x) Id)(R23).
enum class LegPair { L12, L23, L13 };

inline TensorElement embed_r(const TensorElement& r, const TensorElement& c, LegPair which) {
    if (r.legs() != 2 || c.legs() != 1) throw std::invalid_argument("embed_r: R needs 2 legs, c needs 1");
    const std::size_t d = c.leg_dims()[0];
    if (r.leg_dims()[0] != d || r.leg_dims()[1] != d)
        throw std::invalid_argument("embed_r: leg dimension mismatch");
    switch (which) {
        case LegPair::L12: return outer(r, c);
        case LegPair::L23: return outer(c, r);
        case LegPair::L13: return leg_permute(outer(c, r), {1, 0, 2});
    }
    throw std::logic_error("embed_r: unreachable");
}

// Contract legs p and p+1 through the multiplication tensor mu (d*d*d, flat
// lexicographic): out[..,k,..] = sum_{i,j} mu[i][j][k] t[..,i,j,..].
inline TensorElement contract_pair(const TensorElement& t, std::size_t p,
                                   const std::vector<Scalar>& mu, std::size_t d) {
    const Dims& dims = t.leg_dims();
    if (p + 1 >= dims.size() || dims[p] != d || dims[p + 1] != d)
        throw std::invalid_argument("contract_pair: bad leg pair");
    Dims out_dims;
    out_dims.insert(out_dims.end(), dims.begin(), dims.begin() + static_cast<std::ptrdiff_t>(p));
    out_dims.push_back(d);
    out_dims.insert(out_dims.end(), dims.begin() + static_cast<std::ptrdiff_t>(p) + 2, dims.end());
    std::size_t pre = 1, post = 1;
    for (std::size_t l = 0; l < p; ++l) pre *= dims[l];
    for (std::size_t l = p + 2; l < dims.size(); ++l) post *= dims[l];
    TensorElement out(t.ring(), out_dims);
    for (std::size_t a = 0; a < pre; ++a)
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j)
                for (std::size_t b = 0; b < post; ++b) {
                    const Scalar& v = t[((a * d + i) * d + j) * post + b];
                    if (v.is_zero()) continue;
                    for (std::size_t k = 0; k < d; ++k) {
                        const Scalar& mukk = mu[(i * d + j) * d + k];
                        if (mukk.is_zero()) continue;
                        out[(a * d + k) * post + b] += mukk * v;
                    }
                }
    return out;
}

// Leg-wise product in A^{(x)k}: (a1 (x)..(x) ak)(b1 (x)..(x) bk) =
// a1b1 (x)..(x) akbk, extended bilinearly; mu is the d^3 structure tensor.
inline TensorElement legwise_multiply(const TensorElement& x, const TensorElement& y,
                                      const std::vector<Scalar>& mu, std::size_t d) {
    if (x.legs() != y.legs()) throw std::invalid_argument("legwise_multiply: leg count mismatch");
    const std::size_t k = x.legs();
    for (std::size_t l = 0; l < k; ++l)
        if (x.leg_dims()[l] != d || y.leg_dims()[l] != d)
            throw std::invalid_argument("legwise_multiply: leg dimension mismatch");
    if (mu.size() != d * d * d) throw std::invalid_argument("legwise_multiply: bad mu tensor");
    // Iterate over nonzero coefficient pairs and expand leg by leg through
    // the nonzero entries of mu; no interleaved d^(2k) intermediate.
    std::vector<std::vector<std::pair<std::size_t, const Scalar*>>> nz(d * d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t kk = 0; kk < d; ++kk) {
                const Scalar& s = mu[(i * d + j) * d + kk];
                if (!s.is_zero()) nz[i * d + j].emplace_back(kk, &s);
            }
    TensorElement out(x.ring(), x.leg_dims());
    for (std::size_t xi = 0; xi < x.size(); ++xi) {
        if (x[xi].is_zero()) continue;
        const auto im = unflatten(xi, x.leg_dims());
        for (std::size_t yi = 0; yi < y.size(); ++yi) {
            if (y[yi].is_zero()) continue;
            const auto jm = unflatten(yi, y.leg_dims());
            const auto expand = [&](const auto& self, std::size_t leg, std::size_t out_idx,
                                    const Scalar& acc) -> void {
                if (leg == k) {
                    out[out_idx] += acc;
                    return;
                }
                for (const auto& [target, coeff] : nz[im[leg] * d + jm[leg]])
                    self(self, leg + 1, out_idx * d + target, acc * *coeff);
            };
            expand(expand, 0, 0, x[xi] * y[yi]);
        }
    }
    return out;
}

inline double residual_norm(const TensorElement& x) {
    double m = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) m = std::max(m, x[i].max_abs());
    return m;
}

inline double residual_norm(const LinearOperator& x) {
    double m = 0.0;
    for (const Scalar& v : x.entries()) m = std::max(m, v.max_abs());
    return m;
}

}  // namespace homq
