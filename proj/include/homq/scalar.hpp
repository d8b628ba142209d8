#pragma once

// Scalar arithmetic for the two ground rings used throughout the library:
// approximate complex numbers and truncated formal power series in h with
// complex coefficients (kept modulo h^(order+1)).  Also q-symbol helpers
// built on top of the series ring.

#include <complex>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace homq {

using cplx = std::complex<double>;

struct Ring {
    enum class Kind { ApproxComplex, HSeries };

    Kind kind = Kind::ApproxComplex;
    double tolerance = 1e-9;
    int order = 8;  // series kept modulo h^(order+1); ignored for ApproxComplex

    static Ring approx_complex(double tol = 1e-9) {
        return Ring{Kind::ApproxComplex, tol, 0};
    }
    static Ring hseries(int order, double tol = 1e-9) {
        if (order < 1) throw std::invalid_argument("Ring: order must be >= 1");
        return Ring{Kind::HSeries, tol, order};
    }

    std::size_t coeff_count() const {
        return kind == Kind::HSeries ? static_cast<std::size_t>(order) + 1 : 1;
    }
    bool compatible(const Ring& other) const {
        return kind == other.kind && coeff_count() == other.coeff_count();
    }
};

class Scalar {
public:
    Scalar() : ring_(Ring::approx_complex()), c_(1, cplx{0.0, 0.0}) {}

    Scalar(const Ring& ring, cplx constant) : ring_(ring), c_(ring.coeff_count(), cplx{}) {
        c_[0] = constant;
    }

    // HSeries from explicit coefficients of h^0..h^order.
    Scalar(const Ring& ring, std::vector<cplx> coeffs) : ring_(ring), c_(std::move(coeffs)) {
        if (c_.size() != ring_.coeff_count())
            throw std::invalid_argument("Scalar: coefficient count does not match ring");
    }

    static Scalar zero(const Ring& ring) { return Scalar(ring, cplx{0.0, 0.0}); }
    static Scalar one(const Ring& ring) { return Scalar(ring, cplx{1.0, 0.0}); }

    // The series h itself (HSeries rings only).
    static Scalar h(const Ring& ring) {
        require_series(ring, "Scalar::h");
        Scalar s = zero(ring);
        s.c_[1] = cplx{1.0, 0.0};
        return s;
    }

    const Ring& ring() const { return ring_; }
    const std::vector<cplx>& coeffs() const { return c_; }
    cplx coeff(std::size_t k) const { return k < c_.size() ? c_[k] : cplx{}; }
    cplx constant_term() const { return c_[0]; }

    bool is_zero() const {
        for (const cplx& v : c_)
            if (std::abs(v) >= ring_.tolerance) return false;
        return true;
    }

    double max_abs() const {
        double m = 0.0;
        for (const cplx& v : c_) m = std::max(m, std::abs(v));
        return m;
    }

    Scalar operator-() const {
        Scalar r = *this;
        for (cplx& v : r.c_) v = -v;
        return r;
    }

    Scalar& operator+=(const Scalar& o) {
        check_ring(o);
        for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
        return *this;
    }
    Scalar& operator-=(const Scalar& o) {
        check_ring(o);
        for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
        return *this;
    }

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }

    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        a.check_ring(b);
        Scalar r = zero(a.ring_);
        const std::size_t n = a.c_.size();
        for (std::size_t i = 0; i < n; ++i) {
            if (a.c_[i] == cplx{}) continue;
            for (std::size_t j = 0; i + j < n; ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
        }
        return r;
    }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    friend Scalar operator*(cplx a, const Scalar& b) {
        Scalar r = b;
        for (cplx& v : r.c_) v *= a;
        return r;
    }
    friend Scalar operator*(const Scalar& a, cplx b) { return b * a; }

    // Tolerance-based equality: every coefficient within tolerance.
    friend bool operator==(const Scalar& a, const Scalar& b) { return (a - b).is_zero(); }

private:
    static void require_series(const Ring& ring, const char* who) {
        if (ring.kind != Ring::Kind::HSeries)
            throw std::invalid_argument(std::string(who) + ": HSeries ring required");
    }
    void check_ring(const Scalar& o) const {
        if (!ring_.compatible(o.ring_))
            throw std::invalid_argument("Scalar: ring mismatch");
    }

    friend Scalar series_exp(const Scalar&);
    friend Scalar series_invert(const Scalar&);

    Ring ring_;
    std::vector<cplx> c_;
};

// e^x for a truncated series: e^{c0} * sum_k (x - c0)^k / k!, exact modulo
// truncation since x - c0 is nilpotent in the truncated ring.
inline Scalar series_exp(const Scalar& x) {
    if (x.ring().kind != Ring::Kind::HSeries)
        throw std::invalid_argument("series_exp: HSeries ring required");
    const Ring& ring = x.ring();
    Scalar tail = x;
    tail.c_[0] = cplx{};
    Scalar term = Scalar::one(ring);
    Scalar sum = term;
    for (int k = 1; k <= ring.order; ++k) {
        term = term * tail;
        term = (cplx{1.0 / static_cast<double>(k), 0.0}) * term;
        sum += term;
    }
    return std::exp(x.c_[0]) * sum;
}

// Multiplicative inverse modulo h^(order+1); requires invertible constant term.
inline Scalar series_invert(const Scalar& x) {
    if (x.ring().kind != Ring::Kind::HSeries)
        throw std::invalid_argument("series_invert: HSeries ring required");
    const Ring& ring = x.ring();
    if (std::abs(x.c_[0]) <= ring.tolerance)
        throw std::domain_error("series_invert: constant term is not invertible");
    const cplx inv0 = cplx{1.0, 0.0} / x.c_[0];
    Scalar y = Scalar::zero(ring);
    y.c_[0] = inv0;
    for (int k = 1; k <= ring.order; ++k) {
        cplx acc{};
        for (int j = 1; j <= k; ++j) acc += x.c_[static_cast<std::size_t>(j)] * y.c_[static_cast<std::size_t>(k - j)];
        y.c_[static_cast<std::size_t>(k)] = -inv0 * acc;
    }
    return y;
}

// q^x = e^{xh/2} as a truncated series, for real or complex exponent x.
inline Scalar q_power(cplx exponent, const Ring& ring) {
    Scalar arg = (exponent * cplx{0.5, 0.0}) * Scalar::h(ring);
    return series_exp(arg);
}

// [m]_q = (q^m - q^{-m})/(q - q^{-1}) computed by the division-free sum
// sum_{j=0}^{m-1} q^{m-1-2j}.  The quotient form is not usable directly:
// q - q^{-1} has zero constant term and is not series-invertible.
inline Scalar q_integer(int m, const Ring& ring) {
    if (m < 0) throw std::invalid_argument("q_integer: m must be >= 0");
    Scalar sum = Scalar::zero(ring);
    for (int j = 0; j < m; ++j) sum += q_power(cplx(static_cast<double>(m - 1 - 2 * j), 0.0), ring);
    return sum;
}

inline Scalar q_factorial(int m, const Ring& ring) {
    if (m < 0) throw std::invalid_argument("q_factorial: m must be >= 0");
    Scalar prod = Scalar::one(ring);
    for (int j = 2; j <= m; ++j) prod *= q_integer(j, ring);
    return prod;
}

inline Scalar q_binomial(int m, int r, const Ring& ring) {
    if (r < 0 || r > m) throw std::invalid_argument("q_binomial: need 0 <= r <= m");
    return q_factorial(m, ring) * series_invert(q_factorial(r, ring) * q_factorial(m - r, ring));
}

// e^{2 pi i p / n} in the approximate complex ring.
inline Scalar root_of_unity(int n, int p, const Ring& ring) {
    if (ring.kind != Ring::Kind::ApproxComplex)
        throw std::invalid_argument("root_of_unity: ApproxComplex ring required");
    if (n < 1) throw std::invalid_argument("root_of_unity: n must be >= 1");
    const double theta = 2.0 * M_PI * static_cast<double>(p) / static_cast<double>(n);
    return Scalar(ring, cplx{std::cos(theta), std::sin(theta)});
}

}  // namespace homq
