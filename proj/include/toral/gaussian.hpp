#pragma once

// Finite-dimensional oscillatory Gaussian machinery: the normalized
// Fresnel factor of a symmetric invertible form, an independent
// quadrature oracle for it, the quotient-model factorization, and the
// Kronecker (tensor) factorization against an even lattice.

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <vector>

#include "toral/intmath.hpp"
#include "toral/lattice.hpp"

namespace toral {

class SymForm {
public:
    SymForm(std::vector<double> entries, std::size_t dim)
        : entries_(std::move(entries)), dim_(dim) {
        if (entries_.size() != dim_ * dim_ || dim_ == 0)
            throw InputError("SymForm: bad dimensions");
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = i + 1; j < dim_; ++j)
                if (std::abs(at(i, j) - at(j, i)) > 1e-12)
                    throw NotSymmetric("SymForm: matrix not symmetric within 1e-12");
    }

    static SymForm diag(std::vector<double> d) {
        std::size_t n = d.size();
        std::vector<double> e(n * n, 0.0);
        for (std::size_t i = 0; i < n; ++i) e[i * n + i] = d[i];
        return SymForm(std::move(e), n);
    }

    std::size_t dim() const { return dim_; }
    double at(std::size_t i, std::size_t j) const { return entries_[i * dim_ + j]; }
    const std::vector<double>& entries() const { return entries_; }

private:
    std::vector<double> entries_;
    std::size_t dim_;
};

// Eigenvalues of a symmetric matrix by cyclic Jacobi sweeps.
inline std::vector<double> jacobi_eigenvalues(const SymForm& a) {
    const std::size_t n = a.dim();
    std::vector<double> m = a.entries();
    auto at = [&](std::size_t i, std::size_t j) -> double& { return m[i * n + j]; };
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) off += at(i, j) * at(i, j);
        if (off < 1e-28) break;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) {
                if (std::abs(at(p, q)) < 1e-300) continue;
                double theta = (at(q, q) - at(p, p)) / (2.0 * at(p, q));
                double t = (theta >= 0 ? 1.0 : -1.0) /
                           (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0), s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    double mp = at(k, p), mq = at(k, q);
                    at(k, p) = c * mp - s * mq;
                    at(k, q) = s * mp + c * mq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    double mp = at(p, k), mq = at(q, k);
                    at(p, k) = c * mp - s * mq;
                    at(q, k) = s * mp + c * mq;
                }
            }
    }
    std::vector<double> eig(n);
    for (std::size_t i = 0; i < n; ++i) eig[i] = at(i, i);
    return eig;
}

namespace detail {

// Continued-fraction rational reconstruction; succeeds only for entries
// that are (close to) small rationals.
inline bool rationalize(double x, Rat& out, long max_den = 1000000) {
    if (std::abs(x) > 1e12) return false;
    long long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    double v = x;
    for (int it = 0; it < 64; ++it) {
        double fl = std::floor(v);
        if (std::abs(fl) > 4e18) return false;
        auto a = static_cast<long long>(fl);
        long long p2 = a * p1 + p0, q2 = a * q1 + q0;
        if (q2 > max_den || q2 < 0) break;
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
        double approx = static_cast<double>(p1) / static_cast<double>(q1);
        if (std::abs(approx - x) < 1e-12 * std::max(1.0, std::abs(x))) {
            out = Rat(Int(p1), Int(q1));
            return true;
        }
        double frac = v - fl;
        if (frac < 1e-15) break;
        v = 1.0 / frac;
    }
    return false;
}

inline bool rationalize_form(const SymForm& a, RatMat& out) {
    const std::size_t n = a.dim();
    out = RatMat(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Rat r;
            if (!rationalize(a.at(i, j), r)) return false;
            out(i, j) = r;
        }
    return true;
}

} // namespace detail

// Signature of a symmetric form: exact congruence diagonalization when
// the entries reconstruct as rationals, else eigenvalue signs.
inline int sym_signature(const SymForm& a) {
    RatMat r;
    if (detail::rationalize_form(a, r)) return signature(r);
    int sig = 0;
    for (double e : jacobi_eigenvalues(a)) sig += (e > 0) ? 1 : -1;
    return sig;
}

inline double sym_log_abs_det(const SymForm& a) {
    double s = 0;
    double scale = 0;
    for (double e : jacobi_eigenvalues(a)) scale = std::max(scale, std::abs(e));
    for (double e : jacobi_eigenvalues(a)) {
        if (std::abs(e) <= 1e-12 * std::max(1.0, scale))
            throw SingularForm("sym_log_abs_det: form is singular");
        s += std::log(std::abs(e));
    }
    return s;
}

// Fres(A) = e^{i pi sgn(A)/4} (2 pi)^{dim/2} |det A|^{-1/2}
inline std::complex<double> fresnel(const SymForm& a) {
    double logdet = sym_log_abs_det(a); // throws SingularForm
    int sgn = sym_signature(a);
    double mag = std::pow(2.0 * std::numbers::pi, 0.5 * static_cast<double>(a.dim())) *
                 std::exp(-0.5 * logdet);
    double ang = std::numbers::pi * 0.25 * sgn;
    return std::polar(mag, ang);
}

namespace detail {

// Damped 1d Fresnel integral int_{-c}^{c} e^{i lambda x^2 / 2 - eps x^2} dx
// by Simpson's rule; the integrand is even, so integrate [0, c] and double.
inline std::complex<double> damped_fresnel_1d(double lambda, double eps, double cutoff) {
    double c = std::min(cutoff, std::sqrt(36.0 / eps));
    // resolve the oscillation: max local frequency is |lambda| c
    double steps = std::max(4000.0, std::abs(lambda) * c * c / 0.25);
    auto n = static_cast<std::size_t>(std::min(steps, 4.0e6));
    n += n % 2; // Simpson needs an even count
    double h = c / static_cast<double>(n);
    auto f = [&](double x) -> std::complex<double> {
        double ph = 0.5 * lambda * x * x;
        double damp = std::exp(-eps * x * x);
        return {damp * std::cos(ph), damp * std::sin(ph)};
    };
    std::complex<double> sum = f(0.0) + f(c);
    for (std::size_t k = 1; k < n; ++k)
        sum += f(h * static_cast<double>(k)) * ((k % 2) ? 4.0 : 2.0);
    return 2.0 * sum * (h / 3.0);
}

// Neville extrapolation of complex samples at nodes x_k to x = 0.
inline std::complex<double> extrapolate_to_zero(std::vector<double> x,
                                                std::vector<std::complex<double>> y) {
    const std::size_t n = x.size();
    for (std::size_t level = 1; level < n; ++level)
        for (std::size_t i = 0; i + level < n; ++i) {
            double xi = x[i], xj = x[i + level];
            y[i] = (xi * y[i + 1] - xj * y[i]) / (xi - xj);
        }
    return y[0];
}

} // namespace detail

// Independent quadrature oracle for fresnel(): integrates the damped
// Gaussian e^{i<Ax,x>/2 - damping |x|^2} by product quadrature over the
// eigen-axes at a geometric damping sequence, then Richardson-extrapolates
// the damping to zero.
inline std::complex<double> fresnel_quadrature_oracle(const SymForm& a, double damping,
                                                      double cutoff) {
    if (damping <= 0 || cutoff <= 0)
        throw InputError("fresnel_quadrature_oracle: damping and cutoff must be positive");
    std::vector<double> eig = jacobi_eigenvalues(a);
    double scale = 0;
    for (double e : eig) scale = std::max(scale, std::abs(e));
    for (double e : eig)
        if (std::abs(e) <= 1e-12 * std::max(1.0, scale))
            throw SingularForm("fresnel_quadrature_oracle: form is singular");

    constexpr int kLevels = 5;
    std::vector<double> eps(kLevels);
    std::vector<std::complex<double>> vals(kLevels);
    for (int k = 0; k < kLevels; ++k) {
        eps[k] = damping / static_cast<double>(1 << k);
        std::complex<double> prod = 1.0;
        for (double lambda : eig) prod *= detail::damped_fresnel_1d(lambda, eps[k], cutoff);
        vals[k] = prod;
    }
    std::complex<double> full = detail::extrapolate_to_zero(eps, vals);
    std::complex<double> partial = detail::extrapolate_to_zero(
        {eps.begin() + 1, eps.end()}, {vals.begin() + 1, vals.end()});
    double ref = std::max(1.0, std::abs(full));
    if (std::abs(full - partial) > 5e-4 * ref)
        throw NonConvergent("fresnel_quadrature_oracle: damping extrapolation did not stabilize");
    return full;
}

// Quotient model of an oscillatory integral: constant phase q0, the
// volume of the compact harmonic torus H/Gamma, and the invertible form
// on the transverse sector. Gauge (E-sector) dimensions drop out of the
// quotient and never enter the value.
class QuotientModel {
public:
    QuotientModel(double q0, double lattice_volume, SymForm form, std::size_t gauge_dims = 0)
        : q0_(q0), volume_(lattice_volume), form_(std::move(form)), gauge_dims_(gauge_dims) {
        if (volume_ <= 0) throw InputError("QuotientModel: lattice volume must be positive");
    }

    double q0() const { return q0_; }
    double lattice_volume() const { return volume_; }
    const SymForm& form() const { return form_; }
    std::size_t gauge_dims() const { return gauge_dims_; }

private:
    double q0_;
    double volume_;
    SymForm form_;
    std::size_t gauge_dims_;
};

// e^{i q0} vol(H/Gamma) Fres(A)
inline std::complex<double> quotient_gaussian(const QuotientModel& m) {
    return std::polar(1.0, m.q0()) * m.lattice_volume() * fresnel(m.form());
}

struct KronResult {
    SymForm matrix;
    int signature;
    double log_abs_det;
};

// K tensor A with the finite analogs of the spectral factorization
// identities asserted: sgn(K (x) A) = sigma(K) sgn(A) and
// log|det(K (x) A)| = dim(A) log|det K| + rk(K) log|det A|.
inline KronResult kron_factorize(const EvenLattice& k, const SymForm& a) {
    const std::size_t n = k.rank(), m = a.dim();
    std::vector<double> entries(n * m * n * m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            double kij = static_cast<double>(k.gram()(i, j));
            if (kij == 0.0) continue;
            for (std::size_t p = 0; p < m; ++p)
                for (std::size_t q = 0; q < m; ++q)
                    entries[(i * m + p) * n * m + (j * m + q)] = kij * a.at(p, q);
        }
    KronResult r{SymForm(std::move(entries), n * m), 0, 0.0};
    r.signature = sym_signature(r.matrix);
    r.log_abs_det = sym_log_abs_det(r.matrix); // throws SingularForm

    int expected_sig = k.signature() * sym_signature(a);
    if (r.signature != expected_sig)
        throw Error("kron_factorize: signature factorization violated");
    double expected_logdet =
        static_cast<double>(m) * std::log(static_cast<double>(k.abs_det())) +
        static_cast<double>(n) * sym_log_abs_det(a);
    if (std::abs(r.log_abs_det - expected_logdet) >
        1e-9 * std::max(1.0, std::abs(expected_logdet)))
        throw Error("kron_factorize: determinant factorization violated");
    return r;
}

} // namespace toral
