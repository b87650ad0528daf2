#pragma once

// Exact arithmetic in Q/Z and exact multisets of roots of unity.
// Gauss sums are accumulated here and only evaluated to complex doubles
// at output time; near-cancelling sums stay exact until then.

#include <cmath>
#include <complex>
#include <map>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "toral/intmath.hpp"

namespace toral {

// An angle num/den in Q/Z, reduced, 0 <= num < den.
class RationalPhase {
public:
    RationalPhase() : num_(0), den_(1) {}

    RationalPhase(Int num, Int den) {
        if (den == 0) throw Degenerate("RationalPhase: zero denominator");
        if (den < 0) {
            den = -den;
            num = -num;
        }
        num = mod_floor(num, den);
        Int g = boost::multiprecision::gcd(num, den);
        if (g == 0) g = 1;
        num_ = num / g;
        den_ = den / g;
    }

    static RationalPhase from_rational(const Rat& r) {
        return RationalPhase(Int(boost::multiprecision::numerator(r)),
                             Int(boost::multiprecision::denominator(r)));
    }

    const Int& num() const { return num_; }
    const Int& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }

    RationalPhase operator+(const RationalPhase& o) const {
        return RationalPhase(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    RationalPhase operator-() const { return RationalPhase(-num_, den_); }
    RationalPhase operator-(const RationalPhase& o) const { return *this + (-o); }
    RationalPhase operator*(const Int& k) const { return RationalPhase(num_ * k, den_); }

    bool operator==(const RationalPhase& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator<(const RationalPhase& o) const {
        // compare num/den as rationals; denominators are positive
        return num_ * o.den_ < o.num_ * den_;
    }

    double turns() const {
        return static_cast<double>(Rat(num_, den_));
    }

    std::complex<double> unit() const {
        double t = 2.0 * std::numbers::pi * turns();
        return {std::cos(t), std::sin(t)};
    }

    std::string str() const {
        return num_.str() + "/" + den_.str();
    }

private:
    Int num_, den_;
};

namespace detail {

using Poly = std::vector<Int>; // coefficients, low degree first

inline void poly_trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// exact division, remainder must vanish
inline Poly poly_div_exact(Poly num, const Poly& den) {
    Poly q(num.size() >= den.size() ? num.size() - den.size() + 1 : 0);
    while (num.size() >= den.size() && !num.empty()) {
        Int c = num.back() / den.back();
        std::size_t shift = num.size() - den.size();
        q[shift] = c;
        for (std::size_t i = 0; i < den.size(); ++i) num[shift + i] -= c * den[i];
        poly_trim(num);
    }
    return q;
}

// remainder of p mod d (monic d)
inline Poly poly_mod(Poly p, const Poly& d) {
    while (p.size() >= d.size() && !p.empty()) {
        Int c = p.back();
        std::size_t shift = p.size() - d.size();
        for (std::size_t i = 0; i < d.size(); ++i) p[shift + i] -= c * d[i];
        poly_trim(p);
    }
    return p;
}

// n-th cyclotomic polynomial, memoized
inline const Poly& cyclotomic(unsigned long n) {
    static std::map<unsigned long, Poly> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    Poly p(n + 1);
    p[0] = -1;
    p[n] = 1; // x^n - 1
    for (unsigned long d = 1; d < n; ++d)
        if (n % d == 0) p = poly_div_exact(std::move(p), cyclotomic(d));
    return cache.emplace(n, std::move(p)).first->second;
}

} // namespace detail

// Finite multiset of roots of unity with integer multiplicities
// (possibly negative): sum of mult * e^{2 pi i angle}.
class PhaseSum {
public:
    PhaseSum() = default;

    void add(const RationalPhase& phase, const Int& mult = 1) {
        if (mult == 0) return;
        Int& m = terms_[phase];
        m += mult;
        if (m == 0) terms_.erase(phase);
    }

    const std::map<RationalPhase, Int>& terms() const { return terms_; }

    Int total_multiplicity() const {
        Int t = 0;
        for (const auto& [p, m] : terms_) t += m;
        return t;
    }

    PhaseSum operator+(const PhaseSum& o) const {
        PhaseSum r = *this;
        for (const auto& [p, m] : o.terms_) r.add(p, m);
        return r;
    }

    PhaseSum operator*(const PhaseSum& o) const {
        PhaseSum r;
        for (const auto& [p, m] : terms_)
            for (const auto& [q, k] : o.terms_) r.add(p + q, m * k);
        return r;
    }

    PhaseSum shifted(const RationalPhase& phase) const {
        PhaseSum r;
        for (const auto& [p, m] : terms_) r.add(p + phase, m);
        return r;
    }

    PhaseSum conj() const {
        PhaseSum r;
        for (const auto& [p, m] : terms_) r.add(-p, m);
        return r;
    }

    std::complex<double> evaluate() const {
        std::complex<double> s = 0;
        for (const auto& [p, m] : terms_) s += static_cast<double>(m) * p.unit();
        return s;
    }

    // Exact test whether the sum is a rational integer, by reducing the
    // corresponding element of Z[zeta_n] modulo the n-th cyclotomic
    // polynomial; returns the integer if so.
    std::optional<Int> as_integer() const {
        Int n = 1;
        for (const auto& [p, m] : terms_) n = boost::multiprecision::lcm(n, p.den());
        if (n > 100000) return std::nullopt; // cyclotomic reduction budget
        auto nl = static_cast<unsigned long>(n);
        detail::Poly coeffs(nl);
        for (const auto& [p, m] : terms_) {
            unsigned long k = static_cast<unsigned long>(Int(p.num() * (n / p.den())));
            coeffs[k] += m;
        }
        detail::poly_trim(coeffs);
        detail::Poly r = detail::poly_mod(std::move(coeffs), detail::cyclotomic(nl));
        if (r.empty()) return Int(0);
        if (r.size() == 1) return r[0];
        return std::nullopt;
    }

private:
    std::map<RationalPhase, Int> terms_;
};

} // namespace toral
