#pragma once

// Closed oriented 3-manifold presentations: framed-link linking matrices
// and standard families, with the homological data the partition formula
// consumes (b_1, torsion divisors, the exponent m_X) and the Kirby moves
// used as invariance oracles.

#include <cstddef>
#include <numeric>
#include <string>
#include <vector>

#include "toral/intmath.hpp"

namespace toral {

// exact half-integer: value = twice/2
struct HalfInt {
    long long twice = 0;

    static HalfInt whole(long long v) { return {2 * v}; }
    static HalfInt halves(long long t) { return {t}; }

    double value() const { return 0.5 * static_cast<double>(twice); }
    bool is_integer() const { return twice % 2 == 0; }

    bool operator==(const HalfInt& o) const { return twice == o.twice; }
    HalfInt operator+(const HalfInt& o) const { return {twice + o.twice}; }

    std::string str() const {
        if (twice % 2 == 0) return std::to_string(twice / 2);
        return std::to_string(twice) + "/2";
    }
};

enum class Family { S3, S2xS1, T3, SigmaXS1, Lens, ConnectedSum };

struct Presentation {
    enum class Kind { SurgeryLink, Standard };

    Kind kind = Kind::SurgeryLink;
    IntMat linking; // SurgeryLink: symmetric, framings on the diagonal

    Family family = Family::S3;
    long genus = 0;  // SigmaXS1
    long p = 0, q = 0; // Lens(p, q)
    std::vector<Presentation> summands; // ConnectedSum

    static Presentation surgery(IntMat l) {
        if (!l.is_symmetric())
            throw InvalidPresentation("surgery: linking matrix must be symmetric");
        Presentation pr;
        pr.kind = Kind::SurgeryLink;
        pr.linking = std::move(l);
        return pr;
    }

    static Presentation standard(Family f) {
        Presentation pr;
        pr.kind = Kind::Standard;
        pr.family = f;
        return pr;
    }

    static Presentation sigma_x_s1(long g) {
        if (g < 0) throw InvalidPresentation("SigmaXS1: genus must be nonnegative");
        Presentation pr = standard(Family::SigmaXS1);
        pr.genus = g;
        return pr;
    }

    static Presentation lens(long p, long q) {
        if (p < 1 || q < 0 || q >= p || std::gcd(p, q) != 1)
            throw InvalidPresentation("Lens(p,q): need p >= 1, 0 <= q < p, gcd(p,q) = 1");
        Presentation pr = standard(Family::Lens);
        pr.p = p;
        pr.q = q;
        return pr;
    }

    static Presentation connected_sum(std::vector<Presentation> parts) {
        Presentation pr = standard(Family::ConnectedSum);
        pr.summands = std::move(parts);
        return pr;
    }

    std::size_t components() const { return linking.rows(); }
};

struct HomologySummary {
    std::size_t b1 = 0;
    std::vector<Int> torsion_divisors; // > 1
    HalfInt m_x;                       // (b1 - 1)/2 for closed connected X

    Int torsion_order() const {
        Int t = 1;
        for (const Int& d : torsion_divisors) t *= d;
        return t;
    }
    // |Tor H^2(X; Lambda)| for a rank-n coefficient lattice
    Int tor_h2_order(std::size_t lattice_rank) const {
        Int t = 1, base = torsion_order();
        for (std::size_t i = 0; i < lattice_rank; ++i) t *= base;
        return t;
    }
};

// m_X = (b1_abs + b1_rel - b0_abs - b0_rel)/4 as an exact half-integer
inline HalfInt m_exponent_bordism(long long b1abs, long long b1rel, long long b0abs,
                                  long long b0rel) {
    long long num = b1abs + b1rel - b0abs - b0rel;
    if (num % 2 != 0)
        throw NonHalfInteger("m_exponent_bordism: odd numerator, inconsistent Betti input");
    return HalfInt::halves(num / 2);
}

// Negative continued fraction p/q = a_1 - 1/(a_2 - ...), a_i >= 2,
// giving the framing chain of the lens space L(p, q).
inline std::vector<long> lens_chain(long p, long q) {
    std::vector<long> chain;
    while (q > 0) {
        long a = (p + q - 1) / q; // ceil(p/q)
        chain.push_back(a);
        long np = q, nq = a * q - p;
        p = np;
        q = nq;
    }
    return chain;
}

// linking matrix of a chain of unknots with the given framings
inline IntMat chain_linking(const std::vector<long>& framings) {
    const std::size_t m = framings.size();
    IntMat l(m, m);
    for (std::size_t i = 0; i < m; ++i) {
        l(i, i) = framings[i];
        if (i + 1 < m) l(i, i + 1) = l(i + 1, i) = 1;
    }
    return l;
}

inline HomologySummary homology(const Presentation& pr) {
    HomologySummary h;
    if (pr.kind == Presentation::Kind::SurgeryLink) {
        // H_1(X; Z) = coker(linking)
        if (pr.components() > 0) {
            SmithData s = smith_normal_form(pr.linking, /*allow_singular=*/true);
            for (const Int& d : s.divisors) {
                if (d == 0)
                    ++h.b1;
                else if (d > 1)
                    h.torsion_divisors.push_back(d);
            }
        }
    } else {
        switch (pr.family) {
            case Family::S3: break;
            case Family::S2xS1: h.b1 = 1; break;
            case Family::T3: h.b1 = 3; break;
            case Family::SigmaXS1: h.b1 = 2 * static_cast<std::size_t>(pr.genus) + 1; break;
            case Family::Lens:
                if (pr.p > 1) h.torsion_divisors.push_back(pr.p);
                break;
            case Family::ConnectedSum:
                for (const Presentation& s : pr.summands) {
                    HomologySummary hs = homology(s);
                    h.b1 += hs.b1;
                    h.torsion_divisors.insert(h.torsion_divisors.end(),
                                              hs.torsion_divisors.begin(),
                                              hs.torsion_divisors.end());
                }
                break;
        }
    }
    h.m_x = HalfInt::halves(static_cast<long long>(h.b1) - 1);
    return h;
}

// stabilization: disjoint +-1 framed unknot
inline Presentation kirby_stabilize(const Presentation& pr, int sign) {
    if (pr.kind != Presentation::Kind::SurgeryLink)
        throw InvalidPresentation("kirby_stabilize: needs a surgery presentation");
    if (sign != 1 && sign != -1)
        throw InputError("kirby_stabilize: sign must be +-1");
    const std::size_t m = pr.components();
    IntMat l(m + 1, m + 1);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) l(i, j) = pr.linking(i, j);
    l(m, m) = sign;
    return Presentation::surgery(std::move(l));
}

// handle slide of component i over component j: L -> E^T L E with E
// elementary, a unimodular congruence presenting the same manifold
inline Presentation handle_slide(const Presentation& pr, std::size_t i, std::size_t j) {
    if (pr.kind != Presentation::Kind::SurgeryLink)
        throw InvalidPresentation("handle_slide: needs a surgery presentation");
    const std::size_t m = pr.components();
    if (i >= m || j >= m || i == j)
        throw IndexOutOfRange("handle_slide: bad component indices");
    IntMat l = pr.linking;
    l.add_row(i, j, 1);
    l.add_col(i, j, 1);
    return Presentation::surgery(std::move(l));
}

} // namespace toral
