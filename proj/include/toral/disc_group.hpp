#pragma once

// The discriminant group G_K = Lambda^*/(K Lambda) of an even lattice,
// with its quadratic form q(a) = (1/2) a^T K^{-1} a mod 1 and the
// associated bilinear form b, both exact in Q/Z.
//
// Elements are indexed by their Smith-normal-form coordinates: with
// U K V = diag(d_1,...,d_n), the map a -> (U a mod d_i) identifies
// Z^n / K Z^n with the box prod [0, d_i). Enumeration is lexicographic
// in these coordinates, so coset representatives are reproducible.

#include <cstddef>
#include <vector>

#include "toral/lattice.hpp"
#include "toral/phase.hpp"

namespace toral {

class DiscGroup {
public:
    explicit DiscGroup(EvenLattice lattice)
        : lattice_(std::move(lattice)), kinv_(inverse(lattice_.gram())) {
        uinv_ = unimodular_inverse(lattice_.smith().u);
        order_ = 1;
        for (const Int& d : lattice_.smith().divisors) {
            order_ *= d;
            if (d > 1) nontrivial_divisors_.push_back(d);
        }
    }

    const EvenLattice& lattice() const { return lattice_; }
    const Int& order() const { return order_; }

    // elementary divisors > 1
    const std::vector<Int>& divisors() const { return nontrivial_divisors_; }

    std::size_t size() const {
        if (order_ > 100000000)
            throw SizeLimit("DiscGroup: order " + order_.str() + " exceeds enumeration limit");
        return static_cast<std::size_t>(order_);
    }

    // SNF coordinates of a representative vector
    std::vector<Int> coords(const std::vector<Int>& a) const {
        const std::size_t n = lattice_.rank();
        const IntMat& u = lattice_.smith().u;
        std::vector<Int> t(n);
        for (std::size_t i = 0; i < n; ++i) {
            Int s = 0;
            for (std::size_t j = 0; j < n; ++j) s += u(i, j) * a[j];
            t[i] = mod_floor(s, lattice_.smith().divisors[i]);
        }
        return t;
    }

    // representative of the coset with the given SNF coordinates
    std::vector<Int> representative(const std::vector<Int>& t) const {
        const std::size_t n = lattice_.rank();
        std::vector<Int> a(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) a[i] += uinv_(i, j) * t[j];
        return a;
    }

    std::vector<Int> coords_of_index(std::size_t idx) const {
        const auto& d = lattice_.smith().divisors;
        std::vector<Int> t(d.size());
        for (std::size_t i = d.size(); i-- > 0;) {
            auto di = static_cast<std::size_t>(d[i]);
            t[i] = Int(idx % di);
            idx /= di;
        }
        return t;
    }

    std::size_t index_of_coords(const std::vector<Int>& t) const {
        const auto& d = lattice_.smith().divisors;
        std::size_t idx = 0;
        for (std::size_t i = 0; i < d.size(); ++i)
            idx = idx * static_cast<std::size_t>(d[i]) + static_cast<std::size_t>(t[i]);
        return idx;
    }

    std::vector<Int> element(std::size_t idx) const {
        return representative(coords_of_index(idx));
    }

    std::size_t index_of(const std::vector<Int>& a) const { return index_of_coords(coords(a)); }

    std::size_t neg_index(std::size_t idx) const {
        const auto& d = lattice_.smith().divisors;
        std::vector<Int> t = coords_of_index(idx);
        for (std::size_t i = 0; i < t.size(); ++i) t[i] = mod_floor(-t[i], d[i]);
        return index_of_coords(t);
    }

    std::size_t add_index(std::size_t x, std::size_t y) const {
        const auto& d = lattice_.smith().divisors;
        std::vector<Int> t = coords_of_index(x), s = coords_of_index(y);
        for (std::size_t i = 0; i < t.size(); ++i) t[i] = mod_floor(t[i] + s[i], d[i]);
        return index_of_coords(t);
    }

    // q(a) = (1/2) a^T K^{-1} a mod 1; well defined because K is even
    RationalPhase q(const std::vector<Int>& a) const {
        return RationalPhase::from_rational(quad(a, a) / 2);
    }

    // b(a, a') = a^T K^{-1} a' mod 1; polarization of q
    RationalPhase b(const std::vector<Int>& a, const std::vector<Int>& a2) const {
        return RationalPhase::from_rational(quad(a, a2));
    }

    RationalPhase q_index(std::size_t idx) const { return q(element(idx)); }
    RationalPhase b_index(std::size_t x, std::size_t y) const {
        return b(element(x), element(y));
    }

private:
    Rat quad(const std::vector<Int>& a, const std::vector<Int>& b) const {
        const std::size_t n = lattice_.rank();
        Rat s = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (a[i] == 0) continue;
            Rat row = 0;
            for (std::size_t j = 0; j < n; ++j) row += kinv_(i, j) * Rat(b[j]);
            s += Rat(a[i]) * row;
        }
        return s;
    }

    EvenLattice lattice_;
    RatMat kinv_;
    IntMat uinv_;
    Int order_;
    std::vector<Int> nontrivial_divisors_;
};

inline DiscGroup discriminant_group(const EvenLattice& l) { return DiscGroup(l); }

// Sum over G_K of e^{2 pi i q(a)}, kept exact.
inline PhaseSum gauss_sum(const DiscGroup& g) {
    PhaseSum s;
    const std::size_t n = g.size();
    for (std::size_t i = 0; i < n; ++i) s.add(g.q_index(i));
    return s;
}

// | gauss_sum / sqrt|G_K| - e^{2 pi i sigma(K)/8} |, the Milgram
// reciprocity residual; ties the Gauss-sum phase to the signature.
inline double milgram_check(const EvenLattice& l) {
    DiscGroup g(l);
    std::complex<double> lhs =
        gauss_sum(g).evaluate() / std::sqrt(static_cast<double>(g.order()));
    std::complex<double> rhs = RationalPhase(l.signature(), 8).unit();
    return std::abs(lhs - rhs);
}

} // namespace toral
