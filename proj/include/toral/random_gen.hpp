#pragma once

// Seeded generators for verification suites: random even lattices
// (B + B^T with integer B, rejecting det = 0), random linking matrices,
// and random well-conditioned symmetric forms.

#include <cstdint>
#include <random>
#include <vector>

#include "toral/gaussian.hpp"
#include "toral/lattice.hpp"
#include "toral/presentation.hpp"

namespace toral {

// entries of B drawn from [-bound/2, bound/2], so K = B + B^T has
// entries in [-bound, bound] and an automatically even diagonal
inline EvenLattice random_even_lattice(std::mt19937_64& rng, std::size_t max_rank,
                                       int entry_bound, const Int& max_abs_det = 0) {
    std::uniform_int_distribution<std::size_t> rank_dist(1, max_rank);
    std::uniform_int_distribution<int> entry(-entry_bound / 2, entry_bound / 2);
    for (;;) {
        std::size_t n = rank_dist(rng);
        IntMat b(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) b(i, j) = entry(rng);
        IntMat k(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) k(i, j) = b(i, j) + b(j, i);
        Int d = det(k);
        if (d == 0) continue;
        if (max_abs_det > 0 && abs(d) > max_abs_det) continue;
        return validate_even_lattice(k);
    }
}

inline IntMat random_linking_matrix(std::mt19937_64& rng, std::size_t max_components,
                                    int entry_bound) {
    std::uniform_int_distribution<std::size_t> m_dist(1, max_components);
    std::uniform_int_distribution<int> entry(-entry_bound, entry_bound);
    std::size_t m = m_dist(rng);
    IntMat l(m, m);
    for (std::size_t i = 0; i < m; ++i) {
        l(i, i) = entry(rng);
        for (std::size_t j = i + 1; j < m; ++j) l(i, j) = l(j, i) = entry(rng);
    }
    return l;
}

// random symmetric form with eigenvalue magnitudes in [min_eig, max_eig],
// built as Q diag(lambda) Q^T from random Givens rotations
inline SymForm random_sym_form(std::mt19937_64& rng, std::size_t max_dim, double min_eig,
                               double max_eig) {
    std::uniform_int_distribution<std::size_t> dim_dist(1, max_dim);
    std::uniform_real_distribution<double> mag(min_eig, max_eig);
    std::uniform_real_distribution<double> angle(0.0, 6.283185307179586);
    std::uniform_int_distribution<int> coin(0, 1);
    std::size_t n = dim_dist(rng);
    std::vector<double> m(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        m[i * n + i] = mag(rng) * (coin(rng) ? 1.0 : -1.0);
    for (int sweep = 0; sweep < 2; ++sweep)
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) {
                double th = angle(rng), c = std::cos(th), s = std::sin(th);
                for (std::size_t k = 0; k < n; ++k) {
                    double mp = m[k * n + p], mq = m[k * n + q];
                    m[k * n + p] = c * mp - s * mq;
                    m[k * n + q] = s * mp + c * mq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    double mp = m[p * n + k], mq = m[q * n + k];
                    m[p * n + k] = c * mp - s * mq;
                    m[q * n + k] = s * mp + c * mq;
                }
            }
    // clean the tiny asymmetry floating point leaves behind
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            double avg = 0.5 * (m[i * n + j] + m[j * n + i]);
            m[i * n + j] = m[j * n + i] = avg;
        }
    return SymForm(std::move(m), n);
}

} // namespace toral
