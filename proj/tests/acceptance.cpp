// Acceptance suite: one pass/fail line per criterion, exit 0 iff all pass.

#include <chrono>
#include <complex>
#include <cstdio>
#include <random>
#include <vector>

#include "toral/engine.hpp"
#include "toral/gaussian.hpp"
#include "toral/json_io.hpp"
#include "toral/random_gen.hpp"

using namespace toral;

namespace {

int failures = 0;

void report(int index, const char* name, bool ok, double residual, double seconds) {
    std::printf("[%s] %d. %-38s max residual %.3e   (%.2fs)\n", ok ? "PASS" : "FAIL", index,
                name, residual, seconds);
    if (!ok) ++failures;
}

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double elapsed() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
};

std::vector<EvenLattice> lattice_pool() {
    auto m = [](std::initializer_list<std::initializer_list<long long>> rows) {
        IntMat r(rows.size(), rows.begin()->size());
        std::size_t i = 0;
        for (const auto& row : rows) {
            std::size_t j = 0;
            for (long long v : row) r(i, j++) = v;
            ++i;
        }
        return validate_even_lattice(r);
    };
    return {m({{2}}), m({{-2}}), m({{0, 1}, {1, 0}}), m({{2, 1}, {1, 2}}),
            m({{2, 0}, {0, -4}})};
}

// 1. closed-form Fresnel factor against the damped quadrature oracle
void criterion_fresnel() {
    Timer timer;
    std::mt19937_64 rng(1001);
    double worst = 0;
    bool ok = true;
    for (int trial = 0; trial < 50; ++trial) {
        SymForm a = random_sym_form(rng, 4, 0.2, 3.0);
        try {
            double diff = std::abs(fresnel(a) - fresnel_quadrature_oracle(a, 0.02, 300.0));
            worst = std::max(worst, diff);
        } catch (const Error&) {
            ok = false;
        }
    }
    double sec = timer.elapsed();
    report(1, "fresnel vs quadrature oracle", ok && worst <= 1e-4 && sec <= 60.0, worst, sec);
}

// 2. Kronecker signature and determinant factorization
void criterion_spectral() {
    Timer timer;
    std::mt19937_64 rng(1002);
    double worst = 0;
    bool ok = true;
    for (int trial = 0; trial < 100; ++trial) {
        EvenLattice k = random_even_lattice(rng, 4, 6, 500);
        SymForm a = random_sym_form(rng, 4, 0.2, 3.0);
        try {
            KronResult r = kron_factorize(k, a);
            if (r.signature != k.signature() * sym_signature(a)) ok = false;
            double expect =
                static_cast<double>(a.dim()) * std::log(static_cast<double>(k.abs_det())) +
                static_cast<double>(k.rank()) * sym_log_abs_det(a);
            worst = std::max(worst, std::abs(r.log_abs_det - expect) /
                                        std::max(1.0, std::abs(expect)));
        } catch (const Error&) {
            ok = false;
        }
    }
    report(2, "spectral factorization (K tensor A)", ok && worst <= 1e-9, worst,
           timer.elapsed());
}

// 3. Milgram phase equals the Weil (ST)^3 anomaly
void criterion_milgram_anomaly() {
    Timer timer;
    std::mt19937_64 rng(1003);
    double worst = 0;
    bool ok = true;
    for (int trial = 0; trial < 50; ++trial) {
        // cap |det| so the |G| x |G| Weil matrices stay desk-sized
        EvenLattice l = random_even_lattice(rng, 4, 6, 60);
        worst = std::max(worst, milgram_check(l));
        try {
            ModularData d(l);
            DiscGroup g(l);
            std::complex<double> phase =
                gauss_sum(g).evaluate() / std::sqrt(static_cast<double>(g.order()));
            worst = std::max(worst, std::abs(phase - d.anomaly().unit()));
            CMatrix st = d.s_matrix() * d.t_matrix();
            worst = std::max(worst, (st * st * st)
                                        .max_abs_diff(d.conjugation_matrix() *
                                                      d.anomaly().unit()));
        } catch (const Error&) {
            ok = false;
        }
    }
    report(3, "Milgram phase vs Weil anomaly", ok && worst <= 1e-9, worst, timer.elapsed());
}

// 4. boundary Hilbert space dimension |det K|^g by leaf enumeration
void criterion_hilbert_dims() {
    Timer timer;
    bool ok = true;
    for (const EvenLattice& k : lattice_pool()) {
        if (k.abs_det() > 16) continue;
        for (std::size_t g = 0; g <= 3; ++g) {
            IntMat lag(2 * g, g);
            for (std::size_t i = 0; i < g; ++i) lag(i, i) = 1;
            BoundarySpace b = boundary_space(g, k, lag);
            Int expect = 1;
            for (std::size_t i = 0; i < g; ++i) expect *= k.abs_det();
            if (b.dim != expect || b.leaves.size() != static_cast<std::size_t>(expect))
                ok = false;
        }
    }
    report(4, "Hilbert dimensions |det K|^g", ok, 0.0, timer.elapsed());
}

// 5. cylinder scalar and self-gluing
void criterion_cylinder_gluing() {
    Timer timer;
    double worst = 0;
    bool ok = true;
    for (const EvenLattice& k : lattice_pool()) {
        for (std::size_t g = 0; g <= 3; ++g) {
            double ad = static_cast<double>(k.abs_det());
            double scalar = cylinder_scalar(g, k);
            // |det K|^{g/2}, and the bordism exponent of the cylinder is g/2
            HalfInt m = m_exponent_bordism(2 * static_cast<long long>(g), 1, 1, 0);
            if (!(m == HalfInt::halves(static_cast<long long>(g)))) ok = false;
            worst = std::max(worst, std::abs(scalar * scalar - std::pow(ad, g)));
            IntMat lag(2 * g, g);
            for (std::size_t i = 0; i < g; ++i) lag(i, i) = 1;
            BoundarySpace b = boundary_space(g, k, lag);
            CMatrix cyl = CMatrix::identity(static_cast<std::size_t>(b.dim)) * scalar;
            std::complex<double> glued = glue_trace(b, cyl).amplitude;
            std::complex<double> zs =
                z_standard(Presentation::sigma_x_s1(static_cast<long>(g)), k).amplitude;
            worst = std::max(worst, std::abs(glued - zs));
        }
    }
    report(5, "cylinder scalar and self-gluing", ok && worst <= 1e-9, worst, timer.elapsed());
}

// 6. closed values and connected-sum multiplicativity
void criterion_closed_values() {
    Timer timer;
    std::mt19937_64 rng(1006);
    double worst = 0;
    for (const EvenLattice& k : lattice_pool()) {
        double ad = static_cast<double>(k.abs_det());
        worst = std::max(worst, std::abs(z_surgery(Presentation::surgery(IntMat(0, 0)), k)
                                             .amplitude -
                                         std::pow(ad, -0.5)));
        IntMat zero1(1, 1), zero3(3, 3);
        worst = std::max(worst, std::abs(z_surgery(Presentation::surgery(zero1), k).amplitude -
                                         1.0));
        worst = std::max(worst, std::abs(z_surgery(Presentation::surgery(zero3), k).amplitude -
                                         ad));
        ModularData d(k);
        worst = std::max(
            worst, std::abs(mapping_torus_trace(d, McgWord::parse("Tt")).amplitude - ad));
        // multiplicativity: Z(A # B) Z(S^3) = Z(A) Z(B)
        for (int rep = 0; rep < 4; ++rep) {
            Presentation a = Presentation::surgery(random_linking_matrix(rng, 2, 3));
            Presentation b = Presentation::surgery(random_linking_matrix(rng, 2, 3));
            std::complex<double> za = z_surgery(a, k).amplitude;
            std::complex<double> zb = z_surgery(b, k).amplitude;
            std::complex<double> zsum =
                z_standard(Presentation::connected_sum({a, b}), k).amplitude;
            worst = std::max(worst, std::abs(zsum * std::pow(ad, -0.5) - za * zb) /
                                        std::max(1.0, std::abs(za * zb)));
        }
    }
    report(6, "closed values and multiplicativity", worst <= 1e-9, worst, timer.elapsed());
}

// 7. Kirby invariance under random stabilizations and handle slides
void criterion_kirby() {
    Timer timer;
    std::mt19937_64 rng(1007);
    double worst = 0;
    bool ok = true;
    const std::int64_t budget = 100000000;
    for (int trial = 0; trial < 100; ++trial) {
        EvenLattice k = random_even_lattice(rng, 3, 6, 9);
        Presentation p = Presentation::surgery(random_linking_matrix(rng, 3, 4));
        std::complex<double> z0;
        try {
            z0 = z_surgery(p, k, budget).amplitude;
        } catch (const SizeLimit&) {
            ok = false;
            continue;
        }
        double scale = std::max(1.0, std::abs(z0));
        std::uniform_int_distribution<int> move(0, 2);
        for (int mv = 0; mv < 5; ++mv) {
            int kind = move(rng);
            if (kind == 2 && p.components() >= 2) {
                std::uniform_int_distribution<std::size_t> comp(0, p.components() - 1);
                std::size_t i = comp(rng), j = comp(rng);
                if (i == j) j = (j + 1) % p.components();
                p = handle_slide(p, i, j);
            } else {
                p = kirby_stabilize(p, kind == 0 ? 1 : -1);
            }
            try {
                worst = std::max(worst,
                                 std::abs(z_surgery(p, k, budget).amplitude - z0) / scale);
            } catch (const SizeLimit&) {
                ok = false;
            }
        }
    }
    double sec = timer.elapsed();
    report(7, "Kirby move invariance", ok && worst <= 1e-9 && sec <= 120.0, worst, sec);
}

// 8. flat-connection decomposition of lens spaces
void criterion_decomposition() {
    Timer timer;
    double worst = 0;
    bool ok = true;
    auto rank1 = lattice_pool()[0];
    auto rank2 = lattice_pool()[3];
    for (const EvenLattice& k : {rank1, rank2}) {
        for (long p = 2; p <= 13; ++p) {
            try {
                DecompositionReport r =
                    z_paper_decomposition(Presentation::lens(p, 1), k, kDefaultBudget, 1e-9);
                Int expect = 1;
                for (std::size_t i = 0; i < k.rank(); ++i) expect *= p;
                if (r.class_count != expect) ok = false;
                worst = std::max(worst, std::abs(r.weight * r.weight -
                                                 static_cast<double>(r.class_count)));
                for (const TorsionClassReport& c : r.classes)
                    worst = std::max(worst, std::abs(std::abs(c.phase.unit()) - 1.0));
                worst = std::max(worst, std::abs(r.reassembled - r.z_direct));
            } catch (const Error&) {
                ok = false;
            }
        }
    }
    report(8, "flat-connection decomposition", ok && worst <= 1e-9, worst, timer.elapsed());
}

} // namespace

int main() {
    criterion_fresnel();
    criterion_spectral();
    criterion_milgram_anomaly();
    criterion_hilbert_dims();
    criterion_cylinder_gluing();
    criterion_closed_values();
    criterion_kirby();
    criterion_decomposition();
    if (failures == 0) {
        std::printf("all criteria passed\n");
        return 0;
    }
    std::printf("%d criteria failed\n", failures);
    return 1;
}
