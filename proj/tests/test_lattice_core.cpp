#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "test_helpers.hpp"
#include "toral/disc_group.hpp"
#include "toral/lattice.hpp"
#include "toral/random_gen.hpp"

using namespace toral;
using toral::test::mat;

TEST_CASE("validate_even_lattice basic examples") {
    EvenLattice a = validate_even_lattice(mat({{2}}));
    CHECK(a.rank() == 1);
    CHECK(a.det() == 2);
    CHECK(a.signature() == 1);

    EvenLattice h = validate_even_lattice(mat({{0, 1}, {1, 0}}));
    CHECK(h.rank() == 2);
    CHECK(h.det() == -1);
    CHECK(h.signature() == 0);

    EvenLattice r = validate_even_lattice(mat({{2, 1}, {1, 2}}));
    CHECK(r.det() == 3);
    CHECK(r.signature() == 2);
}

TEST_CASE("validate_even_lattice rejections") {
    CHECK_THROWS_AS(validate_even_lattice(mat({{2, 1}, {1, 1}})), NotEven);
    CHECK_THROWS_AS(validate_even_lattice(mat({{2, 1}, {0, 2}})), NotSymmetric);
    CHECK_THROWS_AS(validate_even_lattice(mat({{2, 2}, {2, 2}})), Degenerate);
}

TEST_CASE("smith normal form examples") {
    SmithData a = smith_normal_form(mat({{2, 0}, {0, 4}}));
    CHECK(a.divisors == std::vector<Int>{2, 4});

    SmithData b = smith_normal_form(mat({{0, 1}, {1, 0}}));
    CHECK(b.divisors == std::vector<Int>{1, 1});

    SmithData c = smith_normal_form(mat({{2, 1}, {1, 2}}));
    CHECK(c.divisors == std::vector<Int>{1, 3});

    CHECK_THROWS_AS(smith_normal_form(mat({{1, 1}, {1, 1}})), Degenerate);
}

TEST_CASE("smith normal form transform identities on random matrices") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> entry(-9, 9);
    std::uniform_int_distribution<std::size_t> dim(1, 5);
    int done = 0;
    while (done < 40) {
        std::size_t n = dim(rng);
        IntMat m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m(i, j) = entry(rng);
        Int d = det(m);
        if (d == 0) continue;
        ++done;
        SmithData s = smith_normal_form(m);
        CHECK(abs(det(s.u)) == 1);
        CHECK(abs(det(s.v)) == 1);
        IntMat diag = s.u * m * s.v;
        Int prod = 1;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j)
                CHECK(diag(i, j) == (i == j ? s.divisors[i] : Int(0)));
            CHECK(s.divisors[i] > 0);
            if (i + 1 < n) CHECK(s.divisors[i + 1] % s.divisors[i] == 0);
            prod *= s.divisors[i];
        }
        CHECK(prod == abs(d));
    }
}

TEST_CASE("discriminant group orders and representatives") {
    DiscGroup z2(validate_even_lattice(mat({{2}})));
    CHECK(z2.order() == 2);
    CHECK(z2.divisors() == std::vector<Int>{2});
    CHECK(z2.element(0) == std::vector<Int>{0});

    DiscGroup trivial(validate_even_lattice(mat({{0, 1}, {1, 0}})));
    CHECK(trivial.order() == 1);
    CHECK(trivial.divisors().empty());

    DiscGroup z3(validate_even_lattice(mat({{2, 1}, {1, 2}})));
    CHECK(z3.order() == 3);
    CHECK(z3.divisors() == std::vector<Int>{3});
}

TEST_CASE("disc_q and disc_b examples") {
    DiscGroup g(validate_even_lattice(mat({{2}})));
    CHECK(g.q({Int(1)}) == RationalPhase(1, 4));
    CHECK(g.q({Int(0)}) == RationalPhase());
    // coset invariance: (1) and (3) = (1) + 2*(1) give equal phases
    CHECK(g.q({Int(3)}) == g.q({Int(1)}));

    CHECK(g.b({Int(1)}, {Int(1)}) == RationalPhase(1, 2));
    CHECK(g.b({Int(0)}, {Int(1)}) == RationalPhase());
}

TEST_CASE("coset well-definedness and polarization, randomized exact") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long long> comp(-20, 20);
    for (int trial = 0; trial < 50; ++trial) {
        EvenLattice l = random_even_lattice(rng, 4, 6);
        DiscGroup g(l);
        const std::size_t n = l.rank();
        for (int rep = 0; rep < 20; ++rep) {
            std::vector<Int> a(n), a2(n), v(n);
            for (std::size_t i = 0; i < n; ++i) {
                a[i] = comp(rng);
                a2[i] = comp(rng);
                v[i] = comp(rng);
            }
            // a + K v lands in the same coset, with identical q
            std::vector<Int> shifted = a;
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) shifted[i] += l.gram()(i, j) * v[j];
            CHECK(g.q(shifted) == g.q(a));
            // polarization b(a,a') = q(a+a') - q(a) - q(a')
            std::vector<Int> s(n);
            for (std::size_t i = 0; i < n; ++i) s[i] = a[i] + a2[i];
            CHECK(g.b(a, a2) == g.q(s) - g.q(a) - g.q(a2));
            // symmetry
            CHECK(g.b(a, a2) == g.b(a2, a));
        }
        CHECK((l.signature() - static_cast<int>(l.rank())) % 2 == 0);
        Int prod = 1;
        for (const Int& d : l.smith().divisors) prod *= d;
        CHECK(prod == l.abs_det());
    }
}

TEST_CASE("gauss sums and Milgram reciprocity") {
    SECTION("unimodular lattice has trivial sum") {
        DiscGroup g(validate_even_lattice(mat({{0, 1}, {1, 0}})));
        PhaseSum s = gauss_sum(g);
        CHECK(s.evaluate() == std::complex<double>(1.0, 0.0));
    }
    SECTION("K = [[2]] gives 1 + i") {
        DiscGroup g(validate_even_lattice(mat({{2}})));
        std::complex<double> s = gauss_sum(g).evaluate();
        CHECK(std::abs(s - std::complex<double>(1.0, 1.0)) < 1e-12);
        CHECK(std::abs(std::abs(s) - std::sqrt(2.0)) < 1e-12);
        CHECK(milgram_check(g.lattice()) < 1e-12);
    }
    SECTION("sign flip for K = [[-2]]") {
        EvenLattice l = validate_even_lattice(mat({{-2}}));
        CHECK(l.signature() == -1);
        std::complex<double> s = gauss_sum(DiscGroup(l)).evaluate();
        CHECK(std::abs(s - std::complex<double>(1.0, -1.0)) < 1e-12);
        CHECK(milgram_check(l) < 1e-12);
    }
    SECTION("random lattices: phase equals sigma/8, magnitude^2 exact") {
        std::mt19937_64 rng(23);
        for (int trial = 0; trial < 20; ++trial) {
            EvenLattice l = random_even_lattice(rng, 4, 6, 80);
            CHECK(milgram_check(l) < 1e-9);
            DiscGroup g(l);
            PhaseSum s = gauss_sum(g);
            auto sq = (s * s.conj()).as_integer();
            REQUIRE(sq.has_value());
            CHECK(*sq == g.order());
        }
    }
}
