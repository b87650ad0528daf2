#include <catch2/catch_amalgamated.hpp>

#include "test_helpers.hpp"
#include "toral/presentation.hpp"

using namespace toral;
using toral::test::mat;

TEST_CASE("homology of surgery presentations") {
    SECTION("0-framed unknot is S2 x S1") {
        HomologySummary h = homology(Presentation::surgery(mat({{0}})));
        CHECK(h.b1 == 1);
        CHECK(h.torsion_divisors.empty());
        CHECK(h.m_x == HalfInt::whole(0));
    }
    SECTION("5-framed unknot is L(5,1)") {
        HomologySummary h = homology(Presentation::surgery(mat({{5}})));
        CHECK(h.b1 == 0);
        CHECK(h.torsion_divisors == std::vector<Int>{5});
        CHECK(h.m_x == HalfInt::halves(-1));
        CHECK(h.torsion_order() == 5);
        CHECK(h.tor_h2_order(2) == 25);
    }
    SECTION("zero 3x3 linking matrix is T3-like homology") {
        HomologySummary h = homology(Presentation::surgery(mat({{0, 0, 0}, {0, 0, 0}, {0, 0, 0}})));
        CHECK(h.b1 == 3);
        CHECK(h.m_x == HalfInt::whole(1));
    }
    SECTION("mixed torsion and free part") {
        HomologySummary h = homology(Presentation::surgery(mat({{2, 0, 0}, {0, 6, 0}, {0, 0, 0}})));
        CHECK(h.b1 == 1);
        CHECK(h.torsion_order() == 12);
    }
    SECTION("asymmetric matrix rejected") {
        CHECK_THROWS_AS(Presentation::surgery(mat({{0, 1}, {2, 0}})), InvalidPresentation);
    }
}

TEST_CASE("homology of standard families") {
    CHECK(homology(Presentation::standard(Family::S3)).b1 == 0);
    CHECK(homology(Presentation::standard(Family::S3)).m_x == HalfInt::halves(-1));
    CHECK(homology(Presentation::standard(Family::S2xS1)).b1 == 1);
    CHECK(homology(Presentation::standard(Family::S2xS1)).m_x == HalfInt::whole(0));
    CHECK(homology(Presentation::standard(Family::T3)).b1 == 3);
    CHECK(homology(Presentation::standard(Family::T3)).m_x == HalfInt::whole(1));

    HomologySummary sg = homology(Presentation::sigma_x_s1(2));
    CHECK(sg.b1 == 5);
    CHECK(sg.m_x == HalfInt::whole(2));

    HomologySummary lens = homology(Presentation::lens(7, 2));
    CHECK(lens.b1 == 0);
    CHECK(lens.torsion_divisors == std::vector<Int>{7});

    HomologySummary cs = homology(Presentation::connected_sum(
        {Presentation::lens(3, 1), Presentation::standard(Family::S2xS1)}));
    CHECK(cs.b1 == 1);
    CHECK(cs.torsion_order() == 3);

    CHECK_THROWS_AS(Presentation::lens(4, 2), InvalidPresentation);
    CHECK_THROWS_AS(Presentation::sigma_x_s1(-1), InvalidPresentation);
}

TEST_CASE("bordism exponent") {
    // closed connected X: one absolute boundary-less piece with b0 = 1
    CHECK(m_exponent_bordism(3, 3, 1, 1) == HalfInt::whole(1)); // T3
    CHECK(m_exponent_bordism(1, 1, 1, 1) == HalfInt::whole(0)); // S2 x S1
    CHECK(m_exponent_bordism(0, 0, 1, 1) == HalfInt::halves(-1)); // S3
    // cylinder Sigma_g x I: b1 = 2g, relative b1 = 1, so m = g/2
    for (long long g = 1; g <= 4; ++g)
        CHECK(m_exponent_bordism(2 * g, 1, 1, 0) == HalfInt::halves(g));
    CHECK_THROWS_AS(m_exponent_bordism(1, 0, 1, 1), NonHalfInteger);
}

TEST_CASE("lens chains") {
    CHECK(lens_chain(5, 1) == std::vector<long>{5});
    CHECK(lens_chain(5, 2) == std::vector<long>{3, 2});
    CHECK(lens_chain(7, 3) == std::vector<long>{3, 2, 2});
    SECTION("chain linking matrix presents Z/p") {
        for (long p = 2; p <= 50; ++p)
            for (long q = 1; q < p; ++q) {
                if (std::gcd(p, q) != 1) continue;
                IntMat l = chain_linking(lens_chain(p, q));
                HomologySummary h = homology(Presentation::surgery(l));
                CHECK(h.b1 == 0);
                CHECK(h.torsion_order() == p);
            }
    }
    SECTION("tridiagonal shape") {
        IntMat l = chain_linking({3, 2});
        CHECK(l == mat({{3, 1}, {1, 2}}));
    }
}

TEST_CASE("kirby moves") {
    Presentation base = Presentation::surgery(mat({{0}}));
    SECTION("stabilization appends a +-1 block") {
        Presentation up = kirby_stabilize(base, 1);
        CHECK(up.linking == mat({{0, 0}, {0, 1}}));
        Presentation dn = kirby_stabilize(base, -1);
        CHECK(dn.linking == mat({{0, 0}, {0, -1}}));
        CHECK_THROWS_AS(kirby_stabilize(base, 2), InputError);
        CHECK_THROWS_AS(kirby_stabilize(Presentation::standard(Family::S3), 1),
                        InvalidPresentation);
    }
    SECTION("handle slide example") {
        Presentation p = Presentation::surgery(mat({{1, 0}, {0, 1}}));
        Presentation s = handle_slide(p, 0, 1);
        CHECK(s.linking == mat({{2, 1}, {1, 1}}));
        CHECK_THROWS_AS(handle_slide(p, 0, 0), IndexOutOfRange);
        CHECK_THROWS_AS(handle_slide(p, 0, 5), IndexOutOfRange);
    }
    SECTION("moves preserve homology") {
        Presentation p = Presentation::surgery(mat({{3, 1, 0}, {1, -2, 2}, {0, 2, 4}}));
        HomologySummary h0 = homology(p);
        HomologySummary h1 = homology(kirby_stabilize(p, 1));
        HomologySummary h2 = homology(handle_slide(p, 2, 0));
        CHECK(h0.b1 == h1.b1);
        CHECK(h0.torsion_order() == h1.torsion_order());
        CHECK(h0.b1 == h2.b1);
        CHECK(h0.torsion_divisors == h2.torsion_divisors);
        CHECK(h0.m_x == h2.m_x);
    }
}
