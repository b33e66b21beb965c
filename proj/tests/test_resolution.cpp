#include <doctest.h>

#include "gorlin/fixtures.hpp"
#include "gorlin/io.hpp"
#include "gorlin/verify.hpp"
#include "test_util.hpp"

using namespace gorlin;
using testutil::Rng;

TEST_SUITE("resolution") {

TEST_CASE("b1 entries on the built-in systems") {
    const ResolutionComplex r0 = build_resolution(fixture_system(example_fixtures()[0]));
    const RingDesc q = r0.ring();
    CHECK(r0.b1.at(0, 0) == Polynomial::parse(q, "x^3 - x*y^2")); // (y^2)*
    const ResolutionComplex r2 = build_resolution(fixture_system(example_fixtures()[2]));
    CHECK(r2.b1.at(0, 0) == Polynomial::parse(q, "x^3"));
    const ResolutionComplex r3 = build_resolution(fixture_system(example_fixtures()[3]));
    CHECK(r3.b1.at(0, 3) == Polynomial::parse(q, "54*y^3"));
}

TEST_CASE("b2 columns on the built-in systems") {
    const ResolutionComplex r0 = build_resolution(fixture_system(example_fixtures()[0]));
    const RingDesc q = r0.ring();
    // column y^2: z into row y^3, -y into row y^2 z, 2x into row z^3
    for (std::size_t i = 0; i < 7; ++i) {
        const char* expected[] = {"0", "0", "0", "z", "-y", "0", "2*x"};
        CHECK(r0.b2.at(i, 0) == Polynomial::parse(q, expected[i]));
    }
    const ResolutionComplex r1 = build_resolution(fixture_system(example_fixtures()[1]));
    for (std::size_t i = 0; i < 7; ++i) {
        const char* expected[] = {"z", "x", "0", "0", "x", "0", "0"};
        CHECK(r1.b2.at(i, 3) == Polynomial::parse(q, expected[i])); // column (y^3)*
    }
    const ResolutionComplex r3 = build_resolution(fixture_system(example_fixtures()[3]));
    CHECK(r3.b2.at(0, 1) == Polynomial::parse(q, "-54*x"));
}

TEST_CASE("whole fixtures reproduce") {
    for (const auto& fx : example_fixtures()) {
        const FixtureDiff diff = check_fixture(fx);
        INFO(fx.name, ": ", diff.details);
        CHECK(diff.ok);
    }
}

TEST_CASE("b3 reindexes b1") {
    const ResolutionComplex r2 = build_resolution(fixture_system(example_fixtures()[2]));
    // row y^2 of b3 carries the (y^2)* entry of b1
    CHECK(r2.b3.row_labels()[0].str() == "y^2");
    CHECK(r2.b3.at(0, 0) == Polynomial::parse(r2.ring(), "x^3"));

    PolyMatrix zero_b1(r2.ring(), sym_labels({Monomial()}), b1_basis(3));
    const PolyMatrix zero_b3 = build_b3(zero_b1, 3);
    for (std::size_t i = 0; i < zero_b3.rows(); ++i) CHECK(zero_b3.at(i, 0).is_zero());

    const ResolutionComplex rg = build_resolution(generic_phi(2));
    // dual row y^2 of b3 carries the monomial-label y^2 entry of b1
    CHECK(rg.b3.row_labels()[2] == Label{Monomial(0, 2, 0), true});
    CHECK(rg.b3.at(2, 0) == rg.b1.at(0, 2));
}

TEST_CASE("pairing oracle agrees and is alternating") {
    const InverseSystem f2 = fixture_system(example_fixtures()[2]);
    const ResolutionComplex r2 = build_resolution(f2);
    CHECK(b2_pairing_oracle(r2.cat, f2) == r2.b2);

    const InverseSystem f0 = fixture_system(example_fixtures()[0]);
    const ResolutionComplex r0 = build_resolution(f0);
    const PolyMatrix oracle = b2_pairing_oracle(r0.cat, f0);
    CHECK(oracle.is_alternating());
    // row (yz)*, column z^2
    CHECK(oracle.at(1, 2) == Polynomial::parse(r0.ring(), "2*x"));
}

TEST_CASE("build_resolution rejects degenerate and oversized input") {
    CHECK_THROWS_AS(build_resolution(build_phi(3, {})), DegenerateInverseSystem);
    CHECK_THROWS_AS(build_resolution(generic_phi(4)), CapacityError);
}

TEST_CASE("twists force the right entry degrees") {
    const ResolutionComplex r = build_resolution(fixture_system(example_fixtures()[1]));
    CHECK(r.twist_b3 == BiDegree{-7, -17});
    CHECK(r.twist_b1[0] == BiDegree{-3, -5});
    CHECK(r.twist_b1[3] == BiDegree{-3, -6});
    CHECK(r.twist_b2[0] == BiDegree{-4, -12});
    CHECK(r.twist_b2[3] == BiDegree{-4, -11});
    CHECK(r.expected_b1_bidegree(0) == BiDegree{3, 5});
    CHECK(r.expected_b2_bidegree(0, 0) == BiDegree{1, 7});
    CHECK(r.expected_b2_bidegree(3, 0) == BiDegree{1, 6});
    CHECK(r.expected_b2_bidegree(0, 3) == BiDegree{1, 6});
    CHECK(r.expected_b2_bidegree(3, 3) == BiDegree{1, 5});
    CHECK(r.expected_b3_bidegree(0) == BiDegree{3, 5});
    // every entry of b2 is linear in x,y,z
    for (std::size_t i = 0; i < r.b2.rows(); ++i)
        for (std::size_t j = 0; j < r.b2.cols(); ++j)
            if (!r.b2.at(i, j).is_zero()) CHECK(*r.b2.at(i, j).xyz_degree() == 1);
}

TEST_CASE("generic complex is a complex symbolically") {
    const ResolutionComplex r = build_resolution(generic_phi(2));
    CHECK(r.b1.cols() == 5);
    CHECK(r.b2.rows() == 5);
    const PolyMatrix p1 = r.b1 * r.b2;
    for (std::size_t j = 0; j < p1.cols(); ++j) CHECK(p1.at(0, j).is_zero());
    const PolyMatrix p2 = r.b2 * r.b3;
    for (std::size_t i = 0; i < p2.rows(); ++i) CHECK(p2.at(i, 0).is_zero());
    CHECK(r.b2.is_alternating());
}

TEST_CASE("specializing the generic complex matches the direct build") {
    const InverseSystem g = generic_phi(2);
    const ResolutionComplex rg = build_resolution(g);
    Rng rng(71);
    for (int rep = 0; rep < 5; ++rep) {
        TAssignment rho;
        std::vector<std::pair<Monomial, Rational>> coeffs;
        for (const auto& m : g.phi.ring().tvar_monomials()) {
            const Rational v = rng.integer(9);
            rho[m] = v;
            if (v != 0) coeffs.emplace_back(m, v);
        }
        const InverseSystem f = build_phi(2, coeffs);
        if (determinant(cat_matrix(f)).is_zero()) continue;
        const ResolutionComplex rs = build_resolution(f);
        CHECK(rg.b1.specialize(rho) == rs.b1);
        CHECK(rg.b2.specialize(rho) == rs.b2);
        CHECK(rg.b3.specialize(rho) == rs.b3);
        CHECK(rg.cat.delta.specialize(rho) == rs.cat.delta);
    }
}

TEST_CASE("random specialized systems verify end to end") {
    for (int rep = 0; rep < 6; ++rep) {
        const InverseSystem f = random_phi(2, 400 + std::uint64_t(rep));
        const VerificationReport rep2 = full_report(f);
        INFO(report_to_text(rep2, false));
        CHECK(rep2.all_pass());
    }
    const InverseSystem f3 = random_phi(3, 500);
    CHECK(full_report(f3).all_pass());
}

} // TEST_SUITE

