#include <doctest.h>

#include "gorlin/fixtures.hpp"
#include "gorlin/io.hpp"
#include "gorlin/verify.hpp"
#include "test_util.hpp"

using namespace gorlin;
using testutil::Rng;

namespace {

PolyMatrix alternating_from(const RingDesc& ring,
                            const std::vector<Polynomial>& upper, std::size_t size) {
    PolyMatrix m(ring, std::vector<Label>(size), std::vector<Label>(size));
    std::size_t k = 0;
    for (std::size_t i = 0; i < size; ++i) {
        for (std::size_t j = i + 1; j < size; ++j) {
            m.at(i, j) = upper[k];
            m.at(j, i) = -upper[k];
            ++k;
        }
    }
    return m;
}

} // namespace

TEST_SUITE("verify") {

TEST_CASE("annihilator kernel") {
    const InverseSystem f2 = fixture_system(example_fixtures()[2]);
    const auto ann = annihilator_degree_n(f2);
    CHECK(ann.size() == 7);
    for (const auto& g : ann) CHECK(contract(g, f2.phi).is_zero());

    // rank-deficient input: the kernel may grow past 2n+1
    const InverseSystem degenerate = build_phi(3, {{Monomial(4, 0, 0), Rational(1)}});
    CHECK(determinant(cat_matrix(degenerate)).is_zero());
    const auto big = annihilator_degree_n(degenerate);
    CHECK(big.size() == 9);
    for (const auto& g : big) CHECK(contract(g, degenerate.phi).is_zero());

    CHECK_THROWS_AS(annihilator_degree_n(generic_phi(2)), InputError);
}

TEST_CASE("b1 generates the annihilator") {
    const InverseSystem f2 = fixture_system(example_fixtures()[2]);
    const ResolutionComplex r2 = build_resolution(f2);
    CHECK(check_b1_annihilates(r2, f2).pass);

    // the 54 x^3 combination
    const InverseSystem f3 = fixture_system(example_fixtures()[3]);
    const ResolutionComplex r3 = build_resolution(f3);
    const Polynomial combo =
        r3.b1.at(0, 0) + r3.b1.at(0, 1) * Rational(2) + r3.b1.at(0, 2);
    CHECK(combo == Polynomial::parse(r3.ring(), "54*x^3"));
    CHECK(contract(combo, f3.phi).is_zero());

    // corrupting one entry must fail with a witness
    ResolutionComplex bad = r2;
    bad.b1.at(0, 0) += Polynomial::parse(r2.ring(), "x*y^2");
    const CheckResult res = check_b1_annihilates(bad, f2);
    CHECK(!res.pass);
    CHECK(!res.witness.empty());
}

TEST_CASE("pfaffian base cases and consistency") {
    const RingDesc g = RingDesc::generic(2);
    const auto tv = [&](int i) {
        return Polynomial::tvar(g, g.tvar_monomials()[std::size_t(i)]);
    };
    const PolyMatrix two = alternating_from(g, {tv(0)}, 2);
    CHECK(pfaffian(two) == tv(0));

    // 4x4 with symbolic entries a..f
    const PolyMatrix four =
        alternating_from(g, {tv(0), tv(1), tv(2), tv(3), tv(4), tv(5)}, 4);
    CHECK(pfaffian(four) == tv(0) * tv(5) - tv(1) * tv(4) + tv(2) * tv(3));
    CHECK(pfaffian(four) * pfaffian(four) == determinant_cofactor(four));

    Rng rng(73);
    const RingDesc q = RingDesc::rationals();
    for (std::size_t size : {4u, 6u}) {
        std::vector<Polynomial> upper;
        for (std::size_t k = 0; k < size * (size - 1) / 2; ++k) {
            upper.push_back(Polynomial::constant(q, rng.integer(9)));
        }
        const PolyMatrix m = alternating_from(q, upper, size);
        CHECK(pfaffian(m) * pfaffian(m) == determinant_bareiss(m));
    }
}

TEST_CASE("pfaffian input validation") {
    const RingDesc q = RingDesc::rationals();
    PolyMatrix m(q, std::vector<Label>(3), std::vector<Label>(3));
    CHECK_THROWS_AS(pfaffian(m, {0, 1, 2}), InputError); // odd
    m.at(0, 1) = Polynomial::constant(q, 1);             // not alternating
    CHECK_THROWS_AS(pfaffian(m, {0, 1}), InputError);
}

TEST_CASE("maximal-order pfaffians land in the generator span") {
    const InverseSystem f2 = fixture_system(example_fixtures()[2]);
    const ResolutionComplex r2 = build_resolution(f2);
    const Polynomial pf0 = pfaffian(r2.b2, {1, 2, 3, 4, 5, 6});
    CHECK(*pf0.xyz_degree() == 3);
    // rank of the b1 row space must not grow when pf0 joins
    std::vector<Polynomial> gens;
    for (std::size_t j = 0; j < r2.b1.cols(); ++j) gens.push_back(r2.b1.at(0, j));
    const auto basis = monomial_basis(VarSet::xyz, 3);
    QMatrix rows;
    for (const auto& gpoly : gens) {
        std::vector<Rational> row;
        for (const auto& m : basis) row.push_back(gpoly.coefficient(m));
        rows.push_back(row);
    }
    const int rank_before = rational_rank(rows);
    std::vector<Rational> row;
    for (const auto& m : basis) row.push_back(pf0.coefficient(m));
    rows.push_back(row);
    CHECK(rational_rank(rows) == rank_before);

    CHECK(check_pfaffian_span(r2).pass);
    CHECK(check_pfaffian_span(build_resolution(fixture_system(example_fixtures()[0]))).pass);
    CHECK(check_pfaffian_span(build_resolution(random_phi(2, 77))).pass);
}

TEST_CASE("colon ideal checks") {
    for (int n : {2, 3}) {
        const VerificationReport rep = check_colon_ideal(n);
        INFO(report_to_text(rep, false));
        CHECK(rep.all_pass());
    }
    // membership sample: 54 y^3 (x+y+z)^2 sits inside (x^3, y^3, z^3)
    const RingDesc q = RingDesc::rationals();
    const Polynomial y3 = Polynomial::parse(q, "54*y^3");
    const Polynomial shift = poly_pow(Polynomial::parse(q, "x + y + z"), 2);
    CHECK(in_power_ideal(y3 * shift, 3));
    CHECK(!in_power_ideal(Polynomial::parse(q, "x^2*y^2"), 3));
}

TEST_CASE("full report on the built-in systems") {
    const VerificationReport rep = full_report(fixture_system(example_fixtures()[1]));
    INFO(report_to_text(rep, false));
    CHECK(rep.all_pass());
    CHECK(rep.checks.size() == 10);
}

TEST_CASE("full report in generic mode skips the span checks") {
    const VerificationReport rep = full_report(generic_phi(2));
    CHECK(rep.all_pass());
    for (const auto& c : rep.checks) {
        CHECK(c.name != "annihilator-span");
        CHECK(c.name != "pfaffian-span");
    }
}

TEST_CASE("degenerate input is reported, not crashed") {
    const VerificationReport rep = full_report(build_phi(2, {}));
    CHECK(!rep.all_pass());
    REQUIRE(rep.checks.size() == 1);
    CHECK(rep.checks[0].name == "delta-nonzero");
    CHECK(!rep.checks[0].witness.empty());
}

TEST_CASE("report serialization") {
    const VerificationReport rep = full_report(fixture_system(example_fixtures()[2]));
    const auto j = report_to_json(rep, false);
    CHECK(j["pass"] == true);
    CHECK(j["checks"].is_array());
    CHECK(report_to_text(rep, false).find("all checks passed") != std::string::npos);
}

} // TEST_SUITE

