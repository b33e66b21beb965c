#include <doctest.h>

#include "gorlin/fixtures.hpp"
#include "gorlin/verify.hpp"
#include "test_util.hpp"

using namespace gorlin;
using testutil::Rng;

namespace {

PolyMatrix random_int_matrix(Rng& rng, const RingDesc& ring, std::size_t size) {
    PolyMatrix m(ring, std::vector<Label>(size), std::vector<Label>(size));
    for (std::size_t i = 0; i < size; ++i)
        for (std::size_t j = 0; j < size; ++j)
            m.at(i, j) = Polynomial::constant(ring, rng.integer(20));
    return m;
}

} // namespace

TEST_SUITE("catalecticant") {

TEST_CASE("cat_matrix entries") {
    const InverseSystem f0 = fixture_system(example_fixtures()[0]);
    const PolyMatrix t0 = cat_matrix(f0);
    const long row4[6] = {1, 0, 0, 2, 0, 0};
    for (std::size_t j = 0; j < 6; ++j) {
        CHECK(t0.at(3, j).constant_value() == row4[j]);
    }
    CHECK(t0.is_symmetric());

    const InverseSystem f3 = fixture_system(example_fixtures()[3]);
    const PolyMatrix t3 = cat_matrix(f3);
    const long row1[6] = {0, 0, 0, 1, 2, 1};
    for (std::size_t j = 0; j < 6; ++j) {
        CHECK(t3.at(0, j).constant_value() == row1[j]);
    }

    const PolyMatrix tg = cat_matrix(generic_phi(2));
    CHECK(tg.at(0, 1) == Polynomial::tvar(tg.ring(), Monomial(1, 1, 0)));
    CHECK(tg.is_symmetric());
}

TEST_CASE("determinant fixtures and guards") {
    CHECK(determinant(cat_matrix(fixture_system(example_fixtures()[0])))
              .constant_value() == -1);
    CHECK(determinant(cat_matrix(fixture_system(example_fixtures()[3])))
              .constant_value() == 54);

    const RingDesc q = RingDesc::rationals();
    PolyMatrix id(q, std::vector<Label>(6), std::vector<Label>(6));
    for (std::size_t i = 0; i < 6; ++i) id.at(i, i) = Polynomial::constant(q, 1);
    CHECK(determinant(id).constant_value() == 1);

    PolyMatrix rect(q, std::vector<Label>(2), std::vector<Label>(3));
    CHECK_THROWS_AS(determinant(rect), ShapeError);

    CHECK_THROWS_AS(determinant(cat_matrix(generic_phi(4))), CapacityError);
}

TEST_CASE("adjoint fixtures") {
    const Catalecticant c0 = catalecticant(fixture_system(example_fixtures()[0]));
    CHECK(c0.Q.at(0, 0).constant_value() == -2);
    CHECK(c0.Q.at(0, 3).constant_value() == 1);

    const Catalecticant c3 = catalecticant(fixture_system(example_fixtures()[3]));
    CHECK(c3.Q.at(0, 0).constant_value() == 27);

    const RingDesc q = RingDesc::rationals();
    PolyMatrix id(q, std::vector<Label>(6), std::vector<Label>(6));
    for (std::size_t i = 0; i < 6; ++i) id.at(i, i) = Polynomial::constant(q, 1);
    CHECK(adjoint(id) == id);
}

TEST_CASE("T Q = Q T = delta I") {
    auto check_tq = [](const Catalecticant& cat) {
        const std::size_t size = cat.T.rows();
        const PolyMatrix tq = cat.T * cat.Q;
        const PolyMatrix qt = cat.Q * cat.T;
        for (std::size_t i = 0; i < size; ++i) {
            for (std::size_t j = 0; j < size; ++j) {
                const Polynomial want =
                    i == j ? cat.delta : Polynomial::zero(cat.ring());
                CHECK(tq.at(i, j) == want);
                CHECK(qt.at(i, j) == want);
            }
        }
        CHECK(cat.T.is_symmetric());
        CHECK(cat.Q.is_symmetric());
    };
    for (const auto& fx : example_fixtures()) check_tq(catalecticant(fixture_system(fx)));
    check_tq(catalecticant(generic_phi(2)));
    check_tq(catalecticant(random_phi(2, 5)));
    check_tq(catalecticant(random_phi(3, 6)));
}

TEST_CASE("degenerate systems still get determinant and adjoint") {
    const InverseSystem f = build_phi(2, {{Monomial(2, 0, 0), Rational(1)}});
    const Catalecticant cat = catalecticant(f);
    CHECK(cat.delta.is_zero());
    const PolyMatrix tq = cat.T * cat.Q;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) CHECK(tq.at(i, j).is_zero());
}

TEST_CASE("lambda forms") {
    const Catalecticant c0 = catalecticant(fixture_system(example_fixtures()[0]));
    const RingDesc q = c0.ring();
    CHECK(c0.lambda.at(Monomial(2, 0, 0)) == Polynomial::parse(q, "-2*x^2 + y^2"));
    CHECK(c0.lambda.at(Monomial(0, 1, 1)) == Polynomial::parse(q, "x*z"));

    // identity catalecticant: lambda_m = m
    const InverseSystem f = build_phi(2, {{Monomial(2, 0, 0), Rational(1)},
                                          {Monomial(0, 2, 0), Rational(1)},
                                          {Monomial(0, 0, 2), Rational(1)}});
    const Catalecticant cid = catalecticant(f);
    for (const auto& m : monomial_basis(VarSet::xyz, 1)) {
        CHECK(cid.lambda.at(m) == Polynomial::monomial(cid.ring(), m));
    }
}

TEST_CASE("q_apply") {
    const Catalecticant c0 = catalecticant(fixture_system(example_fixtures()[0]));
    DividedElement y2(c0.ring(), 2);
    y2.add(Monomial(0, 2, 0), Rational(1));
    // column y^2 of Q assembled against the degree-2 basis
    CHECK(q_apply(c0, y2) == Polynomial::parse(c0.ring(), "x^2 - y^2"));

    CHECK(q_apply(c0, DividedElement(c0.ring(), 2)).is_zero());
    CHECK_THROWS_AS(q_apply(c0, DividedElement(c0.ring(), 1)), DegreeError);

    Rng rng(51);
    for (int rep = 0; rep < 10; ++rep) {
        const InverseSystem f = random_phi(2, 100 + std::uint64_t(rep));
        const Catalecticant cat = catalecticant(f);
        const Polynomial mu = rng.form(f.phi.ring(), 1);
        CHECK(q_apply(cat, contract(mu, f.phi)) == cat.delta * mu);
    }
}

TEST_CASE("pairing form") {
    const Catalecticant c0 = catalecticant(fixture_system(example_fixtures()[0]));
    DividedElement a(c0.ring(), 2), b(c0.ring(), 2);
    a.add(Monomial(0, 2, 0), Rational(1));
    b.add(Monomial(2, 0, 0), Rational(1));
    CHECK(qq_pair(c0, a, b).constant_value() == 1); // Q at (x^2, y^2)

    Rng rng(53);
    for (int rep = 0; rep < 10; ++rep) {
        const InverseSystem f = random_phi(2, 200 + std::uint64_t(rep));
        const Catalecticant cat = catalecticant(f);
        const RingDesc& ring = cat.ring();
        const DividedElement nu = rng.divided(ring, VarSet::xyz, 1);
        const DividedElement nu2 = rng.divided(ring, VarSet::xyz, 1);
        CHECK(qq_pair(cat, nu, nu2) == qq_pair(cat, nu2, nu));
        const Polynomial mu = rng.form(ring, 1);
        // pairing against p(mu) collapses to delta times the dual pairing
        const DividedElement pmu = contract(mu, f.phi);
        Polynomial dual = contract(mu, nu).as_scalar();
        CHECK(qq_pair(cat, pmu, nu) == cat.delta * dual);
    }
}

TEST_CASE("q and p are delta-inverses both ways") {
    for (int n : {2, 3}) {
        const InverseSystem f = random_phi(n, 300 + std::uint64_t(n));
        const Catalecticant cat = catalecticant(f);
        Rng rng(59);
        const DividedElement nu = rng.divided(cat.ring(), VarSet::xyz, n - 1, 4, false);
        // p(q(nu)) = delta nu
        CHECK(contract(q_apply(cat, nu), f.phi) == nu.scaled(cat.delta));
    }
    // generic mode
    const InverseSystem g = generic_phi(2);
    const Catalecticant cat = catalecticant(g);
    Rng rng(61);
    const Polynomial mu = rng.form(g.phi.ring(), 1);
    CHECK(q_apply(cat, contract(mu, g.phi)) == cat.delta * mu);
}

TEST_CASE("Bareiss and cofactor determinants agree") {
    const RingDesc q = RingDesc::rationals();
    Rng rng(67);
    for (int rep = 0; rep < 15; ++rep) {
        const std::size_t size = static_cast<std::size_t>(rng.uniform(4, 6));
        const PolyMatrix m = random_int_matrix(rng, q, size);
        CHECK(determinant_bareiss(m) == determinant_cofactor(m));
    }
}

TEST_CASE("random integer systems are rarely degenerate") {
    int nonzero = 0;
    for (int rep = 0; rep < 50; ++rep) {
        Rng rng(1000 + std::uint64_t(rep));
        std::vector<std::pair<Monomial, Rational>> coeffs;
        for (const auto& m : monomial_basis(VarSet::xyz, 2)) {
            coeffs.emplace_back(m, rng.integer(9));
        }
        const InverseSystem f = build_phi(2, coeffs);
        if (!determinant(cat_matrix(f)).is_zero()) ++nonzero;
    }
    CHECK(nonzero >= 45);
}

} // TEST_SUITE

