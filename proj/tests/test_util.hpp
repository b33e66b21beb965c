#ifndef GORLIN_TEST_UTIL_HPP
#define GORLIN_TEST_UTIL_HPP

#include <random>

#include "gorlin/divided.hpp"

namespace gorlin::testutil {

/// Deterministic generator for property-style tests.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    int uniform(int lo, int hi) {
        return std::uniform_int_distribution<int>(lo, hi)(eng_);
    }

    Rational rational(int num_bound = 9, int den_bound = 4) {
        Rational q(uniform(-num_bound, num_bound), uniform(1, den_bound));
        q.canonicalize();
        return q;
    }

    Rational integer(int bound = 9) { return Rational(uniform(-bound, bound)); }

    Monomial monomial(VarSet vars, int degree) {
        const auto basis = monomial_basis(vars, degree);
        return basis[static_cast<std::size_t>(uniform(0, int(basis.size()) - 1))];
    }

    /// Random polynomial with up to max_terms monomial/t-monomial terms.
    Polynomial polynomial(const RingDesc& ring, int max_terms, int max_xyz_deg,
                          int max_t_deg, bool rational_coeffs) {
        Polynomial out = Polynomial::zero(ring);
        const int terms = uniform(0, max_terms);
        for (int t = 0; t < terms; ++t) {
            const Rational c = rational_coeffs ? rational() : integer();
            Polynomial piece =
                Polynomial::monomial(ring, monomial(VarSet::xyz, uniform(0, max_xyz_deg)), c);
            if (ring.is_generic()) {
                const int td = uniform(0, max_t_deg);
                for (int k = 0; k < td; ++k) {
                    piece *= Polynomial::tvar(
                        ring, ring.tvar_monomials()[static_cast<std::size_t>(
                                  uniform(0, ring.tvar_count() - 1))]);
                }
            }
            out += piece;
        }
        return out;
    }

    /// Random x,y,z-homogeneous form of the exact degree (never zero).
    Polynomial form(const RingDesc& ring, int degree, int max_terms = 4) {
        Polynomial out = Polynomial::zero(ring);
        while (out.is_zero()) {
            const int terms = uniform(1, max_terms);
            for (int t = 0; t < terms; ++t) {
                out += Polynomial::monomial(ring, monomial(VarSet::xyz, degree), integer());
            }
        }
        return out;
    }

    DividedElement divided(const RingDesc& ring, VarSet vars, int degree,
                           int max_terms = 4, bool allow_zero = true) {
        DividedElement out(ring, degree);
        do {
            const int terms = uniform(allow_zero ? 0 : 1, max_terms);
            for (int t = 0; t < terms; ++t) {
                out.add(monomial(vars, degree), Polynomial::constant(ring, integer()));
            }
        } while (!allow_zero && out.is_zero());
        return out;
    }

    TAssignment assignment(const RingDesc& ring, bool rational_values = true) {
        TAssignment out;
        for (const auto& m : ring.tvar_monomials()) {
            if (uniform(0, 4) == 0) continue; // leave some unassigned
            out[m] = rational_values ? rational() : integer();
        }
        return out;
    }

private:
    std::mt19937_64 eng_;
};

} // namespace gorlin::testutil

#endif // GORLIN_TEST_UTIL_HPP
