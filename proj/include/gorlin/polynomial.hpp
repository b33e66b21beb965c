/*
 * Copyright 2026 The gorlin authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef GORLIN_POLYNOMIAL_HPP
#define GORLIN_POLYNOMIAL_HPP

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gorlin/errors.hpp"
#include "gorlin/monomial.hpp"

namespace gorlin {

/// Exact scalar. Integers are rationals with denominator one; no floating
/// point is used anywhere in the library.
using Rational = mpq_class;

/// Parse a decimal integer or "p/q" string into a canonical rational.
Rational parse_rational(std::string_view text);

/// (d1, d2) where d1 weighs x, y, z and d2 weighs the t variables.
struct BiDegree {
    int d1 = 0;
    int d2 = 0;

    BiDegree operator+(const BiDegree& o) const { return {d1 + o.d1, d2 + o.d2}; }
    BiDegree operator-(const BiDegree& o) const { return {d1 - o.d1, d2 - o.d2}; }
    bool operator==(const BiDegree& o) const { return d1 == o.d1 && d2 == o.d2; }
    bool operator!=(const BiDegree& o) const { return !(*this == o); }
    std::string str() const;
};

/// Coefficient ring of a polynomial value.
///
/// rationals()  -> Q[x,y,z]
/// generic(n)   -> Z[x,y,z, t_m : m a monomial of degree 2n-2], where x,y,z
///                 have bidegree (1,0) and every t_m has bidegree (0,1).
class RingDesc {
public:
    RingDesc() = default;

    static RingDesc rationals();
    static RingDesc generic(int n); // throws InputError for n < 2, CapacityError past the key budget

    bool is_generic() const { return n_ != 0; }
    int n() const { return n_; }

    int tvar_count() const;
    /// The degree-(2n-2) index monomials, in listing order. Empty when specialized.
    const std::vector<Monomial>& tvar_monomials() const;
    /// Position of an index monomial; throws InputError if it is not one.
    int tvar_index(const Monomial& m) const;

    bool operator==(const RingDesc& o) const { return n_ == o.n_; }
    bool operator!=(const RingDesc& o) const { return !(*this == o); }

    std::string str() const;

private:
    explicit RingDesc(int n) : n_(n) {}
    int n_ = 0; // 0 = specialized Q[x,y,z]
};

/// Substitution of rational values for t variables, keyed by index monomial.
using TAssignment = std::map<Monomial, Rational>;

/// Sparse exact element of the bigraded ring described by a RingDesc.
///
/// Values are immutable in effect: every operation returns a fresh canonical
/// polynomial and no global state is touched, so instances may be shared
/// freely across threads.
class Polynomial {
public:
    /// Packed exponent vector: slot 0..2 hold x,y,z, slot 3+i holds t_i.
    static constexpr int kKeyBytes = 64;
    static constexpr int kMaxTVars = kKeyBytes - 3;

    struct Key {
        std::array<std::uint8_t, kKeyBytes> e{};
        int xyz_degree() const { return int(e[0]) + int(e[1]) + int(e[2]); }
        int t_degree() const;
        bool operator==(const Key& o) const { return e == o.e; }
    };

    struct Term {
        Key key;
        Rational coeff;
    };

    Polynomial() = default; // zero over Q[x,y,z]

    static Polynomial zero(const RingDesc& ring);
    static Polynomial constant(const RingDesc& ring, const Rational& value);
    static Polynomial monomial(const RingDesc& ring, const Monomial& m,
                               const Rational& coeff = Rational(1));
    /// The variable t_index (generic rings only).
    static Polynomial tvar(const RingDesc& ring, const Monomial& index);
    /// v must be 'x', 'y' or 'z'.
    static Polynomial variable(const RingDesc& ring, char v);

    const RingDesc& ring() const { return ring_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o);

    Polynomial operator*(const Rational& s) const;
    friend Polynomial operator*(const Rational& s, const Polynomial& p) { return p * s; }

    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    /// Bidegree when every term agrees, otherwise nullopt (not bihomogeneous).
    /// The zero polynomial reports (0,0).
    std::optional<BiDegree> bidegree() const;

    /// Degree in x,y,z alone when all terms agree, ignoring t weights.
    std::optional<int> xyz_degree() const;

    bool is_constant() const;
    /// Value of a constant polynomial (zero polynomial gives 0).
    Rational constant_value() const;

    /// Coefficient of the exact monomial m carrying no t factors.
    Rational coefficient(const Monomial& m) const;

    /// Group terms by their x,y,z part. Second components are t-only.
    std::vector<std::pair<Monomial, Polynomial>> split_xyz() const;

    /// Ring homomorphism fixing x,y,z and sending each t_m to assignment[m]
    /// (absent entries default to zero). Result lives in Q[x,y,z].
    Polynomial specialize(const TAssignment& assignment) const;

    /// Canonical text form, e.g. "2*x^3 - x*y^2 + t_{2_0_0}*z".
    std::string str() const;

    /// Inverse of str() for the given ring; accepts arbitrary whitespace.
    static Polynomial parse(const RingDesc& ring, std::string_view text);

    /// Exact sum of pairwise products, computed with a single accumulation
    /// pass. Used for matrix products where intermediate swell matters.
    class Accumulator;

private:
    friend class Accumulator;

    static void check_same_ring(const Polynomial& a, const Polynomial& b);
    static Key mul_keys(const Key& a, const Key& b);
    /// Sort into canonical order, merge duplicate keys, drop zeros.
    static void normalize(std::vector<Term>& terms);

    RingDesc ring_;
    std::vector<Term> terms_; // canonical order, no zero coefficients
};

class Polynomial::Accumulator {
public:
    explicit Accumulator(const RingDesc& ring);
    ~Accumulator();
    Accumulator(const Accumulator&) = delete;
    Accumulator& operator=(const Accumulator&) = delete;

    void add(const Polynomial& p);
    void add_product(const Polynomial& a, const Polynomial& b);
    /// Finish and return the accumulated polynomial; the accumulator resets.
    Polynomial take();

private:
    struct Impl;
    RingDesc ring_;
    std::unique_ptr<Impl> impl_;
};

} // namespace gorlin

#endif // GORLIN_POLYNOMIAL_HPP
