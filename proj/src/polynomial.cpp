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

#include "gorlin/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <cstring>
#include <functional>
#include <mutex>
#include <unordered_map>

namespace gorlin {

namespace {

bool den_is_one(const Rational& q) {
    return mpz_cmp_ui(mpq_denref(q.get_mpq_t()), 1) == 0;
}

/// acc += a*b without a temporary when everything is integral.
void add_mul(Rational& acc, const Rational& a, const Rational& b) {
    if (den_is_one(acc) && den_is_one(a) && den_is_one(b)) {
        mpz_addmul(mpq_numref(acc.get_mpq_t()), mpq_numref(a.get_mpq_t()),
                   mpq_numref(b.get_mpq_t()));
    } else {
        acc += a * b;
    }
}

/// Canonical term order: higher x,y,z degree first, then bytewise
/// descending over the packed exponents (x,y,z slots, then t slots).
bool term_before(const Polynomial::Key& a, const Polynomial::Key& b) {
    const int da = a.xyz_degree();
    const int db = b.xyz_degree();
    if (da != db) return da > db;
    return std::memcmp(a.e.data(), b.e.data(), Polynomial::kKeyBytes) > 0;
}

struct KeyHash {
    std::size_t operator()(const Polynomial::Key& k) const {
        return std::hash<std::string_view>{}(std::string_view(
            reinterpret_cast<const char*>(k.e.data()), Polynomial::kKeyBytes));
    }
};

} // namespace

std::string BiDegree::str() const {
    return "(" + std::to_string(d1) + "," + std::to_string(d2) + ")";
}

Rational parse_rational(std::string_view text) {
    std::size_t lo = 0, hi = text.size();
    while (lo < hi && std::isspace(static_cast<unsigned char>(text[lo]))) ++lo;
    while (hi > lo && std::isspace(static_cast<unsigned char>(text[hi - 1]))) --hi;
    const std::string s(text.substr(lo, hi - lo));
    if (s.empty()) throw InputError("empty rational literal");
    Rational q;
    if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0) {
        throw InputError("malformed rational literal '" + s + "'");
    }
    if (mpz_sgn(mpq_denref(q.get_mpq_t())) == 0) {
        throw InputError("zero denominator in rational literal '" + s + "'");
    }
    q.canonicalize();
    return q;
}

// --------------------------------------------------------------------------
// RingDesc

RingDesc RingDesc::rationals() { return RingDesc(0); }

RingDesc RingDesc::generic(int n) {
    if (n < 2) throw InputError("generic ring needs n >= 2");
    const int count = (2 * n) * (2 * n - 1) / 2; // monomials of degree 2n-2
    if (count > Polynomial::kMaxTVars) {
        throw CapacityError("generic ring for n = " + std::to_string(n) +
                            " needs " + std::to_string(count) +
                            " t variables; the packed-key budget is " +
                            std::to_string(Polynomial::kMaxTVars));
    }
    return RingDesc(n);
}

int RingDesc::tvar_count() const {
    return n_ == 0 ? 0 : (2 * n_) * (2 * n_ - 1) / 2;
}

const std::vector<Monomial>& RingDesc::tvar_monomials() const {
    static const std::vector<Monomial> empty;
    if (n_ == 0) return empty;
    static std::mutex mu;
    static std::map<int, std::vector<Monomial>> cache;
    std::scoped_lock lock(mu);
    auto it = cache.find(n_);
    if (it == cache.end()) {
        it = cache.emplace(n_, monomial_basis(VarSet::xyz, 2 * n_ - 2)).first;
    }
    return it->second;
}

int RingDesc::tvar_index(const Monomial& m) const {
    if (n_ == 0) throw InputError("no t variables in Q[x,y,z]");
    const auto& basis = tvar_monomials();
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (basis[i] == m) return static_cast<int>(i);
    }
    throw InputError("t index " + m.str() + " does not have degree " +
                     std::to_string(2 * n_ - 2));
}

std::string RingDesc::str() const {
    if (n_ == 0) return "Q[x,y,z]";
    return "Z[x,y,z,{t_m}] with n = " + std::to_string(n_);
}

// --------------------------------------------------------------------------
// Polynomial

int Polynomial::Key::t_degree() const {
    int s = 0;
    for (int i = 3; i < kKeyBytes; ++i) s += e[i];
    return s;
}

void Polynomial::check_same_ring(const Polynomial& a, const Polynomial& b) {
    if (a.ring_ != b.ring_) {
        throw InputError("ring mismatch: " + a.ring_.str() + " vs " + b.ring_.str());
    }
}

Polynomial::Key Polynomial::mul_keys(const Key& a, const Key& b) {
    Key out;
    for (int i = 0; i < kKeyBytes; ++i) {
        const int s = int(a.e[i]) + int(b.e[i]);
        if (s > 255) throw CapacityError("exponent overflow in term product");
        out.e[i] = static_cast<std::uint8_t>(s);
    }
    return out;
}

void Polynomial::normalize(std::vector<Term>& terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return term_before(a.key, b.key); });
    std::size_t out = 0;
    for (std::size_t i = 0; i < terms.size();) {
        Key key = terms[i].key;
        Rational c = std::move(terms[i].coeff);
        std::size_t j = i + 1;
        while (j < terms.size() && terms[j].key == key) {
            c += terms[j].coeff;
            ++j;
        }
        if (c != 0) {
            terms[out].key = key;
            terms[out].coeff = std::move(c);
            ++out;
        }
        i = j;
    }
    terms.resize(out);
}

Polynomial Polynomial::zero(const RingDesc& ring) {
    Polynomial p;
    p.ring_ = ring;
    return p;
}

Polynomial Polynomial::constant(const RingDesc& ring, const Rational& value) {
    Polynomial p = zero(ring);
    if (value != 0) p.terms_.push_back(Term{Key{}, value});
    return p;
}

Polynomial Polynomial::monomial(const RingDesc& ring, const Monomial& m,
                                const Rational& coeff) {
    if (m.a > 255 || m.b > 255 || m.c > 255) {
        throw CapacityError("monomial exponent exceeds the packed-key budget");
    }
    Polynomial p = zero(ring);
    if (coeff == 0) return p;
    Term t;
    t.key.e[0] = static_cast<std::uint8_t>(m.a);
    t.key.e[1] = static_cast<std::uint8_t>(m.b);
    t.key.e[2] = static_cast<std::uint8_t>(m.c);
    t.coeff = coeff;
    p.terms_.push_back(std::move(t));
    return p;
}

Polynomial Polynomial::tvar(const RingDesc& ring, const Monomial& index) {
    const int i = ring.tvar_index(index);
    Polynomial p = zero(ring);
    Term t;
    t.key.e[3 + i] = 1;
    t.coeff = 1;
    p.terms_.push_back(std::move(t));
    return p;
}

Polynomial Polynomial::variable(const RingDesc& ring, char v) {
    switch (v) {
        case 'x': return monomial(ring, kX);
        case 'y': return monomial(ring, kY);
        case 'z': return monomial(ring, kZ);
        default: throw InputError(std::string("unknown variable '") + v + "'");
    }
}

Polynomial Polynomial::operator-() const {
    Polynomial out = *this;
    for (auto& t : out.terms_) t.coeff = -t.coeff;
    return out;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    check_same_ring(*this, o);
    Polynomial out = zero(ring_);
    out.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        if (terms_[i].key == o.terms_[j].key) {
            Rational c = terms_[i].coeff + o.terms_[j].coeff;
            if (c != 0) out.terms_.push_back(Term{terms_[i].key, std::move(c)});
            ++i, ++j;
        } else if (term_before(terms_[i].key, o.terms_[j].key)) {
            out.terms_.push_back(terms_[i++]);
        } else {
            out.terms_.push_back(o.terms_[j++]);
        }
    }
    for (; i < terms_.size(); ++i) out.terms_.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j) out.terms_.push_back(o.terms_[j]);
    return out;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    *this = *this + o;
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    *this = *this - o;
    return *this;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    check_same_ring(*this, o);
    Accumulator acc(ring_);
    acc.add_product(*this, o);
    return acc.take();
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
    *this = *this * o;
    return *this;
}

Polynomial Polynomial::operator*(const Rational& s) const {
    if (s == 0) return zero(ring_);
    Polynomial out = *this;
    for (auto& t : out.terms_) t.coeff *= s;
    return out;
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (ring_ != o.ring_ || terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (!(terms_[i].key == o.terms_[i].key) || terms_[i].coeff != o.terms_[i].coeff)
            return false;
    }
    return true;
}

std::optional<BiDegree> Polynomial::bidegree() const {
    if (terms_.empty()) return BiDegree{0, 0};
    const BiDegree d{terms_[0].key.xyz_degree(), terms_[0].key.t_degree()};
    for (const auto& t : terms_) {
        if (t.key.xyz_degree() != d.d1 || t.key.t_degree() != d.d2) return std::nullopt;
    }
    return d;
}

std::optional<int> Polynomial::xyz_degree() const {
    if (terms_.empty()) return 0;
    const int d = terms_[0].key.xyz_degree();
    for (const auto& t : terms_) {
        if (t.key.xyz_degree() != d) return std::nullopt;
    }
    return d;
}

bool Polynomial::is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 && terms_[0].key == Key{});
}

Rational Polynomial::constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (!is_constant()) throw InputError("polynomial is not constant: " + str());
    return terms_[0].coeff;
}

Rational Polynomial::coefficient(const Monomial& m) const {
    Key want;
    want.e[0] = static_cast<std::uint8_t>(m.a);
    want.e[1] = static_cast<std::uint8_t>(m.b);
    want.e[2] = static_cast<std::uint8_t>(m.c);
    for (const auto& t : terms_) {
        if (t.key == want) return t.coeff;
    }
    return Rational(0);
}

std::vector<std::pair<Monomial, Polynomial>> Polynomial::split_xyz() const {
    // Terms with equal x,y,z slots are adjacent in canonical order.
    std::vector<std::pair<Monomial, Polynomial>> out;
    std::size_t i = 0;
    while (i < terms_.size()) {
        const auto& k = terms_[i].key;
        const Monomial m(k.e[0], k.e[1], k.e[2]);
        Polynomial cof = zero(ring_);
        std::size_t j = i;
        while (j < terms_.size() && terms_[j].key.e[0] == k.e[0] &&
               terms_[j].key.e[1] == k.e[1] && terms_[j].key.e[2] == k.e[2]) {
            Term t = terms_[j];
            t.key.e[0] = t.key.e[1] = t.key.e[2] = 0;
            cof.terms_.push_back(std::move(t));
            ++j;
        }
        normalize(cof.terms_);
        out.emplace_back(m, std::move(cof));
        i = j;
    }
    return out;
}

Polynomial Polynomial::specialize(const TAssignment& assignment) const {
    const RingDesc target = RingDesc::rationals();
    if (!ring_.is_generic()) {
        Polynomial out = *this;
        out.ring_ = target;
        return out;
    }
    const auto& tmons = ring_.tvar_monomials();
    for (const auto& [m, v] : assignment) {
        (void)v;
        (void)ring_.tvar_index(m); // validates the index monomial
    }
    std::vector<Term> terms;
    terms.reserve(terms_.size());
    for (const auto& t : terms_) {
        Rational c = t.coeff;
        bool dead = false;
        for (int i = 0; i < ring_.tvar_count() && !dead; ++i) {
            const int e = t.key.e[3 + i];
            if (e == 0) continue;
            auto it = assignment.find(tmons[static_cast<std::size_t>(i)]);
            if (it == assignment.end() || it->second == 0) {
                dead = true;
                break;
            }
            for (int k = 0; k < e; ++k) c *= it->second;
        }
        if (dead) continue;
        Term nt;
        nt.key.e[0] = t.key.e[0];
        nt.key.e[1] = t.key.e[1];
        nt.key.e[2] = t.key.e[2];
        nt.coeff = std::move(c);
        terms.push_back(std::move(nt));
    }
    Polynomial out = zero(target);
    out.terms_ = std::move(terms);
    normalize(out.terms_);
    return out;
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    const auto& tmons = ring_.tvar_monomials();
    std::string out;
    bool first = true;
    for (const auto& t : terms_) {
        const bool neg = t.coeff < 0;
        if (first) {
            if (neg) out += '-';
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        const Rational mag = neg ? Rational(-t.coeff) : t.coeff;
        std::string factors;
        auto put_var = [&factors](const char* name, int e) {
            if (e == 0) return;
            if (!factors.empty()) factors += '*';
            factors += name;
            if (e > 1) factors += '^' + std::to_string(e);
        };
        put_var("x", t.key.e[0]);
        put_var("y", t.key.e[1]);
        put_var("z", t.key.e[2]);
        for (int i = 3; i < kKeyBytes; ++i) {
            if (t.key.e[i] == 0) continue;
            const Monomial& m = tmons[static_cast<std::size_t>(i - 3)];
            const std::string name = "t_{" + std::to_string(m.a) + "_" +
                                     std::to_string(m.b) + "_" + std::to_string(m.c) + "}";
            put_var(name.c_str(), t.key.e[i]);
        }
        if (factors.empty()) {
            out += mag.get_str();
        } else if (mag == 1) {
            out += factors;
        } else {
            out += mag.get_str() + "*" + factors;
        }
    }
    return out;
}

// --------------------------------------------------------------------------
// Parser

namespace {

class PolyParser {
public:
    PolyParser(const RingDesc& ring, std::string_view s) : ring_(ring), s_(s) {}

    Polynomial run() {
        Polynomial out = Polynomial::zero(ring_);
        skip_ws();
        if (eof()) throw InputError("empty polynomial text");
        int sign = 1;
        if (peek() == '+' || peek() == '-') {
            sign = peek() == '-' ? -1 : 1;
            ++i_;
        }
        while (true) {
            out += parse_term(sign);
            skip_ws();
            if (eof()) break;
            const char c = peek();
            if (c != '+' && c != '-') {
                throw InputError("expected '+' or '-' at offset " + std::to_string(i_) +
                                 " in polynomial text");
            }
            sign = c == '-' ? -1 : 1;
            ++i_;
        }
        return out;
    }

private:
    bool eof() const { return i_ >= s_.size(); }
    char peek() const { return s_[i_]; }
    void skip_ws() {
        while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) ++i_;
    }

    long parse_uint() {
        skip_ws();
        if (eof() || !std::isdigit(static_cast<unsigned char>(peek()))) {
            throw InputError("expected a number at offset " + std::to_string(i_));
        }
        long v = 0;
        while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + (peek() - '0');
            if (v > 1'000'000'000L) throw InputError("exponent out of range");
            ++i_;
        }
        return v;
    }

    int parse_exponent() {
        skip_ws();
        if (!eof() && peek() == '^') {
            ++i_;
            return static_cast<int>(parse_uint());
        }
        return 1;
    }

    void expect(char c) {
        skip_ws();
        if (eof() || peek() != c) {
            throw InputError(std::string("expected '") + c + "' at offset " +
                             std::to_string(i_));
        }
        ++i_;
    }

    Polynomial parse_term(int sign) {
        Rational coeff(sign);
        Monomial xyz;
        Polynomial tpart = Polynomial::constant(ring_, Rational(1));
        bool any = false;
        while (true) {
            skip_ws();
            if (eof()) break;
            const char c = peek();
            if (std::isdigit(static_cast<unsigned char>(c))) {
                std::size_t start = i_;
                while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) ++i_;
                if (!eof() && peek() == '/') {
                    ++i_;
                    while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) ++i_;
                }
                coeff *= parse_rational(s_.substr(start, i_ - start));
            } else if (c == 'x' || c == 'y' || c == 'z') {
                ++i_;
                const int e = parse_exponent();
                if (c == 'x') xyz.a += e;
                if (c == 'y') xyz.b += e;
                if (c == 'z') xyz.c += e;
            } else if (c == 't') {
                ++i_;
                expect('_');
                expect('{');
                const int a = static_cast<int>(parse_uint());
                expect('_');
                const int b = static_cast<int>(parse_uint());
                expect('_');
                const int cc = static_cast<int>(parse_uint());
                expect('}');
                const Polynomial tv = Polynomial::tvar(ring_, Monomial(a, b, cc));
                for (int e = parse_exponent(); e > 0; --e) tpart *= tv;
            } else {
                throw InputError(std::string("unexpected character '") + c +
                                 "' at offset " + std::to_string(i_));
            }
            any = true;
            skip_ws();
            if (!eof() && peek() == '*') {
                ++i_;
                continue;
            }
            break;
        }
        if (!any) throw InputError("empty term in polynomial text");
        return Polynomial::monomial(ring_, xyz, coeff) * tpart;
    }

    RingDesc ring_;
    std::string_view s_;
    std::size_t i_ = 0;
};

} // namespace

Polynomial Polynomial::parse(const RingDesc& ring, std::string_view text) {
    return PolyParser(ring, text).run();
}

// --------------------------------------------------------------------------
// Accumulator

struct Polynomial::Accumulator::Impl {
    std::unordered_map<Key, Rational, KeyHash> acc;
};

Polynomial::Accumulator::Accumulator(const RingDesc& ring)
    : ring_(ring), impl_(std::make_unique<Impl>()) {
    impl_->acc.max_load_factor(0.7f);
}

Polynomial::Accumulator::~Accumulator() = default;

void Polynomial::Accumulator::add(const Polynomial& p) {
    if (p.ring() != ring_) throw InputError("ring mismatch in accumulator");
    for (const auto& t : p.terms_) impl_->acc[t.key] += t.coeff;
}

void Polynomial::Accumulator::add_product(const Polynomial& a, const Polynomial& b) {
    if (a.ring() != ring_ || b.ring() != ring_) {
        throw InputError("ring mismatch in accumulator");
    }
    auto& acc = impl_->acc;
    for (const auto& ta : a.terms_) {
        for (const auto& tb : b.terms_) {
            add_mul(acc[mul_keys(ta.key, tb.key)], ta.coeff, tb.coeff);
        }
    }
}

Polynomial Polynomial::Accumulator::take() {
    Polynomial out = Polynomial::zero(ring_);
    out.terms_.reserve(impl_->acc.size());
    for (auto& [k, c] : impl_->acc) {
        if (c != 0) out.terms_.push_back(Term{k, std::move(c)});
    }
    impl_->acc.clear();
    normalize(out.terms_);
    return out;
}

} // namespace gorlin
