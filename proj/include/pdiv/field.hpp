#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pdiv/rational.hpp"

namespace pdiv {

// Ground field: Q, or the quadratic extension Q(sqrt(d)) with d squarefree,
// d != 0, 1. The Dedekind-ring curve model additionally needs d < 0 and
// d = 2, 3 (mod 4); that restriction lives in the curve module.
struct GroundField {
    bool extended = false;
    Int d = 0;

    static GroundField rationals() { return GroundField{}; }
    static GroundField quadratic(const Int& d);

    bool operator==(const GroundField&) const = default;
};

// a + b*sqrt(d); b = 0 over the rationals.
struct FieldElem {
    GroundField field;
    Rat a, b;

    FieldElem() = default;
    FieldElem(GroundField f, Rat a_, Rat b_ = Rat(0));

    bool is_zero() const { return a == 0 && b == 0; }
    bool is_rational() const { return b == 0; }

    FieldElem operator+(const FieldElem& o) const;
    FieldElem operator-(const FieldElem& o) const;
    FieldElem operator*(const FieldElem& o) const;
    FieldElem operator/(const FieldElem& o) const;
    FieldElem operator-() const;
    bool operator==(const FieldElem& o) const { return a == o.a && b == o.b; }
    bool operator!=(const FieldElem& o) const { return !(*this == o); }

    FieldElem inverse() const;
    Rat norm() const { return a * a - Rat(field.d) * b * b; }
};

FieldElem conjugate(const FieldElem& x);

// Square root within the field, if one exists.
std::optional<FieldElem> sqrt_in_field(const FieldElem& x);

// Dense univariate polynomial over the ground field, ascending degree,
// no trailing zero coefficients. The zero polynomial has empty storage.
struct Poly {
    GroundField field;
    std::vector<FieldElem> c;

    Poly() = default;
    explicit Poly(GroundField f) : field(f) {}
    Poly(GroundField f, std::vector<FieldElem> coeffs);

    static Poly constant(GroundField f, const FieldElem& x);
    static Poly variable(GroundField f);  // t

    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }  // -1 for zero
    const FieldElem& leading() const { return c.back(); }
    FieldElem coeff(int i) const;
    bool is_monic() const;
    bool is_constant() const { return c.size() <= 1; }

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator-() const;
    bool operator==(const Poly& o) const { return c == o.c; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly scaled(const FieldElem& x) const;
    Poly monic() const;
    Poly derivative() const;
    FieldElem eval(const FieldElem& x) const;
    Poly pow(int e) const;
};

// Quotient and remainder; divisor must be nonzero.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
bool divides(const Poly& a, const Poly& b);  // a | b exactly
Poly gcd_poly(Poly a, Poly b);               // monic gcd
Poly conjugate(const Poly& p);

// Multiplicity of the monic irreducible q in p (repeated exact division).
int multiplicity(const Poly& p, const Poly& q);

// Irreducible factorization over the ground field: monic factors with
// multiplicities plus the unit (leading coefficient). Degree cap guards the
// Kronecker search. Over Q(sqrt(d)) relative splitting is supported in
// degree <= 2 only; a residual factor of higher degree raises
// unsupported-degree.
struct Factorization {
    FieldElem unit;
    std::vector<std::pair<Poly, int>> factors;
};
Factorization factor(const Poly& p, int degree_bound = 8);

bool is_irreducible(const Poly& p, int degree_bound = 8);

// Rational function num/den with monic denominator and gcd(num, den) = 1.
struct RatFunc {
    Poly num, den;

    RatFunc() = default;
    explicit RatFunc(Poly n);
    RatFunc(Poly n, Poly d);

    static RatFunc constant(GroundField f, const FieldElem& x);
    static RatFunc one(GroundField f);
    static RatFunc variable(GroundField f);

    GroundField field() const { return num.field; }
    bool is_zero() const { return num.is_zero(); }
    bool is_constant() const { return num.is_constant() && den.is_constant(); }
    FieldElem constant_value() const;

    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator/(const RatFunc& o) const;
    RatFunc operator-() const;
    bool operator==(const RatFunc& o) const { return num == o.num && den == o.den; }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    RatFunc inverse() const;
    RatFunc pow(long e) const;
};

RatFunc conjugate(const RatFunc& f);

// Text forms. `s` denotes sqrt(d), `t` the curve variable.
std::string to_string(const FieldElem& x);
std::string to_string(const Poly& p);
std::string to_string(const RatFunc& f);

// Parse an expression in Q(s)(t) built from integers, s, t, + - * / ^ and
// parentheses. The wrappers reject values of the wrong shape.
RatFunc parse_ratfunc(const std::string& text, const GroundField& f);
Poly parse_poly(const std::string& text, const GroundField& f);
FieldElem parse_field_elem(const std::string& text, const GroundField& f);

}  // namespace pdiv
