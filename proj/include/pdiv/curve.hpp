#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pdiv/field.hpp"
#include "pdiv/linalg.hpp"

namespace pdiv {

enum class CurveModel { AffineLine, ProjLine, QuadRingSpec };

// The three curve models: A^1 and P^1 over the ground field, and
// Spec Z[sqrt(d)] for d < 0 squarefree, d = 2, 3 (mod 4).
struct Curve {
    CurveModel model = CurveModel::AffineLine;
    GroundField field;

    static Curve affine_line(GroundField f) { return {CurveModel::AffineLine, f}; }
    static Curve proj_line(GroundField f) { return {CurveModel::ProjLine, f}; }
    static Curve quad_ring(const Int& d);

    bool is_line() const { return model != CurveModel::QuadRingSpec; }
    bool is_affine() const { return model != CurveModel::ProjLine; }

    bool operator==(const Curve&) const = default;
};

// Prime of Z[sqrt(d)] over the rational prime p, in the residue form
// sqrt(d) = r (mod P) for split/ramified primes; inert primes carry no r.
struct PrimeIdeal {
    Int p;
    bool inert = false;
    Int r = 0;  // 0 <= r < p, r^2 = d (mod p)

    bool ramified(const Int& d) const;
    bool operator==(const PrimeIdeal& o) const { return p == o.p && inert == o.inert && r == o.r; }
    bool operator<(const PrimeIdeal& o) const {
        if (p != o.p) return p < o.p;
        if (inert != o.inert) return !inert;
        return r < o.r;
    }
};

// Closed point of a curve model.
struct Point {
    enum class Kind { Finite, Infinity, Prime };
    Kind kind = Kind::Finite;
    Poly poly;        // monic irreducible, line models
    PrimeIdeal prime; // QuadRingSpec

    static Point finite(Poly monic_irreducible);
    static Point infinity(GroundField f);
    static Point ideal(PrimeIdeal p);

    bool operator==(const Point& o) const;
    bool operator<(const Point& o) const;
};

std::string to_string(const Point& z);
Point parse_point(const std::string& text, const Curve& curve);

// Finitely supported map point -> rational; zero coefficients never stored.
struct QDivisor {
    Curve curve;
    std::map<Point, Rat> coeffs;

    explicit QDivisor(Curve c = Curve{}) : curve(std::move(c)) {}

    void add(const Point& z, const Rat& a);
    Rat coeff(const Point& z) const;
    bool is_zero() const { return coeffs.empty(); }
    bool is_integral() const;
    bool is_effective() const;

    QDivisor operator+(const QDivisor& o) const;
    QDivisor operator-(const QDivisor& o) const;
    QDivisor operator*(const Rat& c) const;
    bool operator==(const QDivisor& o) const { return coeffs == o.coeffs; }
    bool operator<=(const QDivisor& o) const;
};

QDivisor floor_divisor(const QDivisor& D);

// Fractional ideal of Z[sqrt(d)]: numerator lattice in canonical Hermite
// basis {a, b + c*sqrt(d)} over a positive integer denominator.
struct FracIdeal {
    Int d;  // the ring parameter
    Int a = 1, b = 0, c = 1;
    Int den = 1;

    static FracIdeal one(const Int& d);
    static FracIdeal from_lattice(const Int& d, std::vector<std::pair<Int, Int>> gens, const Int& den);
    static FracIdeal principal(const FieldElem& x);
    static FracIdeal from_prime(const PrimeIdeal& p, const Int& d);

    FracIdeal mul(const FracIdeal& o) const;
    FracIdeal inverse() const;
    FracIdeal pow(long e) const;
    FracIdeal conj() const;
    FracIdeal add(const FracIdeal& o) const;  // lattice sum
    Rat norm() const;
    bool contains(const FieldElem& x) const;
    bool operator==(const FracIdeal&) const = default;

    // Canonical basis as field elements.
    FieldElem gen1(const GroundField& f) const;
    FieldElem gen2(const GroundField& f) const;
};

// Valuation of the fractional ideal at a prime (max k with I in P^k).
int ideal_valuation(const FracIdeal& I, const PrimeIdeal& P);

// Decompose a rational prime in Z[sqrt(d)]: list of (prime, ramification e).
std::vector<std::pair<PrimeIdeal, int>> split_rational_prime(const Int& p, const Int& d);

// Graded-piece module: generator list plus the representation backing it.
struct H0Module {
    Curve curve;
    std::vector<RatFunc> line_generators;   // line models (basis on ProjLine)
    std::vector<FieldElem> ring_generators; // QuadRingSpec
    std::optional<FracIdeal> ideal;         // QuadRingSpec

    bool is_zero() const;
};

int residue_degree(const Point& z);

// ord of a nonzero rational function at a line point.
int ord_at(const RatFunc& f, const Point& z);

// Principal divisor of a nonzero f (RatFunc on line models; constant with
// nonzero field value on QuadRingSpec).
QDivisor divisor_of(const RatFunc& f, const Curve& curve);
QDivisor divisor_of_elem(const FieldElem& x, const Curve& curve);

// Divisor of a fractional ideal (QuadRingSpec bookkeeping).
QDivisor ideal_divisor(const FracIdeal& I, const Curve& curve);

Rat divisor_degree(const QDivisor& D);

// H^0(O(floor D)) per model; see the module contracts.
H0Module h0(const QDivisor& D);

struct PrincipalityResult {
    bool principal = false;
    std::optional<RatFunc> witness_line;
    std::optional<FieldElem> witness_elem;
};
PrincipalityResult is_principal(const QDivisor& D);

// Fractional ideal attached to an integral divisor on QuadRingSpec:
// h0(D) = prod P^{-a_P}.
FracIdeal divisor_ideal(const QDivisor& D);

// Fractional-ideal membership for f against h0(D) on any model:
// div f + floor(D) >= 0.
bool h0_contains(const QDivisor& D, const RatFunc& f);

// Moebius transformation t -> (a t + b) / (c t + d) over the curve field.
struct Mobius {
    FieldElem a, b, c, d;

    static Mobius identity(const GroundField& f);
    bool is_identity() const;
    Mobius inverse() const;
    Mobius compose(const Mobius& o) const;  // this after o
    RatFunc substitute(const RatFunc& f) const;
    Mobius conjugated() const;  // coefficient-wise conjugation
    bool operator==(const Mobius&) const = default;
};

// Transport of points and divisors along an automorphism: pullback_point
// sends z to the point phi^{-1}(z) (so that pullback of div f is div(f o phi)),
// image_point is the forward map.
Point pullback_point(const Mobius& phi, const Point& z, const Curve& curve);
Point image_point(const Mobius& phi, const Point& z, const Curve& curve);
QDivisor pullback_divisor(const Mobius& phi, const QDivisor& D);

// Conjugation acting on points / divisors of a curve over Q(sqrt(d)).
Point conjugate_point(const Point& z);
QDivisor conjugate_divisor(const QDivisor& D);

}  // namespace pdiv
