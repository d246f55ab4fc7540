#pragma once

#include "pdiv/basechange.hpp"
#include "pdiv/polydiv.hpp"

namespace pdiv {

// Order-2 Galois datum: the nontrivial element acts on the extended curve by
// coefficient conjugation and on the weight lattice by an integer involution
// preserving the weight cone.
struct GaloisData {
    QuadExtension ext{Int(-1)};
    MatI lattice_action;

    VecI act(const VecI& m) const { return mat_apply(lattice_action, m); }
};

// The 4-tuple (D, F, star, dot) with star = conjugation.
struct InvariantPolyDivisor {
    PolyhedralDivisor D;
    PrincipalPolyDivisor F;
    GaloisData galois;
};

// Semi-linear action determined by a torus element b:
// g . (f chi^m) = conj(f) f_g(m) chi^{g.m} with f_g(m) = b(g.m) conj(b(m))^{-1}.
struct SemiLinearAction {
    GaloisData galois;
    PrincipalPolyDivisor b;

    RatFunc cocycle(const VecI& m) const;
};

// Finite sum of homogeneous elements with pairwise distinct weights,
// sorted by weight. Invariant-ring generators live here: a free weight
// orbit contributes two-component sums.
struct AlgebraElement {
    std::vector<GradedElement> parts;

    static AlgebraElement of(GradedElement g);
    AlgebraElement operator+(const AlgebraElement& o) const;
    AlgebraElement operator*(const AlgebraElement& o) const;
    AlgebraElement scaled(const RatFunc& c) const;
    bool is_zero() const { return parts.empty(); }
    void normalize_sorted();

    bool operator==(const AlgebraElement&) const = default;
};

std::string to_string(const AlgebraElement& e);

// Structural validity of the Galois datum for the given divisor.
void validate_galois(const GaloisData& g, const PolyhedralDivisor& D);

// Def 5.8 compatibility: g*(D(m) + div F(m)) = D(g.m) + div F(g.m) on the
// Hilbert basis of the weight cone plus `samples` random deeper weights.
bool check_invariant(const InvariantPolyDivisor& ipd, int samples = 20);

SemiLinearAction cocycle_from_b(const GaloisData& galois, const PrincipalPolyDivisor& b);

// Action of the nontrivial group element.
GradedElement apply_semilinear(const SemiLinearAction& a, const GradedElement& x);
AlgebraElement apply_semilinear(const SemiLinearAction& a, const AlgebraElement& x);

// Generators of the fixed ring up to the weight-truncation bound, built from
// orbit traces and sieved against products of earlier output. The degree-zero
// invariant ring generator (t on the affine line) is included.
std::vector<AlgebraElement> invariant_generators(const InvariantPolyDivisor& ipd, const Int& bound);

// Speiser check: components of the emitted invariant generators span every
// graded piece with l(m) <= bound over the extended field.
bool speiser_span_check(const InvariantPolyDivisor& ipd, const std::vector<AlgebraElement>& gens,
                        const Int& bound);

// Def 5.12 conjugacy verification for witnesses (phi, F, E).
bool conjugacy_witness_check(const InvariantPolyDivisor& ipd, const InvariantPolyDivisor& ipd2,
                             const IsoWitness& witness, int samples = 10);

}  // namespace pdiv
