#pragma once

#include <map>
#include <string>
#include <vector>

#include "pdiv/convex.hpp"
#include "pdiv/curve.hpp"

namespace pdiv {

// Homogeneous element f * chi^m. On the quad-ring model f is a constant.
struct GradedElement {
    RatFunc f;
    VecI m;

    bool operator==(const GradedElement&) const = default;
};

// Polyhedral divisor: tail cone sigma in N_Q plus finitely many coefficients
// Delta_z with tail sigma; unlisted points implicitly carry sigma itself.
struct PolyhedralDivisor {
    Curve curve;
    Cone sigma;
    std::map<Point, TailedPolyhedron> coeffs;

    int rank() const { return sigma.rank(); }
    const TailedPolyhedron& coefficient(const Point& z) const;
    void set_coefficient(const Point& z, TailedPolyhedron p);

    bool operator==(const PolyhedralDivisor&) const = default;
};

// Principal polyhedral divisor: a group morphism M -> K0^* stored on the
// standard lattice basis and extended multiplicatively.
struct PrincipalPolyDivisor {
    std::vector<RatFunc> basis_values;

    RatFunc value(const VecI& m) const;
    QDivisor divisor(const VecI& m, const Curve& curve) const;
    bool operator==(const PrincipalPolyDivisor&) const = default;
};

// Equivariant-isomorphism witness (curve automorphism, lattice automorphism,
// principal twist).
struct IsoWitness {
    Mobius curve_auto;
    MatI lattice_auto;
    PrincipalPolyDivisor principal;
};

// Evaluation D(m) = sum_z min <m, Delta_z> . z for m in the dual of sigma.
QDivisor evaluate(const PolyhedralDivisor& D, const VecI& m);
QDivisor evaluate(const PolyhedralDivisor& D, const VecQ& m);

// Residue-degree weighted Minkowski sum of the coefficients (ProjLine).
TailedPolyhedron degree_polyhedron(const PolyhedralDivisor& D);

struct PropernessResult {
    bool proper = false;
    std::string reason;
};
PropernessResult is_proper(const PolyhedralDivisor& D);

// The divisor D[f] of a generator tuple: sigma is the dual of cone(m_i) and
// Delta_z = { <m_i, v> >= -ord_z f_i }. The m_i must generate the lattice.
PolyhedralDivisor from_generators(const Curve& curve, const std::vector<GradedElement>& gens);

// Rank-one D.P.D. divisor -min_i div(f_i)/m_i (all m_i > 0).
QDivisor dpd_divisor(const Curve& curve, const std::vector<GradedElement>& gens);

// Graded piece A_m = H^0(floor D(m)).
H0Module graded_piece(const PolyhedralDivisor& D, const VecI& m);

// Membership div f + floor D(m) >= 0 (false for weights outside sigma^vee).
bool contains(const PolyhedralDivisor& D, const GradedElement& g);

// Hilbert basis of the weight cone sigma^vee_M (sigma full-dimensional).
std::vector<VecI> weight_cone_hilbert_basis(const PolyhedralDivisor& D);

// Truncation functional l(m) = sum over rays u of sigma of <m, u>; positive
// on the weight cone minus the origin when sigma is full-dimensional.
Int weight_ell(const PolyhedralDivisor& D, const VecI& m);

// All weights m in sigma^vee_M with l(m) <= bound, sorted by (l, lex).
std::vector<VecI> weights_up_to(const PolyhedralDivisor& D, const Int& bound);

// Minimal homogeneous module generators of A[C, D] for weights with
// l(m) <= bound, in sieve order, together with the degree-zero ring
// generators. D must be proper. `jobs` parallelizes the per-weight module
// computation without changing the output order.
std::vector<GradedElement> algebra_generators(const PolyhedralDivisor& D, const Int& bound,
                                              int jobs = 1);

// Prop 4.5 witness verification: phi^* D(m) = D'(F m) + div F(m) on the
// Hilbert basis of the weight cone plus `samples` random deeper weights.
bool iso_witness_check(const PolyhedralDivisor& D, const PolyhedralDivisor& Dprime,
                       const IsoWitness& w, int samples = 20);

// deterministic sampler for "random deeper weights" used by the checks
std::vector<VecI> sample_weights(const std::vector<VecI>& hilbert, int count, unsigned seed);

}  // namespace pdiv
