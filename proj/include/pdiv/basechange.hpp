#pragma once

#include "pdiv/polydiv.hpp"

namespace pdiv {

// Quadratic extension Q(sqrt(d))/Q used for extension of scalars.
struct QuadExtension {
    Int d;

    static QuadExtension make(const Int& d) {
        GroundField::quadratic(d);  // validates d
        return QuadExtension{d};
    }
};

// Points above z with ramification multiplicities. For line models over Q the
// fiber comes from factoring the defining polynomial over Q(sqrt(d)); for a
// rational prime the closed-form splitting rules of Z[sqrt(d)] apply.
std::vector<std::pair<Point, int>> split_point(const Point& z, const Curve& base,
                                               const QuadExtension& ext);
std::vector<std::pair<Point, int>> split_rational_prime_ext(const Int& p, const QuadExtension& ext);

Curve extended_curve(const Curve& base, const QuadExtension& ext);

// Scalar extension of functions and divisors along the inclusion.
RatFunc extend_scalars(const RatFunc& f, const GroundField& ext_field);
QDivisor pullback_qdivisor(const QDivisor& D, const QuadExtension& ext);

// p^* D: each coefficient copied to every point above its point.
PolyhedralDivisor pullback(const PolyhedralDivisor& D, const QuadExtension& ext);

// Prop 2.12 check: for every weight with l(m) <= bound the module generated
// over the extended ring by the downstairs graded piece equals the upstairs
// graded piece of the pullback.
bool verify_tensor_identity(const PolyhedralDivisor& D, const QuadExtension& ext, const Int& bound);

}  // namespace pdiv
