#include "pdiv/basechange.hpp"

#include "pdiv/error.hpp"
#include "pdiv/modspan.hpp"

namespace pdiv {

Curve extended_curve(const Curve& base, const QuadExtension& ext) {
    if (!base.is_line() || base.field.extended)
        fail("unsupported", "base change extends line models over the rationals");
    Curve out = base;
    out.field = GroundField::quadratic(ext.d);
    return out;
}

RatFunc extend_scalars(const RatFunc& f, const GroundField& ext_field) {
    auto lift = [&](const Poly& p) {
        std::vector<FieldElem> cs;
        cs.reserve(p.c.size());
        for (const auto& x : p.c) cs.emplace_back(ext_field, x.a, x.b);
        return Poly(ext_field, std::move(cs));
    };
    return RatFunc(lift(f.num), lift(f.den));
}

std::vector<std::pair<Point, int>> split_rational_prime_ext(const Int& p, const QuadExtension& ext) {
    Curve::quad_ring(ext.d);  // validates the ring model
    std::vector<std::pair<Point, int>> out;
    for (const auto& [P, e] : split_rational_prime(p, ext.d)) out.emplace_back(Point::ideal(P), e);
    return out;
}

std::vector<std::pair<Point, int>> split_point(const Point& z, const Curve& base,
                                               const QuadExtension& ext) {
    if (!base.is_line() || base.field.extended)
        fail("unsupported", "split_point expects a line model over the rationals");
    Curve up = extended_curve(base, ext);
    if (z.kind == Point::Kind::Infinity) return {{Point::infinity(up.field), 1}};
    Poly lifted = extend_scalars(RatFunc(z.poly), up.field).num.monic();
    std::vector<std::pair<Point, int>> out;
    for (const auto& [q, e] : factor(lifted).factors) out.emplace_back(Point::finite(q), e);
    return out;
}

QDivisor pullback_qdivisor(const QDivisor& D, const QuadExtension& ext) {
    Curve up = extended_curve(D.curve, ext);
    QDivisor out(up);
    for (const auto& [z, a] : D.coeffs)
        for (const auto& [zz, e] : split_point(z, D.curve, ext)) out.add(zz, a * Rat(e));
    return out;
}

PolyhedralDivisor pullback(const PolyhedralDivisor& D, const QuadExtension& ext) {
    Curve up = extended_curve(D.curve, ext);
    PolyhedralDivisor out;
    out.curve = up;
    out.sigma = D.sigma;
    for (const auto& [z, delta] : D.coeffs) {
        for (const auto& [zz, e] : split_point(z, D.curve, ext)) {
            if (e != 1)
                fail("unsupported",
                     "ramified base change of a line point is outside the treated scope");
            out.set_coefficient(zz, delta);
        }
    }
    return out;
}

bool verify_tensor_identity(const PolyhedralDivisor& D, const QuadExtension& ext, const Int& bound) {
    auto proper = is_proper(D);
    if (!proper.proper) fail("improper-divisor", proper.reason);
    PolyhedralDivisor up = pullback(D, ext);
    const GroundField ef = up.curve.field;
    for (const auto& m : weights_up_to(D, bound)) {
        H0Module down = graded_piece(D, m);
        H0Module upm = graded_piece(up, m);
        std::vector<RatFunc> extended;
        for (const auto& g : down.line_generators) extended.push_back(extend_scalars(g, ef));
        switch (D.curve.model) {
            case CurveModel::AffineLine: {
                // Principal ideals over the extended polynomial ring.
                RatFunc ratio = extended[0] / upm.line_generators[0];
                if (!ratio.is_constant()) return false;
                break;
            }
            case CurveModel::ProjLine: {
                if (!span_equals(extended, upm.line_generators, ef)) return false;
                break;
            }
            case CurveModel::QuadRingSpec:
                fail("unsupported", "tensor identity applies to line models");
        }
    }
    return true;
}

}  // namespace pdiv
