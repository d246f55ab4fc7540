#include "pdiv/curve.hpp"

#include <algorithm>
#include <cassert>

#include "pdiv/error.hpp"

namespace pdiv {

Curve Curve::quad_ring(const Int& d) {
    if (d >= 0 || !is_squarefree(d))
        throw SchemaError("quad-ring model requires a negative squarefree d");
    Int m = ((d % 4) + 4) % 4;
    if (m != 2 && m != 3)
        throw SchemaError("quad-ring model requires d = 2 or 3 (mod 4) so that Z[sqrt(d)] is maximal");
    return {CurveModel::QuadRingSpec, GroundField::quadratic(d)};
}

bool PrimeIdeal::ramified(const Int& d) const {
    if (inert) return false;
    return p == 2 || d % p == 0;
}

Point Point::finite(Poly monic_irreducible) {
    Point z;
    z.kind = Kind::Finite;
    z.poly = std::move(monic_irreducible);
    return z;
}

Point Point::infinity(GroundField f) {
    Point z;
    z.kind = Kind::Infinity;
    z.poly = Poly(f);
    return z;
}

Point Point::ideal(PrimeIdeal p) {
    Point z;
    z.kind = Kind::Prime;
    z.prime = std::move(p);
    return z;
}

bool Point::operator==(const Point& o) const {
    if (kind != o.kind) return false;
    switch (kind) {
        case Kind::Finite: return poly == o.poly;
        case Kind::Infinity: return true;
        case Kind::Prime: return prime == o.prime;
    }
    return false;
}

bool Point::operator<(const Point& o) const {
    if (kind != o.kind) return static_cast<int>(kind) < static_cast<int>(o.kind);
    if (kind == Kind::Infinity) return false;
    if (kind == Kind::Prime) return prime < o.prime;
    if (poly.degree() != o.poly.degree()) return poly.degree() < o.poly.degree();
    for (int i = poly.degree(); i >= 0; --i) {
        const FieldElem a = poly.coeff(i), b = o.poly.coeff(i);
        if (a.a != b.a) return a.a < b.a;
        if (a.b != b.b) return a.b < b.b;
    }
    return false;
}

std::string to_string(const Point& z) {
    switch (z.kind) {
        case Point::Kind::Infinity:
            return "inf";
        case Point::Kind::Finite:
            return "(" + to_string(z.poly) + ")";
        case Point::Kind::Prime: {
            const auto& P = z.prime;
            if (P.inert) return "P(" + P.p.str() + ")";
            Int c = ((-P.r) % P.p + P.p) % P.p;
            if (c == 0) return "P(" + P.p.str() + ",s)";
            return "P(" + P.p.str() + "," + c.str() + "+s)";
        }
    }
    return "?";
}

namespace {

std::optional<Int> second_gen_residue(const FieldElem& g, const Int& p) {
    // The ideal (p, g) with g = alpha + beta*s determines s = r (mod P).
    if (!is_integer(g.a) || !is_integer(g.b)) return std::nullopt;
    Int alpha = rat_num(g.a) % p, beta = rat_num(g.b) % p;
    alpha = (alpha + p) % p;
    beta = (beta + p) % p;
    if (beta == 0) return std::nullopt;
    // Solve beta * r = -alpha (mod p).
    for (Int r = 0; r < p; ++r)
        if ((beta * r + alpha) % p == 0) return r;
    return std::nullopt;
}

}  // namespace

Point parse_point(const std::string& text, const Curve& curve) {
    std::string s = text;
    if (s == "inf") {
        if (curve.model != CurveModel::ProjLine)
            throw SchemaError("the point at infinity requires the projective line model");
        return Point::infinity(curve.field);
    }
    if (s.rfind("P(", 0) == 0 && s.back() == ')') {
        if (curve.model != CurveModel::QuadRingSpec)
            throw SchemaError("prime-ideal points require the quad-ring model");
        std::string inner = s.substr(2, s.size() - 3);
        auto comma = inner.find(',');
        const Int d = curve.field.d;
        if (comma == std::string::npos) {
            Int p(inner);
            auto split = split_rational_prime(p, d);
            if (!(split.size() == 1 && split[0].first.inert))
                throw SchemaError("prime " + p.str() + " is not inert in Z[sqrt(d)]");
            return Point::ideal(split[0].first);
        }
        Int p(inner.substr(0, comma));
        FieldElem g = parse_field_elem(inner.substr(comma + 1), curve.field);
        auto r = second_gen_residue(g, p);
        if (!r) throw SchemaError("invalid second generator for prime above " + p.str());
        if (((*r) * (*r) - d) % p != 0)
            throw SchemaError("second generator does not define a prime above " + p.str());
        PrimeIdeal P{p, false, *r};
        return Point::ideal(P);
    }
    if (curve.model == CurveModel::QuadRingSpec)
        throw SchemaError("points of the quad-ring model use the P(...) syntax");
    if (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
    Poly q = parse_poly(s, curve.field).monic();
    if (q.degree() < 1) throw SchemaError("point polynomial must be non-constant");
    if (!is_irreducible(q)) throw SchemaError("point polynomial is not irreducible: " + s);
    return Point::finite(q);
}

void QDivisor::add(const Point& z, const Rat& a) {
    if (a == 0) return;
    auto it = coeffs.find(z);
    if (it == coeffs.end()) {
        coeffs.emplace(z, a);
        return;
    }
    it->second += a;
    if (it->second == 0) coeffs.erase(it);
}

Rat QDivisor::coeff(const Point& z) const {
    auto it = coeffs.find(z);
    return it == coeffs.end() ? Rat(0) : it->second;
}

bool QDivisor::is_integral() const {
    for (const auto& [z, a] : coeffs)
        if (!is_integer(a)) return false;
    return true;
}

bool QDivisor::is_effective() const {
    for (const auto& [z, a] : coeffs)
        if (a < 0) return false;
    return true;
}

QDivisor QDivisor::operator+(const QDivisor& o) const {
    QDivisor out = *this;
    for (const auto& [z, a] : o.coeffs) out.add(z, a);
    return out;
}

QDivisor QDivisor::operator-(const QDivisor& o) const {
    QDivisor out = *this;
    for (const auto& [z, a] : o.coeffs) out.add(z, -a);
    return out;
}

QDivisor QDivisor::operator*(const Rat& c) const {
    QDivisor out(curve);
    if (c == 0) return out;
    for (const auto& [z, a] : coeffs) out.add(z, a * c);
    return out;
}

bool QDivisor::operator<=(const QDivisor& o) const {
    QDivisor diff = o - *this;
    return diff.is_effective();
}

QDivisor floor_divisor(const QDivisor& D) {
    QDivisor out(D.curve);
    for (const auto& [z, a] : D.coeffs) out.add(z, Rat(floor_rat(a)));
    return out;
}

// ---- fractional ideals -----------------------------------------------------

FracIdeal FracIdeal::one(const Int& d) { return FracIdeal{d, 1, 0, 1, 1}; }

FracIdeal FracIdeal::from_lattice(const Int& d, std::vector<std::pair<Int, Int>> gens, const Int& den) {
    // Canonical Hermite basis {(a,0), (b,c)} of the rank-2 sublattice.
    Int c = 0, b0 = 0;
    for (const auto& [x, y] : gens) {
        if (y == 0) continue;
        if (c == 0) {
            c = y < 0 ? Int(-y) : y;
            b0 = y < 0 ? Int(-x) : x;
            continue;
        }
        // Extended gcd combine (b0, c) and (x, y).
        Int a1 = c, a2 = y < 0 ? Int(-y) : y;
        Int x1 = b0, x2 = y < 0 ? Int(-x) : x;
        while (a2 != 0) {
            Int q = a1 / a2;
            a1 -= q * a2;
            x1 -= q * x2;
            std::swap(a1, a2);
            std::swap(x1, x2);
        }
        c = a1;
        b0 = x1;
    }
    if (c == 0) fail("consistency", "ideal lattice is not of full rank");
    Int a = 0;
    for (const auto& [x, y] : gens) {
        if (y % c != 0) fail("consistency", "ideal lattice y-components not generated");
        a = gcd_int(a, x - (y / c) * b0);
    }
    if (a == 0) fail("consistency", "ideal lattice is not of full rank");
    Int b = ((b0 % a) + a) % a;
    Int g = gcd_int(gcd_int(a, b), gcd_int(c, den));
    FracIdeal I{d, a / g, b / g, c / g, den / g};
    if (I.den < 0) fail("consistency", "negative ideal denominator");
    return I;
}

FracIdeal FracIdeal::principal(const FieldElem& x) {
    if (x.is_zero()) fail("consistency", "principal ideal of zero");
    const Int d = x.field.d;
    Int den0 = lcm_int(rat_den(x.a), rat_den(x.b));
    Int u = rat_num(x.a) * (den0 / rat_den(x.a));
    Int v = rat_num(x.b) * (den0 / rat_den(x.b));
    return from_lattice(d, {{u, v}, {v * d, u}}, den0);
}

FracIdeal FracIdeal::from_prime(const PrimeIdeal& P, const Int& d) {
    if (P.inert) return FracIdeal{d, P.p, 0, P.p, 1};
    return from_lattice(d, {{P.p, 0}, {-P.r, 1}}, 1);
}

FracIdeal FracIdeal::mul(const FracIdeal& o) const {
    assert(d == o.d);
    std::vector<std::pair<Int, Int>> basis1{{a, Int(0)}, {b, c}};
    std::vector<std::pair<Int, Int>> basis2{{o.a, Int(0)}, {o.b, o.c}};
    std::vector<std::pair<Int, Int>> prods;
    for (const auto& [x1, y1] : basis1)
        for (const auto& [x2, y2] : basis2)
            prods.emplace_back(x1 * x2 + y1 * y2 * d, x1 * y2 + x2 * y1);
    return from_lattice(d, prods, den * o.den);
}

FracIdeal FracIdeal::conj() const {
    return from_lattice(d, {{a, Int(0)}, {b, -c}}, den);
}

FracIdeal FracIdeal::inverse() const {
    // I * conj(I) = (N(I)), so 1/I = conj(I) / N(I).
    FracIdeal cj = conj();
    Rat n = norm();
    Int nn = rat_num(n), nd = rat_den(n);
    // Scale by nd/nn.
    std::vector<std::pair<Int, Int>> gens{{cj.a * nd, Int(0)}, {cj.b * nd, cj.c * nd}};
    return from_lattice(d, gens, cj.den * nn);
}

FracIdeal FracIdeal::pow(long e) const {
    FracIdeal base = e >= 0 ? *this : inverse();
    long k = e >= 0 ? e : -e;
    FracIdeal acc = one(d);
    while (k) {
        if (k & 1) acc = acc.mul(base);
        base = base.mul(base);
        k >>= 1;
    }
    return acc;
}

FracIdeal FracIdeal::add(const FracIdeal& o) const {
    assert(d == o.d);
    Int l = lcm_int(den, o.den);
    Int f1 = l / den, f2 = l / o.den;
    std::vector<std::pair<Int, Int>> gens{{a * f1, Int(0)},
                                          {b * f1, c * f1},
                                          {o.a * f2, Int(0)},
                                          {o.b * f2, o.c * f2}};
    return from_lattice(d, gens, l);
}

Rat FracIdeal::norm() const { return Rat(a * c, den * den); }

bool FracIdeal::contains(const FieldElem& x) const {
    Rat u = x.a * Rat(den), v = x.b * Rat(den);
    if (!is_integer(u) || !is_integer(v)) return false;
    Int ui = rat_num(u), vi = rat_num(v);
    if (vi % c != 0) return false;
    Int k = vi / c;
    return (ui - k * b) % a == 0;
}

FieldElem FracIdeal::gen1(const GroundField& f) const { return FieldElem(f, Rat(a, den)); }
FieldElem FracIdeal::gen2(const GroundField& f) const {
    return FieldElem(f, Rat(b, den), Rat(c, den));
}

int ideal_valuation(const FracIdeal& I, const PrimeIdeal& P) {
    const Int d = I.d;
    GroundField f = GroundField::quadratic(d);
    FracIdeal Pi = FracIdeal::from_prime(P, d);
    // Numerator lattice part.
    FracIdeal J{d, I.a, I.b, I.c, 1};
    int v = 0;
    FracIdeal power = Pi;
    while (power.contains(J.gen1(f)) && power.contains(J.gen2(f))) {
        ++v;
        power = power.mul(Pi);
    }
    // Denominator part: v_P(den) = e(P|p) * v_p(den).
    int vden = 0;
    Int n = I.den;
    while (n % P.p == 0) {
        n /= P.p;
        ++vden;
    }
    int e = P.ramified(d) ? 2 : 1;
    return v - e * vden;
}

std::vector<std::pair<PrimeIdeal, int>> split_rational_prime(const Int& p, const Int& d) {
    if (p < 2) fail("consistency", "not a prime");
    if (p == 2) {
        Int m = ((d % 4) + 4) % 4;
        PrimeIdeal P{p, false, m == 2 ? Int(0) : Int(1)};
        return {{P, 2}};
    }
    if (d % p == 0) return {{PrimeIdeal{p, false, 0}, 2}};
    Int dm = ((d % p) + p) % p;
    std::vector<Int> roots;
    for (Int r = 1; r < p; ++r)
        if ((r * r - dm) % p == 0) roots.push_back(r);
    if (roots.empty()) return {{PrimeIdeal{p, true, 0}, 1}};
    std::sort(roots.begin(), roots.end());
    std::vector<std::pair<PrimeIdeal, int>> out;
    for (const auto& r : roots) out.push_back({PrimeIdeal{p, false, r}, 1});
    return out;
}

bool H0Module::is_zero() const {
    return line_generators.empty() && ring_generators.empty() && !ideal;
}

int residue_degree(const Point& z) {
    switch (z.kind) {
        case Point::Kind::Infinity: return 1;
        case Point::Kind::Finite: return z.poly.degree();
        case Point::Kind::Prime: return z.prime.inert ? 2 : 1;
    }
    return 1;
}

int ord_at(const RatFunc& f, const Point& z) {
    if (f.is_zero()) fail("undefined-ord", "ord of the zero function");
    if (z.kind == Point::Kind::Infinity) return f.den.degree() - f.num.degree();
    if (z.kind != Point::Kind::Finite) fail("unsupported", "ord_at expects a line point");
    return multiplicity(f.num, z.poly) - multiplicity(f.den, z.poly);
}

QDivisor divisor_of(const RatFunc& f, const Curve& curve) {
    if (f.is_zero()) fail("undefined-ord", "divisor of the zero function");
    if (curve.model == CurveModel::QuadRingSpec) return divisor_of_elem(f.constant_value(), curve);
    QDivisor D(curve);
    for (const auto& [q, e] : factor(f.num).factors) D.add(Point::finite(q), Rat(e));
    for (const auto& [q, e] : factor(f.den).factors) D.add(Point::finite(q), Rat(-e));
    if (curve.model == CurveModel::ProjLine)
        D.add(Point::infinity(curve.field), Rat(f.den.degree() - f.num.degree()));
    return D;
}

QDivisor divisor_of_elem(const FieldElem& x, const Curve& curve) {
    if (curve.model != CurveModel::QuadRingSpec)
        fail("unsupported", "element divisors require the quad-ring model");
    if (x.is_zero()) fail("undefined-ord", "divisor of zero");
    return ideal_divisor(FracIdeal::principal(x), curve);
}

QDivisor ideal_divisor(const FracIdeal& I, const Curve& curve) {
    QDivisor D(curve);
    Int interesting = I.a * I.c * I.den;
    for (const auto& [p, e] : factor_integer(interesting)) {
        (void)e;
        for (const auto& [P, mult] : split_rational_prime(p, I.d)) {
            (void)mult;
            int v = ideal_valuation(I, P);
            if (v) D.add(Point::ideal(P), Rat(v));
        }
    }
    return D;
}

Rat divisor_degree(const QDivisor& D) {
    if (D.curve.model != CurveModel::ProjLine)
        fail("unsupported", "divisor degree is defined on the projective line model");
    Rat total = 0;
    for (const auto& [z, a] : D.coeffs) total += a * Rat(residue_degree(z));
    return total;
}

namespace {

RatFunc product_over_points(const QDivisor& D, bool positive_part) {
    const GroundField f = D.curve.field;
    RatFunc out = RatFunc::one(f);
    for (const auto& [z, a] : D.coeffs) {
        if (z.kind != Point::Kind::Finite) continue;
        Int e = rat_num(a);
        if ((e > 0) != positive_part || e == 0) continue;
        long k = static_cast<long>(e);
        out = out * RatFunc(z.poly).pow(k > 0 ? k : -k);
    }
    return out;
}

std::optional<FieldElem> principal_generator(const FracIdeal& I, const GroundField& f) {
    // Search x + y sqrt(d) in the numerator lattice with x^2 - d y^2 = a c.
    // d < 0 bounds the search; first hit in scan order is the witness.
    const Int d = I.d;
    Int target = I.a * I.c;
    for (Int k = 0;; ++k) {
        Int y = k * I.c;
        Int rest = target + d * y * y;
        if (rest < 0) break;
        Int x;
        if (!is_square(rest, x)) continue;
        std::vector<Int> ys = k == 0 ? std::vector<Int>{Int(0)} : std::vector<Int>{k, -k};
        for (const auto& ky : ys) {
            std::vector<Int> xs = x == 0 ? std::vector<Int>{Int(0)} : std::vector<Int>{x, -x};
            for (const auto& xx : xs) {
                if (((xx - ky * I.b) % I.a) == 0)
                    return FieldElem(f, Rat(xx, I.den), Rat(ky * I.c, I.den));
            }
        }
    }
    return std::nullopt;
}

}  // namespace

FracIdeal divisor_ideal(const QDivisor& D) {
    if (D.curve.model != CurveModel::QuadRingSpec)
        fail("unsupported", "divisor_ideal requires the quad-ring model");
    const Int d = D.curve.field.d;
    FracIdeal I = FracIdeal::one(d);
    for (const auto& [z, a] : D.coeffs) {
        if (!is_integer(a)) fail("consistency", "divisor_ideal needs an integral divisor");
        I = I.mul(FracIdeal::from_prime(z.prime, d).pow(-static_cast<long>(rat_num(a))));
    }
    return I;
}

H0Module h0(const QDivisor& D_in) {
    QDivisor D = floor_divisor(D_in);
    const Curve& curve = D.curve;
    const GroundField f = curve.field;
    H0Module M;
    M.curve = curve;
    switch (curve.model) {
        case CurveModel::AffineLine: {
            RatFunc pos = product_over_points(D, true);
            RatFunc neg = product_over_points(D, false);
            // Generator prod p_z^{-a_z}.
            M.line_generators = {neg / pos};
            return M;
        }
        case CurveModel::ProjLine: {
            Rat a_inf = D.coeff(Point::infinity(f));
            Poly den_p = product_over_points(D, true).num;  // prod p^{a_z}, a_z > 0
            Poly req = product_over_points(D, false).num;   // prod p^{-a_z}, a_z < 0
            long maxdeg = den_p.degree() + static_cast<long>(rat_num(a_inf));
            long dim = maxdeg - req.degree() + 1;
            for (long j = 0; j + req.degree() <= maxdeg; ++j)
                M.line_generators.push_back(
                    RatFunc(req * Poly::variable(f).pow(static_cast<int>(j)), den_p));
            assert(static_cast<long>(M.line_generators.size()) == std::max<long>(dim, 0));
            return M;
        }
        case CurveModel::QuadRingSpec: {
            FracIdeal I = divisor_ideal(D);
            M.ideal = I;
            if (auto g = principal_generator(I, f)) {
                M.ring_generators = {*g};
            } else {
                M.ring_generators = {I.gen1(f), I.gen2(f)};
            }
            return M;
        }
    }
    return M;
}

PrincipalityResult is_principal(const QDivisor& D) {
    if (!D.is_integral()) fail("consistency", "principality is asked of integral divisors");
    PrincipalityResult res;
    const Curve& curve = D.curve;
    switch (curve.model) {
        case CurveModel::AffineLine: {
            res.principal = true;
            res.witness_line = product_over_points(D, true) / product_over_points(D, false);
            return res;
        }
        case CurveModel::ProjLine: {
            if (divisor_degree(D) != 0) return res;
            res.principal = true;
            res.witness_line = product_over_points(D, true) / product_over_points(D, false);
            return res;
        }
        case CurveModel::QuadRingSpec: {
            const Int d = curve.field.d;
            FracIdeal I = FracIdeal::one(d);
            for (const auto& [z, a] : D.coeffs)
                I = I.mul(FracIdeal::from_prime(z.prime, d).pow(static_cast<long>(rat_num(a))));
            if (auto g = principal_generator(I, curve.field)) {
                res.principal = true;
                res.witness_elem = *g;
            }
            return res;
        }
    }
    return res;
}

bool h0_contains(const QDivisor& D, const RatFunc& f) {
    if (f.is_zero()) return true;
    QDivisor F = floor_divisor(D);
    if (D.curve.model == CurveModel::QuadRingSpec)
        return divisor_ideal(F).contains(f.constant_value());
    QDivisor sum = divisor_of(f, D.curve) + F;
    return sum.is_effective();
}

// ---- Moebius ----------------------------------------------------------------

Mobius Mobius::identity(const GroundField& f) {
    return Mobius{FieldElem(f, Rat(1)), FieldElem(f, Rat(0)), FieldElem(f, Rat(0)),
                  FieldElem(f, Rat(1))};
}

bool Mobius::is_identity() const {
    return b.is_zero() && c.is_zero() && a == d && !a.is_zero();
}

Mobius Mobius::inverse() const { return Mobius{d, -b, -c, a}; }

Mobius Mobius::compose(const Mobius& o) const {
    return Mobius{a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
}

Mobius Mobius::conjugated() const {
    return Mobius{conjugate(a), conjugate(b), conjugate(c), conjugate(d)};
}

RatFunc Mobius::substitute(const RatFunc& f) const {
    const GroundField F = a.field;
    if ((a * d - b * c).is_zero()) fail("invalid-witness", "singular Moebius transformation");
    Poly lin_num(F, {b, a});  // a t + b
    Poly lin_den(F, {d, c});  // c t + d
    auto lift = [&](const Poly& p) {
        Poly acc(F);
        for (int k = 0; k <= p.degree(); ++k) {
            Poly term = Poly::constant(F, p.coeff(k)) * lin_num.pow(k) * lin_den.pow(p.degree() - k);
            acc = acc + term;
        }
        return acc;
    };
    Poly n = lift(f.num), dd = lift(f.den);
    int dn = f.num.degree(), dq = f.den.degree();
    Poly shift_num = lin_den.pow(std::max(dq - dn, 0));
    Poly shift_den = lin_den.pow(std::max(dn - dq, 0));
    return RatFunc(n * shift_num, dd * shift_den);
}

Point pullback_point(const Mobius& phi, const Point& z, const Curve& curve) {
    const GroundField F = curve.field;
    if ((phi.a * phi.d - phi.b * phi.c).is_zero())
        fail("invalid-witness", "singular Moebius transformation");
    if (curve.model == CurveModel::QuadRingSpec) {
        if (!phi.is_identity()) fail("unsupported", "quad-ring model admits the identity only");
        return z;
    }
    if (curve.model == CurveModel::AffineLine && !phi.c.is_zero())
        fail("invalid-witness", "affine-line automorphisms must fix infinity");
    if (z.kind == Point::Kind::Infinity) {
        if (phi.c.is_zero()) return z;
        // mu(t) = inf at t = -d/c.
        FieldElem root = -(phi.d / phi.c);
        return Point::finite(Poly(F, {-root, FieldElem(F, Rat(1))}));
    }
    RatFunc moved = phi.substitute(RatFunc(z.poly));
    if (moved.num.degree() == z.poly.degree()) return Point::finite(moved.num.monic());
    // Degree dropped: the preimage is the point at infinity (deg 1 only).
    if (z.poly.degree() != 1 || curve.model != CurveModel::ProjLine)
        fail("consistency", "unexpected degree drop in point transport");
    return Point::infinity(F);
}

Point image_point(const Mobius& phi, const Point& z, const Curve& curve) {
    return pullback_point(phi.inverse(), z, curve);
}

QDivisor pullback_divisor(const Mobius& phi, const QDivisor& D) {
    QDivisor out(D.curve);
    for (const auto& [z, a] : D.coeffs) out.add(pullback_point(phi, z, D.curve), a);
    return out;
}

Point conjugate_point(const Point& z) {
    switch (z.kind) {
        case Point::Kind::Infinity: return z;
        case Point::Kind::Finite: return Point::finite(conjugate(z.poly));
        case Point::Kind::Prime: {
            PrimeIdeal P = z.prime;
            if (!P.inert && P.r != 0) P.r = P.p - P.r;
            return Point::ideal(P);
        }
    }
    return z;
}

QDivisor conjugate_divisor(const QDivisor& D) {
    QDivisor out(D.curve);
    for (const auto& [z, a] : D.coeffs) out.add(conjugate_point(z), a);
    return out;
}

}  // namespace pdiv
