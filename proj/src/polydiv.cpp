#include "pdiv/polydiv.hpp"

#include <algorithm>
#include <cassert>
#include <random>
#include <thread>

#include "pdiv/error.hpp"
#include "pdiv/modspan.hpp"

namespace pdiv {

const TailedPolyhedron& PolyhedralDivisor::coefficient(const Point& z) const {
    static thread_local TailedPolyhedron sigma_cache;
    auto it = coeffs.find(z);
    if (it != coeffs.end()) return it->second;
    sigma_cache = sigma_polyhedron(sigma);
    return sigma_cache;
}

void PolyhedralDivisor::set_coefficient(const Point& z, TailedPolyhedron p) {
    if (p.tail != sigma) fail("tail-mismatch", "coefficient tail differs from sigma");
    if (p == sigma_polyhedron(sigma)) {
        coeffs.erase(z);
        return;
    }
    coeffs[z] = std::move(p);
}

RatFunc PrincipalPolyDivisor::value(const VecI& m) const {
    assert(!basis_values.empty());
    GroundField f = basis_values[0].field();
    RatFunc out = RatFunc::one(f);
    for (size_t i = 0; i < basis_values.size(); ++i)
        out = out * basis_values[i].pow(static_cast<long>(m[i]));
    return out;
}

QDivisor PrincipalPolyDivisor::divisor(const VecI& m, const Curve& curve) const {
    return divisor_of(value(m), curve);
}

namespace {

void require_weight(const PolyhedralDivisor& D, const VecQ& m) {
    for (const auto& r : D.sigma.rays())
        if (dot(r, m) < 0) fail("unbounded", "weight lies outside the dual of the tail cone");
}

}  // namespace

QDivisor evaluate(const PolyhedralDivisor& D, const VecQ& m) {
    require_weight(D, m);
    QDivisor out(D.curve);
    for (const auto& [z, delta] : D.coeffs) out.add(z, support_min(m, delta));
    return out;
}

QDivisor evaluate(const PolyhedralDivisor& D, const VecI& m) { return evaluate(D, to_q(m)); }

TailedPolyhedron degree_polyhedron(const PolyhedralDivisor& D) {
    if (D.curve.model != CurveModel::ProjLine)
        fail("unsupported", "degree polyhedron is defined over the projective line");
    TailedPolyhedron acc = sigma_polyhedron(D.sigma);
    for (const auto& [z, delta] : D.coeffs)
        acc = minkowski_sum(acc, delta, Rat(1), Rat(residue_degree(z)));
    return acc;
}

PropernessResult is_proper(const PolyhedralDivisor& D) {
    if (D.curve.is_affine()) return {true, "base curve is affine"};
    TailedPolyhedron deg = degree_polyhedron(D);
    for (const auto& v : deg.vertices)
        if (!D.sigma.contains(v)) return {false, "degree polyhedron not contained in sigma"};
    VecQ origin(D.rank(), Rat(0));
    if (polyhedron_contains(deg, origin)) return {false, "degree polyhedron equals sigma"};

    // Face of the weight cone where the support function of deg D vanishes;
    // its extreme weights must sit on the boundary and evaluate to divisors
    // with a principal multiple.
    Cone weight_cone = dual_cone(D.sigma);
    for (const auto& v : deg.vertices) {
        std::vector<VecI> normals = weight_cone.facets();
        VecI vi = primitive(v);
        if (is_zero(vi)) continue;
        normals.push_back(vi);
        VecI neg(vi.size());
        for (size_t i = 0; i < vi.size(); ++i) neg[i] = -vi[i];
        normals.push_back(neg);
        Cone face = Cone::from_inequalities(D.rank(), normals);
        for (const auto& m : face.rays()) {
            if (support_min(m, deg) != 0) continue;
            bool boundary = false;
            for (const auto& f : weight_cone.facets())
                if (dot(f, m) == 0) boundary = true;
            if (!boundary)
                return {false, "degree support function vanishes in the weight cone interior"};
            QDivisor E = evaluate(D, m);
            Int N = 1;
            for (const auto& [z, a] : E.coeffs) N = lcm_int(N, rat_den(a));
            if (!is_principal(E * Rat(N)).principal)
                return {false, "evaluation on the vanishing face has no principal multiple"};
        }
    }
    return {true, "degree polyhedron strictly contained in sigma; vanishing face principal"};
}

PolyhedralDivisor from_generators(const Curve& curve, const std::vector<GradedElement>& gens) {
    if (gens.empty()) fail("degenerate-weights", "no generators");
    int n = static_cast<int>(gens[0].m.size());
    MatI weights;
    for (const auto& g : gens) {
        if (g.f.is_zero()) fail("consistency", "zero generator function");
        if (is_zero(g.m)) fail("degenerate-weights", "zero weight vector");
        weights.push_back(g.m);
    }
    MatI h = hnf_rows(weights);
    bool generating = static_cast<int>(h.size()) == n;
    if (generating) {
        Int det = 1;
        for (int i = 0; i < n; ++i) det *= h[i][i];
        generating = det == 1 || det == -1;
    }
    if (!generating) fail("degenerate-weights", "weight vectors do not generate the lattice");

    PolyhedralDivisor D;
    D.curve = curve;
    D.sigma = Cone::from_inequalities(n, weights);

    std::vector<QDivisor> divs;
    divs.reserve(gens.size());
    std::map<Point, bool> support;
    for (const auto& g : gens) {
        divs.push_back(divisor_of(g.f, curve));
        for (const auto& [z, a] : divs.back().coeffs) support[z] = true;
    }
    for (const auto& [z, unused] : support) {
        (void)unused;
        std::vector<Halfspace> cs;
        for (size_t i = 0; i < gens.size(); ++i) cs.push_back({gens[i].m, -divs[i].coeff(z)});
        D.set_coefficient(z, halfspaces_to_polyhedron(cs));
    }
    return D;
}

QDivisor dpd_divisor(const Curve& curve, const std::vector<GradedElement>& gens) {
    if (gens.empty()) fail("degenerate-weights", "no generators");
    std::vector<QDivisor> divs;
    std::map<Point, bool> support;
    for (const auto& g : gens) {
        if (g.m.size() != 1 || g.m[0] <= 0)
            fail("not-positively-graded", "rank-one positive weights required");
        divs.push_back(divisor_of(g.f, curve));
        for (const auto& [z, a] : divs.back().coeffs) support[z] = true;
    }
    QDivisor out(curve);
    for (const auto& [z, unused] : support) {
        (void)unused;
        bool first = true;
        Rat best = 0;
        for (size_t i = 0; i < gens.size(); ++i) {
            Rat v = divs[i].coeff(z) / Rat(gens[i].m[0]);
            if (first || v < best) {
                best = v;
                first = false;
            }
        }
        out.add(z, -best);
    }
    return out;
}

namespace {

bool in_weight_lattice_cone(const PolyhedralDivisor& D, const VecI& m) {
    for (const auto& r : D.sigma.rays())
        if (dot(r, m) < 0) return false;
    return true;
}

}  // namespace

H0Module graded_piece(const PolyhedralDivisor& D, const VecI& m) {
    if (!in_weight_lattice_cone(D, m))
        fail("outside-weight-cone", "weight outside the dual of the tail cone");
    return h0(floor_divisor(evaluate(D, m)));
}

bool contains(const PolyhedralDivisor& D, const GradedElement& g) {
    if (g.f.is_zero()) return true;
    if (!in_weight_lattice_cone(D, g.m)) return false;
    return h0_contains(evaluate(D, g.m), g.f);
}

std::vector<VecI> weight_cone_hilbert_basis(const PolyhedralDivisor& D) {
    Cone dual = dual_cone(D.sigma);
    if (!dual.is_pointed())
        fail("unsupported", "weight-cone Hilbert basis requires a full-dimensional tail cone");
    return hilbert_basis(dual);
}

Int weight_ell(const PolyhedralDivisor& D, const VecI& m) {
    Int v = 0;
    for (const auto& u : D.sigma.rays()) v += dot(m, u);
    return v;
}

std::vector<VecI> weights_up_to(const PolyhedralDivisor& D, const Int& bound) {
    if (!D.sigma.is_full_dimensional())
        fail("unsupported", "weight truncation requires a full-dimensional tail cone");
    int n = D.rank();
    VecI usum(n, Int(0));
    for (const auto& u : D.sigma.rays()) usum = add(usum, u);
    std::vector<Halfspace> cs;
    for (const auto& r : D.sigma.rays()) cs.push_back({r, Rat(0)});
    VecI neg(usum.size());
    for (size_t i = 0; i < usum.size(); ++i) neg[i] = -usum[i];
    cs.push_back({neg, Rat(-bound)});
    auto poly = halfspaces_to_polyhedron(cs);

    // Integer bounding box of the polytope.
    VecI lo(n), hi(n);
    for (int i = 0; i < n; ++i) {
        Rat mn = poly.vertices[0][i], mx = poly.vertices[0][i];
        for (const auto& v : poly.vertices) {
            mn = std::min(mn, v[i]);
            mx = std::max(mx, v[i]);
        }
        lo[i] = floor_rat(mn);
        hi[i] = ceil_rat(mx);
    }
    std::vector<VecI> out;
    VecI m(n, Int(0));
    auto rec = [&](auto&& self, int depth) -> void {
        if (depth == n) {
            if (is_zero(m)) return;
            if (!in_weight_lattice_cone(D, m)) return;
            if (weight_ell(D, m) > bound) return;
            out.push_back(m);
            return;
        }
        for (Int v = lo[depth]; v <= hi[depth]; ++v) {
            m[depth] = v;
            self(self, depth + 1);
        }
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end(), [&](const VecI& a, const VecI& b) {
        Int la = weight_ell(D, a), lb = weight_ell(D, b);
        if (la != lb) return la < lb;
        return lex_less(a, b);
    });
    return out;
}

namespace {

// Per-weight module bookkeeping for the generator sieve.
struct WeightModule {
    Curve curve;
    // AffineLine: principal generator (empty RatFunc = zero module so far).
    RatFunc affine_gen;
    bool affine_set = false;
    // QuadRingSpec.
    std::optional<FracIdeal> ideal;
    // ProjLine.
    std::vector<RatFunc> span;

    void absorb_affine(const RatFunc& g) {
        affine_gen = affine_set ? frac_gcd(affine_gen, g) : g;
        affine_set = true;
    }
};

}  // namespace

std::vector<GradedElement> algebra_generators(const PolyhedralDivisor& D, const Int& bound,
                                              int jobs) {
    auto proper = is_proper(D);
    if (!proper.proper) fail("improper-divisor", "algebra generators need a proper divisor: " + proper.reason);
    const Curve& curve = D.curve;
    const GroundField f = curve.field;

    auto weights = weights_up_to(D, bound);
    std::vector<H0Module> pieces(weights.size());
    std::map<VecI, size_t> index;
    for (size_t i = 0; i < weights.size(); ++i) index[weights[i]] = i;

    // Graded pieces are independent; the sieve below is sequential.
    if (jobs > 1) {
        std::vector<std::thread> pool;
        std::atomic<size_t> next{0};
        for (int j = 0; j < jobs; ++j)
            pool.emplace_back([&] {
                while (true) {
                    size_t i = next.fetch_add(1);
                    if (i >= weights.size()) return;
                    pieces[i] = graded_piece(D, weights[i]);
                }
            });
        for (auto& th : pool) th.join();
    } else {
        for (size_t i = 0; i < weights.size(); ++i) pieces[i] = graded_piece(D, weights[i]);
    }

    std::vector<GradedElement> out;
    // Degree-zero ring generators.
    switch (curve.model) {
        case CurveModel::AffineLine:
            out.push_back({RatFunc::variable(f), VecI(D.rank(), Int(0))});
            break;
        case CurveModel::QuadRingSpec:
            out.push_back({RatFunc::constant(f, FieldElem(f, Rat(0), Rat(1))), VecI(D.rank(), Int(0))});
            break;
        case CurveModel::ProjLine:
            break;
    }
    std::vector<GradedElement> emitted;  // positive-weight emissions

    for (size_t wi = 0; wi < weights.size(); ++wi) {
        const VecI& m = weights[wi];
        const H0Module& target = pieces[wi];
        WeightModule gen;
        gen.curve = curve;
        for (const auto& e : emitted) {
            VecI rest = sub(m, e.m);
            if (is_zero(rest) || !in_weight_lattice_cone(D, rest)) continue;
            auto it = index.find(rest);
            if (it == index.end()) continue;  // outside the truncation: cannot happen
            const H0Module& lower = pieces[it->second];
            switch (curve.model) {
                case CurveModel::AffineLine:
                    gen.absorb_affine(e.f * lower.line_generators[0]);
                    break;
                case CurveModel::QuadRingSpec: {
                    FracIdeal scaled = FracIdeal::principal(e.f.constant_value()).mul(*lower.ideal);
                    gen.ideal = gen.ideal ? gen.ideal->add(scaled) : scaled;
                    break;
                }
                case CurveModel::ProjLine:
                    for (const auto& b : lower.line_generators) gen.span.push_back(e.f * b);
                    break;
            }
        }
        // Emit a minimal completion of the generated part to the target.
        switch (curve.model) {
            case CurveModel::AffineLine: {
                const RatFunc& t = target.line_generators[0];
                bool covered = gen.affine_set && (gen.affine_gen / t).is_constant();
                if (!covered) {
                    out.push_back({t, m});
                    emitted.push_back({t, m});
                }
                break;
            }
            case CurveModel::QuadRingSpec: {
                for (const auto& cand : target.ring_generators) {
                    if (gen.ideal && gen.ideal->contains(cand)) continue;
                    out.push_back({RatFunc::constant(f, cand), m});
                    emitted.push_back({RatFunc::constant(f, cand), m});
                    FracIdeal pr = FracIdeal::principal(cand);
                    gen.ideal = gen.ideal ? gen.ideal->add(pr) : pr;
                }
                if (*gen.ideal != *target.ideal)
                    fail("consistency", "generator sieve failed to reach the graded piece");
                break;
            }
            case CurveModel::ProjLine: {
                FuncSpan span(f);
                for (const auto& v : gen.span) span.add(v);
                for (const auto& cand : target.line_generators) {
                    if (span.contains(cand)) continue;
                    span.add(cand);
                    out.push_back({cand, m});
                    emitted.push_back({cand, m});
                }
                break;
            }
        }
    }
    return out;
}

std::vector<VecI> sample_weights(const std::vector<VecI>& hilbert, int count, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coeff(0, 4);
    std::vector<VecI> out;
    if (hilbert.empty()) return out;
    int n = static_cast<int>(hilbert[0].size());
    while (static_cast<int>(out.size()) < count) {
        VecI m(n, Int(0));
        for (const auto& h : hilbert) m = add(m, scale(h, Int(coeff(rng))));
        if (is_zero(m)) continue;
        out.push_back(m);
    }
    return out;
}

bool iso_witness_check(const PolyhedralDivisor& D, const PolyhedralDivisor& Dprime,
                       const IsoWitness& w, int samples) {
    if (D.curve != Dprime.curve) fail("invalid-witness", "divisors live on different curves");
    int n = D.rank();
    if (static_cast<int>(w.lattice_auto.size()) != n)
        fail("invalid-witness", "lattice automorphism has the wrong size");
    Int det = det_int(w.lattice_auto);
    if (det != 1 && det != -1) fail("invalid-witness", "lattice map is not unimodular");
    if (static_cast<int>(w.principal.basis_values.size()) != n)
        fail("invalid-witness", "principal divisor must be given on a lattice basis");
    for (const auto& v : w.principal.basis_values)
        if (v.is_zero()) fail("invalid-witness", "principal divisor with a vanishing value");

    auto hb = weight_cone_hilbert_basis(D);
    for (const auto& h : hb) {
        VecI img = mat_apply(w.lattice_auto, h);
        if (!in_weight_lattice_cone(D, img))
            fail("invalid-witness", "lattice map does not preserve the weight cone");
    }
    auto test = [&](const VecI& m) {
        QDivisor lhs = pullback_divisor(w.curve_auto, evaluate(D, m));
        QDivisor rhs = evaluate(Dprime, mat_apply(w.lattice_auto, m)) + w.principal.divisor(m, D.curve);
        return lhs == rhs;
    };
    for (const auto& m : hb)
        if (!test(m)) return false;
    for (const auto& m : sample_weights(hb, samples, 0x5eed1u))
        if (!test(m)) return false;
    return true;
}

}  // namespace pdiv
