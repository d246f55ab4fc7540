#include "pdiv/descent.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <random>
#include <set>

#include "pdiv/error.hpp"
#include "pdiv/modspan.hpp"

namespace pdiv {

RatFunc SemiLinearAction::cocycle(const VecI& m) const {
    return b.value(galois.act(m)) / conjugate(b.value(m));
}

AlgebraElement AlgebraElement::of(GradedElement g) {
    AlgebraElement e;
    if (!g.f.is_zero()) e.parts.push_back(std::move(g));
    return e;
}

void AlgebraElement::normalize_sorted() {
    std::map<VecI, RatFunc> acc;
    for (const auto& p : parts) {
        auto it = acc.find(p.m);
        if (it == acc.end())
            acc.emplace(p.m, p.f);
        else
            it->second = it->second + p.f;
    }
    parts.clear();
    for (const auto& [m, fn] : acc)
        if (!fn.is_zero()) parts.push_back({fn, m});
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& o) const {
    AlgebraElement out = *this;
    out.parts.insert(out.parts.end(), o.parts.begin(), o.parts.end());
    out.normalize_sorted();
    return out;
}

AlgebraElement AlgebraElement::operator*(const AlgebraElement& o) const {
    AlgebraElement out;
    for (const auto& p : parts)
        for (const auto& q : o.parts) out.parts.push_back({p.f * q.f, add(p.m, q.m)});
    out.normalize_sorted();
    return out;
}

AlgebraElement AlgebraElement::scaled(const RatFunc& c) const {
    AlgebraElement out;
    if (c.is_zero()) return out;
    for (const auto& p : parts) out.parts.push_back({p.f * c, p.m});
    return out;
}

std::string to_string(const AlgebraElement& e) {
    if (e.parts.empty()) return "0";
    std::string out;
    for (const auto& p : e.parts) {
        if (!out.empty()) out += " + ";
        out += "(" + to_string(p.f) + ")*X^(";
        for (size_t i = 0; i < p.m.size(); ++i) out += (i ? "," : "") + p.m[i].str();
        out += ")";
    }
    return out;
}

void validate_galois(const GaloisData& g, const PolyhedralDivisor& D) {
    if (!D.curve.is_line() || !D.curve.field.extended || D.curve.field.d != g.ext.d)
        fail("invalid-action", "Galois data must match a line model over the quadratic extension");
    int n = D.rank();
    if (static_cast<int>(g.lattice_action.size()) != n)
        fail("invalid-action", "lattice action has the wrong size");
    MatI sq = mat_mul(g.lattice_action, g.lattice_action);
    if (sq != identity_mat(n)) fail("invalid-action", "lattice action is not an involution");
    for (const auto& h : weight_cone_hilbert_basis(D))
        if (!D.sigma.contains(VecQ(to_q(g.act(h)))))
            fail("invalid-action", "lattice action does not preserve the weight cone");
}

bool check_invariant(const InvariantPolyDivisor& ipd, int samples) {
    validate_galois(ipd.galois, ipd.D);
    auto proper = is_proper(ipd.D);
    if (!proper.proper) fail("improper-divisor", proper.reason);
    int n = ipd.D.rank();
    if (static_cast<int>(ipd.F.basis_values.size()) != n)
        fail("invalid-action", "principal part must be given on a lattice basis");
    for (const auto& v : ipd.F.basis_values)
        if (v.is_zero()) fail("invalid-action", "vanishing principal part");

    auto hb = weight_cone_hilbert_basis(ipd.D);
    auto test = [&](const VecI& m) {
        QDivisor lhs = conjugate_divisor(evaluate(ipd.D, m) + ipd.F.divisor(m, ipd.D.curve));
        VecI gm = ipd.galois.act(m);
        QDivisor rhs = evaluate(ipd.D, gm) + ipd.F.divisor(gm, ipd.D.curve);
        return lhs == rhs;
    };
    for (const auto& m : hb)
        if (!test(m)) return false;
    for (const auto& m : sample_weights(hb, samples, 0xd35cu))
        if (!test(m)) return false;
    return true;
}

SemiLinearAction cocycle_from_b(const GaloisData& galois, const PrincipalPolyDivisor& b) {
    for (const auto& v : b.basis_values)
        if (v.is_zero()) fail("invalid-action", "torus element with a vanishing coordinate");
    return SemiLinearAction{galois, b};
}

GradedElement apply_semilinear(const SemiLinearAction& a, const GradedElement& x) {
    return {conjugate(x.f) * a.cocycle(x.m), a.galois.act(x.m)};
}

AlgebraElement apply_semilinear(const SemiLinearAction& a, const AlgebraElement& x) {
    AlgebraElement out;
    for (const auto& p : x.parts) out.parts.push_back(apply_semilinear(a, p));
    out.normalize_sorted();
    return out;
}

// ---- invariant generators ---------------------------------------------------

namespace {

// Q[t]-submodule of Q[t]^width in echelon form by pivot column.
class PolyModule {
public:
    explicit PolyModule(int width) : width_(width) {}

    void insert(std::vector<Poly> v) {
        while (true) {
            int p = pivot(v);
            if (p < 0) return;
            auto it = rows_.find(p);
            if (it == rows_.end()) {
                rows_.emplace(p, std::move(v));
                return;
            }
            auto& row = it->second;
            while (!v[p].is_zero()) {
                if (v[p].degree() < row[p].degree()) std::swap(v, row);
                Poly q = divmod(v[p], row[p]).first;
                for (int j = 0; j < width_; ++j) v[j] = v[j] - q * row[j];
            }
        }
    }

    bool contains(std::vector<Poly> v) const {
        while (true) {
            int p = pivot(v);
            if (p < 0) return true;
            auto it = rows_.find(p);
            if (it == rows_.end()) return false;
            auto [q, r] = divmod(v[p], it->second[p]);
            if (!r.is_zero()) return false;
            for (int j = 0; j < width_; ++j) v[j] = v[j] - q * it->second[j];
        }
    }

private:
    static int pivot(const std::vector<Poly>& v) {
        for (size_t i = 0; i < v.size(); ++i)
            if (!v[i].is_zero()) return static_cast<int>(i);
        return -1;
    }

    int width_;
    std::map<int, std::vector<Poly>> rows_;
};

struct OrbitContext {
    const InvariantPolyDivisor& ipd;
    std::vector<VecI> orbit;            // 1 or 2 weights, sorted
    std::vector<Poly> slot_denominator; // per weight, over the extended field

    GroundField ext_field() const { return ipd.D.curve.field; }

    // Coordinates of an orbit-supported element as rational polynomials
    // (re/im per slot).
    std::vector<Poly> coords(const AlgebraElement& e) const {
        GroundField rats = GroundField::rationals();
        std::vector<Poly> out(2 * orbit.size(), Poly(rats));
        for (const auto& part : e.parts) {
            auto it = std::find(orbit.begin(), orbit.end(), part.m);
            assert(it != orbit.end());
            size_t slot = static_cast<size_t>(it - orbit.begin());
            RatFunc scaled = part.f * RatFunc(slot_denominator[slot]);
            assert(scaled.den.is_constant());
            Poly p = scaled.num.scaled(scaled.den.coeff(0).inverse());
            std::vector<FieldElem> re, im;
            for (const auto& cc : p.c) {
                re.emplace_back(rats, cc.a);
                im.emplace_back(rats, cc.b);
            }
            out[2 * slot] = Poly(rats, re);
            out[2 * slot + 1] = Poly(rats, im);
        }
        return out;
    }

    AlgebraElement project(const AlgebraElement& e) const {
        AlgebraElement out;
        for (const auto& part : e.parts)
            if (std::find(orbit.begin(), orbit.end(), part.m) != orbit.end())
                out.parts.push_back(part);
        out.normalize_sorted();
        return out;
    }
};

Poly lcm_poly(const Poly& a, const Poly& b) {
    Poly g = gcd_poly(a, b);
    return divmod(a * b, g).first.monic();
}

// Canonical positive-rational scaling: first component's numerator leading
// coefficient becomes a primitive (a, b) pair with positive first entry.
AlgebraElement normalize_generator(AlgebraElement e) {
    e.normalize_sorted();
    if (e.parts.empty()) return e;
    const FieldElem lead = e.parts[0].f.num.leading();
    VecQ pair{lead.a, lead.b};
    VecI prim = primitive(pair);
    Rat scale = 0;
    for (size_t i = 0; i < 2; ++i)
        if (pair[i] != 0) {
            scale = Rat(prim[i]) / pair[i];
            break;
        }
    bool flip = prim[0] < 0 || (prim[0] == 0 && prim[1] < 0);
    if (flip) scale = -scale;
    GroundField f = e.parts[0].f.field();
    return e.scaled(RatFunc::constant(f, FieldElem(f, scale)));
}

}  // namespace

std::vector<AlgebraElement> invariant_generators(const InvariantPolyDivisor& ipd, const Int& bound) {
    if (!check_invariant(ipd)) fail("not-invariant", "Def 5.8 compatibility fails");
    const PolyhedralDivisor& D = ipd.D;
    const Curve& curve = D.curve;
    const GroundField ef = curve.field;
    const FieldElem delta(ef, Rat(0), Rat(1));  // sqrt(d)
    SemiLinearAction action = cocycle_from_b(ipd.galois, ipd.F);

    // The action must preserve the algebra (Thm 5.10 (i), eq. (2)).
    for (const auto& u : algebra_generators(D, bound)) {
        GradedElement gu = apply_semilinear(action, u);
        if (!contains(D, gu)) fail("not-invariant", "action does not preserve the algebra");
    }

    // Weight orbits within the truncation, keyed by (min ell, lex-min rep).
    auto weights = weights_up_to(D, bound);
    std::set<VecI> seen;
    struct Orbit {
        VecI rep;        // lex-min member
        VecI partner;    // equals rep for fixed weights
        bool fixed;
        Int ell_min;
    };
    std::vector<Orbit> orbits;
    for (const auto& m : weights) {
        if (seen.count(m)) continue;
        VecI gm = ipd.galois.act(m);
        Orbit o;
        o.fixed = gm == m;
        o.rep = lex_less(gm, m) ? gm : m;
        o.partner = lex_less(gm, m) ? m : gm;
        o.ell_min = o.fixed ? weight_ell(D, m) : std::min(weight_ell(D, m), weight_ell(D, gm));
        seen.insert(m);
        seen.insert(gm);
        orbits.push_back(o);
    }
    std::sort(orbits.begin(), orbits.end(), [](const Orbit& a, const Orbit& b) {
        if (a.ell_min != b.ell_min) return a.ell_min < b.ell_min;
        return lex_less(a.rep, b.rep);
    });

    std::vector<AlgebraElement> out;
    if (curve.model == CurveModel::AffineLine)
        out.push_back(AlgebraElement::of({RatFunc::variable(ef), VecI(D.rank(), Int(0))}));
    std::vector<AlgebraElement> emitted;  // positive-weight invariant generators
    std::vector<Int> emitted_ell;         // min ell over parts

    for (const auto& orbit : orbits) {
        OrbitContext ctx{ipd, {}, {}};
        ctx.orbit = {orbit.rep};
        if (!orbit.fixed) ctx.orbit.push_back(orbit.partner);

        // Trace candidates from the graded pieces of the orbit.
        std::vector<AlgebraElement> candidates;
        H0Module rep_piece = graded_piece(D, orbit.rep);
        const std::vector<RatFunc>& rep_gens = rep_piece.line_generators;
        if (rep_gens.empty()) continue;
        for (const auto& w : rep_gens) {
            GradedElement wx{w, orbit.rep};
            GradedElement gwx = apply_semilinear(action, wx);
            if (orbit.fixed) {
                // g(w) = u * w with N(u) = 1.
                RatFunc u = gwx.f / w;
                if (!u.is_constant()) fail("not-invariant", "graded piece is not stable");
                FieldElem uc = u.constant_value();
                if (!(uc * conjugate(uc) == FieldElem(ef, Rat(1))))
                    fail("not-invariant", "unit of norm one expected on a fixed weight");
                FieldElem p = FieldElem(ef, Rat(1)) + uc;
                if (p.is_zero()) p = delta;
                candidates.push_back(
                    AlgebraElement::of({w * RatFunc::constant(ef, p), orbit.rep}));
                if (curve.model == CurveModel::ProjLine) {
                    FieldElem pd = delta * (FieldElem(ef, Rat(1)) - uc);
                    if (!pd.is_zero())
                        candidates.push_back(
                            AlgebraElement::of({w * RatFunc::constant(ef, pd), orbit.rep}));
                }
            } else {
                AlgebraElement a = AlgebraElement::of(wx) + AlgebraElement::of(gwx);
                AlgebraElement b =
                    (AlgebraElement::of(wx) + AlgebraElement::of(gwx).scaled(RatFunc::constant(ef, -FieldElem(ef, Rat(1)))))
                        .scaled(RatFunc::constant(ef, delta));
                candidates.push_back(a);
                candidates.push_back(b);
            }
        }
        for (auto& cand : candidates) {
            cand = normalize_generator(cand);
            for (const auto& part : cand.parts)
                if (!contains(D, part)) fail("consistency", "trace candidate escapes the algebra");
        }

        // Orbit projections of products of previously emitted generators.
        Int l_max = orbit.fixed ? weight_ell(D, orbit.rep)
                                : std::max(weight_ell(D, orbit.rep), weight_ell(D, orbit.partner));
        std::vector<AlgebraElement> products;
        std::vector<AlgebraElement> stack;
        auto dfs = [&](auto&& self, size_t start, const Int& lsum, const AlgebraElement& acc,
                       int factors) -> void {
            if (factors >= 2) {
                AlgebraElement proj = ctx.project(acc);
                if (!proj.is_zero()) products.push_back(proj);
            }
            for (size_t i = start; i < emitted.size(); ++i) {
                Int next = lsum + emitted_ell[i];
                if (next > l_max) continue;
                self(self, i, next, acc * emitted[i], factors + 1);
            }
        };
        AlgebraElement unit;
        unit.parts.push_back({RatFunc::one(ef), VecI(D.rank(), Int(0))});
        dfs(dfs, 0, Int(0), unit, 0);

        // Membership sieve over the invariant coefficient ring.
        std::vector<AlgebraElement> pool = products;
        pool.insert(pool.end(), candidates.begin(), candidates.end());
        ctx.slot_denominator.assign(ctx.orbit.size(), Poly::constant(ef, FieldElem(ef, Rat(1))));
        for (const auto& e : pool)
            for (const auto& part : e.parts) {
                auto it = std::find(ctx.orbit.begin(), ctx.orbit.end(), part.m);
                size_t slot = static_cast<size_t>(it - ctx.orbit.begin());
                ctx.slot_denominator[slot] = lcm_poly(ctx.slot_denominator[slot], part.f.den);
            }

        if (curve.model == CurveModel::AffineLine) {
            PolyModule module(2 * static_cast<int>(ctx.orbit.size()));
            for (const auto& p : products) module.insert(ctx.coords(p));
            for (const auto& cand : candidates) {
                if (module.contains(ctx.coords(cand))) continue;
                module.insert(ctx.coords(cand));
                out.push_back(cand);
                emitted.push_back(cand);
                Int le = weight_ell(D, cand.parts[0].m);
                for (const auto& part : cand.parts) le = std::min(le, weight_ell(D, part.m));
                emitted_ell.push_back(le);
            }
        } else {
            // ProjLine: finite-dimensional Q-linear algebra on coordinates.
            int width = 1;
            for (const auto& e : pool)
                for (const auto& p : ctx.coords(e)) width = std::max(width, p.degree() + 1);
            auto flat = [&](const AlgebraElement& e) {
                VecQ v;
                for (const auto& p : ctx.coords(e))
                    for (int i = 0; i < width; ++i) v.push_back(p.coeff(i).a);
                return v;
            };
            MatQ accepted_cols;
            auto in_span = [&](const VecQ& target) {
                if (accepted_cols.empty()) return is_zero(target);
                MatQ rows(target.size(), VecQ(accepted_cols.size()));
                for (size_t j = 0; j < accepted_cols.size(); ++j)
                    for (size_t i = 0; i < target.size(); ++i) rows[i][j] = accepted_cols[j][i];
                return solve_linear(rows, target).has_value();
            };
            for (const auto& p : products) accepted_cols.push_back(flat(p));
            for (const auto& cand : candidates) {
                VecQ v = flat(cand);
                if (in_span(v)) continue;
                accepted_cols.push_back(v);
                out.push_back(cand);
                emitted.push_back(cand);
                Int le = weight_ell(D, cand.parts[0].m);
                for (const auto& part : cand.parts) le = std::min(le, weight_ell(D, part.m));
                emitted_ell.push_back(le);
            }
        }
    }

    // Every emitted generator is a fixed point.
    for (const auto& e : out) {
        if (apply_semilinear(action, e) != e) fail("consistency", "emitted generator is not invariant");
    }
    return out;
}

bool speiser_span_check(const InvariantPolyDivisor& ipd, const std::vector<AlgebraElement>& gens,
                        const Int& bound) {
    const PolyhedralDivisor& D = ipd.D;
    const GroundField ef = D.curve.field;
    std::vector<GradedElement> comps;
    for (const auto& g : gens)
        for (const auto& part : g.parts)
            if (!is_zero(part.m)) comps.push_back(part);

    for (const auto& m : weights_up_to(D, bound)) {
        H0Module piece = graded_piece(D, m);
        // Products of generator components with weight sum exactly m.
        RatFunc affine_acc;
        bool affine_any = false;
        FuncSpan span(ef);
        auto absorb = [&](const RatFunc& prod) {
            if (D.curve.model == CurveModel::AffineLine) {
                affine_acc = affine_any ? frac_gcd(affine_acc, prod) : prod;
                affine_any = true;
            } else {
                span.add(prod);
            }
        };
        auto dfs = [&](auto&& self, size_t start, const VecI& remaining, const RatFunc& acc) -> void {
            if (is_zero(remaining)) {
                absorb(acc);
                return;
            }
            for (size_t i = start; i < comps.size(); ++i) {
                VecI rest = sub(remaining, comps[i].m);
                bool ok = is_zero(rest);
                if (!ok) {
                    ok = true;
                    for (const auto& r : D.sigma.rays())
                        if (dot(r, rest) < 0) ok = false;
                }
                if (!ok) continue;
                self(self, i, rest, acc * comps[i].f);
            }
        };
        dfs(dfs, 0, m, RatFunc::one(ef));
        if (D.curve.model == CurveModel::AffineLine) {
            if (!affine_any) return false;
            if (!(affine_acc / piece.line_generators[0]).is_constant()) return false;
        } else {
            for (const auto& t : piece.line_generators)
                if (!span.contains(t)) return false;
        }
    }
    return true;
}

bool conjugacy_witness_check(const InvariantPolyDivisor& ipd, const InvariantPolyDivisor& ipd2,
                             const IsoWitness& witness, int samples) {
    if (ipd.D.curve != ipd2.D.curve) fail("invalid-witness", "different extended curves");
    if (!(ipd.D == ipd2.D)) fail("invalid-witness", "conjugacy compares structures over the same divisor");
    validate_galois(ipd.galois, ipd.D);
    validate_galois(ipd2.galois, ipd2.D);
    const Curve& curve = ipd.D.curve;

    // The witness must be an automorphism datum of A[C, D] (Prop 4.5).
    if (!iso_witness_check(ipd.D, ipd2.D, witness, samples)) return false;

    // (a) phi commutes with the two point actions (conjugation on both sides).
    std::vector<Point> pts;
    for (const auto& [z, delta] : ipd.D.coeffs) pts.push_back(z);
    std::mt19937_64 rng(0xc0de5u);
    std::uniform_int_distribution<long> small(-3, 3);
    while (static_cast<int>(pts.size()) < static_cast<int>(ipd.D.coeffs.size()) + samples) {
        FieldElem c0(curve.field, Rat(Int(small(rng))), Rat(Int(small(rng))));
        Poly q(curve.field, {-c0, FieldElem(curve.field, Rat(1))});
        pts.push_back(Point::finite(q));
    }
    for (const auto& z : pts) {
        Point lhs = image_point(witness.curve_auto, conjugate_point(z), curve);
        Point rhs = conjugate_point(image_point(witness.curve_auto, z, curve));
        if (!(lhs == rhs)) return false;
    }

    // (b) F intertwines the lattice actions.
    if (mat_mul(witness.lattice_auto, ipd.galois.lattice_action) !=
        mat_mul(ipd2.galois.lattice_action, witness.lattice_auto))
        return false;

    // (c) the principal-divisor identity on the Hilbert basis of the weight cone.
    auto hb = weight_cone_hilbert_basis(ipd.D);
    Mobius phi_inv = witness.curve_auto.inverse();
    auto pull = [&](const QDivisor& E) { return pullback_divisor(phi_inv, E); };
    for (const auto& m : hb) {
        VecI gm = ipd.galois.act(m);
        VecI Fm = mat_apply(witness.lattice_auto, m);
        VecI Fgm = mat_apply(witness.lattice_auto, gm);
        QDivisor lhs = ipd.F.divisor(gm, curve) - conjugate_divisor(ipd.F.divisor(m, curve));
        QDivisor rhs = conjugate_divisor(pull(witness.principal.divisor(m, curve))) +
                       pull(ipd2.F.divisor(Fgm, curve)) - witness.principal.divisor(gm, curve) -
                       conjugate_divisor(pull(ipd2.F.divisor(Fm, curve)));
        if (!(lhs == rhs)) return false;
    }
    return true;
}

}  // namespace pdiv
