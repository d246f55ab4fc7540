#include "pdiv/convex.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>

#include "pdiv/error.hpp"

namespace pdiv {

namespace {

std::vector<VecI> sorted_unique(std::vector<VecI> v) {
    std::sort(v.begin(), v.end(), [](const VecI& a, const VecI& b) { return lex_less(a, b); });
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

std::vector<VecQ> sorted_unique_q(std::vector<VecQ> v) {
    std::sort(v.begin(), v.end(), [](const VecQ& a, const VecQ& b) { return lex_less(a, b); });
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

// Canonical description of the polar side: returns simultaneously the
// irredundant facet normals of cone(gens) and a generating set of its dual.
std::vector<VecI> dual_description(int rank, const std::vector<VecI>& gens_in) {
    std::vector<VecI> gens;
    for (const auto& g : gens_in) {
        if (is_zero(g)) continue;
        gens.push_back(primitive(g));
    }
    gens = sorted_unique(std::move(gens));

    std::vector<VecI> out;
    if (gens.empty()) {
        for (int i = 0; i < rank; ++i) {
            VecI e(rank, Int(0));
            e[i] = 1;
            out.push_back(e);
            e[i] = -1;
            out.push_back(e);
        }
        return sorted_unique(std::move(out));
    }

    MatI gen_rows(gens.begin(), gens.end());
    std::vector<VecI> complement = kernel_int(gen_rows);
    int s = rank - static_cast<int>(complement.size());

    for (const auto& w : complement) {
        out.push_back(w);
        VecI neg(w.size());
        for (size_t i = 0; i < w.size(); ++i) neg[i] = -w[i];
        out.push_back(neg);
    }

    // Candidate facet normals from (s-1)-subsets of the generators.
    size_t k = gens.size();
    size_t choose = static_cast<size_t>(s - 1);
    std::vector<size_t> idx(choose);
    auto emit_candidate = [&](const std::vector<size_t>& subset) {
        MatQ m;
        for (size_t i : subset) m.push_back(to_q(gens[i]));
        for (const auto& w : complement) m.push_back(to_q(w));
        auto ker = kernel_q(m.empty() ? MatQ{VecQ(rank, Rat(0))} : m);
        if (ker.size() != 1) return;
        const VecI& w = ker[0];
        bool pos = true, neg = true;
        for (const auto& g : gens) {
            Int d = dot(w, g);
            if (d < 0) pos = false;
            if (d > 0) neg = false;
        }
        if (pos && neg) return;  // orthogonal to everything: lineality, handled above
        if (pos) out.push_back(w);
        if (neg) {
            VecI nw(w.size());
            for (size_t i = 0; i < w.size(); ++i) nw[i] = -w[i];
            out.push_back(nw);
        }
    };

    std::vector<size_t> subset;
    auto enumerate = [&](auto&& self, size_t start) -> void {
        if (subset.size() == choose) {
            emit_candidate(subset);
            return;
        }
        for (size_t i = start; i + (choose - subset.size()) <= k; ++i) {
            subset.push_back(i);
            self(self, i + 1);
            subset.pop_back();
        }
    };
    enumerate(enumerate, 0);
    return sorted_unique(std::move(out));
}

int rank_of(const std::vector<VecI>& vs) {
    if (vs.empty()) return 0;
    return rank_q(to_q(MatI(vs.begin(), vs.end())));
}

}  // namespace

Cone Cone::from_rays(int rank, const std::vector<VecI>& gens) {
    Cone c;
    c.rank_ = rank;
    c.facets_ = dual_description(rank, gens);
    c.rays_ = dual_description(rank, c.facets_);
    return c;
}

Cone Cone::from_inequalities(int rank, const std::vector<VecI>& normals) {
    Cone c;
    c.rank_ = rank;
    c.rays_ = dual_description(rank, normals);
    c.facets_ = dual_description(rank, c.rays_);
    return c;
}

Cone Cone::full_orthant(int rank) {
    std::vector<VecI> rays;
    for (int i = 0; i < rank; ++i) {
        VecI e(rank, Int(0));
        e[i] = 1;
        rays.push_back(e);
    }
    return from_rays(rank, rays);
}

bool Cone::contains(const VecI& v) const {
    for (const auto& f : facets_)
        if (dot(f, v) < 0) return false;
    return true;
}

bool Cone::contains(const VecQ& v) const {
    for (const auto& f : facets_)
        if (dot(f, v) < 0) return false;
    return true;
}

bool Cone::is_pointed() const { return rank_of(facets_) == rank_; }
bool Cone::is_full_dimensional() const { return rank_of(rays_) == rank_; }
int Cone::dim() const { return rank_of(rays_); }

Cone dual_cone(const Cone& c) {
    // Rays of the dual are the facet normals of c and vice versa.
    return Cone::from_rays(c.rank(), c.facets());
}

bool TailedPolyhedron::is_cone_only() const {
    return vertices.size() == 1 && is_zero(vertices[0]);
}

TailedPolyhedron sigma_polyhedron(const Cone& sigma) {
    TailedPolyhedron p;
    p.tail = sigma;
    p.vertices = {VecQ(sigma.rank(), Rat(0))};
    return p;
}

namespace {

// Homogenized facet description of conv(points) + tail.
std::vector<Halfspace> facets_of(const std::vector<VecQ>& points, const Cone& tail) {
    int n = tail.rank();
    std::vector<VecI> lifted;
    for (const auto& v : points) {
        VecQ h = v;
        h.push_back(Rat(1));
        lifted.push_back(primitive(h));
    }
    for (const auto& r : tail.rays()) {
        VecI h = r;
        h.push_back(Int(0));
        lifted.push_back(h);
    }
    std::vector<Halfspace> out;
    for (const auto& f : dual_description(n + 1, lifted)) {
        VecI normal(f.begin(), f.end() - 1);
        if (is_zero(normal)) continue;  // the hyperplane at infinity
        out.push_back(Halfspace{normal, Rat(-f.back())});
    }
    std::sort(out.begin(), out.end(), [](const Halfspace& a, const Halfspace& b) {
        if (a.normal != b.normal) return lex_less(a.normal, b.normal);
        return a.rhs < b.rhs;
    });
    return out;
}

// Basic feasible points of an inequality system whose normals span.
std::vector<VecQ> vertices_from_halfspaces(const std::vector<Halfspace>& cs, int n) {
    std::vector<VecQ> verts;
    size_t k = cs.size();
    std::vector<size_t> pick(n);
    auto rec = [&](auto&& self, size_t start, int depth) -> void {
        if (depth == n) {
            MatQ A;
            VecQ b;
            for (int i = 0; i < n; ++i) {
                A.push_back(to_q(cs[pick[i]].normal));
                b.push_back(cs[pick[i]].rhs);
            }
            if (rank_q(A) != n) return;
            auto x = solve_linear(A, b);
            if (!x) return;
            for (const auto& c : cs)
                if (dot(c.normal, *x) < c.rhs) return;
            verts.push_back(*x);
            return;
        }
        for (size_t i = start; i < k; ++i) {
            pick[depth] = i;
            self(self, i + 1, depth + 1);
        }
    };
    rec(rec, 0, 0);
    return sorted_unique_q(std::move(verts));
}

}  // namespace

TailedPolyhedron make_polyhedron(const std::vector<VecQ>& points, const Cone& tail) {
    if (points.empty()) fail("infeasible", "polyhedron needs at least one point");
    if (!tail.is_pointed()) fail("not-pointed", "tail cone must be strongly convex");
    int n = tail.rank();
    auto facets = facets_of(points, tail);
    TailedPolyhedron p;
    p.tail = tail;
    p.vertices = vertices_from_halfspaces(facets, n);
    if (p.vertices.empty()) fail("consistency", "vertex enumeration lost the polyhedron");
    // The recession cone of the facet system must be the declared tail.
    std::vector<VecI> normals;
    for (const auto& f : facets) normals.push_back(f.normal);
    if (Cone::from_inequalities(n, normals) != tail)
        fail("tail-mismatch", "tail cone is not the recession cone of the polyhedron");
    return p;
}

std::vector<Halfspace> polyhedron_halfspaces(const TailedPolyhedron& p) {
    return facets_of(p.vertices, p.tail);
}

bool polyhedron_contains(const TailedPolyhedron& p, const VecQ& x) {
    for (const auto& h : polyhedron_halfspaces(p))
        if (dot(h.normal, x) < h.rhs) return false;
    return true;
}

TailedPolyhedron minkowski_sum(const TailedPolyhedron& p, const TailedPolyhedron& q,
                               const Rat& a, const Rat& b) {
    if (p.tail != q.tail) fail("tail-mismatch", "Minkowski sum of polyhedra with different tails");
    if (a < 0 || b < 0) fail("consistency", "Minkowski weights must be nonnegative");
    std::vector<VecQ> cands;
    for (const auto& v : p.vertices)
        for (const auto& w : q.vertices) cands.push_back(addq(scaleq(v, a), scaleq(w, b)));
    return make_polyhedron(cands, p.tail);
}

Rat support_min(const VecQ& m, const TailedPolyhedron& p) {
    for (const auto& r : p.tail.rays())
        if (dot(r, m) < 0)
            fail("unbounded", "support minimum is unbounded: direction outside the dual tail");
    bool first = true;
    Rat best = 0;
    for (const auto& v : p.vertices) {
        Rat val = dot(m, v);
        if (first || val < best) {
            best = val;
            first = false;
        }
    }
    return best;
}

Rat support_min(const VecI& m, const TailedPolyhedron& p) { return support_min(to_q(m), p); }

TailedPolyhedron halfspaces_to_polyhedron(const std::vector<Halfspace>& constraints) {
    if (constraints.empty()) fail("not-pointed", "empty constraint system is not pointed");
    int n = static_cast<int>(constraints[0].normal.size());
    std::vector<VecI> normals;
    for (const auto& c : constraints) normals.push_back(c.normal);
    if (rank_of(normals) != n)
        fail("not-pointed", "constraint normals do not span: region has no vertex");
    auto verts = vertices_from_halfspaces(constraints, n);
    if (verts.empty()) fail("infeasible", "constraint region is empty");
    TailedPolyhedron p;
    p.vertices = verts;
    p.tail = Cone::from_inequalities(n, normals);
    // Drop interior redundancy: rebuild canonically.
    return make_polyhedron(p.vertices, p.tail);
}

// ---- Hilbert bases ---------------------------------------------------------

namespace {

// Pulling triangulation into simplicial ray subsets.
void triangulate(const std::vector<VecI>& rays, int dim,
                 std::vector<std::vector<VecI>>& out) {
    if (static_cast<int>(rays.size()) == dim) {
        out.push_back(rays);
        return;
    }
    const VecI& apex = rays.front();
    int rank = static_cast<int>(apex.size());
    auto normals = dual_description(rank, rays);
    std::set<VecI> normal_set(normals.begin(), normals.end());
    for (const auto& w : normals) {
        VecI neg(w.size());
        for (size_t i = 0; i < w.size(); ++i) neg[i] = -w[i];
        if (normal_set.count(neg)) continue;     // lineality pair, not a facet
        if (dot(w, apex) == 0) continue;         // facet containing the apex
        std::vector<VecI> face;
        for (const auto& g : rays)
            if (dot(w, g) == 0) face.push_back(g);
        std::vector<std::vector<VecI>> sub;
        triangulate(face, dim - 1, sub);
        for (auto& simplex : sub) {
            simplex.push_back(apex);
            out.push_back(std::move(simplex));
        }
    }
}

// Lattice points in the half-open parallelepiped spanned by the simplex rays.
std::vector<VecI> parallelepiped_points(const std::vector<VecI>& simplex) {
    int r = static_cast<int>(simplex[0].size());
    int s = static_cast<int>(simplex.size());

    // Basis of the saturated lattice span(simplex) cap Z^r.
    std::vector<VecI> lattice_basis;
    if (s == r) {
        lattice_basis = identity_mat(r);
    } else {
        MatI rows(simplex.begin(), simplex.end());
        auto complement = kernel_int(rows);
        lattice_basis = kernel_int(MatI(complement.begin(), complement.end()));
    }
    assert(static_cast<int>(lattice_basis.size()) == s);

    // Coordinates of the rays in that basis (integral by saturation).
    MatQ basis_cols(r, VecQ(s));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < s; ++j) basis_cols[i][j] = Rat(lattice_basis[j][i]);
    MatI gen(s, VecI(s));
    for (int j = 0; j < s; ++j) {
        auto sol = solve_linear(basis_cols, to_q(simplex[j]));
        assert(sol);
        for (int i = 0; i < s; ++i) {
            assert(is_integer((*sol)[i]));
            gen[i][j] = rat_num((*sol)[i]);
        }
    }

    auto smith = smith_normal_form(gen);
    if (smith.rank != s) fail("consistency", "degenerate simplex in triangulation");
    // G = U^-1 S V^-1, so G^-1 Z^s = V S^-1 Z^s; enumerate representatives.
    std::vector<Int> diag(s);
    Int total = 1;
    for (int i = 0; i < s; ++i) {
        diag[i] = smith.S[i][i];
        total *= diag[i];
    }
    std::vector<VecI> points;
    std::vector<Int> counter(s, Int(0));
    MatQ genq = to_q(gen);
    while (true) {
        VecQ t(s, Rat(0));
        for (int i = 0; i < s; ++i) {
            if (counter[i] == 0) continue;
            Rat c(counter[i], diag[i]);
            for (int j = 0; j < s; ++j) t[j] += Rat(smith.V[j][i]) * c;
        }
        for (auto& x : t) x -= Rat(floor_rat(x));  // into [0,1)
        VecI x(r, Int(0));
        VecQ xs(s, Rat(0));
        for (int i = 0; i < s; ++i)
            for (int j = 0; j < s; ++j) xs[i] += genq[i][j] * t[j];
        bool integral = true;
        for (const auto& v : xs) integral &= is_integer(v);
        assert(integral);
        for (int i = 0; i < r; ++i) {
            Rat acc = 0;
            for (int j = 0; j < s; ++j) acc += Rat(lattice_basis[j][i]) * xs[j];
            assert(is_integer(acc));
            x[i] = rat_num(acc);
        }
        if (!is_zero(x)) points.push_back(x);
        int pos = s - 1;
        while (pos >= 0) {
            counter[pos] += 1;
            if (counter[pos] < diag[pos]) break;
            counter[pos] = 0;
            --pos;
        }
        if (pos < 0) break;
    }
    return points;
}

}  // namespace

std::vector<VecI> hilbert_basis(const Cone& c) {
    if (c.is_zero()) return {};
    if (!c.is_pointed()) fail("not-pointed", "Hilbert basis requires a strongly convex cone");
    const auto& rays = c.rays();
    int dim = c.dim();

    std::vector<std::vector<VecI>> simplices;
    triangulate(rays, dim, simplices);

    std::vector<VecI> candidates(rays.begin(), rays.end());
    for (const auto& simplex : simplices)
        for (auto& p : parallelepiped_points(simplex)) candidates.push_back(std::move(p));
    candidates = sorted_unique(std::move(candidates));

    // Irreducibility sieve ordered by a positive functional.
    auto value = [&](const VecI& x) {
        Int v = 0;
        for (const auto& f : c.facets()) v += dot(f, x);
        return v;
    };
    std::stable_sort(candidates.begin(), candidates.end(),
                     [&](const VecI& a, const VecI& b) { return value(a) < value(b); });
    std::vector<VecI> basis;
    for (const auto& x : candidates) {
        bool reducible = false;
        for (const auto& b : basis) {
            VecI rest = sub(x, b);
            if (is_zero(rest)) continue;
            if (c.contains(rest)) {
                reducible = true;
                break;
            }
        }
        if (!reducible) basis.push_back(x);
    }
    return sorted_unique(std::move(basis));
}

Rat lemma211_min(const std::vector<std::pair<VecI, Int>>& pairs, const VecI& m) {
    if (pairs.empty()) fail("consistency", "lemma211_min needs at least one pair");
    int n = static_cast<int>(m.size());
    int r = static_cast<int>(pairs.size());

    std::vector<VecI> ms;
    for (const auto& [mi, ei] : pairs) {
        if (is_zero(mi)) fail("degenerate-weights", "zero weight vector");
        ms.push_back(mi);
    }
    Cone weight_cone = Cone::from_rays(n, ms);
    if (!weight_cone.contains(m))
        fail("unbounded", "direction lies outside the cone of the weight vectors");

    // Rows of the inequality system for p^{-1}(L) cap Q^r_{>=0} in Z^r.
    std::vector<VecI> normals;
    for (int i = 0; i < r; ++i) {
        VecI e(r, Int(0));
        e[i] = 1;
        normals.push_back(e);
    }
    // p(s) must lie on the line through m ...
    MatI m_row{m};
    for (const auto& w : kernel_int(m_row)) {
        VecI row(r);
        for (int i = 0; i < r; ++i) row[i] = dot(w, pairs[i].first);
        VecI neg(row.size());
        for (size_t i = 0; i < row.size(); ++i) neg[i] = -row[i];
        normals.push_back(row);
        normals.push_back(neg);
    }
    // ... on the nonnegative side.
    {
        VecI row(r);
        for (int i = 0; i < r; ++i) row[i] = dot(m, pairs[i].first);
        normals.push_back(row);
    }
    Cone preimage = Cone::from_inequalities(r, normals);

    bool found = false;
    Rat best = 0;
    for (const auto& s : hilbert_basis(preimage)) {
        VecI image(n, Int(0));
        for (int i = 0; i < r; ++i) image = add(image, scale(pairs[i].first, s[i]));
        if (is_zero(image)) continue;
        // image = lambda * m with a positive integer lambda.
        Int lambda = 0;
        for (int j = 0; j < n; ++j) {
            if (m[j] == 0) {
                if (image[j] != 0) fail("consistency", "Hilbert basis image not proportional to m");
                continue;
            }
            Int q = image[j] / m[j];
            if (q * m[j] != image[j] || (lambda != 0 && q != lambda))
                fail("consistency", "Hilbert basis image not proportional to m");
            lambda = q;
        }
        if (lambda <= 0) fail("consistency", "nonpositive proportionality factor");
        Int weighted = 0;
        for (int i = 0; i < r; ++i) weighted += s[i] * pairs[i].second;
        Rat ratio(weighted, lambda);
        if (!found || ratio < best) {
            best = ratio;
            found = true;
        }
    }
    if (!found) fail("consistency", "empty starred Hilbert basis");
    return -best;
}

std::vector<VecI> cone_lattice_points_by_coordsum(const Cone& c, const Int& bound) {
    int n = c.rank();
    std::vector<VecI> out;
    // The cone is pointed, so |x_i| is bounded by the coordinate-sum bound
    // only on the nonnegative orthant part; enumerate a box large enough for
    // test cones (coordinates in [-bound, bound]).
    VecI x(n, Int(0));
    long b = static_cast<long>(bound);
    auto rec = [&](auto&& self, int depth) -> void {
        if (depth == n) {
            Int sum = 0;
            for (const auto& v : x) sum += abs(v);
            if (sum == 0 || sum > bound) return;
            if (c.contains(x)) out.push_back(x);
            return;
        }
        for (long v = -b; v <= b; ++v) {
            x[depth] = v;
            self(self, depth + 1);
        }
    };
    rec(rec, 0);
    return out;
}

}  // namespace pdiv
