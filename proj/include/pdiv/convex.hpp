#pragma once

#include <vector>

#include "pdiv/linalg.hpp"

namespace pdiv {

// Halfspace <normal, v> >= rhs.
struct Halfspace {
    VecI normal;
    Rat rhs;

    bool operator==(const Halfspace&) const = default;
};

// Polyhedral cone with both descriptions kept canonical: `rays` generate the
// cone (extreme rays when pointed, plus +-pairs spanning any lineality) and
// `facets` are the irredundant inequality normals. Both lists are primitive,
// deduplicated and lex-sorted, so structural equality is set equality.
class Cone {
public:
    Cone() = default;

    static Cone from_rays(int rank, const std::vector<VecI>& gens);
    static Cone from_inequalities(int rank, const std::vector<VecI>& normals);
    static Cone zero(int rank) { return from_rays(rank, {}); }
    static Cone full_orthant(int rank);

    int rank() const { return rank_; }
    const std::vector<VecI>& rays() const { return rays_; }
    const std::vector<VecI>& facets() const { return facets_; }

    bool contains(const VecI& v) const;
    bool contains(const VecQ& v) const;
    bool is_pointed() const;
    bool is_full_dimensional() const;
    bool is_zero() const { return rays_.empty(); }
    int dim() const;

    bool operator==(const Cone&) const = default;

private:
    int rank_ = 0;
    std::vector<VecI> rays_;
    std::vector<VecI> facets_;
};

// Swaps the two descriptions; exact involution.
Cone dual_cone(const Cone& c);

// Polyhedron Q + sigma with canonical vertex list (exactly the extreme
// points, sorted) and tail cone sigma. Always pointed: sigma is strongly
// convex. sigma itself is encoded as the single vertex 0.
struct TailedPolyhedron {
    std::vector<VecQ> vertices;
    Cone tail;

    bool operator==(const TailedPolyhedron&) const = default;
    bool is_cone_only() const;
};

// Canonical polyhedron conv(points) + tail (points may be redundant).
TailedPolyhedron make_polyhedron(const std::vector<VecQ>& points, const Cone& tail);

TailedPolyhedron sigma_polyhedron(const Cone& sigma);

// Irredundant inequality description, canonical order.
std::vector<Halfspace> polyhedron_halfspaces(const TailedPolyhedron& p);

bool polyhedron_contains(const TailedPolyhedron& p, const VecQ& x);

// a*p + b*q (Minkowski); tails must agree; a, b >= 0.
TailedPolyhedron minkowski_sum(const TailedPolyhedron& p, const TailedPolyhedron& q,
                               const Rat& a, const Rat& b);

// min over p of <m, .>; requires m in the dual of the tail cone.
Rat support_min(const VecQ& m, const TailedPolyhedron& p);
Rat support_min(const VecI& m, const TailedPolyhedron& p);

// Vertex description of {v : <normal_i, v> >= rhs_i}. The normals must span
// (pointed region) and the region must be nonempty.
TailedPolyhedron halfspaces_to_polyhedron(const std::vector<Halfspace>& constraints);

// Minimal generating set of cone `c` intersected with Z^rank (the cone must
// be strongly convex). Sorted canonically.
std::vector<VecI> hilbert_basis(const Cone& c);

// Support minimum of the polyhedron {<m_i, v> >= -e_i} in direction m,
// computed through the Hilbert basis of p^{-1}(L) cap Q^r_{>=0} in Z^r
// (p maps the canonical basis onto the m_i, L the ray through m). The m_i
// must generate the lattice and m must be primitive and lie in cone(m_i).
Rat lemma211_min(const std::vector<std::pair<VecI, Int>>& pairs, const VecI& m);

// Lattice points of the cone with coordinate sum <= bound (testing helper
// for generation/minimality checks).
std::vector<VecI> cone_lattice_points_by_coordsum(const Cone& c, const Int& bound);

}  // namespace pdiv
