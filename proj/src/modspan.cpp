#include "pdiv/modspan.hpp"

#include <cassert>

namespace pdiv {

RatFunc frac_gcd(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    Poly den = (a.den * b.den);
    Poly g = gcd_poly(a.den, b.den);
    den = divmod(den, g).first;  // lcm of the denominators
    Poly na = a.num * divmod(den, a.den).first;
    Poly nb = b.num * divmod(den, b.den).first;
    return RatFunc(gcd_poly(na, nb), den);
}

std::optional<std::vector<FieldElem>> field_solve(const std::vector<std::vector<FieldElem>>& basis_cols,
                                                  const std::vector<FieldElem>& target,
                                                  const GroundField& f) {
    size_t rows = target.size(), cols = basis_cols.size();
    std::vector<std::vector<FieldElem>> aug(rows, std::vector<FieldElem>(cols + 1, FieldElem(f, Rat(0))));
    for (size_t j = 0; j < cols; ++j) {
        assert(basis_cols[j].size() == rows);
        for (size_t i = 0; i < rows; ++i) aug[i][j] = basis_cols[j][i];
    }
    for (size_t i = 0; i < rows; ++i) aug[i][cols] = target[i];

    std::vector<int> pivot_col;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t sel = r;
        while (sel < rows && aug[sel][c].is_zero()) ++sel;
        if (sel == rows) continue;
        std::swap(aug[sel], aug[r]);
        FieldElem inv = aug[r][c].inverse();
        for (size_t j = c; j <= cols; ++j) aug[r][j] = aug[r][j] * inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || aug[i][c].is_zero()) continue;
            FieldElem v = aug[i][c];
            for (size_t j = c; j <= cols; ++j) aug[i][j] = aug[i][j] - v * aug[r][j];
        }
        pivot_col.push_back(static_cast<int>(c));
        ++r;
    }
    for (size_t i = r; i < rows; ++i)
        if (!aug[i][cols].is_zero()) return std::nullopt;
    std::vector<FieldElem> sol(cols, FieldElem(f, Rat(0)));
    for (size_t k = 0; k < pivot_col.size(); ++k) sol[pivot_col[k]] = aug[k][cols];
    return sol;
}

std::vector<FieldElem> FuncSpan::coords(const RatFunc& v, const Poly& denom, int width) const {
    // v * denom must be polynomial of degree < width.
    RatFunc scaled = v * RatFunc(denom);
    assert(scaled.den.is_constant());
    Poly p = scaled.num.scaled(scaled.den.coeff(0).inverse());
    assert(p.degree() < width);
    std::vector<FieldElem> out(width, FieldElem(field_, Rat(0)));
    for (int i = 0; i <= p.degree(); ++i) out[i] = p.coeff(i);
    return out;
}

bool FuncSpan::add(const RatFunc& v) {
    if (v.is_zero()) return false;
    if (contains(v)) return false;
    members_.push_back(v);
    return true;
}

bool FuncSpan::contains(const RatFunc& v) const {
    if (v.is_zero()) return true;
    if (members_.empty()) return false;
    Poly denom = v.den;
    for (const auto& m : members_) {
        Poly g = gcd_poly(denom, m.den);
        denom = divmod(denom * m.den, g).first;
    }
    int width = 0;
    auto deg_of = [&](const RatFunc& x) {
        return x.num.degree() + denom.degree() - x.den.degree();
    };
    for (const auto& m : members_) width = std::max(width, deg_of(m) + 1);
    width = std::max(width, deg_of(v) + 1);
    std::vector<std::vector<FieldElem>> cols;
    for (const auto& m : members_) cols.push_back(coords(m, denom, width));
    return field_solve(cols, coords(v, denom, width), field_).has_value();
}

bool span_equals(const std::vector<RatFunc>& a, const std::vector<RatFunc>& b, GroundField f) {
    FuncSpan sa(f), sb(f);
    for (const auto& x : a) sa.add(x);
    for (const auto& x : b) sb.add(x);
    for (const auto& x : a)
        if (!sb.contains(x)) return false;
    for (const auto& x : b)
        if (!sa.contains(x)) return false;
    return true;
}

}  // namespace pdiv
