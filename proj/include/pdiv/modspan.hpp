#pragma once

#include <optional>
#include <vector>

#include "pdiv/curve.hpp"

namespace pdiv {

// gcd of principal fractional k[t]-ideals: (a) + (b) = (frac_gcd(a, b)).
RatFunc frac_gcd(const RatFunc& a, const RatFunc& b);

// Solve sum c_j basis_j = target for field coefficients; nullopt when the
// target is outside the span.
std::optional<std::vector<FieldElem>> field_solve(const std::vector<std::vector<FieldElem>>& basis_cols,
                                                  const std::vector<FieldElem>& target,
                                                  const GroundField& f);

// Finite-dimensional span of rational functions over the coefficient field
// (the ProjLine graded pieces). Incremental echelon form.
class FuncSpan {
public:
    explicit FuncSpan(GroundField f) : field_(f) {}

    // Returns true when the element enlarged the span.
    bool add(const RatFunc& v);
    bool contains(const RatFunc& v) const;
    int dim() const { return static_cast<int>(members_.size()); }
    const std::vector<RatFunc>& members() const { return members_; }

private:
    std::vector<FieldElem> coords(const RatFunc& v, const Poly& denom, int width) const;

    GroundField field_;
    std::vector<RatFunc> members_;
};

bool span_equals(const std::vector<RatFunc>& a, const std::vector<RatFunc>& b, GroundField f);

}  // namespace pdiv
