#pragma once

#include <optional>
#include <vector>

#include "pdiv/rational.hpp"

namespace pdiv {

using VecI = std::vector<Int>;
using VecQ = std::vector<Rat>;
using MatI = std::vector<VecI>;  // row-major
using MatQ = std::vector<VecQ>;

Int dot(const VecI& a, const VecI& b);
Rat dot(const VecQ& a, const VecQ& b);
Rat dot(const VecI& a, const VecQ& b);

VecQ to_q(const VecI& v);
MatQ to_q(const MatI& m);

VecI add(const VecI& a, const VecI& b);
VecI sub(const VecI& a, const VecI& b);
VecI scale(const VecI& a, const Int& c);
VecQ addq(const VecQ& a, const VecQ& b);
VecQ scaleq(const VecQ& a, const Rat& c);

bool is_zero(const VecI& v);
bool is_zero(const VecQ& v);

// Scale a rational vector by a positive rational so it becomes a primitive
// integer vector (direction preserved). Zero maps to zero.
VecI primitive(const VecQ& v);
VecI primitive(const VecI& v);

// Rank via exact Gaussian elimination.
int rank_q(MatQ m);

// Solve A x = b exactly; any solution if the system is consistent.
std::optional<VecQ> solve_linear(const MatQ& A, const VecQ& b);

// Canonical basis of ker(A) over Q (reduced echelon parametrization),
// each vector scaled primitive-integer with first nonzero entry positive.
std::vector<VecI> kernel_q(const MatQ& A);

Rat det_q(MatQ m);
Int det_int(const MatI& m);

std::optional<MatQ> inverse_q(const MatQ& A);

// Apply integer matrix (rows) to a vector: (M v)_i = <row_i, v>.
VecI mat_apply(const MatI& M, const VecI& v);
MatI mat_mul(const MatI& A, const MatI& B);
MatI identity_mat(int n);

// Row-style Hermite normal form of the lattice spanned by the rows:
// pivot columns strictly increasing, pivots positive, entries above each
// pivot reduced into [0, pivot). Zero rows removed. Unique per lattice.
MatI hnf_rows(MatI m);

// Smith normal form: returns (S, U, V) with S = U * A * V diagonal,
// U and V unimodular, diagonal entries nonnegative with d_i | d_{i+1}.
struct SmithResult {
    MatI S, U, V;
    int rank = 0;
};
SmithResult smith_normal_form(MatI A);

// Saturated basis of {x integer : A x = 0} (canonical via HNF).
std::vector<VecI> kernel_int(const MatI& A);

bool lex_less(const VecI& a, const VecI& b);
bool lex_less(const VecQ& a, const VecQ& b);

}  // namespace pdiv
