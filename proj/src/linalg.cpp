#include "pdiv/linalg.hpp"

#include <algorithm>
#include <cassert>

namespace pdiv {

Int dot(const VecI& a, const VecI& b) {
    assert(a.size() == b.size());
    Int s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Rat dot(const VecQ& a, const VecQ& b) {
    assert(a.size() == b.size());
    Rat s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Rat dot(const VecI& a, const VecQ& b) {
    assert(a.size() == b.size());
    Rat s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += Rat(a[i]) * b[i];
    return s;
}

VecQ to_q(const VecI& v) {
    VecQ out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = Rat(v[i]);
    return out;
}

MatQ to_q(const MatI& m) {
    MatQ out;
    out.reserve(m.size());
    for (const auto& r : m) out.push_back(to_q(r));
    return out;
}

VecI add(const VecI& a, const VecI& b) {
    VecI out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

VecI sub(const VecI& a, const VecI& b) {
    VecI out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

VecI scale(const VecI& a, const Int& c) {
    VecI out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] * c;
    return out;
}

VecQ addq(const VecQ& a, const VecQ& b) {
    VecQ out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

VecQ scaleq(const VecQ& a, const Rat& c) {
    VecQ out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] * c;
    return out;
}

bool is_zero(const VecI& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

bool is_zero(const VecQ& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

VecI primitive(const VecQ& v) {
    Int l = 1;
    for (const auto& x : v) l = lcm_int(l, rat_den(x));
    VecI w(v.size());
    Int g = 0;
    for (size_t i = 0; i < v.size(); ++i) {
        w[i] = rat_num(v[i]) * (l / rat_den(v[i]));
        g = gcd_int(g, w[i]);
    }
    if (g > 1)
        for (auto& x : w) x /= g;
    return w;
}

VecI primitive(const VecI& v) {
    Int g = 0;
    for (const auto& x : v) g = gcd_int(g, x);
    if (g <= 1) return v;
    VecI w(v.size());
    for (size_t i = 0; i < v.size(); ++i) w[i] = v[i] / g;
    return w;
}

namespace {

// In-place reduced row echelon form; returns pivot columns.
std::vector<int> rref(MatQ& m) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    size_t rows = m.size(), cols = m[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t sel = r;
        while (sel < rows && m[sel][c] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(m[sel], m[r]);
        Rat inv = Rat(1) / m[r][c];
        for (size_t j = c; j < cols; ++j) m[r][j] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rat f = m[i][c];
            for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(static_cast<int>(c));
        ++r;
    }
    return pivots;
}

}  // namespace

int rank_q(MatQ m) { return static_cast<int>(rref(m).size()); }

std::optional<VecQ> solve_linear(const MatQ& A, const VecQ& b) {
    if (A.empty()) {
        if (!is_zero(b)) return std::nullopt;
        return VecQ{};
    }
    size_t rows = A.size(), cols = A[0].size();
    MatQ aug(rows, VecQ(cols + 1));
    for (size_t i = 0; i < rows; ++i) {
        for (size_t j = 0; j < cols; ++j) aug[i][j] = A[i][j];
        aug[i][cols] = b[i];
    }
    auto pivots = rref(aug);
    for (int p : pivots)
        if (p == static_cast<int>(cols)) return std::nullopt;  // inconsistent
    VecQ x(cols, Rat(0));
    for (size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = aug[k][cols];
    return x;
}

std::vector<VecI> kernel_q(const MatQ& A) {
    if (A.empty()) return {};
    size_t cols = A[0].size();
    MatQ m = A;
    auto pivots = rref(m);
    std::vector<bool> is_pivot(cols, false);
    for (int p : pivots) is_pivot[p] = true;
    std::vector<VecI> basis;
    for (size_t c = 0; c < cols; ++c) {
        if (is_pivot[c]) continue;
        VecQ v(cols, Rat(0));
        v[c] = 1;
        for (size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -m[k][c];
        VecI w = primitive(v);
        for (auto& x : w) {
            if (x != 0) {
                if (x < 0)
                    for (auto& y : w) y = -y;
                break;
            }
        }
        basis.push_back(w);
    }
    return basis;
}

Rat det_q(MatQ m) {
    size_t n = m.size();
    Rat det = 1;
    for (size_t c = 0; c < n; ++c) {
        size_t sel = c;
        while (sel < n && m[sel][c] == 0) ++sel;
        if (sel == n) return Rat(0);
        if (sel != c) {
            std::swap(m[sel], m[c]);
            det = -det;
        }
        det *= m[c][c];
        Rat inv = Rat(1) / m[c][c];
        for (size_t i = c + 1; i < n; ++i) {
            if (m[i][c] == 0) continue;
            Rat f = m[i][c] * inv;
            for (size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
        }
    }
    return det;
}

Int det_int(const MatI& m) {
    Rat d = det_q(to_q(m));
    assert(is_integer(d));
    return rat_num(d);
}

std::optional<MatQ> inverse_q(const MatQ& A) {
    size_t n = A.size();
    MatQ aug(n, VecQ(2 * n, Rat(0)));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) aug[i][j] = A[i][j];
        aug[i][n + i] = 1;
    }
    auto pivots = rref(aug);
    if (pivots.size() != n) return std::nullopt;
    MatQ inv(n, VecQ(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
    return inv;
}

VecI mat_apply(const MatI& M, const VecI& v) {
    VecI out(M.size());
    for (size_t i = 0; i < M.size(); ++i) out[i] = dot(M[i], v);
    return out;
}

MatI mat_mul(const MatI& A, const MatI& B) {
    size_t n = A.size(), m = B[0].size(), k = B.size();
    MatI out(n, VecI(m, Int(0)));
    for (size_t i = 0; i < n; ++i)
        for (size_t l = 0; l < k; ++l) {
            if (A[i][l] == 0) continue;
            for (size_t j = 0; j < m; ++j) out[i][j] += A[i][l] * B[l][j];
        }
    return out;
}

MatI identity_mat(int n) {
    MatI m(n, VecI(n, Int(0)));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

MatI hnf_rows(MatI m) {
    if (m.empty()) return m;
    size_t rows = m.size(), cols = m[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        // Euclidean elimination in column c below row r.
        while (true) {
            size_t sel = rows;
            for (size_t i = r; i < rows; ++i) {
                if (m[i][c] == 0) continue;
                if (sel == rows || abs(m[i][c]) < abs(m[sel][c])) sel = i;
            }
            if (sel == rows) break;
            std::swap(m[sel], m[r]);
            bool clean = true;
            for (size_t i = r + 1; i < rows; ++i) {
                if (m[i][c] == 0) continue;
                Int q = m[i][c] / m[r][c];
                for (size_t j = 0; j < cols; ++j) m[i][j] -= q * m[r][j];
                if (m[i][c] != 0) clean = false;
            }
            if (clean) break;
        }
        if (m[r][c] == 0) continue;
        if (m[r][c] < 0)
            for (size_t j = 0; j < cols; ++j) m[r][j] = -m[r][j];
        // Reduce entries above the pivot into [0, pivot).
        for (size_t i = 0; i < r; ++i) {
            Int q = m[i][c] / m[r][c];
            if (m[i][c] % m[r][c] < 0) q -= 1;
            if (q != 0)
                for (size_t j = 0; j < cols; ++j) m[i][j] -= q * m[r][j];
        }
        ++r;
    }
    m.resize(r);
    return m;
}

SmithResult smith_normal_form(MatI A) {
    size_t rows = A.size(), cols = A.empty() ? 0 : A[0].size();
    SmithResult res;
    res.U = identity_mat(static_cast<int>(rows));
    res.V = identity_mat(static_cast<int>(cols));
    auto& S = A;
    auto& U = res.U;
    auto& V = res.V;

    auto swap_rows = [&](size_t a, size_t b) {
        std::swap(S[a], S[b]);
        std::swap(U[a], U[b]);
    };
    auto swap_cols = [&](size_t a, size_t b) {
        for (auto& row : S) std::swap(row[a], row[b]);
        for (auto& row : V) std::swap(row[a], row[b]);
    };
    auto addto_row = [&](size_t dst, size_t src, const Int& f) {
        for (size_t j = 0; j < cols; ++j) S[dst][j] += f * S[src][j];
        for (size_t j = 0; j < rows; ++j) U[dst][j] += f * U[src][j];
    };
    auto addto_col = [&](size_t dst, size_t src, const Int& f) {
        for (size_t i = 0; i < rows; ++i) S[i][dst] += f * S[i][src];
        for (size_t i = 0; i < cols; ++i) V[i][dst] += f * V[i][src];
    };

    size_t t = 0;
    while (t < rows && t < cols) {
        // Locate minimal nonzero entry in the trailing block.
        size_t pi = rows, pj = cols;
        for (size_t i = t; i < rows; ++i)
            for (size_t j = t; j < cols; ++j) {
                if (S[i][j] == 0) continue;
                if (pi == rows || abs(S[i][j]) < abs(S[pi][pj])) {
                    pi = i;
                    pj = j;
                }
            }
        if (pi == rows) break;
        swap_rows(t, pi);
        swap_cols(t, pj);
        bool again = false;
        for (size_t i = t + 1; i < rows; ++i) {
            if (S[i][t] == 0) continue;
            Int q = S[i][t] / S[t][t];
            addto_row(i, t, -q);
            if (S[i][t] != 0) again = true;
        }
        for (size_t j = t + 1; j < cols; ++j) {
            if (S[t][j] == 0) continue;
            Int q = S[t][j] / S[t][t];
            addto_col(j, t, -q);
            if (S[t][j] != 0) again = true;
        }
        if (again) continue;
        // Divisibility fix: fold any non-multiple into the pivot block.
        bool redo = false;
        for (size_t i = t + 1; i < rows && !redo; ++i)
            for (size_t j = t + 1; j < cols && !redo; ++j)
                if (S[i][j] % S[t][t] != 0) {
                    addto_row(t, i, Int(1));
                    redo = true;
                }
        if (redo) continue;
        if (S[t][t] < 0) {
            for (size_t j = 0; j < cols; ++j) S[t][j] = -S[t][j];
            for (size_t j = 0; j < rows; ++j) U[t][j] = -U[t][j];
        }
        ++t;
    }
    res.rank = static_cast<int>(t);
    res.S = S;
    return res;
}

std::vector<VecI> kernel_int(const MatI& A) {
    if (A.empty() || A[0].empty()) return {};
    size_t cols = A[0].size();
    auto smith = smith_normal_form(A);
    std::vector<VecI> basis;
    for (size_t j = smith.rank; j < cols; ++j) {
        VecI v(cols);
        for (size_t i = 0; i < cols; ++i) v[i] = smith.V[i][j];
        basis.push_back(v);
    }
    if (basis.empty()) return basis;
    MatI canon = hnf_rows(basis);
    return canon;
}

bool lex_less(const VecI& a, const VecI& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

bool lex_less(const VecQ& a, const VecQ& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace pdiv
