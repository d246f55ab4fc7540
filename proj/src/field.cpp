#include "pdiv/field.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>

#include "pdiv/error.hpp"

namespace pdiv {

GroundField GroundField::quadratic(const Int& d) {
    if (d == 0 || d == 1 || !is_squarefree(d))
        throw SchemaError("quadratic extension requires a squarefree d != 0, 1");
    GroundField f;
    f.extended = true;
    f.d = d;
    return f;
}

FieldElem::FieldElem(GroundField f, Rat a_, Rat b_) : field(f), a(std::move(a_)), b(std::move(b_)) {
    if (!field.extended && b != 0) fail("consistency", "irrational element over the rationals");
}

FieldElem FieldElem::operator+(const FieldElem& o) const { return {field, a + o.a, b + o.b}; }
FieldElem FieldElem::operator-(const FieldElem& o) const { return {field, a - o.a, b - o.b}; }

FieldElem FieldElem::operator*(const FieldElem& o) const {
    return {field, a * o.a + Rat(field.d) * b * o.b, a * o.b + b * o.a};
}

FieldElem FieldElem::inverse() const {
    if (is_zero()) fail("consistency", "division by zero field element");
    Rat n = norm();
    return {field, a / n, -b / n};
}

FieldElem FieldElem::operator/(const FieldElem& o) const { return *this * o.inverse(); }
FieldElem FieldElem::operator-() const { return {field, -a, -b}; }

FieldElem conjugate(const FieldElem& x) { return {x.field, x.a, -x.b}; }

std::optional<FieldElem> sqrt_in_field(const FieldElem& x) {
    const GroundField& F = x.field;
    Rat r;
    if (x.b == 0) {
        if (rat_sqrt(x.a, r)) return FieldElem(F, r);
        if (F.extended && x.a != 0) {
            // x = d * y^2 gives sqrt = y * s.
            Rat q = x.a / Rat(F.d);
            if (q > 0 && rat_sqrt(q, r)) return FieldElem(F, Rat(0), r);
        }
        return std::nullopt;
    }
    // (u + v s)^2 = A + B s: u^2 + d v^2 = A, 2uv = B.
    // u^2 solves 4X^2 - 4AX + dB^2 = 0, so X = (A +- sqrt(A^2 - dB^2)) / 2.
    Rat disc = x.a * x.a - Rat(F.d) * x.b * x.b;
    Rat sd;
    if (!rat_sqrt(disc, sd)) return std::nullopt;
    for (int sign : {1, -1}) {
        Rat u2 = (x.a + Rat(sign) * sd) / 2;
        Rat u;
        if (u2 >= 0 && rat_sqrt(u2, u) && u != 0) {
            Rat v = x.b / (2 * u);
            FieldElem cand(F, u, v);
            if ((cand * cand) == x) return cand;
        }
    }
    return std::nullopt;
}

Poly::Poly(GroundField f, std::vector<FieldElem> coeffs) : field(f), c(std::move(coeffs)) {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
}

Poly Poly::constant(GroundField f, const FieldElem& x) {
    Poly p(f);
    if (!x.is_zero()) p.c = {x};
    return p;
}

Poly Poly::variable(GroundField f) {
    return Poly(f, {FieldElem(f, Rat(0)), FieldElem(f, Rat(1))});
}

FieldElem Poly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c.size())) return FieldElem(field, Rat(0));
    return c[i];
}

bool Poly::is_monic() const {
    return !is_zero() && leading() == FieldElem(field, Rat(1));
}

Poly Poly::operator+(const Poly& o) const {
    std::vector<FieldElem> out(std::max(c.size(), o.c.size()), FieldElem(field, Rat(0)));
    for (size_t i = 0; i < out.size(); ++i) out[i] = coeff(static_cast<int>(i)) + o.coeff(static_cast<int>(i));
    return Poly(field, std::move(out));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly(field);
    std::vector<FieldElem> out(c.size() + o.c.size() - 1, FieldElem(field, Rat(0)));
    for (size_t i = 0; i < c.size(); ++i)
        for (size_t j = 0; j < o.c.size(); ++j) out[i + j] = out[i + j] + c[i] * o.c[j];
    return Poly(field, std::move(out));
}

Poly Poly::operator-() const {
    std::vector<FieldElem> out(c.size(), FieldElem(field, Rat(0)));
    for (size_t i = 0; i < c.size(); ++i) out[i] = -c[i];
    return Poly(field, std::move(out));
}

Poly Poly::scaled(const FieldElem& x) const {
    std::vector<FieldElem> out(c.size(), FieldElem(field, Rat(0)));
    for (size_t i = 0; i < c.size(); ++i) out[i] = c[i] * x;
    return Poly(field, std::move(out));
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return scaled(leading().inverse());
}

Poly Poly::derivative() const {
    if (c.size() <= 1) return Poly(field);
    std::vector<FieldElem> out;
    out.reserve(c.size() - 1);
    for (size_t i = 1; i < c.size(); ++i) out.push_back(c[i] * FieldElem(field, Rat(Int(i))));
    return Poly(field, std::move(out));
}

FieldElem Poly::eval(const FieldElem& x) const {
    FieldElem acc(field, Rat(0));
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Poly Poly::pow(int e) const {
    assert(e >= 0);
    Poly acc = Poly::constant(field, FieldElem(field, Rat(1)));
    Poly base = *this;
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) fail("consistency", "polynomial division by zero");
    Poly r = a;
    Poly q(a.field);
    q.c.assign(std::max<size_t>(a.c.size(), 1), FieldElem(a.field, Rat(0)));
    FieldElem lead_inv = b.leading().inverse();
    while (!r.is_zero() && r.degree() >= b.degree()) {
        int shift = r.degree() - b.degree();
        FieldElem f = r.leading() * lead_inv;
        q.c[shift] = q.c[shift] + f;
        std::vector<FieldElem> sub(shift, FieldElem(a.field, Rat(0)));
        for (const auto& bc : b.c) sub.push_back(bc * f);
        r = r - Poly(a.field, std::move(sub));
    }
    return {Poly(a.field, std::move(q.c)), r};
}

bool divides(const Poly& a, const Poly& b) {
    if (b.is_zero()) return true;
    if (a.is_zero()) return false;
    return divmod(b, a).second.is_zero();
}

Poly gcd_poly(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.is_zero() ? a : a.monic();
}

Poly conjugate(const Poly& p) {
    std::vector<FieldElem> out(p.c.size(), FieldElem(p.field, Rat(0)));
    for (size_t i = 0; i < p.c.size(); ++i) out[i] = conjugate(p.c[i]);
    return Poly(p.field, std::move(out));
}

int multiplicity(const Poly& p, const Poly& q) {
    if (p.is_zero()) fail("consistency", "multiplicity in the zero polynomial");
    int m = 0;
    Poly r = p;
    while (true) {
        auto [quot, rem] = divmod(r, q);
        if (!rem.is_zero()) return m;
        r = quot;
        ++m;
    }
}

namespace {

FieldElem fe(const GroundField& f, const Rat& a, const Rat& b = Rat(0)) { return FieldElem(f, a, b); }

// ---- factorization over Q ------------------------------------------------

// Primitive integer coefficient vector of a monic-normalizable rational poly.
std::vector<Int> integer_coeffs(const Poly& p) {
    Int l = 1;
    for (const auto& x : p.c) l = lcm_int(l, rat_den(x.a));
    std::vector<Int> out(p.c.size());
    Int g = 0;
    for (size_t i = 0; i < p.c.size(); ++i) {
        out[i] = rat_num(p.c[i].a) * (l / rat_den(p.c[i].a));
        g = gcd_int(g, out[i]);
    }
    if (g > 1)
        for (auto& x : out) x /= g;
    return out;
}

Int eval_int(const std::vector<Int>& c, const Int& x) {
    Int acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
}

// Monic rational roots of a squarefree integer polynomial.
std::vector<Rat> rational_roots(const std::vector<Int>& c) {
    std::vector<Rat> roots;
    if (c.size() < 2) return roots;
    Int a0 = c.front(), an = c.back();
    if (a0 == 0) return {Rat(0)};  // caller strips t^k first
    auto ps = divisors_of(a0), qs = divisors_of(an);
    for (const auto& p : ps)
        for (const auto& q : qs) {
            if (gcd_int(p, q) != 1) continue;
            for (int sign : {1, -1}) {
                Rat r(p * sign, q);
                Rat acc = 0;
                for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * r + Rat(*it);
                if (acc == 0) roots.push_back(r);
            }
        }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

Poly from_rat_coeffs(const GroundField& f, const std::vector<Rat>& c) {
    std::vector<FieldElem> out;
    out.reserve(c.size());
    for (const auto& x : c) out.push_back(fe(f, x));
    return Poly(f, std::move(out));
}

// Kronecker search for a monic factor of degree fd of the squarefree integer
// polynomial p (rational-root free). Returns a monic factor or nullopt.
std::optional<Poly> kronecker_factor(const Poly& p, int fd) {
    const GroundField F = p.field;
    int n = p.degree();
    assert(fd >= 2 && fd <= n / 2);
    auto ic = integer_coeffs(p);

    // Evaluation points 0, 1, -1, 2, -2, ... (fd + 1 of them).
    std::vector<Int> xs;
    xs.push_back(0);
    for (Int k = 1; static_cast<int>(xs.size()) < fd + 1; ++k) {
        xs.push_back(k);
        if (static_cast<int>(xs.size()) < fd + 1) xs.push_back(-k);
    }
    std::vector<std::vector<Int>> cand(fd + 1);
    for (int i = 0; i <= fd; ++i) {
        Int v = eval_int(ic, xs[i]);
        assert(v != 0);
        for (const auto& dvs : divisors_of(v)) {
            cand[i].push_back(dvs);
            cand[i].push_back(-dvs);
        }
    }
    // Sign symmetry: a factor and its negative divide together.
    cand[0].erase(std::remove_if(cand[0].begin(), cand[0].end(), [](const Int& v) { return v < 0; }),
                  cand[0].end());

    // Lagrange basis over the points.
    std::vector<std::vector<Rat>> lagr(fd + 1);
    for (int i = 0; i <= fd; ++i) {
        std::vector<Rat> li{Rat(1)};
        Rat denom = 1;
        for (int j = 0; j <= fd; ++j) {
            if (j == i) continue;
            std::vector<Rat> next(li.size() + 1, Rat(0));
            for (size_t k = 0; k < li.size(); ++k) {
                next[k] -= li[k] * Rat(xs[j]);
                next[k + 1] += li[k];
            }
            li = std::move(next);
            denom *= Rat(xs[i] - xs[j]);
        }
        for (auto& x : li) x /= denom;
        lagr[i] = std::move(li);
    }

    std::vector<size_t> idx(fd + 1, 0);
    while (true) {
        std::vector<Rat> coeffs(fd + 1, Rat(0));
        for (int i = 0; i <= fd; ++i) {
            Rat v(cand[i][idx[i]]);
            for (int k = 0; k <= fd; ++k) coeffs[k] += v * lagr[i][k];
        }
        if (coeffs[fd] != 0) {
            Poly g = from_rat_coeffs(F, coeffs);
            if (g.degree() == fd && divides(g, p)) return g.monic();
        }
        int pos = fd;
        while (pos >= 0 && ++idx[pos] == cand[pos].size()) {
            idx[pos] = 0;
            --pos;
        }
        if (pos < 0) break;
    }
    return std::nullopt;
}

// Full factorization of a monic squarefree polynomial with rational
// coefficients (over Q).
std::vector<Poly> factor_squarefree_q(Poly p, int degree_bound) {
    const GroundField F = p.field;
    std::vector<Poly> out;
    // Strip powers of t.
    while (!p.is_zero() && p.c.front().is_zero()) {
        out.push_back(Poly::variable(F));
        p.c.erase(p.c.begin());
    }
    if (p.degree() <= 0) return out;
    auto ic = integer_coeffs(p);
    for (const auto& r : rational_roots(ic)) {
        Poly lin(F, {fe(F, -r), fe(F, Rat(1))});
        p = divmod(p, lin).first;
        out.push_back(lin);
    }
    // Kronecker on what is left.
    std::vector<Poly> stack;
    if (p.degree() >= 1) stack.push_back(p.monic());
    while (!stack.empty()) {
        Poly cur = stack.back();
        stack.pop_back();
        if (cur.degree() == 1) {
            out.push_back(cur);
            continue;
        }
        if (cur.degree() > degree_bound)
            fail("unsupported-degree", "factorization degree exceeds the configured bound");
        bool split = false;
        for (int fd = 2; fd <= cur.degree() / 2 && !split; ++fd) {
            if (auto g = kronecker_factor(cur, fd)) {
                stack.push_back(*g);
                stack.push_back(divmod(cur, *g).first.monic());
                split = true;
            }
        }
        if (!split) out.push_back(cur);  // irreducible over Q
    }
    return out;
}

bool all_rational(const Poly& p) {
    for (const auto& x : p.c)
        if (x.b != 0) return false;
    return true;
}

// Split a Q-irreducible monic polynomial over Q(sqrt(d)); only quadratic
// relative splitting is supported.
std::vector<Poly> split_over_extension(const Poly& p) {
    const GroundField& F = p.field;
    if (p.degree() != 2) return {p};
    FieldElem a = p.coeff(2), b = p.coeff(1), cc = p.coeff(0);
    FieldElem disc = b * b - fe(F, Rat(4)) * a * cc;
    auto root = sqrt_in_field(disc);
    if (!root) return {p};
    FieldElem two_a = fe(F, Rat(2)) * a;
    FieldElem r1 = (-b + *root) / two_a;
    FieldElem r2 = (-b - *root) / two_a;
    Poly f1(F, {-r1, fe(F, Rat(1))});
    Poly f2(F, {-r2, fe(F, Rat(1))});
    return {f1, f2};
}

}  // namespace

Factorization factor(const Poly& p, int degree_bound) {
    if (p.is_zero()) fail("consistency", "factorization of the zero polynomial");
    const GroundField F = p.field;
    Factorization res;
    res.unit = p.leading();
    Poly q = p.monic();
    if (q.degree() > degree_bound)
        fail("unsupported-degree", "factorization degree exceeds the configured bound");
    if (q.degree() == 0) return res;

    // Squarefree decomposition (Yun, char 0): q = prod part_k^k.
    std::vector<std::pair<Poly, int>> sqfree;
    {
        Poly a = q, d = q.derivative();
        Poly g = gcd_poly(a, d);
        Poly w = divmod(a, g).first;
        int k = 1;
        while (w.degree() > 0) {
            Poly y = gcd_poly(w, g);
            Poly part = divmod(w, y).first;
            if (part.degree() > 0) sqfree.emplace_back(part.monic(), k);
            w = y;
            g = divmod(g, y).first;
            ++k;
        }
    }

    auto push = [&](const Poly& f, int mult) {
        for (auto& [g, e] : res.factors)
            if (g == f) {
                e += mult;
                return;
            }
        res.factors.emplace_back(f, mult);
    };

    for (const auto& [part, mult] : sqfree) {
        if (!F.extended) {
            for (const auto& f : factor_squarefree_q(part, degree_bound)) push(f, mult);
            continue;
        }
        // Over Q(sqrt(d)): factor the rational norm, then split candidates.
        Poly work = part;
        Poly norm_poly = all_rational(work) ? work : work * conjugate(work);
        std::vector<Poly> candidates;
        {
            // The norm has rational coefficients; factor its squarefree
            // kernel over Q, then split candidates over the extension.
            Poly nq = norm_poly.monic();
            Poly g = gcd_poly(nq, nq.derivative());
            Poly w = divmod(nq, g).first;
            for (const auto& f : factor_squarefree_q(w, 2 * degree_bound))
                for (const auto& h : split_over_extension(f)) candidates.push_back(h);
        }
        for (const auto& h : candidates) {
            int m = multiplicity(work, h);
            if (m > 0) {
                push(h, m * mult);
                for (int i = 0; i < m; ++i) work = divmod(work, h).first;
            }
        }
        if (work.degree() == 1) {
            push(work.monic(), mult);
            work = Poly::constant(F, fe(F, Rat(1)));
        } else if (work.degree() == 2) {
            for (const auto& h : split_over_extension(work.monic())) push(h, mult);
            work = Poly::constant(F, fe(F, Rat(1)));
        } else if (work.degree() > 2) {
            fail("unsupported-degree",
                 "relative factor of degree > 2 over the quadratic extension is unsupported");
        }
    }
    std::sort(res.factors.begin(), res.factors.end(), [](const auto& x, const auto& y) {
        if (x.first.degree() != y.first.degree()) return x.first.degree() < y.first.degree();
        for (int i = x.first.degree(); i >= 0; --i) {
            const FieldElem &a = x.first.coeff(i), &b = y.first.coeff(i);
            if (a.a != b.a) return a.a < b.a;
            if (a.b != b.b) return a.b < b.b;
        }
        return false;
    });
    return res;
}

bool is_irreducible(const Poly& p, int degree_bound) {
    if (p.degree() < 1) return false;
    auto f = factor(p, degree_bound);
    return f.factors.size() == 1 && f.factors[0].second == 1;
}

// ---- rational functions ----------------------------------------------------

RatFunc::RatFunc(Poly n) : num(std::move(n)) {
    den = Poly::constant(num.field, FieldElem(num.field, Rat(1)));
}

RatFunc::RatFunc(Poly n, Poly d) {
    if (d.is_zero()) fail("consistency", "rational function with zero denominator");
    if (n.is_zero()) {
        num = Poly(n.field);
        den = Poly::constant(n.field, FieldElem(n.field, Rat(1)));
        return;
    }
    Poly g = gcd_poly(n, d);
    n = divmod(n, g).first;
    d = divmod(d, g).first;
    FieldElem lead = d.leading();
    num = n.scaled(lead.inverse());
    den = d.monic();
}

RatFunc RatFunc::constant(GroundField f, const FieldElem& x) {
    return RatFunc(Poly::constant(f, x));
}

RatFunc RatFunc::one(GroundField f) { return constant(f, FieldElem(f, Rat(1))); }
RatFunc RatFunc::variable(GroundField f) { return RatFunc(Poly::variable(f)); }

FieldElem RatFunc::constant_value() const {
    if (!is_constant()) fail("consistency", "expected a constant rational function");
    return num.coeff(0) * den.coeff(0).inverse();
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
    return RatFunc(num * o.den + o.num * den, den * o.den);
}
RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }
RatFunc RatFunc::operator*(const RatFunc& o) const { return RatFunc(num * o.num, den * o.den); }
RatFunc RatFunc::operator/(const RatFunc& o) const {
    if (o.is_zero()) fail("consistency", "division by the zero rational function");
    return RatFunc(num * o.den, den * o.num);
}
RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num = -r.num;
    return r;
}

RatFunc RatFunc::inverse() const {
    if (is_zero()) fail("consistency", "inverse of the zero rational function");
    return RatFunc(den, num);
}

RatFunc RatFunc::pow(long e) const {
    GroundField f = field();
    if (e == 0) return one(f);
    RatFunc base = e > 0 ? *this : inverse();
    long k = e > 0 ? e : -e;
    RatFunc acc = one(f);
    while (k) {
        if (k & 1) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

RatFunc conjugate(const RatFunc& f) { return RatFunc(conjugate(f.num), conjugate(f.den)); }

// ---- printing --------------------------------------------------------------

std::string to_string(const FieldElem& x) {
    if (x.b == 0) return rat_to_string(x.a);
    std::string st = rat_to_string(x.b < 0 ? Rat(-x.b) : x.b) + "*s";
    if (x.a == 0) return (x.b < 0 ? "-" : "") + st;
    return rat_to_string(x.a) + (x.b < 0 ? "-" : "+") + st;
}

namespace {

bool needs_parens(const FieldElem& x) {
    // Compound coefficient (two terms) or a negative/leading-minus form.
    if (x.a != 0 && x.b != 0) return true;
    if (x.a == 0 && x.b != 0) return true;  // includes the '*' of 1*s
    return false;
}

std::string coeff_prefix(const FieldElem& x, bool leading_term) {
    std::string body = to_string(x);
    bool neg = body.size() && body[0] == '-';
    std::string sign = leading_term ? (neg ? "-" : "") : (neg ? "-" : "+");
    if (neg) body = body.substr(1);
    FieldElem ax = x;
    if (neg) ax = -ax;
    if (needs_parens(ax)) body = "(" + body + ")";
    return sign + body;
}

}  // namespace

std::string to_string(const Poly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int i = p.degree(); i >= 0; --i) {
        FieldElem ci = p.coeff(i);
        if (ci.is_zero()) continue;
        bool leading = out.empty();
        if (i == 0) {
            out += coeff_prefix(ci, leading);
            continue;
        }
        FieldElem one(p.field, Rat(1));
        std::string var = i == 1 ? "t" : "t^" + std::to_string(i);
        if (ci == one) {
            out += (leading ? "" : "+") + var;
        } else if (ci == -one) {
            out += "-" + var;
        } else {
            out += coeff_prefix(ci, leading) + "*" + var;
        }
    }
    return out;
}

std::string to_string(const RatFunc& f) {
    if (f.is_zero()) return "0";
    std::string n = to_string(f.num);
    if (f.den.is_constant()) return n;
    // Bare numerators only for t^k and nonnegative integers.
    bool bare = n.find_first_not_of("0123456789t^") == std::string::npos;
    std::string out = bare ? n : "(" + n + ")";
    return out + "/(" + to_string(f.den) + ")";
}

// ---- parsing ---------------------------------------------------------------

namespace {

struct Parser {
    const std::string& text;
    size_t pos = 0;
    const GroundField& field;

    explicit Parser(const std::string& t, const GroundField& f) : text(t), field(f) {}

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool peek(char c) {
        skip_ws();
        return pos < text.size() && text[pos] == c;
    }

    bool accept(char c) {
        if (!peek(c)) return false;
        ++pos;
        return true;
    }

    [[noreturn]] void error(const std::string& msg) {
        throw SchemaError("parse error in '" + text + "' at position " + std::to_string(pos) + ": " + msg);
    }

    RatFunc parse() {
        RatFunc v = expr();
        skip_ws();
        if (pos != text.size()) error("trailing input");
        return v;
    }

    RatFunc expr() {
        RatFunc v = accept('-') ? -term() : term();
        while (true) {
            if (accept('+'))
                v = v + term();
            else if (accept('-'))
                v = v - term();
            else
                return v;
        }
    }

    RatFunc term() {
        RatFunc v = factor();
        while (true) {
            if (accept('*'))
                v = v * factor();
            else if (accept('/'))
                v = v / factor();
            else
                return v;
        }
    }

    RatFunc factor() {
        RatFunc v = base();
        if (accept('^')) {
            bool neg = accept('-');
            long e = integer();
            v = v.pow(neg ? -e : e);
        }
        return v;
    }

    long integer() {
        skip_ws();
        size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (start == pos) error("expected an integer");
        return std::stol(text.substr(start, pos - start));
    }

    RatFunc base() {
        skip_ws();
        if (pos >= text.size()) error("unexpected end of input");
        char c = text[pos];
        if (c == '(') {
            ++pos;
            RatFunc v = expr();
            if (!accept(')')) error("expected ')'");
            return v;
        }
        if (c == '-') {
            ++pos;
            return -base();
        }
        if (c == 't') {
            ++pos;
            return RatFunc::variable(field);
        }
        if (c == 's') {
            ++pos;
            if (!field.extended) error("'s' used over the rationals");
            return RatFunc::constant(field, FieldElem(field, Rat(0), Rat(1)));
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            Int value(text.substr(start, pos - start));
            return RatFunc::constant(field, FieldElem(field, Rat(value)));
        }
        error("unexpected character");
    }
};

}  // namespace

RatFunc parse_ratfunc(const std::string& text, const GroundField& f) {
    Parser p(text, f);
    return p.parse();
}

Poly parse_poly(const std::string& text, const GroundField& f) {
    RatFunc r = parse_ratfunc(text, f);
    if (!r.den.is_constant()) throw SchemaError("expected a polynomial: " + text);
    return r.num.scaled(r.den.coeff(0).inverse());
}

FieldElem parse_field_elem(const std::string& text, const GroundField& f) {
    RatFunc r = parse_ratfunc(text, f);
    if (!r.is_constant()) throw SchemaError("expected a field element: " + text);
    return r.constant_value();
}

}  // namespace pdiv
