#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <utility>
#include <vector>

#include "pdiv/error.hpp"

namespace pdiv {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rat& r) { return rat_den(r) == 1; }

// Mathematical floor (floor(-1/2) = -1).
inline Int floor_rat(const Rat& r) {
    Int p = rat_num(r), q = rat_den(r);
    Int d = p / q;
    if (p % q != 0 && p < 0) d -= 1;
    return d;
}

inline Int ceil_rat(const Rat& r) { return -floor_rat(-r); }

inline Int gcd_int(Int a, Int b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        Int t = a % b;
        a = b;
        b = t;
    }
    return a;
}

inline Int lcm_int(const Int& a, const Int& b) {
    if (a == 0 || b == 0) return 0;
    Int g = gcd_int(a, b);
    Int r = (a / g) * b;
    return r < 0 ? Int(-r) : r;
}

// Floor of the integer square root; exact test via is_square.
inline Int isqrt(const Int& n) { return boost::multiprecision::sqrt(n); }

inline bool is_square(const Int& n, Int& root) {
    if (n < 0) return false;
    root = isqrt(n);
    return root * root == n;
}

// Exact square root of a nonnegative rational, if it exists.
inline bool rat_sqrt(const Rat& x, Rat& out) {
    if (x < 0) return false;
    Int rn, rd;
    if (!is_square(rat_num(x), rn) || !is_square(rat_den(x), rd)) return false;
    out = Rat(rn, rd);
    return true;
}

// Trial-division factorization, smallest primes first. Desk scale only.
inline std::vector<std::pair<Int, int>> factor_integer(Int n) {
    if (n < 0) n = -n;
    if (n == 0) fail("consistency", "factor_integer: zero input");
    std::vector<std::pair<Int, int>> out;
    auto grab = [&](const Int& p) {
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e) out.emplace_back(p, e);
    };
    grab(2);
    for (Int p = 3; p * p <= n; p += 2) grab(p);
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

inline bool is_squarefree(const Int& n) {
    if (n == 0) return false;
    for (const auto& [p, e] : factor_integer(n))
        if (e > 1) return false;
    return true;
}

// All positive divisors, ascending.
inline std::vector<Int> divisors_of(const Int& n) {
    std::vector<Int> out{Int(1)};
    for (const auto& [p, e] : factor_integer(n)) {
        std::vector<Int> next;
        Int pk = 1;
        for (int k = 0; k <= e; ++k) {
            for (const auto& d : out) next.push_back(d * pk);
            pk *= p;
        }
        out = std::move(next);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Canonical "p/q" (or "p" when integral) form used across the JSON surface.
inline std::string rat_to_string(const Rat& r) {
    std::string s = rat_num(r).str();
    if (!is_integer(r)) s += "/" + rat_den(r).str();
    return s;
}

inline Rat rat_from_string(const std::string& s) {
    auto pos = s.find('/');
    try {
        if (pos == std::string::npos) return Rat(Int(s));
        Int num(s.substr(0, pos)), den(s.substr(pos + 1));
        if (den == 0) throw SchemaError("rational with zero denominator: " + s);
        return Rat(num, den);
    } catch (const std::exception&) {
        throw SchemaError("malformed rational: " + s);
    }
}

}  // namespace pdiv
