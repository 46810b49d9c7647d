#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"

namespace markoff {

using Integer = mpz_class;
using Rational = mpq_class; // GMP keeps it reduced as long as we canonicalize on construction
using Digits = std::vector<Integer>;

inline Rational make_rational(const Integer& num, const Integer& den) {
    require(den != 0, errc::division_by_zero, "zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Integer isqrt(const Integer& n) {
    require(n >= 0, errc::range_error, "isqrt of negative");
    Integer r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

inline bool is_square(const Integer& n) {
    return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

inline Integer gcd(const Integer& a, const Integer& b) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

// floor division and the matching nonnegative remainder
inline Integer fdiv(const Integer& a, const Integer& b) {
    require(b != 0, errc::division_by_zero, "fdiv by zero");
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline Integer cdiv(const Integer& a, const Integer& b) {
    require(b != 0, errc::division_by_zero, "cdiv by zero");
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline Integer mod(const Integer& a, const Integer& m) {
    Integer r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

inline Integer modinv(const Integer& a, const Integer& m) {
    Integer r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
        fail(errc::not_coprime, a.get_str() + " has no inverse mod " + m.get_str());
    return r;
}

inline Integer pow10(unsigned long k) {
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, k);
    return r;
}

inline int sgn(const Integer& a) { return ::sgn(a); }
inline int sgn(const Rational& a) { return ::sgn(a); }

// Splits n = s^2 * core where core has no square factor below the trial bound.
// Full factorization of radicands with hundreds of digits is out of reach; after
// trial division we only check whether the cofactor is itself a square.
struct SquareSplit {
    Integer root;
    Integer core;
};

inline SquareSplit split_square(Integer n, unsigned long trial_bound = 2000) {
    require(n > 0, errc::range_error, "split_square needs a positive radicand");
    Integer root = 1;
    if (is_square(n)) return {isqrt(n), 1};
    for (unsigned long p = 2; p <= trial_bound; p += (p == 2 ? 1 : 2)) {
        unsigned long pp = p * p;
        while (mpz_divisible_ui_p(n.get_mpz_t(), pp)) {
            n /= pp;
            root *= p;
        }
        if (Integer(pp) > n) break;
    }
    if (is_square(n)) {
        root *= isqrt(n);
        n = 1;
    }
    return {root, n};
}

inline Integer parse_integer(std::string_view s) {
    Integer r;
    std::string str(s);
    if (str.empty() || r.set_str(str, 10) != 0) fail(errc::parse_error, "not an integer: '" + str + "'");
    return r;
}

inline Digits parse_digits(std::string_view s) {
    Digits out;
    if (s.find_first_not_of(' ') == std::string_view::npos) return out;
    size_t i = 0;
    while (true) {
        size_t j = s.find(',', i);
        auto tok = s.substr(i, j == std::string_view::npos ? s.size() - i : j - i);
        while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
        while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
        out.push_back(parse_integer(tok));
        if (j == std::string_view::npos) break;
        i = j + 1;
    }
    return out;
}

inline std::string join(const Digits& ds, std::string_view sep = ",") {
    std::string s;
    for (size_t i = 0; i < ds.size(); ++i) {
        if (i) s += sep;
        s += ds[i].get_str();
    }
    return s;
}

inline Digits to_digits(std::initializer_list<long> xs) {
    Digits d;
    for (long x : xs) d.emplace_back(x);
    return d;
}

} // namespace markoff
