#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "integer.hpp"

namespace markoff {

// ---------------------------------------------------------------- continuants

inline Integer continuant(const Digits& xs) {
    Integer prev = 0, cur = 1;
    for (const auto& x : xs) {
        Integer next = x * cur + prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

template <class It>
Integer continuant(It first, It last) {
    Integer prev = 0, cur = 1;
    for (; first != last; ++first) {
        Integer next = *first * cur + prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

// Convergent ladder p_i/q_i with p_{-1} = 1, q_{-1} = 0 stored at index 0.
struct Convergents {
    std::vector<Integer> p, q;
    size_t size() const { return p.size() - 1; }
    Rational at(size_t i) const { return make_rational(p[i + 1], q[i + 1]); }
};

inline Convergents convergents(const Digits& ds) {
    Convergents c;
    c.p = {1};
    c.q = {0};
    Integer pp = 0, qq = 1; // p_{-2}, q_{-2}
    for (const auto& a : ds) {
        Integer np = a * c.p.back() + pp;
        Integer nq = a * c.q.back() + qq;
        pp = c.p.back();
        qq = c.q.back();
        c.p.push_back(std::move(np));
        c.q.push_back(std::move(nq));
    }
    return c;
}

// 2x2 integer matrix [[a, b], [c, d]] acting as x -> (a x + b)/(c x + d)
struct Mobius {
    Integer a = 1, b = 0, c = 0, d = 1;
};

inline Mobius cf_matrix(const Digits& ds) {
    Mobius m;
    for (const auto& x : ds) {
        Integer na = m.a * x + m.b, nc = m.c * x + m.d;
        m.b = m.a;
        m.d = m.c;
        m.a = std::move(na);
        m.c = std::move(nc);
    }
    return m;
}

// ---------------------------------------------------------------- regular CFs

inline Digits canonical_regular(Digits ds) {
    if (ds.size() > 1 && ds.back() == 1) {
        ds.pop_back();
        ds.back() += 1;
    }
    return ds;
}

inline bool same_regular(const Digits& a, const Digits& b) {
    return canonical_regular(a) == canonical_regular(b);
}

inline Rational eval_regular(const Digits& ds) {
    require(!ds.empty(), errc::precondition_violation, "empty continued fraction");
    auto m = cf_matrix(ds);
    return make_rational(m.a, m.c);
}

inline Digits cf_of_rational(const Rational& x) {
    Integer p = x.get_num(), q = x.get_den();
    Digits out;
    while (q != 0) {
        Integer a = fdiv(p, q);
        Integer r = p - a * q;
        out.push_back(a);
        p = std::move(q);
        q = std::move(r);
    }
    return out;
}

inline Digits cf_of_rational(const Integer& p, const Integer& q) { return cf_of_rational(make_rational(p, q)); }

inline Digits reversed(Digits ds) {
    std::reverse(ds.begin(), ds.end());
    return ds;
}

inline Digits concat(Digits a, const Digits& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

struct ReversedValue {
    Rational value; // p/q'
    Integer q_prime;
};

// Value of the reversed expansion together with the reversal congruence check.
inline ReversedValue reverse_denominator(const Digits& ds) {
    require(!ds.empty() && ds.front() > 0, errc::precondition_violation, "first digit must be positive");
    auto fwd = cf_matrix(ds);
    auto rev = cf_matrix(reversed(ds));
    require(fwd.a == rev.a, errc::identity_violation, "continuant not reversal-symmetric");
    Integer sign = (ds.size() % 2 == 1) ? 1 : -1; // (-1)^(n-1)
    require(mod(fwd.c * rev.c - sign, fwd.a) == 0 || fwd.a == 1, errc::identity_violation,
            "q q' != (-1)^(n-1) mod p for " + join(ds));
    return {make_rational(rev.a, rev.c), rev.c};
}

// Concatenation law: X = P U + Q' V, Y = Q U + Q'' V.
inline Rational concat_cf(const Digits& xs, const Digits& ys) {
    require(!xs.empty() && !ys.empty(), errc::precondition_violation, "concat_cf needs nonempty inputs");
    Integer P = continuant(xs.begin(), xs.end());
    Integer Q = continuant(xs.begin() + 1, xs.end());
    Integer Qp = continuant(xs.begin(), xs.end() - 1);
    Integer Qpp = xs.size() >= 2 ? continuant(xs.begin() + 1, xs.end() - 1) : Integer(0);
    Integer U = continuant(ys.begin(), ys.end());
    Integer V = continuant(ys.begin() + 1, ys.end());
    Rational r = make_rational(P * U + Qp * V, Q * U + Qpp * V);
    require(r == eval_regular(concat(xs, ys)), errc::identity_violation, "concatenation law failed");
    return r;
}

// p/q from p/(p-q) = [a_1..a_n]  ->  [1, a_1 - 1, a_2, ..., a_n]
inline Digits complement_transform(const Integer& p, const Integer& q) {
    require(q > 0 && q < p && gcd(p, q) == 1, errc::precondition_violation, "need 0 < q < p coprime");
    require(q > p - q, errc::precondition_violation, "need q > p - q");
    Digits base = cf_of_rational(p, p - q);
    Digits out{Integer(1), base[0] - 1};
    out.insert(out.end(), base.begin() + 1, base.end());
    require(eval_regular(out) == make_rational(p, q), errc::identity_violation, "complement rewrite failed");
    return out;
}

// ---------------------------------------------------------------- HJ (minus) CFs

inline Rational eval_hj(const Digits& ds) {
    require(!ds.empty(), errc::precondition_violation, "empty HJ continued fraction");
    Rational x = ds.back();
    for (size_t i = ds.size() - 1; i-- > 0;) {
        require(x != 0, errc::division_by_zero, "zero tail in HJ expansion " + join(ds));
        x = Rational(ds[i]) - 1 / x;
    }
    return x;
}

inline Digits hj_of_rational(Rational x) {
    require(x > 1, errc::precondition_violation, "HJ expansion needs x > 1");
    Digits out;
    while (true) {
        Integer a = cdiv(x.get_num(), x.get_den());
        out.push_back(a);
        if (Rational(a) == x) break;
        x = 1 / (Rational(a) - x);
    }
    return out;
}

inline bool is_hj(const Digits& ds) {
    return std::all_of(ds.begin(), ds.end(), [](const Integer& a) { return a >= 2; });
}

// ---------------------------------------------------------------- quadratic irrationals

// floor((a + b sqrt(D)) / c) for c > 0, exact
inline Integer floor_surd(const Integer& a, const Integer& b, const Integer& D, const Integer& c) {
    require(c > 0, errc::precondition_violation, "floor_surd needs positive denominator");
    if (b == 0 || D == 0) return fdiv(a, c);
    Integer R = b * b * D;
    Integer s = isqrt(R);
    if (b > 0) return fdiv(a + s, c);
    if (s * s != R) s += 1;
    return fdiv(a - s, c);
}

// (u + v sqrt(d)) / w with w > 0, gcd(u, v, w) = 1, d free of square factors we can find.
// v == 0 encodes a rational value; d is then 1.
class QuadraticIrrational {
public:
    QuadraticIrrational() : u_(0), v_(0), w_(1), d_(1) {}
    QuadraticIrrational(const Rational& r) : u_(r.get_num()), v_(0), w_(r.get_den()), d_(1) {}

    // (u + v sqrt(D)) / w for any D > 0
    static QuadraticIrrational make(const Integer& u, const Integer& v, const Integer& w, const Integer& D) {
        require(w != 0, errc::division_by_zero, "zero denominator");
        require(D > 0, errc::range_error, "radicand must be positive");
        QuadraticIrrational q;
        auto sp = split_square(D);
        q.u_ = u;
        q.v_ = v * sp.root;
        q.w_ = w;
        q.d_ = sp.core;
        if (q.d_ == 1) {
            q.u_ += q.v_;
            q.v_ = 0;
        }
        q.normalize();
        return q;
    }

    // p + q sqrt(d) with d already split
    static QuadraticIrrational from_parts(const Rational& p, const Rational& q, const Integer& d) {
        QuadraticIrrational r;
        Integer den = lcm(p.get_den(), q.get_den());
        r.u_ = p.get_num() * (den / p.get_den());
        r.v_ = q.get_num() * (den / q.get_den());
        r.w_ = den;
        r.d_ = d;
        r.normalize();
        return r;
    }

    const Integer& u() const { return u_; }
    const Integer& v() const { return v_; }
    const Integer& w() const { return w_; }
    const Integer& d() const { return d_; }
    bool is_rational() const { return v_ == 0; }
    Rational rational_part() const { return make_rational(u_, w_); }
    Rational surd_part() const { return make_rational(v_, w_); }

    QuadraticIrrational conjugate() const {
        QuadraticIrrational r = *this;
        r.v_ = -r.v_;
        return r;
    }
    QuadraticIrrational operator-() const {
        QuadraticIrrational r = *this;
        r.u_ = -r.u_;
        r.v_ = -r.v_;
        return r;
    }

    friend QuadraticIrrational operator+(const QuadraticIrrational& x, const QuadraticIrrational& y) {
        auto [a, b, d] = align(x, y);
        return from_parts(a.first + b.first, a.second + b.second, d);
    }
    friend QuadraticIrrational operator-(const QuadraticIrrational& x, const QuadraticIrrational& y) { return x + (-y); }
    friend QuadraticIrrational operator*(const QuadraticIrrational& x, const QuadraticIrrational& y) {
        auto [a, b, d] = align(x, y);
        return from_parts(a.first * b.first + a.second * b.second * d, a.first * b.second + a.second * b.first, d);
    }
    QuadraticIrrational inverse() const {
        Rational p = rational_part(), q = surd_part();
        Rational n = p * p - q * q * d_;
        require(n != 0, errc::division_by_zero, "inverse of zero");
        return from_parts(p / n, -q / n, d_);
    }
    friend QuadraticIrrational operator/(const QuadraticIrrational& x, const QuadraticIrrational& y) { return x * y.inverse(); }

    int sign() const {
        int su = ::sgn(u_), sv = ::sgn(v_);
        if (sv == 0) return su;
        if (su == 0 || su == sv) return sv;
        int c = cmp(u_ * u_, v_ * v_ * d_);
        if (c > 0) return su;
        if (c < 0) return sv;
        return 0;
    }

    friend bool operator==(const QuadraticIrrational& x, const QuadraticIrrational& y) { return (x - y).sign() == 0; }
    friend bool operator!=(const QuadraticIrrational& x, const QuadraticIrrational& y) { return !(x == y); }
    friend bool operator<(const QuadraticIrrational& x, const QuadraticIrrational& y) { return (x - y).sign() < 0; }
    friend bool operator>(const QuadraticIrrational& x, const QuadraticIrrational& y) { return y < x; }
    friend bool operator<=(const QuadraticIrrational& x, const QuadraticIrrational& y) { return !(y < x); }
    friend bool operator>=(const QuadraticIrrational& x, const QuadraticIrrational& y) { return !(x < y); }

    // bitwise identity of the normalized form
    bool same_form(const QuadraticIrrational& o) const { return u_ == o.u_ && v_ == o.v_ && w_ == o.w_ && d_ == o.d_; }

    Integer floor() const { return floor_surd(u_, v_, d_, w_); }

    // correctly rounded decimal with `places` digits after the point
    std::string decimal(unsigned places) const {
        Integer s = pow10(places);
        Integer n = floor_surd(2 * u_ * s + w_, 2 * v_ * s, d_, 2 * w_);
        bool neg = n < 0;
        Integer a = neg ? Integer(-n) : n;
        std::string digits = a.get_str();
        if (digits.size() <= places) digits.insert(0, places + 1 - digits.size(), '0');
        std::string out = digits.substr(0, digits.size() - places);
        if (places) out += "." + digits.substr(digits.size() - places);
        return (neg ? "-" : "") + out;
    }

    double to_double() const {
        return (u_.get_d() + v_.get_d() * std::sqrt(d_.get_d())) / w_.get_d();
    }

    std::string tuple() const { return "(" + u_.get_str() + "," + v_.get_str() + "," + w_.get_str() + "," + d_.get_str() + ")"; }

    std::string str() const {
        std::string num = u_.get_str();
        if (v_ != 0) {
            Integer av = abs(v_);
            num += (v_ < 0 ? "-" : "+");
            if (av != 1) num += av.get_str();
            num += "sqrt(" + d_.get_str() + ")";
        }
        if (w_ == 1) return num;
        return "(" + num + ")/" + w_.get_str();
    }

private:
    Integer u_, v_, w_, d_;

    static Integer lcm(const Integer& a, const Integer& b) {
        Integer r;
        mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        return r;
    }

    void normalize() {
        if (v_ == 0) d_ = 1;
        if (w_ < 0) {
            u_ = -u_;
            v_ = -v_;
            w_ = -w_;
        }
        Integer g = gcd(gcd(u_, v_), w_);
        if (g > 1) {
            u_ /= g;
            v_ /= g;
            w_ /= g;
        }
    }

    using Parts = std::pair<Rational, Rational>;

    // express both operands over a common radicand
    static std::tuple<Parts, Parts, Integer> align(const QuadraticIrrational& x, const QuadraticIrrational& y) {
        Parts a{x.rational_part(), x.surd_part()}, b{y.rational_part(), y.surd_part()};
        if (x.v_ == 0) return {a, b, y.d_};
        if (y.v_ == 0 || x.d_ == y.d_) return {a, b, x.d_};
        Integer prod = x.d_ * y.d_;
        require(is_square(prod), errc::precondition_violation,
                "quadratic operands from different fields: sqrt(" + x.d_.get_str() + ") vs sqrt(" + y.d_.get_str() + ")");
        // sqrt(dy) = sqrt(dx dy) / dx * sqrt(dx)
        b.second *= make_rational(isqrt(prod), x.d_);
        return {a, b, x.d_};
    }
};

inline std::ostream& operator<<(std::ostream& os, const QuadraticIrrational& q) { return os << q.str(); }

// ---------------------------------------------------------------- periodic CFs

struct PeriodicCF {
    Digits preperiod;
    Digits period;

    friend bool operator==(const PeriodicCF& a, const PeriodicCF& b) {
        return a.preperiod == b.preperiod && a.period == b.period;
    }
};

// shortest preperiod, primitive period
inline PeriodicCF canonical_periodic(PeriodicCF p) {
    require(!p.period.empty(), errc::precondition_violation, "empty period");
    while (!p.preperiod.empty() && p.preperiod.back() == p.period.back()) {
        p.preperiod.pop_back();
        std::rotate(p.period.rbegin(), p.period.rbegin() + 1, p.period.rend());
    }
    size_t n = p.period.size();
    for (size_t len = 1; len < n; ++len) {
        if (n % len) continue;
        bool rep = true;
        for (size_t i = len; i < n && rep; ++i) rep = p.period[i] == p.period[i - len];
        if (rep) {
            p.period.resize(len);
            break;
        }
    }
    return p;
}

inline std::string to_string(const PeriodicCF& p) {
    std::string s = join(p.preperiod);
    if (!s.empty()) s += ",";
    return s + "(" + join(p.period) + ")*";
}

inline PeriodicCF parse_periodic(const std::string& s) {
    auto open = s.find('(');
    auto close = s.find(")*");
    require(open != std::string::npos && close != std::string::npos && close > open, errc::parse_error,
            "periodic CF must look like 2,(1,1,2,2)*");
    std::string pre = s.substr(0, open);
    if (!pre.empty() && pre.back() == ',') pre.pop_back();
    PeriodicCF p{parse_digits(pre), parse_digits(s.substr(open + 1, close - open - 1))};
    require(!p.period.empty(), errc::parse_error, "empty period");
    return p;
}

// root > 0 of q_n x^2 + (q_{n-1} - p_n) x - p_{n-1} = 0, i.e. the purely periodic value
inline QuadraticIrrational purely_periodic_value(const Digits& period) {
    require(!period.empty(), errc::precondition_violation, "empty period");
    auto m = cf_matrix(period);
    Integer b = m.d - m.a;
    Integer disc = b * b + 4 * m.b * m.c;
    return QuadraticIrrational::make(-b, 1, 2 * m.c, disc);
}

inline QuadraticIrrational apply(const Mobius& m, const QuadraticIrrational& x) {
    return (QuadraticIrrational(Rational(m.a)) * x + QuadraticIrrational(Rational(m.b))) /
           (QuadraticIrrational(Rational(m.c)) * x + QuadraticIrrational(Rational(m.d)));
}

inline QuadraticIrrational periodic_to_quadratic(const PeriodicCF& p) {
    QuadraticIrrational xi = purely_periodic_value(p.period);
    if (p.preperiod.empty()) return xi;
    return apply(cf_matrix(p.preperiod), xi);
}

// Reduced-surd cycle algorithm on integer states (P, Q) with x = (P + sqrt(D)) / Q.
inline PeriodicCF quadratic_to_periodic(const QuadraticIrrational& x) {
    require(!x.is_rational() && !is_square(x.d()), errc::not_irrational, "value is rational: " + x.str());
    Integer P = x.v() > 0 ? x.u() : Integer(-x.u());
    Integer Q = x.v() > 0 ? x.w() : Integer(-x.w());
    Integer D = x.v() * x.v() * x.d();
    if (mod(D - P * P, Q) != 0) {
        Integer aq = abs(Q);
        P *= aq;
        Q *= aq;
        D *= aq * aq;
    }
    Integer s = isqrt(D);
    std::map<std::pair<Integer, Integer>, size_t> seen;
    Digits digits;
    while (true) {
        auto key = std::make_pair(P, Q);
        auto it = seen.find(key);
        if (it != seen.end()) {
            PeriodicCF out;
            out.preperiod.assign(digits.begin(), digits.begin() + it->second);
            out.period.assign(digits.begin() + it->second, digits.end());
            return canonical_periodic(out);
        }
        seen.emplace(key, digits.size());
        Integer a = Q > 0 ? fdiv(P + s, Q) : fdiv(-P - s - 1, -Q);
        digits.push_back(a);
        P = a * Q - P;
        Q = (D - P * P) / Q;
    }
}

struct ShiftReport {
    QuadraticIrrational xi, sigma_formula, sigma_rotated, eta_formula, eta_reversed;
};

// Cyclic shift sigma = (A_{k-1} - xi B_{k-1}) / (xi B_k - A_k) and reversed period eta = -1/conj(xi).
inline ShiftReport shift_and_reverse_checks(const PeriodicCF& pcf, size_t k) {
    require(pcf.preperiod.empty(), errc::precondition_violation, "shift checks need a purely periodic CF");
    const Digits& a = pcf.period;
    size_t n = a.size();
    k %= n;
    ShiftReport r;
    r.xi = purely_periodic_value(a);
    auto conv = convergents(a);
    // A_k = p_k, B_k = q_k with A_0 = 1, B_0 = 0 and A_{-1} = 0, B_{-1} = 1
    auto A = [&](long i) -> Integer { return i < 0 ? Integer(0) : conv.p[i]; };
    auto B = [&](long i) -> Integer { return i < 0 ? Integer(1) : conv.q[i]; };
    using QI = QuadraticIrrational;
    long kk = static_cast<long>(k);
    r.sigma_formula = (QI(Rational(A(kk - 1))) - r.xi * QI(Rational(B(kk - 1)))) /
                      (r.xi * QI(Rational(B(kk))) - QI(Rational(A(kk))));
    Digits rot(a.begin() + k, a.end());
    rot.insert(rot.end(), a.begin(), a.begin() + k);
    r.sigma_rotated = purely_periodic_value(rot);
    r.eta_formula = -(r.xi.conjugate().inverse());
    r.eta_reversed = purely_periodic_value(reversed(a));
    require(r.sigma_formula == r.sigma_rotated, errc::identity_violation,
            "shift formula fails for period " + join(a) + " at k=" + std::to_string(k));
    require(r.eta_formula == r.eta_reversed, errc::identity_violation, "reversed-period formula fails for " + join(a));
    return r;
}

} // namespace markoff
