#pragma once

#include <algorithm>
#include <memory>
#include <utility>
#include <vector>

#include "integer.hpp"

namespace markoff {

// Elements of Q(sqrt r_0, ..., sqrt r_{k-1}) as 2^k rational coefficients, the
// coefficient at bitmask S multiplying prod_{t in S} sqrt r_t. Radicands need
// not be squarefree or independent: sign() is exact regardless, by splitting off
// the top radical and squaring (double squaring).
class MultiQuad {
public:
    using Radicands = std::shared_ptr<const std::vector<Integer>>;

    static Radicands radicands(std::vector<Integer> rs) {
        for (const auto& r : rs) require(r > 0, errc::range_error, "radicands must be positive");
        require(rs.size() <= 6, errc::resource_limit, "too many radicals");
        return std::make_shared<const std::vector<Integer>>(std::move(rs));
    }

    MultiQuad(Radicands rad, const Rational& c = 0) : rad_(std::move(rad)), c_(size_t(1) << rad_->size()) { c_[0] = c; }

    // sqrt of radicand t
    static MultiQuad root(const Radicands& rad, size_t t, const Rational& coeff = 1) {
        MultiQuad x(rad);
        x.c_[size_t(1) << t] = coeff;
        return x;
    }

    size_t rank() const { return rad_->size(); }
    const Rational& coeff(size_t mask) const { return c_[mask]; }

    friend MultiQuad operator+(MultiQuad a, const MultiQuad& b) {
        a.check(b);
        for (size_t i = 0; i < a.c_.size(); ++i) a.c_[i] += b.c_[i];
        return a;
    }
    friend MultiQuad operator-(MultiQuad a, const MultiQuad& b) {
        a.check(b);
        for (size_t i = 0; i < a.c_.size(); ++i) a.c_[i] -= b.c_[i];
        return a;
    }
    MultiQuad operator-() const {
        MultiQuad r = *this;
        for (auto& c : r.c_) c = -c;
        return r;
    }
    friend MultiQuad operator*(const MultiQuad& a, const MultiQuad& b) {
        a.check(b);
        MultiQuad r(a.rad_);
        r.c_ = mul(a.c_, b.c_, a.rank(), *a.rad_);
        return r;
    }
    friend MultiQuad operator*(MultiQuad a, const Rational& s) {
        for (auto& c : a.c_) c *= s;
        return a;
    }
    friend MultiQuad operator+(MultiQuad a, const Rational& s) {
        a.c_[0] += s;
        return a;
    }
    friend MultiQuad operator-(MultiQuad a, const Rational& s) {
        a.c_[0] -= s;
        return a;
    }
    MultiQuad inverse() const {
        MultiQuad r(rad_);
        r.c_ = inv(c_, rank(), *rad_);
        return r;
    }
    friend MultiQuad operator/(const MultiQuad& a, const MultiQuad& b) { return a * b.inverse(); }
    friend MultiQuad operator/(MultiQuad a, const Rational& s) {
        require(s != 0, errc::division_by_zero, "division by zero");
        for (auto& c : a.c_) c /= s;
        return a;
    }

    int sign() const { return sgn_rec(c_, rank(), *rad_); }

    friend bool operator<(const MultiQuad& a, const MultiQuad& b) { return (a - b).sign() < 0; }
    friend bool operator>(const MultiQuad& a, const MultiQuad& b) { return (a - b).sign() > 0; }
    friend bool operator==(const MultiQuad& a, const MultiQuad& b) { return (a - b).sign() == 0; }

    // certified rational enclosure [lo, hi], radicals resolved to `bits` binary places
    std::pair<Rational, Rational> enclose(unsigned bits = 128) const {
        Integer scale = Integer(1) << bits;
        std::vector<std::pair<Rational, Rational>> roots;
        for (const auto& r : *rad_) {
            Integer s = isqrt(r * scale * scale);
            bool exact = s * s == r * scale * scale;
            roots.emplace_back(make_rational(s, scale), make_rational(exact ? s : Integer(s + 1), scale));
        }
        Rational lo = 0, hi = 0;
        for (size_t m = 0; m < c_.size(); ++m) {
            if (c_[m] == 0) continue;
            Rational plo = 1, phi = 1;
            for (size_t t = 0; t < rank(); ++t)
                if (m >> t & 1) {
                    plo *= roots[t].first;
                    phi *= roots[t].second;
                }
            if (c_[m] > 0) {
                lo += c_[m] * plo;
                hi += c_[m] * phi;
            } else {
                lo += c_[m] * phi;
                hi += c_[m] * plo;
            }
        }
        return {lo, hi};
    }

    double approx() const {
        auto [lo, hi] = enclose(80);
        return Rational((lo + hi) / 2).get_d();
    }

private:
    Radicands rad_;
    std::vector<Rational> c_;

    void check(const MultiQuad& o) const {
        require(rad_ == o.rad_ || *rad_ == *o.rad_, errc::precondition_violation, "MultiQuad operands over different radicals");
    }

    static std::vector<Rational> mul(const std::vector<Rational>& a, const std::vector<Rational>& b, size_t k,
                                     const std::vector<Integer>& rad) {
        std::vector<Rational> r(size_t(1) << k);
        for (size_t i = 0; i < a.size(); ++i) {
            if (a[i] == 0) continue;
            for (size_t j = 0; j < b.size(); ++j) {
                if (b[j] == 0) continue;
                Rational t = a[i] * b[j];
                size_t both = i & j;
                for (size_t s = 0; s < k; ++s)
                    if (both >> s & 1) t *= rad[s];
                r[i ^ j] += t;
            }
        }
        return r;
    }

    // alpha + beta sqrt(r_{k-1}), alpha and beta over the first k-1 radicals
    static std::pair<std::vector<Rational>, std::vector<Rational>> split(const std::vector<Rational>& a, size_t k) {
        size_t half = size_t(1) << (k - 1);
        return {std::vector<Rational>(a.begin(), a.begin() + half), std::vector<Rational>(a.begin() + half, a.end())};
    }

    static std::vector<Rational> norm_down(const std::vector<Rational>& al, const std::vector<Rational>& be, size_t k,
                                           const std::vector<Integer>& rad) {
        auto a2 = mul(al, al, k - 1, rad);
        auto b2 = mul(be, be, k - 1, rad);
        for (size_t i = 0; i < a2.size(); ++i) a2[i] -= b2[i] * rad[k - 1];
        return a2;
    }

    static int sgn_rec(const std::vector<Rational>& a, size_t k, const std::vector<Integer>& rad) {
        if (k == 0) return ::sgn(a[0]);
        auto [al, be] = split(a, k);
        int sb = sgn_rec(be, k - 1, rad);
        int sa = sgn_rec(al, k - 1, rad);
        if (sb == 0) return sa;
        if (sa == 0 || sa == sb) return sb;
        return sa * sgn_rec(norm_down(al, be, k, rad), k - 1, rad);
    }

    static std::vector<Rational> inv(const std::vector<Rational>& a, size_t k, const std::vector<Integer>& rad) {
        if (k == 0) {
            require(a[0] != 0, errc::division_by_zero, "inverse of zero");
            return {1 / a[0]};
        }
        auto [al, be] = split(a, k);
        auto n = norm_down(al, be, k, rad);
        if (sgn_rec(n, k - 1, rad) == 0) {
            // top radical is a square in the lower field; only pure lower-field elements are invertible then
            bool lower = std::all_of(be.begin(), be.end(), [](const Rational& x) { return x == 0; });
            require(lower, errc::division_by_zero, "non-invertible element (dependent radicals)");
            auto il = inv(al, k - 1, rad);
            il.resize(a.size());
            return il;
        }
        auto ni = inv(n, k - 1, rad);
        auto ra = mul(al, ni, k - 1, rad);
        auto rb = mul(be, ni, k - 1, rad);
        std::vector<Rational> r(a.size());
        for (size_t i = 0; i < ra.size(); ++i) {
            r[i] = ra[i];
            r[i + ra.size()] = -rb[i];
        }
        return r;
    }
};

} // namespace markoff
