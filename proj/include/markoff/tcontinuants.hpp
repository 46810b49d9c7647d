#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "cf_core.hpp"
#include "tsing.hpp"

namespace markoff {

using IndexSet = std::vector<long>;  // increasing, 1-based

inline constexpr long index_set_cap = 25;

struct IndexFamily {
    long m = 0;
    std::vector<IndexSet> J;  // J_m, subsets of {1..m-1}
    std::vector<IndexSet> I;  // J_m followed by J_{m+1}; the empty set shows up twice
};

namespace detail {

inline bool by_degree_then_lex(const IndexSet& a, const IndexSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

// J_0 .. J_upto via J_m = J_{m-2} u {X u {m-1} : X in J_{m-1}}
inline std::vector<std::vector<IndexSet>> build_J(long upto) {
    std::vector<std::vector<IndexSet>> J{{IndexSet{}}, {IndexSet{}}};
    for (long m = 2; m <= upto; ++m) {
        auto next = J[m - 2];
        for (auto X : J[m - 1]) {
            X.push_back(m - 1);
            next.push_back(std::move(X));
        }
        std::sort(next.begin(), next.end(), by_degree_then_lex);
        J.push_back(std::move(next));
    }
    return J;
}

} // namespace detail

inline IndexFamily index_sets(long m) {
    require(m >= 0, errc::range_error, "m must be non-negative");
    require(m <= index_set_cap, errc::resource_limit,
            "explicit index sets are capped at m = " + std::to_string(index_set_cap));
    auto J = detail::build_J(m + 1);
    IndexFamily f{m, J[m], J[m]};
    f.I.insert(f.I.end(), J[m + 1].begin(), J[m + 1].end());
    std::stable_sort(f.I.begin(), f.I.end(), detail::by_degree_then_lex);
    return f;
}

// a nonempty member i_1 < ... < i_k of J_m has i_1 = k + m mod 2
inline bool even_odd_ok(const IndexSet& X, long m) {
    if (X.empty()) return true;
    return ((X.front() - long(X.size()) - m) % 2 + 2) % 2 == 0;
}

struct TPolyEval {
    Digits args;
    Integer S;  // S_m(c_1..c_{m-1})
    Integer T;  // T_m(c_1..c_m)
};

// S_0..S_{m+1} of the arguments, S_{m+1} being the one that uses every argument
inline std::vector<Integer> semicontinuants(const Digits& c) {
    std::vector<Integer> s{1, 1};
    for (size_t i = 2; i <= c.size() + 1; ++i) s.push_back(s[i - 2] + c[i - 2] * s[i - 1]);
    return s;
}

// S_j(c_1..c_{j-1}); only the first j-1 arguments are read
inline Integer S_of(size_t j, const Digits& c) {
    require(j == 0 || j - 1 <= c.size(), errc::range_error, "S_j needs j-1 arguments");
    return semicontinuants(Digits(c.begin(), c.begin() + (j == 0 ? 0 : j - 1)))[j];
}

inline Integer T_of(size_t j, const Digits& c) {
    require(j <= c.size(), errc::range_error, "T_j needs j arguments");
    auto s = semicontinuants(Digits(c.begin(), c.begin() + j));
    return s[j] + s[j + 1];
}

inline TPolyEval eval_ST(const Digits& args) {
    auto s = semicontinuants(args);
    size_t m = args.size();
    return {args, s[m], s[m] + s[m + 1]};
}

inline Integer subset_sum(const std::vector<IndexSet>& family, const Digits& c) {
    Integer total = 0;
    for (const auto& X : family) {
        Integer p = 1;
        for (long i : X) p *= c[i - 1];
        total += p;
    }
    return total;
}

inline TPolyEval eval_ST_subsets(const Digits& args) {
    auto f = index_sets(long(args.size()));
    return {args, subset_sum(f.J, args), subset_sum(f.I, args)};
}

inline std::string monomial_string(const std::vector<IndexSet>& family) {
    long constant = 0;
    std::string terms;
    for (const auto& X : family) {
        if (X.empty()) {
            ++constant;
            continue;
        }
        terms += " + ";
        for (long i : X) terms += "x_" + std::to_string(i);
    }
    return std::to_string(constant) + terms;
}

struct MonomialDump {
    std::string S, T;
};

inline MonomialDump monomials(long m) {
    require(m <= 6, errc::resource_limit, "monomial listing is limited to m <= 6");
    auto f = index_sets(m);
    return {monomial_string(f.J), monomial_string(f.I)};
}

struct IdentityReport {
    std::vector<std::string> checked;
};

namespace detail {

inline void clause(IdentityReport& rep, const std::string& name, bool ok, const std::string& detail_msg) {
    require(ok, errc::identity_violation, name + ": " + detail_msg);
    rep.checked.push_back(name);
}

inline Digits slice(const Digits& c, size_t from, size_t to) {  // c_from..c_to, 1-based inclusive
    if (to < from) return {};
    return Digits(c.begin() + (from - 1), c.begin() + to);
}

inline Digits rev_slice(const Digits& c, size_t from, size_t to) {  // c_to down to c_from
    return reversed(slice(c, from, to));
}

} // namespace detail

// Identities at one split point / perturbation position i with shift d.
// m = 0 only has trivial clauses; otherwise 1 <= split <= m.
inline IdentityReport identity_suite(const Digits& c, long split, const Integer& d) {
    using detail::clause;
    using detail::rev_slice;
    using detail::slice;
    IdentityReport rep;
    const size_t m = c.size();
    auto ev = eval_ST(c);
    auto s = semicontinuants(c);
    clause(rep, "T=S+S", ev.T == s[m] + s[m + 1], "T_m != S_m + S_{m+1}");
    clause(rep, "T-reverse", ev.T == eval_ST(reversed(c)).T, "T_m not symmetric");
    if (m == 0) {
        clause(rep, "base", ev.S == 1 && ev.T == 2, "S_0 = 1, T_0 = 2");
        return rep;
    }
    require(split >= 1 && size_t(split) <= m, errc::precondition_violation, "split must lie in 1..m");
    const size_t i = size_t(split);

    bool positive = std::all_of(c.begin(), c.end(), [](const Integer& x) { return x >= 1; });
    if (positive) {
        auto p = pair_from_le(c);
        clause(rep, "LE-pair", ev.T == p.n && ev.S == p.k, "(T, S) differs from the LE pair");
        Integer kp = S_of(m, reversed(c));  // S_m(c_m..c_2)
        Integer sign = (m % 2 == 1) ? 1 : -1;
        clause(rep, "inverse", mod(ev.S * kp - sign, ev.T) == 0, "k k' != (-1)^{m+1} mod e");
    }
    if (m > 1) {
        Digits k = c;
        std::reverse(k.begin(), k.end());
        k.front() += 1;
        k.back() += 1;
        clause(rep, "continuant-T", ev.T == continuant(k), "T_m != K(c_m+1, .., c_1+1)");
        clause(rep, "continuant-S", ev.S == continuant(Digits(k.begin() + 1, k.end())),
               "S_m != K(c_{m-1}, .., c_1+1)");
    }

    // product formula: split as i + (m - i)
    if (i < m) {
        size_t a = i, n = m - i;
        Integer rhs = S_of(a + 1, slice(c, 1, a)) * S_of(n + 1, rev_slice(c, a + 1, m)) +
                      S_of(a, slice(c, 1, a)) * S_of(n, rev_slice(c, a + 1, m));
        clause(rep, "product", ev.T == rhs, "T_{m+n} split at " + std::to_string(i));
    }

    Integer left = S_of(i, slice(c, 1, i - 1));             // S_i(c_1..c_{i-1})
    Integer right = S_of(m - i + 1, rev_slice(c, i + 1, m)); // S_{m-i+1}(c_m..c_{i+1})
    Digits cd = c;
    cd[i - 1] += d;
    clause(rep, "perturb", eval_ST(cd).T == ev.T + d * left * right, "+d at position " + std::to_string(i));

    Digits c2 = c;
    c2[i - 1] += 2;
    Integer rhs2 = right * T_of(i, slice(c, 1, i)) + left * T_of(m - i, slice(c, i + 1, m));
    clause(rep, "perturb+2", eval_ST(c2).T == rhs2, "+2 at position " + std::to_string(i));

    // alternating sum; the sign of the sum is (-1)^{j-1}, see the notes on the printed sign
    Integer alt = 0;
    for (size_t j = 1; j < i; ++j) alt += (j % 2 == 1 ? 1 : -1) * T_of(m - j, c);
    Integer lhs = s[m] + (i % 2 == 0 ? 1 : -1) * S_of(m - i + 1, c);
    clause(rep, "alternating", lhs == alt, "alternating sum at i = " + std::to_string(i));

    Integer tail = 0;
    for (size_t j = i + 1; j <= m; ++j) tail += c[j - 1] * s[j];
    clause(rep, "telescoping", ev.T - T_of(i, c) == tail, "T_m - T_i at i = " + std::to_string(i));
    return rep;
}

// every split position with shift d
inline IdentityReport identity_sweep(const Digits& c, const Integer& d) {
    if (c.empty()) return identity_suite(c, 0, d);
    IdentityReport all;
    for (long i = 1; i <= long(c.size()); ++i) {
        auto r = identity_suite(c, i, d);
        all.checked.insert(all.checked.end(), r.checked.begin(), r.checked.end());
    }
    return all;
}

} // namespace markoff
