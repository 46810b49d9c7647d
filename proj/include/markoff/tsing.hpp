#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "cf_core.hpp"
#include "markoff_tree.hpp"

namespace markoff {

// the T-singularity 1/n^2 (1, nk - 1)
struct TSingularity {
    Integer n, k;
    bool flipped = false; // set when normalized() replaced k by n - k

    TSingularity(Integer n_, Integer k_) : n(std::move(n_)), k(std::move(k_)) {
        require(n > 1, errc::range_error, "n must exceed 1");
        require(k > 0 && k < n, errc::range_error, "need 0 < k < n");
        require(gcd(n, k) == 1, errc::not_coprime, "n and k must be coprime");
    }

    // representative with k < n - k; (2, 1) is its own representative
    TSingularity normalized() const {
        if (2 * k <= n) return *this;
        TSingularity t(n, n - k);
        t.flipped = true;
        return t;
    }
};

using LengthEncoding = Digits;

inline TSingularity pair_from_le(const LengthEncoding& le) {
    for (const auto& c : le) require(c >= 1, errc::range_error, "LE entries must be positive");
    if (le.empty()) return {2, 1};
    Integer n = le[0] + 2, k = 1;
    for (size_t i = 1; i < le.size(); ++i) {
        Integer nk = n - k;
        n += le[i] * nk;
        k = nk;
    }
    return {n, k};
}

// Euclid on (n - k, k): n_{i-2} = p_{i-1} n_{i-1} + n_i until the remainder vanishes
inline LengthEncoding le_from_pair(const TSingularity& t0) {
    TSingularity t = t0.normalized();
    if (t.n == 2) return {};
    require(t.k < t.n - t.k, errc::precondition_violation, "need k < n - k");
    std::vector<Integer> ns{t.n - t.k, t.k}, ps{0}; // ps[0] unused, p is 1-based
    while (ns.back() != 0) {
        size_t i = ns.size();
        ps.push_back(fdiv(ns[i - 2], ns[i - 1]));
        ns.push_back(ns[i - 2] - ps.back() * ns[i - 1]);
    }
    size_t m = ps.size() - 1;
    LengthEncoding c(m);
    c[0] = ns[m - 1] - 1;
    for (size_t i = 2; i <= m; ++i) c[i - 1] = ps[m + 1 - i];
    return c;
}

struct PairCF {
    Digits digits;
    bool degenerate = false; // LE of length <= 1: plain expansion of n/k
};

// n/k = [c_m + 1, c_{m-1}, ..., c_2, c_1 + 1]
inline PairCF cf_of_pair(const TSingularity& t0) {
    TSingularity t = t0.normalized();
    auto le = le_from_pair(t);
    if (le.size() <= 1) return {cf_of_rational(t.n, t.k), true};
    size_t m = le.size();
    Digits d{le[m - 1] + 1};
    for (size_t i = m - 1; i >= 2; --i) d.push_back(le[i - 1]);
    d.push_back(le[0] + 1);
    require(eval_regular(d) == make_rational(t.n, t.k), errc::identity_violation, "LE expansion does not evaluate to n/k");
    return {d, false};
}

// Replays the LE as the two extension moves starting from [[4]]; the moves must alternate
// because each one leaves a 2 at the end it pads.
inline Digits hj_of_tsing(const TSingularity& t) {
    auto le = le_from_pair(t);
    Digits a{4};
    bool pad_right = true;
    for (const auto& c : le) {
        Digits twos(c.get_ui(), Integer(2));
        if (pad_right) {
            a.front() += c;
            a.insert(a.end(), twos.begin(), twos.end());
        } else {
            a.back() += c;
            a.insert(a.begin(), twos.begin(), twos.end());
        }
        pad_right = !pad_right;
    }
    Rational want = make_rational(t.n * t.n, t.n * t.k - 1);
    if (eval_hj(a) != want) a = reversed(a);
    require(eval_hj(a) == want, errc::identity_violation, "HJ replay does not reach n^2/(nk-1)");
    return a;
}

inline std::string hj_chain(const Digits& hj) {
    std::string s;
    for (size_t i = 0; i < hj.size(); ++i) s += (i ? " -- -" : "-") + hj[i].get_str();
    return s;
}

// ---------------------------------------------------------------- square expansions

struct SquareCF {
    Digits digits;
    Integer g, w;
    std::optional<Integer> v; // (w^2 + 9)/g when integral

    size_t s() const { return digits.size() / 2; }
    Integer W() const { return g - w; }
    Integer V() const {
        require(v.has_value(), errc::precondition_violation, "T-coweight undefined: w^2 + 9 not divisible by g");
        return *v + g - 2 * w;
    }
};

// recognizes [a_1..a_2s] = g^2/(gw - 1)
inline SquareCF make_square(const Digits& ds) {
    require(!ds.empty() && ds.size() % 2 == 0, errc::invalid_square_cf, "square expansion must have even length");
    require(ds.front() > 1 && ds.back() > 1, errc::invalid_square_cf, "square expansion must start and end above 1");
    for (const auto& a : ds) require(a >= 1, errc::invalid_square_cf, "digits must be positive");
    Rational x = eval_regular(ds);
    Integer p = x.get_num(), q = x.get_den();
    require(is_square(p), errc::invalid_square_cf, "numerator is not a square");
    Integer g = isqrt(p);
    require((q + 1) % g == 0, errc::invalid_square_cf, "denominator is not g w - 1");
    SquareCF sq{ds, g, (q + 1) / g, std::nullopt};
    Integer t = sq.w * sq.w + 9;
    if (t % g == 0) sq.v = t / g;
    return sq;
}

// palisplit: n/k = [c_1..c_s] gives n^2/(nk - 1) = [c_1..c_{s-1}, c_s -+ 1, c_s +- 1, c_{s-1}..c_1]
inline SquareCF square_cf(const TSingularity& t0) {
    TSingularity t = t0.normalized();
    require(t.k < t.n - t.k, errc::precondition_violation, "need k < n - k");
    Digits c = cf_of_rational(t.n, t.k); // Euclid already ends above 1
    size_t s = c.size();
    Digits d(c.begin(), c.end() - 1);
    if (s % 2 == 0) {
        d.push_back(c.back() - 1);
        d.push_back(c.back() + 1);
    } else {
        d.push_back(c.back() + 1);
        d.push_back(c.back() - 1);
    }
    for (size_t i = s - 1; i >= 1; --i) d.push_back(c[i - 1]);
    SquareCF sq = make_square(d);
    require(sq.g == t.n && sq.w == t.k, errc::identity_violation, "palisplit expansion evaluates wrongly");
    return sq;
}

// p/q = [1, a_1 - 1, a_2, ...] when p/(p - q) = [a_1, a_2, ...]
inline Digits one_prefixed(const Digits& a) {
    require(!a.empty() && a.front() >= 2, errc::precondition_violation, "first digit must be at least 2");
    Digits d{1, a.front() - 1};
    d.insert(d.end(), a.begin() + 1, a.end());
    return d;
}

struct RelatedCFs {
    Digits minus, plus, co_plus, co_minus; // n^2 over nk-1, nk+1, n(n-k)+1, n(n-k)-1
};

inline RelatedCFs related_cfs(const TSingularity& t0) {
    TSingularity t = t0.normalized();
    Integer n = t.n, k = t.k;
    Digits a = square_cf(t).digits;
    RelatedCFs r{a, reversed(a), one_prefixed(a), one_prefixed(reversed(a))};
    auto check = [&](const Digits& d, const Integer& den, const char* what) {
        require(eval_regular(d) == make_rational(n * n, den), errc::identity_violation, what);
    };
    check(r.plus, n * k + 1, "n^2/(nk+1) expansion");
    check(r.co_plus, n * (n - k) + 1, "n^2/(n(n-k)+1) expansion");
    check(r.co_minus, n * (n - k) - 1, "n^2/(n(n-k)-1) expansion");
    return r;
}

// ---------------------------------------------------------------- append-8 identities

struct Append8Clause {
    int clause;  // 1..8
    Digits digits;
    Rational expected;
};

inline std::vector<Append8Clause> append8_suite(const SquareCF& sq) {
    require(sq.w < sq.W(), errc::precondition_violation, "need w < g - w");
    const Integer V = sq.V(), g = sq.g, w = sq.w, W = sq.W(), v = *sq.v;
    const Digits& a = sq.digits;
    auto with = [](Digits d, std::initializer_list<long> tail) {
        for (long x : tail) d.emplace_back(x);
        return d;
    };
    auto lower_last = [](Digits d) {
        d.back() -= 1;
        return d;
    };
    Digits ra = reversed(a);
    std::vector<Append8Clause> out{
        {1, with(a, {8}), make_rational(9 * g * g - g * W + 1, 8 * g * w + g * v - 17)},
        {2, with(lower_last(a), {1, 8}), make_rational(9 * g * g - g * w - 1, 9 * g * w - g * v)},
        {3, with(one_prefixed(a), {8}), make_rational(9 * g * g - g * W + 1, 9 * g * W - g * V + 18)},
        {4, with(lower_last(one_prefixed(a)), {1, 8}), make_rational(9 * g * g - g * w - 1, 8 * g * W + g * V - 1)},
        {5, with(ra, {8}), make_rational(9 * g * g - g * W - 1, 8 * g * w + g * v - 1)},
        {6, with(lower_last(ra), {1, 8}), make_rational(9 * g * g - g * w + 1, 9 * g * w - g * v + 18)},
        {7, with(one_prefixed(ra), {8}), make_rational(9 * g * g - g * W - 1, 9 * g * W - g * V)},
        {8, with(lower_last(one_prefixed(ra)), {1, 8}), make_rational(9 * g * g - g * w + 1, 8 * g * W + g * V - 17)},
    };
    for (const auto& c : out)
        require(eval_regular(c.digits) == c.expected, errc::identity_violation,
                "append-8 clause " + std::to_string(c.clause) + " fails for g=" + g.get_str());
    return out;
}

// ---------------------------------------------------------------- mutation calculus

inline Integer t_weight(const Integer& e, const Integer& g, const Integer& f) {
    return mod(3 * modinv(e, g) * f, g);
}

// g^2/(g w_g - 1) = [a_2s..a_1, 8, 1, b_2t - 1, b_2t-1..b_1]
inline SquareCF juxtapose(const SquareCF& se, const SquareCF& sf) {
    require(se.g > 1 && sf.g > 2, errc::precondition_violation, "juxtaposition needs e > 1 and f > 2");
    Digits d = reversed(se.digits);
    d.emplace_back(8);
    d.emplace_back(1);
    d.push_back(sf.digits.back() - 1);
    for (size_t i = sf.digits.size() - 1; i >= 1; --i) d.push_back(sf.digits[i - 1]);
    SquareCF sq = make_square(d);
    require(is_markoff(se.g, sq.g, sf.g), errc::identity_violation, "juxtaposition left the Markoff triples");
    require(sq.w == t_weight(se.g, sq.g, sf.g), errc::identity_violation, "juxtaposition gives the wrong T-weight");
    return sq;
}

// (a_0..a_{m-1})_n
inline Digits pattern(const Digits& xs, long n) {
    require(n >= 0, errc::range_error, "repetition length must be nonnegative");
    require(n == 0 || !xs.empty(), errc::range_error, "cannot repeat an empty pattern");
    Digits out;
    for (long j = 0; j < n; ++j) out.push_back(xs[j % xs.size()]);
    return out;
}

// x inserted so that it becomes entry k (1-based)
inline Digits insert(const Integer& x, long k, Digits xs) {
    require(k >= 1 && size_t(k) <= xs.size() + 1, errc::range_error, "insertion position out of range");
    xs.insert(xs.begin() + (k - 1), x);
    return xs;
}

inline Digits cat(std::initializer_list<Digits> parts) {
    Digits out;
    for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    return out;
}

// Fibonacci: (1, F_{2n+1}, F_{2n-1}), n >= 3; Pell: (P_{2n-1}, P_{2n+1}, 2), n >= 1
inline SquareCF branch_seed(Branch kind, long n) {
    Digits d;
    Integer g;
    if (kind == Branch::Fibonacci) {
        require(n >= 3, errc::range_error, "Fibonacci seed needs n >= 3");
        d = insert(3, n, cat({{6}, pattern({1, 5}, 2 * n - 5), {6}}));
        g = fibonacci(2 * n + 1);
    } else {
        require(n >= 1, errc::range_error, "Pell seed needs n >= 1");
        d = insert(6, n, pattern({4, 8}, 2 * n - 1));
        g = pell(2 * n + 1);
    }
    SquareCF sq = make_square(d);
    require(sq.g == g, errc::identity_violation, "branch seed evaluates to the wrong Markoff number");
    return sq;
}

// first triples off the branches: (F_{2n+1}, g, F_{2n-1}), n >= 3, and (P_{2n-1}, g, P_{2n+1}), n >= 1
inline SquareCF branch_mutation_seed(Branch kind, long n) {
    Digits d;
    Integer e, f;
    if (kind == Branch::Fibonacci) {
        require(n >= 3, errc::range_error, "Fibonacci mutation seed needs n >= 3");
        Digits ones = pattern({1, 5}, 2 * n - 5);
        d = insert(3, 3 * n - 2, insert(3, n - 1, cat({{6}, ones, {6, 8}, ones, {6}})));
        e = fibonacci(2 * n + 1);
        f = fibonacci(2 * n - 1);
    } else {
        require(n >= 1, errc::range_error, "Pell mutation seed needs n >= 1");
        d = insert(6, 3 * n + 1, insert(6, n, cat({pattern({4, 8}, 2 * n - 2), {1, 3}, pattern({8, 4}, 2 * n - 2)})));
        e = pell(2 * n - 1);
        f = pell(2 * n + 1);
    }
    SquareCF sq = make_square(d);
    require(is_markoff(e, sq.g, f) && sq.g == 3 * e * f - (kind == Branch::Fibonacci ? 1 : 2), errc::identity_violation,
            "mutation seed evaluates to the wrong Markoff number");
    require(sq.w == t_weight(e, sq.g, f), errc::identity_violation, "mutation seed gives the wrong T-weight");
    return sq;
}

// Square expansions of (e, g, f) along a path, built only from the seeds and juxtaposition.
// Entries are empty for e = 1.
struct SquareTriple {
    MarkoffNode node;
    std::array<std::optional<SquareCF>, 3> sq;
};

inline SquareTriple square_cfs_along(const std::string& path) {
    SquareTriple t{root(), {std::nullopt, branch_seed(Branch::Pell, 1), std::nullopt}};
    // (1, 5, 2): 2 has no square expansion of the studied type, 1 neither
    long fib = 2, pell_n = 1;
    bool on_fib = true, on_pell = true;
    for (char c : path) {
        MarkoffNode next = mutate(t.node, c);
        std::optional<SquareCF> fresh;
        if (c == 'L') {
            on_pell = false;
            ++fib;
            fresh = on_fib ? branch_seed(Branch::Fibonacci, fib) : juxtapose(*t.sq[0], *t.sq[1]);
            t.sq = {t.sq[0], fresh, t.sq[1]};
        } else {
            on_fib = false;
            ++pell_n;
            fresh = on_pell ? branch_seed(Branch::Pell, pell_n) : juxtapose(*t.sq[1], *t.sq[2]);
            t.sq = {t.sq[1], fresh, t.sq[2]};
        }
        t.node = next;
    }
    return t;
}

inline SquareCF square_cf_of_node(const MarkoffNode& n) { return square_cf(TSingularity(n.g, n.w[1])); }

// ---------------------------------------------------------------- length encodings

// LE straight from the square expansion
inline LengthEncoding le_of_square(const SquareCF& sq) {
    const Digits& a = sq.digits;
    size_t s = sq.s();
    require(s >= 1, errc::invalid_square_cf, "empty square expansion");
    auto A = [&](size_t i) -> const Integer& { return a[i - 1]; };
    LengthEncoding le;
    if (s % 2 == 1) {
        if (s == 1) return {A(2) - 1};
        le.push_back(A(s) - 2);
        for (size_t i = s - 1; i >= 2; --i) le.push_back(A(i));
        le.push_back(A(1) - 1);
    } else {
        for (size_t i = s; i >= 2; --i) le.push_back(A(i));
        le.push_back(A(1) - 1);
    }
    for (const auto& c : le) require(c >= 1, errc::invalid_square_cf, "expansion does not have the palisplit shape");
    return le;
}

// the right-hand halves of the same statement; the even one with a_{s+1} - 2
inline LengthEncoding le_of_square_right(const SquareCF& sq) {
    const Digits& a = sq.digits;
    size_t s = sq.s();
    auto A = [&](size_t i) -> const Integer& { return a[i - 1]; };
    LengthEncoding le;
    le.push_back(s % 2 == 1 ? A(s + 1) : A(s + 1) - 2);
    for (size_t i = s + 2; i <= 2 * s - 1; ++i) le.push_back(A(i));
    if (s == 1) le.back() -= 1;
    else le.push_back(A(2 * s) - 1);
    return le;
}

// closed forms on the branches: Fibonacci n >= 3, Pell n >= 2
inline LengthEncoding branch_le(Branch kind, long n) {
    if (kind == Branch::Fibonacci) {
        require(n >= 3, errc::range_error, "Fibonacci LE needs n >= 3");
        return n % 2 == 0 ? cat({{3}, pattern({1, 5}, n - 2)}) : pattern({1, 5}, n - 1);
    }
    require(n >= 2, errc::range_error, "Pell LE needs n >= 2");
    return n % 2 == 0 ? cat({{6}, pattern({4, 8}, n - 2), {3}}) : cat({pattern({4, 8}, n - 1), {3}});
}

struct DigitStructure {
    bool alphabet_ok = true, no_equal_neighbors = true, has4 = false, has5 = false;
};

inline DigitStructure digit_structure(const Digits& a) {
    DigitStructure d;
    for (size_t i = 0; i < a.size(); ++i) {
        long x = a[i].get_si();
        if (!(x == 1 || x == 3 || x == 4 || x == 5 || x == 6 || x == 8)) d.alphabet_ok = false;
        if (i + 1 < a.size() && a[i] == a[i + 1]) d.no_equal_neighbors = false;
        d.has4 |= x == 4;
        d.has5 |= x == 5;
    }
    return d;
}

} // namespace markoff
