#pragma once

#include <mpfr.h>

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <mutex>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "markoff_tree.hpp"

namespace markoff {

// Zagier's constant as quoted; only these 15 digits are known to us, so deviations carry that error.
inline constexpr const char* zagier_constant = "0.180717104711507";

inline constexpr unsigned long enumerate_digit_cap = 1000;   // explicit value lists
inline constexpr unsigned long census_digit_cap = 20000;     // counting runs

namespace detail {

struct Triple {
    Integer e, g, f;
};

// Regular triples with g <= bound, split into independent subtrees. Children always have a
// larger maximum, so a subtree is abandoned as soon as its top exceeds the bound.
template <class Visit>
void walk_subtree(Triple start, const Integer& bound, Visit&& visit) {
    std::vector<Triple> stack;
    stack.push_back(std::move(start));
    Integer t;
    while (!stack.empty()) {
        Triple n = std::move(stack.back());
        stack.pop_back();
        if (n.g > bound) continue;
        visit(n.g);
        t = 3 * n.e * n.g - n.f;
        Triple l{n.e, t, n.g};
        t = 3 * n.f * n.g - n.e;
        Triple r{n.g, t, std::move(n.f)};
        stack.push_back(std::move(r));
        stack.push_back(std::move(l));
    }
}

// Breadth-first frontier of about `want` subtrees; the nodes above it are visited directly.
template <class Visit>
std::vector<Triple> split_frontier(const Integer& bound, size_t want, Visit&& visit) {
    std::vector<Triple> frontier{{1, 5, 2}};
    while (frontier.size() < want) {
        std::vector<Triple> next;
        for (auto& n : frontier) {
            if (n.g > bound) continue;
            visit(n.g);
            next.push_back({n.e, 3 * n.e * n.g - n.f, n.g});
            next.push_back({n.g, 3 * n.f * n.g - n.e, n.f});
        }
        if (next.empty()) return {};
        frontier = std::move(next);
    }
    return frontier;
}

// Runs make_worker()'s visitor over every regular triple with g <= bound on `threads` threads.
// Each worker owns its visitor; results are merged by the caller.
template <class State, class Visit>
std::vector<State> parallel_walk(const Integer& bound, unsigned threads, Visit visit) {
    threads = std::max(1u, threads);
    std::vector<State> states(threads + 1);
    auto frontier = split_frontier(bound, 64 * size_t(threads), [&](const Integer& g) { visit(states[threads], g); });
    std::atomic<size_t> next{0};
    auto work = [&](unsigned id) {
        for (size_t i; (i = next.fetch_add(1)) < frontier.size();)
            walk_subtree(frontier[i], bound, [&](const Integer& g) { visit(states[id], g); });
    };
    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned id = 0; id < threads; ++id) pool.emplace_back(work, id);
        for (auto& th : pool) th.join();
    }
    return states;
}

inline unsigned long decimal_digits_of(const Integer& x) { return mpz_sizeinbase(x.get_mpz_t(), 10); }

} // namespace detail

// All Markoff numbers <= bound, sorted, each once.
inline std::vector<Integer> enumerate_markoff(const Integer& bound, unsigned threads = 1) {
    require(bound >= 1, errc::range_error, "bound must be at least 1");
    require(detail::decimal_digits_of(bound) <= enumerate_digit_cap + 1, errc::resource_limit,
            "explicit enumeration is capped at 10^" + std::to_string(enumerate_digit_cap) + "; use the counting census");
    auto parts = detail::parallel_walk<std::vector<Integer>>(
        bound, threads, [](std::vector<Integer>& out, const Integer& g) { out.push_back(g); });
    std::vector<Integer> all{1};
    if (bound >= 2) all.emplace_back(2);
    for (auto& p : parts)
        for (auto& x : p) all.push_back(std::move(x));
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    return all;
}

struct UniquenessReport {
    size_t maxima = 0;                // regular triples visited (plus 1 and 2)
    std::vector<Integer> duplicates;  // values that are the maximum of more than one triple
};

inline UniquenessReport uniqueness_check(const Integer& bound, unsigned threads = 1) {
    require(bound >= 1, errc::range_error, "bound must be at least 1");
    require(detail::decimal_digits_of(bound) <= enumerate_digit_cap + 1, errc::resource_limit,
            "uniqueness check is capped at 10^" + std::to_string(enumerate_digit_cap));
    auto parts = detail::parallel_walk<std::vector<Integer>>(
        bound, threads, [](std::vector<Integer>& out, const Integer& g) { out.push_back(g); });
    std::vector<Integer> all{1};
    if (bound >= 2) all.emplace_back(2);
    for (auto& p : parts)
        for (auto& x : p) all.push_back(std::move(x));
    std::sort(all.begin(), all.end());
    UniquenessReport rep;
    rep.maxima = all.size();
    for (size_t i = 1; i < all.size(); ++i)
        if (all[i] == all[i - 1] && (rep.duplicates.empty() || rep.duplicates.back() != all[i]))
            rep.duplicates.push_back(all[i]);
    return rep;
}

// ---------------------------------------------------------------- counting census

// M(10^k) for k = 0..k_max without storing the numbers. Duplicate maxima are caught through
// 128-bit residue fingerprints and then confirmed exactly by a second pass.
struct CensusCounts {
    long k_max = 0;
    std::vector<uint64_t> M;          // M[k] = number of distinct Markoff numbers <= 10^k
    uint64_t maxima = 0;              // triples visited, 1 and 2 included
    std::vector<Integer> duplicates;  // confirmed
};

namespace detail {

inline constexpr unsigned long fp_p1 = 2305843009213693951UL;  // 2^61 - 1
inline constexpr unsigned long fp_p2 = 2305843009213693921UL;  // prime below it

struct Fingerprint {
    unsigned long a, b;
    auto operator<=>(const Fingerprint&) const = default;
};

inline Fingerprint fingerprint(const Integer& g) {
    return {mpz_fdiv_ui(g.get_mpz_t(), fp_p1), mpz_fdiv_ui(g.get_mpz_t(), fp_p2)};
}

struct CountState {
    std::vector<uint64_t> hist;  // hist[k]: maxima with 10^{k-1} < g <= 10^k
    std::vector<Fingerprint> fps;
};

// smallest k with g <= 10^k
inline long decade(const Integer& g, const std::vector<Integer>& pow10s) {
    long k = long(decimal_digits_of(g));
    while (k > 0 && g <= pow10s[k - 1]) --k;
    return k;
}

} // namespace detail

inline CensusCounts census_counts(long k_max, unsigned threads = 1) {
    require(k_max >= 0, errc::range_error, "k must be non-negative");
    require(k_max <= long(census_digit_cap), errc::resource_limit,
            "census is capped at 10^" + std::to_string(census_digit_cap));
    std::vector<Integer> pow10s(k_max + 2);
    pow10s[0] = 1;
    for (long k = 1; k <= k_max + 1; ++k) pow10s[k] = pow10s[k - 1] * 10;
    const Integer& bound = pow10s[k_max];
    auto visit = [&](detail::CountState& st, const Integer& g) {
        if (st.hist.empty()) st.hist.assign(k_max + 1, 0);
        st.hist[detail::decade(g, pow10s)]++;
        st.fps.push_back(detail::fingerprint(g));
    };
    auto parts = detail::parallel_walk<detail::CountState>(bound, threads, visit);
    std::vector<uint64_t> hist(k_max + 1, 0);
    std::vector<detail::Fingerprint> fps;
    for (auto& p : parts) {
        for (size_t k = 0; k < p.hist.size(); ++k) hist[k] += p.hist[k];
        fps.insert(fps.end(), p.fps.begin(), p.fps.end());
        p.fps.clear();
        p.fps.shrink_to_fit();
    }
    // 1 and 2 are maxima of the singular triples only
    hist[0] += 1;
    if (k_max >= 1) hist[1] += 1;
    std::sort(fps.begin(), fps.end());
    std::vector<detail::Fingerprint> suspects;
    for (size_t i = 1; i < fps.size(); ++i)
        if (fps[i] == fps[i - 1] && (suspects.empty() || suspects.back() != fps[i])) suspects.push_back(fps[i]);

    CensusCounts out;
    out.k_max = k_max;
    out.maxima = fps.size() + 1 + (k_max >= 1 ? 1 : 0);
    if (!suspects.empty()) {
        // exact second pass over the suspicious fingerprints only
        std::vector<Integer> hits;
        std::mutex mu;
        detail::parallel_walk<int>(bound, threads, [&](int&, const Integer& g) {
            if (std::binary_search(suspects.begin(), suspects.end(), detail::fingerprint(g))) {
                std::lock_guard<std::mutex> lock(mu);
                hits.push_back(g);
            }
        });
        std::sort(hits.begin(), hits.end());
        for (size_t i = 1; i < hits.size(); ++i)
            if (hits[i] == hits[i - 1] && (out.duplicates.empty() || out.duplicates.back() != hits[i])) {
                out.duplicates.push_back(hits[i]);
                hist[detail::decade(hits[i], pow10s)]--;  // count distinct values
            }
    }
    out.M.resize(k_max + 1);
    uint64_t run = 0;
    for (long k = 0; k <= k_max; ++k) out.M[k] = run += hist[k];
    return out;
}

// ---------------------------------------------------------------- Zagier deviations

struct Deviation {
    long k;
    uint64_t M;
    std::string dev_logn;   // M - C (ln 10^k)^2
    std::string dev_log3n;  // M - C (ln 3 10^k)^2
    double logn_value;
};

namespace detail {

class Mpfr {
public:
    explicit Mpfr(mpfr_prec_t prec) { mpfr_init2(x_, prec); }
    ~Mpfr() { mpfr_clear(x_); }
    Mpfr(const Mpfr&) = delete;
    Mpfr& operator=(const Mpfr&) = delete;
    mpfr_ptr get() { return x_; }

    std::string fixed(int decimals) {
        char* buf = nullptr;
        mpfr_asprintf(&buf, "%.*Rf", decimals, x_);
        std::string s(buf);
        mpfr_free_str(buf);
        return s;
    }

private:
    mpfr_t x_;
};

// M - C (ln(scale n))^2 at 256 bits
inline std::string deviation_at(uint64_t M, const Integer& n, long scale, int decimals, double* as_double = nullptr) {
    const mpfr_prec_t prec = 256;
    Mpfr C(prec), L(prec), t(prec), out(prec);
    mpfr_set_str(C.get(), zagier_constant, 10, MPFR_RNDN);
    mpfr_set_z(t.get(), n.get_mpz_t(), MPFR_RNDN);  // rounding n moves ln n by under 2^-255
    mpfr_mul_si(t.get(), t.get(), scale, MPFR_RNDN);
    mpfr_log(L.get(), t.get(), MPFR_RNDN);
    mpfr_sqr(L.get(), L.get(), MPFR_RNDN);
    mpfr_mul(L.get(), L.get(), C.get(), MPFR_RNDN);
    mpfr_set_ui(out.get(), 0, MPFR_RNDN);
    mpfr_add_d(out.get(), out.get(), double(M), MPFR_RNDN);  // exact below 2^53
    mpfr_sub(out.get(), out.get(), L.get(), MPFR_RNDN);
    if (as_double) *as_double = mpfr_get_d(out.get(), MPFR_RNDN);
    return out.fixed(decimals);
}

} // namespace detail

// deviations at an arbitrary bound n; k is only carried along for the CSV
inline Deviation zagier_deviation_at(const Integer& n, uint64_t M, long k = -1, int decimals = 15) {
    require(n >= 1, errc::range_error, "n must be at least 1");
    require(M < (uint64_t(1) << 53), errc::resource_limit, "count too large for the deviation formatter");
    Deviation d{k, M, "", "", 0};
    d.dev_logn = detail::deviation_at(M, n, 1, decimals, &d.logn_value);
    d.dev_log3n = detail::deviation_at(M, n, 3, decimals);
    return d;
}

inline Deviation zagier_deviation(long k, uint64_t M, int decimals = 15) {
    require(k >= 0, errc::range_error, "k must be non-negative");
    return zagier_deviation_at(pow10(k), M, k, decimals);
}

inline std::vector<Deviation> zagier_table(const CensusCounts& c, long step = 1, int decimals = 15) {
    require(step >= 1, errc::range_error, "step must be positive");
    std::vector<Deviation> out;
    for (long k = 0; k <= c.k_max; k += step) out.push_back(zagier_deviation(k, c.M[k], decimals));
    return out;
}

inline std::string deviation_csv(const std::vector<Deviation>& rows) {
    std::ostringstream os;
    os << "k,M,dev_logn,dev_log3n\n";
    for (const auto& d : rows) os << d.k << "," << d.M << "," << d.dev_logn << "," << d.dev_log3n << "\n";
    return os.str();
}

// ---------------------------------------------------------------- regression

struct LinearFit {
    double slope = 0, intercept = 0;
    size_t n = 0;
};

// ordinary least squares y = intercept + slope x, accumulated in long double around the means
inline LinearFit least_squares(const std::vector<double>& x, const std::vector<double>& y) {
    require(x.size() == y.size() && x.size() >= 2, errc::precondition_violation, "need at least two points");
    long double mx = 0, my = 0;
    for (size_t i = 0; i < x.size(); ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= x.size();
    my /= x.size();
    long double sxx = 0, sxy = 0;
    for (size_t i = 0; i < x.size(); ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
    }
    require(sxx > 0, errc::precondition_violation, "x values are all equal");
    LinearFit f;
    f.slope = double(sxy / sxx);
    f.intercept = double(my - sxy / sxx * mx);
    f.n = x.size();
    return f;
}

// Reads `k,M,dev_logn,...` CSV (header optional) and fits dev_logn against k.
inline LinearFit regression_from_csv(const std::string& csv) {
    std::istringstream in(csv);
    std::string line;
    std::vector<double> x, y;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == 'k') continue;
        std::istringstream ls(line);
        std::string k, M, dev;
        require(std::getline(ls, k, ',') && std::getline(ls, M, ',') && std::getline(ls, dev, ','),
                errc::parse_error, "bad census CSV line: " + line);
        try {
            x.push_back(std::stod(k));
            y.push_back(std::stod(dev));
        } catch (const std::exception&) {
            fail(errc::parse_error, "bad number in census CSV line: " + line);
        }
    }
    return least_squares(x, y);
}

// ---------------------------------------------------------------- decorated table

struct TableRow {
    Integer m, r, s, w, v;
    std::string path;  // node where m is the maximum; 1 and 2 come from the root's outer slots
};

inline std::vector<TableRow> table_gen(size_t count) {
    require(count >= 1, errc::range_error, "count must be positive");
    require(count <= 100000, errc::resource_limit, "table is capped at 100000 rows");
    MarkoffNode r0 = root();
    std::vector<TableRow> rows{{1, r0.r[0], r0.s[0], r0.w[0], r0.v[0], "(e)"},
                               {2, r0.r[2], r0.s[2], r0.w[2], r0.v[2], "(f)"}};
    // grow the bound until enough maxima fall below it
    for (Integer bound = 1000;; bound *= bound) {
        std::vector<TableRow> found = {rows[0], rows[1]};
        std::vector<MarkoffNode> stack{r0};
        while (!stack.empty()) {
            MarkoffNode n = std::move(stack.back());
            stack.pop_back();
            if (n.g > bound) continue;
            found.push_back({n.g, n.r[1], n.s[1], n.w[1], n.v[1], n.path.empty() ? "-" : n.path});
            stack.push_back(mutate(n, 'R'));
            stack.push_back(mutate(n, 'L'));
        }
        if (found.size() >= count) {
            std::sort(found.begin(), found.end(), [](const TableRow& a, const TableRow& b) { return a.m < b.m; });
            found.resize(count);
            return found;
        }
    }
}

inline std::string table_tsv(const std::vector<TableRow>& rows) {
    std::ostringstream os;
    os << "m\tr\ts\tw\tv\tpath\n";
    for (const auto& t : rows) os << t.m << "\t" << t.r << "\t" << t.s << "\t" << t.w << "\t" << t.v << "\t" << t.path << "\n";
    return os.str();
}

} // namespace markoff
