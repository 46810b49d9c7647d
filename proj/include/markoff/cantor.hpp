#pragma once

#include <cmath>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "cf_core.hpp"
#include "frobenius.hpp"
#include "markoff_tree.hpp"
#include "surd.hpp"
#include "tsing.hpp"

namespace markoff {

// R: limits of m/r (slopes r/m). T: limits of g/w (slopes w/g).
enum class Spectrum { R, T };

inline Spectrum parse_spectrum(const std::string& s) {
    if (s == "R" || s == "r") return Spectrum::R;
    if (s == "T" || s == "t") return Spectrum::T;
    fail(errc::parse_error, "spectrum must be R or T");
}

inline const char* spectrum_name(Spectrum s) { return s == Spectrum::R ? "R" : "T"; }

// one entry of a triple with its weight pair: (g, r, s) for R, (g, w, v) for T
struct WeightedNumber {
    Integer g, weight, coweight;
};

inline WeightedNumber weighted(const MarkoffNode& n, int slot, Spectrum sp) {
    const Integer& x = slot == 0 ? n.e : slot == 1 ? n.g : n.f;
    if (sp == Spectrum::R) return {x, n.r[slot], n.s[slot]};
    return {x, n.w[slot], n.v[slot]};
}

namespace detail {

using QI = QuadraticIrrational;

inline QI qi(const Rational& x) { return QI(x); }

// 1/2 (k g -+ 2 r + c sqrt(9g^2 - 4)) / (k r -+ s), with (k, c) = (3, 1) for R and (9, 3) for T
inline QI closed_limit(const WeightedNumber& x, Spectrum sp, bool second) {
    long k = sp == Spectrum::R ? 3 : 9, c = sp == Spectrum::R ? 1 : 3;
    int sg = second ? 1 : -1;
    Integer den = 2 * (k * x.weight + sg * x.coweight);
    require(den != 0, errc::division_by_zero, "degenerate limit denominator");
    return QI::make(k * x.g + sg * 2 * x.weight, c, den, delta(x.g));
}

} // namespace detail

// lim over pL(R) (first) and pR(L) (second), p the node where x.g is maximal
inline QuadraticIrrational limit_first(const WeightedNumber& x, Spectrum sp) { return detail::closed_limit(x, sp, false); }
inline QuadraticIrrational limit_second(const WeightedNumber& x, Spectrum sp) { return detail::closed_limit(x, sp, true); }

// Purely periodic parts: first = [period], second = 1 + [period].
inline Digits first_period(const MarkoffNode& n, Spectrum sp) {
    if (sp == Spectrum::R) {
        auto x = fraction_of_path(n.path);
        Digits p{2};
        for (auto& d : frobenius_inner(x.mu, x.nu)) p.push_back(d);
        for (long d : {1, 1, 2}) p.emplace_back(d);
        return p;
    }
    Digits a = square_cf_of_node(n).digits;
    a.back() -= 1;
    a.emplace_back(1);
    a.emplace_back(8);
    return a;
}

inline Digits second_period(const MarkoffNode& n, Spectrum sp) {
    if (sp == Spectrum::R) {
        auto x = fraction_of_path(n.path);
        Digits p{1};
        for (auto& d : frobenius_inner(x.mu, x.nu)) p.push_back(d);
        for (long d : {2, 2, 1}) p.emplace_back(d);
        return p;
    }
    Digits a = reversed(square_cf_of_node(n).digits);
    a.front() -= 1;
    a.emplace_back(8);
    a.emplace_back(1);
    return a;
}

inline PeriodicCF plus_one(const Digits& period) {
    // 1 + [overline{b_1, .., b_k}] = [b_1 + 1, overline{b_2, .., b_k, b_1}]
    PeriodicCF p{{period.front() + 1}, Digits(period.begin() + 1, period.end())};
    p.period.push_back(period.front());
    return canonical_periodic(p);
}

struct LimitPoint {
    LRWord path;
    QuadraticIrrational value;
    PeriodicCF expansion;
    Spectrum spectrum;
};

// Only eventually constant paths have quadratic limits. Trailing letters equal to the tail are
// absorbed; what remains is q L(R), q R(L) or a bare tail at the root.
inline LimitPoint limit_point(const LRWord& path, Spectrum sp) {
    require(path.tail.has_value(), errc::unsupported_path, "limit_point needs a path with a tail marker, e.g. L(R)");
    std::string p = path.letters;
    char t = *path.tail;
    while (!p.empty() && p.back() == t) p.pop_back();
    LimitPoint out{path, {}, {}, sp};
    MarkoffNode r = root();
    if (p.empty()) {
        // the two outer ends: L forever is the second limit of g = 1, R forever the first of g = 2
        out.value = t == 'L' ? limit_second(weighted(r, 0, sp), sp) : limit_first(weighted(r, 2, sp), sp);
        out.expansion = quadratic_to_periodic(out.value);
    } else {
        char y = p.back();
        p.pop_back();
        MarkoffNode q = node_at(p);
        if (y == 'L') {
            out.value = limit_first(weighted(q, 1, sp), sp);
            out.expansion = canonical_periodic({{}, first_period(q, sp)});
        } else {
            out.value = limit_second(weighted(q, 1, sp), sp);
            out.expansion = plus_one(second_period(q, sp));
        }
    }
    require(periodic_to_quadratic(out.expansion) == out.value, errc::identity_violation,
            "closed form and periodic expansion disagree at " + path.str());
    return out;
}

// Figure layout: a non-root position qY shows, for the node q, the first limit (Y = L) or the
// second limit minus one (Y = R). The root row shows the R-forever limit and the L-forever
// limit minus one, periods written with length two.
struct SpectrumEntry {
    std::string label;
    QuadraticIrrational value;
    Digits period;  // purely periodic expansion of value
};

inline SpectrumEntry spectrum_entry(const std::string& label, Spectrum sp) {
    using detail::qi;
    if (label == "root:2") {
        auto lp = limit_point(LRWord("", 'R'), sp);
        return {label, lp.value, sp == Spectrum::R ? to_digits({2, 2}) : to_digits({4, 8})};
    }
    if (label == "root:1") {
        auto lp = limit_point(LRWord("", 'L'), sp);
        return {label, lp.value - qi(1), sp == Spectrum::R ? to_digits({1, 1}) : to_digits({5, 1})};
    }
    LRWord w(label);
    require(!w.letters.empty(), errc::parse_error, "spectrum entry needs root:1, root:2 or a nonempty path");
    std::string q = w.letters.substr(0, w.letters.size() - 1);
    MarkoffNode n = node_at(q);
    if (w.letters.back() == 'L') return {label, limit_first(weighted(n, 1, sp), sp), first_period(n, sp)};
    return {label, limit_second(weighted(n, 1, sp), sp) - qi(1), second_period(n, sp)};
}

// ---------------------------------------------------------------- intervals

// Sign of a - b for quadratics from possibly different fields.
inline int compare(const QuadraticIrrational& a, const QuadraticIrrational& b) {
    if (a.is_rational() || b.is_rational() || a.d() == b.d()) return (a - b).sign();
    auto rad = MultiQuad::radicands({a.d(), b.d()});
    auto lift = [&](const QuadraticIrrational& x, size_t slot) {
        return MultiQuad::root(rad, slot, x.surd_part()) + x.rational_part();
    };
    return (lift(a, 0) - lift(b, 1)).sign();
}

// Enclosure with at least 60 correct leading bits; the fixed-precision one loses everything when
// large coefficients cancel.
inline std::pair<Rational, Rational> tight_enclosure(const MultiQuad& x) {
    for (unsigned bits = 128;; bits *= 2) {
        auto en = x.enclose(bits);
        Rational width = en.second - en.first;
        Rational mag = std::max(abs(en.first), abs(en.second));
        if (width * (Integer(1) << 60) <= mag || bits >= (1u << 16)) return en;
    }
}

inline double tight_approx(const MultiQuad& x) {
    auto en = tight_enclosure(x);
    return Rational((en.first + en.second) / 2).get_d();
}

struct SpectrumInterval {
    char kind;  // 'I' closed, 'J' open
    std::string path;
    QuadraticIrrational lo, hi;
    Spectrum spectrum;
};

// A_x = 1/(first limit), B_x = 1/(second limit): r/g -+ (3 - sqrt(9 - 4/g^2))/2, T scaled by 3
inline QuadraticIrrational endpoint_A(const WeightedNumber& x, Spectrum sp) {
    long k = sp == Spectrum::R ? 3 : 9, c = sp == Spectrum::R ? 1 : 3;
    return QuadraticIrrational::make(2 * x.weight - k * x.g, c, 2 * x.g, delta(x.g));
}

inline QuadraticIrrational endpoint_B(const WeightedNumber& x, Spectrum sp) {
    long k = sp == Spectrum::R ? 3 : 9, c = sp == Spectrum::R ? 1 : 3;
    return QuadraticIrrational::make(2 * x.weight + k * x.g, -c, 2 * x.g, delta(x.g));
}

struct NodeIntervals {
    SpectrumInterval I, J;
};

inline NodeIntervals intervals(const MarkoffNode& n, Spectrum sp) {
    auto e = weighted(n, 0, sp), g = weighted(n, 1, sp), f = weighted(n, 2, sp);
    return {{'I', n.path, endpoint_B(e, sp), endpoint_A(f, sp), sp},
            {'J', n.path, endpoint_A(g, sp), endpoint_B(g, sp), sp}};
}

// Lengths in Q(sqrt D_e, sqrt D_g, sqrt D_f), radicands in that order.
struct IntervalLengths {
    MultiQuad::Radicands rad;
    MultiQuad I_from_ends, I_closed, J_from_ends, J_closed;
};

inline IntervalLengths interval_lengths(const MarkoffNode& n, Spectrum sp) {
    auto rad = MultiQuad::radicands({delta(n.e), delta(n.g), delta(n.f)});
    Rational k = sp == Spectrum::R ? 1 : 3;
    Rational e = n.e, g = n.g, f = n.f;
    auto wt = [&](int slot) -> Rational { return sp == Spectrum::R ? Rational(n.r[slot]) : Rational(n.w[slot]); };
    long kk = sp == Spectrum::R ? 3 : 9;
    // B_e = (2 r_e + k e - c sqrt D_e)/(2e), A_f = (2 r_f - k f + c sqrt D_f)/(2f)
    MultiQuad Be = MultiQuad::root(rad, 0, -k / (2 * e)) + (2 * wt(0) + kk * e) / (2 * e);
    MultiQuad Af = MultiQuad::root(rad, 2, k / (2 * f)) + (2 * wt(2) - kk * f) / (2 * f);
    MultiQuad Ag = MultiQuad::root(rad, 1, k / (2 * g)) + (2 * wt(1) - kk * g) / (2 * g);
    MultiQuad Bg = MultiQuad::root(rad, 1, -k / (2 * g)) + (2 * wt(1) + kk * g) / (2 * g);
    // Delta_{e,f} = (e sqrt D_f + f sqrt D_e)/2
    MultiQuad Def = MultiQuad::root(rad, 2, e / 2) + MultiQuad::root(rad, 0, f / 2);
    IntervalLengths L{rad, Af - Be, (Def - g) * (k / (e * f)), Bg - Ag,
                      (MultiQuad::root(rad, 1, -1) + 3 * g) * (k / g)};
    return L;
}

struct MeasureReport {
    size_t nodes = 0;
};

// |I_g| < 3 |J_g| exactly, plus the sharper Delta_{e,f} - g < 2/(3g) behind it
inline MeasureReport measure_certificate(int depth) {
    require(depth >= 0, errc::range_error, "depth must be non-negative");
    MeasureReport rep;
    for_each_node(depth, [&](const MarkoffNode& n) {
        auto L = interval_lengths(n, Spectrum::R);
        require(L.I_from_ends == L.I_closed, errc::certificate_failure, "|I_g| closed form fails at " + n.path);
        require(L.J_from_ends == L.J_closed, errc::certificate_failure, "|J_g| closed form fails at " + n.path);
        require(L.I_closed < L.J_closed * Rational(3), errc::certificate_failure,
                "|I_g| < 3|J_g| fails at " + (n.path.empty() ? std::string("-") : n.path));
        auto b = delta_bounds(n);
        require(b.chain_ii, errc::certificate_failure, "Delta_{e,f} - 2/(3g) < g fails at " + n.path);
        ++rep.nodes;
    });
    return rep;
}

// ---------------------------------------------------------------- covers

inline constexpr int cover_depth_cap = 20;

inline std::vector<SpectrumInterval> cover(int depth, Spectrum sp) {
    require(depth >= 0, errc::range_error, "depth must be non-negative");
    require(depth <= cover_depth_cap, errc::resource_limit, "cover depth is capped at " + std::to_string(cover_depth_cap));
    std::vector<SpectrumInterval> out;
    for (const auto& n : level(depth)) out.push_back(intervals(n, sp).I);
    return out;
}

// Nesting and disjointness: the children of I_g are exactly I_g minus J_g, and the level is ordered.
inline void check_cover(int depth, Spectrum sp) {
    auto lv = level(depth);
    const SpectrumInterval* prev = nullptr;
    std::vector<SpectrumInterval> cur;
    for (const auto& n : lv) cur.push_back(intervals(n, sp).I);
    for (size_t i = 0; i < lv.size(); ++i) {
        const auto& I = cur[i];
        require(compare(I.lo, I.hi) < 0, errc::certificate_failure, "empty interval at " + lv[i].path);
        if (prev) require(compare(prev->hi, I.lo) < 0, errc::certificate_failure, "overlapping intervals at " + lv[i].path);
        prev = &cur[i];
        auto J = intervals(lv[i], sp).J;
        auto left = intervals(mutate(lv[i], 'L'), sp).I, right = intervals(mutate(lv[i], 'R'), sp).I;
        require(left.lo == I.lo && left.hi == J.lo && right.lo == J.hi && right.hi == I.hi,
                errc::certificate_failure, "children do not tile I minus J at " + lv[i].path);
        require(compare(I.lo, J.lo) < 0 && compare(J.hi, I.hi) < 0, errc::certificate_failure, "J not inside I at " + lv[i].path);
    }
}

inline std::string csv_quote(const std::string& s) { return "\"" + s + "\""; }

inline std::string cover_csv(int depth, Spectrum sp, unsigned places = 20) {
    std::ostringstream os;
    os << "depth,path,lo_exact,hi_exact,lo_dec,hi_dec\n";
    auto lv = level(depth);
    auto iv = cover(depth, sp);
    for (size_t i = 0; i < iv.size(); ++i)
        os << depth << "," << (lv[i].path.empty() ? "-" : lv[i].path) << "," << csv_quote(iv[i].lo.tuple()) << ","
           << csv_quote(iv[i].hi.tuple()) << "," << iv[i].lo.decimal(places) << "," << iv[i].hi.decimal(places) << "\n";
    return os.str();
}

// ---------------------------------------------------------------- gap sums

// Certified enclosure of a sum of many surds, as integers scaled by 10^places.
struct Enclosure {
    Integer lo, hi;
    unsigned places;

    std::string str_lo() const { return QuadraticIrrational(make_rational(lo, pow10(places))).decimal(places); }
    std::string str_hi() const { return QuadraticIrrational(make_rational(hi, pow10(places))).decimal(places); }
    bool below(const Rational& x) const { return make_rational(hi, pow10(places)) < x; }
    bool above(const Rational& x) const { return make_rational(lo, pow10(places)) > x; }
};

struct GapSum {
    size_t terms = 0;   // regular triples counted
    Integer max_g = 0;
    Enclosure sum;
};

namespace detail {

// 10^P (3 - sqrt(9 - 4/g^2)) = 10^P (3g - sqrt(D_g)) / g, enclosed
inline void add_gap(Enclosure& en, const Integer& g, long mult) {
    Integer S = pow10(en.places);
    Integer root_lo = isqrt(delta(g) * S * S);
    Integer root_hi = root_lo * root_lo == delta(g) * S * S ? root_lo : Integer(root_lo + 1);
    en.lo += mult * fdiv(3 * g * S - root_hi, g);
    en.hi += mult * cdiv(3 * g * S - root_lo, g);
}

inline GapSum gap_base(unsigned places) {
    GapSum gs{0, 2, {0, 0, places}};
    add_gap(gs.sum, 1, 1);
    add_gap(gs.sum, 2, 1);
    return gs;
}

} // namespace detail

// (3 - sqrt 5) + (3 - sqrt 8) + 2 sum over nodes to depth of (3 - sqrt(9 - 4/g^2)); depth -1 is the two leading terms
inline GapSum gap_sum(int depth, unsigned places = 40) {
    GapSum gs = detail::gap_base(places);
    if (depth < 0) return gs;
    for_each_node(depth, [&](const MarkoffNode& n) {
        detail::add_gap(gs.sum, n.g, 2);
        ++gs.terms;
        if (n.g > gs.max_g) gs.max_g = n.g;
    });
    return gs;
}

// same sum over every regular triple with g <= bound
inline GapSum gap_sum_bound(const Integer& bound, unsigned places = 40) {
    GapSum gs = detail::gap_base(places);
    std::vector<MarkoffNode> stack{root()};
    while (!stack.empty()) {
        MarkoffNode n = std::move(stack.back());
        stack.pop_back();
        if (n.g > bound) continue;  // children only grow
        detail::add_gap(gs.sum, n.g, 2);
        ++gs.terms;
        if (n.g > gs.max_g) gs.max_g = n.g;
        stack.push_back(mutate(n, 'L'));
        stack.push_back(mutate(n, 'R'));
    }
    return gs;
}

// ---------------------------------------------------------------- Hausdorff ratios

struct DRatios {
    MultiQuad d_L, d_R;  // |I_{WL}|/|I_W|, |I_{WR}|/|I_W| over (D_e, D_g, D_f) of W
    double approx_L, approx_R;
};

inline DRatios d_ratios(const LRWord& word) {
    MarkoffNode n = node_at(word);
    auto rad = MultiQuad::radicands({delta(n.e), delta(n.g), delta(n.f)});
    // |I| of a triple (a, b, c) whose outer radicals are slots ia, ic
    auto len = [&](const Integer& a, size_t ia, const Integer& b, const Integer& c, size_t ic) {
        Rational A = a, C = c;
        MultiQuad D = MultiQuad::root(rad, ic, A / 2) + MultiQuad::root(rad, ia, C / 2);
        return (D - Rational(b)) / (A * C);
    };
    MarkoffNode l = mutate(n, 'L'), r = mutate(n, 'R');
    MultiQuad whole = len(n.e, 0, n.g, n.f, 2);
    DRatios d{len(l.e, 0, l.g, l.f, 1) / whole, len(r.e, 1, r.g, r.f, 2) / whole, 0, 0};
    d.approx_L = tight_approx(d.d_L);
    d.approx_R = tight_approx(d.d_R);
    return d;
}

inline std::pair<double, double> outward(const std::pair<Rational, Rational>& en) {
    double lo = Rational(en.first).get_d(), hi = Rational(en.second).get_d();
    return {std::nextafter(lo, -1.0), std::nextafter(hi, 2.0)};
}

// prod_{i <= k} (d_{p|i L}^s + d_{p|i R}^s) for every prefix length k < |path|, as certified double bounds
struct HsProduct {
    std::vector<double> lo, hi;
};

inline HsProduct hs_partial_products(const std::string& path, double s) {
    require(s > 0, errc::range_error, "s must be positive");
    HsProduct out;
    double plo = 1, phi = 1;
    for (size_t i = 0; i < path.size(); ++i) {
        auto d = d_ratios(LRWord(path.substr(0, i)));
        auto [l0, l1] = outward(tight_enclosure(d.d_L));
        auto [r0, r1] = outward(tight_enclosure(d.d_R));
        double flo = std::pow(std::max(l0, 0.0), s) + std::pow(std::max(r0, 0.0), s);
        double fhi = std::pow(l1, s) + std::pow(r1, s);
        plo = std::nextafter(plo * std::nextafter(flo, 0.0), 0.0);
        phi = std::nextafter(phi * std::nextafter(fhi, 4.0), 4.0);
        out.lo.push_back(plo);
        out.hi.push_back(phi);
    }
    return out;
}

// Along W L^i from W = (e, g, f): F_i with F_{-1} = f, F_0 = g; d_{W L^{i+1}} against
// sqrt(D_e)/(3 e^2) F_{i-1}/F_i. Returns (enclosure of d, lower bound of the bound) per step.
struct FibBoundStep {
    std::pair<Rational, Rational> d, bound;
};

inline std::vector<FibBoundStep> left_chain_bounds(const LRWord& start, int steps) {
    std::vector<FibBoundStep> out;
    MarkoffNode cur = node_at(start);
    for (int i = 0; i < steps; ++i) {
        auto d = d_ratios(LRWord(cur.path));
        Integer Fi = cur.g, Fim1 = cur.f;  // node W L^i = (e, F_i, F_{i-1})
        auto rad = MultiQuad::radicands({delta(cur.e)});
        MultiQuad b = MultiQuad::root(rad, 0, make_rational(Fim1, 3 * cur.e * cur.e * Fi));
        out.push_back({tight_enclosure(d.d_L), tight_enclosure(b)});
        cur = mutate(cur, 'L');
    }
    return out;
}

// ---------------------------------------------------------------- affine map

struct AffineReport {
    size_t endpoints = 0;
};

// every T endpoint is 3 (R endpoint) - 1
inline AffineReport affine_map_check(int depth) {
    AffineReport rep;
    auto three = QuadraticIrrational(Rational(3)), one = QuadraticIrrational(Rational(1));
    auto check = [&](const QuadraticIrrational& t, const QuadraticIrrational& r, const std::string& where) {
        require(t == three * r - one, errc::identity_violation, "T = 3R - 1 fails at " + where);
        ++rep.endpoints;
    };
    for_each_node(depth, [&](const MarkoffNode& n) {
        auto R = intervals(n, Spectrum::R), T = intervals(n, Spectrum::T);
        std::string p = n.path.empty() ? "-" : n.path;
        check(T.I.lo, R.I.lo, p + " I.lo");
        check(T.I.hi, R.I.hi, p + " I.hi");
        check(T.J.lo, R.J.lo, p + " J.lo");
        check(T.J.hi, R.J.hi, p + " J.hi");
    });
    return rep;
}

// ---------------------------------------------------------------- convergents

// p/q is a convergent of x iff one of its two finite expansions is a prefix of x's expansion
inline bool is_convergent(const Rational& x, const PeriodicCF& cf) {
    Digits a = cf_of_rational(x);
    auto digit = [&](size_t i) -> const Integer& {
        if (i < cf.preperiod.size()) return cf.preperiod[i];
        return cf.period[(i - cf.preperiod.size()) % cf.period.size()];
    };
    auto prefix = [&](const Digits& d) {
        for (size_t i = 0; i + 1 < d.size(); ++i)
            if (d[i] != digit(i)) return false;
        return d.back() == digit(d.size() - 1);
    };
    if (prefix(a)) return true;
    if (a.back() > 1) {
        Digits b = a;
        b.back() -= 1;
        b.emplace_back(1);
        return prefix(b);
    }
    return false;
}

} // namespace markoff
