#pragma once

#include <array>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "cf_core.hpp"
#include "surd.hpp"

namespace markoff {

// ---------------------------------------------------------------- paths and fractions

// Finite word over {L, R}, optionally followed by an infinitely repeated letter.
struct LRWord {
    std::string letters;
    std::optional<char> tail;

    LRWord() = default;
    LRWord(std::string l, std::optional<char> t = std::nullopt) : letters(std::move(l)), tail(t) { validate(); }

    bool finite() const { return !tail; }
    size_t size() const { return letters.size(); }

    void validate() const {
        for (char c : letters) require(c == 'L' || c == 'R', errc::parse_error, "path letters must be L or R");
        if (tail) require(*tail == 'L' || *tail == 'R', errc::parse_error, "tail must be L or R");
    }

    // "LR" is finite, "L(R)" means L followed by R forever
    static LRWord parse(const std::string& s) {
        auto open = s.find('(');
        if (open == std::string::npos) return LRWord(s == "-" ? "" : s);
        require(s.size() == open + 3 && s[open + 2] == ')', errc::parse_error, "path tail must look like (L) or (R)");
        return LRWord(s.substr(0, open), s[open + 1]);
    }

    std::string str() const {
        std::string s = letters;
        if (tail) s += std::string("(") + *tail + ")";
        return s.empty() ? "-" : s;
    }

    friend bool operator==(const LRWord& a, const LRWord& b) { return a.letters == b.letters && a.tail == b.tail; }
};

inline LRWord mirror(const LRWord& w) {
    LRWord m = w;
    for (char& c : m.letters) c = c == 'L' ? 'R' : 'L';
    if (m.tail) m.tail = *m.tail == 'L' ? 'R' : 'L';
    return m;
}

struct SBFraction {
    Integer mu, nu;

    SBFraction() : mu(1), nu(1) {}
    SBFraction(Integer m, Integer n) : mu(std::move(m)), nu(std::move(n)) {
        require(mu >= 0 && nu >= 0 && (mu != 0 || nu != 0), errc::range_error, "fraction entries must be nonnegative");
        require(gcd(mu, nu) == 1, errc::not_coprime, mu.get_str() + "/" + nu.get_str());
    }
    static SBFraction parse(const std::string& s) {
        auto slash = s.find('/');
        require(slash != std::string::npos, errc::parse_error, "fraction must look like mu/nu");
        return SBFraction(parse_integer(s.substr(0, slash)), parse_integer(s.substr(slash + 1)));
    }
    std::string str() const { return mu.get_str() + "/" + nu.get_str(); }
    friend bool operator==(const SBFraction& a, const SBFraction& b) { return a.mu == b.mu && a.nu == b.nu; }
    friend SBFraction operator+(const SBFraction& a, const SBFraction& b) { return {a.mu + b.mu, a.nu + b.nu}; }
    // compares mu/nu values, 1/0 counting as infinity
    friend bool operator<(const SBFraction& a, const SBFraction& b) { return a.mu * b.nu < b.mu * a.nu; }
};

// ---------------------------------------------------------------- nodes

struct MarkoffNode {
    Integer e, g, f;
    std::array<Integer, 3> r, s, w, v; // ordered (e, g, f)
    std::string path;

    std::array<Integer, 3> triple() const { return {e, g, f}; }
    bool on_fibonacci_branch() const { return e == 1; }
    bool on_pell_branch() const { return f == 2; }
};

inline MarkoffNode root() {
    return {1, 5, 2, {0, 2, 1}, {1, 1, 1}, {-1, 1, 1}, {10, 2, 5}, ""};
}

inline bool is_markoff(const Integer& a, const Integer& b, const Integer& c) {
    return a * a + b * b + c * c == 3 * a * b * c;
}

// L: (e, F, g) with F = 3eg - f;  R: (g, E, f) with E = 3fg - e. Decorations follow the same linear rule.
inline MarkoffNode mutate(const MarkoffNode& n, char dir) {
    auto step = [&](const std::array<Integer, 3>& x, bool left) -> std::array<Integer, 3> {
        if (left) return {x[0], 3 * n.e * x[1] - x[2], x[1]};
        return {x[1], 3 * n.f * x[1] - x[0], x[2]};
    };
    require(dir == 'L' || dir == 'R', errc::parse_error, "direction must be L or R");
    bool left = dir == 'L';
    MarkoffNode c;
    auto t = step(n.triple(), left);
    c.e = t[0];
    c.g = t[1];
    c.f = t[2];
    c.r = step(n.r, left);
    c.s = step(n.s, left);
    c.w = step(n.w, left);
    c.v = step(n.v, left);
    c.path = n.path + dir;
    return c;
}

inline MarkoffNode node_at(const std::string& path) {
    MarkoffNode n = root();
    for (char c : path) n = mutate(n, c);
    return n;
}

inline MarkoffNode node_at(const LRWord& w) {
    require(w.finite(), errc::unsupported_path, "node_at needs a finite path");
    return node_at(w.letters);
}

// Parent by undoing the last mutation (3ef = g + G).
inline MarkoffNode parent(const MarkoffNode& n) {
    require(!n.path.empty(), errc::precondition_violation, "root has no parent");
    auto undo = [&](const std::array<Integer, 3>& x, bool left) -> std::array<Integer, 3> {
        if (left) return {x[0], x[2], 3 * n.e * x[2] - x[1]}; // child (e, F, g): parent f = 3eg - F
        return {3 * n.f * x[0] - x[1], x[0], x[2]};            // child (g, E, f): parent e = 3fg - E
    };
    bool left = n.path.back() == 'L';
    MarkoffNode p;
    auto t = undo(n.triple(), left);
    p.e = t[0];
    p.g = t[1];
    p.f = t[2];
    p.r = undo(n.r, left);
    p.s = undo(n.s, left);
    p.w = undo(n.w, left);
    p.v = undo(n.v, left);
    p.path = n.path.substr(0, n.path.size() - 1);
    return p;
}

// Preorder walk of all nodes with |path| <= depth.
inline void for_each_node(int depth, const std::function<void(const MarkoffNode&)>& fn, const MarkoffNode& start = root()) {
    fn(start);
    if (static_cast<int>(start.path.size()) >= depth) return;
    for_each_node(depth, fn, mutate(start, 'L'));
    for_each_node(depth, fn, mutate(start, 'R'));
}

inline std::vector<MarkoffNode> level(int depth) {
    std::vector<MarkoffNode> cur{root()};
    for (int d = 0; d < depth; ++d) {
        std::vector<MarkoffNode> next;
        next.reserve(cur.size() * 2);
        for (const auto& n : cur) {
            next.push_back(mutate(n, 'L'));
            next.push_back(mutate(n, 'R'));
        }
        cur = std::move(next);
    }
    return cur;
}

struct Decorations {
    std::array<Integer, 3> r, s, w, v;
};

// From modular inverses: r_g = e^-1 f mod g, w_g = 3 e^-1 f mod g, and cyclically; r_e = 0, w_e = -1 when e = 1.
inline Decorations decorations_direct(const Integer& e, const Integer& g, const Integer& f) {
    require(is_markoff(e, g, f), errc::not_markoff, "(" + e.get_str() + "," + g.get_str() + "," + f.get_str() + ")");
    require(e != g && g != f && e != f, errc::not_markoff, "triple is singular");
    Decorations d;
    const std::array<Integer, 3> m{e, g, f};
    // element, the one whose inverse is taken, the multiplier
    const std::array<std::array<int, 3>, 3> cyc{{{0, 2, 1}, {1, 0, 2}, {2, 1, 0}}};
    for (int i = 0; i < 3; ++i) {
        const Integer& x = m[cyc[i][0]];
        if (x == 1) {
            d.r[i] = 0;
            d.w[i] = -1;
        } else {
            d.r[i] = mod(modinv(m[cyc[i][1]], x) * m[cyc[i][2]], x);
            d.w[i] = mod(3 * d.r[i], x);
        }
        require((d.r[i] * d.r[i] + 1) % x == 0 && (d.w[i] * d.w[i] + 9) % x == 0, errc::identity_violation, "weight relation");
        d.s[i] = (d.r[i] * d.r[i] + 1) / x;
        d.v[i] = (d.w[i] * d.w[i] + 9) / x;
    }
    return d;
}

// Violations of the node invariants; empty when all hold.
inline std::vector<std::string> check_node(const MarkoffNode& n) {
    std::vector<std::string> bad;
    auto need = [&](bool ok, const char* what) {
        if (!ok) bad.emplace_back(what);
    };
    const auto& e = n.e;
    const auto& g = n.g;
    const auto& f = n.f;
    Integer G = 3 * e * f - g;
    auto m = n.triple();
    need(is_markoff(e, g, f), "Markoff equation");
    for (int i = 0; i < 3; ++i) {
        need(n.r[i] * n.r[i] + 1 == n.s[i] * m[i], "r^2 = -1 + s m");
        need(n.w[i] * n.w[i] + 9 == n.v[i] * m[i], "w^2 = -9 + v m");
        need(n.w[i] == 3 * n.r[i] - m[i], "w = 3r - m");
    }
    need(n.r[0] * g < n.r[1] * e && n.r[1] * f < n.r[2] * g, "slope chain r_e/e < r_g/g < r_f/f");
    need(g * n.r[2] - f * n.r[1] == e, "g r_f - f r_g = e");
    need(e * n.r[1] - g * n.r[0] == f, "e r_g - g r_e = f");
    need(e * n.r[2] - f * n.r[0] == G, "e r_f - f r_e = G");
    need(g * n.w[2] - f * n.w[1] == 3 * e, "g w_f - f w_g = 3e");
    need(e * n.w[1] - g * n.w[0] == 3 * f, "e w_g - g w_e = 3f");
    need(e * n.w[2] - f * n.w[0] == 3 * G, "e w_f - f w_e = 3G");
    need(G * n.w[1] == e * n.w[0] + f * n.w[2], "G w_g = e w_e + f w_f");
    need(f * n.v[0] == n.w[0] * n.w[2] + 3 * (n.w[1] - 3 * f * n.w[0]), "f v_e = w_e w_f + 3(w_g - 3f w_e)");
    need(e * n.v[2] == n.w[0] * n.w[2] + 3 * (3 * e * n.w[2] - n.w[1]), "e v_f = w_e w_f + 3(3e w_f - w_g)");
    return bad;
}

// ---------------------------------------------------------------- the third element

inline Integer delta(const Integer& x) { return 9 * x * x - 4; }

// n <= (e sqrt(D_f) + f sqrt(D_e)) / 2, decided by squaring twice
inline bool le_delta_pair(const Integer& n, const Integer& e, const Integer& f) {
    if (n <= 0) return true;
    Integer De = delta(e), Df = delta(f);
    Integer L = 4 * n * n - e * e * Df - f * f * De; // compare with 2ef sqrt(De Df)
    if (L <= 0) return true;
    return L * L <= 4 * e * e * f * f * De * Df;
}

// floor of Delta_{e,f} = (e sqrt(D_f) + f sqrt(D_e)) / 2, integers only
inline Integer floor_delta_pair(const Integer& e, const Integer& f) {
    size_t bits = mpz_sizeinbase(Integer(e + f).get_mpz_t(), 2) + 8;
    Integer scale = Integer(1) << bits;
    Integer approx = (e * isqrt(delta(f) * scale * scale) + f * isqrt(delta(e) * scale * scale)) / (2 * scale);
    while (!le_delta_pair(approx, e, f)) approx -= 1;
    while (le_delta_pair(approx + 1, e, f)) approx += 1;
    return approx;
}

inline Integer third_element(const Integer& e, const Integer& f) {
    Integer g = floor_delta_pair(e, f);
    require(is_markoff(e, g, f), errc::not_extendable,
            "(" + e.get_str() + ", " + f.get_str() + ") does not extend to a triple with g = " + g.get_str());
    return g;
}

// Delta_{e,f} and friends in Q(sqrt D_e, sqrt D_f)
struct DeltaField {
    MultiQuad::Radicands rad;
    MultiQuad delta_ef;
    DeltaField(const Integer& e, const Integer& f)
        : rad(MultiQuad::radicands({delta(e), delta(f)})),
          delta_ef(MultiQuad::root(rad, 1, make_rational(e, 2)) + MultiQuad::root(rad, 0, make_rational(f, 2))) {}
};

struct BoundReport {
    bool lower_i = false;   // Delta - ef/g < g
    bool upper_i = false;   // g < Delta
    bool chain_ii = false;  // Delta - 2/(3g) < Delta - 2/(9ef) < g
    bool sharp_iii = false; // g + 2ef/(g sqrt(D_e D_f)) < Delta
    bool ok() const { return lower_i && upper_i && chain_ii && sharp_iii; }
};

inline BoundReport delta_bounds(const MarkoffNode& n) {
    DeltaField F(n.e, n.f);
    const MultiQuad& D = F.delta_ef;
    Rational g = n.g, ef = n.e * n.f;
    BoundReport b;
    b.lower_i = (D - ef / g) < MultiQuad(F.rad, g);
    b.upper_i = MultiQuad(F.rad, g) < D;
    b.chain_ii = (D - Rational(2) / (3 * g)) < (D - Rational(2) / (9 * ef)) && (D - Rational(2) / (9 * ef)) < MultiQuad(F.rad, g);
    // 2ef / (g sqrt(D_e) sqrt(D_f)) = 2ef sqrt(D_e D_f) / (g D_e D_f)
    MultiQuad cross = MultiQuad::root(F.rad, 0) * MultiQuad::root(F.rad, 1);
    Rational scale = 2 * ef / (g * Rational(delta(n.e) * delta(n.f)));
    b.sharp_iii = (cross * scale + g) < D;
    return b;
}

// ---------------------------------------------------------------- Stern-Brocot indexing

// (mu1/nu1, mu2/nu2): the two lattice vectors of determinant +-1 with (mu, nu) summing to it,
// larger fraction first (left slot of the Stern-Brocot triple).
inline std::pair<SBFraction, SBFraction> sb_split(const SBFraction& x) {
    require(x.mu >= 1 && x.nu >= 1, errc::range_error, "sb_split needs mu, nu >= 1");
    SBFraction lo(0, 1), hi(1, 0);
    while (true) {
        SBFraction mid = lo + hi;
        if (mid == x) return {hi, lo};
        if (mid < x) lo = mid;
        else hi = mid;
    }
}

inline std::string path_of_fraction(const SBFraction& x) {
    require(x.mu >= 1 && x.nu >= 1, errc::range_error, "fraction must be positive and finite");
    SBFraction left(1, 0), right(0, 1);
    std::string path;
    while (true) {
        SBFraction mid = left + right;
        if (mid == x) return path;
        if (mid < x) {
            path += 'L';
            right = mid;
        } else {
            path += 'R';
            left = mid;
        }
    }
}

struct SBTriple {
    SBFraction left, mid, right;
};

inline SBTriple sb_triple_of_path(const std::string& path) {
    SBTriple t{SBFraction(1, 0), SBFraction(1, 1), SBFraction(0, 1)};
    for (char c : path) {
        if (c == 'L') t = {t.left, t.left + t.mid, t.mid};
        else t = {t.mid, t.mid + t.right, t.right};
    }
    return t;
}

inline SBFraction fraction_of_path(const std::string& path) { return sb_triple_of_path(path).mid; }

// ---------------------------------------------------------------- branches

// x_i = a x_{i-1} + x_{i-2}, extended to negative indices
inline Integer linrec(long a, const Integer& x0, const Integer& x1, long n) {
    Integer p = x0, q = x1; // (x_i, x_{i+1}) with i = 0
    if (n >= 0) {
        for (long i = 0; i < n; ++i) {
            Integer t = a * q + p;
            p = std::move(q);
            q = std::move(t);
        }
        return p;
    }
    for (long i = 0; i > n; --i) {
        Integer prev = q - a * p; // x_{i-1}
        q = std::move(p);
        p = std::move(prev);
    }
    return p;
}

inline Integer fibonacci(long n) { return linrec(1, 0, 1, n); }
inline Integer lucas(long n) { return linrec(1, 2, 1, n); }
inline Integer pell(long n) { return linrec(2, 0, 1, n); }
inline Integer pell_Q(long n) { return linrec(2, 1, 4, n); }
inline Integer pell_R(long n) { return linrec(2, 0, 2, n); } // R_1 = 2, R_2 = 4
inline Integer pell_S(long n) { return linrec(2, 1, 1, n); }

enum class Branch { Fibonacci, Pell };

inline Branch parse_branch(const std::string& s) {
    if (s == "fibonacci" || s == "Fibonacci" || s == "fib") return Branch::Fibonacci;
    if (s == "pell" || s == "Pell") return Branch::Pell;
    fail(errc::parse_error, "branch must be fibonacci or pell");
}

// Fibonacci: (1, F_{2n+1}, F_{2n-1}) for n >= 2 at L^{n-2}; Pell: (P_{2n-1}, P_{2n+1}, 2) for n >= 1 at R^{n-1}.
inline MarkoffNode branch(Branch kind, long n) {
    MarkoffNode b;
    if (kind == Branch::Fibonacci) {
        require(n >= 2, errc::range_error, "Fibonacci branch needs n >= 2");
        auto F = fibonacci;
        b.e = 1;
        b.g = F(2 * n + 1);
        b.f = F(2 * n - 1);
        b.r = {0, F(2 * n - 1), F(2 * n - 3)};
        b.s = {1, F(2 * n - 3), F(2 * n - 5)};
        b.w = {-1, F(2 * n - 3), F(2 * n - 5)};
        b.v = {10, F(2 * n - 7), F(2 * n - 9)};
        b.path = std::string(n - 2, 'L');
    } else {
        require(n >= 1, errc::range_error, "Pell branch needs n >= 1");
        b.e = pell(2 * n - 1);
        b.g = pell(2 * n + 1);
        b.f = 2;
        b.r = {pell(2 * n - 2), pell(2 * n), 1};
        b.s = {pell(2 * n - 3), pell(2 * n - 1), 1};
        b.w = {pell_S(2 * n - 3), pell_S(2 * n - 1), 1};
        b.v = {pell_R(2 * n - 5), pell_R(2 * n - 3), 5};
        b.path = std::string(n - 1, 'R');
    }
    return b;
}

// ---------------------------------------------------------------- growth along a side

struct Growth {
    QuadraticIrrational lambda_plus, lambda_minus, base_plus, base_minus;
    Integer multiplier;   // 3f for side E, 3e for side F
    Integer prev, first;  // sequence values at i = -1 and i = 0
};

// Side E: E_i = lambda+ P+^i + lambda- P-^i with P = (3f +- sqrt D_f)/2, lambda = (g +- (E - e)/sqrt D_f)/2.
// Side F is the same with e and f exchanged.
inline Growth growth_coefficients(const MarkoffNode& n, char side) {
    require(side == 'E' || side == 'F', errc::parse_error, "side must be E or F");
    const Integer& a = side == 'E' ? n.f : n.e; // fixed element
    const Integer& b = side == 'E' ? n.e : n.f; // element replaced at the first step
    Integer next = 3 * a * n.g - b;
    using QI = QuadraticIrrational;
    QI root = QI::make(0, 1, 1, delta(a));
    Growth gr;
    gr.base_plus = QI(Rational(3 * a, 2)) + root * QI(Rational(1, 2));
    gr.base_minus = QI(Rational(3 * a, 2)) - root * QI(Rational(1, 2));
    QI t = QI(Rational(next - b)) / root;
    gr.lambda_plus = (QI(Rational(n.g)) + t) * QI(Rational(1, 2));
    gr.lambda_minus = (QI(Rational(n.g)) - t) * QI(Rational(1, 2));
    gr.multiplier = 3 * a;
    gr.prev = b;
    gr.first = n.g;
    return gr;
}

inline Integer growth_sequence(const Growth& gr, long i) {
    Integer p = gr.prev, q = gr.first;
    for (long k = 0; k < i; ++k) {
        Integer t = gr.multiplier * q - p;
        p = std::move(q);
        q = std::move(t);
    }
    return q;
}

inline QuadraticIrrational growth_closed_form(const Growth& gr, long i) {
    QuadraticIrrational pp(Rational(1)), pm(Rational(1));
    for (long k = 0; k < i; ++k) {
        pp = pp * gr.base_plus;
        pm = pm * gr.base_minus;
    }
    return gr.lambda_plus * pp + gr.lambda_minus * pm;
}

// ---------------------------------------------------------------- left/right position

inline bool is_left_position(Integer m1, Integer m2, Integer m3) {
    std::array<Integer, 3> m{m1, m2, m3};
    std::sort(m.begin(), m.end());
    require(is_markoff(m[0], m[1], m[2]), errc::not_markoff, "not a Markoff triple");
    require(m[0] > 2 && m[0] < m[1] && m[1] < m[2], errc::precondition_violation, "need 2 < m1 < m2 < m3");
    std::array<bool, 3> res;
    for (int i = 0; i < 3; ++i) {
        const Integer& mi = m[i];
        Integer rp = mod(modinv(m[(i + 1) % 3], mi) * m[(i + 2) % 3], mi);
        res[i] = rp < mi - rp;
    }
    require(res[0] == res[1] && res[1] == res[2], errc::identity_violation, "position criteria disagree");
    return res[0];
}

// ---------------------------------------------------------------- TSV dump

struct DecorationSelection {
    bool r = true, s = true, w = true, v = true;

    static DecorationSelection parse(const std::string& spec) {
        DecorationSelection d{false, false, false, false};
        if (spec == "all") return {};
        if (spec == "none") return d;
        for (char c : spec) {
            switch (c) {
            case 'r': d.r = true; break;
            case 's': d.s = true; break;
            case 'w': d.w = true; break;
            case 'v': d.v = true; break;
            case ',': break;
            default: fail(errc::parse_error, "decorations must be all, none or a subset of r,s,w,v");
            }
        }
        return d;
    }
};

inline std::string triple_str(const std::array<Integer, 3>& t) {
    return t[0].get_str() + "," + t[1].get_str() + "," + t[2].get_str();
}

inline std::string tsv_row(const MarkoffNode& n, const DecorationSelection& sel = {}) {
    std::string row = (n.path.empty() ? "-" : n.path) + "\t" + triple_str(n.triple());
    if (sel.r) row += "\t" + triple_str(n.r);
    if (sel.s) row += "\t" + triple_str(n.s);
    if (sel.w) row += "\t" + triple_str(n.w);
    if (sel.v) row += "\t" + triple_str(n.v);
    return row;
}

// level order, left to right
inline std::string tree_dump(int depth, const DecorationSelection& sel = {}) {
    std::string out;
    for (int d = 0; d <= depth; ++d)
        for (const auto& n : level(d)) out += tsv_row(n, sel) + "\n";
    return out;
}

} // namespace markoff
