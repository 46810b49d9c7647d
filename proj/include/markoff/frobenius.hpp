#pragma once

#include <string>
#include <vector>

#include "cf_core.hpp"
#include "markoff_tree.hpp"

namespace markoff {

// m_{mu/nu}/r_{mu/nu} = [2, S(mu, nu), 2]
struct FrobeniusCF {
    Integer mu, nu;
    Digits digits;

    Rational value() const { return eval_regular(digits); }
    Integer m() const { return value().get_num(); }
    Integer r() const { return value().get_den(); }
    Integer s() const {
        Integer mm = m(), rr = r();
        return (rr * rr + 1) / mm;
    }
    // the inner part S(mu, nu), framing 2s stripped
    Digits inner() const { return Digits(digits.begin() + 1, digits.end() - 1); }
};

inline Integer kappa(const Integer& i, const Integer& mu, const Integer& nu) {
    require(nu > 1 && i >= 1 && i < nu, errc::range_error, "kappa needs nu > 1 and 1 <= i < nu");
    return fdiv(i * mu, nu) - fdiv((i - 1) * mu, nu);
}

namespace detail {

inline void append_ones(Digits& d, const Integer& n) {
    for (Integer k = 0; k < n; ++k) d.emplace_back(1);
}

inline void check_pair(const Integer& mu, const Integer& nu) {
    require(mu >= 1 && nu >= 1, errc::range_error, "mu and nu must be positive");
    require(gcd(mu, nu) == 1, errc::not_coprime, mu.get_str() + "/" + nu.get_str());
}

inline Digits swap12(Digits d) {
    for (auto& x : d) x = 3 - x;
    return d;
}

} // namespace detail

inline Digits frobenius_inner(const Integer& mu, const Integer& nu) {
    detail::check_pair(mu, nu);
    Digits S;
    if (nu == 1) {
        detail::append_ones(S, 2 * mu - 2);
        return S;
    }
    if (mu == 1) return detail::swap12(frobenius_inner(nu, mu));
    for (Integer i = 1; i < nu; ++i) {
        detail::append_ones(S, 2 * kappa(i, mu, nu));
        S.emplace_back(2);
        S.emplace_back(2);
    }
    detail::append_ones(S, 2 * kappa(1, mu, nu));
    return S;
}

inline FrobeniusCF frobenius_cf(const Integer& mu, const Integer& nu) {
    Digits d{2};
    for (auto& x : frobenius_inner(mu, nu)) d.push_back(x);
    d.emplace_back(2);
    return {mu, nu, std::move(d)};
}

// run lengths k of the segments 2, 1_k, 2 that tile the expansion
inline std::vector<size_t> fibonacci_segments(const Digits& ds) {
    std::vector<size_t> out;
    size_t i = 0;
    while (i < ds.size()) {
        require(ds[i] == 2, errc::not_recognized, "segment must open with 2");
        size_t j = i + 1;
        while (j < ds.size() && ds[j] == 1) ++j;
        require(j < ds.size() && ds[j] == 2, errc::not_recognized, "segment must close with 2");
        out.push_back(j - i - 1);
        i = j + 1;
    }
    return out;
}

struct RecursionReport {
    SBFraction whole, left, right;  // left is the larger fraction (mu1/nu1)
    Digits forward, backward;       // S1,2,2,1,1,S2 and S2,1,1,2,2,S1
};

inline RecursionReport recursion_check(const Integer& mu, const Integer& nu) {
    require(mu > 1 && nu > 1, errc::precondition_violation, "recursion needs mu, nu > 1");
    SBFraction x(mu, nu);
    auto [a, b] = sb_split(x);
    Digits S = frobenius_inner(mu, nu), S1 = frobenius_inner(a.mu, a.nu), S2 = frobenius_inner(b.mu, b.nu);
    auto glue = [](const Digits& p, std::initializer_list<long> mid, const Digits& q) {
        Digits r = p;
        for (long m : mid) r.emplace_back(m);
        r.insert(r.end(), q.begin(), q.end());
        return r;
    };
    RecursionReport rep{x, a, b, glue(S1, {2, 2, 1, 1}, S2), glue(S2, {1, 1, 2, 2}, S1)};
    for (const Digits* side : {&rep.forward, &rep.backward}) {
        require(side->size() == S.size(), errc::identity_violation,
                "recursion length mismatch at " + x.str());
        for (size_t i = 0; i < S.size(); ++i)
            require((*side)[i] == S[i], errc::identity_violation,
                    "recursion differs at index " + std::to_string(i + 1) + " for " + x.str());
    }
    return rep;
}

// S(nu, mu) by swapping ones and twos in S(mu, nu)
inline FrobeniusCF complement(const Integer& mu, const Integer& nu) {
    Digits d{2};
    for (auto& x : detail::swap12(frobenius_inner(mu, nu))) d.push_back(x);
    d.emplace_back(2);
    return {nu, mu, std::move(d)};
}

struct SnakeBox {
    long col, row;
    bool two;  // 2, or the pair 1,1
};

struct SnakeDiagram {
    Integer mu, nu;
    std::vector<SnakeBox> boxes;  // reading order
    bool degenerate = false;      // mu == 1 or nu == 1: the rule applied literally, no reference picture

    Digits digits() const {
        Digits d;
        for (const auto& b : boxes) {
            if (b.two) d.emplace_back(2);
            else {
                d.emplace_back(1);
                d.emplace_back(1);
            }
        }
        return d;
    }

    std::string render() const {
        long W = Integer(mu + nu).get_si(), H = nu.get_si();
        std::vector<std::vector<int>> cell(H, std::vector<int>(W, 0)); // 0 none, 1 "1,1", 2 "2"
        for (const auto& b : boxes) cell[b.row][b.col] = b.two ? 2 : 1;
        auto border = [&](long y) { // horizontal line between rows y-1 and y
            std::string s;
            for (long c = 0; c < W; ++c) {
                bool on = (y < H && cell[y][c]) || (y > 0 && cell[y - 1][c]);
                bool prev = c > 0 && ((y < H && cell[y][c - 1]) || (y > 0 && cell[y - 1][c - 1]));
                s += (on || prev) ? "+" : " ";
                s += on ? "-----" : "     ";
            }
            bool last = (y < H && cell[y][W - 1]) || (y > 0 && cell[y - 1][W - 1]);
            s += last ? "+" : "";
            while (!s.empty() && s.back() == ' ') s.pop_back();
            return s + "\n";
        };
        std::string out;
        for (long y = H; y >= 1; --y) {
            out += border(y);
            long row = y - 1;
            std::string s;
            for (long c = 0; c < W; ++c) {
                bool here = cell[row][c] != 0, left = c > 0 && cell[row][c - 1] != 0;
                s += (here || left) ? "|" : " ";
                s += cell[row][c] == 2 ? "  2  " : cell[row][c] == 1 ? " 1,1 " : "     ";
            }
            s += cell[row][W - 1] ? "|" : "";
            while (!s.empty() && s.back() == ' ') s.pop_back();
            out += s + "\n";
        }
        out += border(0);
        return out;
    }
};

// Boxes of the (mu+nu) x nu grid whose interior meets the diagonal. First, last and the
// boxes where the staircase turns get a 2, the rest the pair 1,1.
inline SnakeDiagram snake_diagram(const Integer& mu, const Integer& nu) {
    detail::check_pair(mu, nu);
    require(mu + nu <= 100000, errc::resource_limit, "snake diagram too large to render");
    long W = Integer(mu + nu).get_si(), H = nu.get_si();
    SnakeDiagram sd{mu, nu, {}, mu == 1 || nu == 1};
    // the diagonal is y = x H / W; column c spans heights (cH/W, (c+1)H/W)
    for (long c = 0; c < W; ++c) {
        long lo = c * H / W;                   // row at the left edge
        long hi = ((c + 1) * H - 1) / W;       // row just before the right edge
        for (long row = lo; row <= hi; ++row) sd.boxes.push_back({c, row, false});
    }
    for (size_t i = 0; i < sd.boxes.size(); ++i) {
        bool first = i == 0, last = i + 1 == sd.boxes.size();
        bool turn = (!first && sd.boxes[i - 1].col == sd.boxes[i].col) ||
                    (!last && sd.boxes[i + 1].col == sd.boxes[i].col);
        sd.boxes[i].two = first || last || turn;
    }
    return sd;
}

struct Reconstruction {
    MarkoffNode node;
    SBFraction fraction;
};

inline Reconstruction reconstruct_triple(const Integer& m, const Integer& r) {
    require(m >= 5 && r >= 1 && r < m, errc::precondition_violation, "need m >= 5 and 0 < r < m");
    require(gcd(m, r) == 1, errc::not_recognized, "m and r share a factor");
    Digits d = cf_of_rational(m, r);
    require(d.size() >= 2 && d.front() == 2 && d.back() == 2, errc::not_recognized, "expansion is not framed by 2s");
    long ones = 0, twos = 0;
    for (const auto& x : d) {
        if (x == 1) ++ones;
        else if (x == 2) ++twos;
        else fail(errc::not_recognized, "digit outside {1, 2}");
    }
    require(ones % 2 == 0 && twos % 2 == 0, errc::not_recognized, "odd digit counts");
    Integer mu = ones / 2 + 1, nu = twos / 2;
    require(gcd(mu, nu) == 1, errc::not_recognized, "digit counts give a non-coprime pair");
    require(frobenius_cf(mu, nu).digits == d, errc::not_recognized, "expansion does not have the S(mu, nu) shape");
    SBFraction x(mu, nu);
    MarkoffNode n = node_at(path_of_fraction(x));
    require(n.g == m && n.r[1] == r, errc::not_recognized, "tree node disagrees with the expansion");
    return {n, x};
}

} // namespace markoff
