#include <gtest/gtest.h>

#include "markoff/frobenius.hpp"

using namespace markoff;

namespace {
Digits D(std::initializer_list<long> xs) { return to_digits(xs); }
} // namespace

TEST(Kappa, Values) {
    EXPECT_EQ(kappa(1, 8, 5), 1);
    EXPECT_EQ(kappa(2, 8, 5), 2);
    EXPECT_EQ(kappa(3, 8, 5), 1);
    EXPECT_EQ(kappa(4, 8, 5), 2);
    EXPECT_EQ(kappa(1, 5, 3), 1);
    EXPECT_EQ(kappa(2, 5, 3), 2);
    EXPECT_EQ(kappa(1, 3, 2), 1);
    EXPECT_THROW(kappa(5, 8, 5), error);
    EXPECT_THROW(kappa(1, 3, 1), error);
}

TEST(FrobeniusCF, Fixtures) {
    auto a = frobenius_cf(3, 2);
    EXPECT_EQ(a.digits, D({2, 1, 1, 2, 2, 1, 1, 2}));
    EXPECT_EQ(a.value(), Rational(194, 75));
    EXPECT_EQ(a.s(), 29);
    auto b = frobenius_cf(5, 3);
    EXPECT_EQ(b.digits, D({2, 1, 1, 2, 2, 1, 1, 1, 1, 2, 2, 1, 1, 2}));
    EXPECT_EQ(b.value(), Rational(7561, 2923));
    EXPECT_EQ(b.s(), 1130);
    auto c = frobenius_cf(8, 5);
    EXPECT_EQ(c.value(), Rational(4400489, 1701181));
    EXPECT_EQ(c.s(), 657658);
    EXPECT_EQ(frobenius_cf(1, 1).digits, D({2, 2}));
    EXPECT_EQ(frobenius_cf(2, 1).value(), Rational(13, 5));
    try {
        frobenius_cf(4, 2);
        FAIL();
    } catch (const error& e) {
        EXPECT_EQ(e.code(), errc::not_coprime);
    }
}

TEST(FrobeniusCF, ShapeInvariants) {
    for (long mu = 1; mu < 40; ++mu)
        for (long nu = 1; mu + nu <= 40; ++nu) {
            if (gcd(Integer(mu), Integer(nu)) != 1) continue;
            auto f = frobenius_cf(mu, nu);
            ASSERT_EQ(long(f.digits.size()), 2 * (mu + nu - 1));
            long ones = std::count(f.digits.begin(), f.digits.end(), Integer(1));
            long twos = std::count(f.digits.begin(), f.digits.end(), Integer(2));
            ASSERT_EQ(ones, 2 * (mu - 1));
            ASSERT_EQ(twos, 2 * nu);
            ASSERT_EQ(f.digits, reversed(f.digits));
            ASSERT_EQ(long(fibonacci_segments(f.digits).size()), nu);
            Integer m = f.m(), r = f.r();
            ASSERT_EQ(mod(r * r + 1, m), 0);
            // the (v) formula also covers mu = 1 literally
            if (mu == 1 && nu > 1) {
                Digits S;
                for (long i = 1; i < nu; ++i) {
                    S.emplace_back(2);
                    S.emplace_back(2);
                }
                ASSERT_EQ(frobenius_inner(mu, nu), S);
            }
        }
}

TEST(FrobeniusCF, AgreesWithTree) {
    for_each_node(10, [&](const MarkoffNode& n) {
        auto x = fraction_of_path(n.path);
        auto f = frobenius_cf(x.mu, x.nu);
        ASSERT_EQ(f.m(), n.g) << n.path;
        ASSERT_EQ(f.r(), n.r[1]) << n.path;
        ASSERT_EQ(f.s(), n.s[1]) << n.path;
    });
}

TEST(Recursion, Holds) {
    auto r = recursion_check(8, 5);
    EXPECT_EQ(r.left, SBFraction(5, 3));
    EXPECT_EQ(r.right, SBFraction(3, 2));
    recursion_check(5, 3);
    recursion_check(3, 2);
    for (long mu = 2; mu < 30; ++mu)
        for (long nu = 2; mu + nu <= 30; ++nu)
            if (gcd(Integer(mu), Integer(nu)) == 1) recursion_check(mu, nu);
    EXPECT_THROW(recursion_check(2, 1), error);
}

TEST(Complement, SwapsDigits) {
    auto c = complement(5, 3);
    EXPECT_EQ(c.mu, 3);
    EXPECT_EQ(c.nu, 5);
    EXPECT_EQ(c.value(), Rational(37666, 15571));
    EXPECT_EQ(complement(3, 2).value(), Rational(433, 179));
    EXPECT_EQ(node_at("RL").g, 433);
    EXPECT_EQ(node_at("RL").r[1], 179);
    for (long mu = 1; mu < 25; ++mu)
        for (long nu = 1; mu + nu <= 25; ++nu) {
            if (gcd(Integer(mu), Integer(nu)) != 1) continue;
            ASSERT_EQ(complement(mu, nu).digits, frobenius_cf(nu, mu).digits);
            // applying the swap twice gives back S(mu, nu)
            ASSERT_EQ(detail::swap12(complement(mu, nu).inner()), frobenius_inner(mu, nu));
        }
}

TEST(Snake, FiveThree) {
    auto s = snake_diagram(5, 3);
    EXPECT_EQ(s.boxes.size(), 10u);
    EXPECT_FALSE(s.degenerate);
    EXPECT_EQ(s.digits(), frobenius_cf(5, 3).digits);
    EXPECT_EQ(s.render(),
              "                              +-----+-----+-----+\n"
              "                              |  2  | 1,1 |  2  |\n"
              "            +-----+-----+-----+-----+-----+-----+\n"
              "            |  2  | 1,1 | 1,1 |  2  |\n"
              "+-----+-----+-----+-----+-----+-----+\n"
              "|  2  | 1,1 |  2  |\n"
              "+-----+-----+-----+\n");
}

TEST(Snake, ThreeFiveAndAll) {
    auto s = snake_diagram(3, 5);
    EXPECT_EQ(s.boxes.size(), 12u);
    EXPECT_EQ(s.digits(), D({2, 2, 2, 1, 1, 2, 2, 2, 2, 1, 1, 2, 2, 2}));
    EXPECT_EQ(s.digits(), frobenius_cf(3, 5).digits);
    auto d = snake_diagram(1, 1);
    EXPECT_TRUE(d.degenerate);
    EXPECT_EQ(d.digits(), D({2, 2}));
    for (long mu = 1; mu < 30; ++mu)
        for (long nu = 1; mu + nu <= 30; ++nu) {
            if (gcd(Integer(mu), Integer(nu)) != 1) continue;
            auto sd = snake_diagram(mu, nu);
            ASSERT_EQ(long(sd.boxes.size()), mu - 1 + 2 * nu);
            ASSERT_EQ(sd.digits(), frobenius_cf(mu, nu).digits) << mu << "/" << nu;
        }
}

TEST(Reconstruct, Triples) {
    auto a = reconstruct_triple(7561, 2923);
    EXPECT_EQ(a.fraction, SBFraction(5, 3));
    EXPECT_EQ(a.node.triple(), (std::array<Integer, 3>{13, 7561, 194}));
    // the mutation of the example triple
    EXPECT_EQ(mutate(a.node, 'R').triple(), (std::array<Integer, 3>{7561, 4400489, 194}));
    auto b = reconstruct_triple(194, 75);
    EXPECT_EQ(b.fraction, SBFraction(3, 2));
    EXPECT_EQ(b.node.triple(), (std::array<Integer, 3>{13, 194, 5}));
    auto c = reconstruct_triple(5, 2);
    EXPECT_EQ(c.fraction, SBFraction(1, 1));
    EXPECT_TRUE(c.node.path.empty());
    for_each_node(8, [&](const MarkoffNode& n) {
        ASSERT_EQ(reconstruct_triple(n.g, n.r[1]).node.path, n.path);
    });
    try {
        reconstruct_triple(194, 76);
        FAIL();
    } catch (const error& e) {
        EXPECT_EQ(e.code(), errc::not_recognized);
    }
    EXPECT_THROW(reconstruct_triple(194, 119), error); // 194/119 = 1 + ..., not framed
}
