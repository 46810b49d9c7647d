#include <gtest/gtest.h>

#include <random>

#include "markoff/tcontinuants.hpp"

using namespace markoff;

namespace {
Digits D(std::initializer_list<long> xs) { return to_digits(xs); }

long fib(long n) {
    long a = 0, b = 1;
    for (long i = 0; i < n; ++i) {
        long t = a + b;
        a = b;
        b = t;
    }
    return a;
}

// all sequences of the given length with entries in 1..hi
template <class F>
void for_each_le(size_t len, long hi, F&& f) {
    Digits c(len, Integer(1));
    while (true) {
        f(c);
        size_t p = 0;
        while (p < len && c[p] == hi) c[p++] = 1;
        if (p == len) return;
        c[p] += 1;
    }
}
} // namespace

TEST(IndexSets, SmallFamilies) {
    auto f0 = index_sets(0);
    EXPECT_EQ(f0.J, (std::vector<IndexSet>{{}}));
    EXPECT_EQ(f0.I.size(), 2u);
    EXPECT_EQ(index_sets(2).J, (std::vector<IndexSet>{{}, {1}}));
    EXPECT_EQ(index_sets(3).J, (std::vector<IndexSet>{{}, {2}, {1, 2}}));
}

TEST(IndexSets, CardinalitiesAndEvenOdd) {
    for (long m = 0; m <= 18; ++m) {
        auto f = index_sets(m);
        ASSERT_EQ(long(f.J.size()), fib(m + 1)) << m;
        ASSERT_EQ(long(f.I.size()), fib(m + 3)) << m;
        ASSERT_EQ(std::count(f.I.begin(), f.I.end(), IndexSet{}), 2);
        for (const auto& X : f.J) {
            ASSERT_TRUE(even_odd_ok(X, m));
            for (long x : X) ASSERT_TRUE(x >= 1 && x <= m - 1);
        }
    }
    EXPECT_EQ(long(index_sets(25).J.size()), fib(26));
    try {
        index_sets(26);
        FAIL();
    } catch (const error& e) {
        EXPECT_EQ(e.code(), errc::resource_limit);
    }
}

TEST(EvalST, Fixtures) {
    auto a = eval_ST(D({3}));
    EXPECT_EQ(a.T, 5);
    EXPECT_EQ(a.S, 1);
    auto b = eval_ST(D({1, 5}));
    EXPECT_EQ(b.T, 13);
    EXPECT_EQ(b.S, 2);
    auto c = eval_ST({});
    EXPECT_EQ(c.T, 2);
    EXPECT_EQ(c.S, 1);
    auto d = eval_ST(D({6, 3}));
    EXPECT_EQ(d.T, 29);
    EXPECT_EQ(d.T, continuant(D({4, 7})));
    EXPECT_EQ(continuant(D({6, 2})), 13);
}

TEST(EvalST, SubsetsAgreeWithRecurrence) {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> len(0, 12), val(-20, 50);
    for (int it = 0; it < 400; ++it) {
        Digits c(len(rng));
        for (auto& x : c) x = val(rng);
        auto r = eval_ST(c), s = eval_ST_subsets(c);
        ASSERT_EQ(r.S, s.S) << join(c);
        ASSERT_EQ(r.T, s.T) << join(c);
    }
}

TEST(EvalST, MatchesLEPairs) {
    for (size_t len = 1; len <= 5; ++len)
        for_each_le(len, 9, [&](const Digits& c) {
            auto p = pair_from_le(c);
            auto e = eval_ST(c);
            ASSERT_EQ(e.T, p.n);
            ASSERT_EQ(e.S, p.k);
            ASSERT_EQ(le_from_pair(p), c);
        });
}

TEST(Monomials, MatchDisplayedPolynomials) {
    EXPECT_EQ(monomials(0).S, "1");
    EXPECT_EQ(monomials(0).T, "2");
    EXPECT_EQ(monomials(1).T, "2 + x_1");
    EXPECT_EQ(monomials(2).S, "1 + x_1");
    EXPECT_EQ(monomials(2).T, "2 + x_1 + x_2 + x_1x_2");
    EXPECT_EQ(monomials(3).S, "1 + x_2 + x_1x_2");
    EXPECT_EQ(monomials(3).T, "2 + x_1 + x_2 + x_3 + x_1x_2 + x_2x_3 + x_1x_2x_3");
    EXPECT_EQ(monomials(4).S, "1 + x_1 + x_3 + x_2x_3 + x_1x_2x_3");
    EXPECT_EQ(monomials(4).T, "2 + x_1 + x_2 + x_3 + x_4 + x_1x_2 + x_1x_4 + x_2x_3 + x_3x_4 + x_1x_2x_3 + "
                              "x_2x_3x_4 + x_1x_2x_3x_4");
    EXPECT_EQ(monomials(5).S, "1 + x_2 + x_4 + x_1x_2 + x_1x_4 + x_3x_4 + x_2x_3x_4 + x_1x_2x_3x_4");
    EXPECT_EQ(monomials(5).T, "2 + x_1 + x_2 + x_3 + x_4 + x_5 + x_1x_2 + x_1x_4 + x_2x_3 + x_2x_5 + x_3x_4 + "
                              "x_4x_5 + x_1x_2x_3 + x_1x_2x_5 + x_1x_4x_5 + x_2x_3x_4 + x_3x_4x_5 + "
                              "x_1x_2x_3x_4 + x_2x_3x_4x_5 + x_1x_2x_3x_4x_5");
    auto t6 = monomials(6).T;
    EXPECT_EQ(std::count(t6.begin(), t6.end(), '+'), fib(9) - 2);
    EXPECT_THROW(monomials(7), error);
}

TEST(Identities, Fixtures) {
    auto r = identity_suite(D({1, 5}), 1, 3);
    EXPECT_NE(std::find(r.checked.begin(), r.checked.end(), "continuant-T"), r.checked.end());
    EXPECT_NE(std::find(r.checked.begin(), r.checked.end(), "product"), r.checked.end());
    auto t = identity_suite({}, 0, 0);
    EXPECT_EQ(t.checked.size(), 3u);
    try {
        identity_suite(D({1, 5}), 3, 1);
        FAIL();
    } catch (const error& e) {
        EXPECT_EQ(e.code(), errc::precondition_violation);
    }
}

TEST(Identities, AllSmallLEs) {
    for (size_t len = 0; len <= 6; ++len)
        for_each_le(len, 6, [&](const Digits& c) { identity_sweep(c, Integer(len) - 2); });
}

TEST(Identities, RandomArgs) {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> len(1, 10), val(-30, 200), dd(-50, 50);
    for (int it = 0; it < 500; ++it) {
        Digits c(len(rng));
        for (auto& x : c) x = val(rng);
        identity_sweep(c, dd(rng));
    }
}

TEST(Identities, AlternatingSumAsPrinted) {
    // the printed sign (-1)^j on the right-hand side fails already at m = 3, i = 2
    Digits c = D({1, 2, 3});
    Integer lhs = S_of(3, c) + S_of(2, c);
    Integer printed = -T_of(2, c), corrected = T_of(2, c);
    EXPECT_NE(lhs, printed);
    EXPECT_EQ(lhs, corrected);
}
