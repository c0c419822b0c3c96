#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "lw/complexes.hpp"

using namespace lw;

TEST_CASE("position signs in an index set") {
    CHECK(koszul_sign(1, {1, 2, 3}) == 1);
    CHECK(koszul_sign(2, {1, 2, 3}) == -1);
    CHECK(koszul_sign(5, {2, 5, 7}) == -1);
    CHECK_THROWS(koszul_sign(4, {1, 2, 3}));
}

TEST_CASE("shuffle signs") {
    CHECK(shuffle_sign({1, 2, 3}, {1, 2, 3}) == 1);
    CHECK(shuffle_sign({2}, {1, 2, 3}) == -1);
    CHECK(shuffle_sign({2, 3}, {1, 2, 3}) == 1);
    CHECK_THROWS(shuffle_sign({4}, {1, 2, 3}));
}

TEST_CASE("two-path sign law behind the cycle lifts") {
    // sgn(r in tau) shuffle(tau, sigma) =
    //   (-1)^{|tau|-1} sgn(r in sigma\tau') shuffle(tau', sigma)
    // for tau = tau' + r; exhaustive over subsets of {1..5}
    IndexSet universe{1, 2, 3, 4, 5};
    for (int size = 1; size <= 5; ++size)
        for (const auto& sigma : subsets_of(universe, size))
            for (int j = 1; j <= size; ++j)
                for (const auto& tau : subsets_of(sigma, j))
                    for (int r : tau) {
                        IndexSet tau_prime = set_minus(tau, r);
                        int lhs = koszul_sign(r, tau) * shuffle_sign(tau, sigma);
                        int rhs = koszul_sign(r, set_minus(sigma, tau_prime)) *
                                  shuffle_sign(tau_prime, sigma);
                        int level = (j - 1) % 2 == 0 ? 1 : -1;
                        CHECK(lhs == level * rhs);
                    }
}

TEST_CASE("wedge helpers") {
    auto w = wedge_insert(2, {1, 3});
    REQUIRE(w.has_value());
    CHECK(w->first == -1);
    CHECK(w->second == IndexSet{1, 2, 3});
    CHECK(!wedge_insert(3, {1, 3}).has_value());

    auto m = wedge_merge({2}, {1, 3});
    REQUIRE(m.has_value());
    CHECK(m->first == -1);
    CHECK(m->second == IndexSet{1, 2, 3});
    CHECK(!wedge_merge({1, 2}, {2, 3}).has_value());
}

TEST_CASE("configuration validation") {
    CHECK_THROWS(SetupConfig(0, 1, Exp{}));
    CHECK_THROWS(SetupConfig(2, 0, Exp{1, 1}));
    CHECK_THROWS(SetupConfig(2, 2, Exp{1, 1, 1}));  // wrong length
    CHECK_THROWS(SetupConfig(3, 4, Exp{1, 1, 1}));  // sum min(w_i,d) < d
    CHECK_THROWS(SetupConfig(2, 2, Exp{2, 2}, Exp{0, 1}));
    CHECK_NOTHROW(SetupConfig(3, 3, Exp{3, 1, 1}));
    CHECK_NOTHROW(SetupConfig(2, 2, Exp{2, 0}));  // w_i = 0 allowed
}

TEST_CASE("restricted exponent sets") {
    SUBCASE("restriction of the dilated segment") {
        SetupConfig cfg(3, 2, Exp{2, 1, 1});
        std::vector<Exp> expect{Exp{0, 1, 1}, Exp{1, 0, 1}, Exp{1, 1, 0}, Exp{2, 0, 0}};
        CHECK(restricted_exponents(cfg) == expect);
    }
    SUBCASE("the four displayed generators") {
        SetupConfig cfg(3, 3, Exp{3, 1, 1});
        std::vector<Exp> expect{Exp{1, 1, 1}, Exp{2, 0, 1}, Exp{2, 1, 0}, Exp{3, 0, 0}};
        CHECK(restricted_exponents(cfg) == expect);
    }
    SUBCASE("full simplex counts") {
        CHECK(restricted_exponents(SetupConfig(2, 2, Exp{2, 2})).size() == 3);
        for (int n = 1; n <= 4; ++n)
            for (int d = 1; d <= 4; ++d) {
                SetupConfig full(n, d, Exp(std::vector<int>(n, d)));
                CHECK(long(restricted_exponents(full).size()) == binomial(n + d - 1, d));
                if (n >= d) {
                    SetupConfig sqfree(n, d, Exp(std::vector<int>(n, 1)));
                    CHECK(long(restricted_exponents(sqfree).size()) == binomial(n, d));
                }
            }
    }
}

TEST_CASE("hook tableaux") {
    SUBCASE("the four displayed tableaux") {
        SetupConfig cfg(3, 3, Exp{3, 1, 1});
        auto tabs = hook_ssyt(1, 3, cfg);
        REQUIRE(tabs.size() == 4);
        std::vector<HookTableau> expect{
            HookTableau{{1, 1, 1}, {2}},
            HookTableau{{1, 1, 1}, {3}},
            HookTableau{{1, 1, 2}, {3}},
            HookTableau{{1, 1, 3}, {2}},
        };
        std::sort(expect.begin(), expect.end());
        CHECK(tabs == expect);
    }
    SUBCASE("single-row tableaux are the restricted monomials") {
        for (auto cfg : {SetupConfig(3, 2, Exp{2, 1, 1}), SetupConfig(2, 3, Exp{3, 3}),
                         SetupConfig(3, 3, Exp{3, 1, 1})})
            CHECK(hook_ssyt(0, cfg.d, cfg).size() == restricted_exponents(cfg).size());
    }
    SUBCASE("squarefree count") {
        SetupConfig cfg(3, 2, Exp{1, 1, 1});
        CHECK(hook_ssyt(1, 2, cfg).size() == 2);
    }
    SUBCASE("tableau count equals kernel dimension") {
        for (auto cfg : {SetupConfig(3, 2, Exp{2, 2, 2}), SetupConfig(3, 3, Exp{3, 1, 1}),
                         SetupConfig(2, 3, Exp{3, 3}), SetupConfig(3, 2, Exp{2, 2, 1}),
                         SetupConfig(2, 2, Exp{2, 2}, Exp{1, 2})})
            for (int a = 1; a < cfg.n; ++a)
                CHECK(int(hook_ssyt(a, cfg.d, cfg).size()) == kernel_space(a, cfg).rank());
    }
    SUBCASE("content stays bounded") {
        SetupConfig cfg(3, 4, Exp{2, 2, 1});
        for (const auto& t : hook_ssyt(1, 4, cfg)) CHECK(leq(t.content(3), cfg.w));
    }
}

TEST_CASE("binomial coefficients") {
    CHECK(binomial(4, 2) == 6);
    CHECK(binomial(7, 3) == 35);
    CHECK(binomial(3, 5) == 0);
    CHECK(binomial(5, 0) == 1);
}
