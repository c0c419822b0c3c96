#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "lw/complexes.hpp"

using namespace lw;

namespace {

// test-local fraction-free rank over the integers (Bareiss), kept
// independent of the library's elimination
int bareiss_rank(std::vector<std::vector<long long>> m) {
    if (m.empty()) return 0;
    int rows = int(m.size()), cols = int(m[0].size());
    int rank = 0;
    long long prev = 1;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (m[r][c] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(m[pivot], m[rank]);
        for (int r = rank + 1; r < rows; ++r) {
            for (int cc = c + 1; cc < cols; ++cc)
                m[r][cc] = (m[rank][c] * m[r][cc] - m[r][c] * m[rank][cc]) / prev;
            m[r][c] = 0;
        }
        prev = m[rank][c];
        ++rank;
    }
    return rank;
}

Poly mono(std::initializer_list<int> e, long num = 1, long den = 1) {
    return Poly::monomial(Exp(e), Scalar(num, den));
}

} // namespace

TEST_CASE("scalar arithmetic over the rationals") {
    set_field(FieldCfg::rationals());
    Scalar a(1, 3), b(2, 5);
    CHECK(a + b == Scalar(11, 15));
    CHECK(a * b == Scalar(2, 15));
    CHECK((a / b) == Scalar(5, 6));
    CHECK(a.inv() == Scalar(3));
    CHECK((a - a).is_zero());
}

TEST_CASE("scalar arithmetic over a prime field") {
    set_field(FieldCfg::prime(7));
    Scalar a(3), b(5);
    CHECK(a + b == Scalar(1));
    CHECK(a * b == Scalar(1));
    CHECK(Scalar(1, 2) == Scalar(4));  // 2^{-1} = 4 mod 7
    CHECK(a.inv() == Scalar(5));
    set_field(FieldCfg::rationals());
}

TEST_CASE("prime field requires a prime modulus") {
    CHECK_THROWS(set_field(FieldCfg::prime(6)));
    set_field(FieldCfg::rationals());
    CHECK_THROWS(SetupConfig(3, 2, Exp{2, 2, 2}, Exp{}, FieldCfg::prime(5)));  // p <= n+d
    CHECK_NOTHROW(SetupConfig(3, 2, Exp{2, 2, 2}, Exp{}, FieldCfg::prime(7)));
}

TEST_CASE("formal multidegrees of labels") {
    CHECK(BasisLabel{{1}, Exp{2, 0, 0}}.mdeg() == Exp{3, 0, 0});
    CHECK(BasisLabel{{}, Exp{1, 1, 1}}.mdeg() == Exp{1, 1, 1});
    CHECK(BasisLabel{{1, 2}, Exp{1, 0, 1}}.mdeg() == Exp{2, 1, 1});
}

TEST_CASE("polynomial arithmetic is a commutative ring on random triples") {
    set_field(FieldCfg::rationals());
    std::mt19937 rng(20240817);
    std::uniform_int_distribution<int> expd(0, 3), coefd(-4, 4), termd(0, 3);
    auto rand_poly = [&]() {
        Poly p;
        int nt = termd(rng);
        for (int t = 0; t <= nt; ++t)
            p.add_term(Exp{expd(rng), expd(rng)}, Scalar(coefd(rng)));
        return p;
    };
    for (int trial = 0; trial < 200; ++trial) {
        Poly a = rand_poly(), b = rand_poly(), c = rand_poly();
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - a).is_zero());
    }
}

TEST_CASE("monomial ideal membership and reduction") {
    SetupConfig cfg(3, 3, Exp{3, 1, 1});
    MonomialIdeal I = restricted_power_ideal(cfg);

    SUBCASE("generator set matches the restricted cube") {
        std::vector<Exp> expect{Exp{1, 1, 1}, Exp{2, 0, 1}, Exp{2, 1, 0}, Exp{3, 0, 0}};
        CHECK(I.gens() == expect);
    }
    SUBCASE("membership by divisibility") {
        CHECK(I.contains(Exp{1, 1, 1}));
        CHECK(!I.contains(Exp{0, 2, 1}));  // x2^2 x3
        CHECK(!MonomialIdeal{}.contains(Exp{5, 5, 5}));
    }
    SUBCASE("reduction deletes exactly the members") {
        Poly p = mono({3, 0, 0}) + mono({0, 1, 0});
        CHECK(reduce_mod(p, I) == mono({0, 1, 0}));
        CHECK(reduce_mod(Poly(), I).is_zero());
        MonomialIdeal m2(std::vector<Exp>{Exp{2, 0, 0}, Exp{1, 1, 0}, Exp{0, 2, 0}});
        CHECK(reduce_mod(Poly::monomial(Exp{1, 1, 0}, Scalar(1)), m2).is_zero());
    }
    SUBCASE("reduction is idempotent and matches membership") {
        std::mt19937 rng(7);
        std::uniform_int_distribution<int> expd(0, 4);
        for (int t = 0; t < 100; ++t) {
            Exp m{expd(rng), expd(rng), expd(rng)};
            Poly p = Poly::monomial(m, Scalar(1));
            CHECK(reduce_mod(reduce_mod(p, I), I) == reduce_mod(p, I));
            CHECK(I.contains(m) == reduce_mod(p, I).is_zero());
        }
    }
    SUBCASE("minimalization removes divisible generators") {
        MonomialIdeal J(std::vector<Exp>{Exp{1, 0, 0}, Exp{1, 1, 0}, Exp{2, 0, 0}});
        CHECK(J.gens() == std::vector<Exp>{Exp{1, 0, 0}});
    }
}

TEST_CASE("kernel computation per multidegree fiber") {
    set_field(FieldCfg::rationals());

    SUBCASE("the displayed four-dimensional kernel") {
        SetupConfig cfg(3, 3, Exp{3, 1, 1});
        auto src = restricted_module(1, 3, cfg);
        auto tgt = restricted_module(0, 4, cfg);
        LinMap f = kappa(1, 3, cfg);
        std::vector<Exp> sm, tm;
        for (const auto& l : src.labels) sm.push_back(l.mdeg());
        for (const auto& l : tgt.labels) tm.push_back(l.mdeg());
        auto basis = kernel_by_multidegree(f, sm, tm);
        CHECK(basis.size() == 4);

        // independent rank route: kernel dim = source rank - matrix rank
        std::vector<std::vector<long long>> m(tgt.rank(),
                                              std::vector<long long>(src.rank(), 0));
        for (int j = 0; j < src.rank(); ++j)
            for (const auto& [i, q] : f.cols[j])
                m[i][j] = std::stoll(q.single_term().second.str());
        CHECK(int(basis.size()) == src.rank() - bareiss_rank(m));

        // every kernel vector maps to zero
        for (const auto& v : basis) CHECK(elem_is_zero(f.apply(v)));
    }

    SUBCASE("zero map: everything is in the kernel") {
        SetupConfig cfg(3, 2, Exp{2, 2, 2});
        auto K0 = kernel_space(0, cfg);
        CHECK(K0.rank() == K0.ambient.rank());
    }

    SUBCASE("squarefree fiber kernel") {
        SetupConfig cfg(3, 2, Exp{1, 1, 1});
        auto src = restricted_module(1, 2, cfg);
        auto tgt = restricted_module(0, 3, cfg);
        LinMap f = kappa(1, 2, cfg);
        std::vector<Exp> sm, tm;
        for (const auto& l : src.labels) sm.push_back(l.mdeg());
        for (const auto& l : tgt.labels) tm.push_back(l.mdeg());
        auto basis = kernel_by_multidegree(f, sm, tm);
        CHECK(basis.size() == 2);
        CHECK(src.rank() == 3);
    }

    SUBCASE("rejects non-scalar coefficients") {
        SetupConfig cfg(2, 2, Exp{2, 2});
        auto src = restricted_module(1, 1, cfg);
        LinMap f = kos_tensor(1, 1, cfg);
        std::vector<Exp> sm, tm;
        for (const auto& l : src.labels) sm.push_back(l.mdeg());
        auto tgt = restricted_module(0, 1, cfg);
        for (const auto& l : tgt.labels) tm.push_back(l.mdeg());
        CHECK_THROWS(kernel_by_multidegree(f, sm, tm));
    }
}

TEST_CASE("solver expresses targets in a spanning set") {
    set_field(FieldCfg::rationals());
    SetupConfig cfg(2, 2, Exp{2, 2});
    KernelSpace K = kernel_space(1, cfg);
    REQUIRE(K.rank() == 2);

    // a polynomial combination of the basis solves back to itself
    Element target;
    for (int j = 0; j < K.rank(); ++j) {
        Poly q = Poly::monomial(Exp{j + 1, 0}, Scalar(2 * j + 1));
        elem_add(target, elem_scale(q, K.basis[j]));
    }
    auto coords = K.solver.solve_element(target);
    REQUIRE(coords.has_value());
    Element back;
    for (const auto& [j, q] : *coords) elem_add(back, elem_scale(q, K.basis[j]));
    CHECK(back == target);

    // something outside the kernel has no coordinates
    Element off;
    off[0] = Poly::constant(2, Scalar(1));
    CHECK(!K.solver.solve_element(off).has_value());
}

TEST_CASE("rank plus kernel dimension equals source rank on every fiber map") {
    set_field(FieldCfg::rationals());
    for (auto wv : {Exp{2, 2}, Exp{1, 1}, Exp{2, 1}}) {
        SetupConfig cfg(2, 2, wv);
        auto src = restricted_module(1, 2, cfg);
        auto tgt = restricted_module(0, 3, cfg);
        LinMap f = kappa(1, 2, cfg);
        std::vector<Exp> sm, tm;
        for (const auto& l : src.labels) sm.push_back(l.mdeg());
        for (const auto& l : tgt.labels) tm.push_back(l.mdeg());
        auto basis = kernel_by_multidegree(f, sm, tm);
        DenseMatrix m(tgt.rank(), src.rank());
        for (int j = 0; j < src.rank(); ++j)
            for (const auto& [i, q] : f.cols[j]) m.at(i, j) = q.single_term().second;
        CHECK(int(basis.size()) + rank_of(std::move(m)) == src.rank());
    }
}
