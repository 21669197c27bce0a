#include "doctest.h"

#include <random>

#include "adic/snf.hpp"

using namespace adic;

static IntMat mat(std::initializer_list<std::initializer_list<long>> rows) {
    IntMat m;
    for (auto& r : rows) {
        IntVec v;
        for (long x : r) v.push_back(mpz_class(x));
        m.push_back(v);
    }
    return m;
}

TEST_CASE("smith normal form: spec examples") {
    SUBCASE("diag(2,3) -> diag(1,6)") {
        auto s = smith_normal_form(mat({{2, 0}, {0, 3}}));
        CHECK(s.d[0][0] == 1);
        CHECK(s.d[1][1] == 6);
        CHECK(int_equal(int_mul(int_mul(s.u, mat({{2, 0}, {0, 3}})), s.v), s.d));
    }
    SUBCASE("[[0]] stays [[0]]") {
        auto s = smith_normal_form(mat({{0}}));
        CHECK(s.d[0][0] == 0);
    }
    SUBCASE("[[4,6]] -> [[2,0]]") {
        auto s = smith_normal_form(mat({{4, 6}}));
        CHECK(s.d[0][0] == 2);
        CHECK(s.d[0][1] == 0);
    }
}

TEST_CASE("smith normal form: random property check") {
    std::mt19937_64 rng(20240817);
    std::uniform_int_distribution<int> dim(1, 5), entry(-20, 20);
    for (int iter = 0; iter < 120; ++iter) {
        std::size_t r = dim(rng), c = dim(rng);
        IntMat a(r, IntVec(c));
        for (auto& row : a)
            for (auto& x : row) x = entry(rng);
        auto s = smith_normal_form(a);
        // exact factorization
        CHECK(int_equal(int_mul(int_mul(s.u, a), s.v), s.d));
        // unimodular transforms
        CHECK(abs(int_det(s.u)) == 1);
        CHECK(abs(int_det(s.v)) == 1);
        // divisibility chain, nonnegative diagonal
        std::size_t lim = std::min(r, c);
        for (std::size_t i = 0; i < lim; ++i) {
            CHECK(s.d[i][i] >= 0);
            for (std::size_t j = 0; j < c; ++j)
                if (j != i) CHECK(s.d[i][j] == 0);
            if (i + 1 < lim && s.d[i][i] != 0 && s.d[i + 1][i + 1] != 0)
                CHECK(s.d[i + 1][i + 1] % s.d[i][i] == 0);
            if (i + 1 < lim && s.d[i][i] == 0)
                CHECK(s.d[i + 1][i + 1] == 0);
        }
    }
}

TEST_CASE("kernel and solve") {
    auto a = mat({{2, 4}, {1, 2}});
    auto k = int_kernel(a);
    REQUIRE(k[0].size() == 1);
    CHECK(a[0][0] * k[0][0] + a[0][1] * k[1][0] == 0);
    CHECK(a[1][0] * k[0][0] + a[1][1] * k[1][0] == 0);

    auto sol = int_solve(mat({{2, 0}, {0, 3}}), {mpz_class(4), mpz_class(9)});
    REQUIRE(sol.has_value());
    CHECK((*sol)[0] == 2);
    CHECK((*sol)[1] == 3);
    CHECK(!int_solve(mat({{2}}), {mpz_class(3)}).has_value());
}

TEST_CASE("hermite reduction gives canonical representatives") {
    auto h = column_hermite(mat({{2, 0}, {0, 3}}));
    IntVec v{mpz_class(5), mpz_class(7)};
    auto r = hermite_reduce(h, v);
    CHECK(r[0] == 1);
    CHECK(r[1] == 1);
    auto z = hermite_reduce(h, IntVec{mpz_class(4), mpz_class(-3)});
    CHECK(z[0] == 0);
    CHECK(z[1] == 0);
}
