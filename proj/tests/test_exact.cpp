#include "ckops/exact.hpp"
#include "ckops/qmat.hpp"
#include "ckops/snf.hpp"

#include <doctest.h>

#include <random>

using namespace ck;

TEST_CASE("coefficient canonical form") {
    CHECK(Coefficient(4, 2, 2) == Coefficient(1));
    CHECK(Coefficient(6, 1, 2) == Coefficient(3));
    CHECK(Coefficient(1, 3, -1) == Coefficient(-1));  // 1/(-1)^3; k = +-1 folds into the sign
    CHECK(Coefficient(5, 0, 3).is_integer());
    CHECK(Coefficient(1, 1, 3) + Coefficient(2, 1, 3) == Coefficient(1));
    CHECK(Coefficient(1, 1, 2) * Coefficient(1, 1, 2) == Coefficient(1, 2, 2));
    CHECK(Coefficient(3, 1, 3).as_integer() == 1);
    CHECK_THROWS_AS(Coefficient(1, 1, 2).as_integer(), domain_error);
    CHECK_THROWS_AS(Coefficient(1, 1, 0), domain_error);
    CHECK(Coefficient(-8, 0, 2).unit_inverse() == Coefficient(-1, 3, 2));
    CHECK_THROWS_AS(Coefficient(3, 0, 2).unit_inverse(), inversion_error);
}

TEST_CASE("tk polynomial closed forms") {
    CHECK(tk_polynomial(2) == LaurentPoly(Coefficient(1)) + LaurentPoly::monomial(1));
    CHECK(tk_polynomial(1) == LaurentPoly(Coefficient(1)));
    CHECK(tk_polynomial(-1) == LaurentPoly::monomial(-1, Coefficient(-1)));
    CHECK(tk_polynomial(3) == LaurentPoly(Coefficient(1)) + LaurentPoly::monomial(1) +
                                  LaurentPoly::monomial(2));
    CHECK_THROWS_AS(tk_polynomial(0), domain_error);
}

TEST_CASE("tk multiplicativity and remainder decomposition") {
    for (long k = -3; k <= 3; ++k) {
        if (k == 0) continue;
        for (long k2 = -3; k2 <= 3; ++k2) {
            if (k2 == 0) continue;
            // t^{kk'}(u) = t^k(u^{k'}) t^{k'}(u)
            CHECK(tk_polynomial(k * k2) ==
                  tk_polynomial(k).compose_power(k2) * tk_polynomial(k2));
        }
        // t^k(u) = k + (1-u) r(u), exactly
        LaurentPoly one_minus_u =
            LaurentPoly(Coefficient(1)) - LaurentPoly::monomial(1);
        CHECK(tk_polynomial(k) ==
              LaurentPoly(Coefficient(k)) + one_minus_u * tk_remainder(k));
    }
}

TEST_CASE("laurent exact division guard") {
    LaurentPoly p = LaurentPoly(Coefficient(1)) - LaurentPoly::monomial(2);  // 1 - u^2
    CHECK(p.divide_by_one_minus_u() == tk_polynomial(2));
    CHECK_THROWS_AS(LaurentPoly(Coefficient(1)).divide_by_one_minus_u(), domain_error);
}

TEST_CASE("lattice solve on the stated instances") {
    IntegerLattice diag(2, {{2, 0}, {0, 1}});
    auto c = diag.solve({4, 3});
    REQUIRE(c.has_value());
    CHECK((*c)[0] == 2);
    CHECK((*c)[1] == 3);
    CHECK(!diag.solve({1, 0}).has_value());  // parity obstruction

    IntegerLattice skew(2, {{1, 1}, {0, 2}});
    auto c2 = skew.solve({3, 1});
    REQUIRE(c2.has_value());
    CHECK((*c2)[0] == 3);
    CHECK((*c2)[1] == -1);
    CHECK_THROWS_AS(diag.solve({1, 2, 3}), domain_error);
}

TEST_CASE("lattice solve reproduces the target on randomized instances") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> dim(1, 5), ngen(1, 6), entry(-5, 5), coeff(-4, 4);
    for (int t = 0; t < 200; ++t) {
        int n = dim(rng), m = ngen(rng);
        IntMat gens(m, IntVec(n));
        for (auto& g : gens)
            for (auto& x : g) x = entry(rng);
        IntegerLattice lat(n, gens);
        IntVec target(n, 0);
        std::vector<int> chosen(m);
        for (int j = 0; j < m; ++j) {
            chosen[j] = coeff(rng);
            for (int i = 0; i < n; ++i) target[i] += Int(chosen[j]) * gens[j][i];
        }
        auto sol = lat.solve(target);
        REQUIRE(sol.has_value());
        IntVec re(n, 0);
        for (int j = 0; j < m; ++j)
            for (int i = 0; i < n; ++i) re[i] += (*sol)[j] * gens[j][i];
        CHECK(re == target);
    }
}

TEST_CASE("smith normal form certifies U A V = D") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> dim(1, 5), entry(-6, 6);
    for (int t = 0; t < 50; ++t) {
        int r = dim(rng), c = dim(rng);
        IntMat a(r, IntVec(c));
        for (auto& row : a)
            for (auto& x : row) x = entry(rng);
        SmithForm s = smith_normal_form(a);
        IntMat d = mat_mul(mat_mul(s.u, a), s.v);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j)
                CHECK(d[i][j] == (i == j && i < static_cast<int>(s.diag.size()) ? s.diag[i] : 0));
        for (size_t i = 0; i + 1 < s.diag.size(); ++i)
            if (s.diag[i + 1] != 0) CHECK(s.diag[i + 1] % s.diag[i] == 0);
    }
}

TEST_CASE("invert unipotent") {
    // 1 - eps with eps^2 = 0
    QMat m = QMat::identity(2);
    m.at(0, 1) = Coefficient(-1);
    QMat inv = invert_unipotent(m, Coefficient(1), 2);
    CHECK(inv * m == QMat::identity(2));
    CHECK(inv.at(0, 1) == Coefficient(1));  // 1 + eps

    CHECK(invert_unipotent(QMat::identity(3), Coefficient(1), 1) == QMat::identity(3));

    // k (1 + n) over Z[1/k]: inverse is k^{-1} (1 - n)
    QMat km = QMat::identity(2).scaled(Coefficient(2));
    km.at(1, 0) = Coefficient(2);  // 2 * (1 + n), n = e_{10}
    QMat kinv = invert_unipotent(km, Coefficient(2, 0, 2), 2);
    CHECK(kinv * km == QMat::identity(2));
    CHECK(kinv.at(0, 0) == Coefficient(1, 1, 2));
    CHECK(kinv.at(1, 0) == Coefficient(-1, 1, 2));

    // even unit part without 1/2: not invertible
    QMat bad = QMat::identity(2).scaled(Coefficient(2));
    CHECK_THROWS_AS(invert_unipotent(bad, Coefficient(2), 2), inversion_error);
}
