#include "ckops/connective.hpp"

#include <doctest.h>

#include <cstdlib>

using namespace ck;

namespace {

GrClass phi_cycle(const ChowClass& integral, int p) {
    return phi(reduce_mod2(integral), p);
}

}  // namespace

TEST_CASE("filtration elements and beta") {
    SplitVariety q3 = SplitVariety::split_quadric(3);
    FiltrationElement pt = filtration_element(k_cell(q3, "l0"), 0);
    CHECK(pt.level == 0);
    CHECK(pt.minimal_level == 0);
    FiltrationElement up = beta(pt);
    CHECK(up.level == 1);
    CHECK(up.underlying == pt.underlying);
    CHECK(filtration_equal(up, filtration_element(k_cell(q3, "l0"), 1)));
    // declaring too low a level is a certificate failure
    CHECK_THROWS_AS(filtration_element(k_unit(q3), 0), certificate_error);
    // the zero class sits in every level
    CHECK_NOTHROW(filtration_element(k_zero(q3), -1));
    CHECK_NOTHROW(filtration_element(k_zero(q3), 2));
}

TEST_CASE("tau on the point and the fundamental class") {
    SplitVariety p2 = SplitVariety::proj_space(2);
    // tau_{-1}([O_pt] @ 0) = psi_{-1}[O_pt] - [O_pt] = 0
    FiltrationElement t = tau(-1, filtration_element(k_cell(p2, "h2"), 0));
    CHECK(t.level == -1);
    CHECK(k_is_zero(t.underlying));
    // gr(tau_{-1}([O_X] @ d)) = phi(Sq_1 [X])
    for (const char* n : {"P2", "P3", "Q3", "Q4"}) {
        SplitVariety v = SplitVariety::parse(n);
        FiltrationElement x = filtration_element(k_unit(v), v.dim());
        GrClass lhs = gr_residue(tau(-1, x));
        CHECK(lhs == phi(sq1(chow_fundamental(v, true)), v.dim() - 1));
    }
}

TEST_CASE("pi classes") {
    SplitVariety q4 = SplitVariety::split_quadric(4);
    FiltrationElement x = filtration_element(k_unit(q4), 4);
    // pi^k(0) = 0: theta^k(0) = 1 = k^0
    FiltrationElement z = pi_class(-1, split_zero(q4), x);
    CHECK(k_is_zero(z.underlying));
    // pi^{-1}(L) x = x - [L] x
    FiltrationElement p = pi_class(-1, split_line(q4, {1}), x);
    CHECK(p.underlying == k_unit(q4) - k_line(q4, {1}));
    // gr(pi^{-1}(y) [O_X]) = phi(c_1(y) mod 2)
    for (const char* n : {"P2", "P3", "Q3"}) {
        SplitVariety v = SplitVariety::parse(n);
        FiltrationElement fx = filtration_element(k_unit(v), v.dim());
        for (const SplitKClass& y :
             {tangent_class(v), split_line(v, std::vector<int>(v.nfactors(), 1), 2)}) {
            GrClass lhs = gr_residue(pi_class(-1, y, fx));
            CHECK(lhs == phi_cycle(chern_class(y, 1), v.dim() - 1));
        }
    }
    // iterating drops two levels and picks up c_1 twice
    SplitVariety p3 = SplitVariety::proj_space(3);
    SplitKClass y1 = split_line(p3, {1}, 1), y2 = split_line(p3, {2}, 1);
    FiltrationElement fx = filtration_element(k_unit(p3), 3);
    GrClass lhs = gr_residue(pi_class(-1, y1, pi_class(-1, y2, fx)));
    CHECK(lhs == phi_cycle(chern_class(y1, 1) * chern_class(y2, 1), 1));
}

TEST_CASE("localization mismatch is rejected") {
    SplitVariety p2 = SplitVariety::proj_space(2);
    FiltrationElement x = filtration_element(k_unit(p2), 2);
    FiltrationElement t2 = tau(2, x);  // coordinates land in Z[1/2]
    CHECK_THROWS_AS(tau(3, t2), domain_error);
}

TEST_CASE("gr steenrod vanishes on gr_0 and matches sq1 on cells") {
    SplitVariety q4 = SplitVariety::split_quadric(4);
    GrClass pt = phi(chow_cell(q4, "l0", true), 0);
    CHECK(gr_is_zero(gr_steenrod(pt)));
    for (const char* n : {"P3", "Q3", "Q4", "P1xP2"}) {
        SplitVariety v = SplitVariety::parse(n);
        for (const auto& chk : descent_compare(v)) CHECK(chk.pass);
        const auto& d = data_for(v);
        for (int i = 0; i < d.ncells(); ++i) {
            int p = d.cell_dim(i);
            GrClass g = phi(chow_cell(v, i, true), p);
            if (p == 0) {
                CHECK(gr_is_zero(gr_steenrod(g)));
                continue;
            }
            CHECK(gr_steenrod(g) == phi(sq1(chow_cell(v, i, true)), p - 1));
            CHECK(gr_steenrod_lift_independent(g, 10, steenrod_seed()));
        }
    }
}

TEST_CASE("steenrod seed comes from the environment when set") {
    unsetenv("CK_STEENROD_SEED");
    CHECK(steenrod_seed() == 0xC0FFEEul);
    setenv("CK_STEENROD_SEED", "12345", 1);
    CHECK(steenrod_seed() == 12345ul);
    unsetenv("CK_STEENROD_SEED");
}
