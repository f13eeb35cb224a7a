#include "ckops/steenrod.hpp"

#include <doctest.h>

using namespace ck;

namespace {

ChowClass h_power_class(const SplitVariety& q, int s, bool mod2 = false) {
    ChowClass x = chow_zero(q);
    for (const auto& [idx, c] : data_for(q).factor_data()[0].chow_h_power(s)) x.c[idx] += c;
    return mod2 ? reduce_mod2(x) : x;
}

}  // namespace

TEST_CASE("sq1 on the cell basis of quadrics: l_j -> (j+1) l_{j-1}") {
    for (int d = 2; d <= 6; ++d) {
        SplitVariety q = SplitVariety::split_quadric(d);
        const auto& fd = data_for(q).factor_data()[0];
        int m = d / 2;
        for (int j = 0; j <= m; ++j) {
            ChowClass out = sq1(chow_cell(q, fd.lcell(j), true));
            ChowClass expect = (j >= 1 && (j + 1) % 2)
                                   ? chow_cell(q, fd.lcell(j - 1), true)
                                   : chow_zero(q, true);
            CHECK(out == expect);
        }
    }
}

TEST_CASE("sq1 on projective spaces") {
    SplitVariety p1 = SplitVariety::proj_space(1);
    CHECK(chow_is_zero(sq1(chow_cell(p1, "h1", true))));  // the point dies
    for (int n = 1; n <= 5; ++n) {
        SplitVariety p = SplitVariety::proj_space(n);
        ChowClass out = sq1(chow_fundamental(p, true));
        // Sq_1[P^n] = (n+1) h . [P^n], mod 2
        ChowClass expect = ((n + 1) % 2) ? chow_cell(p, "h1", true) : chow_zero(p, true);
        CHECK(out == expect);
    }
    CHECK_THROWS_AS(sq1(chow_fundamental(p1)), domain_error);  // integral input rejected
}

TEST_CASE("sq1 of h^{d-1} is h^d on quadrics, mod 2") {
    for (int d = 1; d <= 8; ++d) {
        SplitVariety q = SplitVariety::split_quadric(d);
        CHECK(sq1(h_power_class(q, d - 1, true)) == h_power_class(q, d, true));
    }
}

TEST_CASE("sq1 pushforward naturality against linear subspaces") {
    // the l_j row of the table is forced by i_* naturality: l_j = i_*[P^j],
    // and Sq_1[P^j] = (j+1) h . [P^j]
    for (int d = 4; d <= 6; ++d) {
        SplitVariety q = SplitVariety::split_quadric(d);
        for (int j = 1; j <= d / 2; ++j) {
            CatalogMorphism i = linear_embedding(j, q);
            ChowClass lj = chow_pushforward(i, chow_fundamental(i.source, true));
            ChowClass lhs = sq1(lj);
            ChowClass rhs =
                chow_pushforward(i, sq1(chow_fundamental(i.source, true)));
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("cohomological sq1 is a derivation with Sq^1(h) = h^2") {
    SplitVariety p4 = SplitVariety::proj_space(4);
    CHECK(chow_is_zero(sq1_coh(chow_fundamental(p4, true))));  // Sq^1(1) = 0
    for (int i = 1; i <= 3; ++i) {
        ChowClass hi = chow_cell(p4, "h" + std::to_string(i), true);
        ChowClass expect = (i % 2) ? chow_cell(p4, "h" + std::to_string(i + 1), true)
                                   : chow_zero(p4, true);
        CHECK(sq1_coh(hi) == expect);  // Sq^1(h^i) = i h^{i+1}
    }
    // derivation rule on basis pairs with h^a h^b in range
    for (int a = 0; a <= 2; ++a)
        for (int b = 0; a + b <= 3; ++b) {
            ChowClass ha = chow_cell(p4, "h" + std::to_string(a), true);
            ChowClass hb = chow_cell(p4, "h" + std::to_string(b), true);
            CHECK(sq1_coh(ha * hb) == sq1_coh(ha) * hb + ha * sq1_coh(hb));
        }
}

TEST_CASE("c1 action") {
    SplitVariety p2 = SplitVariety::proj_space(2);
    CHECK(c1_action({1}, chow_fundamental(p2)) == chow_cell(p2, "h1"));
    CHECK(c1_action({3}, chow_cell(p2, "h1")) == chow_scale(3, chow_cell(p2, "h2")));
    SplitVariety pp = SplitVariety::parse("P1xP1");
    CHECK(c1_action({1, 2}, chow_fundamental(pp)) ==
          chow_hyperplane(pp, 0) + chow_scale(2, chow_hyperplane(pp, 1)));
}

TEST_CASE("correspondence multiplicity") {
    SplitVariety p2 = SplitVariety::proj_space(2);
    SplitVariety pp = SplitVariety::product(p2, p2);
    // the diagonal
    CatalogMorphism diag = diagonal_morphism(p2);
    Correspondence rd =
        make_correspondence(pp, 1, chow_pushforward(diag, chow_fundamental(p2, true)));
    CHECK(multiplicity(rd) == 1);
    // X x pt also projects with multiplicity 1
    Correspondence rp = make_correspondence(pp, 1, chow_cell(pp, "h0*h2", true));
    CHECK(multiplicity(rp) == 1);
    // a cycle with positive-dimensional fibers over a proper subvariety: 0
    Correspondence rz = make_correspondence(pp, 1, chow_cell(pp, "h1*h1", true));
    CHECK(multiplicity(rz) == 0);
    // diagonal acts as the identity
    for (int i = 0; i < data_for(p2).ncells(); ++i) {
        ChowClass x = chow_cell(p2, i, true);
        CHECK(corr_pushforward(rd, x) == x);
    }
    // the zero correspondence acts as zero
    Correspondence r0 = make_correspondence(pp, 1, chow_zero(pp, true));
    CHECK(multiplicity(r0) == 0);
    CHECK(chow_is_zero(corr_pushforward(r0, chow_cell(p2, "h1", true))));
}

TEST_CASE("half degree") {
    for (int d = 1; d <= 6; ++d) {
        SplitVariety q = SplitVariety::split_quadric(d);
        CHECK(half_degree(h_power_class(q, d)) == 1);  // deg h^d = 2
        CHECK(half_degree(chow_scale(2, chow_cell(q, "l0"))) == 1);
        CHECK(half_degree(chow_scale(4, chow_cell(q, "l0"))) == 0);
        CHECK_THROWS_AS(half_degree(chow_cell(q, "l0")), odd_degree_error);
    }
    SplitVariety p2 = SplitVariety::proj_space(2);
    CHECK_THROWS_AS(half_degree(chow_cell(p2, "h1")), domain_error);  // not a 0-cycle
}

TEST_CASE("torsion decision on the quadric diagonal") {
    for (int d : {3, 5}) {
        SplitVariety q = SplitVariety::split_quadric(d);
        SplitVariety qq = SplitVariety::product(q, q);
        CatalogMorphism diag = diagonal_morphism(q);
        Correspondence r =
            make_correspondence(qq, 1, chow_pushforward(diag, chow_fundamental(q, true)));

        TorsionVerdict none = torsion_decision(d, r, false);
        CHECK(none.mult == 1);
        CHECK(!none.applicable);
        CHECK(none.message.find("no conclusion") != std::string::npos);

        TorsionVerdict v = torsion_decision(d, r, true);
        CHECK(v.applicable);
        CHECK(v.witness_defined);
        CHECK(v.witness == 1);
        CHECK(v.message.find("2-torsion") != std::string::npos);

        Correspondence r0 = make_correspondence(qq, 1, chow_zero(qq, true));
        TorsionVerdict z = torsion_decision(d, r0, true);
        CHECK(z.mult == 0);
        CHECK(!z.applicable);
        CHECK(z.message.find("not applicable") != std::string::npos);
    }
}
