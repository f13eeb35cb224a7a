#include "ckops/classes.hpp"
#include "ckops/connective.hpp"

#include <doctest.h>

using namespace ck;

namespace {

// chi(O_{P^n}(a)) as a polynomial in a
Int binom_chi(const Int& a, int n) {
    Int num(1), den(1);
    for (int i = 1; i <= n; ++i) {
        num *= a + i;
        den *= i;
    }
    return num / den;
}

ChowClass h_power_class(const SplitVariety& q, int s) {
    ChowClass x = chow_zero(q);
    for (const auto& [idx, c] : data_for(q).factor_data()[0].chow_h_power(s)) x.c[idx] += c;
    return x;
}

}  // namespace

TEST_CASE("variety names parse and round-trip") {
    for (const char* n : {"P3", "Q4", "P2xP3", "P1xP1xP2", "Q3xQ2"})
        CHECK(SplitVariety::parse(n).name() == n);
    CHECK(SplitVariety::parse("P2xQ3").dim() == 5);
    CHECK_THROWS_AS(SplitVariety::parse("P"), domain_error);
    CHECK_THROWS_AS(SplitVariety::parse("Q0"), domain_error);
    CHECK_THROWS_AS(SplitVariety::parse("X2"), domain_error);
    CHECK_THROWS_AS(SplitVariety::parse("P1xP1xP1xP1"), domain_error);  // depth cap
    CHECK_THROWS_AS(SplitVariety::parse(""), domain_error);
}

TEST_CASE("catalog filters") {
    auto all = catalog_varieties(6);
    bool has_q3 = false;
    for (const auto& v : all) has_q3 |= (v.name() == "Q3");
    CHECK(has_q3);
    for (const auto& v : catalog_varieties(8, 2))
        for (const auto& f : v.factors())
            if (f.kind == FactorKind::SplitQuadric) CHECK(f.param <= 2);
    const auto& q3 = data_for(SplitVariety::split_quadric(3));
    for (int p = 0; p <= 3; ++p) CHECK(q3.cells_of_dim_count(p) == 1);  // CH ranks (1,1,1,1)
}

TEST_CASE("degree structure constants on quadrics") {
    for (int d = 1; d <= 8; ++d) {
        SplitVariety q = SplitVariety::split_quadric(d);
        const auto& fd = data_for(q).factor_data()[0];
        CHECK(chow_degree(h_power_class(q, d)) == 2);       // deg(h^d) = 2
        CHECK(chow_degree(chow_cell(q, fd.lcell(0))) == 1);  // deg(l0) = 1
        if (fd.factor.middle() >= 1) {
            ChowClass h = chow_cell(q, fd.hcell(1));
            CHECK(h * chow_cell(q, fd.lcell(1)) == chow_cell(q, fd.lcell(0)));  // h.l1 = l0
        }
    }
    // deg(h^3) = 2 on Q3 via the recursion h^{m+1} = 2 l_m
    CHECK(chow_degree(h_power_class(SplitVariety::split_quadric(3), 3)) == 2);
    for (int n = 1; n <= 5; ++n) {
        SplitVariety p = SplitVariety::proj_space(n);
        ChowClass hn = chow_cell(p, data_for(p).factor_data()[0].hcell(n));
        CHECK(chow_degree(hn) == 1);
    }
}

TEST_CASE("poincare pairing is unimodular on the catalog") {
    for (const auto& v : catalog_varieties(6)) {
        const auto& d = data_for(v);
        const IntMat& m = d.chow_pairing();
        const IntMat& minv = d.chow_pairing_inv();  // throws if not integrally invertible
        IntMat prod = mat_mul(m, minv);
        for (int i = 0; i < d.ncells(); ++i)
            for (int j = 0; j < d.ncells(); ++j) CHECK(prod[i][j] == (i == j ? 1 : 0));
    }
}

TEST_CASE("K0 presentation facts") {
    SplitVariety p1 = SplitVariety::proj_space(1);
    // [O(1)] = 1 + [O_pt] on P1
    CHECK(k_line(p1, {1}) == k_unit(p1) + k_cell(p1, "h1"));
    // x^{n+1} = 0
    for (int n = 1; n <= 4; ++n) {
        SplitVariety p = SplitVariety::proj_space(n);
        CHECK(data_for(p).cmat(0).pow(n + 1).is_zero());
    }
    // (1 - [O(-1)]) [O_{L_1}] = [O_{L_0}] on quadrics
    for (int d = 2; d <= 6; ++d) {
        SplitVariety q = SplitVariety::split_quadric(d);
        const auto& dd = data_for(q);
        CHECK(k_apply(dd.cmat(0), k_cell(q, "l1")) == k_cell(q, "l0"));
        CHECK(dd.cmat(0).pow(d + 1).is_zero());
    }
}

TEST_CASE("euler characteristics against the Hilbert polynomial") {
    for (int n = 1; n <= 4; ++n) {
        SplitVariety p = SplitVariety::proj_space(n);
        const auto& d = data_for(p);
        CHECK(k_chi(k_unit(p)) == Coefficient(1));
        for (int a = -4; a <= 4; ++a)
            CHECK(k_chi(k_apply(d.factor_data()[0].line_op(a), k_unit(p))) ==
                  Coefficient(binom_chi(a, n)));
    }
    for (int e = 1; e <= 6; ++e) {
        SplitVariety q = SplitVariety::split_quadric(e);
        const auto& d = data_for(q);
        for (int a = -4; a <= 4; ++a)
            CHECK(k_chi(k_apply(d.factor_data()[0].line_op(a), k_unit(q))) ==
                  Coefficient(binom_chi(a, e + 1) - binom_chi(a - 2, e + 1)));
    }
}

TEST_CASE("tangent classes") {
    SplitVariety p1 = SplitVariety::proj_space(1);
    CHECK(tangent_class(p1) == split_line(p1, {1}, 2) - split_trivial(p1, 1));
    CHECK(split_rank(tangent_class(p1)) == 1);
    for (int d = 1; d <= 6; ++d)
        CHECK(split_rank(tangent_class(SplitVariety::split_quadric(d))) == d);
    SplitVariety pp = SplitVariety::parse("P1xP1");
    CHECK(tangent_class(pp) == split_line(pp, {1, 0}, 2) + split_line(pp, {0, 1}, 2) -
                                   split_trivial(pp, 2));
}

TEST_CASE("morphism tangent ranks") {
    CHECK(morphism_rel_dim(diagonal_morphism(SplitVariety::proj_space(2))) == -2);
    CHECK(split_rank(diagonal_morphism(SplitVariety::proj_space(2)).tangent) == -2);
    CatalogMorphism pr = projection_morphism(SplitVariety::parse("P2xP3"), 0, 1);
    CHECK(morphism_rel_dim(pr) == 3);
    CHECK(split_rank(pr.tangent) == 3);
    CatalogMorphism sub = subquadric_inclusion(3, 4);
    CHECK(split_rank(sub.tangent) == -1);
    CHECK(sub.tangent == split_line(sub.source, {1}, -1));  // N = O(1)
    for (const auto& f : catalog_morphisms(6)) CHECK(split_rank(f.tangent) == morphism_rel_dim(f));
}

TEST_CASE("pushforward examples") {
    // linear embedding P^j in Q_d sends [P^j] to l_j
    CatalogMorphism f = linear_embedding(2, SplitVariety::split_quadric(5));
    CHECK(chow_pushforward(f, chow_fundamental(f.source)) == chow_cell(f.target, "l2"));
    // chi of the structural pushforward
    SplitVariety p3 = SplitVariety::proj_space(3);
    CatalogMorphism s = structural_morphism(p3);
    CHECK(k_pushforward(s, k_unit(p3)).c[0] == Coefficient(1));
}

TEST_CASE("filtration lattices are nested with graded ranks equal to CH ranks") {
    for (const auto& v : catalog_varieties(5)) {
        const auto& d = data_for(v);
        bool clamped = false;
        CHECK(filtration_subgroup(v, -1).rank() == 0);
        CHECK(filtration_subgroup(v, d.dim()).rank() == static_cast<size_t>(d.ncells()));
        filtration_subgroup(v, d.dim() + 5, &clamped);
        CHECK(clamped);
        size_t prev = 0;
        for (int p = 0; p <= d.dim(); ++p) {
            IntegerLattice fp = filtration_subgroup(v, p);
            // nesting: every generator of F_{p-1} is in F_p
            IntegerLattice prev_lat = filtration_subgroup(v, p - 1);
            for (const auto& g : prev_lat.generators()) CHECK(fp.contains(g));
            // rank(F_p / F_{p-1}) = rank CH_p — the phi-isomorphism oracle
            CHECK(fp.rank() - prev == static_cast<size_t>(d.cells_of_dim_count(p)));
            prev = fp.rank();
        }
    }
}

TEST_CASE("phi sends cell cycles to structure-sheaf residues") {
    SplitVariety p2 = SplitVariety::proj_space(2);
    GrClass g = phi(chow_cell(p2, "h1", true), 1);
    CHECK(g.p == 1);
    CHECK(g.c[data_for(p2).cell_by_name("h1")] == 1);
    CHECK_THROWS_AS(phi(chow_cell(p2, "h1", true) + chow_cell(p2, "h2", true), 1), domain_error);
    CHECK_THROWS_AS(phi(chow_cell(p2, "h1"), 1), domain_error);  // integral input
}
