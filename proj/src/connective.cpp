#include "ckops/connective.hpp"

#include <cstdlib>
#include <random>

namespace ck {

namespace {

Coefficient k_power(long k, long e) {
    if (e >= 0) {
        Int v(1);
        for (long i = 0; i < e; ++i) v *= Int(k);
        return Coefficient(v);
    }
    if (k == 1) return Coefficient(1);
    if (k == -1) return Coefficient(((-e) & 1) ? -1 : 1);
    return Coefficient(1, static_cast<unsigned>(-e), k);
}

Int coord_residue_mod2(const Coefficient& c, long scale) {
    if (c.exp() > 0 && scale % 2 == 0)
        throw domain_error("gr residue: 2 is invertible in the coefficient ring");
    Int r = c.num() % 2;
    if (r < 0) r += 2;
    return r;
}

}  // namespace

IntegerLattice filtration_subgroup(const SplitVariety& v, int p, bool* clamped) {
    const auto& d = data_for(v);
    int q = p;
    if (q < -1) q = -1;
    if (q > d.dim()) q = d.dim();
    if (clamped) *clamped = (q != p);
    IntMat gens;
    for (int i = 0; i < d.ncells(); ++i) {
        if (d.cell_dim(i) > q) continue;
        IntVec e(d.ncells(), 0);
        e[i] = 1;
        gens.push_back(std::move(e));
    }
    return IntegerLattice(d.ncells(), std::move(gens));
}

FiltrationElement filtration_element(const KClass& x, int level) {
    const auto& d = data_for(x.v);
    // common localization and denominator-clearing exponent
    long scale = 1;
    unsigned emax = 0;
    for (const auto& c : x.c) {
        if (c.exp() == 0) continue;
        long ck = c.localized_at();
        if (scale == 1)
            scale = ck;
        else if (scale != ck)
            throw domain_error("filtration_element: mixed localizations");
        emax = std::max(emax, c.exp());
    }
    IntVec t(d.ncells());
    for (int i = 0; i < d.ncells(); ++i) {
        Int v = x.c[i].num();
        for (unsigned e = x.c[i].exp(); e < emax; ++e) v *= Int(scale);
        t[i] = v;
    }
    int minimal = -1;
    for (int i = 0; i < d.ncells(); ++i)
        if (t[i] != 0) minimal = std::max(minimal, d.cell_dim(i));
    // the zero class (minimal = -1) lives in every F_p, however negative p is
    if (minimal > std::max(level, -1))
        throw certificate_error("filtration_element: class on " + x.v.name() +
                                " is not in F_" + std::to_string(level) +
                                " (minimal level " + std::to_string(minimal) + ")");
    auto coords = filtration_subgroup(x.v, std::min(level, d.dim())).solve(t);
    if (!coords)
        throw certificate_error("filtration_element: lattice membership failed unexpectedly");
    FiltrationElement fe;
    fe.underlying = x;
    fe.level = level;
    fe.minimal_level = minimal;
    fe.certificate = *coords;
    fe.cert_exp = emax;
    fe.cert_scale = scale;
    return fe;
}

bool filtration_equal(const FiltrationElement& a, const FiltrationElement& b) {
    return a.level == b.level && a.underlying == b.underlying;
}

FiltrationElement beta(const FiltrationElement& x) {
    return filtration_element(x.underlying, x.level + 1);
}

FiltrationElement tau(long k, const FiltrationElement& x) {
    const int p = x.level;
    KClass y = homological_adams(k, x.underlying) - k_scale(k_power(k, -p), x.underlying);
    try {
        return filtration_element(y, p - 1);
    } catch (const certificate_error& e) {
        throw model_falsification("tau: psi_k - k^{-p} failed to drop filtration on " +
                                  x.underlying.v.name() + " at level " + std::to_string(p) +
                                  ": " + e.what());
    }
}

FiltrationElement pi_class(long k, const SplitKClass& y, const FiltrationElement& x) {
    if (y.v != x.underlying.v) throw domain_error("pi_class: variety mismatch");
    const int p = x.level;
    KClass val =
        k_apply(bott_theta_op(k, y), x.underlying) - k_scale(bott_theta_rank(k, y), x.underlying);
    try {
        return filtration_element(val, p - 1);
    } catch (const certificate_error& e) {
        throw model_falsification("pi_class: theta^k(y) - k^{rank y} failed to drop filtration on " +
                                  x.underlying.v.name() + ": " + e.what());
    }
}

bool operator==(const GrClass& a, const GrClass& b) {
    if (a.v != b.v || a.p != b.p) return false;
    return a.c == b.c;
}

bool gr_is_zero(const GrClass& a) {
    for (const auto& x : a.c)
        if (x != 0) return false;
    return true;
}

GrClass gr_residue(const FiltrationElement& x) {
    const auto& d = data_for(x.underlying.v);
    GrClass g{x.underlying.v, x.level, std::vector<Int>(d.ncells(), 0)};
    for (int i = 0; i < d.ncells(); ++i)
        if (d.cell_dim(i) == x.level)
            g.c[i] = coord_residue_mod2(x.underlying.c[i], x.cert_scale);
    return g;
}

GrClass phi(const ChowClass& x, int p) {
    if (!x.mod2) throw domain_error("phi: mod-2 input expected");
    if (!chow_is_homogeneous(x, p)) throw domain_error("phi: input not pure of dimension " + std::to_string(p));
    return GrClass{x.v, p, x.c};
}

GrClass gr_steenrod(const GrClass& x) {
    const auto& d = data_for(x.v);
    KClass lift = k_zero(x.v);
    for (int i = 0; i < d.ncells(); ++i)
        if (x.c[i] != 0) lift.c[i] = Coefficient(x.c[i]);
    FiltrationElement fe = filtration_element(lift, x.p);
    return gr_residue(tau(-1, fe));
}

unsigned long steenrod_seed() {
    if (const char* s = std::getenv("CK_STEENROD_SEED")) return std::strtoul(s, nullptr, 10);
    return 0xC0FFEEul;
}

bool gr_steenrod_lift_independent(const GrClass& x, unsigned trials, unsigned long seed) {
    const auto& d = data_for(x.v);
    GrClass base = gr_steenrod(x);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coeff(-2, 2);
    for (unsigned t = 0; t < trials; ++t) {
        KClass lift = k_zero(x.v);
        for (int i = 0; i < d.ncells(); ++i) {
            // lifts differ by 2 F_p + F_{p-1}
            if (d.cell_dim(i) == x.p)
                lift.c[i] = Coefficient(x.c[i] + 2 * Int(coeff(rng)));
            else if (d.cell_dim(i) < x.p)
                lift.c[i] = Coefficient(coeff(rng));
        }
        FiltrationElement fe = filtration_element(lift, x.p);
        if (!(gr_residue(tau(-1, fe)) == base)) return false;
    }
    return true;
}

std::vector<DescentCheck> descent_compare(const SplitVariety& v) {
    const auto& d = data_for(v);
    std::vector<DescentCheck> out;
    for (int i = 0; i < d.ncells(); ++i) {
        const int p = d.cell_dim(i);
        ChowClass x = chow_cell(v, i, true);
        GrClass lhs = gr_steenrod(phi(x, p));
        GrClass rhs = phi(sq1(x), p - 1);
        out.push_back({p, i, lhs == rhs});
    }
    return out;
}

}  // namespace ck
