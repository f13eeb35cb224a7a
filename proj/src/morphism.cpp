#include "ckops/morphism.hpp"

namespace ck {

namespace {

SplitVariety point_variety() { return SplitVariety::proj_space(0); }

void check_source(const CatalogMorphism& f, const SplitVariety& v) {
    if (f.source != v) throw domain_error("morphism: class does not live on the source");
}

void check_target(const CatalogMorphism& f, const SplitVariety& v) {
    if (f.target != v) throw domain_error("morphism: class does not live on the target");
}

}  // namespace

CatalogMorphism structural_morphism(const SplitVariety& x) {
    CatalogMorphism f;
    f.kind = MorphKind::Structural;
    f.source = x;
    f.target = point_variety();
    f.tangent = tangent_class(x);
    f.name = x.name() + "->pt";
    return f;
}

CatalogMorphism point_inclusion(const SplitVariety& x) {
    CatalogMorphism f;
    f.kind = MorphKind::PointInclusion;
    f.source = point_variety();
    f.target = x;
    f.tangent = split_trivial(f.source, -x.dim());
    f.name = "pt->" + x.name();
    return f;
}

CatalogMorphism diagonal_morphism(const SplitVariety& x) {
    if (x.nfactors() != 1)
        throw domain_error("diagonal_morphism: single-factor varieties only");
    CatalogMorphism f;
    f.kind = MorphKind::Diagonal;
    f.source = x;
    f.target = SplitVariety::product(x, x);
    f.tangent = -tangent_class(x);
    f.name = "diag:" + x.name();
    return f;
}

CatalogMorphism projection_morphism(const SplitVariety& x, size_t lo, size_t hi) {
    CatalogMorphism f;
    f.kind = MorphKind::Projection;
    f.source = x;
    f.target = x.slice(lo, hi);
    f.lo = lo;
    f.hi = hi;
    f.tangent =
        tangent_class(x) - split_pullback_to_product(tangent_class(f.target), x, lo);
    f.name = x.name() + "->" + f.target.name() + "@" + std::to_string(lo);
    return f;
}

CatalogMorphism linear_embedding(int j, const SplitVariety& target) {
    if (target.nfactors() != 1)
        throw domain_error("linear_embedding: single-factor targets only");
    const Factor& t = target.factors()[0];
    CatalogMorphism f;
    f.kind = MorphKind::LinearEmbedding;
    f.source = SplitVariety::proj_space(j);
    f.target = target;
    if (t.kind == FactorKind::ProjSpace) {
        if (j > t.param) throw domain_error("linear_embedding: source too large");
        f.tangent = split_line(f.source, {1}, j - t.param);
    } else {
        // a maximal or smaller linear subspace of a split quadric
        if (j > t.middle()) throw domain_error("linear_embedding: no linear subspace of that dimension");
        f.tangent = split_line(f.source, {1}, j - t.param - 1) + split_line(f.source, {2}, 1);
    }
    f.name = "P" + std::to_string(j) + "->" + target.name();
    return f;
}

CatalogMorphism subquadric_inclusion(int e, int d) {
    if (e < 1 || e >= d) throw domain_error("subquadric_inclusion: need 1 <= e < d");
    CatalogMorphism f;
    f.kind = MorphKind::Subquadric;
    f.source = SplitVariety::split_quadric(e);
    f.target = SplitVariety::split_quadric(d);
    f.tangent = split_line(f.source, {1}, e - d);
    f.name = "Q" + std::to_string(e) + "->Q" + std::to_string(d);
    return f;
}

bool morphism_is_proper_inclusion(const CatalogMorphism& f) {
    switch (f.kind) {
        case MorphKind::PointInclusion:
        case MorphKind::Diagonal:
        case MorphKind::LinearEmbedding:
        case MorphKind::Subquadric:
            return true;
        default:
            return false;
    }
}

// ---------------------------------------------------------------------------
// Chow pushforward

ChowClass chow_pushforward(const CatalogMorphism& f, const ChowClass& x) {
    check_source(f, x.v);
    const auto& ds = data_for(f.source);
    const auto& dt = data_for(f.target);
    ChowClass out = chow_zero(f.target, x.mod2);

    switch (f.kind) {
        case MorphKind::Structural:
            out.c[0] = x.c[ds.point_cell()];
            break;
        case MorphKind::PointInclusion:
            out.c[dt.point_cell()] = x.c[0];
            break;
        case MorphKind::Diagonal: {
            // [Diagonal] = sum_i b_i x b_i^dual, so push(x) = sum_i (x b_i) x b_i^dual
            const IntMat& pinv = data_for(f.source).chow_pairing_inv();
            const int n = ds.ncells();
            for (int i = 0; i < n; ++i) {
                ChowClass xi = x * chow_cell(f.source, i, x.mod2);
                ChowClass dual = chow_zero(f.source, x.mod2);
                for (int t = 0; t < n; ++t) dual.c[t] = pinv[t][i];
                if (x.mod2) dual = reduce_mod2(lift_integral(dual));
                out = out + chow_external(xi, dual, f.target);
            }
            break;
        }
        case MorphKind::Projection: {
            for (int idx = 0; idx < ds.ncells(); ++idx) {
                if (x.c[idx] == 0) continue;
                auto t = ds.unflatten(idx);
                bool pointlike = true;
                for (size_t g = 0; g < f.source.nfactors(); ++g) {
                    if (g >= f.lo && g < f.hi) continue;
                    if (t[g] != ds.factor_data()[g].point_cell) pointlike = false;
                }
                if (!pointlike) continue;
                std::vector<int> kept(t.begin() + f.lo, t.begin() + f.hi);
                out.c[dt.flatten(kept)] += x.c[idx];
            }
            break;
        }
        case MorphKind::LinearEmbedding: {
            const auto& ft = dt.factor_data()[0];
            for (int i = 0; i < ds.ncells(); ++i) {
                if (x.c[i] == 0) continue;
                int dim = ds.cell_dim(i);
                if (ft.factor.kind == FactorKind::ProjSpace)
                    out.c[ft.hcell(ft.factor.param - dim)] += x.c[i];
                else
                    out.c[ft.lcell(dim)] += x.c[i];
            }
            break;
        }
        case MorphKind::Subquadric: {
            const auto& fs = ds.factor_data()[0];
            const auto& ft = dt.factor_data()[0];
            const int d = ft.factor.param, e = fs.factor.param;
            for (int i = 0; i < ds.ncells(); ++i) {
                if (x.c[i] == 0) continue;
                const Cell& cell = fs.cells[i];
                if (cell.is_linear) {
                    out.c[ft.lcell(cell.dim)] += x.c[i];
                } else {
                    // [Q_{e-s}] inside Q_d is the (d-e+s)-fold hyperplane section
                    for (const auto& [idx, c] : ft.chow_h_power(d - e + cell.codim))
                        out.c[idx] += x.c[i] * c;
                }
            }
            break;
        }
    }
    if (out.mod2) out = reduce_mod2(lift_integral(out));
    return out;
}

// ---------------------------------------------------------------------------
// Chow pullback

ChowClass chow_pullback(const CatalogMorphism& f, const ChowClass& y) {
    check_target(f, y.v);
    const auto& ds = data_for(f.source);
    const auto& dt = data_for(f.target);
    ChowClass out = chow_zero(f.source, y.mod2);

    switch (f.kind) {
        case MorphKind::Structural:
            out.c[ds.fundamental_cell()] = y.c[0];
            break;
        case MorphKind::PointInclusion:
            out.c[0] = y.c[dt.fundamental_cell()];
            break;
        case MorphKind::Diagonal: {
            const int n = ds.ncells();
            for (int s = 0; s < n; ++s)
                for (int t = 0; t < n; ++t) {
                    const Int& c = y.c[s * n + t];
                    if (c == 0) continue;
                    ChowClass prod =
                        chow_cell(f.source, s, y.mod2) * chow_cell(f.source, t, y.mod2);
                    out = out + chow_scale(c, prod);
                }
            break;
        }
        case MorphKind::Projection: {
            for (int idx = 0; idx < dt.ncells(); ++idx) {
                if (y.c[idx] == 0) continue;
                auto kept = dt.unflatten(idx);
                std::vector<int> full(f.source.nfactors(), 0);
                for (size_t g = f.lo; g < f.hi; ++g) full[g] = kept[g - f.lo];
                out.c[ds.flatten(full)] += y.c[idx];
            }
            break;
        }
        case MorphKind::LinearEmbedding: {
            const auto& fs = ds.factor_data()[0];
            const auto& ft = dt.factor_data()[0];
            const int j = fs.factor.param;
            for (int i = 0; i < dt.ncells(); ++i) {
                if (y.c[i] == 0) continue;
                const Cell& cell = ft.cells[i];
                if (!cell.is_linear || ft.factor.kind == FactorKind::ProjSpace) {
                    // restriction of an ambient h-power
                    if (cell.codim <= j) out.c[fs.hcell(cell.codim)] += y.c[i];
                } else {
                    // linear cell against the embedded linear subspace: a
                    // zero-cycle of degree given by the intersection pairing
                    if (cell.dim + j != ft.factor.param) continue;
                    ChowClass lt = chow_cell(f.target, i);
                    ChowClass lj = chow_cell(f.target, ft.lcell(j));
                    out.c[fs.point_cell] += y.c[i] * chow_degree(lt * lj);
                }
            }
            break;
        }
        case MorphKind::Subquadric: {
            const auto& fs = ds.factor_data()[0];
            const auto& ft = dt.factor_data()[0];
            const int codim = ft.factor.param - fs.factor.param;
            for (int i = 0; i < dt.ncells(); ++i) {
                if (y.c[i] == 0) continue;
                const Cell& cell = ft.cells[i];
                if (cell.is_linear) {
                    if (cell.dim >= codim) out.c[fs.lcell(cell.dim - codim)] += y.c[i];
                } else {
                    for (const auto& [idx, c] : fs.chow_h_power(cell.codim))
                        out.c[idx] += y.c[i] * c;
                }
            }
            break;
        }
    }
    if (out.mod2) out = reduce_mod2(lift_integral(out));
    return out;
}

// ---------------------------------------------------------------------------
// K0 pushforward

KClass k_pushforward(const CatalogMorphism& f, const KClass& x) {
    check_source(f, x.v);
    const auto& ds = data_for(f.source);
    const auto& dt = data_for(f.target);
    KClass out = k_zero(f.target);

    switch (f.kind) {
        case MorphKind::Structural:
            out.c[0] = k_chi(x);
            break;
        case MorphKind::PointInclusion:
            out.c[dt.point_cell()] = x.c[0];
            break;
        case MorphKind::Diagonal: {
            if (!ds.k_ring_available())
                throw unsupported_domain(
                    "diagonal K0 pushforward needs the ring structure; projective-space factors only");
            const IntMat& pinv = ds.k_pairing_inv();
            const int n = ds.ncells();
            for (int i = 0; i < n; ++i) {
                KClass xi = k_mul(x, k_cell(f.source, i));
                if (k_is_zero(xi)) continue;
                KClass dual = k_zero(f.source);
                for (int t = 0; t < n; ++t) dual.c[t] = Coefficient(pinv[t][i]);
                out = out + k_external(xi, dual, f.target);
            }
            break;
        }
        case MorphKind::Projection: {
            // every cell has chi = 1, so dropped factors integrate to 1
            for (int idx = 0; idx < ds.ncells(); ++idx) {
                if (x.c[idx].is_zero()) continue;
                auto t = ds.unflatten(idx);
                std::vector<int> kept(t.begin() + f.lo, t.begin() + f.hi);
                out.c[dt.flatten(kept)] += x.c[idx];
            }
            break;
        }
        case MorphKind::LinearEmbedding: {
            const auto& ft = dt.factor_data()[0];
            for (int i = 0; i < ds.ncells(); ++i) {
                if (x.c[i].is_zero()) continue;
                int dim = ds.cell_dim(i);
                if (ft.factor.kind == FactorKind::ProjSpace)
                    out.c[ft.hcell(ft.factor.param - dim)] += x.c[i];
                else
                    out.c[ft.lcell(dim)] += x.c[i];
            }
            break;
        }
        case MorphKind::Subquadric: {
            const auto& fs = ds.factor_data()[0];
            const auto& ft = dt.factor_data()[0];
            const int codim = ft.factor.param - fs.factor.param;
            for (int i = 0; i < ds.ncells(); ++i) {
                if (x.c[i].is_zero()) continue;
                const Cell& cell = fs.cells[i];
                if (cell.is_linear) {
                    out.c[ft.lcell(cell.dim)] += x.c[i];
                } else {
                    // structure sheaf of an iterated hyperplane section
                    auto img = ft.cmat.pow(codim + cell.codim).apply(k_unit(f.target).c);
                    for (int t = 0; t < dt.ncells(); ++t) out.c[t] += x.c[i] * img[t];
                }
            }
            break;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// K0 pullback

KClass k_pullback(const CatalogMorphism& f, const KClass& y) {
    check_target(f, y.v);
    const auto& ds = data_for(f.source);
    const auto& dt = data_for(f.target);
    KClass out = k_zero(f.source);

    switch (f.kind) {
        case MorphKind::Structural:
            out = k_scale(y.c[0], k_unit(f.source));
            break;
        case MorphKind::PointInclusion:
            out.c[0] = k_rank(y);
            break;
        case MorphKind::Diagonal: {
            if (!ds.k_ring_available())
                throw unsupported_domain(
                    "diagonal K0 pullback needs the ring structure; projective-space factors only");
            const int n = ds.ncells();
            for (int s = 0; s < n; ++s)
                for (int t = 0; t < n; ++t) {
                    const Coefficient& c = y.c[s * n + t];
                    if (c.is_zero()) continue;
                    out = out + k_scale(c, k_mul(k_cell(f.source, s), k_cell(f.source, t)));
                }
            break;
        }
        case MorphKind::Projection: {
            for (int idx = 0; idx < dt.ncells(); ++idx) {
                if (y.c[idx].is_zero()) continue;
                auto kept = dt.unflatten(idx);
                std::vector<int> full(f.source.nfactors(), 0);
                for (size_t g = f.lo; g < f.hi; ++g) full[g] = kept[g - f.lo];
                out.c[ds.flatten(full)] += y.c[idx];
            }
            break;
        }
        case MorphKind::LinearEmbedding: {
            const auto& fs = ds.factor_data()[0];
            const auto& ft = dt.factor_data()[0];
            const int j = fs.factor.param;
            for (int i = 0; i < dt.ncells(); ++i) {
                if (y.c[i].is_zero()) continue;
                const Cell& cell = ft.cells[i];
                if (!cell.is_linear || ft.factor.kind == FactorKind::ProjSpace) {
                    // c^i [O] restricts to c^i [O]
                    auto img = fs.cmat.pow(cell.codim).apply(k_unit(f.source).c);
                    for (int t = 0; t < ds.ncells(); ++t) out.c[t] += y.c[i] * img[t];
                } else {
                    // generic linear cell meets the embedded subspace in a
                    // reduced point exactly when the intersection number is 1
                    if (cell.dim + j != ft.factor.param) continue;
                    ChowClass lt = chow_cell(f.target, i);
                    ChowClass lj = chow_cell(f.target, ft.lcell(j));
                    out.c[fs.point_cell] += y.c[i] * Coefficient(chow_degree(lt * lj));
                }
            }
            break;
        }
        case MorphKind::Subquadric: {
            const auto& fs = ds.factor_data()[0];
            const auto& ft = dt.factor_data()[0];
            const int codim = ft.factor.param - fs.factor.param;
            for (int i = 0; i < dt.ncells(); ++i) {
                if (y.c[i].is_zero()) continue;
                const Cell& cell = ft.cells[i];
                if (cell.is_linear) {
                    if (cell.dim >= codim) out.c[fs.lcell(cell.dim - codim)] += y.c[i];
                } else {
                    auto img = fs.cmat.pow(cell.codim).apply(k_unit(f.source).c);
                    for (int t = 0; t < ds.ncells(); ++t) out.c[t] += y.c[i] * img[t];
                }
            }
            break;
        }
    }
    return out;
}

SplitKClass split_pullback(const CatalogMorphism& f, const SplitKClass& y) {
    check_target(f, y.v);
    switch (f.kind) {
        case MorphKind::Structural:
            return split_trivial(f.source, split_rank(y));
        case MorphKind::PointInclusion:
            return split_trivial(f.source, split_rank(y));
        case MorphKind::Diagonal: {
            SplitKClass r = split_zero(f.source);
            for (const auto& [e, m] : y.terms) r = r + split_line(f.source, {e[0] + e[1]}, m);
            return r;
        }
        case MorphKind::Projection: {
            SplitKClass r = split_zero(f.source);
            for (const auto& [e, m] : y.terms) {
                std::vector<int> full(f.source.nfactors(), 0);
                for (size_t g = f.lo; g < f.hi; ++g) full[g] = e[g - f.lo];
                r = r + split_line(f.source, full, m);
            }
            return r;
        }
        case MorphKind::LinearEmbedding:
        case MorphKind::Subquadric: {
            // O(a) restricts to O(a)
            SplitKClass r = split_zero(f.source);
            for (const auto& [e, m] : y.terms) r = r + split_line(f.source, e, m);
            return r;
        }
    }
    throw domain_error("split_pullback: unreachable");
}

std::vector<CatalogMorphism> catalog_morphisms(int max_dim, int max_quadric) {
    std::vector<CatalogMorphism> out;
    for (const auto& v : catalog_varieties(max_dim, max_quadric)) {
        out.push_back(structural_morphism(v));
        out.push_back(point_inclusion(v));
        if (v.nfactors() == 1 && v.dim() <= 4) out.push_back(diagonal_morphism(v));
        if (v.nfactors() > 1) {
            out.push_back(projection_morphism(v, 0, 1));
            out.push_back(projection_morphism(v, 1, v.nfactors()));
        }
        if (v.nfactors() == 1) {
            const Factor& fac = v.factors()[0];
            if (fac.kind == FactorKind::ProjSpace) {
                for (int j = 0; j < fac.param; ++j) out.push_back(linear_embedding(j, v));
            } else {
                for (int j = 0; j <= fac.middle(); ++j) out.push_back(linear_embedding(j, v));
                for (int e = 1; e < fac.param; ++e)
                    out.push_back(subquadric_inclusion(e, fac.param));
            }
        }
    }
    return out;
}

}  // namespace ck
