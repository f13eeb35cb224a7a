#pragma once

#include "ckops/classes.hpp"

namespace ck {

enum class MorphKind {
    Structural,      // X -> pt
    PointInclusion,  // pt -> X (a cell point)
    Diagonal,        // X -> X x X, single-factor X
    Projection,      // product -> sub-product of factors [lo, hi)
    LinearEmbedding, // P^j -> P^n, or P^j -> Q_d with j <= floor(d/2)
    Subquadric,      // Q_e -> Q_d, e < d, as an iterated hyperplane section
};

struct CatalogMorphism {
    MorphKind kind;
    SplitVariety source, target;
    size_t lo = 0, hi = 0;  // projection factor range
    SplitKClass tangent;    // T_f = T_source - f^* T_target in K0(source)
    std::string name;
};

CatalogMorphism structural_morphism(const SplitVariety& x);
CatalogMorphism point_inclusion(const SplitVariety& x);
CatalogMorphism diagonal_morphism(const SplitVariety& x);
CatalogMorphism projection_morphism(const SplitVariety& x, size_t lo, size_t hi);
CatalogMorphism linear_embedding(int j, const SplitVariety& target);
CatalogMorphism subquadric_inclusion(int e, int d);

inline int morphism_rel_dim(const CatalogMorphism& f) {
    return f.source.dim() - f.target.dim();
}
bool morphism_is_proper_inclusion(const CatalogMorphism& f);

ChowClass chow_pushforward(const CatalogMorphism& f, const ChowClass& x);
ChowClass chow_pullback(const CatalogMorphism& f, const ChowClass& y);
KClass k_pushforward(const CatalogMorphism& f, const KClass& x);
KClass k_pullback(const CatalogMorphism& f, const KClass& y);

// Pullback of a split class along f (line bundles restrict to line bundles).
SplitKClass split_pullback(const CatalogMorphism& f, const SplitKClass& y);

std::vector<CatalogMorphism> catalog_morphisms(int max_dim, int max_quadric = 8);

}  // namespace ck
