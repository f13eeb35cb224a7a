#pragma once

#include "ckops/variety.hpp"

#include <map>

namespace ck {

// Cycle class in the cell basis.  mod2 classes keep coordinates in {0,1}.
struct ChowClass {
    SplitVariety v;
    bool mod2 = false;
    std::vector<Int> c;
};

ChowClass chow_zero(const SplitVariety& v, bool mod2 = false);
ChowClass chow_cell(const SplitVariety& v, int idx, bool mod2 = false);
ChowClass chow_cell(const SplitVariety& v, const std::string& name, bool mod2 = false);
ChowClass chow_fundamental(const SplitVariety& v, bool mod2 = false);
// h of one factor pulled back to the product (codim 1).
ChowClass chow_hyperplane(const SplitVariety& v, size_t factor, bool mod2 = false);

ChowClass operator+(const ChowClass& a, const ChowClass& b);
ChowClass operator-(const ChowClass& a, const ChowClass& b);
ChowClass operator-(const ChowClass& a);
ChowClass operator*(const ChowClass& a, const ChowClass& b);
ChowClass chow_scale(const Int& n, const ChowClass& a);
bool operator==(const ChowClass& a, const ChowClass& b);
inline bool operator!=(const ChowClass& a, const ChowClass& b) { return !(a == b); }
bool chow_is_zero(const ChowClass& a);

Int chow_degree(const ChowClass& a);  // coefficient on the point cell
ChowClass chow_graded_part(const ChowClass& a, int dim);
bool chow_is_homogeneous(const ChowClass& a, int dim);
ChowClass reduce_mod2(const ChowClass& a);
ChowClass lift_integral(const ChowClass& a);  // coordinates 0/1, tautological lift
ChowClass chow_external(const ChowClass& a, const ChowClass& b, const SplitVariety& prod);
// Inverse of 1 + (positive-codimension part); needs unit leading term.
ChowClass chow_invert_unipotent(const ChowClass& a);

std::string chow_str(const ChowClass& a);

// K0 class with coordinates in Z[1/k] over the cell basis.
struct KClass {
    SplitVariety v;
    std::vector<Coefficient> c;
};

KClass k_zero(const SplitVariety& v);
KClass k_unit(const SplitVariety& v);
KClass k_cell(const SplitVariety& v, int idx);
KClass k_cell(const SplitVariety& v, const std::string& name);
KClass k_line(const SplitVariety& v, const std::vector<int>& exps);  // [O(a_1,...,a_r)]

KClass operator+(const KClass& a, const KClass& b);
KClass operator-(const KClass& a, const KClass& b);
KClass operator-(const KClass& a);
KClass k_scale(const Coefficient& c, const KClass& a);
bool operator==(const KClass& a, const KClass& b);
inline bool operator!=(const KClass& a, const KClass& b) { return !(a == b); }
bool k_is_zero(const KClass& a);

Coefficient k_chi(const KClass& a);   // pushforward to the point
Coefficient k_rank(const KClass& a);  // restriction to a rational point
KClass k_external(const KClass& a, const KClass& b, const SplitVariety& prod);
// Ring multiplication; products of projective spaces only.
KClass k_mul(const KClass& a, const KClass& b);
KClass k_apply(const QMat& op, const KClass& a);

std::string k_str(const KClass& a);

// Virtual sum of line bundles: multiset of multi-exponents with integer
// multiplicities.  This is the domain on which theta and the lambda-ring
// formulas act by explicit polynomials.
struct SplitKClass {
    SplitVariety v;
    std::map<std::vector<int>, Int> terms;
};

SplitKClass split_zero(const SplitVariety& v);
SplitKClass split_line(const SplitVariety& v, const std::vector<int>& exps, Int mult = 1);
SplitKClass split_trivial(const SplitVariety& v, Int mult);  // mult * [O]

SplitKClass operator+(const SplitKClass& a, const SplitKClass& b);
SplitKClass operator-(const SplitKClass& a, const SplitKClass& b);
SplitKClass operator-(const SplitKClass& a);
SplitKClass split_scale(const Int& n, const SplitKClass& a);
bool operator==(const SplitKClass& a, const SplitKClass& b);
inline bool operator!=(const SplitKClass& a, const SplitKClass& b) { return !(a == b); }

Int split_rank(const SplitKClass& a);
KClass split_embed(const SplitKClass& a);  // as a K0 class
SplitKClass split_dual(const SplitKClass& a);
// Pullback along a projection keeping factors [lo, hi): reindex exponents.
SplitKClass split_pullback_to_product(const SplitKClass& a, const SplitVariety& prod, size_t lo);

// Tangent bundle in K0 as a split class.
SplitKClass tangent_class(const SplitVariety& v);

std::string split_str(const SplitKClass& a);

}  // namespace ck
