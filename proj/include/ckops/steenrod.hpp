#pragma once

#include "ckops/adams.hpp"
#include "ckops/morphism.hpp"

namespace ck {

struct odd_degree_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Homological first Steenrod square on mod-2 classes; lowers dimension by 1.
ChowClass sq1(const ChowClass& x);
// Cohomological companion Sq^1 = Sq_1 + c_1(T_X) . -
ChowClass sq1_coh(const ChowClass& x);
// First-Chern action of O(a_1,...,a_r): multiplication by sum a_f h_f.
ChowClass c1_action(const std::vector<int>& exps, const ChowClass& x);

// Cycle on X x Y of pure dimension dim X, acting CH(X) -> CH(Y).
struct Correspondence {
    SplitVariety xy;     // the product X x Y
    size_t split;        // X = factors [0, split), Y = factors [split, n)
    ChowClass carrier;
};

Correspondence make_correspondence(const SplitVariety& xy, size_t split, const ChowClass& carrier);
SplitVariety corr_source(const Correspondence& r);
SplitVariety corr_target(const Correspondence& r);

// The m with q_*(r) = m [X], q the projection to X.
Int multiplicity(const Correspondence& r);
// r_*(x) = p_*(q^*(x) . r).
ChowClass corr_pushforward(const Correspondence& r, const ChowClass& x);

// (deg(x)/2) mod 2 on even-degree integral zero-cycles.
Int half_degree(const ChowClass& x);

// Sq_1 evaluated on the canonical integral lift, using the integral
// representatives of the basis table.  Only its mod-2 reduction is
// canonical; the integral output feeds half_degree.
ChowClass sq1_integral_rep(const ChowClass& x);

// Decision procedure for the 2-torsion criterion on quadrics: given a mod-2
// correspondence on Q_d x Q_d and a user-asserted closure-vanishing flag,
// report whether the criterion certifies a nonzero 2-torsion class in CH_1.
struct TorsionVerdict {
    Int mult;                 // multiplicity of r, mod 2
    bool applicable = false;  // multiplicity 1 and flag asserted
    bool witness_defined = false;
    Int witness = 0;          // (deg/2) . Sq_1 . r_* (h^{d-1}), mod 2
    std::string message;
};

TorsionVerdict torsion_decision(int d, const Correspondence& r, bool closure_asserted);

}  // namespace ck
