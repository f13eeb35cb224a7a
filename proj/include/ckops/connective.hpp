#pragma once

#include "ckops/adams.hpp"
#include "ckops/steenrod.hpp"

namespace ck {

struct certificate_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// F_p: sublattice of K0 spanned by structure sheaves of cells of dim <= p.
// Out-of-range p clamps to [-1, dim]; *clamped reports when it did.
IntegerLattice filtration_subgroup(const SplitVariety& v, int p, bool* clamped = nullptr);

// Element of F_p together with its membership certificate.  The certificate
// expresses scale^cert_exp * underlying over the F_p cell generators, where
// scale is the localized integer of the coordinates (1 when integral).
struct FiltrationElement {
    KClass underlying;
    int level;          // declared p
    int minimal_level;  // smallest q with underlying in F_q
    IntVec certificate;
    unsigned cert_exp = 0;
    long cert_scale = 1;
};

FiltrationElement filtration_element(const KClass& x, int level);
bool filtration_equal(const FiltrationElement& a, const FiltrationElement& b);

// beta: F_{p-1} -> F_p, the lattice inclusion.
FiltrationElement beta(const FiltrationElement& x);

// tau_k: F_p -> F_{p-1}, x -> psi_k(x) - k^{-p} x.  The filtration drop is a
// certified model assumption; failure raises model_falsification.
FiltrationElement tau(long k, const FiltrationElement& x);

// pi^k(y): F_p -> F_{p-1}, x -> (theta^k(y) - k^{rank y}) x.
FiltrationElement pi_class(long k, const SplitKClass& y, const FiltrationElement& x);

// Class in Z/2 (x) gr_p: mod-2 coordinates supported on dimension-p cells.
struct GrClass {
    SplitVariety v;
    int p;
    std::vector<Int> c;
};

bool operator==(const GrClass& a, const GrClass& b);
inline bool operator!=(const GrClass& a, const GrClass& b) { return !(a == b); }
bool gr_is_zero(const GrClass& a);

// Residue of an F_p element in Z/2 (x) gr_p.
GrClass gr_residue(const FiltrationElement& x);

// phi: Ch_p -> Z/2 (x) gr_p, cell cycle to structure-sheaf residue.
GrClass phi(const ChowClass& x, int p);

// Induced first Steenrod square on Z/2 (x) gr: lift, apply tau_{-1}, project.
GrClass gr_steenrod(const GrClass& x);

// Well-definedness probe: recompute gr_steenrod through `trials` randomized
// lifts (seeded); returns false if any lift disagrees.
bool gr_steenrod_lift_independent(const GrClass& x, unsigned trials, unsigned long seed);

// Lift-reproducibility seed: CK_STEENROD_SEED when set, else 0xC0FFEE.
unsigned long steenrod_seed();

struct DescentCheck {
    int p;
    int cell;
    bool pass;
};

// For each p and each basis class of Ch_p: gr_steenrod(phi(x)) == phi(sq1(x)).
std::vector<DescentCheck> descent_compare(const SplitVariety& v);

}  // namespace ck
