#pragma once

#include "ckops/exact.hpp"
#include "ckops/qmat.hpp"
#include "ckops/snf.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace ck {

enum class FactorKind { ProjSpace, SplitQuadric };

// One irreducible catalog factor: P^n or a split quadric Q_d.
struct Factor {
    FactorKind kind;
    int param;  // n resp. d

    int dim() const { return param; }
    int middle() const { return param / 2; }  // floor(d/2), quadrics only
    bool operator==(const Factor& o) const { return kind == o.kind && param == o.param; }
};

// Catalog descriptor: projective space, split quadric, or a product of at
// most three such factors.
class SplitVariety {
  public:
    static SplitVariety proj_space(int n);
    static SplitVariety split_quadric(int d);
    static SplitVariety product(const SplitVariety& a, const SplitVariety& b);

    const std::vector<Factor>& factors() const { return factors_; }
    size_t nfactors() const { return factors_.size(); }
    int dim() const;
    std::string name() const;  // "P3", "Q4", "P1xQ2"
    bool operator==(const SplitVariety& o) const { return factors_ == o.factors_; }
    bool operator!=(const SplitVariety& o) const { return !(*this == o); }

    // Inverse of name(); throws domain_error on anything unrecognized.
    static SplitVariety parse(const std::string& s);

    // Sub-product spanning factors [lo, hi).
    SplitVariety slice(size_t lo, size_t hi) const;

  private:
    std::vector<Factor> factors_;
};

// Basis cell of one factor (cell closures: h-powers and linear subspaces).
struct Cell {
    std::string name;
    int dim;
    int codim;
    int serre_twist;  // psi_{-1}[O_Z] = (-1)^codim [O_Z(serre_twist)]
    bool is_linear;   // l_j type (j = dim); otherwise h-power type (i = codim)
};

using SparseVec = std::vector<std::pair<int, Int>>;  // (cell index, coefficient)

// Presentation data of one factor, built once.
struct FactorData {
    Factor factor;
    std::vector<Cell> cells;
    int point_cell;  // the dimension-0 cell
    int unit_cell;   // [O_X] resp. the fundamental class
    QMat cmat;       // action of c = 1 - [O(-1)] on the K0 cell basis

    int ncells() const { return static_cast<int>(cells.size()); }
    int hcell(int i) const;  // index of the h^i cell
    int lcell(int j) const;  // index of the l_j cell

    SparseVec chow_mult(int i, int j) const;
    SparseVec chow_h_power(int s) const;  // class of h^s as a cycle
    SparseVec sq1_cell(int i) const;      // integral coefficients, meaningful mod 2
    QMat line_op(int a) const;            // K0 action of [O(a)]

    mutable std::map<int, QMat> line_cache;
};

// Full variety: tensor of factor data plus cached whole-variety structures.
class VarietyData {
  public:
    explicit VarietyData(SplitVariety v);

    const SplitVariety& variety() const { return v_; }
    const std::vector<FactorData>& factor_data() const { return fd_; }
    int ncells() const { return ncells_; }
    int dim() const { return v_.dim(); }

    int cell_dim(int idx) const { return cell_dim_[idx]; }
    int cell_codim(int idx) const { return dim() - cell_dim_[idx]; }
    const std::string& cell_name(int idx) const { return cell_names_[idx]; }
    int cell_by_name(const std::string& name) const;  // -1 if absent

    std::vector<int> unflatten(int idx) const;
    int flatten(const std::vector<int>& per_factor) const;
    int fundamental_cell() const;
    int point_cell() const;

    // Chow structure constants of the product basis.
    SparseVec chow_mult(int i, int j) const;
    SparseVec sq1_cell(int i) const;

    // K0 action of the line bundle O(a_1,...,a_r).
    QMat line_op(const std::vector<int>& exps) const;
    QMat cmat(size_t f) const;  // c-operator of factor f tensored with identities
    const QMat& psi_minus1() const;

    // Poincare pairing deg(b_i b_j) and its integer inverse (unimodular).
    const IntMat& chow_pairing() const;
    const IntMat& chow_pairing_inv() const;

    // chi-pairing on K0 and its inverse; projective-space factors only.
    const IntMat& k_pairing_inv() const;
    bool k_ring_available() const;

    // Generators of the subring of K0 generated by line bundles, as integer
    // column vectors, with the multi-exponents that produced them.
    const IntMat& split_subring_gens() const;
    const std::vector<std::vector<int>>& split_subring_exps() const;
    const IntegerLattice& split_subring_lattice() const;

    int cells_of_dim_count(int d) const;

  private:
    void build_pairings() const;

    SplitVariety v_;
    std::vector<FactorData> fd_;
    int ncells_;
    std::vector<int> strides_;
    std::vector<int> cell_dim_;
    std::vector<std::string> cell_names_;

    mutable QMat psi_minus1_;
    mutable bool psi_built_ = false;
    mutable IntMat pairing_, pairing_inv_, k_pairing_inv_;
    mutable bool pairings_built_ = false, k_pairing_built_ = false;
    mutable IntMat subring_gens_;
    mutable std::vector<std::vector<int>> subring_exps_;
    mutable std::unique_ptr<IntegerLattice> subring_lattice_;
    mutable bool subring_built_ = false;
};

// Cached per-variety data (presentations are immutable once built).
const VarietyData& data_for(const SplitVariety& v);

std::vector<SplitVariety> catalog_varieties(int max_dim, int max_quadric = 8);

// Test fixture: corrupts one split-quadric structure constant so that the
// verification suites demonstrably fail; never set outside tests/CLI fault
// injection.
namespace testing {
extern bool corrupt_quadric_structure;
}

// Integer inverse of a unimodular matrix (throws if not integrally invertible).
IntMat integer_inverse(const IntMat& a);

}  // namespace ck
