#pragma once

#include "ckops/exact.hpp"

#include <optional>
#include <vector>

namespace ck {

using IntVec = std::vector<Int>;
using IntMat = std::vector<IntVec>;  // row major

// U * A * V = D with U, V unimodular and D diagonal, d_i | d_{i+1}, d_i >= 0.
struct SmithForm {
    IntMat u, v;     // rows(A) x rows(A), cols(A) x cols(A)
    IntVec diag;     // min(rows, cols) entries
    size_t rank = 0;  // number of nonzero diagonal entries
};

SmithForm smith_normal_form(const IntMat& a);

IntMat mat_mul(const IntMat& a, const IntMat& b);
IntVec vec_mat(const IntVec& x, const IntMat& a);

// Subgroup of Z^n given by a generating set; Smith form cached at construction.
class IntegerLattice {
  public:
    IntegerLattice(size_t ambient_rank, IntMat generators);

    size_t ambient_rank() const { return ambient_; }
    size_t rank() const { return snf_.rank; }
    const IntMat& generators() const { return gens_; }
    const SmithForm& smith() const { return snf_; }

    // Integer coordinates of target over the generators, or nullopt.
    std::optional<IntVec> solve(const IntVec& target) const;
    bool contains(const IntVec& target) const { return solve(target).has_value(); }

    // Generators of this lattice together with extra vectors.
    IntegerLattice joined_with(const IntMat& extra) const;

  private:
    size_t ambient_;
    IntMat gens_;
    SmithForm snf_;
};

}  // namespace ck
