#include "ckops/snf.hpp"

namespace ck {

namespace {

IntMat identity(size_t n) {
    IntMat m(n, IntVec(n, 0));
    for (size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

void row_axpy(IntMat& a, IntMat& u, size_t dst, size_t src, const Int& q) {
    // row dst -= q * row src, mirrored in u
    for (size_t j = 0; j < a[dst].size(); ++j) a[dst][j] -= q * a[src][j];
    for (size_t j = 0; j < u[dst].size(); ++j) u[dst][j] -= q * u[src][j];
}

void col_axpy(IntMat& a, IntMat& v, size_t dst, size_t src, const Int& q) {
    // col dst -= q * col src; v accumulates column operations (A <- A V)
    for (auto& row : a) row[dst] -= q * row[src];
    for (auto& row : v) row[dst] -= q * row[src];
}

void row_swap(IntMat& a, IntMat& u, size_t i, size_t j) {
    std::swap(a[i], a[j]);
    std::swap(u[i], u[j]);
}

void col_swap(IntMat& a, IntMat& v, size_t i, size_t j) {
    for (auto& row : a) std::swap(row[i], row[j]);
    for (auto& row : v) std::swap(row[i], row[j]);
}

void row_negate(IntMat& a, IntMat& u, size_t i) {
    for (auto& x : a[i]) x = -x;
    for (auto& x : u[i]) x = -x;
}

}  // namespace

SmithForm smith_normal_form(const IntMat& input) {
    const size_t m = input.size();
    const size_t n = m ? input[0].size() : 0;
    IntMat a = input;
    SmithForm f;
    f.u = identity(m);
    f.v = identity(n);
    const size_t steps = std::min(m, n);

    for (size_t t = 0; t < steps; ++t) {
        // locate a pivot of minimal absolute value in the remaining block
        size_t pi = t, pj = t;
        bool found = false;
        Int best = 0;
        for (size_t i = t; i < m; ++i)
            for (size_t j = t; j < n; ++j) {
                if (a[i][j] == 0) continue;
                Int v = abs(a[i][j]);
                if (!found || v < best) {
                    found = true;
                    best = v;
                    pi = i;
                    pj = j;
                }
            }
        if (!found) break;
        row_swap(a, f.u, t, pi);
        col_swap(a, f.v, t, pj);

        for (;;) {
            bool clean = true;
            for (size_t i = t + 1; i < m; ++i) {
                if (a[i][t] == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), a[i][t].get_mpz_t(), a[t][t].get_mpz_t());
                row_axpy(a, f.u, i, t, q);
                if (a[i][t] != 0) {
                    row_swap(a, f.u, t, i);  // strictly smaller remainder becomes pivot
                    clean = false;
                }
            }
            for (size_t j = t + 1; j < n; ++j) {
                if (a[t][j] == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), a[t][j].get_mpz_t(), a[t][t].get_mpz_t());
                col_axpy(a, f.v, j, t, q);
                if (a[t][j] != 0) {
                    col_swap(a, f.v, t, j);
                    clean = false;
                }
            }
            if (clean) break;
        }
        if (a[t][t] < 0) row_negate(a, f.u, t);
    }

    // enforce the divisibility chain d_t | d_{t+1}
    for (size_t t = 0; t + 1 < steps; ++t) {
        for (size_t s = t + 1; s < steps; ++s) {
            if (a[s][s] == 0) continue;
            if (mpz_divisible_p(a[s][s].get_mpz_t(), a[t][t].get_mpz_t()) && a[t][t] != 0)
                continue;
            // fold d_s into column t and rediagonalize the 2x2 block
            for (auto& row : f.v) row[t] += row[s];
            for (size_t i = 0; i < m; ++i) a[i][t] += a[i][s];
            for (;;) {
                bool clean = true;
                if (a[s][t] != 0) {
                    Int q;
                    mpz_fdiv_q(q.get_mpz_t(), a[s][t].get_mpz_t(), a[t][t].get_mpz_t());
                    row_axpy(a, f.u, s, t, q);
                    if (a[s][t] != 0) {
                        row_swap(a, f.u, t, s);
                        clean = false;
                    }
                }
                if (a[t][s] != 0) {
                    Int q;
                    mpz_fdiv_q(q.get_mpz_t(), a[t][s].get_mpz_t(), a[t][t].get_mpz_t());
                    col_axpy(a, f.v, s, t, q);
                    if (a[t][s] != 0) {
                        col_swap(a, f.v, t, s);
                        clean = false;
                    }
                }
                if (clean) break;
            }
            if (a[t][t] < 0) row_negate(a, f.u, t);
            if (a[s][s] < 0) row_negate(a, f.u, s);
        }
    }

    f.diag.resize(steps);
    for (size_t t = 0; t < steps; ++t) f.diag[t] = a[t][t];
    f.rank = 0;
    for (const auto& d : f.diag)
        if (d != 0) ++f.rank;
    return f;
}

IntMat mat_mul(const IntMat& a, const IntMat& b) {
    const size_t m = a.size(), k = b.size(), n = k ? b[0].size() : 0;
    IntMat c(m, IntVec(n, 0));
    for (size_t i = 0; i < m; ++i)
        for (size_t t = 0; t < k; ++t) {
            if (a[i][t] == 0) continue;
            for (size_t j = 0; j < n; ++j) c[i][j] += a[i][t] * b[t][j];
        }
    return c;
}

IntVec vec_mat(const IntVec& x, const IntMat& a) {
    const size_t m = a.size(), n = m ? a[0].size() : 0;
    IntVec r(n, 0);
    for (size_t i = 0; i < m; ++i) {
        if (x[i] == 0) continue;
        for (size_t j = 0; j < n; ++j) r[j] += x[i] * a[i][j];
    }
    return r;
}

IntegerLattice::IntegerLattice(size_t ambient_rank, IntMat generators)
    : ambient_(ambient_rank), gens_(std::move(generators)) {
    for (const auto& g : gens_)
        if (g.size() != ambient_) throw domain_error("lattice generator has wrong length");
    snf_ = smith_normal_form(gens_);
}

std::optional<IntVec> IntegerLattice::solve(const IntVec& target) const {
    if (target.size() != ambient_) throw domain_error("lattice_solve: dimension mismatch");
    const size_t m = gens_.size();
    if (m == 0) {
        for (const auto& x : target)
            if (x != 0) return std::nullopt;
        return IntVec{};
    }
    // x G = t  <=>  y D = t V with y = x U^{-1}, i.e. x = y U
    IntVec tv = vec_mat(target, snf_.v);
    IntVec y(m, 0);
    const size_t steps = snf_.diag.size();
    for (size_t j = 0; j < tv.size(); ++j) {
        if (j < steps && snf_.diag[j] != 0) {
            if (!mpz_divisible_p(tv[j].get_mpz_t(), snf_.diag[j].get_mpz_t()))
                return std::nullopt;
            y[j] = tv[j] / snf_.diag[j];
        } else if (tv[j] != 0) {
            return std::nullopt;
        }
    }
    return vec_mat(y, snf_.u);
}

IntegerLattice IntegerLattice::joined_with(const IntMat& extra) const {
    IntMat g = gens_;
    g.insert(g.end(), extra.begin(), extra.end());
    return IntegerLattice(ambient_, std::move(g));
}

}  // namespace ck
