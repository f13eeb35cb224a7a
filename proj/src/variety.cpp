#include "ckops/variety.hpp"

#include <algorithm>
#include <sstream>

namespace ck {

namespace testing {
bool corrupt_quadric_structure = false;
}

// ---------------------------------------------------------------------------
// SplitVariety

SplitVariety SplitVariety::proj_space(int n) {
    if (n < 0) throw domain_error("proj_space: negative dimension");
    SplitVariety v;
    v.factors_.push_back({FactorKind::ProjSpace, n});
    return v;
}

SplitVariety SplitVariety::split_quadric(int d) {
    if (d < 1) throw domain_error("split_quadric: dimension must be >= 1");
    SplitVariety v;
    v.factors_.push_back({FactorKind::SplitQuadric, d});
    return v;
}

SplitVariety SplitVariety::product(const SplitVariety& a, const SplitVariety& b) {
    SplitVariety v;
    v.factors_ = a.factors_;
    v.factors_.insert(v.factors_.end(), b.factors_.begin(), b.factors_.end());
    if (v.factors_.size() > 3) throw domain_error("product: at most three factors supported");
    return v;
}

int SplitVariety::dim() const {
    int d = 0;
    for (const auto& f : factors_) d += f.dim();
    return d;
}

std::string SplitVariety::name() const {
    std::string s;
    for (size_t i = 0; i < factors_.size(); ++i) {
        if (i) s += "x";
        s += (factors_[i].kind == FactorKind::ProjSpace ? "P" : "Q");
        s += std::to_string(factors_[i].param);
    }
    return s;
}

SplitVariety SplitVariety::parse(const std::string& s) {
    SplitVariety v;
    size_t pos = 0;
    while (pos < s.size()) {
        size_t next = s.find('x', pos);
        std::string tok = s.substr(pos, next == std::string::npos ? next : next - pos);
        if (tok.size() < 2 || (tok[0] != 'P' && tok[0] != 'Q'))
            throw domain_error("parse: unrecognized variety token '" + tok + "'");
        int param = 0;
        for (size_t i = 1; i < tok.size(); ++i) {
            if (!isdigit(static_cast<unsigned char>(tok[i])))
                throw domain_error("parse: unrecognized variety token '" + tok + "'");
            param = param * 10 + (tok[i] - '0');
        }
        if (tok[0] == 'P') {
            if (param > 16) throw domain_error("parse: projective space dimension too large");
            v.factors_.push_back({FactorKind::ProjSpace, param});
        } else {
            if (param < 1 || param > 16)
                throw domain_error("parse: quadric dimension out of range");
            v.factors_.push_back({FactorKind::SplitQuadric, param});
        }
        pos = (next == std::string::npos) ? s.size() : next + 1;
        if (next != std::string::npos && pos == s.size())
            throw domain_error("parse: trailing product sign");
    }
    if (v.factors_.empty()) throw domain_error("parse: empty variety name");
    if (v.factors_.size() > 3) throw domain_error("parse: at most three factors supported");
    return v;
}

SplitVariety SplitVariety::slice(size_t lo, size_t hi) const {
    if (lo >= hi || hi > factors_.size()) throw domain_error("slice: bad factor range");
    SplitVariety v;
    v.factors_.assign(factors_.begin() + lo, factors_.begin() + hi);
    return v;
}

// ---------------------------------------------------------------------------
// FactorData

namespace {

FactorData build_factor(const Factor& f) {
    FactorData fd;
    fd.factor = f;
    if (f.kind == FactorKind::ProjSpace) {
        const int n = f.param;
        for (int i = 0; i <= n; ++i)
            fd.cells.push_back({"h" + std::to_string(i), n - i, i, i, true});
        fd.unit_cell = 0;
        fd.point_cell = n;
        fd.cmat = QMat(n + 1, n + 1);
        for (int i = 0; i < n; ++i) fd.cmat.at(i + 1, i) = Coefficient(1);
    } else {
        const int d = f.param, m = f.middle();
        for (int i = 0; i <= m; ++i)
            fd.cells.push_back({"h" + std::to_string(i), d - i, i, i, false});
        for (int j = m; j >= 0; --j)
            fd.cells.push_back({"l" + std::to_string(j), j, d - j, d - j - 1, true});
        fd.unit_cell = 0;
        fd.point_cell = fd.ncells() - 1;
        // c = 1 - [O(-1)] in the cell basis.  c moves h^i to h^{i+1}; past the
        // middle the hyperplane section of a linear subspace degenerates to a
        // union of two hyperplanes of the subspace, glued along their common
        // hyperplane: c l_j = 2 l_{j-1} - l_{j-2} when coming off h_m, after
        // which c acts on linear cells by a plain shift.
        fd.cmat = QMat(fd.ncells(), fd.ncells());
        for (int i = 0; i < m; ++i) fd.cmat.at(fd.hcell(i + 1), fd.hcell(i)) = Coefficient(1);
        const int t = d - m - 1;  // dim of h^{m+1}
        fd.cmat.at(fd.lcell(t), fd.hcell(m)) = Coefficient(2);
        if (t - 1 >= 0) fd.cmat.at(fd.lcell(t - 1), fd.hcell(m)) = Coefficient(-1);
        for (int j = 1; j <= m; ++j) fd.cmat.at(fd.lcell(j - 1), fd.lcell(j)) = Coefficient(1);
    }
    return fd;
}

}  // namespace

int FactorData::hcell(int i) const { return i; }

int FactorData::lcell(int j) const {
    if (factor.kind == FactorKind::ProjSpace) return factor.param - j;
    return factor.middle() + 1 + (factor.middle() - j);
}

SparseVec FactorData::chow_h_power(int s) const {
    const int d = factor.param;
    if (s < 0 || s > d) return {};
    if (factor.kind == FactorKind::ProjSpace) return {{hcell(s), 1}};
    const int m = factor.middle();
    if (s <= m) return {{hcell(s), 1}};
    return {{lcell(d - s), 2}};
}

SparseVec FactorData::chow_mult(int i, int j) const {
    const Cell& a = cells[i];
    const Cell& b = cells[j];
    if (factor.kind == FactorKind::ProjSpace) {
        int c = a.codim + b.codim;
        if (c > factor.param) return {};
        return {{hcell(c), 1}};
    }
    const int d = factor.param, m = factor.middle();
    if (!a.is_linear && !b.is_linear) {
        int c = a.codim + b.codim;
        if (c <= m) return {{hcell(c), 1}};
        if (c > d) return {};
        Int two = testing::corrupt_quadric_structure ? 3 : 2;
        return {{lcell(d - c), two}};
    }
    if (!a.is_linear || !b.is_linear) {
        const Cell& h = a.is_linear ? b : a;
        const Cell& l = a.is_linear ? a : b;
        if (l.dim < h.codim) return {};
        return {{lcell(l.dim - h.codim), 1}};
    }
    // two linear cells meet only through the middle cell of an even quadric,
    // where a plane meets itself in a point iff the middle dimension is even
    if (d % 2 == 0 && a.dim == m && b.dim == m && m % 2 == 0) return {{lcell(0), 1}};
    return {};
}

SparseVec FactorData::sq1_cell(int i) const {
    const Cell& c = cells[i];
    if (c.is_linear) {
        if (c.dim == 0 || (c.dim + 1) % 2 == 0) return {};
        return {{lcell(c.dim - 1), 1}};
    }
    // h-power cell of a quadric: a degree-(d+i) computation on the ambient
    // hyperplane-section chain
    const int d = factor.param;
    if ((d + c.codim) % 2 == 0) return {};
    SparseVec r;
    for (auto& [idx, coeff] : chow_h_power(c.codim + 1)) r.push_back({idx, coeff});
    return r;
}

QMat FactorData::line_op(int a) const {
    auto it = line_cache.find(a);
    if (it != line_cache.end()) return it->second;
    QMat r;
    const size_t n = cmat.rows();
    if (a == 0) {
        r = QMat::identity(n);
    } else if (a > 0) {
        // O(1) = (1-c)^{-1} = sum c^s, a finite sum since c is nilpotent
        QMat s(n, n);
        QMat p = QMat::identity(n);
        while (!p.is_zero()) {
            s = s + p;
            p = p * cmat;
        }
        r = s.pow(static_cast<unsigned>(a));
    } else {
        r = (QMat::identity(n) - cmat).pow(static_cast<unsigned>(-a));
    }
    line_cache.emplace(a, r);
    return r;
}

// ---------------------------------------------------------------------------
// VarietyData

VarietyData::VarietyData(SplitVariety v) : v_(std::move(v)) {
    for (const auto& f : v_.factors()) fd_.push_back(build_factor(f));
    ncells_ = 1;
    for (const auto& f : fd_) ncells_ *= f.ncells();
    strides_.assign(fd_.size(), 1);
    for (size_t f = fd_.size(); f-- > 1;) strides_[f - 1] = strides_[f] * fd_[f].ncells();
    cell_dim_.resize(ncells_);
    cell_names_.resize(ncells_);
    for (int idx = 0; idx < ncells_; ++idx) {
        auto t = unflatten(idx);
        int d = 0;
        std::string nm;
        for (size_t f = 0; f < fd_.size(); ++f) {
            d += fd_[f].cells[t[f]].dim;
            if (f) nm += "*";
            nm += fd_[f].cells[t[f]].name;
        }
        cell_dim_[idx] = d;
        cell_names_[idx] = nm;
    }
}

int VarietyData::cell_by_name(const std::string& name) const {
    for (int i = 0; i < ncells_; ++i)
        if (cell_names_[i] == name) return i;
    return -1;
}

std::vector<int> VarietyData::unflatten(int idx) const {
    std::vector<int> t(fd_.size());
    for (size_t f = 0; f < fd_.size(); ++f) {
        t[f] = idx / strides_[f];
        idx %= strides_[f];
    }
    return t;
}

int VarietyData::flatten(const std::vector<int>& per_factor) const {
    int idx = 0;
    for (size_t f = 0; f < fd_.size(); ++f) idx += per_factor[f] * strides_[f];
    return idx;
}

int VarietyData::fundamental_cell() const {
    std::vector<int> t;
    for (const auto& f : fd_) t.push_back(0);
    return flatten(t);
}

int VarietyData::point_cell() const {
    std::vector<int> t;
    for (const auto& f : fd_) t.push_back(f.point_cell);
    return flatten(t);
}

SparseVec VarietyData::chow_mult(int i, int j) const {
    auto ti = unflatten(i), tj = unflatten(j);
    SparseVec acc{{0, 1}};  // partial flat index, coefficient
    for (size_t f = 0; f < fd_.size(); ++f) {
        SparseVec part = fd_[f].chow_mult(ti[f], tj[f]);
        SparseVec next;
        for (const auto& [pidx, pc] : acc)
            for (const auto& [cidx, cc] : part) next.push_back({pidx + cidx * strides_[f], pc * cc});
        acc = std::move(next);
        if (acc.empty()) break;
    }
    return acc;
}

SparseVec VarietyData::sq1_cell(int i) const {
    auto t = unflatten(i);
    SparseVec r;
    for (size_t f = 0; f < fd_.size(); ++f) {
        int base = i - t[f] * strides_[f];
        for (const auto& [cidx, cc] : fd_[f].sq1_cell(t[f]))
            r.push_back({base + cidx * strides_[f], cc});
    }
    return r;
}

QMat VarietyData::line_op(const std::vector<int>& exps) const {
    if (exps.size() != fd_.size()) throw domain_error("line_op: wrong number of exponents");
    QMat r = fd_[0].line_op(exps[0]);
    for (size_t f = 1; f < fd_.size(); ++f) r = QMat::kron(r, fd_[f].line_op(exps[f]));
    return r;
}

QMat VarietyData::cmat(size_t f) const {
    QMat r = (f == 0) ? fd_[0].cmat : QMat::identity(fd_[0].ncells());
    for (size_t g = 1; g < fd_.size(); ++g)
        r = QMat::kron(r, (g == f) ? fd_[g].cmat : QMat::identity(fd_[g].ncells()));
    return r;
}

const QMat& VarietyData::psi_minus1() const {
    if (!psi_built_) {
        QMat p(ncells_, ncells_);
        for (int idx = 0; idx < ncells_; ++idx) {
            auto t = unflatten(idx);
            std::vector<int> tw;
            for (size_t f = 0; f < fd_.size(); ++f) tw.push_back(fd_[f].cells[t[f]].serre_twist);
            std::vector<Coefficient> e(ncells_);
            e[idx] = Coefficient((cell_codim(idx) % 2 == 0) ? 1 : -1);
            auto col = line_op(tw).apply(e);
            for (int r = 0; r < ncells_; ++r) p.at(r, idx) = col[r];
        }
        psi_minus1_ = std::move(p);
        psi_built_ = true;
    }
    return psi_minus1_;
}

void VarietyData::build_pairings() const {
    if (pairings_built_) return;
    const int pt = point_cell();
    IntMat p(ncells_, IntVec(ncells_, 0));
    for (int i = 0; i < ncells_; ++i)
        for (int j = 0; j < ncells_; ++j)
            for (const auto& [idx, c] : chow_mult(i, j))
                if (idx == pt) p[i][j] += c;
    pairing_ = p;
    pairing_inv_ = integer_inverse(p);
    pairings_built_ = true;
}

const IntMat& VarietyData::chow_pairing() const {
    build_pairings();
    return pairing_;
}

const IntMat& VarietyData::chow_pairing_inv() const {
    build_pairings();
    return pairing_inv_;
}

bool VarietyData::k_ring_available() const {
    for (const auto& f : fd_)
        if (f.factor.kind != FactorKind::ProjSpace) return false;
    return true;
}

const IntMat& VarietyData::k_pairing_inv() const {
    if (!k_pairing_built_) {
        if (!k_ring_available())
            throw unsupported_domain("K0 ring structure only available on products of projective spaces");
        // cell basis = monomials in the c classes; chi of every cell is 1, so
        // chi(b_i b_j) = 1 exactly when the exponents stay within range
        IntMat p(ncells_, IntVec(ncells_, 0));
        for (int i = 0; i < ncells_; ++i)
            for (int j = 0; j < ncells_; ++j) {
                auto ti = unflatten(i), tj = unflatten(j);
                bool ok = true;
                for (size_t f = 0; f < fd_.size(); ++f)
                    if (ti[f] + tj[f] > fd_[f].factor.param) ok = false;
                p[i][j] = ok ? 1 : 0;
            }
        k_pairing_inv_ = integer_inverse(p);
        k_pairing_built_ = true;
    }
    return k_pairing_inv_;
}

const IntMat& VarietyData::split_subring_gens() const {
    if (!subring_built_) {
        // per factor, the powers c^i [O] for i up to the nilpotency degree
        std::vector<std::vector<QMat>> pows;
        for (size_t f = 0; f < fd_.size(); ++f) {
            std::vector<QMat> p;
            QMat acc = QMat::identity(ncells_);
            QMat c = cmat(f);
            // c is nilpotent of index param+1 on both kinds of factor
            for (int i = 0; i <= fd_[f].factor.param; ++i) {
                p.push_back(acc);
                acc = acc * c;
            }
            pows.push_back(std::move(p));
        }
        std::vector<Coefficient> unit(ncells_);
        unit[fundamental_cell()] = Coefficient(1);

        std::vector<std::vector<int>> exps{{}};
        for (size_t f = 0; f < fd_.size(); ++f) {
            std::vector<std::vector<int>> next;
            for (auto& e : exps)
                for (size_t i = 0; i < pows[f].size(); ++i) {
                    auto e2 = e;
                    e2.push_back(static_cast<int>(i));
                    next.push_back(std::move(e2));
                }
            exps = std::move(next);
        }
        IntMat gens;
        std::vector<std::vector<int>> kept;
        for (const auto& e : exps) {
            QMat op = QMat::identity(ncells_);
            for (size_t f = 0; f < fd_.size(); ++f) op = op * pows[f][e[f]];
            auto vec = op.apply(unit);
            IntVec row(ncells_);
            bool nonzero = false;
            for (int i = 0; i < ncells_; ++i) {
                row[i] = vec[i].as_integer();
                if (row[i] != 0) nonzero = true;
            }
            if (!nonzero) continue;
            gens.push_back(std::move(row));
            kept.push_back(e);
        }
        subring_gens_ = std::move(gens);
        subring_exps_ = std::move(kept);
        subring_built_ = true;
    }
    return subring_gens_;
}

const std::vector<std::vector<int>>& VarietyData::split_subring_exps() const {
    split_subring_gens();
    return subring_exps_;
}

const IntegerLattice& VarietyData::split_subring_lattice() const {
    if (!subring_lattice_)
        subring_lattice_ = std::make_unique<IntegerLattice>(ncells_, split_subring_gens());
    return *subring_lattice_;
}

int VarietyData::cells_of_dim_count(int d) const {
    int c = 0;
    for (int i = 0; i < ncells_; ++i)
        if (cell_dim_[i] == d) ++c;
    return c;
}

// ---------------------------------------------------------------------------

const VarietyData& data_for(const SplitVariety& v) {
    static std::map<std::string, std::unique_ptr<VarietyData>> cache;
    const std::string key = v.name();
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, std::make_unique<VarietyData>(v)).first;
    return *it->second;
}

std::vector<SplitVariety> catalog_varieties(int max_dim, int max_quadric) {
    std::vector<SplitVariety> out;
    for (int n = 1; n <= std::min(max_dim, 8); ++n) out.push_back(SplitVariety::proj_space(n));
    for (int d = 1; d <= std::min(max_dim, max_quadric); ++d)
        out.push_back(SplitVariety::split_quadric(d));
    static const char* products[] = {"P1xP1",   "P1xP2",   "P2xP2",    "P2xP3",    "P1xQ2", "Q2xP2",
                                     "Q2xQ2",   "Q3xQ2",   "Q3xQ3",    "P1xQ3",    "P1xQ4", "Q4xQ4",
                                     "P1xP1xP1", "P1xP1xP2"};
    for (const char* p : products) {
        SplitVariety v = SplitVariety::parse(p);
        bool qok = true;
        for (const auto& f : v.factors())
            if (f.kind == FactorKind::SplitQuadric && f.param > max_quadric) qok = false;
        if (v.dim() <= max_dim && qok) out.push_back(v);
    }
    return out;
}

IntMat integer_inverse(const IntMat& a) {
    const size_t n = a.size();
    std::vector<std::vector<mpq_class>> w(n, std::vector<mpq_class>(2 * n, 0));
    for (size_t i = 0; i < n; ++i) {
        if (a[i].size() != n) throw domain_error("integer_inverse: not square");
        for (size_t j = 0; j < n; ++j) w[i][j] = a[i][j];
        w[i][n + i] = 1;
    }
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && w[piv][col] == 0) ++piv;
        if (piv == n) throw inversion_error("integer_inverse: singular matrix");
        std::swap(w[piv], w[col]);
        mpq_class p = w[col][col];
        for (size_t j = 0; j < 2 * n; ++j) w[col][j] /= p;
        for (size_t i = 0; i < n; ++i) {
            if (i == col || w[i][col] == 0) continue;
            mpq_class f = w[i][col];
            for (size_t j = col; j < 2 * n; ++j) w[i][j] -= f * w[col][j];
        }
    }
    IntMat inv(n, IntVec(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            mpq_class q = w[i][n + j];
            q.canonicalize();
            if (q.get_den() != 1)
                throw inversion_error("integer_inverse: inverse is not integral");
            inv[i][j] = q.get_num();
        }
    return inv;
}

}  // namespace ck
