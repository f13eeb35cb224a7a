#include "ckops/classes.hpp"

#include <sstream>

namespace ck {

namespace {

void check_same(const SplitVariety& a, const SplitVariety& b, const char* what) {
    if (a != b) throw domain_error(std::string(what) + ": classes live on different varieties");
}

Int mod2(const Int& x) {
    Int r = x % 2;
    if (r < 0) r += 2;
    return r;
}

void normalize(ChowClass& a) {
    if (!a.mod2) return;
    for (auto& x : a.c) x = mod2(x);
}

}  // namespace

ChowClass chow_zero(const SplitVariety& v, bool mod2) {
    return {v, mod2, std::vector<Int>(data_for(v).ncells(), 0)};
}

ChowClass chow_cell(const SplitVariety& v, int idx, bool mod2) {
    ChowClass a = chow_zero(v, mod2);
    a.c.at(idx) = 1;
    return a;
}

ChowClass chow_cell(const SplitVariety& v, const std::string& name, bool mod2) {
    int idx = data_for(v).cell_by_name(name);
    if (idx < 0) throw domain_error("chow_cell: no cell named '" + name + "' on " + v.name());
    return chow_cell(v, idx, mod2);
}

ChowClass chow_fundamental(const SplitVariety& v, bool mod2) {
    return chow_cell(v, data_for(v).fundamental_cell(), mod2);
}

ChowClass chow_hyperplane(const SplitVariety& v, size_t factor, bool mod2) {
    const auto& d = data_for(v);
    if (factor >= v.nfactors()) throw domain_error("chow_hyperplane: factor out of range");
    if (v.factors()[factor].dim() == 0) return chow_zero(v, mod2);  // h = 0 on a point
    // via the h-power expansion: on Q1 the hyperplane class is 2*l0
    ChowClass out = chow_zero(v, false);
    std::vector<int> t(v.nfactors(), 0);
    for (const auto& [idx, c] : d.factor_data()[factor].chow_h_power(1)) {
        t[factor] = idx;
        out.c[d.flatten(t)] += c;
    }
    return mod2 ? reduce_mod2(out) : out;
}

ChowClass operator+(const ChowClass& a, const ChowClass& b) {
    check_same(a.v, b.v, "chow add");
    if (a.mod2 != b.mod2) throw domain_error("chow add: mixed mod-2 and integral classes");
    ChowClass r = a;
    for (size_t i = 0; i < r.c.size(); ++i) r.c[i] += b.c[i];
    normalize(r);
    return r;
}

ChowClass operator-(const ChowClass& a, const ChowClass& b) { return a + (-b); }

ChowClass operator-(const ChowClass& a) {
    ChowClass r = a;
    for (auto& x : r.c) x = -x;
    normalize(r);
    return r;
}

ChowClass operator*(const ChowClass& a, const ChowClass& b) {
    check_same(a.v, b.v, "chow mul");
    if (a.mod2 != b.mod2) throw domain_error("chow mul: mixed mod-2 and integral classes");
    const auto& d = data_for(a.v);
    ChowClass r = chow_zero(a.v, a.mod2);
    for (int i = 0; i < d.ncells(); ++i) {
        if (a.c[i] == 0) continue;
        for (int j = 0; j < d.ncells(); ++j) {
            if (b.c[j] == 0) continue;
            for (const auto& [idx, coeff] : d.chow_mult(i, j)) r.c[idx] += a.c[i] * b.c[j] * coeff;
        }
    }
    normalize(r);
    return r;
}

ChowClass chow_scale(const Int& n, const ChowClass& a) {
    ChowClass r = a;
    for (auto& x : r.c) x *= n;
    normalize(r);
    return r;
}

bool operator==(const ChowClass& a, const ChowClass& b) {
    check_same(a.v, b.v, "chow compare");
    if (a.mod2 != b.mod2) throw domain_error("chow compare: mixed mod-2 and integral classes");
    return a.c == b.c;
}

bool chow_is_zero(const ChowClass& a) {
    for (const auto& x : a.c)
        if (x != 0) return false;
    return true;
}

Int chow_degree(const ChowClass& a) { return a.c[data_for(a.v).point_cell()]; }

ChowClass chow_graded_part(const ChowClass& a, int dim) {
    const auto& d = data_for(a.v);
    ChowClass r = chow_zero(a.v, a.mod2);
    for (int i = 0; i < d.ncells(); ++i)
        if (d.cell_dim(i) == dim) r.c[i] = a.c[i];
    return r;
}

bool chow_is_homogeneous(const ChowClass& a, int dim) {
    const auto& d = data_for(a.v);
    for (int i = 0; i < d.ncells(); ++i)
        if (d.cell_dim(i) != dim && a.c[i] != 0) return false;
    return true;
}

ChowClass reduce_mod2(const ChowClass& a) {
    ChowClass r = a;
    r.mod2 = true;
    normalize(r);
    return r;
}

ChowClass lift_integral(const ChowClass& a) {
    ChowClass r = a;
    r.mod2 = false;
    return r;
}

ChowClass chow_external(const ChowClass& a, const ChowClass& b, const SplitVariety& prod) {
    if (a.mod2 != b.mod2) throw domain_error("chow external: mixed mod-2 and integral classes");
    if (SplitVariety::product(a.v, b.v) != prod)
        throw domain_error("chow external: product variety does not match the factors");
    const size_t nb = b.c.size();
    ChowClass r = chow_zero(prod, a.mod2);
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (size_t j = 0; j < nb; ++j) r.c[i * nb + j] = a.c[i] * b.c[j];
    }
    normalize(r);
    return r;
}

ChowClass chow_invert_unipotent(const ChowClass& a) {
    const auto& d = data_for(a.v);
    Int u = a.c[d.fundamental_cell()];
    if (!(u == 1 || u == -1))
        throw inversion_error("chow_invert_unipotent: leading term is not a unit");
    ChowClass nil = a - chow_scale(u, chow_fundamental(a.v, a.mod2));
    ChowClass term = chow_fundamental(a.v, a.mod2);
    ChowClass sum = term;
    for (int i = 1; i <= d.dim(); ++i) {
        term = chow_scale(-u, term * nil);
        sum = sum + term;
    }
    ChowClass inv = chow_scale(u, sum);
    if (inv * a != chow_fundamental(a.v, a.mod2))
        throw inversion_error("chow_invert_unipotent: verification failed");
    return inv;
}

std::string chow_str(const ChowClass& a) {
    const auto& d = data_for(a.v);
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < d.ncells(); ++i) {
        if (a.c[i] == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (a.c[i] != 1) os << a.c[i].get_str() << "*";
        os << "[" << d.cell_name(i) << "]";
    }
    if (first) os << "0";
    if (a.mod2) os << " (mod 2)";
    return os.str();
}

// ---------------------------------------------------------------------------
// KClass

KClass k_zero(const SplitVariety& v) {
    return {v, std::vector<Coefficient>(data_for(v).ncells())};
}

KClass k_unit(const SplitVariety& v) {
    KClass a = k_zero(v);
    a.c[data_for(v).fundamental_cell()] = Coefficient(1);
    return a;
}

KClass k_cell(const SplitVariety& v, int idx) {
    KClass a = k_zero(v);
    a.c.at(idx) = Coefficient(1);
    return a;
}

KClass k_cell(const SplitVariety& v, const std::string& name) {
    int idx = data_for(v).cell_by_name(name);
    if (idx < 0) throw domain_error("k_cell: no cell named '" + name + "' on " + v.name());
    return k_cell(v, idx);
}

KClass k_line(const SplitVariety& v, const std::vector<int>& exps) {
    return k_apply(data_for(v).line_op(exps), k_unit(v));
}

KClass operator+(const KClass& a, const KClass& b) {
    check_same(a.v, b.v, "k add");
    KClass r = a;
    for (size_t i = 0; i < r.c.size(); ++i) r.c[i] += b.c[i];
    return r;
}

KClass operator-(const KClass& a, const KClass& b) { return a + (-b); }

KClass operator-(const KClass& a) {
    KClass r = a;
    for (auto& x : r.c) x = -x;
    return r;
}

KClass k_scale(const Coefficient& c, const KClass& a) {
    KClass r = a;
    for (auto& x : r.c) x *= c;
    return r;
}

bool operator==(const KClass& a, const KClass& b) {
    check_same(a.v, b.v, "k compare");
    return a.c == b.c;
}

bool k_is_zero(const KClass& a) {
    for (const auto& x : a.c)
        if (!x.is_zero()) return false;
    return true;
}

Coefficient k_chi(const KClass& a) {
    Coefficient s;
    for (const auto& x : a.c) s += x;
    return s;
}

Coefficient k_rank(const KClass& a) { return a.c[data_for(a.v).fundamental_cell()]; }

KClass k_external(const KClass& a, const KClass& b, const SplitVariety& prod) {
    if (SplitVariety::product(a.v, b.v) != prod)
        throw domain_error("k external: product variety does not match the factors");
    const size_t nb = b.c.size();
    KClass r = k_zero(prod);
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i].is_zero()) continue;
        for (size_t j = 0; j < nb; ++j) r.c[i * nb + j] = a.c[i] * b.c[j];
    }
    return r;
}

KClass k_mul(const KClass& a, const KClass& b) {
    check_same(a.v, b.v, "k mul");
    const auto& d = data_for(a.v);
    if (!d.k_ring_available())
        throw unsupported_domain("k_mul: ring structure only on products of projective spaces");
    const size_t nf = a.v.nfactors();
    KClass r = k_zero(a.v);
    for (int i = 0; i < d.ncells(); ++i) {
        if (a.c[i].is_zero()) continue;
        auto ti = d.unflatten(i);
        for (int j = 0; j < d.ncells(); ++j) {
            if (b.c[j].is_zero()) continue;
            auto tj = d.unflatten(j);
            std::vector<int> t(nf);
            bool ok = true;
            for (size_t f = 0; f < nf; ++f) {
                t[f] = ti[f] + tj[f];
                if (t[f] > d.factor_data()[f].factor.param) ok = false;
            }
            if (ok) r.c[d.flatten(t)] += a.c[i] * b.c[j];
        }
    }
    return r;
}

KClass k_apply(const QMat& op, const KClass& a) {
    KClass r = a;
    r.c = op.apply(a.c);
    return r;
}

std::string k_str(const KClass& a) {
    const auto& d = data_for(a.v);
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < d.ncells(); ++i) {
        if (a.c[i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << a.c[i].str() << "*[O_" << d.cell_name(i) << "]";
    }
    if (first) os << "0";
    return os.str();
}

// ---------------------------------------------------------------------------
// SplitKClass

SplitKClass split_zero(const SplitVariety& v) { return {v, {}}; }

SplitKClass split_line(const SplitVariety& v, const std::vector<int>& exps, Int mult) {
    if (exps.size() != v.nfactors()) throw domain_error("split_line: wrong number of exponents");
    SplitKClass a{v, {}};
    if (mult != 0) a.terms[exps] = mult;
    return a;
}

SplitKClass split_trivial(const SplitVariety& v, Int mult) {
    return split_line(v, std::vector<int>(v.nfactors(), 0), std::move(mult));
}

SplitKClass operator+(const SplitKClass& a, const SplitKClass& b) {
    check_same(a.v, b.v, "split add");
    SplitKClass r = a;
    for (const auto& [e, m] : b.terms) {
        auto& slot = r.terms[e];
        slot += m;
        if (slot == 0) r.terms.erase(e);
    }
    return r;
}

SplitKClass operator-(const SplitKClass& a, const SplitKClass& b) { return a + (-b); }

SplitKClass operator-(const SplitKClass& a) {
    SplitKClass r = a;
    for (auto& [e, m] : r.terms) m = -m;
    return r;
}

SplitKClass split_scale(const Int& n, const SplitKClass& a) {
    if (n == 0) return split_zero(a.v);
    SplitKClass r = a;
    for (auto& [e, m] : r.terms) m *= n;
    return r;
}

bool operator==(const SplitKClass& a, const SplitKClass& b) {
    check_same(a.v, b.v, "split compare");
    return a.terms == b.terms;
}

Int split_rank(const SplitKClass& a) {
    Int r = 0;
    for (const auto& [e, m] : a.terms) r += m;
    return r;
}

KClass split_embed(const SplitKClass& a) {
    KClass r = k_zero(a.v);
    for (const auto& [e, m] : a.terms) r = r + k_scale(Coefficient(m), k_line(a.v, e));
    return r;
}

SplitKClass split_dual(const SplitKClass& a) {
    SplitKClass r{a.v, {}};
    for (const auto& [e, m] : a.terms) {
        std::vector<int> d = e;
        for (auto& x : d) x = -x;
        r.terms[d] = m;
    }
    return r;
}

SplitKClass split_pullback_to_product(const SplitKClass& a, const SplitVariety& prod, size_t lo) {
    if (lo + a.v.nfactors() > prod.nfactors() ||
        prod.slice(lo, lo + a.v.nfactors()) != a.v)
        throw domain_error("split_pullback_to_product: factor range mismatch");
    SplitKClass r{prod, {}};
    for (const auto& [e, m] : a.terms) {
        std::vector<int> full(prod.nfactors(), 0);
        for (size_t f = 0; f < e.size(); ++f) full[lo + f] = e[f];
        r.terms[full] = m;
    }
    return r;
}

SplitKClass tangent_class(const SplitVariety& v) {
    SplitKClass t = split_zero(v);
    for (size_t f = 0; f < v.nfactors(); ++f) {
        const Factor& fac = v.factors()[f];
        std::vector<int> one(v.nfactors(), 0);
        one[f] = 1;
        if (fac.kind == FactorKind::ProjSpace) {
            // T_{P^n} = (n+1) O(1) - O  (Euler sequence)
            t = t + split_line(v, one, fac.param + 1) - split_trivial(v, 1);
        } else {
            // T_{Q_d} = (d+2) O(1) - O - O(2)  (Euler + conormal of the quadric)
            std::vector<int> two(v.nfactors(), 0);
            two[f] = 2;
            t = t + split_line(v, one, fac.param + 2) - split_trivial(v, 1) - split_line(v, two, 1);
        }
    }
    return t;
}

std::string split_str(const SplitKClass& a) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, m] : a.terms) {
        if (!first) os << " + ";
        first = false;
        os << m.get_str() << "*O(";
        for (size_t f = 0; f < e.size(); ++f) {
            if (f) os << ",";
            os << e[f];
        }
        os << ")";
    }
    if (first) os << "0";
    return os.str();
}

}  // namespace ck
