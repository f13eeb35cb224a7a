#include "ckops/verify.hpp"

#include <algorithm>

namespace ck {

namespace {

using CheckFn = std::function<bool(std::string&)>;

void add_check(Report& rep, const std::string& id, const std::string& anchor, const CheckFn& fn) {
    CheckResult r{id, anchor, false, {}};
    try {
        std::string ce;
        r.pass = fn(ce);
        if (!r.pass) r.counterexample = ce.empty() ? "identity failed" : ce;
    } catch (const std::exception& e) {
        r.pass = false;
        r.counterexample = std::string("exception: ") + e.what();
    }
    rep.checks.push_back(std::move(r));
}

std::vector<SplitVariety> varieties_leq(int max_dim, int max_quadric) {
    return catalog_varieties(max_dim, max_quadric);
}

// chi(O_{P^j}(a)) as a polynomial in a: binom(a+j, j).
Int proj_chi(const Int& a, int j) {
    Int num(1), den(1);
    for (int i = 1; i <= j; ++i) {
        num *= a + i;
        den *= i;
    }
    return num / den;
}

// chi(O_{Q_e}(a)) = chi(O_{P^{e+1}}(a)) - chi(O_{P^{e+1}}(a-2)).
Int quadric_chi(const Int& a, int e) { return proj_chi(a, e + 1) - proj_chi(a - 2, e + 1); }

std::string cellname(const SplitVariety& v, int i) { return data_for(v).cell_name(i); }

// small pool of split classes for theta/pi identities
std::vector<SplitKClass> split_pool(const SplitVariety& v) {
    std::vector<SplitKClass> out;
    out.push_back(split_zero(v));
    out.push_back(split_trivial(v, 1));
    std::vector<int> e(v.nfactors(), 0);
    e[0] = 1;
    out.push_back(split_line(v, e, 1));
    out.push_back(split_line(v, e, -1));
    e[0] = -1;
    out.push_back(split_line(v, e, 1));
    if (v.nfactors() > 1) {
        std::vector<int> e2(v.nfactors(), 0);
        e2[v.nfactors() - 1] = 1;
        out.push_back(split_line(v, e2, 1) + split_line(v, e, 1));
    }
    out.push_back(tangent_class(v));
    return out;
}

// ---------------------------------------------------------------------------

void suite_cartan(Report& rep, int max_dim, int max_quadric) {
    struct P {
        const char* prod;
        size_t split;
    };
    // the three pair products named by the Cartan property, plus triple
    // products at both split points (well-definedness of the product table)
    const P cases[] = {{"P2xP3", 1}, {"Q2xP2", 1}, {"Q3xQ2", 1},
                       {"P1xP1xP1", 1}, {"P1xP1xP1", 2}, {"P1xP1xP2", 1}, {"P1xP1xP2", 2}};
    for (const auto& cs : cases) {
        SplitVariety v = SplitVariety::parse(cs.prod);
        if (v.dim() > max_dim) continue;
        bool qok = true;
        for (const auto& f : v.factors())
            if (f.kind == FactorKind::SplitQuadric && f.param > max_quadric) qok = false;
        if (!qok) continue;
        SplitVariety a = v.slice(0, cs.split);
        SplitVariety b = v.slice(cs.split, v.nfactors());
        const auto& da = data_for(a);
        const auto& db = data_for(b);
        for (int i = 0; i < da.ncells(); ++i)
            for (int j = 0; j < db.ncells(); ++j) {
                std::string id = "cartan/" + v.name() + "@" + std::to_string(cs.split) + "/" +
                                 cellname(a, i) + "," + cellname(b, j);
                add_check(rep, id, "Cartan formula", [&](std::string& ce) {
                    ChowClass x = chow_cell(a, i, true);
                    ChowClass y = chow_cell(b, j, true);
                    ChowClass lhs = sq1(chow_external(x, y, v));
                    ChowClass rhs = chow_external(sq1(x), y, v) + chow_external(x, sq1(y), v);
                    if (lhs == rhs) return true;
                    ce = "Sq1(x X y) = " + chow_str(lhs) + " vs " + chow_str(rhs);
                    return false;
                });
            }
    }
}

void suite_pullback(Report& rep, int max_dim, int max_quadric) {
    // structural gate checks of the quadric presentation; these are the
    // invariants that certify the structure constants
    for (const auto& v : varieties_leq(max_dim, max_quadric)) {
        add_check(rep, "pullback/gate/pairing-unimodular/" + v.name(), "poincare pairing",
                  [&](std::string& ce) {
                      const auto& d = data_for(v);
                      (void)d.chow_pairing_inv();  // throws if not unimodular over Z
                      return true;
                  });
        if (v.nfactors() == 1 && v.factors()[0].kind == FactorKind::SplitQuadric) {
            const int dd = v.factors()[0].param;
            add_check(rep, "pullback/gate/degrees/" + v.name(), "deg(h^d)=2, deg(l0)=1",
                      [&](std::string& ce) {
                          const auto& fd = data_for(v).factor_data()[0];
                          ChowClass hd = chow_zero(v);
                          for (const auto& [idx, c] : fd.chow_h_power(dd)) hd.c[idx] += c;
                          if (chow_degree(hd) != 2) {
                              ce = "deg(h^d) = " + chow_degree(hd).get_str();
                              return false;
                          }
                          ChowClass l0 = chow_cell(v, fd.lcell(0));
                          if (chow_degree(l0) != 1) {
                              ce = "deg(l0) = " + chow_degree(l0).get_str();
                              return false;
                          }
                          if (fd.factor.middle() >= 1) {
                              ChowClass h = chow_cell(v, fd.hcell(1));
                              ChowClass l1 = chow_cell(v, fd.lcell(1));
                              if (!(h * l1 == l0)) {
                                  ce = "h*l1 = " + chow_str(h * l1);
                                  return false;
                              }
                          }
                          return true;
                      });
        }
    }

    for (const auto& f : catalog_morphisms(max_dim, max_quadric)) {
        if (f.source.dim() > max_dim || f.target.dim() > max_dim) continue;
        const auto& ds = data_for(f.source);
        const auto& dt = data_for(f.target);

        // f^* Sq1 = Sq1 f^* + c1(T_f) f^*
        ChowClass c1tf = reduce_mod2(chern_class(f.tangent, 1));
        for (int j = 0; j < dt.ncells(); ++j) {
            std::string id = "pullback/formula/" + f.name + "/" + cellname(f.target, j);
            add_check(rep, id, "f* Sq_1 = Sq_1 f* + c_1(T_f) f*", [&](std::string& ce) {
                ChowClass y = chow_cell(f.target, j, true);
                ChowClass lhs = chow_pullback(f, sq1(y));
                ChowClass fy = chow_pullback(f, y);
                ChowClass rhs = sq1(fy) + c1tf * fy;
                if (lhs == rhs) return true;
                ce = chow_str(lhs) + " vs " + chow_str(rhs);
                return false;
            });
        }

        // f_* Sq1 = Sq1 f_*
        for (int i = 0; i < ds.ncells(); ++i) {
            std::string id = "pullback/naturality/" + f.name + "/" + cellname(f.source, i);
            add_check(rep, id, "sq1 push naturality", [&](std::string& ce) {
                ChowClass x = chow_cell(f.source, i, true);
                ChowClass lhs = chow_pushforward(f, sq1(x));
                ChowClass rhs = sq1(chow_pushforward(f, x));
                if (lhs == rhs) return true;
                ce = chow_str(lhs) + " vs " + chow_str(rhs);
                return false;
            });
        }

        // projection formula, both moduli
        for (int i = 0; i < ds.ncells(); ++i)
            for (int j = 0; j < dt.ncells(); ++j) {
                std::string id = "pullback/projformula/" + f.name + "/" + cellname(f.source, i) +
                                 "," + cellname(f.target, j);
                add_check(rep, id, "projection formula", [&](std::string& ce) {
                    ChowClass x = chow_cell(f.source, i);
                    ChowClass y = chow_cell(f.target, j);
                    ChowClass lhs = chow_pushforward(f, chow_pullback(f, y) * x);
                    ChowClass rhs = y * chow_pushforward(f, x);
                    if (lhs == rhs && reduce_mod2(lhs) == reduce_mod2(rhs)) return true;
                    ce = chow_str(lhs) + " vs " + chow_str(rhs);
                    return false;
                });
            }
    }
}

void suite_adem(Report& rep, int max_dim, int max_quadric) {
    for (const auto& v : varieties_leq(max_dim, max_quadric)) {
        const auto& d = data_for(v);
        for (int i = 0; i < d.ncells(); ++i) {
            add_check(rep, "adem/sq1sq1/" + v.name() + "/" + cellname(v, i),
                      "the composite is zero", [&](std::string& ce) {
                          ChowClass s = sq1(sq1(chow_cell(v, i, true)));
                          if (chow_is_zero(s)) return true;
                          ce = "Sq1 Sq1 = " + chow_str(s);
                          return false;
                      });
            add_check(rep, "adem/tautau/" + v.name() + "/" + cellname(v, i), "tau_{-1} o tau_{-1} = 0",
                      [&](std::string& ce) {
                          FiltrationElement x = filtration_element(k_cell(v, i), d.cell_dim(i));
                          FiltrationElement t2 = tau(-1, tau(-1, x));
                          if (k_is_zero(t2.underlying)) return true;
                          ce = "tau tau = " + k_str(t2.underlying);
                          return false;
                      });
            add_check(rep, "adem/grsq1sq1/" + v.name() + "/" + cellname(v, i),
                      "the composite is zero (gr)", [&](std::string& ce) {
                          int p = d.cell_dim(i);
                          GrClass g = phi(chow_cell(v, i, true), p);
                          GrClass s = gr_steenrod(gr_steenrod(g));
                          if (gr_is_zero(s)) return true;
                          ce = "S1 S1 != 0";
                          return false;
                      });
        }
    }
}

void suite_descent(Report& rep, int max_dim, int max_quadric) {
    for (const auto& v : varieties_leq(max_dim, max_quadric)) {
        for (const auto& c : descent_compare(v)) {
            add_check(rep,
                      "descent/compare/" + v.name() + "/" + cellname(v, c.cell),
                      "induced gr operation lifts Sq_1",
                      [&](std::string& ce) {
                          if (c.pass) return true;
                          ce = "S1(phi(x)) != phi(Sq1(x)) at p=" + std::to_string(c.p);
                          return false;
                      });
        }
        const auto& d = data_for(v);
        for (int i = 0; i < d.ncells(); ++i) {
            add_check(rep, "descent/lift-independence/" + v.name() + "/" + cellname(v, i),
                      "well-definedness of S1", [&](std::string& ce) {
                          GrClass g = phi(chow_cell(v, i, true), d.cell_dim(i));
                          if (gr_steenrod_lift_independent(g, 20, steenrod_seed())) return true;
                          ce = "randomized lift disagreed";
                          return false;
                      });
        }
    }
}

void suite_adams(Report& rep, int max_dim, int max_quadric) {
    const long ks[] = {-2, -1, 2, 3};

    // composition on projective spaces
    for (int n = 1; n <= std::min(max_dim, 5); ++n) {
        SplitVariety v = SplitVariety::proj_space(n);
        const auto& d = data_for(v);
        for (long k : ks)
            for (long k2 : ks)
                for (int i = 0; i < d.ncells(); ++i) {
                    std::string id = "adams/compose/P" + std::to_string(n) + "/k" +
                                     std::to_string(k) + ",k" + std::to_string(k2) + "/" +
                                     cellname(v, i);
                    add_check(rep, id, "psi^k o psi^k' = psi^{kk'}", [&](std::string& ce) {
                        KClass x = k_cell(v, i);
                        KClass lhs = adams_psi(k, adams_psi(k2, x));
                        KClass rhs = adams_psi(k * k2, x);
                        if (lhs == rhs) return true;
                        ce = k_str(lhs) + " vs " + k_str(rhs);
                        return false;
                    });
                }
    }

    // involution psi_{-1} psi_{-1} = id on every catalog K0
    for (const auto& v : varieties_leq(max_dim, max_quadric)) {
        const auto& d = data_for(v);
        add_check(rep, "adams/involution/" + v.name(), "k k' = 1 case", [&](std::string& ce) {
            const QMat& p = d.psi_minus1();
            if (p * p == QMat::identity(d.ncells())) return true;
            ce = "psi_{-1}^2 != id";
            return false;
        });

        // theta multiplicativity and rank laws
        auto pool = split_pool(v);
        for (long k : ks) {
            for (size_t a = 0; a < pool.size(); ++a) {
                std::string id = "adams/theta-rank/" + v.name() + "/k" + std::to_string(k) + "/y" +
                                 std::to_string(a);
                add_check(rep, id, "rank theta^k(y) = k^{rank y}", [&](std::string& ce) {
                    KClass t = bott_theta(k, pool[a]);
                    Coefficient r = k_rank(t);
                    Coefficient expect = bott_theta_rank(k, pool[a]);
                    if (r == expect) return true;
                    ce = "rank theta = " + r.str() + ", expected " + expect.str();
                    return false;
                });
                for (size_t b = a; b < pool.size(); ++b) {
                    std::string id2 = "adams/theta-mult/" + v.name() + "/k" + std::to_string(k) +
                                      "/y" + std::to_string(a) + ",y" + std::to_string(b);
                    add_check(rep, id2, "theta multiplicativity", [&](std::string& ce) {
                        QMat lhs = bott_theta_op(k, pool[a] + pool[b]);
                        QMat rhs = bott_theta_op(k, pool[a]) * bott_theta_op(k, pool[b]);
                        if (lhs == rhs) return true;
                        ce = "theta(y+y') != theta(y) theta(y')";
                        return false;
                    });
                }
            }

            // generic-rank scaling of the homological operation
            if (k == -1 || d.k_ring_available()) {
                for (int i = 0; i < d.ncells(); ++i) {
                    std::string id = "adams/rank-scaling/" + v.name() + "/k" + std::to_string(k) +
                                     "/" + cellname(v, i);
                    add_check(rep, id, "theta multiplicativity, rank-0 case", [&](std::string& ce) {
                        KClass x = k_cell(v, i);
                        Coefficient lhs = k_rank(homological_adams(k, x));
                        Coefficient kinv = (k == 1 || k == -1)
                                               ? Coefficient((k == -1 && (v.dim() & 1)) ? -1 : 1)
                                               : Coefficient(1, static_cast<unsigned>(v.dim()), k);
                        Coefficient rhs = kinv * k_rank(x);
                        if (lhs == rhs) return true;
                        ce = "rank psi_k = " + lhs.str() + ", expected " + rhs.str();
                        return false;
                    });
                }
            }
        }
    }

    // external products for k = -1 on P2 x P3
    if (max_dim >= 5) {
        SplitVariety a = SplitVariety::proj_space(2);
        SplitVariety b = SplitVariety::proj_space(3);
        SplitVariety v = SplitVariety::product(a, b);
        const auto& da = data_for(a);
        const auto& db = data_for(b);
        for (int i = 0; i < da.ncells(); ++i)
            for (int j = 0; j < db.ncells(); ++j) {
                std::string id =
                    "adams/extprod/P2xP3/" + cellname(a, i) + "," + cellname(b, j);
                add_check(rep, id, "rank psi_k(x) = k^{-dim} rank(x)", [&](std::string& ce) {
                    KClass x = k_cell(a, i);
                    KClass y = k_cell(b, j);
                    KClass lhs = homological_adams(-1, k_external(x, y, v));
                    KClass rhs = k_external(homological_adams(-1, x), homological_adams(-1, y), v);
                    if (lhs == rhs) return true;
                    ce = k_str(lhs) + " vs " + k_str(rhs);
                    return false;
                });
            }
    }
}

void suite_riemann_roch(Report& rep, int max_dim, int max_quadric) {
    for (const auto& v : varieties_leq(max_dim, max_quadric)) {
        const auto& d = data_for(v);
        std::vector<long> ks{-1};
        if (d.k_ring_available()) {
            ks.push_back(2);
            ks.push_back(3);
        }
        for (long k : ks)
            for (int i = 0; i < d.ncells(); ++i) {
                std::string id = "riemann-roch/chi/" + v.name() + "/k" + std::to_string(k) + "/" +
                                 cellname(v, i);
                add_check(rep, id, "chi(psi_{-1} x) = chi(x)", [&](std::string& ce) {
                    KClass x = k_cell(v, i);
                    Coefficient lhs = k_chi(homological_adams(k, x));
                    Coefficient rhs = k_chi(x);
                    if (lhs == rhs) return true;
                    ce = "chi(psi_k x) = " + lhs.str() + ", chi(x) = " + rhs.str();
                    return false;
                });
            }

        // chi of twists against the closed-form Hilbert polynomials
        if (v.nfactors() == 1) {
            const auto& fd = d.factor_data()[0];
            for (int a = -4; a <= 4; ++a)
                for (int i = 0; i < d.ncells(); ++i) {
                    const Cell& cell = fd.cells[i];
                    std::string id = "riemann-roch/twist-chi/" + v.name() + "/a" +
                                     std::to_string(a) + "/" + cellname(v, i);
                    add_check(rep, id, "chi twist oracle", [&](std::string& ce) {
                        KClass x = k_apply(fd.line_op(a), k_cell(v, i));
                        Coefficient chi = k_chi(x);
                        Int expect = cell.is_linear ? proj_chi(a, cell.dim)
                                                    : quadric_chi(a, fd.factor.param - cell.codim);
                        if (chi == Coefficient(expect)) return true;
                        ce = "chi = " + chi.str() + ", oracle " + expect.get_str();
                        return false;
                    });
                }
        }
    }
}

void suite_commutes(Report& rep, int max_dim, int max_quadric) {
    for (const auto& v : varieties_leq(max_dim, max_quadric)) {
        const auto& d = data_for(v);
        for (int i = 0; i < d.ncells(); ++i) {
            const int p = d.cell_dim(i);
            std::string id = "commutes/defect/" + v.name() + "/" + cellname(v, i);
            add_check(rep, id, "beta tau - tau beta = 2(-1)^{p+1} id", [&](std::string& ce) {
                FiltrationElement x = filtration_element(k_cell(v, i), p);
                KClass bt = tau(-1, x).underlying;                 // beta tau: same class, level p
                KClass tb = tau(-1, beta(x)).underlying;           // tau beta, level p
                KClass defect = bt - tb;
                Coefficient want((p + 1) % 2 == 0 ? 2 : -2);       // 2(-1)^{-p-1}
                KClass expect = k_scale(want, k_cell(v, i));
                if (defect == expect) return true;
                ce = "defect " + k_str(defect) + ", expected " + k_str(expect);
                return false;
            });
        }
    }
}

void suite_extprod(Report& rep, int max_dim, int max_quadric) {
    const char* prods[] = {"P2xP3", "P1xP1"};
    for (const char* pn : prods) {
        SplitVariety v = SplitVariety::parse(pn);
        if (v.dim() > max_dim) continue;
        SplitVariety a = v.slice(0, 1);
        SplitVariety b = v.slice(1, 2);
        const auto& da = data_for(a);
        const auto& db = data_for(b);
        for (int i = 0; i < da.ncells(); ++i)
            for (int j = 0; j < db.ncells(); ++j) {
                const int p = da.cell_dim(i), r = db.cell_dim(j);
                std::string id = std::string("extprod/") + pn + "/" + cellname(a, i) + "," +
                                 cellname(b, j);
                add_check(rep, id, "external product law for tau", [&](std::string& ce) {
                    FiltrationElement x = filtration_element(k_cell(a, i), p);
                    FiltrationElement y = filtration_element(k_cell(b, j), r);
                    FiltrationElement xy =
                        filtration_element(k_external(x.underlying, y.underlying, v), p + r);
                    KClass lhs = tau(-1, xy).underlying;
                    KClass tx = tau(-1, x).underlying;
                    KClass ty = tau(-1, y).underlying;
                    Coefficient ks((r & 1) ? -1 : 1);  // k^s = (-1)^{-r}
                    Coefficient kq((p & 1) ? -1 : 1);  // k^q = (-1)^{-p}
                    KClass rhs = k_scale(ks, k_external(tx, y.underlying, v)) +
                                 k_scale(kq, k_external(x.underlying, ty, v)) +
                                 k_external(tx, ty, v);  // beta is the identity on classes
                    if (lhs == rhs) return true;
                    ce = k_str(lhs) + " vs " + k_str(rhs);
                    return false;
                });
            }
    }
}

void suite_lci(Report& rep, int max_dim, int max_quadric) {
    for (const auto& f : catalog_morphisms(max_dim, max_quadric)) {
        if (f.source.dim() > max_dim || f.target.dim() > max_dim) continue;
        // K-theoretic diagonal needs the ring structure
        if (f.kind == MorphKind::Diagonal && !data_for(f.source).k_ring_available()) continue;
        const auto& dt = data_for(f.target);
        const int rd = morphism_rel_dim(f);
        QMat theta_tf = bott_theta_op(-1, f.tangent);
        Coefficient krank(((-rd) & 1) ? -1 : 1);  // (-1)^{rank T_f}
        for (int j = 0; j < dt.ncells(); ++j) {
            const int p = dt.cell_dim(j);
            std::string id = "lci/" + f.name + "/" + cellname(f.target, j);
            add_check(rep, id, "tau pullback along lci morphisms", [&](std::string& ce) {
                FiltrationElement y = filtration_element(k_cell(f.target, j), p);
                KClass lhs = k_pullback(f, tau(-1, y).underlying);
                KClass fy = k_pullback(f, y.underlying);
                FiltrationElement fye = filtration_element(fy, p + rd);
                KClass t1 = k_apply(theta_tf, tau(-1, fye).underlying);
                // pi^{-1}(T_f) = theta^{-1}(T_f) - (-1)^{rank T_f}
                KClass pi = k_apply(theta_tf, fy) - k_scale(krank, fy);
                Coefficient sign(((p + rd) & 1) ? -1 : 1);  // (-1)^{-p-d}
                KClass rhs = t1 + k_scale(sign, pi);
                if (lhs == rhs) return true;
                ce = k_str(lhs) + " vs " + k_str(rhs);
                return false;
            });
        }
    }

    // additivity ledger for pi^k
    for (const auto& v : varieties_leq(std::min(max_dim, 4), max_quadric)) {
        auto pool = split_pool(v);
        const auto& d = data_for(v);
        for (long k : {-1L, 2L}) {
            for (size_t a = 0; a < pool.size(); ++a)
                for (size_t b = 0; b < pool.size(); ++b) {
                    std::string id = "lci/pi-additivity/" + v.name() + "/k" + std::to_string(k) +
                                     "/y" + std::to_string(a) + ",y" + std::to_string(b);
                    add_check(rep, id, "pi^k additivity", [&](std::string& ce) {
                        auto pi_op = [&](const SplitKClass& y) {
                            QMat th = bott_theta_op(k, y);
                            Coefficient r = bott_theta_rank(k, y);
                            return th - QMat::identity(d.ncells()).scaled(r);
                        };
                        QMat lhs = pi_op(pool[a] + pool[b]);
                        QMat rhs = bott_theta_op(k, pool[a]) * pi_op(pool[b]) +
                                   pi_op(pool[a]).scaled(bott_theta_rank(k, pool[b]));
                        if (lhs == rhs) return true;
                        ce = "pi^k(x+y) decomposition failed";
                        return false;
                    });
                }
        }
    }
}

void suite_corr(Report& rep, int max_dim, int max_quadric) {
    for (int dd : {2, 3}) {
        if (dd > max_dim || dd > max_quadric) continue;
        SplitVariety q = SplitVariety::split_quadric(dd);
        SplitVariety qq = SplitVariety::product(q, q);
        const auto& dq = data_for(q);
        const auto& dqq = data_for(qq);

        // diagonal has multiplicity 1
        add_check(rep, "corr/diag-mult/" + qq.name(), "q_*[Delta] = [X]", [&](std::string& ce) {
            CatalogMorphism diag = diagonal_morphism(q);
            ChowClass dclass = chow_pushforward(diag, chow_fundamental(q, true));
            Correspondence r = make_correspondence(qq, 1, dclass);
            Int m = multiplicity(r);
            if (m == 1) return true;
            ce = "multiplicity = " + m.get_str();
            return false;
        });

        // Delta_* = id
        for (int i = 0; i < dq.ncells(); ++i) {
            add_check(rep, "corr/diag-identity/" + qq.name() + "/" + cellname(q, i),
                      "r_* via Delta", [&](std::string& ce) {
                          CatalogMorphism diag = diagonal_morphism(q);
                          ChowClass dclass = chow_pushforward(diag, chow_fundamental(q, true));
                          Correspondence r = make_correspondence(qq, 1, dclass);
                          ChowClass x = chow_cell(q, i, true);
                          ChowClass out = corr_pushforward(r, x);
                          if (out == x) return true;
                          ce = "Delta_*(" + cellname(q, i) + ") = " + chow_str(out);
                          return false;
                      });
        }

        // degree chain over all basis correspondences and basis classes
        CatalogMorphism qproj = projection_morphism(qq, 0, 1);
        CatalogMorphism pproj = projection_morphism(qq, 1, 2);
        for (int rc = 0; rc < dqq.ncells(); ++rc) {
            if (dqq.cell_dim(rc) != dd) continue;
            for (int i = 0; i < dq.ncells(); ++i) {
                std::string id = "corr/chain/" + qq.name() + "/r=" + cellname(qq, rc) + "/x=" +
                                 cellname(q, i);
                add_check(rep, id, "mod-2 degree chain", [&](std::string& ce) {
                    ChowClass r = chow_cell(qq, rc, true);
                    ChowClass x = chow_cell(q, i, true);
                    ChowClass inner = chow_pullback(qproj, x) * r;
                    Int v1 = chow_degree(sq1(chow_pushforward(pproj, inner)));
                    Int v2 = chow_degree(chow_pushforward(pproj, sq1(inner)));
                    Int v3 = chow_degree(chow_pushforward(qproj, sq1(inner)));
                    Int v4 = chow_degree(sq1(x * chow_pushforward(qproj, r)));
                    if (v1 == v2 && v2 == v3 && v3 == v4) return true;
                    ce = "chain " + v1.get_str() + "," + v2.get_str() + "," + v3.get_str() + "," +
                         v4.get_str();
                    return false;
                });
            }
        }
    }
}

}  // namespace

size_t Report::passed() const {
    size_t n = 0;
    for (const auto& c : checks)
        if (c.pass) ++n;
    return n;
}

size_t Report::failed() const { return checks.size() - passed(); }

const std::vector<std::string>& verify_suites() {
    static const std::vector<std::string> names = {"cartan",  "pullback", "adem",
                                                   "descent", "adams",    "riemann-roch",
                                                   "commutes", "extprod", "lci", "corr"};
    return names;
}

Report run_suite(const std::string& suite, int max_dim, int max_quadric) {
    Report rep;
    rep.suite = suite;
    if (suite == "cartan")
        suite_cartan(rep, max_dim, max_quadric);
    else if (suite == "pullback")
        suite_pullback(rep, max_dim, max_quadric);
    else if (suite == "adem")
        suite_adem(rep, max_dim, max_quadric);
    else if (suite == "descent")
        suite_descent(rep, max_dim, max_quadric);
    else if (suite == "adams")
        suite_adams(rep, max_dim, max_quadric);
    else if (suite == "riemann-roch")
        suite_riemann_roch(rep, max_dim, max_quadric);
    else if (suite == "commutes")
        suite_commutes(rep, max_dim, max_quadric);
    else if (suite == "extprod")
        suite_extprod(rep, max_dim, max_quadric);
    else if (suite == "lci")
        suite_lci(rep, max_dim, max_quadric);
    else if (suite == "corr")
        suite_corr(rep, max_dim, max_quadric);
    else
        throw domain_error("unknown verification suite: " + suite);
    std::sort(rep.checks.begin(), rep.checks.end(),
              [](const CheckResult& a, const CheckResult& b) { return a.id < b.id; });
    return rep;
}

std::vector<Report> run_suites(const std::string& name, int max_dim, int max_quadric) {
    std::vector<Report> out;
    if (name == "all") {
        for (const auto& s : verify_suites()) out.push_back(run_suite(s, max_dim, max_quadric));
    } else {
        out.push_back(run_suite(name, max_dim, max_quadric));
    }
    return out;
}

}  // namespace ck
