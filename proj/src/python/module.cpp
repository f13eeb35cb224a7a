// _ckops: python bindings for the main operations.  Coordinates travel as
// plain lists (ints in, exact decimal strings out) over the cell basis.

#include "ckops/verify.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace ck;

namespace {

SplitVariety var(const std::string& name) { return SplitVariety::parse(name); }

ChowClass chow_from(const SplitVariety& v, const std::vector<long>& coeffs, bool mod2) {
    const auto& d = data_for(v);
    if (static_cast<int>(coeffs.size()) != d.ncells())
        throw domain_error("expected " + std::to_string(d.ncells()) + " coordinates on " +
                           v.name());
    ChowClass x = chow_zero(v, false);
    for (size_t i = 0; i < coeffs.size(); ++i) x.c[i] = coeffs[i];
    return mod2 ? reduce_mod2(x) : x;
}

KClass k_from(const SplitVariety& v, const std::vector<long>& coeffs) {
    const auto& d = data_for(v);
    if (static_cast<int>(coeffs.size()) != d.ncells())
        throw domain_error("expected " + std::to_string(d.ncells()) + " coordinates on " +
                           v.name());
    KClass x = k_zero(v);
    for (size_t i = 0; i < coeffs.size(); ++i) x.c[i] = Coefficient(coeffs[i]);
    return x;
}

std::vector<long> mod2_out(const ChowClass& x) {
    std::vector<long> out;
    for (const auto& c : x.c) {
        Int r = c % 2;
        if (r < 0) r += 2;
        out.push_back(r.get_si());
    }
    return out;
}

std::vector<std::string> int_out(const ChowClass& x) {
    std::vector<std::string> out;
    for (const auto& c : x.c) out.push_back(c.get_str());
    return out;
}

std::vector<std::string> k_out(const KClass& x) {
    std::vector<std::string> out;
    for (const auto& c : x.c) out.push_back(c.str());
    return out;
}

}  // namespace

PYBIND11_MODULE(_ckops, m) {
    m.doc() = "exact operation calculus on split cellular varieties";

    m.def("catalog", [](int max_dim, int max_quadric) {
        std::vector<std::string> names;
        for (const auto& v : catalog_varieties(max_dim, max_quadric)) names.push_back(v.name());
        return names;
    }, py::arg("max_dim"), py::arg("max_quadric") = 8);

    m.def("dim", [](const std::string& v) { return var(v).dim(); });
    m.def("basis", [](const std::string& v) {
        const auto& d = data_for(var(v));
        std::vector<std::string> names;
        for (int i = 0; i < d.ncells(); ++i) names.push_back(d.cell_name(i));
        return names;
    });
    m.def("cell_dims", [](const std::string& v) {
        const auto& d = data_for(var(v));
        std::vector<int> dims;
        for (int i = 0; i < d.ncells(); ++i) dims.push_back(d.cell_dim(i));
        return dims;
    });

    m.def("sq1", [](const std::string& v, const std::vector<long>& x) {
        return mod2_out(sq1(chow_from(var(v), x, true)));
    }, "homological first Steenrod square, mod-2 coordinates");
    m.def("sq1_coh", [](const std::string& v, const std::vector<long>& x) {
        return mod2_out(sq1_coh(chow_from(var(v), x, true)));
    });
    m.def("chow_mul", [](const std::string& v, const std::vector<long>& a,
                         const std::vector<long>& b) {
        SplitVariety w = var(v);
        return int_out(chow_from(w, a, false) * chow_from(w, b, false));
    });
    m.def("chern_of_tangent", [](const std::string& v, int codim) {
        return int_out(chern_class(tangent_class(var(v)), codim));
    });

    m.def("adams_psi", [](long k, const std::string& v, const std::vector<long>& x) {
        return k_out(adams_psi(k, k_from(var(v), x)));
    });
    m.def("homological_adams", [](long k, const std::string& v, const std::vector<long>& x) {
        return k_out(homological_adams(k, k_from(var(v), x)));
    });
    m.def("theta_of_tangent", [](long k, const std::string& v) {
        SplitVariety w = var(v);
        const auto& d = data_for(w);
        QMat op = bott_theta_op(k, tangent_class(w));
        std::vector<std::vector<std::string>> out;
        for (int i = 0; i < d.ncells(); ++i) {
            std::vector<std::string> col;
            for (int r = 0; r < d.ncells(); ++r) col.push_back(op.at(r, i).str());
            out.push_back(std::move(col));
        }
        return out;
    }, "columns of theta^k(T_X) over the cell basis");

    m.def("tau", [](const std::string& v, const std::vector<long>& x, int level) {
        FiltrationElement fe = filtration_element(k_from(var(v), x), level);
        return k_out(tau(-1, fe).underlying);
    }, "tau_{-1} on a certified F_level element");
    m.def("gr_steenrod", [](const std::string& v, int p, const std::vector<long>& x) {
        SplitVariety w = var(v);
        const auto& d = data_for(w);
        GrClass g{w, p, {}};
        if (static_cast<int>(x.size()) != d.ncells())
            throw domain_error("expected " + std::to_string(d.ncells()) + " coordinates");
        for (long c : x) g.c.push_back(Int((c % 2 + 2) % 2));
        GrClass s = gr_steenrod(g);
        std::vector<long> out;
        for (const auto& c : s.c) out.push_back(c.get_si());
        return out;
    });

    m.def("verify", [](const std::string& suite, int max_dim, int max_quadric) {
        py::list out;
        for (const auto& rep : run_suites(suite, max_dim, max_quadric)) {
            py::dict r;
            r["suite"] = rep.suite;
            r["passed"] = rep.passed();
            r["failed"] = rep.failed();
            py::list fails;
            for (const auto& c : rep.checks)
                if (!c.pass) fails.append(py::make_tuple(c.id, c.anchor, c.counterexample));
            r["failures"] = fails;
            out.append(r);
        }
        return out;
    }, py::arg("suite"), py::arg("max_dim") = 6, py::arg("max_quadric") = 8);

    m.def("torsion",
          [](int d, const std::vector<std::tuple<long, std::string, std::string>>& terms,
             bool closure_asserted) {
              SplitVariety q = SplitVariety::split_quadric(d);
              SplitVariety qq = SplitVariety::product(q, q);
              const auto& dq = data_for(q);
              const auto& dqq = data_for(qq);
              ChowClass carrier = chow_zero(qq, false);
              for (const auto& [c, left, right] : terms) {
                  int li = dq.cell_by_name(left), ri = dq.cell_by_name(right);
                  if (li < 0 || ri < 0) throw domain_error("unknown basis name");
                  carrier.c[dqq.flatten({li, ri})] += c;
              }
              Correspondence r = make_correspondence(qq, 1, reduce_mod2(carrier));
              TorsionVerdict v = torsion_decision(d, r, closure_asserted);
              py::dict out;
              out["multiplicity"] = v.mult.get_si();
              out["applicable"] = v.applicable;
              out["witness"] = v.witness_defined ? py::cast(v.witness.get_si()) : py::none();
              out["message"] = v.message;
              return out;
          },
          py::arg("d"), py::arg("terms"), py::arg("closure_asserted") = false);

    py::register_exception<domain_error>(m, "DomainError");
    py::register_exception<unsupported_domain>(m, "UnsupportedDomain");
    py::register_exception<certificate_error>(m, "CertificateError");
    py::register_exception<model_falsification>(m, "ModelFalsification");
    py::register_exception<odd_degree_error>(m, "OddDegreeError");
}
