#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qspec/errors.hpp"
#include "qspec/repcore.hpp"
#include "qspec/serialize.hpp"
#include "qspec/spectral.hpp"
#include "qspec/twisted_trace.hpp"
#include "qspec/verify.hpp"
#include "qspec/weight_oracle.hpp"

namespace py = pybind11;
using namespace qspec;

namespace {

py::int_ to_py(const BigInt& x) { return py::int_(py::module_::import("builtins").attr("int")(x.str())); }

py::list laurent_terms(const LaurentPoly& p) {
  py::list terms;
  for (const auto& [e, c] : p.terms()) terms.append(py::make_tuple(e, to_py(c)));
  return terms;
}

py::dict table_dict(const WeightMultiplicityTable& t) {
  py::dict d;
  for (const auto& [mu, m] : t.entries()) d[py::tuple(py::cast(mu.coords()))] = m;
  return d;
}

py::dict zeta_dict(const ZetaResult& z) {
  py::dict d;
  d["value"] = z.value;
  d["terms_used"] = z.terms_used;
  d["tail_estimate"] = z.tail_estimate;
  d["converged"] = z.converged;
  d["per_tower_ratio"] = z.per_tower_ratio;
  return d;
}

SpectrumModel make_model(int ell, double q, std::int64_t twist, const std::string& eig_model) {
  ModelOptions options;
  options.eig_model = parse_eigenvalue_model(eig_model);
  return default_model(ell, twist, QPoint(q), options);
}

}  // namespace

PYBIND11_MODULE(_qspec, m) {
  m.doc() = "Quantum dimensions, weight oracles and weighted spectral zeta functions for U_q(su(l+1))";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<ResourceError>(m, "ResourceError", PyExc_RuntimeError);
  py::register_exception<EstimationFailure>(m, "EstimationFailure", PyExc_RuntimeError);

  m.def(
      "positive_roots", [](int ell) {
        std::vector<std::pair<int, int>> out;
        for (const auto& r : positive_roots(ell)) out.emplace_back(r.i, r.j);
        return out;
      },
      py::arg("ell"));

  m.def(
      "two_rho_pairing", [](const std::vector<std::int64_t>& mu) { return two_rho_pairing(Weight(mu)); },
      py::arg("weight"), "Exponent of q with which K_{2rho} acts on a weight vector.");

  m.def(
      "quantum_dim",
      [](int ell, const std::vector<std::int64_t>& w) {
        const auto qd = quantum_dim(ell, Weight(w));
        py::dict d;
        d["terms"] = laurent_terms(qd.exact);
        d["classical"] = to_py(qd.classical_value);
        return d;
      },
      py::arg("ell"), py::arg("weight"),
      "Exact quantum dimension as {'terms': [(exponent, coefficient)], 'classical': int}.");

  m.def(
      "classical_dim", [](int ell, const std::vector<std::int64_t>& w) { return to_py(classical_dim(ell, Weight(w))); },
      py::arg("ell"), py::arg("weight"));

  m.def(
      "quantum_dim_numeric",
      [](int ell, const std::vector<std::int64_t>& w, double q) { return quantum_dim_numeric(ell, Weight(w), QPoint(q)); },
      py::arg("ell"), py::arg("weight"), py::arg("q"));

  m.def(
      "multiplicities",
      [](int ell, const std::vector<std::int64_t>& w, const std::string& method) {
        if (method == "gt") return table_dict(multiplicities_gt(ell, Weight(w)));
        if (method == "freudenthal") return table_dict(multiplicities_freudenthal(ell, Weight(w)));
        throw DomainError("method must be 'gt' or 'freudenthal'");
      },
      py::arg("ell"), py::arg("weight"), py::arg("method") = "gt");

  m.def(
      "char_at_k2rho",
      [](int ell, const std::vector<std::int64_t>& w, int sign) {
        return laurent_terms(char_at_k2rho(ell, Weight(w), sign));
      },
      py::arg("ell"), py::arg("weight"), py::arg("sign") = 1);

  m.def(
      "zeta",
      [](int ell, double q, double s, const std::string& weight, const std::string& kernel, double tol,
         std::int64_t max_terms, const std::string& eig_model) {
        return zeta_dict(zeta(make_model(ell, q, 0, eig_model), s, parse_weight_kind(weight), parse_kernel(kernel),
                              {tol, max_terms}));
      },
      py::arg("ell"), py::arg("q"), py::arg("s"), py::arg("weight") = "qdim", py::arg("kernel") = "shifted",
      py::arg("tol") = 1e-12, py::arg("max_terms") = 1'000'000, py::arg("eig_model") = "qnumber");

  m.def(
      "spectral_dimension",
      [](int ell, double q, const std::string& weight, const std::string& kernel, double probe) {
        DimensionEstimateOptions opts;
        opts.probe = probe;
        return spectral_dimension_estimate(make_model(ell, q, 0, "qnumber"), parse_weight_kind(weight),
                                           parse_kernel(kernel), opts)
            .value;
      },
      py::arg("ell"), py::arg("q"), py::arg("weight") = "qdim", py::arg("kernel") = "shifted",
      py::arg("probe") = 1.0);

  m.def(
      "residue_limit",
      [](int ell, double q, double p, const std::string& weight, const std::string& kernel) {
        const auto r = residue_limit(make_model(ell, q, 0, "qnumber"), parse_weight_kind(weight), parse_kernel(kernel), p);
        py::dict d;
        d["limit"] = r.value;
        d["scaled_values"] = r.scaled_values;
        d["extrapolated"] = r.extrapolated;
        d["relative_change"] = r.relative_change;
        return d;
      },
      py::arg("ell"), py::arg("q"), py::arg("p"), py::arg("weight") = "qdim", py::arg("kernel") = "shifted");

  m.def(
      "twisted_defect_scan",
      [](Eigen::Index size, double q, double p, const std::vector<double>& s_values, bool bounded) {
        const auto model = shift_model(size, QPoint(q), p, bounded ? ShiftWeights::Bounded : ShiftWeights::Unit);
        std::vector<std::pair<double, double>> out;
        for (const auto& d : twisted_defect_scan(model, s_values)) out.emplace_back(d.s, d.defect);
        return out;
      },
      py::arg("size"), py::arg("q"), py::arg("p"), py::arg("s_values"), py::arg("bounded") = true);

  m.def(
      "verify",
      [](const std::string& profile) {
        const auto report = run_verification(parse_profile(profile));
        py::list checks;
        for (const auto& c : report.checks) checks.append(py::make_tuple(c.name, c.passed, c.detail));
        return checks;
      },
      py::arg("profile") = "quick", "Run the invariant suite; returns (name, passed, detail) tuples.");
}
