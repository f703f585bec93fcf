#include "cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "qspec/errors.hpp"
#include "qspec/repcore.hpp"
#include "qspec/serialize.hpp"
#include "qspec/spectral.hpp"
#include "qspec/twisted_trace.hpp"
#include "qspec/verify.hpp"
#include "qspec/weight_oracle.hpp"

namespace qspec::cli {

namespace {

std::string num17(double x) {
  if (!std::isfinite(x)) return std::isnan(x) ? "nan" : (x > 0 ? "inf" : "-inf");
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

struct ModelFlags {
  int ell = 2;
  double q = 0.5;
  std::int64_t twist = 0;
  std::string config_path;
  std::string eig_model = "qnumber";
  std::int64_t eig_offset = 1;
  std::int64_t m_start = 1;
  CLI::Option* ell_opt = nullptr;
  CLI::Option* q_opt = nullptr;
  CLI::Option* twist_opt = nullptr;

  void attach(CLI::App* app) {
    ell_opt = app->add_option("--ell", ell, "Rank l of su(l+1)");
    q_opt = app->add_option("--q", q, "Deformation parameter, 0 < q < 1");
    twist_opt = app->add_option("--N", twist, "Line-bundle twist label");
    app->add_option("--config", config_path, "JSON model configuration; flags override it");
    app->add_option("--eig-model", eig_model, "Default eigenvalue model: qnumber|pure");
    app->add_option("--eig-offset", eig_offset, "Default eigenvalue offset t");
    app->add_option("--m-start", m_start, "Default first tower index m");
  }

  SpectrumModel build() const {
    Json config = Json::object();
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      if (!in) throw DomainError("cannot open config file '" + config_path + "'");
      try {
        config = Json::parse(in);
      } catch (const Json::parse_error& e) {
        throw DomainError(std::string("config file is not valid JSON: ") + e.what());
      }
    }
    if (ell_opt->count() || !config.contains("ell")) config["ell"] = ell;
    if (q_opt->count() || !config.contains("q")) config["q"] = q;
    if (twist_opt->count() || !config.contains("N")) config["N"] = twist;
    ModelOptions options;
    options.eig_model = parse_eigenvalue_model(eig_model);
    options.eig_offset = eig_offset;
    options.m_start = m_start;
    return model_from_json(config, options);
  }
};

class Output {
 public:
  Output(const std::string& path, std::ostream& fallback) : fallback_(fallback) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw DomainError("cannot open output file '" + path + "'");
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : fallback_; }

 private:
  std::ofstream file_;
  std::ostream& fallback_;
};

Weight parse_weight(const std::vector<std::int64_t>& coords, int ell) {
  Weight w(coords);
  RootSystem(ell).check_weight(w);
  return w;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quantum dimensions and weighted spectral zeta functions for U_q(su(l+1))", "qspec"};
  app.require_subcommand(1);
  std::string output_path;
  app.add_option("-o,--output", output_path, "Write results to this file instead of stdout");

  // qdim
  auto* qdim = app.add_subcommand("qdim", "Quantum dimension of a highest-weight representation");
  int qdim_ell = 1;
  std::vector<std::int64_t> qdim_weight;
  std::optional<double> qdim_q;
  bool qdim_classical = false;
  qdim->add_option("--ell", qdim_ell, "Rank l")->required();
  qdim->add_option("--weight", qdim_weight, "Highest weight, comma separated")->required()->delimiter(',');
  qdim->add_option("--q", qdim_q, "Also evaluate numerically at this q");
  qdim->add_flag("--classical", qdim_classical, "Print only the classical dimension");

  // weights
  auto* weights = app.add_subcommand("weights", "Weight multiplicities of a highest-weight representation");
  int w_ell = 1;
  std::vector<std::int64_t> w_weight;
  std::string w_method = "gt";
  weights->add_option("--ell", w_ell, "Rank l")->required();
  weights->add_option("--weight", w_weight, "Highest weight, comma separated")->required()->delimiter(',');
  weights->add_option("--method", w_method, "gt|freudenthal|compare")
      ->check(CLI::IsMember({"gt", "freudenthal", "compare"}));

  // zeta
  auto* zeta_cmd = app.add_subcommand("zeta", "Weighted spectral zeta function of the tower model");
  ModelFlags zeta_model;
  zeta_model.attach(zeta_cmd);
  std::vector<double> zeta_s;
  std::string zeta_weight = "qdim", zeta_kernel = "shifted", zeta_format = "json";
  ZetaOptions zeta_opts;
  zeta_cmd->add_option("--s", zeta_s, "Values of s, comma separated")->required()->delimiter(',');
  zeta_cmd->add_option("--weight", zeta_weight, "qdim|qdim-inverse|classical|count|leading-term");
  zeta_cmd->add_option("--kernel", zeta_kernel, "shifted|pure");
  zeta_cmd->add_option("--tol", zeta_opts.tol, "Absolute tail tolerance");
  zeta_cmd->add_option("--max-terms", zeta_opts.max_terms, "Terms per tower before giving up");
  zeta_cmd->add_option("--format", zeta_format, "json|csv")->check(CLI::IsMember({"json", "csv"}));

  // specdim
  auto* specdim = app.add_subcommand("specdim", "Estimate the spectral dimension from term ratios");
  ModelFlags spec_model;
  spec_model.attach(specdim);
  std::string spec_weight = "qdim", spec_kernel = "shifted";
  DimensionEstimateOptions spec_opts;
  specdim->add_option("--weight", spec_weight, "qdim|qdim-inverse|classical|count|leading-term");
  specdim->add_option("--kernel", spec_kernel, "shifted|pure");
  specdim->add_option("--probe", spec_opts.probe, "Probe exponent s0");
  specdim->add_option("--max-terms", spec_opts.max_terms, "Terms per tower before giving up");

  // residue
  auto* residue = app.add_subcommand("residue", "Residue (s - p) zeta(s) as s -> p+");
  ModelFlags res_model;
  res_model.attach(residue);
  std::string res_weight = "qdim", res_kernel = "shifted";
  std::optional<double> res_p;
  residue->add_option("--weight", res_weight, "qdim|qdim-inverse|classical|count|leading-term");
  residue->add_option("--kernel", res_kernel, "shifted|pure");
  residue->add_option("--p", res_p, "Abscissa; defaults to the estimated spectral dimension");

  // twisted
  auto* twisted = app.add_subcommand("twisted", "Twisted-trace defect on a truncated modular model");
  Eigen::Index tw_size = 120;
  double tw_q = 0.5, tw_p = 4.0;
  std::vector<double> tw_s = {4.5, 4.25, 4.125, 4.0625};
  std::string tw_shift = "bounded";
  bool tw_no_identity = false;
  int tw_split_k = 0;
  double tw_split_s = 0.0;
  twisted->add_option("--M", tw_size, "Truncation size");
  twisted->add_option("--q", tw_q, "Deformation parameter");
  twisted->add_option("--p", tw_p, "Target spectral dimension");
  twisted->add_option("--s", tw_s, "Values of s > p, comma separated")->delimiter(',');
  twisted->add_option("--shift", tw_shift, "bounded|unit shift weights")->check(CLI::IsMember({"bounded", "unit"}));
  twisted->add_flag("--no-identity", tw_no_identity, "Use the bare shift instead of 1 + shift");
  twisted->add_option("--split-k", tw_split_k, "Also report the commutator splitting defect with this k");
  twisted->add_option("--split-s", tw_split_s, "s for the splitting defect (0 < s/k < 1)");

  // verify
  auto* verify = app.add_subcommand("verify", "Run the invariant suite");
  std::string profile = "quick";
  verify->add_option("--profile", profile, "quick|full")->check(CLI::IsMember({"quick", "full"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kDomainError;
  }

  try {
    Output sink(output_path, out);
    std::ostream& os = sink.stream();

    if (*qdim) {
      const Weight w = parse_weight(qdim_weight, qdim_ell);
      if (qdim_classical) {
        os << classical_dim(qdim_ell, w) << "\n";
        return kSuccess;
      }
      Json j = to_json(quantum_dim(qdim_ell, w));
      j["ell"] = qdim_ell;
      j["weight"] = w.coords();
      if (qdim_q) j["numeric"] = quantum_dim_numeric(qdim_ell, w, QPoint(*qdim_q));
      os << dump_canonical(j);
      return kSuccess;
    }

    if (*weights) {
      const Weight w = parse_weight(w_weight, w_ell);
      const auto limits = OracleLimits::from_environment();
      if (w_method == "compare") {
        const auto gt = multiplicities_gt(w_ell, w, limits);
        const auto fr = multiplicities_freudenthal(w_ell, w, limits);
        const auto diff = diff_tables(gt, fr);
        Json j{{"method", "compare"}, {"table", to_json(gt)}, {"mismatches", diff}};
        os << dump_canonical(j);
        if (!diff.empty()) {
          err << "gt and freudenthal disagree on " << diff.size() << " weights\n";
          return kVerificationFailure;
        }
        return kSuccess;
      }
      const auto table = w_method == "gt" ? multiplicities_gt(w_ell, w, limits)
                                          : multiplicities_freudenthal(w_ell, w, limits);
      os << dump_canonical(to_json(table));
      return kSuccess;
    }

    if (*zeta_cmd) {
      const auto model = zeta_model.build();
      const auto weight = parse_weight_kind(zeta_weight);
      const auto kernel = parse_kernel(zeta_kernel);
      if (zeta_format == "csv") {
        os << "s,value,terms_used,tail_estimate\n";
        for (double s : zeta_s) {
          const auto z = zeta(model, s, weight, kernel, zeta_opts);
          os << num17(s) << "," << num17(z.value) << "," << z.terms_used << "," << num17(z.tail_estimate) << "\n";
        }
        return kSuccess;
      }
      Json results = Json::array();
      for (double s : zeta_s) {
        Json row = to_json(zeta(model, s, weight, kernel, zeta_opts));
        row["s"] = s;
        results.push_back(row);
      }
      os << dump_canonical(Json{{"model", to_json(model)},
                                {"weight", zeta_weight},
                                {"kernel", zeta_kernel},
                                {"tol", zeta_opts.tol},
                                {"results", results}});
      return kSuccess;
    }

    if (*specdim) {
      const auto model = spec_model.build();
      const auto est =
          spectral_dimension_estimate(model, parse_weight_kind(spec_weight), parse_kernel(spec_kernel), spec_opts);
      Json j = to_json(est);
      j["model"] = to_json(model);
      j["weight"] = spec_weight;
      j["kernel"] = spec_kernel;
      os << dump_canonical(j);
      return kSuccess;
    }

    if (*residue) {
      const auto model = res_model.build();
      const auto weight = parse_weight_kind(res_weight);
      const auto kernel = parse_kernel(res_kernel);
      const double p = res_p ? *res_p : spectral_dimension_estimate(model, weight, kernel).value;
      Json j = to_json(residue_limit(model, weight, kernel, p));
      j["p"] = p;
      j["model"] = to_json(model);
      j["weight"] = res_weight;
      j["kernel"] = res_kernel;
      os << dump_canonical(j);
      return kSuccess;
    }

    if (*twisted) {
      const auto model = shift_model(tw_size, QPoint(tw_q), tw_p,
                                     tw_shift == "unit" ? ShiftWeights::Unit : ShiftWeights::Bounded, !tw_no_identity);
      Json checks = Json::array();
      for (double s : tw_s) {
        const auto sides = twisted_trace_check(model, s);
        checks.push_back(Json{{"s", s}, {"lhs", sides.lhs}, {"rhs", sides.rhs}});
      }
      Json j{{"model",
              Json{{"M", tw_size}, {"q", tw_q}, {"p", tw_p}, {"shift", tw_shift}, {"identity", !tw_no_identity}}},
             {"scan", to_json(twisted_defect_scan(model, tw_s))},
             {"trace_check", checks}};
      if (tw_split_k > 0) {
        const double s = tw_split_s > 0.0 ? tw_split_s : 0.75 * tw_split_k;
        const double defect = commutator_split_defect(model.dirac, model.b, s, tw_split_k);
        const double scale = max_abs(resolvent_commutator(model.dirac, model.b, s));
        j["split"] = Json{{"k", tw_split_k}, {"s", s}, {"defect", defect}, {"scale", scale}};
      }
      os << dump_canonical(j);
      return kSuccess;
    }

    if (*verify) {
      const auto report = run_verification(parse_profile(profile));
      os << dump_canonical(report.to_json());
      for (const auto& c : report.checks)
        if (!c.passed) err << "FAIL " << c.name << ": " << c.detail << "\n";
      return report.all_passed() ? kSuccess : kVerificationFailure;
    }
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kDomainError;
  } catch (const ResourceError& e) {
    err << "resource limit: " << e.what() << "\n";
    return kResourceError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternalError;
  }
  return kInternalError;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  argv.push_back("qspec");
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace qspec::cli
