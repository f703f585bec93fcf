#include "qspec/serialize.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <regex>
#include <sstream>

#include "qspec/errors.hpp"

namespace qspec {

namespace {

Json weight_json(const Weight& w) { return Json(w.coords()); }

Weight weight_from_json(const Json& j) {
  if (!j.is_array()) throw DomainError("weight must be a JSON array of integers");
  std::vector<Weight::value_type> coords;
  for (const auto& c : j) {
    if (!c.is_number_integer()) throw DomainError("weight coordinates must be integers");
    coords.push_back(c.get<Weight::value_type>());
  }
  return Weight(std::move(coords));
}

Json finite_or_null(double x) { return std::isfinite(x) ? Json(x) : Json(nullptr); }

void write_string(std::ostringstream& os, const std::string& s) { os << Json(s).dump(); }

void write(std::ostringstream& os, const Json& j, int depth) {
  const std::string pad(2 * (depth + 1), ' ');
  const std::string close_pad(2 * depth, ' ');
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        os << "{}";
        return;
      }
      os << "{\n";
      bool first = true;
      for (const auto& [key, value] : j.items()) {
        if (!first) os << ",\n";
        first = false;
        os << pad;
        write_string(os, key);
        os << ": ";
        write(os, value, depth + 1);
      }
      os << "\n" << close_pad << "}";
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        os << "[]";
        return;
      }
      // Arrays of scalars stay on one line.
      bool flat = true;
      for (const auto& v : j)
        if (v.is_structured() && !(v.is_array() && std::all_of(v.begin(), v.end(), [](const Json& x) {
                                     return x.is_primitive();
                                   })))
          flat = false;
      if (flat) {
        os << "[";
        bool first = true;
        for (const auto& v : j) {
          if (!first) os << ", ";
          first = false;
          write(os, v, depth + 1);
        }
        os << "]";
        return;
      }
      os << "[\n";
      bool first = true;
      for (const auto& v : j) {
        if (!first) os << ",\n";
        first = false;
        os << pad;
        write(os, v, depth + 1);
      }
      os << "\n" << close_pad << "]";
      return;
    }
    case Json::value_t::number_float: {
      const double x = j.get<double>();
      if (!std::isfinite(x)) {
        os << "null";
        return;
      }
      char buf[40];
      std::snprintf(buf, sizeof buf, "%.17g", x);
      os << buf;
      return;
    }
    default:
      os << j.dump();
  }
}

}  // namespace

Json to_json(const LaurentPoly& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back(Json::array({e, c.str()}));
  return Json{{"terms", terms}};
}

LaurentPoly laurent_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array())
    throw DomainError("Laurent polynomial JSON needs a \"terms\" array");
  LaurentPoly p;
  for (const auto& t : j["terms"]) {
    if (!t.is_array() || t.size() != 2 || !t[0].is_number_integer() || !t[1].is_string())
      throw DomainError("each term must be [exponent, \"coefficient\"]");
    const auto& digits = t[1].get_ref<const std::string&>();
    static const std::regex decimal("-?[0-9]+");
    if (!std::regex_match(digits, decimal)) throw DomainError("coefficient '" + digits + "' is not a decimal integer");
    p.add_term(t[0].get<LaurentPoly::Exponent>(), BigInt(digits));
  }
  return p;
}

Json to_json(const QuantumDimension& d) {
  return Json{{"exact", to_json(d.exact)}, {"classical", d.classical_value.str()}};
}

Json to_json(const WeightMultiplicityTable& t) {
  Json entries = Json::array();
  for (const auto& [mu, m] : t.entries()) entries.push_back(Json::array({weight_json(mu), m}));
  return Json{{"highest", weight_json(t.highest())}, {"entries", entries}};
}

WeightMultiplicityTable table_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("highest") || !j.contains("entries"))
    throw DomainError("multiplicity table JSON needs \"highest\" and \"entries\"");
  WeightMultiplicityTable t(weight_from_json(j["highest"]));
  for (const auto& e : j["entries"]) {
    if (!e.is_array() || e.size() != 2 || !e[1].is_number_unsigned())
      throw DomainError("each entry must be [[coords...], multiplicity]");
    t.add(weight_from_json(e[0]), e[1].get<std::uint64_t>());
  }
  return t;
}

Json to_json(const ZetaResult& z) {
  Json ratios = Json::array();
  for (double r : z.per_tower_ratio) ratios.push_back(finite_or_null(r));
  return Json{{"value", finite_or_null(z.value)},
              {"terms_used", z.terms_used},
              {"tail_estimate", finite_or_null(z.tail_estimate)},
              {"converged", z.converged},
              {"per_tower_ratio", ratios}};
}

Json to_json(const DimensionEstimate& e) {
  return Json{{"estimate", e.value},
              {"probe", e.probe},
              {"mean_ratio", e.mean_ratio},
              {"per_tower_ratio", e.per_tower_ratio},
              {"per_tower_terms", e.per_tower_terms}};
}

Json to_json(const ResidueResult& r) {
  return Json{{"limit", r.value},
              {"epsilons", r.epsilons},
              {"scaled_values", r.scaled_values},
              {"extrapolated", r.extrapolated},
              {"relative_change", r.relative_change}};
}

Json to_json(const std::vector<DefectSample>& scan) {
  Json rows = Json::array();
  for (const auto& d : scan) rows.push_back(Json{{"s", d.s}, {"defect", d.defect}});
  return rows;
}

Json to_json(const SpectrumModel& m) {
  Json towers = Json::array();
  for (const auto& t : m.towers) {
    towers.push_back(Json{{"k", t.k},
                          {"base", weight_json(t.family.base())},
                          {"direction", weight_json(t.family.direction())},
                          {"eig_model", to_string(t.eig_model)},
                          {"eig_offset", t.eig_offset},
                          {"m_start", t.m_start}});
  }
  return Json{{"ell", m.rank}, {"N", m.twist}, {"q", m.q.value()}, {"towers", towers}};
}

SpectrumModel model_from_json(const Json& config, const ModelOptions& defaults) {
  if (!config.is_object()) throw DomainError("model configuration must be a JSON object");
  auto get_int = [&](const Json& obj, const char* key, std::int64_t fallback) -> std::int64_t {
    if (!obj.contains(key)) return fallback;
    if (!obj[key].is_number_integer()) throw DomainError(std::string("\"") + key + "\" must be an integer");
    return obj[key].get<std::int64_t>();
  };
  const auto ell = get_int(config, "ell", 2);
  const auto twist = get_int(config, "N", 0);
  double q = 0.5;
  if (config.contains("q")) {
    if (!config["q"].is_number()) throw DomainError("\"q\" must be a number");
    q = config["q"].get<double>();
  }
  if (ell < 1) throw DomainError("invalid rank " + std::to_string(ell) + " (need ell >= 1)");
  SpectrumModel model = default_model(static_cast<int>(ell), twist, QPoint(q), defaults);

  if (config.contains("towers")) {
    const Json& overrides = config["towers"];
    if (!overrides.is_array()) throw DomainError("\"towers\" must be an array");
    if (overrides.size() > model.towers.size())
      throw DomainError("\"towers\" lists " + std::to_string(overrides.size()) + " entries but the model has " +
                        std::to_string(model.towers.size()) + " towers");
    for (std::size_t i = 0; i < overrides.size(); ++i) {
      const Json& o = overrides[i];
      if (!o.is_object()) throw DomainError("tower override must be an object");
      TowerSpec& t = model.towers[i];
      if (o.contains("k") && get_int(o, "k", t.k) != t.k)
        throw DomainError("tower " + std::to_string(i) + " has degree k = " + std::to_string(t.k));
      if (o.contains("base")) t.family = HighestWeightFamily(weight_from_json(o["base"]), t.family.direction());
      if (o.contains("eig_model")) {
        if (!o["eig_model"].is_string()) throw DomainError("\"eig_model\" must be a string");
        t.eig_model = parse_eigenvalue_model(o["eig_model"].get<std::string>());
      }
      t.eig_offset = get_int(o, "eig_offset", t.eig_offset);
      t.m_start = get_int(o, "m_start", t.m_start);
    }
  }
  model.validate();
  return model;
}

std::string dump_canonical(const Json& j) {
  std::ostringstream os;
  write(os, j, 0);
  os << "\n";
  return os.str();
}

}  // namespace qspec
