#include "dexlab/report_io.hpp"

#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace dexlab {

namespace {

using nlohmann::json;

json config_to_json(const ExperimentConfig& c) {
  json j;
  j["experiment"] = c.experiment;
  j["scale_k"] = c.scale_k;
  j["alpha"] = c.alpha;
  j["kappa"] = c.kappa;
  j["tolerance_c"] = c.tolerance_c;
  j["seed"] = c.seed;
  // The delivery path is not part of the experiment: identical configs must
  // serialize identically wherever the report lands.
  j["out"] = "";
  j["format"] = c.format;
  j["params"] = json::object();
  for (const auto& [k, v] : c.params) j["params"][k] = v;
  return j;
}

ExperimentConfig config_from_json(const json& j) {
  ExperimentConfig c;
  c.experiment = j.at("experiment").get<std::string>();
  c.scale_k = j.at("scale_k").get<int>();
  c.alpha = j.at("alpha").get<double>();
  c.kappa = j.at("kappa").get<double>();
  c.tolerance_c = j.at("tolerance_c").get<double>();
  c.seed = j.at("seed").get<std::uint64_t>();
  c.out_path = j.at("out").get<std::string>();
  c.format = j.at("format").get<std::string>();
  for (const auto& [k, v] : j.at("params").items()) c.params[k] = v.get<std::string>();
  return c;
}

json audit_to_json(const AuditRecord& a) {
  json j;
  j["subject"] = a.subject;
  j["required"] = a.required;
  j["alpha"] = a.audit.alpha;
  j["kappa"] = a.audit.kappa;
  j["threshold"] = a.audit.threshold;
  j["worst_ratio"] = a.audit.worst_ratio;
  j["worst_window_scale"] = a.audit.worst_window_scale;
  j["worst_window_position"] = a.audit.worst_window_position;
  j["passed"] = a.audit.passed;
  return j;
}

AuditRecord audit_from_json(const json& j) {
  AuditRecord a;
  a.subject = j.at("subject").get<std::string>();
  a.required = j.at("required").get<bool>();
  a.audit.alpha = j.at("alpha").get<double>();
  a.audit.kappa = j.at("kappa").get<double>();
  a.audit.threshold = j.at("threshold").get<double>();
  a.audit.worst_ratio = j.at("worst_ratio").get<double>();
  a.audit.worst_window_scale = j.at("worst_window_scale").get<int>();
  a.audit.worst_window_position = j.at("worst_window_position").get<std::uint64_t>();
  a.audit.passed = j.at("passed").get<bool>();
  return a;
}

}  // namespace

std::string emit_report_json(const ExperimentReport& rep) {
  json j;
  j["config"] = config_to_json(rep.config);
  j["hypothesis_audits_passed"] = rep.hypothesis_audits_passed;

  j["special_forms"] = json::array();
  for (const auto& r : rep.special_forms) {
    json row;
    row["poly"] = r.poly;
    row["classification"] = r.classification;
    row["px_zero"] = r.px_zero;
    row["py_zero"] = r.py_zero;
    row["pxy_zero"] = r.pxy_zero;
    row["np_terms"] = r.np_terms;
    j["special_forms"].push_back(row);
  }

  j["pins"] = json::array();
  for (const auto& r : rep.pins) {
    json row;
    row["pin_index"] = r.pin_index;
    row["pin_x"] = r.pin_x;
    row["pin_y"] = r.pin_y;
    row["triangle_area"] = r.triangle_area;
    row["inner_count"] = r.inner_count;
    row["outer_count"] = r.outer_count;
    row["exponent"] = r.exponent;
    row["triple"] = r.triple;
    j["pins"].push_back(row);
  }

  j["images"] = json::array();
  for (const auto& r : rep.images) {
    json row;
    row["name"] = r.name;
    row["inner_count"] = r.inner_count;
    row["outer_count"] = r.outer_count;
    row["exponent"] = r.exponent;
    row["exponent_next"] = r.exponent_next;
    row["drift"] = r.drift;
    j["images"].push_back(row);
  }

  j["energies"] = json::array();
  for (const auto& r : rep.energies) {
    json row;
    row["poly"] = r.poly;
    row["m"] = r.m;
    row["quadruple_count"] = r.quadruple_count;
    row["tolerance_c"] = r.tolerance_c;
    row["exponent"] = r.exponent;
    row["benchmark_3alpha"] = r.benchmark_3alpha;
    j["energies"].push_back(row);
  }

  j["audits"] = json::array();
  for (const auto& a : rep.audits) j["audits"].push_back(audit_to_json(a));

  j["triple_stats"] = json::array();
  for (const auto& r : rep.triple_stats) {
    json row;
    row["set"] = r.set_name;
    row["fitted_beta"] = r.fitted_beta;
    row["flat"] = r.flat_flagged;
    row["samples"] = r.samples;
    j["triple_stats"].push_back(row);
  }

  j["measured"] = json::array();
  for (const auto& [name, value] : rep.measured) {
    json row;
    row["name"] = name;
    row["value"] = value;
    j["measured"].push_back(row);
  }

  j["notes"] = rep.notes;
  return j.dump(2) + "\n";
}

ExperimentReport parse_report_json(const std::string& text) {
  json j = json::parse(text);
  ExperimentReport rep;
  rep.config = config_from_json(j.at("config"));
  rep.hypothesis_audits_passed = j.at("hypothesis_audits_passed").get<bool>();
  for (const auto& row : j.at("special_forms")) {
    SpecialFormRow r;
    r.poly = row.at("poly").get<std::string>();
    r.classification = row.at("classification").get<std::string>();
    r.px_zero = row.at("px_zero").get<bool>();
    r.py_zero = row.at("py_zero").get<bool>();
    r.pxy_zero = row.at("pxy_zero").get<bool>();
    r.np_terms = row.at("np_terms").get<std::uint64_t>();
    rep.special_forms.push_back(r);
  }
  for (const auto& row : j.at("pins")) {
    PinRecord r;
    r.pin_index = row.at("pin_index").get<int>();
    r.pin_x = row.at("pin_x").get<double>();
    r.pin_y = row.at("pin_y").get<double>();
    r.triangle_area = row.at("triangle_area").get<double>();
    r.inner_count = row.at("inner_count").get<std::uint64_t>();
    r.outer_count = row.at("outer_count").get<std::uint64_t>();
    r.exponent = row.at("exponent").get<double>();
    r.triple = row.at("triple").get<std::string>();
    rep.pins.push_back(r);
  }
  for (const auto& row : j.at("images")) {
    ImageRecord r;
    r.name = row.at("name").get<std::string>();
    r.inner_count = row.at("inner_count").get<std::uint64_t>();
    r.outer_count = row.at("outer_count").get<std::uint64_t>();
    r.exponent = row.at("exponent").get<double>();
    r.exponent_next = row.at("exponent_next").get<double>();
    r.drift = row.at("drift").get<double>();
    rep.images.push_back(r);
  }
  for (const auto& row : j.at("energies")) {
    EnergyRecord r;
    r.poly = row.at("poly").get<std::string>();
    r.m = row.at("m").get<std::uint64_t>();
    r.quadruple_count = row.at("quadruple_count").get<std::uint64_t>();
    r.tolerance_c = row.at("tolerance_c").get<double>();
    r.exponent = row.at("exponent").get<double>();
    r.benchmark_3alpha = row.at("benchmark_3alpha").get<double>();
    rep.energies.push_back(r);
  }
  for (const auto& row : j.at("audits")) rep.audits.push_back(audit_from_json(row));
  for (const auto& row : j.at("triple_stats")) {
    TripleStatsRow r;
    r.set_name = row.at("set").get<std::string>();
    r.fitted_beta = row.at("fitted_beta").get<double>();
    r.flat_flagged = row.at("flat").get<bool>();
    r.samples = row.at("samples").get<std::uint64_t>();
    rep.triple_stats.push_back(r);
  }
  for (const auto& row : j.at("measured"))
    rep.measured.emplace_back(row.at("name").get<std::string>(), row.at("value").get<double>());
  for (const auto& n : j.at("notes")) rep.notes.push_back(n.get<std::string>());
  return rep;
}

namespace {

// CSV doubles: shortest round-trip via the JSON printer keeps the two
// formats byte-consistent.
std::string csv_num(double v) { return json(v).dump(); }

}  // namespace

std::string emit_report_csv(const ExperimentReport& rep) {
  std::ostringstream os;
  const std::string& exp = rep.config.experiment;
  if (exp == "E1_SpecialForm") {
    os << "poly,classification,px_zero,py_zero,pxy_zero,np_terms\n";
    for (const auto& r : rep.special_forms)
      os << '"' << r.poly << '"' << "," << r.classification << "," << r.px_zero << ","
         << r.py_zero << "," << r.pxy_zero << "," << r.np_terms << "\n";
  } else if (exp == "E2_PinnedTriple") {
    os << "pin_index,pin_x,pin_y,triangle_area,inner_count,outer_count,exponent\n";
    for (const auto& r : rep.pins)
      os << r.pin_index << "," << csv_num(r.pin_x) << "," << csv_num(r.pin_y) << ","
         << csv_num(r.triangle_area) << "," << r.inner_count << "," << r.outer_count << ","
         << csv_num(r.exponent) << "\n";
  } else if (exp == "E3_FourProjections") {
    os << "image,inner_count,outer_count,exponent,exponent_next,drift\n";
    for (const auto& r : rep.images)
      os << r.name << "," << r.inner_count << "," << r.outer_count << "," << csv_num(r.exponent)
         << "," << csv_num(r.exponent_next) << "," << csv_num(r.drift) << "\n";
  } else if (exp == "E4_EntropyGrowth") {
    os << "poly,m,quadruple_count,energy_exponent,image_inner,image_outer,image_exponent,"
          "eps_hat\n";
    for (std::size_t n = 0; n < rep.energies.size(); ++n) {
      const auto& er = rep.energies[n];
      const auto& ir = rep.images.at(n);
      os << er.poly << "," << er.m << "," << er.quadruple_count << "," << csv_num(er.exponent)
         << "," << ir.inner_count << "," << ir.outer_count << "," << csv_num(ir.exponent) << ","
         << csv_num(ir.exponent - rep.config.alpha) << "\n";
    }
  } else {
    os << "set,fitted_beta,flat,samples\n";
    for (const auto& r : rep.triple_stats)
      os << r.set_name << "," << csv_num(r.fitted_beta) << "," << r.flat_flagged << ","
         << r.samples << "\n";
  }
  return os.str();
}

std::string emit_report(const ExperimentReport& rep, const std::string& format) {
  if (format == "json") return emit_report_json(rep);
  if (format == "csv") return emit_report_csv(rep);
  throw std::invalid_argument("emit_report: unknown format '" + format + "'");
}

}  // namespace dexlab
