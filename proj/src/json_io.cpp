#include "flagflux/json_io.hpp"

#include "flagflux/errors.hpp"

namespace flagflux {
namespace {

[[noreturn]] void bad(const std::string& message) {
  throw ParseError(ParseError::Kind::syntax, 0, message);
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    bad(std::string("missing field \"") + key + "\"");
  }
  return j.at(key);
}

std::vector<int> int_list(const Json& j, const char* key) {
  if (!j.is_array()) bad(std::string("\"") + key + "\" must be an array");
  std::vector<int> out;
  for (const auto& v : j) {
    if (!v.is_number_integer()) {
      bad(std::string("\"") + key + "\" must hold integers");
    }
    out.push_back(v.get<int>());
  }
  return out;
}

Rational rational_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  std::string text;
  if (v.is_string()) {
    text = v.get<std::string>();
  } else if (v.is_number_integer()) {
    text = std::to_string(v.get<long long>());
  } else {
    bad(std::string("\"") + key + "\" must be a rational string");
  }
  Rational value;
  if (text.empty() || value.set_str(text, 10) != 0) {
    bad(std::string("\"") + key + "\" is not a rational: " + text);
  }
  value.canonicalize();
  return value;
}

Json root_json(const Root& root) { return root.coeffs; }

}  // namespace

FlagSpec flag_spec_from_json(const Json& j) {
  FlagSpec spec;
  if (j.contains("series")) {
    if (!j.at("series").is_string()) bad("\"series\" must be a string");
    spec.series = j.at("series").get<std::string>();
  }
  const Json& rank = field(j, "rank");
  if (!rank.is_number_integer()) bad("\"rank\" must be an integer");
  spec.rank = rank.get<int>();
  if (j.contains("theta")) spec.theta = int_list(j.at("theta"), "theta");
  return spec;
}

Json to_json(const FlagSpec& spec) {
  return Json{{"series", spec.series}, {"rank", spec.rank}, {"theta", spec.theta}};
}

AdmissibleTriple triple_from_json(const Json& j) {
  const Json& algebra = field(j, "algebra");
  if (!algebra.is_string()) bad("\"algebra\" must be a string");
  std::optional<int> dim;
  if (j.contains("dim")) {
    if (!j.at("dim").is_number_integer()) bad("\"dim\" must be an integer");
    dim = j.at("dim").get<int>();
  }
  AdmissibleTriple triple;
  triple.algebra = parse_malcev(algebra.get<std::string>(), dim);
  triple.ideal = int_list(field(j, "ideal"), "ideal");
  if (j.contains("flux")) {
    if (!j.at("flux").is_string()) bad("\"flux\" must be a string");
    triple.flux = parse_form(j.at("flux").get<std::string>(), 3,
                             triple.algebra.dim());
  }
  return triple;
}

Json to_json(const AdmissibleTriple& triple) {
  return Json{{"algebra", print_malcev(triple.algebra)},
              {"ideal", triple.ideal},
              {"flux", print_form(triple.flux)}};
}

GcsBlock block_from_json(const Json& j) {
  const Json& kind = field(j, "kind");
  if (!kind.is_string()) bad("\"kind\" must be a string");
  const std::string k = kind.get<std::string>();
  if (k == "complex") {
    int sign = 1;
    if (j.contains("sign")) {
      if (!j.at("sign").is_number_integer()) bad("\"sign\" must be 1 or -1");
      sign = j.at("sign").get<int>();
    }
    return make_complex_block(sign);
  }
  if (k == "noncomplex") {
    return make_noncomplex_block(rational_field(j, "a"), rational_field(j, "x"),
                                 rational_field(j, "y"));
  }
  bad("unknown block kind \"" + k + "\"");
}

Json to_json(const GcsBlock& block) {
  Json rows = Json::array();
  for (int i = 0; i < block.matrix.rows(); ++i) {
    Json row = Json::array();
    for (int c = 0; c < block.matrix.cols(); ++c) {
      row.push_back(block.matrix(i, c).get_str());
    }
    rows.push_back(std::move(row));
  }
  return Json{{"type", to_string(block.type)}, {"matrix", std::move(rows)}};
}

Json to_json(const BasisChange& change) {
  Json images = Json::array();
  for (int k = 1; k <= change.dim(); ++k) {
    images.push_back(Json{{"from", k},
                          {"to", change.target(k)},
                          {"sign", change.sign(k)}});
  }
  return Json{{"describe", change.describe()}, {"images", std::move(images)}};
}

Json to_json(const RootSystem& roots) {
  Json list = Json::array();
  for (const Root& root : roots.positive_roots) {
    const auto [i, j] = root.matrix_unit();
    list.push_back(Json{{"coeffs", root_json(root)},
                        {"height", root.height()},
                        {"unit", {i, j}}});
  }
  return Json{{"series", roots.series},
              {"rank", roots.rank},
              {"count", roots.positive_roots.size()},
              {"positive_roots", std::move(list)}};
}

Json to_json(const Nilradical& nil) {
  Json legend = Json::array();
  for (const BasisEntry& entry : nil.legend) {
    legend.push_back(Json{{"index", entry.index},
                          {"root", root_json(entry.root)},
                          {"summand", entry.summand},
                          {"unit", {entry.unit.first, entry.unit.second}}});
  }
  Json summands = Json::array();
  for (const IsotropySummand& s : nil.summands) {
    summands.push_back(Json{{"signature", s.signature}, {"dim", s.dim()}});
  }
  return Json{{"spec", to_json(nil.spec)},
              {"name", pretty_name(nil.spec)},
              {"dim", nil.presentation.dim()},
              {"presentation", print_malcev(nil.presentation)},
              {"summands", std::move(summands)},
              {"legend", std::move(legend)}};
}

Json to_json(const AdmissibilityReport& report) {
  return Json{{"ideal", report.ideal},
              {"abelian", report.abelian},
              {"central", report.central},
              {"closed", report.closed},
              {"degenerate", report.degenerate},
              {"admissible", report.admissible()},
              {"dH", print_form(report.flux_differential)},
              {"messages", report.messages}};
}

Json to_json(const CertificateReport& report) {
  return Json{{"passed", report.passed},
              {"correspondence", print_malcev(report.correspondence)},
              {"lhs", print_form(report.lhs)},
              {"F", print_form(report.form)},
              {"corrected", report.corrected},
              {"residual", print_form(report.residual)},
              {"fibre_nondegenerate", report.fibre_nondegenerate},
              {"message", report.message}};
}

Json to_json(const DualizationResult& result) {
  Json slots = Json::array();
  for (const auto& [x, z] : result.slot_map) slots.push_back(Json{{"x", x}, {"z", z}});
  return Json{{"source", to_json(result.source)},
              {"reorder", result.reorder},
              {"dual", to_json(result.dual)},
              {"H_dual", print_form(result.dual.flux)},
              {"delta", print_form(result.basic_part)},
              {"ideal_dim", result.ideal_dim},
              {"slot_map", std::move(slots)}};
}

Json to_json(const TargetCandidate& target) {
  return Json{{"spec", to_json(target.spec)},
              {"name", target.pretty_name},
              {"flag_dim", target.flag_dim},
              {"witness", to_json(target.witness)}};
}

Json to_json(const CorrespondenceResult& result) {
  Json targets = Json::array();
  for (const auto& t : result.search.targets) targets.push_back(to_json(t));
  return Json{{"source", to_json(result.source.spec)},
              {"source_name", pretty_name(result.source.spec)},
              {"flux", print_form(result.source.flux)},
              {"ideal", result.ideal},
              {"n", print_malcev(result.nilradical.presentation)},
              {"dual", to_json(result.dual.dual)},
              {"H_dual", print_form(result.dual.dual.flux)},
              {"certificate", result.certificate.passed},
              {"rank_bound", result.rank_bound},
              {"candidates", result.search.candidates},
              {"fingerprint_matches", result.search.fingerprint_matches},
              {"targets", std::move(targets)},
              {"reason", result.reason}};
}

Json to_json(const SelfDualReport& report) {
  Json selfdual = nullptr;
  if (report.selfdual) selfdual = *report.selfdual;
  return Json{{"spec", to_json(report.spec)},
              {"ideal", report.ideal},
              {"flux", print_form(report.flux)},
              {"admissibility", to_json(report.admissibility)},
              {"H_dual", report.dual ? Json(print_form(report.dual->dual.flux))
                                     : Json(nullptr)},
              {"selfdual", selfdual},
              {"witness", report.witness ? to_json(*report.witness) : Json(nullptr)},
              {"note", report.note}};
}

}  // namespace flagflux
