#pragma once

// Text and JSON renderings of wlpkit results. JSON objects keep keys sorted,
// so identical results serialize to identical bytes.

#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "wlpkit/wlpkit.hpp"

namespace wlpkit::cli {

using Json = nlohmann::json;

inline constexpr const char* kSchemaVersion = "1";

enum class Format { text, json };

inline Json envelope(const std::string& command, Json body) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = command;
  j["result"] = std::move(body);
  return j;
}

/// Kernel elements over QQ print with coprime integer coefficients.
inline std::string display_form(const HomogeneousForm& f) {
  if (!f.ring()->field().is_rational() || f.is_zero()) return f.to_string();
  return primitive_integer_form(f).to_string();
}

inline Json to_json(const HilbertSeq& h) { return Json(h.values()); }

inline Json to_json(const Classification& c) {
  return Json{{"codim", c.codim},
              {"initial_degree", c.initial_degree},
              {"socle_degree", c.socle_degree},
              {"is_level", c.is_level},
              {"is_gorenstein", c.is_gorenstein},
              {"type", c.type}};
}

inline Json generator_degrees(const QuotientAlgebra& A) {
  Json j = Json::object();
  for (int d = 0; d <= A.socle_degree() + 1; ++d) {
    const std::size_t k = A.ideal().num_minimal_generators(d);
    if (k > 0) j[std::to_string(d)] = k;
  }
  return j;
}

inline Json algebra_json(const QuotientAlgebra& A) {
  return Json{{"ring", A.ring()->to_string()},
              {"hilbert", to_json(A.hilbert())},
              {"socle", Json(A.socle_dims())},
              {"classification", to_json(A.classification())},
              {"minimal_generators_by_degree", generator_degrees(A)}};
}

inline Json to_json(const LefschetzReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    rows.push_back(Json{{"degree", row.degree},
                        {"power", row.power},
                        {"h_source", row.h_source},
                        {"h_target", row.h_target},
                        {"expected", row.expected},
                        {"achieved", row.achieved},
                        {"expectation", row.expectation},
                        {"inferred", row.inferred},
                        {"profile", Json(row.profile)}});
  }
  Json j{{"property", r.strong ? "SLP" : "WLP"},
         {"verdict", r.has_property ? (r.strong ? "has_slp" : "has_wlp") : (r.strong ? "fails_slp" : "fails_wlp")},
         {"hilbert", to_json(r.hilbert)},
         {"rows", rows},
         {"failing_degrees", Json(r.failing_degrees)},
         {"sampling",
          Json{{"field", r.sampling.field},
               {"mode", r.sampling.mode},
               {"num_forms", r.sampling.num_forms},
               {"seed", r.sampling.seed},
               {"bound", r.sampling.bound}}},
         {"used_level_shortcut", r.used_shortcut},
         {"notes", Json(r.notes)}};
  j["pivotal_degree"] = r.pivotal_degree ? Json(*r.pivotal_degree) : Json(nullptr);
  if (r.witness) {
    const Witness& w = *r.witness;
    j["witness"] = Json{{"degree", w.degree},
                        {"power", w.power},
                        {"linear_form", w.linear_form.to_string()},
                        {"kernel_form", w.kernel_form ? Json(display_form(*w.kernel_form)) : Json(nullptr)},
                        {"kernel_dim", w.kernel_dim},
                        {"cokernel_dim", w.cokernel_dim},
                        {"verified", w.verified}};
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

inline Json to_json(const ExampleResult& r) {
  Json diffs = Json::array();
  for (const auto& d : r.diffs) diffs.push_back(Json{{"field", d.field}, {"expected", d.expected}, {"computed", d.computed}});
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back(Json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  return Json{{"name", r.name},
              {"passed", r.passed},
              {"hilbert", to_json(r.hilbert)},
              {"classification", to_json(r.classification)},
              {"wlp", to_json(r.wlp)},
              {"diffs", diffs},
              {"checks", checks}};
}

inline Json to_json(const ExampleRecord& r) {
  Json j{{"name", r.name},
         {"description", r.description},
         {"ring", r.ring},
         {"construction", r.construction == Construction::ideal ? "ideal" : "dual"},
         {"pairing", pairing_name(r.pairing)},
         {"generators", r.generators},
         {"hilbert", to_json(r.hilbert)},
         {"classification", to_json(r.classification)},
         {"has_wlp", r.wlp.has_wlp},
         {"sampling_mode", r.sampling_mode}};
  j["failing_degree"] = r.wlp.failing_degree ? Json(*r.wlp.failing_degree) : Json(nullptr);
  return j;
}

inline Json to_json(const ExperimentReport& r) {
  Json trials = Json::array();
  for (const auto& t : r.records) {
    Json tj{{"index", t.index},
            {"seed", t.seed},
            {"suite", t.suite},
            {"socle_degree", t.socle_degree},
            {"hilbert", t.hilbert},
            {"strategy", t.strategy},
            {"hypothesis_ok", t.hypothesis_ok},
            {"expected_wlp", t.expected_wlp},
            {"has_wlp", t.has_wlp},
            {"passed", t.passed},
            {"note", t.note}};
    tj["s"] = t.s >= 0 ? Json(t.s) : Json(nullptr);
    trials.push_back(std::move(tj));
  }
  Json j{{"name", r.name},
         {"trials", r.trials},
         {"seed", r.seed},
         {"passes", r.passes},
         {"failures", r.failures},
         {"expectation_met", r.expectation_met},
         {"coverage", Json(r.coverage)},
         {"notes", Json(r.notes)},
         {"records", trials}};
  if (r.first_counterexample) {
    const auto& c = *r.first_counterexample;
    j["first_counterexample"] = Json{{"trial", c.trial},
                                     {"ring", c.ring},
                                     {"dual_generators", Json(c.dual_generators)},
                                     {"pairing", c.pairing},
                                     {"hilbert", c.hilbert}};
  } else {
    j["first_counterexample"] = nullptr;
  }
  return j;
}

inline Json to_json(const ExactSequenceCheck& c) {
  return Json{{"degenerate", c.degenerate},
              {"holds", c.holds},
              {"shift", c.shift},
              {"algebra", Json(c.algebra)},
              {"colon_shifted", Json(c.colon_shifted)},
              {"plus_form", Json(c.plus_form)}};
}

inline Json to_json(const GcdCriterionResult& g) {
  return Json{{"a", g.a},
              {"b", g.b},
              {"quotient_dim", g.quotient_dim},
              {"gcd", g.gcd.to_string()},
              {"gcd_degree", g.gcd_degree},
              {"consistent", g.consistent},
              {"num_forms", g.num_forms}};
}

// --- text -------------------------------------------------------------------

inline std::string join(const std::vector<std::int64_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
  return s;
}

/// Rows of equal-width cells under a left label column.
inline void print_table(std::ostream& os, const std::vector<std::pair<std::string, std::vector<std::string>>>& rows) {
  std::size_t label = 0;
  std::size_t cell = 1;
  for (const auto& [l, cells] : rows) {
    label = std::max(label, l.size());
    for (const auto& c : cells) cell = std::max(cell, c.size());
  }
  for (const auto& [l, cells] : rows) {
    os << std::left << std::setw(static_cast<int>(label)) << l << " |";
    for (const auto& c : cells) os << ' ' << std::right << std::setw(static_cast<int>(cell)) << c;
    os << '\n';
  }
}

inline void print_classification(std::ostream& os, const Classification& c) {
  os << "codim " << c.codim << ", initial degree " << c.initial_degree << ", socle degree " << c.socle_degree
     << ", type " << c.type << (c.is_gorenstein ? ", Gorenstein" : (c.is_level ? ", level" : ", not level")) << '\n';
}

inline void print_algebra(std::ostream& os, const QuotientAlgebra& A) {
  os << "ring: " << A.ring()->to_string() << '\n';
  os << "hilbert: " << A.hilbert().to_string() << '\n';
  os << "socle: " << join(A.socle_dims()) << '\n';
  print_classification(os, A.classification());
}

inline void print_report(std::ostream& os, const LefschetzReport& r) {
  const char* prop = r.strong ? "SLP" : "WLP";
  os << "hilbert: " << r.hilbert.to_string() << '\n';
  os << "sampling: " << r.sampling.mode << ", " << r.sampling.num_forms << " forms over " << r.sampling.field;
  if (r.sampling.mode == "sampled") os << ", seed " << r.sampling.seed << ", bound " << r.sampling.bound;
  os << '\n';
  std::vector<std::pair<std::string, std::vector<std::string>>> table;
  std::vector<std::string> deg, pw, src, dst, exp, ach;
  for (const auto& row : r.rows) {
    deg.push_back(std::to_string(row.degree));
    pw.push_back(std::to_string(row.power));
    src.push_back(std::to_string(row.h_source));
    dst.push_back(std::to_string(row.h_target));
    exp.push_back(std::to_string(row.expected));
    ach.push_back(std::to_string(row.achieved) + (row.inferred ? "*" : ""));
  }
  table.emplace_back("deg", deg);
  if (r.strong) table.emplace_back("power", pw);
  table.emplace_back("h_d", src);
  table.emplace_back("h_target", dst);
  table.emplace_back("expected", exp);
  table.emplace_back("achieved", ach);
  print_table(os, table);
  if (r.used_shortcut) os << "(* inferred from pivotal degree " << *r.pivotal_degree << ")\n";
  for (const auto& n : r.notes) os << "note: " << n << '\n';
  if (r.has_property) {
    os << "verdict: has " << prop << '\n';
    return;
  }
  os << "verdict: fails " << prop << " at degree";
  for (int d : r.failing_degrees) os << ' ' << d;
  os << '\n';
  if (r.witness) {
    const Witness& w = *r.witness;
    os << "witness: L = " << w.linear_form.to_string();
    if (w.power > 1) os << " (power " << w.power << ")";
    os << ", kernel dim " << w.kernel_dim << ", cokernel dim " << w.cokernel_dim << '\n';
    if (w.kernel_form) os << "kernel element: " << display_form(*w.kernel_form) << (w.verified ? " (verified)" : " (NOT verified)") << '\n';
  }
}

inline void print_exact_sequence(std::ostream& os, const ExactSequenceCheck& c) {
  std::vector<std::string> deg, h, colon, plus;
  for (std::size_t t = 0; t < c.algebra.size(); ++t) {
    deg.push_back(std::to_string(t));
    h.push_back(std::to_string(c.algebra[t]));
    colon.push_back(static_cast<int>(t) < c.shift ? "." : std::to_string(c.colon_shifted[t]));
    plus.push_back(std::to_string(c.plus_form[t]));
  }
  print_table(os, {{"deg", deg},
                   {"h_{R/I}", h},
                   {"h_{R/(I:F)}(-" + std::to_string(c.shift) + ")", colon},
                   {"h_{R/(I,F)}", plus}});
  if (c.degenerate) os << "F lies in I: the sequence is degenerate\n";
  os << "exact sequence identity: " << (c.holds ? "holds" : "FAILS") << '\n';
}

inline void print_example(std::ostream& os, const ExampleResult& r) {
  os << r.name << ": " << (r.passed ? "PASS" : "FAIL") << "  hilbert " << r.hilbert.to_string() << ", "
     << (r.wlp.has_property ? "has WLP" : "fails WLP");
  if (!r.wlp.failing_degrees.empty()) os << " at " << r.wlp.failing_degrees.front();
  os << " (" << r.wlp.sampling.mode << ")\n";
  for (const auto& d : r.diffs) os << "  mismatch " << d.field << ": expected " << d.expected << ", computed " << d.computed << '\n';
  for (const auto& c : r.checks) os << "  check " << c.name << ": " << (c.passed ? "ok" : "FAILED") << " - " << c.detail << '\n';
}

inline void print_experiment(std::ostream& os, const ExperimentReport& r) {
  os << "experiment " << r.name << ": " << r.trials << " trials, seed " << r.seed << '\n';
  os << "passes " << r.passes << ", failures " << r.failures << ", expectation "
     << (r.expectation_met ? "met" : "VIOLATED") << '\n';
  if (!r.coverage.empty()) {
    os << "hilbert functions:\n";
    for (const auto& [hf, n] : r.coverage) os << "  " << hf << " x" << n << '\n';
  }
  for (const auto& t : r.records) {
    if (t.s >= 0 && &t == &r.records.front()) os << "s per trial:";
    if (t.s >= 0) os << ' ' << t.s;
  }
  if (!r.records.empty() && r.records.front().s >= 0) os << '\n';
  for (const auto& n : r.notes) os << "note: " << n << '\n';
  if (r.first_counterexample) {
    const auto& c = *r.first_counterexample;
    os << "first counterexample (trial " << c.trial << "): ring " << c.ring << ", " << c.pairing << " dual generators:\n";
    for (const auto& g : c.dual_generators) os << "  " << g << '\n';
  }
}

}  // namespace wlpkit::cli
