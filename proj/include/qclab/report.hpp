#pragma once

// JSON and CSV renderings of the analysis reports. CSV files start with a
// version line "# qclab-v1 <subcommand>" followed by a column header.

#include <cmath>
#include <limits>
#include <sstream>
#include <string>

#include "qclab/analysis/greedy.hpp"
#include "qclab/analysis/growth.hpp"
#include "qclab/analysis/independence.hpp"
#include "qclab/analysis/uc_test.hpp"
#include "qclab/analysis/vanishing.hpp"
#include "qclab/brooks.hpp"
#include "qclab/io.hpp"

namespace qclab {

inline constexpr const char* kCsvVersion = "qclab-v1";

namespace detail {

inline std::string csv_cell(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_null()) return "";
  return j.dump();
}

inline Json finite_or_null(double x) {
  if (std::isfinite(x)) return x;
  return nullptr;
}

}  // namespace detail

class CsvWriter {
 public:
  CsvWriter(const std::string& subcommand, std::vector<std::string> columns) {
    out_ << "# " << kCsvVersion << ' ' << subcommand << '\n';
    row_strings(columns);
  }
  void row(const std::vector<Json>& cells) {
    std::vector<std::string> s;
    for (const Json& c : cells) s.push_back(detail::csv_cell(c));
    row_strings(s);
  }
  std::string str() const { return out_.str(); }

 private:
  void row_strings(const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out_ << ',';
      const bool quote = cells[i].find_first_of(",\"\n") != std::string::npos;
      if (!quote) {
        out_ << cells[i];
        continue;
      }
      out_ << '"';
      for (char ch : cells[i]) out_ << (ch == '"' ? "\"\"" : std::string(1, ch));
      out_ << '"';
    }
    out_ << '\n';
  }
  std::ostringstream out_;
};

// ---- eval ----

inline Json eval_to_json(const Representation& rep, const Vector& v) {
  Json j;
  j["value"] = vector_to_json(v);
  j["norm"] = norm_to_json(norm(rep, v));
  if (const auto* g = std::get_if<RegularVector>(&v)) j["support_size"] = g->support_size();
  return j;
}

inline std::string eval_to_csv(const Vector& v) {
  if (const auto* g = std::get_if<RegularVector>(&v)) {
    CsvWriter csv("eval", {"word", "coefficient"});
    for (const auto& [h, c] : *g) csv.row({to_string(h), to_string(c)});
    return csv.str();
  }
  if (const auto* r = std::get_if<Rational>(&v)) {
    CsvWriter csv("eval", {"value"});
    csv.row({to_string(*r)});
    return csv.str();
  }
  CsvWriter csv("eval", {"index", "re", "im"});
  const auto& c = std::get<CVector>(v);
  for (Eigen::Index i = 0; i < c.size(); ++i) csv.row({i, c(i).real(), c(i).imag()});
  return csv.str();
}

// ---- defect ----

inline Json to_json(const DefectReport& r) {
  Json j;
  j["mode"] = r.mode.describe();
  j["sup"] = norm_to_json(r.observed_sup);
  j["witness"] = {to_string(r.witness.first), to_string(r.witness.second)};
  j["bound"] = norm_to_json(r.theoretical_bound);
  j["pairs_checked"] = r.pairs_checked;
  j["within_bound"] = r.within_bound();
  return j;
}

inline std::string to_csv(const DefectReport& r) {
  CsvWriter csv("defect", {"mode", "sup", "witness_g", "witness_g2", "bound", "pairs_checked", "within_bound"});
  csv.row({r.mode.describe(), norm_to_json(r.observed_sup), to_string(r.witness.first),
           to_string(r.witness.second), norm_to_json(r.theoretical_bound), r.pairs_checked,
           r.within_bound()});
  return csv.str();
}

// ---- growth ----

inline Json to_json(const GrowthSeries& s) {
  Json j;
  j["family"] = s.family;
  Json points = Json::array();
  for (std::size_t i = 0; i < s.points.size(); ++i) {
    const auto& p = s.points[i];
    Json pt;
    pt["n"] = p.n;
    pt["norm"] = norm_to_json(p.norm);
    pt["norm_value"] = p.norm.value();
    if (p.coordinate) pt["coordinate"] = to_string(*p.coordinate);
    if (i < s.words.size()) pt["word"] = to_string(s.words[i]);
    if (i < s.orbit_sums.size()) pt["orbit_sum"] = s.orbit_sums[i];
    points.push_back(std::move(pt));
  }
  j["points"] = std::move(points);
  if (s.cyclic) {
    Json c;
    c["gap"] = s.cyclic->gap;
    c["classes"] = s.cyclic->classes;
    c["bound"] = s.cyclic->bound ? Json(*s.cyclic->bound) : Json(nullptr);
    if (!s.cyclic->note.empty()) c["note"] = s.cyclic->note;
    c["exceeded_at"] = s.cyclic->exceeded_at;
    j["cyclic_bound"] = std::move(c);
  }
  return j;
}

inline std::string to_csv(const GrowthSeries& s, const std::string& subcommand = "growth") {
  CsvWriter csv(subcommand, {"family", "n", "norm", "norm_value", "coordinate", "orbit_sum"});
  for (std::size_t i = 0; i < s.points.size(); ++i) {
    const auto& p = s.points[i];
    csv.row({s.family, p.n, norm_to_json(p.norm), p.norm.value(),
             p.coordinate ? Json(to_string(*p.coordinate)) : Json(nullptr),
             i < s.orbit_sums.size() ? Json(s.orbit_sums[i]) : Json(nullptr)});
  }
  return csv.str();
}

// ---- vanish ----

inline Json to_json(const VanishingReport& r) {
  Json j;
  j["max_norm"] = norm_to_json(r.max_norm);
  j["witness"] = r.witness ? Json(to_string(*r.witness)) : Json(nullptr);
  j["vanishes"] = r.vanishes();
  j["exact"] = r.exact;
  j["sampled"] = r.sampled;
  j["enumerated"] = r.enumerated;
  return j;
}

inline std::string to_csv(const VanishingReport& r) {
  CsvWriter csv("vanish", {"max_norm", "witness", "vanishes", "exact", "sampled", "enumerated"});
  csv.row({norm_to_json(r.max_norm), r.witness ? Json(to_string(*r.witness)) : Json(nullptr),
           r.vanishes(), r.exact, r.sampled, r.enumerated});
  return csv.str();
}

// ---- independence ----

inline Json to_json(const IndependenceReport& r) {
  Json j;
  j["m_list"] = r.m_list;
  Json patterns = Json::array();
  for (const Word& w : r.patterns) patterns.push_back(to_string(w));
  j["patterns"] = std::move(patterns);
  Json witnesses = Json::array();
  for (const Word& w : r.witnesses) witnesses.push_back(to_string(w));
  j["witnesses"] = std::move(witnesses);
  Json matrix = Json::array();
  for (const auto& row : r.norms) {
    Json jr = Json::array();
    for (const NormValue& n : row) jr.push_back(norm_to_json(n));
    matrix.push_back(std::move(jr));
  }
  j["norms"] = std::move(matrix);
  j["zero_on_witnesses"] = r.zero_on_witnesses;
  j["zero_pattern_exact"] = r.zero_pattern_exact;
  j["slope"] = r.slope;
  if (!r.exact_steps.empty()) {
    Json steps = Json::array();
    for (const Rational& s : r.exact_steps) steps.push_back(to_string(s));
    j["exact_steps"] = std::move(steps);
  }
  j["growth_positive"] = r.growth_positive;
  j["independence_evidence"] = r.independence_evidence();
  j["log"] = r.log;
  return j;
}

inline std::string to_csv(const IndependenceReport& r) {
  CsvWriter csv("independence", {"m", "pattern", "n", "norm", "zero"});
  for (std::size_t i = 0; i < r.norms.size(); ++i)
    for (std::size_t k = 0; k < r.norms[i].size(); ++k)
      csv.row({r.m_list[i], to_string(r.patterns[i]), k + 1, norm_to_json(r.norms[i][k]),
               r.norms[i][k].value() == 0.0});
  return csv.str();
}

// ---- greedy ----

inline Json to_json(const GreedyReport& r) {
  Json j;
  j["family"] = r.series.family;
  j["initial"] = norm_to_json(r.initial);
  j["final"] = norm_to_json(r.final_norm);
  j["final_value"] = r.final_norm.value();
  j["initial_epsilon"] = r.initial_epsilon;
  j["admissible_steps"] = r.admissible_steps;
  j["certificate_failures"] = r.certificate_failures;
  j["gained_ten_epsilon"] = r.gained_ten_epsilon();
  Json steps = Json::array();
  for (const GreedyStep& s : r.steps) {
    Json js;
    js["step"] = s.step;
    js["y"] = to_string(s.y);
    js["pre"] = norm_to_json(s.pre);
    js["post"] = norm_to_json(s.post);
    js["post_value"] = s.post.value();
    js["epsilon"] = s.epsilon;
    js["mu"] = s.mu;
    js["psi"] = s.psi;
    js["admissible"] = s.admissible;
    js["certificate_holds"] = s.certificate_holds;
    js["exact"] = s.exact;
    steps.push_back(std::move(js));
  }
  j["steps"] = std::move(steps);
  return j;
}

inline std::string to_csv(const GreedyReport& r) {
  CsvWriter csv("greedy", {"step", "y", "pre", "post", "post_value", "epsilon", "mu", "psi",
                           "admissible", "certificate_holds", "exact"});
  for (const GreedyStep& s : r.steps)
    csv.row({s.step, to_string(s.y), norm_to_json(s.pre), norm_to_json(s.post), s.post.value(),
             s.epsilon, s.mu, s.psi, s.admissible, s.certificate_holds, s.exact});
  return csv.str();
}

// ---- ucheck ----

inline Json to_json(const UCConstants& c) {
  Json j;
  j["R"] = c.R;
  j["separation"] = c.separation;
  j["delta"] = c.delta;
  j["epsilon"] = c.epsilon;
  j["mu"] = c.mu;
  j["satisfies_constraint"] = c.satisfies_constraint();
  return j;
}

inline Json to_json(const UCTestReport& r) {
  Json j;
  j["trials"] = r.trials;
  j["kept"] = r.kept;
  j["filtered_small_e"] = r.filtered_small_e;
  j["filtered_mu"] = r.filtered_mu;
  j["violations"] = r.violations;
  j["worst_margin"] = detail::finite_or_null(r.worst_margin);
  j["worst_trial"] = r.worst_trial;
  return j;
}

inline std::string to_csv(const UCTestReport& r, const UCConstants& c) {
  CsvWriter csv("ucheck", {"R", "epsilon", "mu", "trials", "kept", "filtered_small_e", "filtered_mu",
                           "violations", "worst_margin"});
  csv.row({c.R, c.epsilon, c.mu, r.trials, r.kept, r.filtered_small_e, r.filtered_mu, r.violations,
           detail::finite_or_null(r.worst_margin)});
  return csv.str();
}

}  // namespace qclab
