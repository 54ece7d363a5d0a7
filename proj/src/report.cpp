#include "fockalg/report.hpp"

#include <stdexcept>

namespace fockalg {

void Report::check(const std::string& label, bool ok) {
  checks_[label] = ok;
  pass = (any_check_ ? pass : true) && ok;
  any_check_ = true;
}

Json to_json(const Report& r) {
  Json j;
  j["name"] = r.name;
  j["params"] = r.params;
  j["measurements"] = r.measurements;
  j["tolerances"] = r.tolerances;
  j["checks"] = r.checks();
  j["verdict"] = r.pass ? "pass" : "fail";
  j["anchors"] = r.anchors;
  j["notes"] = r.notes;
  return j;
}

Report report_from_json(const Json& j) {
  Report r;
  r.name = j.at("name").get<std::string>();
  r.params = j.at("params");
  r.measurements = j.at("measurements");
  r.tolerances = j.value("tolerances", std::map<std::string, double>{});
  r.anchors = j.value("anchors", std::vector<std::string>{});
  r.notes = j.value("notes", std::vector<std::string>{});
  for (const auto& [label, ok] : j.value("checks", std::map<std::string, bool>{}))
    r.check(label, ok);
  const auto verdict = j.at("verdict").get<std::string>();
  if (verdict != "pass" && verdict != "fail")
    throw std::invalid_argument("report verdict must be 'pass' or 'fail'");
  r.pass = verdict == "pass";
  return r;
}

namespace {

template <typename Map>
Json word_records(const Map& coeffs) {
  Json out = Json::array();
  for (const auto& [w, c] : coeffs)
    out.push_back({{"word", to_string(w)}, {"re", c.real()}, {"im", c.imag()}});
  return out;
}

Complex read_complex(const Json& rec) {
  return {rec.at("re").get<double>(), rec.at("im").get<double>()};
}

} // namespace

Json to_json(const FreeSeries& s) { return word_records(s.coefficients()); }

FreeSeries free_series_from_json(const Json& j, int n) {
  FreeSeries s(n);
  for (const auto& rec : j) s.add(parse_word(rec.at("word").get<std::string>()), read_complex(rec));
  return s;
}

Json to_json(const FockVector& v) { return word_records(v.coefficients()); }

FockVector fock_vector_from_json(const Json& j, int n, int level) {
  FockVector v(n, level);
  for (const auto& rec : j) v.add(parse_word(rec.at("word").get<std::string>()), read_complex(rec));
  return v;
}

Json to_json(const ScalarSeries& s) {
  Json out = Json::array();
  for (Eigen::Index k = 0; k < s.coeffs.size(); ++k)
    out.push_back({{"k", k}, {"re", s.coeffs(k).real()}, {"im", s.coeffs(k).imag()}});
  return out;
}

ScalarSeries scalar_series_from_json(const Json& j) {
  Eigen::Index order = -1;
  for (const auto& rec : j) order = std::max(order, rec.at("k").get<Eigen::Index>());
  ScalarSeries::Coefficients c = ScalarSeries::Coefficients::Zero(order + 1);
  for (const auto& rec : j) {
    const auto k = rec.at("k").get<Eigen::Index>();
    if (k < 0) throw std::invalid_argument("scalar series index must be >= 0");
    c(k) += read_complex(rec);
  }
  return ScalarSeries(std::move(c));
}

} // namespace fockalg
