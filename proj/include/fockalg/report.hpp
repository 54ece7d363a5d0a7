#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "fockalg/fock.hpp"
#include "fockalg/free_series.hpp"
#include "fockalg/hardy.hpp"

namespace fockalg {

using Json = nlohmann::json;

/// Result of one experiment or check. Serialized as a JSON object with the
/// stable schema {name, params, measurements, tolerances, verdict, anchors, notes}.
struct Report {
  std::string name;
  Json params = Json::object();
  Json measurements = Json::object();
  std::map<std::string, double> tolerances;
  /// Human-readable statement of each identity the report checks.
  std::vector<std::string> anchors;
  std::vector<std::string> notes;
  bool pass = false;

  /// Records a named check; the verdict is the conjunction of all checks.
  void check(const std::string& label, bool ok);
  const std::map<std::string, bool>& checks() const noexcept { return checks_; }

private:
  std::map<std::string, bool> checks_;
  bool any_check_ = false;
};

Json to_json(const Report& r);
Report report_from_json(const Json& j);

/// [{word, re, im}, ...] in canonical word order.
Json to_json(const FreeSeries& s);
FreeSeries free_series_from_json(const Json& j, int n);

Json to_json(const FockVector& v);
FockVector fock_vector_from_json(const Json& j, int n, int level);

/// [{k, re, im}, ...].
Json to_json(const ScalarSeries& s);
ScalarSeries scalar_series_from_json(const Json& j);

} // namespace fockalg
