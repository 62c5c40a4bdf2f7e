#include "pancake/report.hpp"

#include <limits>

#include "json.hpp"

namespace pancake {
namespace {

using nlohmann::ordered_json;

ordered_json exact(Int v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(v);
  }
  return to_string(v);
}

ordered_json exact(const std::optional<Int>& v) { return v ? exact(*v) : ordered_json(nullptr); }

ordered_json document(std::string_view type) {
  ordered_json j;
  j["format_version"] = kReportFormatVersion;
  j["type"] = type;
  return j;
}

ordered_json graph_json(const GraphKind& g) {
  return {{"kind", to_string(g.kind)}, {"n", g.n}, {"name", g.name()}};
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string to_json(std::span<const LayerProfile> profiles) {
  ordered_json j = document("layer_table");
  ordered_json rows = ordered_json::array();
  for (const auto& p : profiles) {
    rows.push_back({{"graph", graph_json(p.graph)},
                    {"complete", p.complete},
                    {"eccentricity", p.eccentricity()},
                    {"total", p.total_visited},
                    {"counts", p.counts}});
  }
  j["rows"] = std::move(rows);
  return dump(j);
}

std::string to_json(const CensusReport& report) {
  ordered_json j = document("cycle_census");
  j["graph"] = graph_json(report.graph);
  j["length"] = report.length;
  j["total_cycles_through_identity"] = report.total_cycles_through_identity;
  ordered_json families = ordered_json::array();
  for (const auto& [number, tally] : report.per_family) {
    ordered_json instances = ordered_json::array();
    for (const auto& p : tally.instances) instances.push_back(p.to_string());
    families.push_back({{"family", number},
                        {"label", family_by_number(number).label},
                        {"count", tally.count},
                        {"instances", std::move(instances)}});
  }
  j["families"] = std::move(families);
  ordered_json unmatched = ordered_json::array();
  for (const auto& f : report.unmatched) unmatched.push_back(format_labels(f.labels));
  j["unmatched"] = std::move(unmatched);
  j["closure_failures"] = report.closure_failures;
  j["confirmed"] = report.confirmed();
  return dump(j);
}

std::string to_json(const CrosscheckReport& report) {
  ordered_json j = document("formula_check");
  j["formula"] = report.formula;
  j["k"] = report.k;
  j["graph"] = to_string(report.graph);
  j["status"] = to_string(report.status);
  ordered_json rows = ordered_json::array();
  for (const auto& r : report.rows) {
    rows.push_back({{"n", r.n},
                    {"formula", exact(r.formula)},
                    {"observed", exact(r.observed)},
                    {"from_exception", r.from_exception},
                    {"outcome", to_string(r.outcome)}});
  }
  j["rows"] = std::move(rows);
  j["compared"] = report.compared();
  j["mismatches"] = report.mismatches();
  j["verdict"] = report.verdict();
  return dump(j);
}

std::string to_json(const NewtonPoly& poly, Kind graph, int k) {
  ordered_json j = document("newton_fit");
  j["graph"] = to_string(graph);
  j["k"] = k;
  j["anchor"] = poly.anchor;
  j["degree"] = poly.degree();
  ordered_json coeffs = ordered_json::array();
  for (Int c : poly.coefficients) coeffs.push_back(exact(c));
  j["coefficients"] = std::move(coeffs);
  return dump(j);
}

std::string to_json(std::string_view name, std::span<const IdentityCell> cells) {
  ordered_json j = document("identity_check");
  j["identity"] = name;
  ordered_json rows = ordered_json::array();
  std::size_t fails = 0;
  for (const auto& c : cells) {
    if (c.check.verdict == Verdict::Fails) ++fails;
    rows.push_back({{"k", c.k},
                    {"n", c.n},
                    {"verdict", to_string(c.check.verdict)},
                    {"lhs", exact(c.check.lhs)},
                    {"rhs", exact(c.check.rhs)},
                    {"detail", c.check.detail}});
  }
  j["cells"] = std::move(rows);
  j["failures"] = fails;
  return dump(j);
}

}  // namespace pancake
