#include "dist3/report.hpp"

#include "json.hpp"

namespace dist3 {
namespace {

using nlohmann::json;

json edges_json(const std::vector<Edge>& edges) {
  json out = json::array();
  for (const Edge& e : edges) out.push_back({e.u, e.v});
  return out;
}

json certificate_json(const Certificate& cert) {
  if (const auto* span = std::get_if<SpanningD3Edges>(&cert))
    return {{"type", "spanning_d3_edges"}, {"edges", edges_json(span->edges)}};
  return {{"type", "separating_partition"}, {"blocks", std::get<SeparatingPartition>(cert).blocks}};
}

}  // namespace

ClassifyReport classify_report(const Graph& g) {
  ClassifyReport report;
  report.decision = decide(g);
  report.oracle_connected = oracle_d3_connected(g).connected;
  const Shape shape = detect_shape(g);

  json j;
  j["schema_version"] = kSchemaVersion;
  j["n"] = g.order();
  j["m"] = g.size();
  j["shape"] = to_string(shape.kind);
  j["cycle_len"] = shape.kind == ShapeKind::Unicyclic ? json(shape.cycle.size()) : json(nullptr);
  j["connected"] = report.decision.connected;
  j["case_tag"] = to_string(report.decision.tag);
  j["certificate"] = certificate_json(make_certificate(g, report.oracle_connected));
  j["oracle_checked"] = true;
  j["oracle_connected"] = report.oracle_connected;
  report.json = j.dump() + "\n";
  return report;
}

std::string record_json(const AgreementRecord& rec, std::optional<bool> expected, const Graph* counterexample) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["type"] = "record";
  j["id"] = rec.instance_id;
  j["n"] = rec.n;
  j["shape"] = to_string(rec.shape);
  j["classifier_connected"] = rec.classifier_connected;
  j["case_tag"] = to_string(rec.case_tag);
  j["oracle_connected"] = rec.oracle_connected;
  if (expected) j["expected"] = *expected;
  j["agree"] = rec.agree;
  if (counterexample)
    j["counterexample"] = {{"n", counterexample->order()}, {"edges", edges_json(counterexample->edges())}};
  return j.dump() + "\n";
}

}  // namespace dist3
