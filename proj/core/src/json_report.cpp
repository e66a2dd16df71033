#include "regmatch/json_report.hpp"

namespace regmatch {

namespace {

Json pairs_json(const std::vector<std::pair<int, int>>& pairs) {
  Json arr = Json::array();
  for (const auto& [u, v] : pairs) arr.push_back(Json::array({u, v}));
  return arr;
}

}  // namespace

Json decomposition_report(const Multigraph& g, const GallaiEdmonds& ge) {
  Json j;
  j["schema"] = 1;
  j["n"] = g.vertex_count();
  const auto profile = degree_profile(g);
  if (profile.regular_k)
    j["regular_k"] = *profile.regular_k;
  else
    j["regular_k"] = nullptr;
  j["nu"] = ge.nu;
  j["deficiency"] = ge.deficiency;
  j["D"] = ge.d;
  j["A"] = ge.a;
  j["C"] = ge.c;
  Json comps = Json::array();
  for (const ComponentInfo& comp : ge.components) {
    Json c;
    c["vertices"] = comp.vertices;
    c["order"] = comp.vertices.size();
    c["edges_to_A"] = comp.edges_to_a;
    c["good"] = comp.good;
    comps.push_back(std::move(c));
  }
  j["components"] = std::move(comps);
  return j;
}

Json construction_report(const ConstructionReport& report) {
  Json j;
  j["schema"] = 1;
  j["regime"] = regime_name(report.regime);
  j["property_holds"] = report.property_holds;
  j["n"] = report.n;
  j["k"] = report.k;
  j["simple"] = report.simple;
  j["nu"] = report.nu;
  j["deficiency"] = report.deficiency;
  j["matching"] = pairs_json(report.matching.pairs());
  j["unsaturated"] = report.unsaturated;
  Json diag;
  diag["D_size"] = report.d_size;
  diag["A_size"] = report.a_size;
  diag["C_size"] = report.c_size;
  diag["component_count"] = report.component_count;
  diag["component_avoid"] = report.component_avoid;
  j["decomposition"] = std::move(diag);
  return j;
}

Json oracle_report(const OracleVerdict& verdict) {
  Json j;
  j["schema"] = 1;
  j["nu"] = verdict.nu;
  j["maximum_matching_count"] = verdict.maximum_matching_count;
  j["good_exists"] = verdict.good_exists;
  if (verdict.witness)
    j["witness"] = pairs_json(verdict.witness->pairs());
  else
    j["witness"] = nullptr;
  return j;
}

Json scan_record_json(const ScanRecord& record, int index, int n, int k,
                      bool simple) {
  Json j;
  j["schema"] = 1;
  j["index"] = index;
  j["n"] = n;
  j["k"] = k;
  j["simple"] = simple;
  j["mel"] = record.mel;
  j["nu"] = record.verdict.nu;
  j["maximum_matching_count"] = record.verdict.maximum_matching_count;
  j["good_exists"] = record.verdict.good_exists;
  j["construct_ok"] = record.construct_ok;
  j["regime"] = record.regime;
  j["agree"] = record.agree;
  return j;
}

}  // namespace regmatch
