#ifndef REGMATCH_JSON_REPORT_HPP
#define REGMATCH_JSON_REPORT_HPP

#include <json.hpp>

#include "regmatch/construct.hpp"
#include "regmatch/gallai_edmonds.hpp"
#include "regmatch/oracle.hpp"

namespace regmatch {

/// Stable-order JSON (schema 1). Key order is fixed so identical inputs
/// produce byte-identical reports.
using Json = nlohmann::ordered_json;

Json decomposition_report(const Multigraph& g, const GallaiEdmonds& ge);
Json construction_report(const ConstructionReport& report);
Json oracle_report(const OracleVerdict& verdict);
Json scan_record_json(const ScanRecord& record, int index, int n, int k,
                      bool simple);

}  // namespace regmatch

#endif
