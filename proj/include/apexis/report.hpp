#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "apexis/apex.hpp"
#include "apexis/catalog.hpp"
#include "apexis/planarity.hpp"
#include "apexis/spatial/diagram.hpp"

namespace apexis {

inline constexpr int kReportFormatVersion = 1;

using Json = nlohmann::ordered_json;

/// FNV-1a over the compact dump, as 16 hex digits.
std::string digest(const Json& j);

Json to_json(const PlanarEmbedding& e);
Json to_json(const MinorModel& m);
Json to_json(const PlanarityCertificate& c);
Json to_json(const ApexCertificate& c);
Json to_json(const NonApexVerdict& v);
Json to_json(const ApexResult& r);
Json to_json(const GenK33Partition& p);
Json to_json(const ClassificationReport& r);
Json to_json(const MainTheoremReport& r);
Json to_json(const Table1Report& r);
Json to_json(const EdgeBoundReport& r);
Json to_json(const OneApexReport& r);
Json to_json(const std::vector<FamilyMember>& family);
Json to_json(const CycleVerdict& v);
Json to_json(const SweepResult& r);

/// Envelope: format_version, command, parameters, result, run. Everything
/// but "run" is deterministic.
Json make_report(const std::string& command, Json parameters, Json result, double wall_seconds, int jobs);

}  // namespace apexis
