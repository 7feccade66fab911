#pragma once

#include <string>
#include <string_view>

#include "rankforge/enumeration.hpp"
#include "rankforge/structure.hpp"

namespace rankforge {

/// JSON with fixed key order: rank, class, max_order, extremal, cores_processed,
/// candidates_total, nodes_explored, elapsed_ms (plus shard, shard_count when sharded).
std::string to_json(const EnumerationReport& report);
/// Throws ParseError on malformed text or missing keys.
EnumerationReport enumeration_report_from_json(std::string_view text);

/// host (graph6), gap, rank_g, rank_h, kept and deleted vertices, classes, T1/T2, verdicts.
std::string to_json(const StructureReport& report);

}  // namespace rankforge
