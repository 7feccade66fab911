#include "rankforge/report_io.hpp"

#include <nlohmann/json.hpp>

#include "rankforge/canonical.hpp"
#include "rankforge/errors.hpp"

namespace rankforge {

namespace {

using Json = nlohmann::ordered_json;

Json members(VertexSet s)
{
    return Json(s.members());
}

}  // namespace

std::string to_json(const EnumerationReport& report)
{
    Json j;
    j["rank"] = report.rank;
    j["class"] = to_string(report.cls);
    j["max_order"] = report.max_order;
    j["extremal"] = report.extremal;
    j["cores_processed"] = report.cores_processed;
    j["candidates_total"] = report.candidates_total;
    j["nodes_explored"] = report.nodes_explored;
    j["elapsed_ms"] = report.elapsed_ms;
    if (report.shard_count > 1) {
        j["shard"] = report.shard_index;
        j["shard_count"] = report.shard_count;
    }
    return j.dump(2) + "\n";
}

EnumerationReport enumeration_report_from_json(std::string_view text)
{
    try {
        const Json j = Json::parse(text);
        EnumerationReport r;
        r.rank = j.at("rank").get<int>();
        r.cls = parse_graph_class(j.at("class").get<std::string>());
        r.max_order = j.at("max_order").get<int>();
        r.extremal = j.at("extremal").get<std::vector<std::string>>();
        r.cores_processed = j.at("cores_processed").get<std::uint64_t>();
        r.candidates_total = j.value("candidates_total", std::uint64_t{0});
        r.nodes_explored = j.at("nodes_explored").get<std::uint64_t>();
        r.elapsed_ms = j.value("elapsed_ms", std::int64_t{0});
        r.shard_index = j.value("shard", 0);
        r.shard_count = j.value("shard_count", 1);
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad enumeration report: ") + e.what());
    } catch (const PreconditionError& e) {
        throw ParseError(std::string("bad enumeration report: ") + e.what());
    }
}

std::string to_json(const StructureReport& report)
{
    Json j;
    j["host"] = to_graph6(report.host);
    j["gap"] = report.gap;
    j["rank_g"] = report.rank_g;
    j["rank_h"] = report.rank_h;
    j["h_vertices"] = members(report.h_vertices);
    j["deleted"] = members(report.deleted());
    Json pairs = Json::array();
    for (auto [a, b] : report.duplication_pairs) {
        pairs.push_back({a, b});
    }
    j["duplication_pairs"] = pairs;
    Json big = Json::array();
    for (VertexSet s : report.oversized_classes) {
        big.push_back(members(s));
    }
    j["oversized_classes"] = big;
    j["isolated"] = members(report.isolated);
    j["isolated_count"] = report.isolated_count;
    j["t1"] = members(report.t1);
    j["t2"] = members(report.t2);
    Json verdicts = Json::object();
    for (const auto& [name, v] : report.verdicts) {
        verdicts[name] = {{"ok", v.ok}, {"witness", v.witness}};
    }
    j["verdicts"] = verdicts;
    return j.dump(2) + "\n";
}

}  // namespace rankforge
