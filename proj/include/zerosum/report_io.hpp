#pragma once

// JSON and text rendering of search results and verification reports.
// Every JSON document carries `schema_version` and `kind`; the field sets
// are listed in docs/report.schema.json.

#include <algorithm>
#include <cstdint>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "zerosum/davenport.hpp"
#include "zerosum/extremal.hpp"
#include "zerosum/sequence.hpp"

namespace zerosum::io {

using nlohmann::json;

inline constexpr int kSchemaVersion = 1;

inline json sequences_to_json(const std::vector<GSequence>& seqs) {
  json out = json::array();
  for (const auto& s : seqs) out.push_back(s.to_string());
  return out;
}

inline json to_json(const SearchResult& r, const std::string& group) {
  return json{{"schema_version", kSchemaVersion},
              {"kind", "davenport"},
              {"group", group},
              {"status", r.exact() ? "exact" : "budget-exhausted"},
              {"davenport", r.exact() ? json(r.davenport) : json(nullptr)},
              {"max_free_length", r.max_free_length},
              {"witness", r.witness.to_string()},
              {"nodes", r.nodes_expanded},
              {"millis", r.elapsed.count()}};
}

inline json to_json(const VerificationReport& r) {
  return json{{"schema_version", kSchemaVersion},
              {"kind", "verify"},
              {"target", r.target},
              {"group", r.group},
              {"family", r.family},
              {"davenport", r.davenport},
              {"enumerated_count", r.enumerated_count},
              {"predicted_count", r.predicted_count},
              {"missing", sequences_to_json(r.missing)},
              {"extra", sequences_to_json(r.extra)},
              {"witnesses", sequences_to_json(r.witnesses)},
              {"notes", r.notes},
              {"verdict", to_string(r.verdict())},
              {"nodes", r.nodes},
              {"millis", r.elapsed.count()}};
}

inline json extremal_to_json(const std::string& group, int davenport, const EnumerationResult& e,
                             std::int64_t millis) {
  return json{{"schema_version", kSchemaVersion},
              {"kind", "extremal"},
              {"group", group},
              {"davenport", davenport},
              {"extremal_count", e.sequences.size()},
              {"sequences", sequences_to_json(e.sequences)},
              {"nodes", e.nodes_expanded},
              {"millis", millis}};
}

inline json to_json(const KnownConstantsReport& r) {
  json rows = json::array();
  for (const auto& row : r.rows) {
    rows.push_back({{"group", row.group},
                    {"family", row.family},
                    {"expected", row.expected},
                    {"computed", row.computed.exact() ? json(row.computed.davenport) : json(nullptr)},
                    {"match", row.match},
                    {"nodes", row.computed.nodes_expanded},
                    {"millis", row.computed.elapsed.count()}});
  }
  return json{{"schema_version", kSchemaVersion},
              {"kind", "known-constants"},
              {"rows", rows},
              {"mismatches", r.mismatches()}};
}

/// Human-readable verification report.
inline std::string render_table(const VerificationReport& r, std::size_t max_listed = 20) {
  std::ostringstream os;
  os << "target:      " << r.target << "\n"
     << "group:       " << r.group << "\n"
     << "family:      " << r.family << "\n";
  if (r.davenport > 0) os << "D(G):        " << r.davenport << "\n";
  os << "enumerated:  " << r.enumerated_count << "\n"
     << "predicted:   " << r.predicted_count << "\n"
     << "missing:     " << r.missing.size() << "\n"
     << "extra:       " << r.extra.size() << "\n"
     << "verdict:     " << to_string(r.verdict()) << "\n";
  auto list = [&](const char* label, const std::vector<GSequence>& seqs) {
    for (std::size_t i = 0; i < seqs.size() && i < max_listed; ++i) os << "  " << label << " " << seqs[i].to_string() << "\n";
    if (seqs.size() > max_listed) os << "  ... " << (seqs.size() - max_listed) << " more\n";
  };
  list("missing", r.missing);
  list("extra  ", r.extra);
  for (const auto& note : r.notes) os << "  note: " << note << "\n";
  return os.str();
}

/// One aggregated row of the `report` command.
struct SummaryRow {
  std::string group;
  std::string davenport = "-";
  std::string extremal_count = "-";
  std::string verdict = "-";
  std::string missing = "-";
  std::string extra = "-";
  std::uint64_t nodes = 0;
  std::int64_t millis = 0;
};

inline const char* kCsvHeader = "group,davenport,extremal_count,verdict,missing,extra,nodes,millis";

inline std::string render_csv(const std::vector<SummaryRow>& rows) {
  std::ostringstream os;
  os << kCsvHeader << "\n";
  for (const auto& r : rows) {
    os << r.group << ',' << r.davenport << ',' << r.extremal_count << ',' << r.verdict << ',' << r.missing << ','
       << r.extra << ',' << r.nodes << ',' << r.millis << "\n";
  }
  return os.str();
}

inline std::string render_summary_table(const std::vector<SummaryRow>& rows) {
  std::ostringstream os;
  std::size_t width = 5;
  for (const auto& r : rows) width = std::max(width, r.group.size());
  os << std::left << std::setw(static_cast<int>(width) + 2) << "group" << std::setw(10) << "D(G)" << std::setw(10)
     << "extremal" << std::setw(24) << "verdict" << std::setw(9) << "missing" << std::setw(7) << "extra" << std::setw(12)
     << "nodes" << "millis\n";
  for (const auto& r : rows) {
    os << std::left << std::setw(static_cast<int>(width) + 2) << r.group << std::setw(10) << r.davenport << std::setw(10)
       << r.extremal_count << std::setw(24) << r.verdict << std::setw(9) << r.missing << std::setw(7) << r.extra
       << std::setw(12) << r.nodes << r.millis << "\n";
  }
  return os.str();
}

inline json summary_to_json(const std::vector<SummaryRow>& rows) {
  json arr = json::array();
  for (const auto& r : rows) {
    arr.push_back({{"group", r.group},
                   {"davenport", r.davenport},
                   {"extremal_count", r.extremal_count},
                   {"verdict", r.verdict},
                   {"missing", r.missing},
                   {"extra", r.extra},
                   {"nodes", r.nodes},
                   {"millis", r.millis}});
  }
  return json{{"schema_version", kSchemaVersion}, {"kind", "report"}, {"rows", arr}};
}

}  // namespace zerosum::io
