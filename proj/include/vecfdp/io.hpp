
// Abundance CSV ingest, JSON report helpers and CSV row writers.

#ifndef VECFDP_IO_HPP_
#define VECFDP_IO_HPP_

#include <algorithm>
#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"
#include "vecfdp/abundance.hpp"
#include "vecfdp/logmath.hpp"
#include "vecfdp/pmf.hpp"

namespace vecfdp {

using Json = nlohmann::ordered_json;

inline constexpr const char* kAbundanceHeader = "species,count_1,count_2";

// Reads `species,count_1,count_2` rows. Errors carry `source:line`.
AbundanceTable read_abundance_csv(std::istream& in, const std::string& source);
AbundanceTable read_abundance_csv(const std::string& path);
void write_abundance_csv(std::ostream& out, const AbundanceTable& table);

// Non-finite values become null.
Json json_number(double x);
// {"p": linear, "log_p": natural log}; log 0 is null.
Json json_prob(LogValue p);

// Rows {name_0: key_0, ..., "p": ..., "log_p": ...}. With top > 0 only the
// `top` largest entries are kept, listed in key order.
template <std::size_t N>
Json pmf_json(const PmfTable<N>& pmf, const std::array<const char*, N>& names,
              std::size_t top = 0) {
  std::vector<std::pair<typename PmfTable<N>::Key, LogValue>> rows(pmf.entries().begin(),
                                                                    pmf.entries().end());
  bool truncated = top > 0 && rows.size() > top;
  if (truncated) {
    std::nth_element(rows.begin(), rows.begin() + top, rows.end(),
                     [](const auto& a, const auto& b) { return a.second.log() > b.second.log(); });
    rows.resize(top);
    std::sort(rows.begin(), rows.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
  }
  Json out = Json::object();
  out["total"] = json_number(pmf.total());
  out["support_size"] = pmf.size();
  out["truncated"] = truncated;
  Json entries = Json::array();
  for (const auto& [key, p] : rows) {
    Json row = Json::object();
    for (std::size_t i = 0; i < N; ++i) row[names[i]] = key[i];
    Json prob = json_prob(p);
    row["p"] = prob["p"];
    row["log_p"] = prob["log_p"];
    entries.push_back(std::move(row));
  }
  out["entries"] = std::move(entries);
  return out;
}

// Two-space indented with a trailing newline.
std::string dump_json(const Json& report);
// Parses an emitted report and emits it again.
std::string reemit_json(const std::string& text);

// Shortest round-trip decimal form; "NA" for non-finite values.
std::string format_number(double x);
std::string format_csv_row(const std::vector<std::string>& fields);

}  // namespace vecfdp

#endif  // VECFDP_IO_HPP_
