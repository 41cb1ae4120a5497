
#include "vecfdp/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "vecfdp/errors.hpp"

namespace vecfdp {

namespace {

std::vector<std::string> split_commas(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream ss(line);
  while (std::getline(ss, field, ',')) out.push_back(field);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

long parse_count(const std::string& field, const std::string& where, const char* column) {
  long v = 0;
  const char* first = field.data();
  const char* last = first + field.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (field.empty() || ec != std::errc() || ptr != last) {
    throw InputError(where + ": " + column + " '" + field + "' is not an integer");
  }
  if (v < 0) throw InputError(where + ": " + column + " is negative");
  return v;
}

}  // namespace

AbundanceTable read_abundance_csv(std::istream& in, const std::string& source) {
  std::string line;
  long lineno = 0;
  bool header_seen = false;
  AbundanceTable table;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (lineno == 1 && line.rfind("\xEF\xBB\xBF", 0) == 0) line.erase(0, 3);
    const std::string where = source + ":" + std::to_string(lineno);
    if (!header_seen) {
      if (line != kAbundanceHeader) {
        throw InputError(where + ": expected header '" + kAbundanceHeader + "'");
      }
      header_seen = true;
      continue;
    }
    if (line.empty()) continue;
    auto fields = split_commas(line);
    if (fields.size() != 3) {
      throw InputError(where + ": expected 3 fields, got " + std::to_string(fields.size()));
    }
    if (fields[0].empty()) throw InputError(where + ": empty species label");
    long c1 = parse_count(fields[1], where, "count_1");
    long c2 = parse_count(fields[2], where, "count_2");
    try {
      table.add(fields[0], c1, c2);
    } catch (const InputError& e) {
      throw InputError(where + ": " + e.what());
    }
  }
  if (!header_seen) throw InputError(source + ": empty file");
  if (table.empty()) throw InputError(source + ": no species rows");
  return table;
}

AbundanceTable read_abundance_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  return read_abundance_csv(in, path);
}

void write_abundance_csv(std::ostream& out, const AbundanceTable& table) {
  out << kAbundanceHeader << '\n';
  for (std::size_t i = 0; i < table.size(); ++i) {
    out << table.labels()[i] << ',' << table.counts1()[i] << ',' << table.counts2()[i] << '\n';
  }
}

Json json_number(double x) {
  if (!std::isfinite(x)) return nullptr;
  return x;
}

Json json_prob(LogValue p) {
  Json out = Json::object();
  out["p"] = json_number(p.value());
  out["log_p"] = json_number(p.log());
  return out;
}

std::string dump_json(const Json& report) { return report.dump(2) + "\n"; }

std::string reemit_json(const std::string& text) { return dump_json(Json::parse(text)); }

std::string format_number(double x) {
  if (!std::isfinite(x)) return "NA";
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, ptr);
}

std::string format_csv_row(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out += ',';
    out += fields[i];
  }
  out += '\n';
  return out;
}

}  // namespace vecfdp
