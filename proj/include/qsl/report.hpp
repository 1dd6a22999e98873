#pragma once

#include <array>
#include <charconv>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "qsl/errors.hpp"
#include "qsl/theorem.hpp"

namespace qsl {

using ordered_json = nlohmann::ordered_json;

// Published count for the 27x27 board, the largest exactly counted to date.
// It is carried as reference data only; the search kernels refuse boards
// anywhere near that size. The count type must hold it with room to spare.
inline constexpr std::uint64_t kQueens27Record = 234907967154122528ULL;
static_assert(kQueens27Record < (std::uint64_t{1} << 63),
              "count fields must be 64-bit or wider");

struct ClassBreakdown {
  std::uint64_t f_r = 0;
  std::uint64_t f_r2_only = 0;
  std::uint64_t f_e = 0;
  std::uint64_t c_r = 0;
  std::uint64_t c_r2_only = 0;
  std::uint64_t c_e = 0;

  friend bool operator==(const ClassBreakdown&, const ClassBreakdown&) = default;
};

struct EllBucket {
  int ell = 0;
  std::uint64_t completions = 0;
  std::uint64_t complements = 0;

  friend bool operator==(const EllBucket&, const EllBucket&) = default;
};

struct NamedVerdict {
  std::string name;
  bool pass = false;
  std::string detail;

  friend bool operator==(const NamedVerdict&, const NamedVerdict&) = default;
};

struct RecordStats {
  std::uint64_t nodes = 0;
  std::string method;

  friend bool operator==(const RecordStats&, const RecordStats&) = default;
};

// One board size's results. Counts are serialized as decimal strings in
// JSON, since exact values beyond 2^53 do not survive doubles. CSV and the
// text table carry only the ten scalar columns; nested fields round-trip
// through JSON alone.
struct ResultRecord {
  int n = 0;
  std::uint64_t total = 0;
  std::optional<ClassBreakdown> classes;
  int mod2 = 0;
  int mod4 = 0;
  std::vector<EllBucket> per_ell;
  std::vector<NamedVerdict> verdicts;
  std::optional<RecordStats> stats;
  bool reference_only = false;

  friend bool operator==(const ResultRecord&, const ResultRecord&) = default;
};

inline ResultRecord total_record(int n, std::uint64_t total) {
  ResultRecord r;
  r.n = n;
  r.total = total;
  r.mod2 = static_cast<int>(total % 2);
  r.mod4 = static_cast<int>(total % 4);
  return r;
}

inline ResultRecord reference_record(int n, std::uint64_t total) {
  ResultRecord r = total_record(n, total);
  r.reference_only = true;
  return r;
}

inline ResultRecord make_record(const ClassCounts& counts) {
  ResultRecord r = total_record(counts.n, counts.total);
  r.classes = ClassBreakdown{counts.f_r, counts.f_r2_only, counts.f_e,
                             counts.c_r, counts.c_r2_only, counts.c_e};
  return r;
}

// Arithmetic consistency of one record; serialization refuses records that
// fail these identities in either direction.
inline void validate(const ResultRecord& r) {
  const std::string where = "record n=" + std::to_string(r.n);
  if (r.n < 1) throw validation_error(where + ": board size must be >= 1");
  if (r.mod2 != static_cast<int>(r.total % 2) || r.mod4 != static_cast<int>(r.total % 4)) {
    throw validation_error(where + ": mod fields disagree with the total");
  }
  if (r.classes) {
    const ClassBreakdown& c = *r.classes;
    if (c.f_r + c.f_r2_only + c.f_e != r.total) {
      throw validation_error(where + ": class sizes do not sum to the total");
    }
    if (c.f_r != 2 * c.c_r || c.f_r2_only != 4 * c.c_r2_only || c.f_e != 8 * c.c_e) {
      throw validation_error(where + ": class sizes disagree with the class counts");
    }
  }
  for (const EllBucket& b : r.per_ell) {
    if (b.completions != b.complements) {
      throw validation_error(where + ": bucket ell=" + std::to_string(b.ell) +
                             " has mismatched completion and complement counts");
    }
  }
}

enum class Format { json, csv, table };

inline Format parse_format(std::string_view text) {
  if (text == "json") return Format::json;
  if (text == "csv") return Format::csv;
  if (text == "table") return Format::table;
  throw std::invalid_argument("unknown format '" + std::string(text) +
                              "', expected json, csv or table");
}

inline std::string_view to_string(Format f) {
  switch (f) {
    case Format::json: return "json";
    case Format::csv: return "csv";
    case Format::table: return "table";
  }
  return "unknown";
}

namespace detail {

inline constexpr std::array<std::string_view, 10> kRecordColumns = {
    "n", "total", "f_r", "f_r2_only", "f_e", "c_r", "c_r2_only", "c_e", "mod2", "mod4"};

inline constexpr std::string_view kRecordCsvHeader =
    "n,total,f_r,f_r2_only,f_e,c_r,c_r2_only,c_e,mod2,mod4";

inline std::uint64_t parse_count_text(std::string_view text, std::size_t line) {
  std::uint64_t value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (text.empty() || ec != std::errc() || ptr != last) {
    throw parse_error("invalid count '" + std::string(text) + "'", line, 0);
  }
  return value;
}

inline int parse_int_text(std::string_view text, std::size_t line) {
  int value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (text.empty() || ec != std::errc() || ptr != last) {
    throw parse_error("invalid integer '" + std::string(text) + "'", line, 0);
  }
  return value;
}

inline std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(text.substr(start));
      return out;
    }
    out.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
}

inline std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines = split(text, '\n');
  for (std::string_view& line : lines) {
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  }
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  return lines;
}

inline std::string render_table(const std::vector<std::string>& header,
                                const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(header.size(), 0);
  for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
  for (const std::vector<std::string>& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  std::string out;
  const auto emit_row = [&out, &width](const std::vector<std::string>& cells) {
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (c > 0) out += "  ";
      out += cells[c];
      if (c + 1 < cells.size()) out.append(width[c] - cells[c].size(), ' ');
    }
    while (!out.empty() && out.back() == ' ') out.pop_back();
    out += '\n';
  };
  emit_row(header);
  std::vector<std::string> dashes;
  dashes.reserve(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) dashes.emplace_back(width[c], '-');
  emit_row(dashes);
  for (const std::vector<std::string>& row : rows) emit_row(row);
  return out;
}

inline std::vector<std::string> record_cells(const ResultRecord& r, std::string_view absent) {
  std::vector<std::string> cells;
  cells.reserve(kRecordColumns.size());
  cells.push_back(std::to_string(r.n));
  cells.push_back(std::to_string(r.total));
  if (r.classes) {
    const ClassBreakdown& c = *r.classes;
    for (std::uint64_t v : {c.f_r, c.f_r2_only, c.f_e, c.c_r, c.c_r2_only, c.c_e}) {
      cells.push_back(std::to_string(v));
    }
  } else {
    for (int k = 0; k < 6; ++k) cells.emplace_back(absent);
  }
  cells.push_back(std::to_string(r.mod2));
  cells.push_back(std::to_string(r.mod4));
  return cells;
}

inline ResultRecord record_from_cells(const std::vector<std::string_view>& cells,
                                      std::string_view absent, std::size_t line) {
  if (cells.size() != kRecordColumns.size()) {
    throw parse_error("expected " + std::to_string(kRecordColumns.size()) + " fields, found " +
                          std::to_string(cells.size()),
                      line, 0);
  }
  ResultRecord r;
  r.n = parse_int_text(cells[0], line);
  r.total = parse_count_text(cells[1], line);
  int absent_count = 0;
  for (std::size_t c = 2; c <= 7; ++c) {
    if (cells[c] == absent) ++absent_count;
  }
  if (absent_count == 0) {
    ClassBreakdown cb;
    cb.f_r = parse_count_text(cells[2], line);
    cb.f_r2_only = parse_count_text(cells[3], line);
    cb.f_e = parse_count_text(cells[4], line);
    cb.c_r = parse_count_text(cells[5], line);
    cb.c_r2_only = parse_count_text(cells[6], line);
    cb.c_e = parse_count_text(cells[7], line);
    r.classes = cb;
  } else if (absent_count != 6) {
    throw parse_error("class columns must be all present or all absent", line, 0);
  }
  r.mod2 = parse_int_text(cells[8], line);
  r.mod4 = parse_int_text(cells[9], line);
  return r;
}

inline ordered_json record_to_json(const ResultRecord& r) {
  ordered_json j = ordered_json::object();
  j["n"] = r.n;
  j["total"] = std::to_string(r.total);
  if (r.classes) {
    const ClassBreakdown& c = *r.classes;
    j["f_r"] = std::to_string(c.f_r);
    j["f_r2_only"] = std::to_string(c.f_r2_only);
    j["f_e"] = std::to_string(c.f_e);
    j["c_r"] = std::to_string(c.c_r);
    j["c_r2_only"] = std::to_string(c.c_r2_only);
    j["c_e"] = std::to_string(c.c_e);
  }
  j["mod2"] = r.mod2;
  j["mod4"] = r.mod4;
  if (!r.per_ell.empty()) {
    ordered_json buckets = ordered_json::array();
    for (const EllBucket& b : r.per_ell) {
      ordered_json jb = ordered_json::object();
      jb["ell"] = b.ell;
      jb["completions"] = std::to_string(b.completions);
      jb["complements"] = std::to_string(b.complements);
      buckets.push_back(std::move(jb));
    }
    j["per_ell"] = std::move(buckets);
  }
  if (!r.verdicts.empty()) {
    ordered_json verdicts = ordered_json::array();
    for (const NamedVerdict& v : r.verdicts) {
      ordered_json jv = ordered_json::object();
      jv["name"] = v.name;
      jv["pass"] = v.pass;
      if (!v.detail.empty()) jv["detail"] = v.detail;
      verdicts.push_back(std::move(jv));
    }
    j["verdicts"] = std::move(verdicts);
  }
  if (r.stats) {
    ordered_json js = ordered_json::object();
    js["nodes"] = std::to_string(r.stats->nodes);
    js["method"] = r.stats->method;
    j["stats"] = std::move(js);
  }
  if (r.reference_only) j["reference_only"] = true;
  return j;
}

inline std::uint64_t json_count_value(const ordered_json& j, const std::string& where) {
  if (j.is_string()) return parse_count_text(j.get<std::string>(), 0);
  if (j.is_number_unsigned()) return j.get<std::uint64_t>();
  if (j.is_number_integer() && j.get<std::int64_t>() >= 0) {
    return static_cast<std::uint64_t>(j.get<std::int64_t>());
  }
  throw parse_error(where + ": counts must be decimal strings or non-negative integers", 0, 0);
}

inline ResultRecord record_from_json(const ordered_json& j, std::size_t index) {
  const std::string where = "record " + std::to_string(index);
  if (!j.is_object()) throw parse_error(where + " is not an object", 0, 0);
  const auto field = [&j, &where](const char* key) -> const ordered_json& {
    const auto it = j.find(key);
    if (it == j.end()) throw parse_error(where + " is missing field '" + key + "'", 0, 0);
    return *it;
  };
  ResultRecord r;
  if (!field("n").is_number_integer()) throw parse_error(where + ": 'n' must be an integer", 0, 0);
  r.n = field("n").get<int>();
  r.total = json_count_value(field("total"), where);
  const bool has_classes = j.contains("f_r") || j.contains("f_r2_only") || j.contains("f_e") ||
                           j.contains("c_r") || j.contains("c_r2_only") || j.contains("c_e");
  if (has_classes) {
    ClassBreakdown c;
    c.f_r = json_count_value(field("f_r"), where);
    c.f_r2_only = json_count_value(field("f_r2_only"), where);
    c.f_e = json_count_value(field("f_e"), where);
    c.c_r = json_count_value(field("c_r"), where);
    c.c_r2_only = json_count_value(field("c_r2_only"), where);
    c.c_e = json_count_value(field("c_e"), where);
    r.classes = c;
  }
  if (!field("mod2").is_number_integer() || !field("mod4").is_number_integer()) {
    throw parse_error(where + ": mod fields must be integers", 0, 0);
  }
  r.mod2 = field("mod2").get<int>();
  r.mod4 = field("mod4").get<int>();
  if (j.contains("per_ell")) {
    const ordered_json& buckets = j["per_ell"];
    if (!buckets.is_array()) throw parse_error(where + ": 'per_ell' must be an array", 0, 0);
    for (const ordered_json& jb : buckets) {
      EllBucket b;
      if (!jb.is_object() || !jb.contains("ell") || !jb["ell"].is_number_integer()) {
        throw parse_error(where + ": malformed ell bucket", 0, 0);
      }
      b.ell = jb["ell"].get<int>();
      b.completions = json_count_value(jb.at("completions"), where);
      b.complements = json_count_value(jb.at("complements"), where);
      r.per_ell.push_back(b);
    }
  }
  if (j.contains("verdicts")) {
    const ordered_json& verdicts = j["verdicts"];
    if (!verdicts.is_array()) throw parse_error(where + ": 'verdicts' must be an array", 0, 0);
    for (const ordered_json& jv : verdicts) {
      NamedVerdict v;
      if (!jv.is_object() || !jv.contains("name") || !jv.contains("pass") ||
          !jv["name"].is_string() || !jv["pass"].is_boolean()) {
        throw parse_error(where + ": malformed verdict entry", 0, 0);
      }
      v.name = jv["name"].get<std::string>();
      v.pass = jv["pass"].get<bool>();
      if (jv.contains("detail") && jv["detail"].is_string()) {
        v.detail = jv["detail"].get<std::string>();
      }
      r.verdicts.push_back(std::move(v));
    }
  }
  if (j.contains("stats")) {
    const ordered_json& js = j["stats"];
    if (!js.is_object() || !js.contains("nodes") || !js.contains("method") ||
        !js["method"].is_string()) {
      throw parse_error(where + ": malformed stats entry", 0, 0);
    }
    RecordStats s;
    s.nodes = json_count_value(js["nodes"], where);
    s.method = js["method"].get<std::string>();
    r.stats = std::move(s);
  }
  if (j.contains("reference_only")) {
    if (!j["reference_only"].is_boolean()) {
      throw parse_error(where + ": 'reference_only' must be a boolean", 0, 0);
    }
    r.reference_only = j["reference_only"].get<bool>();
  }
  return r;
}

}  // namespace detail

// Serializes records in the requested format. Emission is a pure function
// of the records, so equal inputs produce byte-identical output.
inline std::string emit(const std::vector<ResultRecord>& records, Format format) {
  for (const ResultRecord& r : records) validate(r);
  switch (format) {
    case Format::json: {
      ordered_json doc = ordered_json::array();
      for (const ResultRecord& r : records) doc.push_back(detail::record_to_json(r));
      return doc.dump(2) + "\n";
    }
    case Format::csv: {
      std::string out{detail::kRecordCsvHeader};
      out += '\n';
      for (const ResultRecord& r : records) {
        const std::vector<std::string> cells = detail::record_cells(r, "");
        for (std::size_t c = 0; c < cells.size(); ++c) {
          if (c > 0) out += ',';
          out += cells[c];
        }
        out += '\n';
      }
      return out;
    }
    case Format::table: {
      std::vector<std::string> header;
      for (std::string_view name : detail::kRecordColumns) header.emplace_back(name);
      std::vector<std::vector<std::string>> rows;
      rows.reserve(records.size());
      for (const ResultRecord& r : records) rows.push_back(detail::record_cells(r, "-"));
      return detail::render_table(header, rows);
    }
  }
  throw std::invalid_argument("emit: unknown format");
}

// Inverse of emit for each format, up to the fields the format carries.
// JSON round-trips full records; CSV and the table recover the ten scalar
// columns. Parsed records are validated before being returned.
inline std::vector<ResultRecord> parse(std::string_view text, Format format) {
  std::vector<ResultRecord> records;
  switch (format) {
    case Format::json: {
      ordered_json doc;
      try {
        doc = ordered_json::parse(text);
      } catch (const nlohmann::json::parse_error& e) {
        throw parse_error(std::string("invalid JSON: ") + e.what(), 0, e.byte);
      }
      if (!doc.is_array()) throw parse_error("expected a JSON array of records", 0, 0);
      for (std::size_t i = 0; i < doc.size(); ++i) {
        records.push_back(detail::record_from_json(doc[i], i));
      }
      break;
    }
    case Format::csv: {
      const std::vector<std::string_view> lines = detail::split_lines(text);
      if (lines.empty() || lines[0] != detail::kRecordCsvHeader) {
        throw parse_error("missing or malformed CSV header", 1, 0);
      }
      for (std::size_t i = 1; i < lines.size(); ++i) {
        if (lines[i].empty()) continue;
        records.push_back(detail::record_from_cells(detail::split(lines[i], ','), "", i + 1));
      }
      break;
    }
    case Format::table: {
      const std::vector<std::string_view> lines = detail::split_lines(text);
      if (lines.size() < 2) throw parse_error("table needs a header and a separator line", 1, 0);
      for (std::size_t i = 2; i < lines.size(); ++i) {
        std::istringstream stream{std::string(lines[i])};
        std::vector<std::string> tokens;
        for (std::string token; stream >> token;) tokens.push_back(std::move(token));
        if (tokens.empty()) continue;
        std::vector<std::string_view> cells(tokens.begin(), tokens.end());
        records.push_back(detail::record_from_cells(cells, "-", i + 1));
      }
      break;
    }
  }
  for (const ResultRecord& r : records) validate(r);
  return records;
}

// Known-good totals to compare computed results against.
struct ReferenceTable {
  std::map<int, std::uint64_t> entries;
  std::string source;
};

// Small boards everyone can recompute, plus the published 27-board record,
// which is far beyond this library's search ceiling and is cross-checked as
// data only.
inline ReferenceTable builtin_reference_table() {
  ReferenceTable table;
  table.source = "built-in: exhaustively recomputable small boards plus the 27-board record";
  const std::uint64_t small[] = {1, 0, 0, 2, 10, 4, 40, 92, 352, 724};
  for (int n = 1; n <= 10; ++n) table.entries[n] = small[n - 1];
  table.entries[27] = kQueens27Record;
  return table;
}

// Two-column CSV "n,expected_total". Lines starting with '#' are comments;
// a "# source:" comment names where the numbers come from.
inline ReferenceTable parse_reference_table(std::string_view text) {
  ReferenceTable table;
  const std::vector<std::string_view> lines = detail::split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::size_t line_no = i + 1;
    std::string_view line = lines[i];
    if (line.empty()) continue;
    if (line.front() == '#') {
      constexpr std::string_view kSourcePrefix = "# source:";
      if (line.substr(0, kSourcePrefix.size()) == kSourcePrefix) {
        std::string_view rest = line.substr(kSourcePrefix.size());
        while (!rest.empty() && rest.front() == ' ') rest.remove_prefix(1);
        table.source = std::string(rest);
      }
      continue;
    }
    if (line == "n,expected_total") continue;
    const std::vector<std::string_view> cells = detail::split(line, ',');
    if (cells.size() != 2) {
      throw parse_error("expected 'n,expected_total'", line_no, 0);
    }
    const int n = detail::parse_int_text(cells[0], line_no);
    if (n < 1) throw parse_error("board size must be >= 1", line_no, 0);
    const std::uint64_t expected = detail::parse_count_text(cells[1], line_no);
    if (!table.entries.emplace(n, expected).second) {
      throw parse_error("duplicate entry for n=" + std::to_string(n), line_no, 0);
    }
  }
  return table;
}

inline std::string emit_reference_table(const ReferenceTable& table) {
  std::string out;
  if (!table.source.empty()) out += "# source: " + table.source + "\n";
  out += "n,expected_total\n";
  for (const auto& [n, expected] : table.entries) {
    out += std::to_string(n) + "," + std::to_string(expected) + "\n";
  }
  return out;
}

struct Discrepancy {
  int n = 0;
  std::uint64_t computed = 0;
  std::uint64_t expected = 0;

  friend bool operator==(const Discrepancy&, const Discrepancy&) = default;
};

// Compares computed records against a reference table. Records marked
// reference_only are skipped, as are board sizes the table does not cover.
inline std::vector<Discrepancy> cross_check(const std::vector<ResultRecord>& records,
                                            const ReferenceTable& table) {
  std::vector<Discrepancy> out;
  for (const ResultRecord& r : records) {
    if (r.reference_only) continue;
    const auto it = table.entries.find(r.n);
    if (it == table.entries.end()) continue;
    if (r.total != it->second) out.push_back({r.n, r.total, it->second});
  }
  return out;
}

// Serialized views of verification verdicts; one row per verdict.
inline std::string emit_verdicts(const std::vector<Verdict>& verdicts, Format format) {
  switch (format) {
    case Format::json: {
      ordered_json doc = ordered_json::array();
      for (const Verdict& v : verdicts) {
        ordered_json j = ordered_json::object();
        j["n"] = v.n;
        j["name"] = v.name;
        j["pass"] = v.pass;
        if (v.excluded_case) j["excluded_case"] = true;
        if (!v.detail.empty()) j["detail"] = v.detail;
        doc.push_back(std::move(j));
      }
      return doc.dump(2) + "\n";
    }
    case Format::csv: {
      std::string out = "n,name,pass\n";
      for (const Verdict& v : verdicts) {
        out += std::to_string(v.n) + "," + v.name + "," + (v.pass ? "1" : "0") + "\n";
      }
      return out;
    }
    case Format::table: {
      const std::vector<std::string> header = {"n", "name", "pass", "detail"};
      std::vector<std::vector<std::string>> rows;
      rows.reserve(verdicts.size());
      for (const Verdict& v : verdicts) {
        rows.push_back({std::to_string(v.n), v.name, v.pass ? "pass" : "FAIL", v.detail});
      }
      return detail::render_table(header, rows);
    }
  }
  throw std::invalid_argument("emit_verdicts: unknown format");
}

// Serialized views of per-bucket border reports; one row per ell.
inline std::string emit_border_reports(const std::vector<BorderReport>& reports, Format format) {
  switch (format) {
    case Format::json: {
      ordered_json doc = ordered_json::array();
      for (const BorderReport& b : reports) {
        ordered_json j = ordered_json::object();
        j["n"] = b.n;
        j["ell"] = b.ell;
        j["completions"] = std::to_string(b.completions);
        j["complements"] = std::to_string(b.complements);
        j["mirror_partner"] = std::to_string(b.mirror_partner);
        j["closure_ok"] = b.closure_ok;
        j["fixed_point_free"] = b.fixed_point_free;
        j["even_ok"] = b.even_ok;
        j["pairing_ok"] = b.pairing_ok;
        doc.push_back(std::move(j));
      }
      return doc.dump(2) + "\n";
    }
    case Format::csv: {
      std::string out = "n,ell,completions,complements,mirror_partner,pairing_ok\n";
      for (const BorderReport& b : reports) {
        out += std::to_string(b.n) + "," + std::to_string(b.ell) + "," +
               std::to_string(b.completions) + "," + std::to_string(b.complements) + "," +
               std::to_string(b.mirror_partner) + "," + (b.pairing_ok ? "1" : "0") + "\n";
      }
      return out;
    }
    case Format::table: {
      const std::vector<std::string> header = {"n",      "ell",            "completions",
                                               "complements", "mirror_partner", "pairing_ok"};
      std::vector<std::vector<std::string>> rows;
      rows.reserve(reports.size());
      for (const BorderReport& b : reports) {
        rows.push_back({std::to_string(b.n), std::to_string(b.ell), std::to_string(b.completions),
                        std::to_string(b.complements), std::to_string(b.mirror_partner),
                        b.pairing_ok ? "yes" : "no"});
      }
      return detail::render_table(header, rows);
    }
  }
  throw std::invalid_argument("emit_border_reports: unknown format");
}

}  // namespace qsl
