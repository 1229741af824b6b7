#ifndef RCASPACE_INGEST_HPP
#define RCASPACE_INGEST_HPP

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <istream>
#include <iterator>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "rcaspace/csv.hpp"
#include "rcaspace/error.hpp"
#include "rcaspace/labels.hpp"
#include "rcaspace/numeric.hpp"
#include "rcaspace/production_table.hpp"
#include "rcaspace/unicode.hpp"

namespace rcaspace {

namespace detail {

inline std::string at_line(std::size_t line) { return " at line " + std::to_string(line); }

/// Accumulates (country, field, value) cells in first-appearance order.
class TableBuilder {
public:
  explicit TableBuilder(IndexKind kind) : kind_(kind) {}

  void add(std::string_view country_raw, std::string_view field_raw, double value, std::size_t line) {
    if (!is_valid_utf8(country_raw) || !is_valid_utf8(field_raw))
      throw DataError("invalid UTF-8" + at_line(line));
    std::string country = normalize_name(country_raw);
    std::string field = normalize_name(field_raw);
    if (country.empty()) throw DataError("empty country name" + at_line(line));
    if (field.empty()) throw DataError("empty field name" + at_line(line));

    const std::size_t c = intern(countries_, country_index_, country);
    const std::size_t f = intern(fields_, field_index_, field);
    if (!seen_.insert({c, f}).second)
      throw DataError("duplicate cell (" + country + ", " + field + ")" + at_line(line));
    cells_.push_back({c, f, value});
  }

  bool empty() const noexcept { return cells_.empty(); }

  ProductionTable build() && {
    ProductionTable table;
    table.index_kind = kind_;
    table.countries = std::move(countries_);
    table.fields = std::move(fields_);
    table.values = Matrix<double>(table.countries.size(), table.fields.size(), 0.0);
    for (const auto& cell : cells_) table.values(cell.country, cell.field) = cell.value;
    return table;
  }

private:
  struct Cell {
    std::size_t country;
    std::size_t field;
    double value;
  };

  static std::size_t intern(std::vector<std::string>& names,
                            std::unordered_map<std::string, std::size_t>& index,
                            const std::string& name) {
    auto [it, inserted] = index.emplace(name, names.size());
    if (inserted) names.push_back(name);
    return it->second;
  }

  IndexKind kind_;
  std::vector<std::string> countries_;
  std::vector<std::string> fields_;
  std::unordered_map<std::string, std::size_t> country_index_;
  std::unordered_map<std::string, std::size_t> field_index_;
  std::set<std::pair<std::size_t, std::size_t>> seen_;
  std::vector<Cell> cells_;
};

inline double parse_cell_value(std::string_view raw, std::size_t line) {
  const std::string_view text = trim(raw);
  const auto value = parse_double(text);
  if (!value) throw DataError("non-numeric value \"" + std::string(text) + "\"" + at_line(line));
  if (!std::isfinite(*value)) throw DataError("non-finite value" + at_line(line));
  if (*value < 0.0) throw DataError("negative value" + at_line(line));
  return *value == 0.0 ? 0.0 : *value;  // folds -0
}

inline std::string slurp(std::istream& in) {
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

} // namespace detail

/// Reads a whole file. Missing or unreadable files raise IoError.
inline std::string read_file(const std::filesystem::path& path) {
  std::error_code ec;
  if (!std::filesystem::is_regular_file(path, ec))
    throw IoError("file not found: " + path.string());
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open file: " + path.string());
  return detail::slurp(in);
}

/// Parses the long CSV form `country,field,value`. An optional fourth column
/// `index` may repeat the index kind on every row; it must match `kind`.
inline ProductionTable parse_production_csv(std::string_view text, IndexKind kind) {
  const auto records = csv::parse(text);
  if (records.empty()) throw DataError("missing header: expected country,field,value");

  const auto& header = records.front().fields;
  auto header_is = [&](std::size_t k, std::string_view name) {
    return header.size() > k && trim(header[k]) == name;
  };
  const bool has_index_column = header.size() == 4 && header_is(3, "index");
  if (!(header_is(0, "country") && header_is(1, "field") && header_is(2, "value")) ||
      (header.size() != 3 && !has_index_column))
    throw DataError("bad header at line " + std::to_string(records.front().line) +
                    ": expected country,field,value");
  const std::size_t width = header.size();

  detail::TableBuilder builder(kind);
  for (std::size_t r = 1; r < records.size(); ++r) {
    const auto& rec = records[r];
    if (rec.fields.size() != width)
      throw DataError("malformed CSV" + detail::at_line(rec.line) + ": expected " +
                      std::to_string(width) + " fields, found " + std::to_string(rec.fields.size()));
    if (has_index_column) {
      const auto row_kind = try_parse_index_kind(trim(rec.fields[3]));
      if (!row_kind)
        throw DataError("unknown index kind \"" + std::string(trim(rec.fields[3])) + "\"" +
                        detail::at_line(rec.line));
      if (*row_kind != kind)
        throw DataError("index kind mismatch" + detail::at_line(rec.line) + ": expected " +
                        std::string(to_string(kind)));
    }
    const double value = detail::parse_cell_value(rec.fields[2], rec.line);
    builder.add(rec.fields[0], rec.fields[1], value, rec.line);
  }
  if (builder.empty()) throw DataError("no data rows");
  return std::move(builder).build();
}

inline ProductionTable parse_production_csv(std::istream& in, IndexKind kind) {
  return parse_production_csv(detail::slurp(in), kind);
}

/// Convenience reader for a wide matrix: header `country,<field>,<field>,...`
/// and one row per country. Empty cells are treated as absent.
inline ProductionTable parse_wide_csv(std::string_view text, IndexKind kind) {
  const auto records = csv::parse(text);
  if (records.empty()) throw DataError("missing header: expected country,<fields...>");
  const auto& header = records.front().fields;
  if (header.size() < 2 || trim(header[0]) != "country")
    throw DataError("bad header at line " + std::to_string(records.front().line) +
                    ": expected country,<fields...>");

  detail::TableBuilder builder(kind);
  bool any_row = false;
  for (std::size_t r = 1; r < records.size(); ++r) {
    const auto& rec = records[r];
    if (rec.fields.size() != header.size())
      throw DataError("malformed CSV" + detail::at_line(rec.line) + ": expected " +
                      std::to_string(header.size()) + " fields, found " +
                      std::to_string(rec.fields.size()));
    any_row = true;
    for (std::size_t k = 1; k < header.size(); ++k) {
      if (trim(rec.fields[k]).empty()) continue;
      const double value = detail::parse_cell_value(rec.fields[k], rec.line);
      builder.add(rec.fields[0], header[k], value, rec.line);
    }
  }
  if (!any_row) throw DataError("no data rows");
  if (builder.empty()) throw DataError("no data cells");
  return std::move(builder).build();
}

/// Canonical long form: every cell, row-major, shortest round-trip numbers.
inline std::string serialize_production_csv(const ProductionTable& table) {
  std::string out = "country,field,value\n";
  for (std::size_t c = 0; c < table.countries.size(); ++c)
    for (std::size_t f = 0; f < table.fields.size(); ++f)
      out += csv::join_row({table.countries[c], table.fields[f], format_double(table.values(c, f))});
  return out;
}

/// Replaces registry full names by their labels. Unknown names pass through
/// with a warning. If two columns end up with the same label they are summed,
/// also with a warning.
inline ProductionTable resolve_labels(const ProductionTable& table, const LabelRegistry& registry,
                                      std::vector<std::string>& warnings) {
  std::vector<std::string> names;
  std::vector<std::size_t> target(table.fields.size());
  std::unordered_map<std::string, std::size_t> index;

  for (std::size_t f = 0; f < table.fields.size(); ++f) {
    const std::string& name = table.fields[f];
    std::string resolved = name;
    if (auto label = registry.label_for(name)) {
      resolved = *label;
    } else if (!registry.is_label(name)) {
      warnings.push_back("unrecognized field name \"" + name + "\" kept as is");
    }
    auto [it, inserted] = index.emplace(resolved, names.size());
    if (inserted) {
      names.push_back(resolved);
    } else {
      warnings.push_back("field \"" + name + "\" merged into \"" + resolved + "\"");
    }
    target[f] = it->second;
  }

  ProductionTable out;
  out.index_kind = table.index_kind;
  out.countries = table.countries;
  out.fields = std::move(names);
  out.values = Matrix<double>(table.countries.size(), out.fields.size(), 0.0);
  for (std::size_t c = 0; c < table.countries.size(); ++c)
    for (std::size_t f = 0; f < table.fields.size(); ++f) out.values(c, target[f]) += table.values(c, f);
  return out;
}

inline ProductionTable resolve_labels(const ProductionTable& table, const LabelRegistry& registry) {
  std::vector<std::string> ignored;
  return resolve_labels(table, registry, ignored);
}

/// Re-indexes every table onto the union of countries and the union of fields,
/// both sorted lexicographically (byte order). Missing cells become 0.
inline std::vector<ProductionTable> validate_alignment(const std::vector<ProductionTable>& tables) {
  std::set<std::string> country_set;
  std::set<std::string> field_set;
  for (const auto& t : tables) {
    country_set.insert(t.countries.begin(), t.countries.end());
    field_set.insert(t.fields.begin(), t.fields.end());
  }
  const std::vector<std::string> countries(country_set.begin(), country_set.end());
  const std::vector<std::string> fields(field_set.begin(), field_set.end());

  auto position = [](const std::vector<std::string>& sorted, const std::string& name) {
    return static_cast<std::size_t>(std::lower_bound(sorted.begin(), sorted.end(), name) - sorted.begin());
  };

  std::vector<ProductionTable> out;
  out.reserve(tables.size());
  for (const auto& t : tables) {
    ProductionTable aligned;
    aligned.index_kind = t.index_kind;
    aligned.countries = countries;
    aligned.fields = fields;
    aligned.values = Matrix<double>(countries.size(), fields.size(), 0.0);
    std::vector<std::size_t> field_pos(t.fields.size());
    for (std::size_t f = 0; f < t.fields.size(); ++f) field_pos[f] = position(fields, t.fields[f]);
    for (std::size_t c = 0; c < t.countries.size(); ++c) {
      const std::size_t row = position(countries, t.countries[c]);
      for (std::size_t f = 0; f < t.fields.size(); ++f) aligned.values(row, field_pos[f]) = t.values(c, f);
    }
    out.push_back(std::move(aligned));
  }
  return out;
}

struct ManifestTable {
  IndexKind index_kind = IndexKind::documents;
  std::string path;                 // as written in the manifest
  std::filesystem::path resolved;   // relative to the manifest's directory
};

struct Manifest {
  std::string dataset_name;
  std::string period;
  std::vector<ManifestTable> tables;
};

/// Parses manifest JSON; `base_dir` anchors relative table paths.
inline Manifest parse_manifest(std::string_view text, const std::filesystem::path& base_dir) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw DataError(std::string("invalid manifest JSON: ") + e.what());
  }
  if (!doc.is_object()) throw DataError("manifest must be a JSON object");

  auto text_member = [&](const nlohmann::json& obj, const char* key) -> std::string {
    if (!obj.contains(key) || !obj.at(key).is_string())
      throw DataError(std::string("manifest: missing or non-text \"") + key + "\"");
    return obj.at(key).get<std::string>();
  };

  Manifest m;
  m.dataset_name = text_member(doc, "dataset_name");
  m.period = text_member(doc, "period");
  if (!doc.contains("tables") || !doc.at("tables").is_array() || doc.at("tables").empty())
    throw DataError("manifest: \"tables\" must be a non-empty array");

  std::set<IndexKind> seen;
  for (const auto& entry : doc.at("tables")) {
    if (!entry.is_object()) throw DataError("manifest: table entries must be objects");
    ManifestTable t;
    const std::string index = text_member(entry, "index");
    const auto kind = try_parse_index_kind(index);
    if (!kind) throw DataError("unknown index kind \"" + index + "\" in manifest");
    if (!seen.insert(*kind).second) throw DataError("manifest lists index \"" + index + "\" twice");
    t.index_kind = *kind;
    t.path = text_member(entry, "path");
    const std::filesystem::path p(t.path);
    t.resolved = p.is_absolute() ? p : base_dir / p;
    m.tables.push_back(std::move(t));
  }
  return m;
}

inline Manifest load_manifest(const std::filesystem::path& path) {
  const std::string text = read_file(path);
  return parse_manifest(text, path.parent_path());
}

} // namespace rcaspace

#endif
