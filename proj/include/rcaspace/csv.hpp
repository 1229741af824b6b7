#ifndef RCASPACE_CSV_HPP
#define RCASPACE_CSV_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "rcaspace/error.hpp"

namespace rcaspace::csv {

struct Record {
  std::size_t line = 0;  // 1-based physical line where the record starts
  std::vector<std::string> fields;
};

/// Splits comma-separated text into records. Fields may be wrapped in double
/// quotes; inside quotes `""` is a literal quote and newlines are kept.
/// Blank lines are skipped. A leading UTF-8 byte-order mark is ignored.
inline std::vector<Record> parse(std::string_view text) {
  if (text.starts_with("\xEF\xBB\xBF")) text.remove_prefix(3);

  std::vector<Record> records;
  std::size_t line = 1;
  std::size_t i = 0;
  const std::size_t n = text.size();

  while (i < n) {
    Record rec;
    rec.line = line;
    std::string field;
    bool blank = true;

    for (;;) {
      if (i < n && text[i] == '"') {
        blank = false;
        ++i;
        for (;;) {
          if (i >= n) throw DataError("malformed CSV at line " + std::to_string(rec.line) +
                                      ": unterminated quoted field");
          const char ch = text[i];
          if (ch == '"') {
            if (i + 1 < n && text[i + 1] == '"') { field += '"'; i += 2; continue; }
            ++i;
            break;
          }
          if (ch == '\n') ++line;
          field += ch;
          ++i;
        }
        if (i < n && text[i] != ',' && text[i] != '\n' && text[i] != '\r')
          throw DataError("malformed CSV at line " + std::to_string(line) +
                          ": unexpected character after closing quote");
      } else {
        while (i < n && text[i] != ',' && text[i] != '\n' && text[i] != '\r') {
          if (text[i] == '"')
            throw DataError("malformed CSV at line " + std::to_string(line) +
                            ": quote inside unquoted field");
          field += text[i];
          ++i;
        }
        if (!field.empty()) blank = false;
      }

      rec.fields.push_back(std::move(field));
      field.clear();
      if (i >= n) break;
      if (text[i] == ',') { blank = false; ++i; continue; }
      // end of record
      if (text[i] == '\r') ++i;
      if (i < n && text[i] == '\n') ++i;
      ++line;
      break;
    }

    if (!blank) records.push_back(std::move(rec));
  }
  return records;
}

/// Quotes a field when it would not survive an unquoted round trip.
inline std::string escape(std::string_view field) {
  const bool needs_quotes =
      field.find_first_of(",\"\r\n") != std::string_view::npos ||
      (!field.empty() && (field.front() == ' ' || field.back() == ' ' ||
                          field.front() == '\t' || field.back() == '\t'));
  if (!needs_quotes) return std::string(field);
  std::string out = "\"";
  for (char ch : field) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

inline std::string join_row(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t k = 0; k < fields.size(); ++k) {
    if (k) out += ',';
    out += escape(fields[k]);
  }
  out += '\n';
  return out;
}

} // namespace rcaspace::csv

#endif
