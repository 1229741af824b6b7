#include "demo_data.hpp"

#include <cmath>
#include <cstdint>
#include <string>

#include "rcaspace/csv.hpp"
#include "rcaspace/labels.hpp"

namespace rcaspace::tools {

namespace {

constexpr const char* kCountries[] = {
    "Aldmere",   "Borvania", "Caldera",  "Dunmark",   "Elsinor", "Faroe Reach",
    "Galdoria",  "Hestia",   "Istrelle", "Jorvik",    "Kestrel", "Lumeria",
    "Marrowind", "Norvale",  "Oskaria",  "Port Amber", "Quenlin", "Rhydell",
    "Saltmere",  "Tarrow",   "Ulvenia",  "Veloria",   "Westhold", "Zemlya",
};
constexpr std::size_t kCountryCount = std::size(kCountries);

std::int64_t documents(std::size_t c, std::size_t f) {
  const std::int64_t size = 400 + 350 * static_cast<std::int64_t>((c * 37 + 11) % 17);
  std::int64_t profile = 1 + static_cast<std::int64_t>((c * 7 + f * 11 + (c * f) % 5) % 13);
  if ((c + 2 * f) % 6 == 0) profile *= 4;
  if (f % 9 == c % 9) profile *= 3;
  return size * profile / 4;
}

std::int64_t citations(std::size_t c, std::size_t f) {
  return documents(c, f) * static_cast<std::int64_t>(3 + (c * 3 + f * 5) % 9);
}

std::int64_t h_index(std::size_t c, std::size_t f) {
  const double h = std::sqrt(static_cast<double>(citations(c, f))) / static_cast<double>(2 + f % 4);
  return static_cast<std::int64_t>(h);
}

// The smallest country publishes nothing in a few fields; those rows are
// left out of the files and come back as zero cells.
bool absent(std::size_t c, std::size_t f) { return c == kCountryCount - 1 && f % 8 == 3; }

template <typename Value>
std::string table_csv(Value value) {
  const auto& entries = LabelRegistry::builtin().entries();
  std::string out = "country,field,value\n";
  for (std::size_t c = 0; c < kCountryCount; ++c)
    for (std::size_t f = 0; f < entries.size(); ++f) {
      if (absent(c, f)) continue;
      out += csv::join_row({kCountries[c], entries[f].full_name, std::to_string(value(c, f))});
    }
  return out;
}

} // namespace

std::vector<DemoFile> demo_dataset() {
  std::vector<DemoFile> files;
  files.push_back({"manifest.json",
                   "{\n"
                   "  \"dataset_name\": \"rcaspace synthetic demo\",\n"
                   "  \"period\": \"synthetic\",\n"
                   "  \"tables\": [\n"
                   "    { \"index\": \"documents\", \"path\": \"documents.csv\" },\n"
                   "    { \"index\": \"citations\", \"path\": \"citations.csv\" },\n"
                   "    { \"index\": \"h_index\", \"path\": \"h_index.csv\" }\n"
                   "  ]\n"
                   "}\n"});
  files.push_back({"documents.csv", table_csv(documents)});
  files.push_back({"citations.csv", table_csv(citations)});
  files.push_back({"h_index.csv", table_csv(h_index)});
  return files;
}

} // namespace rcaspace::tools
