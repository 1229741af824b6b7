#ifndef RCASPACE_LABELS_HPP
#define RCASPACE_LABELS_HPP

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "rcaspace/error.hpp"
#include "rcaspace/unicode.hpp"

namespace rcaspace {

struct LabelEntry {
  std::string full_name;
  std::string label;
};

/// Bidirectional map between field-of-knowledge names and short display labels.
class LabelRegistry {
public:
  LabelRegistry() = default;

  explicit LabelRegistry(std::vector<LabelEntry> entries) {
    for (auto& e : entries) add(std::move(e.full_name), std::move(e.label));
  }

  /// The 27 subject areas and their abbreviations.
  static const LabelRegistry& builtin() {
    static const LabelRegistry registry(std::vector<LabelEntry>{
        {"Mathematics", "Mth"},
        {"Physics and Astronomy", "Phy-Ast"},
        {"Chemistry", "Chm"},
        {"Chemical Engineering", "ChmEng"},
        {"Multidisciplinary", "Mlt"},
        {"Agricultural and Biological Sciences", "Agr-BlgScn"},
        {"Earth and Planetary Sciences", "Ert-PlnScn"},
        {"Veterinary", "Vtr"},
        {"Energy", "Enr"},
        {"Environmental Science", "EnvScn"},
        {"Materials Science", "MtrScn"},
        {"Engineering", "Eng"},
        {"Economics, Econometrics and Finance", "Ecn-Ecnm-Fnn"},
        {"Business, Management and Accounting", "Bsn-Mng-Acc"},
        {"Social Sciences", "SclScn"},
        {"Arts and Humanities", "Art-Hmn"},
        {"Psychology", "Psy"},
        {"Decision Sciences", "DcsSci"},
        {"Computer Science", "CmpScn"},
        {"Neuroscience", "Nrsc"},
        {"Biochemistry, Genetics and Molecular Biology", "Bch-Gnt-MlcBlg"},
        {"Health Professions", "HltPrf"},
        {"Immunology and Microbiology", "Inm-Mcr"},
        {"Pharmacology, Toxicology and Pharmaceutics", "Phr-Txc-Phr"},
        {"Nursing", "Nrs"},
        {"Dentistry", "Dnt"},
        {"Medicine", "Mdc"},
    });
    return registry;
  }

  void add(std::string full_name, std::string label) {
    full_name = normalize_name(full_name);
    label = normalize_name(label);
    if (full_name.empty() || label.empty()) throw DataError("label registry entries must be non-empty");
    if (by_full_.contains(full_name)) throw DataError("duplicate full name in label registry: " + full_name);
    if (by_label_.contains(label)) throw DataError("duplicate label in label registry: " + label);
    by_full_.emplace(full_name, entries_.size());
    by_label_.emplace(label, entries_.size());
    entries_.push_back({std::move(full_name), std::move(label)});
  }

  const std::vector<LabelEntry>& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }

  std::optional<std::string> label_for(std::string_view full_name) const {
    if (auto it = by_full_.find(std::string(full_name)); it != by_full_.end())
      return entries_[it->second].label;
    return std::nullopt;
  }

  std::optional<std::string> full_name_for(std::string_view label) const {
    if (auto it = by_label_.find(std::string(label)); it != by_label_.end())
      return entries_[it->second].full_name;
    return std::nullopt;
  }

  bool is_label(std::string_view name) const { return by_label_.contains(std::string(name)); }

private:
  std::vector<LabelEntry> entries_;
  std::unordered_map<std::string, std::size_t> by_full_;
  std::unordered_map<std::string, std::size_t> by_label_;
};

} // namespace rcaspace

#endif
