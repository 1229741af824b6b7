#ifndef RCASPACE_INDEX_KIND_HPP
#define RCASPACE_INDEX_KIND_HPP

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "rcaspace/error.hpp"

namespace rcaspace {

/// Scientific production indicator a table measures.
enum class IndexKind { documents, citations, self_citations, citations_per_document, h_index };

inline constexpr std::array<IndexKind, 5> all_index_kinds{
    IndexKind::documents, IndexKind::citations, IndexKind::self_citations,
    IndexKind::citations_per_document, IndexKind::h_index};

constexpr std::string_view to_string(IndexKind kind) noexcept {
  switch (kind) {
    case IndexKind::documents: return "documents";
    case IndexKind::citations: return "citations";
    case IndexKind::self_citations: return "self_citations";
    case IndexKind::citations_per_document: return "citations_per_document";
    case IndexKind::h_index: return "h_index";
  }
  return "documents";
}

inline std::optional<IndexKind> try_parse_index_kind(std::string_view text) noexcept {
  for (IndexKind kind : all_index_kinds)
    if (to_string(kind) == text) return kind;
  return std::nullopt;
}

inline IndexKind parse_index_kind(std::string_view text) {
  if (auto kind = try_parse_index_kind(text)) return *kind;
  throw DataError("unknown index kind \"" + std::string(text) + "\"");
}

} // namespace rcaspace

#endif
