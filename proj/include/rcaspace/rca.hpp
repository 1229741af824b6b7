#ifndef RCASPACE_RCA_HPP
#define RCASPACE_RCA_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "rcaspace/error.hpp"
#include "rcaspace/matrix.hpp"
#include "rcaspace/production_table.hpp"

namespace rcaspace {

/// Revealed comparative advantage per (country, field).
///
/// `defined(c, f)` is 0 where the country or the field has no production at
/// all; those cells hold 0 and are excluded from distribution statistics.
struct RcaMatrix {
  IndexKind index_kind = IndexKind::documents;
  std::vector<std::string> countries;
  std::vector<std::string> fields;
  Matrix<double> values;
  Matrix<std::uint8_t> defined;

  std::size_t undefined_count() const {
    std::size_t n = 0;
    for (auto d : defined.data()) n += d == 0;
    return n;
  }

  /// Values of all defined cells in row-major order.
  std::vector<double> defined_values() const {
    std::vector<double> out;
    out.reserve(values.size());
    for (std::size_t k = 0; k < values.size(); ++k)
      if (defined.data()[k]) out.push_back(values.data()[k]);
    return out;
  }
};

/// Binary knowledge-space matrix: 1 where RCA >= 1.
struct AdvantageMatrix {
  std::vector<std::string> countries;
  std::vector<std::string> fields;
  Matrix<std::uint8_t> m;

  friend bool operator==(const AdvantageMatrix&, const AdvantageMatrix&) = default;
};

struct DiversityVector {
  std::vector<std::string> countries;
  std::vector<std::size_t> counts;
};

struct UbiquityVector {
  std::vector<std::string> fields;
  std::vector<std::size_t> counts;
};

/// RCA(c,f) = (X(c,f) / X(c,.)) / (X(.,f) / X(.,.)).
/// Totals use pairwise summation in a fixed order.
inline RcaMatrix compute_rca(const ProductionTable& table) {
  const double grand = table.grand_total();
  if (!(grand > 0.0)) throw DataError("empty production");

  const auto country_totals = table.country_totals();
  const auto field_totals = table.field_totals();

  const std::size_t nc = table.countries.size();
  const std::size_t nf = table.fields.size();
  std::vector<double> world_share(nf);
  for (std::size_t f = 0; f < nf; ++f) world_share[f] = field_totals[f] / grand;

  RcaMatrix out;
  out.index_kind = table.index_kind;
  out.countries = table.countries;
  out.fields = table.fields;
  out.values = Matrix<double>(nc, nf, 0.0);
  out.defined = Matrix<std::uint8_t>(nc, nf, 0);

  for (std::size_t c = 0; c < nc; ++c) {
    if (!(country_totals[c] > 0.0)) continue;
    for (std::size_t f = 0; f < nf; ++f) {
      if (!(field_totals[f] > 0.0)) continue;
      out.values(c, f) = (table.values(c, f) / country_totals[c]) / world_share[f];
      out.defined(c, f) = 1;
    }
  }
  return out;
}

/// M(c,f) = 1 iff the cell is defined and RCA(c,f) >= 1 (closed bound, no slack).
inline AdvantageMatrix threshold_advantage(const RcaMatrix& rca) {
  AdvantageMatrix adv{rca.countries, rca.fields,
                      Matrix<std::uint8_t>(rca.values.rows(), rca.values.cols(), 0)};
  for (std::size_t k = 0; k < rca.values.size(); ++k)
    adv.m.data()[k] = (rca.defined.data()[k] && rca.values.data()[k] >= 1.0) ? 1 : 0;
  return adv;
}

inline DiversityVector diversity(const AdvantageMatrix& adv) {
  DiversityVector out{adv.countries, std::vector<std::size_t>(adv.m.rows(), 0)};
  for (std::size_t c = 0; c < adv.m.rows(); ++c)
    for (auto v : adv.m.row(c)) out.counts[c] += v;
  return out;
}

inline UbiquityVector ubiquity(const AdvantageMatrix& adv) {
  UbiquityVector out{adv.fields, std::vector<std::size_t>(adv.m.cols(), 0)};
  for (std::size_t c = 0; c < adv.m.rows(); ++c)
    for (std::size_t f = 0; f < adv.m.cols(); ++f) out.counts[f] += adv.m(c, f);
  return out;
}

/// Swaps the roles of countries and fields.
inline AdvantageMatrix transpose(const AdvantageMatrix& adv) {
  return {adv.fields, adv.countries, adv.m.transposed()};
}

} // namespace rcaspace

#endif
