#ifndef RCASPACE_PRODUCTION_TABLE_HPP
#define RCASPACE_PRODUCTION_TABLE_HPP

#include <string>
#include <vector>

#include "rcaspace/index_kind.hpp"
#include "rcaspace/matrix.hpp"
#include "rcaspace/numeric.hpp"

namespace rcaspace {

/// Country x field production for one index kind. Values are finite and >= 0.
struct ProductionTable {
  IndexKind index_kind = IndexKind::documents;
  std::vector<std::string> countries;
  std::vector<std::string> fields;
  Matrix<double> values;

  std::vector<double> country_totals() const {
    std::vector<double> out(values.rows());
    for (std::size_t c = 0; c < values.rows(); ++c) out[c] = pairwise_sum(values.row(c));
    return out;
  }

  std::vector<double> field_totals() const {
    std::vector<double> out(values.cols());
    for (std::size_t f = 0; f < values.cols(); ++f) out[f] = pairwise_sum(values.column(f));
    return out;
  }

  double grand_total() const { return pairwise_sum(values.data()); }

  friend bool operator==(const ProductionTable&, const ProductionTable&) = default;
};

} // namespace rcaspace

#endif
