#ifndef RCASPACE_PIPELINE_HPP
#define RCASPACE_PIPELINE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "rcaspace/error.hpp"
#include "rcaspace/proximity.hpp"
#include "rcaspace/rca.hpp"
#include "rcaspace/stats.hpp"

namespace rcaspace {

/// Everything derived from one production table.
struct IndexAnalysis {
  ProductionTable table;
  RcaMatrix rca;
  AdvantageMatrix advantage;
  DiversityVector diversity;
  UbiquityVector ubiquity;
};

inline IndexAnalysis analyze(ProductionTable table) {
  IndexAnalysis a;
  a.rca = compute_rca(table);
  a.advantage = threshold_advantage(a.rca);
  a.diversity = diversity(a.advantage);
  a.ubiquity = ubiquity(a.advantage);
  a.table = std::move(table);
  return a;
}

/// Cells defined in every matrix. Matrices must share one grid (see validate_alignment).
inline Matrix<std::uint8_t> joint_defined(const std::vector<const RcaMatrix*>& matrices) {
  if (matrices.empty()) return {};
  Matrix<std::uint8_t> mask = matrices.front()->defined;
  for (const RcaMatrix* m : matrices) {
    if (m->countries != matrices.front()->countries || m->fields != matrices.front()->fields)
      throw DataError("RCA matrices are not aligned");
    for (std::size_t k = 0; k < mask.size(); ++k) mask.data()[k] &= m->defined.data()[k];
  }
  return mask;
}

struct Correlation {
  double r = 0.0;
  std::size_t cells = 0;
};

/// Pearson correlation of two aligned RCA matrices. Without a mask the whole
/// grid is used (undefined cells contribute 0); with one, only masked cells.
inline Correlation correlate(const RcaMatrix& a, const RcaMatrix& b,
                             const Matrix<std::uint8_t>* mask = nullptr) {
  if (a.countries != b.countries || a.fields != b.fields) throw DataError("RCA matrices are not aligned");
  std::vector<double> xs, ys;
  xs.reserve(a.values.size());
  ys.reserve(a.values.size());
  for (std::size_t k = 0; k < a.values.size(); ++k) {
    if (mask && !mask->data()[k]) continue;
    xs.push_back(a.values.data()[k]);
    ys.push_back(b.values.data()[k]);
  }
  return {pearson(xs, ys), xs.size()};
}

} // namespace rcaspace

#endif
