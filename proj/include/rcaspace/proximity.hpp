#ifndef RCASPACE_PROXIMITY_HPP
#define RCASPACE_PROXIMITY_HPP

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rcaspace/csv.hpp"
#include "rcaspace/error.hpp"
#include "rcaspace/matrix.hpp"
#include "rcaspace/numeric.hpp"
#include "rcaspace/production_table.hpp"
#include "rcaspace/rca.hpp"

namespace rcaspace {

enum class ProximityMode { fields, countries };

constexpr std::string_view to_string(ProximityMode mode) noexcept {
  return mode == ProximityMode::fields ? "fields" : "countries";
}

inline ProximityMode parse_proximity_mode(std::string_view text) {
  if (text == "fields") return ProximityMode::fields;
  if (text == "countries") return ProximityMode::countries;
  throw UsageError("unknown proximity mode \"" + std::string(text) + "\" (expected fields or countries)");
}

/// Symmetric proximity graph over fields or over countries.
struct ProximityNetwork {
  ProximityMode mode = ProximityMode::fields;
  std::vector<std::string> nodes;
  Matrix<double> weights;
  std::vector<double> node_strength;  // sum of weights to all other nodes
  std::vector<double> node_volume;    // raw production total, for sizing

  std::size_t size() const noexcept { return nodes.size(); }
};

/// Number of countries specialised in both fields (mode fields) or number of
/// fields both countries are specialised in (mode countries).
/// The diagonal carries ubiquity or diversity.
inline Matrix<std::size_t> co_occurrence(const AdvantageMatrix& adv, ProximityMode mode) {
  const auto& m = adv.m;
  if (mode == ProximityMode::fields) {
    Matrix<std::size_t> out(m.cols(), m.cols(), 0);
    for (std::size_t c = 0; c < m.rows(); ++c) {
      const auto row = m.row(c);
      for (std::size_t a = 0; a < m.cols(); ++a) {
        if (!row[a]) continue;
        for (std::size_t b = a; b < m.cols(); ++b) out(a, b) += row[b];
      }
    }
    for (std::size_t a = 0; a < m.cols(); ++a)
      for (std::size_t b = 0; b < a; ++b) out(a, b) = out(b, a);
    return out;
  }
  Matrix<std::size_t> out(m.rows(), m.rows(), 0);
  for (std::size_t a = 0; a < m.rows(); ++a) {
    const auto ra = m.row(a);
    for (std::size_t b = a; b < m.rows(); ++b) {
      const auto rb = m.row(b);
      std::size_t n = 0;
      for (std::size_t f = 0; f < m.cols(); ++f) n += ra[f] & rb[f];
      out(a, b) = n;
      out(b, a) = n;
    }
  }
  return out;
}

namespace detail {

inline ProximityNetwork proximity_from_counts(ProximityMode mode, std::vector<std::string> nodes,
                                              const Matrix<std::size_t>& co) {
  const std::size_t n = nodes.size();
  ProximityNetwork net;
  net.mode = mode;
  net.nodes = std::move(nodes);
  net.weights = Matrix<double>(n, n, 0.0);
  net.node_volume.assign(n, 0.0);
  for (std::size_t a = 0; a < n; ++a) {
    net.weights(a, a) = co(a, a) > 0 ? 1.0 : 0.0;
    for (std::size_t b = a + 1; b < n; ++b) {
      const std::size_t denom = std::max(co(a, a), co(b, b));
      const double w = denom == 0 ? 0.0 : static_cast<double>(co(a, b)) / static_cast<double>(denom);
      net.weights(a, b) = w;
      net.weights(b, a) = w;
    }
  }
  net.node_strength.assign(n, 0.0);
  for (std::size_t a = 0; a < n; ++a) {
    std::vector<double> incident;
    incident.reserve(n);
    for (std::size_t b = 0; b < n; ++b)
      if (b != a) incident.push_back(net.weights(a, b));
    net.node_strength[a] = pairwise_sum(incident);
  }
  return net;
}

} // namespace detail

/// phi(f1, f2) = co(f1, f2) / max(Ubi f1, Ubi f2); 0 when both ubiquities are 0.
inline ProximityNetwork field_proximity(const AdvantageMatrix& adv) {
  return detail::proximity_from_counts(ProximityMode::fields, adv.fields,
                                       co_occurrence(adv, ProximityMode::fields));
}

/// phi(c1, c2) = co(c1, c2) / max(Div c1, Div c2); 0 when both diversities are 0.
inline ProximityNetwork country_proximity(const AdvantageMatrix& adv) {
  return detail::proximity_from_counts(ProximityMode::countries, adv.countries,
                                       co_occurrence(adv, ProximityMode::countries));
}

/// Fills node_volume from the raw production table (field or country totals).
inline void attach_volumes(ProximityNetwork& net, const ProductionTable& table) {
  const auto& names = net.mode == ProximityMode::fields ? table.fields : table.countries;
  if (names != net.nodes) throw std::invalid_argument("production table does not match network nodes");
  net.node_volume = net.mode == ProximityMode::fields ? table.field_totals() : table.country_totals();
}

inline ProximityNetwork field_proximity(const AdvantageMatrix& adv, const ProductionTable& table) {
  auto net = field_proximity(adv);
  attach_volumes(net, table);
  return net;
}

inline ProximityNetwork country_proximity(const AdvantageMatrix& adv, const ProductionTable& table) {
  auto net = country_proximity(adv);
  attach_volumes(net, table);
  return net;
}

/// Long CSV `node_a,node_b,weight`, each unordered pair once with node_a < node_b.
inline std::string serialize_proximity_csv(const ProximityNetwork& net) {
  std::vector<std::size_t> order(net.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
  std::sort(order.begin(), order.end(),
            [&](std::size_t x, std::size_t y) { return net.nodes[x] < net.nodes[y]; });
  std::string out = "node_a,node_b,weight\n";
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t j = i + 1; j < order.size(); ++j)
      out += csv::join_row({net.nodes[order[i]], net.nodes[order[j]],
                            format_double(net.weights(order[i], order[j]))});
  return out;
}

} // namespace rcaspace

#endif
