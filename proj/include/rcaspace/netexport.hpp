#ifndef RCASPACE_NETEXPORT_HPP
#define RCASPACE_NETEXPORT_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <numeric>
#include <string>
#include <string_view>
#include <tuple>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "rcaspace/csv.hpp"
#include "rcaspace/error.hpp"
#include "rcaspace/numeric.hpp"
#include "rcaspace/proximity.hpp"

namespace rcaspace {

/// Undirected edge between node indices; `a` names the lexicographically smaller node.
struct Edge {
  std::size_t a = 0;
  std::size_t b = 0;
  double weight = 0.0;
};

namespace detail {

class DisjointSets {
public:
  explicit DisjointSets(std::size_t n) : parent_(n), rank_(n, 0) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(std::size_t x, std::size_t y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    if (rank_[x] < rank_[y]) std::swap(x, y);
    parent_[y] = x;
    if (rank_[x] == rank_[y]) ++rank_[x];
    return true;
  }

private:
  std::vector<std::size_t> parent_;
  std::vector<unsigned> rank_;
};

/// Positive-weight off-diagonal edges, endpoints ordered by name.
inline std::vector<Edge> positive_edges(const ProximityNetwork& net) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < net.size(); ++i)
    for (std::size_t j = i + 1; j < net.size(); ++j) {
      const double w = net.weights(i, j);
      if (!(w > 0.0)) continue;
      if (net.nodes[i] < net.nodes[j]) edges.push_back({i, j, w});
      else edges.push_back({j, i, w});
    }
  return edges;
}

inline bool name_pair_less(const ProximityNetwork& net, const Edge& x, const Edge& y) {
  return std::tie(net.nodes[x.a], net.nodes[x.b]) < std::tie(net.nodes[y.a], net.nodes[y.b]);
}

} // namespace detail

/// Maximum-weight spanning forest (Kruskal over positive-weight edges, ties
/// resolved by node-name pair) together with every edge of weight >= threshold.
/// Output is sorted by node-name pair.
inline std::vector<Edge> backbone(const ProximityNetwork& net, double threshold) {
  if (!(threshold >= 0.0 && threshold <= 1.0))
    throw UsageError("backbone threshold must lie in [0, 1]");

  auto edges = detail::positive_edges(net);
  std::sort(edges.begin(), edges.end(), [&](const Edge& x, const Edge& y) {
    if (x.weight != y.weight) return x.weight > y.weight;
    return detail::name_pair_less(net, x, y);
  });

  detail::DisjointSets forest(net.size());
  std::vector<Edge> kept;
  for (const Edge& e : edges) {
    const bool joins = forest.unite(e.a, e.b);
    if (joins || e.weight >= threshold) kept.push_back(e);
  }
  std::sort(kept.begin(), kept.end(),
            [&](const Edge& x, const Edge& y) { return detail::name_pair_less(net, x, y); });
  return kept;
}

/// Node indices by ascending strength, ties by name.
inline std::vector<std::size_t> order_nodes(const ProximityNetwork& net) {
  std::vector<std::size_t> order(net.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    if (net.node_strength[x] != net.node_strength[y]) return net.node_strength[x] < net.node_strength[y];
    return net.nodes[x] < net.nodes[y];
  });
  return order;
}

/// radius = min_r + (max_r - min_r) * sqrt(volume / max_volume), so node area
/// grows linearly with volume. All-zero volumes give min_r everywhere.
inline std::vector<double> size_nodes(const ProximityNetwork& net, double min_r, double max_r) {
  if (!(min_r < max_r)) throw UsageError("node radius range must satisfy min_r < max_r");
  std::vector<double> radii(net.size(), min_r);
  double max_volume = 0.0;
  for (double v : net.node_volume) max_volume = std::max(max_volume, v);
  if (!(max_volume > 0.0)) return radii;
  for (std::size_t k = 0; k < net.size(); ++k) {
    const double v = k < net.node_volume.size() ? std::max(0.0, net.node_volume[k]) : 0.0;
    radii[k] = min_r + (max_r - min_r) * std::sqrt(v / max_volume);
  }
  return radii;
}

enum class Ring { inner, outer };

constexpr std::string_view to_string(Ring r) noexcept { return r == Ring::inner ? "inner" : "outer"; }

struct LayoutNode {
  std::string id;
  double strength = 0.0;
  double volume = 0.0;
  Ring ring = Ring::inner;
  double angle = 0.0;   // radians, counterclockwise from the positive x axis
  double radius = 0.0;  // display radius

  friend bool operator==(const LayoutNode&, const LayoutNode&) = default;
};

struct LayoutEdge {
  std::string a;
  std::string b;
  double weight = 0.0;

  friend bool operator==(const LayoutEdge&, const LayoutEdge&) = default;
};

/// Double circular layout. Nodes are listed in ascending-strength order; the
/// weaker half (rounded up) sits on the inner ring, the rest on the outer ring.
/// Each ring starts at angle 0 and proceeds counterclockwise.
struct NetworkLayout {
  std::vector<LayoutNode> nodes;
  std::vector<LayoutEdge> edges;

  friend bool operator==(const NetworkLayout&, const NetworkLayout&) = default;
};

struct LayoutOptions {
  double threshold = 0.4;
  double min_radius = 6.0;
  double max_radius = 30.0;
};

inline NetworkLayout make_layout(const ProximityNetwork& net, const LayoutOptions& options = {}) {
  const auto order = order_nodes(net);
  const auto radii = size_nodes(net, options.min_radius, options.max_radius);
  const std::size_t n = order.size();
  const std::size_t inner = (n + 1) / 2;
  const std::size_t outer = n - inner;

  NetworkLayout layout;
  layout.nodes.reserve(n);
  for (std::size_t rank = 0; rank < n; ++rank) {
    const std::size_t k = order[rank];
    LayoutNode node;
    node.id = net.nodes[k];
    node.strength = net.node_strength[k];
    node.volume = k < net.node_volume.size() ? net.node_volume[k] : 0.0;
    node.radius = radii[k];
    if (rank < inner) {
      node.ring = Ring::inner;
      node.angle = 2.0 * std::numbers::pi * static_cast<double>(rank) / static_cast<double>(inner);
    } else {
      node.ring = Ring::outer;
      node.angle = 2.0 * std::numbers::pi * static_cast<double>(rank - inner) / static_cast<double>(outer);
    }
    layout.nodes.push_back(std::move(node));
  }
  for (const Edge& e : backbone(net, options.threshold))
    layout.edges.push_back({net.nodes[e.a], net.nodes[e.b], e.weight});
  return layout;
}

enum class ExportFormat { dot, graphml, json, csv, svg };

inline constexpr std::array<ExportFormat, 5> all_export_formats{
    ExportFormat::dot, ExportFormat::graphml, ExportFormat::json, ExportFormat::csv, ExportFormat::svg};

constexpr std::string_view to_string(ExportFormat f) noexcept {
  switch (f) {
    case ExportFormat::dot: return "dot";
    case ExportFormat::graphml: return "graphml";
    case ExportFormat::json: return "json";
    case ExportFormat::csv: return "csv";
    case ExportFormat::svg: return "svg";
  }
  return "json";
}

inline ExportFormat parse_export_format(std::string_view text) {
  for (auto f : all_export_formats)
    if (to_string(f) == text) return f;
  throw UsageError("unknown format \"" + std::string(text) + "\"");
}

namespace detail {

inline std::string xml_escape(std::string_view s) {
  std::string out;
  for (char ch : s) {
    switch (ch) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += ch;
    }
  }
  return out;
}

inline std::string dot_quote(std::string_view s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out + "\"";
}

inline std::string emit_dot(const NetworkLayout& layout) {
  std::string out = "graph proximity {\n";
  for (const auto& n : layout.nodes) {
    out += "  " + dot_quote(n.id) + " [strength=" + format_double(n.strength) +
           ", volume=" + format_double(n.volume) + ", ring=\"" + std::string(to_string(n.ring)) +
           "\", angle=" + format_double(n.angle) + ", radius=" + format_double(n.radius) + "];\n";
  }
  for (const auto& e : layout.edges)
    out += "  " + dot_quote(e.a) + " -- " + dot_quote(e.b) + " [weight=" + format_double(e.weight) + "];\n";
  out += "}\n";
  return out;
}

inline std::string emit_graphml(const NetworkLayout& layout) {
  std::string out =
      "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n"
      "  <key id=\"strength\" for=\"node\" attr.name=\"strength\" attr.type=\"double\"/>\n"
      "  <key id=\"volume\" for=\"node\" attr.name=\"volume\" attr.type=\"double\"/>\n"
      "  <key id=\"ring\" for=\"node\" attr.name=\"ring\" attr.type=\"string\"/>\n"
      "  <key id=\"angle\" for=\"node\" attr.name=\"angle\" attr.type=\"double\"/>\n"
      "  <key id=\"radius\" for=\"node\" attr.name=\"radius\" attr.type=\"double\"/>\n"
      "  <key id=\"weight\" for=\"edge\" attr.name=\"weight\" attr.type=\"double\"/>\n"
      "  <graph id=\"proximity\" edgedefault=\"undirected\">\n";
  for (const auto& n : layout.nodes) {
    out += "    <node id=\"" + xml_escape(n.id) + "\">\n";
    out += "      <data key=\"strength\">" + format_double(n.strength) + "</data>\n";
    out += "      <data key=\"volume\">" + format_double(n.volume) + "</data>\n";
    out += "      <data key=\"ring\">" + std::string(to_string(n.ring)) + "</data>\n";
    out += "      <data key=\"angle\">" + format_double(n.angle) + "</data>\n";
    out += "      <data key=\"radius\">" + format_double(n.radius) + "</data>\n";
    out += "    </node>\n";
  }
  for (const auto& e : layout.edges) {
    out += "    <edge source=\"" + xml_escape(e.a) + "\" target=\"" + xml_escape(e.b) + "\">\n";
    out += "      <data key=\"weight\">" + format_double(e.weight) + "</data>\n";
    out += "    </edge>\n";
  }
  out += "  </graph>\n</graphml>\n";
  return out;
}

inline std::string emit_json(const NetworkLayout& layout) {
  nlohmann::ordered_json doc;
  doc["nodes"] = nlohmann::ordered_json::array();
  doc["edges"] = nlohmann::ordered_json::array();
  for (const auto& n : layout.nodes) {
    nlohmann::ordered_json j;
    j["id"] = n.id;
    j["strength"] = n.strength;
    j["volume"] = n.volume;
    j["ring"] = std::string(to_string(n.ring));
    j["angle"] = n.angle;
    j["radius"] = n.radius;
    doc["nodes"].push_back(std::move(j));
  }
  for (const auto& e : layout.edges) {
    nlohmann::ordered_json j;
    j["a"] = e.a;
    j["b"] = e.b;
    j["weight"] = e.weight;
    doc["edges"].push_back(std::move(j));
  }
  return doc.dump();
}

inline std::string emit_csv(const NetworkLayout& layout) {
  std::string out = "node_a,node_b,weight\n";
  for (const auto& e : layout.edges) out += csv::join_row({e.a, e.b, format_double(e.weight)});
  return out;
}

inline constexpr double svg_size = 1000.0;
inline constexpr double svg_inner_ring = 300.0;
inline constexpr double svg_outer_ring = 450.0;

inline std::string emit_svg(const NetworkLayout& layout) {
  struct Point { double x, y; };
  std::unordered_map<std::string, Point> position;
  const double centre = svg_size / 2.0;
  for (const auto& n : layout.nodes) {
    const double ring = n.ring == Ring::inner ? svg_inner_ring : svg_outer_ring;
    // SVG y grows downwards; negate to keep counterclockwise placement.
    position[n.id] = {centre + ring * std::cos(n.angle), centre - ring * std::sin(n.angle)};
  }
  auto num = [](double v) { return format_fixed(v, 3); };

  std::string out =
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"1000\" height=\"1000\" viewBox=\"0 0 1000 1000\">\n"
      "  <rect width=\"1000\" height=\"1000\" fill=\"white\"/>\n"
      "  <circle cx=\"500\" cy=\"500\" r=\"300\" fill=\"none\" stroke=\"#dddddd\"/>\n"
      "  <circle cx=\"500\" cy=\"500\" r=\"450\" fill=\"none\" stroke=\"#dddddd\"/>\n"
      "  <g class=\"edges\" stroke=\"#4a6fa5\" stroke-opacity=\"0.6\">\n";
  for (const auto& e : layout.edges) {
    const Point p = position.at(e.a);
    const Point q = position.at(e.b);
    out += "    <line x1=\"" + num(p.x) + "\" y1=\"" + num(p.y) + "\" x2=\"" + num(q.x) + "\" y2=\"" +
           num(q.y) + "\" stroke-width=\"" + num(4.0 * e.weight) + "\"/>\n";
  }
  out += "  </g>\n  <g class=\"nodes\">\n";
  for (const auto& n : layout.nodes) {
    const Point p = position.at(n.id);
    const char* fill = n.ring == Ring::inner ? "#e07a5f" : "#3d405b";
    out += "    <circle cx=\"" + num(p.x) + "\" cy=\"" + num(p.y) + "\" r=\"" + num(n.radius) +
           "\" fill=\"" + fill + "\"><title>" + xml_escape(n.id) + "</title></circle>\n";
    out += "    <text x=\"" + num(p.x) + "\" y=\"" + num(p.y - n.radius - 4.0) +
           "\" font-size=\"12\" text-anchor=\"middle\">" + xml_escape(n.id) + "</text>\n";
  }
  out += "  </g>\n</svg>\n";
  return out;
}

} // namespace detail

/// Deterministic serialization of a layout.
inline std::string emit(const NetworkLayout& layout, ExportFormat format) {
  switch (format) {
    case ExportFormat::dot: return detail::emit_dot(layout);
    case ExportFormat::graphml: return detail::emit_graphml(layout);
    case ExportFormat::json: return detail::emit_json(layout);
    case ExportFormat::csv: return detail::emit_csv(layout);
    case ExportFormat::svg: return detail::emit_svg(layout);
  }
  throw UsageError("unknown format");
}

inline std::string emit(const NetworkLayout& layout, std::string_view format) {
  return emit(layout, parse_export_format(format));
}

/// Inverse of the JSON emitter.
inline NetworkLayout parse_layout_json(std::string_view text) {
  NetworkLayout layout;
  try {
    const auto doc = nlohmann::json::parse(text);
    for (const auto& j : doc.at("nodes")) {
      LayoutNode n;
      n.id = j.at("id").get<std::string>();
      n.strength = j.at("strength").get<double>();
      n.volume = j.at("volume").get<double>();
      const auto ring = j.at("ring").get<std::string>();
      if (ring != "inner" && ring != "outer") throw DataError("network JSON: bad ring \"" + ring + "\"");
      n.ring = ring == "inner" ? Ring::inner : Ring::outer;
      n.angle = j.at("angle").get<double>();
      n.radius = j.at("radius").get<double>();
      layout.nodes.push_back(std::move(n));
    }
    for (const auto& j : doc.at("edges"))
      layout.edges.push_back({j.at("a").get<std::string>(), j.at("b").get<std::string>(),
                              j.at("weight").get<double>()});
  } catch (const nlohmann::json::exception& e) {
    throw DataError(std::string("invalid network JSON: ") + e.what());
  }
  return layout;
}

} // namespace rcaspace

#endif
