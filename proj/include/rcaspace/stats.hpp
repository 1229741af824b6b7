#ifndef RCASPACE_STATS_HPP
#define RCASPACE_STATS_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "rcaspace/error.hpp"
#include "rcaspace/numeric.hpp"

namespace rcaspace {

/// Sample quantile definitions, numbered as in Hyndman & Fan (types 1-9).
enum class QuartileRule {
  inverted_cdf = 1,
  averaged_inverted_cdf = 2,
  closest_observation = 3,
  interpolated_inverted_cdf = 4,
  hazen = 5,
  weibull = 6,
  linear = 7,
  median_unbiased = 8,
  normal_unbiased = 9,
};

inline constexpr std::array<std::pair<std::string_view, QuartileRule>, 9> quartile_rule_names{{
    {"inverted-cdf", QuartileRule::inverted_cdf},
    {"averaged-inverted-cdf", QuartileRule::averaged_inverted_cdf},
    {"closest-observation", QuartileRule::closest_observation},
    {"interpolated-inverted-cdf", QuartileRule::interpolated_inverted_cdf},
    {"hazen", QuartileRule::hazen},
    {"weibull", QuartileRule::weibull},
    {"linear", QuartileRule::linear},
    {"median-unbiased", QuartileRule::median_unbiased},
    {"normal-unbiased", QuartileRule::normal_unbiased},
}};

inline std::string_view to_string(QuartileRule rule) noexcept {
  for (const auto& [name, r] : quartile_rule_names)
    if (r == rule) return name;
  return "linear";
}

/// Accepts the names above or `type1` .. `type9`.
inline QuartileRule parse_quartile_rule(std::string_view text) {
  for (const auto& [name, rule] : quartile_rule_names)
    if (name == text) return rule;
  if (text.size() == 5 && text.starts_with("type") && text[4] >= '1' && text[4] <= '9')
    return static_cast<QuartileRule>(text[4] - '0');
  throw UsageError("unknown quartile rule \"" + std::string(text) + "\"");
}

/// Quantile `p` in [0,1] of ascending-sorted, non-empty data.
inline double quantile_sorted(std::span<const double> x, double p, QuartileRule rule) {
  const std::size_t n = x.size();
  // 1-based order statistic, clamped to the sample.
  auto at = [&](long long j) {
    j = std::clamp<long long>(j, 1, static_cast<long long>(n));
    return x[static_cast<std::size_t>(j - 1)];
  };
  const double nd = static_cast<double>(n);

  switch (rule) {
    case QuartileRule::inverted_cdf:
    case QuartileRule::averaged_inverted_cdf: {
      const double np = nd * p;
      const auto j = static_cast<long long>(std::floor(np));
      const double g = np - static_cast<double>(j);
      if (g > 0.0) return at(j + 1);
      return rule == QuartileRule::inverted_cdf ? at(j) : 0.5 * (at(j) + at(j + 1));
    }
    case QuartileRule::closest_observation: {
      const double h = nd * p - 0.5;
      const auto j = static_cast<long long>(std::floor(h));
      const double g = h - static_cast<double>(j);
      return (g == 0.0 && j % 2 == 0) ? at(j) : at(j + 1);
    }
    default: break;
  }

  double h = 0.0;
  switch (rule) {
    case QuartileRule::interpolated_inverted_cdf: h = nd * p; break;
    case QuartileRule::hazen: h = nd * p + 0.5; break;
    case QuartileRule::weibull: h = (nd + 1.0) * p; break;
    case QuartileRule::median_unbiased: h = (nd + 1.0 / 3.0) * p + 1.0 / 3.0; break;
    case QuartileRule::normal_unbiased: h = (nd + 0.25) * p + 0.375; break;
    default: h = (nd - 1.0) * p + 1.0; break;
  }
  h = std::clamp(h, 1.0, nd);
  const auto j = static_cast<long long>(std::floor(h));
  const double g = h - static_cast<double>(j);
  const double lo = at(j);
  if (g == 0.0) return lo;
  return lo + g * (at(j + 1) - lo);
}

struct DistributionSummary {
  std::size_t n = 0;
  double min = 0.0;
  double q1 = 0.0;
  double median = 0.0;
  double mean = 0.0;
  double q3 = 0.0;
  double max = 0.0;

  /// (q3 - median) - (median - q1); positive for a long right tail.
  double quartile_skew() const noexcept { return (q3 - median) - (median - q1); }
};

inline DistributionSummary summarize(std::span<const double> values,
                                     QuartileRule rule = QuartileRule::linear) {
  if (values.empty()) throw DataError("cannot summarize an empty distribution");
  std::vector<double> sorted(values.begin(), values.end());
  for (double v : sorted)
    if (!std::isfinite(v)) throw DataError("cannot summarize non-finite values");
  std::sort(sorted.begin(), sorted.end());

  DistributionSummary s;
  s.n = sorted.size();
  s.min = sorted.front();
  s.max = sorted.back();
  s.q1 = quantile_sorted(sorted, 0.25, rule);
  s.median = quantile_sorted(sorted, 0.5, rule);
  s.q3 = quantile_sorted(sorted, 0.75, rule);
  s.mean = pairwise_sum(std::span<const double>(sorted)) / static_cast<double>(s.n);
  return s;
}

/// Pearson product-moment correlation of two equally long samples.
inline double pearson(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size()) throw DataError("correlation inputs differ in length");
  if (xs.size() < 2) throw DataError("degenerate correlation input");
  auto constant = [](std::span<const double> v) {
    return std::all_of(v.begin(), v.end(), [&](double x) { return x == v.front(); });
  };
  if (constant(xs) || constant(ys)) throw DataError("degenerate correlation input");

  const double n = static_cast<double>(xs.size());
  const double mx = pairwise_sum(xs) / n;
  const double my = pairwise_sum(ys) / n;
  std::vector<double> sxy(xs.size()), sxx(xs.size()), syy(xs.size());
  for (std::size_t k = 0; k < xs.size(); ++k) {
    const double dx = xs[k] - mx;
    const double dy = ys[k] - my;
    sxy[k] = dx * dy;
    sxx[k] = dx * dx;
    syy[k] = dy * dy;
  }
  const double vx = pairwise_sum(sxx);
  const double vy = pairwise_sum(syy);
  if (!(vx > 0.0) || !(vy > 0.0)) throw DataError("degenerate correlation input");
  const double r = pairwise_sum(sxy) / (std::sqrt(vx) * std::sqrt(vy));
  return std::clamp(r, -1.0, 1.0);
}

enum class Skew { left, symmetric, right };

constexpr std::string_view to_string(Skew s) noexcept {
  switch (s) {
    case Skew::left: return "left-skewed";
    case Skew::symmetric: return "symmetric";
    case Skew::right: return "right-skewed";
  }
  return "symmetric";
}

inline constexpr double default_symmetry_tolerance = 0.15;

/// Symmetric when |quartile skew| <= tolerance * IQR.
inline Skew classify_skew(const DistributionSummary& s,
                          double relative_tolerance = default_symmetry_tolerance) {
  const double skew = s.quartile_skew();
  const double band = relative_tolerance * (s.q3 - s.q1);
  if (std::abs(skew) <= band) return Skew::symmetric;
  return skew > 0.0 ? Skew::right : Skew::left;
}

struct NamedSummary {
  std::string name;
  DistributionSummary summary;
};

inline nlohmann::ordered_json summary_to_json(const DistributionSummary& s) {
  nlohmann::ordered_json j;
  j["n"] = s.n;
  j["min"] = s.min;
  j["q1"] = s.q1;
  j["median"] = s.median;
  j["mean"] = s.mean;
  j["q3"] = s.q3;
  j["max"] = s.max;
  j["quartile_skew"] = s.quartile_skew();
  return j;
}

/// One entry per distribution with its skew class.
inline nlohmann::ordered_json skewness_report(const std::vector<NamedSummary>& summaries,
                                              double relative_tolerance = default_symmetry_tolerance) {
  auto out = nlohmann::ordered_json::array();
  for (const auto& item : summaries) {
    nlohmann::ordered_json j;
    j["name"] = item.name;
    j["quartile_skew"] = item.summary.quartile_skew();
    j["iqr"] = item.summary.q3 - item.summary.q1;
    j["class"] = std::string(to_string(classify_skew(item.summary, relative_tolerance)));
    out.push_back(std::move(j));
  }
  return out;
}

/// Plain-text table: Min. 1st Qu. Median Mean 3rd Qu. Max.
inline std::string summary_table_text(const std::vector<NamedSummary>& summaries) {
  std::size_t name_width = 3;
  for (const auto& s : summaries) name_width = std::max(name_width, s.name.size());
  auto pad = [](std::string s, std::size_t w, bool left) {
    if (s.size() < w) s = left ? s + std::string(w - s.size(), ' ') : std::string(w - s.size(), ' ') + s;
    return s;
  };
  const std::array<std::string, 6> heads{"Min.", "1st Qu.", "Median", "Mean", "3rd Qu.", "Max."};
  std::string out = pad("RCA", name_width, true);
  for (const auto& h : heads) out += "  " + pad(h, 10, false);
  out += '\n';
  for (const auto& item : summaries) {
    const auto& s = item.summary;
    out += pad(item.name, name_width, true);
    for (double v : {s.min, s.q1, s.median, s.mean, s.q3, s.max}) out += "  " + pad(format_fixed(v, 3), 10, false);
    out += '\n';
  }
  return out;
}

} // namespace rcaspace

#endif
