#ifndef RCASPACE_NUMERIC_HPP
#define RCASPACE_NUMERIC_HPP

#include <array>
#include <charconv>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <system_error>

namespace rcaspace {

/// Pairwise (cascade) summation. The reduction tree depends only on the
/// length of the input, so results are reproducible across runs.
template <typename T>
T pairwise_sum(std::span<const T> values) {
  constexpr std::size_t block = 8;
  if (values.size() <= block) {
    T acc{};
    for (const T& v : values) acc += v;
    return acc;
  }
  const std::size_t half = values.size() / 2;
  return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

template <typename Container>
auto pairwise_sum(const Container& values) {
  using T = typename Container::value_type;
  return pairwise_sum(std::span<const T>(values.data(), values.size()));
}

/// Shortest decimal text that parses back to the same double.
inline std::string format_double(double v) {
  std::array<char, 64> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  if (ec != std::errc{}) return "nan";
  return std::string(buf.data(), end);
}

/// Fixed-point text with the given number of decimals.
inline std::string format_fixed(double v, int decimals) {
  std::array<char, 64> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v,
                                 std::chars_format::fixed, decimals);
  if (ec != std::errc{}) return "nan";
  std::string out(buf.data(), end);
  if (out.starts_with("-") && out.find_first_not_of("-0.") == std::string::npos) out.erase(0, 1);
  return out;
}

/// Strict parse: the whole string must be a number.
inline std::optional<double> parse_double(std::string_view text) {
  if (text.empty()) return std::nullopt;
  if (text.front() == '+') text.remove_prefix(1);
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size()) return std::nullopt;
  return v;
}

} // namespace rcaspace

#endif
