#include "dhtcost/geometry.hpp"

#include <charconv>
#include <limits>
#include <sstream>

#include "dhtcost/error.hpp"

namespace dhtcost {
namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

constexpr std::uint64_t kIndexLimit = std::numeric_limits<std::uint32_t>::max();

std::uint64_t checked_power(std::uint64_t base, std::uint32_t exponent) {
  std::uint64_t result = 1;
  for (std::uint32_t k = 0; k < exponent; ++k) {
    if (result > kIndexLimit / base) {
      throw ResourceLimit("identifier space " + std::to_string(base) + "^" +
                          std::to_string(exponent) + " exceeds the 32-bit node index range");
    }
    result *= base;
  }
  return result;
}

std::uint32_t parse_digit(std::string_view text, std::uint32_t base) {
  std::uint32_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || value >= base) {
    throw InvalidParameter("bad identifier digit '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

std::string_view geometry_name(const GeometrySpec& spec) {
  return std::visit(overloaded{
                        [](const Star&) { return std::string_view("star"); },
                        [](const DeBruijn&) { return std::string_view("debruijn"); },
                        [](const Torus&) { return std::string_view("torus"); },
                        [](const PlaxtonTree&) { return std::string_view("plaxton"); },
                        [](const ChordRing&) { return std::string_view("chord"); },
                    },
                    spec);
}

std::string describe(const GeometrySpec& spec) {
  std::ostringstream out;
  out << geometry_name(spec) << '(';
  std::visit(overloaded{
                 [&](const Star& g) { out << "n=" << g.n; },
                 [&](const DeBruijn& g) { out << "delta=" << g.delta << ",d=" << g.d; },
                 [&](const Torus& g) { out << "d=" << g.d << ",n_side=" << g.n_side; },
                 [&](const PlaxtonTree& g) { out << "delta=" << g.delta << ",d=" << g.d; },
                 [&](const ChordRing& g) { out << "d=" << g.d; },
             },
             spec);
  out << ')';
  return out.str();
}

void validate(const GeometrySpec& spec) {
  std::visit(overloaded{
                 [](const Star& g) {
                   if (g.n < 1) throw InvalidParameter("star needs n >= 1");
                 },
                 [](const DeBruijn& g) {
                   if (g.delta < 2) throw InvalidParameter("de Bruijn needs delta >= 2");
                   if (g.d < 1) throw InvalidParameter("de Bruijn needs d >= 1");
                 },
                 [](const Torus& g) {
                   if (g.d < 1) throw InvalidParameter("torus needs d >= 1");
                   if (g.n_side < 2) throw InvalidParameter("torus needs n_side >= 2");
                 },
                 [](const PlaxtonTree& g) {
                   if (g.delta < 2) throw InvalidParameter("Plaxton tree needs delta >= 2");
                   if (g.d < 1) throw InvalidParameter("Plaxton tree needs d >= 1");
                 },
                 [](const ChordRing& g) {
                   if (g.d < 1) throw InvalidParameter("Chord ring needs d >= 1");
                 },
             },
             spec);
}

std::uint64_t node_count(const GeometrySpec& spec) {
  validate(spec);
  return std::visit(overloaded{
                        [](const Star& g) {
                          if (g.n > kIndexLimit) {
                            throw ResourceLimit("star size exceeds the 32-bit node index range");
                          }
                          return g.n;
                        },
                        [](const DeBruijn& g) { return checked_power(g.delta, g.d); },
                        [](const Torus& g) { return checked_power(g.n_side, g.d); },
                        [](const PlaxtonTree& g) { return checked_power(g.delta, g.d); },
                        [](const ChordRing& g) { return checked_power(2, g.d); },
                    },
                    spec);
}

DigitLayout digit_layout(const GeometrySpec& spec) {
  return std::visit(
      overloaded{
          [](const Star& g) { return DigitLayout{static_cast<std::uint32_t>(g.n), 1}; },
          [](const DeBruijn& g) { return DigitLayout{g.delta, g.d}; },
          [](const Torus& g) { return DigitLayout{g.n_side, g.d}; },
          [](const PlaxtonTree& g) { return DigitLayout{g.delta, g.d}; },
          [](const ChordRing& g) { return DigitLayout{2, g.d}; },
      },
      spec);
}

std::vector<std::uint32_t> node_digits(const GeometrySpec& spec, NodeId node) {
  const auto n = node_count(spec);
  if (node.value >= n) throw InvalidParameter("node index out of range");
  if (std::holds_alternative<Star>(spec)) return {node.value};
  const auto layout = digit_layout(spec);
  std::vector<std::uint32_t> digits(layout.length);
  std::uint32_t rest = node.value;
  for (std::uint32_t p = layout.length; p-- > 0;) {
    digits[p] = rest % layout.base;
    rest /= layout.base;
  }
  return digits;
}

NodeId node_from_digits(const GeometrySpec& spec, std::span<const std::uint32_t> digits) {
  const auto n = node_count(spec);
  if (std::holds_alternative<Star>(spec)) {
    if (digits.size() != 1 || digits[0] >= n) throw InvalidParameter("bad star node index");
    return NodeId{digits[0]};
  }
  const auto layout = digit_layout(spec);
  if (digits.size() != layout.length) throw InvalidParameter("identifier has wrong length");
  std::uint64_t value = 0;
  for (auto digit : digits) {
    if (digit >= layout.base) throw InvalidParameter("identifier digit out of range");
    value = value * layout.base + digit;
  }
  return NodeId{static_cast<std::uint32_t>(value)};
}

std::string node_label(const GeometrySpec& spec, NodeId node) {
  const auto digits = node_digits(spec, node);
  const bool dotted =
      std::holds_alternative<Torus>(spec) ||
      (!std::holds_alternative<Star>(spec) && digit_layout(spec).base > 10);
  std::string label;
  for (std::size_t p = 0; p < digits.size(); ++p) {
    if (dotted && p > 0) label += '.';
    label += std::to_string(digits[p]);
  }
  return label;
}

NodeId parse_node_label(const GeometrySpec& spec, std::string_view label) {
  if (label.empty()) throw InvalidParameter("empty node identifier");
  const auto layout = digit_layout(spec);
  std::vector<std::uint32_t> digits;
  if (std::holds_alternative<Star>(spec)) {
    digits.push_back(parse_digit(label, static_cast<std::uint32_t>(node_count(spec))));
  } else if (label.find('.') != std::string_view::npos || std::holds_alternative<Torus>(spec)) {
    std::size_t start = 0;
    while (true) {
      const auto dot = label.find('.', start);
      digits.push_back(parse_digit(label.substr(start, dot - start), layout.base));
      if (dot == std::string_view::npos) break;
      start = dot + 1;
    }
  } else {
    for (char c : label) digits.push_back(parse_digit(std::string_view(&c, 1), layout.base));
  }
  return node_from_digits(spec, digits);
}

}  // namespace dhtcost
