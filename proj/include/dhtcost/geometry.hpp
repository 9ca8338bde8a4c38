#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace dhtcost {

/// Hub-and-spoke network; node 0 is the center.
struct Star {
  std::uint64_t n = 1;
  friend bool operator==(const Star&, const Star&) = default;
};

/// Shift-and-append graph on base-delta strings of length d.
struct DeBruijn {
  std::uint32_t delta = 2;
  std::uint32_t d = 1;
  friend bool operator==(const DeBruijn&, const DeBruijn&) = default;
};

/// d-dimensional torus with n_side nodes per ring (CAN-style).
struct Torus {
  std::uint32_t d = 1;
  std::uint32_t n_side = 3;
  friend bool operator==(const Torus&, const Torus&) = default;
};

/// Digit-correction geometry (Pastry/Tapestry variant). delta = 2 is the hypercube.
struct PlaxtonTree {
  std::uint32_t delta = 2;
  std::uint32_t d = 1;
  friend bool operator==(const PlaxtonTree&, const PlaxtonTree&) = default;
};

/// Fully populated Chord ring on d-bit identifiers.
struct ChordRing {
  std::uint32_t d = 1;
  friend bool operator==(const ChordRing&, const ChordRing&) = default;
};

using GeometrySpec = std::variant<Star, DeBruijn, Torus, PlaxtonTree, ChordRing>;

/// Lower-case name used by the CLI and in serialized reports.
std::string_view geometry_name(const GeometrySpec& spec);

/// Human-readable form, e.g. "debruijn(delta=5,d=4)".
std::string describe(const GeometrySpec& spec);

/// Throws InvalidParameter when a shape parameter is out of range.
void validate(const GeometrySpec& spec);

/// Number of nodes of the fully populated identifier space. Throws
/// ResourceLimit when the count does not fit a 32-bit node index.
std::uint64_t node_count(const GeometrySpec& spec);

/// Dense node index in [0, N).
struct NodeId {
  std::uint32_t value = 0;
  friend auto operator<=>(const NodeId&, const NodeId&) = default;
};

/// Base and length of the identifier digit string. Star nodes are a single
/// base-N digit; tori use n_side as base and one digit per coordinate.
struct DigitLayout {
  std::uint32_t base = 0;
  std::uint32_t length = 0;
};

DigitLayout digit_layout(const GeometrySpec& spec);

/// Most-significant digit first.
std::vector<std::uint32_t> node_digits(const GeometrySpec& spec, NodeId node);
NodeId node_from_digits(const GeometrySpec& spec, std::span<const std::uint32_t> digits);

/// Identifier string: decimal for the star, the D-bit string for Chord,
/// concatenated digits for de Bruijn / Plaxton with delta <= 10 (dot separated
/// otherwise), and dot-separated coordinates for tori.
std::string node_label(const GeometrySpec& spec, NodeId node);
NodeId parse_node_label(const GeometrySpec& spec, std::string_view label);

}  // namespace dhtcost
