#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "folkman/graph.hpp"

namespace folkman {

/// The 60 vertices of L(785,53) joined to the extra vertex of G_786.
inline constexpr std::array<Vertex, 60> kG786ConeTargets = {
    0,   1,   3,   4,   6,   7,   9,   10,  12,  13,  15,  16,  18,  19,  21,
    22,  24,  25,  27,  28,  30,  31,  33,  34,  36,  37,  39,  40,  42,  43,
    45,  46,  48,  49,  51,  52,  54,  55,  57,  58,  60,  61,  63,  66,  69,
    201, 204, 207, 210, 213, 216, 219, 222, 225, 416, 419, 422, 630, 642, 645};

struct ExpectedCounts {
  std::optional<std::int64_t> vertices;
  std::optional<std::int64_t> edges;
  std::optional<std::int64_t> triangles;
};

struct NamedConstruction {
  std::string name;
  std::string recipe;
  ExpectedCounts expected;
  std::function<Graph()> build;
};

class UnknownNameError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

const std::vector<NamedConstruction>& named_constructions();

/// Builds a registered graph and checks it against its expected counts.
/// Throws UnknownNameError, or std::logic_error on a count mismatch.
Graph lookup_named(const std::string& name);

/// Parses "G(n,r)", "L(n,s)", "K<n>" or "C<n>"; nullopt if the text is not
/// one of those forms.
std::optional<Graph> build_from_recipe(const std::string& recipe);

}  // namespace folkman
