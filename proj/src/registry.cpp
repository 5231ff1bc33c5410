#include "folkman/registry.hpp"

#include <regex>
#include <stdexcept>

#include "folkman/circulant.hpp"
#include "folkman/triangles.hpp"

namespace folkman {

namespace {

NamedConstruction power(const std::string& name, std::int64_t n, std::int64_t s,
                        std::optional<std::int64_t> triangles = std::nullopt) {
  return {name, "L(" + std::to_string(n) + "," + std::to_string(s) + ")",
          {n, std::nullopt, triangles},
          [n, s] { return make_power_circulant(n, s); }};
}

Graph build_g786() {
  Graph base = make_power_circulant(785, 53);
  return add_cone_vertex(base, {kG786ConeTargets.begin(), kG786ConeTargets.end()});
}

std::vector<NamedConstruction> make_registry() {
  std::vector<NamedConstruction> r;
  r.push_back({"g941", "G(941,5)", {941, 88454, 707632}, [] { return make_residue_circulant(941, 5); }});
  r.push_back({"g860", "G(941,5) minus {2i mod 941 : 0 <= i < 81}", {860, 73981, 542514},
               [] { return delete_progression(make_residue_circulant(941, 5), 2, 81).graph; }});
  r.push_back({"g786", "L(785,53) plus a cone vertex on 60 listed vertices", {786, 61290, 428881},
               build_g786});
  r.push_back(power("l127_5", 127, 5, 9779));
  r.push_back(power("l457_6", 457, 6, 173660));
  r.push_back(power("l761_3", 761, 3, 347016));
  r.push_back(power("l785_53", 785, 53, 428610));
  r.push_back(power("l17_2", 17, 2));
  r.push_back(power("l61_8", 61, 8));
  r.push_back(power("l79_12", 79, 12));
  r.push_back(power("l421_7", 421, 7));
  r.push_back(power("l631_24", 631, 24));
  return r;
}

}  // namespace

const std::vector<NamedConstruction>& named_constructions() {
  static const std::vector<NamedConstruction> registry = make_registry();
  return registry;
}

Graph lookup_named(const std::string& name) {
  for (const auto& entry : named_constructions()) {
    if (entry.name != name) continue;
    Graph g = entry.build();
    const auto& ex = entry.expected;
    auto check = [&](const char* what, std::optional<std::int64_t> want, std::int64_t got) {
      if (want && *want != got) {
        throw std::logic_error(name + ": expected " + std::to_string(*want) + " " + what +
                               ", constructed " + std::to_string(got));
      }
    };
    check("vertices", ex.vertices, g.num_vertices());
    check("edges", ex.edges, g.num_edges());
    if (ex.triangles) check("triangles", ex.triangles, count_triangles(g));
    return g;
  }
  throw UnknownNameError("unknown graph name '" + name + "'");
}

std::optional<Graph> build_from_recipe(const std::string& recipe) {
  static const std::regex circulant(R"(\s*([GL])\s*\(\s*(\d+)\s*,\s*(\d+)\s*\)\s*)");
  static const std::regex simple(R"(\s*([KC])(\d+)\s*)");
  std::smatch m;
  if (std::regex_match(recipe, m, circulant)) {
    const std::int64_t n = std::stoll(m[2]);
    const std::int64_t p = std::stoll(m[3]);
    return m[1] == "G" ? make_residue_circulant(n, p) : make_power_circulant(n, p);
  }
  if (std::regex_match(recipe, m, simple)) {
    const auto n = static_cast<Vertex>(std::stol(m[2]));
    return m[1] == "K" ? complete_graph(n) : cycle_graph(n);
  }
  return std::nullopt;
}

}  // namespace folkman
