#include <doctest.h>

#include "folkman/io.hpp"
#include "folkman/registry.hpp"
#include "support.hpp"

using namespace folkman;

namespace {

std::string parse_error(const std::string& text) {
  try {
    parse_graph(text);
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("graph text examples") {
  CHECK(parse_graph("3 3\n0 1\n0 2\n1 2") == complete_graph(3));
  const Graph empty = parse_graph("2 0");
  CHECK(empty.num_vertices() == 2);
  CHECK(empty.num_edges() == 0);
  CHECK(parse_graph("# comment\n\n3 1\n# another\n2 0\n") == Graph(3, {{0, 2}}));
}

TEST_CASE("graph text errors carry line numbers") {
  CHECK(parse_error("2 1\n1 1") == "line 2: self-loop at vertex 1");
  CHECK(parse_error("2 1\n0 2") == "line 2: endpoint out of range [0, 2)");
  CHECK(parse_error("3 2\n0 1\n1 0") == "line 3: duplicate edge 0 1 (first on line 2)");
  CHECK(parse_error("3 2\n0 1") == "header declares 2 edges but 1 edge lines follow");
  CHECK(parse_error("3 1\n0 1\n1 2") == "line 3: header declares 1 edges but 2 edge lines follow");
  CHECK(parse_error("3 x") == "line 1: expected an integer edge count, got 'x'");
  CHECK(parse_error("3 1\n0 1 2") == "line 2: edge line must be \"u v\"");
  CHECK(parse_error("") == "missing header line \"n m\"");
}

TEST_CASE("canonical graph text round-trips") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph g = folkman::testing::random_graph(30, 0.2, seed);
    const std::string text = write_graph(g);
    CHECK(parse_graph(text) == g);
    CHECK(write_graph(parse_graph(text)) == text);
  }
  CHECK(write_graph(complete_graph(3)) == "3 3\n0 1\n0 2\n1 2\n");
}

TEST_CASE("graph hash binds the canonical text") {
  const Graph a(3, {{1, 2}, {0, 1}});
  const Graph b(3, {{0, 1}, {2, 1}});
  CHECK(graph_hash(a) == graph_hash(b));
  CHECK(graph_hash(a).size() == 64);
  CHECK(graph_hash(a) != graph_hash(complete_graph(3)));
  // SHA-256 of "3 3\n0 1\n0 2\n1 2\n".
  CHECK(graph_hash(complete_graph(3)) == "7c0343f77a3c54a7b291511fde0fd472255dbdfd45e57dc93771a4b4e021c6ad");
}

TEST_CASE("certificates round-trip") {
  CertificateFile coloring{"abc", 20, ColoringCertificate{EdgeColoring{{0, 1, 1, 0}}}};
  const std::string ct = write_certificate(coloring);
  CHECK(ct == "kind: coloring\ngraph-hash: abc\ntwo-t: 20\ncoloring: 0110\n");
  CHECK(write_certificate(parse_certificate(ct)) == ct);

  Eigen::VectorXd u(3);
  u << 0.1, -0.30000000000000004, 0.2;
  CertificateFile spectral{"def", 40, SpectralCertificate{u, -14.663012345678901, CertTier::kNumerical}};
  const std::string st = write_certificate(spectral);
  const CertificateFile back = parse_certificate(st);
  const auto& s = std::get<SpectralCertificate>(back.certificate);
  CHECK(s.u == u);
  CHECK(s.sigma == -14.663012345678901);
  CHECK(s.tier == CertTier::kNumerical);
  CHECK(back.two_t == 40);
  CHECK(write_certificate(back) == st);

  CertificateFile exhaustive{"0", 2, ExhaustiveCertificate{}};
  CHECK(write_certificate(parse_certificate(write_certificate(exhaustive))) == write_certificate(exhaustive));
}

TEST_CASE("certificate parse errors") {
  CHECK_THROWS_AS(parse_certificate("kind: coloring\ntwo-t: 2\ncoloring: 01\n"), ParseError);
  CHECK_THROWS_AS(parse_certificate("kind: magic\ngraph-hash: a\ntwo-t: 2\n"), ParseError);
  CHECK_THROWS_AS(parse_certificate("kind: coloring\ngraph-hash: a\ntwo-t: 2\ncoloring: 012\n"), ParseError);
  CHECK_THROWS_AS(parse_certificate("kind: spectral\ngraph-hash: a\ntwo-t: 2\nu: 1 x\nsigma: 0\ntier: exact\n"),
                  ParseError);
  CHECK_THROWS_AS(parse_certificate("kind: coloring\ngraph-hash: a\ntwo-t: 2\ncoloring: 01\nsigma: 1\n"),
                  ParseError);
}

TEST_CASE("shortest round-trip doubles") {
  for (double x : {0.1, -14.664, 1e-300, 123456789.125, -0.0}) {
    CHECK(std::stod(format_double(x)) == x);
  }
  CHECK(format_double(0.5) == "0.5");
}
