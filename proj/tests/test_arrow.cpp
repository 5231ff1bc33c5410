#include <doctest.h>

#include <random>

#include "folkman/arrow.hpp"
#include "folkman/registry.hpp"
#include "support.hpp"

using namespace folkman;
using folkman::testing::arrows_by_exhaustion;
using folkman::testing::random_graph;

namespace {

// C5/C5 coloring of K5: the cycle 0-1-2-3-4 gets color 0, the pentagram 1.
EdgeColoring c5c5() {
  const Graph k5 = complete_graph(5);
  EdgeColoring c;
  for (const Edge& e : k5.edges()) {
    const int d = e.v - e.u;
    c.color.push_back(d == 1 || d == 4 ? 0 : 1);
  }
  return c;
}

DecideOptions allow_k4() {
  DecideOptions o;
  o.k4_policy = K4Policy::kAllow;
  return o;
}

}  // namespace

TEST_CASE("K6 arrows, K5 does not") {
  const ArrowDecision k6 = decide_arrowing(complete_graph(6), allow_k4());
  CHECK(k6.verdict == Verdict::kArrows);
  CHECK(k6.two_t == 40);
  REQUIRE(k6.certificate.has_value());
  CHECK(std::holds_alternative<SpectralCertificate>(*k6.certificate));
  CHECK(verify_certificate(complete_graph(6), *k6.certificate).accepted);

  const ArrowDecision k5 = decide_arrowing(complete_graph(5), allow_k4());
  CHECK(k5.verdict == Verdict::kNotArrows);
  CHECK(k5.best_lower == 20);
  REQUIRE(k5.certificate.has_value());
  REQUIRE(std::holds_alternative<ColoringCertificate>(*k5.certificate));
  CHECK(verify_certificate(complete_graph(5), *k5.certificate).accepted);
}

TEST_CASE("graphs with a K4 are rejected by default") {
  try {
    decide_arrowing(complete_graph(5));
    FAIL("expected K4FoundError");
  } catch (const K4FoundError& e) {
    const Graph k5 = complete_graph(5);
    const auto& w = e.witness();
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) CHECK(k5.has_edge(w[i], w[j]));
  }
}

TEST_CASE("coloring certificates") {
  const Graph k5 = complete_graph(5);
  CHECK(verify_certificate(k5, ColoringCertificate{c5c5()}).accepted);
  const VerifyResult bad = verify_certificate(k5, ColoringCertificate{EdgeColoring{std::vector<std::uint8_t>(10, 0)}});
  CHECK_FALSE(bad.accepted);
  CHECK(bad.reason == "10 monochromatic triangles");
  CHECK_THROWS_AS(verify_certificate(k5, ColoringCertificate{EdgeColoring{{0, 1}}}), MalformedCertificate);
  // Every single flip of the C5/C5 coloring creates a monochromatic triangle.
  for (std::size_t e = 0; e < 10; ++e) {
    EdgeColoring c = c5c5();
    c.color[e] ^= 1;
    CHECK_FALSE(verify_certificate(k5, ColoringCertificate{c}).accepted);
  }
}

TEST_CASE("spectral certificates") {
  const Graph k6 = complete_graph(6);
  SpectralCertificate good{Eigen::VectorXd::Zero(15), -2.0, CertTier::kExact};
  const VerifyResult v = verify_certificate(k6, good);
  CHECK(v.accepted);
  CHECK(*v.bound == doctest::Approx(37.5));
  // sigma above lambda_min is refuted.
  SpectralCertificate high = good;
  high.sigma = -1.9;
  CHECK_FALSE(verify_certificate(k6, high).accepted);
  // A correction vector off the zero-sum hyperplane is rejected.
  SpectralCertificate skew = good;
  skew.u[0] = 0.1;
  CHECK_FALSE(verify_certificate(k6, skew).accepted);
  // A valid floor whose bound reaches 2t does not prove arrowing.
  SpectralCertificate weak = good;
  weak.sigma = -3.0;
  CHECK_FALSE(verify_certificate(k6, weak).accepted);
  SpectralCertificate wrong{Eigen::VectorXd::Zero(3), -2.0, CertTier::kExact};
  CHECK_THROWS_AS(verify_certificate(k6, wrong), MalformedCertificate);
}

TEST_CASE("exact rational bound comparison") {
  const Eigen::VectorXd u = Eigen::VectorXd::Zero(4);
  // 2/2 - 4*(-1)/4 = 2
  CHECK_FALSE(spectral_bound_below(4, 2, -1.0, u, 2.0, true));
  CHECK(spectral_bound_below(4, 2, -1.0, u, 2.0, false));
  CHECK(spectral_bound_below(4, 2, -0.9999999999, u, 2.0, true));
}

TEST_CASE("decisions match exhaustive truth on small K4-free graphs") {
  std::mt19937_64 rng(99);
  int checked = 0;
  for (std::uint64_t seed = 0; checked < 120; ++seed) {
    const Graph g = random_graph(static_cast<Vertex>(4 + seed % 6), 0.5, 7000 + seed);
    if (g.num_edges() > 12 || !is_k4_free(g)) continue;
    ++checked;
    DecideOptions o;
    o.effort = Effort::kQuick;
    o.seed = rng();
    const ArrowDecision d = decide_arrowing(g, o);
    const bool truth = arrows_by_exhaustion(g);
    CHECK(d.verdict == (truth ? Verdict::kArrows : Verdict::kNotArrows));
    REQUIRE(d.certificate.has_value());
    CHECK(verify_certificate(g, *d.certificate).accepted);
  }
}

TEST_CASE("non-arrowing graphs and K4-containing arrowing graphs decide consistently") {
  // K7 arrows; its triangle graph has 21 vertices.
  const ArrowDecision k7 = decide_arrowing(complete_graph(7), allow_k4());
  CHECK(k7.verdict == Verdict::kArrows);
  CHECK(verify_certificate(complete_graph(7), *k7.certificate).accepted);
  const ArrowDecision l17 = decide_arrowing(lookup_named("l17_2"));
  CHECK(l17.verdict == Verdict::kNotArrows);
  CHECK(l17.best_lower == 136);
}

TEST_CASE("triangle-free graphs do not arrow") {
  const ArrowDecision d = decide_arrowing(cycle_graph(7));
  CHECK(d.verdict == Verdict::kNotArrows);
  CHECK(d.two_t == 0);
  CHECK(verify_certificate(cycle_graph(7), *d.certificate).accepted);
}

TEST_CASE("effort names") {
  CHECK(parse_effort("deep") == Effort::kDeep);
  CHECK_THROWS(parse_effort("hard"));
  CHECK(effort_profile(Effort::kQuick).dual_budget == 0);
  CHECK(effort_profile(Effort::kDeep).restarts >= effort_profile(Effort::kStandard).restarts);
}
