#include <doctest.h>

#include <random>

#include <Eigen/Eigenvalues>

#include "folkman/graph.hpp"
#include "folkman/lanczos.hpp"
#include "folkman/sparse_sym_matrix.hpp"
#include "folkman/spectral_floor.hpp"
#include "support.hpp"

using namespace folkman;

namespace {

SparseSymMatrix random_symmetric(std::int32_t n, double density, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> val(-1.0, 1.0);
  std::bernoulli_distribution coin(density);
  std::vector<SparseSymMatrix::Entry> entries;
  for (std::int32_t i = 0; i < n; ++i) {
    entries.push_back({i, i, val(rng)});
    for (std::int32_t j = i + 1; j < n; ++j) {
      if (coin(rng)) entries.push_back({i, j, val(rng)});
    }
  }
  return SparseSymMatrix::from_upper_entries(n, std::move(entries));
}

Eigen::VectorXd dense_spectrum(const SparseSymMatrix& m) {
  return Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(m.to_dense(), Eigen::EigenvaluesOnly).eigenvalues();
}

Graph path3() { return Graph(3, {{0, 1}, {1, 2}}); }

}  // namespace

TEST_CASE("matvec examples") {
  const SparseSymMatrix eye = SparseSymMatrix::adjacency(Graph(3, {})).with_diagonal(Eigen::VectorXd::Ones(3));
  const Eigen::VectorXd x = Eigen::VectorXd::LinSpaced(3, 1, 3);
  CHECK(matvec(eye, x) == x);
  CHECK(matvec(SparseSymMatrix::adjacency(complete_graph(2)), Eigen::VectorXd::Ones(2)) == Eigen::VectorXd::Ones(2));
  const Eigen::VectorXd y = matvec(SparseSymMatrix::adjacency(path3()), Eigen::Vector3d(1, 0, -1));
  CHECK(y.isZero(0));
  CHECK_THROWS(matvec(eye, Eigen::VectorXd::Ones(2)));
}

TEST_CASE("matvec is bit-reproducible") {
  const SparseSymMatrix m = random_symmetric(200, 0.1, 3);
  Eigen::VectorXd x = Eigen::VectorXd::LinSpaced(200, -1, 1);
  const Eigen::VectorXd a = matvec(m, x), b = matvec(m, x);
  CHECK(a == b);
}

TEST_CASE("extreme eigenpairs of small graphs") {
  const SpectralEstimate k2 = extreme_eigenpair(SparseSymMatrix::adjacency(complete_graph(2)));
  CHECK(k2.converged);
  CHECK(k2.value == doctest::Approx(-1.0).epsilon(1e-10));
  const SpectralEstimate c4 = extreme_eigenpair(SparseSymMatrix::adjacency(cycle_graph(4)));
  CHECK(c4.value == doctest::Approx(-2.0).epsilon(1e-10));
  LanczosOptions mx;
  mx.which = Extreme::kMax;
  CHECK(extreme_eigenpair(SparseSymMatrix::adjacency(cycle_graph(4)), mx).value ==
        doctest::Approx(2.0).epsilon(1e-10));
}

TEST_CASE("Lanczos agrees with dense diagonalization up to dimension 30") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const auto n = static_cast<std::int32_t>(2 + seed % 29);
    const SparseSymMatrix m = random_symmetric(n, 0.3, seed);
    const Eigen::VectorXd spec = dense_spectrum(m);
    LanczosOptions lo;
    lo.seed = seed;
    const SpectralEstimate lo_min = extreme_eigenpair(m, lo);
    REQUIRE(lo_min.converged);
    CHECK(std::abs(lo_min.value - spec[0]) <= 1e-8);
    // The residual bounds the distance to the nearest eigenvalue.
    const double nearest = (spec.array() - lo_min.value).abs().minCoeff();
    CHECK(nearest <= lo_min.residual + 1e-12);
    lo.which = Extreme::kMax;
    const SpectralEstimate lo_max = extreme_eigenpair(m, lo);
    CHECK(std::abs(lo_max.value - spec[n - 1]) <= 1e-8);
  }
}

TEST_CASE("block Lanczos finds the lowest eigenvalues with multiplicity") {
  // Line graph of K6: eigenvalues 8, 2 (x5), -2 (x9).
  const Graph k6 = complete_graph(6);
  std::vector<Edge> edges;
  for (EdgeId e = 0; e < k6.num_edges(); ++e)
    for (EdgeId f = e + 1; f < k6.num_edges(); ++f) {
      const Edge a = k6.edge(e), b = k6.edge(f);
      if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v) edges.push_back({e, f});
    }
  const SparseSymMatrix m = SparseSymMatrix::adjacency(Graph(15, edges));
  const EigenBlock eb = extreme_eigenpairs(m, 10, {});
  REQUIRE(eb.converged);
  for (int i = 0; i < 9; ++i) CHECK(eb.values[i] == doctest::Approx(-2.0).epsilon(1e-9));
  CHECK(eb.values[9] == doctest::Approx(2.0).epsilon(1e-9));
}

TEST_CASE("Lanczos on a larger sparse matrix matches dense") {
  const SparseSymMatrix m = random_symmetric(400, 0.02, 11);
  const Eigen::VectorXd spec = dense_spectrum(m);
  const SpectralEstimate est = extreme_eigenpair(m);
  REQUIRE(est.converged);
  CHECK(std::abs(est.value - spec[0]) <= 1e-8 * m.one_norm());
  CHECK(est.residual <= 1e-8 * m.one_norm());
}

TEST_CASE("spectral floor on C4") {
  const SparseSymMatrix c4 = SparseSymMatrix::adjacency(cycle_graph(4));
  CHECK(certify_spectral_floor(c4, -2.001).certified());
  CHECK(certify_spectral_floor(c4, -1.999).status == FloorStatus::kRefuted);
  // At the eigenvalue itself the matrix is singular but not indefinite.
  CHECK(rational_floor_test(c4, -2.0) == FloorStatus::kCertified);
}

TEST_CASE("rational and verified Cholesky floors agree with the dense spectrum") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto n = static_cast<std::int32_t>(5 + seed % 40);
    const SparseSymMatrix m = random_symmetric(n, 0.3, 1000 + seed);
    const double lmin = dense_spectrum(m)[0];
    CHECK(rational_floor_test(m, lmin - 1e-6) == FloorStatus::kCertified);
    CHECK(rational_floor_test(m, lmin + 1e-6) == FloorStatus::kRefuted);
    CHECK(verified_cholesky_floor_test(m, lmin - 1e-6) == FloorStatus::kCertified);
    CHECK(verified_cholesky_floor_test(m, lmin + 1e-6) != FloorStatus::kCertified);
  }
}

TEST_CASE("floor tiers and consistency with the eigensolver") {
  const SparseSymMatrix m = random_symmetric(300, 0.03, 21);
  const double lmin = dense_spectrum(m)[0];
  FloorOptions exact;
  const FloorCertificate a = certify_spectral_floor(m, lmin - 1e-6, exact);
  CHECK(a.tier == CertTier::kExact);
  CHECK(a.certified());

  FloorOptions numerical;
  numerical.rational_max_dim = 0;
  numerical.exact_max_dim = 0;
  const FloorCertificate b = certify_spectral_floor(m, lmin - 1e-6, numerical);
  CHECK(b.tier == CertTier::kNumerical);
  CHECK(b.certified());
  CHECK(b.margin > 0);
  const FloorCertificate c = certify_spectral_floor(m, lmin + 1e-3, numerical);
  CHECK(c.status == FloorStatus::kRefuted);

  // A certified floor never sits above the computed minimum.
  for (double sigma : {lmin - 1e-3, lmin - 1e-7, lmin, lmin + 1e-7, lmin + 1e-3}) {
    const bool cert = certify_spectral_floor(m, sigma).certified();
    const double value = extreme_eigenpair(m).value;
    CHECK_FALSE((cert && value < sigma - 1e-12));
  }
}

TEST_CASE("status strings") {
  CHECK(std::string(to_string(FloorStatus::kInconclusive)) == "INDEFINITE-AT-SIGMA");
  CHECK(std::string(to_string(CertTier::kNumerical)) == "numerical");
}
