#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <Eigen/Core>

#include "folkman/bounds.hpp"
#include "folkman/graph.hpp"
#include "folkman/triangles.hpp"

namespace folkman {

enum class Verdict { kArrows, kNotArrows, kUndecided };
const char* to_string(Verdict verdict);

/// (u, sigma) with sigma a floor of lambda_min(A + Diag(u)) on H_G.
struct SpectralCertificate {
  Eigen::VectorXd u;
  double sigma = 0.0;
  CertTier tier = CertTier::kExact;
};

/// A 2-coloring of E(G) with no monochromatic triangle.
struct ColoringCertificate {
  EdgeColoring coloring;
};

/// MC(H_G) < 2t established by exhaustive search; replayable only while
/// |V(H_G)| <= kBruteForceMaxVertices.
struct ExhaustiveCertificate {};

using ArrowCertificate = std::variant<SpectralCertificate, ColoringCertificate, ExhaustiveCertificate>;

const char* certificate_kind(const ArrowCertificate& cert);

struct ArrowDecision {
  Verdict verdict = Verdict::kUndecided;
  std::int64_t two_t = 0;
  std::optional<double> best_upper;
  std::optional<std::int64_t> best_lower;
  std::optional<ArrowCertificate> certificate;
  /// Every bound computed on the way, in pipeline order.
  std::vector<BoundReport> reports;
};

enum class Effort { kQuick, kStandard, kDeep };
const char* to_string(Effort effort);
Effort parse_effort(const std::string& text);

/// Budgets fixed per effort level so runs are replayable.
struct EffortProfile {
  /// Dual iterates; 0 skips the dual stage.
  int dual_budget = 0;
  int dual_refine_iterations = 150;
  int dual_max_rank = 48;
  /// Independent seeded ascent runs in the cut search.
  int restarts = 4;
  int ascent_sweeps = 100;
  int rounding_trials = 32;
};
EffortProfile effort_profile(Effort effort);

struct DecideOptions {
  Effort effort = Effort::kStandard;
  std::uint64_t seed = 1;
  /// Graphs containing a K4 are outside the Folkman setting; set kAllow to
  /// decide them anyway.
  K4Policy k4_policy = K4Policy::kReject;
  /// Overrides the profile chosen by `effort`.
  std::optional<EffortProfile> profile;
  /// Worker threads for the cut search; results do not depend on it.
  int threads = 1;
  /// Progress lines from the dual descent.
  std::function<void(const std::string&)> log;
};

/// Smallest gap below 2t at which a numerical-tier bound is accepted.
double numerical_margin(std::int64_t h_edges);

/// Eig bound, then dual bound, then cut search, then (for small H_G) an
/// exhaustive maximum cut; returns the first decisive verdict.
/// Throws K4FoundError under K4Policy::kReject.
ArrowDecision decide_arrowing(const Graph& g, const DecideOptions& options = {});

/// Thrown by verify_certificate when the certificate does not fit the graph.
class MalformedCertificate : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct VerifyResult {
  bool accepted = false;
  std::string reason;
  /// SPECTRAL: the bound recomputed from (u, sigma), and the tier the floor
  /// was re-certified at.
  std::optional<double> bound;
  std::optional<CertTier> tier;
};

/// Replays a certificate from scratch: COLORING by a direct triangle recount,
/// SPECTRAL by re-certifying sigma and comparing the bound with 2t in
/// rational arithmetic, EXHAUSTIVE by rerunning the exhaustive search.
VerifyResult verify_certificate(const Graph& g, const ArrowCertificate& cert);

/// Exact comparison of |E|/2 - n*sigma/4 + sum(u)/4 against a threshold;
/// all doubles are taken at their exact binary values.
bool spectral_bound_below(std::int64_t n, std::int64_t m, double sigma, const Eigen::VectorXd& u,
                          double threshold, bool strict);

}  // namespace folkman
