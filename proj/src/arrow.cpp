#include "folkman/arrow.hpp"

#include <algorithm>
#include <cmath>

#include <gmpxx.h>

#include "folkman/cut.hpp"
#include "folkman/spectral_floor.hpp"

namespace folkman {

const char* to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::kArrows:
      return "ARROWS";
    case Verdict::kNotArrows:
      return "NOT_ARROWS";
    case Verdict::kUndecided:
      return "UNDECIDED";
  }
  return "?";
}

const char* certificate_kind(const ArrowCertificate& cert) {
  if (std::holds_alternative<SpectralCertificate>(cert)) return "spectral";
  if (std::holds_alternative<ColoringCertificate>(cert)) return "coloring";
  return "exhaustive";
}

const char* to_string(Effort effort) {
  switch (effort) {
    case Effort::kQuick:
      return "quick";
    case Effort::kStandard:
      return "standard";
    case Effort::kDeep:
      return "deep";
  }
  return "?";
}

Effort parse_effort(const std::string& text) {
  if (text == "quick") return Effort::kQuick;
  if (text == "standard") return Effort::kStandard;
  if (text == "deep") return Effort::kDeep;
  throw std::invalid_argument("unknown effort '" + text + "' (expected quick, standard or deep)");
}

EffortProfile effort_profile(Effort effort) {
  switch (effort) {
    case Effort::kQuick:
      return {.dual_budget = 0, .dual_refine_iterations = 100, .dual_max_rank = 16,
              .restarts = 4, .ascent_sweeps = 50, .rounding_trials = 16};
    case Effort::kStandard:
      return {.dual_budget = 8, .dual_refine_iterations = 150, .dual_max_rank = 48,
              .restarts = 16, .ascent_sweeps = 100, .rounding_trials = 32};
    case Effort::kDeep:
      return {.dual_budget = 24, .dual_refine_iterations = 250, .dual_max_rank = 128,
              .restarts = 100, .ascent_sweeps = 200, .rounding_trials = 64};
  }
  return {};
}

double numerical_margin(std::int64_t h_edges) {
  return std::max(1.0, 1e-6 * static_cast<double>(h_edges));
}

bool spectral_bound_below(std::int64_t n, std::int64_t m, double sigma, const Eigen::VectorXd& u,
                          double threshold, bool strict) {
  mpq_class sum(0);
  for (Eigen::Index i = 0; i < u.size(); ++i) sum += mpq_class(u[i]);
  const mpq_class bound = mpq_class(m, 2) - mpq_class(n, 4) * mpq_class(sigma) + sum / 4;
  const mpq_class t(threshold);
  return strict ? bound < t : bound <= t;
}

namespace {

bool decisive(const BoundReport& r, std::int64_t n, std::int64_t m, std::int64_t two_t) {
  if (!r.certified || !r.upper) return false;
  if (r.tier == CertTier::kExact) {
    return spectral_bound_below(n, m, r.sigma, r.u, static_cast<double>(two_t), true);
  }
  return spectral_bound_below(n, m, r.sigma, r.u, static_cast<double>(two_t) - numerical_margin(m),
                              false);
}

void offer_upper(ArrowDecision& d, const BoundReport& r) {
  if (r.upper && (!d.best_upper || *r.upper < *d.best_upper)) d.best_upper = r.upper;
}

void offer_lower(ArrowDecision& d, std::int64_t lower) {
  if (!d.best_lower || lower > *d.best_lower) d.best_lower = lower;
}

ArrowDecision arrows_by(ArrowDecision d, const BoundReport& r) {
  d.verdict = Verdict::kArrows;
  d.certificate = SpectralCertificate{r.u, r.sigma, r.tier};
  return d;
}

}  // namespace

ArrowDecision decide_arrowing(const Graph& g, const DecideOptions& options) {
  const TriangleGraph tg = build_triangle_graph(g, options.k4_policy);
  const Graph& h = tg.h;
  const std::int64_t n = h.num_vertices();
  const std::int64_t m = h.num_edges();
  const EffortProfile profile = options.profile.value_or(effort_profile(options.effort));

  ArrowDecision d;
  d.two_t = tg.two_t();
  if (d.two_t == 0) {
    d.verdict = Verdict::kNotArrows;
    d.best_lower = 0;
    d.certificate = ColoringCertificate{EdgeColoring{std::vector<std::uint8_t>(static_cast<std::size_t>(g.num_edges()), 0)}};
    return d;
  }

  const BoundReport eig = eig_upper_bound(tg);
  d.reports.push_back(eig);
  offer_upper(d, eig);
  if (decisive(eig, n, m, d.two_t)) return arrows_by(std::move(d), eig);

  VectorAssignment primal;
  if (profile.dual_budget > 0) {
    DualOptions dual;
    dual.budget = profile.dual_budget;
    dual.seed = options.seed;
    dual.refine_iterations = profile.dual_refine_iterations;
    dual.max_rank = profile.dual_max_rank;
    dual.log = options.log;
    // A bound below the acceptance threshold ends the descent; a primal value
    // at the threshold shows the descent cannot get there.
    const FloorOptions fo;
    const double threshold = n > fo.exact_max_dim ? static_cast<double>(d.two_t) - numerical_margin(m)
                                                  : static_cast<double>(d.two_t);
    dual.stop_below = threshold - 1e-6 * std::max(1.0, threshold);
    dual.give_up_at = threshold;
    const BoundReport r = dual_upper_bound(tg, dual, &primal);
    d.reports.push_back(r);
    offer_upper(d, r);
    if (decisive(r, n, m, d.two_t)) return arrows_by(std::move(d), r);
  }

  CutSearchOptions cs;
  cs.restarts = profile.restarts;
  cs.sweeps = profile.ascent_sweeps;
  cs.trials = profile.rounding_trials;
  cs.seed = options.seed;
  cs.target = d.two_t;
  cs.threads = options.threads;
  cs.warm = primal.vectors.rows() == n ? &primal : nullptr;
  const BoundReport lr = lowrank_lower_bound(h, cs);
  d.reports.push_back(lr);
  if (lr.lower) {
    offer_lower(d, *lr.lower);
    if (*lr.lower == d.two_t) {
      d.verdict = Verdict::kNotArrows;
      d.certificate = ColoringCertificate{coloring_from_cut(tg, lr.cut->assignment)};
      return d;
    }
  }

  if (n <= kBruteForceMaxVertices) {
    const Cut exact = brute_force_maxcut(h);
    BoundReport br;
    br.method = BoundMethod::kBrute;
    br.upper = static_cast<double>(exact.size);
    br.lower = exact.size;
    br.cut = exact;
    br.certified = true;
    d.reports.push_back(br);
    offer_upper(d, br);
    offer_lower(d, exact.size);
    if (exact.size == d.two_t) {
      d.verdict = Verdict::kNotArrows;
      d.certificate = ColoringCertificate{coloring_from_cut(tg, exact.assignment)};
    } else {
      d.verdict = Verdict::kArrows;
      d.certificate = ExhaustiveCertificate{};
    }
  }
  return d;
}

namespace {

// Direct enumeration over vertex triples u < v < w with v, w higher
// neighbors of u; independent of the library's triangle listing.
std::int64_t recount_monochromatic(const Graph& g, const EdgeColoring& c) {
  std::int64_t mono = 0;
  for (Vertex u = 0; u < g.num_vertices(); ++u) {
    auto hi = g.higher_neighbors(u);
    for (std::size_t i = 0; i < hi.size(); ++i) {
      for (std::size_t j = i + 1; j < hi.size(); ++j) {
        const EdgeId vw = g.edge_index(hi[i], hi[j]);
        if (vw < 0) continue;
        const auto a = c.color[static_cast<std::size_t>(g.edge_index(u, hi[i]))];
        const auto b = c.color[static_cast<std::size_t>(g.edge_index(u, hi[j]))];
        if (a == b && b == c.color[static_cast<std::size_t>(vw)]) ++mono;
      }
    }
  }
  return mono;
}

VerifyResult verify_coloring(const Graph& g, const ColoringCertificate& cert) {
  const auto& colors = cert.coloring.color;
  if (static_cast<std::int64_t>(colors.size()) != g.num_edges()) {
    throw MalformedCertificate("coloring has " + std::to_string(colors.size()) +
                               " entries but the graph has " + std::to_string(g.num_edges()) +
                               " edges");
  }
  for (auto c : colors) {
    if (c > 1) throw MalformedCertificate("coloring entries must be 0 or 1");
  }
  VerifyResult out;
  const std::int64_t mono = recount_monochromatic(g, cert.coloring);
  out.accepted = mono == 0;
  out.reason = std::to_string(mono) + " monochromatic triangles";
  return out;
}

VerifyResult verify_spectral(const Graph& g, const SpectralCertificate& cert) {
  const TriangleGraph tg = build_triangle_graph(g, K4Policy::kAllow);
  const std::int64_t n = tg.h.num_vertices();
  const std::int64_t m = tg.h.num_edges();
  if (cert.u.size() != n) {
    throw MalformedCertificate("correction vector has " + std::to_string(cert.u.size()) +
                               " entries but H_G has " + std::to_string(n) + " vertices");
  }
  if (!cert.u.allFinite() || !std::isfinite(cert.sigma)) {
    throw MalformedCertificate("certificate contains a non-finite value");
  }
  VerifyResult out;
  if (n == 0) {
    out.reason = "H_G is empty";
    return out;
  }

  mpq_class sum(0), l1(0);
  for (Eigen::Index i = 0; i < n; ++i) {
    const mpq_class x(cert.u[i]);
    sum += x;
    l1 += abs(x);
  }
  if (abs(sum) > l1 * mpq_class(1, 1000000000)) {
    out.reason = "correction vector does not sum to zero";
    return out;
  }

  const SparseSymMatrix mat = SparseSymMatrix::adjacency(tg.h).with_diagonal(cert.u);
  const FloorCertificate floor = certify_spectral_floor(mat, cert.sigma);
  out.tier = floor.tier;
  if (!floor.certified()) {
    out.reason = std::string("eigenvalue floor rejected: ") + to_string(floor.status);
    return out;
  }
  out.bound = spectral_bound(n, m, cert.sigma, cert.u.sum());
  const double two_t = static_cast<double>(tg.two_t());
  const bool below = floor.tier == CertTier::kExact
                         ? spectral_bound_below(n, m, cert.sigma, cert.u, two_t, true)
                         : spectral_bound_below(n, m, cert.sigma, cert.u, two_t - numerical_margin(m), false);
  out.accepted = below;
  out.reason = below ? "bound below 2t" : "bound does not fall below 2t";
  return out;
}

VerifyResult verify_exhaustive(const Graph& g) {
  const TriangleGraph tg = build_triangle_graph(g, K4Policy::kAllow);
  if (tg.h.num_vertices() > kBruteForceMaxVertices) {
    throw MalformedCertificate("exhaustive certificate on a graph with " +
                               std::to_string(tg.h.num_vertices()) + " edges");
  }
  VerifyResult out;
  const Cut exact = brute_force_maxcut(tg.h);
  out.accepted = exact.size < tg.two_t();
  out.bound = static_cast<double>(exact.size);
  out.reason = "maximum cut " + std::to_string(exact.size) + ", 2t = " + std::to_string(tg.two_t());
  return out;
}

}  // namespace

VerifyResult verify_certificate(const Graph& g, const ArrowCertificate& cert) {
  if (const auto* c = std::get_if<ColoringCertificate>(&cert)) return verify_coloring(g, *c);
  if (const auto* s = std::get_if<SpectralCertificate>(&cert)) return verify_spectral(g, *s);
  return verify_exhaustive(g);
}

}  // namespace folkman
