#include "folkman/circulant.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace folkman {

namespace {

std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t n) {
  return static_cast<std::int64_t>(static_cast<__int128>(a) * b % n);
}

std::int64_t powmod(std::int64_t base, std::int64_t exp, std::int64_t n) {
  std::int64_t result = 1 % n;
  base %= n;
  while (exp > 0) {
    if (exp & 1) result = mulmod(result, base, n);
    base = mulmod(base, base, n);
    exp >>= 1;
  }
  return result;
}

}  // namespace

ConnectionSet::ConnectionSet(std::int64_t modulus, std::vector<std::int64_t> residues)
    : modulus_(modulus), residues_(std::move(residues)) {
  if (modulus_ < 2) throw GraphError("circulant modulus must be at least 2");
  for (auto& r : residues_) {
    r %= modulus_;
    if (r < 0) r += modulus_;
    if (r == 0) throw GraphError("connection set contains 0");
  }
  std::sort(residues_.begin(), residues_.end());
  residues_.erase(std::unique(residues_.begin(), residues_.end()), residues_.end());
  for (auto r : residues_) {
    if (!std::binary_search(residues_.begin(), residues_.end(), modulus_ - r)) {
      throw GraphError("connection set mod " + std::to_string(modulus_) +
                       " is not closed under negation: contains " + std::to_string(r) +
                       " but not " + std::to_string(modulus_ - r));
    }
  }
}

std::vector<std::int64_t> power_residues(std::int64_t n, std::int64_t r) {
  std::vector<std::int64_t> out;
  for (std::int64_t a = 1; a < n; ++a) {
    std::int64_t p = powmod(a, r, n);
    if (p != 0) out.push_back(p);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::int64_t multiplicative_order(std::int64_t s, std::int64_t n) {
  if (n < 2 || std::gcd(s, n) != 1) {
    throw GraphError(std::to_string(s) + " is not a unit mod " + std::to_string(n));
  }
  std::int64_t x = s % n;
  std::int64_t m = 1;
  while (x != 1 % n) {
    x = mulmod(x, s, n);
    ++m;
  }
  return m;
}

std::vector<std::int64_t> cyclic_subgroup(std::int64_t n, std::int64_t s) {
  std::int64_t m = multiplicative_order(s, n);
  std::vector<std::int64_t> out;
  out.reserve(static_cast<std::size_t>(m));
  std::int64_t x = 1 % n;
  for (std::int64_t i = 0; i < m; ++i) {
    out.push_back(x);
    x = mulmod(x, s, n);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Graph circulant_graph(const ConnectionSet& set) {
  const std::int64_t n = set.modulus();
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(n) * set.size() / 2);
  for (std::int64_t u = 0; u < n; ++u) {
    for (std::int64_t d : set.residues()) {
      std::int64_t v = (u + d) % n;
      if (u < v) edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
    }
  }
  return Graph(static_cast<Vertex>(n), std::move(edges));
}

Graph make_residue_circulant(std::int64_t n, std::int64_t r) {
  if (n < 3 || r < 1) throw GraphError("G(n,r) needs n >= 3 and r >= 1");
  auto residues = power_residues(n, r);
  if (!std::binary_search(residues.begin(), residues.end(), n - 1)) {
    throw GraphError("-1 is not a " + std::to_string(r) + "-th residue mod " +
                     std::to_string(n));
  }
  return circulant_graph(ConnectionSet(n, std::move(residues)));
}

Graph make_power_circulant(std::int64_t n, std::int64_t s) {
  if (s < 1 || s >= n) throw GraphError("L(n,s) needs 1 <= s < n");
  if (std::gcd(s, n) != 1) {
    throw GraphError("gcd(" + std::to_string(s) + ", " + std::to_string(n) + ") != 1");
  }
  auto subgroup = cyclic_subgroup(n, s);
  if (!std::binary_search(subgroup.begin(), subgroup.end(), n - 1)) {
    throw GraphError("-1 is not a power of " + std::to_string(s) + " mod " +
                     std::to_string(n));
  }
  return circulant_graph(ConnectionSet(n, std::move(subgroup)));
}

RelabeledGraph delete_progression(const Graph& g, std::int64_t d, std::int64_t k) {
  const std::int64_t n = g.num_vertices();
  if (k < 0 || k > n) throw GraphError("progression length out of range");
  std::vector<bool> keep(static_cast<std::size_t>(n), true);
  for (std::int64_t i = 0; i < k; ++i) {
    std::int64_t v = (mulmod(i, ((d % n) + n) % n, n));
    keep[static_cast<std::size_t>(v)] = false;
  }
  return induced_subgraph(g, keep);
}

Graph add_cone_vertex(const Graph& g, const std::vector<Vertex>& targets) {
  const Vertex apex = g.num_vertices();
  std::vector<Vertex> sorted = targets;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw GraphError("duplicate cone target");
  }
  std::vector<Edge> edges = g.edges();
  for (Vertex t : sorted) {
    if (t < 0 || t >= apex) throw GraphError("cone target " + std::to_string(t) + " out of range");
    edges.push_back({t, apex});
  }
  return Graph(apex + 1, std::move(edges));
}

}  // namespace folkman
