#pragma once

#include <cstdint>
#include <vector>

#include "folkman/graph.hpp"

namespace folkman {

/// Symmetric connection set of a circulant graph on Z_n.
///
/// Invariants: 0 is not a member, and the set is closed under negation mod n.
/// The constructor enforces both.
class ConnectionSet {
 public:
  ConnectionSet(std::int64_t modulus, std::vector<std::int64_t> residues);

  std::int64_t modulus() const { return modulus_; }
  /// Sorted ascending, distinct, all in 1..n-1.
  const std::vector<std::int64_t>& residues() const { return residues_; }
  std::size_t size() const { return residues_.size(); }

 private:
  std::int64_t modulus_;
  std::vector<std::int64_t> residues_;
};

/// {a^r mod n : a in Z_n, a^r != 0}, sorted. Not assumed symmetric.
std::vector<std::int64_t> power_residues(std::int64_t n, std::int64_t r);

/// {s^i mod n : 0 <= i < ord_n(s)}, sorted. Requires gcd(s, n) = 1.
std::vector<std::int64_t> cyclic_subgroup(std::int64_t n, std::int64_t s);

std::int64_t multiplicative_order(std::int64_t s, std::int64_t n);

Graph circulant_graph(const ConnectionSet& set);

/// G(n, r): circulant on Z_n joined by nonzero r-th power residues.
/// Throws GraphError unless -1 is an r-th residue mod n.
Graph make_residue_circulant(std::int64_t n, std::int64_t r);

/// L(n, s): circulant on Z_n joined by the cyclic subgroup generated by s.
/// Throws GraphError when gcd(s, n) != 1 or -1 is not in the subgroup.
Graph make_power_circulant(std::int64_t n, std::int64_t s);

/// Removes {i*d mod n : 0 <= i < k} and compacts the remaining labels.
RelabeledGraph delete_progression(const Graph& g, std::int64_t d, std::int64_t k);

/// Appends vertex n joined to every vertex in targets.
Graph add_cone_vertex(const Graph& g, const std::vector<Vertex>& targets);

}  // namespace folkman
