#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include "folkman/arrow.hpp"
#include "folkman/graph.hpp"

namespace folkman {

/// Malformed input text; `line` is 1-based, 0 when not tied to a line.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& reason);
  std::size_t line() const { return line_; }
  const std::string& reason() const { return reason_; }

 private:
  std::size_t line_;
  std::string reason_;
};

/// Graph text: a header "n m", then m lines "u v". Lines starting with '#'
/// and blank lines are skipped. Edges may appear in any order with either
/// endpoint first; the graph is canonicalized on construction.
Graph parse_graph(std::string_view text);

/// Canonical form: header, then edges u < v in lexicographic order, one per
/// line, each line ending in '\n'.
std::string write_graph(const Graph& g);

/// SHA-256 of write_graph(g), lowercase hex.
std::string graph_hash(const Graph& g);

struct CertificateFile {
  std::string graph_hash;
  std::int64_t two_t = 0;
  ArrowCertificate certificate;
};

/// Key/value lines "kind:", "graph-hash:", "two-t:", then "coloring:" (one
/// 0/1 character per edge) for coloring certificates, or "u:" (space
/// separated decimals), "sigma:" and "tier:" for spectral ones.
CertificateFile parse_certificate(std::string_view text);
std::string write_certificate(const CertificateFile& file);

/// Shortest decimal that reads back as the same double.
std::string format_double(double x);

}  // namespace folkman
