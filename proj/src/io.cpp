#include "folkman/io.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <cstdio>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include <openssl/evp.h>

namespace folkman {

ParseError::ParseError(std::size_t line, const std::string& reason)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + reason : reason),
      line_(line),
      reason_(reason) {}

namespace {

struct Line {
  std::size_t number;
  std::string_view text;
};

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

// Non-blank lines that are not '#' comments.
std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0, pos = 0;
  while (pos <= text.size()) {
    const auto end = text.find('\n', pos);
    const auto raw = text.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos);
    ++number;
    const auto t = trim(raw);
    if (!t.empty() && t.front() != '#') out.push_back({number, t});
    if (end == std::string_view::npos) break;
    pos = end + 1;
  }
  return out;
}

std::vector<std::string_view> tokens(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    const auto b = s.find_first_not_of(" \t", pos);
    if (b == std::string_view::npos) break;
    auto e = s.find_first_of(" \t", b);
    if (e == std::string_view::npos) e = s.size();
    out.push_back(s.substr(b, e - b));
    pos = e;
  }
  return out;
}

template <typename T>
std::optional<T> parse_number(std::string_view s) {
  T value{};
  const auto* end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data(), end, value);
  if (ec != std::errc() || ptr != end) return std::nullopt;
  return value;
}

std::int64_t parse_integer(const Line& line, std::string_view token, const char* what) {
  auto v = parse_number<std::int64_t>(token);
  if (!v) throw ParseError(line.number, std::string("expected an integer ") + what + ", got '" + std::string(token) + "'");
  return *v;
}

}  // namespace

Graph parse_graph(std::string_view text) {
  const std::vector<Line> lines = content_lines(text);
  if (lines.empty()) throw ParseError(0, "missing header line \"n m\"");
  const auto header = tokens(lines[0].text);
  if (header.size() != 2) throw ParseError(lines[0].number, "header must be \"n m\"");
  const std::int64_t n = parse_integer(lines[0], header[0], "vertex count");
  const std::int64_t m = parse_integer(lines[0], header[1], "edge count");
  if (n < 0 || n > std::numeric_limits<Vertex>::max()) throw ParseError(lines[0].number, "vertex count out of range");
  if (m < 0) throw ParseError(lines[0].number, "negative edge count");
  if (static_cast<std::int64_t>(lines.size()) - 1 != m) {
    const std::size_t where = static_cast<std::int64_t>(lines.size()) - 1 > m
                                  ? lines[static_cast<std::size_t>(m) + 1].number
                                  : 0;
    throw ParseError(where, "header declares " + std::to_string(m) + " edges but " +
                                std::to_string(lines.size() - 1) + " edge lines follow");
  }

  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  std::map<std::pair<Vertex, Vertex>, std::size_t> seen;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    const auto tok = tokens(line.text);
    if (tok.size() != 2) throw ParseError(line.number, "edge line must be \"u v\"");
    const std::int64_t u = parse_integer(line, tok[0], "endpoint");
    const std::int64_t v = parse_integer(line, tok[1], "endpoint");
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw ParseError(line.number, "endpoint out of range [0, " + std::to_string(n) + ")");
    }
    if (u == v) throw ParseError(line.number, "self-loop at vertex " + std::to_string(u));
    const std::pair<Vertex, Vertex> key{static_cast<Vertex>(std::min(u, v)), static_cast<Vertex>(std::max(u, v))};
    const auto [it, fresh] = seen.emplace(key, line.number);
    if (!fresh) {
      throw ParseError(line.number, "duplicate edge " + std::to_string(key.first) + " " +
                                        std::to_string(key.second) + " (first on line " +
                                        std::to_string(it->second) + ")");
    }
    edges.push_back({key.first, key.second});
  }
  return Graph(static_cast<Vertex>(n), std::move(edges));
}

std::string write_graph(const Graph& g) {
  std::string out = std::to_string(g.num_vertices()) + " " + std::to_string(g.num_edges()) + "\n";
  out.reserve(out.size() + static_cast<std::size_t>(g.num_edges()) * 12);
  for (const Edge& e : g.edges()) {
    out += std::to_string(e.u);
    out += ' ';
    out += std::to_string(e.v);
    out += '\n';
  }
  return out;
}

std::string graph_hash(const Graph& g) {
  const std::string text = write_graph(g);
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (EVP_Digest(text.data(), text.size(), digest, &length, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("SHA-256 digest failed");
  }
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < length; ++i) {
    out += hex[digest[i] >> 4];
    out += hex[digest[i] & 15];
  }
  return out;
}

std::string format_double(double x) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  if (ec != std::errc()) throw std::runtime_error("format_double failed");
  return std::string(buf, ptr);
}

CertificateFile parse_certificate(std::string_view text) {
  std::map<std::string, Line> fields;
  for (const Line& line : content_lines(text)) {
    const auto colon = line.text.find(':');
    if (colon == std::string_view::npos) throw ParseError(line.number, "expected \"key: value\"");
    std::string key(trim(line.text.substr(0, colon)));
    const Line value{line.number, trim(line.text.substr(colon + 1))};
    if (!fields.emplace(key, value).second) throw ParseError(line.number, "repeated key '" + key + "'");
  }
  auto need = [&](const std::string& key) -> const Line& {
    auto it = fields.find(key);
    if (it == fields.end()) throw ParseError(0, "missing key '" + key + "'");
    return it->second;
  };

  CertificateFile file;
  const Line& kind = need("kind");
  const Line& hash = need("graph-hash");
  file.graph_hash = std::string(hash.text);
  if (file.graph_hash.empty()) throw ParseError(hash.number, "empty graph-hash");
  const Line& two_t = need("two-t");
  file.two_t = parse_integer(two_t, two_t.text, "for two-t");

  std::set<std::string> allowed = {"kind", "graph-hash", "two-t"};
  if (kind.text == "coloring") {
    allowed.insert("coloring");
    const Line& bits = need("coloring");
    ColoringCertificate c;
    c.coloring.color.reserve(bits.text.size());
    for (char ch : bits.text) {
      if (ch != '0' && ch != '1') throw ParseError(bits.number, "coloring must be a string of 0 and 1");
      c.coloring.color.push_back(static_cast<std::uint8_t>(ch - '0'));
    }
    file.certificate = std::move(c);
  } else if (kind.text == "spectral") {
    allowed.insert({"u", "sigma", "tier"});
    const Line& u = need("u");
    const Line& sigma = need("sigma");
    const Line& tier = need("tier");
    SpectralCertificate s;
    const auto tok = tokens(u.text);
    s.u.resize(static_cast<Eigen::Index>(tok.size()));
    for (std::size_t i = 0; i < tok.size(); ++i) {
      auto v = parse_number<double>(tok[i]);
      if (!v) throw ParseError(u.number, "bad number '" + std::string(tok[i]) + "' in u");
      s.u[static_cast<Eigen::Index>(i)] = *v;
    }
    auto sv = parse_number<double>(sigma.text);
    if (!sv) throw ParseError(sigma.number, "bad number for sigma");
    s.sigma = *sv;
    if (tier.text == "exact") {
      s.tier = CertTier::kExact;
    } else if (tier.text == "numerical") {
      s.tier = CertTier::kNumerical;
    } else {
      throw ParseError(tier.number, "tier must be exact or numerical");
    }
    file.certificate = std::move(s);
  } else if (kind.text == "exhaustive") {
    file.certificate = ExhaustiveCertificate{};
  } else {
    throw ParseError(kind.number, "unknown kind '" + std::string(kind.text) + "'");
  }
  for (const auto& [key, line] : fields) {
    if (!allowed.count(key)) throw ParseError(line.number, "unexpected key '" + key + "'");
  }
  return file;
}

std::string write_certificate(const CertificateFile& file) {
  std::string out = std::string("kind: ") + certificate_kind(file.certificate) + "\n";
  out += "graph-hash: " + file.graph_hash + "\n";
  out += "two-t: " + std::to_string(file.two_t) + "\n";
  if (const auto* c = std::get_if<ColoringCertificate>(&file.certificate)) {
    out += "coloring: ";
    for (auto bit : c->coloring.color) out += static_cast<char>('0' + bit);
    out += "\n";
  } else if (const auto* s = std::get_if<SpectralCertificate>(&file.certificate)) {
    out += "u:";
    for (Eigen::Index i = 0; i < s->u.size(); ++i) {
      out += ' ';
      out += format_double(s->u[i]);
    }
    out += "\n";
    out += "sigma: " + format_double(s->sigma) + "\n";
    out += std::string("tier: ") + to_string(s->tier) + "\n";
  }
  return out;
}

}  // namespace folkman
