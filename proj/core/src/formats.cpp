#include <algorithm>
#include <cctype>
#include <sstream>
#include <string>
#include <vector>

#include "regmatch/errors.hpp"
#include "regmatch/multigraph.hpp"

namespace regmatch {

namespace {

// graph6 packs the upper triangle in column order: (0,1), (0,2), (1,2),
// (0,3), ... six bits per printable byte, offset 63.
constexpr int kG6Offset = 63;
constexpr int kG6MaxN = 62;

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

}  // namespace

Multigraph parse_graph6(std::string_view text) {
  std::string_view s = trim(text);
  constexpr std::string_view header = ">>graph6<<";
  std::size_t base = 0;
  if (s.substr(0, header.size()) == header) {
    s.remove_prefix(header.size());
    base = header.size();
  }
  if (s.empty()) throw ParseError("empty graph6 string", base);
  const unsigned char first = static_cast<unsigned char>(s[0]);
  if (first == 126)
    throw ParseError("graph6 long-form order not supported (n > 62)", base);
  if (first < kG6Offset || first > kG6Offset + kG6MaxN)
    throw ParseError("invalid graph6 order byte", base);
  const int n = first - kG6Offset;

  const std::size_t bits_needed = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t bytes_needed = (bits_needed + 5) / 6;
  if (s.size() - 1 < bytes_needed)
    throw ParseError("truncated graph6 bit-vector", base + s.size());
  if (s.size() - 1 > bytes_needed)
    throw ParseError("trailing bytes after graph6 bit-vector",
                     base + 1 + bytes_needed);

  std::vector<int> bits;
  bits.reserve(bytes_needed * 6);
  for (std::size_t i = 0; i < bytes_needed; ++i) {
    const unsigned char c = static_cast<unsigned char>(s[1 + i]);
    if (c < kG6Offset || c > 126)
      throw ParseError("invalid graph6 data byte", base + 1 + i);
    const int v = c - kG6Offset;
    for (int b = 5; b >= 0; --b) bits.push_back((v >> b) & 1);
  }

  std::vector<EdgeRecord> edges;
  std::size_t idx = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++idx)
      if (bits[idx]) edges.push_back({i, j, 1});
  // padding bits must be zero
  for (std::size_t p = bits_needed; p < bits.size(); ++p)
    if (bits[p])
      throw ParseError("nonzero padding in graph6 bit-vector",
                       base + 1 + p / 6);
  return Multigraph(n, std::move(edges));
}

std::string to_graph6(const Multigraph& g) {
  if (!g.is_simple())
    throw InputError("graph6 encodes simple graphs only");
  const int n = g.vertex_count();
  if (n > kG6MaxN) throw InputError("graph6 output limited to n <= 62");
  std::string out;
  out.push_back(static_cast<char>(n + kG6Offset));
  std::vector<int> bits;
  bits.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) bits.push_back(g.has_edge(i, j) ? 1 : 0);
  while (bits.size() % 6 != 0) bits.push_back(0);
  for (std::size_t i = 0; i < bits.size(); i += 6) {
    int v = 0;
    for (int b = 0; b < 6; ++b) v = (v << 1) | bits[i + b];
    out.push_back(static_cast<char>(v + kG6Offset));
  }
  return out;
}

Multigraph parse_mel(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int n = -1;
  std::vector<EdgeRecord> edges;
  std::size_t offset = 0;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::size_t line_offset = offset;
    offset += line.size() + 1;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;  // blank or comment-only line
    if (n < 0) {
      if (tok != "n")
        throw ParseError("MEL header must start with 'n'", line_offset);
      long long count = -1;
      if (!(ls >> count) || count < 0)
        throw ParseError("MEL header needs a non-negative vertex count",
                         line_offset);
      std::string rest;
      if (ls >> rest)
        throw ParseError("trailing tokens after MEL header", line_offset);
      n = static_cast<int>(count);
      continue;
    }
    long long u, v, m;
    std::istringstream es(line);
    if (!(es >> u >> v >> m))
      throw ParseError("MEL edge line must read 'u v m' (line " +
                           std::to_string(line_no) + ")",
                       line_offset);
    std::string rest;
    if (es >> rest)
      throw ParseError("trailing tokens on MEL edge line", line_offset);
    if (u == v)
      throw ParseError("loop " + std::to_string(u) + "-" + std::to_string(v) +
                           " rejected: graphs are loopless",
                       line_offset);
    if (m < 1)
      throw ParseError("edge multiplicity must be >= 1", line_offset);
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw ParseError("edge endpoint out of range", line_offset);
    edges.push_back({static_cast<int>(u), static_cast<int>(v),
                     static_cast<int>(m)});
  }
  if (n < 0) throw ParseError("missing MEL header line", 0);
  return Multigraph(n, std::move(edges));
}

std::string serialize_mel(const Multigraph& g) {
  std::ostringstream out;
  out << "n " << g.vertex_count() << "\n";
  for (const auto& e : g.edges())
    out << e.u << " " << e.v << " " << e.mult << "\n";
  return out.str();
}

}  // namespace regmatch
