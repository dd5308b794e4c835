#include "tokgraph/graph_io.h"

#include <charconv>
#include <cstdint>
#include <sstream>

#include "tokgraph/errors.h"

namespace tokgraph {
namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";

void put_size(std::string& out, std::uint64_t n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
}

int chunk_value(std::string_view s, std::size_t pos, std::size_t base_offset) {
  const unsigned char c = static_cast<unsigned char>(s[pos]);
  if (c < 63 || c > 126)
    throw ParseError(base_offset + pos, "byte " + std::to_string(c) + " outside graph6 range 63..126");
  return c - 63;
}

}  // namespace

std::string graph6_encode(const Graph& g) {
  const int n = g.order();
  std::string out;
  put_size(out, static_cast<std::uint64_t>(n));
  int acc = 0;
  int bits = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        bits = 0;
      }
    }
  }
  if (bits > 0) out.push_back(static_cast<char>((acc << (6 - bits)) + 63));
  return out;
}

Graph graph6_decode(std::string_view text) {
  std::size_t offset = 0;
  if (text.starts_with(kGraph6Header)) offset = kGraph6Header.size();
  std::string_view body = text.substr(offset);
  if (body.ends_with('\n')) body.remove_suffix(1);
  if (body.ends_with('\r')) body.remove_suffix(1);
  if (body.empty()) throw ParseError(offset, "empty graph6 string");

  std::uint64_t n = 0;
  std::size_t pos = 0;
  const int first = chunk_value(body, 0, offset);
  if (first < 63) {
    n = static_cast<std::uint64_t>(first);
    pos = 1;
  } else if (body.size() >= 2 && static_cast<unsigned char>(body[1]) == 126) {
    if (body.size() < 8) throw ParseError(offset + body.size(), "truncated 8-byte size header");
    for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | static_cast<std::uint64_t>(chunk_value(body, i, offset));
    pos = 8;
  } else {
    if (body.size() < 4) throw ParseError(offset + body.size(), "truncated 4-byte size header");
    for (std::size_t i = 1; i < 4; ++i) n = (n << 6) | static_cast<std::uint64_t>(chunk_value(body, i, offset));
    pos = 4;
  }
  if (n > 65535) throw ParseError(offset, "graphs with more than 65535 vertices are not supported");

  const std::uint64_t pairs = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::uint64_t expected_bytes = (pairs + 5) / 6;
  if (body.size() - pos != expected_bytes)
    throw ParseError(offset + std::min<std::size_t>(body.size(), pos + expected_bytes),
                     "expected " + std::to_string(expected_bytes) + " adjacency bytes for n=" +
                         std::to_string(n) + ", found " + std::to_string(body.size() - pos));

  GraphBuilder b(static_cast<int>(n));
  std::uint64_t k = 0;
  for (int j = 1; j < static_cast<int>(n); ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const std::size_t byte = pos + k / 6;
      const int value = chunk_value(body, byte, offset);
      if ((value >> (5 - k % 6)) & 1) b.add_edge(i, j);
    }
  }
  // Padding bits must be zero.
  if (pairs % 6 != 0) {
    const std::size_t last = pos + expected_bytes - 1;
    const int value = chunk_value(body, last, offset);
    if (value & ((1 << (6 - pairs % 6)) - 1)) throw ParseError(offset + last, "non-zero padding bits");
  }
  return std::move(b).build();
}

std::string edge_list_encode(const Graph& g) {
  std::ostringstream os;
  os << g.order() << ' ' << g.size() << '\n';
  for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
  return os.str();
}

Graph edge_list_decode(std::string_view text) {
  std::vector<long long> numbers;
  std::vector<std::size_t> offsets;
  std::size_t i = 0;
  bool at_line_start = true;
  while (i < text.size()) {
    const char c = text[i];
    if (c == '\n') {
      at_line_start = true;
      ++i;
      continue;
    }
    if (c == ' ' || c == '\t' || c == '\r') {
      ++i;
      continue;
    }
    if (at_line_start && c == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
      continue;
    }
    at_line_start = false;
    long long value = 0;
    const auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), value);
    if (ec != std::errc() || ptr == text.data() + i) throw ParseError(i, "expected an integer");
    numbers.push_back(value);
    offsets.push_back(i);
    i = static_cast<std::size_t>(ptr - text.data());
  }
  if (numbers.size() < 2) throw ParseError(text.size(), "missing 'n m' header");
  const long long n = numbers[0];
  const long long m = numbers[1];
  if (n < 0 || n > 65535) throw ParseError(offsets[0], "vertex count out of range");
  if (m < 0) throw ParseError(offsets[1], "negative edge count");
  if (static_cast<long long>(numbers.size()) != 2 + 2 * m)
    throw ParseError(text.size(), "header announces " + std::to_string(m) + " edges, found " +
                                      std::to_string((numbers.size() - 2) / 2.0));
  GraphBuilder b(static_cast<int>(n));
  for (long long e = 0; e < m; ++e) {
    const long long u = numbers[2 + 2 * e];
    const long long v = numbers[3 + 2 * e];
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw ParseError(offsets[2 + 2 * e], "edge endpoint out of range");
    if (u == v) throw ParseError(offsets[2 + 2 * e], "self-loop");
    b.add_edge(static_cast<int>(u), static_cast<int>(v));
  }
  return std::move(b).build();
}

std::string dot_export(const Graph& g, const std::vector<std::string>& labels) {
  if (!labels.empty() && static_cast<int>(labels.size()) != g.order())
    throw ParameterError("labels", "need one label per vertex");
  std::ostringstream os;
  os << "graph G {\n";
  for (int v = 0; v < g.order(); ++v) {
    os << "  " << v;
    if (!labels.empty()) os << " [label=\"" << labels[v] << "\"]";
    os << ";\n";
  }
  for (auto [u, v] : g.edges()) os << "  " << u << " -- " << v << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace tokgraph
