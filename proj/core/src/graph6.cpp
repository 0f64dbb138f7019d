#include "wsat/graph6.hpp"

#include <stdexcept>

namespace wsat {

namespace {

// Appends the upper-triangle bit stream as 6-bit groups.
void pack_bits(const Graph& g, std::string& out) {
  int group = 0, filled = 0;
  for (int j = 1; j < g.order(); ++j) {
    for (int i = 0; i < j; ++i) {
      group = (group << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(group + 63));
        group = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((group << (6 - filled)) + 63));
}

}  // namespace

std::string graph6_encode(const Graph& g) {
  std::string out;
  int n = g.order();
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back(126);
    out.push_back(static_cast<char>(((n >> 12) & 0x3f) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 0x3f) + 63));
    out.push_back(static_cast<char>((n & 0x3f) + 63));
  }
  pack_bits(g, out);
  return out;
}

Graph graph6_decode(const std::string& text) {
  std::size_t pos = 0;
  auto next = [&]() -> int {
    if (pos >= text.size()) throw std::invalid_argument("graph6: truncated input");
    unsigned char c = static_cast<unsigned char>(text[pos++]);
    if (c < 63 || c > 126) throw std::invalid_argument("graph6: byte outside printable range");
    return c - 63;
  };

  if (text.empty()) throw std::invalid_argument("graph6: empty input");
  int n;
  int head = next();
  if (head < 63) {
    n = head;
  } else {
    // '~' header: 18-bit order. A second '~' would mean the 36-bit form,
    // which always exceeds our capacity.
    if (pos < text.size() && text[pos] == 126) throw std::invalid_argument("graph6: order exceeds capacity");
    int a = next(), b = next(), c = next();
    n = (a << 12) | (b << 6) | c;
  }
  if (n < 1 || n > kMaxVertices) throw std::invalid_argument("graph6: order outside 1..64");

  Graph g(n);
  int group = 0, avail = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if (avail == 0) {
        group = next();
        avail = 6;
      }
      if (group & (1 << (avail - 1))) g.add_edge(i, j);
      --avail;
    }
  }
  if (avail > 0 && (group & ((1 << avail) - 1)) != 0)
    throw std::invalid_argument("graph6: nonzero padding bits");
  if (pos != text.size()) throw std::invalid_argument("graph6: trailing bytes");
  return g;
}

}  // namespace wsat
