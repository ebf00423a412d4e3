#pragma once

// graph6, weighted edge lists, and the JSON graph schema.

#include <charconv>
#include <cstdint>
#include <cstdio>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>

#include "json.hpp"
#include "turan/graph.hpp"

namespace turan {

/// Input rejected by a parser. `position` is a byte offset (graph6) or a
/// 1-based line number (edge list), as named in the message.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& msg, std::size_t position) : std::runtime_error(msg), position_(position) {}
  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

// ---------------------------------------------------------------------------
// graph6

namespace detail {
constexpr int kG6Bias = 63;
constexpr int kG6Max = 126;
constexpr long kG6MaxOrder = 1L << 16;
}  // namespace detail

inline WeightedGraph parse_graph6(std::string_view text) {
  using detail::kG6Bias;
  using detail::kG6Max;
  std::size_t offset = 0;
  constexpr std::string_view header = ">>graph6<<";
  if (text.substr(0, header.size()) == header) offset = header.size();
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);

  auto byte_at = [&](std::size_t i) -> int {
    if (i >= text.size()) throw ParseError("graph6: truncated at byte offset " + std::to_string(i), i);
    int c = static_cast<unsigned char>(text[i]);
    if (c < kG6Bias || c > kG6Max)
      throw ParseError("graph6: invalid character at byte offset " + std::to_string(i), i);
    return c - kG6Bias;
  };

  long n = 0;
  if (offset >= text.size()) throw ParseError("graph6: empty input at byte offset " + std::to_string(offset), offset);
  if (byte_at(offset) != kG6Max - kG6Bias) {
    n = byte_at(offset);
    offset += 1;
  } else if (offset + 1 < text.size() && byte_at(offset + 1) == kG6Max - kG6Bias) {
    for (int k = 0; k < 6; ++k) n = (n << 6) | byte_at(offset + 2 + k);
    offset += 8;
  } else {
    for (int k = 0; k < 3; ++k) n = (n << 6) | byte_at(offset + 1 + k);
    offset += 4;
  }
  if (n > detail::kG6MaxOrder)
    throw ParseError("graph6: order " + std::to_string(n) + " exceeds 2^16 at byte offset 0", 0);

  const long bits = n * (n - 1) / 2;
  const long nbytes = (bits + 5) / 6;
  if (static_cast<long>(text.size() - offset) < nbytes)
    throw ParseError("graph6: truncated bit field at byte offset " + std::to_string(text.size()), text.size());
  if (static_cast<long>(text.size() - offset) > nbytes) {
    std::size_t extra = offset + static_cast<std::size_t>(nbytes);
    throw ParseError("graph6: trailing data at byte offset " + std::to_string(extra), extra);
  }

  std::vector<Edge> edges;
  long k = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++k) {
      const int chunk = byte_at(offset + static_cast<std::size_t>(k / 6));
      if (chunk & (1 << (5 - k % 6))) edges.push_back({u, v, 1.0});
    }
  }
  if (bits % 6 != 0) {
    const std::size_t last = offset + static_cast<std::size_t>(nbytes - 1);
    const int pad_mask = (1 << (6 - bits % 6)) - 1;
    if (byte_at(last) & pad_mask)
      throw ParseError("graph6: nonzero padding bits at byte offset " + std::to_string(last), last);
  }
  return WeightedGraph(static_cast<int>(n), std::move(edges));
}

/// Encodes the structure of G (weights are dropped).
inline std::string to_graph6(const WeightedGraph& g) {
  const long n = g.order();
  if (n > detail::kG6MaxOrder) throw PreconditionError("graph6: order exceeds 2^16");
  std::string out;
  if (n < 63) {
    out.push_back(static_cast<char>(n + detail::kG6Bias));
  } else {
    out.push_back(static_cast<char>(detail::kG6Max));
    for (int shift = 12; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 0x3f) + detail::kG6Bias));
  }
  int chunk = 0;
  int filled = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      chunk = (chunk << 1) | (g.adjacent(u, v) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(chunk + detail::kG6Bias));
        chunk = filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((chunk << (6 - filled)) + detail::kG6Bias));
  return out;
}

// ---------------------------------------------------------------------------
// Weighted edge list: "n m" header, then m lines "u v w"; '#' starts a comment line.

namespace detail {

inline std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

template <typename T>
T parse_number(std::string_view tok, std::size_t line, const char* what) {
  T value{};
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw ParseError("edge list: bad " + std::string(what) + " '" + std::string(tok) + "' on line " +
                         std::to_string(line),
                     line);
  return value;
}

}  // namespace detail

inline WeightedGraph parse_weighted_edgelist(std::string_view text) {
  std::vector<std::pair<std::size_t, std::string_view>> lines;
  std::size_t lineno = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++lineno;
    std::string_view line = text.substr(start, end - start);
    auto toks = detail::split_ws(line);
    if (!toks.empty() && toks.front().front() != '#') lines.emplace_back(lineno, line);
    start = end + 1;
  }
  if (lines.empty()) throw ParseError("edge list: missing 'n m' header on line 1", 1);

  auto header = detail::split_ws(lines.front().second);
  const std::size_t hline = lines.front().first;
  if (header.size() != 2) throw ParseError("edge list: header must be 'n m' on line " + std::to_string(hline), hline);
  const int n = detail::parse_number<int>(header[0], hline, "vertex count");
  const int m = detail::parse_number<int>(header[1], hline, "edge count");
  if (n < 0 || m < 0) throw ParseError("edge list: negative count on line " + std::to_string(hline), hline);
  if (static_cast<std::size_t>(m) != lines.size() - 1)
    throw ParseError("edge list: header declares " + std::to_string(m) + " edges but " +
                         std::to_string(lines.size() - 1) + " follow (line " + std::to_string(hline) + ")",
                     hline);

  std::vector<Edge> edges;
  std::vector<char> seen(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto [ln, line] = lines[i];
    auto toks = detail::split_ws(line);
    if (toks.size() != 3) throw ParseError("edge list: expected 'u v w' on line " + std::to_string(ln), ln);
    int u = detail::parse_number<int>(toks[0], ln, "vertex");
    int v = detail::parse_number<int>(toks[1], ln, "vertex");
    const double w = detail::parse_number<double>(toks[2], ln, "weight");
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw ParseError("edge list: vertex out of range on line " + std::to_string(ln), ln);
    if (u == v) throw ParseError("edge list: self-loop on line " + std::to_string(ln), ln);
    if (!std::isfinite(w)) throw ParseError("edge list: non-finite weight on line " + std::to_string(ln), ln);
    if (w == 0.0)
      throw ParseError("edge list: zero weight on line " + std::to_string(ln) + " (structural ambiguity)", ln);
    if (u > v) std::swap(u, v);
    char& mark = seen[static_cast<std::size_t>(u) * n + v];
    if (mark) throw ParseError("edge list: duplicate edge on line " + std::to_string(ln), ln);
    mark = 1;
    edges.push_back({u, v, w});
  }
  return WeightedGraph(n, std::move(edges));
}

inline std::string format_real(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

inline std::string to_weighted_edgelist(const WeightedGraph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.size() << '\n';
  for (const auto& e : g.edges()) out << e.u << ' ' << e.v << ' ' << format_real(e.w) << '\n';
  return out.str();
}

// ---------------------------------------------------------------------------
// JSON: {"n": int, "edges": [[u, v, w], ...]} in that field order.

inline nlohmann::ordered_json graph_to_json(const WeightedGraph& g) {
  nlohmann::ordered_json j;
  j["n"] = g.order();
  auto edges = nlohmann::ordered_json::array();
  for (const auto& e : g.edges()) edges.push_back({e.u, e.v, e.w});
  j["edges"] = std::move(edges);
  return j;
}

inline WeightedGraph graph_from_json(const nlohmann::json& j) {
  try {
    const int n = j.at("n").get<int>();
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 3) throw ParseError("graph JSON: edge must be [u, v, w]", 0);
      edges.push_back({e[0].get<int>(), e[1].get<int>(), e[2].get<double>()});
    }
    return WeightedGraph(n, std::move(edges));
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(std::string("graph JSON: ") + ex.what(), 0);
  } catch (const PreconditionError& ex) {
    throw ParseError(std::string("graph JSON: ") + ex.what(), 0);
  }
}

inline WeightedGraph parse_graph_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& ex) {
    throw ParseError(std::string("graph JSON: ") + ex.what() + " at byte offset " + std::to_string(ex.byte), ex.byte);
  }
  return graph_from_json(j);
}

}  // namespace turan
