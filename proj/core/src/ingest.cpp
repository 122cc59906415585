#include "vrph/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <limits>
#include <unordered_map>

namespace vrph {

namespace {

constexpr std::uint64_t id_limit = std::uint64_t(1) << 32;

bool is_sep(char c) { return c == ' ' || c == '\t' || c == ',' || c == '\r'; }

struct token_scanner {
  std::string_view text;
  std::size_t pos = 0;
  std::size_t line = 1;

  // returns false at end of input; newlines bump the line counter
  bool next(std::string_view& tok) {
    while (pos < text.size() && (is_sep(text[pos]) || text[pos] == '\n')) {
      if (text[pos] == '\n') ++line;
      ++pos;
    }
    if (pos == text.size()) return false;
    std::size_t start = pos;
    while (pos < text.size() && !is_sep(text[pos]) && text[pos] != '\n') ++pos;
    tok = text.substr(start, pos - start);
    return true;
  }
};

value_t parse_value(std::string_view tok, std::size_t line) {
  value_t v;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || p != tok.data() + tok.size())
    throw parse_error("invalid number '" + std::string(tok) + "'", line);
  return v;
}

std::uint64_t parse_id(std::string_view tok, std::size_t line) {
  std::uint64_t v;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || p != tok.data() + tok.size())
    throw parse_error("invalid vertex id '" + std::string(tok) + "'", line);
  return v;
}

void check_edge_count(std::size_t count) {
  if (count >= id_limit)
    throw resource_error("edge count " + std::to_string(count) +
                         " exceeds 32-bit index range");
}

} // namespace

point_cloud parse_point_cloud(std::string_view text) {
  point_cloud pc;
  std::size_t pos = 0, line = 0;
  while (pos < text.size()) {
    ++line;
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view row = text.substr(pos, eol - pos);
    pos = eol + 1;

    token_scanner scan{row};
    std::string_view tok;
    std::size_t count = 0;
    while (scan.next(tok)) {
      pc.coords.push_back(parse_value(tok, line));
      ++count;
    }
    if (count == 0) continue; // blank line
    if (pc.dim == 0)
      pc.dim = count;
    else if (count != pc.dim)
      throw parse_error("expected " + std::to_string(pc.dim) + " coordinates, got " +
                            std::to_string(count),
                        line);
  }
  if (pc.coords.empty()) throw parse_error("no points in input", line ? line : 1);
  if (pc.size() >= id_limit)
    throw resource_error("point count exceeds 32-bit index range");
  return pc;
}

distance_matrix parse_lower_distance(std::string_view text) {
  distance_matrix dm;
  token_scanner scan{text};
  std::string_view tok;
  while (scan.next(tok)) {
    value_t v = parse_value(tok, scan.line);
    if (v < 0) throw parse_error("negative distance", scan.line);
    dm.d.push_back(v);
  }
  // n(n-1)/2 entries; an empty file is a single point
  std::size_t count = dm.d.size();
  std::size_t n = 1;
  while (n * (n - 1) / 2 < count) ++n;
  if (n * (n - 1) / 2 != count) {
    std::size_t lo = (n - 1) * (n - 2) / 2, hi = n * (n - 1) / 2;
    throw parse_error("entry count " + std::to_string(count) +
                      " is not triangular (nearest: " + std::to_string(lo) + " for n=" +
                      std::to_string(n - 1) + ", " + std::to_string(hi) + " for n=" +
                      std::to_string(n) + ")");
  }
  if (n >= id_limit) throw resource_error("point count exceeds 32-bit index range");
  dm.n = n;
  return dm;
}

sparse_distances parse_sparse(std::string_view text) {
  std::unordered_map<std::uint64_t, value_t> best;
  token_scanner scan{text};
  std::string_view tok;
  std::uint64_t max_id = 0;
  bool any = false;
  while (scan.next(tok)) {
    std::size_t line = scan.line;
    std::uint64_t i = parse_id(tok, line);
    if (!scan.next(tok) || scan.line != line)
      throw parse_error("expected 'i j distance'", line);
    std::uint64_t j = parse_id(tok, line);
    if (!scan.next(tok) || scan.line != line)
      throw parse_error("expected 'i j distance'", line);
    value_t v = parse_value(tok, line);
    if (i == j) throw parse_error("self distance for vertex " + std::to_string(i), line);
    if (v < 0) throw parse_error("negative distance", line);
    if (i >= id_limit || j >= id_limit)
      throw resource_error("vertex id exceeds 32-bit index range");
    any = true;
    max_id = std::max(max_id, std::max(i, j));
    std::uint64_t k = i < j ? (i << 32 | j) : (j << 32 | i);
    auto [it, fresh] = best.emplace(k, v);
    if (!fresh) it->second = std::min(it->second, v); // duplicates keep the minimum
  }
  if (!any) throw parse_error("no entries in input", 1);
  sparse_distances sd;
  sd.n = vertex_t(max_id + 1);
  sd.entries.reserve(best.size());
  for (auto& [k, v] : best)
    sd.entries.push_back({vertex_t(k >> 32), vertex_t(k & 0xffffffffu), v});
  return sd;
}

edge_set enumerate_edges(const point_cloud& pc, value_t threshold) {
  edge_set es;
  es.n = vertex_t(pc.size());
  std::size_t n = pc.size(), dim = pc.dim;
  if (threshold == std::numeric_limits<value_t>::infinity())
    check_edge_count(n * (n - 1) / 2);
  for (std::size_t u = 0; u < n; ++u) {
    const value_t* pu = pc.coords.data() + u * dim;
    for (std::size_t v = u + 1; v < n; ++v) {
      const value_t* pv = pc.coords.data() + v * dim;
      value_t s = 0;
      for (std::size_t k = 0; k < dim; ++k) {
        value_t diff = pu[k] - pv[k];
        s += diff * diff;
      }
      value_t len = std::sqrt(s);
      if (len <= threshold) es.edges.push_back({vertex_t(u), vertex_t(v), len});
    }
    check_edge_count(es.edges.size());
  }
  return es;
}

edge_set enumerate_edges(const distance_matrix& dm, value_t threshold) {
  edge_set es;
  es.n = vertex_t(dm.n);
  for (std::size_t i = 1; i < dm.n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      value_t v = dm.d[i * (i - 1) / 2 + j];
      if (std::isfinite(v) && v <= threshold)
        es.edges.push_back({vertex_t(j), vertex_t(i), v});
    }
    check_edge_count(es.edges.size());
  }
  return es;
}

edge_set enumerate_edges(const sparse_distances& sd, value_t threshold) {
  edge_set es;
  es.n = sd.n;
  for (const edge_candidate& e : sd.entries)
    if (std::isfinite(e.length) && e.length <= threshold) es.edges.push_back(e);
  check_edge_count(es.edges.size());
  return es;
}

edge_set load_edges(input_format fmt, std::string_view text, value_t threshold) {
  switch (fmt) {
    case input_format::cloud: return enumerate_edges(parse_point_cloud(text), threshold);
    case input_format::lower_distance:
      return enumerate_edges(parse_lower_distance(text), threshold);
    case input_format::sparse: return enumerate_edges(parse_sparse(text), threshold);
  }
  throw parse_error("unknown input format");
}

} // namespace vrph
