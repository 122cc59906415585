#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace vrph {

typedef std::uint32_t vertex_t;
typedef std::uint32_t edge_t; // position in the sorted edge filtration
typedef double value_t;

constexpr edge_t no_edge = std::numeric_limits<edge_t>::max();

// Triangles and tetrahedra are addressed by a pair of 32-bit keys.
// Triangle: primary = order of its diameter edge, secondary = the remaining vertex.
// Tetrahedron: primary = order of its diameter edge, secondary = order of the
// opposite edge; here secondary < primary always holds.
struct paired_index {
  std::uint32_t primary;
  std::uint32_t secondary;

  friend bool operator==(const paired_index&, const paired_index&) = default;

  friend bool operator<(const paired_index& x, const paired_index& y) {
    return x.primary != y.primary ? x.primary < y.primary : x.secondary < y.secondary;
  }
  friend bool operator>(const paired_index& x, const paired_index& y) { return y < x; }
  friend bool operator<=(const paired_index& x, const paired_index& y) { return !(y < x); }
  friend bool operator>=(const paired_index& x, const paired_index& y) { return !(x < y); }

  std::uint64_t key() const {
    return (std::uint64_t(primary) << 32) | secondary;
  }

  // compares greater than every valid index and every upper-bound sentinel
  static paired_index none() { return {no_edge, no_edge}; }
  bool is_none() const { return primary == no_edge && secondary == no_edge; }

  // <n_e, 0>: n_e is never a valid edge order, so this bounds all simplices
  static paired_index max_bound(edge_t n_edges) { return {n_edges, 0}; }
};

struct parse_error : std::runtime_error {
  std::size_t line;
  parse_error(const std::string& what, std::size_t line_no = 0)
      : std::runtime_error(what), line(line_no) {}
};

// capacity refusals (index width, dense table cap, oracle size cap)
struct resource_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

} // namespace vrph
