#pragma once

#include <array>
#include <span>
#include <vector>

#include "ingest.hpp"
#include "types.hpp"

namespace vrph {

enum class lookup_mode { sparse, dense };

struct nbhd_entry {
  vertex_t nb;
  edge_t e;
};

// F1 plus the per-vertex neighborhoods. Edges are sorted by (length, u, v) and
// addressed by their position in that order everywhere downstream.
struct filtration {
  vertex_t n = 0;
  std::vector<vertex_t> edge_u, edge_v; // per edge order, u < v
  std::vector<value_t> values;          // per edge order

  std::vector<std::uint32_t> nbhd_size;      // per vertex
  std::vector<std::uint32_t> voffset;        // per vertex, into vnbhd
  std::vector<std::uint32_t> eoffset;        // per vertex, into enbhd
  std::vector<nbhd_entry> vnbhd;             // within a vertex: sorted by nb
  std::vector<nbhd_entry> enbhd;             // within a vertex: sorted by e
  std::vector<paired_index> min_cob;         // per edge, smallest coboundary triangle

  lookup_mode mode = lookup_mode::sparse;
  std::vector<edge_t> order_table; // n*n, dense mode only

  edge_t n_edges() const { return edge_t(values.size()); }

  std::span<const nbhd_entry> vspan(vertex_t a) const {
    return {vnbhd.data() + voffset[a], nbhd_size[a]};
  }
  std::span<const nbhd_entry> espan(vertex_t a) const {
    return {enbhd.data() + eoffset[a], nbhd_size[a]};
  }

  // no_edge when {a, b} is not in the filtration
  edge_t edge_order(vertex_t a, vertex_t b) const;
};

inline constexpr std::uint64_t default_dense_cap = std::uint64_t(16) << 30; // bytes

// sorts candidates by (length, u, v), builds both neighborhoods and the
// smallest-coboundary cache; dense mode refuses when n*n*4 exceeds dense_cap
filtration build_filtration(vertex_t n, std::vector<edge_candidate> candidates,
                            lookup_mode mode = lookup_mode::sparse,
                            std::uint64_t dense_cap = default_dense_cap);

// the two construction phases, split so callers can time them separately
filtration build_edge_order(vertex_t n, std::vector<edge_candidate> candidates,
                            lookup_mode mode = lookup_mode::sparse,
                            std::uint64_t dense_cap = default_dense_cap);
void build_neighborhoods(filtration& f);

// number of 32-bit integers held by the index: endpoints (2 n_e), both
// neighborhoods (4 n_e each), min_cob (2 n_e), sizes and offsets (3 n)
std::uint64_t memory_account(const filtration& f);

// pre: all three edges exist
paired_index triangle_index(const filtration& f, vertex_t a, vertex_t b, vertex_t c);
// pre: all six edges exist
paired_index tetra_index(const filtration& f, vertex_t a, vertex_t b, vertex_t c, vertex_t d);

// (u, v, w): u < v span the diameter edge, w is the remaining vertex
std::array<vertex_t, 3> triangle_vertices(const filtration& f, paired_index t);

} // namespace vrph
