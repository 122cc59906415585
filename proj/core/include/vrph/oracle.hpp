#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "ingest.hpp"
#include "pipeline.hpp"
#include "types.hpp"

namespace vrph {

// brute-force reference: every simplex up to dim 3, explicit matrices, the
// standard reductions; for cross-checking only, never for real inputs
inline constexpr vertex_t oracle_cap = 25;

struct oracle_simplex {
  std::array<vertex_t, 4> v; // dim + 1 ascending vertices, rest unused
  int dim;
  value_t value;
};

struct bit_column {
  std::vector<std::uint64_t> w;

  void resize(std::size_t bits) { w.assign((bits + 63) / 64, 0); }
  void set(std::size_t i) { w[i >> 6] |= std::uint64_t(1) << (i & 63); }
  bool test(std::size_t i) const {
    return (w[i >> 6] >> (i & 63)) & 1;
  }
  void add(const bit_column& o) {
    for (std::size_t i = 0; i < w.size(); ++i) w[i] ^= o.w[i];
  }
  std::ptrdiff_t high() const; // highest set bit, -1 when empty
};

struct dense_filtration {
  std::vector<oracle_simplex> simplices; // sorted by (value, dim, lex vertices)
  std::vector<bit_column> columns;       // boundary of simplices[j]
};

// refuses beyond the cap; every face of a listed simplex is listed earlier
dense_filtration oracle_enumerate(const edge_set& es);

struct oracle_diagrams {
  std::vector<diagram_pair> dgm[3]; // raw, zero-persistence pairs included
};

oracle_diagrams oracle_reduce_column(const dense_filtration& d);
oracle_diagrams oracle_reduce_row(const dense_filtration& d);
// reduces the anti-transpose (coboundary matrix in reverse order); equal
// diagrams by duality
oracle_diagrams oracle_reduce_cocolumn(const dense_filtration& d);

} // namespace vrph
