#pragma once

#include <cstdint>
#include <unordered_set>
#include <vector>

#include "filtration.hpp"
#include "ingest.hpp"
#include "types.hpp"

namespace vrph {

enum class engine_kind { fastcol, row };

struct run_params {
  int maxdim = 2;                 // highest homology dimension computed
  unsigned threads = 1;
  std::size_t batch_h0 = 1000;    // batch size for the edge (H1) stage
  std::size_t batch_dim2 = 100;   // batch size for the triangle (H2) stage
  bool clearing = true;
  engine_kind engine = engine_kind::fastcol;
};

struct diagram_pair {
  value_t birth;
  value_t death; // infinity for essential classes
};

struct stage_stats {
  std::uint64_t stored_pairs = 0;  // pairs kept for later merges
  std::uint64_t trivial_pairs = 0; // pairs known a priori, zero persistence
  std::uint64_t zero_columns = 0;  // columns reduced to nothing
};

struct pipeline_result {
  std::vector<diagram_pair> dgm[3]; // raw pairs, zero-persistence included
  stage_stats stats[3];
  double t_h0 = 0, t_h1 = 0, t_h2 = 0; // seconds
};

// filtration build with the two construction phases timed separately
struct timed_build {
  filtration f;
  double t_order = 0; // sorting edges into F1
  double t_nbhd = 0;  // neighborhoods and smallest coboundaries
};

timed_build build_timed(std::uint32_t n, std::vector<edge_candidate>&& edges,
                        lookup_mode mode);

// all triangles whose diameter is edge e, in decreasing secondary order
void diameter_triangles_desc(const filtration& f, edge_t e,
                             std::vector<paired_index>& out);

pipeline_result compute_persistence(const filtration& f, const run_params& p);

} // namespace vrph
