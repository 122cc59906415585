#pragma once

#include <string_view>
#include <vector>

#include "types.hpp"

namespace vrph {

enum class input_format { cloud, lower_distance, sparse };

struct edge_candidate {
  vertex_t u, v; // u < v
  value_t length;
};

struct point_cloud {
  std::size_t dim = 0;
  std::vector<value_t> coords; // size() * dim, row per point
  std::size_t size() const { return dim ? coords.size() / dim : 0; }
};

struct distance_matrix {
  std::size_t n = 0;
  std::vector<value_t> d; // lower triangle, d(i,j) for i > j at i*(i-1)/2 + j
};

struct sparse_distances {
  vertex_t n = 0;
  std::vector<edge_candidate> entries; // deduplicated, u < v
};

// all parsers accept whitespace- and/or comma-separated numbers;
// parse_error::line is 1-based
point_cloud parse_point_cloud(std::string_view text);
distance_matrix parse_lower_distance(std::string_view text);
sparse_distances parse_sparse(std::string_view text);

struct edge_set {
  vertex_t n = 0;
  std::vector<edge_candidate> edges;
};

// keeps edges with length <= threshold; non-finite entries in matrix inputs
// are treated as absent
edge_set enumerate_edges(const point_cloud& pc, value_t threshold);
edge_set enumerate_edges(const distance_matrix& dm, value_t threshold);
edge_set enumerate_edges(const sparse_distances& sd, value_t threshold);

edge_set load_edges(input_format fmt, std::string_view text, value_t threshold);

} // namespace vrph
