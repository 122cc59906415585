#pragma once

#include <limits>
#include <random>
#include <vector>

#include "vrph/filtration.hpp"
#include "vrph/ingest.hpp"

// shared inputs for the suites
namespace fx {

inline constexpr double inf = std::numeric_limits<double>::infinity();

// unit square; edge lengths 1 and sqrt(2)
inline vrph::point_cloud sq4() {
  return {2, {0, 0, 1, 0, 1, 1, 0, 1}};
}

// octahedron: adjacent vertices sqrt(2) apart, antipodal pairs 2 apart; its
// boundary sphere closes at sqrt(2) and fills at 2
inline vrph::point_cloud octahedron() {
  return {3, {1, 0, 0, -1, 0, 0, 0, 1, 0, 0, -1, 0, 0, 0, 1, 0, 0, -1}};
}

// triangular bipyramid: a sphere-like complex without antipodal symmetry
inline vrph::point_cloud bipyramid() {
  return {3, {1,     0, 0,    -0.5, 0.8660254037844386, 0,
              -0.5, -0.8660254037844386, 0, 0, 0, 0.9, 0, 0, -0.7}};
}

inline vrph::point_cloud random_cloud(std::uint64_t seed, std::size_t n,
                                      std::size_t dim = 3) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coord(0.0, 1.0);
  vrph::point_cloud pc;
  pc.dim = dim;
  pc.coords.reserve(n * dim);
  for (std::size_t i = 0; i < n * dim; ++i) pc.coords.push_back(coord(rng));
  return pc;
}

inline vrph::filtration filt_of(const vrph::point_cloud& pc, double thr = inf,
                                vrph::lookup_mode mode = vrph::lookup_mode::sparse) {
  vrph::edge_set es = vrph::enumerate_edges(pc, thr);
  return vrph::build_filtration(es.n, std::move(es.edges), mode);
}

} // namespace fx
