#include "vrph/filtration.hpp"

#include <algorithm>
#include <cstring>

#include "vrph/cob_edge.hpp"

namespace vrph {

edge_t filtration::edge_order(vertex_t a, vertex_t b) const {
  if (a == b) return no_edge;
  if (mode == lookup_mode::dense) return order_table[std::uint64_t(a) * n + b];
  if (nbhd_size[a] > nbhd_size[b]) std::swap(a, b);
  auto sp = vspan(a);
  auto it = std::lower_bound(sp.begin(), sp.end(), b,
                             [](const nbhd_entry& x, vertex_t v) { return x.nb < v; });
  return (it != sp.end() && it->nb == b) ? it->e : no_edge;
}

filtration build_edge_order(vertex_t n, std::vector<edge_candidate> candidates,
                            lookup_mode mode, std::uint64_t dense_cap) {
  std::sort(candidates.begin(), candidates.end(),
            [](const edge_candidate& x, const edge_candidate& y) {
              if (x.length != y.length) return x.length < y.length;
              if (x.u != y.u) return x.u < y.u;
              return x.v < y.v;
            });

  filtration f;
  f.n = n;
  f.mode = mode;
  std::size_t n_e = candidates.size();
  f.edge_u.resize(n_e);
  f.edge_v.resize(n_e);
  f.values.resize(n_e);
  for (std::size_t i = 0; i < n_e; ++i) {
    f.edge_u[i] = candidates[i].u;
    f.edge_v[i] = candidates[i].v;
    f.values[i] = candidates[i].length;
  }

  if (mode == lookup_mode::dense) {
    std::uint64_t bytes = std::uint64_t(n) * n * sizeof(edge_t);
    if (bytes > dense_cap)
      throw resource_error("dense order table needs " + std::to_string(bytes) +
                           " bytes, cap is " + std::to_string(dense_cap));
    f.order_table.assign(std::uint64_t(n) * n, no_edge);
    for (std::size_t i = 0; i < n_e; ++i) {
      f.order_table[std::uint64_t(f.edge_u[i]) * n + f.edge_v[i]] = edge_t(i);
      f.order_table[std::uint64_t(f.edge_v[i]) * n + f.edge_u[i]] = edge_t(i);
    }
  }
  return f;
}

void build_neighborhoods(filtration& f) {
  vertex_t n = f.n;
  edge_t n_e = f.n_edges();

  f.nbhd_size.assign(n, 0);
  for (edge_t e = 0; e < n_e; ++e) {
    ++f.nbhd_size[f.edge_u[e]];
    ++f.nbhd_size[f.edge_v[e]];
  }
  f.voffset.resize(n);
  f.eoffset.resize(n);
  std::uint32_t acc = 0;
  for (vertex_t a = 0; a < n; ++a) {
    f.voffset[a] = acc;
    f.eoffset[a] = acc;
    acc += f.nbhd_size[a];
  }

  // filling in edge order makes each per-vertex slice of enbhd already sorted
  f.enbhd.resize(std::size_t(2) * n_e);
  std::vector<std::uint32_t> fill(f.eoffset);
  for (edge_t e = 0; e < n_e; ++e) {
    vertex_t u = f.edge_u[e], v = f.edge_v[e];
    f.enbhd[fill[u]++] = {v, e};
    f.enbhd[fill[v]++] = {u, e};
  }

  f.vnbhd = f.enbhd;
  for (vertex_t a = 0; a < n; ++a) {
    auto* begin = f.vnbhd.data() + f.voffset[a];
    std::sort(begin, begin + f.nbhd_size[a],
              [](const nbhd_entry& x, const nbhd_entry& y) { return x.nb < y.nb; });
  }

  f.min_cob.resize(n_e);
  for (edge_t e = 0; e < n_e; ++e) f.min_cob[e] = find_smallest_t(f, e).cur;
}

filtration build_filtration(vertex_t n, std::vector<edge_candidate> candidates,
                            lookup_mode mode, std::uint64_t dense_cap) {
  filtration f = build_edge_order(n, std::move(candidates), mode, dense_cap);
  build_neighborhoods(f);
  return f;
}

std::uint64_t memory_account(const filtration& f) {
  return std::uint64_t(f.edge_u.size() + f.edge_v.size())                // endpoints
         + 2 * std::uint64_t(f.min_cob.size())                           // paired indices
         + 2 * std::uint64_t(f.vnbhd.size() + f.enbhd.size())            // two u32 per entry
         + f.nbhd_size.size() + f.voffset.size() + f.eoffset.size();
}

paired_index triangle_index(const filtration& f, vertex_t a, vertex_t b, vertex_t c) {
  edge_t ab = f.edge_order(a, b), ac = f.edge_order(a, c), bc = f.edge_order(b, c);
  if (ab > ac) {
    std::swap(ab, ac);
    std::swap(b, c);
  }
  // now ac is the larger of the first two; diameter is max(ac, bc)
  if (ac > bc) return {ac, b};
  return {bc, a};
}

paired_index tetra_index(const filtration& f, vertex_t a, vertex_t b, vertex_t c, vertex_t d) {
  vertex_t vs[4] = {a, b, c, d};
  edge_t best = 0;
  int bi = 0, bj = 1;
  bool first = true;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      edge_t o = f.edge_order(vs[i], vs[j]);
      if (first || o > best) {
        best = o;
        bi = i;
        bj = j;
        first = false;
      }
    }
  int oi = -1, oj = -1;
  for (int k = 0; k < 4; ++k)
    if (k != bi && k != bj) (oi < 0 ? oi : oj) = k;
  return {best, f.edge_order(vs[oi], vs[oj])};
}

std::array<vertex_t, 3> triangle_vertices(const filtration& f, paired_index t) {
  return {f.edge_u[t.primary], f.edge_v[t.primary], t.secondary};
}

} // namespace vrph
