#include "vrph/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <string>
#include <unordered_map>

namespace vrph {

std::ptrdiff_t bit_column::high() const {
  for (std::size_t i = w.size(); i-- > 0;)
    if (w[i]) return std::ptrdiff_t(i * 64 + 63 - std::countl_zero(w[i]));
  return -1;
}

namespace {

bool simplex_less(const oracle_simplex& a, const oracle_simplex& b) {
  if (a.value != b.value) return a.value < b.value;
  if (a.dim != b.dim) return a.dim < b.dim;
  return a.v < b.v;
}

std::uint64_t pack_verts(const std::array<vertex_t, 4>& v, int dim) {
  std::uint64_t k = 0;
  for (int i = 0; i <= dim; ++i) k = (k << 16) | (v[i] + 1);
  return k;
}

} // namespace

dense_filtration oracle_enumerate(const edge_set& es) {
  if (es.n > oracle_cap)
    throw resource_error("brute-force reference supports at most " +
                         std::to_string(oracle_cap) + " points");
  const vertex_t n = es.n;
  constexpr value_t absent = std::numeric_limits<value_t>::quiet_NaN();
  std::vector<value_t> ev(std::size_t(n) * n, absent);
  for (const edge_candidate& e : es.edges) {
    ev[std::size_t(e.u) * n + e.v] = e.length;
    ev[std::size_t(e.v) * n + e.u] = e.length;
  }
  auto len = [&](vertex_t a, vertex_t b) { return ev[std::size_t(a) * n + b]; };
  auto has = [&](vertex_t a, vertex_t b) { return !std::isnan(len(a, b)); };

  dense_filtration d;
  const vertex_t unused = 0;
  for (vertex_t a = 0; a < n; ++a)
    d.simplices.push_back({{a, unused, unused, unused}, 0, 0.0});
  for (vertex_t a = 0; a < n; ++a)
    for (vertex_t b = a + 1; b < n; ++b)
      if (has(a, b)) d.simplices.push_back({{a, b, unused, unused}, 1, len(a, b)});
  for (vertex_t a = 0; a < n; ++a)
    for (vertex_t b = a + 1; b < n; ++b) {
      if (!has(a, b)) continue;
      for (vertex_t c = b + 1; c < n; ++c) {
        if (!has(a, c) || !has(b, c)) continue;
        value_t m = std::max({len(a, b), len(a, c), len(b, c)});
        d.simplices.push_back({{a, b, c, unused}, 2, m});
        for (vertex_t e = c + 1; e < n; ++e) {
          if (!has(a, e) || !has(b, e) || !has(c, e)) continue;
          value_t m2 = std::max({m, len(a, e), len(b, e), len(c, e)});
          d.simplices.push_back({{a, b, c, e}, 3, m2});
        }
      }
    }
  std::sort(d.simplices.begin(), d.simplices.end(), simplex_less);

  std::unordered_map<std::uint64_t, std::size_t> index;
  index.reserve(d.simplices.size());
  for (std::size_t i = 0; i < d.simplices.size(); ++i)
    index.emplace(pack_verts(d.simplices[i].v, d.simplices[i].dim), i);

  d.columns.resize(d.simplices.size());
  for (std::size_t i = 0; i < d.simplices.size(); ++i) {
    d.columns[i].resize(d.simplices.size());
    const oracle_simplex& s = d.simplices[i];
    if (s.dim == 0) continue;
    for (int drop = 0; drop <= s.dim; ++drop) {
      std::array<vertex_t, 4> face{unused, unused, unused, unused};
      int k = 0;
      for (int j = 0; j <= s.dim; ++j)
        if (j != drop) face[k++] = s.v[j];
      d.columns[i].set(index.at(pack_verts(face, s.dim - 1)));
    }
  }
  return d;
}

namespace {

// pairs (birth index, death index) plus unpaired simplices -> value diagrams
oracle_diagrams diagrams_from_pairs(
    const dense_filtration& d,
    const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  oracle_diagrams out;
  std::vector<std::uint8_t> paired(d.simplices.size(), 0);
  for (auto [b, dd] : pairs) {
    paired[b] = paired[dd] = 1;
    int dim = d.simplices[b].dim;
    if (dim <= 2)
      out.dgm[dim].push_back({d.simplices[b].value, d.simplices[dd].value});
  }
  constexpr value_t inf = std::numeric_limits<value_t>::infinity();
  for (std::size_t i = 0; i < d.simplices.size(); ++i)
    if (!paired[i] && d.simplices[i].dim <= 2)
      out.dgm[d.simplices[i].dim].push_back({d.simplices[i].value, inf});
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> column_pairs(
    std::vector<bit_column> r) {
  const std::size_t m = r.size();
  std::vector<std::ptrdiff_t> owner(m, -1);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t j = 0; j < m; ++j) {
    std::ptrdiff_t h = r[j].high();
    while (h >= 0 && owner[h] >= 0) {
      r[j].add(r[owner[h]]);
      h = r[j].high();
    }
    if (h >= 0) {
      owner[h] = std::ptrdiff_t(j);
      pairs.emplace_back(std::size_t(h), j);
    }
  }
  return pairs;
}

} // namespace

oracle_diagrams oracle_reduce_column(const dense_filtration& d) {
  return diagrams_from_pairs(d, column_pairs(d.columns));
}

oracle_diagrams oracle_reduce_row(const dense_filtration& d) {
  std::vector<bit_column> r = d.columns;
  const std::size_t m = r.size();
  std::vector<std::ptrdiff_t> highs(m);
  for (std::size_t j = 0; j < m; ++j) highs[j] = r[j].high();
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = m; i-- > 0;) {
    std::ptrdiff_t pivot = -1;
    for (std::size_t j = 0; j < m; ++j) {
      if (highs[j] != std::ptrdiff_t(i)) continue;
      if (pivot < 0) {
        pivot = std::ptrdiff_t(j); // leftmost column wins the row
        pairs.emplace_back(i, j);
      } else {
        r[j].add(r[pivot]);
        highs[j] = r[j].high();
      }
    }
  }
  std::sort(pairs.begin(), pairs.end(),
            [](const auto& a, const auto& b) { return a.second < b.second; });
  return diagrams_from_pairs(d, pairs);
}

oracle_diagrams oracle_reduce_cocolumn(const dense_filtration& d) {
  const std::size_t m = d.columns.size();
  std::vector<bit_column> a(m);
  for (std::size_t j = 0; j < m; ++j) a[j].resize(m);
  // anti-transpose: entry (row q, column p) of A = entry (m-1-p, m-1-q) of D
  for (std::size_t c = 0; c < m; ++c)
    for (std::size_t blk = 0; blk < d.columns[c].w.size(); ++blk) {
      std::uint64_t bits = d.columns[c].w[blk];
      while (bits) {
        std::size_t rrow = blk * 64 + std::size_t(std::countr_zero(bits));
        bits &= bits - 1;
        a[m - 1 - rrow].set(m - 1 - c);
      }
    }
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (auto [p, q] : column_pairs(std::move(a)))
    pairs.emplace_back(m - 1 - q, m - 1 - p);
  return diagrams_from_pairs(d, pairs);
}

} // namespace vrph
