#include "vrph/pipeline.hpp"

#include <chrono>
#include <limits>
#include <numeric>

#include "vrph/parallel.hpp"

namespace vrph {

namespace {

constexpr value_t inf_value = std::numeric_limits<value_t>::infinity();

using clock_t_ = std::chrono::steady_clock;

double seconds_since(clock_t_::time_point t0) {
  return std::chrono::duration<double>(clock_t_::now() - t0).count();
}

// --- H0: union-find over F1 in order ---

struct union_find {
  std::vector<vertex_t> parent;

  explicit union_find(vertex_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  vertex_t find(vertex_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]]; // path halving
      x = parent[x];
    }
    return x;
  }
};

struct h0_output {
  std::vector<diagram_pair> dgm;
  std::vector<std::uint8_t> death_edge; // per edge order
  stage_stats stats;
};

h0_output compute_h0(const filtration& f) {
  h0_output out;
  out.death_edge.assign(f.n_edges(), 0);
  union_find u(f.n);
  for (edge_t e = 0; e < f.n_edges(); ++e) {
    vertex_t ra = u.find(f.edge_u[e]);
    vertex_t rb = u.find(f.edge_v[e]);
    if (ra == rb) continue;
    if (ra > rb) std::swap(ra, rb); // smaller root survives, for determinism
    u.parent[rb] = ra;
    out.dgm.push_back({0.0, f.values[e]});
    out.death_edge[e] = 1;
    ++out.stats.stored_pairs;
  }
  for (vertex_t v = 0; v < f.n; ++v)
    if (u.find(v) == v) {
      out.dgm.push_back({0.0, inf_value});
      ++out.stats.zero_columns;
    }
  return out;
}

// --- H1 stage: edge columns in reverse F1 order ---

struct h1_stream {
  const std::vector<std::uint8_t>* skip; // H0 death edges when clearing
  edge_t remaining;

  bool next(edge_t& out) {
    while (remaining > 0) {
      edge_t e = --remaining;
      if (skip && (*skip)[e]) continue;
      out = e;
      return true;
    }
    return false;
  }
};

struct h1_sink {
  const filtration& f;
  const std::vector<std::uint8_t>& h0_death;
  std::vector<diagram_pair>& dgm;
  std::unordered_set<std::uint64_t>& death_tri;
  stage_stats& stats;

  // a vanished column is an essential class unless its edge already died in H0
  void on_zero(edge_t e) {
    ++stats.zero_columns;
    if (!h0_death[e]) dgm.push_back({f.values[e], inf_value});
  }
  void on_trivial(edge_t e, paired_index d) {
    ++stats.trivial_pairs;
    death_tri.insert(d.key());
    dgm.push_back({f.values[e], f.values[d.primary]});
  }
  void on_pair(edge_t e, paired_index d) {
    ++stats.stored_pairs;
    death_tri.insert(d.key());
    dgm.push_back({f.values[e], f.values[d.primary]});
  }
};

// --- H2 stage: triangle columns grouped by diameter edge, reverse F2 order ---

struct h2_stream {
  const filtration& f;
  const std::unordered_set<std::uint64_t>* skip; // H1 death triangles when clearing
  edge_t remaining;
  std::vector<paired_index> buf; // decreasing secondary within one edge
  std::size_t bi = 0;

  bool next(paired_index& out) {
    for (;;) {
      while (bi < buf.size()) {
        paired_index t = buf[bi++];
        if (skip && skip->count(t.key())) continue;
        out = t;
        return true;
      }
      if (remaining == 0) return false;
      buf.clear();
      bi = 0;
      diameter_triangles_desc(f, --remaining, buf);
    }
  }
};

struct h2_sink {
  const filtration& f;
  const std::unordered_set<std::uint64_t>& h1_death;
  std::vector<diagram_pair>& dgm;
  stage_stats& stats;

  void on_zero(paired_index t) {
    ++stats.zero_columns;
    if (!h1_death.count(t.key())) dgm.push_back({f.values[t.primary], inf_value});
  }
  void on_trivial(paired_index t, paired_index d) {
    ++stats.trivial_pairs;
    dgm.push_back({f.values[t.primary], f.values[d.primary]});
  }
  void on_pair(paired_index t, paired_index d) {
    ++stats.stored_pairs;
    dgm.push_back({f.values[t.primary], f.values[d.primary]});
  }
};

template <class S, class Col, class Stream, class Sink>
void run_stage(const filtration& f, thread_pool& pool, std::size_t batch,
               Stream& stream, Sink& sink) {
  pair_store<typename S::gen_t> pairs;
  ops_store<S> ops;
  batch_reducer<S, Col, Stream, Sink> r(f, pool, batch, stream, sink, pairs, ops);
  r.run();
}

template <class S, class Stream, class Sink>
void run_stage(const filtration& f, thread_pool& pool, engine_kind engine,
               std::size_t batch, Stream& stream, Sink& sink) {
  if (engine == engine_kind::fastcol)
    run_stage<S, fast_column<S>>(f, pool, batch, stream, sink);
  else
    run_stage<S, row_column<S>>(f, pool, batch, stream, sink);
}

} // namespace

void diameter_triangles_desc(const filtration& f, edge_t e,
                             std::vector<paired_index>& out) {
  std::span<const nbhd_entry> va = f.vspan(f.edge_u[e]);
  std::span<const nbhd_entry> vb = f.vspan(f.edge_v[e]);
  std::size_t ia = va.size(), ib = vb.size();
  while (ia > 0 && ib > 0) {
    const nbhd_entry& x = va[ia - 1];
    const nbhd_entry& y = vb[ib - 1];
    if (x.nb == y.nb) {
      if (x.e < e && y.e < e) out.push_back({e, x.nb});
      --ia;
      --ib;
    } else if (x.nb > y.nb) {
      --ia;
    } else {
      --ib;
    }
  }
}

timed_build build_timed(std::uint32_t n, std::vector<edge_candidate>&& edges,
                        lookup_mode mode) {
  timed_build tb;
  auto t0 = clock_t_::now();
  tb.f = build_edge_order(n, std::move(edges), mode);
  tb.t_order = seconds_since(t0);
  t0 = clock_t_::now();
  build_neighborhoods(tb.f);
  tb.t_nbhd = seconds_since(t0);
  return tb;
}

pipeline_result compute_persistence(const filtration& f, const run_params& p) {
  pipeline_result res;
  thread_pool pool(p.threads);

  auto t0 = clock_t_::now();
  h0_output h0 = compute_h0(f);
  res.t_h0 = seconds_since(t0);
  res.dgm[0] = std::move(h0.dgm);
  res.stats[0] = h0.stats;
  if (p.maxdim < 1) return res;

  std::unordered_set<std::uint64_t> h1_death;
  t0 = clock_t_::now();
  {
    h1_stream stream{p.clearing ? &h0.death_edge : nullptr, f.n_edges()};
    h1_sink sink{f, h0.death_edge, res.dgm[1], h1_death, res.stats[1]};
    run_stage<edge_stage>(f, pool, p.engine, p.batch_h0, stream, sink);
  }
  res.t_h1 = seconds_since(t0);
  if (p.maxdim < 2) return res;

  t0 = clock_t_::now();
  {
    h2_stream stream{f, p.clearing ? &h1_death : nullptr, f.n_edges(), {}, 0};
    h2_sink sink{f, h1_death, res.dgm[2], res.stats[2]};
    run_stage<tri_stage>(f, pool, p.engine, p.batch_dim2, stream, sink);
  }
  res.t_h2 = seconds_since(t0);
  return res;
}

} // namespace vrph
