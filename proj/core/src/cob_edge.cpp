#include "vrph/cob_edge.hpp"

#include <algorithm>

namespace vrph {

namespace {

// common neighbors of (a, b) whose connecting edges both precede e give the
// triangles with diameter e; cursors are left on the match
paired_index case1_scan(const filtration& f, edge_t e, vertex_t a, vertex_t b,
                        std::uint32_t& ia, std::uint32_t& ib) {
  auto va = f.vspan(a), vb = f.vspan(b);
  while (ia < va.size() && ib < vb.size()) {
    if (va[ia].nb < vb[ib].nb)
      ++ia;
    else if (va[ia].nb > vb[ib].nb)
      ++ib;
    else {
      if (va[ia].e < e && vb[ib].e < e) return {e, va[ia].nb};
      ++ia;
      ++ib;
    }
  }
  return paired_index::none();
}

// first index whose edge order is strictly greater than e
std::uint32_t espan_above(const filtration& f, vertex_t a, edge_t e) {
  auto sp = f.espan(a);
  auto it = std::upper_bound(sp.begin(), sp.end(), e,
                             [](edge_t x, const nbhd_entry& y) { return x < y.e; });
  return std::uint32_t(it - sp.begin());
}

// coboundary triangles with diameter > e, emitted at the cursor holding the
// diameter; the other endpoint's membership check doubles as the diameter test
paired_index case2_scan(const filtration& f, edge_t e, vertex_t a, vertex_t b,
                        std::uint32_t& ia, std::uint32_t& ib) {
  auto ea = f.espan(a), eb = f.espan(b);
  for (;;) {
    bool la = ia < ea.size(), lb = ib < eb.size();
    if (!la && !lb) return paired_index::none();
    bool from_a = la && (!lb || ea[ia].e < eb[ib].e);
    if (from_a) {
      edge_t o = ea[ia].e;
      edge_t od = f.edge_order(b, ea[ia].nb);
      if (od != no_edge && od < o) return {o, b};
      ++ia;
    } else {
      edge_t o = eb[ib].e;
      edge_t od = f.edge_order(a, eb[ib].nb);
      if (od != no_edge && od < o) return {o, a};
      ++ib;
    }
  }
}

void enter_case2(const filtration& f, phi_edge& p, vertex_t a, vertex_t b) {
  p.ia = espan_above(f, a, p.e);
  p.ib = espan_above(f, b, p.e);
  p.cur = case2_scan(f, p.e, a, b, p.ia, p.ib);
}

} // namespace

phi_edge find_smallest_t(const filtration& f, edge_t e) {
  phi_edge p{e, 0, 0, paired_index::none()};
  vertex_t a = f.edge_u[e], b = f.edge_v[e];
  p.cur = case1_scan(f, e, a, b, p.ia, p.ib);
  if (p.cur.is_none()) enter_case2(f, p, a, b);
  return p;
}

void find_next_t(const filtration& f, phi_edge& p) {
  if (p.exhausted()) return;
  vertex_t a = f.edge_u[p.e], b = f.edge_v[p.e];
  if (p.cur.primary == p.e) {
    ++p.ia;
    ++p.ib;
    p.cur = case1_scan(f, p.e, a, b, p.ia, p.ib);
    if (p.cur.is_none()) enter_case2(f, p, a, b);
  } else {
    auto ea = f.espan(a);
    if (p.ia < ea.size() && ea[p.ia].e == p.cur.primary)
      ++p.ia;
    else
      ++p.ib;
    p.cur = case2_scan(f, p.e, a, b, p.ia, p.ib);
  }
}

phi_edge find_geq_t(const filtration& f, edge_t e, paired_index target) {
  if (target.primary < e) return find_smallest_t(f, e);

  phi_edge p{e, 0, 0, paired_index::none()};
  vertex_t a = f.edge_u[e], b = f.edge_v[e];

  if (target.primary == e) {
    auto seek = [&](std::span<const nbhd_entry> sp) {
      auto it = std::lower_bound(sp.begin(), sp.end(), target.secondary,
                                 [](const nbhd_entry& x, vertex_t v) { return x.nb < v; });
      return std::uint32_t(it - sp.begin());
    };
    p.ia = seek(f.vspan(a));
    p.ib = seek(f.vspan(b));
    p.cur = case1_scan(f, e, a, b, p.ia, p.ib);
    if (p.cur.is_none()) enter_case2(f, p, a, b);
    return p;
  }

  // target.primary > e: at most one coboundary triangle carries that exact
  // primary, so a single re-advance suffices when it falls short of target
  auto seek = [&](vertex_t x) {
    auto sp = f.espan(x);
    auto it = std::lower_bound(sp.begin(), sp.end(), target.primary,
                               [](const nbhd_entry& y, edge_t o) { return y.e < o; });
    return std::uint32_t(it - sp.begin());
  };
  p.ia = seek(a);
  p.ib = seek(b);
  p.cur = case2_scan(f, e, a, b, p.ia, p.ib);
  while (!p.cur.is_none() && p.cur < target) find_next_t(f, p);
  return p;
}

} // namespace vrph
