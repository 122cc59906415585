#include "vrph/cob_tri.hpp"

#include <algorithm>

namespace vrph {

namespace {

std::uint32_t espan_lower(const filtration& f, vertex_t x, edge_t o) {
  auto sp = f.espan(x);
  auto it = std::lower_bound(sp.begin(), sp.end(), o,
                             [](const nbhd_entry& y, edge_t v) { return y.e < v; });
  return std::uint32_t(it - sp.begin());
}

// tetrahedra whose diameter is the triangle's own diameter edge: fourth
// vertices reached from c by an edge below the diameter, emitted in opposite
// edge order; cursor is left on the match
paired_index case1_scan(const filtration& f, paired_index t, vertex_t a, vertex_t b,
                        vertex_t c, std::uint32_t& ie) {
  auto ec = f.espan(c);
  while (ie < ec.size() && ec[ie].e < t.primary) {
    vertex_t d = ec[ie].nb;
    if (d != a && d != b) {
      edge_t ad = f.edge_order(a, d), bd = f.edge_order(b, d);
      if (ad != no_edge && ad < t.primary && bd != no_edge && bd < t.primary)
        return {t.primary, ec[ie].e};
    }
    ++ie;
  }
  return paired_index::none();
}

// tetrahedra with diameter past the triangle's: take the smallest candidate
// edge across the three cursors, verify the two edges joining its far vertex
// to the remaining triangle vertices; the opposite pair is a triangle edge
paired_index case2_scan(const filtration& f, paired_index t, vertex_t a, vertex_t b,
                        vertex_t c, std::uint32_t& ia, std::uint32_t& ib,
                        std::uint32_t& ie, std::uint8_t& flag) {
  auto ea = f.espan(a), eb = f.espan(b), ec = f.espan(c);
  for (;;) {
    edge_t oa = ia < ea.size() ? ea[ia].e : no_edge;
    edge_t ob = ib < eb.size() ? eb[ib].e : no_edge;
    edge_t oc = ie < ec.size() ? ec[ie].e : no_edge;
    if (oa == no_edge && ob == no_edge && oc == no_edge) {
      flag = 0;
      return paired_index::none();
    }
    vertex_t v2, v3, d;
    edge_t o;
    std::uint8_t side;
    std::uint32_t* cursor;
    if (oa < ob && oa < oc) {
      o = oa; d = ea[ia].nb; v2 = b; v3 = c; side = 1; cursor = &ia;
    } else if (ob < oc) {
      o = ob; d = eb[ib].nb; v2 = a; v3 = c; side = 2; cursor = &ib;
    } else {
      o = oc; d = ec[ie].nb; v2 = a; v3 = b; side = 3; cursor = &ie;
    }
    edge_t o2 = f.edge_order(v2, d), o3 = f.edge_order(v3, d);
    if (o2 != no_edge && o2 < o && o3 != no_edge && o3 < o) {
      flag = side;
      edge_t opp = side == 3 ? t.primary : f.edge_order(v2, v3);
      return {o, opp};
    }
    ++*cursor;
  }
}

} // namespace

phi_tri find_smallest_h(const filtration& f, paired_index t) {
  vertex_t a = f.edge_u[t.primary], b = f.edge_v[t.primary], c = t.secondary;
  phi_tri p{t, 0, 0, 0, 0, paired_index::none()};
  p.cur = case1_scan(f, t, a, b, c, p.ie);
  if (p.cur.is_none()) {
    p.ia = espan_lower(f, a, t.primary + 1);
    p.ib = espan_lower(f, b, t.primary + 1);
    p.cur = case2_scan(f, t, a, b, c, p.ia, p.ib, p.ie, p.flag);
  }
  return p;
}

void find_next_h(const filtration& f, phi_tri& p) {
  if (p.exhausted()) return;
  vertex_t a = f.edge_u[p.t.primary], b = f.edge_v[p.t.primary], c = p.t.secondary;
  if (p.flag == 0) {
    ++p.ie;
    p.cur = case1_scan(f, p.t, a, b, c, p.ie);
    if (!p.cur.is_none()) return;
    p.ia = espan_lower(f, a, p.t.primary + 1);
    p.ib = espan_lower(f, b, p.t.primary + 1);
  } else if (p.flag == 1) {
    ++p.ia;
  } else if (p.flag == 2) {
    ++p.ib;
  } else {
    ++p.ie;
  }
  p.cur = case2_scan(f, p.t, a, b, c, p.ia, p.ib, p.ie, p.flag);
}

phi_tri find_geq_h(const filtration& f, paired_index t, paired_index target) {
  if (target.primary < t.primary) return find_smallest_h(f, t);

  vertex_t a = f.edge_u[t.primary], b = f.edge_v[t.primary], c = t.secondary;
  phi_tri p{t, 0, 0, 0, 0, paired_index::none()};

  if (target.primary == t.primary) {
    p.ie = espan_lower(f, c, target.secondary);
    p.cur = case1_scan(f, t, a, b, c, p.ie);
    if (p.cur.is_none()) {
      p.ia = espan_lower(f, a, t.primary + 1);
      p.ib = espan_lower(f, b, t.primary + 1);
      p.ie = espan_lower(f, c, t.primary + 1);
      p.cur = case2_scan(f, t, a, b, c, p.ia, p.ib, p.ie, p.flag);
    }
    return p;
  }

  // distinct case-2 tetrahedra carry distinct primaries, so at most one
  // re-advance is needed when the hit at target.primary falls short
  p.ia = espan_lower(f, a, target.primary);
  p.ib = espan_lower(f, b, target.primary);
  p.ie = espan_lower(f, c, target.primary);
  p.cur = case2_scan(f, t, a, b, c, p.ia, p.ib, p.ie, p.flag);
  while (!p.cur.is_none() && p.cur < target) find_next_h(f, p);
  return p;
}

} // namespace vrph
