#pragma once

#include "filtration.hpp"
#include "types.hpp"

namespace vrph {

// Resumable cursor over the coboundary triangles of an edge, visited in
// increasing paired-index order. While cur.primary == e the cursors index the
// two vertex-neighborhoods (triangles whose diameter is e itself); once
// cur.primary > e they index the two edge-neighborhoods.
struct phi_edge {
  edge_t e;
  std::uint32_t ia, ib;
  paired_index cur;

  bool exhausted() const { return cur.is_none(); }
};

phi_edge find_smallest_t(const filtration& f, edge_t e);
void find_next_t(const filtration& f, phi_edge& p);
// smallest coboundary triangle >= target, cursors positioned at it
phi_edge find_geq_t(const filtration& f, edge_t e, paired_index target);

} // namespace vrph
