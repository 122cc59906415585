#pragma once

#include "filtration.hpp"
#include "types.hpp"

namespace vrph {

// Resumable cursor over the coboundary tetrahedra of a triangle, visited in
// increasing paired-index order. flag 0: the diameter is the triangle's own
// diameter edge and ie walks the third vertex's edge-neighborhood below it.
// flags 1/2/3: the diameter lies in the edge-neighborhood of a / b / the third
// vertex respectively, with all three cursors past the triangle's diameter.
struct phi_tri {
  paired_index t;
  std::uint32_t ia, ib, ie;
  std::uint8_t flag;
  paired_index cur;

  bool exhausted() const { return cur.is_none(); }
};

phi_tri find_smallest_h(const filtration& f, paired_index t);
void find_next_h(const filtration& f, phi_tri& p);
// smallest coboundary tetrahedron >= target, cursors positioned at it
phi_tri find_geq_h(const filtration& f, paired_index t, paired_index target);

} // namespace vrph
