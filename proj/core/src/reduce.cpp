#include "vrph/reduce.hpp"

namespace vrph {

// instantiate both engines for both stages so the library build type-checks
// them once, independent of which combinations callers touch
template class fast_column<edge_stage>;
template class fast_column<tri_stage>;
template class row_column<edge_stage>;
template class row_column<tri_stage>;

template reduce_outcome<edge_stage> reduce_one<edge_stage, fast_column<edge_stage>>(
    const filtration&, edge_t, const pair_store<edge_t>&, const ops_store<edge_stage>&);
template reduce_outcome<edge_stage> reduce_one<edge_stage, row_column<edge_stage>>(
    const filtration&, edge_t, const pair_store<edge_t>&, const ops_store<edge_stage>&);
template reduce_outcome<tri_stage> reduce_one<tri_stage, fast_column<tri_stage>>(
    const filtration&, paired_index, const pair_store<paired_index>&,
    const ops_store<tri_stage>&);
template reduce_outcome<tri_stage> reduce_one<tri_stage, row_column<tri_stage>>(
    const filtration&, paired_index, const pair_store<paired_index>&,
    const ops_store<tri_stage>&);

} // namespace vrph
