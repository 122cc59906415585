#pragma once

#include <string>
#include <vector>

#include "pipeline.hpp"
#include "types.hpp"

namespace vrph {

// drops zero-persistence pairs unless keep_zero; sorts by (birth, death) with
// essential classes after all finite pairs
std::vector<diagram_pair> assemble(std::vector<diagram_pair> pairs, bool keep_zero);

// shortest representation that parses back to the same double; "inf" for
// essential deaths
std::string format_value(value_t v);

// one "<birth> <death>\n" line per pair
std::string render_diagram(const std::vector<diagram_pair>& pairs);

// writes <prefix>_H<d>.txt for d = 0..maxdim; returns the paths written
std::vector<std::string> write_diagrams(const std::string& prefix,
                                        const pipeline_result& res, int maxdim,
                                        bool keep_zero);

} // namespace vrph
