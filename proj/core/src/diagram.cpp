#include "vrph/diagram.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>

namespace vrph {

std::vector<diagram_pair> assemble(std::vector<diagram_pair> pairs, bool keep_zero) {
  if (!keep_zero) {
    auto it = std::remove_if(pairs.begin(), pairs.end(),
                             [](const diagram_pair& p) { return p.birth == p.death; });
    pairs.erase(it, pairs.end());
  }
  std::sort(pairs.begin(), pairs.end(), [](const diagram_pair& x, const diagram_pair& y) {
    bool xi = std::isinf(x.death), yi = std::isinf(y.death);
    if (xi != yi) return yi;
    if (x.birth != y.birth) return x.birth < y.birth;
    return x.death < y.death;
  });
  return pairs;
}

std::string format_value(value_t v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, p);
}

std::string render_diagram(const std::vector<diagram_pair>& pairs) {
  std::string out;
  for (const diagram_pair& p : pairs) {
    out += format_value(p.birth);
    out += ' ';
    out += format_value(p.death);
    out += '\n';
  }
  return out;
}

std::vector<std::string> write_diagrams(const std::string& prefix,
                                        const pipeline_result& res, int maxdim,
                                        bool keep_zero) {
  std::vector<std::string> paths;
  for (int d = 0; d <= maxdim && d <= 2; ++d) {
    std::string path = prefix + "_H" + std::to_string(d) + ".txt";
    std::ofstream out(path, std::ios::binary);
    if (!out) throw resource_error("cannot open " + path + " for writing");
    out << render_diagram(assemble(res.dgm[d], keep_zero));
    if (!out) throw resource_error("write failed for " + path);
    paths.push_back(std::move(path));
  }
  return paths;
}

} // namespace vrph
