#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "vrph/diagram.hpp"
#include "vrph/oracle.hpp"
#include "vrph/pipeline.hpp"

namespace {

struct config {
  std::string input;
  vrph::input_format format = vrph::input_format::cloud;
  double threshold = std::numeric_limits<double>::infinity();
  int maxdim = 2;
  unsigned threads = 1;
  std::size_t batch_dim2 = 100;
  std::size_t batch_h0 = 1000;
  vrph::engine_kind engine = vrph::engine_kind::fastcol;
  vrph::lookup_mode mode = vrph::lookup_mode::sparse;
  std::string output;
  bool keep_zero = false;
  bool no_clearing = false;
  bool benchmark = false;
};

void add_common_options(CLI::App& sub, config& c) {
  sub.add_option("--input", c.input, "input file")->required();
  sub.add_option("--format", c.format, "input format")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, vrph::input_format>{
              {"cloud", vrph::input_format::cloud},
              {"ldm", vrph::input_format::lower_distance},
              {"sparse", vrph::input_format::sparse}},
          CLI::ignore_case));
  sub.add_option("--threshold", c.threshold, "filtration cutoff (default: none)")
      ->check(CLI::NonNegativeNumber);
  sub.add_option("--maxdim", c.maxdim, "highest homology dimension")
      ->check(CLI::Range(0, 2));
  sub.add_option("--threads", c.threads, "worker threads")
      ->check(CLI::PositiveNumber);
  sub.add_option("--batch-dim2", c.batch_dim2, "batch size, triangle stage")
      ->check(CLI::PositiveNumber);
  sub.add_option("--batch-h0", c.batch_h0, "batch size, edge stage")
      ->check(CLI::PositiveNumber);
  sub.add_option("--engine", c.engine, "column engine")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, vrph::engine_kind>{
              {"fastcol", vrph::engine_kind::fastcol},
              {"row", vrph::engine_kind::row}},
          CLI::ignore_case));
  sub.add_option("--mode", c.mode, "edge-order lookup mode")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, vrph::lookup_mode>{
              {"sparse", vrph::lookup_mode::sparse},
              {"dense", vrph::lookup_mode::dense}},
          CLI::ignore_case));
  sub.add_flag("--keep-zero", c.keep_zero, "keep zero-persistence pairs");
  sub.add_flag("--no-clearing", c.no_clearing, "reduce cleared columns too");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw vrph::parse_error("cannot read " + path, 0);
  std::ostringstream ss;
  ss << in.rdbuf();
  return std::move(ss).str();
}

vrph::run_params params_from(const config& c) {
  vrph::run_params p;
  p.maxdim = c.maxdim;
  p.threads = c.threads;
  p.batch_h0 = c.batch_h0;
  p.batch_dim2 = c.batch_dim2;
  p.clearing = !c.no_clearing;
  p.engine = c.engine;
  return p;
}

int do_run(const config& c) {
  std::string text = read_file(c.input);
  vrph::edge_set es = vrph::load_edges(c.format, text, c.threshold);
  vrph::timed_build tb = vrph::build_timed(es.n, std::move(es.edges), c.mode);
  vrph::pipeline_result res = vrph::compute_persistence(tb.f, params_from(c));
  std::string prefix = c.output.empty() ? c.input : c.output;
  vrph::write_diagrams(prefix, res, c.maxdim, c.keep_zero);
  if (c.benchmark) {
    std::printf("Creating F1: %.3f s\n", tb.t_order);
    std::printf("Creating neighborhoods: %.3f s\n", tb.t_nbhd);
    std::printf("H0: %.3f s\n", res.t_h0);
    std::printf("H1*: %.3f s\n", res.t_h1);
    std::printf("H2*: %.3f s\n", res.t_h2);
  }
  return 0;
}

bool same_diagram(const std::vector<vrph::diagram_pair>& a,
                  const std::vector<vrph::diagram_pair>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].birth != b[i].birth || a[i].death != b[i].death) return false;
  return true;
}

void print_diagram(const char* tag, const std::vector<vrph::diagram_pair>& d) {
  std::fprintf(stderr, "  %s:", tag);
  for (const vrph::diagram_pair& p : d)
    std::fprintf(stderr, " (%s,%s)", vrph::format_value(p.birth).c_str(),
                 vrph::format_value(p.death).c_str());
  std::fprintf(stderr, "\n");
}

int do_verify(const config& c) {
  std::string text = read_file(c.input);
  vrph::edge_set es = vrph::load_edges(c.format, text, c.threshold);
  vrph::dense_filtration df = vrph::oracle_enumerate(es);
  vrph::oracle_diagrams by_col = vrph::oracle_reduce_column(df);
  vrph::oracle_diagrams by_row = vrph::oracle_reduce_row(df);
  vrph::oracle_diagrams by_co = vrph::oracle_reduce_cocolumn(df);
  vrph::timed_build tb = vrph::build_timed(es.n, std::move(es.edges), c.mode);
  vrph::pipeline_result res = vrph::compute_persistence(tb.f, params_from(c));
  if (std::getenv("VRPH_VERIFY_CORRUPT")) // negative-control hook for tests
    res.dgm[0].push_back({0.25, 0.75});

  bool ok = true;
  for (int d = 0; d <= c.maxdim; ++d) {
    auto got = vrph::assemble(res.dgm[d], true);
    auto want = vrph::assemble(by_col.dgm[d], true);
    auto want_row = vrph::assemble(by_row.dgm[d], true);
    auto want_co = vrph::assemble(by_co.dgm[d], true);
    if (!same_diagram(want, want_row) || !same_diagram(want, want_co)) {
      std::fprintf(stderr, "H%d: reference reductions disagree\n", d);
      print_diagram("column", want);
      print_diagram("row", want_row);
      print_diagram("cocolumn", want_co);
      ok = false;
    }
    if (!same_diagram(got, want)) {
      std::fprintf(stderr, "H%d: engine and reference disagree\n", d);
      print_diagram("engine", got);
      print_diagram("reference", want);
      ok = false;
    }
  }
  if (!ok) return 1;
  std::printf("verified: dims 0..%d match the reference\n", c.maxdim);
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"persistent homology of Vietoris-Rips filtrations, dims 0..2"};
  app.require_subcommand(1);
  config c;
  CLI::App* run = app.add_subcommand("run", "compute diagrams and write them");
  add_common_options(*run, c);
  run->add_option("--output", c.output, "output prefix (default: input path)");
  run->add_flag("--benchmark", c.benchmark, "print phase timings");
  CLI::App* verify =
      app.add_subcommand("verify", "cross-check against the brute-force reference");
  add_common_options(*verify, c);

  CLI11_PARSE(app, argc, argv);
  try {
    return run->parsed() ? do_run(c) : do_verify(c);
  } catch (const vrph::parse_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const vrph::resource_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  } catch (const std::bad_alloc&) {
    std::fprintf(stderr, "error: out of memory\n");
    return 3;
  }
}
