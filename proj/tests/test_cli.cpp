#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "vrph/diagram.hpp"

namespace fs = std::filesystem;

namespace {

struct proc_result {
  int code;
  std::string out, err;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return std::move(ss).str();
}

void spit(const fs::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary);
  REQUIRE(out.good());
  out << text;
}

const fs::path& work_dir() {
  static fs::path dir = [] {
    fs::path d = fs::temp_directory_path() /
                 ("vrph_cli_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string binary() {
  const char* bin = std::getenv("VRPH_BIN");
  REQUIRE_MESSAGE(bin != nullptr, "VRPH_BIN must point at the executable");
  return bin;
}

proc_result run_cli(const std::string& args, const std::string& env = "") {
  static int seq = 0;
  fs::path out = work_dir() / ("stdout_" + std::to_string(seq));
  fs::path err = work_dir() / ("stderr_" + std::to_string(seq));
  ++seq;
  std::string cmd = env + (env.empty() ? "" : " ") + "'" + binary() + "' " + args +
                    " >'" + out.string() + "' 2>'" + err.string() + "'";
  int rc = std::system(cmd.c_str());
  proc_result r;
  r.code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  r.out = slurp(out);
  r.err = slurp(err);
  return r;
}

fs::path write_cloud(const std::string& name, const vrph::point_cloud& pc) {
  std::string text;
  for (std::size_t i = 0; i < pc.size(); ++i) {
    for (std::size_t k = 0; k < pc.dim; ++k) {
      if (k) text += ' ';
      text += vrph::format_value(pc.coords[i * pc.dim + k]);
    }
    text += '\n';
  }
  fs::path p = work_dir() / name;
  spit(p, text);
  return p;
}

} // namespace

TEST_CASE("run writes one diagram file per dimension with exact contents") {
  fs::path in = write_cloud("square.txt", fx::sq4());
  fs::path prefix = work_dir() / "square_out";
  proc_result r =
      run_cli("run --input '" + in.string() + "' --output '" + prefix.string() + "'");
  REQUIRE(r.code == 0);
  CHECK(r.out.empty());
  CHECK(r.err.empty());
  CHECK(slurp(prefix.string() + "_H0.txt") == "0 1\n0 1\n0 1\n0 inf\n");
  CHECK(slurp(prefix.string() + "_H1.txt") == "1 1.4142135623730951\n");
  CHECK(slurp(prefix.string() + "_H2.txt") == "");
}

TEST_CASE("output prefix defaults to the input path") {
  fs::path in = write_cloud("square_defp.txt", fx::sq4());
  REQUIRE(run_cli("run --input '" + in.string() + "'").code == 0);
  CHECK(fs::exists(in.string() + "_H0.txt"));
  CHECK(fs::exists(in.string() + "_H1.txt"));
  CHECK(fs::exists(in.string() + "_H2.txt"));
}

TEST_CASE("keep-zero retains the zero-persistence pairs") {
  fs::path in = write_cloud("square_kz.txt", fx::sq4());
  fs::path prefix = work_dir() / "square_kz_out";
  REQUIRE(run_cli("run --keep-zero --input '" + in.string() + "' --output '" +
                  prefix.string() + "'")
              .code == 0);
  CHECK(slurp(prefix.string() + "_H1.txt") ==
        "1 1.4142135623730951\n"
        "1.4142135623730951 1.4142135623730951\n"
        "1.4142135623730951 1.4142135623730951\n");
  CHECK(slurp(prefix.string() + "_H2.txt") ==
        "1.4142135623730951 1.4142135623730951\n");
}

TEST_CASE("maxdim limits which files are written") {
  fs::path in = write_cloud("square_md.txt", fx::sq4());
  fs::path prefix = work_dir() / "square_md_out";
  REQUIRE(run_cli("run --maxdim 1 --input '" + in.string() + "' --output '" +
                  prefix.string() + "'")
              .code == 0);
  CHECK(fs::exists(prefix.string() + "_H0.txt"));
  CHECK(fs::exists(prefix.string() + "_H1.txt"));
  CHECK(!fs::exists(prefix.string() + "_H2.txt"));
}

TEST_CASE("a threshold below the diagonal leaves the loop essential") {
  fs::path in = write_cloud("square_thr.txt", fx::sq4());
  fs::path prefix = work_dir() / "square_thr_out";
  REQUIRE(run_cli("run --threshold 1.2 --input '" + in.string() + "' --output '" +
                  prefix.string() + "'")
              .code == 0);
  CHECK(slurp(prefix.string() + "_H1.txt") == "1 inf\n");
}

TEST_CASE("all input formats and lookup modes produce identical files") {
  fs::path cloud = write_cloud("square_fmt.txt", fx::sq4());
  fs::path p1 = work_dir() / "fmt_cloud";
  REQUIRE(run_cli("run --input '" + cloud.string() + "' --output '" + p1.string() + "'")
              .code == 0);

  // the same metric space as a lower-triangle matrix and as sparse triples
  fs::path ldm = work_dir() / "square_fmt_ldm.txt";
  spit(ldm, "1\n1.4142135623730951 1\n1 1.4142135623730951 1\n");
  fs::path p2 = work_dir() / "fmt_ldm";
  REQUIRE(run_cli("run --format ldm --input '" + ldm.string() + "' --output '" +
                  p2.string() + "'")
              .code == 0);

  fs::path sp = work_dir() / "square_fmt_sparse.txt";
  spit(sp,
       "0 1 1\n0 2 1.4142135623730951\n0 3 1\n"
       "1 2 1\n1 3 1.4142135623730951\n2 3 1\n");
  fs::path p3 = work_dir() / "fmt_sparse";
  REQUIRE(run_cli("run --format sparse --input '" + sp.string() + "' --output '" +
                  p3.string() + "'")
              .code == 0);

  fs::path p4 = work_dir() / "fmt_dense";
  REQUIRE(run_cli("run --mode dense --input '" + cloud.string() + "' --output '" +
                  p4.string() + "'")
              .code == 0);

  for (const char* suffix : {"_H0.txt", "_H1.txt", "_H2.txt"}) {
    std::string want = slurp(p1.string() + suffix);
    CHECK(slurp(p2.string() + suffix) == want);
    CHECK(slurp(p3.string() + suffix) == want);
    CHECK(slurp(p4.string() + suffix) == want);
  }
}

TEST_CASE("outputs are byte-identical across threads, batches, and engines") {
  fs::path in = write_cloud("det.txt", fx::random_cloud(31, 60));
  fs::path base = work_dir() / "det_base";
  REQUIRE(run_cli("run --input '" + in.string() + "' --output '" + base.string() + "'")
              .code == 0);
  const std::string variants[] = {
      "--threads 4",
      "--threads 4 --batch-h0 17 --batch-dim2 5",
      "--batch-h0 1 --batch-dim2 1",
      "--engine row --threads 2",
      "--no-clearing --threads 4",
  };
  int k = 0;
  for (const std::string& v : variants) {
    fs::path p = work_dir() / ("det_v" + std::to_string(k++));
    CAPTURE(v);
    REQUIRE(run_cli("run " + v + " --input '" + in.string() + "' --output '" +
                    p.string() + "'")
                .code == 0);
    for (const char* suffix : {"_H0.txt", "_H1.txt", "_H2.txt"})
      CHECK(slurp(p.string() + suffix) == slurp(base.string() + suffix));
  }
}

TEST_CASE("written values are the shortest exact decimal forms") {
  fs::path in = write_cloud("fmtchk.txt", fx::random_cloud(53, 12));
  fs::path prefix = work_dir() / "fmtchk_out";
  REQUIRE(run_cli("run --keep-zero --input '" + in.string() + "' --output '" +
                  prefix.string() + "'")
              .code == 0);
  for (const char* suffix : {"_H0.txt", "_H1.txt", "_H2.txt"}) {
    std::istringstream lines(slurp(prefix.string() + suffix));
    std::string b, d;
    while (lines >> b >> d) {
      for (const std::string& tok : {b, d}) {
        if (tok == "inf") continue;
        CHECK(vrph::format_value(std::stod(tok)) == tok);
      }
      if (d != "inf") CHECK(std::stod(b) <= std::stod(d));
    }
  }
}

TEST_CASE("benchmark prints the five phase timings") {
  fs::path in = write_cloud("bench.txt", fx::random_cloud(17, 30));
  fs::path prefix = work_dir() / "bench_out";
  proc_result r = run_cli("run --benchmark --input '" + in.string() +
                          "' --output '" + prefix.string() + "'");
  REQUIRE(r.code == 0);
  const char* prefixes[] = {"Creating F1: ", "Creating neighborhoods: ",
                            "H0: ", "H1*: ", "H2*: "};
  std::istringstream lines(r.out);
  std::string line;
  std::size_t i = 0;
  while (std::getline(lines, line)) {
    REQUIRE(i < 5);
    CHECK(line.rfind(prefixes[i], 0) == 0);
    CHECK(line.find(" s") != std::string::npos);
    ++i;
  }
  CHECK(i == 5);
}

TEST_CASE("verify cross-checks the engine against the reference") {
  fs::path in = write_cloud("verify.txt", fx::random_cloud(19, 14));
  SUBCASE("clean run reports success") {
    proc_result r = run_cli("verify --input '" + in.string() + "'");
    CHECK(r.code == 0);
    CHECK(r.out == "verified: dims 0..2 match the reference\n");
  }
  SUBCASE("an injected mismatch is caught") {
    proc_result r =
        run_cli("verify --input '" + in.string() + "'", "VRPH_VERIFY_CORRUPT=1");
    CHECK(r.code == 1);
    CHECK(r.err.find("disagree") != std::string::npos);
  }
  SUBCASE("inputs past the reference cap are refused") {
    fs::path big = write_cloud("verify_big.txt", fx::random_cloud(23, 26));
    proc_result r = run_cli("verify --input '" + big.string() + "'");
    CHECK(r.code == 3);
    CHECK(r.err.find("at most") != std::string::npos);
  }
}

TEST_CASE("failure exit codes") {
  SUBCASE("unreadable input") {
    proc_result r = run_cli("run --input '" + (work_dir() / "missing.txt").string() + "'");
    CHECK(r.code == 2);
    CHECK(r.err.find("error:") != std::string::npos);
  }
  SUBCASE("malformed input names the line") {
    fs::path bad = work_dir() / "bad.txt";
    spit(bad, "0 0\n1 q\n");
    proc_result r = run_cli("run --input '" + bad.string() + "'");
    CHECK(r.code == 2);
    CHECK(r.err.find('q') != std::string::npos);
  }
  SUBCASE("bad flags are rejected by the parser") {
    fs::path in = write_cloud("flags.txt", fx::sq4());
    CHECK(run_cli("run --input '" + in.string() + "' --maxdim 3").code != 0);
    CHECK(run_cli("run --input '" + in.string() + "' --engine turbo").code != 0);
    CHECK(run_cli("run --input '" + in.string() + "' --threads 0").code != 0);
    CHECK(run_cli("frobnicate").code != 0);
    CHECK(run_cli("run").code != 0); // --input is required
  }
}
