#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "brute.hpp"
#include "fixtures.hpp"
#include "vrph/filtration.hpp"

using namespace vrph;

// unit square edge order: four sides (length 1) by (u, v), then two diagonals
// (length sqrt(2)):
//   0:{0,1} 1:{0,3} 2:{1,2} 3:{2,3} 4:{0,2} 5:{1,3}
TEST_CASE("unit square edge order and values") {
  filtration f = fx::filt_of(fx::sq4());
  REQUIRE(f.n_edges() == 6);
  std::vector<std::pair<vertex_t, vertex_t>> want = {
      {0, 1}, {0, 3}, {1, 2}, {2, 3}, {0, 2}, {1, 3}};
  for (edge_t e = 0; e < 6; ++e) {
    CHECK(f.edge_u[e] == want[e].first);
    CHECK(f.edge_v[e] == want[e].second);
  }
  for (edge_t e = 0; e < 4; ++e) CHECK(f.values[e] == 1.0);
  CHECK(f.values[4] == doctest::Approx(std::sqrt(2.0)));
  CHECK(std::is_sorted(f.values.begin(), f.values.end()));
}

TEST_CASE("edge_order agrees between sparse and dense lookup") {
  point_cloud pc = fx::random_cloud(21, 13);
  filtration fs = fx::filt_of(pc, fx::inf, lookup_mode::sparse);
  filtration fd = fx::filt_of(pc, fx::inf, lookup_mode::dense);
  REQUIRE(fs.n_edges() == fd.n_edges());
  for (vertex_t a = 0; a < fs.n; ++a)
    for (vertex_t b = 0; b < fs.n; ++b) {
      edge_t s = fs.edge_order(a, b);
      CHECK(s == fd.edge_order(a, b));
      if (a == b) CHECK(s == no_edge);
    }
}

TEST_CASE("edge_order on a thresholded graph returns no_edge for dropped pairs") {
  filtration f = fx::filt_of(fx::sq4(), 1.2);
  REQUIRE(f.n_edges() == 4);
  CHECK(f.edge_order(0, 2) == no_edge);
  CHECK(f.edge_order(1, 3) == no_edge);
  CHECK(f.edge_order(0, 1) != no_edge);
  CHECK(f.edge_order(1, 0) == f.edge_order(0, 1));
}

TEST_CASE("neighborhood spans are consistent and sorted") {
  point_cloud pc = fx::random_cloud(3, 11);
  filtration f = fx::filt_of(pc, 0.9);
  std::uint64_t total = 0;
  for (vertex_t a = 0; a < f.n; ++a) {
    auto vs = f.vspan(a);
    auto es = f.espan(a);
    REQUIRE(vs.size() == es.size());
    total += vs.size();
    CHECK(std::is_sorted(vs.begin(), vs.end(),
                         [](const nbhd_entry& x, const nbhd_entry& y) {
                           return x.nb < y.nb;
                         }));
    CHECK(std::is_sorted(es.begin(), es.end(),
                         [](const nbhd_entry& x, const nbhd_entry& y) {
                           return x.e < y.e;
                         }));
    // both views hold the same (nb, e) set, and each entry matches edge_order
    std::set<std::pair<vertex_t, edge_t>> sv, se;
    for (const nbhd_entry& x : vs) {
      sv.insert({x.nb, x.e});
      CHECK(f.edge_order(a, x.nb) == x.e);
    }
    for (const nbhd_entry& x : es) se.insert({x.nb, x.e});
    CHECK(sv == se);
  }
  CHECK(total == 2 * std::uint64_t(f.n_edges())); // each edge in two spans
}

TEST_CASE("min_cob caches each edge's smallest coboundary triangle") {
  SUBCASE("unit square, frozen") {
    filtration f = fx::filt_of(fx::sq4());
    std::vector<paired_index> want = {{4, 1}, {4, 3}, {4, 1}, {4, 3}, {4, 1}, {5, 0}};
    REQUIRE(f.min_cob.size() == 6);
    for (edge_t e = 0; e < 6; ++e) CHECK(f.min_cob[e] == want[e]);
  }
  SUBCASE("random graphs, against exhaustive search") {
    for (std::uint64_t seed : {40, 41, 42}) {
      point_cloud pc = fx::random_cloud(seed, 10);
      edge_set es = enumerate_edges(pc, 0.95);
      filtration f = build_filtration(es.n, es.edges);
      brute::graph g = brute::make_graph(es);
      for (edge_t e = 0; e < f.n_edges(); ++e) {
        std::vector<paired_index> cob = brute::edge_coboundary(g, e);
        if (cob.empty())
          CHECK(f.min_cob[e].is_none());
        else
          CHECK(f.min_cob[e] == cob.front());
      }
    }
  }
}

TEST_CASE("triangle and tetrahedron indexing") {
  point_cloud pc = fx::random_cloud(11, 9);
  edge_set es = enumerate_edges(pc, fx::inf);
  filtration f = build_filtration(es.n, es.edges);
  brute::graph g = brute::make_graph(es);

  for (vertex_t a = 0; a < 9; ++a)
    for (vertex_t b = a + 1; b < 9; ++b)
      for (vertex_t c = b + 1; c < 9; ++c) {
        paired_index t = triangle_index(f, a, b, c);
        CHECK(t == brute::tri_index(g, a, b, c));
        // vertex order fed in must not matter
        CHECK(triangle_index(f, c, a, b) == t);
        auto [u, v, w] = triangle_vertices(f, t);
        CHECK(u < v);
        std::array<vertex_t, 3> got = {u, v, w};
        std::sort(got.begin(), got.end());
        CHECK(got == std::array<vertex_t, 3>{a, b, c});
        for (vertex_t d = c + 1; d < 9; ++d) {
          paired_index s = tetra_index(f, a, b, c, d);
          CHECK(s == brute::tetra_index(g, a, b, c, d));
          CHECK(s.secondary < s.primary);
        }
      }
}

TEST_CASE("memory_account matches the held arrays") {
  auto expected = [](const filtration& f) {
    return 12 * std::uint64_t(f.n_edges()) + 3 * std::uint64_t(f.n);
  };
  SUBCASE("unit square") {
    filtration f = fx::filt_of(fx::sq4());
    CHECK(memory_account(f) == 84);
    CHECK(memory_account(f) == expected(f));
  }
  SUBCASE("octahedron") {
    filtration f = fx::filt_of(fx::octahedron());
    CHECK(memory_account(f) == expected(f));
  }
  SUBCASE("random clouds at assorted thresholds") {
    for (std::uint64_t seed : {60, 61, 62, 63}) {
      point_cloud pc = fx::random_cloud(seed, 12);
      filtration f = fx::filt_of(pc, 0.5 + 0.1 * double(seed - 60));
      CHECK(memory_account(f) == expected(f));
    }
  }
}

TEST_CASE("dense lookup refuses tables over the cap") {
  point_cloud pc = fx::random_cloud(5, 8);
  edge_set es = enumerate_edges(pc, fx::inf);
  // 8*8*4 = 256 bytes; a 255-byte cap must refuse, 256 must pass
  CHECK_THROWS_AS(build_filtration(es.n, es.edges, lookup_mode::dense, 255),
                  resource_error);
  edge_set es2 = enumerate_edges(pc, fx::inf);
  filtration f = build_filtration(es2.n, es2.edges, lookup_mode::dense, 256);
  CHECK(f.n_edges() == 28);
}

TEST_CASE("construction phases compose to the full build") {
  point_cloud pc = fx::random_cloud(9, 10);
  edge_set es = enumerate_edges(pc, fx::inf);
  edge_set es2 = es;
  filtration whole = build_filtration(es.n, std::move(es.edges));
  filtration staged = build_edge_order(es2.n, std::move(es2.edges));
  CHECK(staged.min_cob.empty());
  build_neighborhoods(staged);
  CHECK(staged.edge_u == whole.edge_u);
  CHECK(staged.values == whole.values);
  CHECK(staged.vnbhd.size() == whole.vnbhd.size());
  REQUIRE(staged.min_cob.size() == whole.min_cob.size());
  for (std::size_t e = 0; e < whole.min_cob.size(); ++e)
    CHECK(staged.min_cob[e] == whole.min_cob[e]);
}
