#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "zz/graph.hpp"
#include "zz/roots.hpp"

using namespace zz;

TEST_CASE("graph construction and json round trip") {
  Graph g = Graph::named("A3");
  CHECK(g.nverts() == 3);
  CHECK(g.nedges() == 2);
  CHECK(g.adjacent(0, 1));
  CHECK(!g.adjacent(0, 2));
  Graph h = Graph::from_json(g.to_json());
  CHECK(h.nverts() == 3);
  CHECK(h.edges() == g.edges());

  CHECK_THROWS(Graph({"a"}, {{0, 0}}));          // loop
  CHECK_THROWS(Graph({"a", "b"}, {{0, 1}, {1, 0}})); // multiple edge
}

TEST_CASE("dynkin classification") {
  CHECK(classify(Graph::named("chain:3")).name == "A3");
  CHECK(classify(Graph::named("A1")).name == "A1");
  CHECK(classify(Graph::named("cycle:3")).name == "affA2");
  CHECK(classify(Graph::named("affD4")).name == "affD4");
  CHECK(classify(Graph::named("D4")).name == "D4");
  CHECK(classify(Graph::named("D6")).name == "D6");
  CHECK(classify(Graph::named("E6")).name == "E6");
  CHECK(classify(Graph::named("E7")).name == "E7");
  CHECK(classify(Graph::named("E8")).name == "E8");
  CHECK(classify(Graph::named("affE6")).name == "affE6");
  CHECK(classify(Graph::named("affE7")).name == "affE7");
  CHECK(classify(Graph::named("affE8")).name == "affE8");
  CHECK(classify(Graph::named("cycle:8")).name == "affA7");
  // affine D5: chain of 2 with two extra leaves at both ends
  Graph d5({"1", "2", "3", "4", "5", "6"}, {{0, 2}, {1, 2}, {2, 3}, {3, 4}, {3, 5}});
  CHECK(classify(d5).name == "affD5");
  // K4 is neither finite nor affine
  Graph k4({"a", "b", "c", "d"}, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  CHECK(classify(k4).name == "other");
  // star with 5 legs
  Graph s5({"c", "1", "2", "3", "4", "5"}, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}});
  CHECK(classify(s5).name == "other");
  CHECK_THROWS(classify(Graph({"a", "b"}, {}))); // disconnected
}

TEST_CASE("vertex counts of named graphs") {
  CHECK(Graph::named("D4").nverts() == 4);
  CHECK(Graph::named("D8").nverts() == 8);
  CHECK(Graph::named("E8").nverts() == 8);
  CHECK(Graph::named("affE8").nverts() == 9);
  CHECK(Graph::named("affD4").nverts() == 5);
}

TEST_CASE("root generation closure") {
  auto a2 = generate_roots(Graph::named("A2"));
  CHECK(a2.nroots() == 6);
  auto a1 = generate_roots(Graph::named("A1"));
  CHECK(a1.nroots() == 2);
  CHECK(a1.root_index({1}) >= 0);
  CHECK(a1.root_index({-1}) >= 0);

  // |Phi(A_n)| = n^2 + n, recomputed by closure
  for (int n = 1; n <= 5; ++n) {
    auto rs = generate_roots(Graph::named("A" + std::to_string(n)));
    CHECK(rs.nroots() == n * n + n);
  }
  CHECK(generate_roots(Graph::named("D4")).nroots() == 24);
  CHECK(generate_roots(Graph::named("E6")).nroots() == 72);

  CHECK_THROWS(generate_roots(Graph::named("cycle:3")));
}

TEST_CASE("root system invariants") {
  auto rs = generate_roots(Graph::named("A3"));
  for (auto& r : rs.roots()) {
    CHECK(rs.pairing(r, r) == 2);
    CHECK(rs.root_index(rs.negate(r)) >= 0);
    bool zero = true;
    for (int x : r) zero = zero && x == 0;
    CHECK(!zero);
  }
  // reflections permute the roots
  for (int a = 0; a < rs.rank(); ++a) {
    std::set<std::vector<int>> image;
    for (auto& r : rs.roots()) image.insert(rs.reflect(r, a));
    CHECK((int)image.size() == rs.nroots());
    for (auto& r : image) CHECK(rs.root_index(r) >= 0);
  }
  // s_alpha(alpha) = -alpha
  for (int a = 0; a < rs.rank(); ++a)
    CHECK(rs.reflect(rs.simple(a), a) == rs.negate(rs.simple(a)));
}

TEST_CASE("sink source orientations") {
  auto ch2 = sink_source_orientations(Graph::named("chain:2"));
  CHECK(ch2.size() == 2);
  auto cyc3 = sink_source_orientations(Graph::named("cycle:3"));
  CHECK(cyc3.empty());
  auto ch4 = sink_source_orientations(Graph::named("chain:4"));
  REQUIRE(ch4.size() == 2);
  for (auto& o : ch4) {
    CHECK(o.sink_source());
    for (size_t i = 0; i + 1 < o.arrows.size(); ++i) {
      // alternating: consecutive edges point in opposite senses
      auto [s1, t1] = o.arrows[i];
      auto [s2, t2] = o.arrows[i + 1];
      CHECK(((t1 == t2) || (s1 == s2)));
    }
  }
  CHECK(all_orientations(Graph::named("A3")).size() == 4);
}
