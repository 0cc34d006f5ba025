#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "zz/zigzag.hpp"
#include "zz/roots.hpp"

using namespace zz;

TEST_CASE("zigzag graded dimensions") {
  for (const char* name : {"A1", "A2", "A3", "A5", "D4", "E6", "affA2", "affD4"}) {
    Graph g = Graph::named(name);
    auto A = build_zigzag(g);
    auto dims = A->graded_dims();
    CHECK(dims[0] == g.nverts());
    CHECK(dims[1] == 2 * g.nedges());
    CHECK(dims[2] == g.nverts());
    CHECK(A->dim() == 2 * g.nverts() + 2 * g.nedges());
    A->check();
  }
}

TEST_CASE("zigzag single vertex") {
  auto A = build_zigzag(Graph::named("A1"));
  auto dims = A->graded_dims();
  CHECK(dims[0] == 1);
  CHECK(dims.count(1) == 0);
  CHECK(dims[2] == 1);
  // X^2 = 0
  int X = zz_loop(*A, 0);
  CHECK(A->mul_basis(X, X).empty());
}

TEST_CASE("zigzag relations") {
  Graph g = Graph::named("A3"); // chain a-b-c
  auto A = build_zigzag(g);
  int ab = zz_arrow(*A, 0, 1), bc = zz_arrow(*A, 1, 2), ba = zz_arrow(*A, 1, 0);
  CHECK(A->mul_basis(ab, bc).empty()); // (a|b)(b|c) = 0 since a != c
  Elem p = A->mul_basis(ab, ba);
  REQUIRE(p.size() == 1);
  CHECK(p[0].first == zz_loop(*A, 0)); // (a|b)(b|a) = l_a
  CHECK(p[0].second == 1);
  // loops annihilate positive degree
  CHECK(A->mul_basis(zz_loop(*A, 0), ab).empty());
  CHECK(A->mul_basis(zz_loop(*A, 0), zz_loop(*A, 0)).empty());
  // common loop class: (b|a)(a|b) = (b|c)(c|b) = l_b
  int cb = zz_arrow(*A, 2, 1);
  CHECK(elem_eq(A->mul_basis(ba, ab), A->mul_basis(bc, cb)));
}

TEST_CASE("trace and gram matrix") {
  auto A = build_zigzag(Graph::named("A2"));
  CHECK(A->trace({{zz_loop(*A, 0), Rat(1)}}) == 1);
  CHECK(A->trace({{0, Rat(1)}}) == 0);             // tr(e_a) = 0
  CHECK(A->trace({{zz_arrow(*A, 0, 1), Rat(1)}}) == 0);
  Mat g = A->gram_matrix();
  CHECK(g == g.transpose()); // symmetric
  CHECK(rank(g) == 6);       // nondegenerate on the 6-dim algebra
  // tr(xy) = tr(yx) for all basis pairs
  for (int i = 0; i < A->dim(); ++i)
    for (int j = 0; j < A->dim(); ++j)
      CHECK(A->trace(A->mul_basis(i, j)) == A->trace(A->mul_basis(j, i)));
  // Nakayama automorphism of a symmetric algebra is the identity
  CHECK(A->nakayama().is_identity());
}

TEST_CASE("skew zigzag") {
  Graph g = Graph::named("A3");
  // nu == 1 reproduces the zigzag structure constants exactly
  SkewCoefficients one;
  for (int a = 0; a < 3; ++a)
    for (int b : g.neighbors(a))
      for (int c : g.neighbors(a))
        if (b != c) one.nu[{a, b, c}] = Rat(1);
  auto S = build_skew(g, one);
  auto Z = build_zigzag(g);
  REQUIRE(S->dim() == Z->dim());
  for (int i = 0; i < S->dim(); ++i)
    for (int j = 0; j < S->dim(); ++j) CHECK(elem_eq(S->mul_basis(i, j), Z->mul_basis(i, j)));

  // the odd-cycle skew algebra of the cross-product relations
  auto K = skew_cycle(3);
  K->check();
  CHECK(K->dim() == 12);
  // (i|i-1|i) = -(i|i+1|i): products land on the same loop with opposite signs
  Graph c3 = Graph::named("cycle:3");
  for (int i = 0; i < 3; ++i) {
    int prev = (i + 2) % 3, next = (i + 1) % 3;
    Elem a = K->mul_basis(zz_arrow(*K, i, prev), zz_arrow(*K, prev, i));
    Elem b = K->mul_basis(zz_arrow(*K, i, next), zz_arrow(*K, next, i));
    CHECK(elem_eq(a, elem_scale(Rat(-1), b)));
  }
  // Frobenius but not symmetric: gram nondegenerate, asymmetric
  Mat gm = K->gram_matrix();
  CHECK(rank(gm) == K->dim());
  CHECK(gm != gm.transpose());
  // Nakayama is a nontrivial automorphism (validated inside nakayama())
  CHECK(!K->nakayama().is_identity());

  // cocycle violation is reported
  SkewCoefficients bad = one;
  bad.nu[{1, 0, 2}] = Rat(2); // nu^1_{0,2} nu^1_{2,0} = 2 != 1
  CHECK_THROWS_WITH_AS(build_skew(g, bad), doctest::Contains("cocycle"), std::invalid_argument);
}

TEST_CASE("skew algebras over trees are zigzag in disguise") {
  for (const char* name : {"A3", "D4"}) {
    Graph g = Graph::named(name);
    SkewCoefficients nu;
    // an arbitrary admissible cocycle: nu^a_{b,c} = w(b)/w(c) with weights
    auto w = [](int v) { return Rat(v + 1); };
    for (int a = 0; a < g.nverts(); ++a)
      for (int b : g.neighbors(a))
        for (int c : g.neighbors(a))
          if (b != c) nu.nu[{a, b, c}] = w(b) / w(c);
    auto S = build_skew(g, nu);
    auto Z = build_zigzag(g);
    auto phi = skew_to_zigzag_iso(g, S, Z);
    REQUIRE(phi.has_value());
  }
  // the 3-cycle skew algebra admits no diagonal isomorphism to the zigzag one
  auto K = skew_cycle(3);
  auto Z = build_zigzag(Graph::named("cycle:3"));
  CHECK(!skew_to_zigzag_iso(Graph::named("cycle:3"), K, Z).has_value());
}

TEST_CASE("path algebras") {
  Graph g = Graph::named("A2");
  Orientation o{g, {{0, 1}}}; // a -> b
  auto B = path_algebra(o, true);
  auto d = B->graded_dims();
  CHECK(d[0] == 2);
  CHECK(d[1] == 1);
  CHECK(B->dim() == 3);

  // full path algebra of a -> b -> c has dimension 6
  Graph g3 = Graph::named("A3");
  Orientation o3{g3, {{0, 1}, {1, 2}}};
  auto B3 = path_algebra(o3, false);
  CHECK(B3->dim() == 6);
  B3->check();
  // composition of the two arrows is the length-2 path
  int x01 = -1, x12 = -1;
  for (int i = B3->nverts(); i < B3->dim(); ++i) {
    if (B3->b(i).deg == 1 && B3->b(i).src == 0) x01 = i;
    if (B3->b(i).deg == 1 && B3->b(i).src == 1) x12 = i;
  }
  Elem p = B3->mul_basis(x01, x12);
  REQUIRE(p.size() == 1);
  CHECK(B3->b(p[0].first).deg == 2);

  // reduced sink-source chain-3: dims (3, 2)
  auto ss = sink_source_orientations(g3);
  auto Bred = path_algebra(ss[0], true);
  CHECK(Bred->graded_dims()[0] == 3);
  CHECK(Bred->graded_dims()[1] == 2);

  // unreduced on an oriented cycle is rejected
  Graph c3 = Graph::named("cycle:3");
  Orientation oc{c3, {{0, 1}, {1, 2}, {2, 0}}};
  CHECK_THROWS(path_algebra(oc, false));
  CHECK(path_algebra(oc, true)->dim() == 6);
}

TEST_CASE("trivial extension") {
  Graph g = Graph::named("A3");
  for (auto& o : all_orientations(g)) {
    auto B = path_algebra(o, true);
    auto T = trivial_extension(B);
    CHECK(T->dim() == 2 * B->dim());
    T->check();
    // B^* B^* = 0: products of two duals vanish
    for (int i = B->dim(); i < T->dim(); ++i)
      for (int j = B->dim(); j < T->dim(); ++j)
        if (T->b(i).deg > 0 && T->b(j).deg > 0) CHECK(T->mul_basis(i, j).empty());
    // T(B^red) is the zigzag algebra, by the explicit basis map
    auto A = build_zigzag(g);
    auto phi = trivext_zigzag_iso(T, A, o);
    CHECK(phi.has_value());
    // trace form of T(B) is symmetric and nondegenerate
    Mat gm = T->gram_matrix();
    CHECK(gm == gm.transpose());
    CHECK(rank(gm) == T->dim());
  }
  // trivial extension of the full path algebra is not the zigzag algebra
  Orientation line{g, {{0, 1}, {1, 2}}};
  auto Bfull = path_algebra(line, false);
  auto Tfull = trivial_extension(Bfull);
  CHECK(Tfull->dim() == 12);
  Tfull->check();
}

TEST_CASE("quantum cartan") {
  Graph g = Graph::named("A2");
  LMat c = quantum_cartan(g);
  Laurent diag = Laurent(1) + Laurent::q(2);
  CHECK(c.at(0, 0) == diag);
  CHECK(c.at(0, 1) == Laurent::q());
  Mat lie = quantum_cartan_at_minus_one(g);
  CHECK(lie.at(0, 0) == 2);
  CHECK(lie.at(0, 1) == -1);
  // against the graph Cartan matrix for a batch of graphs
  for (const char* name : {"A4", "D4", "E6", "affA2", "affD4"}) {
    Graph h = Graph::named(name);
    Mat l = quantum_cartan_at_minus_one(h);
    auto cm = graph_cartan_matrix(h);
    for (int i = 0; i < h.nverts(); ++i)
      for (int j = 0; j < h.nverts(); ++j) CHECK(l.at(i, j) == cm[i][j]);
  }
  CHECK(adjugate_det(quantum_cartan(Graph::named("A2"))).det ==
        Laurent(1) + Laurent::q(2) + Laurent::q(4));
}

TEST_CASE("quadratic dual dims: low degrees") {
  Graph g = Graph::named("affA2");
  auto qd = quadratic_dual_dims(g, 3);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      CHECK(qd[a][b].coeff(0) == (a == b ? 1 : 0));
      CHECK(qd[a][b].coeff(1) == (g.adjacent(a, b) ? 1 : 0));
    }
}

TEST_CASE("cartan inverse and the quadratic dual agree under q -> -q") {
  // affine graphs: A^! computed by path quotient matches the series inverse
  struct Case {
    const char* name;
    int order;
  } cases[] = {{"affA2", 8}, {"affD4", 8}, {"affE6", 5}};
  for (auto& cs : cases) {
    Graph g = Graph::named(cs.name);
    auto inv = cartan_inverse(g, cs.order);
    auto qd = quadratic_dual_dims(g, cs.order);
    for (int a = 0; a < g.nverts(); ++a)
      for (int b = 0; b < g.nverts(); ++b) CHECK(inv[a][b].in_minus_q() == qd[a][b]);
  }
}

TEST_CASE("cartan inverse nonnegativity in -q") {
  for (const char* name : {"affA2", "affD4"}) {
    auto inv = cartan_inverse(Graph::named(name), 12);
    for (auto& row : inv)
      for (auto& s : row) CHECK(s.in_minus_q().nonnegative());
  }
}

TEST_CASE("cartan inverse for finite type still inverts") {
  auto inv = cartan_inverse(Graph::named("A3"), 10);
  CHECK(inv[0][0].coeff(0) == 1);
  // entries of the inverse for finite Dynkin graphs eventually go negative in
  // -q (no Koszulity); just check the defining property ran (constructor
  // would have thrown otherwise)
  CHECK(true);
}

TEST_CASE("associativity sweep over test graphs") {
  // graphs up to 9 vertices; check() does the full triple-product sweep
  for (const char* name : {"A2", "A4", "D4", "E6", "affA2", "affD4", "affE8"}) {
    auto A = build_zigzag(Graph::named(name));
    A->check();
  }
}
