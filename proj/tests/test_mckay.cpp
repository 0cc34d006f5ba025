#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "zz/mckay.hpp"
#include "zz/zigzag.hpp"

using namespace zz;

TEST_CASE("cyclotomic arithmetic") {
  auto F12 = CycloField::get(12);
  CHECK(F12->degree() == 4); // phi(12) = 4
  Cyc z = Cyc::zeta_pow(F12, 1);
  Cyc acc = Cyc::rational(F12, Rat(1));
  for (int i = 0; i < 12; ++i) acc = acc * z;
  CHECK(acc == Cyc::rational(F12, Rat(1))); // zeta^12 = 1
  // zeta_12^6 = -1
  CHECK(Cyc::zeta_pow(F12, 6) == Cyc::rational(F12, Rat(-1)));
  // conj(zeta) * zeta = 1
  CHECK(z.conj() * z == Cyc::rational(F12, Rat(1)));
  // quadratic: (zeta_12^2 + zeta_12^-2) = 1 (2cos(60))
  CHECK(Cyc::zeta_pow(F12, 2) + Cyc::zeta_pow(F12, -2) == Cyc::rational(F12, Rat(1)));
  // golden ratio relation in Q(zeta_5): A = z+z^4, A^2 + A - 1 = 0
  auto F5 = CycloField::get(5);
  Cyc A = Cyc::zeta_pow(F5, 1) + Cyc::zeta_pow(F5, 4);
  CHECK(A * A + A - Cyc::rational(F5, Rat(1)) == Cyc(F5));
}

TEST_CASE("group construction and validation") {
  // Q8 = binary-dihedral:2: order 8, dims (1,1,1,1,2)
  SU2Group q8 = build_group("binary-dihedral:2");
  CHECK(q8.order == 8);
  CHECK(q8.nirreps() == 5);
  std::multiset<long> dims(q8.dims.begin(), q8.dims.end());
  CHECK(dims == std::multiset<long>{1, 1, 1, 1, 2});
  CHECK(q8.is_binary());

  SU2Group t2 = build_group("2T");
  CHECK(t2.order == 24);
  CHECK(t2.nirreps() == 7);
  std::multiset<long> td(t2.dims.begin(), t2.dims.end());
  CHECK(td == std::multiset<long>{1, 1, 1, 2, 2, 2, 3});

  SU2Group o2 = build_group("2O");
  CHECK(o2.nirreps() == 8);
  std::multiset<long> od(o2.dims.begin(), o2.dims.end());
  CHECK(od == std::multiset<long>{1, 1, 2, 2, 2, 3, 3, 4});

  SU2Group i2 = build_group("2I");
  CHECK(i2.order == 120);
  CHECK(i2.nirreps() == 9);
  std::multiset<long> idd(i2.dims.begin(), i2.dims.end());
  CHECK(idd == std::multiset<long>{1, 2, 2, 3, 3, 4, 4, 5, 6});

  // binary predicate on cyclic groups
  CHECK(!build_group("cyclic:3").is_binary());
  CHECK(build_group("cyclic:4").is_binary());
}

TEST_CASE("mckay graphs match affine diagrams") {
  std::string name;
  Graph gq8 = mckay_graph(build_group("binary-dihedral:2"), &name);
  CHECK(name == "affD4");
  CHECK(gq8.nverts() == 5);

  mckay_graph(build_group("2T"), &name);
  CHECK(name == "affE6");
  mckay_graph(build_group("2O"), &name);
  CHECK(name == "affE7");
  mckay_graph(build_group("2I"), &name);
  CHECK(name == "affE8");

  mckay_graph(build_group("cyclic:5"), &name);
  CHECK(name == "affA4");
  mckay_graph(build_group("binary-dihedral:3"), &name);
  CHECK(name == "affD5");
}

TEST_CASE("symmetric power multiplicities: small cases") {
  SU2Group q8 = build_group("binary-dihedral:2");
  // n = 0: the trivial representation only
  for (int a = 0; a < q8.nirreps(); ++a)
    CHECK(sym_power_multiplicity(q8, a, 0) == (a == q8.trivial ? 1 : 0));
  // n = 1: adjacency to the trivial vertex in the McKay graph
  Graph g = mckay_graph(q8);
  for (int a = 0; a < q8.nirreps(); ++a)
    CHECK(sym_power_multiplicity(q8, a, 1) == (g.adjacent(a, q8.trivial) ? 1 : 0));
  // Q8, n = 2: S^2 C^2 = the three nontrivial one-dimensionals
  for (int a = 0; a < q8.nirreps(); ++a) {
    long want = (q8.dims[a] == 1 && a != q8.trivial) ? 1 : 0;
    CHECK(sym_power_multiplicity(q8, a, 2) == want);
  }
  // always nonnegative integers (throws otherwise) for a sweep
  SU2Group t2 = build_group("2T");
  for (int a = 0; a < t2.nirreps(); ++a)
    for (int n = 0; n <= 30; ++n) CHECK(sym_power_multiplicity(t2, a, n) >= 0);
}

TEST_CASE("inverse cartan multiplicity identity") {
  for (const char* name : {"binary-dihedral:2", "2T"}) {
    SU2Group g = build_group(name);
    auto table = inverse_cartan_table(g, 20);
    for (int a = 0; a < g.nirreps(); ++a)
      for (int n = 0; n <= 20; ++n) CHECK(table[a][n] == sym_power_multiplicity(g, a, n));
  }
  SU2Group q8 = build_group("binary-dihedral:2");
  auto table = inverse_cartan_table(q8, 4);
  CHECK(table[q8.trivial][0] == 1);
  CHECK_THROWS(inverse_cartan_table(build_group("cyclic:3"), 4));
}

TEST_CASE("cross product cartan equals quantum cartan of the mckay graph") {
  for (const char* name : {"binary-dihedral:2", "2T"}) {
    SU2Group g = build_group(name);
    LMat lhs = cross_product_cartan(g);
    LMat rhs = quantum_cartan(mckay_graph(g));
    CHECK(lhs == rhs);
  }
  CHECK_THROWS(cross_product_cartan(build_group("cyclic:3")));
}

TEST_CASE("multiplicities weighted by degrees recover dim S^n") {
  for (const char* name : {"binary-dihedral:2", "2T", "2O"}) {
    SU2Group g = build_group(name);
    for (int n = 0; n <= 15; ++n) {
      long total = 0;
      for (int a = 0; a < g.nirreps(); ++a)
        total += sym_power_multiplicity(g, a, n) * g.dims[a];
      CHECK(total == n + 1);
    }
  }
}

TEST_CASE("three way agreement with the quadratic dual") {
  SU2Group q8 = build_group("binary-dihedral:2");
  Graph g = mckay_graph(q8);
  auto qd = quadratic_dual_dims(g, 12);
  for (int a = 0; a < q8.nirreps(); ++a)
    for (int n = 0; n <= 12; ++n)
      CHECK(qd[a][q8.trivial].coeff(n) == sym_power_multiplicity(q8, a, n));
}
