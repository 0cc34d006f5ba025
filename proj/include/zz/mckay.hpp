#pragma once

#include "zz/cyclotomic.hpp"
#include "zz/graph.hpp"
#include "zz/lmat.hpp"
#include "zz/report.hpp"

#include <string>
#include <vector>

namespace zz {

// A finite subgroup of SU(2) through its exact class data and character
// table. Tables for 2T/2O/2I are generated from the class data and minimal
// seed characters by tensor closure, then validated by orthogonality; wrong
// class data cannot pass construction.
struct SU2Group {
  struct ClassData {
    std::string name;
    long size;
    int order;
    int eig;       // defining eigenvalues (zeta_m^eig, zeta_m^-eig)
    int inv_class; // class of inverses
    int sq_class;  // class of squares
  };

  std::string name;
  long order = 0;
  int m = 1; // cyclotomic conductor
  std::shared_ptr<const CycloField> field;
  std::vector<ClassData> classes;
  std::vector<std::string> irrep_names;
  std::vector<std::vector<Cyc>> chars; // irreps x classes
  std::vector<long> dims;
  int trivial = 0; // index of the trivial irrep

  int nclasses() const { return (int)classes.size(); }
  int nirreps() const { return (int)chars.size(); }
  bool is_binary() const;
  Cyc defining_char(int cls) const;
  // (1/|G|) sum_c |c| conj(f(c)) g(c)
  Cyc inner(const std::vector<Cyc>& f, const std::vector<Cyc>& g) const;
  // class values of the n-th symmetric power of the defining representation
  std::vector<Cyc> sym_power_char(int n) const;
};

// name in {cyclic:n, binary-dihedral:n (n >= 2), 2T, 2O, 2I}
SU2Group build_group(const std::string& name);

// full row/column orthogonality, sum of squares, defining-character report
Report validate_group(const SU2Group& g);

// McKay graph: vertex i = irrep i; edges from the multiplicity of V_b in
// C^2 (x) V_a. Throws if the result is not an affine Dynkin diagram.
Graph mckay_graph(const SU2Group& g, std::string* affine_name = nullptr);

// multiplicity of V_a in S^n(C^2), verified integral and nonnegative
long sym_power_multiplicity(const SU2Group& g, int irrep, int n);

// (-1)^n times the q^n coefficient of the (a, trivial) entry of the inverse
// quantum Cartan matrix of the McKay graph, for all a and n <= maxn
std::vector<std::vector<long>> inverse_cartan_table(const SU2Group& g, int maxn);

// graded Cartan data of Lambda(C^2, G) computed character-theoretically:
// entry (a,b) = sum_i q^i <chi_{Lambda^i} chi_b, chi_a>
LMat cross_product_cartan(const SU2Group& g);

} // namespace zz
