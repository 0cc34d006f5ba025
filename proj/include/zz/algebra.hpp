#pragma once

#include "zz/graph.hpp"
#include "zz/laurent.hpp"
#include "zz/linalg.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace zz {

struct BasisElem {
  std::string label;
  int src, tgt; // a path src -> tgt; acts on left modules M_tgt -> M_src
  int deg;
};

// Sparse algebra element: sorted (basis index, coefficient), no zeros.
using Term = std::pair<int, Rat>;
using Elem = std::vector<Term>;

Elem elem_add(const Elem& a, const Elem& b);
Elem elem_scale(const Rat& s, Elem a);
bool elem_eq(const Elem& a, const Elem& b);

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

// Finite-dimensional graded algebra with a fixed basis whose degree-0 part is
// spanned by the orthogonal vertex idempotents e_0..e_{nverts-1} (listed first)
// and whose products are given by structure constants.
class Algebra {
public:
  Algebra(std::string name, std::vector<std::string> vertex_labels);

  const std::string& name() const { return name_; }
  int nverts() const { return (int)vlabels_.size(); }
  int dim() const { return (int)basis_.size(); }
  const BasisElem& b(int i) const { return basis_[i]; }
  const std::string& vlabel(int v) const { return vlabels_[v]; }
  int vertex_index(const std::string& label) const;

  // builder interface
  int add_basis(const std::string& label, int src, int tgt, int deg);
  void set_product(int i, int j, Elem p);
  void set_chi(std::vector<int> basis_map); // antiinvolution on basis
  void set_trace(std::vector<Rat> t);       // linear functional on the basis
  void finalize(); // computes generators, validates structure

  Elem mul_basis(int i, int j) const; // empty = 0
  Elem mul(const Elem& a, const Elem& b) const;
  Elem unit() const; // sum of idempotents

  const std::vector<int>& generators() const { return gens_; } // positive degree
  std::map<int, int> graded_dims() const;
  int top_degree() const;

  bool has_chi() const { return chi_.has_value(); }
  int chi(int i) const { return (*chi_)[i]; }

  bool has_trace() const { return trace_.has_value(); }
  const Rat& trace_coeff(int i) const { return (*trace_)[i]; }
  Rat trace(const Elem& x) const;
  Mat gram_matrix() const; // G_ij = tr(b_i b_j)
  // Nakayama automorphism of the trace form: tr(xy) = tr(y nu(x)).
  // Requires nondegenerate gram. Returned as a dim x dim matrix on the basis.
  Mat nakayama() const;

  // full structure checks (throw on failure)
  void check() const;

  AlgebraPtr opposite() const;

private:
  std::string name_;
  std::vector<std::string> vlabels_;
  std::vector<BasisElem> basis_;
  std::unordered_map<int64_t, Elem> prod_; // key i*dim+j for positive-degree pairs
  std::vector<int> gens_;
  std::optional<std::vector<int>> chi_;
  std::optional<std::vector<Rat>> trace_;
  bool finalized_ = false;

  int64_t key(int i, int j) const { return (int64_t)i * dim() + j; }
};

AlgebraPtr trivial_algebra(); // single vertex "*", basis {e}

// A (x) B^op. Vertex (a,b) has index a*B.nverts()+b; basis pairs are ordered
// with idempotent pairs first. pair_index gives the basis index of (x,y).
struct Envelope {
  AlgebraPtr alg;
  AlgebraPtr left, right; // the factors (kept alive while cached)
  int pair_index(int x, int y) const { return idx[x][y]; }
  std::vector<std::vector<int>> idx;
  std::vector<std::pair<int, int>> unpair; // basis index -> (x, y)
  int nA = 0, nB = 0;
};
Envelope make_envelope(const AlgebraPtr& A, const AlgebraPtr& B);

} // namespace zz
