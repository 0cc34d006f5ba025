#pragma once

#include "zz/algebra.hpp"
#include "zz/linalg.hpp"

#include <map>
#include <optional>
#include <vector>

namespace zz {

using Comp = std::pair<int, int>; // (vertex, degree)

// Degree-d map between graded modules over the same algebra: one matrix per
// component, M_{v,n} -> N_{v,n+d}. Missing blocks are zero.
struct BlockMap {
  int deg = 0;
  std::map<Comp, Mat> blocks;

  Mat block(const Comp& c, int rows, int cols) const;
  void set(const Comp& c, Mat m); // drops zero/empty blocks
  bool is_zero() const;
};

class Module;

BlockMap bm_compose(const BlockMap& g, const BlockMap& f); // g after f
BlockMap bm_add(const BlockMap& a, const BlockMap& b);
BlockMap bm_sub(const BlockMap& a, const BlockMap& b);
BlockMap bm_scale(const Rat& s, BlockMap a);
bool bm_eq(const BlockMap& a, const BlockMap& b);

// Finite-dimensional graded left module over a QuiverAlgebra, stored as
// per-(vertex,degree) dimensions plus action matrices for every positive-
// degree basis element: act(x): M_{tgt x, n} -> M_{src x, n+deg x}.
class Module {
public:
  Module() = default;
  explicit Module(AlgebraPtr a) : a_(std::move(a)) {}

  const AlgebraPtr& algebra() const { return a_; }
  int dim(int v, int n) const;
  int dim(const Comp& c) const { return dim(c.first, c.second); }
  int total_dim() const;
  const std::map<Comp, int>& components() const { return dims_; }
  bool is_zero() const { return dims_.empty(); }
  std::pair<int, int> degree_range() const; // (min, max) over components

  void set_dim(int v, int n, int d);
  void set_act(int basis, int from_deg, Mat m);
  Mat act(int basis, int from_deg) const; // zero matrix of right shape if unset
  Mat act_elem(const Elem& x, int from_deg) const;

  Module shifted(int k) const; // M{k}: components move from degree n to n+k

  // verifies act(x)act(y) = act(xy) for all positive-degree basis pairs
  void check() const;

  // graded dimension at a vertex as a Laurent polynomial in q
  std::map<int, int> graded_dims_at(int v) const;
  std::vector<int> graded_dim_signature() const; // flattened, for quick compare

  std::string describe() const;

private:
  AlgebraPtr a_;
  std::map<Comp, int> dims_;
  std::map<std::pair<int, int>, Mat> act_; // (basis, from_deg) -> block
};

// P_a = A e_a (all basis paths ending at a).
Module projective(const AlgebraPtr& A, int a);
// L_a: one-dimensional at (a, 0), positive part acts by zero.
Module simple(const AlgebraPtr& A, int a);
// _aP = e_a A as a left module over A^op.
Module right_projective(const AlgebraPtr& Aop, int a);

struct SumDecomp {
  Module sum;
  std::vector<BlockMap> incl, proj;
};
SumDecomp direct_sum(const std::vector<Module>& parts);

// Submodule spanned by the given column spans (must be action-invariant;
// throws otherwise). Returns the submodule plus the inclusion.
struct SubModule {
  Module sub;
  BlockMap incl;
};
SubModule restrict_to(const Module& m, const std::map<Comp, Mat>& cols);

// Quotient by an invariant column span; returns quotient plus projection.
struct QuotModule {
  Module quot;
  BlockMap proj;
};
QuotModule quotient_by(const Module& m, const std::map<Comp, Mat>& cols);

// Closure of given vectors under the algebra action (smallest submodule).
std::map<Comp, Mat> submodule_closure(const Module& m, std::map<Comp, Mat> seed);

// Basis of degree-d module homomorphisms M -> N (intertwiners).
std::vector<BlockMap> hom_space(const Module& m, const Module& n, int deg = 0);
// Sum over i of q^i dim Hom(M{i}, N) as a Laurent polynomial.
Laurent hom_poly(const Module& m, const Module& n);

BlockMap identity_map(const Module& m);
bool bm_invertible(const Module& m, const Module& n, const BlockMap& f); // bijective everywhere
std::optional<BlockMap> bm_inverse(const Module& m, const Module& n, const BlockMap& f);

// Graded dual with the left action twisted by the algebra antiinvolution chi;
// component (a, n) has the dimension of M_{a,-n}. Requires A->has_chi().
Module chi_dual(const Module& m);

} // namespace zz
