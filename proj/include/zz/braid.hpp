#pragma once

#include "zz/adjoint.hpp"
#include "zz/bimodule.hpp"
#include "zz/homalg.hpp"
#include "zz/report.hpp"

#include <tuple>

namespace zz {

// Bounded complex of (A,B)-bimodules; positions are modules over the
// envelope, differentials are degree-0 envelope-module morphisms.
struct Complex {
  AlgebraPtr A, B;
  std::shared_ptr<const Envelope> env;
  int lo = 0;
  std::vector<Module> pos;
  std::vector<BlockMap> diff; // diff[i]: pos[i] -> pos[i+1]

  int hi() const { return lo + (int)pos.size() - 1; }
  int npos() const { return (int)pos.size(); }
  const Module& at(int i) const { return pos[i - lo]; }
  int total_dim() const;
  void check() const; // modules wellformed, differentials morphisms, d^2 = 0
  Complex shifted(int internal) const; // internal grading shift on every position
  std::string shape() const;           // positionwise graded dimensions
};

Complex identity_complex(const AlgebraPtr& a);
// cohomological degrees (0, 1): P_a (x) _aP --multiplication--> A
Complex twist(const AlgebraPtr& a, int v);
// cohomological degrees (-1, 0): A --coevaluation--> (P_a (x) (_aP)_nu){-2},
// with nu the Nakayama automorphism of the trace form (identity for zigzag)
Complex twist_inverse(const AlgebraPtr& a, int v);

Complex tensor_complexes(const Complex& c, const Complex& d);

// word of braid generators, left to right; bool = inverse
using BraidWord = std::vector<std::pair<int, bool>>;
Complex complex_of_word(const AlgebraPtr& a, const BraidWord& word);
BraidWord parse_braid_word(const Algebra& a, const std::string& text); // "a b a'" primes invert

// Gaussian elimination to the minimal homotopy-equivalent complex
Complex minimize(Complex c);

// chain maps C -> D (degree 0 everywhere, commuting with differentials)
using ChainMap = std::map<int, BlockMap>;
std::vector<ChainMap> chain_maps(const Complex& c, const Complex& d);

struct ComplexAd {
  using Obj = Complex;
  using Mor = ChainMap;
  using Key = std::tuple<int, int, int>; // (position, vertex, degree)
  static std::vector<Mor> homs(const Obj& x, const Obj& y) { return chain_maps(x, y); }
  static Mor compose(const Mor& g, const Mor& f);
  static Mor add(const Mor& a, const Mor& b);
  static Mor scale(const Rat& s, const Mor& a);
  static Mor identity(const Obj& x);
  static std::map<Key, int> comp_dims(const Obj& x);
  static std::map<Key, Mat> blocks_of(const Obj& x, const Obj& y, const Mor& f);
  static Mor mor_from_blocks(const std::map<Key, Mat>& b);
  static bool invertible(const Obj& x, const Obj& y, const Mor& f);
  static Obj restricted(const Obj& x, const std::map<Key, Mat>& cols);
  static int total_dim(const Obj& x) { return x.total_dim(); }
};

// isomorphism of complexes with certificate; applied to minimized complexes
// this decides homotopy equivalence
IsoCert<ComplexAd> complexes_isomorphic(const Complex& c, const Complex& d);

// invertibility of every twist plus braid/commutation relations per pair
Report verify_braid_relations(const AlgebraPtr& a, const Graph& g);

// C (x)_A M as a complex of left modules ((A,k)-bimodules)
Complex apply_to_module(const Complex& c, const Module& m);

// sigma_alpha = q E_alpha F_alpha - 1 on the weight-0 subspace, in the
// canonical h-basis (Laurent matrix); inverse computed exactly
LMat braid_sigma_h(const AdjointRep& rep, int alpha, bool inverse);
// apply a word to a weight-0 vector given in h-coordinates
std::vector<Laurent> braid_class_action(const AdjointRep& rep, const BraidWord& word,
                                        std::vector<Laurent> h_coords);

// alternating-sum class of a complex of left modules
GrothVec complex_euler_class(const AdjointCtx& ctx, const Complex& c);

} // namespace zz
