#pragma once

#include "zz/module.hpp"

#include <memory>
#include <optional>

namespace zz {

std::shared_ptr<const Envelope> get_envelope(const AlgebraPtr& a, const AlgebraPtr& b);

// (A,B)-bimodule, stored as a graded left module over A (x) B^op whose
// vertices are pairs (a,b).
struct Bimodule {
  AlgebraPtr A, B;
  std::shared_ptr<const Envelope> env;
  Module m;

  int vertex(int a, int b) const { return a * B->nverts() + b; }
  bool is_zero() const { return m.is_zero(); }
  Bimodule shifted(int k) const { return {A, B, env, m.shifted(k)}; }
  // matrix of left multiplication by the A-basis element p on component
  // ((?,b), n); idempotents give identity/zero projections
  Mat left_act(int p, int b, int n) const;
  Mat right_act(int a, int w, int n) const; // right multiplication by w in B
};

// a left A-module viewed as an (A, k)-bimodule
Bimodule as_bimodule(const AlgebraPtr& a, const Module& m);
// an (A,k)-bimodule back to a left A-module
Module as_left_module(const AlgebraPtr& a, const Bimodule& x);
// k-k bimodule = graded vector space with given dims
Bimodule vect_bimodule(const std::map<int, int>& dims);

// P_a (x) _bP; if right_twist is set (an algebra automorphism of B given on
// the basis), the right action is twisted through it.
Bimodule projective_bimodule(const AlgebraPtr& a_alg, int a, const AlgebraPtr& b_alg, int b,
                             const std::optional<Mat>& right_twist = std::nullopt);
// A as an (A,A)-bimodule
Bimodule algebra_bimodule(const AlgebraPtr& a);

Bimodule bimodule_direct_sum(const std::vector<Bimodule>& parts);

// X (x)_B Y with the per-component quotient data retained so that morphisms
// can be pushed through the tensor product.
struct TensorResult {
  Bimodule prod;
  struct CompMeta {
    // raw slots (b-vertex, n1): X component ((a,b),n1) tensor Y ((b,c),n-n1)
    std::vector<std::pair<int, int>> slots;
    std::vector<int> offsets;                  // raw offset per slot
    std::vector<std::pair<int, int>> slot_dims; // (dimX, dimY) per slot
    SpanSplit split;                            // raw -> quotient coords
  };
  std::map<Comp, CompMeta> meta; // keyed by components of prod.m
};
TensorResult tensor_bimodules(const Bimodule& x, const Bimodule& y);

// induced map (f (x) g) between two tensor products over the same algebras:
// f: X -> X2, g: Y -> Y2, both degree 0.
BlockMap tensor_morphism(const Bimodule& x, const Bimodule& y, const TensorResult& src,
                         const Bimodule& x2, const Bimodule& y2, const TensorResult& tgt,
                         const BlockMap& f, const BlockMap& g);

} // namespace zz
