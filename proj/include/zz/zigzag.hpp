#pragma once

#include "zz/algebra.hpp"
#include "zz/graph.hpp"
#include "zz/lmat.hpp"

#include <map>
#include <optional>
#include <tuple>

namespace zz {

// Zigzag algebra A(Gamma): e_a in degree 0, arrows (a|b) in degree 1, one loop
// class l_a per vertex in degree 2. Single-vertex graphs get k[X]/(X^2) with
// X in degree 2.
AlgebraPtr build_zigzag(const Graph& g);

// arrow/loop basis lookups (indices into the algebra basis)
int zz_arrow(const Algebra& A, int a, int b); // (a|b); throws if absent
int zz_loop(const Algebra& A, int a);

// Multiplicative cocycle for skew-zigzag deformations: nu[(a,b,c)] = nu^a_{b,c}
// for a adjacent to both b and c, b != c.
struct SkewCoefficients {
  std::map<std::tuple<int, int, int>, Rat> nu;
  Rat get(int a, int b, int c) const; // 1 when b == c
};

// Same basis shape as build_zigzag with (a|b)(b|a) = nu^a_{b,r_a} l_a.
// Throws std::invalid_argument naming the offending triple if the cocycle
// conditions fail.
AlgebraPtr build_skew(const Graph& g, const SkewCoefficients& nu);

// The odd-cycle skew algebra with (i|i-1|i) + (i|i+1|i) = 0.
AlgebraPtr skew_cycle(int n);
SkewCoefficients skew_cycle_coeffs(const Graph& cycle);

// For trees every admissible nu gives an algebra isomorphic to the zigzag one;
// returns the diagonal base change (basis index -> scaled zigzag basis elem),
// verified on all structure constants, or nullopt if no diagonal change exists.
std::optional<std::vector<Elem>> skew_to_zigzag_iso(const Graph& g, const AlgebraPtr& skew,
                                                    const AlgebraPtr& zig);

// Path algebra of an orientation; reduced = true kills paths of length > 1.
// Unreduced form throws on oriented cycles (infinite-dimensional).
AlgebraPtr path_algebra(const Orientation& o, bool reduced);

// Trivial extension T(B) = B + B^* with (x,f)(y,g) = (xy, fy + xg).
AlgebraPtr trivial_extension(const AlgebraPtr& B);

// Degree-preserving isomorphism T(B^red(orientation)) -> A(Gamma) on basis
// elements (duals to reversed arrows and loops); empty if verification fails.
std::optional<std::vector<int>> trivext_zigzag_iso(const AlgebraPtr& T, const AlgebraPtr& A,
                                                   const Orientation& o);

// Quantum Cartan matrix: 1+q^2 diagonal, q on edges.
LMat quantum_cartan(const Graph& g);
Mat quantum_cartan_at_minus_one(const Graph& g);

// Graded dimensions of the quadratic dual A^!(Gamma) = paths of D(Gamma)
// modulo the two-sided ideal generated by sum_b (a|b|a): entry (a,b) counts
// length-n paths b -> a modulo the ideal, for n = 0..order.
std::vector<std::vector<Series>> quadratic_dual_dims(const Graph& g, int order);

// Entrywise power-series inverse of C(Gamma) via adjugate/determinant and
// exact series expansion. Always checks C * result = I to the given order.
std::vector<std::vector<Series>> cartan_inverse(const Graph& g, int order);

} // namespace zz
